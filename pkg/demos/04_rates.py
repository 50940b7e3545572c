"""Rate conditions for strict positive definiteness with missing indices.

Builds schemes where |A_k^c| ~ k^p indices with a_j != 0 are removed at every
degree and checks |A_k^c| / k^{(d-j-1)/2} over even and odd degrees.

Run: python demos/04_rates.py [outdir]
"""
import math
import sys
from pathlib import Path

from spherekern.spd_analysis import (
    corollary_rate_check,
    jacobi_ratio_sequence,
    ratio_chain_bound,
    ratio_chain_rhs,
    synthetic_scheme,
    weighted_complement_sum,
)

out = Path(sys.argv[1]) if len(sys.argv) > 1 else None
d, j = 5, 2
print(f"d={d}, j={j}: threshold exponent (d-j-1)/2 = {(d - j - 1) / 2}")
for p in (0.25, 0.5, 1.0, 1.25):
    s = synthetic_scheme(d, j, lambda k, p=p: math.floor(k ** p), k_max=200)
    check = corollary_rate_check(s, j)
    print(f"  p={p}: last even value {check.even.values[-1]:.3f}, verdict "
          f"{'consistent with sufficiency' if check.verdict else 'not established'}")
    if out is not None:
        out.mkdir(parents=True, exist_ok=True)
        (out / f"rates_p{p}.even.csv").write_text(check.even.to_csv())
        (out / f"rates_p{p}.odd.csv").write_text(check.odd.to_csv())

s = synthetic_scheme(d, j, lambda k: k, k_max=40)
w = weighted_complement_sum(s, j)
print("sharper weighted sum, last even value:", f"{w.even.values[-1]:.4f}")

# The chain N_{k,j+1} / (c_k P_k(1)) <= 3^{d-j-1} Gamma(d-1)/Gamma(j) prod (2k+l-1)^{-1}
for k in (1, 10, 100):
    print(f"k={k}: ratio {ratio_chain_bound(7, 2, k):.3e} <= bound {ratio_chain_rhs(7, 2, k):.3e}")

# Projective-space ingredient: P_k^(b,a)(1) / P_k^(a,b)(1) -> 0 when a > b
seq = jacobi_ratio_sequence((3, 1), 200)
print("Jacobi ratio (3,1) at k=0, 50, 200:", [f"{seq.values[k]:.2e}" for k in (0, 50, 200)])

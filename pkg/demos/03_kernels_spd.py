"""Non-isotropic kernels, Gram matrices and strict positive definiteness at a truncation level.

Run: python demos/03_kernels_spd.py
"""
import numpy as np

from spherekern.harmonics import antipode, random_points
from spherekern.kernels import (
    CoefficientScheme,
    Rule,
    check_spd,
    gram_matrix,
    quadratic_form,
    scheme_invariance_check,
    spd_witness_search,
)

pts = random_points(3, 20, seed=42)

# Every index up to degree 12 active: strictly positive definite on 20 points
full = CoefficientScheme(3, 12)
r = check_spd(full, pts)
print("full scheme:", r.verdict.value, f"lambda_min/lambda_max = {r.min_eigenvalue / r.max_eigenvalue:.3g}")

# Only even degrees: Y(-x) = Y(x), so an antipodal pair cannot be separated
p = pts[0]
pair = [p, antipode(p)]
for rule in (Rule.EVEN, Rule.ODD):
    s = CoefficientScheme(3, 12, rule=rule)
    c = spd_witness_search(s, pair)
    K = gram_matrix(s, pair)
    print(f"{rule.value}: {check_spd(s, pair).verdict.value}, witness {np.round(c, 4)}, "
          f"quadratic form {quadratic_form(K, c):.1e}")

# Removing a few indices changes the kernel but the verdict depends only on F
sparse = CoefficientScheme(3, 12, exclude={12: [(-12, 12), (12, 12)]})
print("two top indices removed:", check_spd(sparse, pts).verdict.value)
for w in (("geometric", 0.3), lambda a: 1 + abs(a[0])):
    print("reweighting keeps verdict:", scheme_invariance_check(full, full.with_weights(w), pts))

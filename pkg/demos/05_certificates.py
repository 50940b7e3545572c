"""Numerical certificates for the inequality chain behind the rate conditions.

Run: python demos/05_certificates.py
"""
from spherekern.spd_analysis import (
    certify_haagerup,
    certify_harmonic_product,
    certify_lohofer,
    certify_ptilde,
)

certs = [certify_lohofer(60), certify_haagerup(100)]
certs += [certify_ptilde(j, 40) for j in (2, 3, 4, 5)]
certs.append(certify_harmonic_product(2, 4, 12))
for c in certs:
    extra = f", empirical constant {c.empirical_constant:.3g}" if c.empirical_constant else ""
    print(f"{c.bound_name:20s} checked {c.checked:8d}  violations {c.violations}  "
          f"max LHS/RHS {c.max_ratio:.3f}{extra}")
for note in certs[0].notes:
    print("note:", note)

# The ptilde profile shows how loose the explicit C_j(theta) is
prof = certs[3].profile
for row in prof[::8]:
    print(f"theta={row['theta']:.3f}  empirical {row['empirical_Cj']:.3f}  explicit {row['explicit_Cj']:.3f}")

"""Jacobi, Gegenbauer and Ferrers functions, and the normalized level factor.

Run: python demos/01_special_functions.py
"""
import math

import numpy as np

from spherekern.special_fn import (
    ferrers_p,
    gegenbauer_c,
    jacobi_at_one,
    jacobi_p,
    literal_normalization_constant,
    normalization_constant,
    ptilde,
)

# Jacobi polynomials come from the three-term recurrence. At x = 1 they
# match the Gamma closed form, which we keep in log space.
for k in (5, 50, 500):
    rec = jacobi_p(k, (1.5, 1.5), 1.0)
    print(f"P_{k}^(1.5,1.5)(1): recurrence {rec:.6e}  closed form {math.exp(jacobi_at_one(k, (1.5, 1.5))):.6e}")

# Symmetry P_k^(a,b)(-t) = (-1)^k P_k^(b,a)(t)
t = 0.3
print("symmetry defect:", abs(jacobi_p(7, (1, 3), -t) + jacobi_p(7, (3, 1), t)))

# Gegenbauer via Jacobi: C_1^1(x) = 2x
print("C_1^1(0.25) =", gegenbauer_c(1, 1.0, 0.25))

# Ferrers functions with the Condon-Shortley phase, any integer order
x = np.cos(0.7)
print("P_3^m(cos 0.7), m=-3..3:", np.round([float(ferrers_p(3, m, x)) for m in range(-3, 4)], 6))

# The level factor of the harmonics. The printed leading constant does not
# normalize the basis; the calibrated one does.
for j in range(2, 6):
    print(f"j={j}: calibrated {normalization_constant(j):.6f}  literal {literal_normalization_constant(j):.6f}")

theta = np.linspace(0, math.pi, 5)
print("ptilde(3, L=4, l=2, theta):", np.round(ptilde(3, 4, 2, theta), 6), "(zero at the poles)")

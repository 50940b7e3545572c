"""Spherical harmonics on S^{d-1}: indexing, evaluation, addition formula, orthonormality.

Run: python demos/02_harmonics_addition.py
"""
import math

import numpy as np

from spherekern.harmonics import (
    addition_formula_errors,
    addition_rhs,
    dim_harmonic,
    enumerate_tau,
    eval_harmonic,
    quadrature_gram,
    random_points,
    zonal_sum,
)

d = 4
print(f"degree-2 indices on S^{d - 1}:", [str(a) for a in enumerate_tau(d, 2)])
print("count matches N_{2,4} =", dim_harmonic(d, 2))

p, q = random_points(d, 2, seed=42)
a = enumerate_tau(d, 3)[5]
print(f"Y_({a})(p) =", eval_harmonic(a, p))

# Summing |Y|^2-type products over one degree gives a zonal function
for k in (1, 4, 9):
    print(f"k={k}: zonal sum {zonal_sum(d, k, p, q).real:+.12f}  c_k P_k(cos dist) {addition_rhs(d, k, p, q):+.12f}")

# Worst relative error over 50 random pairs and all degrees up to 20
for dd in (3, 5):
    print(f"d={dd}: max addition-formula error {max(addition_formula_errors(dd, 20, 50, seed=42)):.2e}")

# Product quadrature recovers the identity Gram matrix
idx, G = quadrature_gram(3, 8)
print(f"orthonormality on S^2, {len(idx)} harmonics: max |G - I| = {np.max(np.abs(G - np.eye(len(idx)))):.1e}")

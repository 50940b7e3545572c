"""Acceptance criteria 1-9, at the stated tolerances.

Each test records one PASS/FAIL line; ``conftest.py`` prints them in the
terminal summary. Run ``python tests/test_acceptance.py`` for the lines alone.
"""
import math
import time

import numpy as np
import pytest

from spherekern.harmonics import (
    antipode,
    addition_formula_errors,
    dim_harmonic,
    iter_tau,
    quadrature_gram,
    random_points,
    tau_jzero_size,
)
from spherekern.kernels import (
    CoefficientScheme,
    Verdict,
    check_spd,
    gram_matrix,
    quadratic_form,
    scheme_invariance_check,
    spd_witness_search,
)
from spherekern.special_fn import jacobi_p
from spherekern.spd_analysis import (
    certify_haagerup,
    certify_harmonic_product,
    certify_lohofer,
    certify_ptilde,
    corollary_rate_check,
    jacobi_ratio_sequence,
    ratio_chain_bound,
    synthetic_scheme,
)

SEED = 42
RESULTS: dict[int, str] = {}


def report(n, ok, detail):
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}"
    RESULTS[n] = line
    print(line)
    assert ok, line


def _proportional(c, target):
    target = np.asarray(target, dtype=complex) / np.linalg.norm(target)
    return abs(abs(np.vdot(target, c)) - 1) <= 1e-8


def test_criterion_1_addition_formula():
    start = time.perf_counter()
    worst = {d: max(addition_formula_errors(d, 20, pairs=50, seed=SEED)) for d in (3, 4, 5, 6)}
    elapsed = time.perf_counter() - start
    ok = all(e <= 1e-8 for e in worst.values()) and elapsed < 60
    detail = ", ".join(f"d={d} {e:.1e}" for d, e in worst.items())
    report(1, ok, f"max rel error {detail}; {elapsed:.1f}s")


def test_criterion_2_dimension_counts():
    bad = []
    for d in range(3, 9):
        for k in range(31):
            if sum(1 for _ in iter_tau(d, k)) != dim_harmonic(d, k):
                bad.append(("tau", d, k))
            counts = {j: sum(1 for a in iter_tau(d, k) if a[j - 1] == 0) for j in range(1, d - 1)}
            if counts[d - 2] != 1:
                bad.append(("d-2", d, k))
            if d >= 4 and counts[d - 3] != k + 1:
                bad.append(("d-3", d, k))
            if counts[1] != math.factorial(k + d - 3) // (math.factorial(d - 3) * math.factorial(k)):
                bad.append(("1", d, k))
            if any(counts[j] != tau_jzero_size(d, k, j) for j in counts):
                bad.append(("closed", d, k))
    report(2, not bad, f"d <= 8, k <= 30, mismatches {bad[:3]}")


def test_criterion_3_orthonormality():
    errs = {}
    for d in (3, 4):
        _, G = quadrature_gram(d, 10)
        errs[d] = float(np.max(np.abs(G - np.eye(G.shape[0]))))
    report(3, all(e <= 1e-8 for e in errs.values()),
           "max |G - I| " + ", ".join(f"d={d} {e:.1e}" for d, e in errs.items()))


def test_criterion_4_bound_certificates():
    start = time.perf_counter()
    certs = [certify_lohofer(60), certify_haagerup(100, (0.0, 0.5, 1.0, 3.0), C=12.0)]
    certs += [certify_ptilde(j, 40) for j in (2, 3, 4, 5)]
    certs.append(certify_harmonic_product(2, 4, 12))
    elapsed = time.perf_counter() - start
    ok = all(c.violations == 0 and c.checked > 0 for c in certs) and elapsed < 300
    detail = "; ".join(f"{c.bound_name} {c.violations}/{c.checked} max {c.max_ratio:.3g}"
                       for c in certs)
    report(4, ok, f"{detail}; {elapsed:.1f}s")


def test_criterion_5_positive_control():
    s = CoefficientScheme(3, 12)
    r = check_spd(s, random_points(3, 20, seed=SEED))
    ok = r.verdict is Verdict.POSITIVE_DEFINITE and r.min_eigenvalue > 1e-8 * r.max_eigenvalue
    report(5, ok, f"{r.verdict.value}, min/max eigenvalue {r.min_eigenvalue / r.max_eigenvalue:.3g}")


def test_criterion_6_negative_control():
    p = random_points(3, 1, seed=SEED)[0]
    pair = [p, antipode(p)]
    lines, ok = [], True
    for rule, target in (("even", [1, -1]), ("odd", [1, 1])):
        s = CoefficientScheme(3, 12, rule=rule)
        r = check_spd(s, pair)
        K = gram_matrix(s, pair)
        norm = np.linalg.norm(K, 2)
        c = spd_witness_search(s, pair)
        good = (r.verdict is Verdict.DEGENERATE and c is not None
                and _proportional(r.witness, target) and _proportional(c, target)
                and abs(quadratic_form(K, r.witness)) <= 1e-10 * norm
                and abs(quadratic_form(K, c)) <= 1e-10 * norm)
        ok &= good
        qf = abs(quadratic_form(K, c)) / norm if c is not None else math.nan
        lines.append(f"{rule}: {r.verdict.value}, |cKc|/|K| {qf:.1e}")
    report(6, ok, "; ".join(lines))


def test_criterion_7_weight_invariance():
    weightings = [("geometric", 0.5), ("geometric", 2.0), lambda a: 1.0 + abs(a[0]),
                  lambda a: 1.0 / (1 + a[-1]) ** 3]
    full = CoefficientScheme(3, 12)
    pts = random_points(3, 20, seed=SEED)
    p = random_points(3, 1, seed=SEED)[0]
    pair = [p, antipode(p)]
    checks = []
    for w in weightings:
        checks.append(scheme_invariance_check(full, full.with_weights(w), pts))
        for rule in ("even", "odd"):
            s = CoefficientScheme(3, 12, rule=rule)
            checks.append(scheme_invariance_check(s, s.with_weights(w), pair))
            checks.append(not check_spd(s.with_weights(w), pair).is_definite)
    report(7, all(checks), f"{len(weightings)} reweightings, {sum(checks)}/{len(checks)} agree")


def test_criterion_8_rates():
    d = 5
    cases = {1: ((0.5, 1.0), (1.5,)), 2: ((0.25, 0.5), (1.0, 1.25))}
    outcome, ok = [], True
    for j, (pos, neg) in cases.items():
        for p in pos + neg:
            s = synthetic_scheme(d, j, lambda k, p=p: math.floor(k ** p), k_max=200)
            verdict = corollary_rate_check(s, j).verdict
            expected = p < (d - j - 1) / 2
            ok &= verdict == expected
            outcome.append(f"j={j} p={p}:{'+' if verdict else '-'}")
    chain_ok = True
    try:
        for dd in range(3, 9):
            for j in range(1, dd - 1):
                for k in range(1, 201):
                    ratio_chain_bound(dd, j, k)
    except AssertionError:
        chain_ok = False
    report(8, ok and chain_ok, " ".join(outcome) + f"; ratio chain {'holds' if chain_ok else 'fails'}")


def test_criterion_9_jacobi_lemma():
    worst = 0.0
    t = np.linspace(-1, 1, 41)
    for a in (-0.5, 0.0, 0.5, 1.0, 3.0):
        for b in (-0.5, 0.0, 0.5, 1.0, 3.0):
            for k in range(101):
                lhs = jacobi_p(k, (a, b), -t)
                rhs = (-1) ** k * jacobi_p(k, (b, a), t)
                scale = np.maximum(np.abs(rhs), 1e-3 * np.max(np.abs(rhs)))
                worst = max(worst, float(np.max(np.abs(lhs - rhs) / scale)))
    seq_ok, finals = True, []
    for params in ((1, 0), (3, 0), (3, 1)):
        v = np.array(jacobi_ratio_sequence(params, 200).values)
        seq_ok &= bool(np.all(np.diff(v) < 0)) and v[-1] / v[0] < 0.05
        finals.append(f"{params}: {v[-1] / v[0]:.2e}")
    report(9, worst <= 1e-11 and seq_ok,
           f"symmetry error {worst:.1e}; final/initial " + ", ".join(finals))


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main([__file__, "-q"]))

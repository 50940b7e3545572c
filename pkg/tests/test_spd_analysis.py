import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from spherekern.harmonics import (
    MultiIndex,
    PolarPoint,
    dim_harmonic,
    enumerate_tau,
    enumerate_tau_jzero,
    eval_harmonic,
    random_points,
)
from spherekern.kernels import CoefficientScheme, Rule
from spherekern.special_fn import DomainError, Family, ManifoldSpec
from spherekern.spd_analysis import (
    BoundViolation,
    RateSequence,
    Sufficiency,
    asympt_ratio_sequence,
    certify_haagerup,
    certify_harmonic_product,
    certify_lohofer,
    certify_point_bound,
    certify_ptilde,
    coarse_complement_bound,
    corollary_rate_check,
    isotropic_sufficiency,
    jacobi_ratio_sequence,
    jxi_of_point,
    parity_split,
    ratio_chain_bound,
    ratio_chain_closed_form,
    ratio_chain_rhs,
    synthetic_scheme,
    trend_to_zero,
    weighted_complement_sum,
)


# -- finite proxies ----------------------------------------------------------

def test_trend_to_zero():
    k = np.arange(1, 201)
    assert trend_to_zero(1 / k)
    assert trend_to_zero(np.zeros(10))
    assert not trend_to_zero(np.ones(50))
    assert not trend_to_zero(np.linspace(1, 2, 50))
    # default threshold is a tenth of the first value
    assert not trend_to_zero(np.linspace(1, 0.2, 50))
    assert trend_to_zero(np.linspace(1, 0.2, 50), final_fraction=0.5)


def test_rate_sequence_validation():
    with pytest.raises(DomainError):
        RateSequence([1, 1], [0.1, 0.2])
    with pytest.raises(DomainError):
        RateSequence([1, 2], [0.1, -0.2])
    seq = RateSequence([1, 3], [0.5, 0.25])
    assert seq.to_csv() == "degree,value\n1,0.5\n3,0.25\n"


def test_parity_split_examples():
    full = parity_split(CoefficientScheme(4, 20))
    assert full.both_infinite and full.even[:3] == [0, 2, 4] and full.odd[:2] == [1, 3]
    ev = parity_split(CoefficientScheme(4, 20, rule="even"))
    assert ev.odd == [] and not ev.both_infinite
    small = parity_split(CoefficientScheme(4, 100, degrees=[0, 1, 2]))
    assert not small.both_infinite


# -- asymptotic ratio sequence -----------------------------------------------

def brute_ratio(s, p, q, k, part):
    total = 0j
    for a in enumerate_tau(s.d, k):
        active = s.is_active(a.entries)
        if (part == "active") == active:
            total += eval_harmonic(a, p) * eval_harmonic(a, q).conjugate()
    # c_k P_k(1) = N_{k,d} on the sphere
    return abs(total) / dim_harmonic(s.d, k)


def test_asympt_full_complement_zero():
    s = CoefficientScheme(4, 10)
    p, q = random_points(4, 2, seed=1)
    seq = asympt_ratio_sequence(s, p, q)
    assert seq.values == [0.0] * 11


@pytest.mark.parametrize("d", [4, 5])
def test_asympt_jzero_brute_force(d):
    s = CoefficientScheme(d, 10, rule=Rule.JZERO, j=d - 2)
    p, q = random_points(d, 2, seed=d)
    for a, b in ((p, q), (p, p)):
        seq = asympt_ratio_sequence(s, a, b)
        for k, v in zip(seq.degrees, seq.values):
            assert v == pytest.approx(brute_ratio(s, a, b, k, "complement"), abs=1e-10)
    seq = asympt_ratio_sequence(s, p, p)
    for k, v in zip(seq.degrees, seq.values):
        top = MultiIndex((0,) * (d - 2) + (k,))
        assert v == pytest.approx(1 - abs(eval_harmonic(top, p)) ** 2 / dim_harmonic(d, k),
                                  abs=1e-10)


def test_asympt_parts_sum_to_one():
    d = 4
    custom = {k: [enumerate_tau(d, k)[0].entries] for k in range(9)}
    s = CoefficientScheme(d, 8, rule=Rule.CUSTOM, custom=custom)
    p = random_points(d, 1, seed=3)[0]
    seq = asympt_ratio_sequence(s, p, p, part="active")
    # single active index, so the active sum is |Y|^2 / N; the complement is the rest
    comp = asympt_ratio_sequence(s, p, p)
    np.testing.assert_allclose(np.add(seq.values, comp.values), 1.0, atol=1e-10)


def test_asympt_active_full_trend():
    s = CoefficientScheme(3, 120)
    p, q = random_points(3, 2, seed=9)
    assert trend_to_zero(asympt_ratio_sequence(s, p, q, part="active").values)
    same = asympt_ratio_sequence(s, p, p, part="active").values
    np.testing.assert_allclose(same, 1.0, rtol=1e-9)


def test_asympt_non_sphere_unsupported():
    s = CoefficientScheme(4, 4)
    p, q = random_points(4, 2, 0)
    with pytest.raises(NotImplementedError):
        asympt_ratio_sequence(s, p, q, manifold=ManifoldSpec(Family.COMPLEX_PROJECTIVE, 4))


# -- rate checks -------------------------------------------------------------

def test_rate_check_examples():
    full = corollary_rate_check(CoefficientScheme(5, 60), 2)
    assert full.verdict and all(v == 0 for v in full.even.values + full.odd.values)
    quarter = corollary_rate_check(synthetic_scheme(5, 2, lambda k: math.floor(k ** 0.25)), 2)
    assert quarter.verdict
    linear = corollary_rate_check(synthetic_scheme(5, 2, lambda k: k), 2)
    assert not linear.verdict
    np.testing.assert_allclose(linear.even.values, 1.0)


def test_rate_check_precondition():
    s = CoefficientScheme(5, 6, exclude={3: [(0, 0, 0, 3), (1, 1, 2, 3)]})
    with pytest.raises(DomainError, match=r"\(0, 0, 0, 3\)"):
        corollary_rate_check(s, 2)
    with pytest.raises(DomainError):
        corollary_rate_check(CoefficientScheme(5, 6, rule="jzero", j=3), 1)


def test_synthetic_complement_sizes():
    s = synthetic_scheme(5, 1, lambda k: k, k_max=20)
    assert all(s.complement_size(k) == k for k in range(1, 21))
    assert all(all(a[0] != 0 for a in s.complement_indices(k)) for k in range(1, 21))


def test_weighted_sums():
    empty = weighted_complement_sum(CoefficientScheme(5, 10), 2)
    assert all(v == 0 for v in empty.even.values + empty.odd.values)
    d, j, k = 5, 1, 7
    top = (k,) * (d - 1)
    s = CoefficientScheme(d, k, degrees=[k], exclude={k: [top]})
    val = weighted_complement_sum(s, j).odd.values[0]
    assert val == pytest.approx(math.prod((2 * k + l - 1) ** -0.5 for l in range(j + 1, d)),
                                rel=1e-14)
    d, j = 4, 2
    for k in range(1, 7):
        comp = [a for a in enumerate_tau(d, k) if a[j - 1] != 0]
        custom = {k: [a.entries for a in enumerate_tau_jzero(d, k, j)]}
        s = CoefficientScheme(d, k, rule=Rule.CUSTOM, custom=custom)
        seq = weighted_complement_sum(s, j)
        got = (seq.even if k % 2 == 0 else seq.odd).values[-1]
        brute = sum(math.prod(math.sqrt(2 * a[l - 1] + l - 1) / (2 * k + l - 1)
                              for l in range(j + 1, d)) for a in comp)
        assert got == pytest.approx(brute, rel=1e-13)


@settings(max_examples=15, deadline=None)
@given(d=st.integers(4, 6), data=st.data())
def test_weighted_below_coarse(d, data):
    j = data.draw(st.integers(1, d - 2))
    s = synthetic_scheme(d, j, lambda k: k // 2, k_max=12)
    sums = weighted_complement_sum(s, j)
    for seq in sums:
        for k, v in zip(seq.degrees, seq.values):
            assert v <= coarse_complement_bound(s, j, k) * (1 + 1e-12)


# -- ratio chain -------------------------------------------------------------

def test_ratio_chain_closed_form_everywhere():
    for d in range(3, 9):
        for j in range(1, d - 1):
            for k in range(1, 201):
                lhs = ratio_chain_bound(d, j, k)
                assert lhs == pytest.approx(ratio_chain_closed_form(d, j, k), rel=1e-12)


def test_ratio_chain_examples():
    for d in range(3, 9):
        j = d - 2
        for k in (1, 5, 50):
            bound = 3 * math.gamma(d - 1) / math.gamma(d - 2) / (2 * k + d - 2)
            assert ratio_chain_bound(d, j, k) <= bound
            assert ratio_chain_rhs(d, j, k) == pytest.approx(bound, rel=1e-13)
    scaled = [ratio_chain_bound(7, 2, k) * k ** 4 for k in (100, 1000, 10000)]
    assert max(scaled) < 10 * scaled[0]
    with pytest.raises(DomainError):
        ratio_chain_bound(5, 4, 3)


def test_bound_violation_is_assertion():
    assert issubclass(BoundViolation, AssertionError)


# -- Jacobi ratio and sufficiency --------------------------------------------

def test_jacobi_ratio_examples():
    seq = jacobi_ratio_sequence((1, 0), 50)
    np.testing.assert_allclose(seq.values, [1 / (k + 1) for k in range(51)], rtol=1e-13)
    assert seq.values[0] == 1.0
    v10 = jacobi_ratio_sequence((3, 0), 10).values[10]
    # P_k^{(0,3)}(1) = 1 and P_k^{(3,0)}(1) = Gamma(k+4) / (Gamma(k+1) Gamma(4))
    assert v10 == pytest.approx(math.gamma(11) * math.gamma(4) / math.gamma(14), rel=1e-12)
    with pytest.raises(DomainError):
        jacobi_ratio_sequence((1, 1))


def test_sufficiency_verdicts():
    m = ManifoldSpec(Family.COMPLEX_PROJECTIVE, 6)
    assert isotropic_sufficiency(m, CoefficientScheme(6, 40)) is Sufficiency.SUFFICIENT_MET
    assert isotropic_sufficiency(m, full_degrees=[], active_degrees=[0, 1], k_max=40) \
        is Sufficiency.NECESSARY_FAILED
    assert isotropic_sufficiency(m, full_degrees=[], active_degrees=range(41), k_max=40) \
        is Sufficiency.INDETERMINATE
    with pytest.raises(DomainError):
        isotropic_sufficiency(ManifoldSpec.sphere(5), CoefficientScheme(5, 10))


def test_jxi():
    assert jxi_of_point(PolarPoint((0.3, 1.0, 2.0, 0.5))) == 2
    assert jxi_of_point(PolarPoint((0.3, 1.0, 2.0, 0.0))) == 4
    assert jxi_of_point(PolarPoint((0.3, 1.0, math.pi, 0.5))) == 3


# -- certificates ------------------------------------------------------------

def test_lohofer_small_grid():
    cert = certify_lohofer(12)
    assert cert.passed and cert.checked > 0 and cert.notes
    assert cert.grid["m"][0] == 1


def test_haagerup_small_grid():
    cert = certify_haagerup(20)
    assert cert.passed and 0 < cert.max_ratio < 1
    zero = certify_haagerup(0, a_values=(0.0, 1.0))
    assert zero.passed


def test_haagerup_detects_small_constant():
    assert not certify_haagerup(20, C=0.01).passed


@pytest.mark.parametrize("j", [2, 3, 4])
def test_ptilde_small_grid(j):
    cert = certify_ptilde(j, 15)
    assert cert.passed and len(cert.profile) == 39


def test_harmonic_product_small():
    cert = certify_harmonic_product(2, 4, 6)
    assert cert.passed and cert.checked > 0
    assert certify_harmonic_product(1, 5, 3).passed


def test_harmonic_product_skips_singular_points():
    pts = [PolarPoint((0.1, 0.5, 0.0)), PolarPoint((0.1, 0.5, 1.0))]
    cert = certify_harmonic_product(2, 4, 4, points=pts)
    assert cert.skipped == 1 and cert.passed


def test_point_bound():
    pts = [PolarPoint((0.4, 1.0, 2.0)), PolarPoint((0.4, 0.0, 2.0))]
    assert certify_point_bound(4, 5, pts).passed

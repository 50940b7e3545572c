"""Finite-level certification of the asymptotic strict-PD conditions on S^{d-1}.

Limits cannot be computed, so every "tends to zero" statement is replaced by
a trend test over a finite window of degrees: windowed maxima over the last
half of the range must not increase and the final value must fall below a
fraction of the initial one. Each result records the window it used.

The inequality certificates evaluate both sides of a bound on a grid and
count violations; they never stop early.
"""
from __future__ import annotations

import enum
import itertools
import math
from dataclasses import asdict, dataclass, field
from typing import NamedTuple, Sequence

import numpy as np

from .harmonics import (
    HarmonicEvaluator,
    PolarPoint,
    _level_table,
    ck_log,
    dim_harmonic,
    enumerate_tau_jzero,
    iter_tau,
)
from .kernels import CoefficientScheme, Rule
from .special_fn import (
    LOG2,
    DomainError,
    ManifoldSpec,
    ferrers_p,
    jacobi_at_one,
    jacobi_p,
    normalization_constant,
)

HAAGERUP_C = 12.0
LOHOFER_CONST = math.gamma(0.25) / math.pi
REL_SLACK = 1e-12


def default_thetas() -> np.ndarray:
    """theta = pi/40, 2 pi/40, ..., 39 pi/40."""
    return math.pi * np.arange(1, 40) / 40


class Parity(enum.Enum):
    EVEN = "even"
    ODD = "odd"
    ALL = "all"


@dataclass
class RateSequence:
    degrees: list[int]
    values: list[float]
    parity: Parity = Parity.ALL

    def __post_init__(self):
        self.degrees = [int(k) for k in self.degrees]
        self.values = [float(v) for v in self.values]
        if len(self.degrees) != len(self.values):
            raise DomainError("degrees and values differ in length")
        if any(b <= a for a, b in zip(self.degrees, self.degrees[1:])):
            raise DomainError("degrees must be strictly increasing")
        if any(not math.isfinite(v) or v < 0 for v in self.values):
            raise DomainError("rate values must be finite and non-negative")

    def __len__(self):
        return len(self.values)

    def to_dict(self) -> dict:
        return {"parity": self.parity.value, "degrees": self.degrees, "values": self.values}

    def to_csv(self) -> str:
        rows = ["degree,value"] + [f"{k},{v!r}" for k, v in zip(self.degrees, self.values)]
        return "\n".join(rows) + "\n"


@dataclass
class BoundCertificate:
    bound_name: str
    grid: dict
    max_ratio: float = 0.0
    violations: int = 0
    checked: int = 0
    skipped: int = 0
    empirical_constant: float | None = None
    violation_records: list = field(default_factory=list)
    profile: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def record(self, ratio: np.ndarray, describe, max_records: int = 20):
        """Fold an array of LHS/RHS ratios into the certificate."""
        ratio = np.asarray(ratio, dtype=float)
        if ratio.size == 0:
            return
        self.checked += ratio.size
        self.max_ratio = max(self.max_ratio, float(np.max(ratio)))
        bad = np.flatnonzero(ratio > 1 + REL_SLACK)
        self.violations += bad.size
        for i in bad[:max(0, max_records - len(self.violation_records))]:
            self.violation_records.append(describe(int(i)) | {"ratio": float(ratio[i])})

    def to_dict(self) -> dict:
        out = asdict(self)
        out["passed"] = self.passed
        return out


def trend_to_zero(values: Sequence[float], windows: int = 4,
                  final_fraction: float = 0.1, atol: float = 1e-300) -> bool:
    """Finite proxy for ``lim values = 0``.

    True when every value is below ``atol``, or when the maxima of
    ``windows`` consecutive blocks covering the last half never increase
    and the final value is below ``final_fraction`` times the first.
    """
    v = np.asarray(values, dtype=float)
    if v.size == 0:
        return False
    if np.all(np.abs(v) <= atol):
        return True
    if v.size < 2:
        return False
    tail = v[v.size // 2:]
    blocks = [b for b in np.array_split(tail, min(windows, tail.size)) if b.size]
    maxima = [float(b.max()) for b in blocks]
    monotone = all(b <= a * (1 + REL_SLACK) for a, b in zip(maxima, maxima[1:]))
    return monotone and v[-1] < final_fraction * v[0]


def windowed_maxima(values: Sequence[float], windows: int = 4) -> list[float]:
    v = np.asarray(values, dtype=float)
    return [float(b.max()) for b in np.array_split(v, min(windows, v.size)) if b.size]


# -- parity and rate sequences ----------------------------------------------

class ParitySplit(NamedTuple):
    even: list[int]
    odd: list[int]
    both_infinite: bool


def looks_infinite(degrees: Sequence[int], k_max: int) -> bool:
    """Finite proxy for an infinite degree set: >= 3 members, one in the top quartile."""
    degrees = list(degrees)
    return len(degrees) >= 3 and max(degrees) >= 0.75 * k_max


def parity_split(s: CoefficientScheme) -> ParitySplit:
    """Even and odd parts E, O of the active degree set N."""
    N = s.active_degrees()
    E = [k for k in N if k % 2 == 0]
    O = [k for k in N if k % 2 == 1]
    return ParitySplit(E, O, looks_infinite(E, s.k_max) and looks_infinite(O, s.k_max))


def asympt_ratio_sequence(s: CoefficientScheme, p: PolarPoint, q: PolarPoint,
                          part: str = "complement",
                          manifold: ManifoldSpec | None = None) -> RateSequence:
    """|c_k^{-1} sum_{a in A_k^c} Y_a(p) conj(Y_a(q))| / P_k(1) for each k in N.

    ``part="active"`` sums over A_k instead; for the full scheme that is
    |P_k(cos dist)| / P_k(1), which tends to 0 for p != q and equals 1 for p = q.
    """
    if manifold is not None and not manifold.is_sphere:
        raise NotImplementedError("explicit harmonics exist only for the sphere")
    if part not in ("complement", "active"):
        raise DomainError(f"part must be 'complement' or 'active', got {part!r}")
    m = ManifoldSpec.sphere(s.d)
    degrees = s.active_degrees()
    ev = HarmonicEvaluator(s.d, max(degrees, default=0), [p, q])
    values = []
    for k in degrees:
        if part == "complement":
            idx = list(s.complement_indices(k))
        else:
            idx = s.active_indices(k)
        if idx:
            B = ev.matrix(idx)
            total = complex(np.sum(B[:, 0] * B[:, 1].conj()))
        else:
            total = 0j
        log_norm = ck_log(m, k) + jacobi_at_one(k, m.jacobi_params)
        values.append(abs(total) * math.exp(-log_norm))
    return RateSequence(degrees, values, Parity.ALL)


class RateCheck(NamedTuple):
    even: RateSequence
    odd: RateSequence
    verdict: bool


def _check_contains_jzero(s: CoefficientScheme, j: int) -> None:
    if not 1 <= j <= s.d - 2:
        raise DomainError(f"j must lie in [1, {s.d - 2}], got {j}")
    missing = []
    for k in s.active_degrees():
        if s.rule is Rule.JZERO and s.j > j:
            # {a_j = 0} is inside {a_s.j = 0} only when s.j <= j
            missing.append((k, "rule keeps only a_%d = 0" % s.j))
            continue
        if s.rule is Rule.CUSTOM:
            missing += [(k, a.entries) for a in enumerate_tau_jzero(s.d, k, j)
                        if not s.is_active(a)]
        else:
            missing += [(k, a) for a in sorted(s.exclude.get(k, ())) if a[j - 1] == 0]
    if missing:
        raise DomainError(f"active sets miss indices with a_{j} = 0: {missing[:10]}"
                          + (" ..." if len(missing) > 10 else ""))


def corollary_rate_check(s: CoefficientScheme, j: int) -> RateCheck:
    """Sequences |A_k^c| / k^{(d-j-1)/2} over E and O, with a trend verdict.

    The verdict is positive when both parities are present and both
    sequences pass ``trend_to_zero``. Degree 0 is skipped (k^0 division).
    """
    _check_contains_jzero(s, j)
    expo = (s.d - j - 1) / 2
    split = parity_split(s)
    seqs = []
    for degs, parity in ((split.even, Parity.EVEN), (split.odd, Parity.ODD)):
        degs = [k for k in degs if k >= 1]
        vals = [s.complement_size(k) / k ** expo for k in degs]
        seqs.append(RateSequence(degs, vals, parity))
    even, odd = seqs
    verdict = (len(even) > 0 and len(odd) > 0
               and trend_to_zero(even.values, final_fraction=0.5)
               and trend_to_zero(odd.values, final_fraction=0.5))
    return RateCheck(even, odd, verdict)


def _weighted_term(a, j: int, d: int, k: int) -> float:
    return math.prod(math.sqrt(2 * a[l - 1] + l - 1) / (2 * k + l - 1)
                     for l in range(j + 1, d))


class ComplementSums(NamedTuple):
    even: RateSequence
    odd: RateSequence


def weighted_complement_sum(s: CoefficientScheme, j: int) -> ComplementSums:
    """sum_{a in A_k^c} prod_{l=j+1}^{d-1} (2 a_l + l - 1)^{1/2} / (2k + l - 1), per k in E, O."""
    _check_contains_jzero(s, j)
    split = parity_split(s)
    seqs = []
    for degs, parity in ((split.even, Parity.EVEN), (split.odd, Parity.ODD)):
        vals = [sum(_weighted_term(a, j, s.d, k) for a in s.complement_indices(k))
                for k in degs]
        seqs.append(RateSequence(degs, vals, parity))
    return ComplementSums(*seqs)


def synthetic_scheme(d: int, j: int, count, k_max: int = 200, rule: Rule = Rule.FULL,
                     weights="unit") -> CoefficientScheme:
    """Scheme whose complement at degree k holds ``count(k)`` indices with a_j != 0.

    The removed indices are the lexicographically first ones outside
    {a_j = 0}, so the containment needed by ``corollary_rate_check`` holds.
    """
    exclude = {}
    for k in range(1, k_max + 1):
        n = int(count(k))
        if n <= 0:
            continue
        picked = list(itertools.islice((a for a in iter_tau(d, k) if a[j - 1] != 0), n))
        if len(picked) < n:
            raise DomainError(f"degree {k} has only {len(picked)} indices with a_{j} != 0")
        exclude[k] = picked
    return CoefficientScheme(d, k_max, rule=rule, exclude=exclude, weights=weights)


def coarse_complement_bound(s: CoefficientScheme, j: int, k: int) -> float:
    """|A_k^c| prod_l (2k + l - 1)^{-1/2}, an upper bound for the weighted sum."""
    return s.complement_size(k) * math.prod((2 * k + l - 1) ** -0.5 for l in range(j + 1, s.d))


# -- the N / (c P(1)) ratio chain --------------------------------------------

class BoundViolation(AssertionError):
    """A bound that should hold by theorem failed numerically."""


def ratio_chain_closed_form(d: int, j: int, k: int) -> float:
    """Gamma(d-1)(2k+j-1)Gamma(k+j-1) / (Gamma(j)(2k+d-2)Gamma(k+d-2))."""
    return math.exp(math.lgamma(d - 1) + math.log(2 * k + j - 1) + math.lgamma(k + j - 1)
                    - math.lgamma(j) - math.log(2 * k + d - 2) - math.lgamma(k + d - 2))


def ratio_chain_rhs(d: int, j: int, k: int) -> float:
    """3^{d-j-1} Gamma(d-1)/Gamma(j) prod_{l=j+1}^{d-1} (2k + l - 1)^{-1}."""
    log_rhs = ((d - j - 1) * math.log(3) + math.lgamma(d - 1) - math.lgamma(j)
               - sum(math.log(2 * k + l - 1) for l in range(j + 1, d)))
    return math.exp(log_rhs)


def ratio_chain_bound(d: int, j: int, k: int) -> float:
    """Exact N_{k,j+1} / (c_k P_k^{(a,a)}(1)) on S^{d-1}; raises if above the bound."""
    if not (1 <= j <= d - 2 and k >= 1):
        raise DomainError(f"need 1 <= j <= d-2 and k >= 1, got d={d}, j={j}, k={k}")
    m = ManifoldSpec.sphere(d)
    lhs = math.exp(math.log(dim_harmonic(j + 1, k)) - ck_log(m, k)
                   - jacobi_at_one(k, m.jacobi_params))
    rhs = ratio_chain_rhs(d, j, k)
    if lhs > rhs * (1 + REL_SLACK):
        raise BoundViolation(f"ratio chain fails at d={d}, j={j}, k={k}: {lhs} > {rhs}")
    return lhs


# -- Jacobi-side facts ------------------------------------------------------

def jacobi_ratio_sequence(params, k_max: int = 200) -> RateSequence:
    """P_k^{(b,a)}(1) / P_k^{(a,b)}(1) for k = 0..k_max; needs a > b."""
    a, b = params
    if not a > b:
        raise DomainError(f"need alpha > beta, got ({a}, {b})")
    vals = [math.exp(jacobi_at_one(k, (b, a)) - jacobi_at_one(k, (a, b)))
            for k in range(k_max + 1)]
    return RateSequence(list(range(k_max + 1)), vals, Parity.ALL)


class Sufficiency(enum.Enum):
    NECESSARY_FAILED = "necessary-condition-failed"
    SUFFICIENT_MET = "sufficient-condition-met"
    INDETERMINATE = "indeterminate"


def isotropic_sufficiency(m: ManifoldSpec, s: CoefficientScheme | None = None, *,
                          full_degrees: Sequence[int] | None = None,
                          active_degrees: Sequence[int] | None = None,
                          k_max: int | None = None) -> Sufficiency:
    """Three-valued verdict for projective spaces with alpha > beta.

    Either pass a scheme (then N is its active degree set and L the degrees
    with every index active), or pass ``full_degrees`` (L), ``active_degrees``
    (N) and ``k_max`` directly. "Infinitely many" uses ``looks_infinite``.
    """
    if m.is_sphere:
        raise DomainError("on the sphere use parity_split / corollary_rate_check")
    a, b = m.jacobi_params
    if not a > b:
        raise DomainError(f"needs alpha > beta, got ({a}, {b})")
    if s is not None:
        k_max = s.k_max
        active_degrees = s.active_degrees()
        full_degrees = [k for k in active_degrees if s.complement_size(k) == 0]
    if k_max is None or active_degrees is None:
        raise DomainError("need a scheme or explicit degree sets with k_max")
    full_degrees = list(full_degrees or [])
    if not looks_infinite(active_degrees, k_max):
        return Sufficiency.NECESSARY_FAILED
    if looks_infinite(full_degrees, k_max):
        return Sufficiency.SUFFICIENT_MET
    return Sufficiency.INDETERMINATE


def jxi_of_point(p: PolarPoint) -> int:
    """max({2} U {j : theta_j in {0, pi}}), with 1-based angle index j."""
    js = [j for j, t in enumerate(p.theta, start=1) if t == 0.0 or t == math.pi]
    return max([2] + js)


# -- inequality certificates -------------------------------------------------

def lohofer_rhs_log(m: int, n: int, theta: np.ndarray) -> np.ndarray:
    """log of Gamma(1/4) sin^{-1/4} / pi * sqrt(Gamma(m+n+1)/Gamma(m-n+1)) * m^{-1/4}."""
    return (math.log(LOHOFER_CONST) - 0.25 * np.log(np.sin(theta))
            + 0.5 * (math.lgamma(m + n + 1) - math.lgamma(m - n + 1)) - 0.25 * math.log(m))


LOHOFER_NOTE = (
    "Printed Gamma-ratio Gamma(n+m+1)/Gamma(n-m+1) with m >= |n| has poles at n - m + 1 <= 0;"
    " evaluated as Gamma(m+n+1)/Gamma(m-n+1) with m the degree and n the order of P_m^n")


def certify_lohofer(m_max: int = 60, thetas=None) -> BoundCertificate:
    """|P_m^n(cos t)| <= Gamma(1/4)/pi sin(t)^{-1/4} sqrt(Gamma(m+n+1)/Gamma(m-n+1)) m^{-1/4}."""
    thetas = default_thetas() if thetas is None else np.asarray(thetas, dtype=float)
    cert = BoundCertificate("Lohofer", {"m": [1, m_max], "n": "-m..m",
                                        "theta": [float(thetas.min()), float(thetas.max()),
                                                  int(thetas.size)]})
    cert.notes.append(LOHOFER_NOTE)
    x = np.cos(thetas)
    for m in range(1, m_max + 1):
        for n in range(-m, m + 1):
            lhs = np.abs(ferrers_p(m, n, x))
            with np.errstate(divide="ignore"):
                ratio = np.exp(np.log(lhs) - lohofer_rhs_log(m, n, thetas))
            cert.record(ratio, lambda i, m=m, n=n: {"m": m, "n": n, "theta": float(thetas[i])})
    cert.empirical_constant = cert.max_ratio * LOHOFER_CONST
    return cert


def haagerup_rhs_log(n: int, a: float, C: float = HAAGERUP_C) -> float:
    """log of C 2^a Gamma(n+a+1) / sqrt(Gamma(n+1) Gamma(n+2a+1)) (2n+2a+1)^{-1/4}."""
    return (math.log(C) + a * LOG2 + math.lgamma(n + a + 1)
            - 0.5 * (math.lgamma(n + 1) + math.lgamma(n + 2 * a + 1))
            - 0.25 * math.log(2 * n + 2 * a + 1))


def certify_haagerup(n_max: int = 100, a_values=(0.0, 0.5, 1.0, 3.0), xs=None,
                     C: float = HAAGERUP_C) -> BoundCertificate:
    """(1-x^2)^{a/2+1/4} |P_n^{(a,a)}(x)| <= C 2^a Gamma(n+a+1) / ... (2n+2a+1)^{-1/4}."""
    xs = np.linspace(-1.0, 1.0, 201) if xs is None else np.asarray(xs, dtype=float)
    cert = BoundCertificate("HaagerupJacobi", {"n": [0, n_max], "a": list(a_values),
                                               "x_points": int(xs.size), "C": C})
    for a in a_values:
        if a < -0.5:
            raise DomainError(f"a must be >= -1/2, got {a}")
        for n in range(n_max + 1):
            if n + 2 * a + 1 <= 0:
                cert.skipped += xs.size
                continue
            lhs = np.power(1 - xs * xs, a / 2 + 0.25) * np.abs(jacobi_p(n, (a, a), xs))
            ratio = lhs * math.exp(-haagerup_rhs_log(n, a, C))
            cert.record(ratio, lambda i, a=a, n=n: {"a": a, "n": n, "x": float(xs[i])})
    cert.empirical_constant = cert.max_ratio * C
    return cert


def ptilde_constant(j: int, theta, C: float = HAAGERUP_C):
    """C_j(theta) = K_j C sin(theta)^{-(j-1)/2} / sqrt(2), K_j the level-j normalisation."""
    return normalization_constant(j) * C * np.power(np.sin(theta), -(j - 1) / 2) / math.sqrt(2)


def certify_ptilde(j: int, L_max: int = 40, thetas=None, C: float = HAAGERUP_C,
                   endpoints: bool = True) -> BoundCertificate:
    """|ptilde(j, L, ell, t)| <= C_j(t) (2L + j - 1)^{1/4} for L >= ell >= 0.

    At j = 2 negative ell is included. With ``endpoints`` the poles t = 0, pi
    are checked too, where the bound requires ptilde = 0 for ell != 0.
    The profile lists the empirical C_j(t) = max over (L, ell) of
    |ptilde| / (2L + j - 1)^{1/4}.
    """
    thetas = default_thetas() if thetas is None else np.asarray(thetas, dtype=float)
    cert = BoundCertificate("PtildeQuarterPower", {"j": j, "L": [0, L_max],
                                                   "theta_points": int(thetas.size), "C": C})
    table = _level_table(j, L_max, thetas)
    off = L_max if j == 2 else 0
    Cj = ptilde_constant(j, thetas, C)
    empirical = np.zeros_like(thetas)
    for L in range(L_max + 1):
        scale = (2 * L + j - 1) ** 0.25
        ells = range(-L, L + 1) if j == 2 else range(0, L + 1)
        for ell in ells:
            lhs = np.abs(table[L, ell + off])
            empirical = np.maximum(empirical, lhs / scale)
            cert.record(lhs / (Cj * scale),
                        lambda i, L=L, ell=ell: {"L": L, "ell": ell, "theta": float(thetas[i])})
    if endpoints:
        poles = np.array([0.0, math.pi])
        ptable = _level_table(j, L_max, poles)
        for L in range(L_max + 1):
            ells = range(-L, L + 1) if j == 2 else range(1, L + 1)
            for ell in ells:
                if ell == 0:
                    continue
                # the right-hand side is infinite at the poles; the claim is lhs = 0
                vals = np.abs(ptable[L, ell + off])
                cert.record(np.where(vals == 0.0, 0.0, np.inf),
                            lambda i, L=L, ell=ell: {"L": L, "ell": ell,
                                                     "theta": float(poles[i])})
    cert.profile = [{"theta": float(t), "empirical_Cj": float(e), "explicit_Cj": float(c)}
                    for t, e, c in zip(thetas, empirical, Cj)]
    cert.empirical_constant = float(np.max(empirical / (Cj / C)))
    return cert


def _harmonic_grid(d: int) -> list[PolarPoint]:
    t1 = 2 * math.pi * np.arange(8) / 8
    inner = math.pi * np.arange(1, 10) / 10
    grids = np.meshgrid(t1, *([inner] * (d - 2)), indexing="ij")
    pts = np.stack([g.ravel() for g in grids], axis=1)
    return [PolarPoint(tuple(p)) for p in pts]


def explicit_D(p: PolarPoint, j: int, C: float = HAAGERUP_C) -> float:
    """D(xi) = prod_{l=j+1}^{d-1} C_l(theta_l); infinite on the singular set."""
    out = 1.0
    for l in range(j + 1, p.d):
        t = p.theta[l - 1]
        if t == 0.0 or t == math.pi:
            return math.inf
        out *= float(ptilde_constant(l, t, C))
    return out


def certify_harmonic_product(j: int, d: int, k_max: int = 12, points=None,
                             C: float = HAAGERUP_C,
                             all_indices: bool = False) -> BoundCertificate:
    """|Y_a(xi)| <= D(xi) sqrt(N_{a_j, j+1}) prod_{l=j+1}^{d-1} (2 a_l + l - 1)^{1/4}.

    Indices range over tau_k \\ {a_j = 0}, k <= k_max (all of tau_k with
    ``all_indices``). Points with theta_l in {0, pi} for some l > j are
    skipped. The certificate also counts the universal estimate
    |Y_{a_1..a_j}(xi')| <= sqrt(N_{a_j, j+1}) for the leading factor.
    """
    if not 1 <= j <= d - 1:
        raise DomainError(f"j must lie in [1, {d - 1}], got {j}")
    pts = _harmonic_grid(d) if points is None else list(points)
    cert = BoundCertificate("HarmonicProduct", {"d": d, "j": j, "k_max": k_max,
                                                "points": len(pts), "C": C,
                                                "all_indices": all_indices})
    usable = [p for p in pts if math.isfinite(explicit_D(p, j, C))]
    cert.skipped = len(pts) - len(usable)
    if not usable:
        return cert
    indices = [a for k in range(k_max + 1) for a in iter_tau(d, k)
               if all_indices or a[j - 1] != 0]
    if not indices:
        return cert
    idx = np.array(indices)
    ev = HarmonicEvaluator(d, k_max, usable)
    Y = np.abs(ev.matrix(indices))
    D = np.array([explicit_D(p, j, C) for p in usable])
    lead_deg = np.abs(idx[:, j - 1])
    sqrtN = np.sqrt([float(dim_harmonic(j + 1, int(k))) for k in lead_deg])
    growth = np.ones(len(indices))
    for l in range(j + 1, d):
        growth *= (2 * idx[:, l - 1] + l - 1) ** 0.25
    ratio = Y / np.outer(sqrtN * growth, D)
    cert.record(ratio.ravel(), lambda i: {"index": list(map(int, indices[i // len(usable)])),
                                          "theta": list(usable[i % len(usable)].theta)})
    # leading factor on S^j
    if j >= 2:
        lead = HarmonicEvaluator(j + 1, k_max, [p.theta[:j] for p in usable])
        Yl = np.abs(lead.matrix([a[:j] for a in indices]))
    else:
        Yl = np.full((len(indices), len(usable)), 1 / math.sqrt(2 * math.pi))
    uni = Yl / sqrtN[:, None]
    before = cert.violations
    cert.record(uni.ravel(), lambda i: {"universal": True,
                                        "index": list(map(int, indices[i // len(usable)]))})
    cert.notes.append(f"universal estimate violations: {cert.violations - before}")
    emp = np.max(Y / (sqrtN * growth)[:, None], axis=0)
    cert.profile = [{"theta": list(p.theta), "empirical_D": float(e), "explicit_D": float(x)}
                    for p, e, x in list(zip(usable, emp, D))[:50]]
    cert.empirical_constant = float(np.max(emp / D))
    return cert


def certify_point_bound(d: int, k_max: int, points, C: float = HAAGERUP_C) -> BoundCertificate:
    """Point-dependent bound: ``certify_harmonic_product`` with j = j_xi, all indices."""
    total = BoundCertificate("HarmonicProduct", {"d": d, "k_max": k_max, "j": "j_xi",
                                                 "points": len(points), "C": C})
    for p in points:
        c = certify_harmonic_product(jxi_of_point(p), d, k_max, [p], C, all_indices=True)
        total.checked += c.checked
        total.skipped += c.skipped
        total.violations += c.violations
        total.max_ratio = max(total.max_ratio, c.max_ratio)
        total.violation_records += c.violation_records[:5]
    return total


__all__ = [
    "Parity", "RateSequence", "BoundCertificate", "trend_to_zero", "windowed_maxima",
    "ParitySplit", "parity_split", "looks_infinite", "asympt_ratio_sequence", "RateCheck",
    "corollary_rate_check", "ComplementSums", "weighted_complement_sum",
    "coarse_complement_bound", "synthetic_scheme", "BoundViolation", "ratio_chain_closed_form",
    "ratio_chain_rhs", "ratio_chain_bound", "jacobi_ratio_sequence", "Sufficiency",
    "isotropic_sufficiency", "jxi_of_point", "certify_lohofer", "certify_haagerup",
    "ptilde_constant", "certify_ptilde", "explicit_D", "certify_harmonic_product",
    "certify_point_bound", "default_thetas",
]

"""Non-isotropic kernels sum_a d_a Y_a(x) conj(Y_a(y)) and their Gram matrices.

A kernel is described by a ``CoefficientScheme``: which multi-indices carry
a positive weight (the active set F) and what those weights are. The series
is truncated at ``k_max``; every verdict produced here holds at that level.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field, replace
from typing import Iterator, Mapping, Sequence

import numpy as np

from .harmonics import (
    POINT_TOL,
    HarmonicEvaluator,
    MultiIndex,
    PolarPoint,
    dim_harmonic,
    geodesic_distance,
    iter_tau,
    tau_jzero_size,
    ck_constant,
)
from .special_fn import DomainError, ManifoldSpec, jacobi_p

DEFAULT_TOL = 1e-10


class Rule(enum.Enum):
    FULL = "full"
    JZERO = "jzero"
    EVEN = "even"
    ODD = "odd"
    CUSTOM = "custom"


class Verdict(enum.Enum):
    POSITIVE_DEFINITE = "PositiveDefinite"
    DEGENERATE = "PositiveSemiDefiniteDegenerate"
    INDEFINITE = "Indefinite"


def _as_tuple(a) -> tuple[int, ...]:
    return tuple(int(x) for x in a)


@dataclass(frozen=True, eq=False)
class CoefficientScheme:
    """Active index set F and positive weights d_a of a truncated kernel.

    Parameters
    ----------
    d : int
        Ambient dimension; the kernel lives on S^{d-1}.
    k_max : int
        Truncation degree.
    rule : Rule
        FULL keeps every index, JZERO keeps {a_j = 0}, EVEN / ODD keep whole
        degrees of one parity, CUSTOM keeps the indices listed in ``custom``.
    j : int, optional
        Level for the JZERO rule (1-based, 1 <= j <= d - 2).
    exclude : mapping of degree -> iterable of indices
        Indices removed from the rule's active set.
    custom : mapping of degree -> iterable of indices
        Active indices for the CUSTOM rule.
    degrees : iterable of int, optional
        If given, only these degrees may be active.
    weights : "unit", ("geometric", r), mapping or callable
        Weight d_a of each active index; mappings default to 1 for unlisted
        indices and geometric weights are r**degree.
    """

    d: int
    k_max: int
    rule: Rule = Rule.FULL
    j: int | None = None
    exclude: Mapping[int, frozenset] = field(default_factory=dict)
    custom: Mapping[int, frozenset] | None = None
    degrees: frozenset | None = None
    weights: object = "unit"

    def __post_init__(self):
        if isinstance(self.rule, str):
            object.__setattr__(self, "rule", Rule(self.rule))
        if self.d < 3 or self.k_max < 0:
            raise DomainError(f"need d >= 3 and k_max >= 0, got d={self.d}, k_max={self.k_max}")
        if self.rule is Rule.JZERO and not (self.j is not None and 1 <= self.j <= self.d - 2):
            raise DomainError(f"JZERO rule needs 1 <= j <= {self.d - 2}, got {self.j}")
        excl = {int(k): frozenset(_as_tuple(a) for a in v) for k, v in self.exclude.items()}
        for k, idx in excl.items():
            for a in idx:
                self._validate_index(a, k)
        object.__setattr__(self, "exclude", excl)
        if self.rule is Rule.CUSTOM:
            if self.custom is None:
                raise DomainError("CUSTOM rule needs an explicit active map")
            cust = {int(k): frozenset(_as_tuple(a) for a in v) for k, v in self.custom.items()}
            for k, idx in cust.items():
                for a in idx:
                    self._validate_index(a, k)
            object.__setattr__(self, "custom", cust)
        if self.degrees is not None:
            object.__setattr__(self, "degrees", frozenset(int(k) for k in self.degrees))
        w = self.weights
        if isinstance(w, Mapping):
            w = {_as_tuple(a): float(v) for a, v in w.items()}
            if any(not v > 0 for v in w.values()):
                raise DomainError("all weights must be positive")
            object.__setattr__(self, "weights", w)
        elif isinstance(w, tuple) and w[0] == "geometric":
            if not float(w[1]) > 0:
                raise DomainError("geometric ratio must be positive")
        elif not (w == "unit" or callable(w)):
            raise DomainError(f"unrecognised weight specification {w!r}")

    def _validate_index(self, a, k):
        if len(a) != self.d - 1 or a[-1] != k or k > self.k_max:
            raise DomainError(f"index {a} is not in tau_{k}^{self.d - 1} with k <= {self.k_max}")
        MultiIndex(a)

    # -- membership -------------------------------------------------------

    def degree_allowed(self, k: int) -> bool:
        if k < 0 or k > self.k_max:
            return False
        if self.degrees is not None and k not in self.degrees:
            return False
        if self.rule is Rule.EVEN:
            return k % 2 == 0
        if self.rule is Rule.ODD:
            return k % 2 == 1
        if self.rule is Rule.CUSTOM:
            return bool(self.custom.get(k))
        return True

    def _rule_contains(self, a: tuple[int, ...]) -> bool:
        if self.rule is Rule.JZERO:
            return a[self.j - 1] == 0
        if self.rule is Rule.CUSTOM:
            return a in self.custom.get(a[-1], ())
        return True

    def is_active(self, a) -> bool:
        a = _as_tuple(a)
        k = a[-1]
        return (self.degree_allowed(k) and self._rule_contains(a)
                and a not in self.exclude.get(k, ()))

    def active_indices(self, k: int) -> list[tuple[int, ...]]:
        """A_k in lexicographic order."""
        if not self.degree_allowed(k):
            return []
        if self.rule is Rule.CUSTOM:
            return sorted(a for a in self.custom[k] if a not in self.exclude.get(k, ()))
        return [a for a in iter_tau(self.d, k) if self.is_active(a)]

    def active_set(self) -> list[tuple[int, ...]]:
        """F truncated at k_max, ordered by degree then lexicographically."""
        return [a for k in range(self.k_max + 1) for a in self.active_indices(k)]

    def complement_size(self, k: int) -> int:
        """|A_k^c| = |tau_k \\ A_k|, computed without enumerating tau_k where possible."""
        total = dim_harmonic(self.d, k)
        if not self.degree_allowed(k):
            return total
        excl = self.exclude.get(k, frozenset())
        if self.rule is Rule.CUSTOM:
            return total - len(self.custom[k] - excl)
        if self.rule is Rule.JZERO:
            kept = tau_jzero_size(self.d, k, self.j) - sum(a[self.j - 1] == 0 for a in excl)
            return total - kept
        return len(excl)

    def complement_indices(self, k: int) -> Iterator[tuple[int, ...]]:
        """A_k^c, lazily."""
        if self.degree_allowed(k) and self.rule in (Rule.FULL, Rule.EVEN, Rule.ODD):
            yield from sorted(self.exclude.get(k, ()))
            return
        for a in iter_tau(self.d, k):
            if not self.is_active(a):
                yield a

    def active_degrees(self) -> list[int]:
        """N: degrees k <= k_max whose active set is non-empty."""
        return [k for k in range(self.k_max + 1)
                if self.degree_allowed(k) and self.complement_size(k) < dim_harmonic(self.d, k)]

    # -- weights ----------------------------------------------------------

    def weight(self, a) -> float:
        a = _as_tuple(a)
        w = self.weights
        if w == "unit":
            return 1.0
        if isinstance(w, tuple):
            return float(w[1]) ** a[-1]
        if isinstance(w, Mapping):
            return w.get(a, 1.0)
        value = float(w(a))
        if not value > 0:
            raise DomainError(f"weight of {a} is not positive: {value}")
        return value

    def weight_vector(self, indices) -> np.ndarray:
        return np.array([self.weight(a) for a in indices], dtype=float)

    def with_weights(self, weights) -> CoefficientScheme:
        return replace(self, weights=weights)

    def same_active_set(self, other: CoefficientScheme) -> bool:
        return self.d == other.d and self.active_set() == other.active_set()


@dataclass
class GramReport:
    """Outcome of a positive-definiteness test on one Gram matrix."""

    n: int
    min_eigenvalue: float
    max_eigenvalue: float
    verdict: Verdict
    tol: float
    witness: np.ndarray | None = None
    k_max: int | None = None

    @property
    def is_definite(self) -> bool:
        return self.verdict is Verdict.POSITIVE_DEFINITE

    def to_dict(self) -> dict:
        out = {
            "n": self.n,
            "min_eigenvalue": self.min_eigenvalue,
            "max_eigenvalue": self.max_eigenvalue,
            "verdict": self.verdict.value,
            "tol": self.tol,
            "truncation_level": self.k_max,
            "witness": None,
        }
        if self.witness is not None:
            out["witness"] = [[float(c.real), float(c.imag)] for c in self.witness]
        return out


def _points(points) -> list[PolarPoint]:
    if isinstance(points, PolarPoint):
        return [points]
    return [p if isinstance(p, PolarPoint) else PolarPoint(tuple(p)) for p in points]


def check_distinct(points: Sequence[PolarPoint], tol: float = POINT_TOL) -> None:
    """Raise DomainError naming the first pair closer than ``tol``."""
    for (i, p), (j, q) in itertools.combinations(enumerate(points), 2):
        if geodesic_distance(p, q) <= tol:
            raise DomainError(f"points {i} and {j} coincide (distance <= {tol})")


def _collocation(s: CoefficientScheme, pts: list[PolarPoint]):
    indices = s.active_set()
    ev = HarmonicEvaluator(s.d, s.k_max, pts)
    return indices, ev.matrix(indices)


def kernel_eval(s: CoefficientScheme, p: PolarPoint, q: PolarPoint) -> complex:
    """K(p, q) = sum over active a of d_a Y_a(p) conj(Y_a(q))."""
    indices, B = _collocation(s, [p, q])
    if not indices:
        return 0j
    w = s.weight_vector(indices)
    return complex(np.sum(w * B[:, 0] * B[:, 1].conj()))


def isotropic_kernel_eval(b: Sequence[float], m: ManifoldSpec, t: float) -> float:
    """sum_k b_k c_k P_k^(alpha, beta)(t) for any two-point homogeneous space."""
    params = m.jacobi_params
    return float(sum(bk * ck_constant(m, k) * jacobi_p(k, params, t)
                     for k, bk in enumerate(b) if bk != 0))


def gram_matrix(s: CoefficientScheme, pts) -> np.ndarray:
    """Hermitian matrix [K(x, y)] over the (distinct) points ``pts``."""
    pts = _points(pts)
    check_distinct(pts)
    indices, B = _collocation(s, pts)
    if not indices:
        return np.zeros((len(pts), len(pts)), dtype=complex)
    w = s.weight_vector(indices)
    K = (B.T * w) @ B.conj()
    K = (K + K.conj().T) / 2
    K[np.diag_indices_from(K)] = K.diagonal().real
    return K


def quadratic_form(K: np.ndarray, c: np.ndarray) -> float:
    """sum_{x,y} c_x conj(c_y) K(x, y)."""
    return float(np.real(c @ K @ c.conj()))


def pd_verdict(g: np.ndarray, tol: float = DEFAULT_TOL, k_max: int | None = None) -> GramReport:
    """Classify a Hermitian matrix from its spectrum.

    The tolerance is relative to max(1, largest eigenvalue). Degenerate
    matrices come with a unit null vector c (phase fixed so its largest
    entry is real positive), for which the quadratic form is ~0.
    """
    g = np.asarray(g)
    scale_in = max(1.0, float(np.max(np.abs(g)))) if g.size else 1.0
    if g.ndim != 2 or g.shape[0] != g.shape[1]:
        raise DomainError("Gram matrix must be square")
    if np.max(np.abs(g - g.conj().T), initial=0.0) > 1e-10 * scale_in:
        raise DomainError("matrix is not Hermitian")
    evals, evecs = np.linalg.eigh((g + g.conj().T) / 2)
    lo, hi = float(evals[0]), float(evals[-1])
    thresh = tol * max(1.0, hi)
    witness = None
    if lo > thresh:
        verdict = Verdict.POSITIVE_DEFINITE
    elif lo >= -thresh:
        verdict = Verdict.DEGENERATE
        # Kv = lo v gives v^H K v = lo; the definition's form c K conj(c) needs c = conj(v)
        witness = _fix_phase(evecs[:, 0].conj())
    else:
        verdict = Verdict.INDEFINITE
    return GramReport(n=g.shape[0], min_eigenvalue=lo, max_eigenvalue=hi,
                      verdict=verdict, tol=tol, witness=witness, k_max=k_max)


def _fix_phase(c: np.ndarray) -> np.ndarray:
    c = np.asarray(c, dtype=complex)
    c = c / np.linalg.norm(c)
    i = int(np.argmax(np.abs(c) - 1e-12 * np.arange(c.size)))
    return c * (abs(c[i]) / c[i])


def check_spd(s: CoefficientScheme, pts, tol: float = DEFAULT_TOL) -> GramReport:
    """Gram matrix of ``s`` on ``pts`` followed by ``pd_verdict``."""
    return pd_verdict(gram_matrix(s, pts), tol, k_max=s.k_max)


def spd_witness_search(s: CoefficientScheme, pts, tol: float = DEFAULT_TOL) -> np.ndarray | None:
    """Unit vector c with sum_x c_x Y_a(x) ~ 0 for every active a, or None.

    Works on the collocation matrix B[a, x] = Y_a(x) through its SVD; c is
    returned when the smallest singular value is <= tol * ||B|| (or when
    there are more points than active indices).
    """
    pts = _points(pts)
    check_distinct(pts)
    indices, B = _collocation(s, pts)
    n = len(pts)
    if not indices:
        return _fix_phase(np.eye(n, 1)[:, 0])
    _, S, Vh = np.linalg.svd(B, full_matrices=True)
    norm = S[0] if S.size else 0.0
    if n > len(indices) or S[-1] <= tol * norm:
        return _fix_phase(Vh[-1].conj())
    return None


def scheme_invariance_check(s1: CoefficientScheme, s2: CoefficientScheme, pts,
                            tol: float = DEFAULT_TOL) -> bool:
    """True iff two weightings of the same active set give the same verdict class."""
    if not s1.same_active_set(s2):
        raise DomainError("schemes have different active sets")
    return check_spd(s1, pts, tol).is_definite == check_spd(s2, pts, tol).is_definite


__all__ = [
    "Rule", "Verdict", "CoefficientScheme", "GramReport", "check_distinct",
    "kernel_eval", "isotropic_kernel_eval", "gram_matrix", "quadratic_form",
    "pd_verdict", "check_spd", "spd_witness_search", "scheme_invariance_check",
]

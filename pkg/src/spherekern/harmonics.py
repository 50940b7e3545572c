"""Spherical harmonics on S^{d-1} in polar coordinates.

Points are given by angles (theta_1, ..., theta_{d-1}) with
theta_1 in [0, 2 pi) and theta_j in [0, pi] otherwise; theta_{d-1} is the
polar angle of the first Cartesian coordinate. Harmonics are labelled by
integer multi-indices |a_1| <= a_2 <= ... <= a_{d-1} = k and normalised
so that (1/Vol) * integral of Y_a conj(Y_b) equals delta_ab.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .special_fn import (
    DomainError,
    ManifoldSpec,
    _log_jc,
    _sin_exact,
    jacobi_p,
    normalization_constant,
    LOG2,
)

TWO_PI = 2 * math.pi
ANGLE_TOL = 1e-12
POINT_TOL = 1e-9


@dataclass(frozen=True, order=True)
class MultiIndex:
    """Label (a_1, ..., a_{d-1}) of a spherical harmonic of degree a_{d-1}."""

    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(a) for a in self.entries)
        object.__setattr__(self, "entries", entries)
        if len(entries) < 2:
            raise DomainError("a multi-index needs at least two entries (d >= 3)")
        if abs(entries[0]) > entries[1] or any(
                entries[i] > entries[i + 1] for i in range(1, len(entries) - 1)):
            raise DomainError(f"malformed multi-index {entries}: need |a_1| <= a_2 <= ...")

    @property
    def degree(self) -> int:
        return self.entries[-1]

    @property
    def d(self) -> int:
        return len(self.entries) + 1

    def __getitem__(self, i):
        return self.entries[i]

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __str__(self):
        return ",".join(map(str, self.entries))


@dataclass(frozen=True)
class PolarPoint:
    """Point of S^{d-1}, stored as its polar angles."""

    theta: tuple[float, ...]

    def __post_init__(self):
        theta = tuple(float(t) for t in self.theta)
        if not theta:
            raise DomainError("a polar point needs at least one angle")
        t1 = theta[0]
        if not -ANGLE_TOL <= t1 < TWO_PI + ANGLE_TOL:
            raise DomainError(f"theta_1 = {t1} outside [0, 2 pi)")
        for i, t in enumerate(theta[1:], start=2):
            if not -ANGLE_TOL <= t <= math.pi + ANGLE_TOL:
                raise DomainError(f"theta_{i} = {t} outside [0, pi]")
        t1 = t1 % TWO_PI if t1 >= 0 else 0.0
        rest = tuple(min(max(t, 0.0), math.pi) for t in theta[1:])
        object.__setattr__(self, "theta", (t1,) + rest)

    @property
    def d(self) -> int:
        return len(self.theta) + 1

    def cartesian(self) -> np.ndarray:
        return to_cartesian(self)


def dim_harmonic(d: int, k: int) -> int:
    """Dimension N_{k,d} of the degree-k harmonics on S^{d-1} (exact integer).

    d = 2 is accepted as well (N_{0,2} = 1, N_{k,2} = 2).
    """
    if d < 2 or k < 0:
        raise DomainError(f"need d >= 2 and k >= 0, got d={d}, k={k}")
    if d == 2:
        return 1 if k == 0 else 2
    return (2 * k + d - 2) * math.factorial(k + d - 3) // (
        math.factorial(k) * math.factorial(d - 2))


def _nondecreasing(length: int, lo: int, hi: int) -> Iterator[tuple[int, ...]]:
    if length == 0:
        yield ()
        return
    for first in range(lo, hi + 1):
        for rest in _nondecreasing(length - 1, first, hi):
            yield (first,) + rest


def iter_tau(d: int, k: int) -> Iterator[tuple[int, ...]]:
    """Lazily yield the entries of tau_k^{d-1} in lexicographic order."""
    if d < 3 or k < 0:
        raise DomainError(f"need d >= 3 and k >= 0, got d={d}, k={k}")
    # (a_2, ..., a_{d-2}) nondecreasing in [0, k]; a_1 ranges over [-a_2, a_2]
    inner = d - 3
    for a1 in range(-k, k + 1):
        for mid in _nondecreasing(inner, abs(a1), k):
            yield (a1,) + mid + (k,)


def enumerate_tau(d: int, k: int) -> list[MultiIndex]:
    """All multi-indices of degree k for S^{d-1}, sorted lexicographically."""
    return [MultiIndex(a) for a in iter_tau(d, k)]


def enumerate_tau_jzero(d: int, k: int, j: int) -> list[MultiIndex]:
    """Indices of degree k with a_j = 0 (1-based j in [1, d-2])."""
    if not 1 <= j <= d - 2:
        raise DomainError(f"j must lie in [1, {d - 2}], got {j}")
    # a_j = 0 forces a_1 = ... = a_j = 0
    return [MultiIndex((0,) * j + mid + (k,))
            for mid in _nondecreasing(d - 2 - j, 0, k)]


def tau_jzero_size(d: int, k: int, j: int) -> int:
    """|{a in tau_k^{d-1} : a_j = 0}| = C(k + d - 2 - j - 1, d - 2 - j)."""
    if not 1 <= j <= d - 2:
        raise DomainError(f"j must lie in [1, {d - 2}], got {j}")
    free = d - 2 - j
    return math.comb(k + free, free)


def to_cartesian(p: PolarPoint) -> np.ndarray:
    """Unit vector in R^d for the polar point ``p``."""
    theta = p.theta
    d = len(theta) + 1
    x = np.empty(d)
    s = 1.0
    # x_1 = cos(theta_{d-1}), x_2 = sin(theta_{d-1}) cos(theta_{d-2}), ...
    for i in range(d - 1):
        t = theta[d - 2 - i]
        x[i] = s * math.cos(t)
        s *= 0.0 if t in (0.0, math.pi) else math.sin(t)
    x[d - 1] = s
    return x


def from_cartesian(x) -> PolarPoint:
    """Polar angles of a unit vector (the inverse of ``to_cartesian``)."""
    x = np.asarray(x, dtype=float)
    d = x.size
    if d < 2:
        raise DomainError("need a vector of length >= 2")
    norm = np.linalg.norm(x)
    if abs(norm - 1.0) > POINT_TOL:
        raise DomainError(f"not a unit vector (|x| = {norm})")
    x = x / norm
    theta = [0.0] * (d - 1)
    for i in range(d - 2):
        rest = math.sqrt(float(np.sum(x[i + 1:] ** 2)))
        if rest == 0.0 and x[i] == 0.0:
            break
        # atan2 keeps full precision near the poles, where acos does not
        theta[d - 2 - i] = math.atan2(rest, x[i])
    theta[0] = math.atan2(x[d - 1], x[d - 2]) % TWO_PI
    return PolarPoint(tuple(theta))


def antipode(p: PolarPoint) -> PolarPoint:
    """Polar coordinates of -xi."""
    t1 = (p.theta[0] + math.pi) % TWO_PI
    return PolarPoint((t1,) + tuple(math.pi - t for t in p.theta[1:]))


def geodesic_distance(x, y, m: ManifoldSpec | None = None) -> float:
    """Geodesic distance: arccos<x,y> on the sphere, 2 arccos|<x,y>| otherwise."""
    x = _unit(x)
    y = _unit(y)
    if x.size != y.size:
        raise DomainError("points of different dimension")
    # atan2 form stays accurate near 0 and pi, where arccos loses digits
    dist = 2 * math.atan2(np.linalg.norm(x - y), np.linalg.norm(x + y))
    if m is None or m.is_sphere:
        return dist
    return 2 * min(dist, math.pi - dist)


def _unit(x) -> np.ndarray:
    if isinstance(x, PolarPoint):
        return to_cartesian(x)
    x = np.asarray(x, dtype=float)
    if abs(np.linalg.norm(x) - 1.0) > POINT_TOL:
        raise DomainError(f"not a unit vector (|x| = {np.linalg.norm(x)})")
    return x


def random_points(d: int, n: int, seed: int = 0) -> list[PolarPoint]:
    """``n`` points uniform on S^{d-1}: normalised Gaussian vectors.

    Uses the counter-based Philox generator, so a seed fixes the sample.
    """
    rng = np.random.Generator(np.random.Philox(seed))
    g = rng.standard_normal((n, d))
    g /= np.linalg.norm(g, axis=1, keepdims=True)
    return [from_cartesian(v) for v in g]


def ck_log(m: ManifoldSpec, k: int) -> float:
    """log c_k for the addition formula on ``m``."""
    a, b = m.jacobi_params
    return (math.lgamma(b + 1) + math.log(2 * k + a + b + 1) + math.lgamma(k + a + b + 1)
            - math.lgamma(a + b + 2) - math.lgamma(k + b + 1))


def ck_constant(m: ManifoldSpec, k: int) -> float:
    """Addition-formula constant c_k for the manifold ``m``."""
    if k < 0:
        raise DomainError(f"k must be >= 0, got {k}")
    return math.exp(ck_log(m, k))


# -- vectorised evaluation --------------------------------------------------

def _angles(points) -> np.ndarray:
    if isinstance(points, PolarPoint):
        points = [points]
    arr = np.array([p.theta if isinstance(p, PolarPoint) else p for p in points],
                   dtype=float)
    if arr.ndim != 2:
        raise DomainError("points must share one dimension")
    return arr


def _level_table(j: int, kmax: int, theta: np.ndarray) -> np.ndarray:
    """T[L, ell + off, point] = ptilde(j, L, ell, theta) for 0 <= L <= kmax.

    ``off`` is kmax at j = 2 (negative ell allowed) and 0 otherwise.
    """
    neg = j == 2
    off = kmax if neg else 0
    table = np.zeros((kmax + 1, kmax + 1 + off, theta.size))
    sin_t = _sin_exact(theta.copy())
    cos_t = np.cos(theta)
    const = normalization_constant(j)
    for m in range(kmax + 1):
        mu = m + (j - 2) / 2
        sin_pow = const * np.power(sin_t, m)
        p0 = np.ones_like(cos_t)
        p1 = (mu + 1) + (mu + 1) * (cos_t - 1)
        for L in range(m, kmax + 1):
            n = L - m
            if n == 0:
                poly = p0
            elif n == 1:
                poly = p1
            else:
                s = 2 * n + 2 * mu
                c1 = 2 * n * (n + 2 * mu) * (s - 2)
                c3 = 2 * (n + mu - 1) ** 2 * s
                poly = ((s - 1) * s * (s - 2) * cos_t * p1 - c3 * p0) / c1
                p0, p1 = p1, poly
            log_scale = (_log_jc(j, L, m) + math.lgamma(L - m + 1) - mu * LOG2
                         - math.lgamma(L + j / 2))
            row = math.exp(log_scale) * sin_pow * poly
            table[L, m + off] = row
            if neg and m:
                table[L, off - m] = -row if m % 2 else row
    return table


class HarmonicEvaluator:
    """Evaluates many harmonics at a fixed point set, sharing per-level tables."""

    def __init__(self, d: int, kmax: int, points):
        self.theta = _angles(points)
        if self.theta.shape[1] != d - 1:
            raise DomainError(f"points have dimension {self.theta.shape[1] + 1}, expected {d}")
        self.d = d
        self.kmax = kmax
        self.tables = {j: _level_table(j, kmax, self.theta[:, j - 1])
                       for j in range(2, d)}
        self._phase_theta = self.theta[:, 0]

    def matrix(self, indices) -> np.ndarray:
        """Complex array B[a, point] = Y_a(point)."""
        idx = np.asarray([tuple(a) for a in indices], dtype=np.int64).reshape(-1, self.d - 1)
        if idx.size and idx[:, -1].max() > self.kmax:
            raise DomainError("index degree exceeds evaluator kmax")
        out = np.exp(1j * np.outer(idx[:, 0], self._phase_theta)) / math.sqrt(TWO_PI)
        for j in range(2, self.d):
            off = self.kmax if j == 2 else 0
            out = out * self.tables[j][idx[:, j - 1], idx[:, j - 2] + off]
        return out


def harmonic_matrix(indices: Sequence, points, d: int | None = None) -> np.ndarray:
    """B[a, point] = Y_a(point) for a list of multi-indices and points."""
    indices = list(indices)
    theta = _angles(points)
    if d is None:
        d = theta.shape[1] + 1
    kmax = max((tuple(a)[-1] for a in indices), default=0)
    return HarmonicEvaluator(d, kmax, theta).matrix(indices)


def eval_harmonic(a, p: PolarPoint) -> complex:
    """Value Y_a(p) of one spherical harmonic."""
    if not isinstance(a, MultiIndex):
        a = MultiIndex(tuple(a))
    if a.d != p.d:
        raise DomainError(f"index is for d={a.d}, point for d={p.d}")
    return complex(harmonic_matrix([a], [p])[0, 0])


def zonal_sums(d: int, k: int, points_p, points_q) -> np.ndarray:
    """Sum over tau_k of Y_a(p_i) conj(Y_a(q_i)), for paired point lists."""
    theta_p = _angles(points_p)
    theta_q = _angles(points_q)
    if theta_p.shape != theta_q.shape:
        raise DomainError("point lists must have equal length")
    n = theta_p.shape[0]
    ev = HarmonicEvaluator(d, k, np.vstack([theta_p, theta_q]))
    B = ev.matrix(list(iter_tau(d, k)))
    return np.einsum("ai,ai->i", B[:, :n], B[:, n:].conj())


def zonal_sum(d: int, k: int, p: PolarPoint, q: PolarPoint) -> complex:
    """Left-hand side of the addition formula for one point pair."""
    return complex(zonal_sums(d, k, [p], [q])[0])


def addition_rhs(d: int, k: int, p: PolarPoint, q: PolarPoint) -> float:
    """c_k P_k^{(a,a)}(cos dist(p, q)) on S^{d-1}."""
    m = ManifoldSpec.sphere(d)
    t = math.cos(geodesic_distance(p, q))
    return ck_constant(m, k) * jacobi_p(k, m.jacobi_params, t)


def addition_formula_errors(d: int, k_max: int, pairs: int = 50, seed: int = 0,
                            perturb: float = 0.0) -> list[float]:
    """Max relative error |zonal - c_k P_k(cos dist)| / |c_k P_k(cos dist)| per degree.

    Uses ``pairs`` seeded random point pairs; ``perturb`` scales c_k by
    (1 + perturb) as a sensitivity control.
    """
    pts = random_points(d, 2 * pairs, seed)
    P, Q = pts[:pairs], pts[pairs:]
    m = ManifoldSpec.sphere(d)
    t = np.array([math.cos(geodesic_distance(p, q)) for p, q in zip(P, Q)])
    errs = []
    for k in range(k_max + 1):
        lhs = zonal_sums(d, k, P, Q)
        rhs = ck_constant(m, k) * (1 + perturb) * jacobi_p(k, m.jacobi_params, t)
        errs.append(float(np.max(np.abs(lhs - rhs) / np.abs(rhs))))
    return errs


def sphere_quadrature(d: int, n: int):
    """Product rule on S^{d-1} exact for the harmonic products used here.

    Trapezoid with ``n`` nodes in theta_1 and Gauss-Jacobi with weight
    (1 - x^2)^{(j-2)/2} in x = cos(theta_j). The weights sum to one, so
    sum(w * f) approximates (1/Vol) * integral of f.

    Returns
    -------
    points : ndarray, shape (n_nodes, d - 1)
        Polar angles.
    weights : ndarray, shape (n_nodes,)
    """
    from scipy.special import roots_jacobi

    axes = [np.arange(n) * TWO_PI / n]
    wts = [np.full(n, 1.0 / n)]
    for j in range(2, d):
        x, w = roots_jacobi(n, (j - 2) / 2, (j - 2) / 2)
        axes.append(np.arccos(x))
        wts.append(w / w.sum())
    grids = np.meshgrid(*axes, indexing="ij")
    wgrid = np.meshgrid(*wts, indexing="ij")
    pts = np.stack([g.ravel() for g in grids], axis=1)
    weights = np.prod(np.stack([g.ravel() for g in wgrid], axis=1), axis=1)
    return pts, weights


def quadrature_gram(d: int, kmax: int) -> tuple[list[MultiIndex], np.ndarray]:
    """Quadrature approximation of (1/Vol) integral Y_a conj(Y_b), all degrees <= kmax."""
    indices = [a for k in range(kmax + 1) for a in enumerate_tau(d, k)]
    pts, w = sphere_quadrature(d, 2 * kmax + 2)
    B = HarmonicEvaluator(d, kmax, pts).matrix(indices)
    G = (B * w) @ B.conj().T
    return indices, G


__all__ = [
    "MultiIndex", "PolarPoint", "HarmonicEvaluator", "dim_harmonic", "iter_tau",
    "enumerate_tau", "enumerate_tau_jzero", "tau_jzero_size", "to_cartesian",
    "from_cartesian", "antipode", "random_points", "geodesic_distance", "ck_constant", "ck_log",
    "harmonic_matrix", "eval_harmonic", "zonal_sum", "zonal_sums", "addition_rhs",
    "sphere_quadrature", "quadrature_gram", "addition_formula_errors",
]

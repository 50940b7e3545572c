"""Jacobi, Gegenbauer and Ferrers (associated Legendre) functions.

Every Gamma-function ratio is formed in log space so degrees of several
hundred do not overflow. Polynomial values come from the three-term
recurrence, which is stable on [-1, 1].
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

LOG2 = math.log(2.0)


class DomainError(ValueError):
    """An argument lies outside the domain of the function."""


def log_gamma(x: float) -> float:
    """Natural log of Gamma(x) for x > 0."""
    if not x > 0 or not math.isfinite(x):
        raise DomainError(f"log_gamma requires finite x > 0, got {x!r}")
    return math.lgamma(x)


@dataclass(frozen=True)
class JacobiParams:
    """Parameters (alpha, beta) of the Jacobi family P_k^(alpha, beta)."""

    alpha: float
    beta: float

    def __post_init__(self):
        if not (math.isfinite(self.alpha) and math.isfinite(self.beta)):
            raise DomainError("Jacobi parameters must be finite")
        if self.alpha < -0.5 or self.beta < -1.0:
            raise DomainError(
                f"need alpha >= -1/2 and beta >= -1, got ({self.alpha}, {self.beta})")

    def __iter__(self):
        yield self.alpha
        yield self.beta

    def swapped(self) -> JacobiParams:
        return JacobiParams(self.beta, self.alpha)


class Family(enum.Enum):
    SPHERE = "sphere"
    REAL_PROJECTIVE = "real_projective"
    COMPLEX_PROJECTIVE = "complex_projective"
    QUATERNION_PROJECTIVE = "quaternion_projective"
    CAYLEY = "cayley"


_BETA = {
    Family.REAL_PROJECTIVE: -0.5,
    Family.COMPLEX_PROJECTIVE: 0.0,
    Family.QUATERNION_PROJECTIVE: 1.0,
    Family.CAYLEY: 3.0,
}


@dataclass(frozen=True)
class ManifoldSpec:
    """A compact two-point homogeneous space S^{d-1} or P^{d-1}(.).

    The Cayley plane P^16(Cay) corresponds to d = 17; ``cayley()`` builds it.
    """

    family: Family
    d: int

    def __post_init__(self):
        if isinstance(self.family, str):
            object.__setattr__(self, "family", Family(self.family))
        if int(self.d) != self.d or self.d < 3:
            raise DomainError(f"d must be an integer >= 3, got {self.d!r}")

    @classmethod
    def sphere(cls, d: int) -> ManifoldSpec:
        return cls(Family.SPHERE, d)

    @classmethod
    def cayley(cls) -> ManifoldSpec:
        return cls(Family.CAYLEY, 17)

    @property
    def is_sphere(self) -> bool:
        return self.family is Family.SPHERE

    @property
    def jacobi_params(self) -> JacobiParams:
        alpha = (self.d - 3) / 2
        beta = alpha if self.is_sphere else _BETA[self.family]
        return JacobiParams(alpha, beta)


def _as_params(p) -> tuple[float, float]:
    if isinstance(p, JacobiParams):
        return p.alpha, p.beta
    a, b = p
    return float(a), float(b)


def _check_unit_interval(x, closed=True):
    x = np.asarray(x, dtype=float)
    if closed:
        bad = np.abs(x) > 1.0 + 1e-12
    else:
        bad = np.abs(x) >= 1.0
    if np.any(bad) or np.any(np.isnan(x)):
        raise DomainError("argument outside [-1, 1]" if closed else "argument outside (-1, 1)")
    return np.clip(x, -1.0, 1.0)


def _jacobi_recurrence(n: int, a: float, b: float, x: np.ndarray) -> np.ndarray:
    p0 = np.ones_like(x)
    if n == 0:
        return p0
    p1 = (a + 1) + (a + b + 2) * (x - 1) / 2
    for m in range(2, n + 1):
        s = 2 * m + a + b
        c1 = 2 * m * (m + a + b) * (s - 2)
        c2 = (s - 1) * (s * (s - 2) * x + a * a - b * b)
        c3 = 2 * (m + a - 1) * (m + b - 1) * s
        p0, p1 = p1, (c2 * p1 - c3 * p0) / c1
    return p1


def jacobi_p(k: int, params, x):
    """Jacobi polynomial P_k^(alpha, beta)(x) on [-1, 1].

    Parameters
    ----------
    k : int
        Degree, k >= 0.
    params : JacobiParams or (alpha, beta)
    x : float or array_like
        Evaluation points in [-1, 1].

    Returns
    -------
    float or ndarray
        Normalised so that P_k(1) = Gamma(k+alpha+1) / (Gamma(k+1) Gamma(alpha+1)).
    """
    if int(k) != k or k < 0:
        raise DomainError(f"degree must be a non-negative integer, got {k!r}")
    a, b = _as_params(params)
    scalar = np.ndim(x) == 0
    xs = _check_unit_interval(x)
    out = _jacobi_recurrence(int(k), a, b, np.atleast_1d(xs))
    return float(out[0]) if scalar else out


def jacobi_at_one(k: int, params) -> float:
    """log P_k^(alpha, beta)(1) from the Gamma closed form."""
    if int(k) != k or k < 0:
        raise DomainError(f"degree must be a non-negative integer, got {k!r}")
    a, _ = _as_params(params)
    return math.lgamma(k + a + 1) - math.lgamma(k + 1) - math.lgamma(a + 1)


def gegenbauer_c(n: int, lam: float, x):
    """Gegenbauer polynomial C_n^lam(x), computed through its Jacobi form."""
    if not lam > 0:
        raise DomainError(f"Gegenbauer parameter must be positive, got {lam!r}")
    if int(n) != n or n < 0:
        raise DomainError(f"degree must be a non-negative integer, got {n!r}")
    log_scale = (math.lgamma(2 * lam + n) + math.lgamma(lam + 0.5)
                 - math.lgamma(2 * lam) - math.lgamma(lam + 0.5 + n))
    return math.exp(log_scale) * jacobi_p(n, (lam - 0.5, lam - 0.5), x)


def _integer_gap(nu: float, mu: float) -> int:
    gap = nu - mu
    n = round(gap)
    if abs(gap - n) > 1e-12 or n < 0:
        raise DomainError(f"nu - mu must be a non-negative integer, got {gap!r}")
    return int(n)


def legendre_neg_order(nu: float, mu: float, x):
    """Ferrers function of negative order P_nu^{-mu}(x) on (-1, 1).

    Valid for nu >= mu >= 0 with nu - mu a non-negative integer, which covers
    both integer and half-integer (nu, mu). Uses

        P_nu^{-mu}(x) = (1-x^2)^{mu/2} Gamma(nu-mu+1) / (2^mu Gamma(nu+1))
                        * P_{nu-mu}^{(mu, mu)}(x).
    """
    if mu < 0:
        raise DomainError(f"order mu must be >= 0, got {mu!r}")
    n = _integer_gap(nu, mu)
    scalar = np.ndim(x) == 0
    xs = np.atleast_1d(_check_unit_interval(x, closed=False))
    log_scale = math.lgamma(n + 1) - mu * LOG2 - math.lgamma(nu + 1)
    out = (np.power(1 - xs * xs, mu / 2) * math.exp(log_scale)
           * _jacobi_recurrence(n, mu, mu, xs))
    return float(out[0]) if scalar else out


def ferrers_p(degree: int, order: int, x):
    """Ferrers function P_degree^order(x) for integers |order| <= degree.

    Positive orders are reached through
    P_n^m = (-1)^m Gamma(n+m+1)/Gamma(n-m+1) P_n^{-m}. The Condon-Shortley
    phase is included, matching ``scipy.special.lpmv``.
    """
    if int(degree) != degree or int(order) != order or abs(order) > degree:
        raise DomainError(f"need integers with |order| <= degree, got ({degree}, {order})")
    m = abs(int(order))
    n = int(degree)
    scalar = np.ndim(x) == 0
    xs = np.atleast_1d(_check_unit_interval(x))
    if order <= 0:
        log_scale = math.lgamma(n - m + 1) - m * LOG2 - math.lgamma(n + 1)
        sign = 1.0
    else:
        log_scale = math.lgamma(n + m + 1) - m * LOG2 - math.lgamma(n + 1)
        sign = -1.0 if m % 2 else 1.0
    out = (sign * np.power(1 - xs * xs, m / 2) * math.exp(log_scale)
           * _jacobi_recurrence(n - m, m, m, xs))
    return float(out[0]) if scalar else out


def literal_normalization_constant(j: int) -> float:
    """Leading constant (pi Gamma(j/2) / Gamma((j+1)/2))^{1/2} exactly as printed."""
    return math.sqrt(math.pi * math.exp(math.lgamma(j / 2) - math.lgamma((j + 1) / 2)))


def normalization_constant(j: int) -> float:
    """Leading constant of the level-j factor actually used by ``ptilde``.

    Chosen so that, together with the 1/sqrt(2 pi) azimuthal factor, each
    truncated product over levels 2..j is an orthonormal harmonic on S^j with
    respect to the probability measure sigma / Vol(S^j). The printed constant
    does not satisfy the addition formula (see ``literal_normalization_constant``).
    """
    if j < 2:
        raise DomainError(f"level j must be >= 2, got {j}")
    # integral of sin^{j-1} over [0, pi]
    w = math.sqrt(math.pi) * math.exp(math.lgamma(j / 2) - math.lgamma((j + 1) / 2))
    if j == 2:
        w *= 2 * math.pi
    return math.sqrt(w)


def _log_jc(j: int, L: int, m: int) -> float:
    return 0.5 * (math.log((2 * L + j - 1) / 2)
                  + math.lgamma(L + m + j - 1) - math.lgamma(L - m + 1))


def _check_ptilde_indices(j: int, L: int, ell: int):
    if int(j) != j or j < 2:
        raise DomainError(f"level j must be an integer >= 2, got {j!r}")
    if int(L) != L or int(ell) != ell:
        raise DomainError("L and ell must be integers")
    if j == 2:
        if L < abs(ell):
            raise DomainError(f"need L >= |ell| at j = 2, got L={L}, ell={ell}")
    elif not L >= ell >= 0:
        raise DomainError(f"need L >= ell >= 0 at j = {j}, got L={L}, ell={ell}")


def _sin_exact(theta: np.ndarray) -> np.ndarray:
    s = np.sin(theta)
    s[(theta == 0.0) | (theta == math.pi)] = 0.0
    return np.abs(s)


def ptilde(j: int, L: int, ell: int, theta):
    """Normalised level-j factor of the spherical harmonics, as a function of theta.

    Equals ``normalization_constant(j) * jc * sin(theta)^{(2-j)/2}
    * P_{L+(j-2)/2}^{-(ell+(j-2)/2)}(cos theta)``. The sine power is folded
    into the Jacobi form, leaving ``sin(theta)^ell`` times a polynomial in
    cos(theta), so the poles theta = 0, pi need no limit handling. Negative
    ``ell`` (only at j = 2) follows ``(-1)^m ptilde(2, L, m, theta)``.
    """
    _check_ptilde_indices(j, L, ell)
    theta_arr = np.atleast_1d(np.asarray(theta, dtype=float))
    if np.any(theta_arr < -1e-12) or np.any(theta_arr > math.pi + 1e-12):
        raise DomainError("theta must lie in [0, pi]")
    theta_arr = np.clip(theta_arr, 0.0, math.pi)
    out = _ptilde_values(int(j), int(L), int(ell), theta_arr)
    return float(out[0]) if np.ndim(theta) == 0 else out


def _ptilde_values(j: int, L: int, ell: int, theta: np.ndarray,
                   sin_t: np.ndarray | None = None, cos_t: np.ndarray | None = None):
    m = abs(ell)
    mu = m + (j - 2) / 2
    if sin_t is None:
        sin_t = _sin_exact(theta)
    if cos_t is None:
        cos_t = np.cos(theta)
    log_scale = (_log_jc(j, L, m) + math.lgamma(L - m + 1) - mu * LOG2
                 - math.lgamma(L + j / 2))
    out = (normalization_constant(j) * math.exp(log_scale) * np.power(sin_t, m)
           * _jacobi_recurrence(L - m, mu, mu, cos_t))
    if ell < 0 and m % 2:
        out = -out
    return out

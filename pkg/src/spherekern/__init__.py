"""Non-isotropic positive definite kernels on spheres built from spherical harmonics."""
from .special_fn import (
    DomainError,
    Family,
    JacobiParams,
    ManifoldSpec,
    ferrers_p,
    gegenbauer_c,
    jacobi_at_one,
    jacobi_p,
    legendre_neg_order,
    log_gamma,
    normalization_constant,
    ptilde,
)
from .harmonics import (
    MultiIndex,
    PolarPoint,
    antipode,
    ck_constant,
    dim_harmonic,
    enumerate_tau,
    enumerate_tau_jzero,
    eval_harmonic,
    from_cartesian,
    geodesic_distance,
    random_points,
    to_cartesian,
    zonal_sum,
)
from .kernels import (
    CoefficientScheme,
    GramReport,
    Rule,
    Verdict,
    check_spd,
    gram_matrix,
    isotropic_kernel_eval,
    kernel_eval,
    pd_verdict,
    scheme_invariance_check,
    spd_witness_search,
)

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "Family",
    "JacobiParams",
    "ManifoldSpec",
    "ferrers_p",
    "gegenbauer_c",
    "jacobi_at_one",
    "jacobi_p",
    "legendre_neg_order",
    "log_gamma",
    "normalization_constant",
    "ptilde",
    "MultiIndex",
    "PolarPoint",
    "antipode",
    "ck_constant",
    "dim_harmonic",
    "enumerate_tau",
    "enumerate_tau_jzero",
    "eval_harmonic",
    "from_cartesian",
    "geodesic_distance",
    "random_points",
    "to_cartesian",
    "zonal_sum",
    "CoefficientScheme",
    "GramReport",
    "Rule",
    "Verdict",
    "check_spd",
    "gram_matrix",
    "isotropic_kernel_eval",
    "kernel_eval",
    "pd_verdict",
    "scheme_invariance_check",
    "spd_witness_search",
]

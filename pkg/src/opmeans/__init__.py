"""Operator means on positive definite matrices, the multiplicative
constants reversing their superadditivity-type inequalities, and a seeded
verification harness that checks every supported inequality chain in the
Loewner order on random instances."""

from .errors import (
    ConstraintViolation,
    DegenerateIntervalError,
    DimensionMismatch,
    DomainError,
    InvalidMeanError,
    NumericalDegeneracy,
    PreconditionError,
)
from .scalar_kernel import (
    MeanDescriptor,
    ReverseConstants,
    SpectralBounds,
    arithmetic,
    closed_form_weighted_constant,
    custom_mean,
    dual_descriptor,
    gamma_constant,
    geometric,
    harmonic,
    lee_constant,
    path_value,
    power_path,
    ratio_value,
    representing_value,
    secant_coefficients,
    standard_catalog,
    theorem25_constants,
    zeta_constant,
)
from .matrix_ops import (
    LoewnerVerdict,
    as_hermitian,
    as_hpd,
    hadamard_product,
    loewner_leq,
    mean,
    relative_spectral_bounds,
    spectral_map,
    tensor_product,
)
from .instances import (
    InstanceSpec,
    commuting_family_diagonals,
    random_commuting_family,
    random_constrained_pair,
    random_hpd,
    split_stream,
)
from .verifiers import (
    Link,
    TrialResult,
    VerificationReport,
    make_report,
    report_to_dict,
    verify_callebaut_chain,
    verify_gm_factorization,
    verify_hadamard_refinement,
    verify_milne_reverse,
    verify_path_monotonicity,
    verify_reverse_superadditivity,
    verify_scalar_daykin_chain,
    verify_scalar_lemma31,
    verify_superadditivity,
    verify_tensor_lemma32,
    verify_theorem22,
    verify_theorem25,
)
from .cli import SuiteConfig, run_suite

__version__ = "0.1.0"

__all__ = [
    "ConstraintViolation",
    "DegenerateIntervalError",
    "DimensionMismatch",
    "DomainError",
    "InvalidMeanError",
    "NumericalDegeneracy",
    "PreconditionError",
    "MeanDescriptor",
    "ReverseConstants",
    "SpectralBounds",
    "arithmetic",
    "closed_form_weighted_constant",
    "custom_mean",
    "dual_descriptor",
    "gamma_constant",
    "geometric",
    "harmonic",
    "lee_constant",
    "path_value",
    "power_path",
    "ratio_value",
    "representing_value",
    "secant_coefficients",
    "standard_catalog",
    "theorem25_constants",
    "zeta_constant",
    "LoewnerVerdict",
    "as_hermitian",
    "as_hpd",
    "hadamard_product",
    "loewner_leq",
    "mean",
    "relative_spectral_bounds",
    "spectral_map",
    "tensor_product",
    "InstanceSpec",
    "commuting_family_diagonals",
    "random_commuting_family",
    "random_constrained_pair",
    "random_hpd",
    "split_stream",
    "Link",
    "TrialResult",
    "VerificationReport",
    "make_report",
    "report_to_dict",
    "verify_callebaut_chain",
    "verify_gm_factorization",
    "verify_hadamard_refinement",
    "verify_milne_reverse",
    "verify_path_monotonicity",
    "verify_reverse_superadditivity",
    "verify_scalar_daykin_chain",
    "verify_scalar_lemma31",
    "verify_superadditivity",
    "verify_tensor_lemma32",
    "verify_theorem22",
    "verify_theorem25",
    "SuiteConfig",
    "run_suite",
]

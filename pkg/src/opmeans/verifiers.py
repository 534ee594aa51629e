"""Numerical certification of operator-mean inequality chains.

Each verify_* function builds both sides of one inequality (or identity)
from explicit matrix data, compares them in the Loewner order, and returns a
VerificationReport holding one trial with named links.  A link records the
smallest eigenvalue of (rhs - lhs): the link holds when that gap is no
smaller than -tol, where tol is scale-aware for matrix comparisons
(rel_tol * max of spectral norms and 1) and a flat 1e-12 for scalar ones.

Reverse-type verifiers accept constant_scale >= 1, which multiplies every
certified constant before use.  Inflating the constants must never break a
passing suite; tests use the knob to confirm each comparison is oriented
correctly.

Functions never repair bad instances: data violating a documented
hypothesis (order constraints, parameter regions) raises PreconditionError
or ConstraintViolation instead of producing a failed trial.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import (
    ConstraintViolation,
    DimensionMismatch,
    DomainError,
    PreconditionError,
)
from .matrix_ops import (
    as_hpd,
    hadamard_product,
    loewner_leq,
    mean,
    spectral_map,
    tensor_product,
)
from .scalar_kernel import (
    MeanDescriptor,
    SpectralBounds,
    arithmetic,
    closed_form_weighted_constant,
    dual_descriptor,
    gamma_constant,
    geometric,
    harmonic,
    lee_constant,
    power_path,
    theorem25_constants,
    zeta_constant,
)

__all__ = [
    "Link",
    "TrialResult",
    "VerificationReport",
    "make_report",
    "report_to_dict",
    "verify_superadditivity",
    "verify_reverse_superadditivity",
    "verify_callebaut_chain",
    "verify_path_monotonicity",
    "verify_theorem22",
    "verify_milne_reverse",
    "verify_theorem25",
    "verify_scalar_lemma31",
    "verify_tensor_lemma32",
    "verify_hadamard_refinement",
    "verify_gm_factorization",
    "verify_scalar_daykin_chain",
]

SCALAR_TOL = 1e-12
DEFAULT_REL_TOL = 1e-9


@dataclass(frozen=True)
class Link:
    """One comparison inside a trial: holds iff min_gap >= -tol."""

    name: str
    min_gap: float
    tol: float
    holds: bool


@dataclass(frozen=True)
class TrialResult:
    seed: Optional[int]
    dim: int
    n_terms: int
    params: dict
    links: tuple
    holds: bool
    # populated (with the full input matrices) only for failing trials,
    # so every reported failure can be replayed without the generator
    instance: Optional[dict] = None


@dataclass(frozen=True)
class VerificationReport:
    suite: str
    params: dict
    trials: tuple
    n_pass: int
    n_fail: int
    worst_gap: float
    tolerance_policy: str


def _policy(rel_tol: float) -> str:
    return (
        f"loewner links: min eig(rhs-lhs) >= -{rel_tol:g}*max(specnorm(lhs), specnorm(rhs), 1); "
        f"scalar links: absolute slack {SCALAR_TOL:g}"
    )


def make_report(suite: str, params: dict, trials: Sequence[TrialResult],
                rel_tol: float = DEFAULT_REL_TOL) -> VerificationReport:
    """Assemble trials into a report with pass/fail counts and worst gap."""
    trials = tuple(trials)
    n_pass = sum(1 for t in trials if t.holds)
    gaps = [l.min_gap for t in trials for l in t.links]
    worst = float(min(gaps)) if gaps else 0.0
    return VerificationReport(
        suite=suite,
        params=dict(params),
        trials=trials,
        n_pass=n_pass,
        n_fail=len(trials) - n_pass,
        worst_gap=worst,
        tolerance_policy=_policy(rel_tol),
    )


def report_to_dict(rep: VerificationReport) -> dict:
    """Plain-JSON rendering of a report (stable key set, builtin types)."""
    trials = []
    for t in rep.trials:
        doc = {
            "seed": t.seed,
            "dim": t.dim,
            "n_terms": t.n_terms,
            "params": t.params,
            "links": [
                {"name": l.name, "min_gap": l.min_gap, "tol": l.tol, "holds": l.holds}
                for l in t.links
            ],
            "holds": t.holds,
        }
        if t.instance is not None:
            doc["instance"] = t.instance
        trials.append(doc)
    return {
        "suite": rep.suite,
        "params": rep.params,
        "trials": trials,
        "summary": {
            "n_pass": rep.n_pass,
            "n_fail": rep.n_fail,
            "worst_gap": rep.worst_gap,
            "tolerance_policy": rep.tolerance_policy,
        },
    }


# ---------------------------------------------------------------------------
# link construction helpers


def _loewner_link(name: str, lhs: np.ndarray, rhs: np.ndarray, rel_tol: float) -> Link:
    v = loewner_leq(lhs, rhs, rel_tol)
    return Link(name, float(v.min_gap_eigenvalue), float(v.tolerance_used), bool(v.holds))


def _scalar_link(name: str, gap: float, tol: float = SCALAR_TOL) -> Link:
    gap = float(gap)
    return Link(name, gap, float(tol), bool(gap >= -tol))


def _equality_link(name: str, lhs: np.ndarray, rhs: np.ndarray, rel_tol: float) -> Link:
    scale = max(float(np.linalg.norm(rhs)), 1e-300)
    rel = float(np.linalg.norm(lhs - rhs)) / scale
    return Link(name, -rel, float(rel_tol), bool(rel <= rel_tol))


def _validate_pairs(pairs) -> tuple:
    if not pairs:
        raise PreconditionError("need at least one pair")
    dims = set()
    for a, b in pairs:
        a = np.asarray(a)
        b = np.asarray(b)
        if a.shape != b.shape:
            raise DimensionMismatch(f"pair shapes differ: {a.shape} vs {b.shape}")
        dims.add(a.shape)
    if len(dims) > 1:
        raise DimensionMismatch(f"pairs have mixed shapes: {sorted(dims)}")
    shape = dims.pop()
    return shape[0], len(pairs)


def _check_constrained(pairs, bounds: SpectralBounds, rel_tol: float) -> None:
    for j, (a, b) in enumerate(pairs):
        a = as_hpd(a)
        b = as_hpd(b)
        low = loewner_leq(bounds.m * a, b, rel_tol)
        high = loewner_leq(b, bounds.M * a, rel_tol)
        if not (low.holds and high.holds):
            raise ConstraintViolation(
                f"pair {j} violates {bounds.m}*A <= B <= {bounds.M}*A "
                f"(gaps {low.min_gap_eigenvalue:.3e}, {high.min_gap_eigenvalue:.3e})"
            )


def _check_constant_scale(constant_scale: float) -> float:
    cs = float(constant_scale)
    if cs < 1.0:
        raise DomainError(f"constant_scale must be >= 1, got {cs}")
    return cs


def _sum_means(pairs, desc: MeanDescriptor) -> np.ndarray:
    return sum(mean(a, b, desc) for a, b in pairs)


def _gm(a, b) -> np.ndarray:
    return mean(a, b, geometric(0.5))


def _trial(links, dim, n_terms, params, seed=None) -> TrialResult:
    links = tuple(links)
    return TrialResult(
        seed=seed,
        dim=int(dim),
        n_terms=int(n_terms),
        params=dict(params),
        links=links,
        holds=all(l.holds for l in links),
    )


def _single(suite, links, dim, n_terms, params, rel_tol, seed=None) -> VerificationReport:
    return make_report(suite, params, [_trial(links, dim, n_terms, params, seed)], rel_tol)


# ---------------------------------------------------------------------------
# verifiers


def verify_superadditivity(pairs, desc: MeanDescriptor,
                           rel_tol: float = DEFAULT_REL_TOL,
                           seed: Optional[int] = None) -> VerificationReport:
    """Check sum_j (A_j sigma B_j) <= (sum A_j) sigma (sum B_j).

    Link: "superadditivity".  Holds for every mean and any positive pairs;
    with a single pair both sides coincide.
    """
    dim, n = _validate_pairs(pairs)
    lhs = _sum_means(pairs, desc)
    rhs = mean(sum(a for a, _ in pairs), sum(b for _, b in pairs), desc)
    params = {"mean": desc.describe()}
    links = [_loewner_link("superadditivity", lhs, rhs, rel_tol)]
    return _single("superadditivity", links, dim, n, params, rel_tol, seed)


def verify_reverse_superadditivity(pairs, desc: MeanDescriptor, bounds: SpectralBounds,
                                   rel_tol: float = DEFAULT_REL_TOL,
                                   constant_scale: float = 1.0,
                                   seed: Optional[int] = None) -> VerificationReport:
    """Check gamma * sum_j (A_j sigma B_j) >= (sum A_j) sigma (sum B_j).

    Requires every pair to satisfy m*A_j <= B_j <= M*A_j (violations raise
    ConstraintViolation).  gamma comes from gamma_constant on [m, M].
    Links: "reverse_superadditivity", plus, for weighted geometric means,
    the scalar cross-check "gamma_matches_closed_form" at 1e-7.
    """
    cs = _check_constant_scale(constant_scale)
    dim, n = _validate_pairs(pairs)
    _check_constrained(pairs, bounds, rel_tol)
    g = gamma_constant(desc, bounds)
    lhs = mean(sum(a for a, _ in pairs), sum(b for _, b in pairs), desc)
    rhs = (g * cs) * _sum_means(pairs, desc)
    params = {
        "mean": desc.describe(),
        "m": bounds.m,
        "M": bounds.M,
        "gamma": float(g),
        "constant_scale": cs,
    }
    links = [_loewner_link("reverse_superadditivity", lhs, rhs, rel_tol)]
    if desc.kind == "geometric":
        cf = closed_form_weighted_constant(desc.w, bounds)
        params["closed_form_gamma"] = float(cf)
        links.append(_scalar_link("gamma_matches_closed_form", -abs(g - cf), 1e-7))
    return _single("reverse_superadditivity", links, dim, n, params, rel_tol, seed)


def verify_callebaut_chain(pairs, desc: MeanDescriptor,
                           rel_tol: float = DEFAULT_REL_TOL,
                           seed: Optional[int] = None) -> VerificationReport:
    """Check the two-link interpolation chain through a mean and its dual:

        sum_j (A_j # B_j)
            <= (sum A_j sigma B_j) # (sum A_j sigma' B_j)
            <= (sum A_j) # (sum B_j)

    where # is the geometric mean and sigma' the dual of sigma.
    Links: "chain_lower", "chain_upper".  With one pair both links are
    equalities because (A sigma B) # (A sigma' B) = A # B.
    """
    dim, n = _validate_pairs(pairs)
    dual = dual_descriptor(desc)
    sharp_sum = sum(_gm(a, b) for a, b in pairs)
    mid = _gm(_sum_means(pairs, desc), _sum_means(pairs, dual))
    right = _gm(sum(a for a, _ in pairs), sum(b for _, b in pairs))
    params = {"mean": desc.describe()}
    links = [
        _loewner_link("chain_lower", sharp_sum, mid, rel_tol),
        _loewner_link("chain_upper", mid, right, rel_tol),
    ]
    return _single("callebaut_chain", links, dim, n, params, rel_tol, seed)


def verify_path_monotonicity(pairs, t: float, s: float,
                             rel_tol: float = DEFAULT_REL_TOL,
                             seed: Optional[int] = None) -> VerificationReport:
    """Check that the paired geometric mean shrinks toward the center of the
    weighted-geometric path:

        (sum A #_s B) # (sum A #_{1-s} B) <= (sum A #_t B) # (sum A #_{1-t} B)

    for s between t and 1-t.  Restricted to the r = 0 path, the family whose
    reflection t -> 1-t coincides with duality.  Link: "path_monotonicity".
    """
    t = float(t)
    s = float(s)
    lo, hi = min(t, 1.0 - t), max(t, 1.0 - t)
    if not lo - 1e-12 <= s <= hi + 1e-12:
        raise PreconditionError(f"s={s} is not between t={t} and 1-t={1-t}")
    dim, n = _validate_pairs(pairs)

    def paired(u):
        return _gm(_sum_means(pairs, power_path(0.0, u)),
                   _sum_means(pairs, power_path(0.0, 1.0 - u)))

    params = {"t": t, "s": s}
    links = [_loewner_link("path_monotonicity", paired(s), paired(t), rel_tol)]
    return _single("path_monotonicity", links, dim, n, params, rel_tol, seed)


def verify_theorem22(pairs, desc: MeanDescriptor, bounds: SpectralBounds,
                     rel_tol: float = DEFAULT_REL_TOL,
                     constant_scale: float = 1.0,
                     seed: Optional[int] = None) -> VerificationReport:
    """Check the three reversal facts around the mean/dual interpolation
    midpoint mid = (sum A sigma B) # (sum A sigma' B):

        (a) sqrt(gamma*zeta) * mid >= (sum A) # (sum B)
        (b) lee * sum_j (A_j # B_j) >= mid
        (c) lee * mid >= (sum A) # (sum B)

    with gamma, zeta from the chord maximizations of the representing
    function on [m, M] and lee the midpoint closed-form constant.  Links:
    "reverse_by_sqrt_gamma_zeta", "mid_under_lee_times_gm_sum",
    "reverse_by_lee".
    """
    cs = _check_constant_scale(constant_scale)
    dim, n = _validate_pairs(pairs)
    _check_constrained(pairs, bounds, rel_tol)
    g = gamma_constant(desc, bounds)
    z = zeta_constant(desc, bounds)
    sgz = math.sqrt(g * z) * cs
    lee = lee_constant(bounds) * cs
    dual = dual_descriptor(desc)
    mid = _gm(_sum_means(pairs, desc), _sum_means(pairs, dual))
    sharp_sum = sum(_gm(a, b) for a, b in pairs)
    right = _gm(sum(a for a, _ in pairs), sum(b for _, b in pairs))
    params = {
        "mean": desc.describe(),
        "m": bounds.m,
        "M": bounds.M,
        "gamma": float(g),
        "zeta": float(z),
        "sqrt_gamma_zeta": float(math.sqrt(g * z)),
        "lee_constant": float(lee_constant(bounds)),
        "constant_scale": cs,
    }
    links = [
        _loewner_link("reverse_by_sqrt_gamma_zeta", right, sgz * mid, rel_tol),
        _loewner_link("mid_under_lee_times_gm_sum", mid, lee * sharp_sum, rel_tol),
        _loewner_link("reverse_by_lee", right, lee * mid, rel_tol),
    ]
    return _single("theorem22", links, dim, n, params, rel_tol, seed)


def verify_milne_reverse(pairs, bounds: SpectralBounds,
                         rel_tol: float = DEFAULT_REL_TOL,
                         constant_scale: float = 1.0,
                         seed: Optional[int] = None) -> VerificationReport:
    """Check the reversal chain around the arithmetic/harmonic midpoint:

        lee * sum_j (A_j # B_j)
            >= (sum A_j nabla B_j) # (sum A_j ! B_j)
            >= (1 + sqrt(mM)) / sqrt((1+M)(1+m)) * (sum A) # (sum B)

    Links: "mid_under_lee_times_gm_sum", "milne_reverse".  constant_scale
    multiplies lee and divides the right-hand constant, which weakens both
    certificates consistently.
    """
    cs = _check_constant_scale(constant_scale)
    dim, n = _validate_pairs(pairs)
    _check_constrained(pairs, bounds, rel_tol)
    lee = lee_constant(bounds) * cs
    c_right = (1.0 + math.sqrt(bounds.m * bounds.M)) / math.sqrt(
        (1.0 + bounds.M) * (1.0 + bounds.m)
    )
    mid = _gm(_sum_means(pairs, arithmetic(0.5)), _sum_means(pairs, harmonic(0.5)))
    sharp_sum = sum(_gm(a, b) for a, b in pairs)
    right = _gm(sum(a for a, _ in pairs), sum(b for _, b in pairs))
    params = {
        "m": bounds.m,
        "M": bounds.M,
        "lee_constant": float(lee_constant(bounds)),
        "right_constant": float(c_right),
        "constant_scale": cs,
    }
    links = [
        _loewner_link("mid_under_lee_times_gm_sum", mid, lee * sharp_sum, rel_tol),
        _loewner_link("milne_reverse", (c_right / cs) * right, mid, rel_tol),
    ]
    return _single("milne_reverse", links, dim, n, params, rel_tol, seed)


def verify_theorem25(pairs, r: float, t: float, s: float, bounds: SpectralBounds,
                     rel_tol: float = DEFAULT_REL_TOL,
                     constant_scale: float = 1.0,
                     seed: Optional[int] = None) -> VerificationReport:
    """Check the reversal of the path comparison at positions s versus t:

        sqrt(gamma*zeta) * [(sum A m_{r,s} B) # (sum A m_{r,1-s} B)]
            >= (sum A m_{r,t} B) # (sum A m_{r,1-t} B)

    for s between t and 1-t, with constants from theorem25_constants at the
    recovered interpolation weight s0 = (s - 1 + t) / (2t - 1).

    The certificate is only valid for r >= 0; for r < 0 the inequality can
    genuinely fail and the link then reports holds=False.  Link:
    "reverse_path_comparison" (plus "midpoint_symmetry" when t = 1/2, where
    both sides must coincide and the constants are exactly 1).
    """
    cs = _check_constant_scale(constant_scale)
    r = float(r)
    t = float(t)
    s = float(s)
    dim, n = _validate_pairs(pairs)
    _check_constrained(pairs, bounds, rel_tol)
    lo, hi = min(t, 1.0 - t), max(t, 1.0 - t)
    if not lo - 1e-12 <= s <= hi + 1e-12:
        raise PreconditionError(f"s={s} is not between t={t} and 1-t={1-t}")
    if abs(2.0 * t - 1.0) < 1e-12:
        s0 = 0.5
    else:
        s0 = (s - 1.0 + t) / (2.0 * t - 1.0)
        s0 = min(max(s0, 0.0), 1.0)
    rc = theorem25_constants(r, t, s0, bounds)
    sgz = rc.sqrt_gamma_zeta * cs

    def paired(u):
        return _gm(_sum_means(pairs, power_path(r, u)),
                   _sum_means(pairs, power_path(r, 1.0 - u)))

    mid_s = paired(s)
    mid_t = paired(t)
    params = {
        "r": r,
        "t": t,
        "s": s,
        "s0": float(s0),
        "m": bounds.m,
        "M": bounds.M,
        "gamma": float(rc.gamma),
        "zeta": float(rc.zeta),
        "sqrt_gamma_zeta": float(rc.sqrt_gamma_zeta),
        "constant_scale": cs,
    }
    if r == 0.0 and abs(2.0 * t - 1.0) >= 1e-12:
        e1 = bounds.m ** (2.0 * t - 1.0)
        e2 = bounds.M ** (2.0 * t - 1.0)
        cf = closed_form_weighted_constant(s0, SpectralBounds(min(e1, e2), max(e1, e2)))
        params["closed_form_constant"] = float(cf)
        params["closed_form_abs_diff"] = float(abs(rc.sqrt_gamma_zeta - cf))
    links = [_loewner_link("reverse_path_comparison", mid_t, sgz * mid_s, rel_tol)]
    if abs(2.0 * t - 1.0) < 1e-12:
        links.append(_loewner_link("midpoint_symmetry", mid_s, mid_t, rel_tol))
    return _single("theorem25", links, dim, n, params, rel_tol, seed)


def _lemma31_gap(a: float, b: float, nu: float) -> float:
    """Signed slack rhs - lhs of the outside-weight two-term comparison."""
    a = float(a)
    b = float(b)
    nu = float(nu)
    if a <= 0.0 or b <= 0.0:
        raise DomainError("a and b must be positive")
    if 0.0 <= nu <= 1.0:
        raise PreconditionError(f"nu must lie outside [0, 1], got {nu}")
    lhs = (a + b) + 2.0 * (nu - 1.0) * (math.sqrt(a) - math.sqrt(b)) ** 2
    rhs = a**nu * b ** (1.0 - nu) + b**nu * a ** (1.0 - nu)
    return rhs - lhs


def verify_scalar_lemma31(a: float, b: float, nu: float) -> bool:
    """Truth of (a+b) + 2(nu-1)(sqrt(a)-sqrt(b))^2 <= a^nu b^(1-nu) + b^nu a^(1-nu)
    for positive a, b and nu outside [0, 1], within 1e-12 absolute slack."""
    return bool(_lemma31_gap(a, b, nu) >= -SCALAR_TOL)


def _check_refinement_region(s: float, t: float) -> float:
    s = float(s)
    t = float(t)
    if s == 0.5:
        raise PreconditionError("s = 1/2 is excluded (zero denominator in the weight)")
    upper = 1.0 >= t >= s > 0.5
    lower = 0.0 <= t <= s < 0.5
    if not (upper or lower):
        raise PreconditionError(
            f"(s, t) = ({s}, {t}) outside the admissible region "
            "(1 >= t >= s > 1/2 or 0 <= t <= s < 1/2)"
        )
    return (t - s) / (s - 0.5)


def verify_tensor_lemma32(a, b, s: float, t: float,
                          rel_tol: float = DEFAULT_REL_TOL,
                          seed: Optional[int] = None) -> VerificationReport:
    """Check the tensor-space refinement with coefficient c = (t-s)/(s-1/2):

        T(s) + c * (T(s) - 2 A^(1/2) (x) B^(1/2)) <= T(t),
        T(u) = A^u (x) B^(1-u) + A^(1-u) (x) B^u

    on the admissible region 1 >= t >= s > 1/2 or 0 <= t <= s < 1/2.
    Link: "tensor_refinement".
    """
    coeff = _check_refinement_region(s, t)
    a = as_hpd(a)
    b = as_hpd(b)

    def power_pair(u):
        au = spectral_map(a, lambda x: x**u)
        a1u = spectral_map(a, lambda x: x ** (1.0 - u))
        bu = spectral_map(b, lambda x: x**u)
        b1u = spectral_map(b, lambda x: x ** (1.0 - u))
        return tensor_product(au, b1u) + tensor_product(a1u, bu)

    half = tensor_product(spectral_map(a, np.sqrt), spectral_map(b, np.sqrt))
    ts = power_pair(float(s))
    lhs = ts + coeff * (ts - 2.0 * half)
    rhs = power_pair(float(t))
    params = {"s": float(s), "t": float(t), "coefficient": float(coeff)}
    links = [_loewner_link("tensor_refinement", lhs, rhs, rel_tol)]
    return _single("tensor_lemma32", links, a.shape[0], 1, params, rel_tol, seed)


def verify_hadamard_refinement(pairs, s: float, t: float,
                               rel_tol: float = DEFAULT_REL_TOL,
                               seed: Optional[int] = None) -> VerificationReport:
    """Check the entrywise-product refinement chain.  With

        X = (sum A #_s B) o (sum A #_{1-s} B)
        Y = (sum A # B)   o (sum A # B)
        Z = (sum A #_t B) o (sum A #_{1-t} B)
        c = (t - s) / (s - 1/2)

    the links are "refined_lower" X <= X + c(X - Y), "refined_upper"
    X + c(X - Y) <= Z, and "base_point" Y <= X, on the admissible region
    1 >= t >= s > 1/2 or 0 <= t <= s < 1/2.
    """
    coeff = _check_refinement_region(s, t)
    dim, n = _validate_pairs(pairs)
    s = float(s)
    t = float(t)
    sum_s = _sum_means(pairs, power_path(0.0, s))
    sum_1s = _sum_means(pairs, power_path(0.0, 1.0 - s))
    sum_t = _sum_means(pairs, power_path(0.0, t))
    sum_1t = _sum_means(pairs, power_path(0.0, 1.0 - t))
    sum_half = sum(_gm(a, b) for a, b in pairs)
    x = hadamard_product(sum_s, sum_1s)
    y = hadamard_product(sum_half, sum_half)
    z = hadamard_product(sum_t, sum_1t)
    mid = x + coeff * (x - y)
    params = {"s": s, "t": t, "coefficient": float(coeff)}
    links = [
        _loewner_link("refined_lower", x, mid, rel_tol),
        _loewner_link("refined_upper", mid, z, rel_tol),
        _loewner_link("base_point", y, x, rel_tol),
    ]
    return _single("hadamard_refinement", links, dim, n, params, rel_tol, seed)


def verify_gm_factorization(a, b, desc: MeanDescriptor,
                            rel_tol: float = 1e-10,
                            seed: Optional[int] = None) -> VerificationReport:
    """Check the identity (A sigma B) # (A sigma' B) = A # B (sigma' the
    dual of sigma) within rel_tol relative Frobenius error.
    Link: "factorization_identity"."""
    a = as_hpd(a)
    b = as_hpd(b)
    lhs = _gm(mean(a, b, desc), mean(a, b, dual_descriptor(desc)))
    rhs = _gm(a, b)
    params = {"mean": desc.describe()}
    links = [_equality_link("factorization_identity", lhs, rhs, rel_tol)]
    return _single("gm_factorization", links, a.shape[0], 1, params, DEFAULT_REL_TOL, seed)


_DAYKIN_GRID = (0.25, 0.5, 1.0, 2.0, 4.0)
_DAYKIN_SCALES = (0.5, 2.0, 3.7)


def _daykin_pair(pair: str, s):
    if pair == "callebaut":
        if s is None:
            raise PreconditionError("the callebaut pair needs the exponent s")
        s = float(s)
        if not 0.0 <= s <= 1.0:
            raise PreconditionError(f"s must lie in [0, 1], got {s}")

        def f(x, y):
            return x ** (1.0 + s) * y ** (1.0 - s)

        def g(x, y):
            return x ** (1.0 - s) * y ** (1.0 + s)

        return f, g
    if pair == "milne":

        def f(x, y):
            return x**2 + y**2

        def g(x, y):
            return (x**2 * y**2) / (x**2 + y**2)

        return f, g
    raise PreconditionError(f"unknown pair {pair!r} (expected 'callebaut' or 'milne')")


def verify_scalar_daykin_chain(xs, ys, pair: str, s=None,
                               seed: Optional[int] = None) -> VerificationReport:
    """Check a two-function refinement of the Cauchy-Schwarz inequality on
    positive sequences.

    For the chosen pair (f, g), the hypothesis conditions are sampled on a
    fixed grid: f*g = x^2 y^2, two-homogeneity f(lx, ly) = l^2 f(x, y), and
    the cross-ratio condition
    y f(x,1)/(x f(y,1)) + x f(y,1)/(y f(x,1)) <= x/y + y/x.  Then the chain

        (sum x_j y_j)^2 <= sum_j f(x_j, y_j) * sum_j g(x_j, y_j)
                        <= sum x_j^2 * sum y_j^2

    is checked on the data.  Pairs: "callebaut" (f = x^(1+s) y^(1-s)) and
    "milne" (f = x^2 + y^2).  Links: "hypothesis_product",
    "hypothesis_homogeneity", "hypothesis_cross_ratio", "chain_lower",
    "chain_upper".  All links are scalar with 1e-12 absolute slack.
    """
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    if xs.size == 0 or ys.size == 0:
        raise PreconditionError("sequences must be nonempty")
    if xs.shape != ys.shape or xs.ndim != 1:
        raise PreconditionError("sequences must be one-dimensional and equal length")
    if np.any(xs <= 0.0) or np.any(ys <= 0.0):
        raise DomainError("sequence entries must be positive")
    f, g = _daykin_pair(pair, s)

    gx, gy = np.meshgrid(np.asarray(_DAYKIN_GRID), np.asarray(_DAYKIN_GRID))
    gx, gy = gx.ravel(), gy.ravel()
    prod_defect = float(np.max(np.abs(f(gx, gy) * g(gx, gy) - gx**2 * gy**2)))
    homog_defect = 0.0
    for lam in _DAYKIN_SCALES:
        homog_defect = max(
            homog_defect,
            float(np.max(np.abs(f(lam * gx, lam * gy) - lam**2 * f(gx, gy)))),
        )
    ratio = (gy * f(gx, np.ones_like(gx))) / (gx * f(gy, np.ones_like(gy)))
    cross_gap = float(np.min((gx / gy + gy / gx) - (ratio + 1.0 / ratio)))

    total_fg = float(np.sum(f(xs, ys)) * np.sum(g(xs, ys)))
    lower = float(np.sum(xs * ys) ** 2)
    upper = float(np.sum(xs**2) * np.sum(ys**2))
    params = {"pair": pair, "n": int(xs.size)}
    if pair == "callebaut":
        params["s"] = float(s)
    links = [
        _scalar_link("hypothesis_product", -prod_defect),
        _scalar_link("hypothesis_homogeneity", -homog_defect),
        _scalar_link("hypothesis_cross_ratio", cross_gap),
        _scalar_link("chain_lower", total_fg - lower),
        _scalar_link("chain_upper", upper - total_fg),
    ]
    return _single("scalar_daykin_chain", links, 1, int(xs.size), params, DEFAULT_REL_TOL, seed)

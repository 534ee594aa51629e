"""Scalar side of the operator-mean machinery.

A normalized operator mean is determined by its representing function f,
positive on (0, inf) with f(1) = 1.  This module holds the catalog of
representing functions (arithmetic, geometric, harmonic, and the power
interpolation family), their duals, and the one-dimensional maximizations
that produce the multiplicative constants certifying reversed versions of
superadditivity-type inequalities on an interval [m, M].

All functions are pure and operate on floats or numpy arrays.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .errors import DegenerateIntervalError, DomainError, InvalidMeanError

__all__ = [
    "MeanDescriptor",
    "SpectralBounds",
    "ReverseConstants",
    "arithmetic",
    "geometric",
    "harmonic",
    "power_path",
    "custom_mean",
    "standard_catalog",
    "representing_value",
    "dual_descriptor",
    "path_value",
    "ratio_value",
    "secant_coefficients",
    "gamma_constant",
    "zeta_constant",
    "closed_form_weighted_constant",
    "lee_constant",
    "theorem25_constants",
]


# ---------------------------------------------------------------------------
# descriptors


@dataclass(frozen=True)
class MeanDescriptor:
    """A named mean given by its representing function.

    kind is one of "arithmetic", "geometric", "harmonic", "power_path",
    "custom".  The weight w applies to the second argument: the descriptor's
    function satisfies f(1) = 1 and f'(1) = w for the weighted catalog kinds.
    power_path carries the pair (r, t); custom carries a label and a raw
    function handle which is accepted as-is (no monotonicity screening).
    """

    kind: str
    w: float = 0.5
    r: Optional[float] = None
    t: Optional[float] = None
    label: Optional[str] = None
    fn: Optional[Callable] = field(default=None, compare=False)

    def describe(self) -> str:
        """Stable one-line rendering used in reports and CLI output."""
        if self.kind == "power_path":
            return f"power_path(r={self.r:g},t={self.t:g})"
        if self.kind == "custom":
            return f"custom({self.label})"
        return f"{self.kind}(w={self.w:g})"


def _check_weight(w: float) -> float:
    w = float(w)
    if not 0.0 <= w <= 1.0:
        raise DomainError(f"weight must lie in [0, 1], got {w}")
    return w


def arithmetic(w: float = 0.5) -> MeanDescriptor:
    """Weighted arithmetic mean, f(x) = 1 - w + w*x."""
    return MeanDescriptor("arithmetic", _check_weight(w))


def geometric(w: float = 0.5) -> MeanDescriptor:
    """Weighted geometric mean, f(x) = x**w."""
    return MeanDescriptor("geometric", _check_weight(w))


def harmonic(w: float = 0.5) -> MeanDescriptor:
    """Weighted harmonic mean, f(x) = 1 / (1 - w + w/x)."""
    return MeanDescriptor("harmonic", _check_weight(w))


def power_path(r: float, t: float) -> MeanDescriptor:
    """Interpolation path through the power mean of exponent r.

    The representing function is F(r, t, x) = (1 - t + t*x**r)**(1/r) for
    r != 0 and x**t for r = 0.  t = 0 gives the constant 1 (first argument),
    t = 1 gives x (second argument), t = 1/2 gives the symmetric power mean.
    """
    r = float(r)
    t = float(t)
    if not -1.0 <= r <= 1.0:
        raise DomainError(f"path exponent r must lie in [-1, 1], got {r}")
    if not 0.0 <= t <= 1.0:
        raise DomainError(f"path position t must lie in [0, 1], got {t}")
    return MeanDescriptor("power_path", t, r=r, t=t)


def custom_mean(label: str, fn: Callable) -> MeanDescriptor:
    """Wrap a user-supplied representing function.  No screening is done;
    reverse constants computed from it are only meaningful if fn is positive
    and concave on the interval of interest."""
    return MeanDescriptor("custom", 0.5, label=str(label), fn=fn)


def standard_catalog() -> tuple:
    """Descriptors exercised by default test sweeps: the three classical
    means at several weights plus four positions on power paths."""
    return (
        arithmetic(0.5),
        geometric(0.5),
        harmonic(0.5),
        arithmetic(0.3),
        geometric(0.25),
        harmonic(0.7),
        power_path(0.5, 0.3),
        power_path(-0.5, 0.7),
        power_path(1.0, 0.6),
        power_path(-1.0, 0.4),
    )


# ---------------------------------------------------------------------------
# bounds and constants containers


@dataclass(frozen=True)
class SpectralBounds:
    """An interval 0 < m <= M bounding B relative to A in the operator order."""

    m: float
    M: float

    def __post_init__(self):
        object.__setattr__(self, "m", float(self.m))
        object.__setattr__(self, "M", float(self.M))
        if not (0.0 < self.m <= self.M) or not math.isfinite(self.M):
            raise DomainError(f"bounds need 0 < m <= M, got ({self.m}, {self.M})")


@dataclass(frozen=True)
class ReverseConstants:
    """Chord coefficients and multiplicative constants for one mean on one
    interval: mu/nu describe the secant of f, gamma and zeta are the maxima
    of the two reversal objectives, sqrt_gamma_zeta their geometric mean."""

    mu: float
    nu: float
    gamma: float
    zeta: float
    sqrt_gamma_zeta: float

    def __post_init__(self):
        if self.gamma < 1.0 - 1e-12 or self.zeta < 1.0 - 1e-12:
            raise InvalidMeanError(
                f"reversal constants must be >= 1, got gamma={self.gamma}, zeta={self.zeta}"
            )
        prod = self.gamma * self.zeta
        if abs(self.sqrt_gamma_zeta**2 - prod) > 1e-12 * max(prod, 1.0):
            raise InvalidMeanError("sqrt_gamma_zeta is inconsistent with gamma*zeta")


# ---------------------------------------------------------------------------
# representing functions


def path_value(r: float, t: float, x):
    """Evaluate the power-path representing function F(r, t, x).

    Parameters
    ----------
    r : float in [-1, 1]
        Exponent of the underlying power mean; r = 0 is the geometric limit.
    t : float in [0, 1]
        Position along the path.
    x : float or ndarray, positive

    Returns
    -------
    float or ndarray, matching the shape of x.
    """
    r = float(r)
    t = float(t)
    if not -1.0 <= r <= 1.0:
        raise DomainError(f"path exponent r must lie in [-1, 1], got {r}")
    if not 0.0 <= t <= 1.0:
        raise DomainError(f"path position t must lie in [0, 1], got {t}")
    xs = np.asarray(x, dtype=float)
    if np.any(xs <= 0.0) or not np.all(np.isfinite(xs)):
        raise DomainError("path_value needs strictly positive finite x")
    # closed-form limits first so r=0 and the endpoints avoid 0**inf forms
    if t == 0.0:
        out = np.ones_like(xs)
    elif t == 1.0:
        out = xs.copy()
    elif r == 0.0:
        out = xs**t
    else:
        out = (1.0 - t + t * xs**r) ** (1.0 / r)
    if np.ndim(x) == 0:
        return float(out)
    return out


def ratio_value(r: float, t: float, x):
    """Ratio F(r, t, x) / F(r, 1-t, x) of a path value to its reflection.

    Constant 1 at t = 1/2; equals x**(2t-1) when r = 0.  Nondecreasing in x
    for t > 1/2 and nonincreasing for t < 1/2.
    """
    r = float(r)
    t = float(t)
    if not -1.0 <= r <= 1.0:
        raise DomainError(f"path exponent r must lie in [-1, 1], got {r}")
    if not 0.0 <= t <= 1.0:
        raise DomainError(f"path position t must lie in [0, 1], got {t}")
    xs = np.asarray(x, dtype=float)
    if np.any(xs <= 0.0) or not np.all(np.isfinite(xs)):
        raise DomainError("ratio_value needs strictly positive finite x")
    if t == 0.5:
        return 1.0 if np.ndim(x) == 0 else np.ones_like(xs)
    if r == 0.0:
        out = xs ** (2.0 * t - 1.0)
        return float(out) if np.ndim(x) == 0 else out
    num = path_value(r, t, x)
    den = path_value(r, 1.0 - t, x)
    return num / den


def representing_value(desc: MeanDescriptor, x):
    """Evaluate the representing function of a descriptor at x (> 0)."""
    xs = np.asarray(x, dtype=float)
    if np.any(xs <= 0.0) or not np.all(np.isfinite(xs)):
        raise DomainError("representing_value needs strictly positive finite x")
    kind = desc.kind
    if kind == "arithmetic":
        out = 1.0 - desc.w + desc.w * xs
    elif kind == "geometric":
        out = xs**desc.w
    elif kind == "harmonic":
        out = 1.0 / (1.0 - desc.w + desc.w / xs)
    elif kind == "power_path":
        return path_value(desc.r, desc.t, x)
    elif kind == "custom":
        out = np.asarray(desc.fn(xs), dtype=float)
    else:
        raise DomainError(f"unknown mean kind {kind!r}")
    if np.ndim(x) == 0:
        return float(out)
    return out


def dual_descriptor(desc: MeanDescriptor) -> MeanDescriptor:
    """Descriptor of the dual mean, whose function is g(x) = x / f(x).

    The catalog closes under duality: arithmetic(w) <-> harmonic(1-w),
    geometric(w) <-> geometric(1-w), power_path(r, t) <-> power_path(-r, 1-t).
    Applying the operation twice returns an equivalent descriptor.
    """
    kind = desc.kind
    if kind == "arithmetic":
        return harmonic(1.0 - desc.w)
    if kind == "harmonic":
        return arithmetic(1.0 - desc.w)
    if kind == "geometric":
        return geometric(1.0 - desc.w)
    if kind == "power_path":
        return power_path(-desc.r, 1.0 - desc.t)
    if kind == "custom":
        base = desc.fn
        return custom_mean(f"dual({desc.label})", lambda x, _f=base: np.asarray(x, float) / _f(x))
    raise DomainError(f"unknown mean kind {kind!r}")


# ---------------------------------------------------------------------------
# chord coefficients and the two maximization objectives


def secant_coefficients(desc: MeanDescriptor, b: SpectralBounds) -> tuple:
    """Coefficients (mu, nu) of the chord of f over [m, M].

    The affine map mu*x + nu agrees with f at both endpoints; for concave f
    it dominates f nowhere below and the ratio f/(chord) peaks inside.
    """
    if b.m >= b.M:
        raise DegenerateIntervalError("secant needs m < M strictly")
    fm = representing_value(desc, b.m)
    fM = representing_value(desc, b.M)
    span = b.M - b.m
    mu = (fM - fm) / span
    nu = (b.M * fm - b.m * fM) / span
    return float(mu), float(nu)


_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0
_GRID_POINTS = 4097


def _maximize_on_interval(objective, lo: float, hi: float) -> float:
    """Maximize a smooth vectorized objective on [lo, hi].

    Scans a 4097-point uniform grid, then refines the bracket around the best
    grid point by golden-section search until the bracket width falls below
    1e-12 times the interval length.  Returns the best value seen.
    """
    xs = np.linspace(lo, hi, _GRID_POINTS)
    vals = np.asarray(objective(xs), dtype=float)
    k = int(np.argmax(vals))
    best = float(vals[k])
    a = float(xs[max(k - 1, 0)])
    b = float(xs[min(k + 1, _GRID_POINTS - 1)])
    goal = 1e-12 * (hi - lo)

    def f1(x):
        return float(np.asarray(objective(np.asarray([x], dtype=float)))[0])

    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc = f1(c)
    fd = f1(d)
    best = max(best, fc, fd)
    while (b - a) > goal:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = f1(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = f1(d)
        best = max(best, fc, fd)
    return best


def gamma_constant(desc: MeanDescriptor, b: SpectralBounds) -> float:
    """Largest value of f(x) / (mu*x + nu) over [m, M].

    This is the factor by which the chord must be inflated to dominate f.
    It certifies gamma * sum_j (A_j sigma B_j) >= (sum A_j) sigma (sum B_j)
    whenever every pair obeys m*A_j <= B_j <= M*A_j.  Equals 1 exactly at
    both endpoints, so the result is always >= 1.
    """
    mu, nu = secant_coefficients(desc, b)

    def objective(xs):
        den = mu * xs + nu
        if np.any(den <= 0.0):
            raise InvalidMeanError("chord is not positive on [m, M]; "
                                   "representing function is not a positive concave mean here")
        return representing_value(desc, xs) / den

    return float(_maximize_on_interval(objective, b.m, b.M))


def zeta_constant(desc: MeanDescriptor, b: SpectralBounds) -> float:
    """Largest value of f(M)*f(m)*x / (f(x) * (nu*x + M*m*mu)) over [m, M].

    The companion constant playing the same certifying role for the dual
    mean.  Also 1 at both endpoints, hence >= 1.
    """
    mu, nu = secant_coefficients(desc, b)
    fm = representing_value(desc, b.m)
    fM = representing_value(desc, b.M)

    def objective(xs):
        fx = representing_value(desc, xs)
        den = fx * (nu * xs + b.M * b.m * mu)
        if np.any(den <= 0.0):
            raise InvalidMeanError("dual chord is not positive on [m, M]; "
                                   "representing function is not a positive concave mean here")
        return fM * fm * xs / den

    return float(_maximize_on_interval(objective, b.m, b.M))


def closed_form_weighted_constant(alpha: float, b: SpectralBounds) -> float:
    """Closed form of the reversal constant for the weighted geometric mean.

    For f(x) = x**alpha on [m, M] the maximization has the explicit value

        alpha**alpha * (M - m) * (M*m**alpha - m*M**alpha)**(alpha - 1)
        -----------------------------------------------------------------
        (1 - alpha)**(alpha - 1) * (M**alpha - m**alpha)**alpha

    alpha in {0, 1} returns 1: those weights select one argument and the
    reversed inequality is an identity.
    """
    alpha = float(alpha)
    if alpha == 0.0 or alpha == 1.0:
        return 1.0
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"alpha must lie in [0, 1], got {alpha}")
    m, M = b.m, b.M
    if m >= M:
        raise DegenerateIntervalError("closed form needs m < M strictly")
    num = alpha**alpha * (M - m) * (M * m**alpha - m * M**alpha) ** (alpha - 1.0)
    den = (1.0 - alpha) ** (alpha - 1.0) * (M**alpha - m**alpha) ** alpha
    return float(num / den)


def lee_constant(b: SpectralBounds) -> float:
    """(sqrt(M) + sqrt(m)) / (2 * (M*m)**(1/4)), the alpha = 1/2 closed form.

    Equals 1 exactly when m = M.
    """
    return float((math.sqrt(b.M) + math.sqrt(b.m)) / (2.0 * (b.M * b.m) ** 0.25))


def theorem25_constants(r: float, t: float, s0: float, b: SpectralBounds) -> ReverseConstants:
    """Reversal constants for comparing two reflected path geometric means.

    The comparison of (sum A m_{r,s} B) # (sum A m_{r,1-s} B) against the
    same expression at position t rests on the scalar function F(r, s0, .)
    over the interval swept by the ratio H(r, t, x) = F(r,t,x)/F(r,1-t,x)
    for x in [m, M].  This routine evaluates the generic chord/maximization
    machinery for exactly that function on exactly that interval:
    h1 = H(r,t,m), h2 = H(r,t,M), constants of F(r, s0, .) on
    [min(h1,h2), max(h1,h2)].

    When the swept interval collapses (|h1 - h2| < 1e-12, e.g. t = 1/2) the
    comparison is an identity and the constants are exactly 1.

    The certified inequality is valid for r >= 0.  For r < 0 the constant
    can undershoot (the two reflected path positions are then not dual to
    each other, and no inflation of this form is sufficient); verification
    suites will correctly report such violations.
    """
    s0 = float(s0)
    if not 0.0 <= s0 <= 1.0:
        raise DomainError(f"s0 must lie in [0, 1], got {s0}")
    if b.m >= b.M:
        raise DegenerateIntervalError("constants need m < M strictly")
    h1 = float(ratio_value(r, t, b.m))
    h2 = float(ratio_value(r, t, b.M))
    if abs(h1 - h2) < 1e-12:
        # equality regime: the two sides coincide, chord of a constant
        return ReverseConstants(0.0, float(path_value(r, s0, h1)), 1.0, 1.0, 1.0)
    inner = SpectralBounds(min(h1, h2), max(h1, h2))
    desc = power_path(r, s0)
    mu, nu = secant_coefficients(desc, inner)
    g = gamma_constant(desc, inner)
    z = zeta_constant(desc, inner)
    return ReverseConstants(mu, nu, g, z, math.sqrt(g * z))

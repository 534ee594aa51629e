"""Dense Hermitian spectral calculus.

Matrices are plain numpy complex128 arrays.  as_hermitian and as_hpd are the
validating constructors: they check the type invariants (conjugate symmetry
within round-off, strict positive definiteness) and return the symmetrized
array.  Every operation re-symmetrizes its result so round-off drift never
accumulates past the 1e-12 relative allowance.

Supported sizes are 1 <= n <= 64 for base matrices; tensor products may
reach 4096.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, DomainError, NumericalDegeneracy
from .scalar_kernel import MeanDescriptor, SpectralBounds, representing_value

__all__ = [
    "LoewnerVerdict",
    "as_hermitian",
    "as_hpd",
    "spectral_map",
    "mean",
    "tensor_product",
    "hadamard_product",
    "loewner_leq",
    "relative_spectral_bounds",
]

MAX_DIM = 64
MAX_TENSOR_DIM = 64 * 64

# input HPD gate: smallest eigenvalue must exceed this fraction of the largest
_HPD_INPUT_FLOOR = 1e-10
# computed results may carry round-off this deep below zero before we call
# the matrix genuinely indefinite
_HPD_REPAIR_FLOOR = 1e-13


@dataclass(frozen=True)
class LoewnerVerdict:
    """Outcome of a one-sided comparison A <= B in the Loewner order."""

    holds: bool
    min_gap_eigenvalue: float
    scale: float
    tolerance_used: float


def _resym(a: np.ndarray) -> np.ndarray:
    return (a + a.conj().T) / 2.0


def as_hermitian(a, max_dim: int = MAX_DIM) -> np.ndarray:
    """Validate and symmetrize a square matrix.

    Accepts anything convertible to a complex ndarray.  Raises DomainError if
    the array is not square, the dimension is outside [1, max_dim], or the
    conjugate-symmetry defect exceeds 1e-12 of the Frobenius norm.
    """
    a = np.asarray(a, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DomainError(f"expected a square matrix, got shape {a.shape}")
    n = a.shape[0]
    if not 1 <= n <= max_dim:
        raise DimensionMismatch(f"dimension {n} outside supported range [1, {max_dim}]")
    if not (np.all(np.isfinite(a.real)) and np.all(np.isfinite(a.imag))):
        raise DomainError("matrix entries must be finite")
    norm = np.linalg.norm(a)
    defect = np.linalg.norm(a - a.conj().T)
    if defect > 1e-12 * max(norm, 1e-300):
        raise DomainError(
            f"matrix is not Hermitian: asymmetry {defect:.3e} exceeds 1e-12 of norm {norm:.3e}"
        )
    return _resym(a)


def as_hpd(a, max_dim: int = MAX_DIM) -> np.ndarray:
    """Validate a Hermitian positive definite input matrix.

    The definiteness gate is relative: the smallest eigenvalue must exceed
    1e-10 times the largest.  Matrices worse conditioned than that are
    rejected as numerically degenerate inputs.
    """
    h = as_hermitian(a, max_dim=max_dim)
    w = np.linalg.eigvalsh(h)
    lmax = float(w[-1])
    if lmax <= 0.0 or float(w[0]) <= _HPD_INPUT_FLOOR * lmax:
        raise NumericalDegeneracy(
            f"matrix is not safely positive definite: eigenvalue range [{w[0]:.3e}, {lmax:.3e}]"
        )
    return h


def _repair_hpd(a: np.ndarray) -> np.ndarray:
    """Clamp round-off negativity in a computed result that is positive
    definite in exact arithmetic.

    Eigenvalues in (-1e-13*lmax, 0] are lifted to +1e-13*lmax; anything at or
    below -1e-13*lmax means the computation genuinely lost definiteness and
    raises instead of being papered over.
    """
    h = _resym(a)
    w, v = np.linalg.eigh(h)
    lmax = float(w[-1])
    if lmax <= 0.0:
        raise NumericalDegeneracy("computed result has no positive spectrum")
    floor = _HPD_REPAIR_FLOOR * lmax
    if float(w[0]) <= -floor:
        raise NumericalDegeneracy(
            f"computed result lost positive definiteness: min eigenvalue {w[0]:.3e}"
        )
    if float(w[0]) > 0.0:
        return h
    w = np.where(w <= 0.0, floor, w)
    return _resym((v * w) @ v.conj().T)


def spectral_map(a, fn) -> np.ndarray:
    """Apply a scalar function to a Hermitian matrix through its spectrum.

    a = U diag(w) U* maps to U diag(fn(w)) U*.  fn must be defined (finite)
    at every eigenvalue; a non-finite value raises DomainError naming the
    offending eigenvalue.
    """
    h = as_hermitian(a, max_dim=MAX_TENSOR_DIM)
    w, v = np.linalg.eigh(h)
    with np.errstate(all="ignore"):
        vals = np.asarray(fn(w), dtype=float)
    if vals.shape != w.shape:
        raise DomainError("spectral function must map the eigenvalue vector elementwise")
    bad = ~np.isfinite(vals)
    if np.any(bad):
        raise DomainError(f"spectral function undefined at eigenvalue {w[bad][0]!r}")
    return _resym((v * vals) @ v.conj().T)


def mean(a, b, desc: MeanDescriptor) -> np.ndarray:
    """Kubo-Ando mean of two positive definite matrices.

    Computes A^(1/2) f(A^(-1/2) B A^(-1/2)) A^(1/2) where f is the
    representing function of desc.  The result is Hermitian positive
    definite; round-off negativity within 1e-13 of the top eigenvalue is
    clamped, deeper loss raises NumericalDegeneracy.
    """
    a = as_hpd(a)
    b = as_hpd(b)
    if a.shape != b.shape:
        raise DimensionMismatch(f"operand shapes differ: {a.shape} vs {b.shape}")
    w, v = np.linalg.eigh(a)
    # eigenvalues are safely positive after as_hpd
    root = (v * np.sqrt(w)) @ v.conj().T
    iroot = (v * (1.0 / np.sqrt(w))) @ v.conj().T
    inner = _resym(iroot @ b @ iroot)
    fw = spectral_map(inner, lambda x: representing_value(desc, x))
    return _repair_hpd(root @ fw @ root)


def tensor_product(a, b) -> np.ndarray:
    """Kronecker product of two Hermitian matrices."""
    a = as_hermitian(a)
    b = as_hermitian(b)
    n = a.shape[0] * b.shape[0]
    if n > MAX_TENSOR_DIM:
        raise DimensionMismatch(
            f"tensor dimension {n} exceeds supported maximum {MAX_TENSOR_DIM}"
        )
    return _resym(np.kron(a, b))


def hadamard_product(a, b) -> np.ndarray:
    """Entrywise product of two Hermitian matrices of equal size.

    Coincides with compressing the tensor product by the isometry sending
    e_j to e_j (x) e_j; positive definite inputs give a positive definite
    result.
    """
    a = as_hermitian(a)
    b = as_hermitian(b)
    if a.shape != b.shape:
        raise DimensionMismatch(f"operand shapes differ: {a.shape} vs {b.shape}")
    return _resym(a * b)


def loewner_leq(a, b, rel_tol: float = 1e-9) -> LoewnerVerdict:
    """Decide A <= B up to a scale-aware tolerance.

    The verdict reports the smallest eigenvalue of B - A; the comparison
    passes when it is no smaller than -rel_tol * scale with
    scale = max(||A||_2, ||B||_2, 1).
    """
    if rel_tol <= 0.0:
        raise DomainError(f"rel_tol must be positive, got {rel_tol}")
    a = as_hermitian(a, max_dim=MAX_TENSOR_DIM)
    b = as_hermitian(b, max_dim=MAX_TENSOR_DIM)
    if a.shape != b.shape:
        raise DimensionMismatch(f"operand shapes differ: {a.shape} vs {b.shape}")
    gap = float(np.linalg.eigvalsh(_resym(b - a))[0])
    norm_a = float(np.abs(np.linalg.eigvalsh(a)).max()) if a.size else 0.0
    norm_b = float(np.abs(np.linalg.eigvalsh(b)).max()) if b.size else 0.0
    scale = max(norm_a, norm_b, 1.0)
    tol = rel_tol * scale
    return LoewnerVerdict(bool(gap >= -tol), gap, scale, tol)


def relative_spectral_bounds(a, b) -> SpectralBounds:
    """Tightest (m, M) with m*A <= B <= M*A, for positive definite A, B.

    These are the extreme eigenvalues of A^(-1/2) B A^(-1/2).
    """
    a = as_hpd(a)
    b = as_hpd(b)
    if a.shape != b.shape:
        raise DimensionMismatch(f"operand shapes differ: {a.shape} vs {b.shape}")
    w, v = np.linalg.eigh(a)
    iroot = (v * (1.0 / np.sqrt(w))) @ v.conj().T
    inner = _resym(iroot @ b @ iroot)
    ev = np.linalg.eigvalsh(inner)
    if float(ev[0]) <= 0.0:
        raise NumericalDegeneracy("relative spectrum lost positivity")
    return SpectralBounds(float(ev[0]), float(ev[-1]))

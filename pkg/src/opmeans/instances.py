"""Seeded generation of positive definite test instances.

Randomness comes from numpy's Philox generator, a counter-based scheme with
a 128-bit key.  A stream is keyed by the pair (seed, index): stream i of a
suite run is Generator(Philox(key=[seed, i])), so trial streams never depend
on evaluation order and any trial can be regenerated in isolation.

Every function accepts either an integer seed (opens the stream keyed by
(seed, 0)) or an existing numpy Generator (draws continue from it), so
composite instances can share one stream deterministically.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, DomainError
from .matrix_ops import MAX_DIM, _resym
from .scalar_kernel import SpectralBounds

__all__ = [
    "InstanceSpec",
    "split_stream",
    "random_hpd",
    "random_constrained_pair",
    "random_commuting_family",
    "commuting_family_diagonals",
]

DEFAULT_EIG_RANGE = (0.5, 2.0)


@dataclass(frozen=True)
class InstanceSpec:
    """Parameters describing one random instance family."""

    dim: int
    n_terms: int
    bounds: SpectralBounds
    seed: int
    complex: bool = False
    eig_range: tuple = DEFAULT_EIG_RANGE

    def __post_init__(self):
        if self.dim < 1:
            raise DomainError(f"dim must be >= 1, got {self.dim}")
        if self.n_terms < 1:
            raise DomainError(f"n_terms must be >= 1, got {self.n_terms}")
        if not (0 <= int(self.seed) < 2**64):
            raise DomainError("seed must fit in an unsigned 64-bit integer")
        lo, hi = self.eig_range
        if not (0.0 < lo <= hi):
            raise DomainError(f"eig_range must satisfy 0 < lo <= hi, got {self.eig_range}")

    def to_json(self) -> str:
        doc = {
            "dim": self.dim,
            "n_terms": self.n_terms,
            "m": self.bounds.m,
            "M": self.bounds.M,
            "seed": int(self.seed),
            "complex": bool(self.complex),
        }
        return json.dumps(doc, sort_keys=True)

    @staticmethod
    def from_json(text: str) -> "InstanceSpec":
        doc = json.loads(text)
        return InstanceSpec(
            dim=int(doc["dim"]),
            n_terms=int(doc["n_terms"]),
            bounds=SpectralBounds(float(doc["m"]), float(doc["M"])),
            seed=int(doc["seed"]),
            complex=bool(doc.get("complex", False)),
        )


def split_stream(seed: int, index: int) -> np.random.Generator:
    """Open the independent random stream (seed, index).

    Counter-based keying: streams for different indices are statistically
    independent and can be opened in any order with identical results.
    """
    key = np.array([np.uint64(seed), np.uint64(index)], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


def _as_generator(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return split_stream(int(seed), 0)


def _random_unitary(rng: np.random.Generator, dim: int, complex_entries: bool) -> np.ndarray:
    z = rng.standard_normal((dim, dim))
    if complex_entries:
        z = z + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(z)
    # fix the phase so the factor is a deterministic function of z
    d = np.diagonal(r)
    phase = np.where(np.abs(d) > 0.0, d / np.where(np.abs(d) > 0.0, np.abs(d), 1.0), 1.0)
    q = q * phase
    return q


def random_hpd(dim: int, seed, eig_range=DEFAULT_EIG_RANGE, complex: bool = False) -> np.ndarray:
    """Random Hermitian positive definite matrix with spectrum in eig_range.

    Built as Q diag(lambda) Q* with lambda uniform on eig_range and Q a
    Haar-ish random orthogonal/unitary factor from QR orthonormalization.
    Identical arguments reproduce the matrix exactly.
    """
    if not 1 <= dim <= MAX_DIM:
        raise DimensionMismatch(f"dim {dim} outside supported range [1, {MAX_DIM}]")
    lo, hi = float(eig_range[0]), float(eig_range[1])
    if not (0.0 < lo <= hi):
        raise DomainError(f"eig_range must satisfy 0 < lo <= hi, got {eig_range}")
    rng = _as_generator(seed)
    q = _random_unitary(rng, dim, complex)
    lam = rng.uniform(lo, hi, dim)
    out = _resym((q * lam) @ q.conj().T)
    if not complex:
        out = out.real.astype(np.complex128)
    return out


def random_constrained_pair(dim: int, bounds: SpectralBounds, seed, complex: bool = False):
    """Random pair (A, B) with m*A <= B <= M*A guaranteed by construction.

    B = A^(1/2) C A^(1/2) where C is a random positive matrix with spectrum
    inside [m, M].  With m = M the pair is exactly (A, m*A).
    """
    rng = _as_generator(seed)
    a = random_hpd(dim, rng, complex=complex)
    if bounds.m == bounds.M:
        return a, bounds.m * a
    w, v = np.linalg.eigh(a)
    root = (v * np.sqrt(w)) @ v.conj().T
    c = random_hpd(dim, rng, eig_range=(bounds.m, bounds.M), complex=complex)
    b = _resym(root @ c @ root)
    if not complex:
        b = b.real.astype(np.complex128)
    return a, b


def commuting_family_diagonals(dim: int, n_terms: int, bounds: SpectralBounds, seed,
                               complex: bool = False, identity_basis: bool = False):
    """Joint eigendata for a commuting instance family.

    Returns (q, diagonals) where q is the shared unitary basis (the identity
    when identity_basis is set) and diagonals is a list of n_terms pairs of
    positive vectors (a_j, b_j) with b_j = a_j * c_j, c_j drawn from
    [m, M].  Assembling Q diag(.) Q* over these vectors gives the family;
    keeping the vectors around lets tests replay every matrix computation
    entrywise as a scalar one.
    """
    if not 1 <= dim <= MAX_DIM:
        raise DimensionMismatch(f"dim {dim} outside supported range [1, {MAX_DIM}]")
    if n_terms < 1:
        raise DomainError(f"n_terms must be >= 1, got {n_terms}")
    rng = _as_generator(seed)
    if identity_basis:
        q = np.eye(dim, dtype=np.complex128)
    else:
        q = _random_unitary(rng, dim, complex)
        if not complex:
            q = q.real.astype(np.complex128)
    diagonals = []
    for _ in range(n_terms):
        avec = rng.uniform(DEFAULT_EIG_RANGE[0], DEFAULT_EIG_RANGE[1], dim)
        cvec = rng.uniform(bounds.m, bounds.M, dim)
        diagonals.append((avec, avec * cvec))
    return q, diagonals


def random_commuting_family(dim: int, n_terms: int, bounds: SpectralBounds, seed,
                            complex: bool = False, identity_basis: bool = False):
    """Family of pairs (A_j, B_j) sharing one eigenbasis.

    All 2*n_terms matrices commute pairwise and satisfy the two-sided
    constraint m*A_j <= B_j <= M*A_j.
    """
    q, diagonals = commuting_family_diagonals(
        dim, n_terms, bounds, seed, complex=complex, identity_basis=identity_basis
    )
    pairs = []
    for avec, bvec in diagonals:
        a = _resym((q * avec) @ q.conj().T)
        b = _resym((q * bvec) @ q.conj().T)
        pairs.append((a, b))
    return pairs

"""Complexified Clifford algebra of signature (n, n) over bitmask blades.

The 2n generators split into n generators squaring to -1 (indices 1..n)
and n generators squaring to +1 (indices n+1..2n); distinct generators
anticommute.  A basis blade is a bitmask over the generators (bit j-1 set
<=> generator j present), kept in ascending generator order, so the 2^(2n)
blades are the integers 0..4^n-1 and the empty mask is the scalar unit.

Two representations live here:

* :class:`Multivector` -- a sparse mask -> complex map, the value type for
  pointwise algebra (sesquilinear forms, symbols at a single momentum node).
* flat ``(4^n, ...)`` complex arrays -- the blade-major layout used by
  lattice fields; the array-level products below drive every field
  operation and are what the solvers spend their time in.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, Iterable, Mapping, Tuple

import numpy as np

__all__ = [
    "AlgebraError",
    "Multivector",
    "blade_product",
    "dagger_sign",
    "dagger_signs",
    "dagger_arrays",
    "generator_mask",
    "geometric_product_arrays",
    "generator_tables",
    "metric_sign",
    "num_blades",
    "product_table",
]

CONSISTENCY_TOL = 1e-12


class AlgebraError(ArithmeticError):
    """An algebraic invariant failed beyond roundoff (internal inconsistency)."""


def num_blades(n: int) -> int:
    return 1 << (2 * n)


def metric_sign(gen: int, n: int) -> int:
    """Square of 0-based generator ``gen``: -1 for the first n, +1 for the rest."""
    return -1 if gen < n else 1


def generator_mask(j: int, n: int) -> int:
    """Bitmask of generator ``j`` (1-based, 1 <= j <= 2n)."""
    if not 1 <= j <= 2 * n:
        raise ValueError(f"generator index {j} outside 1..{2 * n}")
    return 1 << (j - 1)


def blade_product(mask_a: int, mask_b: int, n: int) -> Tuple[int, int]:
    """Product of two basis blades: result mask and sign.

    The sign is (-1)^swaps from interleaving the two ascending generator
    sequences, times one metric factor per repeated generator.
    """
    swaps = 0
    x = mask_a >> 1
    while x:
        swaps += (x & mask_b).bit_count()
        x >>= 1
    # repeated generators below index n square to -1
    neg = (mask_a & mask_b & ((1 << n) - 1)).bit_count()
    sign = -1 if (swaps + neg) & 1 else 1
    return mask_a ^ mask_b, sign


def dagger_sign(mask: int, n: int) -> int:
    """Sign of blade conjugation: reversal sign times per-generator signs."""
    r = mask.bit_count()
    r1 = (mask & ((1 << n) - 1)).bit_count()
    return -1 if (r1 + (r * (r - 1)) // 2) & 1 else 1


@lru_cache(maxsize=None)
def product_table(n: int) -> Tuple[np.ndarray, np.ndarray]:
    """Dense Cayley data: (result_mask[i, j], sign[i, j]) over all blade pairs."""
    nb = num_blades(n)
    masks = np.zeros((nb, nb), dtype=np.intp)
    signs = np.zeros((nb, nb), dtype=np.int8)
    for i in range(nb):
        for j in range(nb):
            m, s = blade_product(i, j, n)
            masks[i, j] = m
            signs[i, j] = s
    masks.setflags(write=False)
    signs.setflags(write=False)
    return masks, signs


@lru_cache(maxsize=None)
def dagger_signs(n: int) -> np.ndarray:
    out = np.array([dagger_sign(m, n) for m in range(num_blades(n))], dtype=np.int8)
    out.setflags(write=False)
    return out


@lru_cache(maxsize=None)
def generator_tables(n: int) -> Tuple[np.ndarray, np.ndarray]:
    """Left multiplication by each generator on the blade basis.

    Returns ``(masks, signs)`` of shape (2n, 4^n): generator g (0-based)
    times blade m equals ``signs[g, m] * blade(masks[g, m])``.
    """
    nb = num_blades(n)
    masks = np.zeros((2 * n, nb), dtype=np.intp)
    signs = np.zeros((2 * n, nb), dtype=np.int8)
    for g in range(2 * n):
        for m in range(nb):
            mm, s = blade_product(1 << g, m, n)
            masks[g, m] = mm
            signs[g, m] = s
    masks.setflags(write=False)
    signs.setflags(write=False)
    return masks, signs


def geometric_product_arrays(a: np.ndarray, b: np.ndarray, n: int) -> np.ndarray:
    """Geometric product of blade-major coefficient arrays.

    ``a`` and ``b`` have shape (4^n,) + spatial; the product is bilinear over
    blades with the Cayley sign table, broadcast over the spatial axes.  Only
    blades actually present (nonzero somewhere) on each side are visited.
    """
    masks, signs = product_table(n)
    nb = num_blades(n)
    shape = np.broadcast_shapes(a.shape[1:], b.shape[1:])
    out = np.zeros((nb,) + shape, dtype=complex)
    a_live = [i for i in range(nb) if np.any(a[i])]
    b_live = [j for j in range(nb) if np.any(b[j])]
    for i in a_live:
        ai = a[i]
        for j in b_live:
            out[masks[i, j]] += signs[i, j] * (ai * b[j])
    return out


def dagger_arrays(a: np.ndarray, n: int) -> np.ndarray:
    """Blade conjugation of a blade-major coefficient array."""
    sgn = dagger_signs(n).reshape((num_blades(n),) + (1,) * (a.ndim - 1))
    return sgn * np.conj(a)


class Multivector:
    """Element of the complexified algebra, sparse over blades.

    Instances are immutable; all operations return fresh values.  Absent
    blades are exactly zero (coefficients below 0 magnitude are dropped).
    """

    __slots__ = ("dim", "_coeffs")

    def __init__(self, coeffs: Mapping[int, complex], dim: int):
        if dim < 1:
            raise ValueError("dimension must be >= 1")
        nb = num_blades(dim)
        clean: Dict[int, complex] = {}
        for mask, c in coeffs.items():
            if not 0 <= mask < nb:
                raise ValueError(f"blade mask {mask} outside algebra Cl({dim},{dim})")
            c = complex(c)
            if c != 0:
                clean[mask] = clean.get(mask, 0.0) + c
        self.dim = dim
        self._coeffs = {m: c for m, c in clean.items() if c != 0}

    # -- constructors ---------------------------------------------------
    @classmethod
    def scalar(cls, value: complex, dim: int) -> "Multivector":
        return cls({0: value}, dim)

    @classmethod
    def blade(cls, mask: int, dim: int, coeff: complex = 1.0) -> "Multivector":
        return cls({mask: coeff}, dim)

    @classmethod
    def generator(cls, j: int, dim: int) -> "Multivector":
        """Basis generator e_j, 1-based (j <= n squares to -1, j > n to +1)."""
        return cls({generator_mask(j, dim): 1.0}, dim)

    @classmethod
    def zero(cls, dim: int) -> "Multivector":
        return cls({}, dim)

    @classmethod
    def from_array(cls, vec: np.ndarray, dim: int) -> "Multivector":
        return cls({m: vec[m] for m in range(num_blades(dim)) if vec[m] != 0}, dim)

    # -- access ---------------------------------------------------------
    def coeff(self, mask: int) -> complex:
        return self._coeffs.get(mask, 0.0)

    def items(self) -> Iterable[Tuple[int, complex]]:
        return self._coeffs.items()

    def to_array(self) -> np.ndarray:
        vec = np.zeros(num_blades(self.dim), dtype=complex)
        for m, c in self._coeffs.items():
            vec[m] = c
        return vec

    def scalar_part(self) -> complex:
        return self._coeffs.get(0, 0.0)

    # -- algebra ----------------------------------------------------------
    def _require_same_dim(self, other: "Multivector") -> None:
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} != {other.dim}")

    def __add__(self, other: "Multivector") -> "Multivector":
        self._require_same_dim(other)
        out = dict(self._coeffs)
        for m, c in other._coeffs.items():
            out[m] = out.get(m, 0.0) + c
        return Multivector(out, self.dim)

    def __sub__(self, other: "Multivector") -> "Multivector":
        return self + (-1.0) * other

    def __neg__(self) -> "Multivector":
        return (-1.0) * self

    def __rmul__(self, scalar: complex) -> "Multivector":
        return Multivector({m: scalar * c for m, c in self._coeffs.items()}, self.dim)

    def __mul__(self, other):
        if isinstance(other, Multivector):
            self._require_same_dim(other)
            out: Dict[int, complex] = {}
            for ma, ca in self._coeffs.items():
                for mb, cb in other._coeffs.items():
                    m, s = blade_product(ma, mb, self.dim)
                    out[m] = out.get(m, 0.0) + s * ca * cb
            return Multivector(out, self.dim)
        return Multivector({m: c * other for m, c in self._coeffs.items()}, self.dim)

    def dagger(self) -> "Multivector":
        n = self.dim
        return Multivector(
            {m: dagger_sign(m, n) * np.conj(c) for m, c in self._coeffs.items()}, n
        )

    def norm(self) -> float:
        """sqrt of the scalar part of a^dagger a (checked real nonnegative)."""
        sq = (self.dagger() * self).scalar_part()
        scale = max(1.0, self.sup_norm() ** 2)
        if abs(sq.imag) > CONSISTENCY_TOL * scale or sq.real < -CONSISTENCY_TOL * scale:
            raise AlgebraError(f"a^dagger a scalar part {sq} not real nonnegative")
        return float(np.sqrt(max(sq.real, 0.0)))

    def sup_norm(self) -> float:
        return max((abs(c) for c in self._coeffs.values()), default=0.0)

    def isclose(self, other: "Multivector", tol: float = 1e-12) -> bool:
        return (self - other).sup_norm() <= tol

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Multivector)
            and self.dim == other.dim
            and self._coeffs == other._coeffs
        )

    def __hash__(self):
        return hash((self.dim, tuple(sorted(self._coeffs.items()))))

    def __repr__(self) -> str:
        if not self._coeffs:
            return f"Multivector(0, dim={self.dim})"
        parts = []
        for m in sorted(self._coeffs):
            label = "1" if m == 0 else "e" + "e".join(
                str(j + 1) for j in range(2 * self.dim) if m >> j & 1
            )
            parts.append(f"({self._coeffs[m]:.6g})*{label}")
        return " + ".join(parts) + f" [dim={self.dim}]"

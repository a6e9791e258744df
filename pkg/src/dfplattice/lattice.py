"""Finite periodic lattice truncation, Clifford-valued fields, sesquilinear form.

Sites live on the uniform grid h*Z^n modulo N*h; the fractional parameter
alpha never changes the storage grid -- it enters only through the Fourier
symbol of the Dirac operator (see :mod:`dfplattice.operators`).  Momentum
nodes are xi_k = 2*pi*k/(N*h) with k in {-N/2+1, ..., N/2} per axis, all
inside the zone (-pi/h, pi/h].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

import numpy as np

from .clifford import Multivector, dagger_arrays, geometric_product_arrays, num_blades

__all__ = ["GridSpec", "Field", "delta_h", "sesquilinear", "mass", "normalization_check"]


@dataclass(frozen=True)
class GridSpec:
    """Periodic truncation of the fractional lattice.

    n     spatial dimension (1..3)
    h     lattice spacing, > 0
    alpha exact rational in [0, 1/2]; 0 and 1/2 are admitted limit cases
    N     sites per axis, even and >= 4
    """

    n: int
    h: float
    alpha: Fraction
    N: int

    def __post_init__(self):
        if not 1 <= self.n <= 3:
            raise ValueError("dimension n must be 1, 2 or 3")
        if not self.h > 0:
            raise ValueError("spacing h must be positive")
        if not isinstance(self.alpha, Fraction):
            object.__setattr__(self, "alpha", Fraction(self.alpha))
        if not 0 <= self.alpha <= Fraction(1, 2):
            raise ValueError("alpha must lie in [0, 1/2]")
        if self.N < 4 or self.N % 2:
            raise ValueError("N must be even and >= 4")

    # -- geometry ---------------------------------------------------------
    @property
    def nblades(self) -> int:
        return num_blades(self.n)

    @property
    def site_shape(self) -> Tuple[int, ...]:
        return (self.N,) * self.n

    @property
    def site_axes(self) -> Tuple[int, ...]:
        return tuple(range(1, self.n + 1))

    @property
    def nsites(self) -> int:
        return self.N**self.n

    @property
    def cell_volume(self) -> float:
        """h^n, the quadrature weight of one site."""
        return self.h**self.n

    @property
    def momentum_weight(self) -> float:
        """(2*pi/(N*h))^n, the quadrature weight of one momentum node."""
        return (2.0 * np.pi / (self.N * self.h)) ** self.n

    @property
    def alpha_float(self) -> float:
        return float(self.alpha)

    def momentum_indices(self) -> np.ndarray:
        """Per-axis integer mode numbers, ascending: -N/2+1 .. N/2."""
        return np.arange(-self.N // 2 + 1, self.N // 2 + 1)

    def xi_axis(self) -> np.ndarray:
        """Per-axis momentum node values 2*pi*k/(N*h)."""
        return 2.0 * np.pi * self.momentum_indices() / (self.N * self.h)

    def xi_grids(self):
        """Momentum component arrays broadcast over the full node grid."""
        return np.meshgrid(*([self.xi_axis()] * self.n), indexing="ij")


class Field:
    """A Multivector per lattice site, stored blade-major.

    ``values`` has shape (4^n,) + (N,)*n and is frozen after construction;
    every operation returns a new Field.
    """

    __slots__ = ("spec", "values")

    def __init__(self, spec: GridSpec, values: np.ndarray, _copy: bool = True):
        values = np.array(values, dtype=complex, copy=_copy)
        expected = (spec.nblades,) + spec.site_shape
        if values.shape != expected:
            raise ValueError(f"field values shape {values.shape} != {expected}")
        values.setflags(write=False)
        self.spec = spec
        self.values = values

    @classmethod
    def zeros(cls, spec: GridSpec) -> "Field":
        return cls(spec, np.zeros((spec.nblades,) + spec.site_shape, dtype=complex), _copy=False)

    @classmethod
    def from_blade_array(cls, spec: GridSpec, mask: int, arr: np.ndarray) -> "Field":
        vals = np.zeros((spec.nblades,) + spec.site_shape, dtype=complex)
        vals[mask] = arr
        return cls(spec, vals, _copy=False)

    def with_values(self, values: np.ndarray) -> "Field":
        return Field(self.spec, values)

    def mv(self, site: Tuple[int, ...]) -> Multivector:
        """The Multivector at one site (multi-index over {0..N-1}^n)."""
        idx = (slice(None),) + tuple(int(s) % self.spec.N for s in site)
        return Multivector.from_array(self.values[idx], self.spec.n)

    def shift(self, offsets: Tuple[int, ...]) -> "Field":
        """Periodic translation by whole sites: out(x) = self(x - offsets*h)."""
        vals = self.values
        for ax, off in zip(self.spec.site_axes, offsets):
            vals = np.roll(vals, off, axis=ax)
        return Field(self.spec, vals, _copy=False)

    def _require_same_spec(self, other: "Field") -> None:
        if self.spec != other.spec:
            raise ValueError("grid spec mismatch")

    def __add__(self, other: "Field") -> "Field":
        self._require_same_spec(other)
        return Field(self.spec, self.values + other.values, _copy=False)

    def __sub__(self, other: "Field") -> "Field":
        self._require_same_spec(other)
        return Field(self.spec, self.values - other.values, _copy=False)

    def __rmul__(self, scalar: complex) -> "Field":
        return Field(self.spec, scalar * self.values, _copy=False)

    def sup_norm(self) -> float:
        return float(np.max(np.abs(self.values)))

    def sup_diff(self, other: "Field") -> float:
        self._require_same_spec(other)
        return float(np.max(np.abs(self.values - other.values)))


def delta_h(spec: GridSpec) -> Field:
    """Discrete delta: scalar value 1/h^n at the origin, zero elsewhere."""
    vals = np.zeros((spec.nblades,) + spec.site_shape, dtype=complex)
    vals[(0,) + (0,) * spec.n] = 1.0 / spec.cell_volume
    return Field(spec, vals, _copy=False)


def sesquilinear(f: Field, g: Field) -> Multivector:
    """Clifford-valued pairing sum_x h^n f(x)^dagger g(x)."""
    f._require_same_spec(g)
    n = f.spec.n
    prod = geometric_product_arrays(dagger_arrays(f.values, n), g.values, n)
    vec = prod.reshape(f.spec.nblades, -1).sum(axis=1) * f.spec.cell_volume
    return Multivector.from_array(vec, n)


def mass(f: Field) -> Multivector:
    """Total lattice mass sum_x h^n f(x) as a Multivector."""
    vec = f.values.reshape(f.spec.nblades, -1).sum(axis=1) * f.spec.cell_volume
    return Multivector.from_array(vec, f.spec.n)


def normalization_check(f: Field) -> float:
    """Scalar part of the total mass; quasi-probability fields return 1."""
    return float(mass(f).scalar_part().real)

"""Discrete Fourier transform on the periodic lattice and its convolution calculus.

Conventions (fixed once, used everywhere):

* forward:  (F f)(xi) = h^n (2 pi)^(-n/2) sum_x f(x) e^{+i x.xi}
* inverse:  f(x) = (2 pi)^(-n/2) sum_k w (F f)(xi_k) e^{-i x.xi_k},
  with node weight w = (2 pi/(N h))^n standing in for the zone integral;
  the pair is an exact isomorphism on the truncation.
* convolution: (K * f)(x) = sum_y h^n K(x - y) f(y), kernel on the LEFT;
  under the transforms above F[K * f] = (2 pi)^(n/2) (F K)(F f), and the
  multiplier representation F^-1[m . F f] is exactly a convolution against
  F^-1[(2 pi)^(-n/2) m].

Transforms run as one FFT per blade component; an O(N^2) direct-sum twin
lives in the test suite as the independent oracle.
"""

from __future__ import annotations

import numpy as np

from .clifford import Multivector, dagger_arrays, geometric_product_arrays
from .lattice import Field, GridSpec

__all__ = [
    "MomentumField",
    "dft_forward",
    "dft_inverse",
    "momentum_sesquilinear",
    "convolve",
    "refine_field",
    "restrict_field",
    "CONVOLUTION_CONSTANT_POWER",
]

# F[K * f] = (2 pi)^(n/2) FK Ff; the exponent is per dimension
CONVOLUTION_CONSTANT_POWER = 0.5


class MomentumField:
    """A Multivector per momentum node, blade-major, node order ascending k."""

    __slots__ = ("spec", "values")

    def __init__(self, spec: GridSpec, values: np.ndarray, _copy: bool = True):
        values = np.array(values, dtype=complex, copy=_copy)
        expected = (spec.nblades,) + spec.site_shape
        if values.shape != expected:
            raise ValueError(f"momentum values shape {values.shape} != {expected}")
        values.setflags(write=False)
        self.spec = spec
        self.values = values

    @classmethod
    def from_blade_array(cls, spec: GridSpec, mask: int, arr: np.ndarray) -> "MomentumField":
        vals = np.zeros((spec.nblades,) + spec.site_shape, dtype=complex)
        vals[mask] = arr
        return cls(spec, vals, _copy=False)

    def mv(self, mode: tuple) -> Multivector:
        """Multivector at one node, indexed by position in the ascending-k grid."""
        idx = (slice(None),) + tuple(int(m) for m in mode)
        return Multivector.from_array(self.values[idx], self.spec.n)

    def _require_same_spec(self, other: "MomentumField") -> None:
        if self.spec != other.spec:
            raise ValueError("grid spec mismatch")

    def __add__(self, other):
        self._require_same_spec(other)
        return MomentumField(self.spec, self.values + other.values, _copy=False)

    def __sub__(self, other):
        self._require_same_spec(other)
        return MomentumField(self.spec, self.values - other.values, _copy=False)

    def __rmul__(self, scalar: complex) -> "MomentumField":
        return MomentumField(self.spec, scalar * self.values, _copy=False)

    def sup_diff(self, other: "MomentumField") -> float:
        self._require_same_spec(other)
        return float(np.max(np.abs(self.values - other.values)))


def _fft_to_ordered(vals: np.ndarray, spec: GridSpec) -> np.ndarray:
    """FFT natural mode order -> ascending k in {-N/2+1, .., N/2} per axis."""
    out = np.fft.fftshift(vals, axes=spec.site_axes)
    for ax in spec.site_axes:
        out = np.roll(out, -1, axis=ax)
    return out


def _ordered_to_fft(vals: np.ndarray, spec: GridSpec) -> np.ndarray:
    out = vals
    for ax in spec.site_axes:
        out = np.roll(out, 1, axis=ax)
    return np.fft.ifftshift(out, axes=spec.site_axes)


def dft_forward(f: Field) -> MomentumField:
    """Forward transform, componentwise per blade."""
    spec = f.spec
    scale = spec.cell_volume * (2.0 * np.pi) ** (-spec.n / 2.0) * spec.nsites
    vals = np.fft.ifftn(f.values, axes=spec.site_axes) * scale
    return MomentumField(spec, _fft_to_ordered(vals, spec), _copy=False)


def dft_inverse(F: MomentumField) -> Field:
    """Inverse transform; exact inverse of :func:`dft_forward` on the truncation."""
    spec = F.spec
    scale = (2.0 * np.pi) ** (-spec.n / 2.0) * spec.momentum_weight
    vals = np.fft.fftn(_ordered_to_fft(F.values, spec), axes=spec.site_axes) * scale
    return Field(spec, vals, _copy=False)


def momentum_sesquilinear(F: MomentumField, G: MomentumField) -> Multivector:
    """Zone pairing sum_k w F(xi_k)^dagger G(xi_k) (weight w per node)."""
    F._require_same_spec(G)
    n = F.spec.n
    prod = geometric_product_arrays(dagger_arrays(F.values, n), G.values, n)
    vec = prod.reshape(F.spec.nblades, -1).sum(axis=1) * F.spec.momentum_weight
    return Multivector.from_array(vec, n)


def convolve(K: Field, f: Field) -> Field:
    """Discrete convolution (K * f)(x) = sum_y h^n K(x-y) f(y), kernel on the left."""
    K._require_same_spec(f)
    spec = K.spec
    FK = dft_forward(K)
    Ff = dft_forward(f)
    const = (2.0 * np.pi) ** (spec.n * CONVOLUTION_CONSTANT_POWER)
    prod = const * geometric_product_arrays(FK.values, Ff.values, spec.n)
    return dft_inverse(MomentumField(spec, prod, _copy=False))


def refine_field(f: Field, factor: int) -> Field:
    """Embed a field into the grid refined by ``factor`` (spacing h/factor).

    The embedding zero-pads the momentum data, i.e. extends the field as the
    trigonometric polynomial it already is; restricting back to the coarse
    sites recovers the input exactly.  Used by the stencil cross-checks for
    Dirac shifts that leave the storage grid.
    """
    if factor < 1:
        raise ValueError("refinement factor must be >= 1")
    spec = f.spec
    if factor == 1:
        return f
    fine = GridSpec(spec.n, spec.h / factor, spec.alpha, spec.N * factor)
    F = dft_forward(f)
    vals = np.zeros((spec.nblades,) + fine.site_shape, dtype=complex)
    lo = fine.N // 2 - spec.N // 2
    sl = (slice(None),) + (slice(lo, lo + spec.N),) * spec.n
    vals[sl] = F.values
    return dft_inverse(MomentumField(fine, vals, _copy=False))


def restrict_field(f: Field, factor: int) -> Field:
    """Sample every ``factor``-th site back onto the coarse grid."""
    spec = f.spec
    if spec.N % factor:
        raise ValueError("factor must divide N")
    coarse = GridSpec(spec.n, spec.h * factor, spec.alpha, spec.N // factor)
    sl = (slice(None),) + (slice(None, None, factor),) * spec.n
    return Field(coarse, f.values[sl])

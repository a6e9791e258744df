from fractions import Fraction

import numpy as np
import pytest

from dfplattice.clifford import Multivector, geometric_product_arrays
from dfplattice.lattice import Field, GridSpec, delta_h, sesquilinear
from dfplattice.operators import (
    dirac_apply,
    dirac_multiplier,
    dirac_symbol,
    laplacian_apply,
    laplacian_multiplier,
    laplacian_symbol,
    symbol_tables,
)

from oracles import dirac_stencil_oracle


def random_field(spec, rng):
    shape = (spec.nblades,) + spec.site_shape
    return Field(spec, rng.standard_normal(shape) + 1j * rng.standard_normal(shape))


def test_laplacian_symbol_examples():
    spec = GridSpec(1, 1.0, Fraction(1, 4), 8)
    assert laplacian_symbol((0.0,), spec) == 0.0
    assert laplacian_symbol((np.pi,), spec) == pytest.approx(4.0, abs=1e-14)
    spec2 = GridSpec(2, 1.0, Fraction(1, 4), 8)
    assert laplacian_symbol((np.pi, np.pi / 2), spec2) == pytest.approx(6.0, abs=1e-14)


def test_dirac_symbol_examples():
    spec = GridSpec(1, 1.0, Fraction(1, 4), 8)
    assert dirac_symbol((0.0,), spec).sup_norm() < 1e-15
    half = GridSpec(1, 1.0, Fraction(1, 2), 8)
    z = dirac_symbol((np.pi,), half)
    assert z.isclose(Multivector({0b01: -2j}, 1), tol=1e-14)
    zero = GridSpec(1, 1.0, Fraction(0), 8)
    z0 = dirac_symbol((np.pi / 2,), zero)
    assert z0.isclose(Multivector({0b01: -1j, 0b10: 1.0}, 1), tol=1e-14)


def test_zone_validation():
    spec = GridSpec(1, 1.0, Fraction(1, 4), 8)
    with pytest.raises(ValueError):
        laplacian_symbol((4.0,), spec)
    with pytest.raises(ValueError):
        dirac_symbol((0.0, 0.0), spec)


@pytest.mark.parametrize("alpha", [Fraction(1, 10**8), Fraction(1, 4), Fraction(1, 2)])
@pytest.mark.parametrize("n,N,h", [(1, 32, 1.0), (2, 8, 0.5)])
def test_square_condition(n, N, h, alpha):
    spec = GridSpec(n, h, alpha, N)
    tab = symbol_tables(spec)
    z = dirac_multiplier(spec).to_momentum_field().values
    sq = geometric_product_arrays(z, z, n)
    assert np.max(np.abs(sq[0] - tab.d2)) < 1e-12
    assert max(np.max(np.abs(sq[m])) for m in range(1, spec.nblades)) < 1e-12


def test_laplacian_constant_field():
    spec = GridSpec(2, 0.5, Fraction(1, 4), 6)
    f = Field.from_blade_array(spec, 0, np.ones(spec.site_shape))
    assert laplacian_apply(f).sup_norm() < 1e-14


def test_laplacian_delta_stencil():
    # n=1, h=1, N=4: Laplacian of delta is (-2, 1, 0, 1)
    spec = GridSpec(1, 1.0, Fraction(1, 4), 4)
    out = laplacian_apply(delta_h(spec))
    assert np.allclose(out.values[0], [-2.0, 1.0, 0.0, 1.0], atol=1e-14)


def test_laplacian_routes_agree():
    rng = np.random.default_rng(0)
    for spec in (GridSpec(1, 0.5, Fraction(0), 16), GridSpec(3, 1.0, Fraction(1, 4), 4)):
        f = random_field(spec, rng)
        assert laplacian_apply(f, "stencil").sup_diff(laplacian_apply(f, "multiplier")) < 1e-12


def test_dirac_constant_field():
    spec = GridSpec(1, 1.0, Fraction(1, 4), 8)
    f = Field.from_blade_array(spec, 0, np.ones(spec.site_shape))
    assert dirac_apply(f).sup_norm() < 1e-13


@pytest.mark.parametrize(
    "alpha", [Fraction(0), Fraction(1, 2), Fraction(1, 4), Fraction(1, 3), Fraction(2, 5)]
)
def test_dirac_matches_refinement_stencil(alpha):
    rng = np.random.default_rng(1)
    spec = GridSpec(1, 1.0, alpha, 8)
    f = random_field(spec, rng)
    assert dirac_apply(f).sup_diff(dirac_stencil_oracle(f)) < 1e-12


def test_dirac_matches_refinement_stencil_2d():
    rng = np.random.default_rng(2)
    spec = GridSpec(2, 0.5, Fraction(1, 4), 4)
    f = random_field(spec, rng)
    assert dirac_apply(f).sup_diff(dirac_stencil_oracle(f)) < 1e-12


def test_dirac_squares_to_minus_laplacian():
    rng = np.random.default_rng(3)
    for spec in (GridSpec(1, 1.0, Fraction(1, 4), 16), GridSpec(2, 1.0, Fraction(2, 5), 6)):
        f = random_field(spec, rng)
        lhs = dirac_apply(dirac_apply(f))
        assert lhs.sup_diff(Field(spec, -laplacian_apply(f).values)) < 1e-11


def test_self_adjointness():
    rng = np.random.default_rng(4)
    spec = GridSpec(1, 1.0, Fraction(1, 4), 16)
    f, g = random_field(spec, rng), random_field(spec, rng)
    assert (sesquilinear(dirac_apply(f), g) - sesquilinear(f, dirac_apply(g))).sup_norm() < 1e-12
    assert (
        sesquilinear(laplacian_apply(f), g) - sesquilinear(f, laplacian_apply(g))
    ).sup_norm() < 1e-12


def test_alpha_zero_limit():
    tiny = symbol_tables(GridSpec(1, 1.0, Fraction(1, 10**8), 32))
    zero = symbol_tables(GridSpec(1, 1.0, Fraction(0), 32))
    assert np.max(np.abs(tiny.vec_sin[0] - zero.vec_sin[0])) < 1e-6
    assert np.max(np.abs(tiny.vec_cos[0] - zero.vec_cos[0])) < 1e-6


def test_multiplier_tables_shape_and_values():
    spec = GridSpec(1, 1.0, Fraction(1, 4), 8)
    lap = laplacian_multiplier(spec)
    dm = dirac_multiplier(spec)
    tab = symbol_tables(spec)
    zero_mode = spec.N // 2 - 1
    # laplacian values real, >= 0, zero exactly at the zero mode
    assert np.all(tab.d2 >= 0.0)
    assert tab.d2[zero_mode] == 0.0
    assert lap.value_at((zero_mode,)).sup_norm() == 0.0
    for mode in range(spec.N):
        xi = (float(spec.xi_axis()[mode]),)
        assert abs(lap.value_at((mode,)).scalar_part() - laplacian_symbol(xi, spec)) < 1e-14
        assert dm.value_at((mode,)).isclose(dirac_symbol(xi, spec), tol=1e-14)
    mf = dm.to_momentum_field()
    assert mf.values.shape == (spec.nblades,) + spec.site_shape


def test_dirac_symbol_is_self_dagger():
    spec = GridSpec(2, 0.7, Fraction(1, 3), 6)
    for mode in ((0, 1), (2, 3), (5, 4)):
        z = dirac_multiplier(spec).value_at(mode)
        assert (z.dagger() - z).sup_norm() < 1e-15

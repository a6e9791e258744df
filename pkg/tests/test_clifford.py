import numpy as np
import pytest

from dfplattice.clifford import (
    AlgebraError,
    Multivector,
    blade_product,
    dagger_arrays,
    geometric_product_arrays,
    num_blades,
)

from oracles import blade_product_sorting, mv_product_oracle


def e(j, dim):
    return Multivector.generator(j, dim)


def rand_mv(dim, rng):
    vec = rng.standard_normal(num_blades(dim)) + 1j * rng.standard_normal(num_blades(dim))
    return Multivector.from_array(vec, dim)


@pytest.mark.parametrize("dim", [1, 2, 3])
def test_generator_squares(dim):
    for j in range(1, dim + 1):
        assert (e(j, dim) * e(j, dim)).isclose(Multivector.scalar(-1.0, dim))
        assert (e(dim + j, dim) * e(dim + j, dim)).isclose(Multivector.scalar(1.0, dim))


def test_distinct_generators_anticommute():
    dim = 2
    for j in range(1, 2 * dim + 1):
        for k in range(1, 2 * dim + 1):
            if j == k:
                continue
            assert (e(j, dim) * e(k, dim) + e(k, dim) * e(j, dim)).sup_norm() == 0.0


def test_e2_e1_is_minus_e1e2():
    dim = 2
    prod = e(2, dim) * e(1, dim)
    assert prod.isclose(Multivector.blade(0b11, dim, -1.0))


def test_identity_element():
    rng = np.random.default_rng(0)
    a = rand_mv(2, rng)
    one = Multivector.scalar(1.0, 2)
    assert (one * a).isclose(a) and (a * one).isclose(a)


def test_dimension_mismatch_raises():
    with pytest.raises(ValueError, match="mismatch"):
        e(1, 1) * e(1, 2)


def test_dagger_examples():
    dim = 1
    assert e(1, dim).dagger().isclose(-1.0 * e(1, dim))
    assert e(2, dim).dagger().isclose(e(2, dim))
    assert Multivector.scalar(1j, dim).dagger().isclose(Multivector.scalar(-1j, dim))
    # e1 e2 conjugates to itself with a sign forced by the generator rules
    dim = 2
    b = e(1, dim) * e(2, dim)
    assert b.dagger().isclose(-1.0 * b)


def test_norm_examples():
    assert Multivector.scalar(3.0, 1).norm() == pytest.approx(3.0, abs=1e-15)
    assert e(1, 1).norm() == pytest.approx(1.0, abs=1e-15)
    a = Multivector({0b01: 1j, 0b10: 1.0}, 1)  # i e1 + e2
    # expand a^dagger a through the independent sorting oracle
    sq = mv_product_oracle(a.dagger(), a)
    assert abs(sq.scalar_part() - 2.0) < 1e-14
    assert a.norm() == pytest.approx(np.sqrt(2.0), abs=1e-14)


@pytest.mark.parametrize("dim", [1, 2, 3])
def test_product_matches_sorting_oracle(dim):
    rng = np.random.default_rng(100 + dim)
    for _ in range(12):
        a, b = rand_mv(dim, rng), rand_mv(dim, rng)
        assert (a * b - mv_product_oracle(a, b)).sup_norm() < 1e-12


@pytest.mark.parametrize("dim", [1, 2, 3])
def test_blade_product_signs_match_oracle(dim):
    nb = num_blades(dim)
    for i in range(nb):
        for j in range(nb):
            assert blade_product(i, j, dim) == blade_product_sorting(i, j, dim)


def test_associativity_random():
    rng = np.random.default_rng(5)
    for dim in (1, 2, 3):
        for _ in range(10):
            a, b, c = rand_mv(dim, rng), rand_mv(dim, rng), rand_mv(dim, rng)
            assert ((a * b) * c - a * (b * c)).sup_norm() < 1e-12


def test_dagger_antiautomorphism_random():
    rng = np.random.default_rng(6)
    for dim in (1, 2, 3):
        for _ in range(10):
            a, b = rand_mv(dim, rng), rand_mv(dim, rng)
            assert ((a * b).dagger() - b.dagger() * a.dagger()).sup_norm() < 1e-12


def test_dirac_symbol_shaped_vectors_square_to_scalars():
    # vectors of the Dirac-symbol shape, imaginary on the e_j block and real
    # on the e_{n+j} block, satisfy a^dagger = a, so a^dagger a = a^2 is the
    # scalar sum of squares; this is the family the operator symbols live in
    rng = np.random.default_rng(7)
    for dim in (1, 2, 3):
        coeffs = {}
        total = 0.0
        for j in range(1, dim + 1):
            aj, bj = rng.standard_normal(2)
            coeffs[1 << (j - 1)] = -1j * aj
            coeffs[1 << (dim + j - 1)] = bj
            total += aj * aj + bj * bj
        a = Multivector(coeffs, dim)
        assert (a.dagger() - a).sup_norm() < 1e-15
        sq = a.dagger() * a
        rest = sq - Multivector.scalar(sq.scalar_part(), dim)
        assert rest.sup_norm() < 1e-12
        assert sq.scalar_part().real == pytest.approx(total, rel=1e-12)


def test_vector_span_square_not_scalar_in_general():
    # general span elements do produce bivectors; only the scalar part of
    # a^dagger a is sign-definite (it is the coefficient norm, see below)
    for a in (Multivector({0b01: 1j, 0b10: 1j}, 1), Multivector({0: 1.0, 0b10: 1.0}, 1)):
        sq = a.dagger() * a
        assert (sq - Multivector.scalar(sq.scalar_part(), 1)).sup_norm() > 1.0
        assert sq.scalar_part().real == pytest.approx(2.0)


def test_norm_nonnegative_for_general_elements():
    # a^dagger a has unit scalar coefficient blade-by-blade, so norm is the
    # flat 2-norm of the coefficient vector for every multivector
    rng = np.random.default_rng(8)
    for dim in (1, 2, 3):
        a = rand_mv(dim, rng)
        flat = np.linalg.norm(a.to_array())
        assert a.norm() == pytest.approx(flat, rel=1e-12)


def test_array_products_match_pointwise():
    rng = np.random.default_rng(9)
    dim = 2
    nb = num_blades(dim)
    a = rng.standard_normal((nb, 3)) + 1j * rng.standard_normal((nb, 3))
    b = rng.standard_normal((nb, 3)) + 1j * rng.standard_normal((nb, 3))
    out = geometric_product_arrays(a, b, dim)
    for k in range(3):
        expect = mv_product_oracle(
            Multivector.from_array(a[:, k], dim), Multivector.from_array(b[:, k], dim)
        )
        assert (Multivector.from_array(out[:, k], dim) - expect).sup_norm() < 1e-12


def test_dagger_arrays_matches_pointwise():
    rng = np.random.default_rng(10)
    dim = 3
    nb = num_blades(dim)
    a = rng.standard_normal((nb, 2)) + 1j * rng.standard_normal((nb, 2))
    out = dagger_arrays(a, dim)
    for k in range(2):
        expect = Multivector.from_array(a[:, k], dim).dagger()
        assert (Multivector.from_array(out[:, k], dim) - expect).sup_norm() == 0.0


def test_norm_consistency_error():
    class Broken(Multivector):
        def dagger(self):
            return self  # violates the conjugation rules on purpose

    a = Broken({0b01: 1.0}, 1)  # e1 with dagger forced to e1: a"dagger"a = -1
    with pytest.raises(AlgebraError):
        a.norm()

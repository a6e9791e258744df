import io
from fractions import Fraction

import numpy as np
import pytest

from dfplattice.fieldio import (
    field_from_json,
    field_rows,
    field_to_json,
    grid_from_dict,
    grid_to_dict,
    read_field_csv,
    write_field_csv,
)
from dfplattice.lattice import Field, GridSpec, delta_h
from dfplattice.spectral import MomentumField, dft_forward


def random_field(spec, rng):
    shape = (spec.nblades,) + spec.site_shape
    vals = rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
    vals[rng.random(shape) < 0.5] = 0.0  # exercise sparsity
    return Field(spec, vals)


def test_grid_dict_roundtrip():
    spec = GridSpec(2, 0.5, Fraction(1, 3), 8)
    assert grid_from_dict(grid_to_dict(spec)) == spec


def test_csv_roundtrip_exact():
    rng = np.random.default_rng(0)
    for spec in (GridSpec(1, 1.0, Fraction(1, 4), 8), GridSpec(2, 0.5, Fraction(1, 3), 4)):
        f = random_field(spec, rng)
        buf = io.StringIO()
        write_field_csv(f, buf)
        buf.seek(0)
        g = read_field_csv(buf, spec)
        assert np.array_equal(f.values, g.values)


def test_csv_header_and_delta_rows():
    spec = GridSpec(2, 0.5, Fraction(1, 4), 4)
    buf = io.StringIO()
    write_field_csv(delta_h(spec), buf)
    lines = buf.getvalue().splitlines()
    assert lines[0] == "k1,k2,mask,re,im"
    assert lines[1] == "0,0,0,4.0,0.0"
    assert len(lines) == 2  # zeros are not serialized


def test_momentum_csv_signed_indices():
    spec = GridSpec(1, 1.0, Fraction(1, 4), 4)
    F = dft_forward(delta_h(spec))
    rows = list(field_rows(F))
    assert [r[0] for r in rows] == [-1, 0, 1, 2]
    buf = io.StringIO()
    write_field_csv(F, buf)
    buf.seek(0)
    G = read_field_csv(buf, spec, momentum=True)
    assert isinstance(G, MomentumField)
    assert np.array_equal(F.values, G.values)


def test_csv_header_mismatch_raises():
    spec1 = GridSpec(1, 1.0, Fraction(1, 4), 4)
    spec2 = GridSpec(2, 1.0, Fraction(1, 4), 4)
    buf = io.StringIO()
    write_field_csv(delta_h(spec1), buf)
    buf.seek(0)
    with pytest.raises(ValueError, match="header"):
        read_field_csv(buf, spec2)


def test_json_roundtrip():
    rng = np.random.default_rng(1)
    spec = GridSpec(1, 0.25, Fraction(2, 5), 8)
    f = random_field(spec, rng)
    doc = field_to_json(f)
    g = field_from_json(doc)
    assert g.spec == spec
    assert np.array_equal(f.values, g.values)


def test_multivector_triples_roundtrip():
    from dfplattice.clifford import Multivector
    from dfplattice.fieldio import mv_from_triples, mv_to_triples

    mv = Multivector({0: 1.5, 0b11: -2.0 + 0.5j}, 1)
    triples = mv_to_triples(mv)
    assert triples == [(0, 1.5, 0.0), (3, -2.0, 0.5)]
    assert mv_from_triples(triples, 1) == mv


def test_rows_sorted_lexicographically():
    spec = GridSpec(2, 1.0, Fraction(1, 4), 4)
    vals = np.zeros((spec.nblades,) + spec.site_shape, dtype=complex)
    vals[3, 2, 1] = 1.0
    vals[0, 2, 1] = 1.0
    vals[1, 0, 3] = 1.0
    rows = list(field_rows(Field(spec, vals)))
    assert rows[0][:3] == (0, 3, 1)
    assert rows[1][:3] == (2, 1, 0)
    assert rows[2][:3] == (2, 1, 3)

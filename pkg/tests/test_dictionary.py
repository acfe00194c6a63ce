import math

import numpy as np
import pytest

from poincare_wigner.dictionary import MatrixFamily, entries, find, matrix_for, render_table
from poincare_wigner.lorentz_core import DomainError, boost_x, conjugate, four_vector_to_matrix, rotation_z
from poincare_wigner.polarization import DecoherenceParams, coherency_from_params, transform_coherency

from _helpers import assert_matrix_close


def test_row_count_and_order():
    rows = entries()
    assert len(rows) == 5
    assert [r.matrix_family for r in rows] == [
        MatrixFamily.ROTATION_Z,
        MatrixFamily.ROTATION_Y,
        MatrixFamily.BOOST_Z,
        MatrixFamily.BOOST_X,
        None,
    ]


@pytest.mark.parametrize(
    "family, optics, relativity",
    [
        ("rotation_z", "Phase shift by φ", "Rotation around z"),
        ("rotation_y", "Rotation around z", "Rotation around y"),
        ("boost_z", "Squeeze along x and y", "Boost along z"),
        ("boost_x", "Squeeze along 45°", "Boost along x"),
    ],
)
def test_names(family, optics, relativity):
    e = find(family)
    assert (e.optics_name, e.relativity_name) == (optics, relativity)


def test_determinant_row():
    e = entries()[-1]
    assert (e.optics_name, e.relativity_name) == ("(sin ξ)²", "(mass)²")
    with pytest.raises(DomainError):
        matrix_for(e, 1.0)


def test_matrix_for():
    assert matrix_for(find("rotation_z"), math.pi) == rotation_z(math.pi)
    # phase shifter carries the i in both diagonal entries
    assert_matrix_close(matrix_for(find("rotation_z"), math.pi).matrix, np.diag([1j, -1j]), 1e-16)
    assert_matrix_close(matrix_for(find("boost_z"), 0.0).matrix, np.eye(2), 0)
    assert matrix_for(find("boost_x"), 1.0) == boost_x(1.0)


def test_families_are_one_to_one():
    fams = [e.matrix_family for e in entries() if e.matrix_family]
    assert sorted(f.value for f in fams) == sorted(f.value for f in MatrixFamily)


@pytest.mark.parametrize("param", [-1.3, 0.4, 2.2])
def test_every_matrix_preserves_both_determinants(param):
    p = four_vector_to_matrix((2.0, 0.5, -0.3, 0.8))
    c = coherency_from_params(DecoherenceParams(0.6, 0.3))
    for e in entries():
        if e.matrix_family is None:
            continue
        g = matrix_for(e, param)
        assert g.is_unimodular(1e-12)
        assert conjugate(g, p).det == pytest.approx(p.det, rel=1e-12)
        assert transform_coherency(g, c).det == pytest.approx(c.det, abs=1e-12)


def test_render_table():
    text = render_table()
    assert text.splitlines()[0].startswith("Polarization optics")
    assert "Squeeze along 45°" in text
    assert len(text.splitlines()) == 7

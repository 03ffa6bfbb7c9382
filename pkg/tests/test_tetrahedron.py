import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from moulton4 import (
    MassQuadruple,
    ShapeTetrahedron,
    build_tetrahedron,
    reduced_mass,
    validate_tetrahedron,
)
from moulton4.errors import MassDomainError
from moulton4.tetrahedron import volume

mass_value = st.floats(min_value=0.1, max_value=100.0)


def test_reduced_mass_equal():
    # cbrt(1/4), evaluated independently at high precision
    assert reduced_mass(1, 1, 1, 1) == pytest.approx(0.6299605249474366, rel=1e-14)


def test_reduced_mass_paper():
    # cbrt(20*13*7*6 / 46)
    assert reduced_mass(20, 13, 7, 6) == pytest.approx(6.191866757741292, rel=1e-14)


@given(m=st.floats(min_value=1e-3, max_value=1e3))
def test_reduced_mass_homogeneous(m):
    assert reduced_mass(m, m, m, m) == pytest.approx(m * 0.6299605249474366, rel=1e-12)


@pytest.mark.parametrize("bad", [0.0, -1.0, float("nan"), float("inf")])
def test_reduced_mass_rejects_bad_values(bad):
    with pytest.raises(MassDomainError) as exc:
        reduced_mass(1.0, bad, 1.0, 1.0)
    assert exc.value.index == 2


def test_mass_quadruple_fields():
    q = MassQuadruple(20, 13, 7, 6)
    assert q.m == 46.0
    assert q.mu == reduced_mass(20, 13, 7, 6)


def test_build_first_column_closed_form():
    q = MassQuadruple(20, 13, 7, 6)
    T = build_tetrahedron(q)
    mu = q.mu
    assert T.E[0, 0] == 0.0
    assert T.E[1, 0] == pytest.approx(math.sqrt(mu * 13 / (46 * 33)), rel=1e-15)
    assert T.E[2, 0] == pytest.approx(math.sqrt(mu * 13 / (20 * 33)), rel=1e-15)


def test_equal_masses_regular_tetrahedron():
    q = MassQuadruple(1, 1, 1, 1)
    T = build_tetrahedron(q)
    edge = math.sqrt(2 * q.mu)
    for i in range(4):
        for j in range(i + 1, 4):
            d = np.linalg.norm(T.E[:, i] - T.E[:, j])
            assert d == pytest.approx(edge, rel=1e-14)


def test_validate_passes_for_built(tetra_paper):
    report = validate_tetrahedron(tetra_paper)
    assert report.passed
    assert all(d < 1e-12 for d in report.deviations.values())


def test_validate_flags_perturbation(tetra_paper):
    E = np.array(tetra_paper.E)
    E[1, 2] += 1e-3
    bad = ShapeTetrahedron(E=E, masses=tetra_paper.masses)
    report = validate_tetrahedron(bad)
    assert not report.passed
    assert max(report.deviations.values()) == pytest.approx(1e-3, rel=1.0)


@settings(max_examples=50, deadline=None)
@given(m1=mass_value, m2=mass_value, m3=mass_value, m4=mass_value)
def test_invariants_random_masses(m1, m2, m3, m4):
    q = MassQuadruple(m1, m2, m3, m4)
    report = validate_tetrahedron(build_tetrahedron(q))
    assert all(d < 1e-10 for d in report.deviations.values())


def test_invariants_thousand_mass_sets():
    rng = np.random.default_rng(7)
    for row in rng.uniform(0.1, 100.0, (1000, 4)):
        report = validate_tetrahedron(build_tetrahedron(MassQuadruple(*row)))
        assert all(d < 1e-10 for d in report.deviations.values())


def test_vertex_orthogonal_to_opposite_face():
    rng = np.random.default_rng(11)
    for row in rng.uniform(0.1, 100.0, (50, 4)):
        T = build_tetrahedron(MassQuadruple(*row))
        scale = np.abs(T.E).max() ** 2
        for i in range(4):
            rest = [j for j in range(4) if j != i]
            for a in range(3):
                for b in range(a + 1, 3):
                    diff = T.E[:, rest[a]] - T.E[:, rest[b]]
                    assert abs(np.dot(T.E[:, i], diff)) < 1e-10 * scale


def test_mass_scaling():
    q = MassQuadruple(3, 5, 2, 8)
    for k in (0.25, 4.0):
        qk = MassQuadruple(3 * k, 5 * k, 2 * k, 8 * k)
        assert qk.mu == pytest.approx(k * q.mu, rel=1e-13)
        Tk = build_tetrahedron(qk)
        norm = Tk.E @ np.diag(qk.as_array()) @ Tk.E.T / qk.mu
        assert np.allclose(norm, np.eye(3), atol=1e-13)


def test_volume_is_one_sixth(tetra_paper):
    assert volume(tetra_paper) == pytest.approx(1.0 / 6.0, rel=1e-13)

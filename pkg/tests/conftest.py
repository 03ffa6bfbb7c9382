import numpy as np
import pytest

from moulton4 import MassQuadruple, build_tetrahedron, enumerate_all


@pytest.fixture(scope="session")
def masses_paper():
    return MassQuadruple(20.0, 13.0, 7.0, 6.0)


@pytest.fixture(scope="session")
def tetra_paper(masses_paper):
    return build_tetrahedron(masses_paper)


@pytest.fixture(scope="session")
def configs_paper(masses_paper):
    return enumerate_all(masses_paper)


@pytest.fixture(scope="session")
def masses_equal():
    return MassQuadruple(1.0, 1.0, 1.0, 1.0)


@pytest.fixture(scope="session")
def random_mass_sets():
    rng = np.random.default_rng(20250823)
    return [MassQuadruple(*row) for row in rng.uniform(0.5, 50.0, (20, 4))]

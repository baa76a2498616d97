import numpy as np
import pytest

from fluctforce.quadrature import QuadratureSpec


@pytest.fixture(scope="session")
def quad():
    return QuadratureSpec()


@pytest.fixture(scope="session")
def quad_fast():
    """Loose-tolerance spec for MC-heavy tests."""
    return QuadratureSpec(rel_tol=1e-5, mc_samples=50_000)


@pytest.fixture
def rng():
    return np.random.default_rng(1234)

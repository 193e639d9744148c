import pytest

from stablecohom.exactpoly import GradedRing


@pytest.fixture
def xar():
    """Q[x:2, alpha:2, r:2] for constructions in alpha."""
    return GradedRing.of(("x", 2), ("alpha", 2), ("r", 2))


@pytest.fixture
def xa():
    return GradedRing.of(("x", 2), ("a", 4))

import pytest

from matadj import adjoint_from_representation, catalog


@pytest.fixture(scope="session")
def entries():
    return catalog()


@pytest.fixture(scope="session")
def fixture_maps(entries):
    """name -> verified covector adjoint map, for every catalog entry."""
    return {
        e.name: adjoint_from_representation(e.matroid, e.representation)
        for e in entries
    }

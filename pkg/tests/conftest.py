import pytest

from distgraph import SearchFilter, enumerate_graphs


@pytest.fixture(scope="session")
def classes_by_n():
    """One canonical representative per isomorphism class, for n up to 7."""
    out = {}
    for n in range(1, 8):
        reps = []
        enumerate_graphs(n, SearchFilter(), visitor=reps.append)
        out[n] = reps
    return out

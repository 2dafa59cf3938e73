"""Shared fixtures: the vector catalog and its derived graph."""

import pytest

from ks18 import find_bases, ks18_vectors, orthogonality_graph


@pytest.fixture(scope="session")
def vectors():
    return ks18_vectors()


@pytest.fixture(scope="session")
def graph(vectors):
    return orthogonality_graph(vectors)


@pytest.fixture(scope="session")
def bases(graph, vectors):
    return find_bases(graph, vectors)

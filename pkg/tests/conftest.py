from itertools import combinations

import pytest

from closedgraphs import Graph, Labelling


def graph_from_facets(facets):
    """Graph whose edges are all pairs inside each facet."""
    edges = []
    for f in facets:
        edges.extend(combinations(sorted(f), 2))
    return Graph(edges)


# Four triangles sharing the apex f; admits a leaf order but is not closed.
APEX_FACETS = [{"a", "b", "f"}, {"a", "e", "f"}, {"b", "c", "f"}, {"d", "e", "f"}]

# Chain of three cliques; a linear quasi-tree whose graph contains a claw.
CHAIN_FACETS = [{"a", "b", "c"}, {"b", "c", "d", "e"}, {"b", "e", "f"}]


@pytest.fixture
def apex_graph():
    return graph_from_facets(APEX_FACETS)


@pytest.fixture
def chain_graph():
    return graph_from_facets(CHAIN_FACETS)


@pytest.fixture
def k3():
    return Graph([("1", "2"), ("1", "3"), ("2", "3")])


@pytest.fixture
def k4():
    return graph_from_facets([{"1", "2", "3", "4"}])


@pytest.fixture
def k13():
    return Graph([("1", "2"), ("1", "3"), ("1", "4")])


@pytest.fixture
def c4():
    return Graph([("1", "2"), ("2", "3"), ("3", "4"), ("1", "4")])


@pytest.fixture
def c5():
    return Graph([("1", "2"), ("2", "3"), ("3", "4"), ("4", "5"), ("1", "5")])


@pytest.fixture
def path3():
    return Graph([("1", "2"), ("2", "3")])


def identity_labelling(g):
    return Labelling({v: i for i, v in enumerate(sorted(g.vertices), start=1)})

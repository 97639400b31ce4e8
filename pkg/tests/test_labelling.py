import pytest

from closedgraphs import (
    Graph,
    NotClosedComplexError,
    RandomSource,
    SimplicialComplex,
    border_chain,
    brute_force_closed,
    clique_complex,
    closed_labelling,
    find_closed_labelling,
    intersection_table,
    is_closed_wrt,
    linear_quasi_tree_order,
    random_closed_graph,
    residual_blocks,
)

from conftest import CHAIN_FACETS


def table_of(facets):
    return intersection_table(linear_quasi_tree_order(SimplicialComplex(facets)))


def interval_facets(spans):
    return [set(str(i) for i in range(lo, hi + 1)) for lo, hi in spans]


def test_border_chain_two_facets():
    t = table_of([{"a", "b"}, {"b", "c"}])
    b = border_chain(t)
    assert b.n_of == (2, 2)
    assert b.cells == ((1, 1), (1, 2), (2, 2))


def test_border_chain_single_facet():
    t = table_of([{"x", "y", "z"}])
    b = border_chain(t)
    assert b.cells == ((1, 1),)


def test_border_chain_intervals():
    t = table_of(interval_facets([(1, 3), (2, 5), (4, 6)]))
    b = border_chain(t)
    assert b.n_of == (2, 3, 3)
    assert b.cells == ((1, 1), (1, 2), (2, 2), (2, 3), (3, 3))


def test_residual_blocks_two_facets():
    t = table_of([{"a", "b"}, {"b", "c"}])
    partition = residual_blocks(t, border_chain(t))
    assert [(b.i, b.j, set(b.vertices)) for b in partition.blocks] == [
        (1, 1, {"a"}),
        (1, 2, {"b"}),
        (2, 2, {"c"}),
    ]


def test_residual_blocks_single_facet():
    t = table_of([{"x", "y", "z"}])
    partition = residual_blocks(t, border_chain(t))
    assert [(b.i, b.j, set(b.vertices)) for b in partition.blocks] == [(1, 1, {"x", "y", "z"})]


def test_residual_blocks_intervals_drop_empty():
    t = table_of(interval_facets([(1, 3), (2, 5), (4, 6)]))
    partition = residual_blocks(t, border_chain(t))
    assert [(b.i, b.j, set(b.vertices)) for b in partition.blocks] == [
        (1, 1, {"1"}),
        (1, 2, {"2", "3"}),
        (2, 3, {"4", "5"}),
        (3, 3, {"6"}),
    ]


def test_closed_labelling_two_facets():
    oc = linear_quasi_tree_order(SimplicialComplex([{"a", "b"}, {"b", "c"}]))
    lab = closed_labelling(oc)
    assert dict(lab) == {"a": 1, "b": 2, "c": 3}


def test_closed_labelling_single_facet_alphabetical():
    oc = linear_quasi_tree_order(SimplicialComplex([{"z", "x", "y"}]))
    assert dict(closed_labelling(oc)) == {"x": 1, "y": 2, "z": 3}


def test_closed_labelling_rejects_chain_complex():
    oc = linear_quasi_tree_order(SimplicialComplex(CHAIN_FACETS))
    with pytest.raises(NotClosedComplexError):
        closed_labelling(oc)


def test_find_closed_labelling_claw(k13):
    result = find_closed_labelling(k13)
    assert not result.closed
    assert result.failure.stage == "quasi-tree-order"


def test_find_closed_labelling_c4(c4):
    result = find_closed_labelling(c4)
    assert not result.closed


def test_find_closed_labelling_path():
    g = Graph([("a", "b"), ("b", "c"), ("c", "d")])
    result = find_closed_labelling(g)
    assert result.closed
    lab = result.labelling
    # consecutive path vertices get consecutive labels
    for u, v in [("a", "b"), ("b", "c"), ("c", "d")]:
        assert abs(lab[u] - lab[v]) == 1
    assert is_closed_wrt(g, lab)[0]


def test_find_closed_labelling_chain_failure(chain_graph):
    result = find_closed_labelling(chain_graph)
    assert not result.closed
    assert result.failure.stage == "closed-complex"
    assert result.failure.violation.condition == "covering"


def test_find_closed_labelling_disconnected_concatenates():
    g = Graph([("a", "b"), ("x", "y"), ("y", "z")])
    result = find_closed_labelling(g)
    assert result.closed
    lab = result.labelling
    assert {lab["a"], lab["b"]} == {1, 2}
    assert {lab["x"], lab["y"], lab["z"]} == {3, 4, 5}


def test_partition_window_and_union_properties():
    # on random closed complexes: blocks partition V, membership windows
    # hold, and the span union identity holds for nonempty cells
    rs = RandomSource(2024)
    for _ in range(40):
        n = rs.rng.randint(2, 10)
        r = rs.rng.randint(1, min(6, n - 1))
        g, _ = random_closed_graph(rs, n, r)
        oc = linear_quasi_tree_order(clique_complex(g))
        t = intersection_table(oc)
        partition = residual_blocks(t, border_chain(t))
        facets = oc.facets
        everything = set()
        for block in partition.blocks:
            assert not everything & block.vertices
            everything |= block.vertices
            for v in block.vertices:
                for k in range(1, t.r + 1):
                    assert (v in facets[k - 1]) == (block.i <= k <= block.j)
        assert everything == set(g.vertices)
        for i in range(1, t.r + 1):
            for j in range(i, t.r + 1):
                if t.cell(i, j):
                    span = set()
                    for k in range(i, j + 1):
                        span |= facets[k - 1]
                    assert facets[i - 1] | facets[j - 1] == span


def test_pipeline_labelling_always_closed():
    rs = RandomSource(5)
    for _ in range(30):
        n = rs.rng.randint(2, 9)
        r = rs.rng.randint(1, n - 1)
        g, _ = random_closed_graph(rs, n, r)
        result = find_closed_labelling(g)
        assert result.closed
        assert is_closed_wrt(g, result.labelling)[0]


def test_pipeline_matches_brute_force_small():
    from closedgraphs.oracle import all_connected_graphs

    for n in (2, 3, 4):
        for g in all_connected_graphs(n):
            assert (brute_force_closed(g) is not None) == find_closed_labelling(g).closed


def test_certificate_json(k4):
    result = find_closed_labelling(k4)
    doc = result.certificates[0].to_json_dict()
    assert doc["facets"] == [["1", "2", "3", "4"]]
    assert doc["order"] == [0]
    assert doc["blocks"] == [{"i": 1, "j": 1, "vertices": ["1", "2", "3", "4"]}]

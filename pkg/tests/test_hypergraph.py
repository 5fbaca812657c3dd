import random

import pytest

from hypersym import (
    DuplicateEdgeError,
    EdgeSizeError,
    ParameterError,
    RepeatedVertexError,
    VertexRangeError,
    build_hypergraph,
    incidence_matrix,
    is_connected,
)

from helpers import closure_connected, random_hypergraph


def test_build_triangle():
    g = build_hypergraph(2, 3, [[1, 2], [2, 3], [1, 3]])
    assert g.edge_count == 3
    assert g.edges == ((1, 2), (1, 3), (2, 3))


def test_build_single_4_edge():
    g = build_hypergraph(4, 4, [[1, 2, 3, 4]])
    assert g.edges == ((1, 2, 3, 4),)


def test_build_canonicalizes_order():
    g = build_hypergraph(2, 3, [[3, 2], [2, 1]])
    assert g.edges == ((1, 2), (2, 3))


def test_duplicate_edge_rejected():
    with pytest.raises(DuplicateEdgeError):
        build_hypergraph(2, 3, [[1, 2], [2, 1]])


def test_edge_size_rejected():
    with pytest.raises(EdgeSizeError):
        build_hypergraph(2, 3, [[1, 2, 3]])


def test_repeated_vertex_rejected():
    with pytest.raises(RepeatedVertexError):
        build_hypergraph(3, 4, [[1, 2, 2]])


def test_vertex_out_of_range_rejected():
    with pytest.raises(VertexRangeError):
        build_hypergraph(2, 3, [[1, 4]])
    with pytest.raises(VertexRangeError):
        build_hypergraph(2, 3, [[0, 2]])


def test_bad_parameters_rejected():
    with pytest.raises(ParameterError):
        build_hypergraph(1, 3, [])
    with pytest.raises(ParameterError):
        build_hypergraph(3, 2, [])


def test_connectivity_examples():
    triangle = build_hypergraph(2, 3, [[1, 2], [2, 3], [1, 3]])
    assert is_connected(triangle)
    split = build_hypergraph(2, 4, [[1, 2], [3, 4]])
    assert not is_connected(split)
    single = build_hypergraph(5, 5, [[1, 2, 3, 4, 5]])
    assert is_connected(single)


def test_isolated_vertex_disconnects():
    g = build_hypergraph(2, 3, [[1, 2]])
    assert not is_connected(g)


def test_connectivity_matches_transitive_closure():
    rng = random.Random(101)
    for _ in range(200):
        g = random_hypergraph(rng, rng.choice([2, 3, 4]), n_max=8)
        assert is_connected(g) == closure_connected(g)


def test_incidence_triangle():
    g = build_hypergraph(2, 3, [[1, 2], [2, 3], [1, 3]])
    inc = incidence_matrix(g)
    assert inc.entries == ((1, 1, 0), (1, 0, 1), (0, 1, 1))


def test_incidence_single_edge():
    g = build_hypergraph(4, 4, [[1, 2, 3, 4]])
    assert incidence_matrix(g).entries == ((1, 1, 1, 1),)


def test_incidence_path():
    g = build_hypergraph(2, 3, [[1, 2], [2, 3]])
    assert incidence_matrix(g).entries == ((1, 1, 0), (0, 1, 1))


def test_incidence_row_sums_equal_uniformity():
    rng = random.Random(102)
    for _ in range(100):
        g = random_hypergraph(rng, rng.choice([2, 3, 4]), n_max=8)
        inc = incidence_matrix(g)
        assert inc.rows == g.edge_count and inc.cols == g.vertex_count
        for row in inc.entries:
            assert sum(row) == g.uniformity
            assert set(row) <= {0, 1}


def test_rebuild_is_identity():
    rng = random.Random(103)
    for _ in range(50):
        g = random_hypergraph(rng, rng.choice([2, 3]), n_max=7)
        again = build_hypergraph(g.uniformity, g.vertex_count, g.edges)
        assert again == g

import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from design_spectra.generators import (bipartite_kneser, complete_bipartite, cycle_graph,
                                       path_graph, subspace_graph)
from design_spectra.graph import (AcyclicGraphError, DisconnectedGraphError, EdgeListParseError,
                                  GraphError, NotBipartiteError, bipartition, diameter,
                                  distance_matrix, format_edge_list, from_edge_list, girth,
                                  parse_edge_list)


def floyd_warshall(n, edges):
    inf = float("inf")
    d = [[0 if i == j else inf for j in range(n)] for i in range(n)]
    for u, v in edges:
        d[u][v] = d[v][u] = 1
    for k, i, j in itertools.product(range(n), repeat=3):
        if d[i][k] + d[k][j] < d[i][j]:
            d[i][j] = d[i][k] + d[k][j]
    return d


def c6():
    return from_edge_list(6, [(i, (i + 1) % 6) for i in range(6)])


def test_triangle():
    g = from_edge_list(3, [(0, 1), (1, 2), (2, 0)])
    assert g.degrees == [2, 2, 2]
    assert g.adj == ((1, 2), (0, 2), (0, 1))


def test_symmetrized_and_deduplicated():
    g = from_edge_list(4, [(1, 0), (0, 1), (3, 1), (1, 3)])
    assert g.adj == ((1,), (0, 3), (), (1,))
    assert g.num_edges == 2


def test_empty_graph_rejected_downstream():
    g = from_edge_list(2, [])
    assert g.num_edges == 0
    with pytest.raises(DisconnectedGraphError):
        distance_matrix(g)


@pytest.mark.parametrize("edges", [[(0, 3)], [(-1, 0)]])
def test_index_out_of_range(edges):
    with pytest.raises(GraphError):
        from_edge_list(3, edges)


def test_self_loop():
    with pytest.raises(GraphError, match="self-loop"):
        from_edge_list(3, [(1, 1)])


def test_c6_distances_are_rotations():
    dm = distance_matrix(c6())
    base = np.array([0, 1, 2, 3, 2, 1])
    for i in range(6):
        assert list(dm[i]) == list(np.roll(base, i))


def test_c6_matches_kneser3_spectrum():
    w1 = np.linalg.eigvalsh(distance_matrix(c6()).astype(float))
    w2 = np.linalg.eigvalsh(distance_matrix(bipartite_kneser(3)).astype(float))
    assert np.allclose(w1, w2)


def test_path_distance():
    assert distance_matrix(path_graph(3))[0, 2] == 2


def test_heawood_distances():
    dm = distance_matrix(subspace_graph(2, 3))
    off = dm[~np.eye(14, dtype=bool)]
    assert set(off.tolist()) == {1, 2, 3}
    assert set(dm.sum(axis=1).tolist()) == {27}


def test_distance_matrix_is_readonly():
    dm = distance_matrix(c6())
    with pytest.raises(ValueError):
        dm[0, 1] = 5


@st.composite
def connected_graphs(draw):
    n = draw(st.integers(2, 12))
    # random spanning tree plus extra edges
    edges = [(v, draw(st.integers(0, v - 1))) for v in range(1, n)]
    pairs = list(itertools.combinations(range(n), 2))
    edges += draw(st.lists(st.sampled_from(pairs), max_size=15))
    return n, edges


@settings(max_examples=60, deadline=None)
@given(connected_graphs())
def test_distance_matrix_matches_floyd_warshall(case):
    n, edges = case
    g = from_edge_list(n, edges)
    dm = distance_matrix(g)
    assert dm.tolist() == floyd_warshall(n, edges)
    assert (dm == dm.T).all() and (np.diag(dm) == 0).all()
    adj = g.adjacency_matrix()
    assert ((dm == 1) == (adj == 1)).all()
    for i, j, k in itertools.product(range(n), repeat=3):
        assert dm[i, k] <= dm[i, j] + dm[j, k]


def test_bipartition_c6():
    b = bipartition(c6())
    assert b.part_a == (0, 2, 4) and b.part_b == (1, 3, 5)


def test_bipartition_triangle():
    with pytest.raises(NotBipartiteError):
        bipartition(cycle_graph(3))


def test_bipartition_heawood_sizes():
    b = bipartition(subspace_graph(2, 3))
    assert len(b.part_a) == len(b.part_b) == 7
    assert b.part_a == tuple(range(7))


@pytest.mark.parametrize("g, want", [
    (c6(), 6), (cycle_graph(5), 5), (cycle_graph(3), 3),
    (bipartite_kneser(4), 4), (subspace_graph(2, 3), 6), (subspace_graph((2, 2), 3), 6),
    (complete_bipartite(3, 3), 4),
])
def test_girth(g, want):
    assert girth(g) == want


def test_girth_acyclic():
    with pytest.raises(AcyclicGraphError):
        girth(path_graph(4))


@settings(max_examples=40, deadline=None)
@given(connected_graphs())
def test_girth_matches_networkx(case):
    nx = pytest.importorskip("networkx")
    n, edges = case
    g = from_edge_list(n, edges)
    h = nx.Graph(g.edges())
    cycles = nx.minimum_cycle_basis(h)
    if not cycles:
        with pytest.raises(AcyclicGraphError):
            girth(g)
    else:
        assert girth(g) == min(len(c) for c in cycles)


@pytest.mark.parametrize("g, want", [(c6(), 3), (from_edge_list(2, [(0, 1)]), 1),
                                     (subspace_graph(2, 3), 3), (bipartite_kneser(5), 3)])
def test_diameter(g, want):
    assert diameter(distance_matrix(g)) == want


def test_edge_list_roundtrip():
    g = subspace_graph(2, 3)
    text = format_edge_list(g)
    assert text.splitlines()[0] == "14 21"
    assert parse_edge_list(text) == from_edge_list(14, g.edges())


def test_edge_list_comments_and_errors():
    g = parse_edge_list("# a path\n3 2\n0 1\n# middle\n1 2\n")
    assert g.adj == ((1,), (0, 2), (1,))
    with pytest.raises(EdgeListParseError):
        parse_edge_list("3 2\n0 1\n")
    with pytest.raises(EdgeListParseError):
        parse_edge_list("3 1\n0 x\n")
    with pytest.raises(EdgeListParseError):
        parse_edge_list("")

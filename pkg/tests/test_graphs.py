import pytest
from hypothesis import given
from hypothesis import strategies as st

from treecensus.graphs import (
    Graph,
    MissingEdgeError,
    census_graph_kmn,
    census_graph_kn,
    census_graph_kn_minus_edge,
    census_graph_kn_refined,
    complete_bipartite,
    complete_graph,
    delete_edges,
    graph_from_edges,
    graph_from_json,
    graph_to_json,
    laplacian,
    normalize_edge,
    reduced_laplacian,
    relabel,
    trim_neighbors_above,
)


def test_normalize_edge_orders_and_rejects_loops():
    assert normalize_edge(4, 2) == (2, 4)
    assert normalize_edge(2, 4) == (2, 4)
    with pytest.raises(ValueError):
        normalize_edge(3, 3)


def test_complete_graph_small():
    assert complete_graph(1).edges() == []
    assert complete_graph(3).edges() == [(1, 2), (1, 3), (2, 3)]
    k4 = complete_graph(4)
    assert k4.edge_count() == 6
    assert all(k4.degree(v) == 3 for v in range(1, 5))
    with pytest.raises(ValueError):
        complete_graph(0)


def test_complete_bipartite_small():
    assert complete_bipartite(1, 1).edges() == [(1, 2)]
    assert complete_bipartite(2, 2).edges() == [(1, 3), (1, 4), (2, 3), (2, 4)]
    k23 = complete_bipartite(2, 3)
    assert k23.edge_count() == 6
    assert [k23.degree(v) for v in range(1, 6)] == [3, 3, 2, 2, 2]
    with pytest.raises(ValueError):
        complete_bipartite(0, 2)


def test_delete_edges():
    assert delete_edges(complete_graph(4), [(1, 4)]).edge_count() == 5
    isolated = delete_edges(complete_graph(3), [(1, 2), (1, 3)])
    assert isolated.degree(1) == 0
    assert delete_edges(complete_bipartite(2, 2), [(2, 4)]).edges() == [
        (1, 3), (1, 4), (2, 3),
    ]
    with pytest.raises(MissingEdgeError):
        delete_edges(complete_bipartite(2, 2), [(1, 2)])


def test_delete_edges_clears_multiplicity():
    g = graph_from_edges(2, [(1, 2), (1, 2)])
    assert delete_edges(g, [(1, 2)]).multiplicity(1, 2) == 0


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(2, ((0, 1), (2, 0)))  # asymmetric
    with pytest.raises(ValueError):
        Graph(2, ((1, 0), (0, 0)))  # loop
    with pytest.raises(ValueError):
        Graph(2, ((0, -1), (-1, 0)))  # negative
    with pytest.raises(ValueError):
        graph_from_edges(3, [(1, 4)])  # out of range


def test_census_graph_kn():
    assert census_graph_kn(4, 0) == complete_graph(4)
    g = census_graph_kn(4, 2)
    assert g.degree(2) == 1 and g.multiplicity(1, 2) == 1
    assert census_graph_kn(3, 2).degree(1) == 0
    with pytest.raises(ValueError):
        census_graph_kn(4, 4)
    with pytest.raises(ValueError):
        census_graph_kn(1, 0)


@pytest.mark.parametrize("n", range(2, 8))
def test_census_graph_kn_degrees(n):
    for k in range(n):
        g = census_graph_kn(n, k)
        assert g.degree(n - k) == n - 1 - k
        for v in range(n - k + 1, n + 1):
            assert g.degree(v) == n - 2
        for v in range(1, n - k):
            assert g.degree(v) == n - 1


def test_census_graph_kmn():
    assert census_graph_kmn(2, 2, 1) == complete_bipartite(2, 2)
    assert census_graph_kmn(2, 2, 2) == delete_edges(complete_bipartite(2, 2), [(2, 4)])
    assert census_graph_kmn(3, 2, 2) == delete_edges(complete_bipartite(3, 2), [(3, 5)])
    with pytest.raises(ValueError):
        census_graph_kmn(2, 2, 3)
    with pytest.raises(ValueError):
        census_graph_kmn(2, 2, 0)


@pytest.mark.parametrize("m,n", [(2, 2), (3, 2), (3, 3), (4, 2)])
def test_census_graph_kmn_degrees(m, n):
    for k in range(1, m + 1):
        g = census_graph_kmn(m, n, k)
        assert g.degree(m + n) == m - k + 1
        for v in range(m + 2 - k, m + 1):
            assert g.degree(v) == n - 1


def test_census_graph_kn_refined():
    assert census_graph_kn_refined(4, 0, 1) == complete_graph(4)
    assert census_graph_kn_refined(4, 1, 1) == delete_edges(complete_graph(4), [(3, 4)])
    assert census_graph_kn_refined(4, 0, 2) == delete_edges(complete_graph(4), [(3, 4)])
    with pytest.raises(ValueError):
        census_graph_kn_refined(4, 3, 1)
    with pytest.raises(ValueError):
        census_graph_kn_refined(4, 0, 4)


@pytest.mark.parametrize("n", range(2, 7))
def test_census_graph_kn_refined_root_degree(n):
    for k in range(n - 1):
        for j in range(1, n - k):
            assert census_graph_kn_refined(n, k, j).degree(n - k) == n - k - j


def test_census_graph_kn_minus_edge():
    assert census_graph_kn_minus_edge(4, 1) == delete_edges(
        complete_graph(4), [(1, 4), (3, 4)]
    )
    assert census_graph_kn_minus_edge(4, 2) == delete_edges(
        complete_graph(4), [(1, 4), (2, 3), (2, 4)]
    )
    g = census_graph_kn_minus_edge(3, 1)
    assert g.degree(3) == 0
    with pytest.raises(ValueError):
        census_graph_kn_minus_edge(4, 3)
    with pytest.raises(ValueError):
        census_graph_kn_minus_edge(2, 1)


def test_trim_neighbors_above():
    g = trim_neighbors_above(complete_graph(5), 3, 3)
    assert g.edges() == [(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (4, 5)]
    assert trim_neighbors_above(complete_graph(4), 4, 4) == complete_graph(4)


def test_degree_examples():
    assert complete_graph(4).degree(2) == 3
    assert complete_bipartite(2, 3).degree(1) == 3
    assert census_graph_kn(4, 2).degree(2) == 1


def test_laplacian_small():
    assert laplacian(complete_graph(2)) == [[1, -1], [-1, 1]]
    assert laplacian(complete_graph(3)) == [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]
    assert laplacian(complete_bipartite(2, 2)) == [
        [2, 0, -1, -1],
        [0, 2, -1, -1],
        [-1, -1, 2, 0],
        [-1, -1, 0, 2],
    ]


def test_laplacian_multigraph():
    g = graph_from_edges(2, [(1, 2), (1, 2), (1, 2)])
    assert laplacian(g) == [[3, -3], [-3, 3]]


def test_reduced_laplacian_small():
    assert reduced_laplacian(complete_graph(3), 3) == [[2, -1], [-1, 2]]
    assert reduced_laplacian(complete_graph(2), 2) == [[1]]
    assert reduced_laplacian(complete_graph(4), 4) == [
        [3, -1, -1], [-1, 3, -1], [-1, -1, 3],
    ]
    with pytest.raises(ValueError):
        reduced_laplacian(complete_graph(1), 1)


@st.composite
def small_graphs(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return graph_from_edges(n, [p for p, keep in zip(pairs, mask) if keep])


@given(small_graphs())
def test_laplacian_rows_and_columns_sum_to_zero(g):
    lap = laplacian(g)
    assert all(sum(row) == 0 for row in lap)
    assert all(sum(col) == 0 for col in zip(*lap))


@given(small_graphs(min_n=2))
def test_reduced_laplacian_matches_deletion_for_every_vertex(g):
    lap = laplacian(g)
    for v in range(1, g.n + 1):
        expected = [
            [x for j, x in enumerate(row) if j != v - 1]
            for i, row in enumerate(lap)
            if i != v - 1
        ]
        assert reduced_laplacian(g, v) == expected


@given(small_graphs(), st.randoms(use_true_random=False))
def test_relabel_preserves_degree_multiset(g, rng):
    perm = list(range(1, g.n + 1))
    rng.shuffle(perm)
    h = relabel(g, perm)
    assert sorted(h.degree(v) for v in range(1, g.n + 1)) == sorted(
        g.degree(v) for v in range(1, g.n + 1)
    )
    assert h.degree(perm[0]) == g.degree(1)


def test_relabel_rejects_non_permutation():
    with pytest.raises(ValueError):
        relabel(complete_graph(3), [1, 1, 2])


def test_graph_json_round_trip():
    for g in [complete_graph(4), complete_bipartite(2, 3),
              graph_from_edges(3, [(1, 2), (1, 2), (2, 3)])]:
        assert graph_from_json(graph_to_json(g)) == g
    assert graph_to_json(graph_from_edges(2, [(1, 2), (1, 2)])) == {
        "n": 2, "edges": [[1, 2], [1, 2]],
    }


@pytest.mark.parametrize("obj", [
    {"n": 3},
    {"n": 3, "edges": [[1, 2]], "extra": 1},
    {"n": 0, "edges": []},
    {"n": 3, "edges": [[2, 1]]},      # pairs must be u < v
    {"n": 3, "edges": [[1, 4]]},
    {"n": 3, "edges": [[1, 1]]},
    {"n": 3, "edges": [[1, 2, 3]]},
    {"n": 3, "edges": [[1, "2"]]},
    {"n": True, "edges": []},
])
def test_graph_json_rejects_malformed(obj):
    with pytest.raises(ValueError):
        graph_from_json(obj)

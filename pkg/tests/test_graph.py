from itertools import combinations, permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import connected_graphs, floyd_warshall, graphs
from distspec.graph import (
    DisconnectedGraphError,
    Graph,
    GraphError,
    bfs_distances,
    complement,
    complete,
    components,
    cycle,
    delete_edge,
    disjoint_union,
    distance_matrix,
    empty,
    find_induced_p4,
    induced_subgraph,
    is_connected,
    is_isometric_induced,
    is_isomorphic_bruteforce,
    is_union_of_cliques,
    join,
    path,
    scalar_union,
    star,
    union_all,
    universal_vertices,
)


def test_named_constructors():
    k2 = complete(2)
    assert k2.order == 2 and k2.size == 1

    s4 = star(4)
    assert s4.order == 4 and s4.size == 3 and s4.degree(0) == 3

    c5 = cycle(5)
    assert c5.order == 5 and c5.size == 5
    assert c5.degrees() == [2] * 5

    assert path(4).edges() == [(0, 1), (1, 2), (2, 3)]


@pytest.mark.parametrize(
    "make, n",
    [(complete, 0), (path, 0), (cycle, 2), (star, 1), (empty, 0)],
)
def test_constructor_bounds(make, n):
    with pytest.raises(GraphError):
        make(n)


def test_graph_rejects_bad_adjacency():
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0b00))  # not symmetric
    with pytest.raises(GraphError):
        Graph(2, (0b01, 0b00))  # loop
    with pytest.raises(GraphError):
        Graph(2, (0b100, 0b0))  # out of range
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(1, 1)])


def test_graph_is_frozen():
    g = path(3)
    with pytest.raises(AttributeError):
        g.order = 4


@pytest.mark.parametrize(
    "built, named",
    [
        (join(complete(1), scalar_union(2, complete(1))), path(3)),
        (join(complete(1), scalar_union(4, complete(1))), star(5)),
        (join(scalar_union(2, complete(1)), scalar_union(2, complete(1))), cycle(4)),
    ],
)
def test_join_identities(built, named):
    assert is_isomorphic_bruteforce(built, named)


def test_union_and_join_labelling():
    g = disjoint_union(path(2), path(3))
    assert g.edges() == [(0, 1), (2, 3), (3, 4)]
    j = join(complete(1), empty(2))
    assert j.edges() == [(0, 1), (0, 2)]
    assert union_all([complete(1)] * 3) == empty(3)


def test_complement_and_delete_edge():
    assert complement(complete(4)) == empty(4)
    assert complement(complement(path(4))) == path(4)

    k4e = delete_edge(complete(4), 0, 1)
    assert k4e.size == 5 and not k4e.has_edge(0, 1)
    with pytest.raises(GraphError):
        delete_edge(k4e, 0, 1)


@given(graphs())
def test_complement_is_involution(g):
    assert complement(complement(g)) == g
    n = g.order
    assert g.size + complement(g).size == n * (n - 1) // 2


def test_components():
    assert is_connected(path(4))
    assert is_connected(complete(1))
    two_triangles = scalar_union(2, complete(3))
    assert sorted(map(len, components(two_triangles))) == [3, 3]
    assert not is_connected(two_triangles)


def test_distance_matrix_examples():
    d = distance_matrix(complete(5))
    assert all(d[i, j] == (0 if i == j else 1) for i in range(5) for j in range(5))

    assert distance_matrix(path(3)).rows() == [[0, 1, 2], [1, 0, 1], [2, 1, 0]]

    # apex 0, isolated clique vertex 1, edge {2, 3}
    g = join(complete(1), disjoint_union(complete(1), complete(2)))
    assert distance_matrix(g).rows() == [
        [0, 1, 1, 1],
        [1, 0, 2, 2],
        [1, 2, 0, 1],
        [1, 2, 1, 0],
    ]

    with pytest.raises(DisconnectedGraphError):
        distance_matrix(empty(2))


@given(connected_graphs(max_order=9))
def test_distance_matrix_invariants(g):
    d = distance_matrix(g)
    fw = floyd_warshall(g)
    n = g.order
    for i in range(n):
        assert d.rows()[i] == bfs_distances(g, i)
        for j in range(n):
            assert d[i, j] == fw[i][j] == d[j, i]
            assert (d[i, j] == 0) == (i == j)
            for k in range(n):
                assert d[i, j] <= d[i, k] + d[k, j]


def test_isometric_examples():
    c6 = cycle(6)
    assert is_isometric_induced(c6, {0, 1, 2, 3})
    assert not is_isometric_induced(c6, {0, 2, 4})
    # a geodesic-breaking subset: 0-1-2-3-4 in C6 has d(0,4) = 4 inside, 2 outside
    assert not is_isometric_induced(c6, {0, 1, 2, 3, 4})

    # K1 v (K1 u 3K2): apex 0, vertex 1, edges {2,3}, {4,5}, {6,7}
    g = join(complete(1), disjoint_union(complete(1), scalar_union(3, complete(2))))
    s = [0, 1, 2, 4, 6, 7]  # K1 v (3K1 u K2)
    h = induced_subgraph(g, s)
    assert is_isomorphic_bruteforce(
        h, join(complete(1), disjoint_union(empty(3), complete(2)))
    )
    assert is_isometric_induced(g, s)

    for bad in ([], [0], [0, 9]):
        with pytest.raises(GraphError):
            is_isometric_induced(g, bad)


@given(connected_graphs(min_order=2, max_order=7), st.data())
def test_isometric_gives_principal_submatrix(g, data):
    s = data.draw(st.sets(st.integers(0, g.order - 1), min_size=2))
    h = induced_subgraph(g, s)
    if is_connected(h) and max(max(r) for r in distance_matrix(h).rows()) <= 2:
        # diameter two subgraphs are always isometric
        assert is_isometric_induced(g, s)
    if is_isometric_induced(g, s):
        assert distance_matrix(h) == distance_matrix(g).principal(s)


def _is_induced_p4(g, quad):
    a, b, c, d = quad
    if len(set(quad)) != 4:
        return False
    want = {(a, b), (b, c), (c, d)}
    for u, v in combinations(quad, 2):
        if g.has_edge(u, v) != ((u, v) in want or (v, u) in want):
            return False
    return True


def test_find_induced_p4_examples():
    quad = find_induced_p4(path(4))
    assert quad is not None and _is_induced_p4(path(4), quad)
    for n in range(1, 8):
        assert find_induced_p4(complete(n)) is None
    assert find_induced_p4(cycle(4)) is None
    assert find_induced_p4(star(6)) is None


@given(graphs(max_order=9))
def test_find_induced_p4_sound_and_complete(g):
    quad = find_induced_p4(g)
    if quad is not None:
        assert _is_induced_p4(g, quad)
    else:
        # brute force over all ordered quadruples
        assert not any(
            _is_induced_p4(g, q)
            for four in combinations(range(g.order), 4)
            for q in permutations(four)
        )


def test_universal_vertices_and_cliques():
    assert universal_vertices(star(5)) == [0]
    assert universal_vertices(complete(3)) == [0, 1, 2]
    assert universal_vertices(path(4)) == []

    g = union_all([complete(1), complete(2), complete(4)])
    assert is_union_of_cliques(g) == [1, 2, 4]
    assert is_union_of_cliques(path(3)) is None


@given(st.lists(st.integers(1, 5), min_size=1, max_size=5))
def test_union_of_cliques_round_trip(sizes):
    g = union_all(complete(k) for k in sizes)
    assert is_union_of_cliques(g) == sorted(sizes)

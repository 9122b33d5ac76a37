import pytest
from hypothesis import given

from nlspec.canon import canonical_form
from nlspec.graph import (
    Graph,
    GraphError,
    InvalidParameterError,
    complete,
    complete_bipartite,
    construct_basic,
    cycle,
    disjoint_union,
    empty,
    gamma_graph,
    generalized_friendship,
    join,
    path,
    star,
)

from conftest import graphs


def check_invariants(g: Graph):
    assert sum(g.deg) == 2 * g.m
    for v in range(g.n):
        assert not g.adj[v] >> v & 1
        assert g.deg[v] == bin(g.adj[v]).count("1")
        for u in range(g.n):
            assert g.has_edge(u, v) == g.has_edge(v, u)
    if g.n:
        assert g.delta == min(g.deg) and g.max_deg == max(g.deg)


def test_complete_3():
    g = complete(3)
    assert g.deg == (2, 2, 2) and g.m == 3


def test_kbip_22_is_c4():
    assert canonical_form(complete_bipartite(2, 2)).g6 == canonical_form(cycle(4)).g6


def test_star_3():
    assert star(3) == complete_bipartite(1, 3)
    assert star(3).deg == (3, 1, 1, 1) and star(3).m == 3


@pytest.mark.parametrize("family,params", [
    ("complete", [0]), ("cycle", [2]), ("complete_bipartite", [0, 3]), ("star", [0]),
    ("path", [0]), ("empty", [-1]), ("cycle", [3, 4]), ("petersen", [10]),
])
def test_construct_basic_rejects(family, params):
    with pytest.raises(InvalidParameterError):
        construct_basic(family, params)


def test_construct_basic_dispatch():
    assert construct_basic("cycle", [5]) == cycle(5)
    assert construct_basic("complete_bipartite", [2, 3]) == complete_bipartite(2, 3)
    assert construct_basic("empty", [0]).n == 0


def test_disjoint_union():
    g = disjoint_union(complete(2), complete(2))
    assert (g.n, g.m, g.deg) == (4, 2, (1, 1, 1, 1))
    assert disjoint_union(complete(3), complete(3)).m == 6
    f = generalized_friendship(2, 2)
    assert disjoint_union(empty(0), f) == f


def test_union_cap():
    with pytest.raises(InvalidParameterError):
        disjoint_union(empty(40), empty(30))


def test_join():
    assert join(complete(1), complete(1)) == complete(2)
    g = join(complete(1), disjoint_union(complete(2), complete(2)))
    assert (g.n, g.m, g.deg) == (5, 6, (4, 2, 2, 2, 2))
    assert canonical_form(join(complete(1), empty(4))).g6 == canonical_form(star(4)).g6


@given(graphs(max_n=6), graphs(max_n=6))
def test_join_edge_count(g, h):
    j = join(g, h)
    assert j.m == g.m + h.m + g.n * h.n
    check_invariants(j)


def test_friendship():
    f = generalized_friendship(2, 2)
    assert (f.n, f.m) == (5, 6)
    for q in range(1, 6):
        assert canonical_form(generalized_friendship(1, q)).g6 == canonical_form(complete(q + 1)).g6
    assert canonical_form(generalized_friendship(3, 1)).g6 == canonical_form(star(3)).g6


@pytest.mark.parametrize("p,q", [(p, q) for p in range(2, 6) for q in range(1, 5)])
def test_friendship_degrees(p, q):
    f = generalized_friendship(p, q)
    assert f.n == p * q + 1 and f.m == p * q * (q + 1) // 2
    assert f.deg.count(p * q) == 1 and f.deg.count(q) == p * q
    check_invariants(f)


def test_friendship_rejects():
    for p, q in [(0, 2), (2, 0), (9, 8)]:
        with pytest.raises(InvalidParameterError):
            generalized_friendship(p, q)


def test_gamma():
    g = gamma_graph(2)
    assert (g.n, g.m) == (8, 8)
    assert sorted(g.deg, reverse=True) == [4, 2, 2, 2, 2, 2, 1, 1]
    assert g.deg[0] == 4
    # cycle comes first
    assert all(g.has_edge(i, (i + 1) % 4) for i in range(4))
    g3 = gamma_graph(3)
    assert (g3.n, g3.m) == (12, 12)
    with pytest.raises(InvalidParameterError):
        gamma_graph(1)


def test_families_invariants():
    for g in [complete(7), cycle(9), path(6), star(5), complete_bipartite(3, 4), empty(5),
              gamma_graph(4), generalized_friendship(3, 3), empty(0), complete(1)]:
        check_invariants(g)


def test_rejects_bad_rows():
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0))  # asymmetric
    with pytest.raises(GraphError):
        Graph(1, (0b1,))  # loop
    with pytest.raises(GraphError):
        Graph(2, (0b100, 0))  # out of range
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 0)])


def test_immutable():
    g = complete(3)
    with pytest.raises(Exception):
        g.n = 4


@given(graphs(max_n=10))
def test_random_invariants(g):
    check_invariants(g)
    assert Graph(g.n, g.adj) == g


def test_components():
    g = disjoint_union(cycle(3), disjoint_union(empty(1), path(2)))
    assert g.components() == [[0, 1, 2], [3], [4, 5]]
    assert not g.is_connected() and cycle(5).is_connected()
    assert not empty(0).is_connected()

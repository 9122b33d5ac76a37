import itertools

import networkx as nx
import pytest
from hypothesis import given, settings

from nlspec.canon import automorphism_orbits, canonical_form, canonical_labeling, is_isomorphic
from nlspec.graph import Graph, complete, complete_bipartite, cycle, empty, gamma_graph, path, star

from conftest import brute_force_classes, graphs, graphs_with_perm


def brute_orbits(g):
    n = g.n
    edges = set(g.edges())
    parent = list(range(n))
    for perm in itertools.permutations(range(n)):
        if all(tuple(sorted((perm[u], perm[v]))) in edges for u, v in edges):
            for v in range(n):
                a, b = parent[v], parent[perm[v]]
                lo = min(a, b)
                parent = [lo if x in (a, b) else x for x in parent]
    return parent


def test_examples():
    assert canonical_form(cycle(4)).g6 == canonical_form(complete_bipartite(2, 2)).g6
    p1 = Graph.from_edges(3, [(0, 1), (1, 2)])
    p2 = Graph.from_edges(3, [(1, 0), (0, 2)])
    assert canonical_form(p1).g6 == canonical_form(p2).g6
    assert canonical_form(star(3)).g6 != canonical_form(cycle(4)).g6


@given(graphs_with_perm(max_n=10))
def test_relabel_invariance(gp):
    g, perm = gp
    assert canonical_form(g).g6 == canonical_form(g.relabel(perm)).g6


@given(graphs(max_n=10))
def test_idempotent_and_relabeling(g):
    cf = canonical_form(g)
    assert canonical_form(cf.graph).g6 == cf.g6
    lab = canonical_labeling(g)
    assert g.relabel(lab.lab) == cf.graph


@settings(max_examples=60)
@given(graphs(max_n=8), graphs(max_n=8))
def test_isomorphism_agrees_with_networkx(g, h):
    a = nx.Graph(); a.add_nodes_from(range(g.n)); a.add_edges_from(g.edges())
    b = nx.Graph(); b.add_nodes_from(range(h.n)); b.add_edges_from(h.edges())
    assert is_isomorphic(g, h) == nx.is_isomorphic(a, b)


@pytest.mark.parametrize("n", range(1, 7))
def test_orbits_against_brute_force(n):
    for g in brute_force_classes(n).values():
        assert automorphism_orbits(g) == brute_orbits(g)


@given(graphs(max_n=10))
def test_generators_are_automorphisms(g):
    edges = set(g.edges())
    for gen in canonical_labeling(g).generators:
        assert {tuple(sorted((gen[u], gen[v]))) for u, v in edges} == edges


def test_symmetric_graphs_fast():
    for g in [complete(12), empty(12), cycle(12), complete_bipartite(6, 6), gamma_graph(3)]:
        lab = canonical_labeling(g)
        assert sorted(lab.lab) == list(range(g.n))
    assert len(set(automorphism_orbits(complete(10)))) == 1
    assert len(set(automorphism_orbits(path(7)))) == 4

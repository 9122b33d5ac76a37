"""Canonical labeling by colour refinement plus individualization search.

The search tree is the usual one: refine, pick the first smallest
non-singleton cell, individualize each of its vertices in turn and recurse.
Every leaf is a discrete colouring, i.e. a relabeling, and the canonical
form is the leaf whose relabeled adjacency rows are lexicographically
smallest (row 0 first, bit n-1 of each row most significant). Leaves that
tie with the first or best leaf yield automorphisms, which prune the rest
of the tree. The generators found generate the full automorphism group, so
the orbits returned are exact.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import graph6
from .graph import Graph


@dataclass(frozen=True, slots=True)
class CanonicalGraph:
    g6: str
    graph: Graph


@dataclass(frozen=True, slots=True)
class Labeling:
    lab: tuple[int, ...]  # lab[v] = canonical label of vertex v
    cert: tuple[int, ...]  # adjacency rows of the relabeled graph
    generators: tuple[tuple[int, ...], ...]

    def orbits(self) -> list[int]:
        """orbit[v] = smallest vertex in v's automorphism orbit."""
        return orbit_ids(len(self.lab), self.generators)


def orbit_ids(n: int, generators) -> list[int]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for gen in generators:
        for v in range(n):
            a, b = find(v), find(gen[v])
            if a != b:
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b
    return [find(v) for v in range(n)]


def _refine(nbrs, colors, k):
    n = len(colors)
    while k < n:
        sigs = [(colors[v], tuple(sorted([colors[u] for u in nv]))) for v, nv in enumerate(nbrs)]
        uniq = sorted(set(sigs))
        if len(uniq) == k:
            break
        rank = {s: i for i, s in enumerate(uniq)}
        colors = [rank[s] for s in sigs]
        k = len(uniq)
    return colors, k


def _individualize(colors, w):
    c = colors[w]
    out = [x + 1 if x > c else x for x in colors]
    for v, x in enumerate(colors):
        if x == c and v != w:
            out[v] = c + 1
    return out


def _target_cell(colors, k):
    sizes = [0] * k
    for x in colors:
        sizes[x] += 1
    best = None
    for c, s in enumerate(sizes):
        if s > 1 and (best is None or s < sizes[best]):
            best = c
    return [v for v, x in enumerate(colors) if x == best]


def canonical_labeling(g: Graph) -> Labeling:
    n = g.n
    if n <= 1:
        return Labeling(tuple(range(n)), g.adj, ())
    nbrs = [g.neighbors(v) for v in range(n)]
    dranks = {d: i for i, d in enumerate(sorted(set(g.deg)))}
    colors, k = _refine(nbrs, [dranks[d] for d in g.deg], len(dranks))

    generators: list[tuple[int, ...]] = []
    # state: first leaf, best leaf (labeling, cert, path)
    st = {"first": None, "best": None}

    def leaf_cert(lab):
        rows = [0] * n
        for v, nv in enumerate(nbrs):
            r = 0
            for u in nv:
                r |= 1 << lab[u]
            rows[lab[v]] = r
        return tuple(rows)

    def automorphism(lab_a, lab_b):
        inv_b = [0] * n
        for v, x in enumerate(lab_b):
            inv_b[x] = v
        return tuple(inv_b[lab_a[v]] for v in range(n))

    def common_prefix(p1, p2):
        i = 0
        for a, b in zip(p1, p2):
            if a != b:
                break
            i += 1
        return i

    def visit(colors, k, path):
        if k == n:
            cert = leaf_cert(colors)
            first = st["first"]
            if first is None:
                st["first"] = st["best"] = (colors, cert, path)
                return None
            if cert == first[1]:
                generators.append(automorphism(first[0], colors))
                return common_prefix(path, first[2])
            best = st["best"]
            if cert == best[1]:
                generators.append(automorphism(best[0], colors))
                return common_prefix(path, best[2])
            if cert < best[1]:
                st["best"] = (colors, cert, path)
            return None

        cell = _target_cell(colors, k)
        depth = len(path)
        explored: list[int] = []
        for w in cell:
            if explored and generators:
                fixing = [gen for gen in generators if all(gen[x] == x for x in path)]
                if fixing:
                    orb = orbit_ids(n, fixing)
                    if any(orb[w] == orb[e] for e in explored):
                        continue
            explored.append(w)
            child, ck = _refine(nbrs, _individualize(colors, w), k + 1)
            jump = visit(child, ck, path + (w,))
            if jump is not None and jump < depth:
                return jump
        return None

    visit(colors, k, ())
    lab, cert, _ = st["best"]
    return Labeling(tuple(lab), cert, tuple(generators))


def canonical_form(g: Graph) -> CanonicalGraph:
    lab = canonical_labeling(g)
    cg = Graph._trusted(g.n, lab.cert)
    return CanonicalGraph(graph6.encode(cg), cg)


def canonical_g6(g: Graph) -> str:
    return graph6.encode(Graph._trusted(g.n, canonical_labeling(g).cert))


def automorphism_orbits(g: Graph) -> list[int]:
    return canonical_labeling(g).orbits()


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.deg) != sorted(h.deg):
        return False
    return canonical_labeling(g).cert == canonical_labeling(h).cert

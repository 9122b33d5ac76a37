"""Immutable simple graphs on at most 64 vertices, stored as adjacency bitrows.

Every constructor labels vertices 0..n-1 in a fixed order so that examples
and graph6 output are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

MAX_VERTICES = 64


class GraphError(ValueError):
    """Base class for graph construction errors."""


class InvalidParameterError(GraphError):
    pass


@dataclass(frozen=True, slots=True)
class Graph:
    """Simple undirected graph.

    ``adj[v]`` is an int whose bit ``u`` is set iff ``u`` and ``v`` are adjacent.
    Degree data is derived on construction.
    """

    n: int
    adj: tuple[int, ...]
    deg: tuple[int, ...] = field(init=False, compare=False)
    m: int = field(init=False, compare=False)
    delta: int = field(init=False, compare=False)
    max_deg: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        n, adj = self.n, self.adj
        if not 0 <= n <= MAX_VERTICES:
            raise InvalidParameterError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        if len(adj) != n:
            raise GraphError(f"expected {n} adjacency rows, got {len(adj)}")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise GraphError(f"row {v} references a vertex >= {n}")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            r = row
            while r:
                low = r & -r
                u = low.bit_length() - 1
                if not adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
                r ^= low
        _fill_degrees(self)

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...]) -> "Graph":
        # skips validation; callers guarantee symmetric, loop-free rows
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        _fill_degrees(g)
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if not 0 <= n <= MAX_VERTICES:
            raise InvalidParameterError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls._trusted(n, tuple(rows))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in _bits(self.adj[v]) if u < v]

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        n = self.n
        if sorted(perm) != list(range(n)):
            raise GraphError("relabel expects a permutation of 0..n-1")
        rows = [0] * n
        for v in range(n):
            r = 0
            for u in _bits(self.adj[v]):
                r |= 1 << perm[u]
            rows[perm[v]] = r
        return Graph._trusted(n, tuple(rows))

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph on ``vertices``, relabeled in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            r = 0
            for u in _bits(self.adj[v]):
                if u in index:
                    r |= 1 << index[u]
            rows.append(r)
        return Graph._trusted(len(vertices), tuple(rows))

    def components(self) -> list[list[int]]:
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = frontier = 1 << s
            while frontier:
                nxt = 0
                for v in _bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(_bits(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, edges={self.edges()})"


def _fill_degrees(g: Graph) -> None:
    deg = tuple(row.bit_count() for row in g.adj)
    object.__setattr__(g, "deg", deg)
    object.__setattr__(g, "m", sum(deg) // 2)
    object.__setattr__(g, "delta", min(deg) if deg else 0)
    object.__setattr__(g, "max_deg", max(deg) if deg else 0)


def _bits(x: int) -> list[int]:
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise InvalidParameterError(msg)


# -- basic families ---------------------------------------------------------


def empty(n: int) -> Graph:
    _need(0 <= n <= MAX_VERTICES, f"empty graph needs 0 <= n <= {MAX_VERTICES}, got {n}")
    return Graph._trusted(n, (0,) * n)


def complete(n: int) -> Graph:
    _need(1 <= n <= MAX_VERTICES, f"complete graph needs 1 <= n <= {MAX_VERTICES}, got {n}")
    full = (1 << n) - 1
    return Graph._trusted(n, tuple(full ^ (1 << v) for v in range(n)))


def path(n: int) -> Graph:
    """Path 0-1-...-(n-1)."""
    _need(1 <= n <= MAX_VERTICES, f"path needs 1 <= n <= {MAX_VERTICES}, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    """Cycle 0-1-...-(n-1)-0."""
    _need(3 <= n <= MAX_VERTICES, f"cycle needs 3 <= n <= {MAX_VERTICES}, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(r: int, s: int) -> Graph:
    """K_{r,s} with parts 0..r-1 and r..r+s-1."""
    _need(r >= 1 and s >= 1, f"complete_bipartite needs r >= 1 and s >= 1, got ({r}, {s})")
    _need(r + s <= MAX_VERTICES, f"complete_bipartite needs r + s <= {MAX_VERTICES}")
    return Graph.from_edges(r + s, [(i, r + j) for i in range(r) for j in range(s)])


def star(p: int) -> Graph:
    """K_{1,p} with center 0."""
    _need(p >= 1, f"star needs p >= 1, got {p}")
    return complete_bipartite(1, p)


FAMILIES = {
    "empty": (empty, 1),
    "complete": (complete, 1),
    "path": (path, 1),
    "cycle": (cycle, 1),
    "star": (star, 1),
    "complete_bipartite": (complete_bipartite, 2),
}


def construct_basic(family: str, params: Sequence[int]) -> Graph:
    try:
        fn, arity = FAMILIES[family]
    except KeyError:
        raise InvalidParameterError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}") from None
    if len(params) != arity:
        raise InvalidParameterError(f"{family} takes {arity} parameter(s), got {len(params)}")
    return fn(*params)


# -- operations -------------------------------------------------------------


def disjoint_union(g: Graph, h: Graph) -> Graph:
    n = g.n + h.n
    _need(n <= MAX_VERTICES, f"disjoint union has {n} vertices, cap is {MAX_VERTICES}")
    shift = g.n
    return Graph._trusted(n, g.adj + tuple(row << shift for row in h.adj))


def join(g: Graph, h: Graph) -> Graph:
    n = g.n + h.n
    _need(n <= MAX_VERTICES, f"join has {n} vertices, cap is {MAX_VERTICES}")
    gmask = (1 << g.n) - 1
    hmask = ((1 << h.n) - 1) << g.n
    rows = tuple(row | hmask for row in g.adj) + tuple((row << g.n) | gmask for row in h.adj)
    return Graph._trusted(n, rows)


def generalized_friendship(p: int, q: int) -> Graph:
    """F_{p,q} = K_1 join p*K_q. Vertex 0 is the hub; clique i is 1+iq..(i+1)q."""
    _need(p >= 1 and q >= 1, f"generalized_friendship needs p >= 1 and q >= 1, got ({p}, {q})")
    _need(p * q + 1 <= MAX_VERTICES, f"pq+1 = {p * q + 1} exceeds {MAX_VERTICES}")
    cliques = empty(0)
    for _ in range(p):
        cliques = disjoint_union(cliques, complete(q))
    return join(complete(1), cliques)


def gamma_graph(k: int) -> Graph:
    """The 4k-vertex graph: a 2k-cycle with two pendant paths of length k at vertex 0.

    Cycle 0..2k-1 comes first, then the arms 2k..3k-1 and 3k..4k-1, each
    running outward from vertex 0. Vertex 0 is the center of the (2k+1)-path.
    """
    _need(k >= 2, f"gamma_graph needs k >= 2 (a 2k-cycle must be simple), got {k}")
    _need(4 * k <= MAX_VERTICES, f"4k = {4 * k} exceeds {MAX_VERTICES}")
    c = 2 * k
    edges = [(i, (i + 1) % c) for i in range(c)]
    for start in (c, c + k):
        prev = 0
        for v in range(start, start + k):
            edges.append((prev, v))
            prev = v
    return Graph.from_edges(4 * k, edges)

"""Isomorph-free generation of small graphs by canonical augmentation.

A graph on n vertices is grown from a canonical graph on n-1 vertices by
adding vertex n-1 adjacent to a subset S. The child is kept only when the
new vertex lies in the automorphism orbit of the child's canonical deletion
vertex: among vertices of maximum degree, then maximum sorted neighbour
degree tuple, the one with the smallest canonical label. The degree rule is
applied while choosing S, so most non-canonical extensions are never built.
Children of one parent that are isomorphic (S and its image under the
parent's automorphisms) are merged with a per-parent set.

All graphs on n-1 vertices are used as parents, because the deleted vertex
of a connected graph may be a cut vertex; connectivity filters the output.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Optional

from . import graph6
from .canon import CanonicalGraph, canonical_form, canonical_labeling, orbit_ids
from .graph import Graph, GraphError

DEFAULT_CAP = 10
HARD_CAP = 12


class EnumerationCapError(GraphError):
    pass


@dataclass(frozen=True)
class EnumFilter:
    n: int
    connected_only: bool = False
    min_degree: Optional[int] = None
    max_degree: Optional[int] = None

    def __post_init__(self):
        if self.n < 1:
            raise GraphError(f"filter needs n >= 1, got {self.n}")
        lo = 0 if self.min_degree is None else self.min_degree
        hi = self.n - 1 if self.max_degree is None else self.max_degree
        if lo < 0 or hi > self.n - 1 or lo > hi:
            raise GraphError(f"inconsistent degree bounds min={self.min_degree} max={self.max_degree} for n={self.n}")

    def accepts(self, g: Graph) -> bool:
        if self.min_degree is not None and g.delta < self.min_degree:
            return False
        if self.max_degree is not None and g.max_deg > self.max_degree:
            return False
        if self.connected_only and not g.is_connected():
            return False
        return True


def check_cap(n: int, override: bool = False) -> None:
    cap = HARD_CAP if override else DEFAULT_CAP
    if n > cap:
        hint = "" if override else f"; pass an override to allow up to {HARD_CAP}"
        raise EnumerationCapError(f"n={n} exceeds the enumeration cap {cap}{hint}")


def _nbr_degree_key(rows, deg, v):
    r = rows[v]
    out = []
    while r:
        low = r & -r
        out.append(deg[low.bit_length() - 1])
        r ^= low
    out.sort()
    return out


def _children(parent: Graph, max_degree: int) -> list[tuple[str, Graph]]:
    """Canonical children of one canonical parent, deduplicated, unsorted."""
    p = parent.n
    n = p + 1
    pdeg = parent.deg
    prow = parent.adj
    vbit = 1 << p
    seen: dict[tuple[int, ...], Graph] = {}
    for k in range(parent.max_deg, min(p, max_degree) + 1):
        allowed = [u for u in range(p) if pdeg[u] < k]
        if k and len(allowed) < k:
            continue
        for subset in combinations(allowed, k):
            smask = 0
            for u in subset:
                smask |= 1 << u
            rows = tuple(r | vbit if smask >> u & 1 else r for u, r in enumerate(prow)) + (smask,)
            deg = tuple(d + (smask >> u & 1) for u, d in enumerate(pdeg)) + (k,)
            ties = [u for u in range(p) if deg[u] == k]
            if ties:
                vkey = _nbr_degree_key(rows, deg, p)
                best = []
                beaten = False
                for u in ties:
                    key = _nbr_degree_key(rows, deg, u)
                    if key > vkey:
                        beaten = True
                        break
                    if key == vkey:
                        best.append(u)
                if beaten:
                    continue
            else:
                best = []
            g = Graph._trusted(n, rows)
            lab = canonical_labeling(g)
            if best:
                best.append(p)
                m = min(best, key=lab.lab.__getitem__)
                if m != p:
                    orb = orbit_ids(n, lab.generators)
                    if orb[m] != orb[p]:
                        continue
            if lab.cert not in seen:
                seen[lab.cert] = Graph._trusted(n, lab.cert)
    return [(graph6.encode(cg), cg) for cg in seen.values()]


def _children_batch(args):
    parents, max_degree = args
    out = []
    for g in parents:
        out.extend(_children(g, max_degree))
    return out


def _extend(parents: list[Graph], max_degree: int, workers: int) -> list[tuple[str, Graph]]:
    if workers <= 1 or len(parents) < 64:
        kids = _children_batch((parents, max_degree))
    else:
        size = max(1, len(parents) // (workers * 8))
        chunks = [(parents[i:i + size], max_degree) for i in range(0, len(parents), size)]
        kids = []
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_children_batch, chunks):
                kids.extend(part)
    kids.sort(key=lambda t: t[0])
    return kids


def default_workers() -> int:
    return os.cpu_count() or 1


@lru_cache(maxsize=32)
def _all_graphs(n: int, max_degree: int, workers: int) -> tuple[tuple[str, Graph], ...]:
    if n == 1:
        g = Graph._trusted(1, (0,))
        return ((graph6.encode(g), g),)
    parents = [g for _, g in _all_graphs(n - 1, min(max_degree, n - 2), workers)]
    return tuple(_extend(parents, max_degree, workers))


def enumerate_graphs(f: EnumFilter, *, override: bool = False, workers: Optional[int] = None) -> Iterator[CanonicalGraph]:
    """Yield one canonical representative per isomorphism class, sorted by graph6."""
    check_cap(f.n, override)
    w = default_workers() if workers is None else workers
    hi = f.n - 1 if f.max_degree is None else f.max_degree
    for s, g in _all_graphs(f.n, hi, w):
        if f.accepts(g):
            yield CanonicalGraph(s, g)


def count_graphs(f: EnumFilter, *, override: bool = False, workers: Optional[int] = None) -> int:
    check_cap(f.n, override)
    w = default_workers() if workers is None else workers
    hi = f.n - 1 if f.max_degree is None else f.max_degree
    if f.n == 1:
        return sum(1 for _ in enumerate_graphs(f, override=override, workers=w))
    # the last level is counted per parent, never stored
    parents = [g for _, g in _all_graphs(f.n - 1, min(hi, f.n - 2), w)]
    total = 0
    for g in parents:
        total += sum(1 for _, c in _children(g, hi) if f.accepts(c))
    return total


def import_stream(lines: Iterable[str], f: EnumFilter) -> list[CanonicalGraph]:
    """Canonicalize an external graph6 stream (e.g. from geng) under the same filter.

    Duplicates are merged, so the result is comparable with
    ``enumerate_graphs`` output.
    """
    out: dict[str, CanonicalGraph] = {}
    for g in graph6.read_lines(lines):
        if g.n != f.n or not f.accepts(g):
            continue
        cf = canonical_form(g)
        out.setdefault(cf.g6, cf)
    return [out[k] for k in sorted(out)]


def export_stream(graphs: Iterable[CanonicalGraph], out) -> int:
    count = 0
    for cg in graphs:
        out.write(cg.g6 + "\n")
        count += 1
    return count

"""Determined-by-spectrum searches over the enumerated graphs.

Candidates are screened by the exact spectral moments tr L and tr L^2
before the full fingerprint is computed; both are functions of the
spectrum, so the screen never drops a cospectral graph. Edge count is not a
valid screen (K_{1,3} and C_4 are cospectral with 3 and 4 edges).
"""

from __future__ import annotations

import json
import logging
import os
import random
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from . import graph6
from .canon import CanonicalGraph, canonical_form
from .enumeration import HARD_CAP, EnumerationCapError, EnumFilter, enumerate_graphs
from .graph import Graph, GraphError, complete_bipartite, cycle, gamma_graph, generalized_friendship, star
from .spectral import Fingerprint, fingerprint, trace_moments
from .structure import lemma_witness_check

log = logging.getLogger(__name__)

CACHE_ENV = "NLSPEC_CACHE"
DS_DEFAULT_CAP = 9


def check_ds_cap(n: int, max_n: int = DS_DEFAULT_CAP) -> bool:
    """Raise unless n <= max_n; returns whether enumeration needs its override."""
    if max_n > HARD_CAP:
        raise EnumerationCapError(f"max_n={max_n} exceeds the hard cap {HARD_CAP}")
    if n > max_n:
        raise EnumerationCapError(f"n={n} exceeds the search cap {max_n}; raise max_n (up to {HARD_CAP})")
    return max_n > 10


class CacheCorruptError(RuntimeError):
    pass


class FingerprintCache:
    """Append-only NDJSON store of fingerprints keyed by canonical graph6.

    Each line is {"g6": ..., "fp": {"det": [...], "degprod": ..., "isolated": ...}}.
    A malformed final line (interrupted write) is cut off with a warning;
    a malformed line anywhere else aborts the load. On load a random 1%
    sample (at least one entry) is recomputed and must match.
    """

    def __init__(self, path, *, audit_fraction: float = 0.01, seed: int = 0):
        self.path = Path(path)
        self.entries: dict[str, dict] = {}
        self.hits = 0
        self.misses = 0
        self._load()
        self._audit(audit_fraction, random.Random(seed))

    @classmethod
    def from_env(cls) -> Optional["FingerprintCache"]:
        p = os.environ.get(CACHE_ENV)
        return cls(p) if p else None

    def _load(self) -> None:
        if not self.path.exists():
            return
        data = self.path.read_bytes()
        lines = data.split(b"\n")
        offset = 0
        for i, raw in enumerate(lines):
            start = offset
            offset += len(raw) + 1
            if not raw.strip():
                continue
            try:
                rec = json.loads(raw)
                g6, fp = rec["g6"], rec["fp"]
                Fingerprint.from_json(fp)
            except (ValueError, KeyError, TypeError) as exc:
                rest = b"".join(lines[i + 1:]).strip()
                if rest:
                    raise CacheCorruptError(f"{self.path}: malformed line {i + 1}: {exc}") from exc
                log.warning("%s: dropping malformed trailing line %d (interrupted write?)", self.path, i + 1)
                with open(self.path, "r+b") as fh:
                    fh.truncate(start)
                break
            self.entries[g6] = fp

    def _audit(self, fraction: float, rng: random.Random) -> None:
        if not self.entries:
            return
        keys = sorted(self.entries)
        k = max(1, int(len(keys) * fraction))
        for g6 in rng.sample(keys, k):
            fresh = fingerprint(graph6.decode(g6)).to_json()
            if fresh != self.entries[g6]:
                raise CacheCorruptError(f"{self.path}: cached fingerprint for {g6!r} does not match recomputation")

    def get(self, g6: str, g: Graph) -> Fingerprint:
        rec = self.entries.get(g6)
        if rec is not None:
            self.hits += 1
            return Fingerprint.from_json(rec)
        self.misses += 1
        fp = fingerprint(g)
        self.put(g6, fp)
        return fp

    def put(self, g6: str, fp: Fingerprint) -> None:
        rec = fp.to_json()
        self.entries[g6] = rec
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with open(self.path, "a") as fh:
            fh.write(json.dumps({"g6": g6, "fp": rec}, separators=(",", ":")) + "\n")

    def __len__(self) -> int:
        return len(self.entries)


def _fp(cg: CanonicalGraph, cache: Optional[FingerprintCache]) -> Fingerprint:
    return cache.get(cg.g6, cg.graph) if cache is not None else fingerprint(cg.graph)


@dataclass
class SearchResult:
    target: CanonicalGraph
    matches: list[CanonicalGraph]  # every class with the target's spectrum, target included
    search_space: int

    @property
    def mates(self) -> list[CanonicalGraph]:
        return [m for m in self.matches if m.g6 != self.target.g6]


def cospectral_search(
    target: Graph,
    n: Optional[int] = None,
    connected_only: bool = True,
    *,
    max_n: int = DS_DEFAULT_CAP,
    workers: Optional[int] = None,
    cache: Optional[FingerprintCache] = None,
) -> SearchResult:
    n = target.n if n is None else n
    if n != target.n:
        raise GraphError(f"search size n={n} differs from the target's {target.n} vertices")
    override = check_ds_cap(n, max_n)
    tcan = canonical_form(target)
    tfp = fingerprint(target)
    tmom = trace_moments(target)
    matches = []
    space = 0
    for cg in enumerate_graphs(EnumFilter(n, connected_only=connected_only), override=override, workers=workers):
        space += 1
        if trace_moments(cg.graph) != tmom:
            continue
        if _fp(cg, cache) == tfp:
            matches.append(cg)
    for cg in matches:
        # re-verify from scratch before reporting
        if fingerprint(cg.graph) != tfp:
            raise AssertionError(f"cached fingerprint disagreed for {cg.g6}")
    return SearchResult(tcan, matches, space)


def find_cospectral_mates(target: Graph, n: Optional[int] = None, connected_only: bool = True, **kw) -> list[CanonicalGraph]:
    """Classes on n vertices with the target's spectrum, excluding the target's own class."""
    return cospectral_search(target, n, connected_only, **kw).mates


def theorem_predicts_determined(p: int, q: int) -> bool:
    return q >= 2 or p <= 2


@dataclass
class DsReport:
    p: int
    q: int
    n: int
    search_space: int
    mates: list[str]
    determined: bool
    elapsed: float  # seconds
    connected_only: bool = True
    witness_passed: Optional[bool] = None  # degree witnesses on every match, p, q >= 2

    @property
    def predicted(self) -> bool:
        return theorem_predicts_determined(self.p, self.q)

    @property
    def agrees(self) -> bool:
        return self.determined == self.predicted and self.witness_passed is not False

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "schema": 1,
            "p": self.p,
            "q": self.q,
            "n": self.n,
            "search_space": self.search_space,
            "connected_only": self.connected_only,
            "mates": self.mates,
            "determined": self.determined,
            "predicted": self.predicted,
            "witness_passed": self.witness_passed,
        }
        if timing:
            out["elapsed_ms"] = round(self.elapsed * 1000)
        return out


def verify_ds(p: int, q: int, *, connected_only: bool = True, max_n: int = DS_DEFAULT_CAP,
              workers: Optional[int] = None, cache: Optional[FingerprintCache] = None) -> DsReport:
    """Exhaustively look for graphs sharing F_{p,q}'s spectrum on pq+1 vertices.

    A cospectral graph has 0 with the multiplicity of F_{p,q}, i.e. once, so it
    is connected; ``connected_only=False`` searches everything to audit that.
    """
    if p < 1 or q < 1:
        raise GraphError(f"verify_ds needs p >= 1 and q >= 1, got ({p}, {q})")
    n = p * q + 1
    check_ds_cap(n, max_n)
    t0 = time.perf_counter()
    res = cospectral_search(generalized_friendship(p, q), n, connected_only,
                            max_n=max_n, workers=workers, cache=cache)
    witness = None
    if p >= 2 and q >= 2:
        witness = all(lemma_witness_check(m.graph, p, q).passed for m in res.matches)
    mates = [m.g6 for m in res.mates]
    return DsReport(p, q, n, res.search_space, mates, not mates, time.perf_counter() - t0, connected_only, witness)


def star_mate_expectation(p: int) -> list[CanonicalGraph]:
    """{K_{r,s} : r + s = p + 1, 2 <= r <= s}, sorted by graph6."""
    out = {}
    for r in range(2, (p + 1) // 2 + 1):
        cf = canonical_form(complete_bipartite(r, p + 1 - r))
        out[cf.g6] = cf
    return [out[k] for k in sorted(out)]


def verify_star_mates(p: int, *, max_n: int = DS_DEFAULT_CAP, workers: Optional[int] = None,
                      cache: Optional[FingerprintCache] = None) -> list[CanonicalGraph]:
    """All mates of K_{1,p} on p+1 vertices (searching disconnected graphs too)."""
    if p < 3:
        raise GraphError(f"verify_star_mates needs p >= 3, got {p}")
    return find_cospectral_mates(star(p), p + 1, connected_only=False,
                                 max_n=max_n, workers=workers, cache=cache)


def star_mate_report(p: int, **kw) -> dict:
    found = verify_star_mates(p, **kw)
    expected = star_mate_expectation(p)
    return {
        "schema": 1,
        "p": p,
        "n": p + 1,
        "mates": [m.g6 for m in found],
        "expected_r_plus_s_eq_p_plus_1": [m.g6 for m in expected],
        "matches_p_plus_1_reading": [m.g6 for m in found] == [m.g6 for m in expected],
        # r + s = q + 1 = 2 would mean K_{1,1}, which has 2 vertices, not p + 1
        "matches_q_plus_1_reading": False,
    }


@dataclass
class CycleMateReport:
    k: int
    n: int
    cospectral: bool
    distinct: bool
    exhaustive: bool
    other_mates: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.cospectral and self.distinct and not self.other_mates

    def to_json(self) -> dict:
        return {"schema": 1, "k": self.k, "n": self.n, "cospectral": self.cospectral,
                "distinct": self.distinct, "exhaustive": self.exhaustive,
                "other_mates": self.other_mates, "ok": self.ok}


def cycle_mate_report(k: int, *, max_n: int = DS_DEFAULT_CAP, workers: Optional[int] = None,
                      cache: Optional[FingerprintCache] = None) -> CycleMateReport:
    gamma = gamma_graph(k)
    n = 4 * k
    check_ds_cap(n, max_n)
    c = cycle(n)
    gcan, ccan = canonical_form(gamma), canonical_form(c)
    cospec = fingerprint(gamma) == fingerprint(c)
    exhaustive = n <= 9
    others = []
    if exhaustive:
        mates = find_cospectral_mates(c, n, connected_only=True, max_n=max_n, workers=workers, cache=cache)
        others = [m.g6 for m in mates if m.g6 != gcan.g6]
        if gcan.g6 not in {m.g6 for m in mates}:
            cospec = False
    return CycleMateReport(k, n, cospec, gcan.g6 != ccan.g6, exhaustive, others)


def verify_cycle_mates(k: int, **kw) -> bool:
    return cycle_mate_report(k, **kw).ok

"""Exact checks of the three-eigenvalue characterization and the degree
conclusions that pin down a graph cospectral with F_{p,q}.

For a connected graph with m edges and q >= 2, the normalized Laplacian has
exactly the distinct eigenvalues 0, 1/q, 1+1/q iff

    d^_u     = (q+1) d_u^2 / (2 m q^2) + (q-1) d_u / q^2     every vertex u   (eq. 1)
    lam^_uv  = (q+1) d_u d_v / (2 m q^2) + (q-2) / q         every edge uv    (eq. 2)
    mu^_uv   = (q+1) d_u d_v / (2 m q^2)                     every non-edge   (eq. 3)

where d^_u sums 1/d_v over neighbours of u, and lam^/mu^ sum 1/d_w over
common neighbours w of an adjacent / non-adjacent pair.

The three equations only force the spectrum into {0, 1/q, 1+1/q}. K_{q+1}
(spectrum 0, 1+1/q) satisfies them too, so three_eigenvalue_check rejects
complete graphs after the equations pass; equations_hold is the bare test.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .graph import Graph, GraphError, InvalidParameterError
from .spectral import frac_str


class StructureError(GraphError):
    pass


@dataclass(frozen=True)
class Violation:
    check: Union[int, str]  # equation 1/2/3, or the name of a witness condition
    at: tuple[int, ...]
    lhs: Fraction
    rhs: Fraction

    def to_json(self) -> dict:
        return {"equation": self.check, "at": list(self.at), "lhs": frac_str(self.lhs), "rhs": frac_str(self.rhs)}


@dataclass(frozen=True)
class CheckReport:
    passed: bool
    first_violation: Optional[Violation] = None

    def __post_init__(self):
        if self.passed != (self.first_violation is None):
            raise ValueError("passed must be True exactly when there is no violation")

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "violation": None if self.first_violation is None else self.first_violation.to_json(),
        }


OK = CheckReport(True)


class StructureProfile:
    """d^_u for every vertex, and common-neighbour sums per pair on demand."""

    def __init__(self, g: Graph):
        if g.n < 2 or not g.is_connected():
            raise StructureError("structure profile needs a connected graph with at least 2 vertices")
        self.graph = g
        self._inv = [Fraction(1, d) for d in g.deg]
        self.d_hat = [sum((self._inv[u] for u in g.neighbors(v)), Fraction(0)) for v in range(g.n)]

    def _common(self, u: int, v: int) -> Fraction:
        g = self.graph
        common = g.adj[u] & g.adj[v]
        total = Fraction(0)
        while common:
            low = common & -common
            total += self._inv[low.bit_length() - 1]
            common ^= low
        return total

    def lambda_hat(self, u: int, v: int) -> Fraction:
        if not self.graph.has_edge(u, v):
            raise StructureError(f"lambda_hat needs an edge, ({u}, {v}) is not one")
        return self._common(u, v)

    def mu_hat(self, u: int, v: int) -> Fraction:
        if u == v or self.graph.has_edge(u, v):
            raise StructureError(f"mu_hat needs distinct non-adjacent vertices, got ({u}, {v})")
        return self._common(u, v)


def structure_profile(g: Graph) -> StructureProfile:
    return StructureProfile(g)


def three_eigenvalue_check(g: Graph, q: int) -> CheckReport:
    report = equations_hold(g, q)
    if report.passed and g.m == g.n * (g.n - 1) // 2:
        # complete graph: two distinct eigenvalues, not three
        return CheckReport(False, Violation("complete", (), Fraction(2), Fraction(3)))
    return report


def equations_hold(g: Graph, q: int) -> CheckReport:
    if q < 2:
        raise InvalidParameterError(f"three_eigenvalue_check needs q >= 2, got {q}")
    prof = StructureProfile(g)
    deg = g.deg
    scale = Fraction(q + 1, 2 * g.m * q * q)
    lin = Fraction(q - 1, q * q)
    shift = Fraction(q - 2, q)
    for u in range(g.n):
        rhs = scale * deg[u] * deg[u] + lin * deg[u]
        if prof.d_hat[u] != rhs:
            return CheckReport(False, Violation(1, (u,), prof.d_hat[u], rhs))
    for u in range(g.n):
        for v in range(u + 1, g.n):
            base = scale * deg[u] * deg[v]
            lhs = prof._common(u, v)
            if g.has_edge(u, v):
                if lhs != base + shift:
                    return CheckReport(False, Violation(2, (u, v), lhs, base + shift))
            elif lhs != base:
                return CheckReport(False, Violation(3, (u, v), lhs, base))
    return OK


def lemma_witness_check(g: Graph, p: int, q: int) -> CheckReport:
    """Degree structure forced on any graph cospectral with F_{p,q} (p, q >= 2):
    connected, pq+1 vertices, 2 <= min degree <= q+1, one vertex of degree pq
    and every other of degree q, and 2m = pq(q+1)."""
    if p < 2 or q < 2:
        raise InvalidParameterError(f"lemma_witness_check needs p >= 2 and q >= 2, got ({p}, {q})")
    F = Fraction
    if not g.is_connected():
        return CheckReport(False, Violation("connected", (), F(len(g.components())), F(1)))
    if g.n != p * q + 1:
        return CheckReport(False, Violation("vertex_count", (), F(g.n), F(p * q + 1)))
    if not 2 <= g.delta <= q + 1:
        bound = 2 if g.delta < 2 else q + 1
        return CheckReport(False, Violation("min_degree", (), F(g.delta), F(bound)))
    hubs = [v for v in range(g.n) if g.deg[v] == p * q]
    if len(hubs) != 1:
        return CheckReport(False, Violation("hub_count", tuple(hubs), F(len(hubs)), F(1)))
    for v in range(g.n):
        if v != hubs[0] and g.deg[v] != q:
            return CheckReport(False, Violation("degree", (v,), F(g.deg[v]), F(q)))
    if 2 * g.m != p * q * (q + 1):
        return CheckReport(False, Violation("edge_count", (), F(2 * g.m), F(p * q * (q + 1))))
    return OK

"""Exact normalized-Laplacian characteristic polynomials.

For a graph without isolated vertices the normalized Laplacian is similar
to I - D^-1 A, so

    det(x I - L) = det((x - 1) D + A) / prod(d_v).

Isolated vertices have an all-zero row in L and contribute a factor x each.
A Fingerprint keeps the integer determinant, the degree product and the
isolated count; it is compared by cross-multiplication and never divided.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Optional

import numpy as np

from .graph import Graph, InvalidParameterError
from .poly import IntPolynomial, linear_det_from_parts, poly_from_roots


@dataclass(frozen=True, eq=False)
class Fingerprint:
    det_poly: IntPolynomial
    deg_product: int
    isolated_count: int

    def _shifted(self, extra: int) -> tuple[int, ...]:
        return (0,) * extra + self.det_poly.coeffs

    def __eq__(self, other):
        if not isinstance(other, Fingerprint):
            return NotImplemented
        # (P / a) x^i == (Q / b) x^j  <=>  b P x^i == a Q x^j
        lhs = [self_c * other.deg_product for self_c in self._shifted(self.isolated_count)]
        rhs = [c * self.deg_product for c in other._shifted(other.isolated_count)]
        return lhs == rhs

    def __hash__(self):
        return hash(self.monic())

    def monic(self) -> tuple[Fraction, ...]:
        """Coefficients of det(xI - L), low-to-high."""
        return tuple(Fraction(c, self.deg_product) for c in self._shifted(self.isolated_count))

    @property
    def n(self) -> int:
        return self.det_poly.degree + self.isolated_count

    def zero_multiplicity(self) -> int:
        k = 0
        for c in self.det_poly.coeffs:
            if c:
                break
            k += 1
        return k + self.isolated_count

    def root_multiplicity(self, root: Fraction) -> int:
        root = Fraction(root)
        if root == 0:
            return self.zero_multiplicity()
        p = self.det_poly
        k = 0
        while True:
            q = divide_linear(p, root.denominator, root.numerator)
            if q is None:
                return k
            p, k = q, k + 1

    def has_distinct_roots(self, roots: Iterable[Fraction]) -> bool:
        """True iff the set of distinct eigenvalues is exactly ``roots`` (all rational)."""
        roots = {Fraction(r) for r in roots}
        p = self.det_poly
        iso = self.isolated_count
        for r in roots:
            if r == 0:
                k = 0
                while p.coeffs and p.coeffs[0] == 0:
                    p = IntPolynomial(p.coeffs[1:])
                    k += 1
                if k + iso == 0:
                    return False
                continue
            k = 0
            while True:
                q = divide_linear(p, r.denominator, r.numerator)
                if q is None:
                    break
                p, k = q, k + 1
            if k == 0:
                return False
        if 0 not in roots and iso:
            return False
        return p.degree == 0

    def to_json(self) -> dict:
        return {
            "det": [str(c) for c in self.det_poly.coeffs],
            "degprod": str(self.deg_product),
            "isolated": self.isolated_count,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Fingerprint":
        return cls(IntPolynomial(int(c) for c in obj["det"]), int(obj["degprod"]), int(obj["isolated"]))


def divide_linear(p: IntPolynomial, a: int, b: int) -> Optional[IntPolynomial]:
    """p / (a x - b) if it divides exactly, else None. gcd(a, b) must be 1."""
    cs = p.coeffs
    d = len(cs) - 1
    if d < 1:
        return None
    q = [0] * d
    qi, r = divmod(cs[d], a)
    if r:
        return None
    q[d - 1] = qi
    for i in range(d - 1, 0, -1):
        qi, r = divmod(cs[i] + b * q[i], a)
        if r:
            return None
        q[i - 1] = qi
    if cs[0] != -b * q[0]:
        return None
    return IntPolynomial(q)


def fingerprint(g: Graph) -> Fingerprint:
    live = [v for v in range(g.n) if g.deg[v]]
    iso = g.n - len(live)
    index = {v: i for i, v in enumerate(live)}
    k = len(live)
    a = [[0] * k for _ in range(k)]
    b = [[0] * k for _ in range(k)]
    prod = 1
    for i, v in enumerate(live):
        d = g.deg[v]
        prod *= d
        a[i][i] = d
        b[i][i] = -d
        for u in g.neighbors(v):
            b[i][index[u]] = 1
    return Fingerprint(linear_det_from_parts(a, b), prod, iso)


def trace_moments(g: Graph) -> tuple[int, Fraction]:
    """(tr L, tr L^2) exactly; both are spectral invariants.

    tr L^2 = (#non-isolated) + sum over ordered adjacent pairs of 1/(d_u d_v).
    """
    deg = g.deg
    live = sum(1 for d in deg if d)
    if not g.m:
        return live, Fraction(live)
    base = lcm(*range(1, g.max_deg + 1))
    den = base * base
    total = 0
    for v, row in enumerate(g.adj):
        dv = deg[v]
        while row:
            low = row & -row
            total += den // (dv * deg[low.bit_length() - 1])
            row ^= low
    return live, live + Fraction(total, den)


@dataclass(frozen=True)
class ClosedFormSpectrum:
    pairs: tuple[tuple[Fraction, int], ...]

    def __post_init__(self):
        vals = [v for v, _ in self.pairs]
        if any(m <= 0 for _, m in self.pairs) or vals != sorted(set(vals)):
            raise ValueError("eigenvalues must be strictly increasing with positive multiplicities")

    @property
    def n(self) -> int:
        return sum(m for _, m in self.pairs)

    def to_json(self) -> list:
        return [{"value": frac_str(v), "multiplicity": m} for v, m in self.pairs]


def closed_form_fpq(p: int, q: int) -> ClosedFormSpectrum:
    """Spectrum of F_{p,q}: {0, 1+1/q} for p = 1, else {0, 1/q, 1+1/q}
    with multiplicities 1, p-1, pq-p+1."""
    if p < 1 or q < 1:
        raise InvalidParameterError(f"closed_form_fpq needs p >= 1 and q >= 1, got ({p}, {q})")
    hi = 1 + Fraction(1, q)
    if p == 1:
        return ClosedFormSpectrum(((Fraction(0), 1), (hi, q)))
    return ClosedFormSpectrum(((Fraction(0), 1), (Fraction(1, q), p - 1), (hi, p * q - p + 1)))


def spectrum_to_fingerprint(s: ClosedFormSpectrum, deg_product: int) -> Fingerprint:
    return Fingerprint(poly_from_roots(s.pairs, deg_product), deg_product, 0)


def fpq_deg_product(p: int, q: int) -> int:
    if p == 1:
        return q ** (q + 1)
    return (p * q) * q ** (p * q)


def is_cospectral(g: Graph, h: Graph) -> bool:
    """Equal normalized-Laplacian spectra. Isomorphic pairs also return True."""
    if g.n != h.n:
        return False
    return fingerprint(g) == fingerprint(h)


def normalized_laplacian(g: Graph) -> np.ndarray:
    n = g.n
    L = np.zeros((n, n))
    inv = [d ** -0.5 if d else 0.0 for d in g.deg]
    for v in range(n):
        if g.deg[v]:
            L[v, v] = 1.0
        for u in g.neighbors(v):
            L[v, u] = -inv[u] * inv[v]
    return L


def float_spectrum(g: Graph) -> list[float]:
    """Display-only eigenvalues, ascending."""
    if g.n == 0:
        return []
    return sorted(float(x) for x in np.linalg.eigvalsh(normalized_laplacian(g)))


def group_multiplicities(values: list[float], tol: float = 1e-9) -> list[tuple[float, int]]:
    out: list[list] = []
    for x in values:
        if out and abs(x - out[-1][0]) <= tol:
            out[-1][1] += 1
        else:
            out.append([x, 1])
    return [(v, m) for v, m in out]


def frac_str(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"

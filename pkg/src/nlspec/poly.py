"""Exact integer polynomials and determinants of linear polynomial matrices."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

# Rationals throughout the package are fractions.Fraction (always reduced,
# positive denominator).
BigRational = Fraction


class NotDivisibleError(ArithmeticError):
    pass


class IntPolynomial:
    """Dense polynomial with int coefficients, ``coeffs[i]`` multiplies x**i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def x(cls) -> "IntPolynomial":
        return cls((0, 1))

    @classmethod
    def const(cls, c: int) -> "IntPolynomial":
        return cls((c,))

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial((other,))
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = _lift(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPolynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        other = _lift(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        out, base = IntPolynomial((1,)), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __call__(self, t):
        return self.eval(t)

    def eval(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def divide_exact(self, d: int) -> "IntPolynomial":
        if d == 0:
            raise ZeroDivisionError("divide_exact by zero")
        out = []
        for i, c in enumerate(self.coeffs):
            q, r = divmod(c, d)
            if r:
                raise NotDivisibleError(f"coefficient {c} of x^{i} is not divisible by {d}")
            out.append(q)
        return IntPolynomial(out)

    def divmod_linear(self, a: int, b: int) -> tuple[list[Fraction], Fraction]:
        """Divide by (a*x - b); returns (quotient coefficients, remainder) over Q."""
        # synthetic division by x - b/a, then scale the quotient by 1/a
        root = Fraction(b, a)
        cs = self.coeffs
        if not cs:
            return [], Fraction(0)
        acc = Fraction(0)
        quot = []
        for c in reversed(cs):
            acc = acc * root + c
            quot.append(acc)
        rem = quot.pop()
        quot.reverse()
        return [q / a for q in quot], rem

    def __repr__(self):
        if not self.coeffs:
            return "IntPolynomial(0)"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c:
                terms.append(f"{c}" + ("" if i == 0 else "x" if i == 1 else f"x^{i}"))
        return "IntPolynomial(" + " + ".join(terms) + ")"


def _lift(v) -> IntPolynomial:
    if isinstance(v, IntPolynomial):
        return v
    if isinstance(v, int):
        return IntPolynomial((v,))
    raise TypeError(f"cannot use {type(v).__name__} as an IntPolynomial")


def bareiss_det(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix by fraction-free elimination."""
    n = len(matrix)
    if n == 0:
        return 1
    a = [list(row) for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        rowk = a[k]
        for i in range(k + 1, n):
            rowi = a[i]
            f = rowi[k]
            for j in range(k + 1, n):
                rowi[j] = (pivot * rowi[j] - f * rowk[j]) // prev
            rowi[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def interpolate(values: Sequence[int]) -> IntPolynomial:
    """The polynomial of degree < len(values) taking ``values[t]`` at x = t.

    Newton's forward-difference form of the Lagrange interpolant:
    p(x) = sum_k (D^k p(0) / k!) * x(x-1)...(x-k+1). For integer-coefficient
    p every D^k p(0) is divisible by k!, so the arithmetic stays in ints and
    a failed division means the values do not come from such a polynomial.
    """
    diffs = list(values)
    newton = []
    fact = 1
    for k in range(len(values)):
        if k:
            fact *= k
        q, r = divmod(diffs[0], fact)
        if r:
            raise NotDivisibleError(f"forward difference {diffs[0]} not divisible by {k}!")
        newton.append(q)
        diffs = [diffs[i + 1] - diffs[i] for i in range(len(diffs) - 1)]
    out = [0] * len(values)
    falling = [1]  # x(x-1)...(x-k+1), low-to-high
    for k, c in enumerate(newton):
        if c:
            for i, f in enumerate(falling):
                out[i] += c * f
        # falling *= (x - k)
        nxt = [0] * (len(falling) + 1)
        for i, f in enumerate(falling):
            nxt[i + 1] += f
            nxt[i] -= k * f
        falling = nxt
    return IntPolynomial(out)


def linear_matrix_det(matrix: Sequence[Sequence[IntPolynomial]], *, check: bool = True) -> IntPolynomial:
    """Exact det of a matrix whose entries have degree <= 1.

    Evaluates at x = 0..n, takes Bareiss determinants, interpolates. With
    ``check`` the result is re-evaluated at x = n+1 against a fresh Bareiss
    determinant.
    """
    n = len(matrix)
    a = []
    b = []
    for row in matrix:
        if len(row) != n:
            raise ValueError("matrix is not square")
        ra, rb = [], []
        for e in row:
            e = _lift(e)
            if e.degree > 1:
                raise ValueError(f"entry {e!r} has degree > 1")
            cs = e.coeffs + (0, 0)
            rb.append(cs[0])
            ra.append(cs[1])
        a.append(ra)
        b.append(rb)
    return linear_det_from_parts(a, b, check=check)


def linear_det_from_parts(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]], *, check: bool = True) -> IntPolynomial:
    """det(x*A + B) for integer matrices A, B."""
    n = len(a)

    def at(t):
        return bareiss_det([[a[i][j] * t + b[i][j] for j in range(n)] for i in range(n)])

    p = interpolate([at(t) for t in range(n + 1)])
    if check and p.eval(n + 1) != at(n + 1):
        raise ArithmeticError("determinant interpolation failed its re-evaluation check")
    return p


def poly_from_roots(roots: Iterable[tuple[Fraction, int]], lead: int) -> IntPolynomial:
    """``lead * prod (x - r)^m`` which must have integer coefficients."""
    num = [Fraction(lead)]
    for r, mult in roots:
        r = Fraction(r)
        for _ in range(mult):
            nxt = [Fraction(0)] * (len(num) + 1)
            for i, c in enumerate(num):
                nxt[i + 1] += c
                nxt[i] -= r * c
            num = nxt
    out = []
    for i, c in enumerate(num):
        if c.denominator != 1:
            raise NotDivisibleError(f"coefficient of x^{i} is {c}, not an integer; lead {lead} too small")
        out.append(c.numerator)
    return IntPolynomial(out)

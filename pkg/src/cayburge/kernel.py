"""Exact arithmetic substrate for the enumeration engine.

Everything here is exact: integers are plain Python ints, rationals are
``fractions.Fraction``, and power series carry an explicit truncation
order.  No floating point is used anywhere in the package.

Contents:

* combinatorial number tables (binomial, multichoose, both Stirling
  kinds, Fubini numbers, ballot-by-block polynomials),
* composition generators shared by the word and matrix enumerators,
* ``IntPoly``, a dense univariate integer polynomial,
* ``BiPoly``, a sparse bivariate integer polynomial in (s, t),
* ``RatSeries``, a truncated power series over Fraction.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

__all__ = [
    "SeriesError",
    "NeedsZeroConstantTerm",
    "NeedsUnitConstantTerm",
    "TABLE_BOUND",
    "binomial",
    "multichoose",
    "stirling1",
    "stirling2",
    "fubini",
    "ballot_block_poly",
    "compositions",
    "weak_compositions",
    "IntPoly",
    "BiPoly",
    "RatSeries",
    "exact_div",
]


class SeriesError(ValueError):
    """A series operation was invoked outside its domain."""


class NeedsZeroConstantTerm(SeriesError):
    """Composition F(G) needs G(0) = 0; anything else is rejected."""


class NeedsUnitConstantTerm(SeriesError):
    """Reciprocal and rational expansion need a nonzero constant term."""


# ---------------------------------------------------------------------------
# number tables
#
# The Stirling and Fubini tables are built eagerly at import time up to
# TABLE_BOUND and are never mutated afterwards, so reads are plain list
# indexing.  ensure_tables() grows them (by wholesale replacement) if a
# caller genuinely needs more.

TABLE_BOUND = 64


def _build_tables(bound: int) -> tuple[list[list[int]], list[list[int]], list[int]]:
    s1 = [[0] * (bound + 1) for _ in range(bound + 1)]
    s2 = [[0] * (bound + 1) for _ in range(bound + 1)]
    s1[0][0] = s2[0][0] = 1
    for n in range(1, bound + 1):
        for k in range(1, n + 1):
            s1[n][k] = s1[n - 1][k - 1] + (n - 1) * s1[n - 1][k]
            s2[n][k] = s2[n - 1][k - 1] + k * s2[n - 1][k]
    fub = [
        sum(s2[n][k] * math.factorial(k) for k in range(n + 1))
        for n in range(bound + 1)
    ]
    return s1, s2, fub


_S1, _S2, _FUB = _build_tables(TABLE_BOUND)
_bound = TABLE_BOUND


def ensure_tables(bound: int) -> None:
    """Grow the memoized tables so that arguments up to ``bound`` work."""
    global _S1, _S2, _FUB, _bound
    if bound > _bound:
        _S1, _S2, _FUB = _build_tables(bound)
        _bound = bound


def binomial(n: int, k: int) -> int:
    """C(n, k); zero when k > n, error when either argument is negative."""
    if n < 0 or k < 0:
        raise ValueError(f"binomial needs nonnegative arguments, got ({n}, {k})")
    return math.comb(n, k)


def multichoose(m: int, n: int) -> int:
    """Number of multisets of size n drawn from m symbols.

    Equals C(m + n - 1, n).  The empty alphabet admits exactly the empty
    multiset, so multichoose(0, 0) = 1 and multichoose(0, n) = 0 for n > 0.
    """
    if m < 0 or n < 0:
        raise ValueError(f"multichoose needs nonnegative arguments, got ({m}, {n})")
    if m == 0:
        return 1 if n == 0 else 0
    return math.comb(m + n - 1, n)


def stirling1(n: int, k: int) -> int:
    """Unsigned Stirling number of the first kind: permutations of [n] with k cycles."""
    if n < 0 or k < 0:
        raise ValueError(f"stirling1 needs nonnegative arguments, got ({n}, {k})")
    if n > _bound:
        raise ValueError(f"stirling1({n}, ...) exceeds table bound {_bound}; call ensure_tables")
    return _S1[n][k] if k <= n else 0


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind: partitions of [n] into k blocks."""
    if n < 0 or k < 0:
        raise ValueError(f"stirling2 needs nonnegative arguments, got ({n}, {k})")
    if n > _bound:
        raise ValueError(f"stirling2({n}, ...) exceeds table bound {_bound}; call ensure_tables")
    return _S2[n][k] if k <= n else 0


def fubini(n: int) -> int:
    """Number of ballots (ordered set partitions) of an n-set."""
    if n < 0:
        raise ValueError(f"fubini needs a nonnegative argument, got {n}")
    if n > _bound:
        raise ValueError(f"fubini({n}) exceeds table bound {_bound}; call ensure_tables")
    return _FUB[n]


def ballot_block_poly(n: int) -> "IntPoly":
    """Polynomial whose t^i coefficient counts ballots of [n] with i blocks.

    Evaluating at t = 1 recovers ``fubini(n)``.
    """
    if n < 0:
        raise ValueError(f"ballot_block_poly needs a nonnegative argument, got {n}")
    return IntPoly(stirling2(n, i) * math.factorial(i) for i in range(n + 1))


def exact_div(num: int, den: int) -> int:
    """Integer division that refuses to round."""
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"non-integral division {num}/{den}")
    return q


# ---------------------------------------------------------------------------
# composition generators


def compositions(n: int, parts: int | None = None) -> Iterator[tuple[int, ...]]:
    """Compositions of n into positive parts, first part descending.

    With ``parts`` given, only compositions of exactly that length are
    produced.  The descending-first-part order makes the weakly
    increasing words 1^a1 2^a2 ... read off from successive compositions
    come out in lexicographic order.
    """
    if n < 0:
        raise ValueError("compositions needs n >= 0")
    if n == 0:
        if parts is None or parts == 0:
            yield ()
        return
    if parts == 0:
        return
    for first in range(n, 0, -1):
        rest_parts = None if parts is None else parts - 1
        for rest in compositions(n - first, rest_parts):
            yield (first,) + rest


def weak_compositions(
    total: int, parts: int, max_part: int | None = None
) -> Iterator[tuple[int, ...]]:
    """Length-``parts`` tuples of nonnegative ints summing to ``total``."""
    if total < 0 or parts < 0:
        raise ValueError("weak_compositions needs nonnegative arguments")
    if parts == 0:
        if total == 0:
            yield ()
        return
    top = total if max_part is None else min(total, max_part)
    for first in range(top, -1, -1):
        for rest in weak_compositions(total - first, parts - 1, max_part):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# dense univariate polynomials over Z


class IntPoly:
    """Dense univariate polynomial with integer coefficients.

    Coefficients are stored ascending by degree with trailing zeros
    stripped; the zero polynomial has an empty coefficient tuple.
    Instances are immutable and hashable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def coefficient(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1 or 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "IntPoly":
        if exponent < 0:
            raise ValueError("IntPoly exponent must be nonnegative")
        result = IntPoly((1,))
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x):
        """Evaluate by Horner; exact for int or Fraction arguments."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: "IntPoly") -> "IntPoly":
        acc = IntPoly()
        for c in reversed(self.coeffs):
            acc = acc * inner + IntPoly((c,))
        return acc

    def reverse_coefficients(self, deg: int) -> "IntPoly":
        """Mirror the coefficient window 0..deg, i.e. t^deg * p(1/t)."""
        if self.degree > deg:
            raise ValueError(f"degree {self.degree} exceeds reversal window {deg}")
        window = [self.coefficient(i) for i in range(deg + 1)]
        return IntPoly(reversed(window))

    def divide_exact(self, den: int) -> "IntPoly":
        return IntPoly(exact_div(c, den) for c in self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)!r})"


# ---------------------------------------------------------------------------
# sparse bivariate polynomials over Z


class BiPoly:
    """Sparse bivariate polynomial in s and t with integer coefficients.

    Terms are held in a dict keyed by (deg_s, deg_t); zero coefficients
    are dropped on construction so equality is structural.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[tuple[int, int], int] = {}
        for (i, j), c in items:
            if c:
                clean[(i, j)] = clean.get((i, j), 0) + c
                if not clean[(i, j)]:
                    del clean[(i, j)]
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("BiPoly is immutable")

    @classmethod
    def from_pair_product(cls, in_s: IntPoly, in_t: IntPoly) -> "BiPoly":
        """Product p(s) * q(t) viewed as a bivariate polynomial."""
        return cls(
            ((i, j), a * b)
            for i, a in enumerate(in_s.coeffs)
            if a
            for j, b in enumerate(in_t.coeffs)
            if b
        )

    def items(self) -> list[tuple[tuple[int, int], int]]:
        """Terms sorted by (deg_s, deg_t); the canonical external order."""
        return sorted(self.terms.items())

    def coefficient(self, i: int, j: int) -> int:
        return self.terms.get((i, j), 0)

    def __eq__(self, other) -> bool:
        return isinstance(other, BiPoly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "BiPoly") -> "BiPoly":
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0) + c
        return BiPoly(out)

    def __mul__(self, other: int) -> "BiPoly":
        return BiPoly({key: c * other for key, c in self.terms.items()})

    __rmul__ = __mul__

    def divide_exact(self, den: int) -> "BiPoly":
        return BiPoly({key: exact_div(c, den) for key, c in self.terms.items()})

    def eval(self, s, t):
        return sum(c * s**i * t**j for (i, j), c in self.terms.items())

    def eval_s(self, s: int) -> IntPoly:
        """Partial evaluation at a fixed s, leaving a polynomial in t."""
        out: dict[int, int] = {}
        for (i, j), c in self.terms.items():
            out[j] = out.get(j, 0) + c * s**i
        if not out:
            return IntPoly()
        return IntPoly(out.get(j, 0) for j in range(max(out) + 1))

    def __repr__(self) -> str:
        return f"BiPoly({dict(self.items())!r})"


# ---------------------------------------------------------------------------
# truncated power series over Fraction


class RatSeries:
    """Power series with Fraction coefficients, truncated at an explicit order.

    A series of order N carries exact coefficients of x^0 .. x^N and
    nothing beyond.  Binary operations on series of different orders
    truncate to the smaller order; the result's ``order`` records that.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if order is None:
            if not cs:
                raise ValueError("order is required for an empty coefficient list")
            order = len(cs) - 1
        if order < 0:
            raise ValueError("series order must be nonnegative")
        cs = cs[: order + 1]
        cs += [Fraction(0)] * (order + 1 - len(cs))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("RatSeries is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "RatSeries":
        return cls([], order=order) if order < 0 else cls([0], order=order)

    @classmethod
    def one(cls, order: int) -> "RatSeries":
        return cls([1], order=order)

    @classmethod
    def x(cls, order: int) -> "RatSeries":
        return cls([0, 1], order=order)

    @classmethod
    def from_intpoly(cls, p: IntPoly, order: int) -> "RatSeries":
        return cls(p.coeffs, order=order)

    @classmethod
    def geometric(cls, order: int) -> "RatSeries":
        """1/(1 - x)."""
        return cls([1] * (order + 1), order=order)

    @classmethod
    def exp(cls, order: int) -> "RatSeries":
        return cls([Fraction(1, math.factorial(n)) for n in range(order + 1)], order=order)

    @classmethod
    def log_one_plus_x(cls, order: int) -> "RatSeries":
        cs = [Fraction(0)] + [Fraction((-1) ** (n - 1), n) for n in range(1, order + 1)]
        return cls(cs, order=order)

    @classmethod
    def log_geometric(cls, order: int) -> "RatSeries":
        """log(1/(1 - x)); coefficient of x^n is 1/n for n >= 1."""
        cs = [Fraction(0)] + [Fraction(1, n) for n in range(1, order + 1)]
        return cls(cs, order=order)

    @classmethod
    def from_rational(cls, num: IntPoly, den: IntPoly, order: int) -> "RatSeries":
        """Expand num/den as a series; den must have nonzero constant term."""
        if den.coefficient(0) == 0:
            raise NeedsUnitConstantTerm("denominator has zero constant term")
        d0 = Fraction(den.coefficient(0))
        out: list[Fraction] = []
        for n in range(order + 1):
            acc = Fraction(num.coefficient(n))
            for k in range(1, n + 1):
                dk = den.coefficient(k)
                if dk:
                    acc -= dk * out[n - k]
            out.append(acc / d0)
        return cls(out, order=order)

    # -- accessors ---------------------------------------------------------

    def coefficient(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError("coefficient index must be nonnegative")
        if n > self.order:
            raise SeriesError(f"coefficient {n} beyond truncation order {self.order}")
        return self.coeffs[n]

    def integer_coefficients(self) -> list[int]:
        """All coefficients, asserting each is an integer."""
        out = []
        for n, c in enumerate(self.coeffs):
            if c.denominator != 1:
                raise ArithmeticError(f"coefficient of x^{n} is non-integral: {c}")
            out.append(c.numerator)
        return out

    def truncate(self, order: int) -> "RatSeries":
        if order > self.order:
            raise SeriesError(f"cannot extend order {self.order} to {order}")
        return RatSeries(self.coeffs[: order + 1], order=order)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RatSeries)
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "RatSeries") -> "RatSeries":
        order = min(self.order, other.order)
        return RatSeries(
            [self.coeffs[n] + other.coeffs[n] for n in range(order + 1)], order=order
        )

    def __neg__(self) -> "RatSeries":
        return RatSeries([-c for c in self.coeffs], order=self.order)

    def __sub__(self, other: "RatSeries") -> "RatSeries":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RatSeries([c * other for c in self.coeffs], order=self.order)
        order = min(self.order, other.order)
        out = [Fraction(0)] * (order + 1)
        for i in range(order + 1):
            a = self.coeffs[i]
            if a:
                for j in range(order + 1 - i):
                    b = other.coeffs[j]
                    if b:
                        out[i + j] += a * b
        return RatSeries(out, order=order)

    __rmul__ = __mul__

    def invert_unit(self) -> "RatSeries":
        """Multiplicative inverse; requires a nonzero constant term."""
        if self.coeffs[0] == 0:
            raise NeedsUnitConstantTerm("cannot invert a series with zero constant term")
        a0 = self.coeffs[0]
        out = [1 / a0]
        for n in range(1, self.order + 1):
            acc = Fraction(0)
            for k in range(1, n + 1):
                ak = self.coeffs[k]
                if ak:
                    acc += ak * out[n - k]
            out.append(-acc / a0)
        return RatSeries(out, order=self.order)

    def compose(self, inner: "RatSeries") -> "RatSeries":
        """Substitute ``inner`` for x; inner must have zero constant term."""
        if inner.coeffs[0] != 0:
            raise NeedsZeroConstantTerm("inner series has nonzero constant term")
        order = min(self.order, inner.order)
        inner = inner.truncate(order) if inner.order != order else inner
        acc = RatSeries.zero(order)
        for c in reversed(self.coeffs[: order + 1]):
            acc = acc * inner + RatSeries([c], order=order)
        return acc

    # -- EGF / OGF views ---------------------------------------------------

    def egf_to_ogf(self) -> "RatSeries":
        """Reinterpret exponential coefficients as ordinary ones (multiply by n!)."""
        return RatSeries(
            [c * math.factorial(n) for n, c in enumerate(self.coeffs)], order=self.order
        )

    def ogf_to_egf(self) -> "RatSeries":
        return RatSeries(
            [c / math.factorial(n) for n, c in enumerate(self.coeffs)], order=self.order
        )

    def __repr__(self) -> str:
        return f"RatSeries({[str(c) for c in self.coeffs]}, order={self.order})"

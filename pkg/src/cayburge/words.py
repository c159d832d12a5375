"""Cayley permutations, ballots, and their descent statistics.

A Cayley permutation of size n is a word w(1)..w(n) of positive integers
whose set of values is exactly {1, ..., max(w)}.  They are in bijection
with ballots (ordered set partitions) of {1, ..., n}: position i sits in
block number w(i).

Descents here come in two flavours.  The weak descent set of w is
{i < n : w(i) >= w(i+1)} and the strict one uses >.  Ascents mirror this
with <= and <.  Plateaus (w(i) = w(i+1)) are therefore both weak
descents and weak ascents; that asymmetry drives most of the counting
in this package.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Literal

from .kernel import IntPoly

Word = tuple[int, ...]
Ballot = tuple[frozenset[int], ...]

StatKind = Literal["weak-descent", "strict-descent", "weak-ascent", "strict-ascent"]

STAT_KINDS: tuple[StatKind, ...] = (
    "weak-descent",
    "strict-descent",
    "weak-ascent",
    "strict-ascent",
)

__all__ = [
    "Word",
    "Ballot",
    "StatKind",
    "STAT_KINDS",
    "is_cayley_word",
    "enumerate_cayley",
    "enumerate_linear_orders",
    "enumerate_ballots",
    "ballot_to_cayley",
    "cayley_to_ballot",
    "stat_set",
    "descent_set",
    "ascent_set",
    "reverse",
    "complement",
    "caylerian_brute",
    "AscentSetSpec",
    "alpha_count",
    "beta_brute",
    "beta_perm_determinant",
]


def is_cayley_word(w: Word) -> bool:
    """True when the set of values of w is an initial segment {1..k}."""
    if not w:
        return True
    values = set(w)
    return min(values) == 1 and max(values) == len(values)


def enumerate_cayley(n: int) -> Iterator[Word]:
    """Yield every Cayley permutation of size n once, in lexicographic order.

    Depth-first search over positions.  The state is the largest value
    used so far plus a bitmask of the values below it that are still
    missing; a branch dies as soon as the missing values cannot all fit
    in the remaining positions.
    """
    if n < 0:
        raise ValueError("enumerate_cayley needs n >= 0")
    if n == 0:
        yield ()
        return
    word = [0] * n

    def extend(pos: int, top: int, missing: int) -> Iterator[Word]:
        slots = n - pos
        if slots == 0:
            if not missing:
                yield tuple(word)
            return
        mcount = missing.bit_count()
        for v in range(1, top + 1):
            bit = 1 << (v - 1)
            left = mcount - 1 if missing & bit else mcount
            if left <= slots - 1:
                word[pos] = v
                yield from extend(pos + 1, top, missing & ~bit)
        for v in range(top + 1, n + 1):
            # values top+1 .. v-1 become missing; each further v adds one more
            if mcount + (v - top - 1) > slots - 1:
                break
            word[pos] = v
            gained = ((1 << (v - 1)) - 1) & ~((1 << top) - 1)
            yield from extend(pos + 1, v, missing | gained)

    yield from extend(0, 0, 0)


def enumerate_linear_orders(n: int) -> Iterator[Word]:
    """Permutations of [n] in lexicographic order."""
    return iter(itertools.permutations(range(1, n + 1)))


def cayley_to_ballot(w: Word) -> Ballot:
    if not is_cayley_word(w):
        raise ValueError(f"not a Cayley permutation: {w}")
    k = max(w) if w else 0
    blocks: list[set[int]] = [set() for _ in range(k)]
    for i, v in enumerate(w, start=1):
        blocks[v - 1].add(i)
    return tuple(frozenset(b) for b in blocks)


def ballot_to_cayley(blocks: Ballot) -> Word:
    n = sum(len(b) for b in blocks)
    seen: set[int] = set()
    word = [0] * n
    for j, block in enumerate(blocks, start=1):
        if not block:
            raise ValueError("ballot blocks must be nonempty")
        for i in block:
            if not 1 <= i <= n or i in seen:
                raise ValueError(f"ballot is not a partition of 1..{n}")
            seen.add(i)
            word[i - 1] = j
    return tuple(word)


def enumerate_ballots(n: int) -> Iterator[Ballot]:
    """Ballots of {1..n}, ordered by their Cayley permutations."""
    for w in enumerate_cayley(n):
        yield cayley_to_ballot(w)


def stat_set(w: Word, kind: StatKind) -> frozenset[int]:
    """Positions i (1-based, i < len(w)) where the chosen comparison holds."""
    if kind == "weak-descent":
        return frozenset(i for i in range(1, len(w)) if w[i - 1] >= w[i])
    if kind == "strict-descent":
        return frozenset(i for i in range(1, len(w)) if w[i - 1] > w[i])
    if kind == "weak-ascent":
        return frozenset(i for i in range(1, len(w)) if w[i - 1] <= w[i])
    if kind == "strict-ascent":
        return frozenset(i for i in range(1, len(w)) if w[i - 1] < w[i])
    raise ValueError(f"unknown statistic kind: {kind!r}")


def descent_set(w: Word, strict: bool = False) -> frozenset[int]:
    return stat_set(w, "strict-descent" if strict else "weak-descent")


def ascent_set(w: Word, strict: bool = False) -> frozenset[int]:
    return stat_set(w, "strict-ascent" if strict else "weak-ascent")


def reverse(w: Word) -> Word:
    return tuple(w[::-1])


def complement(w: Word) -> Word:
    if not w:
        return ()
    k = max(w)
    return tuple(k + 1 - v for v in w)


def caylerian_brute(n: int, strict: bool = False) -> IntPoly:
    """Descent polynomial of Cay[n] by direct enumeration.

    The t^d coefficient counts Cayley permutations of size n with d weak
    (or, with strict=True, strict) descents.
    """
    counts = [0] * max(1, n)
    for w in enumerate_cayley(n):
        d = 0
        if strict:
            for i in range(n - 1):
                if w[i] > w[i + 1]:
                    d += 1
        else:
            for i in range(n - 1):
                if w[i] >= w[i + 1]:
                    d += 1
        counts[d] += 1
    return IntPoly(counts)


# ---------------------------------------------------------------------------
# ascent-set refinements


@dataclass(frozen=True)
class AscentSetSpec:
    """A size n >= 1 together with a set of positions S inside {1..n-1}.

    ``delta`` is the induced composition of n: the gaps between the
    consecutive members of {0} | S | {n}.
    """

    n: int
    positions: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("AscentSetSpec needs n >= 1")
        ps = tuple(sorted(set(self.positions)))
        if ps != tuple(self.positions):
            object.__setattr__(self, "positions", ps)
        for p in ps:
            if not 1 <= p <= self.n - 1:
                raise ValueError(f"position {p} outside 1..{self.n - 1}")

    @property
    def delta(self) -> tuple[int, ...]:
        fenceposts = (0,) + self.positions + (self.n,)
        return tuple(b - a for a, b in zip(fenceposts, fenceposts[1:]))


def alpha_count(spec: AscentSetSpec) -> int:
    """Number of permutations of [n] whose weak ascent set is contained in S.

    For permutations weak and strict ascents coincide, and sorting each
    delta-run decreasingly gives the multinomial n! / prod(delta!).
    """
    num = math.factorial(spec.n)
    for gap in spec.delta:
        num //= math.factorial(gap)
    return num


def beta_brute(spec: AscentSetSpec, strict: bool = False, mode: str = "subset") -> int:
    """Count Cayley permutations by ascent-set condition, by enumeration.

    mode="subset" counts words whose (weak or strict) ascent set is
    contained in spec.positions; mode="equal" demands equality.
    """
    if mode not in ("subset", "equal"):
        raise ValueError(f"unknown mode {mode!r}")
    kind: StatKind = "strict-ascent" if strict else "weak-ascent"
    allowed = frozenset(spec.positions)
    total = 0
    for w in enumerate_cayley(spec.n):
        a = stat_set(w, kind)
        hit = (a == allowed) if mode == "equal" else (a <= allowed)
        if hit:
            total += 1
    return total


def beta_perm_determinant(spec: AscentSetSpec) -> int:
    """Permutations of [n] whose ascent set is exactly S, as a determinant.

    Evaluates n! times the (r+1) x (r+1) determinant with (i, j) entry
    1/(s_j - s_{i-1})!, where s_0 = 0, s_{r+1} = n and entries with a
    negative argument are zero.  Exact rational elimination, then an
    integrality check.  Summing over the subsets of S recovers the
    multinomial alpha_count(S).
    """
    from fractions import Fraction

    s = (0,) + spec.positions + (spec.n,)
    r1 = len(s) - 1
    mat = [
        [
            Fraction(1, math.factorial(s[j] - s[i - 1])) if s[j] >= s[i - 1] else Fraction(0)
            for j in range(1, r1 + 1)
        ]
        for i in range(1, r1 + 1)
    ]
    det = Fraction(1)
    for col in range(r1):
        pivot_row = next((row for row in range(col, r1) if mat[row][col]), None)
        if pivot_row is None:
            return 0
        if pivot_row != col:
            mat[col], mat[pivot_row] = mat[pivot_row], mat[col]
            det = -det
        pivot = mat[col][col]
        det *= pivot
        for row in range(col + 1, r1):
            factor = mat[row][col] / pivot
            if factor:
                mat[row] = [a - factor * b for a, b in zip(mat[row], mat[col])]
    value = det * math.factorial(spec.n)
    if value.denominator != 1:
        raise ArithmeticError(f"determinant count came out non-integral: {value}")
    return value.numerator

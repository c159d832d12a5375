"""Burge words and Burge matrices.

A Burge word of size n is a pair (u, v) where u is a weakly increasing
Cayley permutation, v is any Cayley permutation, and every weak descent
of u is a weak descent of v.  Reading the biword column by column and
tallying pairs gives a matrix of nonnegative integers with no zero row
and no zero column whose entries sum to n; these are the Burge matrices.
The binary variant requires weak descents of u to be strict descents of
v, which is the same as capping the matrix entries at 1.

Since u is weakly increasing it is 1^a1 2^a2 ... r^ar for a composition
(a1..ar) of n, so u ranges over compositions; enumeration below exploits
that, plus bitmask subset tests for the descent condition.
"""

from __future__ import annotations

from typing import Iterator, NamedTuple

from .kernel import BiPoly, compositions
from .words import AscentSetSpec, Word, enumerate_cayley, is_cayley_word

Matrix = tuple[tuple[int, ...], ...]

__all__ = [
    "Matrix",
    "BurgeWord",
    "is_burge_word",
    "is_burge_matrix",
    "matrix_size",
    "row_sums",
    "column_sums",
    "word_to_matrix",
    "matrix_to_word",
    "enumerate_weakly_increasing",
    "enumerate_burge",
    "enumerate_mat",
    "two_sided_brute",
]


class BurgeWord(NamedTuple):
    u: Word
    v: Word

    @property
    def size(self) -> int:
        return len(self.u)


def _descent_mask(w: Word, strict: bool) -> int:
    mask = 0
    for i in range(len(w) - 1):
        if w[i] > w[i + 1] or (not strict and w[i] == w[i + 1]):
            mask |= 1 << i
    return mask


def is_burge_word(bw: BurgeWord, binary: bool = False) -> bool:
    u, v = bw
    if len(u) != len(v):
        return False
    if not (is_cayley_word(u) and is_cayley_word(v)):
        return False
    if any(a > b for a, b in zip(u, u[1:])):
        return False
    need = _descent_mask(v, strict=binary)
    return _descent_mask(u, strict=False) & ~need == 0


def matrix_size(mat: Matrix) -> int:
    return sum(sum(row) for row in mat)


def row_sums(mat: Matrix) -> tuple[int, ...]:
    return tuple(sum(row) for row in mat)


def column_sums(mat: Matrix) -> tuple[int, ...]:
    if not mat:
        return ()
    return tuple(sum(col) for col in zip(*mat))


def is_burge_matrix(mat: Matrix, binary: bool = False) -> bool:
    if any(len(row) != len(mat[0]) for row in mat):
        return False
    if any(e < 0 for row in mat for e in row):
        return False
    if binary and any(e > 1 for row in mat for e in row):
        return False
    if mat and not mat[0]:
        return False  # rows of length zero
    return all(s > 0 for s in row_sums(mat)) and all(s > 0 for s in column_sums(mat))


def word_to_matrix(bw: BurgeWord) -> Matrix:
    """Tally matrix of the biword: entry (i, j) counts columns equal to (i, j)."""
    u, v = bw
    if not is_burge_word(bw):
        raise ValueError(f"not a Burge word: {bw}")
    if not u:
        return ()
    r, c = max(u), max(v)
    grid = [[0] * c for _ in range(r)]
    for a, b in zip(u, v):
        grid[a - 1][b - 1] += 1
    return tuple(tuple(row) for row in grid)


def matrix_to_word(mat: Matrix) -> BurgeWord:
    """Inverse tally: columns sorted by top entry, ties by decreasing bottom.

    Concretely, for each row index i in increasing order the pairs (i, j)
    appear with j decreasing, each repeated by the matrix entry.
    """
    if not is_burge_matrix(mat):
        raise ValueError("not a Burge matrix")
    us: list[int] = []
    vs: list[int] = []
    for i, row in enumerate(mat, start=1):
        for j in range(len(row), 0, -1):
            count = row[j - 1]
            us.extend([i] * count)
            vs.extend([j] * count)
    return BurgeWord(tuple(us), tuple(vs))


def enumerate_weakly_increasing(n: int) -> Iterator[Word]:
    """Weakly increasing Cayley permutations of size n, lexicographically."""
    for comp in compositions(n):
        word: list[int] = []
        for letter, mult in enumerate(comp, start=1):
            word.extend([letter] * mult)
        yield tuple(word)


def enumerate_burge(n: int, binary: bool = False) -> Iterator[BurgeWord]:
    """All (binary) Burge words of size n; u-major, then v, both lexicographic."""
    if n < 0:
        raise ValueError("enumerate_burge needs n >= 0")
    cay = [(w, _descent_mask(w, strict=binary)) for w in enumerate_cayley(n)]
    for u in enumerate_weakly_increasing(n):
        umask = _descent_mask(u, strict=False)
        for v, vmask in cay:
            if umask & ~vmask == 0:
                yield BurgeWord(u, v)


def enumerate_mat(
    n: int, binary: bool = False, row_sums_spec: AscentSetSpec | None = None
) -> Iterator[Matrix]:
    """All (binary) Burge matrices of size n, via the biword bijection.

    With ``row_sums_spec`` only matrices whose row-sum vector equals the
    spec's delta composition are produced.
    """
    if row_sums_spec is not None and row_sums_spec.n != n:
        raise ValueError(
            f"row-sum spec is for size {row_sums_spec.n}, matrices have size {n}"
        )
    want = row_sums_spec.delta if row_sums_spec is not None else None
    for bw in enumerate_burge(n, binary=binary):
        mat = word_to_matrix(bw)
        if want is None or row_sums(mat) == want:
            yield mat


def two_sided_brute(n: int, binary: bool = False) -> BiPoly:
    """Joint row-count/column-count polynomial of Burge matrices, enumerated.

    The s^r t^c coefficient counts (binary) Burge matrices of size n with
    r rows and c columns.
    """
    counts: dict[tuple[int, int], int] = {}
    for mat in enumerate_mat(n, binary=binary):
        key = (len(mat), len(mat[0]) if mat else 0)
        counts[key] = counts.get(key, 0) + 1
    return BiPoly(counts)

"""Matrices of linear orders, the permutation action, atoms, and two
sign-reversing involutions.

A structure here is an m x k matrix M whose entries are words with
pairwise disjoint letters, the letters jointly being {1..n}; every
column must contain at least one nonempty entry.  Reading the entries
column by column, top to bottom, concatenates to a permutation prod(M).
``Genmat`` matrices are the normalized ones with prod(M) = 12..n; they
are equivalent to integer matrices of entry lengths with no zero
column.  Any structure factors uniquely as act(w, A) with A normalized
and w = prod(M).

An atom is a word whose only left-to-right minimum is its first letter.
Splitting every entry at its left-to-right minima and remembering, for
each atom, its column (block) and its row (color) gives the atom-ballot
encoding; it is inverted by sorting the atoms of a block that share a
color by decreasing first letter.

The signed variant allows empty columns (at most n columns in total),
forces sign +1 on nonempty columns, and lets empty columns carry either
sign.  ``gamma`` flips the sign of the leftmost empty column and
``tau`` swaps the first two letters of the first entry of length >= 2
in prod order; both are involutions that reverse the respective signs
off their fixed-point sets.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .kernel import compositions, weak_compositions
from .words import Word, enumerate_ballots, enumerate_linear_orders

__all__ = [
    "LinOrderMatrix",
    "SignedLOMatrix",
    "AtomBallot",
    "prod",
    "act",
    "factor_action",
    "split_atoms",
    "atoms",
    "atom_count",
    "xi_atoms",
    "tau",
    "length_grid",
    "from_length_grid",
    "to_atom_ballot",
    "from_atom_ballot",
    "enumerate_genmat",
    "enumerate_lomat",
    "enumerate_lomat_direct",
    "enumerate_mat_normalized",
    "leftmost_empty_column",
    "xi_columns",
    "gamma",
    "enumerate_signed",
]


@dataclass(frozen=True)
class LinOrderMatrix:
    """Rectangular matrix of words; ``entries[i][j]`` is row i, column j."""

    entries: tuple[tuple[Word, ...], ...]
    size: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(
            self, "size", sum(len(e) for row in self.entries for e in row)
        )

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def column_empty(self, j: int) -> bool:
        return all(not row[j] for row in self.entries)

    def row_empty(self, i: int) -> bool:
        return all(not e for e in self.entries[i])

    def has_empty_row(self) -> bool:
        return any(self.row_empty(i) for i in range(self.rows))

    def is_normalized(self) -> bool:
        return prod(self) == tuple(range(1, self.size + 1))

    def validate(self, allow_empty_columns: bool = False) -> None:
        """Raise ValueError unless the letters tile {1..size} as required."""
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("ragged matrix")
        seen: set[int] = set()
        for row in self.entries:
            for e in row:
                for c in e:
                    if c in seen:
                        raise ValueError(f"letter {c} repeated")
                    seen.add(c)
        if seen != set(range(1, self.size + 1)):
            raise ValueError("letters do not form an initial segment 1..n")
        if not allow_empty_columns:
            for j in range(self.cols):
                if self.column_empty(j):
                    raise ValueError(f"column {j + 1} is empty")


def prod(m: LinOrderMatrix) -> Word:
    """Concatenation of all entries, column by column, top to bottom."""
    out: list[int] = []
    for j in range(m.cols):
        for row in m.entries:
            out.extend(row[j])
    return tuple(out)


def act(w: Word, m: LinOrderMatrix) -> LinOrderMatrix:
    """Replace every letter c by w(c).  Needs len(w) == m.size."""
    if len(w) != m.size:
        raise ValueError(f"word of length {len(w)} cannot act on size {m.size}")
    return LinOrderMatrix(
        tuple(
            tuple(tuple(w[c - 1] for c in e) for e in row) for row in m.entries
        )
    )


def factor_action(m: LinOrderMatrix) -> tuple[Word, LinOrderMatrix]:
    """Unique (w, A) with A normalized and act(w, A) == m; w is prod(m)."""
    w = prod(m)
    inv = [0] * len(w)
    for i, v in enumerate(w, start=1):
        inv[v - 1] = i
    return w, act(tuple(inv), m)


# ---------------------------------------------------------------------------
# atoms


def split_atoms(word: Word) -> list[Word]:
    """Cut a word before each left-to-right minimum after the first letter."""
    out: list[Word] = []
    start = 0
    for i in range(1, len(word)):
        if word[i] < word[start]:
            out.append(word[start:i])
            start = i
    if word:
        out.append(word[start:])
    return out


def atoms(m: LinOrderMatrix) -> list[Word]:
    """All atoms of all entries, in prod order."""
    out: list[Word] = []
    for j in range(m.cols):
        for row in m.entries:
            out.extend(split_atoms(row[j]))
    return out


def atom_count(m: LinOrderMatrix) -> int:
    total = 0
    for row in m.entries:
        for e in row:
            lo = None
            for c in e:
                if lo is None or c < lo:
                    total += 1
                    lo = c
    return total


def xi_atoms(m: LinOrderMatrix) -> int:
    """Sign (-1)^(size - number of atoms)."""
    return -1 if (m.size - atom_count(m)) % 2 else 1


def tau(m: LinOrderMatrix) -> LinOrderMatrix:
    """Swap the first two letters of the first entry of length >= 2.

    Entries are scanned in prod order; matrices whose entries all have
    length <= 1 are fixed.  Off the fixed set this flips xi_atoms.
    """
    entries = m.entries
    for j in range(m.cols):
        for i in range(m.rows):
            e = entries[i][j]
            if len(e) >= 2:
                swapped = (e[1], e[0]) + e[2:]
                new_row = entries[i][:j] + (swapped,) + entries[i][j + 1 :]
                return LinOrderMatrix(entries[:i] + (new_row,) + entries[i + 1 :])
    return m


# ---------------------------------------------------------------------------
# length grids (the bridge to integer Burge matrices)


def length_grid(m: LinOrderMatrix) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(len(e) for e in row) for row in m.entries)


def from_length_grid(grid: Sequence[Sequence[int]]) -> LinOrderMatrix:
    """Normalized matrix with the given entry lengths.

    Letters 1..n are dealt out column by column, top to bottom, so the
    result satisfies prod(M) = 12..n.
    """
    rows = len(grid)
    cols = len(grid[0]) if rows else 0
    cells: list[list[Word]] = [[() for _ in range(cols)] for _ in range(rows)]
    nxt = 1
    for j in range(cols):
        for i in range(rows):
            length = grid[i][j]
            if length < 0:
                raise ValueError("negative entry length")
            cells[i][j] = tuple(range(nxt, nxt + length))
            nxt += length
    return LinOrderMatrix(tuple(tuple(row) for row in cells))


# ---------------------------------------------------------------------------
# atom ballots


@dataclass(frozen=True)
class AtomBallot:
    """Ballot of atoms (blocks = former columns) plus a row assignment.

    Exactly one of ``colors`` (atom -> row index, kept as sorted pairs)
    and ``rows`` (a second ballot collecting the atoms of each row) is
    present.
    """

    columns: tuple[frozenset[Word], ...]
    colors: tuple[tuple[Word, int], ...] | None = None
    rows: tuple[frozenset[Word], ...] | None = None

    def __post_init__(self):
        if (self.colors is None) == (self.rows is None):
            raise ValueError("exactly one of colors and rows must be given")

    def color_of(self) -> dict[Word, int]:
        if self.colors is None:
            raise ValueError("this atom ballot carries a row ballot, not colors")
        return dict(self.colors)


def to_atom_ballot(m: LinOrderMatrix, row_mode: str = "color") -> AtomBallot:
    """Encode a structure as a ballot of atoms.

    Block j collects the atoms of column j.  With row_mode="color" each
    atom remembers its row number (1-based); with row_mode="ballot" the
    rows themselves form a second ballot, which requires every row to be
    nonempty.
    """
    if row_mode not in ("color", "ballot"):
        raise ValueError(f"unknown row_mode {row_mode!r}")
    columns = []
    for j in range(m.cols):
        block: set[Word] = set()
        for row in m.entries:
            block.update(split_atoms(row[j]))
        columns.append(frozenset(block))
    if row_mode == "color":
        pairs: list[tuple[Word, int]] = []
        for i, row in enumerate(m.entries, start=1):
            for e in row:
                pairs.extend((a, i) for a in split_atoms(e))
        return AtomBallot(tuple(columns), colors=tuple(sorted(pairs)))
    rows = []
    for i in range(m.rows):
        block = set()
        for e in m.entries[i]:
            block.update(split_atoms(e))
        if not block:
            raise ValueError(f"row {i + 1} is empty; ballot row mode needs nonempty rows")
        rows.append(frozenset(block))
    return AtomBallot(tuple(columns), rows=tuple(rows))


def from_atom_ballot(ballot: AtomBallot, m: int | None = None) -> LinOrderMatrix:
    """Rebuild the matrix: in each cell, concatenate the matching atoms
    sorted by decreasing first letter.

    That order is forced: an atom's letters all exceed its first letter,
    so decreasing first letters is the one arrangement whose
    left-to-right minima split the entry back into the same atoms.
    """
    if ballot.colors is not None:
        if m is None:
            raise ValueError("row count m is required with color assignments")
        color = dict(ballot.colors)
        if any(not 1 <= c <= m for c in color.values()):
            raise ValueError(f"a color exceeds the row count {m}")
        row_atoms = lambda i, block: [a for a in block if color[a] == i]
    else:
        m = len(ballot.rows)
        row_sets = ballot.rows
        row_atoms = lambda i, block: [a for a in block if a in row_sets[i - 1]]
    cells: list[list[Word]] = []
    for i in range(1, m + 1):
        row: list[Word] = []
        for block in ballot.columns:
            picked = sorted(row_atoms(i, block), key=lambda a: -a[0])
            row.append(tuple(itertools.chain.from_iterable(picked)))
        cells.append(row)
    return LinOrderMatrix(tuple(tuple(row) for row in cells))


# ---------------------------------------------------------------------------
# enumeration


def enumerate_genmat(m: int, n: int, binary: bool = False) -> Iterator[LinOrderMatrix]:
    """Normalized structures with m rows and letters 1..n, every column
    nonempty; binary restricts entries to length <= 1.

    Deterministic order: number of columns follows the composition
    stream of column sums; within a column sum, fillings are produced in
    the weak-composition order.
    """
    if m < 0 or n < 0:
        raise ValueError("enumerate_genmat needs m, n >= 0")
    cap = 1 if binary else None
    for colsums in compositions(n):
        k = len(colsums)
        pools = [list(weak_compositions(c, m, max_part=cap)) for c in colsums]
        if any(not p for p in pools):
            continue
        for columns in itertools.product(*pools):
            grid = [[columns[j][i] for j in range(k)] for i in range(m)]
            yield from_length_grid(grid)


def enumerate_lomat(m: int, n: int) -> Iterator[LinOrderMatrix]:
    """All m-row structures on {1..n}: permutations acting on normalized ones."""
    perms = list(enumerate_linear_orders(n))
    for base in enumerate_genmat(m, n):
        for w in perms:
            yield act(w, base)


def enumerate_lomat_direct(m: int, n: int) -> Iterator[LinOrderMatrix]:
    """Same set as enumerate_lomat, built without the permutation action.

    Columns are read off a ballot of {1..n}; each block is ordered in
    every possible way and cut into m consecutive (possibly empty)
    pieces, one per row.  Kept as an independent route for the
    verification harness.
    """
    for ballot in enumerate_ballots(n):
        pools = []
        for block in ballot:
            elems = sorted(block)
            fillings = []
            for order in itertools.permutations(elems):
                for cut in weak_compositions(len(elems), m):
                    col = []
                    pos = 0
                    for length in cut:
                        col.append(tuple(order[pos : pos + length]))
                        pos += length
                    fillings.append(tuple(col))
            pools.append(fillings)
        for columns in itertools.product(*pools):
            entries = tuple(
                tuple(columns[j][i] for j in range(len(ballot)))
                for i in range(m)
            )
            yield LinOrderMatrix(entries)


def enumerate_mat_normalized(n: int, binary: bool = False) -> Iterator[LinOrderMatrix]:
    """Normalized structures with no empty row (and no empty column), any
    number of rows; their length grids are exactly the Burge matrices."""
    from .burge import enumerate_mat

    if n == 0:
        yield LinOrderMatrix(())
        return
    for grid in enumerate_mat(n, binary=binary):
        yield from_length_grid(grid)


# ---------------------------------------------------------------------------
# signed structures


@dataclass(frozen=True)
class SignedLOMatrix:
    """Normalized matrix, possibly with empty columns, plus column signs.

    Nonempty columns must carry +1; empty columns may carry either sign.
    """

    matrix: LinOrderMatrix
    signs: tuple[int, ...]

    @property
    def xi(self) -> int:
        return -1 if self.signs.count(-1) % 2 else 1

    def validate(self) -> None:
        m = self.matrix
        m.validate(allow_empty_columns=True)
        if not m.is_normalized():
            raise ValueError("signed structure must be normalized")
        if len(self.signs) != m.cols:
            raise ValueError("one sign per column is required")
        for j, s in enumerate(self.signs):
            if s not in (1, -1):
                raise ValueError(f"sign {s} is not +-1")
            if s == -1 and not m.column_empty(j):
                raise ValueError(f"nonempty column {j + 1} carries sign -1")


def leftmost_empty_column(m: LinOrderMatrix) -> int:
    """1-based index of the first empty column, or 0 if every column is
    nonempty."""
    for j in range(m.cols):
        if m.column_empty(j):
            return j + 1
    return 0


def xi_columns(sm: SignedLOMatrix) -> int:
    return sm.xi


def gamma(sm: SignedLOMatrix) -> SignedLOMatrix:
    """Flip the sign of the leftmost empty column; fixed when none exists."""
    lam = leftmost_empty_column(sm.matrix)
    if lam == 0:
        return sm
    j = lam - 1
    signs = sm.signs[:j] + (-sm.signs[j],) + sm.signs[j + 1 :]
    return SignedLOMatrix(sm.matrix, signs)


def enumerate_signed(
    m: int, n: int, row_sums_spec=None
) -> Iterator[SignedLOMatrix]:
    """All signed structures with m rows, letters 1..n, and at most n
    columns (empty ones allowed).

    With ``row_sums_spec`` (an AscentSetSpec) only grids whose row-sum
    vector equals ``row_sums_spec.delta`` are produced; that requires m
    to be the number of parts of delta.
    """
    if m < 0 or n < 0:
        raise ValueError("enumerate_signed needs m, n >= 0")
    want = None
    if row_sums_spec is not None:
        if row_sums_spec.n != n:
            raise ValueError(
                f"row-sum spec is for size {row_sums_spec.n}, structures have size {n}"
            )
        want = row_sums_spec.delta
        if len(want) != m:
            raise ValueError(
                f"delta has {len(want)} parts but the structures have {m} rows"
            )
    for k in range(n + 1):
        for flat in weak_compositions(n, m * k):
            grid = [[flat[j * m + i] for j in range(k)] for i in range(m)]
            if want is not None and tuple(sum(row) for row in grid) != want:
                continue
            base = from_length_grid(grid) if m else LinOrderMatrix(())
            if m == 0 and k:
                continue  # no rows means no way to fill a column
            empty_cols = [j for j in range(k) if all(grid[i][j] == 0 for i in range(m))]
            for flips in itertools.product((1, -1), repeat=len(empty_cols)):
                signs = [1] * k
                for j, s in zip(empty_cols, flips):
                    signs[j] = s
                yield SignedLOMatrix(base, tuple(signs))

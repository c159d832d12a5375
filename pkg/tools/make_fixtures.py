#!/usr/bin/env python3
"""Regenerate the bundled b-file fixtures in src/cayburge/data/.

Everything here is computed from first principles, independently of the
package (which must agree with these files, not produce them):

* word counts by the block recurrence f(n) = sum_j C(n,j) f(n-j),
* matrix counts by inclusion-exclusion over zero rows/columns, summed
  over all shapes,
* the descent triangle by filtering raw tuples for the interval-image
  property and tallying weak descents.

Hand-checked anchor values are asserted before anything is written.
"""

import itertools
import math
from pathlib import Path

DATA = Path(__file__).resolve().parent.parent / "src" / "cayburge" / "data"

SEQ_MAX = 12
TRIANGLE_MAX_ROW = 7


def multichoose(m: int, n: int) -> int:
    if m == 0:
        return 1 if n == 0 else 0
    return math.comb(m + n - 1, n)


def fubini_by_first_block(limit: int) -> list[int]:
    fub = [1]
    for n in range(1, limit + 1):
        fub.append(sum(math.comb(n, j) * fub[n - j] for j in range(1, n + 1)))
    return fub


def matrix_count(n: int, binary: bool) -> int:
    """Nonnegative integer matrices with entry sum n, no zero row or
    column (entries capped at 1 when binary), via inclusion-exclusion
    over the deleted rows/columns of each shape."""
    if n == 0:
        return 1
    coef = math.comb if binary else multichoose
    total = 0
    for r in range(1, n + 1):
        for c in range(1, n + 1):
            for i in range(r + 1):
                for j in range(c + 1):
                    total += (
                        (-1) ** (i + j)
                        * math.comb(r, i)
                        * math.comb(c, j)
                        * coef((r - i) * (c - j), n)
                    )
    return total


def descent_triangle_row(n: int) -> list[int]:
    """Row n: words of length n over 1..n whose image is an interval
    {1..k}, tallied by weak descents."""
    row = [0] * n
    for word in itertools.product(range(1, n + 1), repeat=n):
        values = set(word)
        if max(values) != len(values):
            continue
        d = sum(1 for i in range(n - 1) if word[i] >= word[i + 1])
        row[d] += 1
    return row


def write_bfile(name: str, entries: list[tuple[int, int]]) -> None:
    DATA.mkdir(parents=True, exist_ok=True)
    path = DATA / name
    lines = ["# regenerated by tools/make_fixtures.py; do not edit by hand"]
    lines += [f"{idx} {val}" for idx, val in entries]
    path.write_text("\n".join(lines) + "\n")
    print(f"wrote {path} ({len(entries)} entries)")


def main() -> None:
    fub = fubini_by_first_block(SEQ_MAX)
    assert fub[:9] == [1, 1, 3, 13, 75, 541, 4683, 47293, 545835], fub[:9]

    mat = [matrix_count(n, binary=False) for n in range(SEQ_MAX + 1)]
    bmat = [matrix_count(n, binary=True) for n in range(SEQ_MAX + 1)]
    assert mat[:7] == [1, 1, 5, 33, 281, 2961, 37277], mat[:7]
    assert bmat[:7] == [1, 1, 4, 24, 196, 2016, 24976], bmat[:7]

    rows = [descent_triangle_row(n) for n in range(1, TRIANGLE_MAX_ROW + 1)]
    assert rows[0] == [1]
    assert rows[1] == [1, 2]
    assert rows[2] == [1, 8, 4]
    assert rows[3] == [1, 24, 42, 8]
    for n, row in enumerate(rows, start=1):
        # row sums tie the triangle to the word counts, evaluations at 2
        # tie it to both matrix counts (reversed row = strict variant)
        assert sum(row) == fub[n], (n, row)
        assert sum(c * 2**j for j, c in enumerate(row)) == mat[n], (n, row)
        assert sum(c * 2 ** (n - 1 - j) for j, c in enumerate(row)) == bmat[n], (n, row)

    write_bfile("b000670.txt", list(enumerate(fub)))
    write_bfile("b120733.txt", list(enumerate(mat)))
    write_bfile("b101370.txt", list(enumerate(bmat)))
    triangle = [c for row in rows for c in row]
    write_bfile("b366173.txt", list(enumerate(triangle, start=1)))


if __name__ == "__main__":
    main()

"""Exact-arithmetic kernel: tables, coefficients, polynomials, series."""

import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cayburge.kernel import (
    BiPoly,
    IntPoly,
    NeedsUnitConstantTerm,
    NeedsZeroConstantTerm,
    RatSeries,
    SeriesError,
    ballot_block_poly,
    binomial,
    compositions,
    ensure_tables,
    exact_div,
    fubini,
    multichoose,
    stirling1,
    stirling2,
    weak_compositions,
)

# Anchors computed by the block recurrence f(n) = sum_j C(n,j) f(n-j),
# independently of the Stirling route used in the package.
FUBINI = [1, 1, 3, 13, 75, 541, 4683, 47293, 545835]


def brute_set_partitions(n):
    """All set partitions of [n], grown element by element."""
    parts = [[]]
    for x in range(1, n + 1):
        nxt = []
        for p in parts:
            for i in range(len(p)):
                nxt.append([blk | {x} if j == i else blk for j, blk in enumerate(p)])
            nxt.append(p + [{x}])
        parts = nxt
    return parts


def cycle_count(perm):
    seen = [False] * len(perm)
    c = 0
    for i in range(len(perm)):
        if not seen[i]:
            c += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = perm[j] - 1
    return c


def test_fubini_anchor_list():
    assert [fubini(n) for n in range(9)] == FUBINI


def test_fubini_block_recurrence():
    f = [1]
    for n in range(1, 13):
        f.append(sum(math.comb(n, j) * f[n - j] for j in range(1, n + 1)))
    for n in range(13):
        assert fubini(n) == f[n]


def test_stirling2_against_brute_partitions():
    for n in range(7):
        parts = brute_set_partitions(n)
        for k in range(n + 2):
            assert stirling2(n, k) == sum(1 for p in parts if len(p) == k)


def test_stirling1_against_cycle_counts():
    for n in range(7):
        perms = list(itertools.permutations(range(1, n + 1)))
        for k in range(n + 2):
            assert stirling1(n, k) == sum(1 for p in perms if cycle_count(p) == k)


def test_fubini_equals_stirling2_row():
    for n in range(10):
        assert fubini(n) == sum(stirling2(n, k) * math.factorial(k) for k in range(n + 1))


def test_ensure_tables_growth():
    ensure_tables(70)
    assert stirling2(70, 1) == 1
    assert stirling1(70, 70) == 1


def test_binomial_matches_comb_and_rejects_negatives():
    for m in range(8):
        for n in range(8):
            assert binomial(m, n) == math.comb(m, n)
    with pytest.raises(ValueError):
        binomial(-1, 2)
    with pytest.raises(ValueError):
        binomial(3, -1)


def test_multichoose_counts_multisets():
    for m in range(6):
        for n in range(6):
            brute = sum(1 for _ in itertools.combinations_with_replacement(range(m), n))
            assert multichoose(m, n) == brute
    assert multichoose(0, 0) == 1
    assert multichoose(0, 3) == 0


def test_ballot_block_poly():
    assert ballot_block_poly(0) == IntPoly([1])
    assert ballot_block_poly(2) == IntPoly([0, 1, 2])
    for n in range(8):
        assert ballot_block_poly(n)(1) == fubini(n)


def test_exact_div():
    assert exact_div(12, 4) == 3
    with pytest.raises(ArithmeticError):
        exact_div(7, 2)


def test_compositions_exact_small():
    assert list(compositions(0)) == [()]
    assert list(compositions(3)) == [(3,), (2, 1), (1, 2), (1, 1, 1)]
    for n in range(1, 9):
        assert sum(1 for _ in compositions(n)) == 2 ** (n - 1)


def test_compositions_fixed_parts():
    assert list(compositions(3, parts=2)) == [(2, 1), (1, 2)]
    for n in range(1, 8):
        for k in range(1, n + 1):
            assert sum(1 for _ in compositions(n, parts=k)) == math.comb(n - 1, k - 1)


def test_weak_compositions_counts():
    for total in range(6):
        for parts in range(5):
            got = list(weak_compositions(total, parts))
            assert len(got) == multichoose(parts, total)
            assert len(set(got)) == len(got)
            assert all(len(c) == parts and sum(c) == total for c in got)
    capped = list(weak_compositions(3, 4, max_part=1))
    assert len(capped) == math.comb(4, 3)


def test_intpoly_arithmetic():
    p = IntPoly([1, 1])
    assert p * p == IntPoly([1, 2, 1])
    assert p**3 == IntPoly([1, 3, 3, 1])
    assert (p + IntPoly([0, 0, 2])) == IntPoly([1, 1, 2])
    assert p(5) == 6
    assert IntPoly([2, 0, 4])(Fraction(1, 2)) == 3


def test_intpoly_reverse_and_divide():
    p = IntPoly([1, 8, 4])
    assert p.reverse_coefficients(2) == IntPoly([4, 8, 1])
    assert p.reverse_coefficients(4) == IntPoly([0, 0, 4, 8, 1])
    with pytest.raises(ValueError):
        p.reverse_coefficients(1)
    assert IntPoly([2, 4]).divide_exact(2) == IntPoly([1, 2])
    with pytest.raises(ArithmeticError):
        IntPoly([1, 2]).divide_exact(2)


def test_intpoly_compose():
    p = IntPoly([1, 2, 1])  # (1+t)^2
    q = IntPoly([0, 3])
    assert p.compose(q) == IntPoly([1, 6, 9])


small_polys = st.lists(st.integers(-9, 9), min_size=1, max_size=6).map(IntPoly)


@given(small_polys, small_polys, st.integers(-5, 5))
def test_intpoly_evaluation_is_ring_hom(p, q, x):
    assert (p + q)(x) == p(x) + q(x)
    assert (p * q)(x) == p(x) * q(x)


def test_bipoly_product_and_eval():
    b = BiPoly.from_pair_product(IntPoly([0, 1, 2]), IntPoly([0, 1, 2]))
    assert dict(b.items()) == {(1, 1): 1, (1, 2): 2, (2, 1): 2, (2, 2): 4}
    assert b.eval(1, 1) == 9
    row = b.eval_s(1)
    assert row == IntPoly([0, 3, 6])
    assert list(b.items()) == sorted(b.items())


def test_ratseries_geometric_and_rational():
    geo = RatSeries.geometric(6)
    assert geo.integer_coefficients() == [1] * 7
    r = RatSeries.from_rational(IntPoly([1]), IntPoly([1, -1]), 6)
    assert r.integer_coefficients() == [1] * 7
    r2 = RatSeries.from_rational(IntPoly([0, 1, 2]), IntPoly([1, -3]), 4)
    # (t + 2t^2) * sum 3^k t^k
    assert r2.integer_coefficients() == [0, 1, 5, 15, 45]


@given(
    st.lists(st.integers(-6, 6), min_size=1, max_size=4),
    st.lists(st.integers(-6, 6), min_size=1, max_size=4),
)
def test_ratseries_from_rational_inverts(num, den):
    den = [den[0] if den[0] != 0 else 1] + den[1:]
    p, q = IntPoly(num), IntPoly(den)
    order = 7
    series = RatSeries.from_rational(p, q, order)
    back = series * RatSeries.from_intpoly(q, order)
    target = RatSeries.from_intpoly(p, order)
    for k in range(order + 1):
        assert back.coefficient(k) == target.coefficient(k)


def test_ratseries_exp_log_inverse():
    order = 8
    composed = RatSeries.exp(order).compose(RatSeries.log_geometric(order))
    geo = RatSeries.geometric(order)
    for k in range(order + 1):
        assert composed.coefficient(k) == geo.coefficient(k)


def test_ratseries_fubini_egf():
    # 1/(2 - e^x), coefficients n! -> Fubini numbers
    order = 8
    two_minus_exp = RatSeries.from_intpoly(IntPoly([2]), order) - RatSeries.exp(order)
    inv = two_minus_exp.invert_unit()
    for n in range(order + 1):
        assert inv.coefficient(n) * math.factorial(n) == fubini(n)


def test_ratseries_egf_ogf_roundtrip():
    s = RatSeries.exp(7)
    back = s.egf_to_ogf().ogf_to_egf()
    for k in range(8):
        assert back.coefficient(k) == s.coefficient(k)
    assert s.egf_to_ogf().integer_coefficients() == [1] * 8


def test_ratseries_error_taxonomy():
    with pytest.raises(NeedsZeroConstantTerm):
        RatSeries.exp(4).compose(RatSeries.one(4))
    with pytest.raises(NeedsUnitConstantTerm):
        RatSeries.x(4).invert_unit()
    with pytest.raises(SeriesError):
        RatSeries.geometric(3).coefficient(4)
    with pytest.raises(NeedsUnitConstantTerm):
        RatSeries.from_rational(IntPoly([1]), IntPoly([0, 1]), 3)


def test_ratseries_integer_coefficients_rejects_fractions():
    half = RatSeries.log_one_plus_x(3)
    with pytest.raises(ArithmeticError):
        half.integer_coefficients()


def test_ratseries_truncate_and_orders():
    s = RatSeries.geometric(8).truncate(3)
    assert s.order == 3
    with pytest.raises(SeriesError):
        s.truncate(9)
    mixed = RatSeries.geometric(5) + RatSeries.geometric(3)
    assert mixed.order == 3

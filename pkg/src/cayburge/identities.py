"""Closed-form counts, generating function machinery, and the
cross-verification harness.

Every quantity here is computable along at least two independent routes
(closed formula, direct enumeration, series coefficient, signed sum,
truncated infinite sum with a certified tail); the check functions
compare the routes and report structured results.  All sums are exact;
truncated ones come with a proven interval that pins down at most one
integer.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import burge, lomat, words
from .kernel import (
    BiPoly,
    IntPoly,
    RatSeries,
    ballot_block_poly,
    binomial,
    compositions,
    exact_div,
    fubini,
    multichoose,
    stirling1,
    stirling2,
)

__all__ = [
    "GENMAT_METHODS",
    "MAT_METHODS",
    "UnconvergedError",
    "count_genmat",
    "count_mat",
    "caylerian_formula",
    "two_sided_formula",
    "caylerian_from_two_sided",
    "beta_formula",
    "beta_equal_by_subsets",
    "carlitz_series",
    "genmat_ogf",
    "halving_sum",
    "halving_sum_exact",
    "double_sum_mat",
    "CheckResult",
    "pairing_check",
    "SUITES",
    "run_suite",
]

GENMAT_METHODS = ("compositions", "stirling", "inclexcl", "ogf-coefficient", "enumerate")
MAT_METHODS = ("stirling", "enumerate", "double-sum")


class UnconvergedError(ArithmeticError):
    """A certified truncation could not reach the requested tail bound."""


# ---------------------------------------------------------------------------
# counting normalized matrices of linear orders


def genmat_ogf(m: int, order: int, binary: bool = False) -> RatSeries:
    """Ordinary generating function of the m-row counts, as a series.

    General: (1-x)^m / (2(1-x)^m - 1).  Binary: 1 / (2 - (1+x)^m).
    """
    if binary:
        num = IntPoly((1,))
        den = IntPoly((2,)) - IntPoly((1, 1)) ** m
    else:
        num = IntPoly((1, -1)) ** m
        den = 2 * num - IntPoly((1,))
    return RatSeries.from_rational(num, den, order)


def count_genmat(m: int, n: int, binary: bool = False, method: str = "stirling") -> int:
    """Number of m-row normalized structures of size n (no empty column).

    Methods:
      compositions     sum over compositions of n of a product of
                       per-column fill counts,
      stirling         (1/n!) * sum_k c(n,k) fub(k) m^k, with the sign
                       (-1)^(n-k) in the binary case,
      inclexcl         inclusion-exclusion on empty columns,
      ogf-coefficient  coefficient extraction from genmat_ogf,
      enumerate        direct generation.
    """
    if m < 0 or n < 0:
        raise ValueError("count_genmat needs m, n >= 0")
    coef = binomial if binary else multichoose
    if method == "compositions":
        total = 0
        for comp in compositions(n):
            prod = 1
            for part in comp:
                prod *= coef(m, part)
                if not prod:
                    break
            total += prod
        return total
    if method == "stirling":
        acc = 0
        for k in range(n + 1):
            term = stirling1(n, k) * fubini(k) * m**k
            if binary and (n - k) % 2:
                term = -term
            acc += term
        return exact_div(acc, math.factorial(n))
    if method == "inclexcl":
        total = 0
        for k in range(n + 1):
            for i in range(k + 1):
                total += (-1) ** i * binomial(k, i) * coef(m * (k - i), n)
        return total
    if method == "ogf-coefficient":
        c = genmat_ogf(m, n, binary=binary).coefficient(n)
        if c.denominator != 1:
            raise ArithmeticError(f"non-integral series coefficient {c}")
        return c.numerator
    if method == "enumerate":
        return sum(1 for _ in lomat.enumerate_genmat(m, n, binary=binary))
    raise ValueError(f"unknown method {method!r}; choose from {GENMAT_METHODS}")


def count_mat(n: int, binary: bool = False, method: str = "stirling") -> int:
    """Number of (binary) Burge matrices of size n.

    stirling uses (1/n!) * sum_k c(n,k) fub(k)^2, signed in the binary
    case; enumerate generates the matrices; double-sum evaluates the
    two-index halved sum with a certified tail (for the general variant
    that identity is a conjecture-check).
    """
    if n < 0:
        raise ValueError("count_mat needs n >= 0")
    if method == "stirling":
        acc = 0
        for k in range(n + 1):
            term = stirling1(n, k) * fubini(k) ** 2
            if binary and (n - k) % 2:
                term = -term
            acc += term
        return exact_div(acc, math.factorial(n))
    if method == "enumerate":
        return sum(1 for _ in burge.enumerate_mat(n, binary=binary))
    if method == "double-sum":
        value, _, _ = double_sum_mat(n, binary=binary)
        return value
    raise ValueError(f"unknown method {method!r}; choose from {MAT_METHODS}")


# ---------------------------------------------------------------------------
# descent polynomials


def caylerian_formula(n: int, strict: bool = False) -> IntPoly:
    """Descent polynomial of Cay[n] without enumerating words.

    (1/n!) sum_k (+-) c(n,k) fub(k) sum_i S(k,i) i! (t-1)^(n-i); the
    binary-style sign (-1)^(n-k) appears exactly in the strict case.
    """
    if n < 0:
        raise ValueError("caylerian_formula needs n >= 0")
    tm1_pows = [IntPoly((1,))]
    for _ in range(n):
        tm1_pows.append(tm1_pows[-1] * IntPoly((-1, 1)))
    acc = IntPoly()
    for k in range(n + 1):
        s1 = stirling1(n, k)
        if not s1:
            continue
        inner = IntPoly()
        for i in range(k + 1):
            c = stirling2(k, i) * math.factorial(i)
            if c:
                inner = inner + c * tm1_pows[n - i]
        sign = -1 if strict and (n - k) % 2 else 1
        acc = acc + (sign * s1 * fubini(k)) * inner
    return acc.divide_exact(math.factorial(n))


def two_sided_formula(n: int, strict: bool = False) -> BiPoly:
    """Joint row/column polynomial of (binary) Burge matrices of size n.

    (1/n!) sum_k (+-) c(n,k) P_k(s) P_k(t) with P_k the ballot-by-block
    polynomial; strict=True gives the binary variant via the alternating
    sign.
    """
    if n < 0:
        raise ValueError("two_sided_formula needs n >= 0")
    acc: dict[tuple[int, int], int] = {}
    for k in range(n + 1):
        s1 = stirling1(n, k)
        if not s1:
            continue
        sign = -1 if strict and (n - k) % 2 else 1
        bp = ballot_block_poly(k).coeffs
        for i, a in enumerate(bp):
            if not a:
                continue
            for j, b in enumerate(bp):
                if b:
                    key = (i, j)
                    acc[key] = acc.get(key, 0) + sign * s1 * a * b
    return BiPoly(acc).divide_exact(math.factorial(n))


def caylerian_from_two_sided(poly: BiPoly, n: int) -> IntPoly:
    """Recover the descent polynomial: set s = 1, substitute t -> 1/(t-1),
    and clear the denominator with (t-1)^n."""
    q = poly.eval_s(1)
    acc = IntPoly()
    for j, c in enumerate(q.coeffs):
        if c:
            acc = acc + c * IntPoly((-1, 1)) ** (n - j)
    return acc


# ---------------------------------------------------------------------------
# ascent-set counts


def beta_formula(spec: words.AscentSetSpec, strict: bool = False) -> int:
    """Cayley permutations with (strict or weak) ascent set inside S.

    sum_k sum_i (-1)^i C(k,i) prod_g coef(k-i, g) over the parts g of
    delta(S); coef is multichoose for the strict-ascent count and
    binomial for the weak one.  The inner alternation counts k-column
    grids with prescribed row sums and no empty column.
    """
    coef = multichoose if strict else binomial
    gaps = spec.delta
    total = 0
    for k in range(spec.n + 1):
        for i in range(k + 1):
            prod = (-1) ** i * binomial(k, i)
            for g in gaps:
                prod *= coef(k - i, g)
                if not prod:
                    break
            total += prod
    return total


def beta_equal_by_subsets(spec: words.AscentSetSpec, strict: bool = False) -> int:
    """Cayley permutations whose ascent set equals S exactly, by
    inclusion-exclusion over the subsets of S."""
    total = 0
    s = spec.positions
    for r in range(len(s) + 1):
        for sub in itertools.combinations(s, r):
            sign = (-1) ** (len(s) - r)
            total += sign * beta_formula(
                words.AscentSetSpec(spec.n, sub), strict=strict
            )
    return total


# ---------------------------------------------------------------------------
# series expansions


def carlitz_series(n: int, strict: bool = False, order: int = 8) -> list[int]:
    """Coefficients of t C_n(t) / (1-t)^(n+1) through t^order."""
    c = caylerian_formula(n, strict=strict)
    num = IntPoly((0,) + c.coeffs)
    den = IntPoly((1, -1)) ** (n + 1)
    return RatSeries.from_rational(num, den, order).integer_coefficients()


def halving_sum(
    n: int, binary: bool = False, tail_bound: Fraction = Fraction(1, 2)
) -> tuple[Fraction, Fraction]:
    """Partial sum of sum_m count(m, n) / 2^(m+1) plus a certified tail.

    Returns (partial, tail) with the true value inside
    [partial, partial + tail] and tail < tail_bound.  The tail uses the
    crude bound count(m, n) <= n * multichoose(mn, n), whose halved
    term ratio is eventually below 1.
    """
    if not 0 < tail_bound <= Fraction(1, 2):
        raise ValueError("tail_bound must be in (0, 1/2]")

    def crude(m: int) -> int:
        return 1 if n == 0 else n * multichoose(m * n, n)

    trunc = 2 * n + 8
    while True:
        rho = Fraction(crude(trunc + 1), 2 * crude(trunc))
        if rho < 1:
            first = Fraction(crude(trunc + 1), 2 ** (trunc + 2))
            tail = first / (1 - rho)
            if tail < tail_bound:
                break
        if trunc > 4096:
            raise UnconvergedError(
                f"halving sum for n={n} did not certify below {tail_bound}"
            )
        trunc *= 2
    num = sum(
        count_genmat(m, n, binary=binary) * 2 ** (trunc - m) for m in range(trunc + 1)
    )
    return Fraction(num, 2 ** (trunc + 1)), tail


def halving_sum_exact(n: int, binary: bool = False) -> int:
    """The same sum evaluated exactly by Newton's forward differences.

    count(m, n) is a degree-n polynomial in m, and the halved weights
    integrate binom(m, j) to exactly 1, so the sum telescopes to
    sum_j (j-th forward difference at 0).
    """
    values = [count_genmat(m, n, binary=binary) for m in range(n + 1)]
    total = 0
    for j in range(n + 1):
        diff = sum((-1) ** (j - i) * binomial(j, i) * values[i] for i in range(j + 1))
        total += diff
    return total


def double_sum_mat(
    n: int, binary: bool = False, tail_bound: Fraction = Fraction(1, 2)
) -> tuple[int, Fraction, Fraction]:
    """Evaluate sum_{r,s>=0} coef(rs, n) / 2^(r+s+2) with a certified tail.

    coef is multichoose in the general case and binomial in the binary
    one.  Returns (value, partial, tail) where value is the unique
    integer in [partial, partial + tail]; raises UnconvergedError when
    no integer lands in the certified interval.

    Tail certificate: coef(rs, n) <= (r+n)^n (s+n)^n / n!, so the mass
    outside the [0, M]^2 square is at most
    2 * T * (S + T) / (4 n!) with f(r) = (r+n)^n / 2^r,
    S = sum_{r<=M} f(r) and T a geometric bound on sum_{r>M} f(r).
    """
    if not 0 < tail_bound <= Fraction(1, 2):
        raise ValueError("tail_bound must be in (0, 1/2]")
    coef = binomial if binary else multichoose
    nf = math.factorial(n)
    trunc = 2 * n + 8
    while True:
        first = Fraction((trunc + 1 + n) ** n, 2 ** (trunc + 1))
        rho = Fraction((trunc + n + 2) ** n, 2 * (trunc + n + 1) ** n)
        if rho < 1:
            tail_f = first / (1 - rho)
            s_all = (
                sum(Fraction((r + n) ** n, 2**r) for r in range(trunc + 1)) + tail_f
            )
            tail = 2 * tail_f * s_all / (4 * nf)
            if tail < tail_bound:
                break
        if trunc > 4096:
            raise UnconvergedError(
                f"double sum for n={n} did not certify below {tail_bound}"
            )
        trunc *= 2
    num = sum(
        coef(r * s, n) * 2 ** (2 * trunc - r - s)
        for r in range(trunc + 1)
        for s in range(trunc + 1)
    )
    partial = Fraction(num, 2 ** (2 * trunc + 2))
    value = math.ceil(partial)
    if value > partial + tail:
        raise UnconvergedError(
            f"no integer inside the certified interval for n={n}"
        )
    return value, partial, tail


# ---------------------------------------------------------------------------
# structured check results


@dataclass
class CheckResult:
    """Outcome of one named cross-check.

    status is "pass", "fail", or "unconverged"; witness, when present,
    pinpoints the smallest failing parameters with both values.
    """

    name: str
    params: dict
    status: str
    witness: dict | None = None
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status == "pass"


def _verdict(name: str, params: dict, failures: list[dict], detail: str = "") -> CheckResult:
    if failures:
        return CheckResult(name, params, "fail", witness=failures[0], detail=detail)
    return CheckResult(name, params, "pass", detail=detail)


# ---------------------------------------------------------------------------
# individual checks


def check_tables(max_n: int) -> list[CheckResult]:
    """Internal consistency of the number tables and series kernel."""
    failures = []
    for n in range(max_n + 1):
        if sum(stirling1(n, k) for k in range(n + 1)) != math.factorial(n):
            failures.append({"n": n, "identity": "stirling1 row sum"})
        if ballot_block_poly(n)(1) != fubini(n):
            failures.append({"n": n, "identity": "ballot blocks at t=1"})
    out = [_verdict("table-row-sums", {"max_n": max_n}, failures)]

    order = max(max_n, 1)
    bal = (RatSeries([2], order=order) - RatSeries.exp(order)).invert_unit()
    got = bal.egf_to_ogf().integer_coefficients()
    failures = [
        {"n": n, "got": got[n], "expected": fubini(n)}
        for n in range(order + 1)
        if got[n] != fubini(n)
    ]
    out.append(_verdict("fubini-egf", {"max_n": max_n}, failures))

    lhs = RatSeries.exp(order).compose(RatSeries.log_geometric(order))
    failures = [] if lhs == RatSeries.geometric(order) else [{"identity": "exp(log 1/(1-x))"}]
    out.append(_verdict("series-compose-roundtrip", {"order": order}, failures))
    return out


def check_cayley_ballot(max_n: int) -> list[CheckResult]:
    failures = []
    count_failures = []
    for n in range(max_n + 1):
        total = 0
        for w in words.enumerate_cayley(n):
            total += 1
            if words.ballot_to_cayley(words.cayley_to_ballot(w)) != w:
                failures.append({"n": n, "word": w})
        if total != fubini(n):
            count_failures.append({"n": n, "got": total, "expected": fubini(n)})
    return [
        _verdict("cayley-ballot-roundtrip", {"max_n": max_n}, failures),
        _verdict("cayley-count-vs-fubini", {"max_n": max_n}, count_failures),
    ]


def check_word_matrix(max_n: int) -> list[CheckResult]:
    """Burge biword <-> matrix bijection, both variants, both directions."""
    failures = []
    for binary in (False, True):
        for n in range(max_n + 1):
            seen = set()
            for bw in burge.enumerate_burge(n, binary=binary):
                mat = burge.word_to_matrix(bw)
                if not burge.is_burge_matrix(mat, binary=binary):
                    failures.append({"n": n, "binary": binary, "word": bw, "bad": "image"})
                    continue
                if burge.matrix_to_word(mat) != bw:
                    failures.append({"n": n, "binary": binary, "word": bw, "bad": "roundtrip"})
                seen.add(mat)
            direct = set(burge.enumerate_mat(n, binary=binary))
            if seen != direct:
                failures.append({"n": n, "binary": binary, "bad": "image set"})
    return [_verdict("burge-word-matrix-bijection", {"max_n": max_n}, failures)]


def check_act_bijection(max_n: int, max_m: int) -> list[CheckResult]:
    failures = []
    count_failures = []
    for m in range(max_m + 1):
        for n in range(max_n + 1):
            built = []
            for base in lomat.enumerate_genmat(m, n):
                for w in words.enumerate_linear_orders(n):
                    image = lomat.act(w, base)
                    got_w, got_base = lomat.factor_action(image)
                    if got_w != w or got_base != base:
                        failures.append({"m": m, "n": n, "w": w})
                    built.append(image)
            direct = set(lomat.enumerate_lomat_direct(m, n))
            if len(built) != len(direct) or set(built) != direct:
                count_failures.append(
                    {"m": m, "n": n, "via_action": len(built), "direct": len(direct)}
                )
    return [
        _verdict("action-factorization", {"max_n": max_n, "max_m": max_m}, failures),
        _verdict(
            "action-image-vs-direct", {"max_n": max_n, "max_m": max_m}, count_failures
        ),
    ]


def check_atom_ballot(max_n: int, max_m: int) -> list[CheckResult]:
    failures = []
    for m in range(max_m + 1):
        for n in range(max_n + 1):
            for structure in lomat.enumerate_lomat(m, n):
                encoded = lomat.to_atom_ballot(structure, row_mode="color")
                if lomat.from_atom_ballot(encoded, m) != structure:
                    failures.append({"m": m, "n": n, "mode": "color"})
                if not structure.has_empty_row():
                    encoded = lomat.to_atom_ballot(structure, row_mode="ballot")
                    if lomat.from_atom_ballot(encoded) != structure:
                        failures.append({"m": m, "n": n, "mode": "ballot"})
    return [_verdict("atom-ballot-roundtrip", {"max_n": max_n, "max_m": max_m}, failures)]


def check_gamma(max_n: int, max_m: int) -> list[CheckResult]:
    """Column-sign involution: involutivity, fixed points, signed sums."""
    prop_failures = []
    sum_failures = []
    for m in range(max_m + 1):
        for n in range(max_n + 1):
            signed_total = 0
            fixed = 0
            for sm in lomat.enumerate_signed(m, n):
                signed_total += sm.xi
                image = lomat.gamma(sm)
                is_fixed = image == sm
                has_empty = lomat.leftmost_empty_column(sm.matrix) != 0
                if is_fixed == has_empty:
                    prop_failures.append({"m": m, "n": n, "bad": "fixed-point set"})
                    continue
                if is_fixed:
                    fixed += 1
                    if any(s == -1 for s in sm.signs):
                        prop_failures.append({"m": m, "n": n, "bad": "fixed sign"})
                else:
                    if lomat.gamma(image) != sm or image.xi != -sm.xi:
                        prop_failures.append({"m": m, "n": n, "bad": "involution"})
            expected = count_genmat(m, n)
            if signed_total != expected or fixed != expected:
                sum_failures.append(
                    {"m": m, "n": n, "signed": signed_total, "fixed": fixed, "expected": expected}
                )
    return [
        _verdict("gamma-involution", {"max_n": max_n, "max_m": max_m}, prop_failures),
        _verdict("gamma-signed-sum", {"max_n": max_n, "max_m": max_m}, sum_failures),
    ]


def check_gamma_row_filtered(max_n: int) -> list[CheckResult]:
    """Signed sums filtered by row-sum vector reproduce the ascent-set counts."""
    failures = []
    for n in range(1, max_n + 1):
        for r in range(n):
            for s in itertools.combinations(range(1, n), r):
                spec = words.AscentSetSpec(n, s)
                m = len(spec.delta)
                total = sum(
                    sm.xi for sm in lomat.enumerate_signed(m, n, row_sums_spec=spec)
                )
                expected = beta_formula(spec, strict=True)
                by_enum = sum(1 for _ in burge.enumerate_mat(n, row_sums_spec=spec))
                if not total == expected == by_enum:
                    failures.append(
                        {"n": n, "S": s, "signed": total, "formula": expected, "enum": by_enum}
                    )
    return [_verdict("gamma-row-filtered-sum", {"max_n": max_n}, failures)]


def check_tau(max_n: int, max_m: int) -> list[CheckResult]:
    """First-swap involution on all structures with a fixed row count."""
    prop_failures = []
    sum_failures = []
    for m in range(max_m + 1):
        for n in range(max_n + 1):
            signed_total = 0
            fixed = 0
            for structure in lomat.enumerate_lomat(m, n):
                sign = lomat.xi_atoms(structure)
                signed_total += sign
                image = lomat.tau(structure)
                short_entries = all(
                    len(e) <= 1 for row in structure.entries for e in row
                )
                if (image == structure) != short_entries:
                    prop_failures.append({"m": m, "n": n, "bad": "fixed-point set"})
                    continue
                if image == structure:
                    fixed += 1
                elif lomat.tau(image) != structure or lomat.xi_atoms(image) != -sign:
                    prop_failures.append({"m": m, "n": n, "bad": "involution"})
            expected = math.factorial(n) * count_genmat(m, n, binary=True)
            if signed_total != expected or fixed != expected:
                sum_failures.append(
                    {"m": m, "n": n, "signed": signed_total, "fixed": fixed, "expected": expected}
                )
    return [
        _verdict("tau-involution", {"max_n": max_n, "max_m": max_m}, prop_failures),
        _verdict("tau-signed-sum", {"max_n": max_n, "max_m": max_m}, sum_failures),
    ]


def check_tau_row_complete(max_n: int) -> list[CheckResult]:
    """tau restricted to structures with no empty row, any row count."""
    failures = []
    for n in range(max_n + 1):
        signed_total = 0
        for base in lomat.enumerate_mat_normalized(n):
            for w in words.enumerate_linear_orders(n):
                structure = lomat.act(w, base)
                image = lomat.tau(structure)
                if image.has_empty_row() != structure.has_empty_row():
                    failures.append({"n": n, "bad": "tau left the no-empty-row set"})
                signed_total += lomat.xi_atoms(structure)
        expected = math.factorial(n) * count_mat(n, binary=True)
        if signed_total != expected:
            failures.append({"n": n, "signed": signed_total, "expected": expected})
    return [_verdict("tau-row-complete-sum", {"max_n": max_n}, failures)]


def check_count_methods(
    max_n: int, max_m: int, enum_max_n: int = 5, enum_max_m: int = 3
) -> list[CheckResult]:
    """All count_genmat methods agree; enumeration within its own bounds."""
    failures = []
    for binary in (False, True):
        for m in range(max_m + 1):
            for n in range(max_n + 1):
                values = {
                    method: count_genmat(m, n, binary=binary, method=method)
                    for method in ("compositions", "stirling", "inclexcl", "ogf-coefficient")
                }
                if m <= enum_max_m and n <= enum_max_n:
                    values["enumerate"] = count_genmat(
                        m, n, binary=binary, method="enumerate"
                    )
                if len(set(values.values())) != 1:
                    failures.append({"m": m, "n": n, "binary": binary, "values": values})
    return [
        _verdict(
            "count-genmat-method-agreement",
            {"max_n": max_n, "max_m": max_m, "enum_max_n": enum_max_n, "enum_max_m": enum_max_m},
            failures,
        )
    ]


def check_count_mat_methods(max_n: int, enum_max_n: int = 6) -> list[CheckResult]:
    failures = []
    for binary in (False, True):
        for n in range(min(max_n, enum_max_n) + 1):
            a = count_mat(n, binary=binary, method="stirling")
            b = count_mat(n, binary=binary, method="enumerate")
            if a != b:
                failures.append({"n": n, "binary": binary, "stirling": a, "enumerate": b})
    return [_verdict("count-mat-vs-enumeration", {"max_n": max_n}, failures)]


def check_caylerian(max_n: int, brute_max_n: int = 7) -> list[CheckResult]:
    out = []
    failures = []
    for strict in (False, True):
        for n in range(min(max_n, brute_max_n) + 1):
            got = caylerian_formula(n, strict=strict)
            expected = words.caylerian_brute(n, strict=strict)
            if got != expected:
                failures.append(
                    {"n": n, "strict": strict, "formula": list(got.coeffs), "brute": list(expected.coeffs)}
                )
    out.append(_verdict("caylerian-formula-vs-brute", {"max_n": max_n}, failures))

    failures = []
    for n in range(1, max_n + 1):
        weak = caylerian_formula(n)
        if caylerian_formula(n, strict=True) != weak.reverse_coefficients(n - 1):
            failures.append({"n": n})
    out.append(_verdict("caylerian-strict-is-reverse", {"max_n": max_n}, failures))

    failures = []
    for n in range(max_n + 1):
        if caylerian_formula(n)(1) != fubini(n):
            failures.append({"n": n, "eval": 1})
        if caylerian_formula(n)(2) != count_mat(n):
            failures.append({"n": n, "eval": 2, "variant": "general"})
        if caylerian_formula(n, strict=True)(2) != count_mat(n, binary=True):
            failures.append({"n": n, "eval": 2, "variant": "binary"})
    out.append(_verdict("caylerian-evaluations", {"max_n": max_n}, failures))
    return out


def check_two_sided(max_n: int) -> list[CheckResult]:
    out = []
    failures = []
    for strict in (False, True):
        for n in range(max_n + 1):
            got = two_sided_formula(n, strict=strict)
            expected = burge.two_sided_brute(n, binary=strict)
            if got != expected:
                failures.append({"n": n, "strict": strict})
    out.append(_verdict("two-sided-formula-vs-brute", {"max_n": max_n}, failures))

    failures = []
    for n in range(max_n + 1):
        for strict in (False, True):
            poly = two_sided_formula(n, strict=strict)
            if poly.eval(1, 1) != count_mat(n, binary=strict):
                failures.append({"n": n, "strict": strict, "bad": "eval(1,1)"})
            recovered = caylerian_from_two_sided(poly, n)
            if recovered != caylerian_formula(n, strict=strict):
                failures.append({"n": n, "strict": strict, "bad": "substitution"})
    out.append(_verdict("two-sided-consistency", {"max_n": max_n}, failures))
    return out


def check_beta(max_n: int) -> list[CheckResult]:
    """Ascent-set counting: formula vs brute force vs matrix enumeration."""
    out = []
    formula_failures = []
    matrix_failures = []
    equal_failures = []
    alpha_failures = []
    for n in range(1, max_n + 1):
        mats = Counter(burge.row_sums(a) for a in burge.enumerate_mat(n))
        bmats = Counter(burge.row_sums(a) for a in burge.enumerate_mat(n, binary=True))
        perms = list(words.enumerate_linear_orders(n))
        equal_total = 0
        for r in range(n):
            for s in itertools.combinations(range(1, n), r):
                spec = words.AscentSetSpec(n, s)
                for strict in (False, True):
                    if beta_formula(spec, strict=strict) != words.beta_brute(spec, strict=strict):
                        formula_failures.append({"n": n, "S": s, "strict": strict})
                if beta_formula(spec, strict=True) != mats[spec.delta]:
                    matrix_failures.append({"n": n, "S": s, "variant": "general"})
                if beta_formula(spec, strict=False) != bmats[spec.delta]:
                    matrix_failures.append({"n": n, "S": s, "variant": "binary"})
                for strict in (False, True):
                    eq = words.beta_brute(spec, strict=strict, mode="equal")
                    if eq != beta_equal_by_subsets(spec, strict=strict):
                        equal_failures.append({"n": n, "S": s, "strict": strict})
                    if not strict:
                        equal_total += eq
                allowed = frozenset(s)
                brute_alpha = sum(
                    1 for p in perms if words.ascent_set(p) <= allowed
                )
                brute_exact = sum(
                    1 for p in perms if words.ascent_set(p) == allowed
                )
                if words.alpha_count(spec) != brute_alpha:
                    alpha_failures.append({"n": n, "S": s, "bad": "alpha"})
                if words.beta_perm_determinant(spec) != brute_exact:
                    alpha_failures.append({"n": n, "S": s, "bad": "determinant"})
                det_total = sum(
                    words.beta_perm_determinant(words.AscentSetSpec(n, sub))
                    for size in range(len(s) + 1)
                    for sub in itertools.combinations(s, size)
                )
                if det_total != words.alpha_count(spec):
                    alpha_failures.append({"n": n, "S": s, "bad": "subset-sum"})
        if equal_total != fubini(n):
            equal_failures.append({"n": n, "bad": "partition by weak ascent set"})
    out.append(_verdict("beta-formula-vs-brute", {"max_n": max_n}, formula_failures))
    out.append(_verdict("beta-vs-matrix-row-sums", {"max_n": max_n}, matrix_failures))
    out.append(_verdict("beta-equal-mode", {"max_n": max_n}, equal_failures))
    out.append(_verdict("alpha-vs-determinant", {"max_n": max_n}, alpha_failures))
    return out


def pairing_check(max_n: int, max_m: int) -> CheckResult:
    """Match the two descent series against the two count families.

    For each n the series t C_n(t)/(1-t)^(n+1) (weak and strict) are
    expanded through t^max_m and compared cellwise against the general
    and binary m-row counts.  The check passes when at least one of the
    two possible pairings is consistent over the whole grid; the result
    records which, plus the as-written pairing's failures (the
    as-written text pairs weak with general).
    """
    ok_printed = True
    ok_swapped = True
    printed_failures = 0
    printed_cells = []
    witness = None
    cell22 = None
    for n in range(max_n + 1):
        weak = carlitz_series(n, strict=False, order=max_m)
        strict = carlitz_series(n, strict=True, order=max_m)
        for m in range(1, max_m + 1):
            general = count_genmat(m, n)
            binary = count_genmat(m, n, binary=True)
            p_ok = weak[m] == general and strict[m] == binary
            s_ok = weak[m] == binary and strict[m] == general
            if (n, m) == (2, 2):
                cell22 = {
                    "series": {"weak": weak[m], "strict": strict[m]},
                    "counts": {"general": general, "binary": binary},
                }
            printed_cells.append([n, m, p_ok])
            if not p_ok:
                printed_failures += 1
            ok_printed = ok_printed and p_ok
            ok_swapped = ok_swapped and s_ok
            if not p_ok and not s_ok and witness is None:
                witness = {
                    "n": n,
                    "m": m,
                    "series": {"weak": weak[m], "strict": strict[m]},
                    "counts": {"general": general, "binary": binary},
                }
    consistent = []
    if ok_printed:
        consistent.append("weak-general/strict-binary")
    if ok_swapped:
        consistent.append("weak-binary/strict-general")
    if witness is not None or not consistent:
        status = "fail"
    else:
        status = "pass"
    if len(consistent) == 1:
        determined = consistent[0]
    elif consistent:
        determined = "undetermined (grid too small to separate)"
    else:
        determined = "none"
    detail = (
        f"consistent pairing: {determined}; "
        f"as-written pairing fails in {printed_failures} cells"
    )
    result = CheckResult(
        "carlitz-pairing",
        {"max_n": max_n, "max_m": max_m},
        status,
        witness=witness,
        detail=detail,
    )
    result.params["cell_2_2"] = cell22
    result.params["consistent"] = consistent
    result.params["as_printed_cells"] = printed_cells
    return result


def check_ogf_coefficients(max_n: int, max_m: int) -> list[CheckResult]:
    failures = []
    for binary in (False, True):
        for m in range(max_m + 1):
            series = genmat_ogf(m, max_n, binary=binary).integer_coefficients()
            for n in range(max_n + 1):
                expected = count_genmat(m, n, binary=binary)
                if series[n] != expected:
                    failures.append(
                        {"m": m, "n": n, "binary": binary, "series": series[n], "count": expected}
                    )
    return [_verdict("ogf-coefficients-vs-counts", {"max_n": max_n, "max_m": max_m}, failures)]


def check_species_series(max_n: int, max_m: int) -> list[CheckResult]:
    """Composition identities: ballots of colored atoms, against the counts.

    Checks, coefficientwise through x^max_n:
      1/(1 - ((1-x)^-m - 1))             -> general m-row counts,
      1/(1 - ((1+x)^m - 1))              -> binary m-row counts,
      Bal(m log 1/(1-x))                 -> general m-row counts,
      Bal(m log(1+x))                    -> binary m-row counts,
      sum_k fub(k)^2 y^k/k! at both logs -> matrix counts,
      the (s,t)-weighted variant         -> two-sided polynomials.
    """
    order = max_n
    failures = []
    log_plus = RatSeries.log_one_plus_x(order)
    log_geom = RatSeries.log_geometric(order)
    for m in range(max_m + 1):
        geom_inner = RatSeries.from_rational(
            IntPoly((1,)), IntPoly((1, -1)) ** m, order
        ) - RatSeries.one(order)
        bin_inner = RatSeries.from_intpoly(IntPoly((1, 1)) ** m, order) - RatSeries.one(order)
        bal = RatSeries(
            [Fraction(fubini(k), math.factorial(k)) for k in range(order + 1)], order=order
        )
        routes = {
            ("general", "linear-orders"): RatSeries.geometric(order).compose(geom_inner),
            ("binary", "linear-orders"): RatSeries.geometric(order).compose(bin_inner),
            ("general", "atom-ballots"): bal.compose(m * log_geom),
            ("binary", "atom-ballots"): bal.compose(m * log_plus),
        }
        for (variant, route), series in routes.items():
            coeffs = series.integer_coefficients()
            for n in range(order + 1):
                expected = count_genmat(m, n, binary=(variant == "binary"))
                if coeffs[n] != expected:
                    failures.append({"m": m, "n": n, "route": route, "variant": variant})
    mat_series = RatSeries(
        [Fraction(fubini(k) ** 2, math.factorial(k)) for k in range(order + 1)],
        order=order,
    )
    for binary, inner in ((False, log_geom), (True, log_plus)):
        coeffs = mat_series.compose(inner).integer_coefficients()
        for n in range(order + 1):
            if coeffs[n] != count_mat(n, binary=binary):
                failures.append({"n": n, "route": "matrix-ballots", "binary": binary})
    for binary, inner in ((False, log_geom), (True, log_plus)):
        for s in range(1, 4):
            for t in range(1, 4):
                weighted = RatSeries(
                    [
                        Fraction(
                            ballot_block_poly(k)(s) * ballot_block_poly(k)(t),
                            math.factorial(k),
                        )
                        for k in range(order + 1)
                    ],
                    order=order,
                )
                coeffs = weighted.compose(inner).integer_coefficients()
                for n in range(order + 1):
                    expected = two_sided_formula(n, strict=binary).eval(s, t)
                    if coeffs[n] != expected:
                        failures.append(
                            {"n": n, "s": s, "t": t, "binary": binary, "route": "weighted"}
                        )
    return [
        _verdict("species-series-vs-counts", {"max_n": max_n, "max_m": max_m}, failures)
    ]


def check_halving(max_n: int, tail_bound: Fraction = Fraction(1, 2)) -> list[CheckResult]:
    out = []
    for binary in (False, True):
        failures = []
        status = None
        for n in range(max_n + 1):
            expected = count_mat(n, binary=binary)
            try:
                partial, tail = halving_sum(n, binary=binary, tail_bound=tail_bound)
            except UnconvergedError as exc:
                status = CheckResult(
                    f"halving-sum-{'binary' if binary else 'general'}",
                    {"max_n": max_n},
                    "unconverged",
                    witness={"n": n},
                    detail=str(exc),
                )
                break
            if not partial <= expected <= partial + tail:
                failures.append(
                    {"n": n, "expected": expected, "interval": [str(partial), str(partial + tail)]}
                )
            if halving_sum_exact(n, binary=binary) != expected:
                failures.append({"n": n, "bad": "newton-exact"})
        if status is None:
            status = _verdict(
                f"halving-sum-{'binary' if binary else 'general'}",
                {"max_n": max_n},
                failures,
                detail="certified interval plus exact finite-difference evaluation",
            )
        out.append(status)
    return out


def check_double_sum(max_n: int, tail_bound: Fraction = Fraction(1, 2)) -> list[CheckResult]:
    out = []
    for binary in (False, True):
        name = f"double-sum-{'binary' if binary else 'general'}"
        detail = "theorem-check" if binary else "conjecture-check"
        failures = []
        status = None
        for n in range(max_n + 1):
            expected = count_mat(n, binary=binary)
            try:
                value, partial, tail = double_sum_mat(n, binary=binary, tail_bound=tail_bound)
            except UnconvergedError as exc:
                status = CheckResult(
                    name, {"max_n": max_n}, "unconverged", witness={"n": n}, detail=str(exc)
                )
                break
            if value != expected or not partial <= expected <= partial + tail:
                failures.append({"n": n, "expected": expected, "got": value})
        if status is None:
            status = _verdict(name, {"max_n": max_n}, failures, detail=detail)
        out.append(status)
    return out


# ---------------------------------------------------------------------------
# suites


def suite_kernel(max_n: int, max_m: int) -> list[CheckResult]:
    return check_tables(max_n)


def suite_bijections(max_n: int, max_m: int) -> list[CheckResult]:
    out = []
    out += check_cayley_ballot(min(max_n, 7))
    out += check_word_matrix(min(max_n, 5))
    out += check_act_bijection(min(max_n, 5), min(max_m, 3))
    out += check_atom_ballot(min(max_n, 5), min(max_m, 3))
    return out


def suite_involutions(max_n: int, max_m: int) -> list[CheckResult]:
    out = []
    out += check_gamma(min(max_n, 5), min(max_m, 3))
    out += check_gamma_row_filtered(min(max_n, 5))
    out += check_tau(min(max_n, 5), min(max_m, 3))
    out += check_tau_row_complete(min(max_n, 5))
    return out


def suite_formulas(max_n: int, max_m: int) -> list[CheckResult]:
    out = []
    out += check_count_methods(max_n, max_m)
    out += check_count_mat_methods(max_n)
    out += check_caylerian(max_n)
    out += check_two_sided(min(max_n, 6))
    out += check_beta(min(max_n, 6))
    return out


def suite_pairing(max_n: int, max_m: int) -> list[CheckResult]:
    return [pairing_check(max_n, max_m)]


def suite_gf(max_n: int, max_m: int) -> list[CheckResult]:
    out = []
    out += check_ogf_coefficients(max_n, max_m)
    out += check_species_series(min(max_n, 6), min(max_m, 4))
    out += check_halving(min(max_n, 6))
    out += check_double_sum(min(max_n, 6))
    return out


SUITES: dict[str, Callable[[int, int], list[CheckResult]]] = {
    "kernel": suite_kernel,
    "bijections": suite_bijections,
    "involutions": suite_involutions,
    "formulas": suite_formulas,
    "pairing": suite_pairing,
    "gf": suite_gf,
}


def run_suite(name: str, max_n: int, max_m: int) -> list[CheckResult]:
    """Run one suite, or all of them in a fixed order with name="all"."""
    if name == "all":
        out = []
        for suite_name in SUITES:
            out += SUITES[suite_name](max_n, max_m)
        return out
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    return SUITES[name](max_n, max_m)

"""Command line interface.

Subcommands:
  enumerate   stream objects (cayley, ballot, burge, mat, genmat, signed)
  count       count objects by a chosen method
  poly        descent and two-sided polynomials
  verify      run the cross-verification suites
  oeis        compare engine values against a b-file

Exit codes: 0 success, 1 a verification or comparison failed, 2 invalid
parameters or malformed input, 3 a certified truncation did not
converge.  Enumerative work is capped at n <= 7 and formula work at
n <= 12 unless --unsafe-bounds is given.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import urllib.request
from fractions import Fraction
from importlib import resources
from pathlib import Path

from . import burge, identities, lomat, words
from .kernel import fubini

ENUM_BOUND = 7
FORMULA_BOUND = 12
VERIFY_BOUND_N = 8
VERIFY_BOUND_M = 8

CACHE_ENV = "CAYBURGE_CACHE_DIR"


# ---------------------------------------------------------------------------
# rendering


def _render_word(w: tuple[int, ...]) -> str:
    if not w:
        return "eps"
    if max(w) <= 9:
        return "".join(str(c) for c in w)
    return " ".join(str(c) for c in w)


def _render_ballot(ballot) -> str:
    return "".join("{" + ",".join(str(i) for i in sorted(b)) + "}" for b in ballot)


def _render_mat(mat) -> str:
    if not mat:
        return "[]"
    return "[" + "; ".join(" ".join(str(e) for e in row) for row in mat) + "]"


def _render_lomat(m) -> str:
    if not m.entries:
        return "[]"
    rows = []
    for row in m.entries:
        rows.append(" ".join(_render_word(e) if e else "." for e in row))
    return "[" + "; ".join(rows) + "]"


def _render_signed(sm) -> str:
    signs = "".join("+" if s == 1 else "-" for s in sm.signs)
    return f"signs={signs or '()'} {_render_lomat(sm.matrix)}"


def _json_lomat(m) -> list:
    return [[list(e) for e in row] for row in m.entries]


def _emit_record(args, obj: str, params: dict, method: str, value) -> None:
    """count/poly output in the requested format."""
    if args.format == "json":
        record = {"object": obj, "params": params, "method": method, "value": value}
        print(json.dumps(record, sort_keys=True))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["object", "method", "value", "params"])
        writer.writerow([obj, method, json.dumps(value), json.dumps(params, sort_keys=True)])
    else:
        if isinstance(value, list) and value and isinstance(value[0], list):
            for row in value:
                print(" ".join(str(x) for x in row))
        elif isinstance(value, list):
            print(" ".join(str(x) for x in value))
        else:
            print(value)


def _emit_stream(args, obj: str, params: dict, text_rows: list[str], json_rows: list) -> None:
    if args.format == "json":
        record = {"object": obj, "params": params, "method": "enumerate", "value": json_rows}
        print(json.dumps(record, sort_keys=True))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["value"])
        for row in text_rows:
            writer.writerow([row])
    else:
        for row in text_rows:
            print(row)


def _fail(message: str, code: int) -> int:
    print(message, file=sys.stderr)
    return code


# ---------------------------------------------------------------------------
# argument plumbing


def _ascent_spec(args, n: int):
    if args.ascents is None:
        return None
    text = args.ascents.strip()
    positions = tuple(int(p) for p in text.split(",")) if text else ()
    return words.AscentSetSpec(n, positions)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cayburge",
        description="Exact enumeration and verification of Cayley permutations and Burge matrices.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument(
        "--unsafe-bounds",
        action="store_true",
        help="lift the built-in size caps (enumeration may become very slow)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="stream objects one per line")
    p.add_argument("object", choices=("cayley", "ballot", "burge", "mat", "genmat", "signed"))
    p.add_argument("--n", type=int, help="size (words, burge, mat)")
    p.add_argument("--rows", type=int, help="row count (genmat, signed)")
    p.add_argument("--size", type=int, help="letter count (genmat, signed)")
    p.add_argument("--binary", action="store_true")
    p.add_argument("--ascents", help="comma-separated ascent positions for a row-sum filter")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("count", parents=[common], help="count objects")
    p.add_argument("object", choices=("genmat", "mat"))
    p.add_argument("--n", type=int, help="size (mat)")
    p.add_argument("--rows", type=int, help="row count (genmat)")
    p.add_argument("--size", type=int, help="letter count (genmat)")
    p.add_argument("--binary", action="store_true")
    p.add_argument("--method", default="stirling")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("poly", parents=[common], help="descent polynomials")
    p.add_argument("object", choices=("caylerian", "two-sided"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--strict", action="store_true")
    p.add_argument("--method", choices=("formula", "brute"), default="formula")
    p.set_defaults(func=_cmd_poly)

    p = sub.add_parser("verify", parents=[common], help="run cross-check suites")
    p.add_argument("suite", choices=("all",) + tuple(identities.SUITES))
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--max-m", type=int, default=2)
    p.add_argument("--tail-bound", default="1/2", help="certified tail bound, e.g. 1/4")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("oeis", parents=[common], help="compare against a b-file")
    p.add_argument("sequence", choices=tuple(OEIS_VALUES))
    p.add_argument("--b-file", help="path to a b-file (default: bundled fixture)")
    p.add_argument("--fetch", action="store_true", help="download and cache the b-file")
    p.add_argument("--max-n", type=int, help="largest index (row, for the triangle) to compare")
    p.set_defaults(func=_cmd_oeis)
    return parser


# ---------------------------------------------------------------------------
# enumerate


def _cmd_enumerate(args) -> int:
    obj = args.object
    if obj in ("cayley", "ballot", "burge", "mat"):
        if args.n is None:
            return _fail(f"enumerate {obj} requires --n", 2)
        n = args.n
        if n < 0:
            return _fail("--n must be nonnegative", 2)
        if n > ENUM_BOUND and not args.unsafe_bounds:
            return _fail(f"--n {n} exceeds the enumeration bound {ENUM_BOUND}; pass --unsafe-bounds to override", 2)
    else:
        if args.rows is None or args.size is None:
            return _fail(f"enumerate {obj} requires --rows and --size", 2)
        if args.rows < 0 or args.size < 0:
            return _fail("--rows and --size must be nonnegative", 2)
        if (args.size > ENUM_BOUND or args.rows > ENUM_BOUND + 1) and not args.unsafe_bounds:
            return _fail(f"size/rows exceed the enumeration bound {ENUM_BOUND}; pass --unsafe-bounds to override", 2)

    text_rows: list[str] = []
    json_rows: list = []
    params: dict = {}
    try:
        if obj == "cayley":
            params = {"n": args.n}
            for w in words.enumerate_cayley(args.n):
                text_rows.append(_render_word(w))
                json_rows.append(list(w))
        elif obj == "ballot":
            params = {"n": args.n}
            for ballot in words.enumerate_ballots(args.n):
                text_rows.append(_render_ballot(ballot))
                json_rows.append([sorted(b) for b in ballot])
        elif obj == "burge":
            params = {"n": args.n, "binary": args.binary}
            for bw in burge.enumerate_burge(args.n, binary=args.binary):
                text_rows.append(f"{_render_word(bw.u)}|{_render_word(bw.v)}")
                json_rows.append({"u": list(bw.u), "v": list(bw.v)})
        elif obj == "mat":
            spec = _ascent_spec(args, args.n)
            params = {"n": args.n, "binary": args.binary}
            if spec is not None:
                params["ascents"] = list(spec.positions)
            for mat in burge.enumerate_mat(args.n, binary=args.binary, row_sums_spec=spec):
                text_rows.append(_render_mat(mat))
                json_rows.append([list(row) for row in mat])
        elif obj == "genmat":
            params = {"rows": args.rows, "size": args.size, "binary": args.binary}
            for m in lomat.enumerate_genmat(args.rows, args.size, binary=args.binary):
                text_rows.append(_render_lomat(m))
                json_rows.append(_json_lomat(m))
        else:
            spec = _ascent_spec(args, args.size)
            params = {"rows": args.rows, "size": args.size}
            if spec is not None:
                params["ascents"] = list(spec.positions)
            for sm in lomat.enumerate_signed(args.rows, args.size, row_sums_spec=spec):
                text_rows.append(_render_signed(sm))
                json_rows.append({"signs": list(sm.signs), "entries": _json_lomat(sm.matrix)})
    except ValueError as exc:
        return _fail(str(exc), 2)
    _emit_stream(args, obj, params, text_rows, json_rows)
    return 0


# ---------------------------------------------------------------------------
# count / poly


def _cmd_count(args) -> int:
    try:
        if args.object == "genmat":
            if args.rows is None or args.size is None:
                return _fail("count genmat requires --rows and --size", 2)
            if args.method not in identities.GENMAT_METHODS:
                return _fail(f"unknown method {args.method!r}; choose from {identities.GENMAT_METHODS}", 2)
            enumerative = args.method == "enumerate"
            bound = ENUM_BOUND if enumerative else FORMULA_BOUND
            if (args.size > bound or args.rows > FORMULA_BOUND) and not args.unsafe_bounds:
                return _fail(f"size/rows exceed the bound {bound} for method {args.method}; pass --unsafe-bounds to override", 2)
            if args.rows < 0 or args.size < 0:
                return _fail("--rows and --size must be nonnegative", 2)
            value = identities.count_genmat(args.rows, args.size, binary=args.binary, method=args.method)
            params = {"rows": args.rows, "size": args.size, "binary": args.binary}
        else:
            if args.n is None:
                return _fail("count mat requires --n", 2)
            if args.method not in identities.MAT_METHODS:
                return _fail(f"unknown method {args.method!r}; choose from {identities.MAT_METHODS}", 2)
            enumerative = args.method == "enumerate"
            bound = ENUM_BOUND if enumerative else FORMULA_BOUND
            if args.n > bound and not args.unsafe_bounds:
                return _fail(f"--n {args.n} exceeds the bound {bound} for method {args.method}; pass --unsafe-bounds to override", 2)
            if args.n < 0:
                return _fail("--n must be nonnegative", 2)
            value = identities.count_mat(args.n, binary=args.binary, method=args.method)
            params = {"n": args.n, "binary": args.binary}
    except identities.UnconvergedError as exc:
        return _fail(str(exc), 3)
    except ValueError as exc:
        return _fail(str(exc), 2)
    _emit_record(args, args.object, params, args.method, value)
    return 0


def _cmd_poly(args) -> int:
    n = args.n
    if n < 0:
        return _fail("--n must be nonnegative", 2)
    bound = ENUM_BOUND if args.method == "brute" else FORMULA_BOUND
    if n > bound and not args.unsafe_bounds:
        return _fail(f"--n {n} exceeds the bound {bound} for method {args.method}; pass --unsafe-bounds to override", 2)
    params = {"n": n, "strict": args.strict}
    if args.object == "caylerian":
        if args.method == "brute":
            poly = words.caylerian_brute(n, strict=args.strict)
        else:
            poly = identities.caylerian_formula(n, strict=args.strict)
        value = list(poly.coeffs)
    else:
        if args.method == "brute":
            poly = burge.two_sided_brute(n, binary=args.strict)
        else:
            poly = identities.two_sided_formula(n, strict=args.strict)
        value = [[i, j, c] for (i, j), c in poly.items()]
    _emit_record(args, args.object, params, args.method, value)
    return 0


# ---------------------------------------------------------------------------
# verify


def _cmd_verify(args) -> int:
    if (args.max_n > VERIFY_BOUND_N or args.max_m > VERIFY_BOUND_M) and not args.unsafe_bounds:
        return _fail(
            f"--max-n/--max-m exceed the verify bounds ({VERIFY_BOUND_N}, {VERIFY_BOUND_M}); pass --unsafe-bounds to override",
            2,
        )
    if args.max_n < 0 or args.max_m < 0:
        return _fail("--max-n and --max-m must be nonnegative", 2)
    try:
        Fraction(args.tail_bound)
    except (ValueError, ZeroDivisionError):
        return _fail(f"cannot parse --tail-bound {args.tail_bound!r}", 2)
    try:
        results = identities.run_suite(args.suite, args.max_n, args.max_m)
    except identities.UnconvergedError as exc:
        return _fail(str(exc), 3)
    npass = sum(1 for r in results if r.status == "pass")
    nfail = sum(1 for r in results if r.status == "fail")
    nunc = sum(1 for r in results if r.status == "unconverged")
    if args.format == "json":
        payload = {
            "suite": args.suite,
            "max_n": args.max_n,
            "max_m": args.max_m,
            "checks": [
                {
                    "name": r.name,
                    "params": r.params,
                    "status": r.status,
                    "witness": r.witness,
                    "detail": r.detail,
                }
                for r in results
            ],
            "summary": {"pass": npass, "fail": nfail, "unconverged": nunc},
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        for r in results:
            line = f"{r.status.upper():<12} {r.name}"
            if r.detail:
                line += f"  ({r.detail})"
            if r.witness is not None:
                line += f"  witness={r.witness}"
            print(line)
        print(f"{len(results)} checks: {npass} pass, {nfail} fail, {nunc} unconverged")
    if nunc:
        return 3
    return 1 if nfail else 0


# ---------------------------------------------------------------------------
# oeis


def _triangle_value(index: int) -> int:
    n = 1
    while index > n:
        index -= n
        n += 1
    return identities.caylerian_formula(n).coefficient(index - 1)


OEIS_VALUES = {
    "A000670": (lambda i: fubini(i), FORMULA_BOUND),
    "A120733": (lambda i: identities.count_mat(i), FORMULA_BOUND),
    "A101370": (lambda i: identities.count_mat(i, binary=True), FORMULA_BOUND),
    "A366173": (_triangle_value, 7),
}


def parse_bfile(text: str) -> list[tuple[int, int]]:
    """Parse 'index value' lines; '#' comments and blank lines are skipped.

    Indices must be strictly increasing; anything else raises ValueError.
    """
    entries: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'index value', got {raw!r}")
        try:
            idx, val = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer field in {raw!r}") from None
        if entries and idx <= entries[-1][0]:
            raise ValueError(f"line {lineno}: index {idx} not increasing")
        entries.append((idx, val))
    return entries


def _bfile_text(args) -> str:
    digits = args.sequence[1:]
    if args.b_file:
        return Path(args.b_file).read_text()
    if args.fetch:
        cache_dir = Path(os.environ.get(CACHE_ENV, Path.home() / ".cache" / "cayburge"))
        cache_dir.mkdir(parents=True, exist_ok=True)
        cached = cache_dir / f"b{digits}.txt"
        if not cached.exists():
            url = f"https://oeis.org/{args.sequence}/b{digits}.txt"
            with urllib.request.urlopen(url, timeout=30) as response:
                cached.write_bytes(response.read())
        return cached.read_text()
    bundled = resources.files("cayburge").joinpath(f"data/b{digits}.txt")
    return bundled.read_text()


def _cmd_oeis(args) -> int:
    value_of, default_bound = OEIS_VALUES[args.sequence]
    is_triangle = args.sequence == "A366173"
    bound = args.max_n if args.max_n is not None else default_bound
    if bound > default_bound and not args.unsafe_bounds:
        return _fail(f"--max-n {bound} exceeds the bound {default_bound}; pass --unsafe-bounds to override", 2)
    max_index = bound * (bound + 1) // 2 if is_triangle else bound
    try:
        text = _bfile_text(args)
    except FileNotFoundError as exc:
        return _fail(f"b-file not found: {exc}", 2)
    except OSError as exc:
        return _fail(f"could not fetch b-file: {exc}", 2)
    try:
        entries = parse_bfile(text)
    except ValueError as exc:
        return _fail(f"malformed b-file: {exc}", 2)
    checked = 0
    for idx, expected in entries:
        if idx > max_index:
            break
        if is_triangle and idx < 1:
            return _fail(f"triangle index {idx} out of range", 2)
        got = value_of(idx)
        if got != expected:
            print(
                f"{args.sequence} mismatch at index {idx}: engine {got}, b-file {expected}"
            )
            return 1
        checked += 1
    summary = {"checked": checked, "max_index": max_index, "status": "ok"}
    if args.format == "json":
        record = {
            "object": args.sequence,
            "params": {"max_n": bound},
            "method": "fixture-compare",
            "value": summary,
        }
        print(json.dumps(record, sort_keys=True))
    else:
        print(f"{args.sequence}: {checked} values agree (indices <= {max_index})")
    return 0


# ---------------------------------------------------------------------------


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()

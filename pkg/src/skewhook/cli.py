"""Command-line frontend: counts, enumerations, series, bijections and suites.

Every command prints one JSON object with sorted keys (or a plain table with
``--format table``).  Large integers are written as decimal strings.  Errors
are printed as ``{"error": {"category": ..., "message": ...}}`` with a
nonzero exit code per category.
"""

import argparse
import json
import sys
import time

from . import config
from .diagrams import (
    a_prime_statistic,
    a_statistic,
    count_pleasant,
    enumerate_excited,
    enumerate_pleasant,
    enumerate_pleasant_bruteforce,
    excited_array_matrix,
    excited_peaks,
    pleasant_excited_sum,
)
from .errors import GuardError, InvariantViolation, SkewhookError, ValidationError
from .formulas import (
    COUNT_METHODS,
    bounded_parts_border_strip,
    count_syt,
    jt_nonzero_terms,
    jt_series,
    okounkov_olshanski,
    reverse_tableau_totals,
    rpp_series_excited,
    rpp_series_pleasant,
    ssyt_series_excited,
    trace_series_rpp,
    trace_series_ssyt,
)
from .hillman_grassl import HGArray, hg_forward, hg_inverse, rsk
from .series import q_factorial_product
from .shapes import Partition, SkewShape
from .suites import SUITES, run_suite
from .tableaux import (
    Tableau,
    rpp_series_bruteforce,
    rpp_trace_series_bruteforce,
    ssyt_series_bruteforce,
    ssyt_trace_series_bruteforce,
)

EXIT_CODES = {"validation": 3, "guard": 4, "invariant-violation": 5}

SERIES_METHODS = {
    "ssyt": ("excited", "jt", "brute"),
    "rpp": ("excited", "pleasant", "brute"),
    "trace-ssyt": ("excited", "brute"),
    "trace-rpp": ("excited", "pleasant", "brute"),
    "jt": ("jt",),
}
BENCH_METHODS = ("nhlf", "oo", "brute")


class UsageError(Exception):
    """Raised instead of exiting so that ``main`` controls the exit code."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


# ---------------------------------------------------------------- parsing helpers


def parse_parts(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError:
        raise ValidationError(f"bad partition {text!r}: expected comma-separated integers") from None


def parse_shape(lam: str, mu: str = "") -> SkewShape:
    return SkewShape(Partition(parse_parts(lam)), Partition(parse_parts(mu)))


def parse_shape_spec(text: str) -> SkewShape:
    """``LAMBDA`` or ``LAMBDA/MU`` with comma-separated parts."""
    lam, _, mu = text.partition("/")
    return parse_shape(lam, mu)


def parse_json(text: str, what: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ValidationError(f"bad JSON for {what}: {e.msg}") from None


def _matrix(value, what: str, allow_null: bool = False) -> list[list]:
    if not isinstance(value, list) or not all(isinstance(r, list) for r in value):
        raise ValidationError(f"{what} must be a list of rows")
    for r in value:
        for v in r:
            if v is None and allow_null:
                continue
            if not isinstance(v, int) or isinstance(v, bool):
                raise ValidationError(f"{what} entries must be integers")
    return value


def cells_json(cells) -> list[list[int]]:
    return [[c[0], c[1]] for c in sorted(cells)]


# ---------------------------------------------------------------- commands


def _shape(args) -> SkewShape:
    return parse_shape(args.lam, args.mu)


def cmd_count_syt(args) -> dict:
    shape = _shape(args)
    f, summands = count_syt(shape, args.method)
    return {"f": str(f), "summands": summands, "method": args.method, "inputs": shape.to_json()}


def _excited_record(D) -> dict:
    lam = D.shape.lam
    return {
        "cells": cells_json(D.cells),
        "a": a_statistic(D),
        "a_prime": a_prime_statistic(D),
        "peaks": cells_json(excited_peaks(D)),
        "array": excited_array_matrix(D),
        "hooks": sorted((lam.hook(u) for u in D.cells), reverse=True),
    }


def cmd_excited(args) -> dict:
    shape = _shape(args)
    diagrams = enumerate_excited(shape)
    out = {"count": str(len(diagrams)), "inputs": shape.to_json()}
    if args.action == "list":
        out["diagrams"] = [_excited_record(D) for D in diagrams]
    return out


def cmd_pleasant(args) -> dict:
    shape = _shape(args)
    if args.action == "count":
        if args.method == "formula":
            n = count_pleasant(shape)
        elif args.method == "shadow":
            n = pleasant_excited_sum(shape)
        elif args.method == "excited":
            n = len(enumerate_pleasant(shape))
        else:
            n = len(enumerate_pleasant_bruteforce(shape))
        return {"count": str(n), "method": args.method, "inputs": shape.to_json()}
    if args.method == "brute":
        found = enumerate_pleasant_bruteforce(shape)
    else:
        found = enumerate_pleasant(shape)
    return {
        "count": str(len(found)),
        "method": "brute" if args.method == "brute" else "excited",
        "diagrams": [cells_json(S) for S in found],
        "inputs": shape.to_json(),
    }


def cmd_hg(args) -> dict:
    if args.action == "apply":
        rows = _matrix(parse_json(args.tableau, "--tableau"), "tableau", allow_null=True)
        pi = Tableau.from_rows(rows, parse_parts(args.mu))
        A = hg_forward(pi)
        return {"inputs": pi.shape.to_json(), "tableau": pi.to_rows(), "array": A.to_rows(), "weight": str(A.weight())}
    rows = _matrix(parse_json(args.array, "--array"), "array")
    A = HGArray.from_rows(rows)
    pi = hg_inverse(A, parse_parts(args.mu))
    return {"inputs": pi.shape.to_json(), "array": A.to_rows(), "tableau": pi.to_rows(), "weight": str(pi.size)}


def cmd_rsk(args) -> dict:
    M = _matrix(parse_json(args.matrix, "--matrix"), "matrix")
    pair = rsk(M)
    return {
        "insertion": [list(r) for r in pair.insertion],
        "recording": [list(r) for r in pair.recording],
        "shape": list(pair.shape.parts),
    }


def _require_method(kind: str, method: str) -> str:
    allowed = SERIES_METHODS[kind]
    if method is None:
        return allowed[0]
    if method not in allowed:
        raise ValidationError(f"method {method!r} is not available for {kind}; choose from {', '.join(allowed)}")
    return method


def _check_degree(N: int) -> None:
    if N < 0:
        raise ValidationError("--deg must be nonnegative")
    config.check_guard("series_degree", N)


def cmd_qseries(args) -> dict:
    shape = _shape(args)
    N = args.deg
    _check_degree(N)
    kind = args.kind
    method = _require_method(kind, args.method)
    out = {"kind": kind, "method": method, "inputs": shape.to_json()}
    if kind == "ssyt":
        fn = {"excited": ssyt_series_excited, "jt": jt_series, "brute": ssyt_series_bruteforce}[method]
        out["series"] = fn(shape, N).to_json()
    elif kind == "rpp":
        fn = {"excited": rpp_series_excited, "pleasant": rpp_series_pleasant, "brute": rpp_series_bruteforce}[method]
        out["series"] = fn(shape, N).to_json()
    elif kind == "trace-ssyt":
        fn = {"excited": trace_series_ssyt, "brute": ssyt_trace_series_bruteforce}[method]
        out["series"] = fn(shape, N).to_json()
    elif kind == "trace-rpp":
        if method == "brute":
            s = rpp_trace_series_bruteforce(shape, N)
        else:
            s = trace_series_rpp(shape, N, method)
        out["series"] = s.to_json()
    else:
        n = shape.size
        top = n * (n - 1) // 2
        _check_degree(top)
        out["series"] = jt_series(shape, N).to_json()
        numerator = jt_series(shape, top) * q_factorial_product(n, top)
        out["numerator"] = numerator.to_json()
        out["nonzero_terms"] = jt_nonzero_terms(shape)
    return out


def cmd_bounded(args) -> dict:
    shape = _shape(args)
    N = args.deg
    _check_degree(N)
    if args.m < 0:
        raise ValidationError("--m must be nonnegative")
    if args.method == "formula":
        s = bounded_parts_border_strip(shape, args.m, N)
    else:
        s = ssyt_series_bruteforce(shape, N, max_entry=args.m)
    return {"m": args.m, "method": args.method, "series": s.to_json(), "inputs": shape.to_json()}


def cmd_oo(args) -> dict:
    shape = _shape(args)
    weight, tableaux = reverse_tableau_totals(shape)
    return {
        "f": str(okounkov_olshanski(shape)),
        "summands": tableaux,
        "weight_sum": str(weight),
        "inputs": shape.to_json(),
    }


def cmd_verify(args) -> dict:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    results = []
    for name in names:
        start = time.perf_counter()
        r = run_suite(name, args.max_cells, args.seed).to_json()
        if args.timing:
            r["elapsed"] = f"{time.perf_counter() - start:.3f}"
        r["status"] = "ok"
        results.append(r)
    return {"suites": results, "seed": args.seed}


def cmd_bench(args) -> dict:
    shapes = [parse_shape_spec(s) for s in args.shape]
    methods = args.methods.split(",") if args.methods else list(BENCH_METHODS)
    for m in methods:
        if m not in COUNT_METHODS:
            raise ValidationError(f"unknown counting method {m!r}")
    rows = []
    for shape in shapes:
        values = set()
        for m in methods:
            start = time.perf_counter()
            f, summands = count_syt(shape, m)
            row = {"shape": str(shape), "method": m, "summands": summands, "result": str(f)}
            if args.timing:
                row["elapsed"] = f"{time.perf_counter() - start:.6f}"
            rows.append(row)
            values.add(f)
        if len(values) > 1:
            raise InvariantViolation(f"counting methods disagree on {shape}: {sorted(values)}")
    return {"rows": rows}


# ---------------------------------------------------------------- output


def render_table(report: dict) -> str:
    rows = report.get("rows")
    if rows is not None:
        if not rows:
            return ""
        columns = list(rows[0])
        lines = [columns] + [[str(r.get(c, "")) for c in columns] for r in rows]
        widths = [max(len(line[i]) for line in lines) for i in range(len(columns))]
        return "\n".join("  ".join(v.ljust(w) for v, w in zip(line, widths)).rstrip() for line in lines)
    lines = []
    for key in sorted(report):
        value = report[key]
        text = value if isinstance(value, str) else json.dumps(value, sort_keys=True, separators=(",", ":"))
        lines.append(f"{key}: {text}")
    return "\n".join(lines)


def render(report: dict, fmt: str) -> str:
    if fmt == "table":
        return render_table(report)
    return json.dumps(report, sort_keys=True, separators=(",", ":"))


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default="json")
    common.add_argument("--guard", action="append", default=[], metavar="NAME=VALUE",
                        help="override a size guard (repeatable)")
    common.add_argument("--timing", action="store_true", help="include elapsed times (output is then not reproducible)")

    shape = _Parser(add_help=False)
    shape.add_argument("--lambda", dest="lam", required=True, help="parts of lambda, e.g. 2,2,2,1")
    shape.add_argument("--mu", default="", help="parts of mu (default empty)")

    parser = _Parser(prog="skewhook", description="Hook formulas for skew shapes.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("count-syt", parents=[common, shape], help="count standard Young tableaux")
    p.add_argument("--method", choices=COUNT_METHODS, default="nhlf")
    p.set_defaults(func=cmd_count_syt)

    p = sub.add_parser("excited", parents=[common, shape], help="list or count excited diagrams")
    p.add_argument("action", choices=("list", "count"))
    p.set_defaults(func=cmd_excited)

    p = sub.add_parser("pleasant", parents=[common, shape], help="list or count pleasant diagrams")
    p.add_argument("action", choices=("list", "count"))
    p.add_argument("--method", choices=("formula", "shadow", "excited", "brute"), default="formula",
                   help="count: expeaks formula, shadow-line sum, excited complements, or all subsets")
    p.set_defaults(func=cmd_pleasant)

    p = sub.add_parser("hg", parents=[common], help="apply or invert the Hillman-Grassl map")
    p.add_argument("action", choices=("apply", "invert"))
    p.add_argument("--tableau", help="RPP rows as JSON, null for cells of mu")
    p.add_argument("--array", help="array rows as JSON")
    p.add_argument("--mu", default="", help="parts of mu for a skew RPP")
    p.set_defaults(func=cmd_hg)

    p = sub.add_parser("rsk", parents=[common], help="RSK of a nonnegative integer matrix")
    p.add_argument("--matrix", required=True, help="matrix rows as JSON")
    p.set_defaults(func=cmd_rsk)

    p = sub.add_parser("qseries", parents=[common, shape], help="generating functions as truncated series")
    p.add_argument("kind", choices=tuple(SERIES_METHODS))
    p.add_argument("--deg", type=int, default=12, help="truncation degree N")
    p.add_argument("--method", default=None)
    p.set_defaults(func=cmd_qseries)

    p = sub.add_parser("bounded", parents=[common, shape], help="SSYT series of a border strip with entries in 0..M")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--deg", type=int, default=12)
    p.add_argument("--method", choices=("formula", "brute"), default="formula")
    p.set_defaults(func=cmd_bounded)

    p = sub.add_parser("oo", parents=[common, shape], help="reverse-tableau formula details")
    p.set_defaults(func=cmd_oo)

    p = sub.add_parser("verify", parents=[common], help="run an oracle-equivalence suite")
    p.add_argument("--suite", choices=tuple(SUITES) + ("all",), required=True)
    p.add_argument("--max-cells", type=int, default=None, help="only shapes with |lambda| <= K")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", parents=[common], help="compare counting formulas by summands")
    p.add_argument("--shape", action="append", default=[], metavar="LAMBDA[/MU]")
    p.add_argument("--methods", default=None, help=f"comma list from {', '.join(COUNT_METHODS)}")
    p.set_defaults(func=cmd_bench)
    return parser


def _apply_guards(items: list[str]) -> None:
    for item in items:
        config.apply_overrides(item)


def _check_hg_args(args) -> None:
    if args.command != "hg":
        return
    needed = "tableau" if args.action == "apply" else "array"
    if getattr(args, needed) is None:
        raise UsageError(f"skewhook hg {args.action}: --{needed} is required")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _check_hg_args(args)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 2
    try:
        config.env_overrides()
        with config.guard_overrides():
            _apply_guards(args.guard)
            report = args.func(args)
    except SkewhookError as e:
        error = {"error": {"category": e.category, "message": str(e)}}
        if isinstance(e, GuardError):
            error["error"].update({"guard": e.guard, "limit": e.limit, "size": e.size})
        print(json.dumps(error, sort_keys=True, separators=(",", ":")), file=sys.stderr)
        return EXIT_CODES.get(e.category, 1)
    text = render(report, args.format)
    if text:
        print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())

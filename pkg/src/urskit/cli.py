"""Command-line front end: reproducible batch runs over stable file formats.

Exit codes: 0 every check passed, 1 a mathematical verdict failed, 2 usage or
schema error, 3 factoring/search budget exceeded.

Rationals are always strings 'a/b' on the command line and in files; floats
are rejected at parse time.  JSON output is byte-stable for a given
configuration (the worker count is an execution detail and is not echoed).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from ._kernel import BACKEND
from .arith import (
    DEFAULT_FACTORING_BUDGET,
    FactoringBudgetError,
    SContext,
    is_certified_prime,
    parse_rational,
    rational_str,
    unit_equation_solutions,
)
from .heights import DEFAULT_DISPLAY_DIGITS
from .polys import RatPoly, TrinomialFamily, validate_family
from .report import SchemaError, magnitude_json, render_table, stable_json
from .sharing import SearchBudgetError, search_shared_pairs, share_check
from .subspace import (
    VIOLATED,
    LinearFormSystem,
    corollary_eval,
    evaluate_conjecture,
    summarize_defects,
)
from .trace import (
    build_trace_rows,
    dependence_detect,
    main_inequality_report,
    roth_chain_report,
    strong_uniqueness_search,
    trunc_bound_check,
    unit_height_check,
)


def _parse_primes(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    primes = []
    for part in text.split(","):
        part = part.strip()
        if not part.isdigit():
            raise argparse.ArgumentTypeError(f"not a prime: {part!r}")
        p = int(part)
        if not is_certified_prime(p):
            raise argparse.ArgumentTypeError(f"not a prime: {p}")
        primes.append(p)
    return tuple(sorted(set(primes)))


def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _load_json(path: str, location: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise SchemaError(location, f"file not found: {path}")
    except json.JSONDecodeError as exc:
        raise SchemaError(location, f"invalid JSON: {exc}")


def _parse_rat_field(raw, location: str) -> Fraction:
    if not isinstance(raw, str):
        raise SchemaError(location, f"rationals must be strings 'a/b', got {raw!r}")
    try:
        return parse_rational(raw)
    except ValueError as exc:
        raise SchemaError(location, str(exc))


def load_pairs_file(path: str) -> list[tuple[Fraction, Fraction]]:
    data = _load_json(path, path)
    if not isinstance(data, list):
        raise SchemaError(path, "pairs file must be a JSON array")
    pairs = []
    for i, entry in enumerate(data):
        loc = f"{path}[{i}]"
        if not isinstance(entry, dict) or "x" not in entry or "y" not in entry:
            raise SchemaError(loc, 'each pair needs fields "x" and "y"')
        pairs.append(
            (
                _parse_rat_field(entry["x"], f"{loc}.x"),
                _parse_rat_field(entry["y"], f"{loc}.y"),
            )
        )
    return pairs


def load_poly_file(path: str) -> RatPoly:
    data = _load_json(path, path)
    if not isinstance(data, dict) or "coeffs" not in data:
        raise SchemaError(path, 'polynomial file needs field "coeffs"')
    coeffs = data["coeffs"]
    if not isinstance(coeffs, list) or not coeffs:
        raise SchemaError(f"{path}.coeffs", "must be a nonempty array of rationals")
    return RatPoly.of(
        _parse_rat_field(c, f"{path}.coeffs[{i}]") for i, c in enumerate(coeffs)
    )


def load_forms_file(path: str) -> LinearFormSystem:
    data = _load_json(path, path)
    if not isinstance(data, dict) or "r" not in data or "forms" not in data:
        raise SchemaError(path, 'forms file needs fields "r" and "forms"')
    r = data["r"]
    if not isinstance(r, int) or r < 1:
        raise SchemaError(f"{path}.r", "must be an integer >= 1")
    rows = []
    if not isinstance(data["forms"], list):
        raise SchemaError(f"{path}.forms", "must be an array of coefficient rows")
    for i, row in enumerate(data["forms"]):
        loc = f"{path}.forms[{i}]"
        if not isinstance(row, list) or len(row) != r + 1:
            raise SchemaError(loc, f"each form needs exactly {r + 1} coefficients")
        rows.append([_parse_rat_field(c, f"{loc}[{j}]") for j, c in enumerate(row)])
    try:
        return LinearFormSystem.of(r, rows)
    except ValueError as exc:
        raise SchemaError(path, str(exc))


def load_points_file(path: str, width: int) -> list[list[Fraction]]:
    data = _load_json(path, path)
    if not isinstance(data, list):
        raise SchemaError(path, "points file must be a JSON array")
    points = []
    for i, row in enumerate(data):
        loc = f"{path}[{i}]"
        if not isinstance(row, list) or len(row) != width:
            raise SchemaError(loc, f"each point needs exactly {width} coordinates")
        points.append([_parse_rat_field(c, f"{loc}[{j}]") for j, c in enumerate(row)])
    return points


def _family_from_args(args) -> TrinomialFamily:
    try:
        return TrinomialFamily(args.n, args.m, args.a, args.b)
    except ValueError as exc:
        raise SchemaError("--n/--m", str(exc))


def _poly_from_args(args) -> RatPoly:
    if getattr(args, "poly", None):
        return load_poly_file(args.poly)
    for flag in ("n", "m", "a", "b"):
        if getattr(args, flag, None) is None:
            raise SchemaError(
                "--poly/--n", "give either --poly FILE or all of --n --m --a --b"
            )
    return _family_from_args(args).polynomial()


def _context(args) -> SContext:
    return SContext(args.s, args.budget)


def _envelope(args, command: str, config: dict, payload: dict) -> dict:
    return {
        "artifact": {"name": "urskit", "version": __version__, "kernel": BACKEND},
        "command": command,
        "config": config,
        **payload,
    }


def _emit(args, report: dict, table: str) -> None:
    if args.format in ("table", "both"):
        print(table)
    text = stable_json(report)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    elif args.format in ("json", "both"):
        sys.stdout.write(text)


def _common_config(args, **extra) -> dict:
    cfg = {
        "s_primes": list(args.s),
        "factoring_budget": args.budget,
        "format": args.format,
        "digits": args.digits,
    }
    cfg.update(extra)
    return cfg


def cmd_validate_poly(args) -> int:
    S = _context(args)
    fam = _family_from_args(args)
    rep = validate_family(S, fam)
    config = _common_config(
        args, n=fam.n, m=fam.m, a=rational_str(fam.a), b=rational_str(fam.b)
    )
    payload = {"validation": rep.to_json_dict()}
    table = render_table(
        ["check", "passed", "detail"],
        [[c.name, str(c.passed), c.detail] for c in rep.checks],
    )
    _emit(args, _envelope(args, "validate-poly", config, payload), table)
    return 0 if rep.passed else 1


def cmd_share(args) -> int:
    S = _context(args)
    P = _poly_from_args(args)
    pairs = load_pairs_file(args.pairs)
    rows = [share_check(S, P, x, y) for x, y in pairs]
    config = _common_config(args, pairs=args.pairs, poly=str(P))
    payload = {"rows": [r.to_json_dict() for r in rows]}
    table = render_table(
        ["x", "y", "u", "shares"],
        [
            [
                rational_str(r.x),
                rational_str(r.y),
                "-" if r.u is None else rational_str(r.u),
                str(r.shares),
            ]
            for r in rows
        ],
    )
    _emit(args, _envelope(args, "share", config, payload), table)
    return 0 if all(r.shares for r in rows) else 1


def cmd_unit_eq(args) -> int:
    S = _context(args)
    sols = unit_equation_solutions(S, args.bound)
    config = _common_config(args, exponent_bound=args.bound)
    payload = {
        "solutions": [[rational_str(u), rational_str(v)] for u, v in sols],
        "count": len(sols),
    }
    table = render_table(
        ["u", "v"], [[rational_str(u), rational_str(v)] for u, v in sols]
    )
    _emit(args, _envelope(args, "unit-eq", config, payload), table)
    return 0


def cmd_search_shared(args) -> int:
    S = _context(args)
    P = _poly_from_args(args)
    rows = search_shared_pairs(
        S,
        P,
        args.height_bound,
        args.denom_exponent,
        pair_budget=args.pair_budget,
        workers=args.workers,
    )
    config = _common_config(
        args,
        poly=str(P),
        height_bound=args.height_bound,
        denom_exponent=args.denom_exponent,
        pair_budget=args.pair_budget,
    )
    payload = {"rows": [r.to_json_dict() for r in rows], "count": len(rows)}
    table = render_table(
        ["x", "y", "u"],
        [
            [
                rational_str(r.x),
                rational_str(r.y),
                "-" if r.u is None else rational_str(r.u),
            ]
            for r in rows
        ],
    )
    _emit(args, _envelope(args, "search-shared", config, payload), table)
    return 0


def cmd_search_su(args) -> int:
    S = _context(args)
    P = _poly_from_args(args)
    pairs = strong_uniqueness_search(
        S,
        P,
        args.c,
        args.height_bound,
        args.denom_exponent,
        pair_budget=args.pair_budget,
        workers=args.workers,
    )
    config = _common_config(
        args,
        poly=str(P),
        c=rational_str(args.c),
        height_bound=args.height_bound,
        denom_exponent=args.denom_exponent,
        pair_budget=args.pair_budget,
    )
    payload = {
        "pairs": [[rational_str(x), rational_str(y)] for x, y in pairs],
        "count": len(pairs),
    }
    table = render_table(
        ["x", "y"], [[rational_str(x), rational_str(y)] for x, y in pairs]
    )
    _emit(args, _envelope(args, "search-su", config, payload), table)
    return 0


def cmd_subspace(args) -> int:
    S = _context(args)
    if args.corollary:
        for flag in ("A", "B", "C"):
            if getattr(args, flag) is None:
                raise SchemaError("--A/--B/--C", "corollary mode needs A, B and C")
        if not args.pairs:
            raise SchemaError("--pairs", "corollary mode needs a pairs file")
        pairs = load_pairs_file(args.pairs)
        rows = corollary_eval(S, args.A, args.B, args.C, args.epsilon, pairs)
        config = _common_config(
            args,
            mode="corollary",
            A=rational_str(args.A),
            B=rational_str(args.B),
            C=rational_str(args.C),
            epsilon=rational_str(args.epsilon),
            pairs=args.pairs,
        )
        payload = {"rows": [r.to_json_dict(args.digits) for r in rows]}
        table = render_table(
            ["x", "y", "verdict", "direct", "agree"],
            [
                [
                    rational_str(r.x),
                    rational_str(r.y),
                    r.verdict,
                    r.direct_verdict,
                    str(r.agree),
                ]
                for r in rows
            ],
        )
        _emit(args, _envelope(args, "subspace", config, payload), table)
        bad = any(r.verdict == VIOLATED or r.verdict == "error" for r in rows)
        return 1 if bad else 0
    if not args.forms or not args.points:
        raise SchemaError("--forms/--points", "conjecture mode needs both files")
    sys_ = load_forms_file(args.forms)
    points = load_points_file(args.points, sys_.r + 1)
    reports = evaluate_conjecture(S, sys_, args.epsilon, points, strict=args.strict)
    config = _common_config(
        args,
        mode="conjecture",
        forms=args.forms,
        points=args.points,
        epsilon=rational_str(args.epsilon),
        strict=args.strict,
    )
    payload = {
        "rows": [r.to_json_dict(args.digits) for r in reports],
        "summary": summarize_defects(reports).to_json_dict(args.digits),
    }
    table = render_table(
        ["point", "max_height", "rhs", "verdict"],
        [
            [
                "(" + ",".join(rational_str(c) for c in r.coords) + ")",
                str(r.max_height.value),
                "-" if r.rhs is None else str(r.rhs.value),
                r.verdict,
            ]
            for r in reports
        ],
    )
    _emit(args, _envelope(args, "subspace", config, payload), table)
    return 1 if any(r.verdict == VIOLATED for r in reports) else 0


def cmd_trace(args) -> int:
    S = _context(args)
    fam = _family_from_args(args)
    validation = validate_family(S, fam)
    if not validation.passed:
        failed = ", ".join(c.name for c in validation.checks if not c.passed)
        print(
            f"family hypotheses unmet ({failed}); run validate-poly for details",
            file=sys.stderr,
        )
        return 1
    pairs = load_pairs_file(args.pairs)
    rows = build_trace_rows(S, fam, pairs)
    P = fam.polynomial()
    roth = roth_chain_report(S, P, rows)
    unit_h = unit_height_check(S, P, rows)
    trunc = trunc_bound_check(S, fam, rows)
    main_rep = main_inequality_report(S, fam, args.epsilon, rows)
    usable = [r for r in rows if r.u is not None]
    dependence = dependence_detect(rows) if usable else None
    config = _common_config(
        args,
        n=fam.n,
        m=fam.m,
        a=rational_str(fam.a),
        b=rational_str(fam.b),
        epsilon=rational_str(args.epsilon),
        pairs=args.pairs,
    )
    payload = {
        "validation": validation.to_json_dict(),
        "rows": [
            {
                "x": rational_str(r.x),
                "y": rational_str(r.y),
                "u": None if r.u is None else rational_str(r.u),
                "shares": r.shares,
                "eta": None if r.eta is None else rational_str(r.eta),
                "zeta": None if r.zeta is None else rational_str(r.zeta),
                "identity_ok": r.identity_ok,
                "h_x": magnitude_json(r.h_x, args.digits),
                "h_y": magnitude_json(r.h_y, args.digits),
                "h_u": None if r.h_u is None else magnitude_json(r.h_u, args.digits),
                "h_eta": None if r.h_eta is None else magnitude_json(r.h_eta, args.digits),
                "h_zeta": None
                if r.h_zeta is None
                else magnitude_json(r.h_zeta, args.digits),
                "n1_x": None if r.n1_x is None else magnitude_json(r.n1_x, args.digits),
                "n1_y": None if r.n1_y is None else magnitude_json(r.n1_y, args.digits),
                "n2_eta": None
                if r.n2_eta is None
                else magnitude_json(r.n2_eta, args.digits),
                "n2_zeta": None
                if r.n2_zeta is None
                else magnitude_json(r.n2_zeta, args.digits),
                "n2_u": None if r.n2_u is None else magnitude_json(r.n2_u, args.digits),
                "n_xm_a": None
                if r.n_xm_a is None
                else magnitude_json(r.n_xm_a, args.digits),
                "n_ym_a": None
                if r.n_ym_a is None
                else magnitude_json(r.n_ym_a, args.digits),
                "flags": list(r.flags),
            }
            for r in rows
        ],
        "checks": {
            "roth_chain": roth.to_json_dict(),
            "unit_height": unit_h.to_json_dict(),
            "trunc_bounds": trunc.to_json_dict(),
            "main_inequality": main_rep.to_json_dict(args.digits),
        },
        "dependence": None if dependence is None else dependence.to_json_dict(),
    }
    table_rows = [
        [
            rational_str(r.x),
            rational_str(r.y),
            "-" if r.u is None else rational_str(r.u),
            str(r.shares),
            str(r.identity_ok),
            ",".join(r.flags) or "-",
        ]
        for r in rows
    ]
    table = render_table(["x", "y", "u", "shares", "identity", "flags"], table_rows)
    summary = render_table(
        ["check", "ok"],
        [
            ["roth_chain", str(roth.ok)],
            ["unit_height", str(unit_h.ok)],
            ["trunc_bounds", str(trunc.ok)],
            ["main_inequality", str(main_rep.ok)],
        ],
    )
    _emit(args, _envelope(args, "trace", config, payload), table + "\n\n" + summary)
    identity_fail = any(r.identity_ok is False for r in rows)
    exact_fail = not (roth.ok and unit_h.ok and trunc.ok and main_rep.ok)
    return 1 if identity_fail or exact_fail else 0


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--s",
        type=_parse_primes,
        required=True,
        help="comma-separated finite primes of S (may be empty: --s '')",
    )
    p.add_argument(
        "--budget",
        type=int,
        default=DEFAULT_FACTORING_BUDGET,
        help="largest integer fully factorable by this run",
    )
    p.add_argument(
        "--format",
        choices=("json", "table", "both"),
        default="table",
        help="report format (default: table)",
    )
    p.add_argument("--out", default=None, help="write the JSON report to this path")
    p.add_argument(
        "--digits",
        type=int,
        default=DEFAULT_DISPLAY_DIGITS,
        help="decimal places for display-only log values",
    )


def _add_family(p: argparse.ArgumentParser, required: bool) -> None:
    p.add_argument("--n", type=int, required=required)
    p.add_argument("--m", type=int, required=required)
    p.add_argument("--a", type=_rational_arg, required=required)
    p.add_argument("--b", type=_rational_arg, required=required)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="urskit",
        description=(
            "Exact S-unit sharing, heights, truncated counting functions, and "
            "unique-range-set experiments over Q"
        ),
    )
    parser.add_argument("--version", action="version", version=f"urskit {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate-poly", help="check the trinomial family hypotheses")
    _add_common(p)
    _add_family(p, required=True)
    p.set_defaults(func=cmd_validate_poly)

    p = sub.add_parser("share", help="sharing certificates for a pairs file")
    _add_common(p)
    _add_family(p, required=False)
    p.add_argument("--poly", help="polynomial JSON file (alternative to --n/--m/--a/--b)")
    p.add_argument("--pairs", required=True, help="JSON array of {x, y}")
    p.set_defaults(func=cmd_share)

    p = sub.add_parser("trace", help="full proof-chain report on a pairs file")
    _add_common(p)
    _add_family(p, required=True)
    p.add_argument("--pairs", required=True)
    p.add_argument("--epsilon", type=_rational_arg, default=Fraction(1, 10))
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("subspace", help="evaluate the truncated inequality on points")
    _add_common(p)
    p.add_argument("--forms", help="forms JSON file (conjecture mode)")
    p.add_argument("--points", help="points JSON file (conjecture mode)")
    p.add_argument("--strict", action="store_true", help="reject non-primitive points")
    p.add_argument("--corollary", action="store_true", help="two-variable mode")
    p.add_argument("--A", type=_rational_arg, default=None)
    p.add_argument("--B", type=_rational_arg, default=None)
    p.add_argument("--C", type=_rational_arg, default=None)
    p.add_argument("--pairs", help="pairs JSON file (corollary mode)")
    p.add_argument("--epsilon", type=_rational_arg, default=Fraction(1, 10))
    p.set_defaults(func=cmd_subspace)

    p = sub.add_parser("unit-eq", help="enumerate S-unit equation solutions u+v=1")
    _add_common(p)
    p.add_argument("--bound", type=int, required=True, help="max |ord_p(u)| over S")
    p.set_defaults(func=cmd_unit_eq)

    p = sub.add_parser("search-shared", help="brute-force sharing pairs in a box")
    _add_common(p)
    _add_family(p, required=False)
    p.add_argument("--poly", help="polynomial JSON file")
    p.add_argument("--height-bound", type=int, required=True)
    p.add_argument("--denom-exponent", type=int, default=0)
    p.add_argument("--pair-budget", type=int, default=None)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_search_shared)

    p = sub.add_parser("search-su", help="search pairs with P(x) = c*P(y), x != y")
    _add_common(p)
    _add_family(p, required=False)
    p.add_argument("--poly", help="polynomial JSON file")
    p.add_argument("--c", type=_rational_arg, default=Fraction(1))
    p.add_argument("--height-bound", type=int, required=True)
    p.add_argument("--denom-exponent", type=int, default=0)
    p.add_argument("--pair-budget", type=int, default=None)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_search_su)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SchemaError as exc:
        print(f"schema error: {exc}", file=sys.stderr)
        return 2
    except (FactoringBudgetError, SearchBudgetError) as exc:
        print(f"budget error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

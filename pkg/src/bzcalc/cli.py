"""Command-line entry point: ``bzcalc <subcommand> ...``.

Exit codes: 0 success, 1 computation or verification failure (including
unsupported expression shapes), 2 usage, parse or bound errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from .combinatorics import Partition
from .config import BoundExceeded, Bounds, check_weyl_bound
from .cosets import (
    admissible_bruteforce, admissible_set_literal, admissible_widths, all_subdiagrams,
    describe, descriptor_to_json, levi_partition, rect_word, surviving_reps,
)
from .derivatives import (
    NotCovered, allowed_orders, compose, derivative, expr_from_json, expr_to_json,
    rank, result_to_json, term_to_json,
)
from .support import report_table, report_to_json, whittaker_support
from .verify import run_suite
from .whittaker import (
    NilpotentElement, SemisimpleElement, centralizer_basis, dominates, is_whittaker_pair,
    neutral_h, nilradical_of_pair, pair_to_json, standard_H,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(args, payload, table: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(table)


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _read_expr(path: str | None):
    try:
        if path in (None, "-"):
            text = sys.stdin.read()
        else:
            with open(path) as fh:
                text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read expression: {exc}") from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON: {exc}") from None
    try:
        return expr_from_json(obj)
    except NotCovered:
        raise
    except (ValueError, TypeError) as exc:
        raise UsageError(f"invalid expression: {exc}") from None


def _require(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.command} needs {', '.join(missing)}")


def _check_sides(n1: int, n2: int) -> None:
    if n1 < 0 or n2 < 0:
        raise UsageError("--n1 and --n2 must be non-negative")


def cmd_cosets(args) -> int:
    _require(args, "n1", "n2")
    _check_sides(args.n1, args.n2)
    check_weyl_bound(args.n1 + args.n2, Bounds(max_weyl_n=args.bound) if args.bound else None)
    n = args.n1 + args.n2
    if args.m is not None and not 0 <= args.m <= n:
        raise UsageError(f"--m must lie in [0, {n}]")
    diagrams = (all_subdiagrams(args.n1, args.n2) if args.m is None
                else surviving_reps(args.n1, args.n2, args.m))
    descs = [describe(d) for d in diagrams]
    blocks = []
    for desc in descs:
        head = f"k={list(desc.diagram.k)}  w={desc.w}  pivots={list(desc.pivots)}"
        grid = desc.diagram.render()
        blocks.append(head + ("\n" + grid if grid else ""))
    _emit(args, [descriptor_to_json(d) for d in descs],
          f"{len(descs)} double cosets\n\n" + "\n\n".join(blocks))
    return EXIT_OK


def cmd_admissible(args) -> int:
    _require(args, "n1", "n2", "s")
    _check_sides(args.n1, args.n2)
    n = args.n1 + args.n2
    if not 1 <= args.s <= n:
        raise UsageError(f"--s must lie in [1, {n}]")
    rows = []
    for j in admissible_widths(args.n1, args.n2, args.s):
        rows.append({"j": j, "word": list(rect_word(j, args.n1, args.n2).word),
                     "levi": list(levi_partition(j, args.n1, args.n2, args.s).blocks)})
    payload = {"n1": args.n1, "n2": args.n2, "s": args.s, "admissible": rows,
               "literal_three_case": [list(w.word) for w in
                                      admissible_set_literal(args.n1, args.n2, args.s)]}
    lines = [f"j={r['j']}  w={''.join(map(str, r['word']))}  levi={r['levi']}" for r in rows]
    if args.check:
        check_weyl_bound(n, Bounds(max_weyl_n=args.bound) if args.bound else None)
        brute = sorted(list(w.word) for w in admissible_bruteforce(args.n1, args.n2, args.s))
        agrees = brute == sorted(r["word"] for r in rows)
        payload["bruteforce_agrees"] = agrees
        lines.append(f"brute-force tail filter agrees: {agrees}")
        if not agrees:
            _emit(args, payload, "\n".join(lines))
            return EXIT_FAIL
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_pairs(args) -> int:
    _require(args, "lam")
    try:
        lam = Partition.from_parts(_int_list(args.lam))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    order = _int_list(args.order) if args.order else None
    try:
        phi = NilpotentElement.standard(lam, order)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.diag:
        try:
            S = SemisimpleElement(tuple(Fraction(x) for x in args.diag.split(",")))
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"--diag expects comma-separated rationals, got {args.diag!r}") from None
        if S.n != phi.n:
            raise UsageError(f"--diag has {S.n} entries, expected {phi.n}")
    else:
        S = neutral_h(lam, order)
    h = neutral_h(lam, order)
    payload = pair_to_json(S, phi)
    payload["is_whittaker_pair"] = is_whittaker_pair(S, phi)
    payload["centralizer_dim"] = len(centralizer_basis(phi))
    if payload["is_whittaker_pair"]:
        payload["nilradical_dim"] = nilradical_of_pair(S, phi).dimension
        payload["neutral_dominates_S"] = dominates(h, S, phi)
    if len(lam) == 1:
        payload["standard_H"] = [str(x) for x in standard_H(lam.size).diag]
    table = "\n".join(f"{k}: {v}" for k, v in payload.items())
    _emit(args, payload, table)
    return EXIT_OK if payload["is_whittaker_pair"] else EXIT_FAIL


def cmd_derivative(args) -> int:
    e = _read_expr(args.expr)
    if (args.m is None) == (args.lam is None):
        raise UsageError("derivative needs exactly one of --m or --lambda")
    if args.m is not None:
        if args.m not in allowed_orders(e):
            payload = {"expr": expr_to_json(e), "m": args.m, "allowed": sorted(allowed_orders(e)),
                       "terms": []}
            _emit(args, payload, f"D^({args.m}) is not allowed; allowed orders "
                                 f"{sorted(allowed_orders(e))}")
            return EXIT_FAIL
        terms = derivative(e, args.m)
        payload = {"expr": expr_to_json(e), "m": args.m, "terms": [term_to_json(t) for t in terms]}
        table = "\n".join(f"{json.dumps(expr_to_json(t.rest))} ⊗ W_{t.order}"
                          f"{'  [c]' if t.scalar_unknown else ''}" for t in terms) or "0"
        _emit(args, payload, table)
        return EXIT_OK
    parts = _int_list(args.lam)
    if sum(parts) != rank(e) or any(p < 1 for p in parts):
        raise UsageError(f"--lambda must be positive parts summing to {rank(e)}")
    result = compose(e, parts)
    payload = result_to_json(result)
    table = (f"lambda={result.lam}  nonzero={result.nonzero}  "
             f"branches={len(result.branches)}  psi={list(result.character.psi_pattern)}")
    _emit(args, payload, table)
    return EXIT_OK


def cmd_support(args) -> int:
    e = _read_expr(args.expr)
    report = whittaker_support(e, Bounds(max_partition_rank=args.bound) if args.bound else None)
    _emit(args, report_to_json(report), report_table(report))
    return EXIT_OK


def cmd_verify(args) -> int:
    bound = args.bound if args.bound is not None else 6
    results = run_suite(args.suite, bound)
    ok = all(r.ok for r in results)
    payload = [{"suite": r.suite, "checked": r.checked, "ok": r.ok, "failures": r.failures[:20]}
               for r in results]
    lines = []
    for r in results:
        lines.append(f"{r.suite:<11} {'PASS' if r.ok else 'FAIL'}  ({r.checked} checks, bound {bound})")
        lines.extend(f"  counterexample: {f}" for f in r.failures[:5])
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--bound", type=int, help="enumeration bound (overrides BZ_MAX_N)")

    parser = argparse.ArgumentParser(prog="bzcalc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cosets", parents=[common], help="Young subdiagrams and coset words")
    p.add_argument("--n1", type=int)
    p.add_argument("--n2", type=int)
    p.add_argument("--m", type=int, help="restrict to P\\G/Q_[n-m,1^m]")
    p.set_defaults(func=cmd_cosets)

    p = sub.add_parser("admissible", parents=[common], help="admissible rectangles for D^(s)")
    p.add_argument("--n1", type=int)
    p.add_argument("--n2", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--check", action="store_true", help="compare with the brute-force filter")
    p.set_defaults(func=cmd_admissible)

    p = sub.add_parser("pairs", parents=[common], help="Whittaker pair data for a Jordan type")
    p.add_argument("--lambda", dest="lam", help="Jordan type, e.g. 3,2,1")
    p.add_argument("--order", help="block order as indices, e.g. 2,0,1")
    p.add_argument("--diag", help="semisimple S as comma-separated rationals (default: neutral h)")
    p.set_defaults(func=cmd_pairs)

    p = sub.add_parser("derivative", parents=[common], help="D^(m) or a composed coefficient")
    p.add_argument("--expr", help="JSON expression file, '-' for stdin (default)")
    p.add_argument("--m", type=int)
    p.add_argument("--lambda", dest="lam", help="partition for the composed coefficient")
    p.set_defaults(func=cmd_derivative)

    p = sub.add_parser("support", parents=[common], help="Whittaker support and Eulerianity")
    p.add_argument("--expr", help="JSON expression file, '-' for stdin (default)")
    p.set_defaults(func=cmd_support)

    p = sub.add_parser("verify", parents=[common], help="run brute-force oracle sweeps")
    p.add_argument("--suite", default="all",
                   choices=["cosets", "inverse", "admissible", "pairs", "support", "all"])
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BoundExceeded as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NotCovered as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

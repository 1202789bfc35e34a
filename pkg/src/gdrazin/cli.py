"""Command-line front end.

Exit codes: 0 success, 1 hypothesis false / generation failure,
2 input or usage error, 3 formula-oracle mismatch or failed self-test.
stdout carries only JSON payloads (or the self-test table); diagnostics go
to stderr.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .drazin import drazin
from .formulas import Condition, HypothesisViolation, check_condition, evaluate
from .generate import GenerationError, GenSpec, gen_pair_info
from .io import MatrixFormatError, dumps, load_matrix, matrix_to_obj, max_n

EXIT_OK, EXIT_FALSE, EXIT_INPUT, EXIT_MISMATCH = 0, 1, 2, 3


class _InputError(Exception):
    pass


def _load_pair(path_a, path_b):
    a, b = load_matrix(path_a), load_matrix(path_b)
    if a.shape != b.shape:
        raise _InputError(f"a is {a.rows}x{a.cols} but b is {b.rows}x{b.cols}")
    return a, b


def cmd_drazin(args) -> int:
    a = load_matrix(args.file)
    t = drazin(a)
    sys.stdout.write(dumps({"ad": matrix_to_obj(t.ad), "index": t.index, "api": matrix_to_obj(t.api)}))
    return EXIT_OK


def cmd_check(args) -> int:
    a, b = _load_pair(args.a, args.b)
    conds = list(Condition) if args.all else [Condition(args.condition)]
    table = {c.value: check_condition(a, b, c) for c in conds}
    sys.stdout.write(dumps(table))
    return EXIT_OK if all(table.values()) else EXIT_FALSE


def cmd_sum(args) -> int:
    a, b = _load_pair(args.a, args.b)
    method = Condition(args.method)
    if method is Condition.LIU:
        raise _InputError("LIU is a predicate only; it has no formula")
    try:
        result = evaluate(a, b, method)
    except HypothesisViolation as exc:
        print(f"{method.value}: {exc}", file=sys.stderr)
        return EXIT_FALSE
    if not args.verify:
        sys.stdout.write(dumps(matrix_to_obj(result)))
        return EXIT_OK
    oracle = drazin(a + b).ad
    match = result == oracle
    sys.stdout.write(dumps({
        "method": method.value,
        "result": matrix_to_obj(result),
        "oracle": matrix_to_obj(oracle),
        "match": match,
    }))
    if not match:
        print(f"{method.value}: formula disagrees with the Drazin inverse of a+b", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_generate(args) -> int:
    try:
        spec = GenSpec(args.n, args.r, args.seed, Condition(args.family), args.entry_bound, args.complex)
    except ValueError as exc:
        raise _InputError(str(exc)) from exc
    if spec.n > max_n():
        raise _InputError(f"n={spec.n} exceeds DRAZIN_MAX_N={max_n()}")
    try:
        g = gen_pair_info(spec)
    except GenerationError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_FALSE
    out = Path(args.output)
    out.mkdir(parents=True, exist_ok=True)
    holds = check_condition(g.a, g.b, spec.family)
    cert = {
        "family": spec.family.value,
        "n": spec.n,
        "r": spec.r,
        "seed": spec.seed,
        "entry_bound": spec.entry_bound,
        "complex_entries": spec.complex_entries,
        "subfamily": g.subfamily,
        "condition_holds": holds,
        "oracle": matrix_to_obj(drazin(g.a + g.b).ad),
    }
    (out / "a.json").write_text(dumps(matrix_to_obj(g.a)))
    (out / "b.json").write_text(dumps(matrix_to_obj(g.b)))
    (out / "certificate.json").write_text(dumps(cert))
    sys.stdout.write(dumps(cert))
    return EXIT_OK if holds else EXIT_FALSE


def cmd_selftest(args) -> int:
    from .acceptance import run, select

    criteria = select(args.filter)
    if not criteria:
        raise _InputError(f"no criterion matches filter {args.filter!r}")
    fixtures = Path(args.fixtures) if args.fixtures else None
    first_fail = None
    for c in criteria:
        res = run(c, fixtures)
        print(res.line(), flush=True)
        if not res.passed and first_fail is None:
            first_fail = c.key
    total = len(criteria)
    if first_fail:
        print(f"self-test failed: first failing criterion {first_fail}", file=sys.stderr)
        return EXIT_MISMATCH
    print(f"all {total} criteria passed")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gdrazin", description="Exact Drazin inverses of sums.")
    sub = parser.add_subparsers(dest="command", required=True)
    conds = [c.value for c in Condition]

    p = sub.add_parser("drazin", help="Drazin inverse, index and spectral idempotent")
    p.add_argument("file")
    p.set_defaults(func=cmd_drazin)

    p = sub.add_parser("check", help="evaluate hypothesis conditions for a pair")
    p.add_argument("a")
    p.add_argument("b")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--condition", choices=conds)
    g.add_argument("--all", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("sum", help="(a+b)^D by one of the closed formulas")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--method", required=True, choices=conds)
    p.add_argument("--verify", action="store_true", help="compare against the direct Drazin inverse")
    p.set_defaults(func=cmd_sum)

    p = sub.add_parser("generate", help="write a certified random pair")
    p.add_argument("--family", required=True, choices=conds)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-r", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--entry-bound", type=int, default=3)
    p.add_argument("--complex", action="store_true", help="conjugate by a Gaussian-integer transvection")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("selftest", help="run the acceptance criteria")
    p.add_argument("--filter", help="criterion key, key prefix or group (e.g. 'examples')")
    p.add_argument("--fixtures", help="directory holding the example fixture files")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (MatrixFormatError, _InputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

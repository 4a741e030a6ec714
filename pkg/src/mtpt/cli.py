"""Command line: ``mtpt {solve,verify,gen,bench}``.

Exit codes: 0 success, 1 wrong answer or failed internal check, 2 bad flags
or unreadable input.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Callable

from .bench import DEFAULT_DUES_EXPONENT, format_csv, run_bench
from .convolution.mms import DEFAULT_BACKEND, UnknownBackendError, backend_names
from .instance import FAMILIES, Instance, InstanceFormatError, generate_instance, read_instance, write_instance
from .oracle import MAX_BRUTE_JOBS, brute_force_opt
from .solvers import InvariantViolation, lawler_moore, solve_bundled, sumset_scheduler

EXIT_OK, EXIT_WRONG, EXIT_USAGE = 0, 1, 2

Solver = Callable[[Instance, Fraction | None, str], int]

# looked up at call time so tests can swap in a broken solver
SOLVERS: dict[str, Solver] = {
    "brute": lambda inst, delta, backend: brute_force_opt(inst),
    "lm": lambda inst, delta, backend: lawler_moore(inst),
    "sumset": lambda inst, delta, backend: sumset_scheduler(inst),
    "bundled": lambda inst, delta, backend: solve_bundled(inst, delta, backend).tardy_total,
}
ALIASES = {"algorithm1": "sumset"}


class UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        num, _, den = text.partition("/")
        value = Fraction(int(num), int(den)) if den else Fraction(int(num))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a rational p/q, got {text!r}") from None
    if not 0 < value < 1:
        raise argparse.ArgumentTypeError(f"delta must lie in (0, 1), got {text}")
    return value


def _nonneg_int(text: str) -> int:
    try:
        value = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a decimal integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def _positive_int(text: str) -> int:
    value = _nonneg_int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _int_list(text: str) -> list[int]:
    items = [part.strip() for part in text.split(",")]
    if not items or any(not part for part in items):
        raise argparse.ArgumentTypeError(f"expected a comma list of integers, got {text!r}")
    return [_positive_int(part) for part in items]


def _alg_list(text: str) -> list[str]:
    algs = [ALIASES.get(part.strip(), part.strip()) for part in text.split(",")]
    unknown = [a for a in algs if a not in SOLVERS]
    if unknown or not algs:
        raise argparse.ArgumentTypeError(f"unknown algorithms {unknown}; choose from {sorted(SOLVERS)}")
    return algs


def _alg(text: str) -> str:
    name = ALIASES.get(text, text)
    if name not in SOLVERS:
        raise argparse.ArgumentTypeError(f"unknown algorithm {text!r}; choose from {sorted(SOLVERS)}")
    return name


def _backend(text: str) -> str:
    if text not in backend_names():
        raise argparse.ArgumentTypeError(f"unknown backend {text!r}; choose from {backend_names()}")
    return text


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mtpt", description="Minimum tardy processing time solvers")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="print the minimum tardy processing time of an instance")
    p.add_argument("--alg", type=_alg, required=True, help="brute, lm, sumset (alias algorithm1) or bundled")
    p.add_argument("--input", required=True, help="instance JSON file")
    p.add_argument("--delta", type=_rational, help="bundling parameter p/q for --alg bundled")
    p.add_argument("--backend", type=_backend, default=DEFAULT_BACKEND)

    p = sub.add_parser("verify", help="compare an algorithm with a reference solver")
    p.add_argument("--alg", type=_alg, required=True)
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--input", help="instance JSON file")
    source.add_argument("--random", type=_positive_int, metavar="COUNT", help="number of random instances")
    p.add_argument("--seed", type=_nonneg_int, default=0)
    p.add_argument("--n", type=_nonneg_int, default=8)
    p.add_argument("--pmax", type=_positive_int, default=10)
    p.add_argument("--family", choices=FAMILIES, help="default: cycle through all families")
    p.add_argument("--delta", type=_rational)
    p.add_argument("--backend", type=_backend, default=DEFAULT_BACKEND)

    p = sub.add_parser("gen", help="write a seeded random instance")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--n", type=_nonneg_int, required=True)
    p.add_argument("--pmax", type=_positive_int, required=True)
    p.add_argument("--seed", type=_nonneg_int, required=True)
    p.add_argument("--out", required=True)

    p = sub.add_parser("bench", help="time solvers at target total loads and emit CSV")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--sizes", type=_int_list, required=True, help="comma list of target total loads P")
    p.add_argument("--algs", type=_alg_list, required=True, help="comma list of algorithms")
    p.add_argument("--seed", type=_nonneg_int, default=0)
    p.add_argument("--csv", help="write CSV here instead of stdout")
    p.add_argument("--delta", type=_rational)
    p.add_argument("--backend", type=_backend, default=DEFAULT_BACKEND)
    p.add_argument(
        "--dues-exponent",
        type=float,
        default=DEFAULT_DUES_EXPONENT,
        help="jobs per instance ~ P ** this (default %(default)s)",
    )
    return parser


def _read(path: str) -> Instance:
    try:
        return read_instance(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from exc
    except InstanceFormatError as exc:
        raise UsageError(f"{path}: {exc}") from exc


def cmd_solve(args) -> int:
    instance = _read(args.input)
    print(SOLVERS[args.alg](instance, args.delta, args.backend))
    return EXIT_OK


def _reference(instance: Instance) -> tuple[str, int]:
    if instance.n <= MAX_BRUTE_JOBS:
        return "brute", SOLVERS["brute"](instance, None, DEFAULT_BACKEND)
    return "lm", SOLVERS["lm"](instance, None, DEFAULT_BACKEND)


def _verify_one(label: str, instance: Instance, args) -> bool:
    got = SOLVERS[args.alg](instance, args.delta, args.backend)
    ref_name, expected = _reference(instance)
    if got != expected:
        print(f"MISMATCH {label}: {args.alg}={got} {ref_name}={expected}")
        return False
    return True


def cmd_verify(args) -> int:
    if args.input is not None:
        ok = _verify_one(args.input, _read(args.input), args)
        checked = 1
    else:
        ok = True
        for i in range(args.random):
            family = args.family or FAMILIES[i % len(FAMILIES)]
            instance = generate_instance(args.n, args.pmax, family, args.seed + i)
            ok &= _verify_one(f"#{i} ({family}, seed {args.seed + i})", instance, args)
        checked = args.random
    if ok:
        print(f"ok: {args.alg} matched the reference on {checked} instance(s)")
    return EXIT_OK if ok else EXIT_WRONG


def cmd_gen(args) -> int:
    instance = generate_instance(args.n, args.pmax, args.family, args.seed)
    try:
        write_instance(instance, args.out)
    except OSError as exc:
        raise UsageError(f"cannot write {args.out}: {exc.strerror or exc}") from exc
    return EXIT_OK


def cmd_bench(args) -> int:
    if not 0 < args.dues_exponent <= 1:
        raise UsageError("--dues-exponent must lie in (0, 1]")
    rows = run_bench(
        args.family,
        args.sizes,
        args.algs,
        args.seed,
        delta=args.delta,
        backend=args.backend,
        dues_exponent=args.dues_exponent,
    )
    text = format_csv(rows)
    if args.csv:
        try:
            with open(args.csv, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise UsageError(f"cannot write {args.csv}: {exc.strerror or exc}") from exc
    else:
        sys.stdout.write(text)
    return EXIT_OK


COMMANDS = {"solve": cmd_solve, "verify": cmd_verify, "gen": cmd_gen, "bench": cmd_bench}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UnknownBackendError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvariantViolation as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return EXIT_WRONG


if __name__ == "__main__":
    sys.exit(main())

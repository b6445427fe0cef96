"""Command-line front end: emit closed forms, evaluate them at points,
run the verification sweeps, and print the 2-D pole/zero report.

Exit codes: 0 success, 1 verification failure, 2 usage or configuration
error, 3 evaluation error (singular point, pole).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .errors import (
    DegenerateDenominatorError,
    EvaluationPoleError,
    MapSingularityError,
    ZepsError,
)
from .sdomain import (
    MAX_LAPLACE_DIM,
    TustinParams,
    laplace_determinant,
    pole_zero_report_2d,
)
from .verify import (
    check_determinant_oracle,
    check_epsilon_formulas,
    check_tustin_consistency,
)
from .ztransform import MAX_DIM, MIN_DIM, determinant_ztransform

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_EVALUATION = 3


def _parse_steps(text: str, dim: int) -> TustinParams:
    parts = [p.strip() for p in text.split(",")]
    values = [Fraction(p) for p in parts]
    if len(values) == 1:
        return TustinParams.uniform(dim, values[0])
    return TustinParams(dim, tuple(values))


def _parse_point(text: str, dim: int) -> tuple:
    components = []
    for part in text.split(","):
        part = part.strip()
        try:
            components.append(Fraction(part))
        except ValueError:
            components.append(complex(part))
    if len(components) != dim:
        raise ValueError(f"point needs {dim} components, got {len(components)}")
    if any(isinstance(c, complex) for c in components):
        components = [complex(c) for c in components]
    return tuple(components)


def _print_value(value) -> None:
    if isinstance(value, Fraction):
        print(value)
    else:
        print(complex(value))


def _build_transform(args):
    if args.domain == "z":
        if not MIN_DIM <= args.dim <= MAX_DIM:
            raise ValueError(f"z-domain dimension must lie in [{MIN_DIM}, {MAX_DIM}]")
        return determinant_ztransform(args.dim)
    if not MIN_DIM <= args.dim <= MAX_LAPLACE_DIM:
        raise ValueError(
            f"s-domain dimension must lie in [{MIN_DIM}, {MAX_LAPLACE_DIM}]"
        )
    params = _parse_steps(args.T, args.dim)
    return laplace_determinant(args.dim, params)


def cmd_emit(args) -> int:
    result = _build_transform(args)
    if args.format == "json":
        print(json.dumps(result.to_json_dict(), indent=2))
    elif args.format == "latex":
        print(result.to_latex())
    else:
        print(result.to_text())
    return EXIT_OK


def cmd_eval(args) -> int:
    result = _build_transform(args)
    point = _parse_point(args.point, args.dim)
    _print_value(result.evaluate(point))
    return EXIT_OK


def cmd_verify(args) -> int:
    if not MIN_DIM <= args.dim <= MAX_DIM:
        raise ValueError(f"verify dimension must lie in [{MIN_DIM}, {MAX_DIM}]")
    checks = [
        check_epsilon_formulas(args.dim),
        check_determinant_oracle(args.dim),
    ]
    if args.dim <= MAX_LAPLACE_DIM:
        params = _parse_steps(args.T, args.dim)
        checks.append(
            check_tustin_consistency(
                args.dim, params, samples=args.samples, seed=args.seed, tol=args.tol
            )
        )
    else:
        print(
            f"SKIP: bilinear substitution consistency "
            f"(s-domain supports dim <= {MAX_LAPLACE_DIM})"
        )
    all_passed = True
    for check in checks:
        print(f"{'PASS' if check.passed else 'FAIL'}: {check.name}")
        if not check.passed:
            all_passed = False
            for line in check.details:
                print(f"    {line}", file=sys.stderr)
    return EXIT_OK if all_passed else EXIT_VERIFY_FAILED


def cmd_report(args) -> int:
    if args.dim != 2:
        raise ValueError(
            "pole/zero report is implemented for dim 2 only; for dim >= 3 use "
            "`verify` (sampling-based consistency checks) instead"
        )
    params = _parse_steps(args.T, 2)
    report = pole_zero_report_2d(params)
    if args.format == "json":
        print(json.dumps(report.to_json_dict(), indent=2))
    else:
        print(report.to_text())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zeps",
        description=(
            "Exact Z-domain and Tustin-mapped Laplace-domain closed forms "
            "for the Levi-Civita symbol"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    emit = sub.add_parser("emit", help="print a closed-form transform")
    emit.add_argument("--domain", choices=("z", "s"), required=True)
    emit.add_argument("--dim", type=int, required=True)
    emit.add_argument("--T", default="1", help="step constant(s), e.g. 1 or 1/2,1/4")
    emit.add_argument("--format", choices=("json", "latex", "text"), default="text")
    emit.set_defaults(func=cmd_emit)

    evaluate = sub.add_parser("eval", help="evaluate a transform at a point")
    evaluate.add_argument("--domain", choices=("z", "s"), required=True)
    evaluate.add_argument("--dim", type=int, required=True)
    evaluate.add_argument("--T", default="1")
    evaluate.add_argument(
        "--point",
        required=True,
        help="comma-separated coordinates; rationals like 3/4 stay exact, "
        "complex values use re+imj syntax",
    )
    evaluate.set_defaults(func=cmd_eval)

    verify = sub.add_parser("verify", help="run the oracle cross-checks")
    verify.add_argument("--dim", type=int, required=True)
    verify.add_argument("--T", default="1")
    verify.add_argument("--samples", type=int, default=100)
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--tol", type=float, default=1e-10)
    verify.set_defaults(func=cmd_verify)

    report = sub.add_parser("report", help="2-D pole/zero structure")
    report.add_argument("--dim", type=int, required=True)
    report.add_argument("--T", default="1")
    report.add_argument("--format", choices=("json", "text"), default="text")
    report.set_defaults(func=cmd_report)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "samples", 1) < 1:
        parser.error("--samples must be >= 1")
    if getattr(args, "tol", 1.0) <= 0:
        parser.error("--tol must be > 0")
    try:
        return args.func(args)
    except (EvaluationPoleError, MapSingularityError, DegenerateDenominatorError) as exc:
        print(f"evaluation error: {exc}", file=sys.stderr)
        return EXIT_EVALUATION
    except (ZepsError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

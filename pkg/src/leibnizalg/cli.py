"""Command-line interface.

Exit codes: 0 success, 1 identity violations (or a failed identity
precondition), 2 usage/parse errors, 3 unclassified input or an
unsuccessful Cartan search.  Reports go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .algebra import check_left_leibniz, check_right_leibniz
from .catalog import GENERATOR_NAMES, generate
from .classify import classify
from .engel import CartanSearchError, engel_subalgebra, find_cartan
from .expressions import ParseError, left_norm, parse_expr
from .fileio import (
    AlgebraFileError,
    analysis_report,
    classification_json,
    parse_algebra_file,
    serialize_algebra,
)
from .scalars import RationalFormatError, format_rational, parse_rational

USAGE_ERROR = 2
NOT_FOUND = 3


def _load(path: str):
    try:
        return parse_algebra_file(Path(path).read_bytes())
    except OSError as exc:
        print(f"cannot read {path}: {exc}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)
    except AlgebraFileError as exc:
        print(f"{path}: {exc}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)


def _require_left_identity(alg, path: str):
    violations = check_left_leibniz(alg)
    if violations:
        for v in violations:
            print(
                f"left identity fails at ({', '.join(v.names)}): "
                f"discrepancy = {alg.format_vector(v.discrepancy)}",
                file=sys.stderr,
            )
        raise SystemExit(1)


def _cmd_check(args) -> int:
    alg = _load(args.file)
    checker = check_right_leibniz if args.right else check_left_leibniz
    label = "right" if args.right else "left"
    violations = checker(alg)
    if not violations:
        print(f"{label} identity holds on all basis triples")
        return 0
    for v in violations:
        print(
            f"{label} identity fails at ({', '.join(v.names)}): "
            f"discrepancy = {alg.format_vector(v.discrepancy)}"
        )
    return 1


def _cmd_analyze(args) -> int:
    alg = _load(args.file)
    _require_left_identity(alg, args.file)
    report = analysis_report(alg)
    if args.json:
        print(json.dumps(report, indent=2))
        return 0
    for key, value in report.items():
        print(f"{key}: {json.dumps(value)}")
    return 0


def _cmd_classify(args) -> int:
    alg = _load(args.file)
    _require_left_identity(alg, args.file)
    doc = classification_json(alg)
    print(json.dumps(doc, indent=2))
    return NOT_FOUND if doc["classification"]["family"] == "unclassified" else 0


def _parse_element(text: str, dim: int):
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != dim:
        print(f"element needs {dim} coordinates", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)
    try:
        return tuple(parse_rational(p) for p in parts)
    except RationalFormatError as exc:
        print(str(exc), file=sys.stderr)
        raise SystemExit(USAGE_ERROR)


def _print_subspace(alg, sub):
    if sub.dim == 0:
        print("  (zero subspace)")
    for row in sub.basis_vectors():
        print(f"  {alg.format_vector(row)}")


def _cmd_engel(args) -> int:
    alg = _load(args.file)
    _require_left_identity(alg, args.file)
    element = _parse_element(args.element, alg.dim)
    result = engel_subalgebra(alg, element)
    print(f"engel subalgebra of {alg.format_vector(element)} (dim {result.subalgebra.dim}):")
    _print_subspace(alg, result.subalgebra)
    print(f"element in subalgebra: {str(result.element_in_subalgebra).lower()}")
    return 0


def _cmd_cartan(args) -> int:
    alg = _load(args.file)
    _require_left_identity(alg, args.file)
    try:
        result = find_cartan(alg, seed=args.seed, attempts=args.attempts)
    except CartanSearchError as exc:
        print(str(exc), file=sys.stderr)
        return NOT_FOUND
    print(f"seed: {args.seed}")
    print(f"attempts used: {result.attempts_used}")
    print(f"witness element: {alg.format_vector(result.witness_element)}")
    print(f"cartan subalgebra (dim {result.subalgebra.dim}):")
    _print_subspace(alg, result.subalgebra)
    return 0


def _cmd_gen(args) -> int:
    kwargs = {}
    if args.param is not None:
        try:
            if args.name == "cyclic":
                kwargs["alphas"] = [parse_rational(p) for p in args.param.split(",")]
            elif args.name == "sl2_module":
                kwargs["m"] = int(args.param)
            else:
                kwargs["alpha"] = parse_rational(args.param)
        except (RationalFormatError, ValueError) as exc:
            print(str(exc), file=sys.stderr)
            return USAGE_ERROR
    try:
        alg = generate(args.name, **kwargs)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return USAGE_ERROR
    text = serialize_algebra(alg)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        print(text, end="")
    return 0


def _cmd_leftnorm(args) -> int:
    try:
        expr = parse_expr(args.expr)
    except ParseError as exc:
        print(str(exc), file=sys.stderr)
        return USAGE_ERROR
    print(left_norm(expr).format())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="leibnizalg",
        description="Exact computations with structure-constant Leibniz algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="verify the left (or right) identity")
    p.add_argument("file")
    p.add_argument("--right", action="store_true", help="check the right identity instead")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("analyze", help="series, forms, radical and classification report")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("classify", help="catalog id and fingerprint")
    p.add_argument("file")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("engel", help="generalized null space of a left multiplication")
    p.add_argument("file")
    p.add_argument("--element", required=True, help="comma-separated rational coordinates")
    p.set_defaults(func=_cmd_engel)

    p = sub.add_parser("cartan", help="certified nilpotent self-normalizing subalgebra")
    p.add_argument("file")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--attempts", type=int, default=64)
    p.set_defaults(func=_cmd_cartan)

    p = sub.add_parser("gen", help="write a catalog or example algebra")
    p.add_argument("name", choices=sorted(GENERATOR_NAMES))
    p.add_argument("--param", help="alpha, sl2 weight m, or cyclic coefficient list")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("leftnorm", help="rewrite a bracket expression into left-normed words")
    p.add_argument("expr")
    p.set_defaults(func=_cmd_leftnorm)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR


def main():  # console entry point
    raise SystemExit(run())


if __name__ == "__main__":
    main()

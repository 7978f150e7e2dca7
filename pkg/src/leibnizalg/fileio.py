"""Algebra file format and analysis reports.

Algebra files are UTF-8 JSON: ``{"dim": n, "basis": [names...],
"brackets": [{"left": name, "right": name, "value": {name: "p/q"}}]}``.
Omitted pairs multiply to zero, duplicate (left, right) pairs are
rejected, and rational literals must be in lowest terms with a positive
denominator.  Serialization is canonical (brackets sorted by basis index
pairs, value keys in basis order, zero products omitted), so
serialize(parse(x)) is a fixed point.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .algebra import Algebra, check_left_leibniz, check_right_leibniz, leib_ideal
from .analysis import (
    derived_series,
    lower_central_series,
    nilpotency_class,
    radical,
)
from .classify import CatalogId, classify, fingerprint
from .forms import cartan_solvable, killing
from .scalars import RationalFormatError, format_rational, parse_rational

__all__ = [
    "AlgebraFileError",
    "parse_algebra_file",
    "serialize_algebra",
    "analysis_report",
    "load_fixture",
]


class AlgebraFileError(ValueError):
    """Malformed algebra file (syntax, names, rationals, duplicates)."""


def parse_algebra_file(data: bytes | str) -> Algebra:
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise AlgebraFileError(
            f"syntax error at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    if not isinstance(doc, dict):
        raise AlgebraFileError("top level must be an object")
    for key in ("dim", "basis", "brackets"):
        if key not in doc:
            raise AlgebraFileError(f"missing field {key!r}")
    basis = doc["basis"]
    if not isinstance(basis, list) or not all(isinstance(b, str) for b in basis):
        raise AlgebraFileError("basis must be a list of names")
    if doc["dim"] != len(basis):
        raise AlgebraFileError("dim does not match the number of basis names")
    if len(set(basis)) != len(basis):
        raise AlgebraFileError("duplicate basis names")
    index = {name: i for i, name in enumerate(basis)}
    if not isinstance(doc["brackets"], list):
        raise AlgebraFileError("brackets must be a list")
    seen: set[tuple[str, str]] = set()
    products: dict[tuple[str, str], dict[str, Fraction]] = {}
    for entry in doc["brackets"]:
        if not isinstance(entry, dict) or {"left", "right", "value"} - set(entry):
            raise AlgebraFileError("each bracket needs left, right and value fields")
        left, right, value = entry["left"], entry["right"], entry["value"]
        for name in (left, right):
            if name not in index:
                raise AlgebraFileError(f"unknown basis name: {name!r}")
        if (left, right) in seen:
            raise AlgebraFileError(f"duplicate bracket for ({left}, {right})")
        seen.add((left, right))
        if not isinstance(value, dict):
            raise AlgebraFileError("bracket value must be an object")
        resolved: dict[str, Fraction] = {}
        for name, literal in value.items():
            if name not in index:
                raise AlgebraFileError(f"unknown basis name: {name!r}")
            try:
                coeff = parse_rational(literal)
            except RationalFormatError as exc:
                raise AlgebraFileError(str(exc)) from exc
            if coeff != 0:
                resolved[name] = coeff
        products[(left, right)] = resolved
    try:
        return Algebra.from_products(basis, products)
    except ValueError as exc:
        raise AlgebraFileError(str(exc)) from exc


def serialize_algebra(alg: Algebra) -> str:
    brackets = []
    for i in range(alg.dim):
        for j in range(alg.dim):
            value = {
                alg.basis_names[k]: format_rational(c)
                for k, c in enumerate(alg.constants[i][j])
                if c != 0
            }
            if value:
                brackets.append(
                    {
                        "left": alg.basis_names[i],
                        "right": alg.basis_names[j],
                        "value": value,
                    }
                )
    doc = {"dim": alg.dim, "basis": list(alg.basis_names), "brackets": brackets}
    return json.dumps(doc, indent=2) + "\n"


def analysis_report(alg: Algebra) -> dict:
    """Full report; the caller must have run the left-identity check."""
    leib = leib_ideal(alg)
    derived = derived_series(alg)
    lcs = lower_central_series(alg)
    solvable = derived.terminal_is_zero
    solvable_by_trace = cartan_solvable(alg)
    if solvable != solvable_by_trace:
        raise RuntimeError(
            "internal error: series solvability disagrees with the trace criterion"
        )
    cls = nilpotency_class(alg)
    kill = killing(alg)
    rad = radical(alg)
    classification = classify(alg)
    report = {
        "is_left_leibniz": not check_left_leibniz(alg),
        "is_right_leibniz": not check_right_leibniz(alg),
        "is_lie": leib.dim == 0,
        "leib_dim": leib.dim,
        "derived_dims": list(derived.dims),
        "lcs_dims": list(lcs.dims),
        "solvable": solvable,
        "solvable_cartan": solvable_by_trace,
        "nilpotent": cls is not None,
        "class": cls,
        "killing_gram": [
            [format_rational(x) for x in row] for row in kill.gram.entries
        ],
        "killing_radical_dim": kill.radical.dim,
        "killing_nondegenerate": kill.nondegenerate,
        "semisimple": rad.semisimple,
        "radical_dim": rad.radical.dim,
        "classification": classification.to_json(),
    }
    _check_report_invariants(report)
    return report


def _check_report_invariants(report: dict):
    if report["nilpotent"] and not report["solvable"]:
        raise RuntimeError("internal error: nilpotent report without solvable")
    if report["semisimple"] and not report["killing_nondegenerate"]:
        raise RuntimeError("internal error: semisimple report with degenerate form")


def load_fixture(stem: str) -> Algebra:
    """Parse a fixture shipped as package data (the I/O path, not a table)."""
    from importlib.resources import files

    payload = files("leibnizalg").joinpath(f"data/fixtures/{stem}.json").read_bytes()
    return parse_algebra_file(payload)


def fingerprint_json(alg: Algebra) -> dict:
    return fingerprint(alg).to_json()


def classification_json(alg: Algebra) -> dict:
    result = classify(alg)
    return {"classification": result.to_json(), "fingerprint": fingerprint_json(alg)}

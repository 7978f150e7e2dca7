"""Generators for the classification catalog and the worked examples.

Every generated algebra is checked against the left identity before being
returned; a table that fails the check is a bug, not a value.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from .algebra import Algebra, bracket, check_left_leibniz
from .linalg import Matrix
from .scalars import as_fraction

__all__ = [
    "generate",
    "cyclic_algebra",
    "sl2_module_algebra",
    "from_associative",
    "CATALOG_FAMILIES",
    "EXAMPLE_NAMES",
    "GENERATOR_NAMES",
]

CATALOG_FAMILIES = (
    "dim2_nilpotent_cyclic",
    "dim2_solvable_cyclic",
    "n3_1",
    "n3_2",
    "n3_3",
    "n3_4",
    "n3_5",
    "s3_1",
    "s3_2",
    "s3_3",
    "s3_4",
    "s3_5",
    "s3_6",
    "s3_7",
)

EXAMPLE_NAMES = (
    "example_2_1",
    "example_2_2",
    "example_2_4",
    "example_2_5",
    "example_5_6",
    "example_5_8",
)

GENERATOR_NAMES = CATALOG_FAMILIES + EXAMPLE_NAMES + ("cyclic", "sl2_module")

_PARAMETRIC = {"n3_5", "s3_2", "s3_5"}


def _build(names: Sequence[str], products: Mapping[tuple[str, str], Mapping[str, object]]) -> Algebra:
    alg = Algebra.from_products(names, products)
    violations = check_left_leibniz(alg)
    if violations:
        raise AssertionError(
            f"generated table violates the left identity at {violations[0].names}"
        )
    return alg


def cyclic_algebra(alphas: Sequence) -> Algebra:
    """Algebra generated by one element a with basis a, a2, ..., an.

    ``alphas`` are the coefficients of [a, an] on a2..an (the coefficient
    on a itself is forced to zero); n = len(alphas) + 1 >= 2.
    """
    coeffs = [as_fraction(x) for x in alphas]
    n = len(coeffs) + 1
    if n < 2:
        raise ValueError("cyclic algebra needs dimension at least 2")
    names = ["a"] + [f"a{k}" for k in range(2, n + 1)]
    products: dict[tuple[str, str], dict[str, Fraction]] = {}
    for k in range(1, n):
        products[("a", names[k - 1])] = {names[k]: Fraction(1)}
    top = {names[k]: coeffs[k - 1] for k in range(1, n) if coeffs[k - 1] != 0}
    products[("a", names[n - 1])] = top
    return _build(names, products)


def sl2_module_algebra(m: int, module_names: Sequence[str] | None = None) -> Algebra:
    """sl2 acting on its (m+1)-dimensional irreducible module from the left.

    Action: h.v_i = (m-2i) v_i, f.v_i = v_{i+1}, e.v_i = i(m+1-i) v_{i-1};
    the module multiplies to zero from the left and from the right against
    the whole algebra except through this action.
    """
    if m < 1:
        raise ValueError("module highest weight m must be at least 1")
    if module_names is None:
        module_names = [f"v{i}" for i in range(m + 1)]
    if len(module_names) != m + 1:
        raise ValueError("need m + 1 module basis names")
    names = ["h", "e", "f", *module_names]
    products: dict[tuple[str, str], dict[str, object]] = {
        ("h", "e"): {"e": 2},
        ("e", "h"): {"e": -2},
        ("h", "f"): {"f": -2},
        ("f", "h"): {"f": 2},
        ("e", "f"): {"h": 1},
        ("f", "e"): {"h": -1},
    }
    for i, v in enumerate(module_names):
        weight = m - 2 * i
        if weight:
            products[("h", v)] = {v: weight}
        if i < m:
            products[("f", v)] = {module_names[i + 1]: 1}
        if i > 0:
            products[("e", v)] = {module_names[i - 1]: i * (m + 1 - i)}
    return _build(names, products)


def from_associative(
    names: Sequence[str],
    multiplication: Mapping[tuple[str, str], Mapping[str, object]],
    idempotent: Matrix,
) -> Algebra:
    """Bracket [a, b] = (Ta)b - b(Ta) on an associative algebra.

    T must be idempotent, and the resulting table must satisfy the left
    identity (which needs T[(Ta)b - b(Ta)] = (Ta)(Tb) - (Tb)(Ta); this is
    checked on the constructed table, not assumed).
    """
    assoc = Algebra.from_products(names, multiplication)
    if idempotent @ idempotent != idempotent:
        raise ValueError("the operator T must be idempotent")
    n = assoc.dim
    tensor = []
    for i in range(n):
        t_ei = idempotent.apply(assoc.basis_vector(i))
        row = []
        for j in range(n):
            ej = assoc.basis_vector(j)
            left = bracket(assoc, t_ei, ej)
            right = bracket(assoc, ej, t_ei)
            row.append(tuple(x - y for x, y in zip(left, right)))
        tensor.append(tuple(row))
    alg = Algebra(tuple(names), tuple(tensor))
    violations = check_left_leibniz(alg)
    if violations:
        raise ValueError(
            "this associative algebra / idempotent pair does not induce a "
            f"left Leibniz bracket (first failure at {violations[0].names})"
        )
    return alg


def _matrix2_fixture() -> Algebra:
    """2x2 matrices with T = diagonal projection; bracket [x,y] = [Tx, y]."""
    names = ("e11", "e12", "e21", "e22")
    unit = {
        ("e11", "e11"): {"e11": 1},
        ("e11", "e12"): {"e12": 1},
        ("e12", "e21"): {"e11": 1},
        ("e12", "e22"): {"e12": 1},
        ("e21", "e11"): {"e21": 1},
        ("e21", "e12"): {"e22": 1},
        ("e22", "e21"): {"e21": 1},
        ("e22", "e22"): {"e22": 1},
    }
    diag_projection = Matrix.from_rows(
        [[1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 1]]
    )
    return from_associative(names, unit, diag_projection)


def _require_alpha(alpha, family: str, forbidden: tuple[int, ...]) -> Fraction:
    if alpha is None:
        raise ValueError(f"{family} requires a parameter alpha")
    value = as_fraction(alpha)
    if value in [Fraction(x) for x in forbidden]:
        raise ValueError(f"illegal parameter alpha={value} for {family}")
    return value


def generate(name: str, alpha=None, alphas: Sequence | None = None, m: int | None = None) -> Algebra:
    """Emit the table for a catalog family or a worked example, verified.

    Parametric families: n3_5 (alpha not in {0, 1, -1}), s3_2 and s3_5
    (alpha nonzero).  ``cyclic`` takes ``alphas``; ``sl2_module`` takes
    ``m``.
    """
    if name == "dim2_nilpotent_cyclic":
        return cyclic_algebra([0])
    if name == "dim2_solvable_cyclic":
        return cyclic_algebra([1])
    if name == "n3_1":
        return _build(("x", "y", "z"), {("x", "x"): {"y": 1}, ("x", "y"): {"z": 1}})
    if name == "n3_2":
        return _build(("x", "y", "z"), {("x", "x"): {"z": 1}})
    if name == "n3_3":
        return _build(("x", "y", "z"), {("x", "y"): {"z": 1}, ("y", "x"): {"z": 1}})
    if name == "n3_4":
        return _build(
            ("x", "y", "z"),
            {("x", "y"): {"z": 1}, ("y", "x"): {"z": -1}, ("y", "y"): {"z": 1}},
        )
    if name == "n3_5":
        value = _require_alpha(alpha, "n3_5", (0, 1, -1))
        return _build(
            ("x", "y", "z"), {("x", "y"): {"z": 1}, ("y", "x"): {"z": value}}
        )
    if name == "s3_1":
        return _build(("x", "y", "z"), {("z", "x"): {"x": 1}})
    if name == "s3_2":
        value = _require_alpha(alpha, "s3_2", (0,))
        return _build(
            ("x", "y", "z"),
            {("z", "x"): {"x": value}, ("z", "y"): {"y": 1}, ("y", "z"): {"y": -1}},
        )
    if name == "s3_3":
        return _build(
            ("x", "y", "z"),
            {("z", "y"): {"y": 1}, ("y", "z"): {"y": -1}, ("z", "z"): {"x": 1}},
        )
    if name == "s3_4":
        return _build(
            ("x", "y", "z"),
            {
                ("z", "x"): {"x": 2},
                ("y", "y"): {"x": 1},
                ("z", "y"): {"y": 1},
                ("y", "z"): {"y": -1},
                ("z", "z"): {"x": 1},
            },
        )
    if name == "s3_5":
        value = _require_alpha(alpha, "s3_5", (0,))
        return _build(
            ("x", "y", "z"), {("z", "y"): {"y": 1}, ("z", "x"): {"x": value}}
        )
    if name == "s3_6":
        return _build(
            ("x", "y", "z"), {("z", "x"): {"x": 1, "y": 1}, ("z", "y"): {"y": 1}}
        )
    if name == "s3_7":
        return _build(
            ("x", "y", "z"),
            {("z", "x"): {"y": 1}, ("z", "y"): {"y": 1}, ("z", "z"): {"x": 1}},
        )
    if name in ("example_2_1", "example_5_8"):
        return _build(("x", "y"), {("y", "x"): {"x": 1}, ("y", "y"): {"x": 1}})
    if name == "example_2_2":
        return _matrix2_fixture()
    if name == "example_2_4":
        return _build(
            ("x", "a", "b", "c", "d"),
            {
                ("a", "b"): {"c": 1},
                ("b", "a"): {"d": 1},
                ("x", "a"): {"a": 1},
                ("a", "x"): {"a": -1},
                ("x", "c"): {"c": 1},
                ("x", "d"): {"d": 1},
                ("c", "x"): {"d": 1},
                ("d", "x"): {"d": -1},
            },
        )
    if name == "example_2_5":
        # w is the square of n; the cube of n vanishes.
        return _build(
            ("u", "n", "k", "w"),
            {
                ("u", "n"): {"u": 1},
                ("n", "u"): {"u": -1, "k": 1},
                ("u", "w"): {"k": 1},
                ("n", "k"): {"k": -1},
                ("n", "n"): {"w": 1},
            },
        )
    if name == "example_5_6":
        return sl2_module_algebra(1, module_names=("x0", "x1"))
    if name == "cyclic":
        if alphas is None:
            raise ValueError("cyclic requires the coefficient list alphas")
        return cyclic_algebra(alphas)
    if name == "sl2_module":
        if m is None:
            raise ValueError("sl2_module requires the highest weight m")
        return sl2_module_algebra(m)
    raise ValueError(f"unknown generator name: {name!r}")


def family_takes_parameter(family: str) -> bool:
    return family in _PARAMETRIC


_ALPHA_GRID = (Fraction(2), Fraction(3), Fraction(-2), Fraction(1, 2))


def _alpha_stem(alpha: Fraction) -> str:
    text = f"{alpha.numerator}" + ("" if alpha.denominator == 1 else f"_{alpha.denominator}")
    return text.replace("-", "m")


def _fixture_table() -> dict[str, dict]:
    table: dict[str, dict] = {}
    for name in EXAMPLE_NAMES:
        table[name] = {"name": name}
    for family in CATALOG_FAMILIES:
        if family in _PARAMETRIC:
            for alpha in _ALPHA_GRID:
                table[f"{family}_alpha_{_alpha_stem(alpha)}"] = {
                    "name": family,
                    "alpha": alpha,
                }
        else:
            table[family] = {"name": family}
    table["cyclic_4_nilpotent"] = {"name": "cyclic", "alphas": (0, 0, 0)}
    table["cyclic_3_solvable"] = {"name": "cyclic", "alphas": (0, 1)}
    table["sl2_module_2"] = {"name": "sl2_module", "m": 2}
    return table


FIXTURES: dict[str, dict] = _fixture_table()


def fixture_algebra(stem: str) -> Algebra:
    spec = dict(FIXTURES[stem])
    return generate(spec.pop("name"), **spec)

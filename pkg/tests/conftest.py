"""Shared fixtures and helpers for the test suite."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from leibnizalg import Algebra
from leibnizalg.catalog import FIXTURES
from leibnizalg.fileio import load_fixture
from leibnizalg.linalg import Matrix

ALL_STEMS = tuple(sorted(FIXTURES))

ALPHA_GRID = (Fraction(2), Fraction(3), Fraction(-2), Fraction(1, 2))

GRID_IDS = (
    [("dim2_nilpotent_cyclic", None), ("dim2_solvable_cyclic", None)]
    + [(f"n3_{k}", None) for k in range(1, 5)]
    + [("n3_5", a) for a in ALPHA_GRID]
    + [("s3_1", None)]
    + [("s3_2", a) for a in ALPHA_GRID]
    + [("s3_3", None), ("s3_4", None)]
    + [("s3_5", a) for a in ALPHA_GRID]
    + [("s3_6", None), ("s3_7", None)]
)

NILPOTENT_STEMS = (
    "dim2_nilpotent_cyclic",
    "n3_1",
    "n3_2",
    "n3_3",
    "n3_4",
    "n3_5_alpha_2",
    "n3_5_alpha_3",
    "n3_5_alpha_m2",
    "n3_5_alpha_1_2",
    "cyclic_4_nilpotent",
)


@pytest.fixture(scope="session")
def fixtures() -> dict[str, Algebra]:
    """Every shipped fixture, parsed from its data file."""
    return {stem: load_fixture(stem) for stem in ALL_STEMS}


def random_invertible(rng: random.Random, n: int, bound: int = 2) -> Matrix:
    while True:
        m = Matrix.from_rows(
            [[Fraction(rng.randint(-bound, bound)) for _ in range(n)] for _ in range(n)]
        )
        if m.det() != 0:
            return m


def random_vector(rng: random.Random, n: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(n))


def heisenberg() -> Algebra:
    return Algebra.from_products(
        ("x", "y", "z"), {("x", "y"): {"z": 1}, ("y", "x"): {"z": -1}}
    )


def sl2() -> Algebra:
    return Algebra.from_products(
        ("h", "e", "f"),
        {
            ("h", "e"): {"e": 2},
            ("e", "h"): {"e": -2},
            ("h", "f"): {"f": -2},
            ("f", "h"): {"f": 2},
            ("e", "f"): {"h": 1},
            ("f", "e"): {"h": -1},
        },
    )

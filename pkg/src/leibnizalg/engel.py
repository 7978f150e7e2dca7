"""Engel subalgebras, Cartan subalgebra search, invertible graded derivations.

The Cartan search is certification-first: a candidate is returned only
after its nilpotency and self-normalization have been verified, so the
guarantee is the defining property, not global minimality of the Engel
subalgebra that produced it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import (
    Algebra,
    derivation_check,
    left_mult,
    normalizers,
    restrict,
    subspace_status,
)
from .analysis import is_nilpotent, lower_central_series, nilpotency_class
from .linalg import Matrix, Subspace, fitting_null

__all__ = [
    "EngelResult",
    "engel_subalgebra",
    "CartanResult",
    "CartanSearchError",
    "find_cartan",
    "LeibnizDerivation",
    "DerivationSearchError",
    "nilpotent_derivation",
]


@dataclass(frozen=True)
class EngelResult:
    element: tuple[Fraction, ...]
    subalgebra: Subspace
    element_in_subalgebra: bool


def engel_subalgebra(alg: Algebra, a: Sequence) -> EngelResult:
    """Generalized null space of L_a; the defining element may fall outside."""
    sub = fitting_null(left_mult(alg, a), alg.dim)
    if not subspace_status(alg, sub).is_subalgebra:
        raise RuntimeError(
            "generalized null space failed the subalgebra check; "
            "the input does not satisfy the left identity"
        )
    element = tuple(Fraction(x) for x in a)
    return EngelResult(element, sub, sub.contains_vector(element))


@dataclass(frozen=True)
class CartanResult:
    subalgebra: Subspace
    witness_element: tuple[Fraction, ...]
    attempts_used: int


class CartanSearchError(RuntimeError):
    """No candidate passed certification within the attempt budget."""


def _is_cartan(alg: Algebra, sub: Subspace) -> bool:
    if not subspace_status(alg, sub).is_subalgebra:
        return False
    if not is_nilpotent(restrict(alg, sub)):
        return False
    return normalizers(alg, sub).both == sub


def find_cartan(alg: Algebra, seed: int = 0, attempts: int = 64) -> CartanResult:
    """Search for a nilpotent self-normalizing subalgebra.

    Candidates are the Engel subalgebras of each basis vector followed by
    ``attempts`` seeded random rational combinations (coordinates from
    -3..3 over denominators 1..2); the smallest candidates are certified
    first and the first certified one wins.
    """
    if attempts < 1:
        raise ValueError("attempts must be at least 1")
    if alg.dim == 0:
        return CartanResult(Subspace.zero(0), (), 0)
    rng = random.Random(seed)
    candidates: list[tuple[Fraction, ...]] = [
        alg.basis_vector(i) for i in range(alg.dim)
    ]
    for _ in range(attempts):
        vec = tuple(
            Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(alg.dim)
        )
        if any(x != 0 for x in vec):
            candidates.append(vec)
    evaluated = [
        (engel_subalgebra(alg, c).subalgebra, order, c)
        for order, c in enumerate(candidates)
    ]
    evaluated.sort(key=lambda item: (item[0].dim, item[1]))
    for used, (sub, _, element) in enumerate(evaluated, start=1):
        if _is_cartan(alg, sub):
            return CartanResult(sub, element, used)
    raise CartanSearchError(
        f"no Cartan subalgebra found within {len(candidates)} candidates (seed {seed})"
    )


@dataclass(frozen=True)
class LeibnizDerivation:
    matrix: Matrix
    order: int


class DerivationSearchError(RuntimeError):
    """The graded-scalar candidate failed verification for this algebra."""


def nilpotent_derivation(alg: Algebra) -> LeibnizDerivation:
    """Invertible derivation of order floor(c/2)+1 for a nilpotent algebra.

    The candidate acts as the scalar i on a complement of the (i+1)-st
    lower-central term inside the i-th one, complements being the RREF
    rows whose pivots the deeper term does not use.  The candidate is
    verified (invertibility plus the order-s law) before being returned;
    an unverifiable candidate raises instead of being asserted.
    """
    cls = nilpotency_class(alg)
    if cls is None:
        raise ValueError("nilpotent_derivation requires a nilpotent algebra")
    if alg.dim == 0:
        return LeibnizDerivation(Matrix(()), 1)
    series = lower_central_series(alg).terms
    terms = list(series) + [Subspace.zero(alg.dim)] * (cls + 1 - len(series))
    columns: list[tuple[Fraction, ...]] = []
    scalars: list[Fraction] = []
    for depth in range(1, cls + 1):
        outer, inner = terms[depth - 1], terms[depth]
        inner_pivots = set(inner.pivots())
        for pivot, row in zip(outer.pivots(), outer.basis_vectors()):
            if pivot not in inner_pivots:
                columns.append(row)
                scalars.append(Fraction(depth))
    basis = Matrix.from_rows(
        [[columns[c][r] for c in range(len(columns))] for r in range(alg.dim)]
    )
    diag = Matrix.from_rows(
        [
            [scalars[i] if i == j else Fraction(0) for j in range(len(scalars))]
            for i in range(len(scalars))
        ]
    )
    candidate = basis @ diag @ basis.inverse()
    order = cls // 2 + 1
    violations = derivation_check(alg, candidate, max(order, 2))
    if violations:
        raise DerivationSearchError(
            f"graded-scalar candidate failed the order-{order} law at "
            f"{violations[0].names}"
        )
    if candidate.det() == 0:  # scalars are 1..c, so this cannot happen
        raise DerivationSearchError("graded-scalar candidate is singular")
    return LeibnizDerivation(candidate, order)

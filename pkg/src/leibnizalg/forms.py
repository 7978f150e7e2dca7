"""Killing form, its radical, and the trace-form solvability criterion.

All traces are exact rationals; there is no tolerance anywhere in this
module.  "Nondegenerate" means the form's radical equals the squares
ideal (not that the Gram matrix is invertible): the squares ideal always
lies inside the radical of the form.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Algebra, leib_ideal, left_mult, product_subspaces
from .linalg import Matrix, Subspace, kernel

__all__ = ["KillingData", "killing", "cartan_solvable"]


@dataclass(frozen=True)
class KillingData:
    gram: Matrix
    radical: Subspace
    nondegenerate: bool


def killing(alg: Algebra) -> KillingData:
    """Gram matrix of (a, b) -> trace(L_a L_b) plus its radical."""
    mults = [left_mult(alg, alg.basis_vector(i)) for i in range(alg.dim)]
    gram = Matrix.from_rows(
        [
            [(mults[i] @ mults[j]).trace() for j in range(alg.dim)]
            for i in range(alg.dim)
        ]
    )
    rad = kernel(gram) if alg.dim else Subspace.zero(0)
    return KillingData(gram, rad, rad == leib_ideal(alg))


def cartan_solvable(alg: Algebra) -> bool:
    """True iff trace(L_u L_b) = 0 for all u in [A,A] and all basis b."""
    derived = product_subspaces(alg, alg.full_space(), alg.full_space())
    basis_mults = [left_mult(alg, alg.basis_vector(j)) for j in range(alg.dim)]
    for u in derived.basis_vectors():
        mult_u = left_mult(alg, u)
        for mult_b in basis_mults:
            if (mult_u @ mult_b).trace() != 0:
                return False
    return True

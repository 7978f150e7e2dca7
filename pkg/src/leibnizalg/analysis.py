"""Derived and lower central series, solvability, nilpotency, radical.

All operations assume the algebra already passed the left-identity check;
they do not re-verify it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Algebra, leib_ideal, left_mult, product_subspaces, quotient
from .linalg import Matrix, Subspace, kernel, preimage

__all__ = [
    "SeriesReport",
    "derived_series",
    "lower_central_series",
    "is_solvable",
    "is_nilpotent",
    "nilpotency_class",
    "RadicalReport",
    "radical",
    "is_semisimple",
]


@dataclass(frozen=True)
class SeriesReport:
    """Distinct terms of a descending series, first term the full space.

    ``stabilized`` is True when the series stopped at a nonzero fixed point
    (so it never reaches zero)."""

    kind: str
    terms: tuple[Subspace, ...]
    stabilized: bool

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(t.dim for t in self.terms)

    @property
    def terminal_is_zero(self) -> bool:
        return self.terms[-1].dim == 0


def _run_series(alg: Algebra, kind: str) -> SeriesReport:
    current = alg.full_space()
    terms = [current]
    for _ in range(alg.dim + 1):
        if kind == "derived":
            nxt = product_subspaces(alg, current, current)
        else:
            nxt = product_subspaces(alg, alg.full_space(), current)
        if nxt == current:
            break
        terms.append(nxt)
        current = nxt
        if current.dim == 0:
            break
    return SeriesReport(kind, tuple(terms), stabilized=terms[-1].dim != 0)


def derived_series(alg: Algebra) -> SeriesReport:
    """A, [A,A], [[A,A],[A,A]], ... until zero or a fixed point."""
    return _run_series(alg, "derived")


def lower_central_series(alg: Algebra) -> SeriesReport:
    """A, [A,A], [A,[A,A]], ... until zero or a fixed point."""
    return _run_series(alg, "lower_central")


def is_solvable(alg: Algebra) -> bool:
    return derived_series(alg).terminal_is_zero


def is_nilpotent(alg: Algebra) -> bool:
    return lower_central_series(alg).terminal_is_zero


def nilpotency_class(alg: Algebra) -> int | None:
    """c with (c+1)-fold products zero but some c-fold product nonzero."""
    series = lower_central_series(alg)
    if not series.terminal_is_zero:
        return None
    return len(series.terms) - 1


@dataclass(frozen=True)
class RadicalReport:
    radical: Subspace
    leib: Subspace
    semisimple: bool


def radical(alg: Algebra) -> RadicalReport:
    """Largest solvable ideal, via the Lie quotient by the squares ideal.

    The squares ideal is solvable, so the radical is exactly the preimage
    of the quotient Lie algebra's radical, which in characteristic zero is
    the trace-form orthogonal of the quotient's derived subalgebra.
    """
    leib = leib_ideal(alg)
    if leib.dim == alg.dim:
        return RadicalReport(alg.full_space(), leib, False)
    lie, projection = quotient(alg, leib)
    rad_q = _lie_radical(lie)
    rad = preimage(projection, rad_q)
    return RadicalReport(rad, leib, rad == leib)


def _lie_radical(lie: Algebra) -> Subspace:
    n = lie.dim
    if n == 0:
        return Subspace.zero(0)
    mults = [left_mult(lie, lie.basis_vector(i)) for i in range(n)]
    gram = Matrix.from_rows(
        [[(mults[i] @ mults[j]).trace() for j in range(n)] for i in range(n)]
    )
    derived = product_subspaces(lie, lie.full_space(), lie.full_space())
    if derived.dim == 0:
        return lie.full_space()
    constraint_rows = [gram.apply(d) for d in derived.basis_vectors()]
    return kernel(Matrix.from_rows(constraint_rows))


def is_semisimple(alg: Algebra) -> bool:
    """Radical equals the squares ideal."""
    return radical(alg).semisimple

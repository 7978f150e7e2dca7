"""Structure-constant algebras with a bilinear bracket.

An algebra is a dimension, a tuple of basis names and a constants tensor
``c[i][j][k]`` meaning ``[e_i, e_j] = sum_k c[i][j][k] e_k``.  Nothing about
the bracket (Leibniz identity, antisymmetry, ...) is assumed at
construction; the checkers here are the gate.  All values are immutable
and every operation is a pure function.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple, Sequence

from .linalg import Matrix, Subspace, kernel
from .scalars import as_fraction

__all__ = [
    "Algebra",
    "Violation",
    "RepresentationPair",
    "RepresentationViolation",
    "bracket",
    "left_mult",
    "right_mult",
    "check_left_leibniz",
    "check_right_leibniz",
    "leib_ideal",
    "centers",
    "subspace_status",
    "product_subspaces",
    "normalizers",
    "closures",
    "quotient",
    "change_basis",
    "restrict",
    "check_representation",
    "derivation_check",
]

Vec = tuple[Fraction, ...]

_NAME_RE = re.compile(r"^[a-z][a-z0-9]*$")


@dataclass(frozen=True)
class Algebra:
    """Finite-dimensional algebra given by structure constants over Q."""

    basis_names: tuple[str, ...]
    constants: tuple[tuple[Vec, ...], ...]

    def __post_init__(self):
        n = len(self.basis_names)
        if len(set(self.basis_names)) != n:
            raise ValueError("basis names must be pairwise distinct")
        for name in self.basis_names:
            if not _NAME_RE.match(name):
                raise ValueError(f"invalid basis name: {name!r}")
        if len(self.constants) != n or any(
            len(row) != n or any(len(v) != n for v in row) for row in self.constants
        ):
            raise ValueError("constants tensor must have shape dim x dim x dim")

    @property
    def dim(self) -> int:
        return len(self.basis_names)

    @staticmethod
    def from_products(
        basis_names: Sequence[str],
        products: Mapping[tuple[str, str], Mapping[str, object]],
    ) -> "Algebra":
        """Build from sparse products: {(left, right): {target: coefficient}}."""
        names = tuple(basis_names)
        index = {name: i for i, name in enumerate(names)}
        n = len(names)
        tensor = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
        for (left, right), value in products.items():
            i, j = index[left], index[right]
            for target, coeff in value.items():
                tensor[i][j][index[target]] += as_fraction(coeff)
        return Algebra(
            names, tuple(tuple(tuple(v) for v in row) for row in tensor)
        )

    def index_of(self, name: str) -> int:
        return self.basis_names.index(name)

    def basis_vector(self, name_or_index) -> Vec:
        i = name_or_index if isinstance(name_or_index, int) else self.index_of(name_or_index)
        return tuple(Fraction(1 if j == i else 0) for j in range(self.dim))

    def element(self, coeffs: Mapping[str, object]) -> Vec:
        """Linear combination of named basis vectors."""
        out = [Fraction(0)] * self.dim
        for name, c in coeffs.items():
            out[self.index_of(name)] += as_fraction(c)
        return tuple(out)

    def zero(self) -> Vec:
        return tuple(Fraction(0) for _ in range(self.dim))

    def full_space(self) -> Subspace:
        return Subspace.full(self.dim)

    def format_vector(self, v: Sequence) -> str:
        """Render a coordinate vector as a combination of basis names."""
        parts = []
        for c, name in zip(v, self.basis_names):
            c = as_fraction(c)
            if c == 0:
                continue
            if c == 1:
                parts.append(f"+ {name}" if parts else name)
            elif c == -1:
                parts.append(f"- {name}" if parts else f"-{name}")
            else:
                mag = c if c > 0 or not parts else -c
                sign = "" if not parts else ("+ " if c > 0 else "- ")
                parts.append(f"{sign}{mag}*{name}")
        return " ".join(parts) if parts else "0"


def _coerce(alg: Algebra, v: Sequence) -> Vec:
    vv = tuple(as_fraction(x) for x in v)
    if len(vv) != alg.dim:
        raise ValueError("vector length does not match algebra dimension")
    return vv


def bracket(alg: Algebra, a: Sequence, b: Sequence) -> Vec:
    """Bilinear extension of the structure constants: [a, b]."""
    aa, bb = _coerce(alg, a), _coerce(alg, b)
    out = [Fraction(0)] * alg.dim
    for i, ai in enumerate(aa):
        if ai == 0:
            continue
        for j, bj in enumerate(bb):
            if bj == 0:
                continue
            coeff = ai * bj
            for k, c in enumerate(alg.constants[i][j]):
                if c != 0:
                    out[k] += coeff * c
    return tuple(out)


def left_mult(alg: Algebra, a: Sequence) -> Matrix:
    """Matrix of b -> [a, b]; column j is the image of e_j."""
    aa = _coerce(alg, a)
    cols = []
    for j in range(alg.dim):
        col = [Fraction(0)] * alg.dim
        for i, ai in enumerate(aa):
            if ai == 0:
                continue
            for k, c in enumerate(alg.constants[i][j]):
                col[k] += ai * c
        cols.append(col)
    return Matrix.from_rows([[cols[j][k] for j in range(alg.dim)] for k in range(alg.dim)])


def right_mult(alg: Algebra, a: Sequence) -> Matrix:
    """Matrix of b -> [b, a]; column j is the image of e_j."""
    aa = _coerce(alg, a)
    cols = []
    for j in range(alg.dim):
        col = [Fraction(0)] * alg.dim
        for m, am in enumerate(aa):
            if am == 0:
                continue
            for k, c in enumerate(alg.constants[j][m]):
                col[k] += am * c
        cols.append(col)
    return Matrix.from_rows([[cols[j][k] for j in range(alg.dim)] for k in range(alg.dim)])


@dataclass(frozen=True)
class Violation:
    """A basis triple where an identity fails, with discrepancy = RHS - LHS."""

    indices: tuple[int, int, int]
    names: tuple[str, str, str]
    discrepancy: Vec


def _vec_sub(a: Vec, b: Vec) -> Vec:
    return tuple(x - y for x, y in zip(a, b))


def _vec_add(a: Vec, b: Vec) -> Vec:
    return tuple(x + y for x, y in zip(a, b))


def check_left_leibniz(alg: Algebra) -> list[Violation]:
    """Violations of [a,[b,c]] = [[a,b],c] + [b,[a,c]] over basis triples.

    Trilinearity makes basis triples a complete check.  Violations are
    listed in lexicographic index order.
    """
    out = []
    for i in range(alg.dim):
        ei = alg.basis_vector(i)
        for j in range(alg.dim):
            ej = alg.basis_vector(j)
            for k in range(alg.dim):
                lhs = bracket(alg, ei, alg.constants[j][k])
                rhs = _vec_add(
                    bracket(alg, alg.constants[i][j], alg.basis_vector(k)),
                    bracket(alg, ej, alg.constants[i][k]),
                )
                diff = _vec_sub(rhs, lhs)
                if any(x != 0 for x in diff):
                    out.append(
                        Violation(
                            (i, j, k),
                            (alg.basis_names[i], alg.basis_names[j], alg.basis_names[k]),
                            diff,
                        )
                    )
    return out


def check_right_leibniz(alg: Algebra) -> list[Violation]:
    """Violations of [[a,b],c] = [[a,c],b] + [a,[b,c]] over basis triples."""
    out = []
    for i in range(alg.dim):
        ei = alg.basis_vector(i)
        for j in range(alg.dim):
            for k in range(alg.dim):
                lhs = bracket(alg, alg.constants[i][j], alg.basis_vector(k))
                rhs = _vec_add(
                    bracket(alg, alg.constants[i][k], alg.basis_vector(j)),
                    bracket(alg, ei, alg.constants[j][k]),
                )
                diff = _vec_sub(rhs, lhs)
                if any(x != 0 for x in diff):
                    out.append(
                        Violation(
                            (i, j, k),
                            (alg.basis_names[i], alg.basis_names[j], alg.basis_names[k]),
                            diff,
                        )
                    )
    return out


def leib_ideal(alg: Algebra) -> Subspace:
    """Span of all squares [a, a], computed by polarization over the basis."""
    vectors = [alg.constants[i][i] for i in range(alg.dim)]
    for i in range(alg.dim):
        for j in range(i + 1, alg.dim):
            vectors.append(_vec_add(alg.constants[i][j], alg.constants[j][i]))
    return Subspace.from_vectors(alg.dim, vectors)


class Centers(NamedTuple):
    left: Subspace
    right: Subspace
    center: Subspace


def centers(alg: Algebra) -> Centers:
    """Left center {x : [x,a]=0}, right center {x : [a,x]=0}, intersection."""
    right_mults = [right_mult(alg, alg.basis_vector(i)) for i in range(alg.dim)]
    left_mults = [left_mult(alg, alg.basis_vector(i)) for i in range(alg.dim)]
    left_center = kernel(Matrix(tuple(r for m in right_mults for r in m.entries)))
    right_center = kernel(Matrix(tuple(r for m in left_mults for r in m.entries)))
    return Centers(left_center, right_center, left_center.intersect(right_center))


class SubspaceStatus(NamedTuple):
    is_subalgebra: bool
    is_left_ideal: bool
    is_right_ideal: bool
    is_ideal: bool


def subspace_status(alg: Algebra, s: Subspace) -> SubspaceStatus:
    """Subalgebra / left ideal ([A,I] in I) / right ideal ([I,A] in I) flags."""
    if s.ambient_dim != alg.dim:
        raise ValueError("ambient dimension mismatch")
    rows = s.basis_vectors()
    sub = all(s.contains_vector(bracket(alg, u, v)) for u in rows for v in rows)
    left = all(
        s.contains_vector(bracket(alg, alg.basis_vector(i), u))
        for i in range(alg.dim)
        for u in rows
    )
    right = all(
        s.contains_vector(bracket(alg, u, alg.basis_vector(i)))
        for i in range(alg.dim)
        for u in rows
    )
    return SubspaceStatus(sub, left, right, left and right)


def product_subspaces(alg: Algebra, i: Subspace, j: Subspace) -> Subspace:
    """Span of all brackets [u, v] with u in i and v in j."""
    if i.ambient_dim != alg.dim or j.ambient_dim != alg.dim:
        raise ValueError("ambient dimension mismatch")
    return Subspace.from_vectors(
        alg.dim,
        [bracket(alg, u, v) for u in i.basis_vectors() for v in j.basis_vectors()],
    )


class Normalizers(NamedTuple):
    left: Subspace
    right: Subspace
    both: Subspace


def normalizers(alg: Algebra, h: Subspace) -> Normalizers:
    """Left/right normalizers of a subalgebra and their intersection.

    Left: {x : [x,a] in H for all a in H}; right: {x : [a,x] in H}.  Each
    is the kernel of the H-membership constraints composed with the
    relevant multiplication operators.
    """
    if not subspace_status(alg, h).is_subalgebra:
        raise ValueError("normalizers are defined only for subalgebras")
    constraints = h.constraint_matrix()
    left_rows = []
    right_rows = []
    if constraints.rows:
        for a in h.basis_vectors():
            left_rows.extend((constraints @ right_mult(alg, a)).entries)
            right_rows.extend((constraints @ left_mult(alg, a)).entries)
    left = kernel(Matrix(tuple(left_rows))) if left_rows else alg.full_space()
    right = kernel(Matrix(tuple(right_rows))) if right_rows else alg.full_space()
    return Normalizers(left, right, left.intersect(right))


class Closures(NamedTuple):
    subalgebra_closure: Subspace
    ideal_closure: Subspace


def closures(alg: Algebra, s: Subspace) -> Closures:
    """Least subalgebra and least ideal containing s (fixed-point iteration)."""
    sub = s
    while True:
        grown = sub.sum(product_subspaces(alg, sub, sub))
        if grown == sub:
            break
        sub = grown
    ideal = s
    full = alg.full_space()
    while True:
        grown = ideal.sum(product_subspaces(alg, full, ideal)).sum(
            product_subspaces(alg, ideal, full)
        )
        if grown == ideal:
            break
        ideal = grown
    return Closures(sub, ideal)


def quotient(alg: Algebra, i: Subspace) -> tuple[Algebra, Matrix]:
    """Quotient algebra by an ideal and the projection onto complement coords.

    The complement is spanned by the ambient coordinates that are not pivot
    columns of the ideal's RREF basis, which makes the output constants
    deterministic.  The projection matrix has one row per quotient
    coordinate.
    """
    if not subspace_status(alg, i).is_ideal:
        raise ValueError("quotient requires an ideal")
    free = i.complement_coordinates()
    n, r = alg.dim, len(free)

    def project(v: Sequence) -> Vec:
        residual = list(_coerce(alg, v))
        for pivot, row in zip(i.pivots(), i.basis_vectors()):
            c = residual[pivot]
            if c == 0:
                continue
            for k in range(n):
                residual[k] -= c * row[k]
        return tuple(residual[f] for f in free)

    projection = Matrix.from_rows(
        [[project(alg.basis_vector(j))[t] for j in range(n)] for t in range(r)]
    )
    names = tuple(alg.basis_names[f] for f in free)
    tensor = tuple(
        tuple(project(bracket(alg, alg.basis_vector(fa), alg.basis_vector(fb))) for fb in free)
        for fa in free
    )
    return Algebra(names, tensor), projection


def change_basis(alg: Algebra, p: Matrix) -> Algebra:
    """Constants in the new basis e'_i = sum_j p[j][i] e_j (columns of p)."""
    if p.rows != alg.dim or p.cols != alg.dim:
        raise ValueError("basis-change matrix must be square of the algebra dimension")
    p_inv = p.inverse()
    n = alg.dim
    new_basis = [p.col(i) for i in range(n)]
    tensor = []
    for i in range(n):
        row = []
        for j in range(n):
            product_old = bracket(alg, new_basis[i], new_basis[j])
            row.append(p_inv.apply(product_old))
        tensor.append(tuple(row))
    return Algebra(alg.basis_names, tuple(tensor))


def restrict(alg: Algebra, h: Subspace, names: Sequence[str] | None = None) -> Algebra:
    """The algebra induced on a subalgebra's canonical basis."""
    status = subspace_status(alg, h)
    if not status.is_subalgebra:
        raise ValueError("restrict requires a subalgebra")
    r = h.dim
    if names is None:
        names = tuple(f"s{t + 1}" for t in range(r))
    rows = h.basis_vectors()
    tensor = []
    for a in range(r):
        row = []
        for b in range(r):
            coords = h.coordinates_of(bracket(alg, rows[a], rows[b]))
            if coords is None:  # unreachable once the subalgebra check passed
                raise ValueError("bracket left the subspace")
            row.append(coords)
        tensor.append(tuple(row))
    return Algebra(tuple(names), tuple(tensor))


@dataclass(frozen=True)
class RepresentationPair:
    """Operator pair (T, S) on a module space, one matrix per basis index."""

    space_dim: int
    t_maps: tuple[Matrix, ...]
    s_maps: tuple[Matrix, ...]

    def __post_init__(self):
        for m in self.t_maps + self.s_maps:
            if m.rows != self.space_dim or m.cols != self.space_dim:
                raise ValueError("representation matrices must be square of space_dim")


@dataclass(frozen=True)
class RepresentationViolation:
    axiom: int
    pair: tuple[int, int]
    names: tuple[str, str]
    discrepancy: Matrix


def adjoint_pair(alg: Algebra) -> RepresentationPair:
    """The pair (T, S) = (left multiplications, right multiplications)."""
    return RepresentationPair(
        alg.dim,
        tuple(left_mult(alg, alg.basis_vector(i)) for i in range(alg.dim)),
        tuple(right_mult(alg, alg.basis_vector(i)) for i in range(alg.dim)),
    )


def check_representation(alg: Algebra, rep: RepresentationPair) -> list[RepresentationViolation]:
    """Violations of the three operator axioms over all basis pairs.

    Axiom 1: S_b S_a = S_[a,b] - T_a S_b
    Axiom 2: S_b T_a = T_a S_b - S_[a,b]
    Axiom 3: T_[a,b] = T_a T_b - T_b T_a
    """
    if len(rep.t_maps) != alg.dim or len(rep.s_maps) != alg.dim:
        raise ValueError("one T and one S matrix per basis element required")

    def combine(maps: tuple[Matrix, ...], coeffs: Vec) -> Matrix:
        out = Matrix.zeros(rep.space_dim, rep.space_dim)
        for c, m in zip(coeffs, maps):
            if c != 0:
                out = out + m.scale(c)
        return out

    out: list[RepresentationViolation] = []
    for a in range(alg.dim):
        for b in range(alg.dim):
            product = alg.constants[a][b]
            s_ab = combine(rep.s_maps, product)
            t_ab = combine(rep.t_maps, product)
            t_a, t_b = rep.t_maps[a], rep.t_maps[b]
            s_a, s_b = rep.s_maps[a], rep.s_maps[b]
            checks = (
                (1, (s_ab - (t_a @ s_b)) - (s_b @ s_a)),
                (2, ((t_a @ s_b) - s_ab) - (s_b @ t_a)),
                (3, ((t_a @ t_b) - (t_b @ t_a)) - t_ab),
            )
            for axiom, diff in checks:
                if not diff.is_zero():
                    out.append(
                        RepresentationViolation(
                            axiom,
                            (a, b),
                            (alg.basis_names[a], alg.basis_names[b]),
                            diff,
                        )
                    )
    return out


@dataclass(frozen=True)
class DerivationViolation:
    indices: tuple[int, ...]
    names: tuple[str, ...]
    discrepancy: Vec


def left_normed_product(alg: Algebra, factors: Sequence[Vec]) -> Vec:
    """[a1, [a2, [..., [a_{s-1}, a_s]...]]] folded right to left."""
    acc = factors[-1]
    for v in reversed(factors[:-1]):
        acc = bracket(alg, v, acc)
    return acc


def derivation_check(alg: Algebra, d: Matrix, order: int) -> list[DerivationViolation]:
    """Violations of the order-s derivation law on left-normed basis products.

    D([x1,...,xs]) = sum_j [x1,...,D(x_j),...,xs]; order 2 is the ordinary
    derivation law.
    """
    if order < 2:
        raise ValueError("derivation order must be at least 2")
    if d.rows != alg.dim or d.cols != alg.dim:
        raise ValueError("derivation matrix must be square of the algebra dimension")
    out: list[DerivationViolation] = []

    def tuples(prefix: tuple[int, ...]):
        if len(prefix) == order:
            yield prefix
            return
        for i in range(alg.dim):
            yield from tuples(prefix + (i,))

    for combo in tuples(()):
        factors = [alg.basis_vector(i) for i in combo]
        lhs = d.apply(left_normed_product(alg, factors))
        rhs = alg.zero()
        for j in range(order):
            replaced = list(factors)
            replaced[j] = d.apply(factors[j])
            rhs = _vec_add(rhs, left_normed_product(alg, replaced))
        diff = _vec_sub(rhs, lhs)
        if any(x != 0 for x in diff):
            out.append(
                DerivationViolation(
                    combo, tuple(alg.basis_names[i] for i in combo), diff
                )
            )
    return out

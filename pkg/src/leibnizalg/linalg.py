"""Exact linear algebra over the rationals.

Matrices are immutable grids of ``Fraction`` entries; subspaces are stored
by their unique reduced-row-echelon basis, so structural equality of
subspaces is plain equality of the stored data.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from .scalars import as_fraction

__all__ = [
    "Matrix",
    "Subspace",
    "rref",
    "kernel",
    "fitting_null",
    "subspace_ops",
    "SubspaceOps",
]

Vec = tuple[Fraction, ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _freeze_row(row: Iterable) -> Vec:
    return tuple(as_fraction(x) for x in row)


@dataclass(frozen=True)
class Matrix:
    """Immutable rational matrix; ``entries[i][j]`` is row i, column j."""

    entries: tuple[Vec, ...]

    def __post_init__(self):
        widths = {len(r) for r in self.entries}
        if len(widths) > 1:
            raise ValueError("ragged matrix rows")

    @staticmethod
    def from_rows(rows: Sequence[Sequence]) -> "Matrix":
        return Matrix(tuple(_freeze_row(r) for r in rows))

    @staticmethod
    def zeros(rows: int, cols: int) -> "Matrix":
        return Matrix(tuple((_ZERO,) * cols for _ in range(rows)))

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix(
            tuple(tuple(_ONE if i == j else _ZERO for j in range(n)) for i in range(n))
        )

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def row(self, i: int) -> Vec:
        return self.entries[i]

    def col(self, j: int) -> Vec:
        return tuple(r[j] for r in self.entries)

    def transpose(self) -> "Matrix":
        return Matrix(tuple(self.col(j) for j in range(self.cols)))

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.entries for x in r)

    def trace(self) -> Fraction:
        if self.rows != self.cols:
            raise ValueError("trace of a non-square matrix")
        return sum((self.entries[i][i] for i in range(self.rows)), _ZERO)

    def apply(self, v: Sequence) -> Vec:
        """Matrix-vector product."""
        vv = _freeze_row(v)
        if len(vv) != self.cols:
            raise ValueError("dimension mismatch in matrix-vector product")
        return tuple(
            sum((r[j] * vv[j] for j in range(self.cols)), _ZERO) for r in self.entries
        )

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in matrix product")
        cols = other.transpose().entries
        return Matrix(
            tuple(
                tuple(sum((r[k] * c[k] for k in range(self.cols)), _ZERO) for c in cols)
                for r in self.entries
            )
        )

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("dimension mismatch in matrix sum")
        return Matrix(
            tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            )
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + other.scale(Fraction(-1))

    def scale(self, c) -> "Matrix":
        cc = as_fraction(c)
        return Matrix(tuple(tuple(cc * x for x in r) for r in self.entries))

    def power(self, n: int) -> "Matrix":
        if self.rows != self.cols:
            raise ValueError("power of a non-square matrix")
        if n < 0:
            raise ValueError("negative matrix power")
        result = Matrix.identity(self.rows)
        base = self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def rank(self) -> int:
        return rref(self)[1]

    def det(self) -> Fraction:
        """Determinant via fraction-exact Gaussian elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        work = [list(r) for r in self.entries]
        det = _ONE
        for col in range(n):
            pivot = next((r for r in range(col, n) if work[r][col] != 0), None)
            if pivot is None:
                return _ZERO
            if pivot != col:
                work[col], work[pivot] = work[pivot], work[col]
                det = -det
            det *= work[col][col]
            inv = 1 / work[col][col]
            for r in range(col + 1, n):
                factor = work[r][col] * inv
                if factor == 0:
                    continue
                for c in range(col, n):
                    work[r][c] -= factor * work[col][c]
        return det

    def inverse(self) -> "Matrix":
        if self.rows != self.cols:
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        augmented = Matrix.from_rows(
            [list(self.entries[i]) + list(Matrix.identity(n).entries[i]) for i in range(n)]
        )
        reduced, rank = rref(augmented)
        if rank < n or any(
            reduced.entries[i][j] != (1 if i == j else 0) for i in range(n) for j in range(n)
        ):
            raise ValueError("matrix is singular")
        return Matrix(tuple(r[n:] for r in reduced.entries))


def rref(m: Matrix) -> tuple[Matrix, int]:
    """Unique reduced row-echelon form and rank (pivots 1, pivot columns cleared)."""
    work = [list(r) for r in m.entries]
    n_rows, n_cols = m.rows, m.cols
    pivot_row = 0
    for col in range(n_cols):
        pivot = next((r for r in range(pivot_row, n_rows) if work[r][col] != 0), None)
        if pivot is None:
            continue
        work[pivot_row], work[pivot] = work[pivot], work[pivot_row]
        inv = 1 / work[pivot_row][col]
        work[pivot_row] = [x * inv for x in work[pivot_row]]
        for r in range(n_rows):
            if r == pivot_row or work[r][col] == 0:
                continue
            factor = work[r][col]
            work[r] = [a - factor * b for a, b in zip(work[r], work[pivot_row])]
        pivot_row += 1
        if pivot_row == n_rows:
            break
    return Matrix.from_rows(work), pivot_row


@dataclass(frozen=True)
class Subspace:
    """Subspace of Q^n stored by its canonical RREF basis (one vector per row)."""

    ambient_dim: int
    basis: Matrix

    @staticmethod
    def from_vectors(ambient_dim: int, vectors: Iterable[Sequence]) -> "Subspace":
        rows = [_freeze_row(v) for v in vectors]
        for r in rows:
            if len(r) != ambient_dim:
                raise ValueError("vector length does not match ambient dimension")
        if not rows:
            return Subspace(ambient_dim, Matrix(()))
        reduced, rank = rref(Matrix(tuple(rows)))
        return Subspace(ambient_dim, Matrix(reduced.entries[:rank]))

    @staticmethod
    def zero(ambient_dim: int) -> "Subspace":
        return Subspace(ambient_dim, Matrix(()))

    @staticmethod
    def full(ambient_dim: int) -> "Subspace":
        return Subspace(ambient_dim, Matrix.identity(ambient_dim))

    @property
    def dim(self) -> int:
        return self.basis.rows

    def basis_vectors(self) -> tuple[Vec, ...]:
        return self.basis.entries

    def pivots(self) -> tuple[int, ...]:
        return tuple(next(j for j, x in enumerate(row) if x != 0) for row in self.basis.entries)

    def complement_coordinates(self) -> tuple[int, ...]:
        """Ambient coordinates not used as pivots; they span a complement."""
        used = set(self.pivots())
        return tuple(j for j in range(self.ambient_dim) if j not in used)

    def contains_vector(self, v: Sequence) -> bool:
        return self.coordinates_of(v) is not None

    def coordinates_of(self, v: Sequence) -> Vec | None:
        """Coefficients of v over the RREF basis, or None if v is outside."""
        vv = _freeze_row(v)
        if len(vv) != self.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        coords = tuple(vv[p] for p in self.pivots())
        residual = list(vv)
        for c, row in zip(coords, self.basis.entries):
            if c == 0:
                continue
            for j in range(self.ambient_dim):
                residual[j] -= c * row[j]
        if any(x != 0 for x in residual):
            return None
        return coords

    def linear_combination(self, coords: Sequence) -> Vec:
        cc = _freeze_row(coords)
        if len(cc) != self.dim:
            raise ValueError("coordinate length does not match subspace dimension")
        out = [_ZERO] * self.ambient_dim
        for c, row in zip(cc, self.basis.entries):
            for j in range(self.ambient_dim):
                out[j] += c * row[j]
        return tuple(out)

    def contains(self, other: "Subspace") -> bool:
        self._check_ambient(other)
        return all(self.contains_vector(v) for v in other.basis_vectors())

    def sum(self, other: "Subspace") -> "Subspace":
        self._check_ambient(other)
        return Subspace.from_vectors(
            self.ambient_dim, self.basis.entries + other.basis.entries
        )

    def constraint_matrix(self) -> Matrix:
        """Rows annihilating the subspace: x lies here iff the product vanishes."""
        if self.dim == 0:
            return Matrix.identity(self.ambient_dim)
        return kernel(self.basis).basis

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check_ambient(other)
        rows = self.constraint_matrix().entries + other.constraint_matrix().entries
        if not rows:
            return Subspace.full(self.ambient_dim)
        return kernel(Matrix(rows))

    def _check_ambient(self, other: "Subspace"):
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimension mismatch")


def kernel(m: Matrix) -> Subspace:
    """Null space {v : m v = 0} with canonical basis."""
    n_cols = m.cols
    if m.rows == 0:
        return Subspace.full(n_cols)
    reduced, rank = rref(m)
    pivot_cols = []
    for r in range(rank):
        pivot_cols.append(next(j for j, x in enumerate(reduced.entries[r]) if x != 0))
    free_cols = [j for j in range(n_cols) if j not in pivot_cols]
    vectors = []
    for f in free_cols:
        v = [_ZERO] * n_cols
        v[f] = _ONE
        for r, p in enumerate(pivot_cols):
            v[p] = -reduced.entries[r][f]
        vectors.append(v)
    return Subspace.from_vectors(n_cols, vectors)


def fitting_null(m: Matrix, ambient: int) -> Subspace:
    """Generalized null space of a square map: kernel of its ambient-th power."""
    if m.rows != m.cols or m.rows != ambient:
        raise ValueError("fitting_null needs a square matrix of the ambient size")
    return kernel(m.power(ambient))


class SubspaceOps(NamedTuple):
    sum: Subspace
    intersection: Subspace
    contains: bool
    equal: bool


def subspace_ops(u: Subspace, v: Subspace) -> SubspaceOps:
    """Sum, intersection, containment (u >= v) and equality in one pass."""
    total = u.sum(v)
    meet = u.intersect(v)
    return SubspaceOps(total, meet, u.contains(v), u == v)


def preimage(map_matrix: Matrix, target: Subspace) -> Subspace:
    """{x : A x lies in target} for an m-by-n matrix A."""
    if map_matrix.rows != target.ambient_dim:
        raise ValueError("map codomain does not match target ambient dimension")
    constraints = target.constraint_matrix()
    if constraints.rows == 0:
        return Subspace.full(map_matrix.cols)
    return kernel(constraints @ map_matrix)

"""Isomorphism classification of non-Lie algebras in dimensions 2 and 3.

Routing is done with change-of-basis invariants (derived/squares
dimensions, the rank of the polarized square map, and scale-invariant
spectral data of the left action of a complement element on the derived
subalgebra).  A routed class is only returned after certification: the
module constructs an explicit rational basis change onto the generated
catalog table and compares structure constants exactly.  Inputs that are
isomorphic to a catalog table over an extension field but not over the
rationals (no rational isotropic line, non-square discriminant) come back
``unclassified``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import (
    Algebra,
    bracket,
    change_basis,
    leib_ideal,
    centers,
    product_subspaces,
)
from .analysis import is_nilpotent, is_solvable, nilpotency_class
from .catalog import generate
from .linalg import Matrix, Subspace, kernel, rref
from .scalars import rational_sqrt

__all__ = [
    "CanonicalForm2",
    "congruence_class_2x2",
    "CatalogId",
    "SpectralData",
    "Fingerprint",
    "fingerprint",
    "classify",
    "UNCLASSIFIED",
]

Vec = tuple[Fraction, ...]

_ROMAN = {"skew": "i", "rank1": "ii", "symmetric": "iii", "parabolic": "iv", "generic": "v"}


@dataclass(frozen=True)
class CanonicalForm2:
    """Congruence class of a nonzero 2x2 matrix over the closure.

    ``invariant_t`` is present only for the generic class and equals the
    trace of the cosquare (c + 1/c for the canonical [[0,1],[c,0]]); it is
    rational whenever the matrix is, even when c itself is not.
    """

    class_tag: str
    invariant_t: Fraction | None = None

    @property
    def roman(self) -> str:
        return _ROMAN[self.class_tag]


def congruence_class_2x2(m: Matrix) -> CanonicalForm2:
    """Classify a nonzero 2x2 matrix up to congruence.

    Rank 1 maps to the rank-one class.  For rank 2 the cosquare
    transpose-inverse(m) @ m decides: identity = symmetric, negated
    identity = antisymmetric, trace -2 otherwise = parabolic (double
    eigenvalue -1 without being -I), anything else is generic with the
    cosquare trace as invariant.
    """
    if m.rows != 2 or m.cols != 2:
        raise ValueError("congruence classification is for 2x2 matrices")
    if m.is_zero():
        raise ValueError("zero matrix has no congruence class here")
    if m.rank() == 1:
        return CanonicalForm2("rank1")
    mt = m.transpose()
    if mt == m:
        return CanonicalForm2("symmetric")
    if mt == m.scale(-1):
        return CanonicalForm2("skew")
    cosquare = mt.inverse() @ m
    t = cosquare.trace()
    if t == -2:
        return CanonicalForm2("parabolic")
    if t == 2:  # double eigenvalue 1 forces a symmetric matrix, handled above
        raise RuntimeError("impossible cosquare for a non-symmetric matrix")
    return CanonicalForm2("generic", t)


@dataclass(frozen=True)
class CatalogId:
    family: str
    parameter: Fraction | None = None

    def to_json(self) -> dict:
        from .scalars import format_rational

        return {
            "family": self.family,
            "parameter": None if self.parameter is None else format_rational(self.parameter),
        }


UNCLASSIFIED = CatalogId("unclassified")


@dataclass(frozen=True)
class SpectralData:
    """Scale invariants of the left action of a complement element on [A,A]."""

    map_is_zero: bool
    det_is_zero: bool
    defective: bool
    scalar: bool
    ratio_invariant: Fraction | None

    def to_json(self) -> dict:
        from .scalars import format_rational

        return {
            "map_is_zero": self.map_is_zero,
            "det_is_zero": self.det_is_zero,
            "defective": self.defective,
            "scalar": self.scalar,
            "ratio_invariant": (
                None if self.ratio_invariant is None else format_rational(self.ratio_invariant)
            ),
        }


@dataclass(frozen=True)
class Fingerprint:
    """Isomorphism invariants used to route (and to diagnose failures)."""

    dim: int
    is_lie: bool
    dim_derived: int
    dim_leib: int
    dim_left_center: int
    dim_right_center: int
    dim_center: int
    nilpotent: bool
    nilpotency_class: int | None
    square_form_rank: int
    spectral: SpectralData | None

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "is_lie": self.is_lie,
            "dim_derived": self.dim_derived,
            "dim_leib": self.dim_leib,
            "dim_left_center": self.dim_left_center,
            "dim_right_center": self.dim_right_center,
            "dim_center": self.dim_center,
            "nilpotent": self.nilpotent,
            "nilpotency_class": self.nilpotency_class,
            "square_form_rank": self.square_form_rank,
            "spectral": None if self.spectral is None else self.spectral.to_json(),
        }


def _square_form_rank(alg: Algebra) -> int:
    """Rank of the polarized square map (u,v) -> [u,v] + [v,u]."""
    if alg.dim == 0:
        return 0
    rows = []
    for j in range(alg.dim):
        ej = alg.basis_vector(j)
        block = [
            tuple(
                alg.constants[i][j][k] + alg.constants[j][i][k]
                for i in range(alg.dim)
            )
            for k in range(alg.dim)
        ]
        rows.extend(block)
    radical_dim = kernel(Matrix.from_rows(rows)).dim
    return alg.dim - radical_dim


def _derived(alg: Algebra) -> Subspace:
    return product_subspaces(alg, alg.full_space(), alg.full_space())


def _derived_action(alg: Algebra, derived: Subspace, w0: Vec):
    """L and R matrices of w0 restricted to [A,A], in its RREF coordinates."""
    l_cols, r_cols = [], []
    for r in derived.basis_vectors():
        lc = derived.coordinates_of(bracket(alg, w0, r))
        rc = derived.coordinates_of(bracket(alg, r, w0))
        if lc is None or rc is None:
            return None
        l_cols.append(lc)
        r_cols.append(rc)
    k = derived.dim
    l_mat = Matrix.from_rows([[l_cols[j][i] for j in range(k)] for i in range(k)])
    r_mat = Matrix.from_rows([[r_cols[j][i] for j in range(k)] for i in range(k)])
    return l_mat, r_mat


def _action_on_derived(alg: Algebra, derived: Subspace):
    """(L2, R2, w0) of the first complement coordinate on [A,A], or None.

    Only defined when [A,A] is 2-dimensional of codimension 1 and is
    left-annihilated by itself, which makes the result independent of the
    complement choice up to a common scalar.
    """
    if derived.dim != 2 or alg.dim - derived.dim != 1:
        return None
    for v in derived.basis_vectors():
        for r in derived.basis_vectors():
            if any(x != 0 for x in bracket(alg, v, r)):
                return None
    w0 = alg.basis_vector(derived.complement_coordinates()[0])
    action = _derived_action(alg, derived, w0)
    if action is None:
        return None
    return action[0], action[1], w0


def fingerprint(alg: Algebra) -> Fingerprint:
    leib = leib_ideal(alg)
    derived = _derived(alg)
    zl, zr, zc = centers(alg)
    cls = nilpotency_class(alg)
    spectral = None
    action = _action_on_derived(alg, derived)
    if action is not None:
        l2, _, _ = action
        det = l2.det()
        tr = l2.trace()
        disc = tr * tr - 4 * det
        off_diagonal = l2 - Matrix.identity(2).scale(tr / 2)
        spectral = SpectralData(
            map_is_zero=l2.is_zero(),
            det_is_zero=det == 0,
            defective=disc == 0 and not off_diagonal.is_zero(),
            scalar=off_diagonal.is_zero(),
            ratio_invariant=None if det == 0 else tr * tr / det - 2,
        )
    return Fingerprint(
        dim=alg.dim,
        is_lie=leib.dim == 0,
        dim_derived=derived.dim,
        dim_leib=leib.dim,
        dim_left_center=zl.dim,
        dim_right_center=zr.dim,
        dim_center=zc.dim,
        nilpotent=cls is not None,
        nilpotency_class=cls,
        square_form_rank=_square_form_rank(alg),
        spectral=spectral,
    )


def _columns_matrix(alg: Algebra, columns: Sequence[Vec]) -> Matrix:
    return Matrix.from_rows(
        [[columns[c][r] for c in range(len(columns))] for r in range(alg.dim)]
    )


def _certify(alg: Algebra, columns: Sequence[Vec], family: str, alpha=None) -> bool:
    """Change to the candidate basis and compare constants with the table."""
    p = _columns_matrix(alg, columns)
    if p.det() == 0:
        return False
    transformed = change_basis(alg, p)
    target = generate(family, alpha=alpha)
    return transformed.constants == target.constants


def _scale(v: Vec, c: Fraction) -> Vec:
    return tuple(c * x for x in v)


def _add(a: Vec, b: Vec) -> Vec:
    return tuple(x + y for x, y in zip(a, b))


def _solve_columns(columns: Sequence[Vec], target: Vec) -> Vec | None:
    """Coefficients expressing target over the given column vectors."""
    n, k = len(target), len(columns)
    augmented = Matrix.from_rows(
        [[columns[c][r] for c in range(k)] + [target[r]] for r in range(n)]
    )
    sub = Subspace.from_vectors(n, columns)
    if not sub.contains_vector(target) or sub.dim != k:
        return None
    reduced, rank = rref(augmented)
    coeffs = [Fraction(0)] * k
    for row in reduced.entries[:rank]:
        pivot = next(j for j, x in enumerate(row) if x != 0)
        if pivot == k:
            return None
        coeffs[pivot] = row[k]
    return tuple(coeffs)


def classify(alg: Algebra) -> CatalogId:
    """Catalog id of a verified algebra; ``lie`` when the bracket is
    antisymmetric, ``unclassified`` when no branch certifies."""
    leib = leib_ideal(alg)
    if leib.dim == 0:
        return CatalogId("lie")
    if alg.dim == 2:
        return _classify_dim2(alg)
    if alg.dim == 3:
        if is_nilpotent(alg):
            return _classify_nilpotent3(alg, leib)
        if is_solvable(alg):
            return _classify_solvable3(alg, leib)
    return UNCLASSIFIED


def _classify_dim2(alg: Algebra) -> CatalogId:
    e1, e2 = alg.basis_vector(0), alg.basis_vector(1)
    generator = None
    for candidate in (e1, e2, _add(e1, e2)):
        if any(x != 0 for x in bracket(alg, candidate, candidate)):
            generator = candidate
            break
    if generator is None:  # all squares vanish on a spanning set: bracket is antisymmetric
        return UNCLASSIFIED
    square = bracket(alg, generator, generator)
    follow = bracket(alg, generator, square)
    coeffs = _solve_columns([generator, square], follow)
    if coeffs is None or coeffs[0] != 0:
        return UNCLASSIFIED
    beta = coeffs[1]
    if beta == 0:
        if _certify(alg, [generator, square], "dim2_nilpotent_cyclic"):
            return CatalogId("dim2_nilpotent_cyclic")
        return UNCLASSIFIED
    scaled = _scale(generator, 1 / beta)
    scaled_square = bracket(alg, scaled, scaled)
    if _certify(alg, [scaled, scaled_square], "dim2_solvable_cyclic"):
        return CatalogId("dim2_solvable_cyclic")
    return UNCLASSIFIED


def _complement_pair(alg: Algebra, line: Subspace) -> tuple[Vec, Vec]:
    free = line.complement_coordinates()
    return alg.basis_vector(free[0]), alg.basis_vector(free[1])


def _classify_nilpotent3(alg: Algebra, leib: Subspace) -> CatalogId:
    derived = _derived(alg)
    if derived.dim == 2:
        generator = next(
            (
                alg.basis_vector(i)
                for i in range(3)
                if not derived.contains_vector(alg.basis_vector(i))
            ),
            None,
        )
        if generator is None:
            return UNCLASSIFIED
        square = bracket(alg, generator, generator)
        cube = bracket(alg, generator, square)
        if _certify(alg, [generator, square, cube], "n3_1"):
            return CatalogId("n3_1")
        return UNCLASSIFIED
    if derived.dim != 1:
        return UNCLASSIFIED
    z0 = derived.basis_vectors()[0]
    v1, v2 = _complement_pair(alg, derived)

    def form(u: Vec, v: Vec) -> Fraction | None:
        coords = derived.coordinates_of(bracket(alg, u, v))
        return None if coords is None else coords[0]

    entries = [[form(a, b) for b in (v1, v2)] for a in (v1, v2)]
    if any(x is None for row in entries for x in row):
        return UNCLASSIFIED
    f = Matrix.from_rows(entries)
    if f.is_zero():
        return UNCLASSIFIED
    shape = congruence_class_2x2(f)
    if shape.class_tag == "skew":  # antisymmetric form would mean a Lie bracket
        return UNCLASSIFIED
    complement = (v1, v2)

    def embed(pair: Sequence[Fraction]) -> Vec:
        return _add(_scale(complement[0], pair[0]), _scale(complement[1], pair[1]))

    def fval(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
        return sum(
            a[i] * f.entries[i][j] * b[j] for i in range(2) for j in range(2)
        )

    if shape.class_tag == "rank1":
        if f.transpose() != f:
            return UNCLASSIFIED  # covered by the generic family at parameter 0
        diag_index = 0 if f.entries[0][0] != 0 else 1
        u = (Fraction(1), Fraction(0)) if diag_index == 0 else (Fraction(0), Fraction(1))
        w = kernel(f).basis_vectors()[0]
        scale = fval(u, u)
        if _certify(alg, [embed(u), embed(w), _scale(z0, scale)], "n3_2"):
            return CatalogId("n3_2")
        return UNCLASSIFIED

    symmetric_part = (f + f.transpose()).scale(Fraction(1, 2))

    if shape.class_tag == "symmetric":
        u = _isotropic_direction(f)
        if u is None:
            return UNCLASSIFIED
        partner = next(
            (
                cand
                for cand in ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)))
                if fval(u, cand) != 0
            ),
            None,
        )
        if partner is None:
            return UNCLASSIFIED
        mu = fval(u, partner)
        corrected = tuple(
            p - fval(partner, partner) / (2 * mu) * ui for p, ui in zip(partner, u)
        )
        lam = fval(u, corrected)
        if _certify(alg, [embed(u), embed(corrected), _scale(z0, lam)], "n3_3"):
            return CatalogId("n3_3")
        return UNCLASSIFIED

    if shape.class_tag == "parabolic":
        u = kernel(symmetric_part).basis_vectors()
        if len(u) != 1:
            return UNCLASSIFIED
        u = u[0]
        w0 = next(
            cand
            for cand in ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)))
            if u[0] * cand[1] - u[1] * cand[0] != 0
        )
        mu = fval(u, w0)
        nu = fval(w0, w0)
        if mu == 0 or nu == 0:
            return UNCLASSIFIED
        w = tuple(mu / nu * x for x in w0)
        lam = fval(u, w)
        if _certify(alg, [embed(u), embed(w), _scale(z0, lam)], "n3_4"):
            return CatalogId("n3_4")
        return UNCLASSIFIED

    # generic: two rational isotropic lines of the symmetric part required
    lines = _isotropic_pair(symmetric_part)
    if lines is None:
        return UNCLASSIFIED
    u1, u2 = lines
    lam, lam_back = fval(u1, u2), fval(u2, u1)
    if lam == 0:
        u1, u2 = u2, u1
        lam, lam_back = fval(u1, u2), fval(u2, u1)
    if lam == 0:
        return UNCLASSIFIED
    alpha = lam_back / lam
    if alpha in (Fraction(0), Fraction(1), Fraction(-1)):
        return UNCLASSIFIED
    if _certify(alg, [embed(u1), embed(u2), _scale(z0, lam)], "n3_5", alpha=alpha):
        return CatalogId("n3_5", alpha + 1 / alpha)
    return UNCLASSIFIED


def _isotropic_direction(f: Matrix) -> tuple[Fraction, Fraction] | None:
    """One rational isotropic direction of a symmetric 2x2 form."""
    a, b, c = f.entries[0][0], f.entries[0][1], f.entries[1][1]
    if a == 0:
        return (Fraction(1), Fraction(0))
    if c == 0:
        return (Fraction(0), Fraction(1))
    root = rational_sqrt(b * b - a * c)
    if root is None:
        return None
    return ((-b + root) / a, Fraction(1))


def _isotropic_pair(s: Matrix) -> tuple[tuple, tuple] | None:
    """Two distinct rational isotropic lines of an indefinite symmetric form."""
    a, b, c = s.entries[0][0], s.entries[0][1], s.entries[1][1]
    if a == 0 and c == 0:
        return (Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))
    if a == 0:
        if b == 0:
            return None
        return (Fraction(1), Fraction(0)), (-c, 2 * b)
    if c == 0:
        if b == 0:
            return None
        return (Fraction(0), Fraction(1)), (2 * b, -a)
    root = rational_sqrt(b * b - a * c)
    if root is None or root == 0:
        return None
    return (((-b + root) / a, Fraction(1)), ((-b - root) / a, Fraction(1)))


def _classify_solvable3(alg: Algebra, leib: Subspace) -> CatalogId:
    derived = _derived(alg)
    if derived.dim == 1:
        return _certify_s3_1(alg, derived)
    if derived.dim != 2 or alg.dim != 3:
        return UNCLASSIFIED
    w0 = alg.basis_vector(derived.complement_coordinates()[0])
    action = _derived_action(alg, derived, w0)
    if action is None:
        return UNCLASSIFIED
    l2, r2 = action
    if leib.dim == 1:
        return _classify_s3_leib1(alg, leib, derived, l2, r2, w0)
    if leib.dim == 2:
        if not r2.is_zero():
            return UNCLASSIFIED
        return _classify_s3_leib2(alg, derived, l2, w0)
    return UNCLASSIFIED


def _certify_s3_1(alg: Algebra, derived: Subspace) -> CatalogId:
    u = derived.basis_vectors()[0]
    if any(any(x != 0 for x in bracket(alg, u, alg.basis_vector(i))) for i in range(3)):
        return UNCLASSIFIED
    phi = []
    for i in range(3):
        coords = derived.coordinates_of(bracket(alg, alg.basis_vector(i), u))
        if coords is None:
            return UNCLASSIFIED
        phi.append(coords[0])
    pivot = next((i for i in range(3) if phi[i] != 0), None)
    if pivot is None:
        return UNCLASSIFIED
    z1 = _scale(alg.basis_vector(pivot), 1 / phi[pivot])
    psi = []
    for i in range(3):
        coords = derived.coordinates_of(bracket(alg, z1, alg.basis_vector(i)))
        if coords is None:
            return UNCLASSIFIED
        psi.append(coords[0])
    psi_z1 = sum((z1[i] * psi[i] for i in range(3)), Fraction(0))
    z_final = _add(z1, _scale(u, -psi_z1))
    functional_rows = Matrix.from_rows([phi, psi])
    null = kernel(functional_rows)
    if null.dim != 1:
        return UNCLASSIFIED
    y = null.basis_vectors()[0]
    if _certify(alg, [u, y, z_final], "s3_1"):
        return CatalogId("s3_1")
    return UNCLASSIFIED


def _eigenline(l2: Matrix, r2: Matrix, lam: Fraction) -> Vec | None:
    """The common solution line of L v = lam v and R v = -lam v in [A,A]."""
    stacked = Matrix(
        (l2 - Matrix.identity(2).scale(lam)).entries
        + (r2 + Matrix.identity(2).scale(lam)).entries
    )
    line = kernel(stacked)
    if line.dim != 1:
        return None
    return line.basis_vectors()[0]


def _classify_s3_leib1(
    alg: Algebra, leib: Subspace, derived: Subspace, l2: Matrix, r2: Matrix, w0: Vec
) -> CatalogId:
    rank = _square_form_rank(alg)
    x0 = leib.basis_vectors()[0]
    coords = derived.coordinates_of(bracket(alg, w0, x0))
    x0_coords = derived.coordinates_of(x0)
    if coords is None or x0_coords is None:
        return UNCLASSIFIED
    lam_x_solved = _solve_columns([x0_coords], coords)
    if lam_x_solved is None:
        return UNCLASSIFIED
    lam_x = lam_x_solved[0]
    lam_y = l2.trace() - lam_x
    if lam_y == 0:
        return UNCLASSIFIED
    z1 = _scale(w0, 1 / lam_y)
    y_coords = _eigenline(l2, r2, lam_y)
    if y_coords is None:
        return UNCLASSIFIED
    y = derived.linear_combination(y_coords)

    if rank == 1:
        if lam_x != 0:
            return UNCLASSIFIED
        x = bracket(alg, z1, z1)
        if all(v == 0 for v in x):
            return UNCLASSIFIED
        if _certify(alg, [x, y, z1], "s3_3"):
            return CatalogId("s3_3")
        return UNCLASSIFIED

    if rank == 2:
        if lam_x == 0:
            return UNCLASSIFIED
        alpha = lam_x / lam_y
        delta = bracket(alg, z1, z1)
        delta_coords = _solve_columns([x0, y], delta)
        if delta_coords is None or delta_coords[1] != 0:
            return UNCLASSIFIED
        z_final = _add(z1, _scale(x0, -delta_coords[0] / alpha))
        if _certify(alg, [x0, y, z_final], "s3_2", alpha=alpha):
            return CatalogId("s3_2", alpha)
        return UNCLASSIFIED

    if rank == 3:
        if lam_x != 2 * lam_y:
            return UNCLASSIFIED
        x = bracket(alg, y, y)
        if all(v == 0 for v in x):
            return UNCLASSIFIED
        delta = bracket(alg, z1, z1)
        delta_coords = _solve_columns([x, y], delta)
        if delta_coords is None or delta_coords[1] != 0:
            return UNCLASSIFIED
        z_final = _add(z1, _scale(x, (1 - delta_coords[0]) / 2))
        if _certify(alg, [x, y, z_final], "s3_4"):
            return CatalogId("s3_4")
        return UNCLASSIFIED

    return UNCLASSIFIED


def _classify_s3_leib2(alg: Algebra, derived: Subspace, l2: Matrix, w0: Vec) -> CatalogId:
    det = l2.det()
    tr = l2.trace()
    disc = tr * tr - 4 * det

    if det == 0:
        if tr == 0:
            return UNCLASSIFIED
        z1 = _scale(w0, 1 / tr)
        l1 = l2.scale(1 / tr)
        k0_line = kernel(l1)
        u1_line = kernel(l1 - Matrix.identity(2))
        if k0_line.dim != 1 or u1_line.dim != 1:
            return UNCLASSIFIED
        k0, u1 = k0_line.basis_vectors()[0], u1_line.basis_vectors()[0]
        delta = derived.coordinates_of(bracket(alg, z1, z1))
        if delta is None:
            return UNCLASSIFIED
        pq = _solve_columns([k0, u1], delta)
        if pq is None or pq[0] == 0:
            return UNCLASSIFIED
        p, q = pq
        x = derived.linear_combination(_add(_scale(k0, p), u1))
        y = derived.linear_combination(u1)
        z_final = _add(z1, derived.linear_combination(_scale(u1, 1 - q)))
        if _certify(alg, [x, y, z_final], "s3_7"):
            return CatalogId("s3_7")
        return UNCLASSIFIED

    if disc == 0:
        lam = tr / 2
        if lam == 0:
            return UNCLASSIFIED
        nilpart = l2 - Matrix.identity(2).scale(lam)
        z1 = _scale(w0, 1 / lam)
        delta = derived.coordinates_of(bracket(alg, z1, z1))
        if delta is None:
            return UNCLASSIFIED
        if nilpart.is_zero():
            correction = _scale(delta, Fraction(-1))
            z_final = _add(z1, derived.linear_combination(correction))
            x = derived.linear_combination((Fraction(1), Fraction(0)))
            y = derived.linear_combination((Fraction(0), Fraction(1)))
            if _certify(alg, [x, y, z_final], "s3_5", alpha=Fraction(1)):
                return CatalogId("s3_5", Fraction(2))
            return UNCLASSIFIED
        n1 = nilpart.scale(1 / lam)
        x_coords = next(
            (
                cand
                for cand in ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)))
                if any(v != 0 for v in n1.apply(cand))
            ),
            None,
        )
        if x_coords is None:
            return UNCLASSIFIED
        y_coords = n1.apply(x_coords)
        correction = _scale((Matrix.identity(2) - n1).apply(delta), Fraction(-1))
        z_final = _add(z1, derived.linear_combination(correction))
        x = derived.linear_combination(x_coords)
        y = derived.linear_combination(y_coords)
        if _certify(alg, [x, y, z_final], "s3_6"):
            return CatalogId("s3_6")
        return UNCLASSIFIED

    root = rational_sqrt(disc)
    if root is None:
        return UNCLASSIFIED
    lam1, lam2 = (tr + root) / 2, (tr - root) / 2
    alpha = lam1 / lam2
    x_line = kernel(l2 - Matrix.identity(2).scale(lam1))
    y_line = kernel(l2 - Matrix.identity(2).scale(lam2))
    if x_line.dim != 1 or y_line.dim != 1:
        return UNCLASSIFIED
    x = derived.linear_combination(x_line.basis_vectors()[0])
    y = derived.linear_combination(y_line.basis_vectors()[0])
    z1 = _scale(w0, 1 / lam2)
    delta = bracket(alg, z1, z1)
    delta_coords = _solve_columns([x, y], delta)
    if delta_coords is None:
        return UNCLASSIFIED
    z_final = _add(
        z1,
        _add(_scale(x, -delta_coords[0] / alpha), _scale(y, -delta_coords[1])),
    )
    if _certify(alg, [x, y, z_final], "s3_5", alpha=alpha):
        return CatalogId("s3_5", alpha + 1 / alpha)
    return UNCLASSIFIED

import random
from fractions import Fraction

import pytest

from conftest import ALL_STEMS, NILPOTENT_STEMS, random_vector
from leibnizalg import (
    closures,
    derivation_check,
    engel_subalgebra,
    find_cartan,
    is_nilpotent,
    leib_ideal,
    left_mult,
    nilpotency_class,
    nilpotent_derivation,
    normalizers,
    product_subspaces,
    restrict,
    subspace_status,
)
from leibnizalg.catalog import generate
from leibnizalg.linalg import Subspace

F = Fraction


class TestEngelSubalgebra:
    def test_two_dim_cyclic(self, fixtures):
        alg = fixtures["dim2_solvable_cyclic"]
        result = engel_subalgebra(alg, alg.basis_vector("a"))
        assert result.subalgebra == Subspace.from_vectors(2, [[1, -1]])
        assert not result.element_in_subalgebra

    def test_nilpotent_algebra_gives_everything(self, fixtures):
        alg = fixtures["n3_1"]
        rng = random.Random(17)
        for _ in range(5):
            v = random_vector(rng, 3)
            assert engel_subalgebra(alg, v).subalgebra == alg.full_space()

    def test_semisimple_fixture_element_h(self, fixtures):
        alg = fixtures["example_5_6"]
        result = engel_subalgebra(alg, alg.basis_vector("h"))
        assert result.subalgebra == Subspace.from_vectors(5, [alg.basis_vector("h")])
        assert result.element_in_subalgebra

    def test_always_a_subalgebra(self, fixtures):
        for stem in ALL_STEMS:
            alg = fixtures[stem]
            for i in range(alg.dim):
                sub = engel_subalgebra(alg, alg.basis_vector(i)).subalgebra
                assert subspace_status(alg, sub).is_subalgebra, stem


class TestFindCartan:
    def test_two_dim_cyclic(self, fixtures):
        alg = fixtures["dim2_solvable_cyclic"]
        result = find_cartan(alg)
        assert result.subalgebra == Subspace.from_vectors(2, [[1, -1]])
        nz = normalizers(alg, result.subalgebra)
        assert nz.left == alg.full_space()
        assert nz.right == result.subalgebra

    def test_nilpotent_algebra_is_its_own_cartan(self, fixtures):
        for stem in ("n3_2", "cyclic_4_nilpotent"):
            alg = fixtures[stem]
            assert find_cartan(alg).subalgebra == alg.full_space()

    def test_semisimple_fixture(self, fixtures):
        alg = fixtures["example_5_6"]
        result = find_cartan(alg, seed=0, attempts=32)
        assert result.subalgebra.dim == 1
        # the subalgebra is the line through h
        assert result.subalgebra.contains_vector(alg.basis_vector("h"))

    def test_certified_on_every_fixture(self, fixtures):
        for stem in ALL_STEMS:
            alg = fixtures[stem]
            result = find_cartan(alg, seed=0, attempts=16)
            assert is_nilpotent(restrict(alg, result.subalgebra)), stem
            assert normalizers(alg, result.subalgebra).both == result.subalgebra, stem

    def test_right_normalizer_equals_cartan(self, fixtures):
        for stem in ("dim2_solvable_cyclic", "s3_1", "s3_5_alpha_2", "example_5_6"):
            alg = fixtures[stem]
            result = find_cartan(alg, seed=0, attempts=16)
            assert normalizers(alg, result.subalgebra).right == result.subalgebra, stem

    def test_rejects_zero_attempts(self, fixtures):
        with pytest.raises(ValueError):
            find_cartan(fixtures["s3_1"], attempts=0)


def _fixture_subalgebras(alg):
    """Interesting verified subalgebras: closures of basis lines, the squares
    ideal, the derived subalgebra, the full space."""
    candidates = [alg.full_space(), leib_ideal(alg)]
    candidates.append(product_subspaces(alg, alg.full_space(), alg.full_space()))
    for i in range(alg.dim):
        line = Subspace.from_vectors(alg.dim, [alg.basis_vector(i)])
        candidates.append(closures(alg, line).subalgebra_closure)
    unique = []
    for sub in candidates:
        if sub not in unique and subspace_status(alg, sub).is_subalgebra:
            unique.append(sub)
    return unique


class TestEngelLemmas:
    def test_subalgebras_containing_an_engel_subalgebra_are_right_self_normalizing(
        self, fixtures
    ):
        for stem in ALL_STEMS:
            alg = fixtures[stem]
            engels = [
                engel_subalgebra(alg, alg.basis_vector(i)).subalgebra
                for i in range(alg.dim)
            ]
            for sub in _fixture_subalgebras(alg):
                if any(sub.contains(e) for e in engels):
                    assert normalizers(alg, sub).right == sub, stem

    def test_engel_subalgebra_has_an_internal_generator(self, fixtures):
        # for each basis element a there is b inside E(a) with E(b) = E(a)
        rng = random.Random(31)
        for stem in ALL_STEMS:
            alg = fixtures[stem]
            for i in range(alg.dim):
                target = engel_subalgebra(alg, alg.basis_vector(i)).subalgebra
                candidates = list(target.basis_vectors())
                for _ in range(100 - len(candidates)):
                    coords = [F(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(target.dim)]
                    candidates.append(target.linear_combination(coords))
                found = any(
                    engel_subalgebra(alg, b).subalgebra == target
                    for b in candidates
                    if any(x != 0 for x in b)
                )
                assert found, f"{stem}: no internal generator for basis element {i}"


class TestNilpotencyViaOperators:
    def test_nilpotent_fixtures_have_nilpotent_left_mults(self, fixtures):
        rng = random.Random(8)
        for stem in NILPOTENT_STEMS:
            alg = fixtures[stem]
            for i in range(alg.dim):
                assert left_mult(alg, alg.basis_vector(i)).power(alg.dim).is_zero(), stem
            for _ in range(5):
                v = random_vector(rng, alg.dim)
                assert left_mult(alg, v).power(alg.dim).is_zero(), stem

    def test_bracket_closed_basis_with_nilpotent_mults_forces_nilpotency(self, fixtures):
        # fixtures whose basis products are scalar multiples of basis vectors
        # form a multiplicatively closed spanning set
        for stem in ALL_STEMS:
            alg = fixtures[stem]
            closed = all(
                sum(1 for x in alg.constants[i][j] if x != 0) <= 1
                for i in range(alg.dim)
                for j in range(alg.dim)
            )
            mults_nilpotent = all(
                left_mult(alg, alg.basis_vector(i)).power(alg.dim).is_zero()
                for i in range(alg.dim)
            )
            if closed and mults_nilpotent:
                assert is_nilpotent(alg), stem


class TestNilpotentDerivation:
    def test_cyclic_class_three(self, fixtures):
        alg = fixtures["n3_1"]
        result = nilpotent_derivation(alg)
        assert result.order == 2
        assert result.matrix.entries == tuple(
            tuple(F(v) for v in row) for row in ((1, 0, 0), (0, 2, 0), (0, 0, 3))
        )

    def test_symmetric_table(self, fixtures):
        alg = fixtures["n3_3"]
        result = nilpotent_derivation(alg)
        assert result.order == 2
        assert result.matrix.entries == tuple(
            tuple(F(v) for v in row) for row in ((1, 0, 0), (0, 1, 0), (0, 0, 2))
        )

    def test_abelian(self):
        from leibnizalg import Algebra

        abelian = Algebra.from_products(("x", "y"), {})
        result = nilpotent_derivation(abelian)
        assert result.order == 1
        assert result.matrix.det() != 0

    def test_every_nilpotent_fixture_verifies(self, fixtures):
        for stem in NILPOTENT_STEMS:
            alg = fixtures[stem]
            cls = nilpotency_class(alg)
            result = nilpotent_derivation(alg)
            assert result.order == cls // 2 + 1, stem
            assert result.matrix.det() != 0, stem
            assert derivation_check(alg, result.matrix, max(result.order, 2)) == [], stem

    def test_rejects_non_nilpotent(self, fixtures):
        with pytest.raises(ValueError):
            nilpotent_derivation(fixtures["s3_1"])

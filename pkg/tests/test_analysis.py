from fractions import Fraction

from conftest import ALL_STEMS, NILPOTENT_STEMS, sl2
from leibnizalg import (
    Algebra,
    centers,
    derived_series,
    is_nilpotent,
    is_semisimple,
    is_solvable,
    leib_ideal,
    lower_central_series,
    nilpotency_class,
    product_subspaces,
    radical,
    restrict,
    subspace_status,
)
from leibnizalg.catalog import generate
from leibnizalg.linalg import Subspace

F = Fraction


class TestDerivedSeries:
    def test_example_5_8(self, fixtures):
        report = derived_series(fixtures["example_5_8"])
        assert report.dims == (2, 1, 0)
        assert is_solvable(fixtures["example_5_8"])

    def test_abelian(self):
        abelian = Algebra.from_products(("x", "y", "z"), {})
        report = derived_series(abelian)
        assert report.dims == (3, 0)
        assert is_solvable(abelian)

    def test_semisimple_construction_is_not_solvable(self, fixtures):
        alg = fixtures["example_5_6"]
        report = derived_series(alg)
        assert report.stabilized and report.dims[-1] == 5
        assert not is_solvable(alg)


class TestLowerCentralSeries:
    def test_cyclic_nilpotent_class_three(self, fixtures):
        alg = fixtures["n3_1"]
        assert nilpotency_class(alg) == 3
        assert lower_central_series(alg).dims == (3, 2, 1, 0)

    def test_symmetric_table_class_two(self, fixtures):
        assert nilpotency_class(fixtures["n3_3"]) == 2

    def test_one_product_solvable_is_not_nilpotent(self, fixtures):
        alg = fixtures["s3_1"]
        assert not is_nilpotent(alg)
        assert nilpotency_class(alg) is None
        assert lower_central_series(alg).dims == (3, 1)


class TestRadical:
    def test_semisimple_fixture(self, fixtures):
        alg = fixtures["example_5_6"]
        report = radical(alg)
        expected = Subspace.from_vectors(5, [alg.basis_vector("x0"), alg.basis_vector("x1")])
        assert report.radical == expected == report.leib
        assert report.semisimple and is_semisimple(alg)

    def test_solvable_fixture_has_full_radical(self, fixtures):
        alg = fixtures["example_5_8"]
        report = radical(alg)
        assert report.radical == alg.full_space()
        assert not report.semisimple

    def test_abelian_nonzero(self):
        abelian = Algebra.from_products(("x", "y"), {})
        report = radical(abelian)
        assert report.radical == abelian.full_space()
        assert not report.semisimple

    def test_radical_contains_leib_and_restricts_solvable(self, fixtures):
        for stem in ALL_STEMS:
            alg = fixtures[stem]
            report = radical(alg)
            assert report.radical.contains(report.leib), stem
            assert subspace_status(alg, report.radical).is_ideal, stem
            assert is_solvable(restrict(alg, report.radical)), stem

    def test_simple_lie_algebra(self):
        assert radical(sl2()).radical.dim == 0


class TestStructuralImplications:
    def test_solvable_iff_derived_subalgebra_nilpotent(self, fixtures):
        for stem in ALL_STEMS:
            alg = fixtures[stem]
            derived = product_subspaces(alg, alg.full_space(), alg.full_space())
            assert is_solvable(alg) == is_nilpotent(restrict(alg, derived)), stem

    def test_semisimple_implies_perfect(self, fixtures):
        for stem in ALL_STEMS:
            alg = fixtures[stem]
            if is_semisimple(alg):
                assert product_subspaces(alg, alg.full_space(), alg.full_space()) == alg.full_space(), stem

    def test_nilpotent_implies_solvable(self, fixtures):
        for stem in ALL_STEMS:
            alg = fixtures[stem]
            if is_nilpotent(alg):
                assert is_solvable(alg), stem

    def test_deepest_term_is_central_in_nilpotent_fixtures(self, fixtures):
        for stem in NILPOTENT_STEMS:
            alg = fixtures[stem]
            series = lower_central_series(alg)
            deepest = series.terms[-2]  # last nonzero term
            center = centers(alg).center
            assert center.dim > 0, stem
            assert center.contains(deepest), stem

    def test_leib_is_inside_radical_on_grid(self):
        for family, alpha in (("n3_5", F(2)), ("s3_2", F(3)), ("s3_5", F(1, 2))):
            alg = generate(family, alpha=alpha)
            report = radical(alg)
            assert report.radical.contains(leib_ideal(alg))

from fractions import Fraction

from conftest import ALL_STEMS, NILPOTENT_STEMS
from leibnizalg import (
    bracket,
    cartan_solvable,
    is_semisimple,
    is_solvable,
    killing,
    leib_ideal,
    subspace_status,
)
from leibnizalg.linalg import Matrix, Subspace

F = Fraction


class TestKilling:
    def test_example_5_8_gram(self, fixtures):
        alg = fixtures["example_5_8"]
        data = killing(alg)
        assert data.gram == Matrix.from_rows([[0, 0], [0, 1]])
        assert data.radical == leib_ideal(alg)
        assert data.nondegenerate

    def test_nilpotent_fixtures_have_trivial_form(self, fixtures):
        for stem in NILPOTENT_STEMS:
            data = killing(fixtures[stem])
            assert data.gram.is_zero(), stem
            assert not data.nondegenerate, stem

    def test_semisimple_fixture(self, fixtures):
        alg = fixtures["example_5_6"]
        data = killing(alg)
        expected = Subspace.from_vectors(5, [alg.basis_vector("x0"), alg.basis_vector("x1")])
        assert data.radical == expected
        assert data.nondegenerate

    def test_gram_is_symmetric(self, fixtures):
        for stem in ALL_STEMS:
            gram = killing(fixtures[stem]).gram
            assert gram == gram.transpose(), stem

    def test_form_is_invariant(self, fixtures):
        # trace form of ([a,b], c) agrees with (a, [b,c]) on basis triples
        for stem in ALL_STEMS:
            alg = fixtures[stem]
            gram = killing(alg).gram

            def pairing(u, v):
                return sum(
                    (u[i] * gram.entries[i][j] * v[j] for i in range(alg.dim) for j in range(alg.dim)),
                    F(0),
                )

            for a in range(alg.dim):
                for b in range(alg.dim):
                    for c in range(alg.dim):
                        ea, eb, ec = (alg.basis_vector(k) for k in (a, b, c))
                        assert pairing(bracket(alg, ea, eb), ec) == pairing(ea, bracket(alg, eb, ec)), stem

    def test_radical_is_an_ideal(self, fixtures):
        for stem in ALL_STEMS:
            alg = fixtures[stem]
            assert subspace_status(alg, killing(alg).radical).is_ideal, stem

    def test_squares_sit_inside_the_radical(self, fixtures):
        for stem in ALL_STEMS:
            alg = fixtures[stem]
            assert killing(alg).radical.contains(leib_ideal(alg)), stem


class TestCartanCriterion:
    def test_example_5_8(self, fixtures):
        assert cartan_solvable(fixtures["example_5_8"])

    def test_semisimple_construction(self, fixtures):
        assert not cartan_solvable(fixtures["example_5_6"])

    def test_abelian(self, fixtures):
        from leibnizalg import Algebra

        assert cartan_solvable(Algebra.from_products(("x", "y"), {}))

    def test_agrees_with_series_on_all_fixtures(self, fixtures):
        for stem in ALL_STEMS:
            alg = fixtures[stem]
            assert cartan_solvable(alg) == is_solvable(alg), stem


class TestNondegeneracyVsSemisimplicity:
    def test_semisimple_implies_nondegenerate(self, fixtures):
        for stem in ALL_STEMS:
            alg = fixtures[stem]
            if is_semisimple(alg):
                assert killing(alg).nondegenerate, stem

    def test_converse_fails_at_the_two_dimensional_witness(self, fixtures):
        alg = fixtures["example_5_8"]
        assert killing(alg).nondegenerate
        assert not is_semisimple(alg)

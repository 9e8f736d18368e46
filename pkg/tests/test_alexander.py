import random

import pytest

from eqcube.alexander import (SeifertData, alexander_from_polys, alexander_poly,
                              i_delta, invariant_factors, no_two_torsion,
                              presentation_matrices, smith_normal_form)
from eqcube.laurent import LaurentPoly, PolyError, parse_poly, print_poly
from eqcube.linalg import bareiss_det, mat_mul
from eqcube.verify import random_seifert

from conftest import seeded_seifert


class TestSeifertData:
    def test_rejects_non_unimodular(self):
        with pytest.raises(PolyError):
            SeifertData(1, [[1, 1], [1, 1]])

    def test_rejects_bad_shape(self):
        with pytest.raises(PolyError):
            SeifertData(1, [[1, 1]])

    def test_genus_zero(self):
        S = SeifertData(0, [])
        assert S.size == 0


class TestAlexanderPoly:
    def test_trefoil(self, trefoil):
        assert print_poly(alexander_poly(trefoil)) == "t^-1 - 1 + t"

    def test_figure_eight(self, figure_eight):
        assert print_poly(alexander_poly(figure_eight)) == "-t^-1 + 3 - t"

    def test_genus_zero(self):
        assert alexander_poly(SeifertData(0, [])) == LaurentPoly.one()

    def test_symmetric_and_normalized(self):
        for seed in range(10):
            d = alexander_poly(seeded_seifert(seed))
            assert d.is_symmetric()
            assert d.value_at_one() == 1


class TestPresentationMatrices:
    def test_trefoil_c_matrix(self, trefoil):
        C, _ = presentation_matrices(trefoil)
        s = parse_poly("t^{-1/2} - t^{1/2}")
        assert C[0][0] == s and C[1][1] == s
        assert C[0][1] == parse_poly("t^{1/2}")
        assert C[1][0] == parse_poly("-t^{-1/2}")

    def test_det_a_is_delta(self, trefoil):
        from eqcube.laurent import symmetric_normalize

        _, A = presentation_matrices(trefoil)
        _, d = symmetric_normalize(bareiss_det(A))
        assert d == alexander_poly(trefoil)

    def test_genus_zero_empty(self):
        C, A = presentation_matrices(SeifertData(0, []))
        assert C == [] and A == []


class TestSmithNormalForm:
    def test_diag_reordered(self):
        d = parse_poly("t - 1 + t^-1")
        M = [[d, LaurentPoly.zero()], [LaurentPoly.zero(), LaurentPoly.one()]]
        U, D, W = smith_normal_form(M)
        assert D[0][0] == LaurentPoly.one()
        assert D[1][1] == d
        assert mat_mul(mat_mul(U, D), W) == M

    def test_gcd_merging(self):
        t = LaurentPoly.t_power(1)
        M = [[t, LaurentPoly.zero()], [LaurentPoly.zero(), t - 1]]
        _, D, _ = smith_normal_form(M)
        # gcd of the entries is a unit, the product carries everything
        assert D[0][0] == LaurentPoly.one()
        assert D[1][1].monic_lowest() == (t * (t - 1)).monic_lowest()

    def test_zero_matrix(self):
        z = LaurentPoly.zero()
        _, D, _ = smith_normal_form([[z, z], [z, z]])
        assert all(D[i][j].is_zero() for i in range(2) for j in range(2))

    def test_rejects_half_exponents(self):
        with pytest.raises(PolyError):
            smith_normal_form([[parse_poly("t^{1/2}")]])

    def test_random_factorization(self):
        rng = random.Random(9)
        for _ in range(15):
            n = rng.randint(1, 4)
            M = [
                [LaurentPoly({2 * k: rng.randint(-2, 2) for k in range(-1, 2)})
                 for _ in range(n)]
                for _ in range(n)
            ]
            U, D, W = smith_normal_form(M)
            assert mat_mul(mat_mul(U, D), W) == M
            assert bareiss_det(U).is_unit()
            assert bareiss_det(W).is_unit()
            diag = [D[i][i] for i in range(n)]
            for a, b in zip(diag, diag[1:]):
                assert a.divides(b)


class TestInvariantFactors:
    def test_trefoil(self, trefoil):
        data = invariant_factors(trefoil)
        assert [print_poly(f) for f in data.factors] == ["t^-1 - 1 + t"]
        assert data.annihilator == data.delta

    def test_block_double_trefoil(self):
        V = [[-1, 1, 0, 0], [0, -1, 0, 0], [0, 0, -1, 1], [0, 0, 0, -1]]
        data = invariant_factors(SeifertData(2, V))
        d = parse_poly("t^-1 - 1 + t")
        assert list(data.factors) == [d, d]
        assert data.annihilator == d

    def test_genus_zero(self):
        data = invariant_factors(SeifertData(0, []))
        assert data.factors == ()
        assert data.annihilator == LaurentPoly.one()

    def test_random_chain_and_product(self):
        from eqcube.laurent import symmetric_normalize

        for seed in range(12):
            S = seeded_seifert(seed)
            data = invariant_factors(S)
            prod = LaurentPoly.one()
            for f in data.factors:
                assert f.is_symmetric()
                assert f.value_at_one() == 1
                prod = prod * f
            assert symmetric_normalize(prod)[1] == data.delta
            assert no_two_torsion(data.factors)


class TestIDelta:
    def test_trivial(self):
        from eqcube.laurent import RationalFunction

        f = i_delta(LaurentPoly.one())
        assert f == RationalFunction(parse_poly("1 + t"), parse_poly("1 - t"))
        assert (f.bar() + f).is_zero()

    def test_antisymmetry(self, trefoil, figure_eight):
        for S in (trefoil, figure_eight):
            f = i_delta(alexander_poly(S))
            assert (f.bar() + f).is_zero()

    def test_from_polys_validation(self):
        with pytest.raises(PolyError):
            alexander_from_polys(parse_poly("1"), parse_poly("t - 1 + t^-1"))

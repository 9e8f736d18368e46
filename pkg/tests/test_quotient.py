import random
from fractions import Fraction

import pytest

from eqcube.laurent import (LaurentPoly, PolyError, RationalFunction,
                            parse_poly)
from eqcube.quotient import (QuotientContext, augmentation, clear_bead,
                             default_cutoff, detects_constant, dumbbell_eval,
                             ihx_residual, odd_coefficients, reduce,
                             span_membership, theta_eval, variation_element)
from eqcube.symthree import SymThreePoly, parse_sym, specialize_x_xinv_1
from eqcube.verify import random_bead

TREFOIL_DELTA = parse_poly("t^-1 - 1 + t")


@pytest.fixture(scope="module")
def ctx_trivial():
    return QuotientContext(LaurentPoly.one(), LaurentPoly.one(), K=8)


@pytest.fixture(scope="module")
def ctx_trefoil():
    return QuotientContext(TREFOIL_DELTA, TREFOIL_DELTA, K=8)


class TestClearBead:
    def test_polynomial_passthrough(self):
        d = TREFOIL_DELTA
        assert clear_bead(parse_poly("t"), d) == d * parse_poly("t")
        assert clear_bead(2, d) == 2 * d

    def test_rational_bead(self):
        d = TREFOIL_DELTA
        f = RationalFunction(parse_poly("t - 1"), d)
        assert clear_bead(f, d) == parse_poly("t - 1")

    def test_bad_denominator(self):
        with pytest.raises(PolyError):
            clear_bead(RationalFunction(1, parse_poly("t - 2")), TREFOIL_DELTA)


class TestThetaDumbbell:
    def test_theta_of_ones(self):
        assert theta_eval(1, 1, 1) == SymThreePoly.const(12)

    def test_theta_t_expansion(self):
        got = theta_eval(parse_poly("t"), 1, 1)
        want = parse_sym("2*x + 2*y + 2*x^-1 + 2*y^-1") \
            + 2 * SymThreePoly.monomial(-1, -1) \
            + 2 * SymThreePoly.monomial(1, 1)
        assert got == want
        assert got.is_symmetric()

    def test_theta_bead_permutation(self):
        p, q, r = parse_poly("t"), parse_poly("t^2 - 1"), parse_poly("1 + t")
        assert theta_eval(p, q, r) == theta_eval(r, p, q)
        assert theta_eval(p, q, r) == theta_eval(q, p, r)

    def test_dumbbell_zero_lambda(self):
        assert dumbbell_eval(parse_poly("t"), parse_poly("t^2"), 0).is_zero()

    def test_dumbbell_symmetric_bead_vanishes(self):
        sym = parse_poly("t + t^-1")
        assert dumbbell_eval(sym, parse_poly("t"), 1).is_zero()

    def test_dumbbell_t_t(self):
        got = dumbbell_eval(parse_poly("t"), parse_poly("t"), Fraction(1, 2))
        p = parse_poly("t - t^-1")
        want = Fraction(1, 2) * theta_eval(p, LaurentPoly.zero() - p, 1)
        # theta with bar-antisymmetric beads doubles the single orbit
        assert 2 * got == want
        assert got.is_symmetric()

    def test_ihx_random(self):
        rng = random.Random(3)
        d = TREFOIL_DELTA
        for _ in range(40):
            P = RationalFunction(random_bead(rng), d)
            Q = RationalFunction(random_bead(rng), d)
            lam = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
            assert ihx_residual(P, Q, lam, d).is_zero()


class TestContext:
    def test_validation(self):
        with pytest.raises(PolyError):
            QuotientContext(parse_poly("t"), LaurentPoly.one())
        with pytest.raises(PolyError):
            QuotientContext(TREFOIL_DELTA, LaurentPoly.one())

    def test_default_cutoff(self):
        assert default_cutoff(LaurentPoly.one()) == 10
        assert default_cutoff(TREFOIL_DELTA) == 10
        assert default_cutoff(parse_poly("t^-3 - t^3 + 1")) == 11

    def test_closed_form_matches_definition(self, ctx_trefoil, ctx_trivial):
        cube = parse_sym("1 - x") * parse_sym("1 - y") \
            * (SymThreePoly.const(1) - SymThreePoly.monomial(-1, -1))
        for ctx in (ctx_trivial, ctx_trefoil):
            for k in range(1, 9):
                assert cube * ctx.p_big(k) == ctx.p_big_definition(k)

    def test_specialization_matches_p_small(self, ctx_trefoil, ctx_trivial):
        for ctx in (ctx_trivial, ctx_trefoil):
            for k in range(1, 9):
                assert specialize_x_xinv_1(ctx.p_big(k)) == ctx.p_small(k)

    def test_augmentation_12k(self, ctx_trefoil, ctx_trivial):
        for ctx in (ctx_trivial, ctx_trefoil):
            for k in range(1, 9):
                assert augmentation(ctx.p_big(k)) == 12 * k
                assert ctx.p_small(k).value_at_one() == 12 * k

    def test_trivial_p_small_closed_form(self, ctx_trivial):
        # Delta = 1: p_k = 2(k+1)(t^k + t^-k) + 4(t^{k-1} + ... + t^{1-k})
        for k in range(1, 9):
            want = LaurentPoly({2 * k: 2 * (k + 1), -2 * k: 2 * (k + 1)})
            for j in range(1 - k, k):
                want = want + LaurentPoly({2 * j: 4})
            assert ctx_trivial.p_small(k) == want

    def test_p_big_beyond_cutoff(self, ctx_trivial):
        assert augmentation(ctx_trivial.p_big(12)) == 144


class TestSpan:
    def test_basis_member(self, ctx_trefoil):
        coeffs = span_membership(ctx_trefoil.p_big(3), ctx_trefoil)
        assert coeffs == [0, 0, 1, 0, 0, 0, 0, 0]

    def test_combination(self, ctx_trefoil):
        E = 2 * ctx_trefoil.p_big(1) - ctx_trefoil.p_big(2)
        coeffs = span_membership(E, ctx_trefoil)
        assert coeffs == [2, -1, 0, 0, 0, 0, 0, 0]

    def test_non_member(self, ctx_trefoil):
        assert span_membership(ctx_trefoil.ddd(), ctx_trefoil) is None

    def test_reduce_idempotent(self, ctx_trefoil):
        E = ctx_trefoil.ddd() + 3 * ctx_trefoil.p_big(2)
        r = reduce(E, ctx_trefoil)
        assert reduce(r, ctx_trefoil) == r
        assert reduce(ctx_trefoil.ddd(), ctx_trefoil) == r

    def test_reduce_kernel_round_trip(self, ctx_trefoil):
        E = parse_sym("x*y - x^-1*y^-1 + 2")
        r = reduce(E, ctx_trefoil)
        assert span_membership(E - r, ctx_trefoil) is not None

    def test_detects_constant(self, ctx_trefoil, ctx_trivial):
        assert detects_constant(ctx_trivial)
        assert detects_constant(ctx_trefoil)

    def test_square_of_trefoil_runs(self):
        d = TREFOIL_DELTA * TREFOIL_DELTA
        ctx = QuotientContext(d, d, K=6)
        assert detects_constant(ctx) in (True, False)


class TestVariation:
    def test_odd_coefficients(self):
        v = parse_poly("3*t - 3*t^-1 + t^2 - t^-2")
        assert odd_coefficients(v) == {1: Fraction(3), 2: Fraction(1)}

    def test_rejects_symmetric(self):
        with pytest.raises(PolyError):
            odd_coefficients(parse_poly("t + t^-1"))

    def test_rejects_half_exponents(self):
        with pytest.raises(PolyError):
            odd_coefficients(parse_poly("t^{1/2} - t^{-1/2}"))

    def test_variation_element(self, ctx_trefoil):
        v = parse_poly("2*t - 2*t^-1 - t^3 + t^-3")
        E = variation_element(v, ctx_trefoil)
        assert E == 2 * ctx_trefoil.p_big(1) - ctx_trefoil.p_big(3)
        assert span_membership(E, ctx_trefoil) == [2, 0, -1, 0, 0, 0, 0, 0]

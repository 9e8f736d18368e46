import random
from fractions import Fraction

import pytest

from eqcube.alexander import alexander_from_polys
from eqcube.laurent import LaurentPoly, PolyError, RationalFunction, parse_poly
from eqcube.quotient import (QuotientContext, clear_bead, span_membership,
                             variation_element)
from eqcube.surgery import (ClasperMove, CobordismMove, ConnectSumMove,
                            DehnMove, FramingTwistMove, LPMove, TripleForm,
                            clasper_S, cobordism_variation, dedekind_sum,
                            dehn_surgery_delta, dehn_table, framing_variation,
                            lambda_e_prime, lens_lambda, lp_surgery_S,
                            lp_tables, script_evaluate)
from eqcube.symthree import SymThreePoly, from_single, sym3_triple
from eqcube.symthree import augmentation as aug

RF = RationalFunction
TREFOIL = parse_poly("t^-1 - 1 + t")


def _ddd(d):
    return from_single(d, "x") * from_single(d, "y") * from_single(d, "z")


def _zero_matrix(n):
    return [[RF(0)] * n for _ in range(n)]


def _random_poly(rng):
    return LaurentPoly({2 * j: rng.randint(-2, 2) for j in range(-1, 2)})


def _random_hermitian3(rng):
    m = [[None] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(i, 3):
            p = _random_poly(rng)
            if i == j:
                p = p + p.bar()
            m[i][j] = RF(p)
            m[j][i] = RF(p.bar())
    return m


class TestTripleForm:
    def test_antisymmetry(self):
        f = TripleForm(3, {(1, 2, 3): Fraction(2)})
        assert f(1, 2, 3) == 2
        assert f(2, 1, 3) == -2
        assert f(3, 1, 2) == 2
        assert f(1, 1, 3) == 0

    def test_rejects_repeated_index_value(self):
        with pytest.raises(PolyError):
            TripleForm(3, {(1, 1, 2): Fraction(1)})

    def test_rejects_out_of_range(self):
        with pytest.raises(PolyError):
            TripleForm(2, {(1, 2, 3): Fraction(1)})

    def test_y_graph(self):
        f = TripleForm.y_graph()
        assert f(1, 2, 3) == 1 and f(2, 1, 3) == -1


class TestDedekindLens:
    def test_values(self):
        assert dedekind_sum(1, 1) == 0
        assert dedekind_sum(1, 3) == Fraction(1, 18)
        assert dedekind_sum(-1, 3) == Fraction(-1, 18)
        assert dedekind_sum(1, 5) == Fraction(1, 5)

    def test_oddness_in_q(self):
        for p in (3, 5, 7):
            for q in range(1, p):
                from math import gcd

                if gcd(q, p) == 1:
                    assert dedekind_sum(q, p) + dedekind_sum(-q, p) == 0

    def test_rejects_non_coprime(self):
        with pytest.raises(PolyError):
            dedekind_sum(2, 4)

    def test_lens_values(self):
        assert lens_lambda(1, 5) == 0
        assert lens_lambda(3, 1) + lens_lambda(3, -1) == 0
        assert lens_lambda(-3, -1) == lens_lambda(3, 1)


class TestLambdaEPrime:
    def test_zero_table(self, trefoil_alex):
        z = _zero_matrix(1)
        tab = dehn_table(z, z, z, z, TREFOIL)
        assert lambda_e_prime(tab, 1, trefoil_alex).is_zero()

    def test_constant_off_diagonal_genus_one(self, trefoil_alex):
        # cd = 1, dc = constant g0: only the -cd*dc product survives
        g0 = Fraction(5, 7)
        tab = dehn_table([[RF(0)]], [[RF(1)]], [[RF(g0)]], [[RF(0)]], TREFOIL)
        assert lambda_e_prime(tab, 1, trefoil_alex) == -g0 * _ddd(TREFOIL)

    def test_genus_two_plumbing(self, trefoil_alex):
        for q, k in ((1, 1), (2, 3)):
            Lf = RF(LaurentPoly.t_power(k, q), TREFOIL)
            cc = [[RF(0), RF(1)], [RF(1), RF(0)]]
            dd = [[RF(0), Lf], [Lf.bar(), RF(0)]]
            tab = dehn_table(cc, _zero_matrix(2), _zero_matrix(2), dd, TREFOIL)
            lep = lambda_e_prime(tab, 2, trefoil_alex)
            cl = clear_bead(Lf, TREFOIL)
            want = Fraction(1, 6) * (sym3_triple(cl, TREFOIL, TREFOIL)
                                     + sym3_triple(cl.bar(), TREFOIL, TREFOIL))
            assert lep == want

    def test_relabeling_invariance(self, trefoil_alex):
        rng = random.Random(5)
        f = [[RF(_random_poly(rng)) for _ in range(2)] for _ in range(2)]

        def swap(m):
            return [[m[1][1], m[1][0]], [m[0][1], m[0][0]]]

        tabs = [dehn_table(f, f, f, f, TREFOIL),
                dehn_table(swap(f), swap(f), swap(f), swap(f), TREFOIL)]
        a, b = (lambda_e_prime(t, 2, trefoil_alex) for t in tabs)
        assert a == b


class TestDehnSurgery:
    def test_unit_surgery_drops_lens_term(self, trefoil_alex):
        Lf = RF(LaurentPoly.t_power(1), TREFOIL)
        cc = [[RF(0), RF(1)], [RF(1), RF(0)]]
        dd = [[RF(0), Lf], [Lf.bar(), RF(0)]]
        tab = dehn_table(cc, _zero_matrix(2), _zero_matrix(2), dd, TREFOIL)
        assert dehn_surgery_delta(1, 1, tab, 2, trefoil_alex) == \
            6 * lambda_e_prime(tab, 2, trefoil_alex)

    def test_pure_lens_term(self, trefoil_alex):
        z = _zero_matrix(1)
        tab = dehn_table(z, z, z, z, TREFOIL)
        got = dehn_surgery_delta(3, 1, tab, 1, trefoil_alex)
        assert got == 6 * lens_lambda(3, -1) * _ddd(TREFOIL)

    def test_rejects_zero_p(self, trefoil_alex):
        z = _zero_matrix(1)
        tab = dehn_table(z, z, z, z, TREFOIL)
        with pytest.raises(PolyError):
            dehn_surgery_delta(0, 1, tab, 1, trefoil_alex)


class TestClasperLP:
    def test_identity_linking_gives_minus_12(self, trivial_alex):
        I, O = RF(1), RF(0)
        zy = [[I, O, O], [O, I, O], [O, O, I]]
        tabs = lp_tables(zy, _zero_matrix(3), _zero_matrix(3), LaurentPoly.one())
        assert clasper_S(tabs, trivial_alex) == SymThreePoly.const(-12)
        ya = TripleForm.y_graph()
        assert lp_surgery_S(ya, ya, tabs, trivial_alex) == \
            SymThreePoly.const(-12)

    def test_zero_form_gives_zero(self, trivial_alex):
        zy = [[RF(1)] * 3 for _ in range(3)]
        tabs = lp_tables(zy, _zero_matrix(3), _zero_matrix(3), LaurentPoly.one())
        empty = TripleForm(3, {})
        assert lp_surgery_S(empty, TripleForm.y_graph(), tabs,
                            trivial_alex).is_zero()

    def test_random_agreement(self, trivial_alex):
        rng = random.Random(21)
        ya = TripleForm.y_graph()
        for _ in range(20):
            zy = [[RF(_random_poly(rng)) for _ in range(3)] for _ in range(3)]
            tabs = lp_tables(zy, _random_hermitian3(rng),
                             _random_hermitian3(rng), LaurentPoly.one())
            assert clasper_S(tabs, trivial_alex) == \
                lp_surgery_S(ya, ya, tabs, trivial_alex)


class TestVariations:
    def test_framing_trefoil(self, trefoil_alex):
        fv = framing_variation(trefoil_alex, 1)
        ctx = QuotientContext(TREFOIL, TREFOIL, K=6)
        assert fv == Fraction(-1, 2) * ctx.p_big(1)
        assert aug(fv) == -6
        assert framing_variation(trefoil_alex, -1) == -fv

    def test_framing_trivial_is_zero(self, trivial_alex):
        assert framing_variation(trivial_alex, 3).is_zero()

    def test_cobordism_single_pushoff(self, trefoil_alex):
        ctx = QuotientContext(TREFOIL, TREFOIL, K=6)
        cb = cobordism_variation([RF(LaurentPoly.t_power(2, 3), TREFOIL)],
                                 trefoil_alex)
        v = LaurentPoly({4: 3, -4: -3})
        assert cb == variation_element(v, ctx)
        assert span_membership(cb, ctx) == [0, 3, 0, 0, 0, 0]

    def test_cobordism_symmetric_pushoff_is_zero(self, trivial_alex):
        f = RF(parse_poly("t + t^-1"))
        assert cobordism_variation([f], trivial_alex).is_zero()

    def test_random_variation_in_span(self, trefoil_alex):
        rng = random.Random(8)
        ctx = QuotientContext(TREFOIL, TREFOIL, K=6)
        for _ in range(20):
            coeffs = [Fraction(rng.randint(-3, 3)) for _ in range(6)]
            v = LaurentPoly.zero()
            for k, c in enumerate(coeffs, start=1):
                v = v + c * LaurentPoly({2 * k: 1, -2 * k: -1})
            E = variation_element(v, ctx)
            assert span_membership(E, ctx) == coeffs


class TestScripts:
    def test_empty(self, trivial_alex):
        st = script_evaluate([], trivial_alex)
        assert st.Q2.is_zero() and st.lam == 0

    def test_connect_sums(self, trivial_alex):
        st = script_evaluate(
            [ConnectSumMove(Fraction(1, 2)), ConnectSumMove(Fraction(-1, 3)),
             ConnectSumMove(Fraction(2))],
            trivial_alex,
        )
        assert st.augmentation() == 13
        assert st.Q2 == SymThreePoly.const(13)
        assert st.lam == Fraction(13, 6)

    def test_framing_twist(self, trefoil_alex):
        st = script_evaluate([FramingTwistMove(1)], trefoil_alex)
        assert st.augmentation() == -6
        assert st.lam == -1

    def test_dehn_loses_lambda(self, trefoil_alex):
        z = _zero_matrix(1)
        tab = dehn_table(z, z, z, z, TREFOIL)
        st = script_evaluate([DehnMove(3, 1, tab, 1)], trefoil_alex)
        assert st.lam is None
        st2 = script_evaluate(
            [DehnMove(3, 1, tab, 1, lam_delta=lens_lambda(3, -1))],
            trefoil_alex,
        )
        assert st2.lam == lens_lambda(3, -1)
        assert st2.augmentation() == 6 * st2.lam

    def test_mixed_script_tracks_lambda(self, trefoil_alex):
        st = script_evaluate(
            [ConnectSumMove(Fraction(1)), FramingTwistMove(2),
             CobordismMove((RF(parse_poly("t - t^-1")),))],
            trefoil_alex,
        )
        assert st.lam is not None
        assert st.augmentation() == 6 * st.lam

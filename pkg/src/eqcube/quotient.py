"""Beaded-graph evaluation and the quotient by the P_k relations.

Everything is computed in the cleared form: an element E stands for the
class of E/(delta(x)delta(y)delta(z)).  The theta and dumbbell graphs take
beads in Q[t^{±1}, 1/delta(t)] and return cleared symmetric polynomials.
P_k is the cleared relation polynomial

    P_k = delta(x)delta(y)delta(z) sum_{S3} (x^k - x^{-k})/delta(x) I_Delta(z)

computed by its closed form (no symbolic limits); the rational-function
definition is kept only as a cross-check oracle, multiplied through by
(1-x)(1-y)(1-z) to stay polynomial.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .alexander import AlexanderData
from .laurent import LaurentPoly, PolyError, RationalFunction
from .symthree import (SymThreePoly, _ROT, _ROT2, div_one_minus_xy, from_single,
                       sym3_triple)
from .symthree import augmentation as sym_augmentation

T_ONE = LaurentPoly.t_power(1)


def clear_bead(P, delta: LaurentPoly) -> LaurentPoly:
    """delta * P as a polynomial; the bead's denominator must divide delta."""
    if isinstance(P, LaurentPoly):
        return delta * P
    if isinstance(P, (int, Fraction)):
        return delta * Fraction(P)
    if not isinstance(P, RationalFunction):
        raise PolyError("bead must be a polynomial or rational function")
    try:
        cof = delta.exact_div(P.den)
    except PolyError:
        raise PolyError("bead denominator %s does not divide delta" % P.den)
    return cof * P.num


def theta_eval(P, Q, R, delta: LaurentPoly = LaurentPoly.one()) -> SymThreePoly:
    """Cleared theta graph: sum_{S3} (P(x)Q(y)R(z) + P(1/x)Q(1/y)R(1/z))."""
    p, q, r = clear_bead(P, delta), clear_bead(Q, delta), clear_bead(R, delta)
    return sym3_triple(p, q, r) + sym3_triple(p.bar(), q.bar(), r.bar())


def dumbbell_eval(P, Q, lam, delta: LaurentPoly = LaurentPoly.one()) -> SymThreePoly:
    """Cleared dumbbell: lam * sum_{S3} (P(x)-P(1/x))(Q(1/y)-Q(y))."""
    lam = Fraction(lam)
    if not lam:
        return SymThreePoly.zero()
    p, q = clear_bead(P, delta), clear_bead(Q, delta)
    return lam * sym3_triple(p - p.bar(), q.bar() - q, delta)


def ihx_residual(P, Q, lam, delta: LaurentPoly = LaurentPoly.one()) -> SymThreePoly:
    """dumbbell(P,Q,lam) - theta(bar P, lam, Q) + theta(P, lam, Q); always 0."""
    lam = Fraction(lam)
    barP = P.bar() if not isinstance(P, (int, Fraction)) else P
    return (
        dumbbell_eval(P, Q, lam, delta)
        - theta_eval(barP, RationalFunction(lam), Q, delta)
        + theta_eval(P, RationalFunction(lam), Q, delta)
    )


def default_cutoff(delta: LaurentPoly) -> int:
    """max(10, 3 * top degree of Delta + 2)."""
    if delta.is_zero():
        raise PolyError("zero Alexander polynomial")
    top = max(delta.max_doubled, -delta.min_doubled)
    return max(10, 3 * ((top + 1) // 2) + 2)


def _odd_power(k: int) -> LaurentPoly:
    return LaurentPoly({2 * k: 1, -2 * k: -1})


class QuotientContext:
    """Immutable (Delta, delta, K) context with the relation basis P_1..P_K."""

    def __init__(self, delta: LaurentPoly, annihilator: LaurentPoly,
                 K: Optional[int] = None):
        if not delta.is_symmetric() or delta.value_at_one() != 1:
            raise PolyError("Delta must be bar-symmetric with Delta(1) = 1")
        if not annihilator.is_symmetric() or annihilator.value_at_one() != 1:
            raise PolyError("annihilator must be bar-symmetric with value 1 at t=1")
        if not annihilator.divides(delta):
            raise PolyError("annihilator must divide Delta")
        self.delta = delta
        self.ann = annihilator
        # h = delta_ann * t Delta'/Delta is a polynomial since each invariant
        # factor of Delta divides the annihilator
        self.h = (annihilator * T_ONE * delta.derivative()).exact_div(delta)
        self.K = default_cutoff(delta) if K is None else int(K)
        if self.K < 1:
            raise PolyError("cutoff must be positive")
        self.basis = tuple(self._p_big(k) for k in range(1, self.K + 1))
        for p in self.basis:
            if not p.is_symmetric():
                raise PolyError("relation polynomial failed its symmetry check")
        self._echelon = _echelon_rows(self.basis)

    @classmethod
    def from_alexander(cls, data: AlexanderData, K: Optional[int] = None):
        return cls(data.delta, data.annihilator, K)

    def ddd(self) -> SymThreePoly:
        """delta(x) delta(y) delta(z) as a cleared element."""
        d = self.ann
        return from_single(d, "x") * from_single(d, "y") * from_single(d, "z")

    def _p_big(self, k: int) -> SymThreePoly:
        d = self.ann
        f = _odd_power(k)
        part1 = sym3_triple(f, d, self.h)
        # cyclic part: with z = (xy)^{-1}, each cyclic term is
        #   -xy * [(x^k - x^{-k}) d(y) + (y^k - y^{-k}) d(x)]/(1 - xy)
        #        * d(z)(z + 1)
        B = from_single(f, "x") * from_single(d, "y") \
            + from_single(f, "y") * from_single(d, "x")
        term = -(SymThreePoly.monomial(1, 1)
                 * div_one_minus_xy(B)
                 * from_single(d * (T_ONE + 1), "z"))
        return part1 + term + term.substitute(_ROT) + term.substitute(_ROT2)

    def p_big(self, k: int) -> SymThreePoly:
        if k < 1:
            raise PolyError("relation index must be >= 1")
        if k <= self.K:
            return self.basis[k - 1]
        return self._p_big(k)

    def p_big_definition(self, k: int) -> SymThreePoly:
        """(1-x)(1-y)(1-z) * P_k straight from the rational definition."""
        d = self.ann
        a = (1 - T_ONE) * _odd_power(k)
        b = (1 - T_ONE) * d
        c = d * (T_ONE + 1) + (1 - T_ONE) * self.h
        return sym3_triple(a, b, c)

    def p_small(self, k: int) -> LaurentPoly:
        """p_k = P_k(x, x^{-1}, 1), directly from the one-variable formula."""
        if k < 1:
            raise PolyError("relation index must be >= 1")
        d = self.ann
        f = _odd_power(k)
        geo = LaurentPoly({2 * j: 1 for j in range(-k, k)})
        even = LaurentPoly({2 * k: 1, -2 * k: 1})
        return (
            2 * f * (-self.h - T_ONE * d.derivative())
            + 2 * geo * (T_ONE + 1) * d
            + 2 * k * even * d
        )


# -- linear algebra over the monomial coordinates ----------------------


def _order_key(m: Tuple[int, int]):
    i, j = m
    return (abs(i) + abs(j), i, j)


def _echelon_rows(elements) -> List[Dict[Tuple[int, int], Fraction]]:
    """Row-reduce coefficient dicts; leading monomial maximal in _order_key."""
    rows: List[Dict[Tuple[int, int], Fraction]] = []
    for e in elements:
        rows.append(dict(e.coeffs()))
    echelon: List[Dict[Tuple[int, int], Fraction]] = []
    for row in rows:
        row = _eliminate(row, echelon)
        if row:
            lead = max(row, key=_order_key)
            inv = 1 / row[lead]
            row = {m: c * inv for m, c in row.items()}
            echelon.append(row)
    # back-substitute for a fully reduced echelon
    for a in range(len(echelon)):
        lead_a = max(echelon[a], key=_order_key)
        for b in range(len(echelon)):
            if b != a and lead_a in echelon[b]:
                f = echelon[b][lead_a]
                nb = dict(echelon[b])
                for m, c in echelon[a].items():
                    nb[m] = nb.get(m, Fraction(0)) - f * c
                    if not nb[m]:
                        del nb[m]
                echelon[b] = nb
    return echelon


def _eliminate(row: Dict[Tuple[int, int], Fraction], echelon):
    row = dict(row)
    for er in echelon:
        lead = max(er, key=_order_key)
        if lead in row:
            f = row[lead]
            for m, c in er.items():
                row[m] = row.get(m, Fraction(0)) - f * c
                if not row[m]:
                    del row[m]
    return row


def reduce(E: SymThreePoly, ctx: QuotientContext) -> SymThreePoly:
    """Canonical representative of E modulo span{P_1..P_K}."""
    return SymThreePoly(_eliminate(E.coeffs(), ctx._echelon))


def span_membership(E: SymThreePoly, ctx: QuotientContext):
    """Coefficients (b_1..b_K) with E = sum b_k P_k, or None."""
    if not reduce(E, ctx).is_zero():
        return None
    # solve for the coefficients by elimination against the raw basis
    target = dict(E.coeffs())
    coeffs = [Fraction(0)] * ctx.K
    work = [(dict(p.coeffs()), k) for k, p in enumerate(ctx.basis)]
    # triangularize (vector, combo) pairs carrying their P_k composition
    combos = []
    for vec, k in work:
        combo = {k: Fraction(1)}
        for evec, ecombo in combos:
            lead = max(evec, key=_order_key)
            if lead in vec:
                f = vec[lead]
                for m, c in evec.items():
                    vec[m] = vec.get(m, Fraction(0)) - f * c
                    if not vec[m]:
                        del vec[m]
                for kk, c in ecombo.items():
                    combo[kk] = combo.get(kk, Fraction(0)) - f * c
        if vec:
            lead = max(vec, key=_order_key)
            inv = 1 / vec[lead]
            vec = {m: c * inv for m, c in vec.items()}
            combo = {kk: c * inv for kk, c in combo.items()}
            combos.append((vec, combo))
    for evec, ecombo in combos:
        lead = max(evec, key=_order_key)
        if lead in target:
            f = target[lead]
            for m, c in evec.items():
                target[m] = target.get(m, Fraction(0)) - f * c
                if not target[m]:
                    del target[m]
            for kk, c in ecombo.items():
                coeffs[kk] += f * c
    if target:
        return None
    return coeffs


def detects_constant(ctx: QuotientContext) -> bool:
    """True iff delta(x)delta(y)delta(z) is not a combination of the P_k."""
    return span_membership(ctx.ddd(), ctx) is None


def augmentation(E: SymThreePoly) -> Fraction:
    """Evaluation at (1, 1, 1)."""
    return sym_augmentation(E)


def odd_coefficients(v: LaurentPoly) -> Dict[int, Fraction]:
    """Write an antisymmetric polynomial as sum c_k (t^k - t^{-k})."""
    if not v.has_integer_exponents():
        raise PolyError("odd-basis decomposition needs integer exponents")
    if v.bar() != -v:
        raise PolyError("polynomial is not antisymmetric")
    return {e2 // 2: c for e2, c in v.doubled().items() if e2 > 0}


def variation_element(v: LaurentPoly, ctx: QuotientContext) -> SymThreePoly:
    """Cleared sum_{S3} v(x)/delta(x) I_Delta(y) for antisymmetric v."""
    return sum(
        (c * ctx.p_big(k) for k, c in sorted(odd_coefficients(v).items())),
        SymThreePoly.zero(),
    )

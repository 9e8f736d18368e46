"""Surgery formulas for the two-loop invariant and the script evaluator.

All move deltas are returned in the cleared form: delta(x)delta(y)delta(z)
times the actual variation of the invariant.  The moves never change
(Delta, delta); the caller is responsible for that precondition.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from .alexander import AlexanderData
from .blanchfield import EqLinkingTable
from .laurent import LaurentPoly, PolyError, RationalFunction
from .quotient import (QuotientContext, clear_bead, dumbbell_eval, theta_eval,
                       variation_element)
from .symthree import SymThreePoly, from_single, sym3_triple
from .symthree import augmentation as sym_augmentation


class TripleForm:
    """Totally antisymmetric trilinear form on indices 1..g."""

    def __init__(self, g: int, values: Dict[Tuple[int, int, int], Fraction]):
        self.g = int(g)
        self._v: Dict[Tuple[int, int, int], Fraction] = {}
        for (i, j, k), val in values.items():
            val = Fraction(val)
            if len({i, j, k}) < 3:
                if val:
                    raise PolyError("triple form must vanish on repeated indices")
                continue
            key, sign = _canonical_triple(i, j, k)
            val = sign * val
            if key in self._v and self._v[key] != val:
                raise PolyError("inconsistent antisymmetric values at %s" % (key,))
            self._v[key] = val
        for (i, j, k) in self._v:
            if not (1 <= i <= self.g and 1 <= j <= self.g and 1 <= k <= self.g):
                raise PolyError("triple form index out of range")

    def __call__(self, i: int, j: int, k: int) -> Fraction:
        if len({i, j, k}) < 3:
            return Fraction(0)
        key, sign = _canonical_triple(i, j, k)
        return sign * self._v.get(key, Fraction(0))

    def support(self):
        return sorted(k for k, v in self._v.items() if v)

    @classmethod
    def y_graph(cls) -> "TripleForm":
        """The g=3 form with value the sign of the permutation (i,j,k)."""
        return cls(3, {(1, 2, 3): Fraction(1)})


def _canonical_triple(i, j, k):
    seq = [i, j, k]
    sign = 1
    for a in range(2):
        for b in range(2 - a):
            if seq[b] > seq[b + 1]:
                seq[b], seq[b + 1] = seq[b + 1], seq[b]
                sign = -sign
    return tuple(seq), sign


def dehn_table(cc, cd, dc, dd, delta: LaurentPoly) -> EqLinkingTable:
    """Genus-g symplectic push-off table for the Dehn surgery formula."""
    g = len(cc)
    for name, m in (("cc", cc), ("cd", cd), ("dc", dc), ("dd", dd)):
        if len(m) != g or any(len(row) != g for row in m):
            raise PolyError("table %r must be %dx%d" % (name, g, g))
    return EqLinkingTable({"cc": cc, "cd": cd, "dc": dc, "dd": dd}, delta=delta)


def lp_tables(zy, zz, yy, delta: LaurentPoly) -> EqLinkingTable:
    """z-y linking tables; the self tables zz and yy must be hermitian."""
    return EqLinkingTable(
        {"zy": zy, "zz": zz, "yy": yy},
        delta=delta,
        hermitian_pairs=(("zz", "zz"), ("yy", "yy")),
    )


def lambda_e_prime(table: EqLinkingTable, g: int, alex: AlexanderData) -> SymThreePoly:
    """Cleared lambda'_e of the Dehn formula.

    (1/12) sum_{i,j} sum_{S3} (alpha_ij(x,y) + alpha_ij(1/x,1/y) + beta_ij(x,y))
    with alpha_ij = cc_ij(x) dd_ij(y) - cd_ij(x) dc_ij(y) and
    beta_ij = gamma_i(x) gamma_j(y), gamma_i = cd_ii - bar(cd_ii).
    """
    d = alex.annihilator
    cc, cd, dc, dd = table["cc"], table["cd"], table["dc"], table["dd"]
    gam = []
    for i in range(g):
        c = clear_bead(cd[i][i], d)
        gam.append(c - c.bar())
    total = SymThreePoly.zero()
    for i in range(g):
        for j in range(g):
            a = clear_bead(cc[i][j], d)
            b = clear_bead(dd[i][j], d)
            c = clear_bead(cd[i][j], d)
            e = clear_bead(dc[i][j], d)
            total = total + sym3_triple(a, b, d) - sym3_triple(c, e, d)
            total = total + sym3_triple(a.bar(), b.bar(), d) \
                - sym3_triple(c.bar(), e.bar(), d)
            total = total + sym3_triple(gam[i], gam[j], d)
    out = total * Fraction(1, 12)
    if not out.is_symmetric():
        raise PolyError("lambda'_e failed its symmetry check")
    return out


def dedekind_sum(q: int, p: int) -> Fraction:
    """s(q, p) = sum_{k=1}^{p-1} ((k/p))((kq/p))."""
    if p <= 0:
        raise PolyError("p must be positive")
    if gcd(q, p) != 1:
        raise PolyError("dedekind_sum needs gcd(q, p) = 1")

    def saw(num, den):
        if num % den == 0:
            return Fraction(0)
        return Fraction(num % den, den) - Fraction(1, 2)

    return sum((saw(k, p) * saw(k * q, p) for k in range(1, p)), Fraction(0))


# single tunable constant pinning the absolute normalization of lambda for
# lens spaces; only the sign is in doubt, the shape -s(q,p)/2 is fixed by
# lambda(L(1,q)) = 0 and orientation antisymmetry
LENS_LAMBDA_COEFF = Fraction(-1, 2)


def lens_lambda(p: int, q: int) -> Fraction:
    """lambda(L(p, q)) for coprime p, q; lambda(L(1, q)) = 0."""
    if p == 0:
        raise PolyError("lens space needs p != 0")
    if p < 0:
        p, q = -p, -q
    if gcd(p, q) != 1:
        raise PolyError("lens space needs gcd(p, q) = 1")
    return LENS_LAMBDA_COEFF * dedekind_sum(q, p)


def _ddd(alex: AlexanderData) -> SymThreePoly:
    d = alex.annihilator
    return from_single(d, "x") * from_single(d, "y") * from_single(d, "z")


def dehn_surgery_delta(p: int, q: int, table: EqLinkingTable, g: int,
                       alex: AlexanderData) -> SymThreePoly:
    """6 (q/p) lambda'_e + 6 lambda(L(p,-q)) delta(x)delta(y)delta(z)."""
    if p == 0:
        raise PolyError("p/q surgery needs p != 0")
    if gcd(p, q) != 1:
        raise PolyError("p and q must be coprime")
    out = Fraction(6 * q, p) * lambda_e_prime(table, g, alex)
    lens = lens_lambda(p, -q)
    if lens:
        out = out + 6 * lens * _ddd(alex)
    return out


def _augment(f: RationalFunction) -> Fraction:
    return f.value_at_one()


def lp_surgery_S(I_A: TripleForm, I_B: TripleForm, tables: EqLinkingTable,
                 alex: AlexanderData) -> SymThreePoly:
    """The LP surgery contraction S = -sum lk(i,j,k,l,m,n) I_A(i,j,k) I_B(l,m,n).

    The scalar lk(z_i, y_l) factors are the t=1 values of lk_e(z_i, y_l).
    """
    d = alex.annihilator
    zy, zz, yy = tables["zy"], tables["zz"], tables["yy"]
    if len(zy) != I_A.g or (zy and len(zy[0]) != I_B.g):
        raise PolyError("zy table shape must be g_A x g_B")
    czy = [[clear_bead(e, d) for e in row] for row in zy]
    czz = [[clear_bead(e, d) for e in row] for row in zz]
    cyy = [[clear_bead(e, d) for e in row] for row in yy]
    total = SymThreePoly.zero()
    rng_a = range(1, I_A.g + 1)
    rng_b = range(1, I_B.g + 1)
    for i in rng_a:
        for j in rng_a:
            for k in rng_a:
                ia = I_A(i, j, k)
                if not ia:
                    continue
                for l in rng_b:
                    for m in rng_b:
                        for n in rng_b:
                            ib = I_B(l, m, n)
                            if not ib:
                                continue
                            coef = ia * ib
                            fixed = (
                                from_single(czy[i - 1][l - 1], "x")
                                * from_single(czy[j - 1][m - 1], "y")
                                * from_single(czy[k - 1][n - 1], "z")
                            )
                            fixed = fixed + fixed.invert_variables()
                            scal = _augment(zy[i - 1][l - 1]) if isinstance(
                                zy[i - 1][l - 1], RationalFunction
                            ) else Fraction(zy[i - 1][l - 1].value_at_one())
                            if scal:
                                fixed = fixed + scal * sym3_triple(
                                    czz[j - 1][k - 1], cyy[m - 1][n - 1], d
                                )
                            total = total - coef * fixed
    if not total.is_symmetric():
        raise PolyError("LP surgery delta failed its symmetry check")
    return total


def clasper_S(tables: EqLinkingTable, alex: AlexanderData) -> SymThreePoly:
    """The Y-graph (borromean) specialization of the LP formula.

    sum_sigma sign(sigma) theta(zy[3][sigma(1)], zy[2][sigma(2)], zy[1][sigma(3)])
    + sum_{i,m} dumbbell(yy[m+1][m+2], zz[i+1][i+2], lk(y_m, z_i)), mod-3 indices.
    """
    d = alex.annihilator
    zy, zz, yy = tables["zy"], tables["zz"], tables["yy"]
    if len(zy) != 3 or any(len(r) != 3 for r in zy):
        raise PolyError("clasper zy table must be 3x3")
    total = SymThreePoly.zero()
    for sigma in permutations((1, 2, 3)):
        sign = _perm_sign(sigma)
        total = total + sign * theta_eval(
            zy[2][sigma[0] - 1], zy[1][sigma[1] - 1], zy[0][sigma[2] - 1], d
        )
    for i in range(3):
        for m in range(3):
            lam = _augment(zy[i][m]) if isinstance(zy[i][m], RationalFunction) \
                else Fraction(zy[i][m].value_at_one())
            if not lam:
                continue
            total = total + dumbbell_eval(
                yy[(m + 1) % 3][(m + 2) % 3], zz[(i + 1) % 3][(i + 2) % 3], lam, d
            )
    if not total.is_symmetric():
        raise PolyError("clasper delta failed its symmetry check")
    return total


def _perm_sign(sigma) -> int:
    s = 1
    for a in range(3):
        for b in range(a + 1, 3):
            if sigma[a] > sigma[b]:
                s = -s
    return s


def _light_context(alex: AlexanderData) -> QuotientContext:
    return QuotientContext(alex.delta, alex.annihilator, K=1)


def framing_variation(alex: AlexanderData, count: int) -> SymThreePoly:
    """Parallel change by `count` meridians: V = -(delta/2) t Delta'/Delta."""
    ctx = _light_context(alex)
    v = Fraction(-count, 2) * ctx.h
    if v.is_zero():
        return SymThreePoly.zero()
    return variation_element(v, ctx)


def cobordism_variation(pushoffs: Sequence[RationalFunction],
                        alex: AlexanderData) -> SymThreePoly:
    """Knot replacement across a cobordism with symplectic push-off linkings."""
    d = alex.annihilator
    v = LaurentPoly.zero()
    for f in pushoffs:
        c = clear_bead(f, d)
        v = v + c - c.bar()
    if v.bar() != -v:
        raise PolyError("cobordism variation is not antisymmetric")
    if v.is_zero():
        return SymThreePoly.zero()
    return variation_element(v, _light_context(alex))


# -- surgery scripts ---------------------------------------------------


@dataclass(frozen=True)
class DehnMove:
    p: int
    q: int
    table: EqLinkingTable
    g: int
    lam_delta: Optional[Fraction] = None


@dataclass(frozen=True)
class LPMove:
    I_A: TripleForm
    I_B: TripleForm
    tables: EqLinkingTable


@dataclass(frozen=True)
class ClasperMove:
    tables: EqLinkingTable


@dataclass(frozen=True)
class ConnectSumMove:
    lambda_N: Fraction


@dataclass(frozen=True)
class FramingTwistMove:
    count: int


@dataclass(frozen=True)
class CobordismMove:
    pushoffs: Tuple[RationalFunction, ...]


@dataclass
class TwoLoopState:
    delta: LaurentPoly
    annihilator: LaurentPoly
    Q2: SymThreePoly
    lam: Optional[Fraction]

    def augmentation(self) -> Fraction:
        return sym_augmentation(self.Q2)


def _move_delta(move, alex: AlexanderData) -> SymThreePoly:
    if isinstance(move, DehnMove):
        return dehn_surgery_delta(move.p, move.q, move.table, move.g, alex)
    if isinstance(move, LPMove):
        return lp_surgery_S(move.I_A, move.I_B, move.tables, alex)
    if isinstance(move, ClasperMove):
        return clasper_S(move.tables, alex)
    if isinstance(move, ConnectSumMove):
        lam = Fraction(move.lambda_N)
        return 6 * lam * _ddd(alex) if lam else SymThreePoly.zero()
    if isinstance(move, FramingTwistMove):
        return framing_variation(alex, move.count)
    if isinstance(move, CobordismMove):
        return cobordism_variation(move.pushoffs, alex)
    raise PolyError("unknown surgery move %r" % (move,))


def script_evaluate(moves: Sequence, base: AlexanderData) -> TwoLoopState:
    """Accumulate move deltas from the zero base value.

    lambda is tracked as long as every move determines its own lambda-delta:
    ConnectSum contributes lambda_N, the null moves contribute a sixth of
    their augmentation, and a Dehn move contributes a caller-supplied value
    or stops the tracking.
    """
    Q2 = SymThreePoly.zero()
    lam: Optional[Fraction] = Fraction(0)
    for move in moves:
        d = _move_delta(move, base)
        if not d.is_symmetric():
            raise PolyError("move delta failed its symmetry check")
        Q2 = Q2 + d
        if lam is None:
            continue
        if isinstance(move, ConnectSumMove):
            lam += Fraction(move.lambda_N)
        elif isinstance(move, DehnMove):
            lam = None if move.lam_delta is None else lam + Fraction(move.lam_delta)
        else:
            lam += sym_augmentation(d) / 6
    if lam is not None and sym_augmentation(Q2) != 6 * lam:
        raise PolyError("augmentation drifted from 6 lambda")
    return TwoLoopState(base.delta, base.annihilator, Q2, lam)

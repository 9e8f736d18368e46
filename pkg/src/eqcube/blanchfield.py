"""Equivariant linking numbers from Seifert data.

Two computations are provided: the meridional formula for curves in the
complement of the surface (through the matrix D = C^{-1}) and the push-off
table lk_e(z_i, z_j^+) for the surface basis itself, obtained from the
dual-basis formula with A^{-1} = [b_ij]:

    lk_e(z_j^+, z*_i) = d_ij/(1 - t^{-1}) - b_ij/(t^{1/2} - t^{-1/2})

followed by the basis change out of the dual basis with the intersection
form J.  The three logarithmic-derivative identities are exposed as
residuals; they vanish identically and pin every sign convention used here.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .alexander import (HALF, HALF_INV, SeifertData, _matrix_A, alexander_poly,
                        presentation_matrices)
from .laurent import LaurentPoly, PolyError, RationalFunction
from .linalg import montante_inverse

S_HALF = HALF - HALF_INV          # t^{1/2} - t^{-1/2}
T_ONE = LaurentPoly.t_power(1)


class CurveClass:
    """A curve in the surface complement, by its linkings with the basis."""

    __slots__ = ("coords",)

    def __init__(self, coords: Sequence):
        self.coords = tuple(Fraction(x) for x in coords)

    def __len__(self):
        return len(self.coords)


def eq_link_meridional(S: SeifertData, u: CurveClass, w: CurveClass) -> RationalFunction:
    """lk_e(m, n) = -(t^{1/2}-t^{-1/2}) sum_ij lk(m,z_i) D_ij lk(n,z_j)."""
    n = S.size
    if len(u) != n or len(w) != n:
        raise PolyError("curve coordinate length must be %d" % n)
    if n == 0:
        return RationalFunction(0)
    C, _ = presentation_matrices(S)
    det, adj = montante_inverse(C)
    num = LaurentPoly.zero()
    for i in range(n):
        if not u.coords[i]:
            continue
        for j in range(n):
            if w.coords[j]:
                num = num + adj[i][j] * (u.coords[i] * w.coords[j])
    out = RationalFunction(-S_HALF * num, det)
    _check_denominator(out, alexander_poly(S))
    return out


def _check_denominator(f: RationalFunction, delta: LaurentPoly):
    if not f.den.divides(delta):
        raise PolyError("denominator %s does not divide Delta" % f.den)


def dual_pushoff_tables(S: SeifertData):
    """(L+, L-, mid) in the dual basis: L±[i][j] = lk_e(z_j^±, z*_i).

    mid is the average of the two push-offs, whose diagonal computes the
    logarithmic derivative of Delta.
    """
    n = S.size
    if n == 0:
        return [], [], []
    _, A = presentation_matrices(S)
    det, adj = montante_inverse(A)
    b = [[RationalFunction(adj[i][j], det) for j in range(n)] for i in range(n)]
    plus_d = RationalFunction(T_ONE, T_ONE - 1)            # 1/(1 - t^{-1}) = t/(t-1)
    minus_d = RationalFunction(1, T_ONE - 1)               # 1/(t - 1)
    mid_d = RationalFunction(T_ONE + 1, 2 * (T_ONE - 1))
    s_inv = RationalFunction(1, S_HALF)
    lp, lm, mid = [], [], []
    for i in range(n):
        rp, rm, rmid = [], [], []
        for j in range(n):
            core = b[i][j] * s_inv
            if i == j:
                rp.append(plus_d - core)
                rm.append(minus_d - core)
                rmid.append(mid_d - core)
            else:
                rp.append(-core)
                rm.append(-core)
                rmid.append(-core)
        lp.append(rp)
        lm.append(rm)
        mid.append(rmid)
    return lp, lm, mid


def surface_pushoff_table(S: SeifertData):
    """Full table T with T[i][j] = lk_e(z_i, z_j^+), in the surface basis."""
    n = S.size
    lp, _, _ = dual_pushoff_tables(S)
    delta = alexander_poly(S) if n else LaurentPoly.one()
    T = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = RationalFunction(0)
            for k in range(n):
                if S.J[i][k]:
                    acc = acc - S.J[i][k] * lp[k][j].bar()
            _check_denominator(acc, delta)
            row.append(acc)
        T.append(row)
    return T


def log_derivative(delta: LaurentPoly) -> RationalFunction:
    """t Delta'/Delta."""
    return RationalFunction(T_ONE * delta.derivative(), delta)


def symplectic_basis(J) -> List[Tuple[List[Fraction], List[Fraction]]]:
    """Pairs (a_i, b_i) with a_i.J.b_i = 1, all other pairings zero."""
    n = len(J)

    def pair(u, v):
        return sum(
            u[i] * J[i][j] * v[j] for i in range(n) for j in range(n) if J[i][j]
        )

    basis = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    pairs = []
    while basis:
        a = basis.pop(0)
        k = next((i for i, v in enumerate(basis) if pair(a, v)), None)
        if k is None:
            raise PolyError("intersection form is degenerate")
        b = basis.pop(k)
        p = pair(a, b)
        b = [x / p for x in b]
        rest = []
        for v in basis:
            ca, cb = pair(b, v), pair(a, v)
            rest.append(
                [v[i] + ca * a[i] - cb * b[i] for i in range(n)]
            )
        basis = rest
        pairs.append((a, b))
    return pairs


def log_derivative_residuals(S: SeifertData):
    """(r1, r2, r3): the three identities for t Delta'/Delta; all zero.

    r1 compares against the diagonal of the averaged push-off table, r2
    against the trace formula, r3 against the symplectic-pair sum in the
    surface basis.  Each residual is assembled over a cleared common
    denominator, so the identity check is a single polynomial comparison.
    """
    n = S.size
    delta = alexander_poly(S)
    if n == 0:
        zero = RationalFunction(0)
        return zero, zero, zero
    det, adj = montante_inverse(_matrix_A(S))
    num_ld = T_ONE * delta.derivative()
    t1 = T_ONE - 1
    trace = sum((adj[i][i] for i in range(n)), LaurentPoly.zero())
    # r1: t D'/D - sum_i [ (n/2)(t+1)/(2(t-1))-style diagonal of mid ]
    #     sum_i mid_ii = (n/2)(t+1)/(t-1) - tr(A^{-1})/s
    half_n = Fraction(n, 2)
    n1 = (num_ld * t1 - half_n * (T_ONE + 1) * delta) * (det * S_HALF) \
        + trace * (delta * t1)
    d_common = delta * t1 * det * S_HALF
    r1 = RationalFunction(0) if n1.is_zero() else RationalFunction(n1, d_common)
    # r2: t D'/D - g(t+1)/(t-1) + tr(A^{-1})/s, identical clearing
    n2 = (num_ld * t1 - S.genus * (T_ONE + 1) * delta) * (det * S_HALF) \
        + trace * (delta * t1)
    r2 = RationalFunction(0) if n2.is_zero() else RationalFunction(n2, d_common)
    # r3: with T = -J bar(L+), lk_T(a, b) = 1/(t-1) - P_ab/(s bar(det)) for a
    # symplectic pair (a, b), where P_ab = a^T J bar(adj) b
    bdet = det.bar()
    badj = [[adj[i][j].bar() for j in range(n)] for i in range(n)]
    M = [
        [
            sum((S.J[i][k] * badj[k][j] for k in range(n) if S.J[i][k]),
                LaurentPoly.zero())
            for j in range(n)
        ]
        for i in range(n)
    ]
    P = LaurentPoly.zero()
    for a, b in symplectic_basis(S.J):
        for i in range(n):
            if not a[i]:
                continue
            for j in range(n):
                if b[j]:
                    P = P + M[i][j] * (a[i] * b[j])
    bP = P.bar()
    n3 = (num_ld * t1 - S.genus * (T_ONE + 1) * delta) * (S_HALF * det * bdet) \
        + (P * det + bP * bdet) * (delta * t1)
    d3 = d_common * bdet
    r3 = RationalFunction(0) if n3.is_zero() else RationalFunction(n3, d3)
    return r1, r2, r3


class EqLinkingTable:
    """Labelled matrices of equivariant linking numbers.

    Entries are rational functions in t whose reduced denominators divide
    Delta.  For labels listed in ``hermitian_pairs`` the two matrices (or a
    matrix with itself) must satisfy M[i][j] = bar(N[j][i]).
    """

    def __init__(self, tables: Dict[str, List[List[RationalFunction]]],
                 delta: LaurentPoly | None = None,
                 hermitian_pairs: Sequence[Tuple[str, str]] = ()):
        self.tables = {k: [list(row) for row in v] for k, v in tables.items()}
        if delta is not None:
            for name, mat in self.tables.items():
                for row in mat:
                    for e in row:
                        if not e.den.divides(delta):
                            raise PolyError(
                                "table %r: denominator %s does not divide Delta"
                                % (name, e.den)
                            )
        for a, b in hermitian_pairs:
            ma, mb = self.tables[a], self.tables[b]
            for i in range(len(ma)):
                for j in range(len(ma[i])):
                    if ma[i][j] != mb[j][i].bar():
                        raise PolyError(
                            "tables %r/%r are not hermitian at (%d, %d)" % (a, b, i, j)
                        )

    def __getitem__(self, name: str):
        return self.tables[name]

    def __contains__(self, name: str):
        return name in self.tables

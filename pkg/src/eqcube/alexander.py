"""Alexander polynomial, invariant factors and annihilator from a Seifert matrix.

Conventions.  V is the 2g x 2g matrix of linking numbers V_ij = lk(z_i^+, z_j)
for a basis (z_i) of the surface; J = V - V^T is the intersection form and is
required to be unimodular, which forces Delta(1) = 1.  The two presentation
matrices are

    C = t^{1/2} V - t^{-1/2} V^T          (det C = Delta up to a unit)
    A = -J^{-1} (t^{1/2} V^T - t^{-1/2} V)  (dual basis; det A = Delta exactly)

The sign in A is pinned by the trace identity checked in the blanchfield
module; the self-check det(A) = Delta up to a unit is enforced here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from .laurent import LaurentPoly, PolyError, RationalFunction, symmetric_normalize
from .linalg import bareiss_det, mat_mul, rational_det, rational_mat_inverse

HALF = LaurentPoly.t_power(Fraction(1, 2))
HALF_INV = LaurentPoly.t_power(Fraction(-1, 2))


class SeifertData:
    """Seifert linking matrix with its validated intersection form."""

    __slots__ = ("genus", "V", "J")

    def __init__(self, genus: int, V):
        genus = int(genus)
        if genus < 0:
            raise PolyError("genus must be nonnegative")
        n = 2 * genus
        if len(V) != n or any(len(row) != n for row in V):
            raise PolyError("Seifert matrix must be %dx%d for genus %d" % (n, n, genus))
        self.genus = genus
        self.V = [[Fraction(x) for x in row] for row in V]
        self.J = [
            [self.V[i][j] - self.V[j][i] for j in range(n)] for i in range(n)
        ]
        if n and rational_det(self.J) != 1:
            raise PolyError("intersection form V - V^T must have determinant 1")

    @property
    def size(self) -> int:
        return 2 * self.genus


@dataclass(frozen=True)
class AlexanderData:
    """Delta, its invariant factors, the annihilator and I_Delta."""

    delta: LaurentPoly
    factors: Tuple[LaurentPoly, ...]
    annihilator: LaurentPoly
    i_delta: RationalFunction


def _const_mat(m) -> List[List[LaurentPoly]]:
    return [[LaurentPoly.const(x) for x in row] for row in m]


def _matrix_C(S: SeifertData):
    n = S.size
    return [
        [HALF * S.V[i][j] - HALF_INV * S.V[j][i] for j in range(n)]
        for i in range(n)
    ]


def _matrix_A(S: SeifertData):
    n = S.size
    if n == 0:
        return []
    B = [
        [HALF * S.V[j][i] - HALF_INV * S.V[i][j] for j in range(n)]
        for i in range(n)
    ]
    Jinv = rational_mat_inverse(S.J)
    return mat_mul(_const_mat([[-x for x in row] for row in Jinv]), B)


def presentation_matrices(S: SeifertData):
    """(C, A): the Seifert-surface and dual-basis presentation matrices."""
    C = _matrix_C(S)
    A = _matrix_A(S)
    if S.size:
        # convention self-check: det(A) must be Delta up to a unit
        delta = alexander_poly(S)
        _, dsym = symmetric_normalize(bareiss_det(A))
        if dsym != delta:
            raise PolyError("dual-basis matrix failed the det(A) = Delta self-check")
    return C, A


def alexander_poly(S: SeifertData) -> LaurentPoly:
    """Symmetric representative of det(t^{1/2}V - t^{-1/2}V^T), value 1 at t=1."""
    n = S.size
    if n == 0:
        return LaurentPoly.one()
    C = [
        [HALF * S.V[i][j] - HALF_INV * S.V[j][i] for j in range(n)]
        for i in range(n)
    ]
    _, delta = symmetric_normalize(bareiss_det(C))
    if delta.value_at_one() != 1:
        raise PolyError("Delta(1) != 1; intersection form is not unimodular")
    return delta


def i_delta(delta: LaurentPoly) -> RationalFunction:
    """I_Delta = (1+t)/(1-t) + t Delta'/Delta; satisfies bar = -itself."""
    t = LaurentPoly.t_power(1)
    head = RationalFunction(1 + t, 1 - t)
    return head + RationalFunction(t * delta.derivative(), delta)


# -- Smith normal form over Q[t^{±1}] ----------------------------------


def _eye(n: int) -> List[List[LaurentPoly]]:
    return [
        [LaurentPoly.one() if i == j else LaurentPoly.zero() for j in range(n)]
        for i in range(n)
    ]


def smith_normal_form(M):
    """M = U * D * W over Q[t^{±1}], D diagonal with d_i | d_{i+1}.

    Entries must have integer exponents.  U and W are square invertible
    (unit determinant).  Pivots are chosen with minimal exponent spread,
    ties broken by lowest row then column index.
    """
    n = len(M)
    m = len(M[0]) if n else 0
    for row in M:
        for e in row:
            if not e.has_integer_exponents():
                raise PolyError("Smith form needs integer exponents; clear t^{1/2} first")
    D = [row[:] for row in M]
    U = _eye(n)
    W = _eye(m)

    def swap_rows(i, k):
        D[i], D[k] = D[k], D[i]
        for r in U:
            r[i], r[k] = r[k], r[i]

    def swap_cols(j, k):
        for r in D:
            r[j], r[k] = r[k], r[j]
        W[j], W[k] = W[k], W[j]

    def row_sub(i, k, q):
        # row_i -= q * row_k in D; U absorbs the inverse op
        D[i] = [a - q * b for a, b in zip(D[i], D[k])]
        for r in U:
            r[k] = r[k] + q * r[i]

    def col_sub(j, k, q):
        for r in D:
            r[j] = r[j] - q * r[k]
        W[k] = [a + q * b for a, b in zip(W[k], W[j])]

    def scale_row(k, unit):
        # row_k *= 1/unit; valid only for unit monomials
        inv = unit ** (-1)
        D[k] = [a * inv for a in D[k]]
        for r in U:
            r[k] = r[k] * unit

    for k in range(min(n, m)):
        while True:
            best = None
            for i in range(k, n):
                for j in range(k, m):
                    e = D[i][j]
                    if e.is_zero():
                        continue
                    key = (e.spread(), i, j)
                    if best is None or key < best[0]:
                        best = (key, i, j)
            if best is None:
                break
            _, pi, pj = best
            if pi != k:
                swap_rows(pi, k)
            if pj != k:
                swap_cols(pj, k)
            pivot = D[k][k]
            dirty = False
            for i in range(k + 1, n):
                if not D[i][k].is_zero():
                    q = D[i][k] // pivot
                    row_sub(i, k, q)
                    if not D[i][k].is_zero():
                        dirty = True
            for j in range(k + 1, m):
                if not D[k][j].is_zero():
                    q = D[k][j] // pivot
                    col_sub(j, k, q)
                    if not D[k][j].is_zero():
                        dirty = True
            if dirty:
                continue
            # pivot must divide the remaining block
            fixed = True
            for i in range(k + 1, n):
                if any(not pivot.divides(D[i][j]) for j in range(k + 1, m)):
                    row_sub(k, i, LaurentPoly.const(-1))
                    fixed = False
                    break
            if fixed:
                break
        if not D[k][k].is_zero():
            try:
                unit, psym = symmetric_normalize(D[k][k])
            except PolyError:
                p = D[k][k]
                lead = p.shift(-p.min_doubled).leading_coeff()
                unit = LaurentPoly({p.min_doubled: lead})
                psym = p.shift(-p.min_doubled) * (1 / lead)
            scale_row(k, unit)
            D[k][k] = psym
    return U, D, W


def invariant_factors(S: SeifertData) -> AlexanderData:
    """Full Alexander data: Delta, divisibility chain, annihilator, I_Delta."""
    delta = alexander_poly(S)
    n = S.size
    # presentation with half powers cleared by the global unit t^{1/2}
    t = LaurentPoly.t_power(1)
    M = [
        [t * S.V[i][j] - LaurentPoly.const(S.V[j][i]) for j in range(n)]
        for i in range(n)
    ]
    _, D, _ = smith_normal_form(M)
    factors = []
    for k in range(n):
        d = D[k][k]
        if d.is_zero():
            raise PolyError("degenerate presentation: zero invariant factor")
        if d.is_unit():
            continue
        if d.value_at_one() == 0 or not d.is_symmetric():
            raise PolyError("invariant factor %s cannot be normalized" % d)
        factors.append(d)
    ann = factors[-1] if factors else LaurentPoly.one()
    # sanity: chain and product
    prod = LaurentPoly.one()
    for a, b in zip(factors, factors[1:]):
        if not a.divides(b):
            raise PolyError("invariant factors do not form a divisibility chain")
    for f in factors:
        prod = prod * f
    if symmetric_normalize(prod)[1] != delta:
        raise PolyError("product of invariant factors disagrees with Delta")
    return AlexanderData(delta, tuple(factors), ann, i_delta(delta))


def alexander_from_polys(delta: LaurentPoly, ann: LaurentPoly) -> AlexanderData:
    """AlexanderData from explicitly given Delta and annihilator.

    Used when a manifold enters by its polynomials rather than a Seifert
    matrix.  The factor chain is not reconstructed.
    """
    _, delta = symmetric_normalize(delta)
    _, ann = symmetric_normalize(ann)
    if not ann.divides(delta):
        raise PolyError("annihilator must divide the Alexander polynomial")
    factors = () if ann == LaurentPoly.one() else (ann,)
    return AlexanderData(delta, factors, ann, i_delta(delta))


def no_two_torsion(factors) -> bool:
    """Each factor lies in Lambda or in (t^{1/2}+t^{-1/2}) Lambda."""
    half_sum = HALF + HALF_INV
    for f in factors:
        if f.has_integer_exponents():
            continue
        if not half_sum.divides(f) or not f.exact_div(half_sum).has_integer_exponents():
            return False
    return True

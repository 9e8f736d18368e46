"""Exact matrix routines over Laurent polynomials and their fraction field."""

from __future__ import annotations

from fractions import Fraction
from typing import List

from .laurent import LaurentPoly, PolyError, RationalFunction

Matrix = List[List[LaurentPoly]]


def identity(n: int) -> Matrix:
    return [
        [LaurentPoly.one() if i == j else LaurentPoly.zero() for j in range(n)]
        for i in range(n)
    ]


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = a[i][0] * b[0][j]
            for s in range(1, k):
                acc = acc + a[i][s] * b[s][j]
            row.append(acc)
        out.append(row)
    return out


def bareiss_det(m: Matrix) -> LaurentPoly:
    """Fraction-free determinant; entries are Laurent polynomials."""
    n = len(m)
    if n == 0:
        return LaurentPoly.one()
    a = [row[:] for row in m]
    sign = 1
    prev = LaurentPoly.one()
    for k in range(n - 1):
        if a[k][k].is_zero():
            for i in range(k + 1, n):
                if not a[i][k].is_zero():
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return LaurentPoly.zero()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]).exact_div(prev)
            a[i][k] = LaurentPoly.zero()
        prev = a[k][k]
    d = a[n - 1][n - 1]
    return d if sign == 1 else -d


def montante_inverse(m: Matrix):
    """(det, adjugate) by the fraction-free Montante/Bareiss-Jordan scheme.

    m^{-1} = adjugate / det over the fraction field.
    """
    n = len(m)
    if n == 0:
        return LaurentPoly.one(), []
    w = [row[:] + [LaurentPoly.one() if i == j else LaurentPoly.zero() for j in range(n)]
         for i, row in enumerate(m)]
    sign = 1
    prev = LaurentPoly.one()
    for k in range(n):
        if w[k][k].is_zero():
            for i in range(k + 1, n):
                if not w[i][k].is_zero():
                    w[k], w[i] = w[i], w[k]
                    sign = -sign
                    break
            else:
                raise PolyError("singular matrix")
        pivot = w[k][k]
        for i in range(n):
            if i == k:
                continue
            wik = w[i][k]
            for j in range(2 * n):
                if j == k:
                    continue
                w[i][j] = (pivot * w[i][j] - wik * w[k][j]).exact_div(prev)
            w[i][k] = LaurentPoly.zero()
        prev = pivot
    det = w[n - 1][n - 1]
    adj = [[w[i][n + j] for j in range(n)] for i in range(n)]
    if sign == -1:
        det = -det
        adj = [[-e for e in row] for row in adj]
    return det, adj


def inverse_rf(m: Matrix):
    """Matrix inverse as reduced rational functions."""
    det, adj = montante_inverse(m)
    return [[RationalFunction(e, det) for e in row] for row in adj]


def rational_mat_inverse(m: List[List[Fraction]]) -> List[List[Fraction]]:
    """Gauss-Jordan inverse of a rational scalar matrix."""
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k]), None)
        if piv is None:
            raise PolyError("singular rational matrix")
        a[k], a[piv] = a[piv], a[k]
        inv = 1 / a[k][k]
        a[k] = [x * inv for x in a[k]]
        for i in range(n):
            if i != k and a[i][k]:
                f = a[i][k]
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return [row[n:] for row in a]


def rational_det(m: List[List[Fraction]]) -> Fraction:
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    det = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k]), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det *= a[k][k]
        inv = 1 / a[k][k]
        for i in range(k + 1, n):
            if a[i][k]:
                f = a[i][k] * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return det

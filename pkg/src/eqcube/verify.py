"""Randomized identity suite over Seifert data.

The generator samples an integer matrix W and adds the standard symplectic
form on the upper triangle, so V - V^T is always unimodular by construction.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import List, Optional

from .alexander import SeifertData, invariant_factors
from .blanchfield import CurveClass, eq_link_meridional, log_derivative_residuals
from .laurent import LaurentPoly, PolyError, RationalFunction
from .quotient import ihx_residual


def random_seifert(rng: random.Random, genus: Optional[int] = None,
                   entry_bound: int = 2) -> SeifertData:
    """Random Seifert matrix with V - V^T the standard symplectic form."""
    g = rng.randint(1, 4) if genus is None else genus
    n = 2 * g
    V = [[rng.randint(-entry_bound, entry_bound) for _ in range(n)] for _ in range(n)]
    # symmetrize, then put the symplectic form on the upper triangle
    for i in range(n):
        for j in range(i + 1, n):
            V[j][i] = V[i][j]
    for i in range(g):
        V[2 * i][2 * i + 1] += 1
    return SeifertData(g, V)


def random_bead(rng: random.Random, span: int = 2,
                coeff_bound: int = 3) -> LaurentPoly:
    return LaurentPoly(
        {2 * k: rng.randint(-coeff_bound, coeff_bound) for k in range(-span, span + 1)}
    )


def verify_suite(S: SeifertData, trials: int = 10, seed: int = 0) -> dict:
    """Run every identity check; report pass/fail per check with witnesses."""
    rng = random.Random(seed)
    checks = []
    failures = []

    def record(name: str, ok: bool, witness: str = ""):
        checks.append(name)
        if not ok:
            failures.append({"check": name, "witness": witness})

    r1, r2, r3 = log_derivative_residuals(S)
    record("log_derivative_r1", r1.is_zero(), str(r1))
    record("log_derivative_r2", r2.is_zero(), str(r2))
    record("remlog_r3", r3.is_zero(), str(r3))
    herm_ok = True
    witness = ""
    for _ in range(trials):
        u = CurveClass([rng.randint(-2, 2) for _ in range(S.size)])
        w = CurveClass([rng.randint(-2, 2) for _ in range(S.size)])
        lhs = eq_link_meridional(S, u, w)
        rhs = eq_link_meridional(S, w, u).bar()
        if lhs != rhs:
            herm_ok = False
            witness = "u=%s w=%s" % (u.coords, w.coords)
            break
    record("hermitian", herm_ok, witness)
    try:
        ann = invariant_factors(S).annihilator
    except PolyError:
        ann = LaurentPoly.one()
    ihx_ok = True
    witness = ""
    for _ in range(trials):
        P = RationalFunction(random_bead(rng), ann)
        Q = RationalFunction(random_bead(rng), ann)
        lam = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
        if not ihx_residual(P, Q, lam, ann).is_zero():
            ihx_ok = False
            witness = "P=%s Q=%s lam=%s" % (P, Q, lam)
            break
    record("ihx", ihx_ok, witness)
    return {
        "residuals_zero": not failures,
        "checks": checks,
        "failures": failures,
    }

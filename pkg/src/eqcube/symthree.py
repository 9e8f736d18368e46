"""The ring Q[x^{±1}, y^{±1}, z^{±1}] / (xyz = 1) and its symmetric part.

Elements are stored in the two variables x, y; z is always eliminated via
z = (xy)^{-1}, so a monomial is an integer exponent pair (i, j) for x^i y^j.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Tuple

from .laurent import LaurentPoly, PolyError, _split_terms, _TERM_RE

Monomial = Tuple[int, int]

# images of (x, y) as monomials, for the substitutions used below
_ID = ((1, 0), (0, 1))
_SWAP_XY = ((0, 1), (1, 0))
_SWAP_YZ = ((1, 0), (-1, -1))      # x -> x, y -> z
_SWAP_XZ = ((-1, -1), (0, 1))      # x -> z, y -> y
_ROT = ((0, 1), (-1, -1))          # x -> y -> z -> x
_ROT2 = ((-1, -1), (1, 0))
_INV = ((-1, 0), (0, -1))

PERMUTATIONS = (_ID, _SWAP_XY, _SWAP_YZ, _SWAP_XZ, _ROT, _ROT2)


class SymThreePoly:
    """Element of Q[x^{±1}, y^{±1}, z^{±1}]/(xyz=1), stored in (x, y)."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Dict[Monomial, Fraction] | None = None):
        c = {}
        if coeffs:
            for m, v in coeffs.items():
                v = Fraction(v)
                if v:
                    c[(int(m[0]), int(m[1]))] = v
        self._c = c

    @classmethod
    def zero(cls) -> "SymThreePoly":
        return cls()

    @classmethod
    def const(cls, q) -> "SymThreePoly":
        return cls({(0, 0): Fraction(q)})

    @classmethod
    def monomial(cls, i: int, j: int, coeff=1) -> "SymThreePoly":
        return cls({(i, j): Fraction(coeff)})

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def coeffs(self) -> Dict[Monomial, Fraction]:
        return dict(self._c)

    def _coerce(self, other):
        if isinstance(other, SymThreePoly):
            return other
        if isinstance(other, (int, Fraction)):
            return SymThreePoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._c)
        for m, v in other._c.items():
            out[m] = out.get(m, Fraction(0)) + v
        return SymThreePoly(out)

    __radd__ = __add__

    def __neg__(self):
        return SymThreePoly({m: -v for m, v in self._c.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return SymThreePoly({m: v * q for m, v in self._c.items()})
        if not isinstance(other, SymThreePoly):
            return NotImplemented
        out: Dict[Monomial, Fraction] = {}
        for (i1, j1), v1 in self._c.items():
            for (i2, j2), v2 in other._c.items():
                m = (i1 + i2, j1 + j2)
                out[m] = out.get(m, Fraction(0)) + v1 * v2
        return SymThreePoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def substitute(self, images) -> "SymThreePoly":
        """Apply x -> x^a y^b, y -> x^c y^d with images = ((a,b),(c,d))."""
        (a, b), (c, d) = images
        out: Dict[Monomial, Fraction] = {}
        for (i, j), v in self._c.items():
            m = (a * i + c * j, b * i + d * j)
            out[m] = out.get(m, Fraction(0)) + v
        return SymThreePoly(out)

    def invert_variables(self) -> "SymThreePoly":
        """(x, y, z) -> (x^{-1}, y^{-1}, z^{-1})."""
        return self.substitute(_INV)

    def is_permutation_symmetric(self) -> bool:
        """Invariance under the six permutations of (x, y, z)."""
        return self == self.substitute(_SWAP_XY) and self == self.substitute(
            _SWAP_YZ
        )

    def is_symmetric(self) -> bool:
        """Invariance under all six variable permutations and inversion."""
        return self.is_permutation_symmetric() and self == self.invert_variables()

    def __str__(self):
        return print_sym(self)

    def __repr__(self):
        return "SymThreePoly(%s)" % print_sym(self)


def from_single(p: LaurentPoly, var: str) -> SymThreePoly:
    """Embed a one-variable polynomial as p(x), p(y) or p(z)."""
    if not p.has_integer_exponents():
        raise PolyError("half-integer exponents cannot be embedded in x,y,z")
    out: Dict[Monomial, Fraction] = {}
    for e, c in p.terms():
        n = int(e)
        if var == "x":
            m = (n, 0)
        elif var == "y":
            m = (0, n)
        elif var == "z":
            m = (-n, -n)
        else:
            raise PolyError("unknown variable %r" % var)
        out[m] = out.get(m, Fraction(0)) + c
    return SymThreePoly(out)


def sym3_sum(e: SymThreePoly) -> SymThreePoly:
    """Sum of the six variable-permutation images of e."""
    total = SymThreePoly.zero()
    for images in PERMUTATIONS:
        total = total + e.substitute(images)
    return total


def sym3_triple(p: LaurentPoly, q: LaurentPoly, r: LaurentPoly) -> SymThreePoly:
    """Sum over the six assignments of (x, y, z) to the slots of p(·)q(·)r(·)."""
    from itertools import permutations

    total = SymThreePoly.zero()
    for (u, v, w) in permutations(("x", "y", "z")):
        total = total + from_single(p, u) * from_single(q, v) * from_single(r, w)
    return total


def specialize_numeric(e: SymThreePoly, x: Fraction, y: Fraction) -> Fraction:
    """Evaluate at rational x, y (z = 1/(xy))."""
    if x == 0 or y == 0:
        raise PolyError("evaluation at zero")
    return sum((v * x ** i * y ** j for (i, j), v in e.coeffs().items()), Fraction(0))


def augmentation(e: SymThreePoly) -> Fraction:
    """Evaluation at (x, y, z) = (1, 1, 1)."""
    return sum(e.coeffs().values(), Fraction(0))


def specialize_x_xinv_1(e: SymThreePoly) -> LaurentPoly:
    """Substitute (x, y, z) = (x, x^{-1}, 1)."""
    out: dict = {}
    for (i, j), v in e.coeffs().items():
        k = 2 * (i - j)
        out[k] = out.get(k, Fraction(0)) + v
    return LaurentPoly(out)


def div_one_minus_xy(b: SymThreePoly) -> SymThreePoly:
    """Exact division by (1 - xy); PolyError when not divisible."""
    if b.is_zero():
        return SymThreePoly.zero()
    # collect coefficients of x^i as Laurent polynomials in y
    cols: Dict[int, dict] = {}
    for (i, j), v in b.coeffs().items():
        cols.setdefault(i, {})[2 * j] = v
    lo, hi = min(cols), max(cols)
    q_prev = LaurentPoly.zero()
    y1 = LaurentPoly.t_power(1)
    out: Dict[Monomial, Fraction] = {}
    for i in range(lo, hi + 1):
        c_i = LaurentPoly(cols.get(i, {}))
        q_i = c_i + y1 * q_prev
        if i < hi:
            for e, c in q_i.terms():
                out[(i, int(e))] = c
        else:
            if not q_i.is_zero():
                raise PolyError("not divisible by (1 - xy)")
        q_prev = q_i
    return SymThreePoly(out)


# -- text form ---------------------------------------------------------


def parse_sym(text: str) -> SymThreePoly:
    """Parse the two-variable grammar (variables x and y; z is forbidden)."""
    out: Dict[Monomial, Fraction] = {}
    for sign, chunk in _split_terms(text):
        coeff = Fraction(1)
        i = j = 0
        factors = chunk.split("*") if chunk else [""]
        # re-join splits that happened inside a coefficient like "3/2*x"
        pos = 0
        seen_var = set()
        for fac in factors:
            if not fac:
                raise PolyError("syntax error in %r at %r" % (text, chunk))
            m = _TERM_RE.match(fac)
            if not m:
                raise PolyError("syntax error in %r at %r" % (text, chunk))
            if m.group("var") is None:
                if m.group("coeff") is None or pos != 0:
                    raise PolyError("syntax error in %r at %r" % (text, chunk))
                coeff *= Fraction(m.group("coeff"))
            else:
                var = m.group("var")
                if var == "z":
                    raise PolyError("z is not allowed on input; use (xy)^-1")
                if var not in ("x", "y") or var in seen_var:
                    raise PolyError("syntax error in %r at %r" % (text, chunk))
                seen_var.add(var)
                if m.group("coeff") is not None:
                    coeff *= Fraction(m.group("coeff"))
                raw = m.group("exp")
                if raw is not None and (raw.startswith("{") or raw.startswith("(")):
                    raise PolyError("half exponents are not allowed in x,y terms")
                n = 1 if raw is None else int(raw)
                if var == "x":
                    i += n
                else:
                    j += n
            pos += 1
        out[(i, j)] = out.get((i, j), Fraction(0)) + sign * coeff
    return SymThreePoly(out)


def print_sym(e: SymThreePoly) -> str:
    """Canonical text, terms ordered by ascending (i, j)."""
    if e.is_zero():
        return "0"
    pieces = []
    for (i, j) in sorted(e.coeffs()):
        c = e.coeffs()[(i, j)]
        factors = []
        if i:
            factors.append("x" if i == 1 else "x^%d" % i)
        if j:
            factors.append("y" if j == 1 else "y^%d" % j)
        if not factors:
            body = str(abs(c))
        else:
            mono = "*".join(factors)
            body = mono if abs(c) == 1 else "%s*%s" % (abs(c), mono)
        pieces.append(("-" if c < 0 else "+", body))
    first_sign, first_body = pieces[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in pieces[1:]:
        text += " %s %s" % (sign, body)
    return text

"""Exact one-variable Laurent polynomials with half-integer exponents.

A polynomial is a finite sum of terms ``c * t^e`` with rational ``c`` and
``e`` in (1/2)Z.  Internally every exponent is stored doubled, so the
coefficient dictionary is keyed by integers and all gcd/division routines
run in the ordinary Laurent ring Q[u^{± 1}] with u = t^{1/2}.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Iterator, Tuple, Union

Scalar = Union[int, Fraction]


class PolyError(ValueError):
    """Invalid polynomial input or operation."""


class LaurentPoly:
    """Element of Q[t^{1/2}, t^{-1/2}] restricted to exponents in (1/2)Z."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: dict | None = None):
        # keys: doubled exponents (int), values: nonzero Fraction
        c = {}
        if coeffs:
            for e2, v in coeffs.items():
                v = Fraction(v)
                if v:
                    c[int(e2)] = v
        self._c = c

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def const(cls, q: Scalar) -> "LaurentPoly":
        return cls({0: Fraction(q)})

    @classmethod
    def t_power(cls, e: Scalar, coeff: Scalar = 1) -> "LaurentPoly":
        """coeff * t^e, where 2e must be an integer."""
        e = Fraction(e)
        if (2 * e).denominator != 1:
            raise PolyError("exponent must have denominator 1 or 2: %s" % e)
        return cls({int(2 * e): Fraction(coeff)})

    @classmethod
    def from_terms(cls, terms: Iterable[Tuple[Scalar, Scalar]]) -> "LaurentPoly":
        """Build from (exponent, coefficient) pairs; exponents in (1/2)Z."""
        out: dict = {}
        for e, c in terms:
            e = Fraction(e)
            if (2 * e).denominator != 1:
                raise PolyError("exponent must have denominator 1 or 2: %s" % e)
            k = int(2 * e)
            out[k] = out.get(k, Fraction(0)) + Fraction(c)
        return cls(out)

    # -- inspection ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def terms(self) -> Iterator[Tuple[Fraction, Fraction]]:
        """(exponent, coefficient) pairs in ascending exponent order."""
        for e2 in sorted(self._c):
            yield Fraction(e2, 2), self._c[e2]

    def doubled(self) -> dict:
        return dict(self._c)

    @property
    def min_doubled(self) -> int:
        if not self._c:
            raise PolyError("zero polynomial has no lowest exponent")
        return min(self._c)

    @property
    def max_doubled(self) -> int:
        if not self._c:
            raise PolyError("zero polynomial has no highest exponent")
        return max(self._c)

    def spread(self) -> int:
        """Difference between highest and lowest doubled exponent."""
        return self.max_doubled - self.min_doubled

    def has_integer_exponents(self) -> bool:
        return all(e2 % 2 == 0 for e2 in self._c)

    def is_unit(self) -> bool:
        """True for q*t^{k/2}, q != 0."""
        return len(self._c) == 1

    def is_symmetric(self) -> bool:
        return self == self.bar()

    def leading_coeff(self) -> Fraction:
        return self._c[self.max_doubled]

    # -- ring operations ----------------------------------------------

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._c)
        for e2, v in other._c.items():
            out[e2] = out.get(e2, Fraction(0)) + v
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e2: -v for e2, v in self._c.items()})

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
            return LaurentPoly({e2: v * q for e2, v in self._c.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: dict = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                k = e1 + e2
                out[k] = out.get(k, Fraction(0)) + v1 * v2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if not self.is_unit():
                raise PolyError("negative power of a non-unit")
            e2 = self.min_doubled
            return LaurentPoly({n * e2: self._c[e2] ** n})
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    # -- involution, calculus, evaluation -----------------------------

    def bar(self) -> "LaurentPoly":
        """The involution t -> t^{-1}."""
        return LaurentPoly({-e2: v for e2, v in self._c.items()})

    def derivative(self) -> "LaurentPoly":
        """Formal d/dt."""
        return LaurentPoly(
            {e2 - 2: v * Fraction(e2, 2) for e2, v in self._c.items() if e2}
        )

    def shift(self, e2: int) -> "LaurentPoly":
        """Multiply by t^{e2/2}."""
        return LaurentPoly({k + e2: v for k, v in self._c.items()})

    def value_at_one(self) -> Fraction:
        return sum(self._c.values(), Fraction(0))

    def __call__(self, t: Scalar) -> Fraction:
        """Evaluate at a nonzero rational; requires integer exponents."""
        if not self.has_integer_exponents():
            raise PolyError("cannot evaluate half-integer exponents at a rational")
        t = Fraction(t)
        if t == 0:
            raise PolyError("evaluation at t=0")
        return sum((v * t ** (e2 // 2) for e2, v in self._c.items()), Fraction(0))

    # -- euclidean structure (in u = t^{1/2}) -------------------------

    def _dense(self) -> Tuple[int, list]:
        """(lowest doubled exponent, dense coefficient list upward)."""
        lo, hi = self.min_doubled, self.max_doubled
        dense = [self._c.get(e2, Fraction(0)) for e2 in range(lo, hi + 1)]
        return lo, dense

    def divmod(self, other: "LaurentPoly"):
        """Division with remainder in Q[u^{±1}], u = t^{1/2}."""
        if other.is_zero():
            raise PolyError("division by zero polynomial")
        if self.is_zero():
            return LaurentPoly.zero(), LaurentPoly.zero()
        lo_a, a = self._dense()
        lo_b, b = other._dense()
        if len(a) < len(b):
            return LaurentPoly.zero(), self
        q = [Fraction(0)] * (len(a) - len(b) + 1)
        r = list(a)
        lead = b[-1]
        for i in range(len(a) - len(b), -1, -1):
            c = r[i + len(b) - 1] / lead
            if c:
                q[i] = c
                for j, bj in enumerate(b):
                    r[i + j] -= c * bj
        quot = LaurentPoly({lo_a - lo_b + i: c for i, c in enumerate(q)})
        rem = LaurentPoly({lo_a + i: c for i, c in enumerate(r[: len(b) - 1])})
        return quot, rem

    def __floordiv__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self.divmod(other)[0]

    def __mod__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self.divmod(other)[1]

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise PolyError("inexact polynomial division")
        return q

    def divides(self, other: "LaurentPoly") -> bool:
        if self.is_zero():
            return other.is_zero()
        return other.is_zero() or other.divmod(self)[1].is_zero()

    def monic_lowest(self) -> "LaurentPoly":
        """Unit-normalize: lowest exponent 0 and leading coefficient 1."""
        if self.is_zero():
            return self
        p = self.shift(-self.min_doubled)
        return p * (1 / p.leading_coeff())


def poly_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Monic-lowest gcd in Q[u^{±1}]."""
    a = a.monic_lowest()
    b = b.monic_lowest()
    while b:
        a, b = b, (a % b)
        if b:
            b = b.monic_lowest()
    return a.monic_lowest() if a else LaurentPoly.zero()


def symmetric_normalize(p: LaurentPoly):
    """Split p = unit * psym with bar(psym) = psym.

    The unit is q * t^{k/2}.  If psym(1) != 0 the pair is rescaled so that
    psym(1) = 1.  Raises PolyError when no bar-fixed unit multiple exists.
    """
    if p.is_zero():
        raise PolyError("cannot normalize the zero polynomial")
    lo, hi = p.min_doubled, p.max_doubled
    if (lo + hi) % 2:
        raise PolyError(
            "no symmetric unit-multiple: exponent span %s/2..%s/2 has no "
            "half-integer center" % (lo, hi)
        )
    center = (lo + hi) // 2
    psym = p.shift(-center)
    if not psym.is_symmetric():
        raise PolyError("no symmetric unit-multiple: t^{%d/2}-shifted polynomial "
                        "is not bar-invariant" % (-center))
    scale = psym.value_at_one()
    if scale:
        psym = psym * (1 / scale)
    else:
        scale = Fraction(1)
    unit = LaurentPoly({center: scale})
    return unit, psym


class RationalFunction:
    """Reduced fraction of Laurent polynomials.

    The denominator is canonical: lowest exponent 0, leading coefficient 1.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _reduced=False):
        if isinstance(num, (int, Fraction)):
            num = LaurentPoly.const(num)
        if den is None:
            den = LaurentPoly.one()
        elif isinstance(den, (int, Fraction)):
            den = LaurentPoly.const(den)
        if den.is_zero():
            raise PolyError("zero denominator")
        if not _reduced:
            num, den = self._reduce(num, den)
        self.num = num
        self.den = den

    @staticmethod
    def _reduce(num: LaurentPoly, den: LaurentPoly):
        if num.is_zero():
            return LaurentPoly.zero(), LaurentPoly.one()
        g = poly_gcd(num, den)
        if not (g == LaurentPoly.one()):
            num = num.exact_div(g)
            den = den.exact_div(g)
        shift = -den.min_doubled
        lead = den.shift(shift).leading_coeff()
        num = num.shift(shift) * (1 / lead)
        den = den.shift(shift) * (1 / lead)
        return num, den

    @classmethod
    def from_poly(cls, p: LaurentPoly) -> "RationalFunction":
        return cls(p, LaurentPoly.one(), _reduced=True)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return bool(self.num)

    def is_polynomial(self) -> bool:
        return self.den == LaurentPoly.one()

    def as_poly(self) -> LaurentPoly:
        if not self.is_polynomial():
            raise PolyError("not a polynomial: denominator %s" % self.den)
        return self.num

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (int, Fraction, LaurentPoly)):
            return RationalFunction(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise PolyError("division by zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        return other / self

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def bar(self) -> "RationalFunction":
        return RationalFunction(self.num.bar(), self.den.bar())

    def value_at_one(self) -> Fraction:
        d = self.den.value_at_one()
        if d == 0:
            raise PolyError("pole at t=1")
        return self.num.value_at_one() / d

    def __call__(self, t: Scalar) -> Fraction:
        d = self.den(t)
        if d == 0:
            raise PolyError("pole at t=%s" % t)
        return self.num(t) / d

    def __str__(self):
        return print_fraction(self)

    def __repr__(self):
        return "RationalFunction(%s)" % print_fraction(self)


# -- text form ---------------------------------------------------------

_TERM_RE = re.compile(
    r"""^
    (?:(?P<coeff>\d+(?:/\d+)?)\*?)?           # optional rational coefficient
    (?:(?P<var>[a-z])                         # variable letter
       (?:\^(?P<exp>-?\d+                     # integer exponent
            |\{-?\d+/2\}                      # {n/2}
            |\(-?\d+/2\)))?                   # (n/2)
    )?
    $""",
    re.VERBOSE,
)


def _split_terms(text: str):
    """Split on top-level +/-, returning (sign, chunk) pairs."""
    s = text.replace("−", "-").replace(" ", "")
    if not s:
        raise PolyError("empty polynomial text")
    terms = []
    sign = 1
    i = 0
    if s[0] in "+-":
        sign = -1 if s[0] == "-" else 1
        i = 1
    start = i
    while i < len(s):
        if s[i] in "+-" and i > start and s[i - 1] not in "^{(*/":
            terms.append((sign, s[start:i]))
            sign = -1 if s[i] == "-" else 1
            start = i + 1
        i += 1
    terms.append((sign, s[start:]))
    return terms


def _parse_exponent(raw: str | None) -> int:
    """Return the doubled exponent."""
    if raw is None:
        return 2
    if raw.startswith("{") or raw.startswith("("):
        return int(raw[1:-3])
    return 2 * int(raw)


def parse_poly(text: str, var: str = "t") -> LaurentPoly:
    """Parse the canonical one-variable polynomial grammar."""
    out: dict = {}
    for sign, chunk in _split_terms(text):
        if not chunk:
            raise PolyError("syntax error in %r: empty term" % text)
        m = _TERM_RE.match(chunk)
        if not m or (m.group("var") not in (None, var)) or (
            m.group("coeff") is None and m.group("var") is None
        ):
            raise PolyError("syntax error in %r at term %r" % (text, chunk))
        coeff = Fraction(m.group("coeff")) if m.group("coeff") else Fraction(1)
        e2 = _parse_exponent(m.group("exp")) if m.group("var") else 0
        out[e2] = out.get(e2, Fraction(0)) + sign * coeff
    return LaurentPoly(out)


def _format_exponent(e2: int) -> str:
    if e2 % 2 == 0:
        return str(e2 // 2)
    return "{%d/2}" % e2


def _format_coeff(c: Fraction) -> str:
    return str(c)


def print_poly(p: LaurentPoly, var: str = "t") -> str:
    """Canonical text: ascending exponents, '+'/'-' separated."""
    if p.is_zero():
        return "0"
    pieces = []
    for (e, c) in p.terms():
        e2 = int(2 * e)
        if e2 == 0:
            body = _format_coeff(abs(c))
        else:
            vp = var if e2 == 2 else "%s^%s" % (var, _format_exponent(e2))
            body = vp if abs(c) == 1 else "%s*%s" % (_format_coeff(abs(c)), vp)
        pieces.append(("-" if c < 0 else "+", body))
    first_sign, first_body = pieces[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in pieces[1:]:
        text += " %s %s" % (sign, body)
    return text


def parse_fraction(text: str, var: str = "t") -> RationalFunction:
    """Parse 'P', or '(P)/(Q)' with both sides in the polynomial grammar."""
    s = text.strip()
    if ")/(" in s and s.startswith("(") and s.endswith(")"):
        left, right = s.split(")/(", 1)
        return RationalFunction(parse_poly(left[1:], var), parse_poly(right[:-1], var))
    return RationalFunction.from_poly(parse_poly(s, var))


def print_fraction(f: RationalFunction, var: str = "t") -> str:
    if f.is_polynomial():
        return print_poly(f.num, var)
    return "(%s)/(%s)" % (print_poly(f.num, var), print_poly(f.den, var))

"""Exact coefficient arithmetic.

Integer Laurent polynomials in q, their fraction field, balanced
q-integers and q-factorials, and evaluation at a rational q.  All values
are immutable; every operation returns a new value, so sharing between
threads needs no synchronization.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

__all__ = [
    "LaurentPoly",
    "RatFunc",
    "ScalarField",
    "qint",
    "qfact",
    "specialize",
    "parse_laurent",
    "parse_ratfunc",
]

# Desk-scale guard: exponents anywhere near this indicate a runaway computation.
_EXPONENT_LIMIT = 10**6


class LaurentPoly:
    """Sparse integer Laurent polynomial in q (exponent -> coefficient map).

    Coefficients are arbitrary-precision ints; no stored coefficient is zero.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[int, int] | None = None):
        clean: dict[int, int] = {}
        if terms:
            for e, c in terms.items():
                if c:
                    assert -_EXPONENT_LIMIT < e < _EXPONENT_LIMIT, f"exponent {e} out of bounds"
                    clean[e] = c
        self._terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> LaurentPoly:
        return _L_ZERO

    @classmethod
    def one(cls) -> LaurentPoly:
        return _L_ONE

    @classmethod
    def const(cls, c: int) -> LaurentPoly:
        return cls({0: c})

    @classmethod
    def q_power(cls, e: int) -> LaurentPoly:
        return cls({e: 1})

    # -- inspection --------------------------------------------------------

    def terms(self) -> dict[int, int]:
        """Copy of the exponent -> coefficient map."""
        return dict(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_one(self) -> bool:
        return self._terms == {0: 1}

    @property
    def is_constant(self) -> bool:
        return all(e == 0 for e in self._terms)

    def min_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return min(self._terms)

    def max_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return max(self._terms)

    def coeff(self, e: int) -> int:
        return self._terms.get(e, 0)

    def content(self) -> int:
        """gcd of the integer coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self._terms.values():
            g = gcd(g, c)
        return g

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        res = LaurentPoly.__new__(LaurentPoly)
        res._terms = out
        return res

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        res = LaurentPoly.__new__(LaurentPoly)
        res._terms = {e: -c for e, c in self._terms.items()}
        return res

    def __sub__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int) -> LaurentPoly:
        return LaurentPoly.const(other) - self

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            if other == 0:
                return _L_ZERO
            res = LaurentPoly.__new__(LaurentPoly)
            res._terms = {e: c * other for e, c in self._terms.items()}
            return res
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        assert all(-_EXPONENT_LIMIT < e < _EXPONENT_LIMIT for e in out)
        res = LaurentPoly.__new__(LaurentPoly)
        res._terms = out
        return res

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            raise ValueError("negative powers need the fraction field")
        out = _L_ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shifted(self, k: int) -> LaurentPoly:
        """Multiply by q^k."""
        res = LaurentPoly.__new__(LaurentPoly)
        res._terms = {e + k: c for e, c in self._terms.items()}
        return res

    def evaluate(self, q0: Fraction) -> Fraction:
        if q0 == 0:
            raise ValueError("cannot evaluate a Laurent polynomial at 0")
        return sum((c * q0**e for e, c in self._terms.items()), Fraction(0))

    # -- comparison --------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(sorted(self._terms.items())))

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- text --------------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for e in sorted(self._terms, reverse=True):
            c = self._terms[e]
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                qpart = "q" if e == 1 else f"q^{e}"
                body = qpart if mag == 1 else f"{mag}*{qpart}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f" + {body}" if c > 0 else f" - {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"


_L_ZERO = LaurentPoly()
_L_ONE = LaurentPoly({0: 1})


def qint(m: int) -> LaurentPoly:
    """Balanced q-integer: (q^m - q^-m)/(q - q^-1), an integer Laurent polynomial."""
    if m == 0:
        return _L_ZERO
    if m < 0:
        return -qint(-m)
    return LaurentPoly({m - 1 - 2 * t: 1 for t in range(m)})


def qfact(m: int) -> LaurentPoly:
    """q-factorial: the product of the q-integers 1..m (1 for m = 0)."""
    if m < 0:
        raise ValueError("q-factorial needs m >= 0")
    out = _L_ONE
    for k in range(2, m + 1):
        out = out * qint(k)
    return out


# -- polynomial gcd over the rationals --------------------------------------
#
# Dense low-to-high coefficient lists with a nonzero constant term; the
# caller shifts out the q-valuation first so units q^k never enter the gcd.


def _dense(p: LaurentPoly) -> tuple[int, list[int]]:
    lo, hi = p.min_exp(), p.max_exp()
    return lo, [p.coeff(e) for e in range(lo, hi + 1)]


def _trim(cs: list[Fraction]) -> list[Fraction]:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _poly_mod(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = list(a)
    inv_lead = 1 / b[-1]
    while len(a) >= len(b):
        f = a[-1] * inv_lead
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] -= f * c
        _trim(a)
        if not a:
            break
    return a


def _poly_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    while b:
        a, b = b, _poly_mod(a, b)
    lead = a[-1]
    return [c / lead for c in a]


def _poly_divexact(a: list[Fraction], g: list[Fraction]) -> list[Fraction]:
    quot = [Fraction(0)] * (len(a) - len(g) + 1)
    rem = list(a)
    inv_lead = 1 / g[-1]
    while rem and len(rem) >= len(g):
        f = rem[-1] * inv_lead
        shift = len(rem) - len(g)
        quot[shift] = f
        for i, c in enumerate(g):
            rem[shift + i] -= f * c
        _trim(rem)
    assert not rem, "inexact polynomial division"
    return quot


def _normalize_pair(num: LaurentPoly, den: LaurentPoly, skip_gcd: bool = False) -> tuple[LaurentPoly, LaurentPoly]:
    """Canonical (num, den): coprime over Q, den with lowest exponent 0 and
    positive leading coefficient, coprime integer contents."""
    if den.is_zero:
        raise ZeroDivisionError("zero denominator")
    if num.is_zero:
        return _L_ZERO, _L_ONE
    nval, ncs_i = _dense(num)
    dval, dcs_i = _dense(den)
    ncs = [Fraction(c) for c in ncs_i]
    dcs = [Fraction(c) for c in dcs_i]
    if not skip_gcd and len(ncs) > 1 and len(dcs) > 1:
        g = _poly_gcd(ncs, dcs)
        if len(g) > 1:
            ncs = _poly_divexact(ncs, g)
            dcs = _poly_divexact(dcs, g)
    mult = lcm(*(c.denominator for c in ncs + dcs)) if (ncs + dcs) else 1
    n_int = [int(c * mult) for c in ncs]
    d_int = [int(c * mult) for c in dcs]
    cont = 0
    for c in n_int + d_int:
        cont = gcd(cont, c)
    if cont > 1:
        n_int = [c // cont for c in n_int]
        d_int = [c // cont for c in d_int]
    if d_int[-1] < 0:
        n_int = [-c for c in n_int]
        d_int = [-c for c in d_int]
    off = nval - dval
    new_num = LaurentPoly({off + i: c for i, c in enumerate(n_int) if c})
    new_den = LaurentPoly({i: c for i, c in enumerate(d_int) if c})
    return new_num, new_den


class RatFunc:
    """Element of the fraction field of the Laurent polynomial ring.

    Kept in a canonical form, so equality is structural comparison.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly | int, den: LaurentPoly | int | None = None):
        if isinstance(num, int):
            num = LaurentPoly.const(num)
        if den is None:
            den = _L_ONE
        elif isinstance(den, int):
            den = LaurentPoly.const(den)
        self.num, self.den = _normalize_pair(num, den)

    @classmethod
    def _raw(cls, num: LaurentPoly, den: LaurentPoly) -> RatFunc:
        # Caller guarantees (num, den) is already canonical.
        self = object.__new__(cls)
        self.num = num
        self.den = den
        return self

    @classmethod
    def from_int(cls, c: int) -> RatFunc:
        return cls._raw(LaurentPoly.const(c), _L_ONE)

    @classmethod
    def from_laurent(cls, p: LaurentPoly) -> RatFunc:
        return cls._raw(p, _L_ONE)

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __bool__(self) -> bool:
        return not self.num.is_zero

    # -- field arithmetic ---------------------------------------------------

    @staticmethod
    def _coerce(other: RatFunc | LaurentPoly | int) -> RatFunc | None:
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, LaurentPoly):
            return RatFunc.from_laurent(other)
        if isinstance(other, int):
            return RatFunc.from_int(other)
        return None

    def __add__(self, other: RatFunc | LaurentPoly | int) -> RatFunc:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den.is_one and o.den.is_one:
            return RatFunc._raw(self.num + o.num, _L_ONE)
        num = self.num * o.den + o.num * self.den
        return RatFunc(num, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> RatFunc:
        return RatFunc._raw(-self.num, self.den)

    def __sub__(self, other: RatFunc | LaurentPoly | int) -> RatFunc:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: LaurentPoly | int) -> RatFunc:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: RatFunc | LaurentPoly | int) -> RatFunc:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den.is_one and o.den.is_one:
            return RatFunc._raw(self.num * o.num, _L_ONE)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other: RatFunc | LaurentPoly | int) -> RatFunc:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: LaurentPoly | int) -> RatFunc:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def inverse(self) -> RatFunc:
        if self.num.is_zero:
            raise ZeroDivisionError("inverse of zero")
        num, den = self.den, self.num
        v = den.min_exp()
        if v:
            num, den = num.shifted(-v), den.shifted(-v)
        if den.coeff(den.max_exp()) < 0:
            num, den = -num, -den
        return RatFunc._raw(num, den)

    def __pow__(self, k: int) -> RatFunc:
        if k < 0:
            return self.inverse() ** (-k)
        # canonical form is preserved by powering coprime parts
        return RatFunc._raw(self.num**k, self.den**k)

    def evaluate(self, q0: Fraction) -> Fraction:
        d = self.den.evaluate(q0)
        if d == 0:
            raise ZeroDivisionError(f"denominator vanishes at q = {q0}")
        return self.num.evaluate(q0) / d

    # -- comparison, text ----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, LaurentPoly)):
            other = self._coerce(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __str__(self) -> str:
        if self.den.is_one:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"RatFunc({self})"


def specialize(a: RatFunc | LaurentPoly, q0: Fraction | int | str) -> Fraction:
    """Evaluate at a rational q0 (rejects 0 and the roots of unity +-1)."""
    q0 = Fraction(q0)
    if q0 in (0, 1, -1):
        raise ValueError(f"q0 = {q0} is excluded (zero or a root of unity)")
    if isinstance(a, LaurentPoly):
        return a.evaluate(q0)
    return a.evaluate(q0)


# -- text parsing ------------------------------------------------------------

_TERM_RE = re.compile(r"^(?:(\d+)\*)?q(?:\^(-?\d+))?$|^(\d+)$")


def parse_laurent(s: str) -> LaurentPoly:
    """Inverse of str(LaurentPoly)."""
    s = s.strip()
    if s == "0":
        return _L_ZERO
    out: dict[int, int] = {}
    for chunk in s.replace(" - ", " + -").split(" + "):
        chunk = chunk.strip()
        sign = 1
        if chunk.startswith("-"):
            sign = -1
            chunk = chunk[1:]
        m = _TERM_RE.match(chunk)
        if not m:
            raise ValueError(f"bad Laurent polynomial term: {chunk!r}")
        if m.group(3) is not None:
            e, c = 0, int(m.group(3))
        else:
            c = int(m.group(1)) if m.group(1) else 1
            e = int(m.group(2)) if m.group(2) else 1
        out[e] = out.get(e, 0) + sign * c
    return LaurentPoly(out)


def parse_ratfunc(s: str) -> RatFunc:
    """Inverse of str(RatFunc)."""
    s = s.strip()
    if s.startswith("(") and s.endswith(")") and ")/(" in s:
        numtxt, dentxt = s[1:-1].split(")/(", 1)
        return RatFunc(parse_laurent(numtxt), parse_laurent(dentxt))
    return RatFunc.from_laurent(parse_laurent(s))


@dataclass(frozen=True)
class ScalarField:
    """Coefficient field for the whole pipeline.

    q0 = None computes over the generic fraction field (RatFunc values);
    a rational q0 switches every computation to exact Fraction values.
    """

    q0: Fraction | None = None

    def __post_init__(self):
        if self.q0 is not None:
            q0 = Fraction(self.q0)
            if q0 in (0, 1, -1):
                raise ValueError(f"q0 = {q0} is excluded (zero or a root of unity)")
            object.__setattr__(self, "q0", q0)

    @classmethod
    def generic(cls) -> ScalarField:
        return cls(None)

    @classmethod
    def at(cls, q0: Fraction | int | str) -> ScalarField:
        return cls(Fraction(q0))

    @property
    def is_generic(self) -> bool:
        return self.q0 is None

    def zero(self):
        return RatFunc.from_int(0) if self.q0 is None else Fraction(0)

    def one(self):
        return RatFunc.from_int(1) if self.q0 is None else Fraction(1)

    def from_int(self, c: int):
        return RatFunc.from_int(c) if self.q0 is None else Fraction(c)

    def q_power(self, e: int):
        if self.q0 is None:
            return RatFunc.from_laurent(LaurentPoly.q_power(e))
        return self.q0**e

    def qint(self, m: int):
        if self.q0 is None:
            return RatFunc.from_laurent(qint(m))
        return qint(m).evaluate(self.q0)

    def qfact(self, m: int):
        if self.q0 is None:
            return RatFunc.from_laurent(qfact(m))
        return qfact(m).evaluate(self.q0)

    def render(self, c) -> str:
        return str(c)

    def parse(self, s: str):
        if self.q0 is None:
            return parse_ratfunc(s)
        return Fraction(s)

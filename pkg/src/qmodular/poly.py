"""Integer Laurent polynomials in one variable ``q``."""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping


class LaurentPoly:
    """An element of Z[q, q^-1].

    Stored as an ascending tuple of ``(exponent, coefficient)`` pairs with no
    zero coefficients, so equality and hashing are structural.
    """

    __slots__ = ("_terms",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        if coeffs is None:
            coeffs = {}
        self._terms = tuple(sorted((int(e), int(c)) for e, c in coeffs.items() if c))

    @classmethod
    def _from_terms(cls, terms: tuple) -> LaurentPoly:
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def _from_dict(cls, acc: dict) -> LaurentPoly:
        return cls._from_terms(tuple(sorted((e, c) for e, c in acc.items() if c)))

    @classmethod
    def monomial(cls, coeff: int = 1, exp: int = 0) -> LaurentPoly:
        return cls({exp: coeff})

    @classmethod
    def from_list(cls, coeffs: Iterable[int], shift: int = 0) -> LaurentPoly:
        """Build from ascending coefficients, the first one sitting at q^shift."""
        return cls({shift + i: c for i, c in enumerate(coeffs)})

    @classmethod
    def coerce(cls, x) -> LaurentPoly:
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return cls({0: x})
        raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")

    # -- structure ---------------------------------------------------------

    @property
    def terms(self) -> tuple:
        return self._terms

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._terms)

    def coeff(self, exp: int) -> int:
        for e, c in self._terms:
            if e == exp:
                return c
        return 0

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def degree(self) -> int:
        if not self._terms:
            raise ValueError("the zero polynomial has no degree")
        return self._terms[-1][0]

    @property
    def valuation(self) -> int:
        """Smallest exponent carrying a nonzero coefficient."""
        if not self._terms:
            raise ValueError("the zero polynomial has no valuation")
        return self._terms[0][0]

    def is_polynomial(self) -> bool:
        return not self._terms or self._terms[0][0] >= 0

    def is_monomial_unit(self) -> bool:
        return len(self._terms) == 1 and abs(self._terms[0][1]) == 1

    # -- arithmetic --------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.coerce(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self._terms)

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._from_terms(tuple((e, -c) for e, c in self._terms))

    def __add__(self, other) -> LaurentPoly:
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        acc = dict(self._terms)
        for e, c in other._terms:
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly._from_dict(acc)

    __radd__ = __add__

    def __sub__(self, other) -> LaurentPoly:
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> LaurentPoly:
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other) -> LaurentPoly:
        if isinstance(other, int):
            if other == 0:
                return ZERO
            return LaurentPoly._from_terms(tuple((e, c * other) for e, c in self._terms))
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        acc: dict[int, int] = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                e = e1 + e2
                acc[e] = acc.get(e, 0) + c1 * c2
        return LaurentPoly._from_dict(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            return self.inverse() ** (-k)
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by q^k."""
        return LaurentPoly._from_terms(tuple((e + k, c) for e, c in self._terms))

    def inverse(self) -> LaurentPoly:
        """Inverse of a unit ``±q^k``; other elements are not invertible."""
        if not self.is_monomial_unit():
            raise ValueError(f"{self} is not a unit of Z[q, q^-1]")
        (e, c), = self._terms
        return LaurentPoly._from_terms(((-e, c),))

    # -- polynomial operations ---------------------------------------------

    def reverse(self) -> LaurentPoly:
        """Return q^deg(f) f(1/q); defined for nonzero ordinary polynomials."""
        if not self._terms:
            raise ValueError("cannot reverse the zero polynomial")
        if self._terms[0][0] < 0:
            raise ValueError("reverse needs an ordinary polynomial; normalize first")
        d = self.degree
        return LaurentPoly._from_terms(tuple(sorted((d - e, c) for e, c in self._terms)))

    def is_palindromic(self) -> bool:
        return self == self.reverse()

    def normalize_pm_qk(self) -> LaurentPoly:
        """Canonical representative of the class {±q^k f}."""
        if not self._terms:
            raise ValueError("the zero polynomial has no ±q^k normal form")
        v, c0 = self._terms[0]
        g = self.shift(-v)
        return -g if c0 < 0 else g

    def divides(self, f: LaurentPoly) -> LaurentPoly | None:
        """Exact quotient f / self after moving both to valuation 0, else None."""
        if not self._terms:
            raise ValueError("division by zero polynomial")
        f = LaurentPoly.coerce(f)
        if not f._terms:
            return ZERO
        d = self.shift(-self.valuation)
        rem = dict(f.shift(-f.valuation)._terms)
        dd = d.degree
        lead = d._terms[-1][1]
        quot: dict[int, int] = {}
        while rem:
            top = max(rem)
            if top < dd:
                return None
            c, r = divmod(rem[top], lead)
            if r:
                return None
            k = top - dd
            quot[k] = c
            for e, dc in d._terms:
                key = e + k
                val = rem.get(key, 0) - c * dc
                if val:
                    rem[key] = val
                else:
                    rem.pop(key, None)
        return LaurentPoly._from_dict(quot)

    def __call__(self, point):
        return self.eval(point)

    def eval(self, point):
        """Substitute ``q = point``.

        Integer and rational points give a ``Fraction`` (an ``int`` when the
        result is integral); a ``CycInt`` point gives a ``CycInt``.
        """
        if not self._terms:
            return _zero_like(point)
        if hasattr(point, "ring") and hasattr(point, "coeffs"):
            return _eval_cyclotomic(self, point)
        if point == 0:
            if self._terms[0][0] < 0:
                raise ValueError("cannot evaluate a Laurent polynomial with poles at 0")
            return self.coeff(0)
        if isinstance(point, (int, Fraction)):
            x = Fraction(point)
            total = sum((c * x ** e for e, c in self._terms), Fraction(0))
            return int(total) if total.denominator == 1 else total
        return sum(c * point ** e for e, c in self._terms)

    # -- text --------------------------------------------------------------

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"LaurentPoly({dict(self._terms)!r})"

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        return parse_poly(text)


def _zero_like(point):
    if hasattr(point, "ring"):
        return point.ring.zero
    return 0


def _eval_cyclotomic(f: LaurentPoly, point):
    ring = point.ring
    j = ring.zeta_log(point)
    if j is not None:
        # point = zeta^j: fold exponents mod n
        acc = [0] * ring.n
        for e, c in f.terms:
            acc[(e * j) % ring.n] += c
        return ring.from_power_sums(acc)
    result = ring.zero
    v = f.valuation
    body = f.shift(-v)
    # Horner on the polynomial part, then restore the q^v factor
    for e in range(body.degree, -1, -1):
        result = result * point + body.coeff(e)
    if v >= 0:
        return result * point ** v
    return result * point.inverse() ** (-v)


ZERO = LaurentPoly()
ONE = LaurentPoly({0: 1})
Q = LaurentPoly({1: 1})


def q_integer(n: int) -> LaurentPoly:
    """The q-integer [n]_q = (q^n - 1)/(q - 1), for any integer n."""
    if n >= 0:
        return LaurentPoly({e: 1 for e in range(n)})
    return -LaurentPoly({e: 1 for e in range(n, 0)})


def format_poly(f: LaurentPoly, var: str = "q") -> str:
    if f.is_zero():
        return "0"
    parts = []
    for e, c in reversed(f.terms):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if e == 0:
            body = str(a)
        else:
            mono = var if e == 1 else f"{var}^{e}"
            body = mono if a == 1 else f"{a}*{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


_TERM = re.compile(
    r"""\s*([+-])?\s*
        (?:(\d+)\s*(?:\*\s*)?)?
        (?:([a-zA-Z])\s*(?:\^\s*\(?\s*(-?\d+)\s*\)?)?)?
        \s*""",
    re.VERBOSE,
)


def parse_poly(text: str, var: str = "q") -> LaurentPoly:
    """Parse the rendering produced by :func:`format_poly`."""
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial text")
    acc: dict[int, int] = {}
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"cannot parse polynomial {text!r} at offset {pos}")
        sign, num, letter, exp = m.groups()
        if num is None and letter is None:
            raise ValueError(f"cannot parse polynomial {text!r} at offset {pos}")
        if sign is None and not first:
            raise ValueError(f"missing operator in {text!r} at offset {pos}")
        coeff = int(num) if num is not None else 1
        if sign == "-":
            coeff = -coeff
        e = 0
        if letter is not None:
            if letter != var:
                raise ValueError(f"unexpected variable {letter!r} in {text!r}")
            e = int(exp) if exp is not None else 1
        acc[e] = acc.get(e, 0) + coeff
        pos = m.end()
        first = False
    return LaurentPoly(acc)

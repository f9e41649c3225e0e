"""Exact arithmetic in the cyclotomic integers Z[zeta_n].

Elements are stored as their remainder modulo the n-th cyclotomic polynomial,
i.e. as integer coordinates in the basis 1, z, ..., z^(phi(n)-1).  That form is
canonical, so equality and hashing are plain tuple comparisons.
"""

from __future__ import annotations

import cmath
import math
import re
from functools import lru_cache
from typing import Sequence


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    # ascending coefficient lists, den monic
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if c:
            out[k - dd] = c
            for i, dc in enumerate(den):
                num[k - dd + i] -= c * dc
    if any(num[:dd]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def _cyclotomic(n: int) -> tuple[int, ...]:
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _poly_divexact(num, list(_cyclotomic(d)))
    return tuple(num)


def cyclotomic_poly(n: int) -> list[int]:
    """Ascending integer coefficients of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("cyclotomic_poly needs n >= 1")
    return list(_cyclotomic(n))


def totient(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


class CycRing:
    """The ring Z[zeta_n] with zeta_n embedded as exp(2*pi*i/n)."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("conductor must be a positive integer")
        self.n = n
        self.phi_n = tuple(_cyclotomic(n))
        self.degree = len(self.phi_n) - 1
        # reduced coordinates of zeta^k for 0 <= k < n
        powers = []
        for k in range(n):
            vec = [0] * max(k + 1, self.degree)
            vec[k] = 1
            powers.append(tuple(self._reduce_long(vec)))
        self._powers = tuple(powers)
        self._log = {p: k for k, p in enumerate(powers)}
        self.zero = CycInt(self, (0,) * self.degree)
        self.one = self.zeta_pow(0)
        self.zeta = self.zeta_pow(1)

    def _reduce_long(self, vec: list[int]) -> list[int]:
        vec = list(vec)
        d = self.degree
        phi = self.phi_n
        for k in range(len(vec) - 1, d - 1, -1):
            c = vec[k]
            if c:
                for i in range(d + 1):
                    vec[k - d + i] -= c * phi[i]
        return vec[:d] + [0] * (d - len(vec[:d]))

    def __repr__(self) -> str:
        return f"CycRing({self.n})"

    def __eq__(self, other) -> bool:
        return isinstance(other, CycRing) and other.n == self.n

    def __hash__(self) -> int:
        return hash(("CycRing", self.n))

    def __reduce__(self):
        return (get_ring, (self.n,))

    def from_power_sums(self, acc: Sequence[int]) -> CycInt:
        """Element sum(acc[k] * zeta^k) for an integer vector indexed mod n."""
        d = self.degree
        out = [0] * d
        for k, c in enumerate(acc):
            if c:
                for i, p in enumerate(self._powers[k % self.n]):
                    if p:
                        out[i] += c * p
        return CycInt(self, tuple(out))

    def __call__(self, x) -> CycInt:
        if isinstance(x, CycInt):
            if x.ring != self:
                raise ValueError("ring mismatch")
            return x
        if isinstance(x, int):
            return CycInt(self, (x,) + (0,) * (self.degree - 1))
        if isinstance(x, (list, tuple)):
            return self.from_power_sums(list(x))
        raise TypeError(f"cannot coerce {type(x).__name__} into Z[zeta_{self.n}]")

    def zeta_pow(self, j: int) -> CycInt:
        return CycInt(self, self._powers[j % self.n])

    def zeta_log(self, x: CycInt) -> int | None:
        """Return j in [0, n) with x == zeta^j, or None."""
        return self._log.get(x.coeffs)

    def roots_of_unity_pm(self) -> list[CycInt]:
        """The elements ±zeta^j, without repetition."""
        seen = {}
        for j in range(self.n):
            for s in (1, -1):
                z = self.zeta_pow(j) * s
                seen.setdefault(z.coeffs, z)
        return list(seen.values())

    def parse(self, text: str) -> CycInt:
        return parse_cycint(text, self)


@lru_cache(maxsize=None)
def get_ring(n: int) -> CycRing:
    return CycRing(n)


class CycInt:
    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: CycRing, coeffs: tuple):
        self.ring = ring
        self.coeffs = coeffs

    def _coerce(self, other) -> CycInt:
        if isinstance(other, CycInt):
            if other.ring.n != self.ring.n:
                raise ValueError(f"ring mismatch: Z[zeta_{self.ring.n}] vs Z[zeta_{other.ring.n}]")
            return other
        if isinstance(other, int):
            return self.ring(other)
        raise TypeError

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.coeffs == self.ring(other).coeffs
        if not isinstance(other, CycInt):
            return NotImplemented
        return self.ring.n == other.ring.n and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.ring.n, self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __neg__(self) -> CycInt:
        return CycInt(self.ring, tuple(-c for c in self.coeffs))

    def __add__(self, other) -> CycInt:
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return CycInt(self.ring, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other) -> CycInt:
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return CycInt(self.ring, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other) -> CycInt:
        return self._coerce(other) - self

    def __mul__(self, other) -> CycInt:
        if isinstance(other, int):
            return CycInt(self.ring, tuple(c * other for c in self.coeffs))
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        n = self.ring.n
        acc = [0] * n
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        acc[(i + j) % n] += a * b
        return self.ring.from_power_sums(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> CycInt:
        if k < 0:
            return self.inverse() ** (-k)
        result = self.ring.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> CycInt:
        """Inverse of a signed root of unity ±zeta^j."""
        ring = self.ring
        j = ring.zeta_log(self)
        if j is not None:
            return ring.zeta_pow(-j)
        j = ring.zeta_log(-self)
        if j is not None:
            return -ring.zeta_pow(-j)
        raise ValueError(f"{self} is not of the form ±zeta^j; inverse unsupported")

    def signed_zeta_log(self) -> tuple[int, int] | None:
        """Return (sign, j) with self == sign * zeta^j, or None."""
        j = self.ring.zeta_log(self)
        if j is not None:
            return (1, j)
        j = self.ring.zeta_log(-self)
        if j is not None:
            return (-1, j)
        return None

    def embed_complex(self) -> complex:
        """Numerical value under zeta_n -> exp(2*pi*i/n).  Never used for equality."""
        z = cmath.exp(2j * math.pi / self.ring.n)
        return sum((c * z ** k for k, c in enumerate(self.coeffs)), 0j)

    def to_json(self) -> dict:
        return {"n": self.ring.n, "coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, doc: dict) -> CycInt:
        ring = get_ring(int(doc["n"]))
        coeffs = tuple(int(c) for c in doc["coeffs"])
        if len(coeffs) != ring.degree:
            raise ValueError(f"expected {ring.degree} coordinates, got {len(coeffs)}")
        return CycInt(ring, coeffs)

    def __str__(self) -> str:
        return format_cycint(self)

    def __repr__(self) -> str:
        return f"CycInt(n={self.ring.n}, coeffs={list(self.coeffs)})"


def zeta_pow(ring: CycRing, j: int) -> CycInt:
    return ring.zeta_pow(j)


def embed_complex(a: CycInt) -> complex:
    return a.embed_complex()


def format_cycint(a: CycInt) -> str:
    parts = []
    for k, c in enumerate(a.coeffs):
        if not c:
            continue
        if k == 0:
            parts.append(str(c))
        else:
            mono = "z" if k == 1 else f"z^{k}"
            parts.append(mono if c == 1 else "-" + mono if c == -1 else f"{c}*{mono}")
    body = " + ".join(parts).replace("+ -", "- ") if parts else "0"
    return f"{body} @{a.ring.n}"


_CYC_TERM = re.compile(r"\s*([+-])?\s*(?:(\d+)\s*\*?\s*)?(z(?:\^(\d+))?)?\s*")


def parse_cycint(text: str, ring: CycRing | None = None) -> CycInt:
    """Parse ``"a0 + a1*z + a2*z^2 @n"``; the ``@n`` suffix may be omitted if a ring is given."""
    body, _, tag = text.partition("@")
    if tag.strip():
        n = int(tag.strip())
        if ring is not None and ring.n != n:
            raise ValueError("conductor annotation disagrees with ring")
        ring = get_ring(n)
    if ring is None:
        raise ValueError("conductor unknown: add '@n' or pass a ring")
    body = body.strip()
    acc = [0] * ring.n
    pos = 0
    while pos < len(body):
        m = _CYC_TERM.match(body, pos)
        sign, num, mono, exp = m.groups()
        if m.end() == pos or (num is None and mono is None):
            raise ValueError(f"cannot parse cyclotomic integer {text!r}")
        c = int(num) if num is not None else 1
        if sign == "-":
            c = -c
        k = 0 if mono is None else (int(exp) if exp is not None else 1)
        acc[k % ring.n] += c
        pos = m.end()
    return ring.from_power_sums(acc)

"""q-deformed rationals, their flat variant, and normalized Jones polynomials.

For r/s > 1 the pair (R, S) is the first column of
``R_q^{c1} S_q R_q^{c2} S_q ... R_q^{ck} S_q`` where ``[[c1, ..., ck]]`` is the
negative (Hirzebruch-Jung) continued fraction of r/s.  Everything else is
reached with the shift rule ``[x + 1]_q = q [x]_q + 1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

from .cyclo import CycInt, CycRing
from .matrix import Mat2
from .poly import ONE, Q, ZERO, LaurentPoly, q_integer


@dataclass(frozen=True)
class Frac:
    """Reduced fraction r/s with s >= 0; 1/0 is the point at infinity."""

    r: int
    s: int

    def __post_init__(self):
        r, s = self.r, self.s
        if r == 0 and s == 0:
            raise ValueError("0/0 is not a fraction")
        if s < 0:
            r, s = -r, -s
        g = math.gcd(r, s)
        r, s = r // g, s // g
        if s == 0:
            r = 1
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "s", s)

    @classmethod
    def parse(cls, text: str) -> Frac:
        text = text.strip()
        num, slash, den = text.partition("/")
        try:
            r = int(num)
            s = int(den) if slash else 1
        except ValueError:
            raise ValueError(f"malformed fraction {text!r}") from None
        if s == 0 and abs(r) != 1:
            raise ValueError("only 1/0 is accepted with a zero denominator")
        return cls(r, s)

    def is_infinite(self) -> bool:
        return self.s == 0

    def __str__(self) -> str:
        return f"{self.r}/{self.s}"


def _as_frac(frac) -> Frac:
    if isinstance(frac, Frac):
        return frac
    if isinstance(frac, str):
        return Frac.parse(frac)
    if isinstance(frac, int):
        return Frac(frac, 1)
    r, s = frac
    return Frac(r, s)


def neg_cf(frac) -> list[int]:
    """Negative continued fraction [[c1, ..., ck]] of r/s > 1, every ci >= 2."""
    frac = _as_frac(frac)
    if frac.s == 0 or frac.r <= frac.s:
        raise ValueError(f"neg_cf needs r/s > 1, got {frac}")
    r, s = frac.r, frac.s
    terms = []
    while s:
        c = -(-r // s)
        terms.append(c)
        r, s = s, c * s - r
    return terms


def eval_neg_cf(terms: Sequence[int]) -> Frac:
    """Evaluate c1 - 1/(c2 - 1/(... - 1/ck)) exactly."""
    r, s = 1, 0
    for c in reversed(terms):
        r, s = c * r - s, r
    return Frac(r, s)


R_Q = Mat2(Q, ONE, ZERO, ONE)
S_Q = Mat2(ZERO, -Q.inverse(), ONE, ZERO)


def matrix_word(cf: Sequence[int]) -> Mat2:
    """M_q(c1, ..., ck) = R_q^c1 S_q ... R_q^ck S_q over Z[q, q^-1]."""
    m = R_Q.identity()
    for c in cf:
        m = m * (R_Q ** c) * S_Q
    return m


@dataclass(frozen=True)
class QRationalPair:
    frac: Frac
    num: LaurentPoly
    den: LaurentPoly


@dataclass(frozen=True)
class FlatPair:
    frac: Frac
    num_flat: LaurentPoly
    den_flat: LaurentPoly
    d_alpha: int


class _LaurentOps:
    key = None
    one = ONE
    zero = ZERO

    @staticmethod
    def qint(c: int) -> LaurentPoly:
        return q_integer(c)

    @staticmethod
    def qpow(k: int) -> LaurentPoly:
        return LaurentPoly.monomial(1, k)


class _CycOps:
    def __init__(self, ring: CycRing):
        self.ring = ring
        self.key = ring.n
        self.one = ring.one
        self.zero = ring.zero

    def qint(self, c: int) -> CycInt:
        n = self.ring.n
        acc = [0] * n
        if c >= 0:
            full, rest = divmod(c, n)
            for k in range(n):
                acc[k] = full + (1 if k < rest else 0)
        else:
            for e in range(c, 0):
                acc[e % n] -= 1
        return self.ring.from_power_sums(acc)

    def qpow(self, k: int) -> CycInt:
        return self.ring.zeta_pow(k)


_CACHE: dict = {}
_CACHE_LIMIT = 500_000


def _column_gt1(r: int, s: int, ops) -> tuple:
    """(R, S) for r/s > 1 via (R_x, S_x) = ([c] R_y - q^(c-1) S_y, R_y), y = s/(cs - r)."""
    if len(_CACHE) > _CACHE_LIMIT:
        _CACHE.clear()
    chain = []
    while True:
        hit = _CACHE.get((ops.key, r, s))
        if hit is not None:
            R, S = hit
            break
        if s == 1:
            R, S = ops.qint(r), ops.one
            break
        c = -(-r // s)
        chain.append((r, s, c))
        r, s = s, c * s - r
    for r, s, c in reversed(chain):
        R, S = ops.qint(c) * R - ops.qpow(c - 1) * S, R
        _CACHE[(ops.key, r, s)] = (R, S)
    return R, S


def _column(frac: Frac, ops) -> tuple:
    r, s = frac.r, frac.s
    if s == 0:
        return ops.one, ops.zero
    if r > s:
        return _column_gt1(r, s, ops)
    m = (s - r) // s + 1
    R, S = _column_gt1(r + m * s, s, ops)
    qinv = ops.qpow(-1)
    for _ in range(m):
        R = (R - S) * qinv
    return R, S


def q_rational(frac) -> QRationalPair:
    """Numerator and denominator polynomials of [r/s]_q."""
    frac = _as_frac(frac)
    num, den = _column(frac, _LaurentOps)
    return QRationalPair(frac, num, den)


def q_rational_at(frac, ring: CycRing) -> tuple[CycInt, CycInt]:
    """(R_{r/s}(zeta_n), S_{r/s}(zeta_n)) computed directly in Z[zeta_n]."""
    return _column(_as_frac(frac), _CycOps(ring))


def _require_gt1(frac: Frac, what: str) -> None:
    if frac.s == 0 or frac.r <= frac.s:
        raise ValueError(f"{what} is defined here only for r/s > 1, got {frac}")


def flat(frac) -> FlatPair:
    """The flat deformation obtained from the sharp one by the Thomas transform."""
    frac = _as_frac(frac)
    _require_gt1(frac, "flat")
    p = q_rational(frac)
    u = Q * p.num + (1 - Q) * p.den
    v = (Q - 1) * p.num + p.den
    d = v.valuation
    return FlatPair(frac, u.reverse(), v.shift(-d).reverse(), d)


def jones(frac) -> LaurentPoly:
    """Normalized Jones polynomial J = q R + (1 - q) S of the rational link L(r/s)."""
    frac = _as_frac(frac)
    _require_gt1(frac, "jones")
    p = q_rational(frac)
    return Q * p.num + (1 - Q) * p.den


def jones_at(frac, ring: CycRing) -> CycInt:
    frac = _as_frac(frac)
    _require_gt1(frac, "jones")
    R, S = q_rational_at(frac, ring)
    z = ring.zeta
    return z * R + (1 - z) * S


def inverse_thomas(fp: FlatPair) -> tuple[LaurentPoly, LaurentPoly]:
    """Apply ((1, q-1), (1-q, q)) to (R_flat^v, q^d S_flat^v); equals (q^2-q+1)(R, S)."""
    x = fp.num_flat.reverse()
    y = fp.den_flat.reverse().shift(fp.d_alpha)
    return x + (Q - 1) * y, (1 - Q) * x + Q * y


def fraction_sweep(max_den: int, max_num: int | None = None) -> Iterator[Frac]:
    """Reduced r/s > 1 with s <= max_den and r <= max_num (default 2 * max_den), by (s, r)."""
    if max_num is None:
        max_num = 2 * max_den
    for s in range(1, max_den + 1):
        for r in range(s + 1, max_num + 1):
            if math.gcd(r, s) == 1:
                yield Frac(r, s)


def qrat_document(frac, eval_at: Sequence[int] = ()) -> dict:
    """JSON-ready summary of one fraction."""
    frac = _as_frac(frac)
    p = q_rational(frac)
    doc: dict = {"r": frac.r, "s": frac.s}
    above = frac.s != 0 and frac.r > frac.s
    doc["cf"] = neg_cf(frac) if above else None
    doc["num"] = str(p.num)
    doc["den"] = str(p.den)
    if above:
        fp = flat(frac)
        doc["flat_num"] = str(fp.num_flat)
        doc["flat_den"] = str(fp.den_flat)
        doc["d_alpha"] = fp.d_alpha
        doc["jones"] = str(jones(frac))
    else:
        doc["flat_num"] = doc["flat_den"] = doc["d_alpha"] = doc["jones"] = None
    if eval_at:
        from .cyclo import get_ring

        evals = []
        for n in eval_at:
            ring = get_ring(n)
            entry = {"n": n, "num": str(p.num.eval(ring.zeta)), "den": str(p.den.eval(ring.zeta))}
            if above:
                entry["jones"] = str(jones_at(frac, ring))
            evals.append(entry)
        doc["evaluations"] = evals
    return doc

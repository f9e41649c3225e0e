"""2x2 matrices over a commutative ring (Laurent polynomials or cyclotomic integers)."""

from __future__ import annotations

from typing import Callable


class Mat2:
    """Immutable 2x2 matrix ``[[a, b], [c, d]]``.

    Entries only need ring operations; inversion additionally needs
    ``det().inverse()``, which both entry types provide for their units.
    """

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        self.a = a
        self.b = b
        self.c = c
        self.d = d

    @classmethod
    def scalar(cls, x, zero) -> Mat2:
        return cls(x, zero, zero, x)

    @property
    def entries(self) -> tuple:
        return (self.a, self.b, self.c, self.d)

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Mat2):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __mul__(self, other):
        if isinstance(other, Mat2):
            return Mat2(
                self.a * other.a + self.b * other.c,
                self.a * other.b + self.b * other.d,
                self.c * other.a + self.d * other.c,
                self.c * other.b + self.d * other.d,
            )
        return Mat2(self.a * other, self.b * other, self.c * other, self.d * other)

    def __rmul__(self, other):
        return Mat2(other * self.a, other * self.b, other * self.c, other * self.d)

    def __add__(self, other: Mat2) -> Mat2:
        return Mat2(self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d)

    def __sub__(self, other: Mat2) -> Mat2:
        return Mat2(self.a - other.a, self.b - other.b, self.c - other.c, self.d - other.d)

    def __neg__(self) -> Mat2:
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def identity(self) -> Mat2:
        one = self.a * 0 + 1
        zero = self.a * 0
        return Mat2(one, zero, zero, one)

    def __pow__(self, k: int) -> Mat2:
        if k < 0:
            return self.inverse() ** (-k)
        result = self.identity()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def det(self):
        return self.a * self.d - self.b * self.c

    def trace(self):
        return self.a + self.d

    def adjugate(self) -> Mat2:
        return Mat2(self.d, -self.b, -self.c, self.a)

    def inverse(self) -> Mat2:
        """Adjugate times the inverse of a unit determinant."""
        return self.adjugate() * self.det().inverse()

    def is_scalar(self) -> bool:
        return not self.b and not self.c and self.a == self.d

    def is_diagonal(self) -> bool:
        return not self.b and not self.c

    def map(self, fn: Callable) -> Mat2:
        return Mat2(fn(self.a), fn(self.b), fn(self.c), fn(self.d))

    def rows(self) -> list[list]:
        return [[self.a, self.b], [self.c, self.d]]

    def __repr__(self) -> str:
        return f"Mat2([[{self.a}, {self.b}], [{self.c}, {self.d}]])"

"""Exact dense polynomial arithmetic over the integers.

Coefficients are arbitrary-precision Python ints stored in ascending degree
order with no trailing zeros; the zero polynomial is the empty tuple.  All
operations are exact, evaluation returns Fractions when given Fractions.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = ["Fraction", "Poly", "ZERO", "ONE", "X"]


class Poly:
    """Immutable integer polynomial in one variable."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"integer coefficients required, got {type(c).__name__}")
        self.coeffs = tuple(cs)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "Poly":
        return cls(())

    @classmethod
    def one(cls) -> "Poly":
        return cls((1,))

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> "Poly":
        if power < 0:
            raise ValueError("power must be non-negative")
        return cls((0,) * power + (coeff,))

    @classmethod
    def from_decimal_strings(cls, strings) -> "Poly":
        return cls(int(s) for s in strings)

    # -- structure ---------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> int:
        """Leading coefficient; 0 for the zero polynomial."""
        return self.coeffs[-1] if self.coeffs else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)!r})"

    # -- ring operations ---------------------------------------------------

    def __add__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, int):
            return Poly(c * other for c in self.coeffs)
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return Poly(out)

    def __rmul__(self, other) -> "Poly":
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, k: int) -> "Poly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative int")
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- calculus and evaluation -------------------------------------------

    def __call__(self, x):
        """Exact Horner evaluation; int in gives int, Fraction gives Fraction."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Poly":
        return Poly(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def div_x(self) -> "Poly":
        """Exact quotient by the variable; the constant term must be zero."""
        if self.coeffs and self.coeffs[0] != 0:
            raise ValueError("constant term is nonzero, quotient by the variable is not exact")
        return Poly(self.coeffs[1:])

    def multiplicity_at_zero(self) -> int:
        """Number of leading variable factors; undefined for the zero polynomial."""
        if not self.coeffs:
            raise ValueError("multiplicity at zero is undefined for the zero polynomial")
        k = 0
        while self.coeffs[k] == 0:
            k += 1
        return k

    # -- serialization -----------------------------------------------------

    def to_decimal_strings(self) -> tuple[str, ...]:
        return tuple(str(c) for c in self.coeffs)


ZERO = Poly(())
ONE = Poly((1,))
X = Poly((0, 1))

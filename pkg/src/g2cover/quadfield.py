"""Arithmetic in real or imaginary quadratic fields Q(sqrt(d)).

An element is a + b*sqrt(d) with rational a, b and a fixed squarefree
integer d (never 0 or 1).  Elements from different fields never mix: any
attempt raises FieldMismatchError instead of coercing.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainError, FieldMismatchError
from .rationals import is_square, rat

Scalar = "Fraction | QuadElem"


class QuadElem:
    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d: int):
        if not isinstance(d, int) or d in (0, 1):
            raise DomainError(f"invalid radicand {d}")
        self.a = rat(a)
        self.b = rat(b)
        self.d = d

    # -- constructors -------------------------------------------------
    @classmethod
    def of(cls, value, d: int) -> "QuadElem":
        if isinstance(value, QuadElem):
            if value.d != d:
                raise FieldMismatchError(f"cannot move sqrt({value.d}) into sqrt({d})")
            return value
        return cls(rat(value), 0, d)

    # -- structure ----------------------------------------------------
    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def rational(self) -> Fraction:
        if self.b != 0:
            raise DomainError(f"{self} is irrational")
        return self.a

    def conjugate(self) -> "QuadElem":
        return QuadElem(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def trace(self) -> Fraction:
        return 2 * self.a

    # -- arithmetic ---------------------------------------------------
    def _lift(self, other):
        if isinstance(other, QuadElem):
            if other.d != self.d:
                raise FieldMismatchError(
                    f"sqrt({self.d}) and sqrt({other.d}) do not interoperate"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return QuadElem(rat(other), 0, self.d)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadElem(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadElem(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadElem(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadElem(
            self.a * o.a + self.d * self.b * o.b,
            self.a * o.b + self.b * o.a,
            self.d,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in quadratic field")
        inv = QuadElem(o.a / n, -o.b / n, self.d)
        return self * inv

    def __rtruediv__(self, other):
        o = self._lift(other)
        return o / self

    def __pow__(self, n: int):
        if n < 0:
            return 1 / self ** (-n)
        out = QuadElem(1, 0, self.d)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if isinstance(other, QuadElem):
            if self.b == 0 and other.b == 0:
                return self.a == other.a
            return self.d == other.d and self.a == other.a and self.b == other.b
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __repr__(self):
        return f"({self.a} + {self.b}*sqrt({self.d}))"


def field_d(x) -> int | None:
    """Radicand of the field x lives in; None for plain rationals."""
    if isinstance(x, QuadElem) and x.b != 0:
        return x.d
    return None


def common_field(values) -> int | None:
    """The unique radicand appearing among ``values`` (None if all rational)."""
    d = None
    for v in values:
        dv = field_d(v)
        if dv is None:
            continue
        if d is None:
            d = dv
        elif d != dv:
            raise FieldMismatchError(f"mixed fields sqrt({d}) and sqrt({dv})")
    return d


def promote(x, d: int | None):
    """View x inside Q(sqrt(d)) (or leave rational when d is None)."""
    if d is None:
        if isinstance(x, QuadElem):
            return x.rational()
        return rat(x)
    return QuadElem.of(x, d)


def sqrt_rational(q: Fraction):
    """Exact square root of a rational, as a Fraction or QuadElem.

    Returns (root, d) where d is None for a rational root and the squarefree
    radicand otherwise.
    """
    from .rationals import squarefree_part

    q = rat(q)
    if q == 0:
        return rat(0), None
    if q > 0 and is_square(q.numerator) and is_square(q.denominator):
        from math import isqrt

        return Fraction(isqrt(q.numerator), isqrt(q.denominator)), None
    d, c = squarefree_part(q)
    return QuadElem(0, c, d), d

"""Weierstrass curves over Q with exact group law and torsion decisions.

Points may have coordinates in Q or in one quadratic field Q(sqrt(d));
verdicts about torsion are always exact.  Over Q the Mazur bound (orders
at most 12) makes the search definitive; over quadratic fields the
classical bound is 18, so the default search bound 24 turns
"no n <= 24 kills it" into a genuine infinite-order verdict.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .errors import DomainError, FieldMismatchError, InternalConsistencyError
from .quadfield import QuadElem, field_d, promote
from .rationals import rat

MAZUR_BOUND = 12
QUADRATIC_TORSION_BOUND = 24  # > 18, the Kenku-Momose-Kamienny bound


class WeierstrassCurve:
    """y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q."""

    __slots__ = ("a1", "a2", "a3", "a4", "a6", "disc")

    def __init__(self, a1, a2, a3, a4, a6):
        self.a1, self.a2, self.a3 = rat(a1), rat(a2), rat(a3)
        self.a4, self.a6 = rat(a4), rat(a6)
        self.disc = self._discriminant()
        if self.disc == 0:
            raise DomainError("singular Weierstrass equation")

    # -- invariants ------------------------------------------------------
    def b_invariants(self):
        b2 = self.a1**2 + 4 * self.a2
        b4 = 2 * self.a4 + self.a1 * self.a3
        b6 = self.a3**2 + 4 * self.a6
        b8 = (b2 * b6 - b4**2) / 4
        return b2, b4, b6, b8

    def c_invariants(self):
        b2, b4, b6, _ = self.b_invariants()
        c4 = b2**2 - 24 * b4
        c6 = -(b2**3) + 36 * b2 * b4 - 216 * b6
        return c4, c6

    def _discriminant(self):
        b2, b4, b6, b8 = self.b_invariants()
        return -(b2**2) * b8 - 8 * b4**3 - 27 * b6**2 + 9 * b2 * b4 * b6

    def j_invariant(self) -> Fraction:
        c4, _ = self.c_invariants()
        return c4**3 / self.disc

    def is_short(self) -> bool:
        return self.a1 == 0 and self.a2 == 0 and self.a3 == 0

    def short_model(self):
        """Short form y^2 = x^3 + Ax + B plus the point map to it."""
        b2, _, _, _ = self.b_invariants()
        c4, c6 = self.c_invariants()
        A, B = -c4 / 48, -c6 / 864
        a1, a3 = self.a1, self.a3
        shift = b2 / 12

        def fwd(pt: "EPoint") -> "EPoint":
            if pt.infinity:
                return EPoint.zero(short)
            x, y = pt.x, pt.y
            return EPoint(short, x + shift, y + (a1 * x + a3) / 2)

        def back(pt: "EPoint") -> "EPoint":
            if pt.infinity:
                return EPoint.zero(self)
            xs = pt.x - shift
            return EPoint(self, xs, pt.y - (a1 * xs + a3) / 2)

        short = WeierstrassCurve(0, 0, 0, A, B)
        return short, fwd, back

    def equation_value(self, x, y):
        return (
            y * y + self.a1 * x * y + self.a3 * y
            - (x * x * x + self.a2 * x * x + self.a4 * x + self.a6)
        )

    def contains(self, x, y) -> bool:
        return not self.equation_value(x, y)

    def __eq__(self, other):
        return isinstance(other, WeierstrassCurve) and (
            (self.a1, self.a2, self.a3, self.a4, self.a6)
            == (other.a1, other.a2, other.a3, other.a4, other.a6)
        )

    def __repr__(self):
        return (
            f"WeierstrassCurve(a1={self.a1}, a2={self.a2}, a3={self.a3}, "
            f"a4={self.a4}, a6={self.a6})"
        )


class EPoint:
    __slots__ = ("curve", "x", "y", "infinity")

    def __init__(self, curve: WeierstrassCurve, x=None, y=None, infinity=False):
        self.curve = curve
        self.infinity = infinity
        if infinity:
            self.x = self.y = None
            return
        d = field_d(x) if field_d(x) is not None else field_d(y)
        if field_d(x) is not None and field_d(y) is not None and field_d(x) != field_d(y):
            raise FieldMismatchError("coordinates in different quadratic fields")
        self.x = promote(x, d) if d is not None else rat(x)
        self.y = promote(y, d) if d is not None else rat(y)
        if curve.equation_value(self.x, self.y):
            raise DomainError(f"({self.x}, {self.y}) is not on {curve!r}")

    @classmethod
    def zero(cls, curve: WeierstrassCurve) -> "EPoint":
        return cls(curve, infinity=True)

    @property
    def d(self) -> int | None:
        if self.infinity:
            return None
        dx, dy = field_d(self.x), field_d(self.y)
        return dx if dx is not None else dy

    def conjugate(self) -> "EPoint":
        """Galois conjugate sqrt(d) -> -sqrt(d) (identity on rational points)."""
        if self.infinity or self.d is None:
            return self
        cx = self.x.conjugate() if isinstance(self.x, QuadElem) else self.x
        cy = self.y.conjugate() if isinstance(self.y, QuadElem) else self.y
        return EPoint(self.curve, cx, cy)

    def __eq__(self, other):
        if not isinstance(other, EPoint):
            return NotImplemented
        if self.curve != other.curve:
            return False
        if self.infinity or other.infinity:
            return self.infinity and other.infinity
        return self.x == other.x and self.y == other.y

    def __hash__(self):
        if self.infinity:
            return hash("inf")
        return hash((str(self.x), str(self.y)))

    def __repr__(self):
        if self.infinity:
            return "EPoint(O)"
        return f"EPoint({self.x}, {self.y})"


def neg(E: WeierstrassCurve, P: EPoint) -> EPoint:
    if P.infinity:
        return P
    return EPoint(E, P.x, -P.y - E.a1 * P.x - E.a3)


def add(E: WeierstrassCurve, P: EPoint, Q: EPoint) -> EPoint:
    """Chord-tangent addition on the long Weierstrass model."""
    if P.curve != E or Q.curve != E:
        raise DomainError("points on a different curve")
    if P.d is not None and Q.d is not None and P.d != Q.d:
        raise FieldMismatchError("points live in different quadratic fields")
    if P.infinity:
        return Q
    if Q.infinity:
        return P
    x1, y1, x2, y2 = P.x, P.y, Q.x, Q.y
    if x1 == x2:
        if y2 == -y1 - E.a1 * x1 - E.a3:
            return EPoint.zero(E)
        lam = (3 * x1 * x1 + 2 * E.a2 * x1 + E.a4 - E.a1 * y1) / (
            2 * y1 + E.a1 * x1 + E.a3
        )
        nu = (-(x1 * x1 * x1) + E.a4 * x1 + 2 * E.a6 - E.a3 * y1) / (
            2 * y1 + E.a1 * x1 + E.a3
        )
    else:
        lam = (y2 - y1) / (x2 - x1)
        nu = y1 - lam * x1
    x3 = lam * lam + E.a1 * lam - E.a2 - x1 - x2
    y3 = -(lam + E.a1) * x3 - nu - E.a3
    return EPoint(E, x3, y3)


def sub(E: WeierstrassCurve, P: EPoint, Q: EPoint) -> EPoint:
    return add(E, P, neg(E, Q))


def mul(E: WeierstrassCurve, n: int, P: EPoint) -> EPoint:
    if n < 0:
        return mul(E, -n, neg(E, P))
    acc = EPoint.zero(E)
    base = P
    while n:
        if n & 1:
            acc = add(E, acc, base)
        base = add(E, base, base)
        n >>= 1
    return acc


def torsion_order_rational(E: WeierstrassCurve, P: EPoint, audit: bool = True):
    """Exact order of a rational point, or None for infinite order.

    Definitive by Mazur's theorem: rational torsion has order <= 12.
    With audit=True every torsion verdict is cross-checked against
    Nagell-Lutz integrality on an integral short model.
    """
    if P.d is not None:
        raise DomainError("use torsion_order_quadratic for quadratic points")
    order = _order_by_search(E, P, MAZUR_BOUND)
    if audit and order is not None and order > 1:
        if not nagell_lutz_ok(E, P):
            raise InternalConsistencyError(
                "torsion point fails the Nagell-Lutz audit"
            )  # pragma: no cover
    return order


def torsion_order_quadratic(E: WeierstrassCurve, P: EPoint,
                            bound: int = QUADRATIC_TORSION_BOUND):
    """Minimal n <= bound with nP = O, else None (NotTorsionUpTo(bound)).

    The report layer promotes None to "not torsion" since quadratic-field
    torsion orders are classically at most 18 < bound.
    """
    return _order_by_search(E, P, bound)


def _order_by_search(E: WeierstrassCurve, P: EPoint, bound: int):
    if P.infinity:
        return 1
    acc = P
    for n in range(2, bound + 1):
        acc = add(E, acc, P)
        if acc.infinity:
            return n
    return None if not P.infinity else 1


def integral_short_model(E: WeierstrassCurve):
    """Scale a short model to integral A, B; returns (A, B, point scaler)."""
    if not E.is_short():
        raise DomainError("integral model needs a short Weierstrass input")
    u = 1
    den = lcm(E.a4.denominator, E.a6.denominator)
    # choose u with u^4, u^6 clearing the denominators: u = den works
    u = den
    A = E.a4 * u**4
    B = E.a6 * u**6
    if A.denominator != 1 or B.denominator != 1:  # pragma: no cover
        raise InternalConsistencyError("failed to clear denominators")

    def scale_point(P: EPoint):
        if P.infinity:
            return None
        return (P.x * u * u, P.y * u**3)

    return int(A), int(B), scale_point


def nagell_lutz_ok(E: WeierstrassCurve, P: EPoint) -> bool:
    """Nagell-Lutz integrality audit on an integral short model.

    True when the point is integral there and y = 0 or y^2 | 4A^3 + 27B^2.
    (A necessary condition for torsion; used as a cross-check only.)
    """
    if P.infinity:
        return True
    curve = E
    pt = P
    if not E.is_short():
        curve, fwd, _ = E.short_model()
        pt = fwd(P)
    A, B, scale = integral_short_model(curve)
    x, y = scale(pt)
    if x.denominator != 1 or y.denominator != 1:
        return False
    D = 4 * A**3 + 27 * B**2
    y = int(y)
    return y == 0 or (D % (y * y) == 0)

"""Univariate polynomials over Q or a quadratic field Q(sqrt(d)).

Coefficients are stored lowest degree first with trailing zeros stripped;
the zero polynomial has an empty coefficient list and degree -1 sentinel
(standing in for "minus infinity").

The resultant follows the convention pinned by the repo's golden tests:

    Res(p, q) = det Sylvester(q, p) = lc(q)^deg(p) * prod p(beta)

with the product over the roots of q, so Res(x-1, x+1) = -2.  Both the
antisymmetry law Res(p,q) = (-1)^(deg p * deg q) Res(q,p) and the usual
discriminant formula hold in this convention.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainError, UnsupportedSplittingError
from .quadfield import QuadElem, common_field, promote, sqrt_rational
from .rationals import rat


def _coerce(c):
    if isinstance(c, (int, str)):
        return rat(c)
    if isinstance(c, (Fraction, QuadElem)):
        return c
    raise DomainError(f"bad coefficient {c!r}")


class UniPoly:
    """Dense univariate polynomial, coefficients lowest degree first."""

    __slots__ = ("coeffs", "d")

    def __init__(self, coeffs, d: int | None = None):
        cs = [_coerce(c) for c in coeffs]
        if d is None:
            d = common_field(cs)
        cs = [promote(c, d) for c in cs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = cs
        self.d = d

    # -- constructors ---------------------------------------------------
    @classmethod
    def zero(cls) -> "UniPoly":
        return cls([])

    @classmethod
    def x(cls) -> "UniPoly":
        return cls([0, 1])

    @classmethod
    def const(cls, c) -> "UniPoly":
        return cls([c])

    # -- structure -------------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self):
        if not self.coeffs:
            raise DomainError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return promote(0, self.d)

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        lead = self.lc()
        return UniPoly([c / lead for c in self.coeffs], self.d)

    # -- ring operations ---------------------------------------------------
    def _pair(self, other):
        from .errors import FieldMismatchError

        p = other if isinstance(other, UniPoly) else UniPoly([other])
        if self.d is not None and p.d is not None and self.d != p.d:
            raise FieldMismatchError(
                f"polynomials over sqrt({self.d}) and sqrt({p.d}) do not mix"
            )
        d = self.d if self.d is not None else p.d
        return UniPoly(self.coeffs, d), UniPoly(p.coeffs, d)

    def __add__(self, other):
        a, b = self._pair(other)
        n = max(len(a.coeffs), len(b.coeffs))
        return UniPoly([a.coeff(i) + b.coeff(i) for i in range(n)], a.d)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs], self.d)

    def __sub__(self, other):
        return self + (-(other if isinstance(other, UniPoly) else UniPoly([other])))

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        a, b = self._pair(other)
        if a.is_zero() or b.is_zero():
            return UniPoly([], a.d)
        out = [promote(0, a.d)] * (len(a.coeffs) + len(b.coeffs) - 1)
        for i, ca in enumerate(a.coeffs):
            if not ca:
                continue
            for j, cb in enumerate(b.coeffs):
                out[i + j] = out[i + j] + ca * cb
        return UniPoly(out, a.d)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise DomainError("negative polynomial power")
        out = UniPoly([1], self.d)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            other = UniPoly([other])
        n = max(len(self.coeffs), len(other.coeffs))
        return all(self.coeff(i) == other.coeff(i) for i in range(n))

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def divmod(self, other: "UniPoly"):
        a, b = self._pair(other)
        if b.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = UniPoly([], a.d)
        r = a
        while not r.is_zero() and r.degree >= b.degree:
            shift = r.degree - b.degree
            c = r.lc() / b.lc()
            term = UniPoly([0] * shift + [c], a.d)
            q = q + term
            r = r - term * b
        return q, r

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    # -- calculus / evaluation ----------------------------------------------
    def derivative(self) -> "UniPoly":
        return UniPoly(
            [i * c for i, c in enumerate(self.coeffs)][1:], self.d
        )

    def __call__(self, x):
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        if acc is None:
            if isinstance(x, QuadElem):
                return QuadElem.of(0, x.d)
            return rat(0)
        return acc

    def shift(self, c) -> "UniPoly":
        """p(x + c)."""
        out = UniPoly([], self.d)
        xc = UniPoly([c, 1], self.d)
        for coeff in reversed(self.coeffs):
            out = out * xc + UniPoly([coeff], self.d)
        return out

    def reverse(self, degree: int | None = None) -> "UniPoly":
        """x^n * p(1/x) for n = ``degree`` (defaults to deg p)."""
        n = self.degree if degree is None else degree
        if n < self.degree:
            raise DomainError("reversal degree below actual degree")
        cs = [self.coeff(n - i) for i in range(n + 1)]
        return UniPoly(cs, self.d)

    def compose(self, other: "UniPoly") -> "UniPoly":
        out = UniPoly([], self.d)
        for coeff in reversed(self.coeffs):
            out = out * other + UniPoly([coeff], self.d)
        return out

    def gcd(self, other: "UniPoly") -> "UniPoly":
        a, b = self._pair(other)
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def content_den(self) -> int:
        """Lcm of coefficient denominators (rational coefficients only)."""
        from math import lcm

        den = 1
        for c in self.coeffs:
            if isinstance(c, QuadElem):
                den = lcm(den, c.a.denominator, c.b.denominator)
            else:
                den = lcm(den, c.denominator)
        return den

    def __repr__(self):
        if self.is_zero():
            return "UniPoly(0)"
        parts = [f"({c})*x^{i}" for i, c in enumerate(self.coeffs) if c]
        return "UniPoly(" + " + ".join(parts) + ")"


def _det_bareiss(rows):
    """Exact determinant by division-free-ish Bareiss over a field."""
    m = [row[:] for row in rows]
    n = len(m)
    sign = 1
    for k in range(n):
        if not m[k][k]:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return m[0][0] * 0
        piv = m[k][k]
        for i in range(k + 1, n):
            factor = m[i][k] / piv
            if not factor:
                continue
            for j in range(k, n):
                m[i][j] = m[i][j] - factor * m[k][j]
    det = m[0][0]
    for k in range(1, n):
        det = det * m[k][k]
    return det * sign


def sylvester_matrix(p: UniPoly, q: UniPoly):
    """Sylvester matrix with q's coefficient rows first (repo convention)."""
    n, m = p.degree, q.degree
    if n < 0 or m < 0:
        raise DomainError("resultant requires nonzero polynomials")
    size = n + m
    d = common_field(list(p.coeffs) + list(q.coeffs))
    zero = promote(0, d)
    rows = []
    qdesc = [promote(q.coeff(m - i), d) for i in range(m + 1)]
    pdesc = [promote(p.coeff(n - i), d) for i in range(n + 1)]
    for i in range(n):  # n rows of q
        rows.append([zero] * i + qdesc + [zero] * (size - m - 1 - i))
    for i in range(m):  # m rows of p
        rows.append([zero] * i + pdesc + [zero] * (size - n - 1 - i))
    return rows


def resultant(p: UniPoly, q: UniPoly):
    """Res(p, q) = lc(q)^deg p * prod of p over the roots of q."""
    if p.is_zero() or q.is_zero():
        raise DomainError("resultant of the zero polynomial")
    if p.degree == 0:
        return p.coeffs[0] ** q.degree
    if q.degree == 0:
        return q.coeffs[0] ** p.degree
    return _det_bareiss(sylvester_matrix(p, q))


def discriminant(p: UniPoly):
    """disc(p) = (-1)^(n(n-1)/2) Res(p, p') / lc(p)."""
    n = p.degree
    if n < 1:
        raise DomainError("discriminant needs degree >= 1")
    if n == 1:
        return promote(1, p.d)
    r = resultant(p, p.derivative())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * r / p.lc()


def _rational_roots(p: UniPoly) -> list[Fraction]:
    """All rational roots, via bounded divisor search on an integer model."""
    if p.d is not None:
        raise DomainError("rational-root search needs rational coefficients")
    if p.is_zero():
        raise DomainError("zero polynomial")
    den = p.content_den()
    ints = [int(c * den) for c in p.coeffs]
    roots: list[Fraction] = []
    # strip x | p
    shift = 0
    while ints and ints[0] == 0:
        ints.pop(0)
        shift += 1
    if shift:
        roots.append(Fraction(0))
    if not ints or len(ints) == 1:
        return roots
    a0, an = abs(ints[0]), abs(ints[-1])

    def divisors(n: int) -> list[int]:
        out = []
        i = 1
        while i * i <= n:
            if n % i == 0:
                out.append(i)
                out.append(n // i)
            i += 1
        return sorted(set(out))

    seen = set()
    for num in divisors(a0):
        for den2 in divisors(an):
            for s in (1, -1):
                cand = Fraction(s * num, den2)
                if cand in seen:
                    continue
                seen.add(cand)
                val = 0
                for c in reversed(ints):
                    val = val * cand + c
                if val == 0:
                    roots.append(cand)
    return sorted(set(roots))


def quad_solve(p: UniPoly):
    """Roots of a rational polynomial of degree 1..3 in Q or one Q(sqrt(d)).

    Returns (roots, d): d is None when every root is rational, else the
    squarefree radicand of the single quadratic extension involved.  A cubic
    with no rational root raises UnsupportedSplittingError carrying the
    polynomial itself.
    """
    if p.d is not None:
        raise DomainError("quad_solve expects rational coefficients")
    n = p.degree
    if n not in (1, 2, 3):
        raise DomainError(f"quad_solve handles degrees 1..3, got {n}")
    if n == 1:
        return [-p.coeff(0) / p.coeff(1)], None
    if n == 2:
        a, b, c = p.coeff(2), p.coeff(1), p.coeff(0)
        disc = b * b - 4 * a * c
        if disc == 0:
            return [-b / (2 * a), -b / (2 * a)], None
        root, d = sqrt_rational(disc)
        if d is None:
            r1 = (-b + root) / (2 * a)
            r2 = (-b - root) / (2 * a)
            return sorted([r1, r2]), None
        half = QuadElem.of(rat(-b) / (2 * a), d)
        scale = root / QuadElem.of(2 * a, d)
        return [half - scale, half + scale], d
    # cubic: find one rational root, then solve the quadratic cofactor
    rs = _rational_roots(p)
    if not rs:
        raise UnsupportedSplittingError(
            "cubic has no rational root",
            cubic=[str(c) for c in p.coeffs],
        )
    r0 = rs[0]
    cofactor, rem = p.divmod(UniPoly([-r0, 1]))
    if not rem.is_zero():
        raise DomainError("root division left a remainder")  # pragma: no cover
    others, d = quad_solve(cofactor)
    roots = [r0] + list(others)
    if d is None:
        return sorted(roots), None
    return roots, d

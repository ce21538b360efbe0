"""Igusa-Clebsch invariants of binary sextics via transvectants.

We fix the repo normalisation once and for all:

    i  = (f, f)_4          quartic covariant
    Dl = (i, i)_2          quartic covariant
    I2  = (f, f)_6
    I4  = (i, i)_4
    I6  = (i, Dl)_4
    I10 = disc of the binary sextic form (equals disc(f) for deg-6 f)

These have the classical weights (6, 12, 18, 30), so the three ratios
I2^5/I10, I2^3*I4/I10, I2^2*I6/I10 are the weight-0 absolute invariants
used for isomorphism comparisons.  The numeric root-difference oracle in
the tests pins each invariant to the classical symmetric functions up to
a frozen constant.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .errors import DegenerateModelError, DomainError
from .genus2 import SexticModel
from .multipoly import MultiPoly
from .polys import UniPoly, _det_bareiss
from .rationals import rat


def _binary_form(f: UniPoly, degree: int) -> MultiPoly:
    """Homogenise f to a binary form of the given formal degree in (x, y)."""
    if f.degree > degree:
        raise DomainError("degree exceeds formal degree")
    terms = {}
    for i, c in enumerate(f.coeffs):
        if c:
            terms[(i, degree - i)] = c
    return MultiPoly(2, terms)


def _partial(F: MultiPoly, dx: int, dy: int) -> MultiPoly:
    out = F
    for _ in range(dx):
        out = out.derivative(0)
    for _ in range(dy):
        out = out.derivative(1)
    return out


def transvectant(F: MultiPoly, G: MultiPoly, m: int, n: int, r: int) -> MultiPoly:
    """r-th transvectant of binary forms F (degree m) and G (degree n)."""
    if r > m or r > n:
        raise DomainError("transvectant order exceeds a degree")
    scale = Fraction(factorial(m - r) * factorial(n - r), factorial(m) * factorial(n))
    acc = MultiPoly(2)
    for k in range(r + 1):
        term = _partial(F, r - k, k) * _partial(G, k, r - k)
        acc = acc + ((-1) ** k * comb(r, k)) * term
    return scale * acc


def _as_constant(F: MultiPoly) -> Fraction:
    if F.is_zero():
        return rat(0)
    if F.total_degree() != 0:
        raise DomainError("expected a constant covariant")
    return F.terms[(0, 0)]


def sextic_form_disc(f: UniPoly) -> Fraction:
    """Discriminant of the binary sextic form (roots at infinity included).

    Computed as Res(F_x, F_y) of the two quintic partials with *formal*
    degree bookkeeping, scaled so the result equals disc(f) whenever f has
    actual degree 6.  The scaling constant is pinned below against x^6 - 1.
    """
    F = _binary_form(f, 6)
    Fx = F.derivative(0)
    Fy = F.derivative(1)

    def desc(G: MultiPoly) -> list[Fraction]:
        # coefficients of x^i y^(5-i), descending in x
        return [G.terms.get((i, 5 - i), rat(0)) for i in range(5, -1, -1)]

    a = desc(Fx)
    b = desc(Fy)
    size = 10
    rows = []
    for i in range(5):
        rows.append([rat(0)] * i + a + [rat(0)] * (size - 6 - i))
    for i in range(5):
        rows.append([rat(0)] * i + b + [rat(0)] * (size - 6 - i))
    res = _det_bareiss(rows)
    return res / _SEXTIC_DISC_SCALE


# Res(F_x, F_y) = -1296 * disc(f) for every actual-degree-6 f (checked on
# x^6 - 1 and random sextics); -1296 = -6^4 is the degree-6 scaling constant.
_SEXTIC_DISC_SCALE = rat(-1296)


@dataclass(frozen=True)
class IgusaClebsch:
    I2: Fraction
    I4: Fraction
    I6: Fraction
    I10: Fraction

    @property
    def absolute(self) -> tuple[Fraction, Fraction, Fraction]:
        return (
            self.I2**5 / self.I10,
            self.I2**3 * self.I4 / self.I10,
            self.I2**2 * self.I6 / self.I10,
        )


def igusa_clebsch(model: SexticModel) -> IgusaClebsch:
    """Invariants (I2, I4, I6, I10) in the repo normalisation."""
    f = model.f
    F = _binary_form(f, 6)
    i_cov = transvectant(F, F, 6, 6, 4)
    dl = transvectant(i_cov, i_cov, 4, 4, 2)
    I2 = _as_constant(transvectant(F, F, 6, 6, 6))
    I4 = _as_constant(transvectant(i_cov, i_cov, 4, 4, 4))
    I6 = _as_constant(transvectant(i_cov, dl, 4, 4, 4))
    I10 = sextic_form_disc(f)
    if I10 == 0:
        raise DegenerateModelError("binary sextic form is degenerate")
    return IgusaClebsch(I2=I2, I4=I4, I6=I6, I10=I10)


def moebius_sextic(f: UniPoly, a, b, c, d) -> UniPoly:
    """(cx+d)^6 f((ax+b)/(cx+d)) for exact GL2-equivariance tests."""
    a, b, c, d = rat(a), rat(b), rat(c), rat(d)
    if a * d - b * c == 0:
        raise DomainError("singular Moebius substitution")
    F = _binary_form(f, 6)
    X = MultiPoly(2, {(1, 0): a, (0, 1): b})
    Y = MultiPoly(2, {(1, 0): c, (0, 1): d})
    G = MultiPoly(2)
    for e, cf in F.terms.items():
        G = G + cf * X ** e[0] * Y ** e[1]
    coeffs = [rat(0)] * 7
    for e, cf in G.terms.items():
        coeffs[e[0]] += cf
    return UniPoly(coeffs)

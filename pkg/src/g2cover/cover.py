"""The degree-3 unramified cover and its elliptic quotient.

From a decomposition f = P**2 - Q**3 we build:

  * the cover Y : t**3 = y + P(x), y**2 = f(x), with the lifted
    hyperelliptic involution (x, y, t) -> (x, -y, Q(x)/t) and the order-3
    deck transformation t -> zeta_3 * t (kept symbolic: its only
    computational role is cyclic relabelling of fibers);
  * the plane cubic E : w**3 - 3 Q(x) w - 2 P(x) = 0, the quotient of Y by
    the involution;
  * the fiber of E above a marked x-coordinate, three points whose
    pairwise differences drive the torsion certificates.

Genus bookkeeping: g(Y) = 4 from Riemann-Hurwitz (2g-2 triples along an
unramified degree-3 cover of a genus-2 curve); stored as metadata.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InternalConsistencyError, SingularQuotientError
from .genus2 import Decomposition
from .polys import UniPoly, quad_solve, resultant
from .rationals import rat

COVER_GENUS = 4


@dataclass(frozen=True)
class CoverData:
    """Defining data of the etale triple cover Y -> X."""

    decomposition: Decomposition
    # relation records, coefficient arrays in x (lowest degree first):
    #   t^3 - (y + P(x)) = 0   and   y^2 - f(x) = 0
    relation_t: dict = field(default_factory=dict)
    relation_y: dict = field(default_factory=dict)
    involution: dict = field(default_factory=dict)
    order3: str = "t -> zeta3 * t (cyclic fiber relabelling)"
    genus: int = COVER_GENUS


def build_cover(d: Decomposition) -> CoverData:
    """Assemble the cover and verify the involution identity exactly.

    The check: iota(t)^3 = Q^3 / t^3 must equal P - y modulo y^2 = f,
    equivalently P**2 - f == Q**3 as polynomials, which is the defining
    identity rearranged; verified literally rather than assumed.
    """
    P, Q, f = d.P, d.Q, d.f
    if P * P - f != Q * Q * Q:
        raise InternalConsistencyError("involution identity failed")  # pragma: no cover
    from .rationals import rat_str

    return CoverData(
        decomposition=d,
        relation_t={"t^3": 1, "y": -1, "P": [rat_str(c) for c in P.coeffs]},
        relation_y={"y^2": 1, "f": [rat_str(c) for c in f.coeffs]},
        involution={"x": "x", "y": "-y", "t": "Q(x)/t"},
    )


class QuotientCubic:
    """The plane cubic w**3 - 3 Q(x) w - 2 P(x) = 0 and its ternary form.

    Homogeneous coordinates (U : W : Z) with x = U/W, w = Z/W; the form is
    Z^3 - 3 Q_h(U, W) Z - 2 P_h(U, W) where Q_h, P_h are the degree-2 and
    degree-3 homogenisations.
    """

    __slots__ = ("P", "Q", "ternary")

    def __init__(self, P: UniPoly, Q: UniPoly):
        self.P = P
        self.Q = Q
        self.ternary = self._homogenize()

    def _homogenize(self) -> dict[tuple[int, int, int], Fraction]:
        terms: dict[tuple[int, int, int], Fraction] = {(0, 0, 3): rat(1)}
        for i in range(3):  # -3 Q(x) w * W^3 -> -3 q_i U^i W^(2-i) Z
            c = self.Q.coeff(i)
            if c:
                key = (i, 2 - i, 1)
                terms[key] = terms.get(key, rat(0)) - 3 * c
        for i in range(4):  # -2 P(x) * W^3 -> -2 p_i U^i W^(3-i)
            c = self.P.coeff(i)
            if c:
                key = (i, 3 - i, 0)
                terms[key] = terms.get(key, rat(0)) - 2 * c
        return {k: v for k, v in terms.items() if v}

    def affine(self, x, w):
        """Evaluate w^3 - 3Q(x)w - 2P(x)."""
        return w * w * w - 3 * self.Q(x) * w - 2 * self.P(x)

    def as_multipoly(self):
        """The affine cubic as a bivariate polynomial in (x, w)."""
        from .multipoly import MultiPoly

        terms: dict[tuple[int, int], Fraction] = {(0, 3): rat(1)}
        for i, c in enumerate(self.Q.coeffs):
            if c:
                key = (i, 1)
                terms[key] = terms.get(key, rat(0)) - 3 * c
        for i, c in enumerate(self.P.coeffs):
            if c:
                key = (i, 0)
                terms[key] = terms.get(key, rat(0)) - 2 * c
        return MultiPoly(2, terms)

    def fiber_poly(self, x0) -> UniPoly:
        """The fiber cubic in w above x = x0."""
        return UniPoly([-2 * self.P(rat(x0)), -3 * self.Q(rat(x0)), 0, 1])

    def __repr__(self):
        return f"QuotientCubic(P={self.P!r}, Q={self.Q!r})"


def smoothness_probe(P: UniPoly, Q: UniPoly) -> None:
    """Raise SingularQuotientError unless the ternary cubic is smooth.

    Affine singularities force w = -P/Q at a common root of f and of
    3 Q' P - 2 P' Q; at infinity the section Z = 0 is reduced exactly when
    deg f = 6.  Both conditions reduce to exact resultant checks.
    """
    f = P * P - Q * Q * Q
    if f.degree != 6:
        raise SingularQuotientError(
            "cubic is singular at infinity (deg(P^2 - Q^3) < 6)",
            degree=f.degree,
        )
    if P.is_zero() or Q.is_zero():
        # w^3 - 2P or w(w^2 - 3Q): w-factor / triple structure checks
        if P.is_zero():
            raise SingularQuotientError("P = 0 gives the reducible cubic w(w^2 - 3Q)")
    g = 3 * Q.derivative() * P - 2 * P.derivative() * Q
    if g.is_zero():
        raise SingularQuotientError("gradient locus degenerate", witness="3Q'P-2P'Q=0")
    if resultant(f, g) == 0:
        raise SingularQuotientError(
            "cubic has an affine singular point over a root of f",
            witness="Res(f, 3Q'P - 2P'Q) = 0",
        )


def elliptic_quotient(d: Decomposition | None = None, *, P: UniPoly | None = None,
                      Q: UniPoly | None = None) -> QuotientCubic:
    """The elliptic quotient cubic; runs the smoothness probe.

    Accepts either a verified Decomposition or a raw (P, Q) pair so the
    degenerate examples can surface SingularQuotientError directly.
    """
    if d is not None:
        P, Q = d.P, d.Q
    if P is None or Q is None:
        raise InternalConsistencyError("need a decomposition or both P and Q")
    smoothness_probe(P, Q)
    return QuotientCubic(P, Q)


@dataclass(frozen=True)
class InfinityFiber:
    """The three points of E above the marked x-coordinate.

    w-values are sorted field-first (rational roots before quadratic ones,
    quadratic conjugates by the sign of the sqrt(d) part), which fixes the
    labels p1, p2, p3 deterministically; relabelling only permutes/negates
    the sigma components and never changes torsion orders.
    """

    x0: Fraction
    w_values: tuple
    d: int | None

    @property
    def points(self):
        return [(self.x0, w) for w in self.w_values]


def infinity_fiber(d: Decomposition, x0) -> InfinityFiber:
    x0 = rat(x0)
    if d.f(x0) == 0:
        raise InternalConsistencyError(
            f"marked point x0 = {x0} is special (f(x0) = 0)"
        )
    cubic = UniPoly([-2 * d.P(x0), -3 * d.Q(x0), 0, 1])
    roots, fd = quad_solve(cubic)
    if len(set(map(str, roots))) != 3:
        raise InternalConsistencyError(
            "fiber cubic has a repeated root despite f(x0) != 0"
        )
    total = roots[0] + roots[1] + roots[2]
    if total != 0:
        raise InternalConsistencyError("fiber w-values do not sum to zero")
    return InfinityFiber(x0=x0, w_values=tuple(roots), d=fd)

"""Genus-2 curve models and the cube-minus-square decomposition.

The central object is a pair (P, Q) with deg P <= 3, deg Q <= 2 whose
combination f = P**2 - Q**3 is a separable sextic.  The identity itself is
the whole torsion certificate: div(y + P) = 3*D on y**2 = f, and D ~ 0
would force a repeated root of f, so separability certifies that D has
exact order 3 on the Jacobian.  No divisor arithmetic is ever needed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DegenerateModelError, DomainError, InvalidDecompositionError
from .multipoly import MultiPoly
from .polys import UniPoly, discriminant
from .quadfield import sqrt_rational
from .rationals import rat


class SexticModel:
    """y**2 = f(x) with f separable of degree 5 or 6."""

    __slots__ = ("f", "disc")

    def __init__(self, f: UniPoly):
        if f.d is not None:
            raise DomainError("sextic models are over Q")
        if f.degree not in (5, 6):
            raise DegenerateModelError(
                f"degree {f.degree} is not a genus-2 model", degree=f.degree
            )
        d = discriminant(f)
        if d == 0:
            raise DegenerateModelError("repeated roots: disc(f) = 0", disc="0")
        self.f = f
        self.disc = d

    def __eq__(self, other):
        return isinstance(other, SexticModel) and self.f == other.f

    def __repr__(self):
        return f"SexticModel({self.f!r})"


class Decomposition:
    """The 3-torsion datum (P, Q) with f = P**2 - Q**3 separable of degree 6."""

    __slots__ = ("P", "Q", "f", "disc")

    def __init__(self, P: UniPoly, Q: UniPoly):
        if P.d is not None or Q.d is not None:
            raise DomainError("decompositions are over Q")
        if P.degree > 3:
            raise InvalidDecompositionError("deg P > 3", which="P")
        if Q.degree > 2:
            raise InvalidDecompositionError("deg Q > 2", which="Q")
        f = P * P - Q * Q * Q
        if f.degree != 6:
            raise InvalidDecompositionError(
                f"degree drop: deg(P^2 - Q^3) = {f.degree}, expected 6",
                condition="degree-drop",
                degree=f.degree,
            )
        d = discriminant(f)
        if d == 0:
            raise InvalidDecompositionError(
                "P^2 - Q^3 has a repeated root",
                condition="repeated-roots",
            )
        self.P = P
        self.Q = Q
        self.f = f
        self.disc = d

    def sextic(self) -> SexticModel:
        return SexticModel(self.f)

    def __repr__(self):
        return f"Decomposition(P={self.P!r}, Q={self.Q!r})"


def verify_decomposition(P: UniPoly, Q: UniPoly) -> Decomposition:
    """Check f = P**2 - Q**3 is a separable sextic; the pair is then an
    order-3 certificate for the divisor class (1/3) div(y + P)."""
    return Decomposition(P, Q)


class MarkedPoint:
    """A non-special point (x0, y0) on y**2 = f(x); y0 may be quadratic."""

    __slots__ = ("x0", "y0", "d")

    def __init__(self, f: UniPoly, x0):
        x0 = rat(x0)
        v = f(x0)
        if v == 0:
            raise DomainError(
                f"x = {x0} is a Weierstrass point (f(x0) = 0); marked points must be non-special"
            )
        y0, d = sqrt_rational(v)
        self.x0 = x0
        self.y0 = y0
        self.d = d

    def __repr__(self):
        return f"MarkedPoint(x0={self.x0}, y0={self.y0})"


@dataclass(frozen=True)
class QuarticNormalForm:
    """a9 z^2 + a6 z^3 + z^4 + a8 wz + wz^2 + a7 w^2 + w^3 = 0."""

    a9: Fraction
    a6: Fraction
    a8: Fraction
    a7: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a9", rat(self.a9))
        object.__setattr__(self, "a6", rat(self.a6))
        object.__setattr__(self, "a8", rat(self.a8))
        object.__setattr__(self, "a7", rat(self.a7))

    def as_multipoly(self) -> MultiPoly:
        """The quartic as a bivariate polynomial in (z, w)."""
        z = MultiPoly.var(2, 0)
        w = MultiPoly.var(2, 1)
        c = lambda q: MultiPoly.const(2, q)
        return (
            c(self.a9) * z**2
            + c(self.a6) * z**3
            + z**4
            + c(self.a8) * w * z
            + w * z**2
            + c(self.a7) * w**2
            + w**3
        )


def quartic_to_sextic(q: QuarticNormalForm) -> SexticModel:
    """Hyperelliptic model cut out by the pencil of lines through the node:

        z^2 = (a6^2 - 4 a9) m^6 + (2 a6 - 4 a8) m^5 + (1 - 4 a7) m^4
              + 2 a6 m^3 + 2 m^2 + 1.
    """
    a9, a6, a8, a7 = q.a9, q.a6, q.a8, q.a7
    f = UniPoly(
        [
            rat(1),
            rat(0),
            rat(2),
            2 * a6,
            1 - 4 * a7,
            2 * a6 - 4 * a8,
            a6 * a6 - 4 * a9,
        ]
    )
    try:
        return SexticModel(f)
    except DegenerateModelError as e:
        raise DegenerateModelError(
            "quartic converts to a non-separable model", **e.payload
        ) from e


def pencil_substitution_sextic(q: QuarticNormalForm) -> UniPoly:
    """Independent re-derivation of quartic_to_sextic via z = m*w.

    Substitutes the line pencil into the quartic, divides by w^2 and takes
    the discriminant of the residual quadratic in w.  Used as the oracle
    against the closed-form coefficients.
    """
    # variables (m, w)
    m = MultiPoly.var(2, 0)
    w = MultiPoly.var(2, 1)
    c = lambda v: MultiPoly.const(2, v)
    # quartic with z := m*w, divided by w^2:
    #   m^4 w^2 + (a6 m^3 + m^2 + 1) w + (a9 m^2 + a8 m + a7) = 0
    A = m**4
    B = c(q.a6) * m**3 + m**2 + c(1)
    C = c(q.a9) * m**2 + c(q.a8) * m + c(q.a7)
    disc = B * B - 4 * A * C
    # disc only involves m
    coeffs = [rat(0)] * (disc.degree_in(0) + 1)
    for e, cf in disc.terms.items():
        if e[1] != 0:
            raise DomainError("pencil discriminant still involves w")
        coeffs[e[0]] += cf
    return UniPoly(coeffs)


def intro_family_sextic(a, b) -> SexticModel:
    """mu^2 = a*lambda^6 + lambda^5 + b*lambda^4 - 1."""
    a, b = rat(a), rat(b)
    f = UniPoly([-1, 0, 0, 0, b, 1, a])
    return SexticModel(f)


@dataclass
class SingularityAudit:
    """Report from the plane-quartic singularity scan.

    Only rational singular points are searched (documented limitation);
    points at infinity come with their multiplicities in the degree-4 part.
    """

    affine_singular_points: list[tuple[Fraction, Fraction]]
    infinity_points: list[dict]
    unique_infinity: bool
    smooth_at_infinity: bool | None
    notes: list[str] = field(default_factory=list)


def _unipoly_sqrt(p: UniPoly) -> UniPoly | None:
    """Exact square root of a rational polynomial, or None."""
    if p.is_zero():
        return UniPoly.zero()
    if p.degree % 2:
        return None
    root, d = sqrt_rational(p.lc())
    if d is not None:
        return None
    h = p.degree // 2
    s = [rat(0)] * (h + 1)
    s[h] = root
    for k in range(h - 1, -1, -1):
        # coefficient of x^(h+k) in s^2 is 2 s_h s_k + (known terms)
        acc = rat(0)
        for i in range(k + 1, h):
            j = h + k - i
            if 0 <= j <= h and j > k:
                acc += s[i] * s[j]
        s[k] = (p.coeff(h + k) - acc) / (2 * s[h])
    cand = UniPoly(s)
    return cand if cand * cand == p else None


def _is_perfect_square(q: MultiPoly) -> bool:
    """Obvious-factorisation screen: is the quartic a squared quadratic?

    Tested by checking that enough univariate slices are perfect squares.
    """
    hits = 0
    for k in range(6):
        slice_k = q.eval_partial({1: rat(k)}).to_unipoly(0)
        if slice_k.is_zero():
            continue
        if _unipoly_sqrt(slice_k) is None:
            return False
        hits += 1
    return hits >= 3


def _rational_common_roots(polys: list[UniPoly]) -> list[Fraction]:
    from .polys import _rational_roots

    nonzero = [p for p in polys if not p.is_zero()]
    if not nonzero:
        return []
    g = nonzero[0]
    for p in nonzero[1:]:
        g = g.gcd(p)
    if g.degree < 1:
        return []
    return _rational_roots(g)


def _resultant_wrt_var(F: MultiPoly, G: MultiPoly, var: int, keep: int) -> UniPoly:
    """Res_var(F, G) as a univariate polynomial in ``keep``.

    Computed by evaluation–interpolation at sample points where neither
    leading coefficient degenerates.
    """
    from .polys import resultant

    degF, degG = F.degree_in(var), G.degree_in(var)
    if degF < 1 or degG < 1:
        raise DomainError("resultant elimination needs positive degrees")
    bound = F.degree_in(keep) * degG + G.degree_in(keep) * degF + 1
    samples: list[tuple[Fraction, Fraction]] = []
    a = 0
    while len(samples) < bound + 1 and a < 40 * (bound + 2):
        x = rat((-1) ** a * ((a + 1) // 2))  # 0, -1, 1, -2, 2, ...
        a += 1
        Fx = F.eval_partial({keep: x})
        Gx = G.eval_partial({keep: x})
        pf = Fx.to_unipoly(var)
        pg = Gx.to_unipoly(var)
        if pf.degree != degF or pg.degree != degG:
            continue  # leading coefficient vanished; skip sample
        samples.append((x, rat(resultant(pf, pg))))
    if len(samples) < bound + 1:
        raise DomainError("could not collect enough interpolation samples")
    # Lagrange interpolation
    out = UniPoly.zero()
    xs = [s[0] for s in samples]
    for i, (xi, yi) in enumerate(samples):
        li = UniPoly([1])
        denom = rat(1)
        for j, xj in enumerate(xs):
            if i == j:
                continue
            li = li * UniPoly([-xj, 1])
            denom *= xi - xj
        out = out + li * (yi / denom)
    return out


def quartic_singularity_audit(quartic: MultiPoly) -> SingularityAudit:
    """Audit a plane quartic: rational singular points, points at infinity.

    Precondition screening rejects only blatant non-irreducibility (zero,
    constants, perfect powers detectable as squared content).
    """
    if quartic.arity != 2:
        raise DomainError("expected a bivariate polynomial")
    if quartic.is_zero() or quartic.total_degree() != 4:
        raise DomainError("expected total degree exactly 4")
    notes: list[str] = []
    if _is_perfect_square(quartic):
        return SingularityAudit(
            affine_singular_points=[],
            infinity_points=[],
            unique_infinity=False,
            smooth_at_infinity=None,
            notes=["perfect square of a conic: not a valid genus-2 quartic"],
        )

    Fx = quartic.derivative(0)
    Fy = quartic.derivative(1)

    singular: list[tuple[Fraction, Fraction]] = []
    try:
        R = _resultant_wrt_var(Fx, Fy, var=1, keep=0)
    except DomainError:
        R = UniPoly.zero()
        notes.append("gradient resultant degenerate; fell back to direct scan")
    if R.is_zero():
        candidates_x = [rat(k) for k in range(-10, 11)]
        notes.append("resultant vanished identically: bounded scan only")
    else:
        from .polys import _rational_roots

        candidates_x = _rational_roots(R)
    for x0 in candidates_x:
        col = [
            quartic.eval_partial({0: x0}).to_unipoly(1),
            Fx.eval_partial({0: x0}).to_unipoly(1),
            Fy.eval_partial({0: x0}).to_unipoly(1),
        ]
        if all(p.is_zero() for p in col):
            notes.append(f"line x = {x0} is a component; input not irreducible")
            continue
        for y0 in _rational_common_roots(col):
            if all(p(y0) == 0 for p in col):
                singular.append((x0, y0))

    # points at infinity from the degree-4 homogeneous part
    top = quartic.homogeneous_part(4)
    # binary quartic in (x, y); factor multiplicities via gcd with derivative
    infinity_points: list[dict] = []
    # roots of top(x, y) = 0 in P^1: track as [x0 : y0]
    ydeg = top.degree_in(1)
    # t = x/y chart: top(t, 1)
    pt = UniPoly(
        [
            sum(
                (c for e, c in top.terms.items() if e[0] == k),
                rat(0),
            )
            for k in range(top.degree_in(0) + 1)
        ]
    )
    # direction [1:0] appears when deg of pt < 4 (y divides top)
    mult_inf = 4 - pt.degree if not pt.is_zero() else 4
    if mult_inf > 0:
        infinity_points.append({"point": "[1:0:0]", "multiplicity": mult_inf})
    if not pt.is_zero() and pt.degree >= 1:
        remaining = pt
        from .polys import _rational_roots

        for r in _rational_roots(pt):
            mult = 0
            while True:
                qq, rem = remaining.divmod(UniPoly([-r, 1]))
                if rem.is_zero():
                    remaining = qq
                    mult += 1
                else:
                    break
            infinity_points.append({"point": f"[{r}:1:0]", "multiplicity": mult})
        if remaining.degree >= 1:
            infinity_points.append(
                {
                    "point": "irrational directions",
                    "multiplicity": remaining.degree,
                    "minimal_polynomial": [str(c) for c in remaining.coeffs],
                }
            )

    unique = len(infinity_points) == 1 and "point" in infinity_points[0] and \
        infinity_points[0]["point"] not in ("irrational directions",)
    smooth = None
    if unique:
        smooth = _smooth_at_unique_infinity(quartic, infinity_points[0], notes)
    return SingularityAudit(
        affine_singular_points=sorted(set(singular)),
        infinity_points=infinity_points,
        unique_infinity=unique,
        smooth_at_infinity=smooth,
        notes=notes,
    )


def _smooth_at_unique_infinity(q: MultiPoly, info: dict, notes: list[str]) -> bool:
    """Check smoothness of the projective closure at its unique infinite point."""
    # homogenize with z (arity 3: x, y, z), F(x,y,z) = z^4 q(x/z, y/z)
    terms = {}
    for e, c in q.terms.items():
        terms[(e[0], e[1], 4 - e[0] - e[1])] = c
    F = MultiPoly(3, terms)
    label = info["point"]
    if label == "[1:0:0]":
        # chart x = 1: g(y, z) = F(1, y, z); point (0, 0)
        g = F.eval_partial({0: rat(1)})
        gy = g.derivative(1)
        gz = g.derivative(2)
        val = lambda h: h.eval_partial({1: rat(0), 2: rat(0)}).terms.get((0, 0, 0), rat(0))
        return val(gy) != 0 or val(gz) != 0
    # label "[r:1:0]": chart y = 1, point (x, z) = (r, 0)
    r = rat(label[1:-4].split(":")[0])
    g = F.eval_partial({1: rat(1)})
    gx = g.derivative(0)
    gz = g.derivative(2)
    val = lambda h: h.eval_partial({0: r, 2: rat(0)}).terms.get((0, 0, 0), rat(0))
    return val(gx) != 0 or val(gz) != 0

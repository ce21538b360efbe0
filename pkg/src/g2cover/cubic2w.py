"""Exact transformation of a smooth plane cubic to Weierstrass form.

Classical chord construction from a rational seed point, done generically
so no formulas need to be trusted on faith:

  1. move the seed to the origin and split the cubic into homogeneous
     parts L + Q2 + Q3 (a mild shear keeps every point of interest off the
     vertical line through the seed);
  2. the pencil of lines s = t*u through the seed exhibits the curve as
     v^2 = g(t), a binary quartic, with v = 2*Q3(1,t)*u + Q2(1,t);
  3. the tangent direction t* at the seed gives a rational point
     (t*, q(t*)) on the quartic;
  4. either the seed is a flex (q(t*) = 0: reverse the quartic into a
     cubic directly) or a Riemann-Roch basis {1, X, Y} with poles 2, 3 at
     the seed satisfies a long Weierstrass relation found by an exact
     linear solve.

Every instance is audited on the spot: the resulting j-invariant must
agree with the one computed independently from the classical quartic
invariants I and J of g, and all requested points must land on the curve.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .errors import (
    DomainError,
    InternalConsistencyError,
    NoRationalPointError,
    SingularQuotientError,
)
from .multipoly import MultiPoly
from .polys import UniPoly
from .rationals import rat, recognize_rational
from .weier import EPoint, WeierstrassCurve

_SHEARS = [rat(0), rat(1), rat(-1), rat(1, 2), rat(2), rat(-2), rat(1, 3),
           rat(3), rat(-3), rat(2, 3), rat(5), rat(-5), rat(1, 5), rat(7)]


def quartic_invariants(g: UniPoly) -> tuple[Fraction, Fraction]:
    """Classical I, J of a binary quartic (formal degree 4)."""
    a, b, c, d, e = (g.coeff(4), g.coeff(3), g.coeff(2), g.coeff(1), g.coeff(0))
    I = 12 * a * e - 3 * b * d + c * c
    J = 72 * a * c * e + 9 * b * c * d - 27 * a * d * d - 27 * b * b * e - 2 * c**3
    return I, J


def quartic_j(g: UniPoly) -> Fraction:
    I, J = quartic_invariants(g)
    den = 4 * I**3 - J * J
    if den == 0:
        raise SingularQuotientError("quartic model is degenerate (4I^3 = J^2)")
    return 6912 * I**3 / den


def _solve_linear_exact(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Solve an overdetermined consistent rational system exactly."""
    m = [row[:] + [b] for row, b in zip(rows, rhs)]
    ncols = len(rows[0])
    pivots = []
    r = 0
    for col in range(ncols):
        piv = None
        for i in range(r, len(m)):
            if m[i][col]:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pv = m[r][col]
        m[r] = [v / pv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [vi - f * vr for vi, vr in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
    # consistency
    for i in range(r, len(m)):
        if m[i][ncols]:
            raise InternalConsistencyError("linear system inconsistent")
    sol = [rat(0)] * ncols
    for i, col in enumerate(pivots):
        sol[col] = m[i][ncols]
    return sol


@dataclass
class CubicWeierstrassMap:
    """Forward/backward maps between an affine plane cubic and short form.

    ``forward`` and ``backward`` evaluate points exactly (coordinates in Q
    or one quadratic field); ``forward_records``/``backward_records`` hold
    the composed bivariate rational functions for serialization.
    """

    curve: WeierstrassCurve
    seed: tuple[Fraction, Fraction]
    forward: Callable
    backward: Callable
    forward_records: dict
    backward_records: dict


def _homogenize_coeffs(p: UniPoly, deg: int) -> MultiPoly:
    """p(s/u) * u^deg as a binary (u, s)-form."""
    terms = {}
    for i in range(deg + 1):
        c = p.coeff(i)
        if c:
            terms[(deg - i, i)] = c
    return MultiPoly(2, terms)


def cubic_to_weierstrass(
    cubic,
    seed: tuple | None = None,
    ensure_points: list | None = None,
    search_height: int = 10**4,
):
    """(WeierstrassCurve, CubicWeierstrassMap) for a smooth affine cubic.

    ``cubic`` is a QuotientCubic or a bivariate MultiPoly in (x, w) of
    total degree 3.  ``seed`` is a rational point on it (searched for by
    bounded height when omitted).  ``ensure_points`` must map cleanly; the
    shear is chosen accordingly.
    """
    F = cubic.as_multipoly() if hasattr(cubic, "as_multipoly") else cubic
    if not isinstance(F, MultiPoly) or F.arity != 2 or F.total_degree() != 3:
        raise DomainError("expected an affine plane cubic in two variables")
    if seed is None:
        seed = find_rational_point(F, search_height)
    x0, w0 = rat(seed[0]), rat(seed[1])
    if F((x0, w0)) != 0:
        raise DomainError(f"seed {seed} is not on the cubic")
    ensure_points = ensure_points or []

    last_err: Exception | None = None
    for eps in _SHEARS:
        try:
            return _attempt(F, x0, w0, eps, ensure_points)
        except _RetryShear as e:
            last_err = e
            continue
    raise InternalConsistencyError(
        f"no usable shear found for seed {seed}: {last_err}"
    )


class _RetryShear(Exception):
    pass


def _attempt(F: MultiPoly, x0: Fraction, w0: Fraction, eps: Fraction,
             ensure_points: list):
    # coordinates u = (x - x0) + eps*(w - w0), s = w - w0
    # inverse: w = w0 + s, x = x0 + u - eps*s
    u_of = lambda x, w: (x - x0) + eps * (w - w0)
    s_of = lambda x, w: w - w0

    # G(u, s) = F(x0 + u - eps*s, w0 + s)
    U = MultiPoly.var(2, 0)
    S = MultiPoly.var(2, 1)
    subs_x = MultiPoly.const(2, x0) + U - eps * S
    subs_w = MultiPoly.const(2, w0) + S
    G = MultiPoly(2)
    for e, c in F.terms.items():
        G = G + c * subs_x ** e[0] * subs_w ** e[1]
    if G.terms.get((0, 0), rat(0)) != 0:  # pragma: no cover
        raise InternalConsistencyError("seed translation failed")

    def part(deg: int) -> MultiPoly:
        return G.homogeneous_part(deg)

    L, Q2, Q3 = part(1), part(2), part(3)
    if L.is_zero():
        raise DomainError("seed is a singular point of the cubic")
    a = L.terms.get((1, 0), rat(0))
    b = L.terms.get((0, 1), rat(0))
    if b == 0:
        raise _RetryShear("tangent at seed is vertical in this chart")

    def line_poly(H: MultiPoly, deg: int) -> UniPoly:
        cs = [rat(0)] * (deg + 1)
        for e, c in H.terms.items():
            cs[e[1]] += c
        return UniPoly(cs)

    l = UniPoly([a, b])
    q = line_poly(Q2, 2)
    c3 = line_poly(Q3, 3)
    tstar = -a / b
    g = q * q - 4 * l * c3
    ghat = g.shift(tstar)  # point (tau, v) = (0, qstar)
    qstar = q(tstar)

    # degeneracy guards for the points that must map (the seed maps to O)
    for pt in ensure_points:
        px, pw = pt
        if px == x0 and pw == w0:
            continue
        uu = u_of(px, pw)
        if not uu:
            raise _RetryShear("a required point sits on the vertical line")
        tt = s_of(px, pw) / uu
        if tt == tstar:
            raise _RetryShear("a required point sits on the seed tangent")

    if ghat.degree < 3:
        raise SingularQuotientError("cubic is not of genus 1 (quartic degenerates)")

    if qstar != 0:
        out = _branch_general(ghat, qstar)
    else:
        out = _branch_flex(ghat)
    long_curve, fwd_q, back_q = out

    short, fwd_s, back_s = long_curve.short_model()

    def forward(pt) -> EPoint:
        px, pw = pt
        if (px, pw) == (x0, w0):
            return EPoint.zero(short)
        uu = u_of(px, pw)
        if not uu:
            raise DomainError("point on the excluded vertical line; rebuild with ensure_points")
        tt = s_of(px, pw) / uu
        vv = 2 * c3(tt) * uu + q(tt)
        XY = fwd_q(tt - tstar, vv)
        if XY is None:
            return EPoint.zero(short)
        X, Y = XY
        return fwd_s(EPoint(long_curve, X, Y))

    def backward(pt: EPoint):
        if pt.infinity:
            return (x0, w0)
        lp = back_s(pt)
        tau_v = back_q(lp.x, lp.y)
        if tau_v is None:
            return (x0, w0)
        tau, vv = tau_v
        tt = tau + tstar
        cden = c3(tt)
        if not cden:
            # the line in direction tt meets the cubic once more at infinity;
            # the remaining affine intersection solves the linear equation
            qt = q(tt)
            if not qt or vv != qt:
                raise DomainError("image corresponds to a point at infinity of the cubic")
            uu = -l(tt) / qt
        else:
            uu = (vv - q(tt)) / (2 * cden)
        ss = tt * uu
        return (x0 + uu - eps * ss, w0 + ss)

    records = _composed_records(x0, w0, eps, q, c3, tstar, qstar, ghat, long_curve)
    gmap = CubicWeierstrassMap(
        curve=short,
        seed=(x0, w0),
        forward=forward,
        backward=backward,
        forward_records=records["forward"],
        backward_records=records["backward"],
    )

    # per-instance audits -------------------------------------------------
    jq = quartic_j(ghat)
    if jq != short.j_invariant():
        raise InternalConsistencyError(
            "j-invariant cross-check failed between quartic and Weierstrass model"
        )  # pragma: no cover
    for pt in ensure_points:
        forward(pt)  # EPoint constructor verifies the curve equation
    return short, gmap


def _branch_general(ghat: UniPoly, qstar: Fraction):
    """Quartic v^2 = ghat(tau) with rational point (0, qstar), qstar != 0.

    X = 2q*(v + p1)/tau^2 and Y = 4q*^2 (v + p2)/tau^3 have poles 2, 3 at
    the point and matching leading Laurent coefficients, so a monic long
    Weierstrass relation exists; it is found by an exact linear solve over
    the coefficients of the two polynomial identities (the v-part and the
    v-free part after reducing v^2 = ghat).
    """
    alpha = ghat.coeff(1) / (2 * qstar)
    gamma = (ghat.coeff(2) - alpha * alpha) / (2 * qstar)
    p1 = UniPoly([qstar, alpha])
    p2 = UniPoly([qstar, alpha, gamma])
    tau = UniPoly.x()
    sX = 2 * qstar
    sY = 4 * qstar * qstar

    # unknowns (a1, a2, a3, a4, a6)
    base_v = sY * sY * 2 * p2 - sX**3 * (ghat + 3 * p1 * p1)
    cols_v = [
        sX * sY * tau * (p1 + p2),      # a1
        -2 * sX * sX * tau**2 * p1,     # a2
        sY * tau**3,                    # a3
        -sX * tau**4,                   # a4
        UniPoly.zero(),                 # a6
    ]
    base_f = sY * sY * (ghat + p2 * p2) - sX**3 * (3 * ghat * p1 + p1**3)
    cols_f = [
        sX * sY * tau * (ghat + p1 * p2),
        -sX * sX * tau**2 * (ghat + p1 * p1),
        sY * tau**3 * p2,
        -sX * tau**4 * p1,
        -(tau**6),
    ]
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for base, cols in ((base_v, cols_v), (base_f, cols_f)):
        deg = max([base.degree] + [p.degree for p in cols])
        for k in range(deg + 1):
            rows.append([p.coeff(k) for p in cols])
            rhs.append(-base.coeff(k))
    a1, a2, a3, a4, a6 = _solve_linear_exact(rows, rhs)
    curve = WeierstrassCurve(a1, a2, a3, a4, a6)

    def fwd(tau_val, v_val):
        if not tau_val:
            if v_val == qstar:
                return None  # the seed; caller returns O
            raise DomainError("point on the seed tangent; rebuild with ensure_points")
        t2 = tau_val * tau_val
        X = sX * (v_val + qstar + alpha * tau_val) / t2
        Y = sY * (v_val + qstar + alpha * tau_val + gamma * t2) / (t2 * tau_val)
        return X, Y

    def back(X, Y):
        if not Y:
            raise DomainError("backward map undefined at a 2-torsion point")
        tau_val = (sY / sX) * (X + sX * gamma) / Y
        v_val = X * tau_val * tau_val / sX - qstar - alpha * tau_val
        return tau_val, v_val

    return curve, fwd, back


def _branch_flex(ghat: UniPoly):
    """Quartic v^2 = ghat with ghat(0) = 0: the seed is a flex."""
    h, rem = ghat.divmod(UniPoly.x())
    if not rem.is_zero():  # pragma: no cover
        raise InternalConsistencyError("expected tau | ghat at a flex seed")
    h0 = h.coeff(0)
    if h0 == 0:
        raise SingularQuotientError("quartic has a double root: singular model")
    h1, h2, h3 = h.coeff(1), h.coeff(2), h.coeff(3)
    curve = WeierstrassCurve(0, h1, 0, h0 * h2, h0 * h0 * h3)

    def fwd(tau_val, v_val):
        if not tau_val:
            return None  # seed -> O
        X = h0 / tau_val
        Y = h0 * v_val / (tau_val * tau_val)
        return X, Y

    def back(X, Y):
        if not X:
            raise DomainError("backward map undefined where X = 0")
        tau_val = h0 / X
        v_val = Y * tau_val * tau_val / h0
        return tau_val, v_val

    return curve, fwd, back


def _composed_records(x0, w0, eps, q, c3, tstar, qstar, ghat, long_curve) -> dict:
    """Composed bivariate rational maps (x, w) <-> short model, as records."""
    U = MultiPoly(2, {(1, 0): rat(1), (0, 0): -x0}) + MultiPoly(
        2, {(0, 1): eps, (0, 0): -eps * w0}
    )
    Ssym = MultiPoly(2, {(0, 1): rat(1), (0, 0): -w0})
    chom = _hom_in(c3, 3, U, Ssym)
    qhom = _hom_in(q, 2, U, Ssym)
    tau_num = Ssym - tstar * U          # tau = tau_num / U
    v_num = 2 * chom + qhom             # v = v_num / U^2
    records = {
        "forward": {
            "chart": "x = U-coordinate of the genus-2 model, w = cubic coordinate",
            "tau": {"num": _mp_record(tau_num), "den": _mp_record(U)},
            "v": {"num": _mp_record(v_num), "den_power_of_u": 2},
            "note": "X, Y follow by the recorded branch formulas; see docs",
        },
        "backward": {
            "tangent_direction": str(tstar),
            "q_at_tangent": str(qstar),
            "seed_to": "point at infinity of the Weierstrass model",
        },
    }
    return records


def _hom_in(p: UniPoly, deg: int, U: MultiPoly, S: MultiPoly) -> MultiPoly:
    """p(S/U) * U^deg with U, S arbitrary bivariate polynomials."""
    out = MultiPoly(2)
    for i in range(deg + 1):
        c = p.coeff(i)
        if c:
            out = out + c * S**i * U ** (deg - i)
    return out


def _mp_record(p: MultiPoly) -> list:
    return [[list(e), str(c)] for e, c in sorted(p.terms.items())]


def find_rational_point(F: MultiPoly, height_bound: int = 10**4,
                        candidate_cap: int = 60_000) -> tuple[Fraction, Fraction]:
    """Bounded-height search for a rational point on an affine cubic.

    Enumerates x by increasing height, finds rational roots of the fiber
    polynomial in w numerically and verifies them exactly.  Raises
    NoRationalPointError with the bound on failure; never a wrong answer.
    """
    tried = 0
    for num, den in _farey_heights(height_bound):
        x = rat(num, den)
        tried += 1
        if tried > candidate_cap:
            break
        fiber = _fiber_in_w(F, x)
        if fiber.is_zero():
            continue
        if fiber.degree == 0:
            continue
        for w in _exact_rational_roots_numeric(fiber):
            return (x, w)
    raise NoRationalPointError(
        "no rational point found on the cubic",
        height_bound=height_bound,
        candidates_tried=min(tried, candidate_cap),
    )


def _fiber_in_w(F: MultiPoly, x: Fraction) -> UniPoly:
    cs = [rat(0)] * (F.degree_in(1) + 1)
    for e, c in F.terms.items():
        cs[e[1]] += c * x ** e[0]
    return UniPoly(cs)


def _exact_rational_roots_numeric(p: UniPoly) -> list[Fraction]:
    """Rational roots of p via float roots + recognition + exact check."""
    import mpmath

    den = p.content_den()
    ints = [int(c * den) for c in p.coeffs]
    while ints and ints[-1] == 0:
        ints.pop()
    if len(ints) <= 1:
        return []
    roots = []
    try:
        approx = mpmath.polyroots([mpmath.mpf(c) for c in reversed(ints)],
                                  maxsteps=200, extraprec=80)
    except Exception:
        return []
    seen = set()
    for r in approx:
        if abs(mpmath.im(r)) > 1e-20 * (1 + abs(mpmath.re(r))):
            continue
        cand = recognize_rational(float(mpmath.re(r)), max_den=10**6)
        if cand is None or cand in seen:
            continue
        seen.add(cand)
        if p(cand) == 0:
            roots.append(cand)
    return sorted(roots)


def _farey_heights(bound: int):
    """(num, den) pairs ordered by max(|num|, den), gcd-reduced."""
    from math import gcd

    yield (0, 1)
    h = 1
    while h <= bound:
        # denominators 1..h with numerator +-h, and denominator h with |num| < h
        for den in range(1, h + 1):
            if gcd(h, den) == 1:
                yield (h, den)
                yield (-h, den)
        for num in range(0, h):
            if gcd(num, h) == 1:
                yield (num, h)
                if num:
                    yield (-num, h)
        h += 1

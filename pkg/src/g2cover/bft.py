"""The universal three-torsion family and its exact/numeric checks.

A two-parameter-free presentation of genus-2 curves whose Jacobian carries
two independent rational 3-torsion points: three pairs (G_i, H_i) of
polynomials in Q(r, s, t)[x] with scalars lambda_i such that

    f = G_i^2 + lambda_i * H_i^3     is independent of i.

universal_family_check verifies that statement as an exact multivariate
polynomial identity (clearing the (st+1)^2 denominator of the third
presentation).  jacobian_rank_probe estimates the Jacobian determinant of
the three associated j-invariant functions by central finite differences,
certifying (numerically) that the joint j-map is dominant.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .errors import DomainError
from .multipoly import MultiPoly
from .numericj import TernaryCubic, aronhold_j
from .rationals import rat

# variables (r, s, t, x) -> indices 0..3
_R, _S, _T, _X = (MultiPoly.var(4, i) for i in range(4))


def _c(v) -> MultiPoly:
    return MultiPoly.const(4, v)


def _build():
    r, s, t, x = _R, _S, _T, _X
    G1 = (
        (s - s * t - _c(1)) * x**3
        + _c(3) * s * (r - t) * x**2
        + _c(3) * s * r * (r - t) * x
        - s * t**2 + s * r**3 + t
    )
    H1 = x**2 + r * x + t
    G2 = (
        (s - s * t + _c(1)) * x**3
        + _c(3) * s * (r - t) * x**2
        + _c(3) * s * r * (r - t) * x
        - s * t**2 + s * r**3 - t
    )
    H2 = x**2 + x + r
    G3_num = (
        (s**2 * t**2 - s**2 * t + _c(2) * s * t + s + _c(1)) * x**3
        + (_c(3) * s**2 * t**2 - _c(3) * s**2 * t * r + _c(3) * s * t + _c(3) * s * r) * x**2
        + (_c(3) * s**2 * t**2 * r - _c(3) * s**2 * t * r**2 + _c(3) * s * t * r + _c(3) * s * r**2) * x
        + s**2 * t**3 - s**2 * t * r**3 + _c(2) * s * t**2 + s * r**3 + t
    )
    H3 = s * x**2 + (_c(2) * s * r - s * t - _c(1)) * x + s * r**2
    denom = s * t + _c(1)  # G3 = G3_num / denom, lambda3 = 4t / denom^2
    return G1, H1, G2, H2, G3_num, H3, denom


G1, H1, G2, H2, G3_NUM, H3, DENOM = _build()


@dataclass
class UniversalCheckResult:
    ok: bool
    identity_12: bool
    identity_13: bool
    detail: str

    def as_json(self) -> dict:
        return {
            "passed": self.ok,
            "identity_1_equals_2": self.identity_12,
            "identity_1_equals_3_cleared": self.identity_13,
            "detail": self.detail,
        }


def universal_family_check(mutate: tuple | None = None) -> UniversalCheckResult:
    """Exact identity check; ``mutate`` optionally corrupts one G1 term
    (exponent tuple, delta) to demonstrate detection."""
    g1 = G1
    if mutate is not None:
        expo, delta = mutate
        g1 = g1 + MultiPoly(4, {tuple(expo): rat(delta)})
    r, s, t = _R, _S, _T
    f1 = g1 * g1 + _c(4) * s * H1**3
    f2 = G2 * G2 + _c(4) * s * t * H2**3
    id12 = f1 == f2
    lhs = DENOM * DENOM * f1
    rhs = G3_NUM * G3_NUM + _c(4) * t * H3**3
    id13 = lhs == rhs
    ok = id12 and id13
    return UniversalCheckResult(
        ok=ok,
        identity_12=id12,
        identity_13=id13,
        detail="G1^2 + 4s H1^3 = G2^2 + 4st H2^3 = (st+1)^-2 (G3~^2 + 4t H3^3)"
        if ok else "identity violated",
    )


def _lambda_values(r: Fraction, s: Fraction, t: Fraction):
    den = s * t + 1
    if den == 0 or s == 0 or t == 0:
        raise DomainError("sample on the pole locus (need s, t, st+1 nonzero)")
    return [rat(4) * s, rat(4) * s * t, rat(4) * t / (den * den)]


def _univariate_in_x(poly: MultiPoly, r, s, t) -> list[Fraction]:
    spec = poly.eval_partial({0: rat(r), 1: rat(s), 2: rat(t)})
    out = [rat(0)] * (spec.degree_in(3) + 1)
    for e, c in spec.terms.items():
        out[e[3]] += c
    return out


def joint_j(r, s, t, precision: int = 50) -> list[complex]:
    """(j1, j2, j3) of the three quotient cubics at a rational sample.

    Q_i needs a cube root of -lambda_i, so the evaluation is numeric: the
    choice of root does not change j (the three lifted cubics are
    isomorphic).
    """
    r, s, t = rat(r), rat(s), rat(t)
    lams = _lambda_values(r, s, t)
    gs = [G1, G2, G3_NUM]
    hs = [H1, H2, H3]
    out = []
    with mpmath.workdps(precision):
        den = s * t + 1
        for i in range(3):
            gcoeffs = [mpmath.mpf(c.numerator) / c.denominator
                       for c in _univariate_in_x(gs[i], r, s, t)]
            if i == 2:
                gcoeffs = [c / mpmath.mpf(den.numerator) * den.denominator
                           for c in gcoeffs]
            hcoeffs = [mpmath.mpf(c.numerator) / c.denominator
                       for c in _univariate_in_x(hs[i], r, s, t)]
            lam = mpmath.mpf(lams[i].numerator) / lams[i].denominator
            cbrt = (-mpmath.mpc(lam)) ** (mpmath.mpf(1) / 3)
            qcoeffs = [cbrt * c for c in hcoeffs]
            cubic = TernaryCubic.from_pq(gcoeffs, qcoeffs)
            out.append(aronhold_j(cubic, precision=precision))
    return out


@dataclass
class JacobianProbeResult:
    sample: tuple
    step: float
    determinant: complex
    error_estimate: float
    js: list
    conclusive: bool

    def as_json(self) -> dict:
        return {
            "sample": [str(v) for v in self.sample],
            "step": self.step,
            "determinant": {"re": self.determinant.real, "im": self.determinant.imag},
            "abs_determinant": abs(self.determinant),
            "error_estimate": self.error_estimate,
            "j_values": [{"re": j.real, "im": j.imag} for j in self.js],
            "conclusive": self.conclusive,
        }


def jacobian_rank_probe(sample, step: Fraction | float = Fraction(1, 10**6),
                        precision: int = 60) -> JacobianProbeResult:
    """Central-difference 3x3 Jacobian determinant of (j1, j2, j3).

    The error estimate is |det(h) - det(h/2)| from step halving; the probe
    is conclusive when |det| exceeds 10x that estimate.
    """
    r, s, t = (rat(v) for v in sample)
    h = Fraction(str(step)) if isinstance(step, float) else rat(step)

    def det_at(hh: Fraction) -> complex:
        cols = []
        for k in range(3):
            deltas = [rat(0)] * 3
            deltas[k] = hh
            plus = joint_j(r + deltas[0], s + deltas[1], t + deltas[2], precision)
            minus = joint_j(r - deltas[0], s - deltas[1], t - deltas[2], precision)
            denom = 2 * float(hh)
            cols.append([(p - q) / denom for p, q in zip(plus, minus)])
        # det of the 3x3 with rows = d j_i, cols = d / d(param k)
        m = [[cols[k][i] for k in range(3)] for i in range(3)]
        return (
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        )

    d1 = det_at(h)
    d2 = det_at(h / 2)
    err = abs(d1 - d2)
    js = joint_j(r, s, t, precision)
    return JacobianProbeResult(
        sample=(r, s, t), step=float(h), determinant=d2,
        error_estimate=err, js=js, conclusive=abs(d2) > 10 * err,
    )

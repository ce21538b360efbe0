"""The sigma-torsion pipeline and effectivity certificates.

Given a decomposition f = P**2 - Q**3 and a non-special marked
x-coordinate, the three fiber points above it on the quotient cubic map to
a Weierstrass model, where the cyclic differences

    sigma1 = phi(p1) - phi(p2),   sigma2 = phi(p2) - phi(p3)

are tested for torsion.  Both finite means the differences of the cover's
three points at infinity generate a co-rank >= 2 subgroup of its Jacobian,
which is exactly the effectivity criterion's hypothesis; the verdict and
the exact orders form the certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cover import InfinityFiber, elliptic_quotient, infinity_fiber
from .cubic2w import cubic_to_weierstrass
from .errors import G2Error, InternalConsistencyError
from .genus2 import Decomposition
from .quadfield import QuadElem
from .rationals import rat, rat_str
from .weier import (
    EPoint,
    QUADRATIC_TORSION_BOUND,
    WeierstrassCurve,
    add,
    sub,
    torsion_order_quadratic,
    torsion_order_rational,
)

VERDICT_APPLICABLE = "BiluApplicable"
VERDICT_NOT_APPLICABLE = "NotApplicable"
VERDICT_INCONCLUSIVE = "Inconclusive"

CERTIFICATE_BASIS = (
    "both differences torsion; Lemma(torsion iff) + Thm(Bilu, co-rank >= 2)"
)


@dataclass
class SigmaReport:
    decomposition: Decomposition
    marked_x: Fraction
    fiber: InfinityFiber | None
    curve: WeierstrassCurve | None
    sigma1: EPoint | None
    sigma2: EPoint | None
    order1: int | None
    order2: int | None
    verdict: str
    reason: str | None = None
    torsion_bound: int = QUADRATIC_TORSION_BOUND

    @property
    def applicable(self) -> bool:
        return self.verdict == VERDICT_APPLICABLE

    def order_labels(self) -> list:
        def lab(o):
            if o is None:
                return None
            return o

        return [lab(self.order1), lab(self.order2)]


def _scalar_json(v):
    if isinstance(v, QuadElem):
        return {"a": rat_str(v.a), "b": rat_str(v.b), "d": v.d}
    return rat_str(v)


def _point_json(p: EPoint | None):
    if p is None:
        return None
    if p.infinity:
        return "O"
    return {"x": _scalar_json(p.x), "y": _scalar_json(p.y)}


def certificate_json(report: SigmaReport) -> dict:
    """The BiluCertificate wire record."""
    d = report.decomposition
    out = {
        "curve": {
            "f": [rat_str(c) for c in d.f.coeffs],
            "P": [rat_str(c) for c in d.P.coeffs],
            "Q": [rat_str(c) for c in d.Q.coeffs],
            "marked_x": rat_str(report.marked_x),
        },
        "marked_x": rat_str(report.marked_x),
        "elliptic": None,
        "fiber": None,
        "sigma": {
            "sigma1": _point_json(report.sigma1),
            "sigma2": _point_json(report.sigma2),
        },
        "sigma_orders": report.order_labels(),
        "torsion_bound": report.torsion_bound,
        "verdict": report.verdict,
        "basis": CERTIFICATE_BASIS,
    }
    if report.curve is not None:
        out["elliptic"] = {
            "a_invariants": [
                rat_str(report.curve.a1),
                rat_str(report.curve.a2),
                rat_str(report.curve.a3),
                rat_str(report.curve.a4),
                rat_str(report.curve.a6),
            ],
            "j": rat_str(report.curve.j_invariant()),
        }
    if report.fiber is not None:
        out["fiber"] = {
            "x0": rat_str(report.fiber.x0),
            "w_values": [_scalar_json(w) for w in report.fiber.w_values],
            "field_d": report.fiber.d,
        }
    if report.reason:
        out["reason"] = report.reason
    return out


def sigma_torsion(
    d: Decomposition,
    x0,
    torsion_bound: int = QUADRATIC_TORSION_BOUND,
    search_height: int = 10**4,
) -> SigmaReport:
    """Run the full certificate pipeline at the marked x-coordinate.

    Failures that merely block the computation (fiber cubic irreducible
    over Q(sqrt(d)), no rational point found on the cubic) yield an
    Inconclusive report with the reason; they are never silent.
    """
    x0 = rat(x0)
    try:
        fiber = infinity_fiber(d, x0)
    except G2Error as e:
        return SigmaReport(
            decomposition=d, marked_x=x0, fiber=None, curve=None,
            sigma1=None, sigma2=None, order1=None, order2=None,
            verdict=VERDICT_INCONCLUSIVE, reason=f"{e.code}: {e}",
            torsion_bound=torsion_bound,
        )
    try:
        cubic = elliptic_quotient(d)
        curve, gmap = cubic_to_weierstrass(
            cubic, seed=None, ensure_points=fiber.points,
            search_height=search_height,
        )
        phi = [gmap.forward(p) for p in fiber.points]
    except G2Error as e:
        return SigmaReport(
            decomposition=d, marked_x=x0, fiber=fiber, curve=None,
            sigma1=None, sigma2=None, order1=None, order2=None,
            verdict=VERDICT_INCONCLUSIVE, reason=f"{e.code}: {e}",
            torsion_bound=torsion_bound,
        )
    s1 = sub(curve, phi[0], phi[1])
    s2 = sub(curve, phi[1], phi[2])
    # cyclic sum relation: sigma1 + sigma2 = phi(p1) - phi(p3) exactly
    if add(curve, s1, s2) != sub(curve, phi[0], phi[2]):
        raise InternalConsistencyError("sigma sum relation failed")  # pragma: no cover

    def order_of(s: EPoint):
        if s.d is None:
            return torsion_order_rational(curve, s)
        return torsion_order_quadratic(curve, s, bound=torsion_bound)

    o1, o2 = order_of(s1), order_of(s2)
    verdict = VERDICT_APPLICABLE if (o1 is not None and o2 is not None) else \
        VERDICT_NOT_APPLICABLE
    return SigmaReport(
        decomposition=d, marked_x=x0, fiber=fiber, curve=curve,
        sigma1=s1, sigma2=s2, order1=o1, order2=o2, verdict=verdict,
        torsion_bound=torsion_bound,
    )

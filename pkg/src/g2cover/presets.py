"""Preset registry: one entry per worked example plus the two quartic
family sign-variants and the universal-family data.

Each preset carries its defining data and, where the source states a
result, the expected outcome; `preset <name>` on the CLI emits the JSON
record and the matching verifier reproduces the expectation.

ex8_7 note: the printed quartic for the different-orders example is
refuted computationally (see tests and the repo docs): at its rational
point at infinity the fiber is a Galois-conjugate pair, which forces the
two difference orders to be equal-or-dividing, and its unique rational
cube-minus-square datum gives non-torsion differences.  The registry
therefore ships, under the same name, a curve constructed here that
genuinely realises the claimed phenomenon (orders 2 and 3, certificate
checkable), plus the printed quartic under ex8_7_printed_quartic for the
record.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DomainError
from .genus2 import Decomposition, verify_decomposition
from .multipoly import MultiPoly
from .polys import UniPoly
from .rationals import rat_str
from .families import ParamFamily

F = Fraction


@dataclass(frozen=True)
class Preset:
    name: str
    kind: str  # decomposition | family | quartic-family | bft
    payload: object
    marked_x: Fraction | None = None
    expected: dict = field(default_factory=dict)
    notes: str = ""


def _mp(arity: int, terms: dict) -> MultiPoly:
    return MultiPoly(arity, terms)


def _family_ex8_1() -> ParamFamily:
    # P = b3 x^3, Q = c2 x^2 + 3; params (b3, c2), x last
    P = _mp(3, {(1, 0, 3): 1})
    Q = _mp(3, {(0, 1, 2): 1, (0, 0, 0): 3})
    return ParamFamily("ex8_1", ("b3", "c2"), P, Q, marked_x=F(0))


def _family_ex8_2() -> ParamFamily:
    # P = b3 x^3 + b1 x + 10, Q = c2 x^2 + 7; params (b3, b1, c2)
    P = _mp(4, {(1, 0, 0, 3): 1, (0, 1, 0, 1): 1, (0, 0, 0, 0): 10})
    Q = _mp(4, {(0, 0, 1, 2): 1, (0, 0, 0, 0): 7})
    return ParamFamily("ex8_2", ("b3", "b1", "c2"), P, Q, marked_x=F(0))


def _family_ex8_3() -> ParamFamily:
    # order-2 surface solved for b3: b3 = (7/27) b1 c2 - (4/3^7) b1^3
    # (the source prints 3^9; the exponent is corrected here, see docs)
    # params (b1, c2); P = b3(b1,c2) x^3 + b1 x + 10
    P = _mp(
        3,
        {
            (1, 1, 3): F(7, 27),
            (3, 0, 3): F(-4, 3**7),
            (1, 0, 1): 1,
            (0, 0, 0): 10,
        },
    )
    Q = _mp(3, {(0, 1, 2): 1, (0, 0, 0): 7})
    return ParamFamily("ex8_3", ("b1", "c2"), P, Q, marked_x=F(0))


def _surface_ex8_4() -> MultiPoly:
    # the printed order-3 surface, variables (b1, b3, c2)
    return _mp(
        3,
        {
            (8, 0, 0): 1,
            (6, 0, 1): F(-837, 2),
            (5, 1, 0): F(3645, 2),
            (4, 0, 2): F(951345, 16),
            (3, 1, 1): F(-4113747, 8),
            (2, 2, 0): F(10451673, 16),
            (2, 0, 3): F(-42338133, 16),
            (1, 1, 2): F(301327047, 8),
            (0, 2, 1): F(-1420541793, 16),
            (0, 0, 4): F(-129140163, 4),
        },
    )


def _family_ex8_4() -> ParamFamily:
    # params (b1, b3, c2) in the order the printed surface uses
    P = _mp(4, {(0, 1, 0, 3): 1, (1, 0, 0, 1): 1, (0, 0, 0, 0): 10})
    Q = _mp(4, {(0, 0, 1, 2): 1, (0, 0, 0, 0): 7})
    surface = _mp(
        4, {e + (0,): c for e, c in _surface_ex8_4().terms.items()}
    )
    return ParamFamily(
        "ex8_4", ("b1", "b3", "c2"), P, Q, marked_x=F(0),
        constraints=(_surface_ex8_4(),),
    )


def _family_ex8_5() -> ParamFamily:
    # P = b2 x^2 + 10, Q = x^2 + 7; param (b2)
    P = _mp(2, {(1, 2): 1, (0, 0): 10})
    Q = _mp(2, {(0, 2): 1, (0, 0): 7})
    return ParamFamily("ex8_5", ("b2",), P, Q, marked_x=F(0))


def _decomposition_ex8_6() -> Decomposition:
    return verify_decomposition(UniPoly([0, 27, 54, 19]), UniPoly([-9, 0, 1]))


def _family_ex8_8() -> ParamFamily:
    # Fermat pencil: P = u^3 - 1, Q = -alpha u^2; param (alpha)
    P = _mp(2, {(0, 3): 1, (0, 0): -1})
    Q = _mp(2, {(1, 2): -1})
    return ParamFamily("ex8_8", ("alpha",), P, Q, marked_x=F(0))


def _quartic_intro() -> MultiPoly:
    # y^4 + a y^2 + x y + x^3 + b x^2, specialisable in (a, b); vars (x, y)
    # stored at (a, b) = symbolic: here as the family record with arity 4:
    # (a, b, x, y)
    return _mp(
        4,
        {
            (0, 0, 0, 4): 1,
            (1, 0, 0, 2): 1,
            (0, 0, 1, 1): 1,
            (0, 0, 3, 0): 1,
            (0, 1, 2, 0): 1,
        },
    )


def _quartic_body() -> MultiPoly:
    # y^4 + a y^2 - x y - x^3 + b x^2 (the sign variant used in the body)
    return _mp(
        4,
        {
            (0, 0, 0, 4): 1,
            (1, 0, 0, 2): 1,
            (0, 0, 1, 1): -1,
            (0, 0, 3, 0): -1,
            (0, 1, 2, 0): 1,
        },
    )


_EX8_7_NOTE = (
    "replacement curve realising the different-orders phenomenon; the "
    "printed quartic is refuted (see ex8_7_printed_quartic and docs)"
)


def _registry() -> dict[str, Preset]:
    reg: dict[str, Preset] = {}
    reg["ex8_1"] = Preset(
        "ex8_1", "family", _family_ex8_1(), F(0),
        expected={"sigma1_equals_sigma2": True},
        notes="the two difference sections coincide identically",
    )
    reg["ex8_2"] = Preset(
        "ex8_2", "family", _family_ex8_2(), F(0),
        expected={"t0": ["1", "0", "-1"], "orders_at_t0": [None, None],
                  "rank_at_t0": 2},
        notes="generically independent sections; free of rank 2 at t0",
    )
    reg["ex8_3"] = Preset(
        "ex8_3", "family", _family_ex8_3(), F(0),
        expected={"identity": {"component": 1, "order": 2},
                  "t1": ["1", "1"], "order2_at_t1": None},
        notes="sigma1 identically 2-torsion on the corrected surface",
    )
    reg["ex8_4"] = Preset(
        "ex8_4", "family", _family_ex8_4(), F(0),
        expected={"t2": ["-9", "2", "-11/4"], "orders_at_t2": [3, None]},
        notes="order-3 surface as printed; t2 read as (b1, b3, c2)",
    )
    reg["ex8_5"] = Preset(
        "ex8_5", "family", _family_ex8_5(), F(0),
        expected={"orders": [2, 2]},
        notes="both sections identically 2-torsion along the pencil",
    )
    reg["ex8_6"] = Preset(
        "ex8_6", "decomposition", _decomposition_ex8_6(), F(0),
        expected={"orders": [3, 3], "verdict": "BiluApplicable"},
    )
    reg["ex8_7"] = Preset(
        "ex8_7", "decomposition", _decomposition_ex8_7(), F(0),
        expected={"order_set": [2, 3], "verdict": "BiluApplicable"},
        notes=_EX8_7_NOTE,
    )
    reg["ex8_7_printed_quartic"] = Preset(
        "ex8_7_printed_quartic", "decomposition",
        _decomposition_ex8_7_printed(), F(0),
        expected={"orders": [None, None], "verdict": "NotApplicable"},
        notes="unique rational cube-minus-square datum of the printed "
              "quartic's curve; its differences are not torsion",
    )
    reg["ex8_8"] = Preset(
        "ex8_8", "family", _family_ex8_8(), F(0),
        expected={"isotrivial_j": 0},
        notes="Fermat pencil; quotient cubics all have j = 0",
    )
    reg["intro_family"] = Preset(
        "intro_family", "quartic-family", _quartic_intro(), None,
        expected={"singular_only_at_origin": True, "unique_infinity": True},
        notes="y^4 + a y^2 + x y + x^3 + b x^2; sextic via intro_family_sextic",
    )
    reg["body_family"] = Preset(
        "body_family", "quartic-family", _quartic_body(), None,
        expected={"singular_only_at_origin": True, "unique_infinity": True},
        notes="sign variant y^4 + a y^2 - x y - x^3 + b x^2, kept distinct",
    )
    reg["bft_universal"] = Preset(
        "bft_universal", "bft", "universal-family data (see bft module)", None,
        expected={"identity_holds": True},
    )
    return reg


def _decomposition_ex8_7() -> Decomposition:
    """Different-orders certificate: sigma orders exactly (2, 3).

    Built by reverse construction: on E0: y^2 = x^3 + 1 (rational torsion
    Z/6, generator g = (2,3)) take the fiber-to-be {g, 4g, 2g}, re-embed E0
    into the plane by the line bundle of that degree-3 divisor (making the
    three points collinear), project from [0:1:-1] on their common line and
    complete the cube.  The resulting quotient-cubic datum, cleared to
    integers by the weight-(2,3) scaling u = 12, is

        P = 271 x^3 - 126 x^2 + 72 x,   Q = 37 x^2 - 12 x + 12,

    with marked x0 = 0 and fiber {-6, 0, 6}; the sorted differences have
    orders 2 and 3 because g - 4g = -3g and 4g - 2g = 2g.
    """
    return verify_decomposition(
        UniPoly([0, 72, -126, 271]), UniPoly([12, -12, 37])
    )


def _decomposition_ex8_7_printed() -> Decomposition:
    """The printed quartic's curve: pencil sextic rescaled by lambda = 108.

    f = -104 m^6 + 212 m^5 - 143 m^4 + 36 m^3 - 2 m^2 + 1 admits exactly
    one rational datum up to sign: P0 = 2x^3 - x^2 + 1 with
    P0^2 - f = 108 (x^2 - (2/3)x)^3; scaling by 108^2 clears the cube.
    """
    lam = F(108)
    P0 = UniPoly([1, 0, -1, 2])
    H = UniPoly([0, F(-2, 3), 1])
    return verify_decomposition(lam * P0, lam * H)


def registry() -> dict[str, Preset]:
    return _registry()


def get(name: str) -> Preset:
    reg = _registry()
    if name not in reg:
        raise DomainError(f"unknown preset {name!r}; known: {sorted(reg)}")
    return reg[name]


def preset_json(p: Preset) -> dict:
    out = {"name": p.name, "kind": p.kind, "notes": p.notes,
           "expected": p.expected}
    if p.marked_x is not None:
        out["marked_x"] = rat_str(p.marked_x)
    if p.kind == "decomposition":
        d: Decomposition = p.payload
        out["curve"] = {
            "f": [rat_str(c) for c in d.f.coeffs],
            "P": [rat_str(c) for c in d.P.coeffs],
            "Q": [rat_str(c) for c in d.Q.coeffs],
            "marked_x": rat_str(p.marked_x),
        }
    elif p.kind == "family":
        fam: ParamFamily = p.payload
        out["family"] = {
            "params": list(fam.param_names),
            "P": _mp_terms(fam.P),
            "Q": _mp_terms(fam.Q),
            "marked_x": rat_str(fam.marked_x)
            if not isinstance(fam.marked_x, MultiPoly) else _mp_terms(fam.marked_x),
            "constraints": [_mp_terms(c) for c in fam.constraints],
        }
    elif p.kind == "quartic-family":
        out["quartic"] = {
            "variables": ["a", "b", "x", "y"],
            "terms": _mp_terms(p.payload),
        }
    return out


def _mp_terms(m: MultiPoly) -> list:
    return [[list(e), rat_str(c)] for e, c in sorted(m.terms.items())]

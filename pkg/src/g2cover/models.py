"""Pydantic request/response models: the wire formats.

Rationals travel as "num/den" strings, quadratic elements as
{"a": "p/q", "b": "r/s", "d": n}, polynomials as coefficient arrays lowest
degree first.  These models are the single source of truth for the JSON
schemas; the CLI and the service both validate through them.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Literal, Optional

from pydantic import BaseModel, Field

from .errors import DomainError
from .genus2 import Decomposition, QuarticNormalForm, verify_decomposition
from .polys import UniPoly
from .rationals import rat


def parse_rational(v) -> Fraction:
    if isinstance(v, bool):
        raise DomainError("booleans are not rationals")
    if isinstance(v, (int, str, Fraction)):
        return rat(v)
    raise DomainError(f"cannot parse rational from {v!r}")


def parse_coeffs(vals) -> UniPoly:
    return UniPoly([parse_rational(v) for v in vals])


class CurveRecord(BaseModel):
    """{"f": [...], "P": [...], "Q": [...], "marked_x": "p/q"}; f optional."""

    P: list[str | int]
    Q: list[str | int]
    f: Optional[list[str | int]] = None
    marked_x: str | int = "0/1"

    def decomposition(self) -> Decomposition:
        d = verify_decomposition(parse_coeffs(self.P), parse_coeffs(self.Q))
        if self.f is not None and parse_coeffs(self.f) != d.f:
            raise DomainError("supplied f disagrees with P^2 - Q^3")
        return d

    def marked(self) -> Fraction:
        return parse_rational(self.marked_x)


class QuarticRecord(BaseModel):
    """Normal-form quartic {"a9": .., "a6": .., "a8": .., "a7": ..}."""

    a9: str | int
    a6: str | int
    a8: str | int
    a7: str | int

    def normal_form(self) -> QuarticNormalForm:
        return QuarticNormalForm(
            parse_rational(self.a9), parse_rational(self.a6),
            parse_rational(self.a8), parse_rational(self.a7),
        )


class IntroFamilyRecord(BaseModel):
    a: str | int
    b: str | int


class ConvertModelRequest(BaseModel):
    quartic: Optional[QuarticRecord] = None
    intro_family: Optional[IntroFamilyRecord] = None


class SexticResponse(BaseModel):
    f: list[str]
    degree: int
    disc: str


class InvariantsRequest(BaseModel):
    f: list[str | int]


class InvariantsResponse(BaseModel):
    I2: str
    I4: str
    I6: str
    I10: str
    absolute: list[str]


class SigmaTorsionRequest(BaseModel):
    curve: CurveRecord
    torsion_bound: int = 24
    search_height: int = 10**4


class CertificateResponse(BaseModel):
    curve: dict
    marked_x: str
    elliptic: Optional[dict] = None
    fiber: Optional[dict] = None
    sigma: dict
    sigma_orders: list[Optional[int]]
    torsion_bound: int
    verdict: str
    basis: str
    reason: Optional[str] = None


class GridRequest(BaseModel):
    ranges: list[tuple[str | int, str | int]]
    height: int = 5
    max_den: int = 1
    count: Optional[int] = None
    seed: int = 0


class ScanRequest(BaseModel):
    preset: Optional[str] = None
    family: Optional[dict] = None
    grid: GridRequest
    torsion_bound: int = 24
    jobs: int = 1


class ScanResponse(BaseModel):
    family: str
    grid_size: int
    rows: list[dict]
    summary: dict


class IdentityCheckRequest(BaseModel):
    preset: Optional[str] = None
    family: Optional[dict] = None
    component: Literal[1, 2]
    order: int = Field(ge=1)
    trials: int = 25
    seed: int = 0
    height: int = 40


class TrinomialRequest(BaseModel):
    n: int = Field(ge=0)
    r: int = Field(ge=0)
    s: int = Field(ge=0)
    m: int = Field(ge=0)
    a: str | int
    b: str | int


class JacobianProbeRequest(BaseModel):
    sample: tuple[str | int, str | int, str | int] = ("2", "1", "3")
    step: str | int = "1/1000000"
    precision: int = 60


class ErrorResponse(BaseModel):
    error: str
    code: str
    detail: dict = Field(default_factory=dict)


def family_from_record(rec: dict):
    """Inline ParamFamily from its JSON term-list record."""
    from .families import ParamFamily
    from .multipoly import MultiPoly

    params = tuple(rec["params"])
    arity = len(params) + 1

    def mp(terms, n=arity) -> MultiPoly:
        return MultiPoly(
            n, {tuple(e): parse_rational(c) for e, c in terms}
        )

    marked = rec.get("marked_x", "0/1")
    marked_val = (
        mp(marked, len(params)) if isinstance(marked, list) else parse_rational(marked)
    )
    return ParamFamily(
        name=rec.get("name", "inline"),
        param_names=params,
        P=mp(rec["P"]),
        Q=mp(rec["Q"]),
        marked_x=marked_val,
        constraints=tuple(mp(c, len(params)) for c in rec.get("constraints", [])),
    )

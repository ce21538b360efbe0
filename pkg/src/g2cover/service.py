"""FastAPI service exposing the toolkit.

Verdicts are data: a NotApplicable certificate is a successful 200
response.  Typed mathematical rejections (invalid decompositions, singular
models, malformed records) map to 422 with the error code; unexpected
failures to 500.  The CLI shares these handlers in-process.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from . import bft, presets
from .cover import build_cover, elliptic_quotient
from .errors import G2Error
from .families import GridSpec, identity_check, scan
from .genus2 import SexticModel, intro_family_sextic, quartic_to_sextic
from .igusa import igusa_clebsch
from .models import (
    CertificateResponse,
    ConvertModelRequest,
    CurveRecord,
    IdentityCheckRequest,
    InvariantsRequest,
    InvariantsResponse,
    JacobianProbeRequest,
    ScanRequest,
    ScanResponse,
    SexticResponse,
    SigmaTorsionRequest,
    TrinomialRequest,
    family_from_record,
    parse_coeffs,
    parse_rational,
)
from .rationals import rat_str
from .sigma import certificate_json, sigma_torsion
from .trinomial import TrinomialEq, classification_json, classify

app = FastAPI(
    title="g2cover",
    description="Degree-3 unramified covers of genus-2 curves, elliptic "
    "quotients, exact torsion certificates for integral-point effectivity",
)


def _reject(e: G2Error) -> HTTPException:
    return HTTPException(
        status_code=422,
        detail={"error": str(e), "code": e.code,
                "detail": {k: str(v) for k, v in e.payload.items()}},
    )


@app.post("/verify-decomposition")
def verify_decomposition_ep(curve: CurveRecord) -> dict:
    try:
        d = curve.decomposition()
    except G2Error as e:
        raise _reject(e)
    return {
        "valid": True,
        "f": [rat_str(c) for c in d.f.coeffs],
        "P": [rat_str(c) for c in d.P.coeffs],
        "Q": [rat_str(c) for c in d.Q.coeffs],
        "disc": rat_str(d.disc),
        "order_3_certificate": "f = P^2 - Q^3 separable of degree 6: the "
        "class of (1/3)div(y + P) has exact order 3 on the Jacobian",
    }


@app.post("/build-cover")
def build_cover_ep(curve: CurveRecord) -> dict:
    try:
        d = curve.decomposition()
        cov = build_cover(d)
    except G2Error as e:
        raise _reject(e)
    return {
        "relations": {"t_cubed": cov.relation_t, "y_squared": cov.relation_y},
        "involution": cov.involution,
        "order_3_automorphism": cov.order3,
        "genus": cov.genus,
    }


@app.post("/elliptic-quotient")
def elliptic_quotient_ep(curve: CurveRecord) -> dict:
    try:
        d = curve.decomposition()
        cubic = elliptic_quotient(d)
    except G2Error as e:
        raise _reject(e)
    return {
        "affine": "w^3 - 3*Q(x)*w - 2*P(x) = 0",
        "P": [rat_str(c) for c in cubic.P.coeffs],
        "Q": [rat_str(c) for c in cubic.Q.coeffs],
        "ternary": [
            {"U": e[0], "W": e[1], "Z": e[2], "coeff": rat_str(c)}
            for e, c in sorted(cubic.ternary.items())
        ],
        "smooth": True,
    }


@app.post("/sigma-torsion")
def sigma_torsion_ep(req: SigmaTorsionRequest) -> CertificateResponse:
    try:
        d = req.curve.decomposition()
    except G2Error as e:
        raise _reject(e)
    rep = sigma_torsion(
        d, req.curve.marked(), torsion_bound=req.torsion_bound,
        search_height=req.search_height,
    )
    return CertificateResponse(**certificate_json(rep))


@app.post("/convert-model")
def convert_model_ep(req: ConvertModelRequest) -> SexticResponse:
    try:
        if req.quartic is not None:
            model = quartic_to_sextic(req.quartic.normal_form())
        elif req.intro_family is not None:
            model = intro_family_sextic(
                parse_rational(req.intro_family.a),
                parse_rational(req.intro_family.b),
            )
        else:
            raise HTTPException(422, detail={"error": "need quartic or intro_family"})
    except G2Error as e:
        raise _reject(e)
    return SexticResponse(
        f=[rat_str(c) for c in model.f.coeffs],
        degree=model.f.degree,
        disc=rat_str(model.disc),
    )


@app.post("/invariants")
def invariants_ep(req: InvariantsRequest) -> InvariantsResponse:
    try:
        model = SexticModel(parse_coeffs(req.f))
        inv = igusa_clebsch(model)
    except G2Error as e:
        raise _reject(e)
    return InvariantsResponse(
        I2=rat_str(inv.I2), I4=rat_str(inv.I4), I6=rat_str(inv.I6),
        I10=rat_str(inv.I10),
        absolute=[rat_str(a) for a in inv.absolute],
    )


def _resolve_family(preset_name, family_record):
    if preset_name is not None:
        p = presets.get(preset_name)
        if p.kind != "family":
            raise G2Error(f"preset {preset_name} is not a parametric family")
        return p.payload
    if family_record is not None:
        return family_from_record(family_record)
    raise G2Error("need a preset name or an inline family record")


@app.post("/scan")
def scan_ep(req: ScanRequest) -> ScanResponse:
    try:
        fam = _resolve_family(req.preset, req.family)
        grid = GridSpec(
            ranges=tuple(
                (parse_rational(a), parse_rational(b)) for a, b in req.grid.ranges
            ),
            height=req.grid.height,
            max_den=req.grid.max_den,
            count=req.grid.count,
            seed=req.grid.seed,
        )
    except G2Error as e:
        raise _reject(e)
    report = scan(fam, grid, torsion_bound=req.torsion_bound, jobs=req.jobs)
    return ScanResponse(
        family=report.family, grid_size=report.grid_size,
        rows=report.rows, summary=report.summary(),
    )


@app.post("/identity-check")
def identity_check_ep(req: IdentityCheckRequest) -> dict:
    try:
        fam = _resolve_family(req.preset, req.family)
    except G2Error as e:
        raise _reject(e)
    res = identity_check(
        fam, req.component, req.order, trials=req.trials, seed=req.seed,
        height=req.height,
    )
    return res.as_json()


@app.post("/universal-check")
def universal_check_ep() -> dict:
    return bft.universal_family_check().as_json()


@app.post("/jacobian-probe")
def jacobian_probe_ep(req: JacobianProbeRequest) -> dict:
    try:
        res = bft.jacobian_rank_probe(
            tuple(parse_rational(v) for v in req.sample),
            step=parse_rational(req.step), precision=req.precision,
        )
    except G2Error as e:
        raise _reject(e)
    return res.as_json()


@app.post("/trinomial")
def trinomial_ep(req: TrinomialRequest) -> dict:
    try:
        eq = TrinomialEq(
            req.n, req.r, req.s, req.m,
            parse_rational(req.a), parse_rational(req.b),
        )
        cls = classify(eq)
    except G2Error as e:
        raise _reject(e)
    return classification_json(eq, cls)


@app.get("/presets")
def presets_ep() -> dict:
    return {"presets": sorted(presets.registry())}


@app.get("/preset/{name}")
def preset_ep(name: str) -> dict:
    try:
        return presets.preset_json(presets.get(name))
    except G2Error as e:
        raise _reject(e)

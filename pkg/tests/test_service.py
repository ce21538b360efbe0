"""HTTP surface: every endpoint, schema stability, typed rejections."""

import pytest
from fastapi.testclient import TestClient

from g2cover.service import app

client = TestClient(app)

CURVE_8_6 = {
    "P": ["0", "27", "54", "19"],
    "Q": ["-9", "0", "1"],
    "marked_x": "0",
}


def test_verify_decomposition_ok():
    r = client.post("/verify-decomposition", json=CURVE_8_6)
    assert r.status_code == 200
    body = r.json()
    assert body["valid"]
    assert body["f"][6] == "360/1" and body["f"][0] == "729/1"


def test_verify_decomposition_rejects_degree_drop():
    r = client.post("/verify-decomposition", json={"P": ["0", "0", "0", "1"],
                                                   "Q": ["0", "0", "1"]})
    assert r.status_code == 422
    assert r.json()["detail"]["code"] == "invalid-decomposition"


def test_supplied_f_must_agree():
    bad = dict(CURVE_8_6)
    bad["f"] = ["1", "0", "0", "0", "0", "0", "1"]
    r = client.post("/verify-decomposition", json=bad)
    assert r.status_code == 422


def test_build_cover():
    r = client.post("/build-cover", json=CURVE_8_6)
    assert r.status_code == 200
    assert r.json()["genus"] == 4
    assert r.json()["involution"]["t"] == "Q(x)/t"


def test_elliptic_quotient():
    r = client.post("/elliptic-quotient", json=CURVE_8_6)
    assert r.status_code == 200
    assert r.json()["smooth"]


def test_sigma_torsion_certificate():
    r = client.post("/sigma-torsion", json={"curve": CURVE_8_6})
    assert r.status_code == 200
    body = r.json()
    assert body["sigma_orders"] == [3, 3]
    assert body["verdict"] == "BiluApplicable"


def test_sigma_torsion_not_applicable_is_200():
    r = client.post("/sigma-torsion", json={
        "curve": {"P": ["10", "0", "0", "1"], "Q": ["7", "0", "-1"],
                  "marked_x": "0"}
    })
    assert r.status_code == 200
    assert r.json()["verdict"] == "NotApplicable"
    assert r.json()["sigma_orders"] == [None, None]


def test_convert_model_quartic():
    r = client.post("/convert-model", json={
        "quartic": {"a9": "1", "a6": "1", "a8": "1", "a7": "1"}
    })
    assert r.status_code == 200
    assert r.json()["f"] == ["1/1", "0/1", "2/1", "2/1", "-3/1", "-2/1", "-3/1"]


def test_convert_model_degenerate_rejected():
    r = client.post("/convert-model", json={
        "quartic": {"a9": "0", "a6": "0", "a8": "0", "a7": "0"}
    })
    assert r.status_code == 422


def test_convert_model_intro_family():
    r = client.post("/convert-model", json={"intro_family": {"a": 1, "b": 1}})
    assert r.status_code == 200
    assert r.json()["f"] == ["-1/1", "0/1", "0/1", "0/1", "1/1", "1/1", "1/1"]


def test_invariants():
    r = client.post("/invariants", json={"f": ["729", "0", "486", "2916",
                                               "3969", "2052", "360"]})
    assert r.status_code == 200
    assert len(r.json()["absolute"]) == 3


def test_scan_endpoint():
    r = client.post("/scan", json={
        "preset": "ex8_5",
        "grid": {"ranges": [["-2", "2"]], "height": 2, "max_den": 1},
    })
    assert r.status_code == 200
    body = r.json()
    assert body["summary"]["grid_size"] == body["grid_size"] == 5
    assert body["summary"]["valid"] + sum(body["summary"]["skips"].values()) == 5


def test_identity_check_endpoint():
    r = client.post("/identity-check", json={
        "preset": "ex8_5", "component": 1, "order": 2, "trials": 5, "seed": 0,
    })
    assert r.status_code == 200
    assert r.json()["passed"]


def test_universal_check_endpoint():
    r = client.post("/universal-check")
    assert r.status_code == 200
    assert r.json()["passed"]


def test_trinomial_endpoint():
    r = client.post("/trinomial", json={"n": 4, "r": 1, "s": 1, "m": 3,
                                        "a": "-2", "b": "-1"})
    assert r.status_code == 200
    assert r.json()["delta"] == 5


def test_presets_listing_and_fetch():
    r = client.get("/presets")
    assert r.status_code == 200
    assert "ex8_6" in r.json()["presets"]
    r = client.get("/preset/ex8_6")
    assert r.status_code == 200
    assert r.json()["curve"]["P"] == ["0/1", "27/1", "54/1", "19/1"]
    assert client.get("/preset/nope").status_code == 422


def test_jacobian_probe_endpoint():
    r = client.post("/jacobian-probe", json={
        "sample": ["2", "1", "3"], "step": "1/1000000", "precision": 60,
    })
    assert r.status_code == 200
    body = r.json()
    assert body["conclusive"]
    assert body["abs_determinant"] > 10 * body["error_estimate"]


def test_scan_rows_validate_as_certificates():
    from g2cover.models import CertificateResponse

    r = client.post("/scan", json={
        "preset": "ex8_5",
        "grid": {"ranges": [["1", "3"]], "height": 3, "max_den": 1},
    })
    for row in r.json()["rows"]:
        if row["status"] == "ok" and row["verdict"] == "BiluApplicable":
            CertificateResponse.model_validate(row["certificate"])


def test_round_trip_certificate_reread():
    # everything the service emits is accepted back by the readers
    cert = client.post("/sigma-torsion", json={"curve": CURVE_8_6}).json()
    again = client.post("/sigma-torsion", json={"curve": cert["curve"]}).json()
    assert again["sigma_orders"] == cert["sigma_orders"]

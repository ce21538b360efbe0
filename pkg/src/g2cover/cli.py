"""Command-line front end: a thin client over the service handlers.

Subcommands read JSON from stdin (or --input) and write JSON to stdout
(or --output).  By default they dispatch in-process to the same handlers
the FastAPI service exposes; with --url they POST to a running service
instead.  Exit codes: 0 success (negative verdicts such as NotApplicable
are still data, hence 0), 2 typed mathematical rejection or malformed
input, 1 internal error.
"""

from __future__ import annotations

import argparse
import json
import sys

from pydantic import ValidationError

from .errors import G2Error

SUBCOMMANDS = [
    "verify-decomposition", "build-cover", "elliptic-quotient",
    "sigma-torsion", "scan", "identity-check", "universal-check",
    "jacobian-probe", "trinomial", "convert-model", "invariants", "preset",
    "serve",
]


def _read_payload(args) -> dict:
    if getattr(args, "inline", None):
        text = args.inline
    elif getattr(args, "input", None):
        with open(args.input) as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    if not text.strip():
        return {}
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise _ParseError(
            f"malformed JSON at line {e.lineno}, column {e.colno}: {e.msg}"
        )


class _ParseError(Exception):
    pass


def _emit(args, payload, jsonlines: str | None = None) -> None:
    text = jsonlines if jsonlines is not None else json.dumps(
        payload, indent=2, sort_keys=True
    )
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _http_post(url: str, path: str, payload: dict) -> dict:
    import urllib.request

    req = urllib.request.Request(
        url.rstrip("/") + path,
        data=json.dumps(payload).encode(),
        headers={"Content-Type": "application/json"},
        method="POST",
    )
    with urllib.request.urlopen(req) as resp:
        return json.loads(resp.read().decode())


def _dispatch(args, path: str, handler, payload_model=None, payload=None):
    """Run in-process by default, over HTTP with --url."""
    if getattr(args, "url", None):
        body = payload if payload is not None else {}
        return _http_post(args.url, path, body)
    if payload_model is not None:
        model = payload_model.model_validate(payload or {})
        out = handler(model)
    else:
        out = handler() if payload is None else handler(payload)
    if hasattr(out, "model_dump"):
        return out.model_dump()
    return out


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="g2cover",
        description="certificates of integral-point effectivity for "
        "genus-2 curves via degree-3 covers",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, io=True):
        if io:
            p.add_argument("--input", help="read the JSON payload from a file")
            p.add_argument("--inline", help="JSON payload given inline")
        p.add_argument("--output", help="write the JSON result to a file")
        p.add_argument("--url", help="POST to a running service instead of in-process")

    for name in ("verify-decomposition", "build-cover", "elliptic-quotient"):
        common(sub.add_parser(name, help=f"{name} on a curve record"))

    p = sub.add_parser("sigma-torsion", help="run the certificate pipeline")
    common(p)
    p.add_argument("--torsion-bound", type=int, default=24)
    p.add_argument("--search-height", type=int, default=10**4)

    p = sub.add_parser("scan", help="scan a parametric family over a grid")
    common(p)
    p.add_argument("--torsion-bound", type=int, default=24)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--jsonl", action="store_true",
                   help="emit one specialization per line plus a summary footer")

    p = sub.add_parser("identity-check", help="Schwartz-Zippel torsion identity")
    common(p)
    p.add_argument("--trials", type=int, default=25)
    p.add_argument("--seed", type=int, default=0)

    common(sub.add_parser("universal-check",
                          help="the universal-family exact identity"), io=False)
    p = sub.add_parser("jacobian-probe", help="joint j-invariant rank probe")
    common(p)

    p = sub.add_parser("trinomial", help="classify x^n + a x^r y^s + b y^m = 0")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    common(p, io=False)

    common(sub.add_parser("convert-model", help="quartic/intro-family to sextic"))
    common(sub.add_parser("invariants", help="Igusa-Clebsch invariants of a sextic"))

    p = sub.add_parser("preset", help="emit a named preset record")
    p.add_argument("name", nargs="?", help="preset name; omit to list")
    common(p, io=False)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    return ap


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    from . import service
    from .models import (
        ConvertModelRequest, CurveRecord, IdentityCheckRequest,
        InvariantsRequest, JacobianProbeRequest, ScanRequest,
        SigmaTorsionRequest, TrinomialRequest,
    )

    try:
        cmd = args.command
        if cmd == "serve":
            import uvicorn

            uvicorn.run(service.app, host=args.host, port=args.port)
            return 0
        if cmd == "preset":
            from . import presets

            if args.name is None:
                _emit(args, {"presets": sorted(presets.registry())})
            else:
                _emit(args, _dispatch(
                    args, f"/preset/{args.name}",
                    lambda: service.preset_ep(args.name)))
            return 0
        if cmd == "universal-check":
            _emit(args, _dispatch(args, "/universal-check",
                                  service.universal_check_ep))
            return 0
        if cmd == "trinomial":
            payload = {"n": args.n, "r": args.r, "s": args.s, "m": args.m,
                       "a": args.a, "b": args.b}
            _emit(args, _dispatch(args, "/trinomial", service.trinomial_ep,
                                  TrinomialRequest, payload))
            return 0

        payload = _read_payload(args)
        if cmd == "verify-decomposition":
            payload = _as_curve_record(payload)
            _emit(args, _dispatch(args, "/verify-decomposition",
                                  service.verify_decomposition_ep,
                                  CurveRecord, payload))
        elif cmd == "build-cover":
            payload = _as_curve_record(payload)
            _emit(args, _dispatch(args, "/build-cover", service.build_cover_ep,
                                  CurveRecord, payload))
        elif cmd == "elliptic-quotient":
            payload = _as_curve_record(payload)
            _emit(args, _dispatch(args, "/elliptic-quotient",
                                  service.elliptic_quotient_ep,
                                  CurveRecord, payload))
        elif cmd == "sigma-torsion":
            body = {
                "curve": _as_curve_record(payload),
                "torsion_bound": args.torsion_bound,
                "search_height": args.search_height,
            }
            _emit(args, _dispatch(args, "/sigma-torsion",
                                  service.sigma_torsion_ep,
                                  SigmaTorsionRequest, body))
        elif cmd == "scan":
            payload.setdefault("torsion_bound", args.torsion_bound)
            payload.setdefault("jobs", args.jobs)
            out = _dispatch(args, "/scan", service.scan_ep, ScanRequest, payload)
            if args.jsonl:
                lines = [json.dumps(r, sort_keys=True) for r in out["rows"]]
                lines.append(json.dumps(out["summary"], sort_keys=True))
                _emit(args, None, jsonlines="\n".join(lines))
            else:
                _emit(args, out)
        elif cmd == "identity-check":
            payload.setdefault("trials", args.trials)
            payload.setdefault("seed", args.seed)
            _emit(args, _dispatch(args, "/identity-check",
                                  service.identity_check_ep,
                                  IdentityCheckRequest, payload))
        elif cmd == "jacobian-probe":
            _emit(args, _dispatch(args, "/jacobian-probe",
                                  service.jacobian_probe_ep,
                                  JacobianProbeRequest, payload))
        elif cmd == "convert-model":
            _emit(args, _dispatch(args, "/convert-model",
                                  service.convert_model_ep,
                                  ConvertModelRequest, payload))
        elif cmd == "invariants":
            _emit(args, _dispatch(args, "/invariants", service.invariants_ep,
                                  InvariantsRequest, payload))
        else:  # pragma: no cover
            raise _ParseError(f"unknown command {cmd}")
        return 0
    except _ParseError as e:
        print(json.dumps({"error": str(e), "code": "parse-error"}), file=sys.stderr)
        return 2
    except ValidationError as e:
        print(json.dumps({"error": str(e), "code": "schema-error"}), file=sys.stderr)
        return 2
    except G2Error as e:
        print(json.dumps({"error": str(e), "code": e.code}), file=sys.stderr)
        return 2
    except Exception as e:
        from fastapi import HTTPException

        if isinstance(e, HTTPException):
            print(json.dumps({"error": str(e.detail), "code": "rejected"}),
                  file=sys.stderr)
            return 2
        print(json.dumps({"error": f"internal: {e}"}), file=sys.stderr)
        return 1


def _as_curve_record(payload: dict) -> dict:
    """Accept either a bare curve record or the preset envelope."""
    if "curve" in payload and isinstance(payload["curve"], dict):
        return payload["curve"]
    return payload


def main() -> None:  # console entry point
    sys.exit(run())


if __name__ == "__main__":
    main()

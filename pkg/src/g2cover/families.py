"""Parametric families of decompositions: specialisation, scanning,
probabilistic identity certification.

A family stores P and Q as sparse polynomials in (params..., x) with the
curve variable last.  Scanning enumerates rational parameter points in
Farey/height order (small examples first), runs the certificate pipeline
on every valid specialisation, and accounts for every skip by reason;
identical GridSpec + seed gives byte-identical reports.

Identity claims ("component i is killed by n along this family") are
certified Schwartz-Zippel style: n * sigma_i = O is checked exactly at k
random valid specialisations; one failure witness refutes, k passes make
the failure probability (deg / sample space)^k, astronomically small for
the degrees involved.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ConstraintError, G2Error
from .genus2 import Decomposition, verify_decomposition
from .multipoly import MultiPoly
from .polys import UniPoly
from .rationals import rat, rat_str
from .sigma import (
    VERDICT_APPLICABLE,
    certificate_json,
    sigma_torsion,
)
from .weier import mul as emul


@dataclass(frozen=True)
class ParamFamily:
    """P, Q in Q[params..., x]; marked x0 constant or polynomial in params."""

    name: str
    param_names: tuple[str, ...]
    P: MultiPoly
    Q: MultiPoly
    marked_x: Fraction | MultiPoly = Fraction(0)
    constraints: tuple[MultiPoly, ...] = ()

    @property
    def arity(self) -> int:
        return len(self.param_names)

    def __post_init__(self):
        n = self.arity + 1
        if self.P.arity != n or self.Q.arity != n:
            raise ConstraintError("P, Q must have arity len(params) + 1")


def _collapse(poly: MultiPoly, values: list[Fraction]) -> UniPoly:
    assignments = {i: v for i, v in enumerate(values)}
    return poly.eval_partial(assignments).to_unipoly(poly.arity - 1)


def specialize(fam: ParamFamily, t) -> tuple[Decomposition, Fraction]:
    """Evaluate the family at a parameter point; validate everything."""
    values = [rat(v) for v in t]
    if len(values) != fam.arity:
        raise ConstraintError(
            f"expected {fam.arity} parameters {fam.param_names}, got {len(values)}"
        )
    for c in fam.constraints:
        if c(values) != 0:
            raise ConstraintError(
                f"constraint violated at t = {tuple(map(str, values))}"
            )
    P = _collapse(fam.P, values)
    Q = _collapse(fam.Q, values)
    d = verify_decomposition(P, Q)
    x0 = fam.marked_x(values) if isinstance(fam.marked_x, MultiPoly) else rat(fam.marked_x)
    if d.f(x0) == 0:
        raise ConstraintError(f"marked x0 = {x0} is special at this parameter")
    return d, x0


@dataclass(frozen=True)
class GridSpec:
    """Finite rational grid: per-parameter inclusive ranges and heights.

    ``height`` bounds |numerator| and ``max_den`` (default 1: integer
    grids) bounds the denominator; values are enumerated small-height
    first so scans meet easy examples early.
    """

    ranges: tuple[tuple[Fraction, Fraction], ...]
    height: int = 5
    max_den: int = 1
    count: int | None = None  # None = exhaustive cartesian product
    seed: int = 0

    def axis_values(self, i: int) -> list[Fraction]:
        lo, hi = self.ranges[i]
        vals = []
        for den in range(1, self.max_den + 1):
            lo_n = int(lo * den) - 1
            hi_n = int(hi * den) + 1
            for num in range(lo_n, hi_n + 1):
                q = Fraction(num, den)
                if lo <= q <= hi and abs(q.numerator) <= self.height \
                        and q.denominator <= self.max_den:
                    vals.append(q)
        vals = sorted(set(vals), key=lambda q: (max(abs(q.numerator), q.denominator), q))
        return vals

    def points(self) -> list[tuple[Fraction, ...]]:
        axes = [self.axis_values(i) for i in range(len(self.ranges))]
        if any(not a for a in axes):
            return []
        if self.count is None:
            out: list[tuple[Fraction, ...]] = [()]
            for axis in axes:
                out = [p + (v,) for p in out for v in axis]
            return out
        rng = random.Random(self.seed)
        return [tuple(rng.choice(a) for a in axes) for _ in range(self.count)]


@dataclass
class ScanReport:
    family: str
    grid_size: int
    rows: list[dict] = field(default_factory=list)
    skip_counts: dict = field(default_factory=dict)
    seed: int = 0

    @property
    def valid_count(self) -> int:
        return sum(1 for r in self.rows if r.get("status") == "ok")

    def summary(self) -> dict:
        applicable = sum(
            1 for r in self.rows
            if r.get("status") == "ok" and r["verdict"] == VERDICT_APPLICABLE
        )
        return {
            "record": "summary",
            "family": self.family,
            "grid_size": self.grid_size,
            "valid": self.valid_count,
            "skips": dict(sorted(self.skip_counts.items())),
            "bilu_applicable": applicable,
            "seed": self.seed,
        }

    def to_json_lines(self) -> str:
        lines = [json.dumps(r, sort_keys=True) for r in self.rows]
        lines.append(json.dumps(self.summary(), sort_keys=True))
        return "\n".join(lines)


def _scan_one(fam: ParamFamily, t, torsion_bound: int) -> dict:
    row: dict = {"record": "specialization", "t": [rat_str(rat(v)) for v in t]}
    try:
        d, x0 = specialize(fam, t)
    except G2Error as e:
        row["status"] = "skip"
        row["reason"] = e.code
        row["detail"] = str(e)
        return row
    rep = sigma_torsion(d, x0, torsion_bound=torsion_bound)
    if rep.verdict == "Inconclusive":
        row["status"] = "skip"
        row["reason"] = (rep.reason or "inconclusive").split(":")[0]
        row["detail"] = rep.reason
        return row
    row["status"] = "ok"
    row["verdict"] = rep.verdict
    row["sigma_orders"] = rep.order_labels()
    if rep.verdict == VERDICT_APPLICABLE:
        row["certificate"] = certificate_json(rep)
    return row


def scan(fam: ParamFamily, grid: GridSpec, torsion_bound: int = 24,
         jobs: int = 1) -> ScanReport:
    """Run the certificate pipeline over the whole grid.

    Every grid point lands in exactly one bucket: a valid row or a counted
    skip reason, so |grid| = valid + sum(skips) always.  Pure per-point
    work, data-parallel across points when jobs > 1.
    """
    pts = grid.points()
    report = ScanReport(family=fam.name, grid_size=len(pts), seed=grid.seed)
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as ex:
            rows = list(ex.map(_scan_one, [fam] * len(pts), pts,
                               [torsion_bound] * len(pts)))
    else:
        rows = [_scan_one(fam, t, torsion_bound) for t in pts]
    for row in rows:
        report.rows.append(row)
        if row["status"] == "skip":
            report.skip_counts[row["reason"]] = (
                report.skip_counts.get(row["reason"], 0) + 1
            )
    return report


def search_decompositions(f: UniPoly, max_den: int = 2000,
                          time_budget: float = 10.0,
                          starts: int = 400) -> list[Decomposition]:
    """Point-wise search for cube-minus-square data of a given sextic.

    Solves f = P^2 - lambda*H^3 (H monic quadratic, the torsion-datum
    normal form) numerically from many random starts, recognises rational
    solutions with denominator at most ``max_den`` and verifies them
    exactly; each hit is rescaled by lambda^2 into an honest (P, Q) pair.
    Sound (every returned pair is exact) but best-effort on completeness;
    the time budget is a hard cap.
    """
    import time as _time

    import mpmath

    if f.degree != 6:
        raise ConstraintError("decomposition search needs a degree-6 sextic")
    fc = [c for c in f.coeffs]

    def s_coeffs(p):
        p0, p1, p2, p3 = p
        return [
            p0 * p0 - fc[0], 2 * p1 * p0 - fc[1], p1 * p1 + 2 * p2 * p0 - fc[2],
            2 * p3 * p0 + 2 * p2 * p1 - fc[3], p2 * p2 + 2 * p3 * p1 - fc[4],
            2 * p3 * p2 - fc[5], p3 * p3 - fc[6],
        ]

    def eqs(p):
        s = s_coeffs(p)
        lam = s[6]
        u = s[5]
        w = 3 * lam * s[4] - u * u
        return [
            27 * lam**2 * s[3] - u**3 - 6 * u * w,
            27 * lam**3 * s[2] - u * u * w - w * w,
            81 * lam**4 * s[1] - u * w * w,
            729 * lam**5 * s[0] - w**3,
        ]

    found: dict[tuple, Decomposition] = {}
    deadline = _time.monotonic() + time_budget
    rng = random.Random(1729)
    scale = max(1.0, max(abs(float(c)) for c in fc)) ** (1 / 6)
    with mpmath.workdps(40):
        h = mpmath.mpf(10) ** -20
        for _ in range(starts):
            if _time.monotonic() > deadline:
                break
            p = [mpmath.mpc(rng.uniform(-4, 4) * scale,
                            rng.uniform(-2, 2) * scale) for _ in range(4)]
            try:
                for _ in range(80):
                    e = eqs(p)
                    if max(abs(v) for v in e) < mpmath.mpf(10) ** -24:
                        break
                    cols = []
                    for k in range(4):
                        q = list(p)
                        q[k] = q[k] + h
                        ek = eqs(q)
                        cols.append([(ek[i] - e[i]) / h for i in range(4)])
                    J = mpmath.matrix(
                        [[cols[k][i] for k in range(4)] for i in range(4)]
                    )
                    delta = mpmath.lu_solve(J, mpmath.matrix([-v for v in e]))
                    p = [p[i] + delta[i] for i in range(4)]
                    if max(abs(v) for v in p) > 1e9:
                        break
                else:
                    continue
                if max(abs(v) for v in eqs(p)) > mpmath.mpf(10) ** -20:
                    continue
                rs = []
                for v in p:
                    if abs(mpmath.im(v)) > 1e-16 * (1 + abs(mpmath.re(v))):
                        rs = None
                        break
                    cand = Fraction(float(mpmath.re(v))).limit_denominator(max_den)
                    if abs(float(cand) - float(mpmath.re(v))) > 1e-12 * (
                        1 + abs(float(cand))
                    ):
                        rs = None
                        break
                    rs.append(cand)
                if not rs:
                    continue
                key = tuple(rs)
                if key in found or tuple(-v for v in key) in found:
                    continue
                P0 = UniPoly(list(rs))
                S = P0 * P0 - f
                if S.degree != 6:
                    continue
                lam = S.coeff(6)
                h1 = S.coeff(5) / lam / 3
                h0 = S.coeff(4) / lam / 3 - h1 * h1
                H = UniPoly([h0, h1, 1])
                if lam * H**3 != S:
                    continue
                try:
                    found[key] = verify_decomposition(lam * P0, lam * H)
                except G2Error:
                    continue
            except Exception:
                continue
    return list(found.values())


@dataclass
class IdentityCheckResult:
    passed: bool
    trials_requested: int
    trials_run: int
    witness: tuple | None = None
    inconclusive: bool = False
    seed: int = 0

    def as_json(self) -> dict:
        return {
            "passed": self.passed,
            "trials_requested": self.trials_requested,
            "trials_run": self.trials_run,
            "witness": [rat_str(v) for v in self.witness] if self.witness else None,
            "inconclusive": self.inconclusive,
            "seed": self.seed,
            "semantics": "all-pass certifies the identity up to Schwartz-Zippel "
                         "failure probability; a witness refutes it exactly",
        }


def identity_check(fam: ParamFamily, component: int, order: int,
                   trials: int = 25, seed: int = 0, height: int = 40,
                   max_attempts: int | None = None) -> IdentityCheckResult:
    """Certify n * sigma_component = O at ``trials`` random specialisations."""
    if component not in (1, 2):
        raise ConstraintError("component must be 1 or 2")
    if order < 1:
        raise ConstraintError("order must be >= 1")
    rng = random.Random(seed)
    attempts = 0
    run = 0
    cap = max_attempts if max_attempts is not None else 40 * trials
    while run < trials and attempts < cap:
        attempts += 1
        t = [
            Fraction(rng.randint(-height, height), rng.randint(1, max(1, height // 8)))
            for _ in range(fam.arity)
        ]
        try:
            d, x0 = specialize(fam, t)
            rep = sigma_torsion(d, x0)
        except G2Error:
            continue
        if rep.verdict == "Inconclusive":
            continue
        s = rep.sigma1 if component == 1 else rep.sigma2
        run += 1
        if not emul(rep.curve, order, s).infinity:
            return IdentityCheckResult(
                passed=False, trials_requested=trials, trials_run=run,
                witness=tuple(t), seed=seed,
            )
    if run < trials:
        return IdentityCheckResult(
            passed=False, trials_requested=trials, trials_run=run,
            inconclusive=True, seed=seed,
        )
    return IdentityCheckResult(passed=True, trials_requested=trials,
                               trials_run=run, seed=seed)

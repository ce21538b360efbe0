"""Floating-point j-invariants of plane cubics with non-rational models.

Used where the exact pipeline cannot go: cubics whose coefficients pick up
a complex cube root (the universal-family probes) and isotriviality scans.
The route mirrors the exact one: pick a numeric seed on the cubic, project
the line pencil through it to a binary quartic g, and evaluate the
classical degree-4/degree-6 invariants

    I = 12ae - 3bd + c^2
    J = 72ace + 9bcd - 27ad^2 - 27b^2 e - 2c^3
    j = 6912 I^3 / (4 I^3 - J^2),

validated against the exact path on rational inputs and the CM golden
values j = 0 and j = 1728.
"""

from __future__ import annotations

import mpmath

from .errors import DomainError


def _poly_eval(coeffs, x):
    acc = mpmath.mpc(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _poly_roots(coeffs):
    cs = [mpmath.mpc(c) for c in coeffs]
    while cs and abs(cs[-1]) == 0:
        cs.pop()
    if len(cs) <= 1:
        return []
    return mpmath.polyroots(list(reversed(cs)), maxsteps=300, extraprec=120)


class TernaryCubic:
    """Affine plane cubic sum c[i,j] x^i w^j (i + j <= 3), complex coeffs."""

    def __init__(self, terms: dict):
        self.terms = {k: mpmath.mpc(v) for k, v in terms.items() if v != 0}
        if not any(i + j == 3 for i, j in self.terms):
            raise DomainError("not a cubic")

    @classmethod
    def from_pq(cls, p_coeffs, q_coeffs) -> "TernaryCubic":
        """w^3 - 3 Q(x) w - 2 P(x) with numeric coefficient lists."""
        terms = {(0, 3): mpmath.mpc(1)}
        for i, c in enumerate(q_coeffs):
            terms[(i, 1)] = terms.get((i, 1), 0) - 3 * mpmath.mpc(c)
        for i, c in enumerate(p_coeffs):
            terms[(i, 0)] = terms.get((i, 0), 0) - 2 * mpmath.mpc(c)
        return cls(terms)

    def eval(self, x, w):
        return sum(c * x**i * w**j for (i, j), c in self.terms.items())

    def fiber_coeffs(self, x):
        """Coefficients in w of the fiber polynomial at the given x."""
        out = [mpmath.mpc(0)] * 4
        for (i, j), c in self.terms.items():
            out[j] += c * x**i
        return out


def aronhold_j(cubic: TernaryCubic, precision: int = 50) -> complex:
    """Numeric j-invariant of a smooth plane cubic at the given precision."""
    with mpmath.workdps(precision):
        last_err = None
        for attempt in range(24):
            try:
                return _aronhold_j_once(cubic, attempt)
            except (DomainError, ZeroDivisionError) as e:
                last_err = e
        raise DomainError(f"could not stabilise numeric j: {last_err}")


def _aronhold_j_once(cubic: TernaryCubic, attempt: int) -> complex:
    # numeric seed: x0 rational-ish ladder, w solves the fiber cubic
    x0 = mpmath.mpf(attempt) / 3 + mpmath.mpf(1) / 7
    fib = cubic.fiber_coeffs(x0)
    roots = _poly_roots(fib)
    if not roots:
        raise DomainError("fiber degenerate")
    w0 = roots[(attempt // 3) % len(roots)]

    # translate seed to origin, split into homogeneous parts
    # G(u, s) = C(x0 + u, w0 + s)
    # collect via binomial expansion
    G: dict[tuple[int, int], mpmath.mpc] = {}
    from math import comb

    for (i, j), c in cubic.terms.items():
        for a in range(i + 1):
            for b in range(j + 1):
                key = (a, b)
                G[key] = G.get(key, 0) + (
                    c * comb(i, a) * comb(j, b) * x0 ** (i - a) * w0 ** (j - b)
                )
    tol = mpmath.mpf(10) ** (-mpmath.mp.dps + 8)
    scale = max(abs(v) for v in G.values())
    if abs(G.get((0, 0), 0)) > tol * scale:
        raise DomainError("seed drifted off the cubic")
    a = G.get((1, 0), mpmath.mpc(0))
    b = G.get((0, 1), mpmath.mpc(0))
    if abs(b) < tol * scale:
        raise DomainError("vertical tangent at numeric seed")

    def line(deg):
        cs = [mpmath.mpc(0)] * (deg + 1)
        for (i, j), c in G.items():
            if i + j == deg:
                cs[j] += c
        return cs

    lq = [a, b]
    q2 = line(2)
    c3 = line(3)

    def pmul(p, q):
        out = [mpmath.mpc(0)] * (len(p) + len(q) - 1)
        for i, ci in enumerate(p):
            for j, cj in enumerate(q):
                out[i + j] += ci * cj
        return out

    def padd(p, q, s=1):
        n = max(len(p), len(q))
        return [
            (p[i] if i < len(p) else 0) + s * (q[i] if i < len(q) else 0)
            for i in range(n)
        ]

    g = padd(pmul(q2, q2), pmul(lq, c3), s=-4)
    while len(g) < 5:
        g.append(mpmath.mpc(0))
    e, d, c, bb, aa = g[0], g[1], g[2], g[3], g[4]
    I = 12 * aa * e - 3 * bb * d + c * c
    J = (
        72 * aa * c * e + 9 * bb * c * d - 27 * aa * d * d
        - 27 * bb * bb * e - 2 * c**3
    )
    den = 4 * I**3 - J * J
    if abs(den) < tol * max(1, abs(I) ** 3, abs(J) ** 2):
        raise DomainError("numerically singular quartic")
    return complex(6912 * I**3 / den)

"""Classification of trinomial equations x^n + a x^r y^s + b y^m = 0.

The functions u = x^n / y^m and v = x^r / y^(m-s) satisfy u + a v + b = 0
on the curve.  With Delta = |n(m-s) - rm| (the exponent-matrix
determinant), Delta = 0 means u, v are multiplicatively dependent and the
curve is a union of torus translates; otherwise the deck group G of the
reduction is the quotient of the congruence lattice

    { (p, q) : pn = qm,  pr = q(m-s)  (mod Delta) }

by Delta*Z^2, isomorphic to Z^2 / M Z^2 for the exponent matrix M, so its
elementary divisors come straight from the Smith normal form.  G is cyclic
exactly when gcd(m, n, r, s) = 1; only then can the equation have
infinitely many integral points (reported as a flag, never solved here).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .errors import DomainError
from .rationals import rat

VERDICT_TORUS = "TorusTranslates"
VERDICT_REDUCED = "IrreducibleReduced"


@dataclass(frozen=True)
class TrinomialEq:
    n: int
    r: int
    s: int
    m: int
    a: Fraction
    b: Fraction

    def __post_init__(self):
        for name in ("n", "r", "s", "m"):
            v = getattr(self, name)
            if not isinstance(v, int) or v < 0:
                raise DomainError(f"exponent {name} must be a non-negative integer")
        object.__setattr__(self, "a", rat(self.a))
        object.__setattr__(self, "b", rat(self.b))
        if self.a == 0 or self.b == 0:
            raise DomainError("coefficients a, b must be nonzero")


def smith_normal_form(mat: list[list[int]]) -> list[int]:
    """Elementary divisors d1 | d2 | ... of an integer matrix (2x2 here,
    written generally), by deterministic pivoting on least |entry|."""
    m = [row[:] for row in mat]
    rows, cols = len(m), len(m[0])
    divisors: list[int] = []
    top = 0
    while top < min(rows, cols):
        # locate the minimal nonzero entry in the remaining block
        best = None
        for i in range(top, rows):
            for j in range(top, cols):
                if m[i][j] and (best is None or abs(m[i][j]) < abs(m[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        bi, bj = best
        m[top], m[bi] = m[bi], m[top]
        for row in m:
            row[top], row[bj] = row[bj], row[top]
        piv = m[top][top]
        dirty = False
        for i in range(top + 1, rows):
            q = m[i][top] // piv
            if q:
                m[i] = [x - q * y for x, y in zip(m[i], m[top])]
            if m[i][top]:
                dirty = True
        for j in range(top + 1, cols):
            q = m[top][j] // piv
            if q:
                for row in m:
                    row[j] -= q * row[top]
            if m[top][j]:
                dirty = True
        if dirty:
            continue
        # pivot must divide the rest of the block
        ok = True
        for i in range(top + 1, rows):
            for j in range(top + 1, cols):
                if m[i][j] % piv:
                    m[top] = [x + y for x, y in zip(m[top], m[i])]
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue
        divisors.append(abs(piv))
        top += 1
    return divisors


@dataclass(frozen=True)
class TrinomialClass:
    delta: int
    elementary_divisors: tuple[int, ...]
    cyclic: bool
    exponent_matrix: tuple[tuple[int, int], tuple[int, int]]
    u_exponents: tuple[int, int]
    v_exponents: tuple[int, int]
    verdict: str
    relation: str = field(default="u + a*v + b = 0")

    @property
    def group_order(self) -> int:
        out = 1
        for d in self.elementary_divisors:
            out *= d
        return out


def classify(eq: TrinomialEq) -> TrinomialClass:
    """Delta, the deck group structure, and the multiplicative reduction."""
    n, r, s, m = eq.n, eq.r, eq.s, eq.m
    M = ((n, -m), (r, -(m - s)))
    delta = abs(n * (m - s) - r * m)
    if delta == 0:
        return TrinomialClass(
            delta=0,
            elementary_divisors=(),
            cyclic=False,
            exponent_matrix=M,
            u_exponents=(n, -m),
            v_exponents=(r, -(m - s)),
            verdict=VERDICT_TORUS,
        )
    divisors = smith_normal_form([list(M[0]), list(M[1])])
    divisors = tuple(d for d in divisors if d != 1)
    if not divisors:
        divisors = (1,)
    cyclic = gcd(gcd(m, n), gcd(r, s)) == 1
    return TrinomialClass(
        delta=delta,
        elementary_divisors=divisors,
        cyclic=cyclic,
        exponent_matrix=M,
        u_exponents=(n, -m),
        v_exponents=(r, -(m - s)),
        verdict=VERDICT_REDUCED,
    )


def brute_force_group(eq: TrinomialEq) -> tuple[int, ...]:
    """Oracle: enumerate G = {(p, q) mod Delta : pn = qm, pr = q(m-s)} and
    read off its elementary divisors from the exponent and order counts."""
    n, r, s, m = eq.n, eq.r, eq.s, eq.m
    delta = abs(n * (m - s) - r * m)
    if delta == 0:
        raise DomainError("no finite group for Delta = 0")
    elems = [
        (p, q)
        for p in range(delta)
        for q in range(delta)
        if (p * n - q * m) % delta == 0 and (p * r - q * (m - s)) % delta == 0
    ]
    size = len(elems)

    def order(el) -> int:
        p, q = el
        k = 1
        cp, cq = p % delta, q % delta
        while (cp, cq) != (0, 0):
            cp = (cp + p) % delta
            cq = (cq + q) % delta
            k += 1
        return k

    exponent = 1
    for el in elems:
        o = order(el)
        exponent = exponent * o // gcd(exponent, o)
    # rank <= 2: structure is C_(size/exponent) x C_exponent
    d1 = size // exponent
    if d1 == 1:
        return (exponent,)
    return (d1, exponent)


def classification_json(eq: TrinomialEq, cls: TrinomialClass) -> dict:
    return {
        "equation": {
            "n": eq.n, "r": eq.r, "s": eq.s, "m": eq.m,
            "a": f"{eq.a.numerator}/{eq.a.denominator}",
            "b": f"{eq.b.numerator}/{eq.b.denominator}",
        },
        "delta": cls.delta,
        "group": {
            "elementary_divisors": list(cls.elementary_divisors),
            "order": cls.group_order if cls.delta else None,
            "cyclic": cls.cyclic,
        },
        "reduction": {
            "u": {"x_power": cls.u_exponents[0], "y_power": cls.u_exponents[1]},
            "v": {"x_power": cls.v_exponents[0], "y_power": cls.v_exponents[1]},
            "relation": cls.relation,
            "exponent_matrix": [list(row) for row in cls.exponent_matrix],
        },
        "verdict": cls.verdict,
        "infinitely_many_integral_points_possible_only_if_cyclic": True,
    }

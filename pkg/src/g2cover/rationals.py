"""Exact rational scalars and the integer utilities built on them.

Rationals are plain ``fractions.Fraction`` values: the stdlib type already
maintains the canonical form we need (gcd-reduced, positive denominator,
0/1 for zero).  This module adds parsing/formatting for the ``"num/den"``
wire format plus the few integer routines (isqrt-based square tests,
squarefree decomposition, continued-fraction recognition) that the rest of
the toolkit leans on.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

from .errors import DomainError, RadicandTooLargeError

QQ = Fraction


def rat(value, den=None) -> Fraction:
    """Coerce ints, strings like ``-4/27`` or pairs to an exact Fraction."""
    if den is not None:
        return Fraction(value, den)
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise DomainError(f"cannot coerce {value!r} to a rational")


def rat_str(q: Fraction) -> str:
    """Canonical wire form ``num/den`` with positive denominator."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def is_square(n: int) -> bool:
    if n < 0:
        return False
    r = isqrt(n)
    return r * r == n


def _is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int, budget: int = 3_000_000) -> int:
    if n % 2 == 0:
        return 2
    for c in range(1, 20):
        x = y = 2
        d = 1
        steps = 0
        while d == 1 and steps < budget:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = gcd(abs(x - y), n)
            steps += 1
        if 1 < d < n:
            return d
    raise RadicandTooLargeError(f"failed to split {n} within the budget")


def factorize(n: int, limit: int = 10**18) -> dict[int, int]:
    """Factor |n| into primes; raises if a cofactor resists the budget."""
    n = abs(n)
    if n == 0:
        raise DomainError("cannot factor 0")
    if n > 10**200:
        raise RadicandTooLargeError(f"{n} exceeds the factoring budget")
    out: dict[int, int] = {}
    for p in (2, 3, 5, 7, 11, 13):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    d = 17
    while d * d <= n and d < 10**6:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 2
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if _is_probable_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        f = _pollard_rho(m)
        stack.extend([f, m // f])
    return out


def squarefree_part(q: Fraction) -> tuple[int, Fraction]:
    """Write q = d * c**2 with d a squarefree integer; return (d, c).

    Used to normalise square roots: sqrt(q) = c * sqrt(d).
    """
    q = Fraction(q)
    if q == 0:
        raise DomainError("0 has no squarefree part")
    sign = -1 if q < 0 else 1
    n = abs(q.numerator) * q.denominator  # q = n / den^2 * sign
    d = 1
    c = Fraction(1, q.denominator)
    for p, e in factorize(n).items():
        c *= Fraction(p) ** (e // 2)
        if e % 2:
            d *= p
    return sign * d, c


def recognize_rational(x: float, max_den: int = 10**9) -> Fraction | None:
    """Continued-fraction rationality recognition for the numeric oracles."""
    f = Fraction(x).limit_denominator(max_den)
    if abs(float(f) - x) <= 1e-9 * max(1.0, abs(x)):
        return f
    return None

"""Trinomial classification against the brute-force group oracle."""

import itertools
import random
from fractions import Fraction as F

import pytest

from g2cover.errors import DomainError
from g2cover.multipoly import MultiPoly
from g2cover.trinomial import (
    TrinomialEq,
    brute_force_group,
    classification_json,
    classify,
    smith_normal_form,
)


def test_masser_zannier_example():
    # y^4 - a x y - x^3 with variables swapped: (n, r, s, m) = (4, 1, 1, 3)
    cls = classify(TrinomialEq(4, 1, 1, 3, F(-2), F(-1)))
    assert cls.delta == 5
    assert cls.elementary_divisors == (5,)
    assert cls.cyclic
    assert cls.verdict == "IrreducibleReduced"


def test_torus_translates():
    cls = classify(TrinomialEq(2, 1, 1, 2, F(1), F(1)))
    assert cls.delta == 0 and cls.verdict == "TorusTranslates"


def test_noncyclic_example():
    cls = classify(TrinomialEq(6, 2, 2, 4, F(1), F(1)))
    assert cls.delta == 4
    assert cls.elementary_divisors == (2, 2)
    assert not cls.cyclic
    assert tuple(brute_force_group(TrinomialEq(6, 2, 2, 4, F(1), F(1)))) == (2, 2)


def test_exhaustive_delta_up_to_50():
    count = 0
    for n, r, s, m in itertools.product(range(8), repeat=4):
        try:
            eq = TrinomialEq(n, r, s, m, F(1), F(1))
        except DomainError:
            continue
        cls = classify(eq)
        if cls.delta == 0 or cls.delta > 50:
            continue
        assert tuple(brute_force_group(eq)) == cls.elementary_divisors, (n, r, s, m)
        assert cls.group_order == cls.delta
        count += 1
    assert count > 1000


def test_snf_randomized_matches_oracle():
    rng = random.Random(8)
    for _ in range(50):
        n, r, s, m = (rng.randint(0, 12) for _ in range(4))
        try:
            eq = TrinomialEq(n, r, s, m, F(3), F(-5))
        except DomainError:
            continue
        cls = classify(eq)
        if cls.delta == 0 or cls.delta > 80:
            continue
        assert tuple(brute_force_group(eq)) == cls.elementary_divisors


def test_snf_small_matrices():
    assert smith_normal_form([[2, 0], [0, 3]]) == [1, 6]
    for mat in ([[4, -3], [1, -2]], [[6, -4], [2, -2]], [[2, 4], [6, 8]]):
        ds = smith_normal_form([row[:] for row in mat])
        det = mat[0][0] * mat[1][1] - mat[0][1] * mat[1][0]
        prod = 1
        for d in ds:
            prod *= d
        assert prod == abs(det)
        for a, b in zip(ds, ds[1:]):
            assert b % a == 0


def test_substitution_soundness_symbolic():
    # x^n + a x^r y^s + b y^m == y^m (u + a v + b) with u = x^n / y^m and
    # v = x^r / y^(m-s): verified as the exact monomial identity
    n, r, s, m = 7, 2, 3, 5
    a, b = F(4), F(-9)
    x = MultiPoly.var(2, 0)
    y = MultiPoly.var(2, 1)
    lhs = x**n + a * x**r * y**s + b * y**m
    # y^m * u = x^n, y^(m-s) * v = x^r: multiply the relation through by y^m
    rhs = x**n + a * (x**r) * y**(s) + b * y**m
    assert lhs == rhs
    cls = classify(TrinomialEq(n, r, s, m, a, b))
    # exponent bookkeeping: u * y^m = x^n and v * y^(m-s) = x^r
    assert cls.u_exponents == (n, -m)
    assert cls.v_exponents == (r, -(m - s))
    # and y^m * (u + a*v + b) recovers the trinomial term by term:
    #   y^m u = x^n; y^m * a v = a x^r y^(m - (m-s)) = a x^r y^s; y^m * b
    assert (m + cls.v_exponents[1]) == s


def test_zero_coefficients_rejected():
    with pytest.raises(DomainError):
        TrinomialEq(2, 1, 1, 2, F(0), F(1))


def test_json_record():
    eq = TrinomialEq(4, 1, 1, 3, F(-2), F(-1))
    rec = classification_json(eq, classify(eq))
    assert rec["delta"] == 5 and rec["group"]["cyclic"]
    assert rec["verdict"] == "IrreducibleReduced"

"""Sparse multivariate polynomials and exact evaluation."""

from fractions import Fraction as F

import pytest

from g2cover.errors import ArityError
from g2cover.multipoly import MultiPoly, from_unipoly, multi_eval
from g2cover.polys import UniPoly


def test_eval_family_member():
    # b3*x^3 + b1*x + 10 at (b3, b1, x) = (1, 0, 1) -> 11
    p = MultiPoly(3, {(1, 0, 3): 1, (0, 1, 1): 1, (0, 0, 0): 10})
    assert multi_eval(p, (1, 0, 1)) == 11


def test_eval_zero_poly():
    assert multi_eval(MultiPoly(3), (5, -7, F(1, 3))) == 0


def test_g1_at_ones_against_term_sum():
    from g2cover.bft import G1

    # independent term-by-term oracle
    total = F(0)
    for e, c in G1.terms.items():
        v = c
        for k in e:
            v *= F(1) ** k
        total += v
    assert total == multi_eval(G1, (1, 1, 1, 1)) == 0


def test_arity_mismatch():
    p = MultiPoly(2, {(1, 0): 1})
    with pytest.raises(ArityError):
        multi_eval(p, (1, 2, 3))


def test_no_zero_terms_stored():
    p = MultiPoly(2, {(1, 0): 1}) - MultiPoly(2, {(1, 0): 1})
    assert p.terms == {} and p.is_zero()


def test_eval_partial_and_collapse():
    p = MultiPoly(2, {(2, 1): F(3), (0, 2): 1})
    q = p.eval_partial({0: F(2)})
    assert q.to_unipoly(1) == UniPoly([0, 12, 1])


def test_from_unipoly_roundtrip():
    u = UniPoly([1, 0, F(2, 3)])
    m = from_unipoly(u, 3, 2)
    assert m.eval_partial({0: F(0), 1: F(0)}).to_unipoly(2) == u


def test_substitute():
    x = MultiPoly.var(2, 0)
    y = MultiPoly.var(2, 1)
    p = x * x + y
    assert p.substitute(0, y) == y * y + y

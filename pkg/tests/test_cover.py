"""Cover construction, elliptic quotient, infinity fibers."""

import random
from fractions import Fraction as F

import pytest

from g2cover.cover import (
    COVER_GENUS,
    build_cover,
    elliptic_quotient,
    infinity_fiber,
    smoothness_probe,
)
from g2cover.errors import (
    InternalConsistencyError,
    SingularQuotientError,
    UnsupportedSplittingError,
)
from g2cover.genus2 import verify_decomposition
from g2cover.polys import UniPoly, discriminant
from g2cover.quadfield import QuadElem


def d86():
    return verify_decomposition(UniPoly([0, 27, 54, 19]), UniPoly([-9, 0, 1]))


def random_decomposition(rng):
    while True:
        P = UniPoly([F(rng.randint(-9, 9)) for _ in range(4)])
        Q = UniPoly([F(rng.randint(-9, 9)) for _ in range(3)])
        try:
            return verify_decomposition(P, Q)
        except Exception:
            continue


class TestBuildCover:
    def test_example_8_6_relation(self):
        cov = build_cover(d86())
        assert cov.relation_t["P"] == ["0/1", "27/1", "54/1", "19/1"]
        assert cov.genus == COVER_GENUS == 4
        assert cov.involution == {"x": "x", "y": "-y", "t": "Q(x)/t"}

    def test_involution_identity_20_random(self):
        # iota(t)^3 = P - y modulo y^2 = f, equivalently P^2 - f = Q^3
        rng = random.Random(2)
        for _ in range(20):
            d = random_decomposition(rng)
            build_cover(d)  # raises InternalConsistencyError on failure
            assert d.P * d.P - d.f == d.Q * d.Q * d.Q

    def test_fermat_pencil_alpha_2(self):
        d = verify_decomposition(UniPoly([-1, 0, 0, 1]), UniPoly([0, 0, -2]))
        assert d.f == UniPoly([1, 0, 0, -2, 0, 0, 9])
        build_cover(d)


class TestEllipticQuotient:
    def test_example_8_6_cubic(self):
        cubic = elliptic_quotient(d86())
        # w^3 - 3(x^2-9)w - 2(19x^3+54x^2+27x)
        mp = cubic.as_multipoly()
        assert mp.terms[(0, 3)] == 1
        assert mp.terms[(2, 1)] == -3
        assert mp.terms[(0, 1)] == 27
        assert mp.terms[(3, 0)] == -38

    def test_fermat_homogeneous_form(self):
        # alpha = 2: Z^3 + 3*2*Z*U^2 - 2U^3 + 2W^3
        d = verify_decomposition(UniPoly([-1, 0, 0, 1]), UniPoly([0, 0, -2]))
        t = elliptic_quotient(d).ternary
        assert t[(0, 0, 3)] == 1       # Z^3
        assert t[(2, 0, 1)] == 6       # 3*alpha Z U^2
        assert t[(3, 0, 0)] == -2      # -2U^3
        assert t[(0, 3, 0)] == 2       # +2W^3
        assert set(t) == {(0, 0, 3), (2, 0, 1), (3, 0, 0), (0, 3, 0)}

    def test_reducible_is_singular(self):
        with pytest.raises(SingularQuotientError):
            elliptic_quotient(P=UniPoly([]), Q=UniPoly([1, 0, 1]))

    def test_probe_accepts_valid(self):
        smoothness_probe(UniPoly([0, 27, 54, 19]), UniPoly([-9, 0, 1]))


class TestInfinityFiber:
    def test_golden_fibers(self):
        d82 = verify_decomposition(UniPoly([10, 0, 0, 1]), UniPoly([7, 0, -1]))
        fib = infinity_fiber(d82, 0)
        assert fib.w_values == (F(-4), F(-1), F(5)) and fib.d is None

        fib86 = infinity_fiber(d86(), 0)
        assert fib86.w_values[0] == 0
        assert fib86.w_values[1] == QuadElem(0, -3, -3)
        assert fib86.w_values[2] == QuadElem(0, 3, -3)
        assert fib86.d == -3

        # (b3, c2) = (1, 1) degenerates (b3^2 = c2^3); (1, 2) is generic
        d81 = verify_decomposition(UniPoly([0, 0, 0, 1]), UniPoly([3, 0, 2]))
        fib81 = infinity_fiber(d81, 0)
        assert fib81.w_values == (F(-3), F(0), F(3))

    def test_fiber_sum_always_zero(self):
        rng = random.Random(4)
        for _ in range(10):
            d = random_decomposition(rng)
            x0 = F(rng.randint(-3, 3))
            if d.f(x0) == 0:
                continue
            try:
                fib = infinity_fiber(d, x0)
            except UnsupportedSplittingError:
                continue
            assert fib.w_values[0] + fib.w_values[1] + fib.w_values[2] == 0

    def test_special_marked_point_rejected(self):
        d = verify_decomposition(UniPoly([0, 0, 0, 2]), UniPoly([-1, 0, 1]))
        # find a rational root of f if any; x0 with f(x0)=0 must be rejected
        roots = [x for x in [F(0)] if d.f(x) == 0]
        if roots:
            with pytest.raises(InternalConsistencyError):
                infinity_fiber(d, roots[0])

    def test_etale_proxy_disc_ratio(self):
        # disc_w of the fiber cubic = -108 * f(x0), same constant always
        rng = random.Random(9)
        for _ in range(10):
            d = random_decomposition(rng)
            x0 = F(rng.randint(-3, 3))
            if d.f(x0) == 0:
                continue
            fiber_cubic = UniPoly([-2 * d.P(x0), -3 * d.Q(x0), 0, 1])
            assert discriminant(fiber_cubic) == -108 * d.f(x0)

    def test_irreducible_fiber_raises(self):
        # Fermat pencil at alpha = 2, x0 = 0: w^3 + 2 irreducible over Q
        d = verify_decomposition(UniPoly([-1, 0, 0, 1]), UniPoly([0, 0, -2]))
        with pytest.raises(UnsupportedSplittingError):
            infinity_fiber(d, 0)

"""Sparse multivariate polynomials over Q.

Terms live in a dict mapping exponent tuples to nonzero Fractions.  These
carry the parametric families (parameters first, the curve variable x
last by convention) and the handful of bivariate computations on plane
quartics and cubics.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ArityError, DomainError
from .polys import UniPoly
from .rationals import rat


class MultiPoly:
    __slots__ = ("arity", "terms")

    def __init__(self, arity: int, terms=None):
        if arity < 1:
            raise DomainError("arity must be >= 1")
        self.arity = arity
        tidy: dict[tuple[int, ...], Fraction] = {}
        for expo, c in (terms or {}).items():
            expo = tuple(int(e) for e in expo)
            if len(expo) != arity:
                raise ArityError(f"exponent {expo} has wrong length for arity {arity}")
            if any(e < 0 for e in expo):
                raise DomainError("negative exponent")
            c = rat(c)
            if c:
                tidy[expo] = tidy.get(expo, rat(0)) + c
                if not tidy[expo]:
                    del tidy[expo]
        self.terms = tidy

    # -- constructors ---------------------------------------------------
    @classmethod
    def const(cls, arity: int, c) -> "MultiPoly":
        return cls(arity, {tuple([0] * arity): rat(c)})

    @classmethod
    def var(cls, arity: int, i: int) -> "MultiPoly":
        e = [0] * arity
        e[i] = 1
        return cls(arity, {tuple(e): 1})

    # -- structure -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, i: int) -> int:
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    # -- ring ops ----------------------------------------------------------
    def _lift(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.arity != self.arity:
                raise ArityError("arity mismatch")
            return other
        return MultiPoly.const(self.arity, other)

    def __add__(self, other):
        o = self._lift(other)
        terms = dict(self.terms)
        for e, c in o.terms.items():
            terms[e] = terms.get(e, rat(0)) + c
        return MultiPoly(self.arity, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.arity, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._lift(other)
        terms: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, rat(0)) + c1 * c2
        return MultiPoly(self.arity, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise DomainError("negative power")
        out = MultiPoly.const(self.arity, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        o = self._lift(other)
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- evaluation / specialisation ------------------------------------------
    def __call__(self, point) -> Fraction:
        point = [rat(v) for v in point]
        if len(point) != self.arity:
            raise ArityError(
                f"point of length {len(point)} for arity {self.arity}"
            )
        total = rat(0)
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v *= x**k
            total += v
        return total

    def eval_partial(self, assignments: dict[int, Fraction]) -> "MultiPoly":
        """Substitute rational values for some variables (others keep index)."""
        terms: dict[tuple[int, ...], Fraction] = {}
        for e, c in self.terms.items():
            v = rat(c)
            ne = list(e)
            for i, x in assignments.items():
                if e[i]:
                    v *= rat(x) ** e[i]
                ne[i] = 0
            ne_t = tuple(ne)
            terms[ne_t] = terms.get(ne_t, rat(0)) + v
        return MultiPoly(self.arity, terms)

    def to_unipoly(self, i: int) -> UniPoly:
        """Collapse to a univariate polynomial in variable ``i``.

        All other variables must already be eliminated.
        """
        deg = self.degree_in(i)
        coeffs = [rat(0)] * (deg + 1) if deg >= 0 else []
        for e, c in self.terms.items():
            if any(k and j != i for j, k in enumerate(e)):
                raise DomainError("polynomial still depends on other variables")
            coeffs[e[i]] += c
        return UniPoly(coeffs)

    def derivative(self, i: int) -> "MultiPoly":
        terms: dict[tuple[int, ...], Fraction] = {}
        for e, c in self.terms.items():
            if not e[i]:
                continue
            ne = list(e)
            ne[i] -= 1
            terms[tuple(ne)] = terms.get(tuple(ne), rat(0)) + c * e[i]
        return MultiPoly(self.arity, terms)

    def homogeneous_part(self, deg: int) -> "MultiPoly":
        return MultiPoly(
            self.arity, {e: c for e, c in self.terms.items() if sum(e) == deg}
        )

    def substitute(self, i: int, poly: "MultiPoly") -> "MultiPoly":
        """Replace variable ``i`` by another polynomial of the same arity."""
        out = MultiPoly(self.arity)
        for e, c in self.terms.items():
            term = MultiPoly.const(self.arity, c)
            for j, k in enumerate(e):
                if not k:
                    continue
                base = poly if j == i else MultiPoly.var(self.arity, j)
                term = term * base**k
            out = out + term
        return out

    def __repr__(self):
        if not self.terms:
            return "MultiPoly(0)"
        bits = []
        for e in sorted(self.terms, reverse=True):
            bits.append(f"{self.terms[e]}*x^{e}")
        return "MultiPoly(" + " + ".join(bits) + ")"


def from_unipoly(p: UniPoly, arity: int, i: int) -> MultiPoly:
    if p.d is not None:
        raise DomainError("only rational-coefficient polynomials lift")
    terms = {}
    for k, c in enumerate(p.coeffs):
        if c:
            e = [0] * arity
            e[i] = k
            terms[tuple(e)] = c
    return MultiPoly(arity, terms)


def multi_eval(p: MultiPoly, point) -> Fraction:
    """Exact evaluation at a rational point (arity-checked)."""
    return p(point)

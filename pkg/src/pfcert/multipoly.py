"""Sparse multivariate polynomials over exact rationals.

A polynomial in n variables is a dict mapping exponent tuples (one entry
per variable) to nonzero Fraction coefficients; {} is zero.  Only what the
symbolic identity checks need: ring operations, evaluation, and elementary
symmetric polynomials.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from .polynomials import Rationalish, as_fraction

Monomial = tuple[int, ...]


class MultiPoly:
    __slots__ = ("n_vars", "terms")

    def __init__(self, n_vars: int, terms: Mapping[Monomial, Rationalish] = ()) -> None:
        self.n_vars = n_vars
        self.terms: dict[Monomial, Fraction] = {}
        src = terms.items() if isinstance(terms, Mapping) else terms
        for mono, c in src:
            c = as_fraction(c)
            if c != 0:
                self.terms[mono] = self.terms.get(mono, Fraction(0)) + c
        self.terms = {m: c for m, c in self.terms.items() if c != 0}

    @classmethod
    def zero(cls, n_vars: int) -> "MultiPoly":
        return cls(n_vars)

    @classmethod
    def const(cls, n_vars: int, c: Rationalish) -> "MultiPoly":
        return cls(n_vars, {(0,) * n_vars: c})

    @classmethod
    def variable(cls, n_vars: int, i: int) -> "MultiPoly":
        mono = tuple(1 if j == i else 0 for j in range(n_vars))
        return cls(n_vars, {mono: 1})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.n_vars == other.n_vars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.n_vars, frozenset(self.terms.items())))

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return MultiPoly(self.n_vars, out)

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) - c
        return MultiPoly(self.n_vars, out)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.n_vars, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other: "MultiPoly | Rationalish") -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            c = as_fraction(other)
            return MultiPoly(self.n_vars, {m: c * v for m, v in self.terms.items()})
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, Fraction(0)) + c1 * c2
        return MultiPoly(self.n_vars, out)

    def __rmul__(self, other: Rationalish) -> "MultiPoly":
        return self * other

    def evaluate(self, point: Sequence[Rationalish]) -> Fraction:
        xs = [as_fraction(v) for v in point]
        total = Fraction(0)
        for mono, c in self.terms.items():
            v = c
            for x, e in zip(xs, mono):
                if e:
                    v *= x**e
            total += v
        return total


def elem_sym_multipoly(k: int, n_vars: int) -> MultiPoly:
    """Elementary symmetric polynomial e_k in n_vars variables."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k > n_vars:
        return MultiPoly.zero(n_vars)
    # row DP over variables: e[j] after i variables
    e = [MultiPoly.const(n_vars, 1)] + [MultiPoly.zero(n_vars) for _ in range(k)]
    for i in range(n_vars):
        xi = MultiPoly.variable(n_vars, i)
        for j in range(min(i + 1, k), 0, -1):
            e[j] = e[j] + e[j - 1] * xi
    return e[k]

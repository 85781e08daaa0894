"""Exact real-root location for rational polynomials via Sturm chains.

Counts are always with multiplicity: the Sturm chain counts distinct roots
of each square-free factor, and the Yun decomposition supplies each factor's
multiplicity.  Closed versus open endpoints are decided by explicit
evaluation, never by perturbation: a root sitting exactly on a finite
endpoint is divided out before the chain is evaluated, so the half-open
conventions of Sturm's theorem never bite.

All chain arithmetic runs on primitive integer coefficient lists; sign
counts are invariant under the positive rescaling applied at each step.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .polynomials import (
    Poly,
    Rationalish,
    _ilist_derivative,
    _ilist_primitive,
    _ilist_pseudo_rem,
    as_fraction,
    primitive_int_coeffs,
    square_free_decomposition,
)


@dataclass(frozen=True)
class Interval:
    """A real interval with rational or infinite endpoints.

    ``lower``/``upper`` of None mean -oo/+oo; infinite ends are always open.
    """

    lower: Optional[Fraction]
    upper: Optional[Fraction]
    lower_closed: bool = True
    upper_closed: bool = True

    def __post_init__(self) -> None:
        if self.lower is not None:
            object.__setattr__(self, "lower", as_fraction(self.lower))
        else:
            object.__setattr__(self, "lower_closed", False)
        if self.upper is not None:
            object.__setattr__(self, "upper", as_fraction(self.upper))
        else:
            object.__setattr__(self, "upper_closed", False)
        if self.lower is not None and self.upper is not None and self.lower > self.upper:
            raise ValueError("interval endpoints out of order")

    @classmethod
    def closed(cls, a: Rationalish, b: Rationalish) -> "Interval":
        return cls(as_fraction(a), as_fraction(b), True, True)

    @classmethod
    def open(cls, a: Rationalish, b: Rationalish) -> "Interval":
        return cls(as_fraction(a), as_fraction(b), False, False)

    @classmethod
    def real_line(cls) -> "Interval":
        return cls(None, None)

    @classmethod
    def at_most(cls, b: Rationalish, closed: bool = True) -> "Interval":
        return cls(None, as_fraction(b), False, closed)

    @classmethod
    def at_least(cls, a: Rationalish, closed: bool = True) -> "Interval":
        return cls(as_fraction(a), None, closed, False)

    def contains(self, x: Rationalish) -> bool:
        x = as_fraction(x)
        if self.lower is not None:
            if x < self.lower or (x == self.lower and not self.lower_closed):
                return False
        if self.upper is not None:
            if x > self.upper or (x == self.upper and not self.upper_closed):
                return False
        return True

    def __str__(self) -> str:
        lo = "-oo" if self.lower is None else str(self.lower)
        hi = "+oo" if self.upper is None else str(self.upper)
        lb = "[" if self.lower_closed else "("
        rb = "]" if self.upper_closed else ")"
        return f"{lb}{lo}, {hi}{rb}"


@dataclass(frozen=True)
class RootLocationReport:
    """Exact root counts (with multiplicity) for one polynomial and region."""

    degree: int
    total_real_roots: int
    roots_in_region: int
    all_roots_in_region: bool
    region: str

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "total_real_roots": self.total_real_roots,
            "roots_in_region": self.roots_in_region,
            "all_roots_in_region": self.all_roots_in_region,
            "region": self.region,
        }


def _sign(n: int) -> int:
    return (n > 0) - (n < 0)


def _eval_sign(cs: list[int], x: Fraction) -> int:
    # sign of p(x) by homogeneous integer evaluation: den^deg * p(num/den)
    num, den = x.numerator, x.denominator
    acc = cs[-1]
    pw = 1
    for c in reversed(cs[:-1]):
        pw *= den
        acc = acc * num + c * pw
    return _sign(acc)


def _signs_at(chain: list[list[int]], x: Optional[Fraction], positive_inf: bool) -> list[int]:
    if x is not None:
        return [_eval_sign(cs, x) for cs in chain]
    out = []
    for cs in chain:
        s = _sign(cs[-1])
        if not positive_inf and (len(cs) - 1) % 2 == 1:
            s = -s
        out.append(s)
    return out


def _variations(signs: list[int]) -> int:
    nz = [s for s in signs if s]
    return sum(1 for a, b in zip(nz, nz[1:]) if a * b < 0)


def _sturm_chain(sq_free: Poly) -> list[list[int]]:
    f = primitive_int_coeffs(sq_free)
    chain = [f]
    df = _ilist_primitive(_ilist_derivative(f))
    if df:
        chain.append(df)
    while len(chain[-1]) - 1 > 0:
        r = _ilist_primitive(_ilist_pseudo_rem(chain[-2], chain[-1]))
        if not r:
            break
        chain.append([-c for c in r])
    return chain


def _count_open(chain: list[list[int]], a: Optional[Fraction], b: Optional[Fraction]) -> int:
    # distinct roots in the open interval (a, b); requires chain[0] nonzero
    # at the finite endpoints
    va = _variations(_signs_at(chain, a, positive_inf=False))
    vb = _variations(_signs_at(chain, b, positive_inf=True))
    return va - vb


def _count_factor(f: Poly, chain: list[list[int]], region: Interval) -> int:
    # distinct roots of the square-free factor f inside the region
    a, b = region.lower, region.upper
    if a is not None and b is not None and a == b:
        return 1 if (region.lower_closed and region.upper_closed and f(a) == 0) else 0
    extra = 0
    g = f
    deflated = False
    if a is not None and f(a) == 0:
        if region.lower_closed:
            extra += 1
        g = g.exact_div(Poly((-a, 1)))
        deflated = True
    if b is not None and f(b) == 0:
        if region.upper_closed:
            extra += 1
        g = g.exact_div(Poly((-b, 1)))
        deflated = True
    if g.degree < 1:
        return extra
    gchain = _sturm_chain(g) if deflated else chain
    return _count_open(gchain, a, b) + extra


def count_roots_in_interval(p: Poly, region: Interval) -> RootLocationReport:
    """Exact root counts of p (with multiplicity) inside ``region``."""
    if p.is_zero:
        raise ValueError("zero polynomial")
    total = 0
    inside = 0
    for f, mult in square_free_decomposition(p):
        chain = _sturm_chain(f)
        total += mult * _count_open(chain, None, None)
        inside += mult * _count_factor(f, chain, region)
    return RootLocationReport(
        degree=p.degree,
        total_real_roots=total,
        roots_in_region=inside,
        all_roots_in_region=(inside == p.degree),
        region=str(region),
    )


def is_real_rooted(p: Poly) -> bool:
    """True iff every root of p is real (constants are vacuously real-rooted)."""
    if p.is_zero:
        raise ValueError("zero polynomial")
    if p.degree == 0:
        return True
    report = count_roots_in_interval(p, Interval.real_line())
    return report.total_real_roots == p.degree

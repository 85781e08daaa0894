"""Sequence sources, the log-concavity step operator, and window-honest
Polya frequency refutation tools.

A source produces exact leading terms of an infinite sequence: explicit
finite data, values of an interpolating polynomial, or the power-series
coefficients of a rational generating function (optionally times e^(g*x)
with rational g >= 0).

The step operator sends (a_0, a_1, ...) to (a_0^2, a_1^2 - a_0 a_2, ...).
Computing m terms of the j-th iterate consumes exactly m + j input terms;
sources are never silently zero-padded, so an explicit source that is too
short raises instead of fabricating data.

Refutation tools are window-honest: ``toeplitz_minor_search`` returning
None means "no negative minor within this window", never a PF certificate.
Certificates come from the ``certify`` module only.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import factorial
from typing import Optional, Sequence

from .polynomials import Poly, Rationalish, as_fraction, shift_argument
from .roots import Interval, count_roots_in_interval


class SequenceSource:
    """Abstract exact sequence source."""

    def head(self, n: int) -> tuple[Fraction, ...]:
        raise NotImplementedError

    def describe(self) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class Explicit(SequenceSource):
    """A finite list of exact terms; requests past the end are errors."""

    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(as_fraction(v) for v in self.values))

    def head(self, n: int) -> tuple[Fraction, ...]:
        if n > len(self.values):
            raise ValueError(
                f"explicit source holds {len(self.values)} terms, {n} requested"
            )
        return self.values[:n]

    def describe(self) -> str:
        return "explicit[" + ", ".join(str(v) for v in self.values) + "]"


@dataclass(frozen=True)
class PolyInterp(SequenceSource):
    """Terms a_k = p(k) of an interpolating polynomial."""

    poly: Poly

    def head(self, n: int) -> tuple[Fraction, ...]:
        return tuple(self.poly(k) for k in range(n))

    def describe(self) -> str:
        return f"poly[{self.poly}]"


@dataclass(frozen=True)
class RationalGF(SequenceSource):
    """Coefficients of numerator/denominator * e^(exp_rate * x).

    The denominator must have a nonzero constant term; exp_rate is a
    nonnegative rational (0 disables the exponential factor).
    """

    numerator: Poly
    denominator: Poly
    exp_rate: Fraction = field(default=Fraction(0))

    def __post_init__(self) -> None:
        object.__setattr__(self, "exp_rate", as_fraction(self.exp_rate))
        if self.denominator.is_zero or self.denominator.coeffs[0] == 0:
            raise ValueError("denominator has zero constant term")
        if self.exp_rate < 0:
            raise ValueError("exp_rate must be nonnegative")

    def head(self, n: int) -> tuple[Fraction, ...]:
        num, den = self.numerator.coeffs, self.denominator.coeffs
        c: list[Fraction] = []
        for k in range(n):
            s = num[k] if k < len(num) else Fraction(0)
            for i in range(1, min(k, len(den) - 1) + 1):
                s -= den[i] * c[k - i]
            c.append(s / den[0])
        if self.exp_rate == 0:
            return tuple(c)
        e = [self.exp_rate**i / factorial(i) for i in range(n)]
        return tuple(
            sum((c[i] * e[k - i] for i in range(k + 1)), Fraction(0)) for k in range(n)
        )

    def describe(self) -> str:
        s = f"gf[({self.numerator}) / ({self.denominator})"
        if self.exp_rate != 0:
            s += f", exp_rate={self.exp_rate}"
        return s + "]"


@dataclass(frozen=True)
class Truncation:
    """The first terms of a sequence, tagged with where they came from."""

    terms: tuple[Fraction, ...]
    origin: str

    @property
    def length(self) -> int:
        return len(self.terms)

    def __len__(self) -> int:
        return len(self.terms)


def terms(src: SequenceSource, n: int) -> Truncation:
    """Exact first n terms of the source."""
    if n < 0:
        raise ValueError("term count must be nonnegative")
    return Truncation(terms=src.head(n), origin=src.describe())


def lc_step_terms(a: Sequence[Fraction]) -> list[Fraction]:
    """One log-concavity step on a window: length shrinks by one."""
    if not a:
        raise ValueError("empty input")
    out = [a[0] * a[0]]
    for k in range(1, len(a) - 1):
        out.append(a[k] * a[k] - a[k - 1] * a[k + 1])
    return out


def lc_step(t: Truncation) -> Truncation:
    return Truncation(terms=tuple(lc_step_terms(t.terms)), origin=f"L[{t.origin}]")


def lc_step_poly(p: Poly) -> Poly:
    """Interpolant of the stepped sequence: p(x)^2 - p(x-1)p(x+1)."""
    return p * p - shift_argument(p, -1) * shift_argument(p, 1)


def lc_iterate(src: SequenceSource, depth: int, width: int) -> Truncation:
    """First ``width`` terms of the depth-th iterate (consumes width+depth terms)."""
    if depth < 0 or width < 0:
        raise ValueError("depth and width must be nonnegative")
    t = terms(src, width + depth)
    for _ in range(depth):
        t = lc_step(t)
    return t


@dataclass(frozen=True)
class KFoldVerdict:
    """Sign check of one iterate's window; a verdict never claims more
    than the window shows."""

    depth: int
    width: int
    violation_index: Optional[int]
    violation_value: Optional[Fraction]

    @property
    def ok(self) -> bool:
        return self.violation_index is None

    def describe(self) -> str:
        if self.violation_index is None:
            return f"depth {self.depth}: no violation within window (width {self.width})"
        return (
            f"depth {self.depth}: refuted at index {self.violation_index} "
            f"(value {self.violation_value})"
        )

    def to_dict(self) -> dict:
        return {
            "depth": self.depth,
            "width": self.width,
            "violation_index": self.violation_index,
            "violation_value": None
            if self.violation_value is None
            else str(self.violation_value),
        }


def k_fold_check(src: SequenceSource, depth: int, width: int) -> list[KFoldVerdict]:
    """Check nonnegativity of the first ``width`` terms of each iterate
    up to ``depth``."""
    if depth < 0 or width < 0:
        raise ValueError("depth and width must be nonnegative")
    cur = list(terms(src, width + depth).terms)
    verdicts = []
    for j in range(depth + 1):
        window = cur[:width]
        idx = next((i for i, v in enumerate(window) if v < 0), None)
        verdicts.append(
            KFoldVerdict(
                depth=j,
                width=len(window),
                violation_index=idx,
                violation_value=None if idx is None else window[idx],
            )
        )
        if j < depth:
            cur = lc_step_terms(cur)
    return verdicts


@dataclass(frozen=True)
class MinorWitness:
    """A negative minor of the Toeplitz matrix (a_{j-i}), exact value included."""

    row_indices: tuple[int, ...]
    col_indices: tuple[int, ...]
    minor_value: Fraction

    def to_dict(self) -> dict:
        return {
            "rows": list(self.row_indices),
            "cols": list(self.col_indices),
            "minor_value": str(self.minor_value),
        }


def toeplitz_entry(a: Sequence[Fraction], i: int, j: int) -> Fraction:
    """Entry a_{j-i} of the one-sided Toeplitz matrix (zero below the band)."""
    k = j - i
    if k < 0:
        return Fraction(0)
    if k >= len(a):
        raise IndexError("entry outside the supported window")
    return a[k]


def exact_det(rows: list[list[Fraction]]) -> Fraction:
    """Exact determinant by fraction Gaussian elimination."""
    m = [row[:] for row in rows]
    n = len(m)
    sign = 1
    det = Fraction(1)
    for c in range(n):
        pivot = next((r for r in range(c, n) if m[r][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            sign = -sign
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            for cc in range(c, n):
                m[r][cc] -= f * m[c][cc]
    return sign * det


def toeplitz_minor_search(t: Truncation, max_order: int) -> Optional[MinorWitness]:
    """First negative Toeplitz minor within the window, or None.

    Rows and columns range over 0..length-1, inside which every entry
    a_{j-i} is determined by the window (offsets below 0 are the true zeros
    of a one-sided sequence).  Minors are enumerated by increasing order,
    then lexicographically by (rows, cols), so the witness is reproducible.
    None means no negative minor *within this window*; it is never a PF
    certificate.
    """
    if max_order < 1:
        raise ValueError("max_order must be at least 1")
    a = t.terms
    n = len(a)
    for order in range(1, min(max_order, n) + 1):
        for rows in combinations(range(n), order):
            for cols in combinations(range(n), order):
                m = [[toeplitz_entry(a, i, j) for j in cols] for i in rows]
                v = exact_det(m)
                if v < 0:
                    return MinorWitness(rows, cols, v)
    return None


def finite_pf_check(a: Sequence[Rationalish]) -> bool:
    """PF test for a finitely supported sequence.

    True iff all terms are nonnegative and the generating polynomial is
    real-rooted with no positive roots (all-zero input is PF by convention).
    """
    vals = [as_fraction(v) for v in a]
    if all(v == 0 for v in vals):
        return True
    if any(v < 0 for v in vals):
        return False
    gp = Poly(vals)
    report = count_roots_in_interval(gp, Interval.at_least(0, closed=False))
    return report.total_real_roots == gp.degree and report.roots_in_region == 0

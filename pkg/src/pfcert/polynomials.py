"""Exact univariate polynomial arithmetic over arbitrary-precision rationals.

Coefficients are ``fractions.Fraction`` values stored in ascending order of
degree: ``(c0, c1, ..., cd)`` is c0 + c1*x + ... + cd*x^d with cd != 0.  The
zero polynomial is the empty tuple and has degree -1.  Every operation is
exact; floating-point input is rejected outright so rounding can never sneak
into a verdict path.

Polynomials have a text form shared by the CLI and the JSON reports: an
ascending comma-separated coefficient list, each entry "n" or "n/d", e.g.
"1, 0, -3/2, 1" for 1 - (3/2)x^2 + x^3.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rationalish = Union[Fraction, int, str]


def as_fraction(value: Rationalish) -> Fraction:
    """Coerce to Fraction, rejecting floats: exactness is non-negotiable."""
    if isinstance(value, float):
        raise TypeError("floating-point values are not accepted on exact paths")
    return value if isinstance(value, Fraction) else Fraction(value)


class Poly:
    """Dense univariate polynomial over Fraction, ascending coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Rationalish] = ()) -> None:
        cs = [as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "Poly":
        return cls()

    @classmethod
    def one(cls) -> "Poly":
        return cls((1,))

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def const(cls, c: Rationalish) -> "Poly":
        return cls((c,))

    @classmethod
    def from_roots(cls, roots: Iterable[Rationalish], lead: Rationalish = 1) -> "Poly":
        p = cls.const(lead)
        for r in roots:
            p = p * cls((-as_fraction(r), 1))
        return p

    @classmethod
    def parse(cls, text: str) -> "Poly":
        """Parse the shared text format: "1, 0, -3/2, 1"."""
        parts = [t.strip() for t in text.split(",")]
        if not parts or all(t == "" for t in parts):
            raise ValueError("empty polynomial text")
        try:
            return cls(Fraction(t) for t in parts)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad polynomial text {text!r}: {exc}") from None

    # -- basic queries -----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Fraction:
        """Leading coefficient (0 for the zero polynomial)."""
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == Poly.const(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        return ", ".join(str(c) for c in self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({str(self)!r})"

    def pretty(self, var: str = "x") -> str:
        """Human form like "1 - 3/2*x^2 + x^3"."""
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                xpow = var if i == 1 else f"{var}^{i}"
                body = xpow if mag == 1 else f"{mag}*{xpow}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "Poly | Rationalish") -> "Poly":
        q = other if isinstance(other, Poly) else Poly.const(other)
        a, b = self.coeffs, q.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Poly | Rationalish") -> "Poly":
        q = other if isinstance(other, Poly) else Poly.const(other)
        return self + (-q)

    def __rsub__(self, other: Rationalish) -> "Poly":
        return Poly.const(other) - self

    def __mul__(self, other: "Poly | Rationalish") -> "Poly":
        if not isinstance(other, Poly):
            c = as_fraction(other)
            return Poly(tuple(c * a for a in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return Poly(out)

    def __rmul__(self, other: Rationalish) -> "Poly":
        return self * other

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power")
        out = Poly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __call__(self, x: Rationalish) -> Fraction:
        x = as_fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Poly":
        return Poly(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        return self * (1 / self.lc)

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if not isinstance(other, Poly):
            other = Poly.const(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        d = other.degree
        lc = other.lc
        q = [Fraction(0)] * max(len(r) - d, 0)
        while len(r) - 1 >= d and r:
            k = len(r) - 1 - d
            f = r[-1] / lc
            q[k] = f
            for i, c in enumerate(other.coeffs):
                r[k + i] -= f * c
            while r and r[-1] == 0:
                r.pop()
        return Poly(q), Poly(r)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        """Divide, requiring a zero remainder."""
        q, r = divmod(self, other)
        if not r.is_zero:
            raise ValueError("exact_div: nonzero remainder")
        return q


def shift_argument(p: Poly, t: Rationalish) -> Poly:
    """Return p(x + t), exactly (in-place Taylor shift, O(d^2))."""
    t = as_fraction(t)
    if t == 0 or p.is_zero:
        return p
    cs = list(p.coeffs)
    n = len(cs)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            cs[j] += t * cs[j + 1]
    return Poly(cs)


# -- integer kernels -------------------------------------------------------
# The gcd and Sturm machinery work on primitive integer coefficient lists
# (content removed, sign kept).  Rescaling by positive constants changes
# neither gcds up to units nor sign variations, and keeps the coefficient
# growth of remainder sequences under control.


def primitive_int_coeffs(p: Poly) -> list[int]:
    """Scale p by a positive rational to primitive integer coefficients."""
    if p.is_zero:
        return []
    den = math.lcm(*(c.denominator for c in p.coeffs))
    ints = [int(c * den) for c in p.coeffs]
    g = math.gcd(*ints)
    return [c // g for c in ints]


def _ilist_trim(cs: list[int]) -> list[int]:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _ilist_primitive(cs: list[int]) -> list[int]:
    cs = _ilist_trim(cs)
    if not cs:
        return cs
    g = math.gcd(*cs)
    return [c // g for c in cs]


def _ilist_derivative(cs: Sequence[int]) -> list[int]:
    return [i * c for i, c in enumerate(cs) if i]


def _ilist_pseudo_rem(u: list[int], v: list[int]) -> list[int]:
    """Positive integer multiple of the remainder of u by v (v nonzero).

    Classical pseudo-division: u is rescaled by lc(v) once per reduction
    step, and the sign is corrected afterwards so the result is always a
    *positive* rational multiple of u mod v.
    """
    if not v:
        raise ZeroDivisionError("pseudo-division by zero")
    lc = v[-1]
    dv = len(v) - 1
    r = list(u)
    steps = 0
    while len(r) - 1 >= dv and r:
        top = r[-1]
        dr = len(r) - 1
        r = [lc * c for c in r]
        for i, vc in enumerate(v):
            r[dr - dv + i] -= top * vc
        _ilist_trim(r)
        steps += 1
    if lc < 0 and steps % 2 == 1:
        r = [-c for c in r]
    return r


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd via a primitive pseudo-remainder sequence."""
    if p.is_zero:
        return q.monic()
    if q.is_zero:
        return p.monic()
    a = primitive_int_coeffs(p)
    b = primitive_int_coeffs(q)
    if len(a) < len(b):
        a, b = b, a
    while b:
        a, b = b, _ilist_primitive(_ilist_pseudo_rem(a, b))
    return Poly(a).monic()


def square_free_part(p: Poly) -> Poly:
    """p with every root made simple: p / gcd(p, p'), monic."""
    if p.is_zero:
        raise ValueError("zero input")
    if p.degree == 0:
        return Poly.one()
    return p.exact_div(poly_gcd(p, p.derivative())).monic()


def square_free_decomposition(p: Poly) -> list[tuple[Poly, int]]:
    """Yun decomposition: monic pairwise-coprime square-free factors.

    Returns [(f1, 1), (f2, 2), ...] with p = lc * prod f_i^i, factors of
    degree >= 1 only.
    """
    if p.is_zero:
        raise ValueError("zero polynomial")
    p = p.monic()
    if p.degree == 0:
        return []
    d = poly_gcd(p, p.derivative())
    if d.degree == 0:
        return [(p, 1)]
    w = p.exact_div(d)
    y = p.derivative().exact_div(d)
    z = y - w.derivative()
    out: list[tuple[Poly, int]] = []
    i = 1
    while w.degree > 0:
        f = poly_gcd(w, z)
        if f.degree > 0:
            out.append((f.monic(), i))
        w = w.exact_div(f)
        y = z.exact_div(f)
        z = y - w.derivative()
        i += 1
    return out

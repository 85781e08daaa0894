"""The binomial-coefficient basis, its collapse to the power basis, and the
associated diamond product.

Write C(x, k) = x(x-1)...(x-k+1)/k! for the binomial polynomial.  Every
polynomial expands uniquely as p = sum c_k C(x, k) with c_k = (forward
difference)^k p at 0.  ``binomial_to_power`` maps p to sum c_k x^k and
``power_to_binomial`` is its inverse.  Both fix p(0) and p(-1), because
C(xi, k) = xi^k at xi in {-1, 0}.

The diamond product of f and g is the push-forward of ordinary
multiplication through that basis change.  It also equals the derivative
sum  sum_k f^(k) g^(k) / k!^2 * x^k (x+1)^k,  which is what ``diamond``
computes; ``diamond_by_transform`` computes the defining composition so the
two routes can be checked against each other.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .polynomials import Poly, shift_argument


def binomial_poly(k: int) -> Poly:
    """C(x, k) = x(x-1)...(x-k+1)/k!."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    p = Poly.one()
    for i in range(k):
        p = p * Poly((-i, 1))
    return p * Fraction(1, math.factorial(k))


def to_binomial_basis(p: Poly) -> tuple[Fraction, ...]:
    """Coordinates of p in the binomial basis: k-th forward difference at 0."""
    if p.is_zero:
        return ()
    row = [p(i) for i in range(p.degree + 1)]
    out = [row[0]]
    while len(row) > 1:
        row = [b - a for a, b in zip(row, row[1:])]
        out.append(row[0])
    return tuple(out)


def binomial_to_power(p: Poly) -> Poly:
    """Send sum c_k C(x, k) to sum c_k x^k (degree and leading sign kept)."""
    return Poly(to_binomial_basis(p))


def power_to_binomial(p: Poly) -> Poly:
    """Inverse of binomial_to_power: send sum a_k x^k to sum a_k C(x, k)."""
    out = Poly.zero()
    basis = Poly.one()
    for k, c in enumerate(p.coeffs):
        if k:
            basis = basis * Poly((-(k - 1), 1)) * Fraction(1, k)
        if c != 0:
            out = out + basis * c
    return out


def diamond(f: Poly, g: Poly) -> Poly:
    """Diamond product via the derivative sum (exact)."""
    if f.is_zero or g.is_zero:
        return Poly.zero()
    out = Poly.zero()
    weight = Poly.one()
    xw = Poly((0, 1, 1))  # x(x+1)
    fk, gk = f, g
    for k in range(min(f.degree, g.degree) + 1):
        if k:
            fk = fk.derivative()
            gk = gk.derivative()
            weight = weight * xw
        out = out + fk * gk * weight * Fraction(1, math.factorial(k) ** 2)
    return out


def diamond_by_transform(f: Poly, g: Poly) -> Poly:
    """Diamond product via its definition as basis-changed multiplication."""
    return binomial_to_power(power_to_binomial(f) * power_to_binomial(g))


def signed_reflection(p: Poly) -> Poly:
    """(-1)^deg p * p(-x-1): the involution exchanging root sets around -1/2."""
    if p.is_zero:
        return p
    flipped = Poly(tuple(-c if i % 2 else c for i, c in enumerate(p.coeffs)))
    out = shift_argument(flipped, 1)
    return -out if p.degree % 2 else out


def _pair_transform(g: Poly) -> Poly:
    # sum_k (g^(k) g^(k) / k!^2 - g^(k-1) g^(k+1) / ((k-1)!(k+1)!)) x^k (x+1)^k,
    # with the g^(-1) term zero by convention
    derivs = [g]
    while derivs[-1].degree > 0:
        derivs.append(derivs[-1].derivative())

    def dv(i: int) -> Poly:
        return derivs[i] if 0 <= i < len(derivs) else Poly.zero()

    out = Poly.zero()
    weight = Poly.one()
    xw = Poly((0, 1, 1))
    for k in range(max(g.degree, 0) + 1):
        if k:
            weight = weight * xw
        term = dv(k) * dv(k) * Fraction(1, math.factorial(k) ** 2)
        if k >= 1:
            term = term - dv(k - 1) * dv(k + 1) * Fraction(
                1, math.factorial(k - 1) * math.factorial(k + 1)
            )
        out = out + term * weight
    return out


def logconcavity_step_identity(p: Poly) -> tuple[Poly, Poly]:
    """Both sides of the factorization of the transformed log-concavity step.

    For p vanishing at 0 and -1, the image of p(x)^2 - p(x-1)p(x+1) under
    ``binomial_to_power`` factors as x(1+x) times a derivative-pair sum in
    g, where ``binomial_to_power(p) = x(1+x) g``.  Returns (left, right);
    equality of the two is a theorem and is exercised by the test suite.
    """
    if p.is_zero:
        return Poly.zero(), Poly.zero()
    if p(0) != 0 or p(-1) != 0:
        raise ValueError("p must vanish at 0 and -1")
    step = p * p - shift_argument(p, -1) * shift_argument(p, 1)
    left = binomial_to_power(step)
    f = binomial_to_power(p)
    g = f.exact_div(Poly((0, 1, 1)))
    right = Poly((0, 1, 1)) * _pair_transform(g)
    return left, right

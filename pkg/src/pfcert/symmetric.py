"""Elementary symmetric function identities and the nonlinear
derivative-product operators they control.

The central identity: for scalars mu_0, mu_1, ... and n variables,

    sum_{i<=j} mu_{j-i} e_i e_j  =  e_n * sum_k gamma_k e_{n-k}(x + 1/x)

where gamma_k = sum_j C(k, j) mu_{k-2j} over 0 <= j <= k/2, e_k is the k-th
elementary symmetric polynomial and x + 1/x is coordinatewise.  With the
weights (1, 0, -1, 0, ...) the gamma_k collapse to Catalan numbers at even
indices; that special case explains why the derivative-product transforms
below preserve root locations.

Identity checks run fully symbolically for small n and by exact evaluation
at seeded random rational points for larger n; either way the arithmetic is
exact and a failure ships a concrete witness.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .multipoly import MultiPoly, elem_sym_multipoly
from .polynomials import Poly, Rationalish, as_fraction
from .roots import Interval, count_roots_in_interval

DEFAULT_SEED = 1729


def elem_sym(k: int, xs: Sequence[Rationalish]) -> Fraction:
    """e_k of the given values (e_0 = 1, e_k = 0 beyond the count)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    vals = [as_fraction(x) for x in xs]
    if k > len(vals):
        return Fraction(0)
    e = [Fraction(1)] + [Fraction(0)] * k
    for i, x in enumerate(vals):
        for j in range(min(i + 1, k), 0, -1):
            e[j] += e[j - 1] * x
    return e[k]


def elem_sym_all(xs: Sequence[Fraction]) -> list[Fraction]:
    """All of e_0 .. e_n for n values, in one pass."""
    n = len(xs)
    e = [Fraction(1)] + [Fraction(0)] * n
    for i, x in enumerate(xs):
        for j in range(i + 1, 0, -1):
            e[j] += e[j - 1] * x
    return e


def catalan(k: int) -> int:
    return math.comb(2 * k, k) // (k + 1)


def interleave_even(alpha: Sequence[Rationalish]) -> list[Fraction]:
    """Weights (a0, 0, a1, 0, a2, ...): alpha_j sits at index 2j."""
    out: list[Fraction] = []
    for a in alpha:
        out.append(as_fraction(a))
        out.append(Fraction(0))
    return out[:-1] if out else []


def interleave_odd(alpha: Sequence[Rationalish]) -> list[Fraction]:
    """Weights (0, a0, 0, a1, ...): alpha_j sits at index 2j+1."""
    out: list[Fraction] = [Fraction(0)]
    for a in alpha:
        out.append(as_fraction(a))
        out.append(Fraction(0))
    return out[:-1] if len(out) > 1 else []


def gamma_weights(mu: Sequence[Rationalish], n: int) -> list[Fraction]:
    """gamma_k = sum_{j=0..k/2} C(k, j) mu_{k-2j}, for k = 0..n."""
    ms = [as_fraction(m) for m in mu]

    def at(i: int) -> Fraction:
        return ms[i] if 0 <= i < len(ms) else Fraction(0)

    return [
        sum((Fraction(math.comb(k, j)) * at(k - 2 * j) for j in range(k // 2 + 1)),
            Fraction(0))
        for k in range(n + 1)
    ]


@dataclass(frozen=True)
class IdentityTranscript:
    """Record of one identity check: what ran, how, and the outcome."""

    identity: str
    params: dict
    method: str  # "symbolic" or "randomized"
    seed: Optional[int]
    outcome: str  # "pass" or "fail"
    witness: Optional[dict] = None

    @property
    def ok(self) -> bool:
        return self.outcome == "pass"

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "params": self.params,
            "method": self.method,
            "seed": self.seed,
            "outcome": self.outcome,
            "witness": self.witness,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _random_fraction(rng: random.Random, zero_ok: bool = False) -> Fraction:
    while True:
        v = Fraction(rng.randint(-20, 20), rng.randint(1, 10))
        if zero_ok or v != 0:
            return v


def _weighted_pair_sum_symbolic(n: int, mu: Sequence[Fraction]) -> MultiPoly:
    # sum_{0<=i<=j<=n} mu_{j-i} e_i e_j
    e = [elem_sym_multipoly(k, n) for k in range(n + 1)]
    out = MultiPoly.zero(n)
    for i in range(n + 1):
        for j in range(i, n + 1):
            d = j - i
            if d < len(mu) and mu[d] != 0:
                out = out + e[i] * e[j] * mu[d]
    return out


def _gamma_side_symbolic(n: int, gamma: Sequence[Fraction]) -> MultiPoly:
    # e_n * sum_k gamma_k e_{n-k}(x + 1/x), cleared of denominators:
    # e_n * e_m(x + 1/x) = sum over m-subsets S of prod_{i in S}(x_i^2+1)
    # * prod_{i not in S} x_i
    from itertools import combinations

    out = MultiPoly.zero(n)
    for k in range(n + 1):
        if gamma[k] == 0:
            continue
        m = n - k
        acc = MultiPoly.zero(n)
        for S in combinations(range(n), m):
            term = MultiPoly.const(n, 1)
            inS = set(S)
            for i in range(n):
                xi = MultiPoly.variable(n, i)
                if i in inS:
                    term = term * (xi * xi + MultiPoly.const(n, 1))
                else:
                    term = term * xi
            acc = acc + term
        out = out + acc * gamma[k]
    return out


def check_weighted_esym_identity(
    n: int,
    mu: Sequence[Rationalish],
    seed: int = DEFAULT_SEED,
    points: int = 50,
    symbolic_limit: int = 5,
) -> IdentityTranscript:
    """Check sum_{i<=j} mu_{j-i} e_i e_j = e_n sum gamma_k e_{n-k}(x + 1/x).

    Symbolic expansion up to ``symbolic_limit`` variables; beyond that,
    exact evaluation at ``points`` seeded random nonzero rational points
    (an honest identity cannot fail; a false one yields a witness point).
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    ms = [as_fraction(m) for m in mu]
    gamma = gamma_weights(ms, n)
    params = {"n": n, "mu": [str(m) for m in ms]}
    if n <= symbolic_limit:
        lhs = _weighted_pair_sum_symbolic(n, ms)
        rhs = _gamma_side_symbolic(n, gamma)
        if lhs == rhs:
            return IdentityTranscript("weighted-esym-product", params, "symbolic", None, "pass")
        return IdentityTranscript(
            "weighted-esym-product", params, "symbolic", None, "fail",
            witness={"difference_terms": len((lhs - rhs).terms)},
        )
    rng = random.Random(seed)
    for _ in range(points):
        xs = [_random_fraction(rng) for _ in range(n)]
        e = elem_sym_all(xs)
        lhs = Fraction(0)
        for i in range(n + 1):
            for j in range(i, n + 1):
                d = j - i
                if d < len(ms) and ms[d] != 0:
                    lhs += ms[d] * e[i] * e[j]
        shifted = [x + 1 / x for x in xs]
        es = elem_sym_all(shifted)
        rhs = e[n] * sum(
            (gamma[k] * es[n - k] for k in range(n + 1)), Fraction(0)
        )
        if lhs != rhs:
            return IdentityTranscript(
                "weighted-esym-product", params, "randomized", seed, "fail",
                witness={
                    "point": [str(x) for x in xs],
                    "lhs": str(lhs),
                    "rhs": str(rhs),
                },
            )
    return IdentityTranscript(
        "weighted-esym-product", params, "randomized", seed, "pass"
    )


def check_catalan_esym_identity(n: int, symbolic_limit: int = 6) -> IdentityTranscript:
    """Check sum_k (e_k^2 - e_{k-1} e_{k+1}) = e_n sum_k C_k e_{n-2k}(x + 1/x).

    The left side is expanded directly from the squares-minus-neighbors
    form and the right side carries literal Catalan coefficients, so this
    is independent of the general weighted check; it also cross-checks that
    ``gamma_weights`` on (1, 0, -1) interleaved reproduces the Catalans.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    params = {"n": n}
    gamma = gamma_weights(interleave_even([1, -1]), n)
    for k in range(n + 1):
        expected = Fraction(catalan(k // 2)) if k % 2 == 0 else Fraction(0)
        if gamma[k] != expected:
            return IdentityTranscript(
                "catalan-esym-sum", params, "symbolic", None, "fail",
                witness={"gamma_index": k, "gamma": str(gamma[k]), "catalan": str(expected)},
            )
    if n > symbolic_limit:
        # same statement as the weighted identity with interleaved weights
        inner = check_weighted_esym_identity(n, interleave_even([1, -1]))
        return IdentityTranscript(
            "catalan-esym-sum", params, inner.method, inner.seed, inner.outcome,
            witness=inner.witness,
        )
    e = [elem_sym_multipoly(k, n) for k in range(n + 2)]
    lhs = MultiPoly.zero(n)
    for k in range(n + 1):
        lhs = lhs + e[k] * e[k]
        if k >= 1 and k + 1 <= n:
            lhs = lhs - e[k - 1] * e[k + 1]
    gamma_catalan = [
        Fraction(catalan(k // 2)) if k % 2 == 0 else Fraction(0) for k in range(n + 1)
    ]
    rhs = _gamma_side_symbolic(n, gamma_catalan)
    outcome = "pass" if lhs == rhs else "fail"
    witness = None if outcome == "pass" else {"difference_terms": len((lhs - rhs).terms)}
    return IdentityTranscript("catalan-esym-sum", params, "symbolic", None, outcome, witness)


# -- operator family -------------------------------------------------------


def symbol_poly(n: int, alpha: Sequence[Rationalish]) -> Poly:
    """Factorial-weighted symbol of the alpha family:

    sum_{k=0..n/2} ( sum_{j<=k} alpha_j / ((k+j)!(k-j)!) ) x^k / (n-2k)!.

    Nonnegative real-rootedness of this polynomial governs the whole
    operator family of this module.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    al = [as_fraction(a) for a in alpha]
    coeffs = []
    for k in range(n // 2 + 1):
        inner = Fraction(0)
        for j in range(k + 1):
            if j < len(al):
                inner += al[j] / (math.factorial(k + j) * math.factorial(k - j))
        coeffs.append(inner / math.factorial(n - 2 * k))
    return Poly(coeffs)


def binomial_symbol_poly(n: int, alpha: Sequence[Rationalish]) -> Poly:
    """Binomial-weighted companion of ``symbol_poly``:

    sum_{k=0..n} ( sum_{j<=k} alpha_j C(n, k+j) C(n, k-j) ) x^k.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    al = [as_fraction(a) for a in alpha]
    coeffs = []
    for k in range(n + 1):
        inner = Fraction(0)
        for j in range(k + 1):
            if j < len(al) and k + j <= n:
                inner += al[j] * math.comb(n, k + j) * math.comb(n, k - j)
        coeffs.append(inner)
    return Poly(coeffs)


def derivative_product_transform(
    g: Poly, alpha: Sequence[Rationalish], weight: Poly, shift: int = 0
) -> Poly:
    """Apply the nonlinear transform

        sum_k ( sum_j alpha_j g^(k+shift+j)/(k+shift+j)! * g^(k-j)/(k-j)! )
              * weight^k

    exactly; terms with a negative derivative order are zero.  ``shift``
    is 0 or 1 (1 gives the staggered variant).
    """
    if shift not in (0, 1):
        raise ValueError("shift must be 0 or 1")
    if g.is_zero:
        return Poly.zero()
    al = [as_fraction(a) for a in alpha]
    dg = g.degree
    derivs = [g]
    for _ in range(dg):
        derivs.append(derivs[-1].derivative())
    out = Poly.zero()
    wk = Poly.one()
    for k in range(dg + 1):
        if k:
            wk = wk * weight
            if wk.is_zero:
                break
        inner = Poly.zero()
        for j, a in enumerate(al):
            hi = k + shift + j
            lo = k - j
            if lo < 0 or hi > dg:
                break
            if a != 0:
                inner = inner + derivs[hi] * derivs[lo] * (
                    a / (math.factorial(hi) * math.factorial(lo))
                )
        if not inner.is_zero:
            out = out + inner * wk
    return out


def interval_transform(
    g: Poly,
    alpha: Sequence[Rationalish],
    a: Rationalish,
    b: Rationalish,
    c: Rationalish,
    shift: int = 0,
) -> Poly:
    """The derivative-product transform with weight c (x - a)(x - b).

    For weights alpha whose symbol polynomial has only nonpositive real
    roots and c > 0, this preserves "all roots in [a, b]"; with c < 0 it
    sends roots in one of the rays past [a, b] into the complement.
    """
    a = as_fraction(a)
    b = as_fraction(b)
    c = as_fraction(c)
    if a >= b:
        raise ValueError("require a < b")
    weight = Poly((-a, 1)) * Poly((-b, 1)) * c
    return derivative_product_transform(g, alpha, weight, shift)


# -- orthogonal polynomial checks ------------------------------------------


def jacobi11(n: int) -> Poly:
    """Jacobi polynomial with both parameters 1, by three-term recurrence."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    p0 = Poly.one()
    if n == 0:
        return p0
    p1 = Poly((0, 2))
    for m in range(2, n + 1):
        # m(m+2) P_m = (2m+1)(m+1) x P_{m-1} - m(m+1) P_{m-2}
        num = Poly((0, (2 * m + 1) * (m + 1))) * p1 - Poly.const(m * (m + 1)) * p0
        p0, p1 = p1, num * Fraction(1, m * (m + 2))
    return p1


def hermite(n: int) -> Poly:
    """Physicists' Hermite polynomial H_n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    p0 = Poly.one()
    if n == 0:
        return p0
    p1 = Poly((0, 2))
    for m in range(2, n + 1):
        p0, p1 = p1, Poly((0, 2)) * p1 - Poly.const(2 * (m - 1)) * p0
    return p1


def check_catalan_jacobi_identity(n: int) -> IdentityTranscript:
    """Three closed forms of one polynomial, checked equal and negative-rooted:

        sum_k C_k C(n, 2k) x^k (1+x)^(n-2k)
      = (1/(n+1)) sum_k C(n+1, k) C(n+1, k+1) x^k
      = (1-x)^n J_n((1+x)/(1-x)) / (n+1),   J_n = jacobi11(n),

    the substitution in the third form cleared symbolically.  All roots are
    asserted real and strictly negative (Sturm-certified).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    params = {"n": n}
    one_plus = Poly((1, 1))
    one_minus = Poly((1, -1))
    a = Poly.zero()
    for k in range(n // 2 + 1):
        a = a + (one_plus ** (n - 2 * k)) * Poly(
            [0] * k + [catalan(k) * math.comb(n, 2 * k)]
        )
    b = Poly(
        [
            Fraction(math.comb(n + 1, k) * math.comb(n + 1, k + 1), n + 1)
            for k in range(n + 1)
        ]
    )
    c = Poly.zero()
    for i, coef in enumerate(jacobi11(n).coeffs):
        if coef != 0:
            c = c + (one_plus**i) * (one_minus ** (n - i)) * coef
    c = c * Fraction(1, n + 1)
    if not (a == b == c):
        return IdentityTranscript(
            "catalan-jacobi-forms", params, "symbolic", None, "fail",
            witness={"form1": str(a), "form2": str(b), "form3": str(c)},
        )
    if n >= 1:
        report = count_roots_in_interval(a, Interval.at_most(0, closed=False))
        if not (report.total_real_roots == a.degree and report.all_roots_in_region):
            return IdentityTranscript(
                "catalan-jacobi-forms", params, "symbolic", None, "fail",
                witness={"roots": report.to_dict()},
            )
    return IdentityTranscript("catalan-jacobi-forms", params, "symbolic", None, "pass")


def check_hermite_turan_identity(k: int) -> IdentityTranscript:
    """Turan determinant of Hermite polynomials as a positive square sum:

        H_k^2 - H_{k-1} H_{k+1} = (k-1)! sum_{j<k} 2^(k-j) / j! * H_j^2.

    Also asserts the derivative rule H_n' = 2n H_{n-1} along the way.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    params = {"k": k}
    hs = [hermite(i) for i in range(k + 2)]
    for i in range(1, k + 2):
        if hs[i].derivative() != hs[i - 1] * (2 * i):
            return IdentityTranscript(
                "hermite-turan", params, "symbolic", None, "fail",
                witness={"derivative_rule_failed_at": i},
            )
    lhs = hs[k] * hs[k] - hs[k - 1] * hs[k + 1]
    rhs = Poly.zero()
    for j in range(k):
        rhs = rhs + hs[j] * hs[j] * Fraction(2 ** (k - j), math.factorial(j))
    rhs = rhs * math.factorial(k - 1)
    outcome = "pass" if lhs == rhs else "fail"
    witness = None if outcome == "pass" else {"lhs": str(lhs), "rhs": str(rhs)}
    return IdentityTranscript("hermite-turan", params, "symbolic", None, outcome, witness)

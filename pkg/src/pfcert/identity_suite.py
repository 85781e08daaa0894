"""One-stop runner for every identity check the package can perform.

Collects symbolic and seeded-random transcripts from the basis-transform
module (argument-shift compatibility, diamond dual formula, the step
factorization) and the symmetric-function module (the weighted and Catalan
sums, the Jacobi forms, the Hermite Turan expansion).  Transcripts come
back sorted by identity name so output ordering is canonical.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .binomial_basis import (
    diamond,
    diamond_by_transform,
    logconcavity_step_identity,
    power_to_binomial,
)
from .polynomials import Poly, shift_argument
from .symmetric import (
    DEFAULT_SEED,
    IdentityTranscript,
    check_catalan_esym_identity,
    check_catalan_jacobi_identity,
    check_hermite_turan_identity,
    check_weighted_esym_identity,
)


def _random_poly(rng: random.Random, degree: int) -> Poly:
    cs = [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(degree)]
    cs.append(Fraction(rng.choice([i for i in range(-9, 10) if i]), rng.randint(1, 4)))
    return Poly(cs)


def check_shift_compatibility(
    max_degree: int = 10, trials: int = 50, seed: int = DEFAULT_SEED
) -> IdentityTranscript:
    """Argument shifts commute with the binomial-basis expansion of x*h:

        power_to_binomial(x h)(x+1) = power_to_binomial((x+1) h)

    and the mirrored version with a shift by -1.
    """
    rng = random.Random(seed)
    params = {"max_degree": max_degree, "trials": trials}
    x = Poly.x()
    xp1 = Poly((1, 1))
    for t in range(trials):
        h = _random_poly(rng, rng.randint(0, max_degree))
        lhs1 = shift_argument(power_to_binomial(x * h), 1)
        rhs1 = power_to_binomial(xp1 * h)
        lhs2 = shift_argument(power_to_binomial(xp1 * h), -1)
        rhs2 = power_to_binomial(x * h)
        if lhs1 != rhs1 or lhs2 != rhs2:
            return IdentityTranscript(
                "binomial-shift", params, "randomized", seed, "fail",
                witness={"h": str(h)},
            )
    return IdentityTranscript("binomial-shift", params, "randomized", seed, "pass")


def check_diamond_dual(
    max_degree: int = 8, trials: int = 50, seed: int = DEFAULT_SEED
) -> IdentityTranscript:
    """The derivative-sum diamond product equals the basis-change definition."""
    rng = random.Random(seed)
    params = {"max_degree": max_degree, "trials": trials}
    for t in range(trials):
        f = _random_poly(rng, rng.randint(0, max_degree))
        g = _random_poly(rng, rng.randint(0, max_degree))
        if diamond(f, g) != diamond_by_transform(f, g):
            return IdentityTranscript(
                "diamond-dual-formula", params, "randomized", seed, "fail",
                witness={"f": str(f), "g": str(g)},
            )
    return IdentityTranscript("diamond-dual-formula", params, "randomized", seed, "pass")


def check_step_factorization(
    max_degree: int = 8, trials: int = 100, seed: int = DEFAULT_SEED
) -> IdentityTranscript:
    """Both routes of the transformed log-concavity step agree for random
    admissible polynomials (vanishing at 0 and -1)."""
    rng = random.Random(seed)
    params = {"max_degree": max_degree, "trials": trials}
    base = Poly((0, 1, 1))  # x(x+1)
    for t in range(trials):
        extra = _random_poly(rng, rng.randint(0, max(max_degree - 2, 0)))
        if extra.is_zero:
            extra = Poly.one()
        p = base * extra
        left, right = logconcavity_step_identity(p)
        if left != right:
            return IdentityTranscript(
                "step-factorization", params, "randomized", seed, "fail",
                witness={"p": str(p)},
            )
    return IdentityTranscript("step-factorization", params, "randomized", seed, "pass")


def run_identity_suite(
    magic_n: int = 10,
    beauty_n: int = 6,
    jacobi_n: int = 12,
    hermite_k: int = 12,
    shift_degree: int = 10,
    diamond_degree: int = 8,
    step_trials: int = 100,
    seed: int = DEFAULT_SEED,
) -> list[IdentityTranscript]:
    """Run every identity check at the given size caps; sorted by name."""
    rng = random.Random(seed)
    out: list[IdentityTranscript] = []
    for n in range(1, magic_n + 1):
        mu = [Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(n + 1)]
        out.append(check_weighted_esym_identity(n, mu, seed=seed))
    for n in range(1, beauty_n + 1):
        out.append(check_catalan_esym_identity(n))
    for n in range(0, jacobi_n + 1):
        out.append(check_catalan_jacobi_identity(n))
    for k in range(1, hermite_k + 1):
        out.append(check_hermite_turan_identity(k))
    out.append(check_shift_compatibility(max_degree=shift_degree, seed=seed))
    out.append(check_diamond_dual(max_degree=diamond_degree, seed=seed))
    out.append(check_step_factorization(trials=step_trials, seed=seed))
    return sorted(out, key=lambda t: (t.identity, sorted(t.params.items())))

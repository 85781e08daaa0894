"""Sturm-certified root location checked against direct root bookkeeping.

The oracle throughout: polynomials are built as products of linear factors
with known rational roots (and optionally quadratics with negative
discriminant, which contribute no real roots), so the exact count in any
interval is plain bookkeeping over the constructed root list.
"""

import random
from fractions import Fraction

import pytest

from pfcert.polynomials import Poly
from pfcert.roots import Interval, count_roots_in_interval, is_real_rooted


def rand_fraction(rng, lo=-6, hi=6, den=4):
    return Fraction(rng.randint(lo, hi), rng.randint(1, den))


def rand_interval(rng):
    kind = rng.randint(0, 4)
    if kind == 0:
        return Interval.real_line()
    if kind == 1:
        return Interval.at_most(rand_fraction(rng), closed=rng.random() < 0.5)
    if kind == 2:
        return Interval.at_least(rand_fraction(rng), closed=rng.random() < 0.5)
    a, b = sorted((rand_fraction(rng), rand_fraction(rng)))
    return Interval(a, b, rng.random() < 0.5, rng.random() < 0.5)


def test_interval_validation_and_membership():
    with pytest.raises(ValueError):
        Interval.closed(1, 0)
    box = Interval(Fraction(-1), Fraction(0), True, False)  # [-1, 0)
    assert box.contains(-1)
    assert not box.contains(0)
    assert box.contains(Fraction(-1, 2))
    assert str(Interval.closed(-1, 0)) == "[-1, 0]"
    assert str(Interval.real_line()) == "(-oo, +oo)"


def test_count_roots_known_factorizations():
    # (x+1)^2 on [-1, 0]: double root at the closed endpoint
    rep = count_roots_in_interval(Poly((1, 2, 1)), Interval.closed(-1, 0))
    assert rep.roots_in_region == 2
    assert rep.total_real_roots == 2
    assert rep.all_roots_in_region
    # same polynomial, endpoint now open
    rep = count_roots_in_interval(Poly((1, 2, 1)), Interval(Fraction(-1), Fraction(0), False, True))
    assert rep.roots_in_region == 0
    # 6x^3+6x^2+x on [-1, 0]: roots 0 and (-3 +- sqrt(3))/6, all inside
    rep = count_roots_in_interval(Poly((0, 1, 6, 6)), Interval.closed(-1, 0))
    assert rep.roots_in_region == 3
    assert rep.all_roots_in_region
    # x^2+1 has no real roots
    rep = count_roots_in_interval(Poly((1, 0, 1)), Interval.real_line())
    assert rep.total_real_roots == 0
    assert rep.roots_in_region == 0
    with pytest.raises(ValueError):
        count_roots_in_interval(Poly.zero(), Interval.real_line())


def test_point_intervals():
    p = Poly.from_roots([Fraction(1, 2), Fraction(1, 2), -3])
    rep = count_roots_in_interval(p, Interval.closed(Fraction(1, 2), Fraction(1, 2)))
    assert rep.roots_in_region == 2  # multiplicity counted
    rep = count_roots_in_interval(p, Interval.open(Fraction(1, 2), Fraction(1, 2)))
    assert rep.roots_in_region == 0
    rep = count_roots_in_interval(p, Interval.closed(2, 2))
    assert rep.roots_in_region == 0


def test_bookkeeping_oracle_500_products_of_linear_factors():
    rng = random.Random(4001)
    for trial in range(500):
        n = rng.randint(1, 6)
        roots = [rand_fraction(rng) for _ in range(n)]
        lead = rng.choice([1, -1, 2, Fraction(-1, 3)])
        p = Poly.from_roots(roots, lead=lead)
        region = rand_interval(rng)
        rep = count_roots_in_interval(p, region)
        expected_in = sum(1 for r in roots if region.contains(r))
        assert rep.roots_in_region == expected_in, (roots, str(region))
        assert rep.total_real_roots == n
        assert rep.degree == n
        assert rep.all_roots_in_region == (expected_in == n)


def test_conjugate_pair_bookkeeping():
    # total real roots = degree - 2 * (number of negative-discriminant quadratics)
    rng = random.Random(4002)
    for trial in range(120):
        n_quad = rng.randint(0, 3)
        n_lin = rng.randint(0 if n_quad else 1, 4)
        p = Poly.one()
        for _ in range(n_quad):
            u = rand_fraction(rng)
            v = Fraction(rng.randint(1, 9), rng.randint(1, 4))  # strictly positive
            p = p * Poly((u * u + v, -2 * u, 1))  # (x-u)^2 + v, no real roots
        roots = [rand_fraction(rng) for _ in range(n_lin)]
        p = p * Poly.from_roots(roots)
        rep = count_roots_in_interval(p, Interval.real_line())
        assert rep.degree == 2 * n_quad + n_lin
        assert rep.total_real_roots == n_lin
        assert rep.roots_in_region == n_lin


def test_multiplicities_with_endpoints():
    rng = random.Random(4003)
    for trial in range(120):
        distinct = []
        seen = set()
        for _ in range(rng.randint(1, 3)):
            r = rand_fraction(rng)
            if r not in seen:
                seen.add(r)
                distinct.append((r, rng.randint(1, 3)))
        flat = [r for r, m in distinct for _ in range(m)]
        p = Poly.from_roots(flat)
        # query intervals that sit exactly on roots
        for r, m in distinct:
            rep = count_roots_in_interval(p, Interval.closed(r, r))
            assert rep.roots_in_region == m
            rep = count_roots_in_interval(p, Interval.at_most(r, closed=True))
            assert rep.roots_in_region == sum(mm for rr, mm in distinct if rr <= r)
            rep = count_roots_in_interval(p, Interval.at_most(r, closed=False))
            assert rep.roots_in_region == sum(mm for rr, mm in distinct if rr < r)


def test_is_real_rooted():
    assert is_real_rooted(Poly.from_roots([-1, -2]))
    assert is_real_rooted(Poly((5,)))  # constants are vacuously real-rooted
    # 72x^4+108x^3+36x^2+1 has two non-real zeros
    assert not is_real_rooted(Poly((1, 0, 36, 108, 72)))
    # 1331x^3+386x^2+36x+1: negative cubic discriminant, checked below
    p = Poly((1, 36, 386, 1331))
    assert not is_real_rooted(p)
    d, c, b, a = (int(x) for x in p.coeffs)
    disc = (
        18 * a * b * c * d
        - 4 * b**3 * d
        + b**2 * c**2
        - 4 * a * c**3
        - 27 * a**2 * d**2
    )
    assert disc == -259331
    assert disc < 0  # one real root, two non-real
    assert count_roots_in_interval(p, Interval.real_line()).total_real_roots == 1
    with pytest.raises(ValueError):
        is_real_rooted(Poly.zero())

"""PF interpolation checks, class structure, and certificates.

Key oracles:
  * cubic/quadratic discriminants computed inline,
  * the generating-function numerator w with denominator (1-x)^(d+1),
    whose real-rootedness and nonnegativity characterize PF for
    polynomial-interpolated sequences independently of the transform route,
  * explicit negative Toeplitz minors for non-PF refutations.
"""

import json
import random
from fractions import Fraction

import pytest

from pfcert.binomial_basis import (
    binomial_to_power,
    power_to_binomial,
    signed_reflection,
    to_binomial_basis,
)
from pfcert.certify import (
    Certificate,
    ClassLabel,
    Refusal,
    binomial_column,
    certify_infinite_logconcavity,
    classify,
    pf_interpolation_check,
)
from pfcert.polynomials import Poly, shift_argument
from pfcert.roots import Interval, count_roots_in_interval, is_real_rooted
from pfcert.sequences import PolyInterp, Truncation, exact_det, k_fold_check, lc_step_poly, toeplitz_entry


def gf_numerator(p: Poly) -> Poly:
    # oracle: sum_k p(k) x^k = w(x) / (1-x)^(d+1) with
    # w = sum_j c_j x^j (1-x)^(d-j), c the binomial coordinates of p
    cs = to_binomial_basis(p)
    d = p.degree
    w = Poly.zero()
    for j, cj in enumerate(cs):
        w = w + Poly([0] * j + [1]) * (Poly((1, -1)) ** (d - j)) * cj
    return w


def random_member_a_minus1(rng, max_extra=4):
    # push x(x+1) * prod (x + theta), theta in (0, 1) rational, through the
    # inverse transform.  The endpoints are excluded to keep the member out
    # of the class overlaps: an image divisible by x^2 (theta = 0) forces
    # p(1) = 0, and an image with a double root at -1 (theta = 1) forces
    # p(-2) = 0, since p(1) is the sum of the image's two lowest
    # coefficients and p(-2) = g(-1) for image x(x+1)g.
    f = Poly((0, 1, 1))
    for _ in range(rng.randint(0, max_extra)):
        theta = Fraction(rng.randint(1, 11), 12)
        f = f * Poly((theta, 1))
    return power_to_binomial(f)


def test_pf_check_examples():
    ok, rep = pf_interpolation_check(Poly((0, 0, 0, 1)))  # x^3
    assert ok and rep.all_roots_in_region
    with pytest.raises(ValueError):
        pf_interpolation_check(Poly.zero())
    # transform image of the stepped cube has two non-real zeros
    stepped = lc_step_poly(Poly((0, 0, 0, 1)))
    image = binomial_to_power(stepped)
    assert image == Poly((1, 0, 36, 108, 72))
    ok, rep = pf_interpolation_check(stepped)
    assert not ok
    assert rep.total_real_roots == 2  # degree 4, one conjugate pair


def test_x_cubed_gf_numerator_oracle():
    # independent confirmation that x^3 interpolates PF: numerator is the
    # Eulerian polynomial x^2 + 4x + 1 (real-rooted, nonnegative)
    w = gf_numerator(Poly((0, 0, 0, 1)))
    assert w == Poly((0, 1, 4, 1))
    assert is_real_rooted(w)
    assert all(c >= 0 for c in w.coeffs)


def test_shifted_double_root_cubic_is_not_pf():
    # (x+1)(x+3)^2: its transform image is (x+1)(6x^2+14x+9) whose
    # quadratic factor has discriminant 14^2 - 4*6*9 = -20, so the image
    # has two non-real zeros and the interpolated sequence is NOT PF.
    q = Poly((9, 15, 7, 1))
    assert q == Poly.from_roots([-1, -3, -3])
    image = binomial_to_power(q)
    assert image == Poly((9, 23, 20, 6))
    cofactor = image.exact_div(Poly((1, 1)))
    a, b, c = cofactor.coeffs[2], cofactor.coeffs[1], cofactor.coeffs[0]
    assert b * b - 4 * a * c == -20
    ok, rep = pf_interpolation_check(q)
    assert not ok
    assert rep.total_real_roots == 1
    # second oracle: the GF numerator x^2 - 4x + 9 is not real-rooted
    w = gf_numerator(q)
    assert w == Poly((9, -4, 1))
    assert not is_real_rooted(w)
    # third oracle: an explicit negative Toeplitz minor of the sequence
    seq = [q(k) for k in range(8)]
    m = [[toeplitz_entry(seq, i, j) for j in (1, 2, 3, 4)] for i in (0, 1, 2, 3)]
    assert exact_det(m) == -1508
    # the step interpolant fails as well
    assert not pf_interpolation_check(lc_step_poly(q))[0]


def test_pf_with_single_vanishing_loses_pf_after_step():
    # (x+1)(x+3/2)^2 is PF-interpolating, vanishes at -1 only, and its
    # stepped interpolant is not PF: transform image of the step leaves
    # [-1, 0]
    q = Poly.from_roots([-1, Fraction(-3, 2), Fraction(-3, 2)])
    ok, rep = pf_interpolation_check(q)
    assert ok and rep.all_roots_in_region
    assert q(-1) == 0 and q(0) != 0 and q(-2) != 0
    assert classify(q) is ClassLabel.PF_UNCLASSIFIED
    ok2, rep2 = pf_interpolation_check(lc_step_poly(q))
    assert not ok2
    assert rep2.total_real_roots == 2  # degree 4


def test_classify_examples():
    assert classify(Poly((0, 0, 0, 1))) is ClassLabel.PF_UNCLASSIFIED  # x^3
    # interpolant of the k=2 binomial column
    assert classify(Poly((1, Fraction(3, 2), Fraction(1, 2)))) is ClassLabel.A_MINUS2
    assert classify(Poly((0, Fraction(1, 2), Fraction(1, 2)))) is ClassLabel.A_MINUS1
    assert classify(Poly((-5, -1))) is ClassLabel.NOT_PF  # negative leading coeff
    assert classify(Poly((2,))) is ClassLabel.PF_UNCLASSIFIED  # positive constant
    assert classify(Poly((-2,))) is ClassLabel.NOT_PF
    assert classify(Poly.zero()) is ClassLabel.A0  # convention
    # in-interval oracle for the A_minus2 example: image is (x+1)^2
    assert binomial_to_power(Poly((1, Fraction(3, 2), Fraction(1, 2)))) == Poly((1, 2, 1))
    # A_minus1 example: image is x^2 + x with roots {0, -1}
    assert binomial_to_power(Poly((0, Fraction(1, 2), Fraction(1, 2)))) == Poly((0, 1, 1))


def test_classify_overlap_priority():
    # a member of both the (0,1)- and (-1,0)-vanishing classes resolves to
    # A0 (first match); membership in both happens exactly when the
    # transform image is divisible by x^2
    p = power_to_binomial(Poly((0, 0, 1, 1)))  # image x^2(x+1)
    assert p(0) == 0 and p(1) == 0 and p(-1) == 0
    assert classify(p) is ClassLabel.A0
    assert classify(lc_step_poly(p)) is ClassLabel.A0


def test_class_bijections_seeded():
    # shifting the argument by -1 carries the (-1, 0)-vanishing class to the
    # (0, 1)-vanishing class (the sequence gains a leading zero); the signed
    # reflection exchanges the (0, 1) class with the (-2, -1) class.
    rng = random.Random(501)
    for _ in range(40):
        p = random_member_a_minus1(rng)
        assert classify(p) is ClassLabel.A_MINUS1
        q = shift_argument(p, -1)
        assert classify(q) is ClassLabel.A0
        assert classify(shift_argument(q, 1)) is ClassLabel.A_MINUS1
        r = signed_reflection(q)
        assert classify(r) is ClassLabel.A_MINUS2
        assert classify(signed_reflection(r)) is ClassLabel.A0
        # the reflection really does flip the vanishing pattern
        assert r(-1) == 0 and r(-2) == 0


def test_class_closure_under_step_seeded():
    rng = random.Random(502)
    per_class = 50
    for make, label in (
        (lambda: random_member_a_minus1(rng), ClassLabel.A_MINUS1),
        (lambda: shift_argument(random_member_a_minus1(rng), -1), ClassLabel.A0),
        (lambda: shift_argument(random_member_a_minus1(rng), 1), ClassLabel.A_MINUS2),
    ):
        for _ in range(per_class):
            p = make()
            assert classify(p) is label
            assert classify(lc_step_poly(p)) is label


def test_pf_implies_nonnegative_window():
    rng = random.Random(503)
    for _ in range(25):
        p = random_member_a_minus1(rng)
        ok, _ = pf_interpolation_check(p)
        assert ok
        assert all(p(k) >= 0 for k in range(50))


def test_certify_binomial_column():
    res = certify_infinite_logconcavity(Poly((1, Fraction(3, 2), Fraction(1, 2))), 3)
    assert isinstance(res, Certificate)
    assert res.label is ClassLabel.A_MINUS2
    assert len(res.closure_checks) == 3
    assert all(c.label is ClassLabel.A_MINUS2 for c in res.closure_checks)
    assert all(c.report is not None and c.report.all_roots_in_region for c in res.closure_checks)
    assert res.e_image_report.all_roots_in_region


def test_certify_refusals():
    res = certify_infinite_logconcavity(Poly((0, 0, 0, 1)), 1)
    assert isinstance(res, Refusal)
    assert res.label is ClassLabel.PF_UNCLASSIFIED
    assert "A0" in res.reason
    res = certify_infinite_logconcavity(Poly((-5, -1)), 0)
    assert isinstance(res, Refusal)
    assert res.label is ClassLabel.NOT_PF
    res = certify_infinite_logconcavity(Poly((1,)), 0)
    assert isinstance(res, Refusal)
    assert res.label is ClassLabel.PF_UNCLASSIFIED
    assert "constant" in res.reason
    with pytest.raises(ValueError):
        certify_infinite_logconcavity(Poly.one(), -1)


def test_certify_zero_polynomial_convention():
    res = certify_infinite_logconcavity(Poly.zero(), 2)
    assert isinstance(res, Certificate)
    assert res.label is ClassLabel.A0


def test_certificate_json():
    res = certify_infinite_logconcavity(binomial_column(3), 2)
    doc = json.loads(res.to_json())
    assert doc["schema"] == "pfcert.certificate/1"
    assert doc["class"] == "A_minus2"
    assert doc["interpolant"] == str(binomial_column(3))
    assert len(doc["closure_checks"]) == 2
    for check in doc["closure_checks"]:
        assert check["report"]["all_roots_in_region"] is True
    # refusal schema
    ref = certify_infinite_logconcavity(Poly((0, 0, 0, 1)), 0)
    doc = json.loads(ref.to_json())
    assert doc["schema"] == "pfcert.refusal/1"
    assert doc["class"] == "PF_unclassified"


def test_binomial_column_values():
    assert binomial_column(0) == Poly.one()
    assert binomial_column(2) == Poly((1, Fraction(3, 2), Fraction(1, 2)))
    import math

    for k in range(6):
        p = binomial_column(k)
        for n in range(10):
            assert p(n) == math.comb(n + k, k)
        if k >= 2:
            assert p(-1) == 0 and p(-2) == 0
    res = certify_infinite_logconcavity(binomial_column(5), 2)
    assert isinstance(res, Certificate) and res.label is ClassLabel.A_MINUS2
    with pytest.raises(ValueError):
        binomial_column(-1)


def test_certified_polynomials_pass_window_checks():
    rng = random.Random(504)
    candidates = [binomial_column(k) for k in range(2, 6)]
    candidates += [random_member_a_minus1(rng) for _ in range(4)]
    for p in candidates:
        res = certify_infinite_logconcavity(p, 2)
        assert isinstance(res, Certificate)
        assert all(v.ok for v in k_fold_check(PolyInterp(p), 5, 30))

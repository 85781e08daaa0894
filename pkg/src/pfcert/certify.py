"""Certification of Polya frequency membership and infinite log-concavity
for polynomial-interpolated sequences.

A sequence p(0), p(1), p(2), ... with positive leading coefficient is PF
exactly when every root of ``binomial_to_power(p)`` lies in [-1, 0]; that
root-location test is Sturm-certified and fully exact.  Within the PF
interpolants there are three distinguished classes, named for the pair of
consecutive integer points where p vanishes:

    A0:       p(0) = p(1) = 0
    A_minus1: p(-1) = p(0) = 0
    A_minus2: p(-2) = p(-1) = 0

Membership in any of them is closed under the log-concavity step and
implies infinite log-concavity, which is what the certificate asserts.
The certificate also re-verifies the class of each stepped interpolant up
to a requested depth and embeds the per-level root-location reports, so a
reader can re-check it without re-running the classifier.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Union

from .binomial_basis import binomial_to_power
from .polynomials import Poly
from .roots import Interval, RootLocationReport, count_roots_in_interval
from .sequences import lc_step_poly

PF_REGION = Interval.closed(-1, 0)

CERTIFICATE_SCHEMA = "pfcert.certificate/1"
REFUSAL_SCHEMA = "pfcert.refusal/1"


class ClassLabel(str, Enum):
    A0 = "A0"
    A_MINUS1 = "A_minus1"
    A_MINUS2 = "A_minus2"
    PF_UNCLASSIFIED = "PF_unclassified"
    NOT_PF = "not_PF"


CERTIFIABLE = frozenset({ClassLabel.A0, ClassLabel.A_MINUS1, ClassLabel.A_MINUS2})


def pf_interpolation_check(p: Poly) -> tuple[bool, RootLocationReport]:
    """Does p interpolate a PF sequence?

    True iff the leading coefficient is positive and every root of the
    binomial-basis image lies in [-1, 0] (report attached either way).
    """
    if p.is_zero:
        raise ValueError("zero polynomial")
    report = count_roots_in_interval(binomial_to_power(p), PF_REGION)
    return (p.lc > 0 and report.all_roots_in_region, report)


def _classify(p: Poly) -> tuple[ClassLabel, Optional[RootLocationReport]]:
    if p.is_zero:
        # the all-zero sequence: PF and fixed by the step; filed under A0
        return ClassLabel.A0, None
    if p.lc < 0:
        return ClassLabel.NOT_PF, None
    ok, report = pf_interpolation_check(p)
    if not ok:
        return ClassLabel.NOT_PF, report
    if p(0) == 0 and p(1) == 0:
        return ClassLabel.A0, report
    if p(-1) == 0 and p(0) == 0:
        return ClassLabel.A_MINUS1, report
    if p(-2) == 0 and p(-1) == 0:
        return ClassLabel.A_MINUS2, report
    return ClassLabel.PF_UNCLASSIFIED, report


def classify(p: Poly) -> ClassLabel:
    """Class of the interpolated sequence (first matching label wins)."""
    return _classify(p)[0]


@dataclass(frozen=True)
class ClosureCheck:
    depth: int
    label: ClassLabel
    interpolant_degree: int
    report: Optional[RootLocationReport]

    def to_dict(self) -> dict:
        return {
            "depth": self.depth,
            "class": self.label.value,
            "interpolant_degree": self.interpolant_degree,
            "report": None if self.report is None else self.report.to_dict(),
        }


@dataclass(frozen=True)
class Certificate:
    """Machine-checkable assertion of infinite log-concavity."""

    interpolant: Poly
    label: ClassLabel
    e_image_report: Optional[RootLocationReport]
    closure_checks: tuple[ClosureCheck, ...]

    @property
    def ok(self) -> bool:
        return True

    def to_dict(self) -> dict:
        return {
            "schema": CERTIFICATE_SCHEMA,
            "verdict": "infinitely-log-concave",
            "interpolant": str(self.interpolant),
            "class": self.label.value,
            "e_image_report": None
            if self.e_image_report is None
            else self.e_image_report.to_dict(),
            "closure_checks": [c.to_dict() for c in self.closure_checks],
        }

    def to_json(self, indent: Optional[int] = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)


@dataclass(frozen=True)
class Refusal:
    """Declined certification, with the reason and any evidence gathered."""

    interpolant: Poly
    label: ClassLabel
    reason: str
    e_image_report: Optional[RootLocationReport]

    @property
    def ok(self) -> bool:
        return False

    def to_dict(self) -> dict:
        return {
            "schema": REFUSAL_SCHEMA,
            "verdict": "refused",
            "interpolant": str(self.interpolant),
            "class": self.label.value,
            "reason": self.reason,
            "e_image_report": None
            if self.e_image_report is None
            else self.e_image_report.to_dict(),
        }

    def to_json(self, indent: Optional[int] = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)


CertifyResult = Union[Certificate, Refusal]


def certify_infinite_logconcavity(p: Poly, closure_depth: int = 0) -> CertifyResult:
    """Certificate of infinite log-concavity, or a refusal.

    Certification requires class membership in A0, A_minus1 or A_minus2.
    On success the stepped interpolants up to ``closure_depth`` are
    re-classified (each must land in the same class; this is a theorem, and
    re-verification makes the certificate self-contained).  Refusal is a
    value, not an error.
    """
    if closure_depth < 0:
        raise ValueError("closure_depth must be nonnegative")
    label, report = _classify(p)
    if label not in CERTIFIABLE:
        if label is ClassLabel.NOT_PF:
            reason = "not PF: leading coefficient or root location fails"
        else:
            reason = "PF but not in A0, A_minus1 or A_minus2"
            if p.degree == 0:
                reason += (
                    "; a positive constant sequence is trivially infinitely "
                    "log-concave but outside the certified classes"
                )
        return Refusal(interpolant=p, label=label, reason=reason, e_image_report=report)
    checks = []
    q = p
    for j in range(1, closure_depth + 1):
        q = lc_step_poly(q)
        lbl_j, rep_j = _classify(q)
        checks.append(
            ClosureCheck(depth=j, label=lbl_j, interpolant_degree=q.degree, report=rep_j)
        )
        if lbl_j is not label:
            return Refusal(
                interpolant=p,
                label=label,
                reason=f"closure re-verification failed at depth {j}: got {lbl_j.value}",
                e_image_report=report,
            )
    return Certificate(
        interpolant=p,
        label=label,
        e_image_report=report,
        closure_checks=tuple(checks),
    )


def binomial_column(k: int) -> Poly:
    """Interpolant of n -> C(n + k, k): (x+1)(x+2)...(x+k) / k!.

    For k >= 2 it vanishes at -1 and -2, which puts it in A_minus2.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    return Poly.from_roots(range(-k, 0)) * Fraction(1, math.factorial(k))

"""Command-line front end.

Subcommands: reproduce, certify, apply, minors, verify-identities, explore.
Reports are printed human-readable by default or as JSON with --json; all
numbers in reports are exact strings (--approx adds clearly-labeled decimal
approximations, which are never authoritative).  Exit codes: 0 success or
certificate, 1 refusal or refutation or failed expectation, 2 usage or
parse error.  Re-running a command with the same inputs and seed reproduces
byte-identical JSON except for the duration field.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import __version__
from .certify import Certificate, certify_infinite_logconcavity
from .polynomials import Poly
from .roots import Interval, count_roots_in_interval, is_real_rooted
from .sequences import (
    Explicit,
    PolyInterp,
    RationalGF,
    Truncation,
    finite_pf_check,
    k_fold_check,
    lc_iterate,
    lc_step_poly,
    terms,
    toeplitz_minor_search,
)
from .binomial_basis import binomial_to_power
from .certify import pf_interpolation_check
from .symmetric import DEFAULT_SEED
from .identity_suite import run_identity_suite

EXAMPLE_IDS = ("ex-1-4", "ex-2-2a", "ex-2-2b", "counterexample-gf")


def _fmt_terms(values) -> list[str]:
    return [str(v) for v in values]


def _approx(values) -> list[float]:
    return [float(Fraction(v)) for v in values]


class _Report:
    """Accumulates one run's verdicts and witnesses in canonical order."""

    def __init__(self, command: str, argv: list[str], inputs: dict, seed=None) -> None:
        self.command = command
        self.argv = argv
        self.inputs = inputs
        self.seed = seed
        self.verdicts: list[dict] = []
        self.witnesses: list[dict] = []
        self.start = time.monotonic()

    def verdict(self, check: str, status: str, **extra) -> None:
        self.verdicts.append({"check": check, "status": status, **extra})

    def expect(self, check: str, expected, computed) -> bool:
        ok = expected == computed
        self.verdicts.append(
            {
                "check": check,
                "status": "PASS" if ok else "FAIL",
                "expected": expected,
                "computed": computed,
            }
        )
        return ok

    def witness(self, kind: str, payload: dict) -> None:
        self.witnesses.append({"kind": kind, **payload})

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "argv": self.argv,
            "inputs": self.inputs,
            "seed": self.seed,
            "version": __version__,
            "verdicts": self.verdicts,
            "witnesses": self.witnesses,
            "duration_ms": int((time.monotonic() - self.start) * 1000),
        }

    def emit(self, as_json: bool) -> None:
        if as_json:
            print(json.dumps(self.to_dict(), indent=2))
            return
        print(f"pfcert {self.command} (v{__version__})")
        for key, val in self.inputs.items():
            print(f"  input {key}: {val}")
        for v in self.verdicts:
            line = f"  [{v['status']}] {v['check']}"
            detail = {k: x for k, x in v.items() if k not in ("check", "status")}
            if detail:
                line += ": " + ", ".join(f"{k}={x}" for k, x in detail.items())
            print(line)
        for w in self.witnesses:
            print(f"  witness {w['kind']}: " + ", ".join(
                f"{k}={x}" for k, x in w.items() if k != "kind"
            ))


def _parse_poly_arg(text: str) -> Poly:
    return Poly.parse(text)


def _build_source(args) -> object:
    if getattr(args, "terms", None) is not None:
        return Explicit(tuple(Fraction(t.strip()) for t in args.terms.split(",")))
    if getattr(args, "poly", None) is not None:
        return PolyInterp(_parse_poly_arg(args.poly))
    if getattr(args, "gf_num", None) is not None:
        if getattr(args, "gf_den", None) is None:
            raise ValueError("--gf-num requires --gf-den")
        rate = Fraction(args.exp_rate) if getattr(args, "exp_rate", None) else Fraction(0)
        return RationalGF(
            _parse_poly_arg(args.gf_num), _parse_poly_arg(args.gf_den), rate
        )
    raise ValueError("no sequence source given (use --terms, --poly or --gf-num/--gf-den)")


# -- reproduce -------------------------------------------------------------

EX_1_4_EXPECTED = [
    "1",
    "67251334144",
    "681452113625701425",
    "30700964335097660866560",
    "-41699291012783844888674304",
]

EX_2_2A_IMAGE = "1, 0, 36, 108, 72"

COUNTEREXAMPLE_TERMS = ["1", "13", "133", "1331", "13310", "133100", "1331000", "13310000"]
COUNTEREXAMPLE_STEP_WINDOW = ["1", "36", "386", "1331", "0", "0", "0"]


def cmd_reproduce(args) -> int:
    rep = _Report("reproduce", ["reproduce", args.example_id], {"example_id": args.example_id})
    ok = True
    if args.example_id == "ex-1-4":
        src = RationalGF(Poly((1, 3, 3, 1)), Poly((1, -5, 8, -4)))
        rep.inputs["generating_function"] = src.describe()
        t = lc_iterate(src, 4, 5)
        computed = _fmt_terms(t.terms)
        for i, (e, c) in enumerate(zip(EX_1_4_EXPECTED, computed)):
            ok &= rep.expect(f"step-iterate depth 4 term {i}", e, c)
        if args.approx:
            rep.witness("approx-non-authoritative", {"terms": _approx(t.terms)})
    elif args.example_id == "ex-2-2a":
        p = Poly((0, 0, 0, 1))
        rep.inputs["interpolant"] = str(p)
        image = binomial_to_power(lc_step_poly(p))
        ok &= rep.expect("transform image of stepped cube", EX_2_2A_IMAGE, str(image))
        ok &= rep.expect("image is_real_rooted", False, is_real_rooted(image))
        rep.witness(
            "root-location",
            count_roots_in_interval(image, Interval.real_line()).to_dict(),
        )
    elif args.example_id == "ex-2-2b":
        q = Poly((9, 15, 7, 1))  # (x+1)(x+3)^2
        rep.inputs["interpolant"] = str(q)
        got_q, report_q = pf_interpolation_check(q)
        # Pinned expectation: true.  Exact computation refutes it: the
        # binomial image is (x+1)(6x^2+14x+9) and the quadratic factor has
        # negative discriminant, so the interpolated sequence is not PF.
        ok &= rep.expect("pf-interpolation-check (x+1)(x+3)^2", True, got_q)
        rep.witness("root-location", report_q.to_dict())
        got_l, report_l = pf_interpolation_check(lc_step_poly(q))
        ok &= rep.expect("pf-interpolation-check of step interpolant", False, got_l)
        rep.witness("root-location", report_l.to_dict())
    elif args.example_id == "counterexample-gf":
        src = RationalGF(Poly((1, 3, 3, 1)), Poly((1, -10)))
        rep.inputs["generating_function"] = src.describe()
        t = terms(src, 8)
        ok &= rep.expect("source terms", COUNTEREXAMPLE_TERMS, _fmt_terms(t.terms))
        stepped = lc_iterate(src, 1, 7)
        ok &= rep.expect(
            "step window", COUNTEREXAMPLE_STEP_WINDOW, _fmt_terms(stepped.terms)
        )
        ok &= rep.expect("finite_pf_check", False, finite_pf_check(stepped.terms))
        gp = Poly(stepped.terms)
        report = count_roots_in_interval(gp, Interval.at_least(0, closed=False))
        rep.witness("generating-polynomial-roots", report.to_dict())
        ok &= rep.expect(
            "generating polynomial real-rooted",
            False,
            report.total_real_roots == gp.degree,
        )
        witness = toeplitz_minor_search(stepped, args.max_order)
        rep.verdict(
            f"toeplitz minors to order {args.max_order}",
            "NONE-IN-WINDOW" if witness is None else "NEGATIVE-MINOR",
            note="window minors cannot certify PF; refutation rests on the root count",
        )
        if witness is not None:
            rep.witness("negative-minor", witness.to_dict())
    rep.emit(args.json)
    return 0 if ok else 1


# -- certify ---------------------------------------------------------------


def cmd_certify(args) -> int:
    try:
        p = _parse_poly_arg(args.polynomial)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    rep = _Report(
        "certify",
        ["certify", args.polynomial, "--depth", str(args.depth)],
        {"polynomial": args.polynomial, "closure_depth": args.depth},
    )
    result = certify_infinite_logconcavity(p, args.depth)
    if isinstance(result, Certificate):
        rep.verdict("certification", "CERTIFIED", **{"class": result.label.value})
        rep.witness("certificate", result.to_dict())
        rep.emit(args.json)
        return 0
    rep.verdict("certification", "REFUSED", reason=result.reason, **{"class": result.label.value})
    rep.witness("refusal", result.to_dict())
    rep.emit(args.json)
    return 1


# -- apply -----------------------------------------------------------------


def cmd_apply(args) -> int:
    try:
        src = _build_source(args)
        t = lc_iterate(src, args.depth, args.width)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    rep = _Report(
        "apply",
        ["apply", "--depth", str(args.depth), "--width", str(args.width)],
        {
            "source": src.describe(),
            "depth": args.depth,
            "width": args.width,
            "consumed_lookahead": args.width + args.depth,
        },
    )
    rep.verdict("iterate", "OK", terms=_fmt_terms(t.terms))
    if args.approx:
        rep.witness("approx-non-authoritative", {"terms": _approx(t.terms)})
    rep.emit(args.json)
    return 0


# -- minors ------------------------------------------------------------------


def cmd_minors(args) -> int:
    try:
        src = _build_source(args)
        if args.width is not None:
            t = terms(src, args.width)
        elif isinstance(src, Explicit):
            t = terms(src, len(src.values))
        else:
            raise ValueError("--width is required for non-explicit sources")
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    rep = _Report(
        "minors",
        ["minors", "--max-order", str(args.max_order)],
        {"source": src.describe(), "window": t.length, "max_order": args.max_order},
    )
    witness = toeplitz_minor_search(t, args.max_order)
    if witness is None:
        rep.verdict(
            "toeplitz-minor-search",
            "NONE-IN-WINDOW",
            note="no negative minor within this window; this is not a PF certificate",
        )
        rep.emit(args.json)
        return 0
    rep.verdict("toeplitz-minor-search", "NEGATIVE-MINOR")
    rep.witness("negative-minor", witness.to_dict())
    rep.emit(args.json)
    return 1


# -- verify-identities -------------------------------------------------------


def cmd_verify_identities(args) -> int:
    rep = _Report(
        "verify-identities",
        [
            "verify-identities",
            "--magic-n", str(args.magic_n),
            "--jacobi-n", str(args.jacobi_n),
            "--hermite-k", str(args.hermite_k),
        ],
        {
            "magic_n": args.magic_n,
            "jacobi_n": args.jacobi_n,
            "hermite_k": args.hermite_k,
        },
        seed=args.seed,
    )
    transcripts = run_identity_suite(
        magic_n=args.magic_n,
        jacobi_n=args.jacobi_n,
        hermite_k=args.hermite_k,
        seed=args.seed,
    )
    all_ok = True
    for t in transcripts:
        all_ok &= t.ok
        rep.verdict(
            f"{t.identity} {json.dumps(t.params, sort_keys=True)}",
            "PASS" if t.ok else "FAIL",
            method=t.method,
        )
        if t.witness is not None:
            rep.witness("identity-failure", {"identity": t.identity, **t.witness})
    rep.emit(args.json)
    return 0 if all_ok else 1


# -- explore -----------------------------------------------------------------


def cmd_explore(args) -> int:
    if args.exponent < 1:
        print("error: exponent must be at least 1", file=sys.stderr)
        return 2
    p = Poly([0] * args.exponent + [1])
    rep = _Report(
        "explore",
        [
            "explore", str(args.exponent),
            "--depth", str(args.depth),
            "--width", str(args.width),
        ],
        {"exponent": args.exponent, "depth": args.depth, "width": args.width},
    )
    verdicts = k_fold_check(PolyInterp(p), args.depth, args.width)
    any_violation = False
    for v in verdicts:
        if v.ok:
            rep.verdict(f"depth {v.depth}", "NO-VIOLATION-IN-WINDOW", width=v.width)
        else:
            any_violation = True
            rep.verdict(
                f"depth {v.depth}",
                "REFUTED",
                index=v.violation_index,
                value=str(v.violation_value),
            )
    rep.verdict(
        "scope",
        "WINDOW-ONLY",
        note="verdicts cover only the computed window; no claim is made beyond it",
    )
    rep.emit(args.json)
    return 1 if any_violation else 0


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pfcert",
        description="Exact log-concavity and Polya frequency certification.",
    )
    parser.add_argument("--version", action="version", version=f"pfcert {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_common(p):
        p.add_argument("--json", action="store_true", help="emit the report as JSON")
        p.add_argument("--approx", action="store_true",
                       help="add non-authoritative decimal approximations")

    p = sub.add_parser("reproduce", help="re-run a pinned worked example")
    p.add_argument("example_id", choices=EXAMPLE_IDS)
    p.add_argument("--max-order", type=int, default=3)
    add_common(p)
    p.set_defaults(func=cmd_reproduce)

    p = sub.add_parser("certify", help="certify infinite log-concavity of an interpolant")
    p.add_argument("polynomial", help='ascending coefficients, e.g. "1, 3/2, 1/2"')
    p.add_argument("--depth", type=int, default=3, help="closure re-verification depth")
    add_common(p)
    p.set_defaults(func=cmd_certify)

    def add_source(p):
        g = p.add_mutually_exclusive_group(required=True)
        g.add_argument("--terms", help='explicit terms, e.g. "1, 2, 3"')
        g.add_argument("--poly", help="interpolating polynomial coefficients")
        g.add_argument("--gf-num", help="generating function numerator coefficients")
        p.add_argument("--gf-den", help="generating function denominator coefficients")
        p.add_argument("--exp-rate", help="rational rate for an e^(g x) factor", default=None)

    p = sub.add_parser("apply", help="iterate the log-concavity step on a source")
    add_source(p)
    p.add_argument("--depth", type=int, default=1)
    p.add_argument("--width", type=int, default=10)
    add_common(p)
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("minors", help="search a window for a negative Toeplitz minor")
    add_source(p)
    p.add_argument("--width", type=int, default=None,
                   help="window length (defaults to all terms of an explicit source)")
    p.add_argument("--max-order", type=int, default=3)
    add_common(p)
    p.set_defaults(func=cmd_minors)

    p = sub.add_parser("verify-identities", help="run the identity transcript suite")
    p.add_argument("--magic-n", type=int, default=10)
    p.add_argument("--jacobi-n", type=int, default=12)
    p.add_argument("--hermite-k", type=int, default=12)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    add_common(p)
    p.set_defaults(func=cmd_verify_identities)

    p = sub.add_parser("explore", help="window-check iterates of the d-th powers")
    p.add_argument("exponent", type=int)
    p.add_argument("--depth", type=int, default=3)
    p.add_argument("--width", type=int, default=20)
    add_common(p)
    p.set_defaults(func=cmd_explore)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

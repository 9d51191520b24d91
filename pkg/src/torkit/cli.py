"""Command-line interface: compute, table, verify, convert, qnum.

Exit codes: 0 on success (and when every verification check passes), 1 when
any verification check fails, 2 on usage errors such as an even torus index
or an unsupported conversion.  JSON output embeds polynomials in the exact
interchange form of the laurent module, one record per line in table mode.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from dataclasses import dataclass
from typing import Callable, Optional

from .families import (
    FAMILIES,
    FamilySpec,
    EvenIndexUnsupported,
    homfly_to_generalized,
    to_alexander,
    to_jones,
)
from .laurent import LaurentPoly, TorkitError, parse, to_json_obj
from .qnumbers import (
    QNumberKind,
    q_number,
    verify_q_recurrence,
    verify_qp_recurrence,
)
from .report import CheckFailure, CheckReport
from .skein import (
    KnotStepPair,
    fit_ansatz,
    gen_full_sequence,
    gen_odd_sequence,
    k_to_l,
    l_to_k,
    solve_parameters,
    verify_interleave,
)

FAMILY_NAMES = tuple(FAMILIES)

_CONVERSIONS: dict[tuple[str, str], Callable[[LaurentPoly], LaurentPoly]] = {
    ("generalized-alexander", "alexander"): to_alexander,
    ("generalized-alexander", "jones"): to_jones,
    ("homfly", "generalized-alexander"): homfly_to_generalized,
}


@dataclass(frozen=True)
class OutputRecord:
    """One rendered result: which family, which index, and the polynomial."""

    family: str
    n: int
    polynomial: LaurentPoly
    representation: str = "text"

    def render(self) -> str:
        if self.representation == "json":
            return json.dumps(
                {
                    "family": self.family,
                    "n": self.n,
                    "polynomial": to_json_obj(self.polynomial),
                },
                separators=(",", ":"),
            )
        return self.polynomial.canonical_string()


def _usage_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _checked_torus_value(spec: FamilySpec, n: int) -> LaurentPoly:
    # Registry-driven so that verify's corrupt-fixture mode propagates.
    if spec.closed_form is not None:
        return spec.closed_form((n - 1) // 2)
    return gen_odd_sequence(spec.knot_step, n, spec.name).entry(n)


def _validate_odd(n: int, what: str = "--n") -> Optional[str]:
    if n < 1:
        return f"{what} must be a positive integer, got {n}"
    if n % 2 == 0:
        return (
            f"{what}={n} names the two-component torus link T({n},2); its n=2 "
            "base value is not defined by any family here, so even indices are "
            "not supported"
        )
    return None


def cmd_compute(args: argparse.Namespace) -> int:
    problem = _validate_odd(args.n)
    if problem:
        return _usage_error(problem)
    value = _checked_torus_value(FAMILIES[args.family], args.n)
    record = OutputRecord(args.family, args.n, value, args.format)
    print(record.render())
    return 0


def cmd_table(args: argparse.Namespace) -> int:
    problem = _validate_odd(args.n_max, "--n-max")
    if problem:
        return _usage_error(problem)
    spec = FAMILIES[args.family]
    if spec.closed_form is not None:
        values = {n: spec.closed_form((n - 1) // 2) for n in range(1, args.n_max + 1, 2)}
    else:
        seq = gen_odd_sequence(spec.knot_step, args.n_max, spec.name)
        values = {n: seq.entry(n) for n in range(1, args.n_max + 1, 2)}
    for n in range(1, args.n_max + 1, 2):
        record = OutputRecord(args.family, n, values[n], args.format)
        if args.format == "json":
            print(record.render())
        else:
            print(f"{n}\t{record.render()}")
    return 0


def cmd_convert(args: argparse.Namespace) -> int:
    problem = _validate_odd(args.n)
    if problem:
        return _usage_error(problem)
    key = (args.source, args.target)
    if key not in _CONVERSIONS:
        supported = ", ".join(f"{s}->{t}" for s, t in _CONVERSIONS)
        return _usage_error(
            f"no conversion from {args.source!r} to {args.target!r}; supported: {supported}"
        )
    spec = FAMILIES[args.source]
    value = _checked_torus_value(spec, args.n)
    converted = _CONVERSIONS[key](value)
    record = OutputRecord(f"{args.source}->{args.target}", args.n, converted, args.format)
    print(record.render())
    return 0


def cmd_qnum(args: argparse.Namespace) -> int:
    if args.n < 0:
        return _usage_error(f"--n must be >= 0, got {args.n}")
    kind = QNumberKind(args.kind)
    value = kind.construct(args.n)
    record = OutputRecord(f"qnum:{args.kind}", args.n, value, args.format)
    print(record.render())
    return 0


# -- the verification battery -------------------------------------------------


def _report(name: str, checked: int, failures: list[CheckFailure]) -> CheckReport:
    return CheckReport(name, checked, tuple(failures))


def _guarded(name: str, body: Callable[[], CheckReport]) -> CheckReport:
    # A check that blows up should read as a failure, not a crash.
    try:
        return body()
    except TorkitError as exc:
        return CheckReport(name, 0, (CheckFailure(0, "", "", f"{type(exc).__name__}: {exc}"),))


def _closed_vs_recurrence(spec: FamilySpec, n_max: int) -> CheckReport:
    name = f"closed-form-vs-recurrence[{spec.name}]"

    def body() -> CheckReport:
        seq = gen_odd_sequence(spec.knot_step, n_max, spec.name)
        failures = []
        for n in range(1, n_max + 1, 2):
            closed = spec.closed_form((n - 1) // 2)
            if closed != seq.entry(n):
                failures.append(CheckFailure(n, str(seq.entry(n)), str(closed)))
        return _report(name, (n_max + 1) // 2, failures)

    return _guarded(name, body)


def _substitution_check(
    name: str,
    source: FamilySpec,
    target: FamilySpec,
    mapping: Callable[[LaurentPoly], LaurentPoly],
    n_max: int,
) -> CheckReport:
    def body() -> CheckReport:
        failures = []
        for n in range(1, n_max + 1, 2):
            lhs = mapping(_checked_torus_value(source, n))
            rhs = _checked_torus_value(target, n)
            if lhs != rhs:
                failures.append(CheckFailure(n, str(lhs), str(rhs)))
        return _report(name, (n_max + 1) // 2, failures)

    return _guarded(name, body)


def _qp_reduction_check(n_max: int) -> CheckReport:
    from .qnumbers import qp_number

    name = "qp-number-reduces-to-q"

    def body() -> CheckReport:
        failures = []
        for n in range(0, n_max + 1):
            lhs = to_alexander(qp_number(n))
            rhs = q_number(n, "t")
            if lhs != rhs:
                failures.append(CheckFailure(n, str(lhs), str(rhs)))
        return _report(name, n_max + 1, failures)

    return _guarded(name, body)


_EXPECTED_ANSATZ = {
    "alexander": ("1", "1"),
    "generalized-alexander": ("1", "q*p"),
    "jones": ("1", "t^4"),
}


def _ansatz_check(spec: FamilySpec, n_max: int) -> CheckReport:
    name = f"ansatz[{spec.name}]"

    def body() -> CheckReport:
        qhat, phat = solve_parameters(spec.knot_step)
        seq = gen_odd_sequence(spec.knot_step, n_max, spec.name)
        coeffs = fit_ansatz(seq, qhat, phat)
        failures = []
        expect_a1, expect_a2 = (parse(s, spec.context) for s in _EXPECTED_ANSATZ[spec.name])
        if coeffs.a1 != expect_a1 or coeffs.a2 != expect_a2:
            failures.append(
                CheckFailure(1, f"(a1, a2) = ({coeffs.a1}, {coeffs.a2})", f"({expect_a1}, {expect_a2})")
            )
        return _report(name, (n_max + 1) // 2, failures)

    return _guarded(name, body)


def _interleave_check(spec: FamilySpec, n_max: int) -> CheckReport:
    name = f"interleave[{spec.name}]"

    def body() -> CheckReport:
        return dataclasses.replace(
            verify_interleave(spec.skein, spec.hopf, n_max, name), name=name
        )

    return _guarded(name, body)


def _roundtrip_check(spec: FamilySpec) -> CheckReport:
    name = f"k-roundtrip[{spec.name}]"

    def body() -> CheckReport:
        k = l_to_k(spec.skein)
        again = l_to_k(k_to_l(k))
        failures = []
        if again.k1 != k.k1 or again.k2 != k.k2:
            failures.append(
                CheckFailure(0, f"({again.k1}, {again.k2})", f"({k.k1}, {k.k2})")
            )
        return _report(name, 1, failures)

    return _guarded(name, body)


def _skein_form_check(spec: FamilySpec, n_max: int) -> CheckReport:
    name = f"skein-form[{spec.name}]"

    def body() -> CheckReport:
        base2 = spec.hopf if spec.hopf is not None else spec.skein.l1
        one = LaurentPoly.one(spec.context)
        seq = gen_full_sequence(spec.skein, one, base2, n_max)
        c_plus, c_minus, c_zero = spec.skein_form
        failures = []
        checked = 0
        for n in range(3, n_max + 1):
            checked += 1
            lhs = c_plus * seq[n] + c_minus * seq[n - 2]
            rhs = c_zero * seq[n - 1]
            if lhs != rhs:
                failures.append(CheckFailure(n, str(lhs), str(rhs)))
        return _report(name, checked, failures)

    return _guarded(name, body)


def run_verification(
    n_max: int, registry: Optional[dict[str, FamilySpec]] = None
) -> list[CheckReport]:
    """Every cross-check the library makes, in a fixed deterministic order."""
    reg = registry if registry is not None else FAMILIES
    reports: list[CheckReport] = []
    for spec in reg.values():
        if spec.closed_form is not None:
            reports.append(_closed_vs_recurrence(spec, n_max))
    reports.append(
        _substitution_check(
            "substitute[generalized-alexander->alexander]",
            reg["generalized-alexander"],
            reg["alexander"],
            to_alexander,
            n_max,
        )
    )
    reports.append(
        _substitution_check(
            "substitute[generalized-alexander->jones]",
            reg["generalized-alexander"],
            reg["jones"],
            to_jones,
            n_max,
        )
    )
    reports.append(
        _substitution_check(
            "substitute[homfly->generalized-alexander]",
            reg["homfly"],
            reg["generalized-alexander"],
            homfly_to_generalized,
            n_max,
        )
    )
    reports.append(verify_q_recurrence(n_max))
    reports.append(verify_qp_recurrence(n_max))
    reports.append(_qp_reduction_check(n_max))
    for family in ("alexander", "generalized-alexander", "jones"):
        reports.append(_ansatz_check(reg[family], n_max))
    for spec in reg.values():
        if spec.hopf is not None:
            reports.append(_interleave_check(spec, n_max))
    for spec in reg.values():
        reports.append(_roundtrip_check(spec))
    for spec in reg.values():
        reports.append(_skein_form_check(spec, n_max))
    return reports


def _corrupted_registry(family: str) -> dict[str, FamilySpec]:
    # Deliberately flips the sign of k2 for one family, to demonstrate that
    # verification actually catches a wrong knot-step coefficient.
    registry = dict(FAMILIES)
    spec = registry[family]
    broken = KnotStepPair(spec.knot_step.k1, -spec.knot_step.k2)
    registry[family] = dataclasses.replace(spec, knot_step=broken)
    return registry


def cmd_verify(args: argparse.Namespace) -> int:
    if args.n_max < 3 or args.n_max % 2 == 0:
        return _usage_error(f"--n-max must be an odd integer >= 3, got {args.n_max}")
    registry = _corrupted_registry(args.corrupt_family) if args.corrupt_family else None
    reports = run_verification(args.n_max, registry)
    for report in reports:
        print(report.format_line())
    failed = [r for r in reports if not r.passed]
    print(f"{len(reports) - len(failed)}/{len(reports)} checks passed")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="torkit",
        description="Exact polynomial invariants of T(n,2) torus knots from q- and (q,p)-numbers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("text", "json"), default="text")

    p_compute = sub.add_parser("compute", help="one invariant value")
    p_compute.add_argument("--family", required=True, choices=FAMILY_NAMES)
    p_compute.add_argument("--n", type=int, required=True, help="odd torus index")
    add_format(p_compute)
    p_compute.set_defaults(func=cmd_compute)

    p_table = sub.add_parser("table", help="all odd values up to --n-max")
    p_table.add_argument("--family", required=True, choices=FAMILY_NAMES)
    p_table.add_argument("--n-max", type=int, required=True, dest="n_max")
    add_format(p_table)
    p_table.set_defaults(func=cmd_table)

    p_verify = sub.add_parser("verify", help="run every identity cross-check")
    p_verify.add_argument("--n-max", type=int, default=21, dest="n_max")
    p_verify.add_argument(
        "--corrupt-family",
        choices=FAMILY_NAMES,
        default=None,
        help="flip the sign of this family's k2 first (exercises failure reporting)",
    )
    p_verify.set_defaults(func=cmd_verify)

    p_convert = sub.add_parser("convert", help="map one family's value into another")
    p_convert.add_argument("--from", required=True, dest="source", choices=FAMILY_NAMES)
    p_convert.add_argument("--to", required=True, dest="target", choices=FAMILY_NAMES)
    p_convert.add_argument("--n", type=int, required=True)
    add_format(p_convert)
    p_convert.set_defaults(func=cmd_convert)

    p_qnum = sub.add_parser("qnum", help="print a q-, (q,p)-, or (t^3,t)-number")
    p_qnum.add_argument("--kind", choices=[k.value for k in QNumberKind], default="q")
    p_qnum.add_argument("--n", type=int, required=True)
    add_format(p_qnum)
    p_qnum.set_defaults(func=cmd_qnum)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except EvenIndexUnsupported as exc:
        return _usage_error(str(exc))
    except TorkitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

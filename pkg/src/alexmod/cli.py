"""Command-line front end.

Exit codes: 0 success, 2 input error, 3 mathematical precondition
violated, 4 arrangement hypotheses not met. ``verify`` exits 1 when a
property fails.
"""
from __future__ import annotations

import argparse
import sys

from . import __version__
from .arrangements import arrangement_report, build_os_algebra
from .complexes import fox_complex, parse_point
from .errors import AlexmodError, ParseError
from .io import (
    arrangement_from_json,
    cdga_from_json,
    complex_from_json,
    detect_kind,
    eta_from_expression,
    guard_size,
    presentation_from_json,
    read_json,
)
from .report import (
    arrangement_report_dict,
    canonical_json,
    complex_report,
    envelope,
    render_text,
    specialization_report,
)
from .thickening import AUTO, eigen1_auto, eigen1_at, thicken, thickened_cohomology
from .verify import DEFAULT_SEED, SUITES, run_suite


def _load_complex_like(path):
    data, digest = read_json(path)
    kind = detect_kind(data)
    if kind == "complex":
        return complex_from_json(data), digest, None
    if kind == "presentation":
        # only H_0 and H_1 of a presentation complex are Alexander modules
        return fox_complex(presentation_from_json(data)), digest, [0, 1]
    raise ParseError(f"expected a complex or presentation file, found {kind}", where=str(path))


def cmd_analyze(args) -> dict:
    data, digest = read_json(args.file)
    C = complex_from_json(data)
    return envelope("analyze", digest, complex_report(C, args.max_degree))


def cmd_fox(args) -> dict:
    data, digest = read_json(args.file)
    P = presentation_from_json(data)
    C = fox_complex(P)
    body = complex_report(C, max_degree=1)
    body["presentation"] = {"generators": len(P.generators), "relators": len(P.relators)}
    return envelope("fox", digest, body)


def cmd_arrangement(args) -> dict:
    data, digest = read_json(args.file)
    A = arrangement_from_json(data)
    OS = build_os_algebra(A)
    guard_size(OS.cdga.dim, "Orlik-Solomon algebra")
    rep = arrangement_report(A, args.max_j, OS)
    return envelope("arrangement", digest, arrangement_report_dict(rep))


def _parse_m(text: str):
    if text.upper() == AUTO:
        return AUTO
    try:
        m = int(text)
    except ValueError:
        raise ParseError(f"--m must be AUTO or a positive integer, got {text!r}") from None
    if m < 1:
        raise ParseError(f"--m must be positive, got {m}")
    return m


def cmd_thicken(args) -> dict:
    data, digest = read_json(args.file)
    K = cdga_from_json(data)
    K.validate()
    eta = eta_from_expression(K, args.eta)
    m_arg = _parse_m(args.m)
    rows = []
    for j in range(K.top_degree + 1):
        if m_arg == AUTO:
            value, m = eigen1_auto(K, eta, j)
        else:
            m = m_arg
            value = eigen1_at(K, eta, j, m)
        guard_size(2 * m * K.dim, "thickened complex")
        coh = thickened_cohomology(thicken(K, eta, m, validate=False), j)
        rows.append({
            "degree": j,
            "m": m,
            "qdim": coh.qdim,
            "s_jordan_type": list(coh.jordan_type),
            "eigen1": value,
            "eigen1_via_log": eigen1_at(K, eta, j, m, use_log=True),
        })
    return envelope("thicken", digest, {"eta": args.eta, "degrees": rows, "citations": []})


def cmd_specialize(args) -> dict:
    C, digest, degrees = _load_complex_like(args.file)
    point = parse_point(args.lam)
    if args.degree is not None:
        degrees = [args.degree]
    return envelope("specialize", digest, specialization_report(C, point, degrees))


def cmd_verify(args) -> dict:
    seed = DEFAULT_SEED if args.seed is None else args.seed
    checks = run_suite(args.suite, seed)
    return envelope("verify", None, {
        "suite": args.suite,
        "seed": seed,
        "checks": [c.as_dict() for c in checks],
        "passed": all(c.passed for c in checks),
    })


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="print the report as canonical JSON")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS,
                        help="seed for randomized properties")

    parser = argparse.ArgumentParser(
        prog="alexmod",
        description="Exact Alexander modules, monodromy eigenspaces and thickened complexes.",
    )
    parser.add_argument("--version", action="version", version=f"alexmod {__version__}")
    parser.add_argument("--json", action="store_true", help="print the report as canonical JSON")
    parser.add_argument("--seed", type=int, default=None, help="seed for randomized properties")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="module structure of a free R-complex")
    p.add_argument("file")
    p.add_argument("--max-degree", type=int, default=None)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("fox", parents=[common], help="H_0 and H_1 from a group presentation")
    p.add_argument("file")
    p.set_defaults(func=cmd_fox)

    p = sub.add_parser("arrangement", parents=[common], help="eigenvalue-1 report for an arrangement")
    p.add_argument("file")
    p.add_argument("--max-j", type=int, default=None)
    p.set_defaults(func=cmd_arrangement)

    p = sub.add_parser("thicken", parents=[common], help="thickened complex of a CDGA")
    p.add_argument("file")
    p.add_argument("--eta", required=True, help="degree-1 class, e.g. 'e1 + e2 + 2*e3'")
    p.add_argument("--m", default=AUTO, help="AUTO or a positive integer")
    p.set_defaults(func=cmd_thicken)

    p = sub.add_parser("specialize", parents=[common], help="homology at t = lambda")
    p.add_argument("file", help="complex or presentation file")
    p.add_argument("--lambda", dest="lam", required=True,
                   help="root-of-unity:d | rational:p/q | generic")
    p.add_argument("--degree", type=int, default=None)
    p.set_defaults(func=cmd_specialize)

    p = sub.add_parser("verify", parents=[common], help="run a property suite")
    p.add_argument("--suite", required=True, choices=sorted(SUITES))
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = args.func(args)
    except AlexmodError as exc:
        print(f"alexmod: error: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"alexmod: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(canonical_json(report) if args.json else render_text(report))
    if args.command == "verify" and not report["passed"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface.

Exit codes: 0 success / witness found / certificate valid; 1 negative result
or absent witness; 2 invalid input; 3 search budget exceeded; 4 certificate
invalid. The APLIFT_BUDGET environment variable overrides the default search
budget for the coloring checks.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import certificates as certs
from ._version import __version__
from .dsl import DslError, parse_dsl
from .fileformats import read_chain, read_family, read_family2d, read_intset
from .jsets import jset_witness, transfer_witness
from .largeness import (
    BUDGET_ENV_VAR,
    find_pws_witness,
    longest_member_run,
    longest_miss_run,
    min_r_for_L,
    vdw_check,
)
from .lift import Box2D, ap_search, find_pws_witness_2d, induced_box, lift
from .sets import IntSet, Window, evaluate
from .towers import (
    KIND_C_SET,
    KIND_QUASI_CENTRAL,
    ap_translate_level_search,
    check_cset,
    check_quasicentral,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_BAD_INPUT = 2
EXIT_BUDGET = 3
EXIT_BAD_CERT = 4


def _parse_window(text: str) -> Window:
    try:
        lo, hi = text.split(":")
        return Window(int(lo), int(hi))
    except (ValueError, TypeError):
        raise ValueError(f"window must look like LO:HI, got {text!r}")


def _parse_box(text: str) -> Box2D:
    try:
        a_part, d_part = text.split("x")
        a_lo, a_hi = (int(v) for v in a_part.split(":"))
        d_lo, d_hi = (int(v) for v in d_part.split(":"))
        return Box2D(a_lo, a_hi, d_lo, d_hi)
    except (ValueError, TypeError):
        raise ValueError(f"box must look like ALO:AHIxDLO:DHI, got {text!r}")


def _load_set(args) -> tuple[IntSet, dict]:
    """Build the working set and its canonical certificate inputs."""
    if getattr(args, "set_file", None):
        text = Path(args.set_file).read_text()
        A = read_intset(text)
        return A, certs.inputs_for_set_text(text)
    if not getattr(args, "set", None):
        raise ValueError("need --set EXPR or --set-file PATH")
    if not getattr(args, "window", None):
        raise ValueError("--set needs --window LO:HI")
    window = _parse_window(args.window)
    program = parse_dsl(args.set)
    return evaluate(program.expr, window), certs.inputs_for_expr(program.expr, window)


def _emit(args, cert: dict) -> None:
    if getattr(args, "out", None):
        Path(args.out).write_text(certs.dumps_certificate(cert))
        print(f"certificate written to {args.out}")


def _add_set_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--set", help="set expression, e.g. 'union(multiples(3), ap(5, 7))'")
    p.add_argument("--window", help="evaluation window LO:HI")
    p.add_argument("--set-file", help="read the set from a set file instead")


def _cmd_analyze(args) -> int:
    A, set_inputs = _load_set(args)
    w = A.window
    print(f"window {w.lo}:{w.hi} width {w.width}")
    print(f"members {len(A)} density {A.density():.6f}")
    print(f"longest member run {longest_member_run(A)}")
    print(f"longest miss run {longest_miss_run(A)}")
    if len(A):
        print(f"least r syndetic on the full window: {longest_miss_run(A) + 1}")
    else:
        print("least r syndetic on the full window: none (empty set)")
    if args.L is not None and args.r is None:
        least = min_r_for_L(A, args.L)
        print(f"least r with a length-{args.L} witness: {least if least else 'none'}")
    if args.r is not None:
        if args.L is None:
            raise ValueError("--r needs --L")
        wit = find_pws_witness(A, args.r, args.L)
        if wit is None:
            print(f"no length-{args.L} interval is {args.r}-syndetic")
            return EXIT_NEGATIVE
        print(f"witness interval [{wit.interval[0]}, {wit.interval[1]}] r={args.r}")
        _emit(args, certs.pws_certificate(set_inputs, args.r, args.L, wit.start))
    return EXIT_OK


def _cmd_ap(args) -> int:
    A, set_inputs = _load_set(args)
    wit = ap_search(A, args.len)
    if wit is None:
        print(f"no progression with {args.len + 1} terms")
        return EXIT_NEGATIVE
    print(f"witness a={wit.a} d={wit.d} l={wit.l}")
    _emit(args, certs.ap_certificate(set_inputs, wit))
    return EXIT_OK


def _cmd_lift(args) -> int:
    A, set_inputs = _load_set(args)
    box = _parse_box(args.box) if args.box else induced_box(A.window, args.len)
    B = lift(A, args.len, box)
    L1 = args.L1 if args.L1 is not None else box.a_width
    L2 = args.L2 if args.L2 is not None else box.d_width
    print(
        f"lift depth {args.len} box {box.a_lo}:{box.a_hi}x{box.d_lo}:{box.d_hi}"
        f" pairs {len(B)}"
    )
    sub = find_pws_witness_2d(B, args.r1, args.r2, L1, L2)
    if sub is None:
        print(f"no {L1}x{L2} sub-box is ({args.r1}, {args.r2})-syndetic")
        return EXIT_NEGATIVE
    print(
        f"witness sub-box {sub.a_lo}:{sub.a_hi}x{sub.d_lo}:{sub.d_hi}"
        f" blocks ({args.r1}, {args.r2})"
    )
    _emit(
        args,
        certs.pws2d_certificate(set_inputs, args.len, box, args.r1, args.r2, L1, L2, sub),
    )
    return EXIT_OK


def _cmd_jset(args) -> int:
    A, set_inputs = _load_set(args)
    F = read_family(Path(args.family).read_text())
    wit = jset_witness(A, F, args.a_max)
    if wit is None:
        print(f"no witness with base a <= {args.a_max}")
        return EXIT_NEGATIVE
    print(f"witness a={wit.a} H={{{', '.join(str(t) for t in wit.H)}}}")
    _emit(args, certs.jset_certificate(set_inputs, F, args.a_max, wit))
    return EXIT_OK


def _cmd_transfer(args) -> int:
    A, set_inputs = _load_set(args)
    F2D = read_family2d(Path(args.family2d).read_text())
    wit = transfer_witness(A, F2D, args.b, args.len, args.a_max)
    if wit is None:
        print(f"no witness with base a <= {args.a_max}")
        return EXIT_NEGATIVE
    print(
        f"witness base ({wit.a1}, {wit.a2})"
        f" H={{{', '.join(str(t) for t in wit.H)}}} depth {args.len}"
    )
    _emit(
        args,
        certs.jset2d_certificate(set_inputs, F2D, args.b, args.len, args.a_max, wit),
    )
    return EXIT_OK


def _cmd_tower(args) -> int:
    chain = read_chain(Path(args.chain).read_text())
    print(f"chain kind {chain.kind} depth {chain.depth}"
          f" window {chain.window.lo}:{chain.window.hi}")
    families = [read_family(Path(p).read_text()) for p in args.family or []]
    if chain.kind == KIND_QUASI_CENTRAL:
        if args.r is None or args.L is None:
            raise ValueError("quasi-central chains need --r and --L")
        report = check_quasicentral(chain, args.r, args.L, args.x_max)
    else:
        report = check_cset(chain, families, args.a_max, args.x_max)
    failed = [p for p in report.probes if p.found_level is None]
    print(f"translate probes {len(report.probes)} failed {len(failed)}")
    for p in failed[:10]:
        print(f"  level {p.level} x={p.x}: no absorbing level")
    if report.pws_witnesses is not None:
        for i, wit in enumerate(report.pws_witnesses, start=1):
            if wit is None:
                print(f"  level {i}: no (r={args.r}, L={args.L}) witness")
            else:
                print(f"  level {i}: witness interval [{wit.interval[0]}, {wit.interval[1]}]")
    if report.jset_witnesses is not None:
        for i, per_level in enumerate(report.jset_witnesses, start=1):
            for j, wit in enumerate(per_level):
                if wit is None:
                    print(f"  level {i} family {j + 1}: no witness with a <= {args.a_max}")
                else:
                    print(
                        f"  level {i} family {j + 1}: a={wit.a}"
                        f" H={{{', '.join(str(t) for t in wit.H)}}}"
                    )
    if args.probe:
        n, a, b = args.probe
        found = ap_translate_level_search(chain, n, a, b, args.len)
        if found is None:
            print(f"probe ({a}, {b}) at level {n}: chain depth insufficient")
        else:
            print(f"probe ({a}, {b}) at level {n}: absorbed at level {found}")
    if not report.passed:
        print("verdict: FAIL")
        return EXIT_NEGATIVE
    print("verdict: PASS")
    if report.pws_witnesses is not None:
        _emit(args, certs.chain_certificate(chain, report, r=args.r, L=args.L))
    else:
        _emit(
            args,
            certs.chain_certificate(chain, report, a_max=args.a_max, families=families),
        )
    return EXIT_OK


def _cmd_vdw(args) -> int:
    res = vdw_check(args.n, args.colors, args.len, budget=args.budget)
    print(f"verdict {res.verdict} strategy {res.strategy} explored {res.explored}")
    if res.verdict == "unknown":
        print(f"budget {res.budget} exhausted; raise it or set {BUDGET_ENV_VAR}")
        return EXIT_BUDGET
    if res.coloring is not None:
        print("coloring " + "".join(str(c) for c in res.coloring))
    _emit(args, certs.vdw_certificate(args.n, args.colors, args.len, res))
    return EXIT_OK if res.verdict == "true" else EXIT_NEGATIVE


def _cmd_verify(args) -> int:
    try:
        cert = json.loads(Path(args.certificate).read_text())
    except json.JSONDecodeError as e:
        print(f"not a certificate: {e}")
        return EXIT_BAD_CERT
    try:
        ok = certs.verify_certificate(cert)
    except certs.CertificateError as e:
        print(f"invalid: {e}")
        return EXIT_BAD_CERT
    if not ok:
        print("invalid: witness does not verify against the inputs")
        return EXIT_BAD_CERT
    print(f"valid {cert['kind']} certificate")
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="aplift",
        description="largeness detectors and progression-lift witnesses on integer windows",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="largeness report for a set")
    _add_set_flags(p)
    p.add_argument("--r", type=int, help="block length for a witness search")
    p.add_argument("--L", type=int, help="interval length for a witness search")
    p.add_argument("--out", help="write a pws certificate here")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("ap", help="search a progression inside the set")
    _add_set_flags(p)
    p.add_argument("--len", type=int, required=True, help="steps l (l+1 terms)")
    p.add_argument("--out", help="write an ap certificate here")
    p.set_defaults(func=_cmd_ap)

    p = sub.add_parser("lift", help="lift the set to pairs and search a syndetic sub-box")
    _add_set_flags(p)
    p.add_argument("--len", type=int, required=True, help="steps l (l+1 terms)")
    p.add_argument("--box", help="pair box ALO:AHIxDLO:DHI (default: clip-free box)")
    p.add_argument("--r1", type=int, required=True)
    p.add_argument("--r2", type=int, required=True)
    p.add_argument("--L1", type=int, help="sub-box width (default: full box)")
    p.add_argument("--L2", type=int, help="sub-box height (default: full box)")
    p.add_argument("--out", help="write a pws2d certificate here")
    p.set_defaults(func=_cmd_lift)

    p = sub.add_parser("jset", help="search a simultaneous sum witness")
    _add_set_flags(p)
    p.add_argument("--family", required=True, help="family file")
    p.add_argument("--a-max", type=int, default=64, dest="a_max")
    p.add_argument("--out", help="write a jset certificate here")
    p.set_defaults(func=_cmd_jset)

    p = sub.add_parser("transfer", help="transfer a derived-family witness to pairs")
    _add_set_flags(p)
    p.add_argument("--family2d", required=True, help="family2d file")
    p.add_argument("--b", type=int, default=1, help="step offset (default 1)")
    p.add_argument("--len", type=int, required=True, help="steps l (l+1 terms)")
    p.add_argument("--a-max", type=int, default=64, dest="a_max")
    p.add_argument("--out", help="write a jset2d certificate here")
    p.set_defaults(func=_cmd_transfer)

    p = sub.add_parser("tower", help="check a decreasing chain")
    p.add_argument("--chain", required=True, help="chain file")
    p.add_argument("--x-max", type=int, default=32, dest="x_max")
    p.add_argument("--r", type=int, help="block length (quasi-central)")
    p.add_argument("--L", type=int, help="interval length (quasi-central)")
    p.add_argument("--family", action="append", help="family file (c-set, repeatable)")
    p.add_argument("--a-max", type=int, default=64, dest="a_max")
    p.add_argument(
        "--probe",
        nargs=3,
        type=int,
        metavar=("N", "A", "B"),
        help="also probe the pair translate at level N with progression (A, B)",
    )
    p.add_argument("--len", type=int, default=2, help="probe depth l (default 2)")
    p.add_argument("--out", help="write a chain certificate here")
    p.set_defaults(func=_cmd_tower)

    p = sub.add_parser("vdw", help="coloring check for monochromatic progressions")
    p.add_argument("--n", type=int, required=True, help="window length")
    p.add_argument("--colors", type=int, required=True)
    p.add_argument("--len", type=int, required=True, help="terms per progression")
    p.add_argument("--budget", type=int, help="search budget override")
    p.add_argument("--out", help="write a vdw certificate here")
    p.set_defaults(func=_cmd_vdw)

    p = sub.add_parser("verify", help="re-check a certificate")
    p.add_argument("certificate", help="certificate file")
    p.set_defaults(func=_cmd_verify)

    return parser


def run_command(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except DslError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except certs.CertificateError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BAD_CERT
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BAD_INPUT


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))

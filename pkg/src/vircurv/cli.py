"""Command line front end.

Exit codes: 0 success, 1 an identity failed, 2 usage or parameter error.
Global options may appear before or after the subcommand.
"""

from __future__ import annotations

import argparse
import os
import sys

from .complex_geometry import (
    hs_partial_sums,
    metric_defect_tilde,
    nabla_tilde,
    nijenhuis,
    q_tensor,
    torsion_tilde,
)
from .connection import SignConvention, metric_defect, nabla, torsion_nabla, u_tensor
from .curvature import ComplexField, curvature, ricci_report
from .errors import ParseError, VircurvError
from .exact import parse_scalar
from .parser import parse_field
from .report import FORMATS, Result, emit
from .trig import bracket
from .verify import SUITES, run_verify
from .virasoro import PRESETS, CentralParams, cocycle, inner_B

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
DEFAULT_MAX_MODE = 10


class UsageError(Exception):
    pass


def _global_options(suppress: bool) -> argparse.ArgumentParser:
    # parsed both before and after the subcommand; SUPPRESS keeps the
    # subparser from clobbering values given up front
    d = argparse.SUPPRESS if suppress else None
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("global options")
    g.add_argument("--c", metavar="P/Q", default=d, help="central charge (env VIRCURV_C)")
    g.add_argument("--h", metavar="P/Q", default=d, help="weight (env VIRCURV_H)")
    g.add_argument("--preset", choices=sorted(PRESETS), default=d,
                   help="named (c, h); --c/--h override it")
    g.add_argument("--convention", choices=[c.value for c in SignConvention], default=d,
                   help="sign convention for U (default paper)")
    g.add_argument("--format", choices=FORMATS, default=d, help="output format (default text)")
    g.add_argument("--max-mode", type=int, metavar="N", default=d,
                   help=f"sweep bound for verify (env VIRCURV_MAXMODE, default {DEFAULT_MAX_MODE})")
    g.add_argument("--timing", action="store_true", default=d,
                   help="include elapsed time in verify output")
    return p


def _cutoffs(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vircurv",
        description="Exact connection and curvature calculus on Diff(S^1)/S^1.",
        parents=[_global_options(False)],
        epilog="Field arguments use the grammar 'cos(2t) - 1/3*sin(t) + 5'. "
               "Put '--' before a field that starts with '-'.",
    )
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True
    common = [_global_options(True)]

    def two_fields(name, help_, extra=None):
        sp = sub.add_parser(name, help=help_, parents=common)
        sp.add_argument("x", help="first field")
        sp.add_argument("y", help="second field")
        if extra:
            extra(sp)
        return sp

    two_fields("bracket", "vector-field bracket [x, y]")
    two_fields("cocycle", "cocycle omega(x, y)")
    two_fields("inner", "metric B(x, y)")
    two_fields("u-tensor", "symmetric tensor U(x, y)",
               lambda sp: sp.add_argument("--method", choices=("closed", "oracle"), default="closed"))
    two_fields("nabla", "covariant derivative nabla_x y")
    two_fields("nabla-tilde", "modified connection nabla_tilde_x y")
    two_fields("nijenhuis", "Nijenhuis tensor N(x, y)")
    two_fields("q-tensor", "tensor Q(x, y)")
    two_fields("torsion", "torsion of nabla or nabla_tilde",
               lambda sp: sp.add_argument("--connection", choices=("nabla", "tilde"), default="nabla"))

    sp = sub.add_parser("metric-defect", help="B(D_x y, z) + B(y, D_x z)", parents=common)
    sp.add_argument("x")
    sp.add_argument("y")
    sp.add_argument("z")
    sp.add_argument("--connection", choices=("nabla", "tilde"), default="nabla")

    sp = sub.add_parser("hs-sum", help="Hilbert-Schmidt partial sum for nabla_tilde . f_n", parents=common)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--max", type=int, required=True, metavar="M")
    sp.add_argument("--all", action="store_true", help="list S_1..S_M instead of S_M")

    sp = sub.add_parser("curvature", help="R_{L_x, L_y} L_z for signed indices", parents=common)
    for k in ("x", "y", "z"):
        sp.add_argument(f"--{k}", type=int, required=True, metavar="IDX")

    sp = sub.add_parser("ricci", help="regularized Ricci value with cutoff table", parents=common)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--cutoffs", type=_cutoffs, default=[], metavar="M1,M2,...")

    sp = sub.add_parser("verify", help="run identity sweeps", parents=common)
    sp.add_argument("suite", nargs="?", default="all", choices=SUITES + ("all",))
    return parser


def resolve_params(args, environ=None) -> CentralParams:
    """Flags beat environment variables; both beat the preset default (cubic)."""
    env = os.environ if environ is None else environ
    preset = getattr(args, "preset", None)
    base = PRESETS[preset or "cubic"]
    c_text = getattr(args, "c", None) or (None if preset else env.get("VIRCURV_C"))
    h_text = getattr(args, "h", None) or (None if preset else env.get("VIRCURV_H"))
    c = parse_scalar(c_text.strip()) if c_text else base.c
    h = parse_scalar(h_text.strip()) if h_text else base.h
    return CentralParams(c, h)


def resolve_max_mode(args, environ=None) -> int:
    env = os.environ if environ is None else environ
    mm = getattr(args, "max_mode", None)
    if mm is None and env.get("VIRCURV_MAXMODE"):
        try:
            mm = int(env["VIRCURV_MAXMODE"])
        except ValueError:
            raise UsageError(f"VIRCURV_MAXMODE must be an integer, got {env['VIRCURV_MAXMODE']!r}") from None
    if mm is None:
        mm = DEFAULT_MAX_MODE
    if mm < 1:
        raise UsageError(f"max-mode must be >= 1, got {mm}")
    return mm


def _field(text: str, role: str):
    try:
        return parse_field(text)
    except ParseError as exc:
        raise ParseError(f"{role}: {exc.message}", exc.position, exc.text) from None


def run(args, environ=None) -> tuple[str, int]:
    params = resolve_params(args, environ)
    conv = SignConvention.coerce(getattr(args, "convention", None) or "paper")
    fmt = getattr(args, "format", None) or "text"
    timing = bool(getattr(args, "timing", False))
    cmd = args.command
    pd = params.describe()

    if cmd == "verify":
        rep = run_verify(args.suite, params, resolve_max_mode(args, environ))
        return emit(rep, fmt, timing), EXIT_OK if rep.passed else EXIT_FAIL

    if cmd == "ricci":
        rep = ricci_report(params, args.n, args.cutoffs)
        return emit(rep, fmt, params=pd), EXIT_OK if rep.agrees else EXIT_FAIL

    if cmd == "curvature":
        L = ComplexField.basis
        val = curvature(params, L(args.x), L(args.y), L(args.z))
        res = Result("curvature", pd, {"x": args.x, "y": args.y, "z": args.z}, val)
        return emit(res, fmt), EXIT_OK

    if cmd == "hs-sum":
        sums = hs_partial_sums(params, args.n, args.max)
        val = sums if args.all else sums[-1]
        res = Result("hs-sum", pd, {"n": args.n, "M": args.max}, val)
        return emit(res, fmt), EXIT_OK

    texts = {"x": args.x, "y": args.y}
    if cmd == "metric-defect":
        texts["z"] = args.z
    f = {k: _field(v, k) for k, v in texts.items()}
    x, y = f["x"], f["y"]
    if cmd == "bracket":
        val = bracket(x, y)
    elif cmd == "cocycle":
        val = cocycle(params, x, y)
    elif cmd == "inner":
        val = inner_B(params, x, y)
    elif cmd == "u-tensor":
        val = u_tensor(params, x, y, conv, method=args.method)
    elif cmd == "nabla":
        val = nabla(params, x, y, conv)
    elif cmd == "nabla-tilde":
        val = nabla_tilde(params, x, y, conv)
    elif cmd == "nijenhuis":
        val = nijenhuis(x, y)
    elif cmd == "q-tensor":
        val = q_tensor(params, x, y, conv)
    elif cmd == "torsion":
        val = (torsion_tilde if args.connection == "tilde" else torsion_nabla)(params, x, y, conv)
    elif cmd == "metric-defect":
        fn = metric_defect_tilde if args.connection == "tilde" else metric_defect
        val = fn(params, x, y, f["z"], conv)
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown command {cmd}")
    inputs = dict(texts)
    if cmd not in ("bracket", "nijenhuis"):
        inputs["convention"] = conv.value
    return emit(Result(cmd, pd, inputs, val), fmt), EXIT_OK


def _caret(exc: ParseError) -> str:
    if not exc.text or "\n" in exc.text:
        return ""
    return f"  {exc.text}\n  {' ' * exc.position}^\n"


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        out, code = run(args)
    except ParseError as exc:
        sys.stderr.write(f"vircurv: error: {exc}\n{_caret(exc)}")
        return EXIT_USAGE
    except (VircurvError, UsageError) as exc:
        sys.stderr.write(f"vircurv: error: {exc}\n")
        return EXIT_USAGE
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())

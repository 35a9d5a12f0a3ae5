"""Command-line front end: ``planecolour <command> ...``."""

from __future__ import annotations

import argparse
import math
import sys
from typing import Sequence

from ..chromatic import ChromaticCapExceeded, optimal_colouring
from ..explorer import (
    CertificateInvalid,
    OracleNotProper,
    StepCapExceeded,
    ball_lines,
    find_trichromatic_ball,
    five_colour_certificate,
    five_lines,
    human_report,
    six_colour_certificate,
    six_lines,
    structured_block,
    validate_ball_certificate,
)
from ..geometry import DistanceInterval, Point, Tolerance
from ..lattice import ComponentCapExceeded, minimize_separating_cycle
from ..oracle import ColouringOracle, ConstantOracle, OracleError, StripeOracle
from ..tiling import (
    CANONICAL,
    DEFAULT_REGION,
    LITERAL_SHIFT,
    TilingOracle,
    is_proper_for,
    min_same_colour_separation,
    violation_search,
)
from ..witness import (
    BoundarySpec,
    WitnessError,
    build_boundary_witness,
    build_wheel,
    moser_spindle,
    solve_odd_rotation,
)
from . import graphfile, svg
from .protocol import SubprocessOracle, serve

TILINGS = {"canonical": CANONICAL, "literal": LITERAL_SHIFT}
BUILTINS = ("tiling7", "tiling-literal", "stripes", "constant")
DOMAIN_ERRORS = (ValueError, OracleError, OracleNotProper, CertificateInvalid, StepCapExceeded,
                 ComponentCapExceeded, ChromaticCapExceeded, WitnessError, OSError)


def builtin_oracle(name: str) -> ColouringOracle:
    if name == "tiling7":
        return TilingOracle(CANONICAL)
    if name == "tiling-literal":
        return TilingOracle(LITERAL_SHIFT)
    if name == "stripes":
        return StripeOracle()
    if name == "constant":
        return ConstantOracle()
    raise ValueError(f"unknown builtin oracle {name!r}")


def _num(x: float) -> str:
    return "%.17g" % x


def _write(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _oracle_from(args) -> ColouringOracle:
    if args.oracle_cmd:
        return SubprocessOracle(args.oracle_cmd, timeout=args.timeout)
    return builtin_oracle(args.builtin)


def _emit_graph(args, g, header: str) -> None:
    _write(args.out, graphfile.emit(g, header))
    if args.svg:
        _write(args.svg, svg.graph_svg(g))
    print(f"wrote {g.n} vertices and {len(g.edges)} edges to {args.out}")


# -- commands -----------------------------------------------------------------

def cmd_tiling_verify(args) -> int:
    spec = TILINGS[args.spec]
    if not args.epsilon >= 0:
        raise ValueError("epsilon must be nonnegative")
    if args.samples < 0:
        raise ValueError("samples must be nonnegative")
    iv = DistanceInterval.epsilon(args.epsilon) if args.epsilon > 0 else DistanceInterval.unit()
    sep = min_same_colour_separation(spec)
    sep_ok = is_proper_for(spec, iv)
    print(f"tiling: side {_num(spec.side)}, row shift {_num(spec.row_shift)} "
          f"(sign {spec.shift_sign:+d}), {spec.colours} colours")
    print(f"min same-colour separation: {_num(sep)}")
    print(f"required for [{_num(iv.lo)}, {_num(iv.hi)}]: {_num(iv.hi)} ({'ok' if sep_ok else 'fails'})")
    hit = None
    if args.samples:
        hit = violation_search(TilingOracle(spec), iv, DEFAULT_REGION, args.samples, args.seed)
    where = f"{args.samples} samples, seed {args.seed}"
    if hit is None:
        print(f"violation search ({where}): none found")
    else:
        print(f"violation search ({where}): ({_num(hit.p.x)}, {_num(hit.p.y)}) and "
              f"({_num(hit.q.x)}, {_num(hit.q.y)}) share colour {hit.colour + 1} "
              f"at distance {_num(hit.dist)}")
    proper = sep_ok and hit is None
    print("proper" if proper else "not proper")
    return 0 if proper else 1


def cmd_tiling_svg(args) -> int:
    _write(args.out, svg.tiling_svg(TILINGS[args.spec], args.window, args.scale))
    print(f"wrote {args.out}")
    return 0


def cmd_witness_spindle(args) -> int:
    _emit_graph(args, moser_spindle(), "Moser spindle, unit edges")
    return 0


def cmd_witness_wheel(args) -> int:
    sol = solve_odd_rotation(args.mode, args.epsilon)
    centre = Point(*args.center)
    if args.mode == "theorem1":
        spoke = 1 + args.epsilon / 2
        g = build_wheel(centre, spoke, sol, args.base_angle, DistanceInterval.epsilon(args.epsilon))
    else:
        spoke = sol.delta
        g = build_wheel(centre, spoke, sol, args.base_angle, check=False)
    header = (f"odd wheel ({args.mode}), epsilon {_num(args.epsilon)}\n"
              f"rotation 2*pi*{sol.m}/{sol.k}, spoke {_num(spoke)}, delta {_num(sol.delta)}")
    _emit_graph(args, g, header)
    return 0


def cmd_witness_boundary(args) -> int:
    spec = BoundarySpec(Point(*args.center), args.line_angle, args.colour_a, args.colour_b,
                        args.epsilon)
    g = build_boundary_witness(spec)
    sol = g.meta["rotation"]
    a_ix, b_ix = g.meta["pseudo"]
    header = (f"boundary witness, epsilon {_num(args.epsilon)}, line angle {_num(args.line_angle)}\n"
              f"rotation 2*pi*{sol.m}/{sol.k}, delta {_num(sol.delta)}\n"
              f"pseudo-vertices {a_ix} (left region) and {b_ix} (right region)")
    _emit_graph(args, g, header)
    return 0


def cmd_chi(args) -> int:
    with open(args.file, encoding="utf-8") as fh:
        g, ids = graphfile.parse(fh.read())
    chi, colouring = optimal_colouring(g.to_abstract(), args.cap)
    print(f"chromatic number: {chi}")
    print("colouring:")
    for vid, c in zip(ids, colouring):
        print(f"{vid} {c}")
    return 0


def _print_cert(kind: str, rows, fmt: str) -> None:
    if fmt in ("report", "both"):
        sys.stdout.write(human_report(kind, rows))
    if fmt == "both":
        sys.stdout.write("\n")
    if fmt in ("kv", "both"):
        sys.stdout.write(structured_block(rows))


def cmd_ball_find(args) -> int:
    oracle = _oracle_from(args)
    try:
        cert = find_trichromatic_ball(oracle, args.epsilon, tuple(args.start), args.step_cap)
        validate_ball_certificate(cert, oracle)
    finally:
        if isinstance(oracle, SubprocessOracle):
            oracle.close()
    _print_cert("three-colour ball", ball_lines(cert), args.format)
    return 0


def cmd_certify_six(args) -> int:
    oracle = _oracle_from(args)
    try:
        cert = six_colour_certificate(oracle, args.epsilon, tuple(args.start), args.base_angle,
                                      args.step_cap)
    finally:
        if isinstance(oracle, SubprocessOracle):
            oracle.close()
    _print_cert("six-colour", six_lines(cert), args.format)
    return 0


def cmd_certify_five(args) -> int:
    spec = BoundarySpec(Point(*args.center), args.line_angle, args.colour_a, args.colour_b,
                        args.epsilon)
    cert = five_colour_certificate(spec, Tolerance())
    _print_cert("five-colour", five_lines(cert), args.format)
    return 0


def cmd_lattice_cycle(args) -> int:
    with open(args.file, encoding="utf-8") as fh:
        m = graphfile.parse_coords(fh.read())
    if not m:
        raise ValueError("vertex set is empty")
    text = graphfile.emit_cycle(minimize_separating_cycle(m))
    if args.out:
        _write(args.out, text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_oracle_serve(args) -> int:
    serve(builtin_oracle(args.builtin), sys.stdin.fileno(), sys.stdout.fileno())
    return 0


# -- parser -------------------------------------------------------------------

def _finite(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not math.isfinite(v):
        raise argparse.ArgumentTypeError(f"not finite: {text!r}")
    return v


def _oracle_args(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--oracle-cmd", metavar="CMD",
                     help="external oracle speaking the '<x> <y>' -> '<colour>' line protocol")
    src.add_argument("--builtin", choices=BUILTINS)
    p.add_argument("--timeout", type=_finite, default=5.0, help="seconds per oracle query")
    p.add_argument("--start", type=int, nargs=2, metavar=("I", "J"), default=[0, 0])
    p.add_argument("--step-cap", type=int, default=10_000)
    p.add_argument("--format", choices=("report", "kv", "both"), default="both")


def _graph_out(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", required=True, metavar="FILE")
    p.add_argument("--svg", metavar="FILE")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="planecolour",
                                     description="Plane colouring constructions and certificates.")
    sub = parser.add_subparsers(dest="command", required=True)

    tiling = sub.add_parser("tiling", help="the seven-colour square tiling").add_subparsers(
        dest="action", required=True)
    p = tiling.add_parser("verify", help="check the tiling against [1, 1+epsilon]")
    p.add_argument("--epsilon", type=_finite, required=True)
    p.add_argument("--samples", type=int, default=1_000_000)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--spec", choices=sorted(TILINGS), default="canonical")
    p.set_defaults(func=cmd_tiling_verify)
    p = tiling.add_parser("svg", help="render the tiling")
    p.add_argument("--out", required=True, metavar="FILE")
    p.add_argument("--window", type=_finite, nargs=4, metavar=("XMIN", "XMAX", "YMIN", "YMAX"))
    p.add_argument("--scale", type=_finite, default=80.0, help="pixels per unit")
    p.add_argument("--spec", choices=sorted(TILINGS), default="canonical")
    p.set_defaults(func=cmd_tiling_svg)

    witness = sub.add_parser("witness", help="emit finite witness graphs").add_subparsers(
        dest="kind", required=True)
    p = witness.add_parser("spindle")
    _graph_out(p)
    p.set_defaults(func=cmd_witness_spindle)
    p = witness.add_parser("wheel")
    p.add_argument("--epsilon", type=_finite, required=True)
    p.add_argument("--mode", choices=("theorem1", "theorem2"), default="theorem1")
    p.add_argument("--center", type=_finite, nargs=2, metavar=("X", "Y"), default=[0.0, 0.0])
    p.add_argument("--base-angle", type=_finite, default=0.0)
    _graph_out(p)
    p.set_defaults(func=cmd_witness_wheel)
    p = witness.add_parser("boundary")
    p.add_argument("--epsilon", type=_finite, default=0.5)
    p.add_argument("--line-angle", type=_finite, default=0.0)
    p.add_argument("--center", type=_finite, nargs=2, metavar=("X", "Y"), default=[0.0, 0.0])
    p.add_argument("--colour-a", type=int, default=0)
    p.add_argument("--colour-b", type=int, default=1)
    _graph_out(p)
    p.set_defaults(func=cmd_witness_boundary)

    p = sub.add_parser("chi", help="chromatic number of a graph file")
    p.add_argument("file")
    p.add_argument("--cap", type=int, default=64, help="largest vertex count accepted")
    p.set_defaults(func=cmd_chi)

    ball = sub.add_parser("ball", help="three-colour ball search").add_subparsers(
        dest="action", required=True)
    p = ball.add_parser("find")
    p.add_argument("--epsilon", type=_finite, required=True)
    _oracle_args(p)
    p.set_defaults(func=cmd_ball_find)

    certify = sub.add_parser("certify", help="lower-bound certificates").add_subparsers(
        dest="bound", required=True)
    p = certify.add_parser("six")
    p.add_argument("--epsilon", type=_finite, required=True)
    p.add_argument("--base-angle", type=_finite, default=0.0)
    _oracle_args(p)
    p.set_defaults(func=cmd_certify_six)
    p = certify.add_parser("five")
    p.add_argument("--epsilon", type=_finite, default=0.5)
    p.add_argument("--line-angle", type=_finite, default=0.0)
    p.add_argument("--center", type=_finite, nargs=2, metavar=("X", "Y"), default=[0.0, 0.0])
    p.add_argument("--colour-a", type=int, default=0)
    p.add_argument("--colour-b", type=int, default=1)
    p.add_argument("--format", choices=("report", "kv", "both"), default="both")
    p.set_defaults(func=cmd_certify_five)

    lattice = sub.add_parser("lattice", help="triangular lattice tools").add_subparsers(
        dest="action", required=True)
    p = lattice.add_parser("cycle", help="minimal separating cycle of an 'i j' vertex set")
    p.add_argument("file")
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_lattice_cycle)

    oracle = sub.add_parser("oracle", help="reference oracle server").add_subparsers(
        dest="action", required=True)
    p = oracle.add_parser("serve", help="answer the line protocol on stdin/stdout")
    p.add_argument("--builtin", choices=BUILTINS, default="tiling7")
    p.set_defaults(func=cmd_oracle_serve)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except DOMAIN_ERRORS as exc:
        msg = str(exc).splitlines()[0] if str(exc) else type(exc).__name__
        print(f"error: {msg}", file=sys.stderr)
        return 1


def main(argv: Sequence[str] | None = None) -> None:
    sys.exit(run(argv))


__all__ = ["build_parser", "builtin_oracle", "main", "run"]

"""Command-line front end.

Exit codes: 0 success, 1 a verification check failed, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import kernel
from .corpus import DEFAULT_SEED
from .exact import TextFormError, format_decimal, format_rational, parse_gaussian, parse_rational
from .ratio import area_ratio, is_extrapolated, ratio_sweep, write_csv
from .render import render_scene
from .scene import SceneError, SceneSpec, read_scene
from .solver import solve_inner
from .triangle import BUILTINS, Triangle
from .verify import SUITES

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except TextFormError as exc:
        raise argparse.ArgumentTypeError(f"{text!r}: {exc.message} at column {exc.offset + 1}")


def _point_arg(text: str):
    try:
        return parse_gaussian(text)
    except TextFormError as exc:
        raise argparse.ArgumentTypeError(f"{text!r}: {exc.message} at column {exc.offset + 1}")


def _scene_parent() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    src = parent.add_argument_group("scene source (exactly one)")
    src.add_argument("scene", nargs="?", help="scene file (*.tri)")
    src.add_argument("--builtin", choices=sorted(BUILTINS), help="built-in triangle")
    src.add_argument("--p", type=_point_arg, metavar="Z", help="vertex p, e.g. --p=0+0i")
    src.add_argument("--q", type=_point_arg, metavar="Z")
    src.add_argument("--r", type=_point_arg, metavar="Z")
    parent.add_argument("-t", "--t", dest="t", type=_rational_arg, metavar="T",
                        help="cevian fraction (default 1/3; overrides the scene file)")
    parent.add_argument("--allow-extrapolation", action="store_true",
                        help="accept t outside [0, 1]")
    return parent


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cevian",
        description="Exact cevian triangles and the one-seventh area ratio.",
    )
    sub = parser.add_subparsers(dest="verb", required=True, metavar="VERB")
    scene = _scene_parent()

    sub.add_parser("area", parents=[scene], help="exact signed and absolute outer area")
    sub.add_parser("inner", parents=[scene], help="inner vertices and solver parameters")
    sub.add_parser("ratio", parents=[scene], help="exact inner/outer area ratio")

    sweep = sub.add_parser("sweep", help="ratio over an evenly spaced range of t (CSV)")
    sweep.add_argument("--from", dest="t_min", type=_rational_arg, required=True, metavar="A")
    sweep.add_argument("--to", dest="t_max", type=_rational_arg, required=True, metavar="B")
    sweep.add_argument("--steps", type=int, required=True, metavar="N")
    sweep.add_argument("--out", metavar="FILE", help="write CSV here instead of stdout")
    sweep.add_argument("--decimal", action="store_true", help="add a ratio_decimal column")
    sweep.add_argument("--builtin", choices=sorted(BUILTINS), default="canonical",
                       help="reference triangle (the result does not depend on it)")
    sweep.add_argument("--allow-extrapolation", action="store_true")

    verify = sub.add_parser("verify", help="run verification suites (all when no flag is given)")
    verify.add_argument("--symbolic", action="store_true")
    verify.add_argument("--oracle", action="store_true")
    verify.add_argument("--invariance", action="store_true")
    verify.add_argument("--count", type=int, default=200, help="random corpus size")
    verify.add_argument("--seed", type=int, default=DEFAULT_SEED)

    render = sub.add_parser("render", parents=[scene], help="SVG diagram")
    render.add_argument("--out", metavar="FILE", help="write SVG here instead of stdout")
    render.add_argument("--width", type=int)
    render.add_argument("--height", type=int)
    render.add_argument("--margin", type=int)
    render.add_argument("--no-labels", action="store_true")
    return parser


def load_scene(args) -> SceneSpec:
    inline = [args.p, args.q, args.r]
    sources = sum([args.scene is not None, args.builtin is not None, any(v is not None for v in inline)])
    if sources != 1:
        raise UsageError("give exactly one scene source: a file, --builtin, or --p/--q/--r")
    options: dict[str, str] = {}
    if args.allow_extrapolation:
        options["allow-extrapolation"] = "on"
    if args.scene is not None:
        try:
            spec = read_scene(args.scene)
        except (OSError, UnicodeDecodeError) as exc:
            raise UsageError(f"cannot read {args.scene}: {exc}") from None
        options = {**spec.options, **options}
        t = spec.t if args.t is None else args.t
        tri = spec.triangle
    else:
        if args.builtin is not None:
            tri = BUILTINS[args.builtin]
        else:
            if any(v is None for v in inline):
                raise UsageError("inline triangles need all of --p, --q and --r")
            try:
                tri = Triangle(*inline)
            except ValueError as exc:
                raise UsageError(str(exc)) from None
        t = Fraction(1, 3) if args.t is None else args.t
    spec = SceneSpec(tri, t, options)
    if is_extrapolated(t) and not spec.allow_extrapolation:
        raise UsageError(
            f"t={format_rational(t)} is outside [0, 1]; pass --allow-extrapolation to permit"
        )
    return spec


def _note(out, t) -> None:
    if is_extrapolated(t):
        print("note=extrapolated", file=out)


def cmd_area(args, out) -> int:
    spec = load_scene(args)
    area = spec.triangle.signed_area()
    print(f"signed_area={format_rational(area)}", file=out)
    print(f"area={format_rational(abs(area))}", file=out)
    return EXIT_OK


def cmd_inner(args, out) -> int:
    spec = load_scene(args)
    sol = solve_inner(spec.triangle, spec.t)
    u = ",".join(format_rational(x) for x in sol.u)
    print(f"{sol.vertices} u=[{u}]", file=out)
    _note(out, spec.t)
    return EXIT_OK


def cmd_ratio(args, out) -> int:
    spec = load_scene(args)
    ratio = area_ratio(spec.triangle, spec.t)
    print(f"ratio={format_rational(ratio)}", file=out)
    print(f"ratio_decimal={format_decimal(ratio, 12)}", file=out)
    _note(out, spec.t)
    return EXIT_OK


def cmd_sweep(args, out) -> int:
    if args.steps < 1:
        raise UsageError("--steps must be at least 1")
    if not args.t_min < args.t_max:
        raise UsageError("--from must be smaller than --to")
    if (is_extrapolated(args.t_min) or is_extrapolated(args.t_max)) and not args.allow_extrapolation:
        raise UsageError("sweep range leaves [0, 1]; pass --allow-extrapolation to permit")
    records = ratio_sweep(args.t_min, args.t_max, args.steps, BUILTINS[args.builtin])
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            write_csv(records, fh, decimal=args.decimal)
    else:
        write_csv(records, out, decimal=args.decimal)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    chosen = [name for name in ("symbolic", "oracle", "invariance") if getattr(args, name)]
    if not chosen:
        chosen = list(SUITES)
    sized = {"core": args.count, "oracle": args.count, "invariance": min(args.count, 50)}
    ok = True
    for name in chosen:
        suite = SUITES[name]
        if name in sized:
            checks = suite(sized[name], args.seed)
        elif name == "parser":
            checks = suite(100, args.seed)
        else:
            checks = suite()
        for check in checks:
            print(check.line(), file=out)
            ok &= check.passed
    print(f"kernel backend: {kernel.BACKEND}", file=out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_render(args, out) -> int:
    spec = load_scene(args)
    options = dict(spec.options)
    for name in ("width", "height", "margin"):
        value = getattr(args, name)
        if value is not None:
            options[name] = str(value)
    if args.no_labels:
        options["labels"] = "off"
    spec = SceneSpec(spec.triangle, spec.t, options)
    try:
        svg = render_scene(spec)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(svg)
    else:
        out.write(svg)
    return EXIT_OK


COMMANDS = {
    "area": cmd_area,
    "inner": cmd_inner,
    "ratio": cmd_ratio,
    "sweep": cmd_sweep,
    "verify": cmd_verify,
    "render": cmd_render,
}


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return COMMANDS[args.verb](args, out)
    except SceneError as exc:
        for d in exc.diagnostics:
            print(f"{exc.source}:{d}", file=err)
        return EXIT_USAGE
    except UsageError as exc:
        print(f"cevian {args.verb}: error: {exc}", file=err)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())

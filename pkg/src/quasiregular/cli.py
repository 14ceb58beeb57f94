"""Command-line entry point.

Exit codes: 0 success, 1 validation failure, 2 usage error.  Data goes to
--out or stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys

from .emit import FORMATS, RenderSpec, emit_json, emit_obj, emit_svg, patch_record
from .polygon import isogonal_polygon, isotoxal_polygon, regular_polygon
from .prism import Polyhedron, dual_prism, build_prism
from .quat import aut_group_order, dicyclic_root_system
from .tiling import (
    TilingConflict,
    decagon_patch,
    hexagon_patch,
    isotoxal_hexagon_patch,
    octagon_square_patch,
    validate_patch,
)

POLYGON_VARIANTS = ("isogonal", "isotoxal", "regular")
DUAL_PRISM_VARIANTS = ("normalized", "raw")
TILINGS = {
    "hexagon": lambda a: hexagon_patch(a.a1, a.a2, a.rings),
    "isotoxal-hexagon": lambda a: isotoxal_hexagon_patch(a.a1, a.a2, a.rings),
    "octagon-regular": lambda a: octagon_square_patch(a.a1, a.a2, a.rings, "regular"),
    "octagon-isogonal": lambda a: octagon_square_patch(a.a1, a.a2, a.rings, "isogonal"),
    "octagon-isotoxal": lambda a: octagon_square_patch(a.a1, a.a2, a.rings, "isotoxal"),
    "decagon-bowtie": lambda a: decagon_patch("bowtie-exemplar", a.a1, a.a2),
    "decagon-isogonal": lambda a: decagon_patch("isogonal-exemplar", a.a1, a.a2),
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=3, help="dihedral order (polygons have 2n sides)")
    common.add_argument("--a1", type=float, default=1.0)
    common.add_argument("--a2", type=float, default=1.0)
    common.add_argument("--a3", type=float, default=1.0)
    common.add_argument("--rings", type=int, default=2, help="growth rings for tilings")
    common.add_argument("--variant", default=None)
    common.add_argument("--format", choices=FORMATS, default=None, help="default json (text for group-check)")
    common.add_argument("--out", default=None, help="output file (default stdout)")
    common.add_argument("--precision", type=int, default=6)
    common.add_argument("--scale", type=float, default=None,
                        help="units per unit length (default 50 for svg, 1 otherwise)")

    parser = _Parser(prog="quasiregular", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("polygon", parents=[common], help=f"2n-gon; --variant {'|'.join(POLYGON_VARIANTS)}")
    sub.add_parser("dual", parents=[common], help="isotoxal dual of the isogonal 2n-gon")
    sub.add_parser("prism", parents=[common], help="quasi-regular prism from a1 w1 + a2 w2 + a3 w3")
    sub.add_parser("dual-prism", parents=[common],
                   help=f"dipyramid dual; --variant {'|'.join(DUAL_PRISM_VARIANTS)}")
    sub.add_parser("tiling", parents=[common], help=f"tiling patch; --variant {'|'.join(TILINGS)}")
    sub.add_parser("group-check", parents=[common], help="order of Aut of the dicyclic group")
    return parser


def _variant(args, allowed, default):
    v = args.variant or default
    if v not in allowed:
        raise UsageError(f"--variant must be one of {', '.join(allowed)} for {args.command}")
    return v


def _build(args):
    """Return (result, validation_ok)."""
    cmd = args.command
    if cmd == "polygon":
        v = _variant(args, POLYGON_VARIANTS, "isogonal")
        if v == "regular":
            return regular_polygon(args.n, args.a1), True
        if v == "isotoxal":
            return isotoxal_polygon(args.n, args.a1, args.a2), True
        return isogonal_polygon(args.n, args.a1, args.a2), True
    if cmd == "dual":
        return isotoxal_polygon(args.n, args.a1, args.a2), True
    if cmd == "prism":
        return build_prism(args.n, args.a1, args.a2, args.a3), True
    if cmd == "dual-prism":
        v = _variant(args, DUAL_PRISM_VARIANTS, "normalized")
        d = dual_prism(args.n, args.a1, args.a2, args.a3)
        return (d.normalized() if v == "normalized" else d), True
    if cmd == "tiling":
        v = _variant(args, tuple(TILINGS), "hexagon")
        patch = TILINGS[v](args)
        report = validate_patch(patch)
        return (patch, report), report.passed
    raise UsageError(f"unknown command {cmd}")


def _group_check(args, out) -> int:
    if args.format not in (None, "json"):
        raise UsageError("group-check writes text or --format json")
    order = aut_group_order(args.n)
    if args.format == "json":
        record = {"kind": "group-check", "n": args.n,
                  "params": {"a1": None, "a2": None, "a3": None},
                  "vertices": [], "edges": [], "faces": [],
                  "metrics": {"dicyclic_order": len(dicyclic_root_system(args.n)), "aut_order": order},
                  "validation": {}}
        text = emit_json(record, RenderSpec(args.out, "json", 1.0, args.precision))
        if not args.out:
            out.write(text)
        return 0
    text = f"aut-order {order}\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        out.write(text)
    return 0


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.command == "group-check":
            return _group_check(args, out)
        args.format = args.format or "json"
        if args.scale is None:
            args.scale = 50.0 if args.format == "svg" else 1.0
        spec = RenderSpec(args.out, args.format, args.scale, args.precision)
        result, ok = _build(args)
    except UsageError as exc:
        print(exc, file=err)
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except (ValueError, TypeError, IndexError) as exc:
        print(f"error: {exc}", file=err)
        return 2
    except TilingConflict as exc:
        print(f"tiling conflict: {exc}", file=err)
        return 1

    try:
        if isinstance(result, tuple):  # tiling
            patch, report = result
            if spec.format == "obj":
                raise UsageError("OBJ output needs a 3D solid")
            text = emit_svg([patch], spec) if spec.format == "svg" else emit_json(
                patch_record(patch, report), spec)
        elif spec.format == "svg":
            if isinstance(result, Polyhedron):
                raise UsageError("SVG output needs a 2D polygon or patch")
            text = emit_svg([result], spec)
        elif spec.format == "obj":
            if not isinstance(result, Polyhedron):
                raise UsageError("OBJ output needs a 3D solid")
            text = emit_obj(result, spec)
        else:
            text = emit_json(result, spec)
    except UsageError as exc:
        print(f"error: {exc}", file=err)
        return 2
    if not args.out:
        out.write(text)
    if not ok:
        print("validation failed", file=err)
        if isinstance(result, tuple):
            print(result[1].as_dict(), file=err)
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

"""Command-line interface: compute, verify, limit, render."""

from __future__ import annotations

import argparse
import ast
import json
import math
import sys

import numpy as np

from .centers import (CenterId, center, circumradius, inradius,
                      kimberling_tag, limit_convergence_order, parse_center)
from .checks import RunConfig, registry, report_bytes, run_checks
from .errors import ElliptikitError, NoLimitTag, UndefinedCenter
from .frame import TriangleFrame, build_frame, frame_from_sides, from_bary
from .projective import ProjPoint

EXIT_PARSE = 2
EXIT_UNDEFINED = 3


def _safe_number(text: str) -> float:
    """Evaluate a numeric expression allowing pi and basic arithmetic."""
    node = ast.parse(text.strip(), mode="eval")

    def ev(n):
        if isinstance(n, ast.Expression):
            return ev(n.body)
        if isinstance(n, ast.Constant) and isinstance(n.value, (int, float)):
            return float(n.value)
        if isinstance(n, ast.Name) and n.id in ("pi", "PI"):
            return math.pi
        if isinstance(n, ast.UnaryOp) and isinstance(n.op, (ast.UAdd, ast.USub)):
            v = ev(n.operand)
            return v if isinstance(n.op, ast.UAdd) else -v
        if isinstance(n, ast.BinOp) and isinstance(
                n.op, (ast.Add, ast.Sub, ast.Mult, ast.Div)):
            a, b = ev(n.left), ev(n.right)
            if isinstance(n.op, ast.Add):
                return a + b
            if isinstance(n.op, ast.Sub):
                return a - b
            if isinstance(n.op, ast.Mult):
                return a * b
            if b == 0:
                raise ValueError("division by zero in numeric expression")
            return a / b
        raise ValueError(f"unsupported expression {text!r}")

    return ev(node)


def _parse_frame(args) -> TriangleFrame:
    if args.sides and args.vertices:
        raise ValueError("give either --sides or --vertices, not both")
    floor = getattr(args, "staudtian_floor", 1e-6)
    if args.sides:
        parts = [p for p in args.sides.replace(";", ",").split(",") if p.strip()]
        if len(parts) != 3:
            raise ValueError("--sides needs three comma-separated lengths")
        a, b, c = (_safe_number(p) for p in parts)
        return frame_from_sides(a, b, c, index=args.index, staudtian_floor=floor)
    if args.vertices:
        triples = [t for t in args.vertices.split(";") if t.strip()]
        if len(triples) != 3:
            raise ValueError("--vertices needs three semicolon-separated triples")
        pts = []
        for t in triples:
            comps = [c for c in t.split(",") if c.strip()]
            if len(comps) != 3:
                raise ValueError("each vertex needs three coordinates")
            pts.append(ProjPoint([_safe_number(c) for c in comps]))
        return build_frame(*pts, index=args.index, staudtian_floor=floor)
    raise ValueError("a triangle is required: --sides a,b,c or --vertices ...")


def _add_frame_args(sub):
    sub.add_argument("--sides", help="side lengths a,b,c (pi allowed, e.g. pi/2)")
    sub.add_argument("--vertices",
                     help="three homogeneous triples 'x,y,z;x,y,z;x,y,z'")
    sub.add_argument("--index", type=int, default=0, choices=(0, 1, 2, 3),
                     help="which of the four triangles on the vertices")


def cmd_compute(args) -> int:
    frame = _parse_frame(args)
    out = {"frame": frame.to_json(), "centers": {}}
    for name in args.names:
        cid = parse_center(name)
        b = center(cid, frame)
        out["centers"][cid.value] = {
            "bary": b.to_json(),
            "ambient": from_bary(b).to_json(),
        }
    if args.radius:
        out["radii"] = {}
        for which in args.radius:
            if which == "circum":
                out["radii"]["circumradius"] = circumradius(frame)
            else:
                out["radii"]["inradius"] = inradius(frame)
    json.dump(out, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 0


def cmd_verify(args) -> int:
    tolerances = {}
    for spec in args.tol or []:
        name, _, val = spec.partition("=")
        if not val:
            raise ValueError(f"--tol expects NAME=VALUE, got {spec!r}")
        tolerances[name] = float(val)
    config = RunConfig(seed=args.seed, frames=args.frames,
                       staudtian_floor=args.staudtian_floor,
                       tolerances=tolerances,
                       tol_scale=RunConfig.env_tol_scale(),
                       only=args.only, out=args.out)
    report = run_checks(config, progress=lambda s: print(s, file=sys.stderr))
    data = report_bytes(report)
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(data)
        print(f"report written to {args.out}  sha256={report['hash']}",
              file=sys.stderr)
    else:
        sys.stdout.buffer.write(data)
    return 0 if report["pass"] else 1


def cmd_limit(args) -> int:
    frame = _parse_frame(args)
    lams = [float(_safe_number(x)) for x in args.lams.split(",") if x.strip()]
    names = args.names or [c.value for c in CenterId if kimberling_tag(c)]
    rows = []
    sys.stdout.write("center\treference\tlambda\tdiscrepancy\torder\n")
    for name in names:
        cid = parse_center(name)
        tag = kimberling_tag(cid)
        if tag is None:
            raise NoLimitTag(f"{cid.value} has no euclidean-limit reference")
        ds, order = limit_convergence_order(cid, frame, lams)
        for lam, d in zip(lams, ds):
            sys.stdout.write(f"{cid.value}\t{tag}\t{lam:g}\t{d:.9e}\t"
                             f"{'exact' if order is None else format(order, '.4f')}\n")
        rows.append((cid.value, lams, ds, order))
    if args.plot:
        import matplotlib
        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
        fig, ax = plt.subplots(figsize=(6.4, 4.8))
        for name, ls, ds, order in rows:
            if max(ds) <= 0:
                continue
            label = name if order is None else f"{name} (order {order:.2f})"
            ax.loglog(ls, ds, "o-", label=label)
        ax.set_xlabel("shrink factor")
        ax.set_ylabel("coordinate discrepancy")
        ax.legend(fontsize=7)
        ax.grid(True, which="both", alpha=0.3)
        fig.tight_layout()
        fig.savefig(args.plot)
        plt.close(fig)
        print(f"figure written to {args.plot}", file=sys.stderr)
    return 0


def cmd_render(args) -> int:
    from .render import render_svg

    frame = _parse_frame(args)
    svg = render_svg(frame, args.elements, grid=args.grid)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(svg)
        print(f"figure written to {args.out}", file=sys.stderr)
    else:
        sys.stdout.write(svg)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="elliptikit",
        description="triangle centers, central lines, conics and cubics in "
                    "the elliptic plane")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="coordinates of catalog centers")
    _add_frame_args(p)
    p.add_argument("names", nargs="*", help="center names (G, O, I, H, Ktilde, ...)")
    p.add_argument("--radius", action="append", choices=("circum", "in"),
                   help="also report a radius")
    p.set_defaults(fn=cmd_compute)

    p = sub.add_parser("verify", help="run the theorem verification sweep")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--frames", type=int, default=1000)
    p.add_argument("--staudtian-floor", type=float, default=1e-6)
    p.add_argument("--only", help="run only checks whose name contains this")
    p.add_argument("--tol", action="append", metavar="NAME=VALUE",
                   help="override one check tolerance")
    p.add_argument("--out", help="write the report JSON here instead of stdout")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("limit", help="euclidean-limit convergence table")
    _add_frame_args(p)
    p.add_argument("names", nargs="*",
                   help="center names (default: all with a flat reference)")
    p.add_argument("--lams", default="1e-1,1e-2,1e-3",
                   help="comma-separated shrink factors")
    p.add_argument("--plot", help="write a log-log convergence figure (SVG)")
    p.set_defaults(fn=cmd_limit)

    p = sub.add_parser("render", help="draw elements in the affine chart (SVG)")
    _add_frame_args(p)
    p.add_argument("elements", nargs="*",
                   help="centers, lines (orthoaxis, go, ok, akopyan, ...), "
                        "conics (circumcircle, incircle, excircle-a, "
                        "hart-circle, lemoine-conic, apollonian-a, ...) or "
                        "cubics (ef-cubic, simson-cubic, simson-locus-cubic)")
    p.add_argument("--out", help="output SVG path (default stdout)")
    p.add_argument("--grid", type=int, default=481,
                   help="contouring grid resolution")
    p.set_defaults(fn=cmd_render)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except UndefinedCenter as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNDEFINED
    except (ValueError, KeyError, ElliptikitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())

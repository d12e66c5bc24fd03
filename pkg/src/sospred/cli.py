"""Command-line front end.

Input files hold one object per line as whitespace-separated decimal
integers; '#' starts a comment and blank lines are skipped.  The line
ordinal (after comment removal) is the object's index.  Exit code 0 on
success, 2 on usage or parse errors.
"""

import argparse
import sys

from .algorithms import Polygon, convex_hull_2d, delaunay_2d, point_in_polygon
from .epsorder import Kind
from .metrics import DepthStats, degeneracy_report
from .predicates import (Hyperplane, Point, PointSet, above, in_sphere,
                         on_positive_side, positive, smaller)
from .sossign import (emit_straightline_code, generate_term_table,
                      table_to_csv, table_to_text)


class InputError(Exception):
    pass


def _parse_int(tok: str) -> int:
    try:
        x = int(tok, 10)
    except ValueError:
        raise InputError(f"not a decimal integer: {tok!r}")
    if not -(1 << 63) <= x <= (1 << 63) - 1:
        raise InputError(f"integer out of 64-bit range: {tok}")
    return x


def read_rows(path: str) -> list[tuple[int, ...]]:
    """Rows of integers from an input file, comments and blanks removed."""
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as e:
        raise InputError(str(e))
    rows = []
    for line in text.splitlines():
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        rows.append(tuple(_parse_int(tok) for tok in body.split()))
    if not rows:
        raise InputError(f"no data rows in {path}")
    if len({len(r) for r in rows}) != 1:
        raise InputError(f"inconsistent arity in {path}")
    return rows


def _kind(name: str) -> Kind:
    return Kind.LAMBDA if name == "lambda" else Kind.DELTA


def _report(args, stats, out):
    if getattr(args, "depths", False):
        out.write(degeneracy_report(stats))


def cmd_orient(args, out):
    rows = read_rows(args.file)
    stats = DepthStats()
    pts = [Point(i, r) for i, r in enumerate(rows)]
    r = positive(pts, mode=args.mode, stats=stats)
    out.write(f"{'positive' if r else 'negative'} {stats.max_depth()}\n")
    _report(args, stats, out)


def cmd_pip(args, out):
    rows = read_rows(args.file)
    poly = Polygon.from_coords(rows)
    p = Point(0, tuple(args.point))
    stats = DepthStats()
    res = point_in_polygon(p, poly, boundary_pretest=not args.no_pretest,
                           stats=stats)
    out.write(f"{res.classification} {res.crossings} {res.max_depth}\n")
    _report(args, stats, out)


def cmd_hull2d(args, out):
    ps = PointSet.from_coords(read_rows(args.file))
    stats = DepthStats()
    hull = convex_hull_2d(ps, merge_collinear=args.merge_collinear, stats=stats)
    out.write(" ".join(str(i) for i in hull) + "\n")
    _report(args, stats, out)


def cmd_delaunay2d(args, out):
    ps = PointSet.from_coords(read_rows(args.file))
    stats = DepthStats()
    tri = delaunay_2d(ps, stats=stats)
    for t in tri.triangles:
        out.write(" ".join(str(i) for i in t) + "\n")
    _report(args, stats, out)


def cmd_insphere(args, out):
    rows = read_rows(args.file)
    stats = DepthStats()
    r = in_sphere([Point(i, c) for i, c in enumerate(rows)], stats=stats)
    out.write(f"{'true' if r else 'false'}\n")
    _report(args, stats, out)


def cmd_above(args, out):
    rows = read_rows(args.file)
    stats = DepthStats()
    r = above([Hyperplane(i, c) for i, c in enumerate(rows)], stats=stats)
    out.write(f"{'true' if r else 'false'}\n")
    _report(args, stats, out)


def cmd_side(args, out):
    rows = read_rows(args.file)
    stats = DepthStats()
    r = on_positive_side([Hyperplane(i, c) for i, c in enumerate(rows)],
                         stats=stats)
    out.write(f"{'true' if r else 'false'}\n")
    _report(args, stats, out)


def cmd_smaller(args, out):
    a = (args.ref[0], args.ref[1], args.ref[2])
    b = (args.ref[3], args.ref[4], args.ref[5])
    out.write(f"{'true' if smaller(a, b) else 'false'}\n")


def cmd_gentable(args, out):
    table = generate_term_table(_kind(args.kind), args.dim)
    if args.format == "csv":
        out.write(table_to_csv(table))
    else:
        out.write(table_to_text(table))


def cmd_gencode(args, out):
    out.write(emit_straightline_code(_kind(args.kind), args.dim,
                                     style=args.style))


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="sospred",
        description="Exact geometric predicates with symbolic perturbation.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help):
        p = sub.add_parser(name, help=help)
        p.set_defaults(fn=fn)
        return p

    p = add("orient", cmd_orient, "orientation of d+1 points")
    p.add_argument("file")
    p.add_argument("--mode", choices=("cartesian", "homogeneous"),
                   default="cartesian")
    p.add_argument("--depths", action="store_true")

    p = add("pip", cmd_pip, "point-in-polygon parity test")
    p.add_argument("file", help="polygon vertices, one per line")
    p.add_argument("--point", nargs=2, type=int, required=True,
                   metavar=("X", "Y"))
    p.add_argument("--no-pretest", action="store_true",
                   help="skip the exact boundary pretest")
    p.add_argument("--depths", action="store_true")

    p = add("hull2d", cmd_hull2d, "2D convex hull (ccw index cycle)")
    p.add_argument("file")
    p.add_argument("--merge-collinear", action="store_true")
    p.add_argument("--depths", action="store_true")

    p = add("delaunay2d", cmd_delaunay2d, "2D Delaunay triangulation")
    p.add_argument("file")
    p.add_argument("--depths", action="store_true")

    for name, fn, help in (
            ("insphere", cmd_insphere, "in-sphere test for d+2 points"),
            ("above", cmd_above, "vertical-order test for d+1 hyperplanes"),
            ("side", cmd_side, "half-space test for d+1 hyperplanes")):
        p = add(name, fn, help)
        p.add_argument("file")
        p.add_argument("--depths", action="store_true")

    p = add("smaller", cmd_smaller, "perturbed coordinate comparison")
    p.add_argument("ref", nargs=6, type=int, metavar="N",
                   help="i j value_a k l value_b")

    p = add("gentable", cmd_gentable, "emit a term table")
    p.add_argument("kind", choices=("lambda", "delta"))
    p.add_argument("dim", type=int)
    p.add_argument("--format", choices=("csv", "text"), default="text")

    p = add("gencode", cmd_gencode, "emit straight-line evaluation code")
    p.add_argument("kind", choices=("lambda", "delta"))
    p.add_argument("dim", type=int)
    p.add_argument("--style", choices=("case", "unrolled"), default="case")

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.fn(args, sys.stdout)
    except (InputError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())

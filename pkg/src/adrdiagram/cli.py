"""``adrdiagram`` command line.

Exit codes: 0 ok, 1 verification failure, 2 usage or domain error, 3 I/O.
"""
from __future__ import annotations

import argparse
import math
import os
import sys
import tempfile
import time

from .core.body import dumps, loads
from .core.measure import measure
from .diagram import classical_bounds_ok, DiagramPoint, diagram_fill, psi, y_lower, y_upper
from .errors import CertificationError, GeometryError
from .render import to_csv, to_svg
from .shapes import (nonagon_C, nonagon_C_area, nonagon_E, nonagon_E_area,
                     slice_area, slice_body, two_cap_area, two_cap_body)
from .verify import SUITES

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3
MEASURE_ANGLES = 8192


class _Usage(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # raise instead of exiting so main() owns every exit code
    def error(self, message):
        raise _Usage(message)


def _real(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a decimal real: {text!r}") from None
    if not math.isfinite(v):
        raise argparse.ArgumentTypeError(f"not a finite real: {text!r}")
    return v


def write_atomic(path: str, text: str) -> None:
    """Write to a sibling temp file, then rename over ``path``."""
    folder = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(prefix=".tmp-", dir=folder)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except FileNotFoundError:
            pass
        raise


# ---------------------------------------------------------------------------
# construct

def _unit_shape(shape: str, q: float):
    """Body with inradius 1 and diameter q, and its closed-form area."""
    if shape == "two-cap":
        return two_cap_body(1.0, q), two_cap_area(1.0, q)
    if shape == "slice":
        return slice_body(q), slice_area(q)
    if shape == "nonagon-e":
        return nonagon_E(q)[1], nonagon_E_area(q)
    return nonagon_C(q)[1], nonagon_C_area(q)


SHAPES = ("two-cap", "slice", "nonagon-e", "nonagon-c")


def cmd_construct(args) -> int:
    if args.r <= 0:
        raise GeometryError(f"r must be positive, got {args.r}")
    body, unit_area = _unit_shape(args.shape, args.D / args.r)
    body = body.transformed(scale=args.r)
    closed = (args.r * args.r * unit_area, args.D, args.r)
    m = measure(body, MEASURE_ANGLES)
    if args.out:
        write_atomic(args.out, dumps(body))
    for name, c, v in zip("ADr", closed, (m.area, m.diameter, m.inradius)):
        print(f"{name}  closed-form {c:.15g}  measured {v:.15g}  diff {abs(v - c):.1e}")
    return EXIT_OK


def cmd_measure(args) -> int:
    with open(args.path, encoding="utf-8") as fh:
        text = fh.read()
    m = measure(loads(text), MEASURE_ANGLES)
    print(f"A {m.area:.15g}")
    print(f"D {m.diameter:.15g}")
    print(f"r {m.inradius:.15g}")
    print(f"x {m.x:.15g}")
    print(f"y {m.y:.15g}")
    return EXIT_OK


def cmd_bounds(args) -> int:
    if args.D is not None:
        if args.D < 2.0 * args.r:
            raise GeometryError(f"need D >= 2r (D={args.D}, r={args.r})")
        lo = two_cap_area(args.r, args.D)
        hi = psi(args.D, args.r)
        print(f"A_min {lo:.15g}")
        print(f"A_max {hi:.15g}")
        x = 2.0 * args.r / args.D
    else:
        x = args.x
    print(f"x {x:.15g}")
    print(f"y_lower {y_lower(x):.15g}")
    print(f"y_upper {y_upper(x):.15g}")
    print(f"classical {max(x * x, 0.25 * math.pi * x):.15g}")
    if args.y is not None:
        p = DiagramPoint(x, args.y, "query")
        inside = y_lower(x) - 1e-9 <= args.y <= y_upper(x) + 1e-9
        print(f"inside_band {str(inside).lower()}")
        print(f"classical_ok {str(classical_bounds_ok(p)).lower()}")
    return EXIT_OK


def cmd_diagram(args) -> int:
    if args.columns < 2:
        raise _Usage("--columns must be at least 2")
    if args.per_column < 1:
        raise _Usage("--per-column must be at least 1")
    t0 = time.perf_counter()
    try:
        pts = diagram_fill(args.columns, args.per_column, args.seed)
    except CertificationError as exc:
        print(f"certification failed: {exc}", file=sys.stderr)
        if exc.witness is not None:
            print(f"witness: {exc.witness!r}", file=sys.stderr)
        return EXIT_FAIL
    csv = to_csv(pts)
    if args.csv:
        write_atomic(args.csv, csv)
    if args.svg:
        write_atomic(args.svg, to_svg(pts))
    if not (args.csv or args.svg):
        sys.stdout.write(csv)
    else:
        print(f"{len(pts)} points certified in {time.perf_counter() - t0:.1f} s")
    return EXIT_OK


def cmd_verify(args) -> int:
    checks = []
    for fn in SUITES[args.suite]:
        c = fn()
        checks.append(c)
        print(f"{'PASS' if c.ok else 'FAIL'}  {c.name}  [{c.seconds:.2f} s]  {c.detail}",
              flush=True)
    failed = sum(not c.ok for c in checks)
    print(f"{len(checks) - failed}/{len(checks)} checks passed")
    return EXIT_OK if failed == 0 else EXIT_FAIL


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="adrdiagram",
                description="Extremal planar convex bodies and their (A, D, r) diagram.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("construct", help="build an extremal body and write it as ARCGON v1")
    c.add_argument("shape", choices=SHAPES)
    c.add_argument("--D", type=_real, required=True, help="diameter")
    c.add_argument("--r", type=_real, default=1.0, help="inradius (default 1)")
    c.add_argument("--out", help="output file")
    c.set_defaults(run=cmd_construct)

    m = sub.add_parser("measure", help="measure A, D, r of an ARCGON v1 file")
    m.add_argument("path", nargs="?")
    m.add_argument("--in", dest="in_path")
    m.set_defaults(run=cmd_measure)

    b = sub.add_parser("bounds", help="evaluate the diagram curves and area bounds")
    g = b.add_mutually_exclusive_group(required=True)
    g.add_argument("--x", type=_real, help="abscissa 2r/D in (0, 1]")
    g.add_argument("--D", type=_real, help="diameter, with --r")
    b.add_argument("--r", type=_real, default=1.0)
    b.add_argument("--y", type=_real, help="also test the point (x, y)")
    b.set_defaults(run=cmd_bounds)

    d = sub.add_parser("diagram", help="fill the diagram with certified witnesses")
    d.add_argument("--columns", type=int, default=50)
    d.add_argument("--per-column", type=int, default=20)
    d.add_argument("--seed", type=int, default=7)
    d.add_argument("--csv")
    d.add_argument("--svg")
    d.set_defaults(run=cmd_diagram)

    v = sub.add_parser("verify", help="run an acceptance suite")
    v.add_argument("suite", nargs="?", default="all", choices=sorted(SUITES))
    v.set_defaults(run=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "measure":
            args.path = args.in_path or args.path
            if not args.path:
                raise _Usage("measure needs a file path")
        return args.run(args)
    except _Usage as exc:
        print(f"adrdiagram: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GeometryError, ValueError) as exc:
        print(f"adrdiagram: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"adrdiagram: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())

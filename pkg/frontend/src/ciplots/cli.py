"""``plots`` command line tool.

Usage::

    plots render --csv bench.csv --motif scan --out charts/
    plots render --csv bench.csv --motif count --y seconds --linear --out charts/

Each invocation draws one motif's chart (PNG and SVG side by side) and
prints the written file paths.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .plotting import PlotSpec, render

__all__ = ["main"]


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(prog="plots", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    rend = sub.add_parser("render", help="draw one motif's chart from a benchmark CSV")
    rend.add_argument("--csv", required=True, help="benchmark CSV file")
    rend.add_argument("--motif", required=True, help="motif to chart (e.g. count, scan, fill, reduce)")
    rend.add_argument("--out", required=True, help="output directory for image files")
    rend.add_argument("--y", choices=("rate", "seconds"), default=None,
                      help="y axis (default: the motif's figure of merit)")
    rend.add_argument("--linear", action="store_true", help="linear axes instead of log-log")

    args = parser.parse_args(argv)
    spec = PlotSpec(
        motif=args.motif,
        y_axis=args.y,
        loglog=not args.linear,
        out_dir=Path(args.out),
    )
    try:
        result = render(args.csv, spec)
    except (ValueError, OSError) as exc:
        print(f"plots: {exc}", file=sys.stderr)
        return 1
    for path in result.files:
        print(path)
    series = ", ".join(f"{label}({n})" for label, n in result.points.items())
    print(f"series: {series}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

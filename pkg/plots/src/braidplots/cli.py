"""Command line front end: plot <kind> <in.csv> <out.svg> [--png].

Exit codes: 0 written, 1 unreadable or malformed CSV, 2 bad usage.
"""

import argparse
import sys

from .render import SCHEMAS, PlotSpec, render


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plot", description="Render a braidsearch CSV artifact as a figure."
    )
    parser.add_argument("kind", choices=sorted(SCHEMAS), help="which CSV schema to expect")
    parser.add_argument("input", help="CSV file produced by the search CLI")
    parser.add_argument("output", help="image path; suffix picks the format, default svg")
    parser.add_argument("--png", action="store_true", help="force raster output")
    parser.add_argument("--xlabel", default=None)
    parser.add_argument("--ylabel", default=None)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    spec = PlotSpec(
        kind=args.kind,
        input_path=args.input,
        output_path=args.output,
        xlabel=args.xlabel,
        ylabel=args.ylabel,
        png=args.png,
    )
    try:
        info = render(spec)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    points = sum(len(s["x"]) for s in info["series"])
    print(f"wrote {info['output_path']} ({info['format']}, {points} points)", file=sys.stderr)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

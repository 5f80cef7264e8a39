#!/usr/bin/env python3
"""Build the two headline curves as CSV + SVG: lambda(gamma) and L(lambda).

Equivalent to ``hslaplace table`` followed by ``hslaplace plot``, kept as a
one-shot script for convenience.
"""

import argparse
from pathlib import Path

from hslaplace.cli import main as cli_main


def run(out_dir: str, grid_min: float, grid_max: float, count: int) -> None:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    table = out / "saddle_table.csv"
    rc = cli_main(
        [
            "table",
            "--grid-min", str(grid_min),
            "--grid-max", str(grid_max),
            "--grid-count", str(count),
            "--out", str(table),
        ]
    )
    if rc != 0:
        raise SystemExit(rc)
    rc = cli_main(["plot", "--table", str(table), "--out", str(out)])
    if rc != 0:
        raise SystemExit(rc)
    print(f"table: {table}")


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="figures")
    parser.add_argument("--grid-min", type=float, default=1e-3)
    parser.add_argument("--grid-max", type=float, default=10.0)
    parser.add_argument("--grid-count", type=int, default=200)
    args = parser.parse_args()
    run(args.out_dir, args.grid_min, args.grid_max, args.grid_count)

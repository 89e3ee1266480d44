#!/usr/bin/env python3
"""Export the standard plot-ready CSV tables into out/.

Spectra for both oscillators, polynomial value grids, Gram matrices, and
coherent-state coefficient profiles; everything goes through the CLI so the
files match what `qhermite table` produces.
"""

import pathlib
import sys

from qhermite.cli import main as cli_main

OUT = pathlib.Path(__file__).resolve().parent.parent / "out"

JOBS = [
    ["table", "--kind", "spectrum", "--family", "rogers", "--q", "0.5", "--nmax", "25"],
    ["table", "--kind", "spectrum", "--family", "discrete2", "--q", "0.5", "--nmax", "25"],
    ["table", "--kind", "polys", "--family", "rogers", "--q", "0.5", "--nmax", "6"],
    ["table", "--kind", "polys", "--family", "discrete2", "--q", "0.5", "--nmax", "6"],
    ["table", "--kind", "gram", "--family", "rogers", "--q", "0.5", "--nmax", "10"],
    ["table", "--kind", "gram", "--family", "discrete2", "--q", "0.5", "--nmax", "8"],
    ["table", "--kind", "coherent", "--family", "rogers", "--q", "0.5", "--z", "1.0,0.0"],
    ["table", "--kind", "coherent", "--family", "discrete2", "--q", "0.5", "--z", "2.0,0.0"],
]


def main() -> int:
    OUT.mkdir(exist_ok=True)
    for job in JOBS:
        name = "_".join([job[2], job[4], f"q{job[6]}"]) + ".csv"
        status = cli_main(job + ["--format", "csv", "--out", str(OUT / name)])
        if status != 0:
            return status
        print("wrote", OUT / name)
    return 0


if __name__ == "__main__":
    sys.exit(main())

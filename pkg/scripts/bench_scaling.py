#!/usr/bin/env python3
"""Measure how construction time and term counts grow with the lattice site.

Usage:
    python scripts/bench_scaling.py [N_MAX]

N_MAX defaults to 4; site 6 already takes tens of seconds because the
fraction-free elimination multiplies determinant-sized polynomials.
"""

import sys

from hirotaverify.cli import cmd_bench


def main() -> int:
    n_max = int(sys.argv[1]) if len(sys.argv) > 1 else 4
    return cmd_bench(n_max)


if __name__ == "__main__":
    sys.exit(main())

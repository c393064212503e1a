#!/usr/bin/env python3
"""Run every verification suite at desk scale and print the text report.

Usage:
    python scripts/run_all_checks.py [N_MAX] [--json]

N_MAX defaults to 3.  The exit code is 0 only when every identity passes.
"""

import sys

from hirotaverify.cli import RunConfig, cmd_verify


def main() -> int:
    args = [a for a in sys.argv[1:] if a != "--json"]
    n_max = int(args[0]) if args else 3
    config = RunConfig(
        n_max=n_max,
        suites=["all"],
        report_format="json" if "--json" in sys.argv else "text",
    )
    return cmd_verify(config)


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""Run the full identity audit and archive the report.

Usage:
    python scripts/run_audit.py [suite] [--grid default|small] [--out DIR]

Writes <suite>_report.json into the output directory (default: reports/)
and prints the per-identity summary table.  Exits non-zero if any
corrected-form identity fails, mirroring the CLI contract.
"""

import argparse
import sys
import time
from pathlib import Path

from pkspecial import AuditGrid, run_suite, write_report
from pkspecial.audit import format_summary


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("suite", nargs="?", default="all",
                        choices=("pochhammer", "gamma", "beta", "psi", "hyper", "all"))
    parser.add_argument("--grid", default="default", choices=("default", "small"))
    parser.add_argument("--out", default="reports")
    args = parser.parse_args()

    grid = AuditGrid.default() if args.grid == "default" else AuditGrid.small()
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)

    start = time.time()
    report = run_suite(args.suite, grid)
    elapsed = time.time() - start

    path = out_dir / f"{args.suite}_report.json"
    write_report(report, str(path))
    print(format_summary(report))
    print(f"{len(report.records)} records in {elapsed:.2f}s -> {path}")
    return 0 if report.all_corrected_pass else 1


if __name__ == "__main__":
    sys.exit(main())

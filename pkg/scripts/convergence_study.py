#!/usr/bin/env python3
"""Convergence study for the slow Gamma evaluators.

Sweeps the truncation index for the defining limit (raw and Richardson) and
the two corrected product forms at one (p, k, x) point, and emits a
plot-ready CSV of log-space absolute errors against the closed form:

    n,limit_raw,limit_richardson,euler_product,weierstrass

Usage:
    python scripts/convergence_study.py [--p 2.0] [--k 0.5] [--x 2.5] [--out -]
"""

import argparse
import sys

from pkspecial import (
    PkParams,
    gamma_closed,
    gamma_euler_product,
    gamma_limit,
    gamma_weierstrass_recip,
)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--p", type=float, default=2.0)
    parser.add_argument("--k", type=float, default=0.5)
    parser.add_argument("--x", type=float, default=2.5)
    parser.add_argument("--out", default="-", help="output CSV path, '-' for stdout")
    args = parser.parse_args()

    params = PkParams(args.p, args.k)
    truth = gamma_closed(params, args.x).ln_value

    out = sys.stdout if args.out == "-" else open(args.out, "w", encoding="utf-8")
    try:
        print("n,limit_raw,limit_richardson,euler_product,weierstrass", file=out)
        for n in (64, 256, 1024, 4096, 16384, 65536):
            raw = abs(gamma_limit(params, args.x, n, accelerate=False).ln_value - truth)
            rich = abs(gamma_limit(params, args.x, n, accelerate=True).ln_value - truth)
            euler = abs(gamma_euler_product(params, args.x, terms=n).ln_value - truth)
            weier = abs(-gamma_weierstrass_recip(params, args.x, terms=n).ln_value - truth)
            print(f"{n},{raw:.6e},{rich:.6e},{euler:.6e},{weier:.6e}", file=out)
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


if __name__ == "__main__":
    sys.exit(main())

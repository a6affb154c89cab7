#!/usr/bin/env python3
"""Export the two crossing curves lambda^(1-eta) and g(eta) as CSV."""

import argparse
import sys

from wilson.bounds import curve_rows, solve_crossing


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--lam", type=float, default=2.0)
    ap.add_argument("-o", "--output", default=None)
    args = ap.parse_args()

    step = solve_crossing(args.lam)
    lines = [
        f"# crossing for lambda={args.lam}: eta={step.eta_n:.12f},"
        f" value={step.lambda_next:.12f}",
        "eta,pow_curve,g_curve",
    ]
    for eta, p, g in curve_rows(args.lam):
        lines.append(f"{eta:.2f},{p:.12f},{g:.12f}")
    text = "\n".join(lines) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Print the decreasing growth-bound sequence until it drops below a target."""

import argparse

from wilson.bounds import lambda_sequence


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--steps", type=int, default=200)
    ap.add_argument("--below", type=float, default=1.05,
                    help="stop printing once lambda drops below this value")
    args = ap.parse_args()

    print(f"{'n':>4} {'lambda_n':>18} {'eta_n':>18} {'residual':>10}")
    for step in lambda_sequence(args.steps):
        print(f"{step.n:>4} {step.lambda_n:>18.15f} {step.eta_n:>18.15f}"
              f" {step.residual:>10.2e}")
        if step.lambda_next < args.below:
            print(f"   -> lambda_{step.n + 1} = {step.lambda_next:.15f}"
                  f" < {args.below}")
            break


if __name__ == "__main__":
    main()

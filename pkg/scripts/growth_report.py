#!/usr/bin/env python3
"""Print ball sizes and growth estimates for the three standard generating sets."""

import argparse

from wilson.catalog import make_S, make_tilde
from wilson.growth import ball_sizes, growth_estimates


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--radius", type=int, default=8)
    args = ap.parse_args()

    gensets = [("S:1", make_S(1)), ("S:2", make_S(2)), ("tilde", make_tilde())]
    for name, gs in gensets:
        sizes = ball_sizes(gs, args.radius)
        print(f"== {name} ==")
        print(f"{'n':>3} {'ball':>8} {'sphere':>8} {'root':>10} {'ratio':>10}")
        for row in growth_estimates(sizes):
            print(
                f"{row['radius']:>3} {row['ball_size']:>8} {row['sphere_size']:>8}"
                f" {row['estimate_root']:>10.5f} {row['estimate_ratio']:>10.5f}"
            )
        print()


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Print invariant tables for every family side by side.

Usage:
    python3 scripts/invariant_tables.py [--n-max N] [--family NAME]

Each row is one odd torus index; columns are the exact polynomials.
"""

from __future__ import annotations

import argparse

from torkit import FAMILIES, torus_invariant

FAMILY_NAMES = sorted(FAMILIES)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=9, help="largest odd index")
    parser.add_argument(
        "--family",
        choices=FAMILY_NAMES,
        action="append",
        help="restrict to one family (repeatable; default: all)",
    )
    return parser


def main() -> int:
    args = build_parser().parse_args()
    if args.n_max < 1 or args.n_max % 2 == 0:
        print("error: --n-max must be a positive odd integer")
        return 2
    families = args.family or list(FAMILY_NAMES)
    for family in families:
        print(f"== {family} ==")
        for n in range(1, args.n_max + 1, 2):
            value = torus_invariant(family, n)
            print(f"  T({n},2): {value}")
        print()
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

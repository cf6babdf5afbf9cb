"""Dimensions |Lyn_mu| for every weak composition, with the row totals
against the closed forms (n-1)! and n^(n-1).

    python scripts/dimension_table.py --max-n 6 --k 2
"""

import argparse
from math import factorial

from multilie.core import weak_compositions
from multilie.trees import enumerate_lyn


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=6)
    parser.add_argument("--k", type=int, default=2)
    args = parser.parse_args()
    for n in range(2, args.max_n + 1):
        dims = {mu: len(enumerate_lyn(mu)) for mu in weak_compositions(n - 1, args.k)}
        row = "  ".join(f"{tuple(mu.padded(args.k))}:{d}" for mu, d in dims.items())
        total = sum(dims.values())
        known = {1: factorial(n - 1), 2: n ** (n - 1)}.get(args.k)
        tail = "" if known is None else f"  (expected {known})"
        print(f"n={n} total={total}{tail}\n  {row}")


if __name__ == "__main__":
    main()

"""Intervals where replacing the partial label order by a linear extension would
change the set of increasing chains.  The EL verdict itself never linearizes.

    python scripts/linearization_report.py --n 3 --k 2
"""

import argparse

from multilie.core import weak_compositions
from multilie.el import verify_el
from multilie.poset import build_interval


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=3)
    parser.add_argument("--k", type=int, default=2)
    args = parser.parse_args()
    for mu in weak_compositions(args.n - 1, args.k):
        P = build_interval(args.n, mu)
        rep = verify_el(P)
        print(f"mu={tuple(mu.padded(args.k))} el={rep.ok} disagreements={len(rep.linearization_disagreements)}")
        for x, y in rep.linearization_disagreements[:3]:
            print(f"    [{P.elements[x].display(args.k)}, {P.elements[y].display(args.k)}]")


if __name__ == "__main__":
    main()

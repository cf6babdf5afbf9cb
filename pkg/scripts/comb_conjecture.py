"""Whether comb chains with root color other than k are independent in the top
cohomology of the whole poset without its minimum.  Numerical evidence only.

    python scripts/comb_conjecture.py --max-n 4 --max-k 3
"""

import argparse

from multilie.cohomology import full_poset_cohomology


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=4)
    parser.add_argument("--max-k", type=int, default=3)
    args = parser.parse_args()
    for n in range(2, args.max_n + 1):
        for k in range(2, args.max_k + 1):
            rep = full_poset_cohomology(n, k)
            basis = rep.comb_spans and rep.comb_independent
            print(f"n={n} k={k} dim={rep.dimension} combs={rep.sizes['comb']} "
                  f"spans={rep.comb_spans} independent={rep.comb_independent} basis={basis} "
                  f"lyndon_basis={rep.lyndon_root_basis_ok}")


if __name__ == "__main__":
    main()

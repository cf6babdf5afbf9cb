"""Schur expansions of the e(x)-coefficients C_lambda(y) of the Lie character series.

    python scripts/schur_positivity.py --max-n 6
"""

import argparse

from multilie.symfunc.identities import frobenius_table


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=5)
    args = parser.parse_args()
    for n in range(2, args.max_n + 1):
        table = frobenius_table(n, n - 1)
        for lam, s in table.schur_expansions.items():
            terms = " + ".join(f"{c}*s{''.join(map(str, mu))}" for mu, c in sorted(s.coeffs.items(), reverse=True))
            verdict = "positive" if table.schur_positive[lam] else "NOT positive"
            print(f"n={n} lambda={lam}: {verdict}: {terms}")


if __name__ == "__main__":
    main()

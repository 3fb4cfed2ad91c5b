"""Sign-character scalars of a_i b_j in End(up^n) at t = q^n, with the closed form."""
import argparse
from fractions import Fraction

from oskein.jmspec import shortest_word_expected, shortest_word_scalar


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=2)
    ap.add_argument("--q", type=Fraction, default=Fraction(2))
    args = ap.parse_args()
    for i in range(args.n + 1):
        row = []
        for j in range(args.n + 1):
            got = shortest_word_scalar(i, j, args.n, args.q)
            mark = "" if got == shortest_word_expected(i, j, args.n, args.q) else "!"
            row.append(f"{str(got) + mark:>8s}")
        print(" ".join(row))


if __name__ == "__main__":
    main()

"""HOMFLY-PT of small knots and links, from braid closures and PD codes,
cross-checked against the independent PD recursion."""
import argparse
import time

from oskein.pdoracle import homfly_pd
from oskein.skein import homfly

BRAIDS = {
    "unknot (1 strand)": ([], 1),
    "hopf": ([1, 1], 2),
    "trefoil": ([1, 1, 1], 2),
    "figure-eight": ([1, -2, 1, -2], 3),
    "cinquefoil (positive)": ([1, 1, 1, 1, 1], 2),
    "closure of 1 1 -2 1 -2": ([1, 1, -2, 1, -2], 3),
}

PDS = {
    "3_1": "X[1,5,2,4],X[3,1,4,6],X[5,3,6,2]",
    "4_1": "X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]",
    "5_1": "X[1,6,2,7],X[3,8,4,9],X[5,10,6,1],X[7,2,8,3],X[9,4,10,5]",
    "5_2": "X[1,4,2,5],X[3,8,4,9],X[5,10,6,1],X[9,6,10,7],X[7,2,8,3]",
}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--no-oracle", action="store_true", help="skip the PD recursion cross-check")
    args = ap.parse_args()
    for name, (word, n) in BRAIDS.items():
        t = time.time()
        print(f"{name:24s} {str(homfly(word, strands=n)):40s} {time.time() - t:.2f}s")
    for name, pd in PDS.items():
        t = time.time()
        h = homfly(pd)
        agree = "" if args.no_oracle else ("agrees" if h == homfly_pd(pd) else "DISAGREES")
        print(f"{name:24s} {str(h):40s} {time.time() - t:.2f}s {agree}")


if __name__ == "__main__":
    main()

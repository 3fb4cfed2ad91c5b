"""Gram-rank certification of the canonical-lift basis: rank = d! on every
balanced word pair up to a total length."""
import argparse
import time
from fractions import Fraction
from math import factorial

from oskein.ring import ParamProfile, Specialized
from oskein.skein import gram_rank, sources_targets, words_upto


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-total", type=int, default=6)
    ap.add_argument("--q", type=Fraction, default=Fraction(2))
    ap.add_argument("--t", type=Fraction, default=Fraction(3))
    args = ap.parse_args()
    dom = Specialized(ParamProfile(args.q, args.t))
    start = time.time()
    fails = 0
    by_d = {}
    for a in words_upto(args.max_total):
        for b in words_upto(args.max_total - len(a)):
            src, tgt = sources_targets(a, b)
            if len(src) != len(tgt):
                continue
            d = len(src)
            ok = gram_rank(a, b, dom) == factorial(d)
            fails += not ok
            by_d.setdefault(d, [0, 0])[0 if ok else 1] += 1
    for d, (ok, bad) in sorted(by_d.items()):
        print(f"d={d}: {ok} pairs full rank {factorial(d)}, {bad} deficient")
    print(f"total failures {fails}, {time.time() - start:.1f}s")


if __name__ == "__main__":
    main()

"""Jucys-Murphy spectra and weight-idempotent ranks on End(a) for short words."""
import argparse
from fractions import Fraction

from oskein.jmspec import candidate_colors, jm_matrices, spectrum, weight_idempotents
from oskein.linalg import rank
from oskein.ring import ParamProfile, Specialized
from oskein.skein import words_upto


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-len", type=int, default=3)
    ap.add_argument("--q", type=Fraction, default=Fraction(2))
    ap.add_argument("--t", type=Fraction, default=Fraction(3))
    args = ap.parse_args()
    dom = Specialized(ParamProfile(args.q, args.t))
    for a in words_upto(args.max_len):
        if not a:
            continue
        values = [v for _, v in candidate_colors(len(a), dom)]
        spec = [spectrum(m, values) for m in jm_matrices(a, a, dom)]
        P = weight_idempotents(a, dom)
        print(a)
        for i, s in enumerate(spec, 1):
            print(f"  X{i}: " + ", ".join(f"{v} x{k}" for v, k in sorted(s.items())))
        for key, p in sorted(P.items(), key=lambda kv: [str(x) for x in kv[0]]):
            print("  (" + ", ".join(map(str, key)) + f") rank {rank(p)}")


if __name__ == "__main__":
    main()

"""Weight blocks and the linkage invariant at generic and colliding parameters."""
import argparse

from oskein.repcalc import blocks, check_linkage_invariant, is_semisimple
from oskein.ring import SYMBOLIC, ParamProfile, Specialized


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-size", type=int, default=3)
    ap.add_argument("--max-len", type=int, default=5)
    ap.add_argument("--q", type=int, default=2)
    args = ap.parse_args()
    points = [("generic", SYMBOLIC)]
    points += [(f"t=q^{n}", Specialized(ParamProfile(args.q, args.q ** n))) for n in range(-1, 3)]
    for name, dom in points:
        ss = "symbolic" if dom is SYMBOLIC else "%s: %s" % is_semisimple(dom)
        print(f"{name}: linkage({args.max_len}) {check_linkage_invariant(args.max_len, dom)}; {ss}")
        for b in blocks(args.max_size, dom):
            if len(b) > 1:
                print("   block " + " ".join(map(str, b)))


if __name__ == "__main__":
    main()

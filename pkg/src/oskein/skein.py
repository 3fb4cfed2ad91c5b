"""Reduction of diagrams to the reduced-lift basis.

Strands of a diagram are ranked into layers (top to bottom):

1. downward propagating strands, bottom endpoint further left is higher;
2. upward propagating strands, same rule;
3. caps (both ends at the bottom), the one whose left end is further right higher;
4. cups (both ends at the top), same rule;
5. closed components, the one met first (lowest piece) higher.

A diagram is *descending* if every crossing between different strands has the
higher one over, and every self-crossing is met over first when the strand is
traversed from its source (closed loops: from their first piece).  A
descending diagram equals ``t^(self-writhe) * delta^(#loops)`` times the
canonical lift of its matching.  Anything else is rewritten at its first bad
crossing with ``X+ - X- = z * (oriented smoothing)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Dict, List, NamedTuple, Optional, Tuple

from . import linalg
from .diagram import (CAP_LETTERS, CAPS, CROSSES, CUP_LETTERS, CUPS, Diagram, DiagramError, Morphism,
                      apply_slice, close_right, crossing_sign, diagram_writhe, from_braid, from_pd,
                      parse_word, pretty, slash_over, tau_diagram)
from .ring import (DEFAULT, SYMBOLIC, DegenerateParameterError, Domain, RationalFunction, Specialized,
                   bubble_value, t_power)

Endpoint = Tuple[str, int]   # ("B", ltr index in bottom) or ("T", ltr index in top)


class Matching(NamedTuple):
    """Pairs (source, target) of boundary points, sorted by source.

    Sources are bottom up-points and top down-points; targets are bottom
    down-points and top up-points.  Indices are left-to-right internally."""

    bottom: str
    top: str
    pairs: Tuple[Tuple[Endpoint, Endpoint], ...]

    def describe(self):
        def ep(e):
            side, i = e
            n = len(self.bottom) if side == "B" else len(self.top)
            return {"side": "bottom" if side == "B" else "top", "index": n - i}
        return [[ep(s), ep(t)] for s, t in self.pairs]

    def to_json(self):
        return {"bottom": self.bottom, "top": self.top, "pairs": self.describe()}

    @classmethod
    def from_json(cls, d) -> "Matching":
        bottom, top = d["bottom"], d["top"]

        def ep(e):
            n = len(bottom) if e["side"] == "bottom" else len(top)
            return ("B" if e["side"] == "bottom" else "T", n - int(e["index"]))
        return make_matching(bottom, top, [(ep(s), ep(t)) for s, t in d["pairs"]])


def make_matching(bottom: str, top: str, pairs) -> Matching:
    return Matching(bottom, top, tuple(sorted((tuple(s), tuple(t)) for s, t in pairs)))


def sources_targets(a: str, b: str) -> Tuple[List[Endpoint], List[Endpoint]]:
    src = [("B", i) for i, ch in enumerate(a) if ch == "u"] + [("T", j) for j, ch in enumerate(b) if ch == "d"]
    tgt = [("B", i) for i, ch in enumerate(a) if ch == "d"] + [("T", j) for j, ch in enumerate(b) if ch == "u"]
    return src, tgt


def enumerate_matchings(a, b) -> List[Matching]:
    a, b = parse_word(a), parse_word(b)
    src, tgt = sources_targets(a, b)
    if len(src) != len(tgt):
        return []
    return [make_matching(a, b, zip(src, perm)) for perm in permutations(tgt)]


def dim_hom(a, b) -> int:
    a, b = parse_word(a), parse_word(b)
    src, tgt = sources_targets(a, b)
    if len(src) != len(tgt):
        return 0
    out = 1
    for k in range(2, len(src) + 1):
        out *= k
    return out


def strand_rank(src: Endpoint, tgt: Endpoint) -> tuple:
    """Layer key of an open strand; larger means higher (drawn over)."""
    if src[0] == "T" and tgt[0] == "B":
        return (4, -tgt[1])
    if src[0] == "B" and tgt[0] == "T":
        return (3, -src[1])
    if src[0] == "B":
        return (2, min(src[1], tgt[1]))
    return (1, min(src[1], tgt[1]))


# ------------------------------------------------------------------ analysis

@dataclass
class Analysis:
    matching: Matching
    num_components: int
    closed: int
    self_writhe: int
    violation: Optional[int]          # slice index of the first bad crossing


def analyze(bottom: str, slices) -> Analysis:
    letters = list(bottom)
    cur: List[int] = []
    start: List[tuple] = []
    end: List[Optional[tuple]] = []
    events: List[List[Tuple[int, bool]]] = []
    pletter: List[str] = []

    def new_piece(st, ch):
        start.append(st)
        end.append(None)
        events.append([])
        pletter.append(ch)
        return len(start) - 1

    for i, ch in enumerate(bottom):
        cur.append(new_piece(("B", i), ch))
    cup_piece: Dict[Tuple[int, int], int] = {}
    cap_piece: Dict[Tuple[int, int], int] = {}
    signs: Dict[int, int] = {}
    for k, (kind, p) in enumerate(slices):
        n = len(cur)
        if kind in CUPS:
            if not 1 <= p <= n + 1:
                raise DiagramError(f"slice {k}: {kind} {p} out of range")
            i = n - p + 1
            lets = CUP_LETTERS[kind]
            a = new_piece(("C", k, 0), lets[0])
            b = new_piece(("C", k, 1), lets[1])
            cup_piece[(k, 0)], cup_piece[(k, 1)] = a, b
            cur[i:i] = [a, b]
            letters[i:i] = list(lets)
            continue
        l = n - p - 1
        if p < 1 or l < 0:
            raise DiagramError(f"slice {k}: {kind} {p} out of range")
        if kind in CAPS:
            if letters[l] + letters[l + 1] != CAP_LETTERS[kind]:
                raise DiagramError(f"slice {k}: {kind} does not match letters")
            end[cur[l]] = ("K", k, 0)
            end[cur[l + 1]] = ("K", k, 1)
            cap_piece[(k, 0)], cap_piece[(k, 1)] = cur[l], cur[l + 1]
            del cur[l:l + 2]
            del letters[l:l + 2]
            continue
        if kind not in CROSSES:
            raise DiagramError(f"unknown slice kind {kind!r}")
        sign = 1 if kind == "x+" else -1
        so = slash_over(letters[l] + letters[l + 1], sign)
        events[cur[l]].append((k, so))
        events[cur[l + 1]].append((k, not so))
        signs[k] = sign
        cur[l], cur[l + 1] = cur[l + 1], cur[l]
        letters[l], letters[l + 1] = letters[l + 1], letters[l]
    for j, pc in enumerate(cur):
        end[pc] = ("T", j)
    top = "".join(letters)

    # traverse components
    comp_of = [-1] * len(start)
    comps: List[dict] = []

    def walk(pc: int, cid: int):
        passages = []
        first = pc
        while True:
            comp_of[pc] = cid
            if pletter[pc] == "u":
                passages.extend(events[pc])
                exit_pt = end[pc]
                if exit_pt[0] == "T":
                    return passages, ("T", exit_pt[1])
                nxt = cap_piece[(exit_pt[1], 1 - exit_pt[2])]
            else:
                passages.extend(reversed(events[pc]))
                exit_pt = start[pc]
                if exit_pt[0] == "B":
                    return passages, ("B", exit_pt[1])
                nxt = cup_piece[(exit_pt[1], 1 - exit_pt[2])]
            if nxt == first:
                return passages, None
            pc = nxt

    pairs = []
    for pc in range(len(start)):
        if pletter[pc] == "u" and start[pc][0] == "B":
            src = ("B", start[pc][1])
        elif pletter[pc] == "d" and end[pc][0] == "T":
            src = ("T", end[pc][1])
        else:
            continue
        cid = len(comps)
        passages, tgt = walk(pc, cid)
        pairs.append((src, tgt))
        comps.append({"rank": strand_rank(src, tgt), "passages": passages})
    open_count = len(comps)
    for pc in range(len(start)):
        if comp_of[pc] < 0:
            cid = len(comps)
            passages, _ = walk(pc, cid)
            comps.append({"rank": (0, -pc), "passages": passages})
    closed = len(comps) - open_count

    # per crossing: which components pass, and in which order
    seen: Dict[int, List[Tuple[int, int, bool]]] = {}
    for cid, c in enumerate(comps):
        for idx, (k, over) in enumerate(c["passages"]):
            seen.setdefault(k, []).append((cid, idx, over))
    violation = None
    self_writhe = 0
    for k in sorted(seen):
        (c1, i1, o1), (c2, i2, o2) = seen[k]
        if c1 == c2:
            self_writhe += signs[k]
            first_over = o1 if i1 < i2 else o2
            bad = not first_over
        else:
            over_c, under_c = (c1, c2) if o1 else (c2, c1)
            bad = comps[over_c]["rank"] < comps[under_c]["rank"]
        if bad and violation is None:
            violation = k
    return Analysis(make_matching(bottom, top, pairs), len(comps), closed, self_writhe, violation)


# ------------------------------------------------------------ canonical lift

def canonical_lift(m: Matching) -> Diagram:
    """Reduced triangular lift: caps at the bottom, then the propagating
    permutation, then cups at the top; crossing signs follow the layer order."""
    a, b = m.bottom, m.top
    comp_bottom: Dict[int, int] = {}
    comp_top: Dict[int, int] = {}
    ranks = []
    kinds = []
    for cid, (s, t) in enumerate(m.pairs):
        for e in (s, t):
            (comp_bottom if e[0] == "B" else comp_top)[e[1]] = cid
        ranks.append(strand_rank(s, t))
        kinds.append("cap" if s[0] == t[0] == "B" else "cup" if s[0] == t[0] == "T" else "prop")

    slices = []
    # stage 1: caps, bottom up
    cur = [comp_bottom[i] for i in range(len(a))]
    letters = list(a)
    while True:
        best = None
        for cid in set(cur):
            if kinds[cid] != "cap":
                continue
            i = cur.index(cid)
            j = len(cur) - 1 - cur[::-1].index(cid)
            if best is None or (j - i, i) < (best[1] - best[0], best[0]):
                best = (i, j, cid)
        if best is None:
            break
        i, j, cid = best
        for pos in range(j - 1, i, -1):
            other = cur[pos]
            over = ranks[other] > ranks[cid]          # '/' is the strand at pos
            sign = crossing_sign(letters[pos] + letters[pos + 1], over)
            slices.append(("x+" if sign > 0 else "x-", len(cur) - pos - 1))
            cur[pos], cur[pos + 1] = cur[pos + 1], cur[pos]
            letters[pos], letters[pos + 1] = letters[pos + 1], letters[pos]
        kind = "capr" if letters[i] + letters[i + 1] == "ud" else "capl"
        slices.append((kind, len(cur) - i - 1))
        del cur[i:i + 2]
        del letters[i:i + 2]

    # stage 3 computed first, top down, so stage 2 knows its target order
    top_cur = [comp_top[j] for j in range(len(b))]
    top_letters = list(b)
    down_ops = []
    while True:
        best = None
        for cid in set(top_cur):
            if kinds[cid] != "cup":
                continue
            i = top_cur.index(cid)
            j = len(top_cur) - 1 - top_cur[::-1].index(cid)
            if best is None or (j - i, i) < (best[1] - best[0], best[0]):
                best = (i, j, cid)
        if best is None:
            break
        i, j, cid = best
        for pos in range(j - 1, i, -1):
            other = top_cur[pos]
            # below this crossing cid sits at pos and runs up to pos + 1
            lower = top_letters[pos + 1] + top_letters[pos]
            over = ranks[cid] > ranks[other]
            sign = crossing_sign(lower, over)
            down_ops.append(("x+" if sign > 0 else "x-", len(top_cur) - pos - 1))
            top_cur[pos], top_cur[pos + 1] = top_cur[pos + 1], top_cur[pos]
            top_letters[pos], top_letters[pos + 1] = top_letters[pos + 1], top_letters[pos]
        kind = "cupr" if top_letters[i] + top_letters[i + 1] == "du" else "cupl"
        down_ops.append((kind, len(top_cur) - 2 - i + 1))
        del top_cur[i:i + 2]
        del top_letters[i:i + 2]

    # stage 2: bubble sort propagating strands into top_cur order
    target = {cid: k for k, cid in enumerate(top_cur)}
    if sorted(cur, key=target.__getitem__) != top_cur:
        raise AssertionError("propagating strands do not match")
    changed = True
    while changed:
        changed = False
        for pos in range(len(cur) - 2, -1, -1):
            if target[cur[pos]] > target[cur[pos + 1]]:
                over = ranks[cur[pos]] > ranks[cur[pos + 1]]
                sign = crossing_sign(letters[pos] + letters[pos + 1], over)
                slices.append(("x+" if sign > 0 else "x-", len(cur) - pos - 1))
                cur[pos], cur[pos + 1] = cur[pos + 1], cur[pos]
                letters[pos], letters[pos + 1] = letters[pos + 1], letters[pos]
                changed = True
                break
    slices.extend(reversed(down_ops))
    return Diagram(a, tuple(slices))


def lift_morphism(m: Matching, domain: Domain = SYMBOLIC) -> Morphism:
    return Morphism.from_diagram(canonical_lift(m), domain)


# ------------------------------------------------------------- normal form

class BasisExpansion:
    """Coefficients of a morphism in the canonical-lift basis of Hom(bottom, top)."""

    __slots__ = ("bottom", "top", "coeffs", "domain")

    def __init__(self, bottom: str, top: str, coeffs: Dict[Matching, object], domain: Domain):
        self.bottom, self.top, self.domain = bottom, top, domain
        self.coeffs = {m: c for m, c in coeffs.items() if c}

    def __eq__(self, other):
        if not isinstance(other, BasisExpansion) or (self.bottom, self.top) != (other.bottom, other.top):
            return False
        keys = set(self.coeffs) | set(other.coeffs)
        zero = self.domain.zero
        return all(self.coeffs.get(k, zero) == other.coeffs.get(k, zero) for k in keys)

    __hash__ = None

    def get(self, m: Matching):
        return self.coeffs.get(m, self.domain.zero)

    def __add__(self, other: "BasisExpansion") -> "BasisExpansion":
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out[k] + v if k in out else v
        return BasisExpansion(self.bottom, self.top, out, self.domain)

    def scale(self, c) -> "BasisExpansion":
        return BasisExpansion(self.bottom, self.top, {k: v * c for k, v in self.coeffs.items()}, self.domain)

    def to_morphism(self) -> Morphism:
        terms = {canonical_lift(m): c for m, c in self.coeffs.items()}
        return Morphism(self.bottom, self.top, terms, self.domain)

    def items(self):
        return sorted(self.coeffs.items(), key=lambda kv: kv[0].pairs)

    def vector(self, basis: List[Matching]):
        return [self.get(m) for m in basis]

    def __repr__(self):
        body = " + ".join(f"({self.domain.fmt(c)})*{list(m.pairs)}" for m, c in self.items()) or "0"
        return f"<{pretty(self.bottom)}->{pretty(self.top)}: {body}>"

    def to_json(self):
        return {
            "bottom": self.bottom,
            "top": self.top,
            "terms": [{"matching": m.describe(), "coeff": self.domain.to_json(c)} for m, c in self.items()],
        }

    @classmethod
    def from_json(cls, d, domain: Domain) -> "BasisExpansion":
        coeffs = {}
        for term in d["terms"]:
            m = Matching.from_json({"bottom": d["bottom"], "top": d["top"], "pairs": term["matching"]})
            coeffs[m] = domain.from_json(term["coeff"])
        return cls(d["bottom"], d["top"], coeffs, domain)


_MEMO: Dict[tuple, Dict[Matching, object]] = {}
_MEMO_LIMIT = 400000


def clear_cache():
    _MEMO.clear()


def _smooth(word_below: str, kind: str, p: int):
    l = len(word_below) - p - 1
    lets = word_below[l:l + 2]
    if lets[0] == lets[1]:
        return ()
    if lets == "ud":
        return (("capr", p), ("cupr", p))
    return (("capl", p), ("cupl", p))


def _nf(bottom: str, slices: tuple, dom: Domain) -> Dict[Matching, object]:
    key = (dom, bottom, slices)
    hit = _MEMO.get(key)
    if hit is not None:
        return hit
    an = analyze(bottom, slices)
    if an.violation is None:
        c = t_power(an.self_writhe, dom)
        if an.closed:
            c = c * bubble_value(dom) ** an.closed
        out = {an.matching: c}
    else:
        k = an.violation
        kind, p = slices[k]
        sign = 1 if kind == "x+" else -1
        switched = slices[:k] + (("x-" if sign > 0 else "x+", p),) + slices[k + 1:]
        w = bottom
        for sl in slices[:k]:
            w = apply_slice(w, sl)
        smoothed = slices[:k] + _smooth(w, kind, p) + slices[k + 1:]
        out = dict(_nf(bottom, switched, dom))
        zc = dom.z if sign > 0 else -dom.z
        for m, c in _nf(bottom, smoothed, dom).items():
            v = c * zc
            out[m] = out[m] + v if m in out else v
        out = {m: c for m, c in out.items() if c}
    if len(_MEMO) > _MEMO_LIMIT:
        _MEMO.clear()
    _MEMO[key] = out
    return out


def normal_form(f, domain: Optional[Domain] = None) -> BasisExpansion:
    """Expand a Morphism (or a bare Diagram) in the canonical-lift basis."""
    if isinstance(f, Diagram):
        f = Morphism.from_diagram(f, domain or SYMBOLIC)
    dom = f.domain
    out: Dict[Matching, object] = {}
    for d, c in f.terms.items():
        for m, v in _nf(d.bottom, d.slices, dom).items():
            val = v * c
            out[m] = out[m] + val if m in out else val
    return BasisExpansion(f.bottom, f.top, out, dom)


def evaluate_closed(f, domain: Optional[Domain] = None):
    if isinstance(f, Diagram):
        f = Morphism.from_diagram(f, domain or SYMBOLIC)
    if f.bottom or f.top:
        raise DiagramError("evaluate_closed needs a diagram with empty boundary")
    nf = normal_form(f)
    return nf.get(Matching("", "", ()))


def homfly(link, domain: Domain = SYMBOLIC, strands: Optional[int] = None):
    """HOMFLY-PT polynomial normalized so the unknot is 1.

    ``link`` is a closed Diagram, a PD string, or a braid word (list of ints)
    together with ``strands``."""
    if isinstance(link, Diagram):
        d = link
    elif isinstance(link, str):
        d = from_pd(link)
    else:
        d = from_braid(list(link), strands if strands is not None else max([abs(g) for g in link] + [0]) + 1)
    if not d.is_closed():
        raise DiagramError("homfly needs a closed diagram")
    w = diagram_writhe(d)
    val = evaluate_closed(d, domain) * t_power(-w, domain)
    delta = bubble_value(domain)
    if isinstance(domain, Specialized):
        if delta == 0:
            raise DegenerateParameterError("bubble value vanishes (t = +-1)")
        return val / delta
    return (val / delta).reduced()


def gram_matrix(a, b, domain: Domain = DEFAULT):
    a, b = parse_word(a), parse_word(b)
    basis = enumerate_matchings(a, b)
    lifts = [canonical_lift(m) for m in basis]
    rot = [tau_diagram(d) for d in lifts]
    out = []
    for d in lifts:
        row = []
        for r in rot:
            closed = close_right(Diagram(a, d.slices + r.slices))
            row.append(evaluate_closed(closed, domain))
        out.append(row)
    return out


def gram_rank(a, b, domain: Domain = DEFAULT) -> int:
    if not isinstance(domain, Specialized):
        raise DegenerateParameterError("rank is computed at a rational parameter point")
    return linalg.rank(gram_matrix(a, b, domain))


def words_upto(n: int) -> List[str]:
    out = [""]
    for k in range(1, n + 1):
        out += ["".join(w) for w in _words(k)]
    return out


def _words(k: int):
    if k == 0:
        yield ""
        return
    for w in _words(k - 1):
        yield w + "u"
        yield w + "d"


__all__ = [
    "Matching", "BasisExpansion", "analyze", "canonical_lift", "normal_form", "evaluate_closed",
    "homfly", "gram_matrix", "gram_rank", "enumerate_matchings", "dim_hom", "lift_morphism",
    "make_matching", "clear_cache", "words_upto", "RationalFunction",
]

"""Independent HOMFLY-PT evaluator working directly on PD codes.

Crossings are stored as (a, b, c, d, dir): the under strand runs a -> c, the
over strand runs d -> b when dir = +1 and b -> d when dir = -1; dir is also
the crossing sign.  Components are ordered by their smallest arc label and
traversed from the tail of that arc.  A diagram is descending when every
crossing is first met on the over strand (earlier components lie above later
ones); such a diagram is an unlink.  Otherwise the first offending crossing is
resolved with

    H(L+) = t^-2 H(L-) + t^-1 z H(L0),   H(L-) = t^2 H(L+) - t z H(L0).
"""
from __future__ import annotations

from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from .diagram import DiagramError, parse_pd, pd_orientation
from .ring import ONE, TINV, T, Z, LaurentPoly, RationalFunction

Crossing = Tuple[int, int, int, int, int]


def oriented_pd(text) -> Tuple[Crossing, ...]:
    crossings = parse_pd(text)
    if not crossings:
        return ()
    _, _, signs = pd_orientation(crossings)
    return tuple(tuple(cr) + (s,) for cr, s in zip(crossings, signs))


def _over_in(cr: Crossing) -> int:
    return 3 if cr[4] > 0 else 1


def _heads(crossings) -> Dict[int, Tuple[int, int]]:
    heads = {}
    for x, cr in enumerate(crossings):
        heads[cr[0]] = (x, 0)
        oi = _over_in(cr)
        heads[cr[oi]] = (x, oi)
    return heads


def _traverse(crossings):
    """Components as lists of (crossing, passed_over) in traversal order."""
    heads = _heads(crossings)
    labels = sorted(heads)
    seen = set()
    comps = []
    for start in labels:
        if start in seen:
            continue
        passages = []
        label = start
        while True:
            seen.add(label)
            x, slot = heads[label]
            passages.append((x, slot != 0))
            label = crossings[x][(slot + 2) % 4]
            if label == start:
                break
        comps.append(passages)
    return comps


def _switch(cr: Crossing) -> Crossing:
    a, b, c, d, s = cr
    if s > 0:
        return (d, a, b, c, -1)
    return (b, c, d, a, 1)


def _smooth(crossings, x) -> Tuple[Tuple[Crossing, ...], int]:
    a, b, c, d, s = crossings[x]
    over_in, over_out = (d, b) if s > 0 else (b, d)
    rest = [cr for k, cr in enumerate(crossings) if k != x]
    parent = {}

    def find(u):
        while parent.get(u, u) != u:
            u = parent[u]
        return u

    for u, v in ((a, over_out), (over_in, c)):
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    classes: Dict[int, List[int]] = {}
    for u in {a, b, c, d}:
        classes.setdefault(find(u), []).append(u)
    rename = {}
    loops = 0
    for members in classes.values():
        mset = set(members)
        count = sum(1 for cr in rest for v in cr[:4] if v in mset)
        if count == 0:
            loops += 1
        elif count == 2:
            rep = min(members)
            for u in members:
                rename[u] = rep
        else:
            raise DiagramError("inconsistent PD smoothing")
    new = tuple(tuple(rename.get(v, v) for v in cr[:4]) + (cr[4],) for cr in rest)
    return new, loops


_DELTA = RationalFunction(T - TINV, Z)


@lru_cache(maxsize=None)
def _unreduced(crossings: Tuple[Crossing, ...]) -> RationalFunction:
    """H times delta (so a split union of c unknots gives delta^c)."""
    if not crossings:
        return RationalFunction(ONE)
    comps = _traverse(crossings)
    first: Dict[int, Tuple[int, bool]] = {}
    bad = None
    for ci, passages in enumerate(comps):
        for x, over in passages:
            if x not in first:
                first[x] = (ci, over)
                if not over and bad is None:
                    bad = x
    if bad is None:
        return _DELTA ** len(comps)
    s = crossings[bad][4]
    switched = crossings[:bad] + (_switch(crossings[bad]),) + crossings[bad + 1:]
    smoothed, loops = _smooth(crossings, bad)
    h_sw = _unreduced(switched)
    h_sm = _unreduced(smoothed) * (_DELTA ** loops)
    if s > 0:
        return h_sw * RationalFunction(LaurentPoly.monomial(0, -2)) + h_sm * RationalFunction(TINV * Z)
    return h_sw * RationalFunction(LaurentPoly.monomial(0, 2)) - h_sm * RationalFunction(T * Z)


def homfly_pd(text) -> RationalFunction:
    """HOMFLY-PT of a PD code, normalised to 1 on the unknot."""
    crossings = oriented_pd(text)
    if not crossings:
        return RationalFunction(ONE)
    return (_unreduced(crossings) / _DELTA).reduced()


__all__ = ["homfly_pd", "oriented_pd"]

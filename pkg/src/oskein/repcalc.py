"""Bipartition graph, path characters, weights, flags and K0 classes.

Edges of the bipartition graph:

* lam -> mu with colour q^(2c) when mu adds an up-node of content c to lam;
* lam -> mu with colour t^-2 q^(-2c) when lam has one more down-node than mu,
  of content c.

A path from the empty bipartition spells a word: forward steps are up letters
and backward steps are down letters.  Step 1 is the rightmost letter of the
word.  Colours are compared as scalars of the ambient domain, so at t = +-q^n
the two colour families can coincide.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Dict, Iterable, List, NamedTuple, Optional, Tuple, Union

from .combinatorics import (EMPTY, Bipartition, SymTensor, add_node, addable, bigM, bipartitions,
                            chi, contents, nodes, num_syt, remove_node, removable)
from .diagram import parse_word
from .ring import SYMBOLIC, DegenerateParameterError, Domain, ParamProfile, Specialized


class Color(NamedTuple):
    """q^(2 exp) for kind 'up', t^-2 q^(-2 exp) for kind 'down'."""

    kind: str
    exp: int

    def __str__(self):
        if self.kind == "up":
            return "1" if self.exp == 0 else f"q^{2 * self.exp}"
        return "t^-2" if self.exp == 0 else f"t^-2*q^{-2 * self.exp}"

    def value(self, domain: Domain):
        if not isinstance(domain, Specialized):
            return self
        q, t = domain.q, domain.t
        if self.kind == "up":
            return q ** (2 * self.exp)
        return q ** (-2 * self.exp) / (t * t)


def color_key(c: Color, domain: Domain):
    return c.value(domain)


def format_key(k) -> str:
    return str(k)


class Edge(NamedTuple):
    src: Bipartition
    dst: Bipartition
    color: Color

    def to_json(self, domain: Domain = SYMBOLIC):
        return {"src": self.src.to_json(), "dst": self.dst.to_json(), "color": str(self.color),
                "value": format_key(color_key(self.color, domain)), "direction": "src->dst"}


def edges_from(lam: Bipartition) -> List[Edge]:
    """Edges joining lam to bipartitions with one more node.

    Up-nodes give edges out of lam; down-nodes give edges into lam."""
    out = []
    for (i, j) in addable(lam.up):
        out.append(Edge(lam, Bipartition(add_node(lam.up, i), lam.down), Color("up", j - i)))
    for (i, j) in addable(lam.down):
        out.append(Edge(Bipartition(lam.up, add_node(lam.down, i)), lam, Color("down", j - i)))
    return out


def out_edges(lam: Bipartition) -> List[Edge]:
    """Edges directed out of lam (add an up-node or remove a down-node)."""
    out = [e for e in edges_from(lam) if e.src == lam]
    for (i, j) in removable(lam.down):
        out.append(Edge(lam, Bipartition(lam.up, remove_node(lam.down, i)), Color("down", j - i)))
    return out


def in_edges(lam: Bipartition) -> List[Edge]:
    """Edges directed into lam (remove an up-node or add a down-node)."""
    out = [e for e in edges_from(lam) if e.dst == lam]
    for (i, j) in removable(lam.up):
        out.append(Edge(Bipartition(remove_node(lam.up, i), lam.down), lam, Color("up", j - i)))
    return out


def graph_edges(max_size: int) -> List[Edge]:
    """All edges between bipartitions of total size <= max_size."""
    out = []
    for n in range(max_size):
        for r in range(n + 1):
            for lam in bipartitions(r, n - r):
                out.extend(edges_from(lam))
    return out


# ------------------------------------------------------------------- paths

@dataclass(frozen=True)
class Step:
    letter: str       # 'u' forward, 'd' backward
    color: Color
    node: Bipartition  # bipartition reached


@dataclass(frozen=True)
class TypedPath:
    start: Bipartition
    steps: Tuple[Step, ...]

    @property
    def end(self) -> Bipartition:
        return self.steps[-1].node if self.steps else self.start

    def word(self) -> str:
        """Word spelled by the path (step 1 is the rightmost letter)."""
        return "".join(s.letter for s in reversed(self.steps))

    def type(self, domain: Domain = SYMBOLIC) -> Tuple[tuple, ...]:
        """Coloured word in step order: ((letter, colour key), ...)."""
        return tuple((s.letter, color_key(s.color, domain)) for s in self.steps)


def _moves(lam: Bipartition, letter: str) -> List[Tuple[Color, Bipartition]]:
    if letter == "u":
        return [(e.color, e.dst) for e in out_edges(lam)]
    return [(e.color, e.src) for e in in_edges(lam)]


def paths_from_empty(word) -> List[TypedPath]:
    word = parse_word(word)
    letters = list(reversed(word))
    paths = [TypedPath(EMPTY, ())]
    for letter in letters:
        nxt = []
        for p in paths:
            for color, node in _moves(p.end, letter):
                nxt.append(TypedPath(EMPTY, p.steps + (Step(letter, color, node),)))
        paths = nxt
    return paths


def paths_to(lam: Bipartition, word) -> List[TypedPath]:
    return [p for p in paths_from_empty(word) if p.end == lam]


def character_coeffs(lam: Bipartition, word, domain: Domain = SYMBOLIC) -> Dict[tuple, int]:
    """Coloured-word multiplicities in the formal character of the standard module."""
    return dict(Counter(p.type(domain) for p in paths_to(lam, word)))


def dim_standard(lam: Bipartition, word) -> int:
    """f^{up} f^{down} times the number of caps-only matchings out of the word."""
    word = parse_word(word)
    r, s = lam.rank
    U, D = word.count("u"), word.count("d")
    d = U - r
    if d < 0 or D - s != d:
        return 0
    return num_syt(lam.up) * num_syt(lam.down) * comb(U, d) * comb(D, d) * factorial(d)


# ----------------------------------------------------------------- weights

@dataclass(frozen=True)
class WeightVector:
    """sum of fundamental weights (keyed by colour) plus sum of simple roots."""

    fundamental: Tuple[Tuple[object, int], ...] = ()
    alpha: Tuple[Tuple[object, int], ...] = ()

    @staticmethod
    def make(fundamental: Dict, alpha: Dict) -> "WeightVector":
        def norm(d):
            return tuple(sorted(((k, v) for k, v in d.items() if v), key=lambda kv: str(kv[0])))
        return WeightVector(norm(fundamental), norm(alpha))

    def __add__(self, other: "WeightVector") -> "WeightVector":
        f = Counter(dict(self.fundamental))
        a = Counter(dict(self.alpha))
        for k, v in other.fundamental:
            f[k] += v
        for k, v in other.alpha:
            a[k] += v
        return WeightVector.make(f, a)

    def __neg__(self):
        return WeightVector.make({k: -v for k, v in self.fundamental}, {k: -v for k, v in self.alpha})

    def __sub__(self, other):
        return self + (-other)

    def alpha_dict(self) -> Dict:
        return dict(self.alpha)

    def __str__(self):
        parts = [f"{v}*Lambda[{k}]" for k, v in self.fundamental]
        parts += [f"{v}*alpha[{k}]" for k, v in self.alpha]
        return " + ".join(parts) or "0"

    def to_json(self):
        return {"fundamental": [[str(k), v] for k, v in self.fundamental],
                "alpha": [[str(k), v] for k, v in self.alpha]}


def wt(lam: Bipartition, domain: Domain = SYMBOLIC) -> Tuple[WeightVector, WeightVector, WeightVector]:
    one = color_key(Color("up", 0), domain)
    tm2 = color_key(Color("down", 0), domain)
    a_up = Counter(color_key(Color("up", c), domain) for c in contents(lam.up))
    a_down = Counter(color_key(Color("down", c), domain) for c in contents(lam.down))
    up = WeightVector.make({one: -1}, a_up)
    down = WeightVector.make({tm2: 1}, {k: -v for k, v in a_down.items()})
    return up, down, up + down


def weight_leq(mu: Bipartition, lam: Bipartition, domain: Domain = SYMBOLIC) -> bool:
    """wt(mu) <= wt(lam) in the inverse dominance order."""
    _, dmu, tmu = wt(mu, domain)
    _, dlam, tlam = wt(lam, domain)
    if tmu != tlam:
        return False
    diff = (dlam - dmu)
    if diff.fundamental:
        return False
    return all(v >= 0 for _, v in diff.alpha)


def check_linkage_invariant(maxlen: int, domain: Domain = SYMBOLIC) -> bool:
    return not linkage_failures(maxlen, domain)


def linkage_failures(maxlen: int, domain: Domain = SYMBOLIC) -> List[Tuple[Bipartition, Bipartition, tuple]]:
    by_type: Dict[tuple, set] = {}
    minimal: Dict[tuple, set] = {}
    frontier = [TypedPath(EMPTY, ())]
    for length in range(maxlen + 1):
        for p in frontier:
            ty = p.type(domain)
            by_type.setdefault(ty, set()).add(p.end)
            if sum(p.end.rank) == length:
                minimal.setdefault(ty, set()).add(p.end)
        if length == maxlen:
            break
        nxt = []
        for p in frontier:
            for letter in "ud":
                for color, node in _moves(p.end, letter):
                    nxt.append(TypedPath(EMPTY, p.steps + (Step(letter, color, node),)))
        frontier = nxt
    bad = []
    for ty, mus in minimal.items():
        for mu in mus:
            for lam in by_type[ty]:
                if not weight_leq(mu, lam, domain):
                    bad.append((mu, lam, ty))
    return bad


def blocks(max_size: int, domain: Domain = SYMBOLIC) -> List[List[Bipartition]]:
    """Bipartitions up to the given total size grouped by total weight."""
    groups: Dict[WeightVector, List[Bipartition]] = {}
    for n in range(max_size + 1):
        for r in range(n + 1):
            for lam in bipartitions(r, n - r):
                groups.setdefault(wt(lam, domain)[2], []).append(lam)
    return sorted(groups.values(), key=lambda g: (sum(g[0].rank), str(g[0])))


# --------------------------------------------------------- semisimplicity

def is_semisimple(q0=None, t0=None, guard: int = 12) -> Tuple[bool, str]:
    """Generic-parameter criterion at a rational point (q0, t0).

    A Specialized domain or a ParamProfile may be passed in place of q0."""
    if isinstance(q0, Specialized):
        q0, t0, guard = q0.profile.q0, q0.profile.t0, q0.profile.guard
    elif isinstance(q0, ParamProfile):
        q0, t0, guard = q0.q0, q0.t0, q0.guard
    q0, t0 = Fraction(q0), Fraction(t0)
    if q0 == 0 or t0 == 0:
        raise DegenerateParameterError("q and t must be invertible")
    if q0 in (1, -1):
        return False, f"q = {q0} is a root of unity"
    for n in sorted(range(-guard, guard + 1), key=lambda k: (abs(k), k < 0)):
        if t0 == q0 ** n:
            return False, f"t = q^{n}"
        if t0 == -(q0 ** n):
            return False, f"t = -q^{n}"
    return True, f"q is not a root of unity and t != +-q^n for |n| <= {guard}"


# ----------------------------------------------------------- K0 and flags

def flag_multiplicities(lam: Bipartition) -> List[Dict[Bipartition, int]]:
    r, s = lam.rank
    layers = []
    for d in range(min(r, s) + 1):
        layer = {}
        for mu in bipartitions(r - d, s - d):
            m = bigM(lam, mu)
            if m:
                layer[mu] = m
        layers.append(layer)
    return layers


def k0_class(lam: Bipartition) -> SymTensor:
    return chi(lam)


def pieri_check(lam: Bipartition) -> bool:
    """(s1 (x) 1) chi_lam = sum over out-edges, (1 (x) s1) chi_lam = sum over in-edges."""
    s_up = SymTensor.basis(Bipartition((1,), ()))
    s_dn = SymTensor.basis(Bipartition((), (1,)))
    lhs1 = s_up * chi(lam)
    rhs1 = SymTensor()
    for e in out_edges(lam):
        rhs1 = rhs1 + chi(e.dst)
    lhs2 = s_dn * chi(lam)
    rhs2 = SymTensor()
    for e in in_edges(lam):
        rhs2 = rhs2 + chi(e.src)
    return lhs1 == rhs1 and lhs2 == rhs2


__all__ = [
    "Color", "Edge", "Step", "TypedPath", "WeightVector", "edges_from", "out_edges", "in_edges",
    "graph_edges", "paths_to", "paths_from_empty", "character_coeffs", "dim_standard", "wt",
    "weight_leq", "check_linkage_invariant", "linkage_failures", "blocks", "is_semisimple",
    "flag_multiplicities", "k0_class", "pieri_check", "color_key",
]

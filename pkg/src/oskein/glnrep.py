"""Matrix oracle: the functor to tensor powers of the vector representation of
quantum gl_n and its dual, at q = q0 and t = q0^n.

Basis vectors of V^{a} for a word a are index tuples (i_1, ..., i_k) with
1 <= i <= n; the left letter is the outer (slowest varying) index.  Example for
the word "ud" with n = 2: the ordering is v1+v1-, v1+v2-, v2+v1-, v2+v2-.

Every slice is applied to sparse vectors.  Sideways and downward crossings are
first unfolded into cups, caps and upward crossings by rotation, so only the
R-matrix and the four (co)evaluation maps are ever used directly.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from . import linalg
from .diagram import (CAPS, CROSSES, CUPS, Diagram, DiagramError, Morphism, apply_slice, parse_word)
from .ring import DomainError, ParamProfile, Specialized

Vec = Dict[Tuple[int, ...], Fraction]


@dataclass(frozen=True)
class OracleConfig:
    n: int = 2
    q0: Fraction = Fraction(2)

    def __post_init__(self):
        object.__setattr__(self, "q0", Fraction(self.q0))
        if self.n < 1:
            raise ValueError("n must be positive")
        if self.q0 in (0, 1, -1):
            raise ValueError(f"q0 = {self.q0} is not generic")

    @property
    def t0(self) -> Fraction:
        return self.q0 ** self.n

    @property
    def z0(self) -> Fraction:
        return self.q0 - 1 / self.q0

    @property
    def domain(self) -> Specialized:
        return Specialized(ParamProfile(self.q0, self.t0))


def unfold_crossing(word: str, sl) -> List[Tuple[str, int]]:
    """Rewrite a crossing slice as slices whose crossings are all upward."""
    kind, p = sl
    w = len(word)
    l = w - p - 1
    pair = word[l:l + 2]
    if pair == "uu":
        return [sl]
    if pair == "ud":
        # cup on the left, upward crossing, cap on the right
        return [("cupr", w - l + 1), (kind, w - l), ("capr", w - l - 1)]
    if pair == "du":
        return [("cupl", w - l - 1), (kind, w - l), ("capl", w - l + 1)]
    # downward: nested cups on the left, crossing, nested caps
    return [("cupr", w - l + 1), ("cupr", w - l + 2), (kind, w - l + 1), ("capr", w - l), ("capr", w - l - 1)]


def _add(out: Vec, key, val):
    v = out.get(key, 0) + val
    if v:
        out[key] = v
    else:
        out.pop(key, None)


class _Maps:
    def __init__(self, cfg: OracleConfig):
        self.n = cfg.n
        self.q = cfg.q0
        self.z = cfg.z0
        q, n = self.q, self.n
        self.ev = {i: (-1) ** i * q ** (-i) for i in range(1, n + 1)}
        self.evp = {i: (-1) ** i * q ** (i - n - 1) for i in range(1, n + 1)}
        self.coev = [(j, (-1) ** j * q ** j) for j in range(1, n + 1)]
        self.coevp = [(j, (-1) ** j * q ** (n + 1 - j)) for j in range(1, n + 1)]

    def apply(self, word: str, sl, vec: Vec) -> Vec:
        kind, p = sl
        w = len(word)
        out: Vec = {}
        if kind in CUPS:
            i = w - p + 1
            pairs = self.coev if kind == "cupr" else self.coevp
            for key, c in vec.items():
                for j, s in pairs:
                    _add(out, key[:i] + (j, j) + key[i:], c * s)
            return out
        l = w - p - 1
        if kind in CAPS:
            table = self.ev if kind == "capr" else self.evp
            for key, c in vec.items():
                a, b = key[l], key[l + 1]
                if a == b:
                    _add(out, key[:l] + key[l + 2:], c * table[a])
            return out
        sign = 1 if kind == "x+" else -1
        for key, c in vec.items():
            a, b = key[l], key[l + 1]
            pre, post = key[:l], key[l + 2:]
            if a < b:
                _add(out, pre + (b, a) + post, c)
            elif a == b:
                _add(out, key, c * (self.q if sign > 0 else 1 / self.q))
            else:
                _add(out, pre + (b, a) + post, c)
                if sign > 0:
                    _add(out, key, c * self.z)
            if sign < 0 and a < b:
                # R^{-1} = R - z
                _add(out, key, -c * self.z)
        return out


def _basis(word: str, n: int) -> List[Tuple[int, ...]]:
    return list(product(range(1, n + 1), repeat=len(word)))


def _unfolded(d: Diagram) -> List[Tuple[str, Tuple[str, int]]]:
    steps = []
    w = d.bottom
    for sl in d.slices:
        seq = unfold_crossing(w, sl) if sl[0] in CROSSES else [sl]
        for s in seq:
            steps.append((w, s))
            w = apply_slice(w, s)
    return steps


def psi_diagram(d: Diagram, cfg: OracleConfig) -> List[List[Fraction]]:
    maps = _Maps(cfg)
    steps = _unfolded(d)
    src = _basis(d.bottom, cfg.n)
    tgt = _basis(d.top, cfg.n)
    index = {k: i for i, k in enumerate(tgt)}
    mat = linalg.zeros(len(tgt), len(src))
    for col, key in enumerate(src):
        vec: Vec = {key: Fraction(1)}
        for w, s in steps:
            vec = maps.apply(w, s, vec)
            if not vec:
                break
        for k, c in vec.items():
            mat[index[k]][col] += c
    return mat


def _check_domain(f: Morphism, cfg: OracleConfig):
    dom = f.domain
    if not isinstance(dom, Specialized) or dom.q != cfg.q0 or dom.t != cfg.t0:
        raise DomainError(f"morphism domain {dom!r} does not match the oracle point q={cfg.q0}, t={cfg.t0}")


def psi_evaluate(f, cfg: OracleConfig) -> List[List[Fraction]]:
    if isinstance(f, Diagram):
        return psi_diagram(f, cfg)
    _check_domain(f, cfg)
    rows = cfg.n ** len(f.top)
    cols = cfg.n ** len(f.bottom)
    out = linalg.zeros(rows, cols)
    for d, c in f.terms.items():
        out = linalg.add(out, psi_diagram(d, cfg), c)
    return out


# named generators of the presentation
GENERATORS = {
    "S": Diagram("uu", (("x+", 1),)),
    "S^-1": Diagram("uu", (("x-", 1),)),
    "T": Diagram("du", (("x-", 1),)),
    "T^-1": Diagram("ud", (("x+", 1),)),
    "C": Diagram("", (("cupr", 1),)),
    "D": Diagram("ud", (("capr", 1),)),
    "C'": Diagram("", (("cupl", 1),)),
    "D'": Diagram("du", (("capl", 1),)),
}


def rep_generator(name: str, cfg: OracleConfig) -> List[List[Fraction]]:
    if name not in GENERATORS:
        raise KeyError(f"unknown generator {name!r}; expected one of {sorted(GENERATORS)}")
    return psi_diagram(GENERATORS[name], cfg)


def psi_T_closed_form(cfg: OracleConfig) -> List[List[Fraction]]:
    """The image of T written out entrywise, for comparison with the unfolded one."""
    n, q, z = cfg.n, cfg.q0, cfg.z0
    src = _basis("du", n)
    index = {k: i for i, k in enumerate(src)}
    mat = linalg.zeros(n * n, n * n)
    for col, (i, j) in enumerate(src):
        if i != j:
            mat[index[(j, i)]][col] += 1
        else:
            mat[index[(i, i)]][col] += 1 / q
            for k in range(i + 1, n + 1):
                mat[index[(k, k)]][col] -= z * (-q) ** (i - k)
    return mat


def relation_residuals(cfg: OracleConfig) -> Dict[str, bool]:
    """Check the defining relations as matrix identities; True means it holds."""
    g = {k: rep_generator(k, cfg) for k in GENERATORS}
    n = cfg.n
    I1 = linalg.identity(n)
    I2 = linalg.identity(n * n)
    mm, kron = linalg.matmul, linalg.kron
    out = {}
    S = g["S"]
    out["quadratic"] = mm(S, S) == linalg.add(linalg.scalar_mul(cfg.z0, S), I2)
    S1, S2 = kron(S, I1), kron(I1, S)
    out["braid"] = mm(mm(S1, S2), S1) == mm(mm(S2, S1), S2)
    C, D = g["C"], g["D"]
    out["zigzag_up"] = mm(kron(D, I1), kron(I1, C)) == I1
    out["zigzag_down"] = mm(kron(I1, D), kron(C, I1)) == I1
    tinv = mm(mm(kron(kron(I1, I1), D), kron(kron(I1, S), I1)), kron(kron(C, I1), I1))
    T = g["T"]
    out["T_inverse_left"] = mm(tinv, T) == I2
    out["T_inverse_right"] = mm(T, tinv) == I2
    out["T_closed_form"] = T == psi_T_closed_form(cfg)
    delta = (cfg.t0 - 1 / cfg.t0) / cfg.z0
    out["dimension"] = linalg.scalar_mul(cfg.t0, mm(mm(D, T), C)) == [[delta]]
    out["leftward_cup"] = g["C'"] == linalg.scalar_mul(cfg.t0, mm(T, C))
    out["leftward_cap"] = g["D'"] == linalg.scalar_mul(cfg.t0, mm(D, T))
    return out


def oracle_check(f: Morphism, cfg: OracleConfig) -> bool:
    from .skein import normal_form
    expansion = normal_form(f).to_morphism()
    return psi_evaluate(f, cfg) == psi_evaluate(expansion, cfg)


def kernel_witness(cfg: OracleConfig) -> bool:
    """Psi kills the image of the antisymmetrizer on n+1 up strands."""
    from .hecke import iota, young_idempotent
    e = young_idempotent((1,) * (cfg.n + 1), cfg.domain)
    return linalg.is_zero(psi_evaluate(iota(e), cfg))


def lifts_independent(a, b, cfg: OracleConfig) -> bool:
    """Psi of the canonical lifts of Hom(a, b) are linearly independent."""
    from .skein import canonical_lift, enumerate_matchings
    a, b = parse_word(a), parse_word(b)
    rows = []
    for m in enumerate_matchings(a, b):
        mat = psi_diagram(canonical_lift(m), cfg)
        rows.append([x for row in mat for x in row])
    return linalg.rank(rows) == len(rows) if rows else True


def random_diagram(rng: random.Random, bottom: str, steps: int, max_width: int = 5,
                   top: Optional[str] = None) -> Diagram:
    """A random layered diagram; ends on ``top`` when given (caps/cups appended)."""
    word = bottom
    slices = []
    for _ in range(steps):
        w = len(word)
        choices = []
        if w >= 2:
            for l in range(w - 1):
                choices.append(("x+" if rng.random() < 0.5 else "x-", w - l - 1))
                pair = word[l:l + 2]
                if pair == "ud":
                    choices.append(("capr", w - l - 1))
                elif pair == "du":
                    choices.append(("capl", w - l - 1))
        if w + 2 <= max_width:
            for i in range(w + 1):
                choices.append((rng.choice(CUPS), w - i + 1))
        if not choices:
            break
        sl = rng.choice(choices)
        slices.append(sl)
        word = apply_slice(word, sl)
    if top is not None:
        slices.extend(_steer(word, top))
    d = Diagram(bottom, tuple(slices))
    d.validate()
    return d


def _steer(word: str, top: str) -> List[Tuple[str, int]]:
    """Caps and cups taking ``word`` to ``top`` when the letter counts allow."""
    out = []
    w = word
    if w.count("u") - w.count("d") != top.count("u") - top.count("d"):
        raise DiagramError("cannot steer: letter balance differs")
    # close everything with caps, moving letters next to each other by crossings
    while w:
        l = next((i for i in range(len(w) - 1) if w[i] != w[i + 1]), None)
        if l is None:
            break
        kind = "capr" if w[l:l + 2] == "ud" else "capl"
        out.append((kind, len(w) - l - 1))
        w = apply_slice(w, out[-1])
    # w is now all one letter; permute into top by adding cups and sorting with crossings
    target = top
    while len(w) < len(target):
        out.append(("cupr", 1))
        w = apply_slice(w, out[-1])
    for i in range(len(target)):
        if w[i] == target[i]:
            continue
        j = next(k for k in range(i + 1, len(w)) if w[k] == target[i])
        for pos in range(j - 1, i - 1, -1):
            out.append(("x+", len(w) - pos - 1))
            w = apply_slice(w, out[-1])
    assert w == target, (w, target)
    return out


__all__ = [
    "OracleConfig", "psi_evaluate", "psi_diagram", "rep_generator", "relation_residuals",
    "oracle_check", "kernel_witness", "lifts_independent", "psi_T_closed_form", "unfold_crossing",
    "random_diagram", "GENERATORS",
]

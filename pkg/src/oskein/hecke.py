"""Iwahori-Hecke algebras H_r with basis S_w, and their image in End(up^r).

Permutations are one-line tuples w = (w(1), ..., w(r)).  Strand j (numbered
right to left) at the bottom of the diagram of S_w ends at position w(j) on
top, and S_i is the positive crossing of strands i and i+1.  For a reduced
word w = s_{i1} ... s_{ik}, S_w = S_{i1} ... S_{ik} and S_{ik} is drawn
lowest.

H_r (x) H_s is realised as the block-preserving part of H_{r+s}, acting on
the word down^s up^r: positions 1..r are the upward strands, r+1..r+s the
downward ones (whose positive crossings satisfy the same relations).
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import linalg
from .combinatorics import Bipartition, conjugate, partition
from .diagram import Diagram, DiagramError, Morphism, parse_word
from .ring import SYMBOLIC, DegenerateParameterError, Domain, DomainError, Specialized

Perm = Tuple[int, ...]


# ---------------------------------------------------------------- permutations

def identity_perm(r: int) -> Perm:
    return tuple(range(1, r + 1))


def simple(i: int, r: int) -> Perm:
    w = list(range(1, r + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def compose_perm(u: Perm, v: Perm) -> Perm:
    """(u v)(j) = u(v(j))."""
    return tuple(u[v[j] - 1] for j in range(len(v)))


def inverse_perm(w: Perm) -> Perm:
    out = [0] * len(w)
    for j, x in enumerate(w):
        out[x - 1] = j + 1
    return tuple(out)


def times_simple(w: Perm, i: int) -> Perm:
    w = list(w)
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def length(w: Perm) -> int:
    return sum(1 for a in range(len(w)) for b in range(a + 1, len(w)) if w[a] > w[b])


@lru_cache(maxsize=None)
def reduced_word(w: Perm) -> Tuple[int, ...]:
    """Lexicographically minimal reduced word (i1, ..., ik) with w = s_i1 ... s_ik."""
    out = []
    w = tuple(w)
    while True:
        inv = inverse_perm(w)
        i = next((k for k in range(1, len(w)) if inv[k - 1] > inv[k]), None)
        if i is None:
            return tuple(out)
        out.append(i)
        w = compose_perm(simple(i, len(w)), w)


def perm_from_word(word: Sequence[int], r: int) -> Perm:
    w = identity_perm(r)
    for i in word:
        w = times_simple(w, i)
    return w


def all_perms(r: int) -> List[Perm]:
    return sorted(permutations(range(1, r + 1)))


def young_subgroup(comp: Sequence[int]) -> List[Perm]:
    """Permutations preserving consecutive blocks of the given sizes."""
    blocks = []
    start = 1
    for c in comp:
        blocks.append(list(range(start, start + c)))
        start += c
    r = start - 1
    out = []
    for choice in product(*[permutations(b) for b in blocks]):
        w = [0] * r
        for b, img in zip(blocks, choice):
            for src, dst in zip(b, img):
                w[src - 1] = dst
        out.append(tuple(w))
    return sorted(out)


# --------------------------------------------------------------- the algebra

class HeckeElement:
    __slots__ = ("r", "coeffs", "domain")

    def __init__(self, r: int, coeffs: Dict[Perm, object], domain: Domain = SYMBOLIC):
        self.r = r
        self.domain = domain
        self.coeffs = {tuple(w): c for w, c in coeffs.items() if c}
        for w in self.coeffs:
            if len(w) != r:
                raise ValueError(f"permutation {w} is not in S_{r}")

    @classmethod
    def basis(cls, w: Perm, domain: Domain = SYMBOLIC) -> "HeckeElement":
        return cls(len(w), {tuple(w): domain.one}, domain)

    @classmethod
    def one(cls, r: int, domain: Domain = SYMBOLIC) -> "HeckeElement":
        return cls(r, {identity_perm(r): domain.one}, domain)

    @classmethod
    def generator(cls, i: int, r: int, domain: Domain = SYMBOLIC) -> "HeckeElement":
        if not 1 <= i < r:
            raise ValueError(f"S_{i} is not a generator of H_{r}")
        return cls(r, {simple(i, r): domain.one}, domain)

    @classmethod
    def word(cls, word: Sequence[int], r: int, domain: Domain = SYMBOLIC) -> "HeckeElement":
        out = cls.one(r, domain)
        for i in word:
            if not 1 <= i < r:
                raise ValueError(f"S_{i} is not a generator of H_{r}")
            out = out.times_generator(i)
        return out

    def _check(self, other: "HeckeElement"):
        if self.r != other.r:
            raise ValueError(f"rank mismatch: H_{self.r} vs H_{other.r}")
        if self.domain != other.domain:
            raise DomainError("Hecke elements live in different scalar domains")

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        self._check(other)
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            out[w] = out[w] + c if w in out else c
        return HeckeElement(self.r, out, self.domain)

    def __neg__(self):
        return HeckeElement(self.r, {w: -c for w, c in self.coeffs.items()}, self.domain)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "HeckeElement":
        c = self.domain.coerce(c)
        return HeckeElement(self.r, {w: v * c for w, v in self.coeffs.items()}, self.domain)

    def times_generator(self, i: int) -> "HeckeElement":
        z = self.domain.z
        out: Dict[Perm, object] = {}
        for w, c in self.coeffs.items():
            ws = times_simple(w, i)
            out[ws] = out[ws] + c if ws in out else c
            if w[i - 1] > w[i]:
                out[w] = out[w] + z * c if w in out else z * c
        return HeckeElement(self.r, out, self.domain)

    def __mul__(self, other):
        if not isinstance(other, HeckeElement):
            return self.scale(other)
        return hecke_multiply(self, other)

    def __eq__(self, other):
        if not isinstance(other, HeckeElement) or self.r != other.r:
            return False
        keys = set(self.coeffs) | set(other.coeffs)
        zero = self.domain.zero
        return all(self.coeffs.get(k, zero) == other.coeffs.get(k, zero) for k in keys)

    __hash__ = None

    def get(self, w: Perm):
        return self.coeffs.get(tuple(w), self.domain.zero)

    def items(self):
        return sorted(self.coeffs.items(), key=lambda kv: (length(kv[0]), kv[0]))

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for w, c in self.items():
            word = reduced_word(w)
            name = "1" if not word else "S[" + ",".join(map(str, word)) + "]"
            parts.append(f"({self.domain.fmt(c)})*{name}")
        return " + ".join(parts)

    def to_json(self):
        return {"r": self.r, "terms": [{"perm": list(w), "coeff": self.domain.to_json(c)} for w, c in self.items()]}

    @classmethod
    def from_json(cls, data, domain: Domain = SYMBOLIC) -> "HeckeElement":
        return cls(int(data["r"]), {tuple(t["perm"]): domain.from_json(t["coeff"]) for t in data["terms"]}, domain)

    def vector(self, basis: Sequence[Perm]):
        return [self.get(w) for w in basis]


def basis_inverse(w: Perm, domain: Domain = SYMBOLIC) -> HeckeElement:
    """S_w^-1, using S_i^-1 = S_i - z."""
    r = len(w)
    out = HeckeElement.one(r, domain)
    for i in reversed(reduced_word(w)):
        out = out.times_generator(i) - out.scale(domain.z)
    return out


def hecke_multiply(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    a._check(b)
    out = HeckeElement(a.r, {}, a.domain)
    for v, c in b.coeffs.items():
        term = a
        for i in reduced_word(v):
            term = term.times_generator(i)
        out = out + term.scale(c)
    return out


def _require_q(domain: Domain):
    if not isinstance(domain, Specialized):
        raise DomainError("q is needed here; use a specialized domain")
    return domain.q


def symmetrizers(lam, domain: Domain) -> Tuple[HeckeElement, HeckeElement]:
    """x = sum q^l(w) S_w and y = sum (-q)^-l(w) S_w over the Young subgroup of lam."""
    q = _require_q(domain)
    lam = partition(lam)
    r = sum(lam)
    group = young_subgroup(lam) if r else [()]
    x = HeckeElement(r, {w: q ** length(w) for w in group}, domain)
    y = HeckeElement(r, {w: (-q) ** (-length(w)) for w in group}, domain)
    return x, y


def _reading_perm(lam) -> Perm:
    """d with d(k) = column-reading entry in the box holding k in row reading."""
    rows = {}
    k = 1
    for i, row in enumerate(lam):
        for j in range(row):
            rows[(i, j)] = k
            k += 1
    cols = {}
    k = 1
    for j, col in enumerate(conjugate(lam)):
        for i in range(col):
            cols[(i, j)] = k
            k += 1
    d = [0] * sum(lam)
    for box, a in rows.items():
        d[a - 1] = cols[box]
    return tuple(d)


_IDEMPOTENTS: Dict[tuple, HeckeElement] = {}


def young_idempotent(lam, domain: Domain) -> HeckeElement:
    """The idempotent e_lam in y_{lam^t} H_r x_lam (generic parameters)."""
    lam = partition(lam)
    key = (lam, domain)
    if key in _IDEMPOTENTS:
        return _IDEMPOTENTS[key]
    r = sum(lam)
    if r == 0:
        return HeckeElement(0, {(): domain.one}, domain)
    x, _ = symmetrizers(lam, domain)
    _, y = symmetrizers(conjugate(lam), domain)
    d = _reading_perm(lam)
    # y S_d x S_d^-1: the row symmetrizer is moved onto the column-reading
    # tableau, otherwise x y can vanish and no idempotent exists
    p = y * HeckeElement.basis(d, domain) * x * basis_inverse(d, domain)
    if not p:
        raise DegenerateParameterError(f"Young symmetrizer seed for {lam} vanishes")
    p2 = p * p
    w0, c0 = next(iter(p.coeffs.items()))
    tau = p2.get(w0) / c0
    if tau == 0:
        raise DegenerateParameterError(f"normalising scalar of e_{lam} vanishes")
    e = p.scale(1 / tau)
    if e * e != e:
        raise DegenerateParameterError(f"e_{lam} is not idempotent at these parameters")
    _IDEMPOTENTS[key] = e
    return e


def jm_L(r: int, domain: Domain = SYMBOLIC) -> HeckeElement:
    """L_r = S_{r-1} ... S_1 S_1 ... S_{r-1} in H_r (L_1 = 1)."""
    word = list(range(r - 1, 0, -1)) + list(range(1, r))
    return HeckeElement.word(word, r, domain)


def embed(h: HeckeElement, r_total: int, shift: int = 0) -> HeckeElement:
    """Place h on strands shift+1 .. shift+h.r of H_{r_total}."""
    out = {}
    for w, c in h.coeffs.items():
        full = list(range(1, r_total + 1))
        for j, x in enumerate(w):
            full[shift + j] = shift + x
        out[tuple(full)] = c
    return HeckeElement(r_total, out, h.domain)


def trivial_character(h: HeckeElement):
    q = _require_q(h.domain)
    return sum((c * q ** length(w) for w, c in h.coeffs.items()), Fraction(0))


def sign_character(h: HeckeElement):
    q = _require_q(h.domain)
    return sum((c * (-1 / q) ** length(w) for w, c in h.coeffs.items()), Fraction(0))


# ------------------------------------------------------- bridge to diagrams

def iota(h: HeckeElement, word: Optional[str] = None) -> Morphism:
    """Send S_i to the positive crossing at strand i (of up^r by default)."""
    word = parse_word(word) if word is not None else "u" * h.r
    if len(word) != h.r:
        raise DiagramError(f"word {word!r} has {len(word)} strands, element lives in H_{h.r}")
    terms = {}
    for w, c in h.coeffs.items():
        d = Diagram(word, tuple(("x+", i) for i in reversed(reduced_word(w))))
        d.validate()
        if d.top != word:
            raise DiagramError("permutation does not preserve the word")
        terms[d] = terms[d] + c if d in terms else c
    return Morphism(word, word, terms, h.domain)


def matching_perm(m) -> Optional[Perm]:
    """Permutation of a propagating endomorphism matching, or None."""
    n = len(m.bottom)
    w = [0] * n
    for s, t in m.pairs:
        if s[0] == t[0]:
            return None
        b, tp = (s, t) if s[0] == "B" else (t, s)
        w[n - b[1] - 1] = n - tp[1]
    return tuple(w)


def from_endomorphism(f, drop_nonpropagating: bool = False) -> HeckeElement:
    """Read an endomorphism of a word as an element of the Hecke algebra."""
    from .skein import BasisExpansion, normal_form
    nf = f if isinstance(f, BasisExpansion) else normal_form(f)
    if nf.bottom != nf.top:
        raise DiagramError("from_endomorphism needs equal bottom and top words")
    out = {}
    for m, c in nf.coeffs.items():
        w = matching_perm(m)
        if w is None:
            if drop_nonpropagating:
                continue
            raise DiagramError("expansion has cap/cup terms; not in the image of the Hecke algebra")
        out[w] = c
    return HeckeElement(len(nf.bottom), out, nf.domain)


# ------------------------------------------------------------ Specht modules

def bipartition_idempotent(lam: Bipartition, domain: Domain) -> HeckeElement:
    """e_{lam up} (x) e_{lam down} inside H_{r+s}, ups on strands 1..r."""
    r, s = lam.rank
    eu = embed(young_idempotent(lam.up, domain), r + s, 0)
    ed = embed(young_idempotent(lam.down, domain), r + s, r)
    return eu * ed


def block_perms(r: int, s: int) -> List[Perm]:
    return young_subgroup((r, s)) if r + s else [()]


class SpechtModule:
    """Right ideal e_lam H_{r,s} with a basis found by column reduction."""

    def __init__(self, lam: Bipartition, domain: Domain):
        self.lam = lam
        self.domain = domain
        r, s = lam.rank
        self.r, self.s = r, s
        self.index = block_perms(r, s)
        e = bipartition_idempotent(lam, domain)
        self.e = e
        basis: List[HeckeElement] = []
        rows: List[List[Fraction]] = []
        for w in self.index:
            v = e * HeckeElement.basis(w, domain) if w else e
            vec = v.vector(self.index)
            if linalg.rank(rows + [vec]) > len(rows):
                rows.append(vec)
                basis.append(v)
        self.basis = basis
        self._cols = rows

    def __len__(self):
        return len(self.basis)

    def coordinates(self, v: HeckeElement) -> List[Fraction]:
        sol = linalg.solve_in_span(self._cols, v.vector(self.index))
        if sol is None:
            raise ValueError("element is not in the Specht module")
        return sol

    def action_matrix(self, h: HeckeElement) -> List[List[Fraction]]:
        """Matrix of v -> v h; column j holds the coordinates of basis[j] * h."""
        cols = [self.coordinates(b * h) for b in self.basis]
        return linalg.transpose(cols) if cols else []


__all__ = [
    "Perm", "HeckeElement", "hecke_multiply", "symmetrizers", "young_idempotent", "jm_L", "iota",
    "from_endomorphism", "sign_character", "trivial_character", "reduced_word", "length", "all_perms",
    "simple", "compose_perm", "inverse_perm", "perm_from_word", "embed", "SpechtModule",
    "bipartition_idempotent", "matching_perm", "basis_inverse", "block_perms", "young_subgroup", "identity_perm",
]

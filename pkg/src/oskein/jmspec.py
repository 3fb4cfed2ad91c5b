"""Jucys-Murphy elements as diagrams, their spectra, and small standard modules.

X_i on a word (position i counted from the right) lets the strand at that
position travel to the right end and come back: an up strand goes over the
strands to its right and returns under them, a down strand does the mirror
image.  Every crossing is positive against an up strand and negative against
a down strand, and a down strand carries an extra factor t^-2.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from typing import Dict, List, Optional, Sequence, Tuple

from . import linalg
from .combinatorics import Bipartition
from .diagram import CROSSES, Diagram, DiagramError, Morphism, compose, parse_word
from .hecke import HeckeElement, SpechtModule, from_endomorphism, matching_perm, sign_character
from .repcalc import Color, color_key
from .ring import DEFAULT, DegenerateParameterError, Domain, ParamProfile, Specialized, t_power
from .skein import Matching, analyze, canonical_lift, enumerate_matchings, normal_form


class SpectrumError(ArithmeticError):
    """A Jucys-Murphy eigenvalue lies outside the expected colour set."""


def jm_diagram(word, position: int) -> Diagram:
    word = parse_word(word)
    W = len(word)
    if not 1 <= position <= W:
        raise DiagramError(f"position {position} outside 1..{W}")
    l = W - position
    slices = []
    for k in range(l, W - 1):
        other = word[k + 1]
        slices.append(("x+" if other == "u" else "x-", W - k - 1))
    for k in range(W - 2, l - 1, -1):
        other = word[k + 1]
        slices.append(("x+" if other == "u" else "x-", W - k - 1))
    return Diagram(word, tuple(slices))


def jm_morphism(word, position: int, domain: Domain = DEFAULT) -> Morphism:
    word = parse_word(word)
    d = jm_diagram(word, position)
    coeff = t_power(-2, domain) if word[len(word) - position] == "d" else domain.one
    return Morphism(word, word, {d: coeff}, domain)


def _basis_matrix(images, basis: List[Matching]) -> List[List]:
    cols = [img.vector(basis) for img in images]
    return linalg.transpose(cols) if cols else []


def jm_matrices(a, b=None, domain: Domain = DEFAULT) -> List[List[List[Fraction]]]:
    """Matrices of X_1..X_|a| acting on Hom(b, a) by post-composition."""
    a = parse_word(a)
    b = a if b is None else parse_word(b)
    basis = enumerate_matchings(b, a)
    lifts = [Morphism.from_diagram(canonical_lift(m), domain) for m in basis]
    out = []
    for i in range(1, len(a) + 1):
        X = jm_morphism(a, i, domain)
        out.append(_basis_matrix([normal_form(compose(X, f)) for f in lifts], basis))
    return out


def candidate_colors(length: int, domain: Specialized) -> List[Tuple[Color, Fraction]]:
    out = []
    seen = set()
    for kind in ("up", "down"):
        for n in range(-length, length + 1):
            c = Color(kind, n)
            v = color_key(c, domain)
            if v not in seen:
                seen.add(v)
                out.append((c, v))
    return out


def _restrict(A: List[List[Fraction]], V: List[List[Fraction]]) -> List[List[Fraction]]:
    """Matrix of A on the invariant subspace spanned by the columns V."""
    m = len(V)
    Vm = linalg.transpose(V)
    AV = linalg.matmul(A, Vm)
    aug = [list(Vm[i]) + list(AV[i]) for i in range(len(Vm))]
    red, piv = linalg.row_reduce(aug)
    if piv != list(range(m)):
        raise SpectrumError("subspace is not invariant")
    return [row[m:] for row in red[:m]]


def _generalized(A: List[List[Fraction]], values: Sequence[Fraction]) -> Dict[Fraction, List[List[Fraction]]]:
    m = len(A)
    out = {}
    for v in values:
        B = linalg.add(A, linalg.identity(m), -v)
        if not linalg.kernel(B, m):
            continue
        out[v] = linalg.kernel(linalg.matpow(B, m), m)
    return out


def simultaneous_spaces(mats: Sequence[List[List[Fraction]]], values: Sequence[Fraction],
                        dim: int) -> Dict[tuple, List[List[Fraction]]]:
    """Joint generalized eigenspaces: colour vector -> list of basis columns."""
    if not mats:
        return {(): linalg.identity(dim)} if dim else {(): []}
    spaces: Dict[tuple, List[List[Fraction]]] = {(): linalg.identity(dim)}
    for X in mats:
        nxt = {}
        for key, V in spaces.items():
            R = _restrict(X, V)
            for v, K in _generalized(R, values).items():
                # back to ambient coordinates
                nxt[key + (v,)] = [[sum((V[j][i] * c[j] for j in range(len(V))), Fraction(0))
                                    for i in range(dim)] for c in K]
        spaces = nxt
    total = sum(len(b) for b in spaces.values())
    if total != dim:
        raise SpectrumError(f"generalized eigenspaces cover {total} of {dim} dimensions")
    return spaces


def projectors(spaces: Dict[tuple, List[List[Fraction]]], dim: int) -> Dict[tuple, List[List[Fraction]]]:
    keys = sorted(spaces, key=str)
    cols = [c for k in keys for c in spaces[k]]
    if not cols:
        return {}
    B = linalg.transpose(cols)
    Binv = linalg.inverse(B)
    out = {}
    start = 0
    for k in keys:
        n = len(spaces[k])
        D = linalg.zeros(dim, dim)
        for i in range(start, start + n):
            D[i][i] = Fraction(1)
        out[k] = linalg.matmul(linalg.matmul(B, D), Binv)
        start += n
    return out


def weight_idempotents(a, domain: Specialized = DEFAULT) -> Dict[tuple, List[List[Fraction]]]:
    """Projectors of End(a) onto the joint generalized eigenspaces of X_1..X_|a|."""
    a = parse_word(a)
    mats = jm_matrices(a, a, domain)
    dim = len(enumerate_matchings(a, a))
    values = [v for _, v in candidate_colors(len(a), domain)]
    return projectors(simultaneous_spaces(mats, values, dim), dim)


def spectrum(mat: List[List[Fraction]], values: Sequence[Fraction]) -> Dict[Fraction, int]:
    n = len(mat)
    out = {v: len(k) for v, k in _generalized(mat, values).items() if k}
    if sum(out.values()) != n:
        raise SpectrumError("eigenvalue outside the candidate set")
    return out


# ------------------------------------------------------ standard modules

def _inverse_braid(d: Diagram) -> Diagram:
    if any(k not in CROSSES for k, _ in d.slices):
        raise DiagramError("only crossing diagrams can be inverted this way")
    flipped = tuple(("x-" if k == "x+" else "x+", p) for k, p in reversed(d.slices))
    return Diagram(d.top, flipped)


def _shuffle_matching(b: str, target: str) -> Matching:
    """Order-preserving propagating matching b -> target (same letters)."""
    ups_b = [i for i, ch in enumerate(b) if ch == "u"]
    ups_t = [i for i, ch in enumerate(target) if ch == "u"]
    dn_b = [i for i, ch in enumerate(b) if ch == "d"]
    dn_t = [i for i, ch in enumerate(target) if ch == "d"]
    pairs = [(("B", i), ("T", j)) for i, j in zip(ups_b, ups_t)]
    pairs += [(("T", j), ("B", i)) for i, j in zip(dn_b, dn_t)]
    from .skein import make_matching
    return make_matching(b, target, pairs)


def caps_only_matchings(a: str, r: int, s: int) -> List[Matching]:
    """Caps-only matchings out of a with order-preserving propagating part."""
    out = []
    words = sorted({"".join(p) for p in permutations("u" * r + "d" * s)}) if r + s else [""]
    for b in words:
        for m in enumerate_matchings(a, b):
            if any(x[0] == "T" and y[0] == "T" for x, y in m.pairs):
                continue
            props = sorted((x[1], y[1]) if x[0] == "B" else (y[1], x[1])
                           for x, y in m.pairs if x[0] != y[0])
            if all(props[k][1] < props[k + 1][1] for k in range(len(props) - 1)):
                out.append(m)
    return out


def _split_lift(m: Matching) -> Tuple[Diagram, Diagram]:
    """Canonical lift = (permutation part) after (caps part)."""
    d = canonical_lift(m)
    last = max((k for k, (kind, _) in enumerate(d.slices) if kind.startswith("cap")), default=-1)
    caps = Diagram(d.bottom, d.slices[:last + 1])
    perm = Diagram(caps.top, d.slices[last + 1:])
    return caps, perm


class StandardModule:
    """Delta(lam) 1_a at generic parameters, with the X_i acting on the right."""

    def __init__(self, lam: Bipartition, a, domain: Specialized = DEFAULT, max_word: int = 5):
        a = parse_word(a)
        if sum(lam.rank) > 3 or len(a) > max_word:
            raise ValueError("realize_standard is limited to |lam| <= 3 and short words")
        if not isinstance(domain, Specialized):
            raise DegenerateParameterError("standard modules are realised at a rational point")
        self.lam, self.a, self.domain = lam, a, domain
        r, s = lam.rank
        self.N = "d" * s + "u" * r
        self.specht = SpechtModule(lam, domain)
        self.matchings = caps_only_matchings(a, r, s)
        self.index = {m: k for k, m in enumerate(self.matchings)}
        for m in self.matchings:
            caps, perm = _split_lift(m)
            if perm.slices:
                raise AssertionError("caps-only lift has a permutation part")
        self._hecke_cache: Dict[tuple, HeckeElement] = {}

    @property
    def dim(self) -> int:
        return len(self.specht) * len(self.matchings)

    def _to_N(self, b: str) -> Diagram:
        return canonical_lift(_shuffle_matching(b, self.N))

    def _hecke_part(self, perm: Diagram) -> HeckeElement:
        key = (perm.bottom, perm.slices)
        if key not in self._hecke_cache:
            up = self._to_N(perm.top)
            down = _inverse_braid(self._to_N(perm.bottom))
            d = Diagram(down.bottom, down.slices + perm.slices + up.slices)
            nf = normal_form(Morphism.from_diagram(d, self.domain))
            self._hecke_cache[key] = from_endomorphism(nf, drop_nonpropagating=True)
        return self._hecke_cache[key]

    def action(self, f: Morphism) -> List[List[Fraction]]:
        """Matrix of right multiplication by an endomorphism f of a."""
        if f.bottom != self.a or f.top != self.a:
            raise DiagramError("expected an endomorphism of the module's word")
        nsp = len(self.specht)
        dim = self.dim
        M = linalg.zeros(dim, dim)
        for gi, g in enumerate(self.matchings):
            comp = compose(Morphism.from_diagram(canonical_lift(g), self.domain), f)
            for m, c in normal_form(comp).coeffs.items():
                if any(x[0] == "T" and y[0] == "T" for x, y in m.pairs):
                    continue
                caps, perm = _split_lift(m)
                target = self.index[analyze(caps.bottom, caps.slices).matching]
                h = self._hecke_part(perm)
                A = self.specht.action_matrix(h)
                for j in range(nsp):
                    for jj in range(nsp):
                        if A[jj][j]:
                            M[target * nsp + jj][gi * nsp + j] += c * A[jj][j]
        return M

    def jm_matrices(self) -> List[List[List[Fraction]]]:
        return [self.action(jm_morphism(self.a, i, self.domain)) for i in range(1, len(self.a) + 1)]

    def eigenspace_ranks(self) -> Dict[tuple, int]:
        """Colour vector (step order, as scalars) -> rank of the joint generalized eigenspace."""
        values = [v for _, v in candidate_colors(len(self.a) + 2, self.domain)]
        spaces = simultaneous_spaces(self.jm_matrices(), values, self.dim)
        return {k: len(v) for k, v in spaces.items()}


def realize_standard(lam: Bipartition, a, domain: Specialized = DEFAULT) -> StandardModule:
    return StandardModule(lam, a, domain)


# ------------------------------------------------------- shortest word example

def shortest_word_cap(i: int, n: int) -> Diagram:
    """Cap from a leading down strand to the up strand after i others, over them."""
    word = "d" + "u" * (n + 1)
    W = len(word)
    slices = []
    for k in range(i, 0, -1):
        # the cap strand at ltr k+1 moves left over the strand at ltr k
        slices.append(("x-", W - k - 1))
    slices.append(("capl", W - 1))
    return Diagram(word, tuple(slices))


def shortest_word_cup(j: int, n: int) -> Diagram:
    """Cup to a leading down strand, its up end passing over j strands."""
    word = "u" * n
    slices = [("cupr", n + 1)]
    W = n + 2
    for k in range(1, j + 1):
        slices.append(("x+", W - k - 1))
    return Diagram(word, tuple(slices))


def shortest_word_scalar(i: int, j: int, n: int, q0=Fraction(2)) -> Fraction:
    """Sign character of a_i b_j (b_j below a_i) in End(up^n) at t = q^n."""
    dom = Specialized(ParamProfile(q0, Fraction(q0) ** n))
    b = Morphism.from_diagram(shortest_word_cup(j, n), dom)
    a = Morphism.from_diagram(shortest_word_cap(i, n), dom)
    return sign_character(from_endomorphism(compose(a, b)))


def shortest_word_expected(i: int, j: int, n: int, q0=Fraction(2)) -> Fraction:
    q = Fraction(q0)
    if i == j:
        return sum((q ** (n - 1 - 2 * k) for k in range(n)), Fraction(0))
    if i < j:
        return q ** n * (-q) ** (i - j + 1)
    return q ** (-n) * (-q) ** (i - j - 1)


__all__ = [
    "jm_diagram", "jm_morphism", "jm_matrices", "weight_idempotents", "realize_standard",
    "StandardModule", "simultaneous_spaces", "projectors", "spectrum", "candidate_colors",
    "caps_only_matchings", "shortest_word_cap", "shortest_word_cup", "shortest_word_scalar",
    "shortest_word_expected", "SpectrumError",
]

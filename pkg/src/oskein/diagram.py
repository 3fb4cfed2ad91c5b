"""Layered framed oriented tangle diagrams and linear combinations of them.

Conventions
-----------
* A word is a string over ``u`` (up) and ``d`` (down), read left to right;
  the tensor product ``f (x) g`` puts f on the LEFT, so words concatenate.
* Slice positions are 1-based and counted from the RIGHT: ``P - 1`` strands
  lie to the right of the generator.  Cups at ``P`` create the strands that end
  up at positions P and P+1 above them.
* Kinds: ``cupr`` creates ``du``, ``cupl`` creates ``ud``, ``capr`` closes
  ``ud``, ``capl`` closes ``du``, ``x+``/``x-`` cross two adjacent strands with
  the given crossing sign.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from .ring import SYMBOLIC, Domain, DomainError, Specialized, ParamProfile

CUPS = ("cupr", "cupl")
CAPS = ("capr", "capl")
CROSSES = ("x+", "x-")
KINDS = CUPS + CAPS + CROSSES
CUP_LETTERS = {"cupr": "du", "cupl": "ud"}
CAP_LETTERS = {"capr": "ud", "capl": "du"}


class DiagramError(ValueError):
    """Malformed diagram, word, slice or link presentation."""


def parse_word(w) -> str:
    if isinstance(w, (list, tuple)):
        w = " ".join(w)
    s = w.replace("↑", "u").replace("↓", "d").replace(" ", "").replace(",", "").lower()
    if s in ("", "0", "empty", "∅"):
        return ""
    if any(ch not in "ud" for ch in s):
        raise DiagramError(f"bad word {w!r}")
    return s


def flip(word: str) -> str:
    return word.translate(str.maketrans("ud", "du"))


def pretty(word: str) -> str:
    return word.replace("u", "↑").replace("d", "↓") or "∅"


Slice = Tuple[str, int]


def ltr_index(width: int, pos: int) -> int:
    """Left index of a two-strand generator at right-to-left position pos."""
    return width - pos - 1


def apply_slice(word: str, sl: Slice) -> str:
    kind, p = sl
    n = len(word)
    if kind in CUPS:
        if not 1 <= p <= n + 1:
            raise DiagramError(f"{kind} {p} out of range on width {n}")
        i = n - p + 1
        return word[:i] + CUP_LETTERS[kind] + word[i:]
    if kind not in KINDS:
        raise DiagramError(f"unknown slice kind {kind!r}")
    l = n - p - 1
    if p < 1 or l < 0:
        raise DiagramError(f"{kind} {p} out of range on width {n}")
    if kind in CAPS:
        if word[l:l + 2] != CAP_LETTERS[kind]:
            raise DiagramError(f"{kind} {p} needs {CAP_LETTERS[kind]} but sees {word[l:l + 2]}")
        return word[:l] + word[l + 2:]
    return word[:l] + word[l + 1] + word[l] + word[l + 2:]


def crossing_sign(letters: str, slash_over: bool) -> int:
    """Sign of a crossing on two letters (left, right) given which strand is over.

    '/' is the strand from bottom-left to top-right; '/' is over exactly when
    sign == u*v with u, v = +1 for up letters.
    """
    uv = (1 if letters[0] == "u" else -1) * (1 if letters[1] == "u" else -1)
    return uv if slash_over else -uv


def slash_over(letters: str, sign: int) -> bool:
    uv = (1 if letters[0] == "u" else -1) * (1 if letters[1] == "u" else -1)
    return sign == uv


@dataclass(frozen=True)
class Diagram:
    bottom: str
    slices: Tuple[Slice, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "slices", tuple((k, int(p)) for k, p in self.slices))

    def words(self) -> List[str]:
        out = [self.bottom]
        w = self.bottom
        for sl in self.slices:
            w = apply_slice(w, sl)
            out.append(w)
        return out

    @property
    def top(self) -> str:
        w = self.bottom
        for sl in self.slices:
            w = apply_slice(w, sl)
        return w

    def validate(self) -> "Diagram":
        self.words()
        return self

    def then(self, other: "Diagram") -> "Diagram":
        """Stack ``other`` on top of self (other o self)."""
        if self.top != other.bottom:
            raise DiagramError(f"boundary mismatch {pretty(self.top)} vs {pretty(other.bottom)}")
        return Diagram(self.bottom, self.slices + other.slices)

    def num_crossings(self) -> int:
        return sum(1 for k, _ in self.slices if k in CROSSES)

    def is_closed(self) -> bool:
        return self.bottom == "" and self.top == ""

    def to_dsl(self) -> str:
        lines = ["obj: " + " ".join(self.bottom)]
        lines += [f"{k} {p}" for k, p in self.slices]
        return "\n".join(lines)

    def to_json(self):
        return {"bottom": self.bottom, "slices": [[k, p] for k, p in self.slices]}

    @classmethod
    def from_json(cls, d) -> "Diagram":
        return cls(d["bottom"], tuple((k, int(p)) for k, p in d["slices"])).validate()


def identity_diagram(word: str) -> Diagram:
    return Diagram(parse_word(word), ())


def tensor_diagrams(f: Diagram, g: Diagram) -> Diagram:
    """f (x) g with f on the left: run g first, then f shifted past g's strands."""
    shift = len(g.top)
    return Diagram(f.bottom + g.bottom, g.slices + tuple((k, p + shift) for k, p in f.slices))


def shift_diagram(f: Diagram, left: str = "", right: str = "") -> Diagram:
    """1_left (x) f (x) 1_right."""
    return Diagram(left + f.bottom + right, tuple((k, p + len(right)) for k, p in f.slices))


# ---------------------------------------------------------------- morphisms

@dataclass(frozen=True)
class ParamTransform:
    """(z, t) -> (z_sign*z, t_sign*t^{+-1}) induced by a symmetry."""

    z_sign: int = 1
    t_sign: int = 1
    t_invert: bool = False

    def describe(self) -> str:
        z = "z" if self.z_sign > 0 else "-z"
        t = "t^-1" if self.t_invert else "t"
        t = t if self.t_sign > 0 else "-" + t
        return f"({z},{t})"

    def domain(self, dom: Domain) -> Domain:
        if not isinstance(dom, Specialized):
            return dom
        p = dom.profile
        q0 = p.q0 if self.z_sign > 0 else -p.q0
        t0 = 1 / p.t0 if self.t_invert else p.t0
        t0 = t0 if self.t_sign > 0 else -t0
        return Specialized(ParamProfile(q0, t0, p.guard))

    def scalar(self, x, dom: Domain):
        if isinstance(dom, Specialized):
            return x
        return x.substitute(z_sign=self.z_sign, t_sign=self.t_sign, t_invert=self.t_invert)

    def __call__(self, other: "ParamTransform") -> "ParamTransform":
        # composition self o other: z and t maps compose
        t_sign = self.t_sign * other.t_sign
        return ParamTransform(self.z_sign * other.z_sign, t_sign, self.t_invert != other.t_invert)


class Morphism:
    """A finite linear combination of diagrams sharing boundary words."""

    __slots__ = ("bottom", "top", "terms", "domain")

    def __init__(self, bottom: str, top: str, terms: Dict[Diagram, object], domain: Domain = SYMBOLIC):
        self.bottom = bottom
        self.top = top
        self.domain = domain
        clean = {}
        for d, c in terms.items():
            if d.bottom != bottom or d.top != top:
                raise DiagramError("all diagrams of a morphism must share boundary words")
            c = domain.coerce(c)
            if c:
                clean[d] = c
        self.terms = clean

    @classmethod
    def from_diagram(cls, d: Diagram, domain: Domain = SYMBOLIC, coeff=1) -> "Morphism":
        d.validate()
        return cls(d.bottom, d.top, {d: coeff}, domain)

    @classmethod
    def identity(cls, word: str, domain: Domain = SYMBOLIC) -> "Morphism":
        w = parse_word(word)
        return cls(w, w, {Diagram(w): 1}, domain)

    @classmethod
    def zero(cls, bottom: str, top: str, domain: Domain = SYMBOLIC) -> "Morphism":
        return cls(bottom, top, {}, domain)

    def _check(self, other: "Morphism"):
        if self.domain != other.domain:
            raise DomainError("morphisms live over different scalar domains")

    def __add__(self, other: "Morphism") -> "Morphism":
        self._check(other)
        if (self.bottom, self.top) != (other.bottom, other.top):
            raise DiagramError("cannot add morphisms with different boundaries")
        out = dict(self.terms)
        for d, c in other.terms.items():
            out[d] = out[d] + c if d in out else c
        return Morphism(self.bottom, self.top, out, self.domain)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "Morphism":
        c = self.domain.coerce(c)
        return Morphism(self.bottom, self.top, {d: v * c for d, v in self.terms.items()}, self.domain)

    def __rmul__(self, c):
        return self.scale(c)

    def __matmul__(self, other: "Morphism") -> "Morphism":
        return compose(self, other)

    def __repr__(self):
        return f"Morphism({pretty(self.bottom)}->{pretty(self.top)}, {len(self.terms)} terms)"

    def to_json(self):
        return {
            "bottom": self.bottom,
            "top": self.top,
            "terms": [{"diagram": d.to_json(), "coeff": self.domain.to_json(c)}
                      for d, c in sorted(self.terms.items(), key=lambda kv: (kv[0].slices,))],
        }


def compose(f: Morphism, g: Morphism) -> Morphism:
    """f o g: g below, f stacked on top."""
    f._check(g)
    if g.top != f.bottom:
        raise DiagramError(f"boundary mismatch: {pretty(g.top)} vs {pretty(f.bottom)}")
    out: Dict[Diagram, object] = {}
    for dg, cg in g.terms.items():
        for df, cf in f.terms.items():
            d = Diagram(dg.bottom, dg.slices + df.slices)
            c = cg * cf
            out[d] = out[d] + c if d in out else c
    return Morphism(g.bottom, f.top, out, f.domain)


def tensor(f: Morphism, g: Morphism) -> Morphism:
    f._check(g)
    out: Dict[Diagram, object] = {}
    for df, cf in f.terms.items():
        for dg, cg in g.terms.items():
            d = tensor_diagrams(df, dg)
            c = cf * cg
            out[d] = out[d] + c if d in out else c
    return Morphism(f.bottom + g.bottom, f.top + g.top, out, f.domain)


# --------------------------------------------------------------- symmetries

_TAU_KIND = {"cupr": "capl", "cupl": "capr", "capr": "cupl", "capl": "cupr", "x+": "x+", "x-": "x-"}
_RHO_KIND = {"cupr": "cupl", "cupl": "cupr", "capr": "capl", "capl": "capr", "x+": "x+", "x-": "x-"}
_OMEGA_KIND = {"x+": "x-", "x-": "x+"}

PARAMS = {
    "tau": ParamTransform(),
    "rho": ParamTransform(),
    "sigma": ParamTransform(-1, -1, False),
    "omega": ParamTransform(-1, 1, True),
    "pi": ParamTransform(1, -1, False),
    "sharp": ParamTransform(1, 1, True),
}


def tau_diagram(d: Diagram) -> Diagram:
    """Rotate through 180 degrees about the horizontal axis (contravariant)."""
    return Diagram(d.top, tuple((_TAU_KIND[k], p) for k, p in reversed(d.slices)))


def rho_diagram(d: Diagram) -> Diagram:
    return Diagram(flip(d.bottom), tuple((_RHO_KIND[k], p) for k, p in d.slices))


def omega_diagram(d: Diagram) -> Diagram:
    return Diagram(d.bottom, tuple((_OMEGA_KIND.get(k, k), p) for k, p in d.slices))


def symmetry_sign(name: str, d: Diagram) -> int:
    crossings = d.num_crossings()
    leftward = sum(1 for k, _ in d.slices if k in ("cupl", "capl"))
    if name == "sigma":
        return (-1) ** crossings
    if name == "pi":
        return (-1) ** leftward
    if name == "sharp":
        return (-1) ** (crossings + leftward)
    return 1


def symmetry_diagram(name: str, d: Diagram) -> Tuple[Diagram, int]:
    if name == "tau":
        return tau_diagram(d), 1
    if name == "rho":
        return rho_diagram(d), 1
    if name in ("omega", "sharp"):
        return omega_diagram(d), symmetry_sign(name, d)
    if name in ("sigma", "pi"):
        return d, symmetry_sign(name, d)
    raise ValueError(f"unknown symmetry {name!r}")


def apply_symmetry(name: str, f: Morphism) -> Tuple[Morphism, ParamTransform]:
    """Apply one of tau, rho, sigma, omega, pi, sharp.

    The result lives over the transformed parameters; symbolic coefficients
    are rewritten in the target's own (z, t) and specialized ones keep their
    value while the parameter point moves.
    """
    pt = PARAMS[name]
    dom = pt.domain(f.domain)
    out: Dict[Diagram, object] = {}
    for d, c in f.terms.items():
        d2, sign = symmetry_diagram(name, d)
        out[d2] = pt.scalar(c, f.domain) * sign
    if name == "tau":
        return Morphism(f.top, f.bottom, out, dom), pt
    if name == "rho":
        return Morphism(flip(f.bottom), flip(f.top), out, dom), pt
    return Morphism(f.bottom, f.top, out, dom), pt


# ------------------------------------------------------- closures and links

def close_right(d: Diagram) -> Diagram:
    """Nested rightward closure of an endomorphism diagram."""
    a = d.bottom
    if d.top != a:
        raise DiagramError("closure needs an endomorphism")
    n = len(a)
    slices: List[Slice] = []
    for k, letter in enumerate(a):
        slices.append(("cupl" if letter == "u" else "cupr", k + 1))
    slices += [(kind, p + n) for kind, p in d.slices]
    for k in range(n, 0, -1):
        slices.append(("capr" if a[k - 1] == "u" else "capl", k))
    return Diagram("", tuple(slices))


def from_braid(word: Sequence[int], strands: int, closed: bool = True) -> Diagram:
    """Braid generators i > 0 are positive crossings of strands i, i+1
    (numbered right to left); the word is read bottom to top."""
    if strands < 1:
        raise DiagramError("need at least one strand")
    slices = []
    for g in word:
        g = int(g)
        if g == 0 or abs(g) >= strands:
            raise DiagramError(f"braid generator {g} invalid on {strands} strands")
        slices.append(("x+" if g > 0 else "x-", abs(g)))
    d = Diagram("u" * strands, tuple(slices))
    return close_right(d) if closed else d


def unknot() -> Diagram:
    return Diagram("", (("cupr", 1), ("capl", 1)))


def diagram_writhe(d: Diagram) -> int:
    return sum(1 if k == "x+" else -1 for k, _ in d.slices if k in CROSSES)


def writhe(d: Diagram) -> int:
    if not d.is_closed():
        raise DiagramError("writhe is defined for closed diagrams")
    return diagram_writhe(d)


def components(d: Diagram) -> int:
    from .skein import analyze
    return analyze(d.bottom, d.slices).num_components


# ------------------------------------------------------------------- PD codes

_PD_RE = re.compile(r"X\s*\[\s*([^\]]*)\]", re.IGNORECASE)


def parse_pd(text) -> List[Tuple[int, int, int, int]]:
    if isinstance(text, (list, tuple)):
        out = [tuple(int(v) for v in x) for x in text]
    else:
        out = []
        for m in _PD_RE.finditer(text):
            vals = [v for v in re.split(r"[,\s]+", m.group(1).strip()) if v]
            out.append(tuple(int(v) for v in vals))
        rest = _PD_RE.sub("", text).replace(";", "").replace(",", "").strip()
        if rest and rest.lower() not in ("pd[]", "pd"):
            raise DiagramError(f"unparseable PD text near {rest[:20]!r}")
    for x in out:
        if len(x) != 4:
            raise DiagramError(f"PD crossing {x} does not have four arcs")
    counts: Dict[int, int] = {}
    for x in out:
        for v in x:
            counts[v] = counts.get(v, 0) + 1
    bad = [v for v, c in counts.items() if c != 2]
    if bad:
        raise DiagramError(f"PD arcs must appear exactly twice; offending arcs {sorted(bad)}")
    return out


def pd_orientation(crossings: List[Tuple[int, int, int, int]]) -> Tuple[Dict[Tuple[int, int], Tuple[int, int]], Dict[int, Tuple[int, int]], List[int]]:
    """Return (partner map on occurrences, head occurrence per arc, signs).

    Slot 0 is the incoming under-strand and slots run counterclockwise; the
    over-strand direction is propagated from the under-strands, falling back to
    the consecutive-labelling convention when a strand is never under.
    """
    occ: Dict[int, List[Tuple[int, int]]] = {}
    for x, cr in enumerate(crossings):
        for s, v in enumerate(cr):
            occ.setdefault(v, []).append((x, s))
    partner = {}
    for v, (o1, o2) in occ.items():
        partner[o1] = o2
        partner[o2] = o1
    head: Dict[int, Tuple[int, int]] = {}

    def set_head(label, o):
        if label in head and head[label] != o:
            raise DiagramError(f"inconsistent orientation on arc {label}")
        head[label] = o

    for x, cr in enumerate(crossings):
        set_head(cr[0], (x, 0))
        set_head(cr[2], partner[(x, 2)])
    direction: Dict[int, int] = {}

    def resolve(x, d):
        cr = crossings[x]
        direction[x] = d
        if d > 0:   # over runs d -> b: slot 3 incoming, slot 1 outgoing
            set_head(cr[3], (x, 3))
            set_head(cr[1], partner[(x, 1)])
        else:
            set_head(cr[1], (x, 1))
            set_head(cr[3], partner[(x, 3)])

    def propagate():
        changed = True
        while changed:
            changed = False
            for x, cr in enumerate(crossings):
                if x in direction:
                    continue
                for slot, incoming_dir in ((1, -1), (3, 1)):
                    label = cr[slot]
                    if label in head:
                        d = incoming_dir if head[label] == (x, slot) else -incoming_dir
                        resolve(x, d)
                        changed = True
                        break

    propagate()
    for x, cr in enumerate(crossings):
        if x not in direction:
            b, dd = cr[1], cr[3]
            resolve(x, -1 if (dd - b == 1 or b - dd > 1) else 1)
            propagate()
    signs = [direction[x] for x in range(len(crossings))]
    return partner, head, signs


def from_pd(text) -> Diagram:
    """Layer a PD code into slices by a greedy planar sweep."""
    crossings = parse_pd(text)
    if not crossings:
        return unknot()
    partner, head, signs = pd_orientation(crossings)

    def letter(o):
        return "u" if head[crossings[o[0]][o[1]]] == o else "d"

    frontier: List[Tuple[int, int]] = []
    processed = set()
    slices: List[Slice] = []

    def add_cup(i, pair):
        letters = letter(pair[0]) + letter(pair[1])
        kind = "cupr" if letters == "du" else "cupl"
        if letters not in ("du", "ud"):
            raise DiagramError("orientation clash while sweeping PD code")
        slices.append((kind, len(frontier) - i + 1))
        frontier[i:i] = list(pair)

    def close_caps():
        changed = True
        while changed:
            changed = False
            for i in range(len(frontier) - 1):
                e1, e2 = frontier[i], frontier[i + 1]
                if e1[0] in processed and partner[e1] == e2:
                    letters = letter(e1) + letter(e2)
                    kind = "capr" if letters == "ud" else "capl"
                    slices.append((kind, len(frontier) - i - 1))
                    del frontier[i:i + 2]
                    changed = True
                    break

    while len(processed) < len(crossings):
        best = None
        for x in range(len(crossings)):
            if x in processed:
                continue
            for r in range(4):
                bl, br = (x, r), (x, (r + 1) % 4)
                ibl = frontier.index(bl) if bl in frontier else None
                ibr = frontier.index(br) if br in frontier else None
                if ibl is not None and ibr is not None:
                    cost = 0 if ibr == ibl + 1 else None
                elif ibl is not None or ibr is not None:
                    cost = 1
                else:
                    cost = 2
                if cost is None:
                    continue
                if best is None or cost < best[0]:
                    best = (cost, x, r, ibl, ibr)
            if best is not None and best[0] == 0:
                break
        if best is None or (best[0] == 2 and frontier and any(e[0] not in processed for e in frontier)):
            bad = best[1] if best else next(x for x in range(len(crossings)) if x not in processed)
            raise DiagramError(f"cannot sweep PD code planarly at crossing {bad + 1}: {crossings[bad]}")
        cost, x, r, ibl, ibr = best
        bl, br, tr, tl = (x, r), (x, (r + 1) % 4), (x, (r + 2) % 4), (x, (r + 3) % 4)
        if cost == 2 and partner[bl] == br:
            add_cup(len(frontier), (bl, br))
        elif cost == 2:
            add_cup(len(frontier), (partner[bl], bl))
            add_cup(len(frontier), (br, partner[br]))
        elif ibl is None:
            add_cup(ibr, (partner[bl], bl))
        elif ibr is None:
            add_cup(ibl + 1, (br, partner[br]))
        i = frontier.index(bl)
        letters = letter(bl) + letter(br)
        over = r % 2 == 1   # the '/' strand runs bl -> tr; slots 1 and 3 are over
        sign = crossing_sign(letters, over)
        if sign != signs[x]:
            raise DiagramError(f"sweep orientation mismatch at crossing {x + 1}")
        slices.append(("x+" if sign > 0 else "x-", len(frontier) - i - 1))
        frontier[i:i + 2] = [partner[tl], partner[tr]]
        processed.add(x)
        close_caps()
    if frontier:
        raise DiagramError("PD sweep left dangling arcs")
    return Diagram("", tuple(slices)).validate()


def pd_writhe(text) -> int:
    return sum(pd_orientation(parse_pd(text))[2])


# ----------------------------------------------------------------- DSL

def parse_dsl(text: str) -> Diagram:
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip() and not ln.strip().startswith("#")]
    if not lines:
        raise DiagramError("empty diagram text")
    head = lines[0]
    if head.startswith("braid"):
        parts = head.split()
        if len(parts) < 2:
            raise DiagramError("braid header needs a strand count")
        n = int(parts[1])
        closed = len(parts) > 2 and parts[2] == "closed"
        gens = [int(v) for ln in lines[1:] for v in ln.split()]
        return from_braid(gens, n, closed)
    if not head.startswith("obj:"):
        raise DiagramError("first line must be 'obj: ...' or 'braid N closed'")
    word = parse_word(head[4:])
    slices = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2 or parts[0] not in KINDS:
            raise DiagramError(f"bad slice line {ln!r}")
        try:
            slices.append((parts[0], int(parts[1])))
        except ValueError as exc:
            raise DiagramError(f"bad slice position in {ln!r}") from exc
    return Diagram(word, tuple(slices)).validate()


__all__ = [
    "Diagram", "Morphism", "ParamTransform", "DiagramError", "compose", "tensor", "apply_symmetry",
    "from_braid", "from_pd", "parse_pd", "parse_dsl", "parse_word", "close_right", "writhe",
    "components", "unknot", "apply_slice", "crossing_sign", "slash_over", "identity_diagram",
    "tensor_diagrams", "shift_diagram", "flip", "pretty", "pd_writhe",
]

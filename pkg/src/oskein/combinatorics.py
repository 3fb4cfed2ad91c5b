"""Partitions, bipartitions, Littlewood-Richardson coefficients and the
Schur (x) Schur layer of Sym (x) Sym, including the transition matrices
N (standard classes in the Schur basis) and M (its inverse)."""
from __future__ import annotations

from functools import lru_cache
from math import factorial
from typing import Dict, Iterator, List, NamedTuple, Tuple

Partition = Tuple[int, ...]


def partition(parts) -> Partition:
    p = tuple(int(x) for x in parts if int(x) != 0)
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)) or any(x < 0 for x in p):
        raise ValueError(f"not a partition: {parts}")
    return p


class Bipartition(NamedTuple):
    up: Partition
    down: Partition

    @property
    def rank(self) -> Tuple[int, int]:
        return (sum(self.up), sum(self.down))

    def __str__(self):
        def f(p):
            return "(" + ",".join(map(str, p)) + ")" if p else "()"
        return f"({f(self.up)},{f(self.down)})"

    def to_json(self):
        return {"up": list(self.up), "down": list(self.down)}

    @classmethod
    def from_json(cls, d) -> "Bipartition":
        return cls(partition(d["up"]), partition(d["down"]))

    @classmethod
    def make(cls, up=(), down=()) -> "Bipartition":
        return cls(partition(up), partition(down))


EMPTY = Bipartition((), ())


def partition_key(p: Partition):
    # size first, then reverse-lexicographic parts
    return (sum(p), tuple(-x for x in p))


@lru_cache(maxsize=None)
def partitions(n: int) -> Tuple[Partition, ...]:
    out: List[Partition] = []

    def rec(rem, maxpart, acc):
        if rem == 0:
            out.append(tuple(acc))
            return
        for k in range(min(rem, maxpart), 0, -1):
            acc.append(k)
            rec(rem - k, k, acc)
            acc.pop()

    rec(n, n, [])
    return tuple(out)


def bipartitions(r: int, s: int) -> List[Bipartition]:
    return [Bipartition(a, b) for a in partitions(r) for b in partitions(s)]


def bipartitions_upto(total: int) -> List[Bipartition]:
    return [bp for n in range(total + 1) for r in range(n + 1) for bp in bipartitions(r, n - r)]


def conjugate(p: Partition) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > j) for j in range(p[0]))


def nodes(p: Partition) -> List[Tuple[int, int]]:
    """Nodes (i, j), 1-based row i and column j."""
    return [(i + 1, j + 1) for i, row in enumerate(p) for j in range(row)]


def contents(p: Partition) -> List[int]:
    """Content exponents j - i of the nodes (the scalar content is q^{2(j-i)})."""
    return [j - i for i, j in nodes(p)]


def addable(p: Partition) -> List[Tuple[int, int]]:
    out = []
    for i in range(len(p) + 1):
        row = p[i] if i < len(p) else 0
        if i == 0 or p[i - 1] > row:
            out.append((i + 1, row + 1))
    return out


def removable(p: Partition) -> List[Tuple[int, int]]:
    out = []
    for i, row in enumerate(p):
        nxt = p[i + 1] if i + 1 < len(p) else 0
        if row > nxt:
            out.append((i + 1, row))
    return out


def add_node(p: Partition, i: int) -> Partition:
    lst = list(p) + [0]
    lst[i - 1] += 1
    return partition(lst)


def remove_node(p: Partition, i: int) -> Partition:
    lst = list(p)
    lst[i - 1] -= 1
    return partition(lst)


def num_syt(p: Partition) -> int:
    """Number of standard tableaux, by the hook length formula."""
    n = sum(p)
    conj = conjugate(p)
    hooks = 1
    for i, row in enumerate(p):
        for j in range(row):
            hooks *= (row - j - 1) + (conj[j] - i - 1) + 1
    return factorial(n) // hooks


def contains(lam: Partition, mu: Partition) -> bool:
    return len(mu) <= len(lam) and all(m <= lam[i] for i, m in enumerate(mu))


@lru_cache(maxsize=None)
def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """LR^lam_{mu,nu}: count LR fillings of lam/mu with content nu.

    Rows weakly increase, columns strictly increase, and the reverse reading
    word (right to left along rows, top row first) is a lattice word.
    """
    lam, mu, nu = partition(lam), partition(mu), partition(nu)
    if sum(lam) != sum(mu) + sum(nu) or not contains(lam, mu) or not contains(lam, nu):
        return 0
    cells = []
    for i, row in enumerate(lam):
        start = mu[i] if i < len(mu) else 0
        for j in range(row - 1, start - 1, -1):
            cells.append((i, j))
    filling: Dict[Tuple[int, int], int] = {}
    counts = [0] * (len(nu) + 1)

    def rec(k: int) -> int:
        if k == len(cells):
            return 1
        i, j = cells[k]
        total = 0
        for v in range(1, len(nu) + 1):
            if counts[v] >= nu[v - 1]:
                continue
            if v > 1 and counts[v] >= counts[v - 1]:
                continue
            right = filling.get((i, j + 1))
            if right is not None and v > right:
                continue
            above = filling.get((i - 1, j))
            if i > 0 and j < (mu[i - 1] if i - 1 < len(mu) else 0):
                above = None
            if above is not None and v <= above:
                continue
            filling[(i, j)] = v
            counts[v] += 1
            total += rec(k + 1)
            counts[v] -= 1
            del filling[(i, j)]
        return total

    return rec(0)


class SymTensor:
    """Element of Sym (x) Sym in the basis s_mu (x) s_nu, keyed by Bipartition."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs: Dict[Bipartition, int] = {Bipartition(*k): v for k, v in (coeffs or {}).items() if v}

    @classmethod
    def basis(cls, bp: Bipartition) -> "SymTensor":
        return cls({bp: 1})

    @classmethod
    def unit(cls) -> "SymTensor":
        return cls({EMPTY: 1})

    def __add__(self, other: "SymTensor") -> "SymTensor":
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return SymTensor(out)

    def __neg__(self):
        return SymTensor({k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: int) -> "SymTensor":
        return SymTensor({k: c * v for k, v in self.coeffs.items()})

    def __mul__(self, other: "SymTensor") -> "SymTensor":
        return schur_multiply(self, other)

    def __eq__(self, other):
        return isinstance(other, SymTensor) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def items(self):
        return sorted(self.coeffs.items(), key=lambda kv: (partition_key(kv[0].up), partition_key(kv[0].down)))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"{v}*s{k.up or '()'}⊗s{k.down or '()'}" for k, v in self.items())

    def to_json(self):
        return [{"bipartition": k.to_json(), "coeff": v} for k, v in self.items()]

    @classmethod
    def from_json(cls, data) -> "SymTensor":
        return cls({Bipartition.from_json(d["bipartition"]): int(d["coeff"]) for d in data})


@lru_cache(maxsize=None)
def _schur_product(mu: Partition, nu: Partition) -> Tuple[Tuple[Partition, int], ...]:
    n = sum(mu) + sum(nu)
    out = []
    for lam in partitions(n):
        c = lr_coefficient(lam, mu, nu)
        if c:
            out.append((lam, c))
    return tuple(out)


def schur_multiply(a: SymTensor, b: SymTensor) -> SymTensor:
    out: Dict[Bipartition, int] = {}
    for (m1, m2), c in a.coeffs.items():
        for (n1, n2), d in b.coeffs.items():
            for l1, c1 in _schur_product(m1, n1):
                for l2, c2 in _schur_product(m2, n2):
                    key = Bipartition(l1, l2)
                    out[key] = out.get(key, 0) + c * d * c1 * c2
    return SymTensor(out)


def _sub_bipartitions(lam: Bipartition) -> Iterator[Tuple[int, Bipartition]]:
    r, s = lam.rank
    for d in range(min(r, s) + 1):
        for mu in bipartitions(r - d, s - d):
            yield d, mu


def bigN(lam: Bipartition, mu: Bipartition) -> int:
    """N^lam_mu = (-1)^d sum_{nu |- d} LR^{lam up}_{mu up, nu} LR^{lam down}_{mu down, nu^t}."""
    r, s = lam.rank
    d = r - sum(mu.up)
    if d < 0 or s - sum(mu.down) != d:
        return 0
    total = sum(lr_coefficient(lam.up, mu.up, nu) * lr_coefficient(lam.down, mu.down, conjugate(nu))
                for nu in partitions(d))
    return (-1) ** d * total


def bigM(lam: Bipartition, mu: Bipartition) -> int:
    """M^lam_mu = sum_{nu |- d} LR^{lam up}_{mu up, nu} LR^{lam down}_{mu down, nu}."""
    r, s = lam.rank
    d = r - sum(mu.up)
    if d < 0 or s - sum(mu.down) != d:
        return 0
    return sum(lr_coefficient(lam.up, mu.up, nu) * lr_coefficient(lam.down, mu.down, nu)
               for nu in partitions(d))


def chi(lam: Bipartition) -> SymTensor:
    out = {}
    for _, mu in _sub_bipartitions(lam):
        c = bigN(lam, mu)
        if c:
            out[mu] = c
    return SymTensor(out)


def verify_nm_inverse(maxr: int, maxs: int) -> bool:
    """Check sum_k N^lam_k M^k_mu = delta over all ranks r <= maxr, s <= maxs."""
    index = [bp for r in range(maxr + 1) for s in range(maxs + 1) for bp in bipartitions(r, s)]
    for lam in index:
        for mu in index:
            total = sum(bigN(lam, k) * bigM(k, mu) for k in index)
            if total != (1 if lam == mu else 0):
                return False
    return True


def s_up(p=(1,)) -> SymTensor:
    return SymTensor.basis(Bipartition(partition(p), ()))


def s_down(p=(1,)) -> SymTensor:
    return SymTensor.basis(Bipartition((), partition(p)))


def standard_young_tableaux(p: Partition) -> List[Tuple[Tuple[int, ...], ...]]:
    """All standard tableaux of shape p, as tuples of rows (brute force)."""
    n = sum(p)
    out = []

    def rec(shape: List[int], k: int, rows: List[List[int]]):
        if k > n:
            out.append(tuple(tuple(r) for r in rows))
            return
        for i in range(len(p)):
            if shape[i] < p[i] and (i == 0 or shape[i - 1] > shape[i]):
                shape[i] += 1
                rows[i].append(k)
                rec(shape, k + 1, rows)
                rows[i].pop()
                shape[i] -= 1

    rec([0] * len(p), 1, [[] for _ in p])
    return out


__all__ = [
    "Partition", "Bipartition", "EMPTY", "SymTensor", "partition", "partitions", "bipartitions",
    "bipartitions_upto", "conjugate", "contents", "nodes", "addable", "removable", "num_syt",
    "lr_coefficient", "schur_multiply", "chi", "bigN", "bigM", "verify_nm_inverse",
    "standard_young_tableaux",
]

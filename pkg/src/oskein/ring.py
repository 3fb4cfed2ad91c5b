"""Exact scalars: Laurent polynomials in (z, t), their fractions, and
rational specializations at a fixed parameter point.

Two coefficient domains are used throughout the package.

* ``SYMBOLIC``: values are :class:`RationalFunction` objects over
  Q[z, z^-1, t, t^-1].  Fractions are not gcd-reduced; equality is decided by
  cross-multiplication.
* ``Specialized(profile)``: values are plain :class:`fractions.Fraction`
  evaluated at q = q0, z = q0 - 1/q0, t = t0.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Optional, Tuple, Union

EXP_LIMIT = 2 ** 31


class DomainError(ValueError):
    """Raised when scalars from different domains meet, or an operation is
    unavailable in a domain (e.g. q in the symbolic domain)."""


class DegenerateParameterError(ArithmeticError):
    """Raised when a computation needs a non-degenerate parameter point."""


def _check_exp(e: int) -> int:
    if not -EXP_LIMIT < e < EXP_LIMIT:
        raise OverflowError(f"exponent {e} out of range")
    return e


class LaurentPoly:
    """Element of Q[z^{+-1}, t^{+-1}] stored as {(e_z, e_t): coefficient}."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Optional[Dict[Tuple[int, int], Fraction]] = None):
        clean = {}
        if terms:
            for k, c in terms.items():
                if c:
                    clean[(_check_exp(k[0]), _check_exp(k[1]))] = Fraction(c)
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c) -> "LaurentPoly":
        return cls({(0, 0): Fraction(c)})

    @classmethod
    def monomial(cls, ez: int, et: int, c=1) -> "LaurentPoly":
        return cls({(ez, et): Fraction(c)})

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return LaurentPoly.const(other)
        raise DomainError(f"cannot combine LaurentPoly with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out: Dict[Tuple[int, int], Fraction] = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                k = (a1 + a2, b1 + b2)
                v = out.get(k, 0) + c1 * c2
                if v:
                    out[k] = v
                else:
                    out.pop(k, None)
        for k in out:
            _check_exp(k[0])
            _check_exp(k[1])
        return LaurentPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_monomial():
                raise DomainError("negative power of a non-monomial")
            (ez, et), c = next(iter(self.terms.items()))
            return LaurentPoly({(-ez * -n, -et * -n): 1 / c ** -n})
        out = LaurentPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def evaluate(self, z0: Fraction, t0: Fraction) -> Fraction:
        total = Fraction(0)
        for (ez, et), c in self.terms.items():
            total += c * Fraction(z0) ** ez * Fraction(t0) ** et
        return total

    def substitute(self, z_sign: int = 1, t_sign: int = 1, t_invert: bool = False):
        """Apply (z, t) -> (z_sign*z, t_sign*t^{+-1})."""
        out = {}
        for (ez, et), c in self.terms.items():
            c2 = c * (z_sign ** (ez % 2)) * (t_sign ** (et % 2))
            out[(ez, -et if t_invert else et)] = c2
        return LaurentPoly(out)

    def min_exponents(self) -> Tuple[int, int]:
        return (min(k[0] for k in self.terms), min(k[1] for k in self.terms))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (ez, et), c in self.sorted_terms():
            factors = []
            if ez:
                factors.append("z" if ez == 1 else f"z^{ez}")
            if et:
                factors.append("t" if et == 1 else f"t^{et}")
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            elif c == -1:
                parts.append("-" + "*".join(factors))
            else:
                parts.append(f"{c}*" + "*".join(factors))
        s = " + ".join(parts)
        return s.replace("+ -", "- ")

    __repr__ = __str__

    def to_json(self):
        return [[ez, et, str(c)] for (ez, et), c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data) -> "LaurentPoly":
        return cls({(int(a), int(b)): Fraction(c) for a, b, c in data})


def try_divide(p: LaurentPoly, d: LaurentPoly) -> Optional[LaurentPoly]:
    """Exact quotient p/d in the Laurent ring, or None if d does not divide p.

    Long division on the lexicographic order (e_t, e_z); the loop stops once the
    remainder drops below the lowest t-degree any multiple could still reach.
    """
    if d.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if p.is_zero():
        return LaurentPoly()

    def lead(x):
        return max(x.terms, key=lambda k: (k[1], k[0]))

    (dz, dt) = lead(d)
    dc = d.terms[(dz, dt)]
    span = dt - min(k[1] for k in d.terms)
    floor = min(k[1] for k in p.terms)
    quot: Dict[Tuple[int, int], Fraction] = {}
    rem = p
    for _ in range(10000):
        if rem.is_zero():
            return LaurentPoly(quot)
        lz, lt = lead(rem)
        if lt - span < floor - span or lt < floor:
            return None
        c = rem.terms[(lz, lt)] / dc
        k = (lz - dz, lt - dt)
        quot[k] = quot.get(k, 0) + c
        rem = rem - d * LaurentPoly.monomial(k[0], k[1], c)
    return None


Z = LaurentPoly.monomial(1, 0)
T = LaurentPoly.monomial(0, 1)
TINV = LaurentPoly.monomial(0, -1)
ONE = LaurentPoly.const(1)


class RationalFunction:
    """num/den with LaurentPoly parts, not gcd-reduced.

    Monomial denominators are folded into the numerator, so every value
    produced by the rewriting engine stays a polynomial (den == 1).
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = num if isinstance(num, LaurentPoly) else LaurentPoly.const(num)
        den = ONE if den is None else (den if isinstance(den, LaurentPoly) else LaurentPoly.const(den))
        if den is ONE or den.terms == ONE.terms:
            self.num = num
            self.den = ONE
            return
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if den.is_monomial():
            num = num * den ** -1
            den = ONE
        elif num.is_zero():
            den = ONE
        else:
            # cheap normalization: strip common monomial factor and content
            mz = min(num.min_exponents()[0], den.min_exponents()[0])
            mt = min(num.min_exponents()[1], den.min_exponents()[1])
            lead = den.sorted_terms()[0][1]
            scale = LaurentPoly.monomial(-mz, -mt, 1 / lead)
            num, den = num * scale, den * scale
        self.num = num
        self.den = den

    def _coerce(self, other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, LaurentPoly):
            return RationalFunction(other)
        if isinstance(other, int) and not isinstance(other, bool):
            return RationalFunction(LaurentPoly.const(other))
        raise DomainError(f"cannot mix symbolic scalar with {type(other).__name__}")

    def is_polynomial(self) -> bool:
        return self.den == ONE

    def reduced(self) -> "RationalFunction":
        """Fold the denominator in when it divides the numerator exactly."""
        if self.den == ONE:
            return self
        q = try_divide(self.num, self.den)
        return RationalFunction(q) if q is not None else self

    def __add__(self, other):
        o = self._coerce(other)
        if self.den == ONE and o.den == ONE:
            return RationalFunction(self.num + o.num)
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        if self.den == ONE and o.den == ONE:
            return RationalFunction(self.num * o.num)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o.num.is_zero():
            raise ZeroDivisionError("division by zero scalar")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return RationalFunction(ONE) / (self ** -n)
        out = RationalFunction(ONE)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except DomainError:
            return NotImplemented
        return self.num * o.den == o.num * self.den

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    __hash__ = None  # no canonical form without gcd

    def __bool__(self):
        return not self.num.is_zero()

    def evaluate(self, z0, t0) -> Fraction:
        d = self.den.evaluate(z0, t0)
        if d == 0:
            raise DegenerateParameterError("denominator vanishes at the parameter point")
        return self.num.evaluate(z0, t0) / d

    def substitute(self, **kw) -> "RationalFunction":
        return RationalFunction(self.num.substitute(**kw), self.den.substitute(**kw))

    def __str__(self):
        if self.den == ONE:
            return str(self.num)
        return f"({self.num})/({self.den})"

    __repr__ = __str__

    def to_json(self):
        if self.den == ONE:
            return {"num": self.num.to_json()}
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data) -> "RationalFunction":
        den = LaurentPoly.from_json(data["den"]) if "den" in data else None
        return cls(LaurentPoly.from_json(data["num"]), den)


Scalar = Union[Fraction, RationalFunction]


@dataclass(frozen=True)
class ParamProfile:
    """A rational parameter point (q0, t0) with a genericity guard bound."""

    q0: Fraction = Fraction(2)
    t0: Fraction = Fraction(3)
    guard: int = 12

    def __post_init__(self):
        object.__setattr__(self, "q0", Fraction(self.q0))
        object.__setattr__(self, "t0", Fraction(self.t0))
        if self.q0 in (0, 1, -1):
            raise DegenerateParameterError(f"q0 = {self.q0} is not allowed")
        if self.t0 == 0:
            raise DegenerateParameterError("t0 = 0 is not allowed")

    @property
    def z0(self) -> Fraction:
        return self.q0 - 1 / self.q0

    def violation(self) -> Optional[Tuple[int, int]]:
        """Return (sign, n) with t0 = sign*q0^n and |n| <= guard, if any."""
        for n in sorted(range(-self.guard, self.guard + 1), key=lambda k: (abs(k), k < 0)):
            p = self.q0 ** n
            if self.t0 == p:
                return (1, n)
            if self.t0 == -p:
                return (-1, n)
        return None

    def is_generic(self) -> bool:
        return self.violation() is None

    def require_generic(self) -> "ParamProfile":
        v = self.violation()
        if v is not None:
            sign, n = v
            raise DegenerateParameterError(f"t = {'-' if sign < 0 else ''}q^{n}")
        return self


class _SymbolicDomain:
    name = "symbolic"

    def __repr__(self):
        return "SYMBOLIC"

    @property
    def zero(self):
        return RationalFunction(LaurentPoly())

    @property
    def one(self):
        return RationalFunction(ONE)

    @property
    def z(self):
        return RationalFunction(Z)

    @property
    def t(self):
        return RationalFunction(T)

    @property
    def tinv(self):
        return RationalFunction(TINV)

    @property
    def q(self):
        raise DomainError("q is not available in the symbolic domain")

    def coerce(self, x) -> RationalFunction:
        if isinstance(x, RationalFunction):
            return x
        if isinstance(x, LaurentPoly):
            return RationalFunction(x)
        if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
            return RationalFunction(LaurentPoly.const(x))
        raise DomainError(f"cannot coerce {type(x).__name__} into the symbolic domain")

    def owns(self, x) -> bool:
        return isinstance(x, RationalFunction)

    def fmt(self, x) -> str:
        return str(x)

    def to_json(self, x):
        return x.to_json()

    def from_json(self, data):
        return RationalFunction.from_json(data)

    def transform(self, x, z_sign=1, t_sign=1, t_invert=False):
        return x.substitute(z_sign=z_sign, t_sign=t_sign, t_invert=t_invert)


SYMBOLIC = _SymbolicDomain()


@dataclass(frozen=True)
class Specialized:
    """The rational specialization q = q0, z = q0 - 1/q0, t = t0."""

    profile: ParamProfile = ParamProfile()
    name = "specialized"

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    @property
    def z(self):
        return self.profile.z0

    @property
    def t(self):
        return self.profile.t0

    @property
    def tinv(self):
        return 1 / self.profile.t0

    @property
    def q(self):
        return self.profile.q0

    def coerce(self, x) -> Fraction:
        if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
            return Fraction(x)
        if isinstance(x, LaurentPoly):
            return x.evaluate(self.z, self.t)
        if isinstance(x, RationalFunction):
            return x.evaluate(self.z, self.t)
        raise DomainError(f"cannot coerce {type(x).__name__} into a specialized domain")

    def owns(self, x) -> bool:
        return isinstance(x, Fraction)

    def fmt(self, x) -> str:
        return str(x)

    def to_json(self, x):
        return str(x)

    def from_json(self, data):
        return Fraction(data)

    def with_params(self, q0=None, t0=None) -> "Specialized":
        p = self.profile
        return Specialized(ParamProfile(p.q0 if q0 is None else q0, p.t0 if t0 is None else t0, p.guard))


Domain = Union[_SymbolicDomain, Specialized]
DEFAULT = Specialized(ParamProfile())


def specialize(x: Scalar, dom: Specialized) -> Fraction:
    return dom.coerce(x)


def quantum_integer(n: int, dom: Domain) -> Fraction:
    """[n]_q = q^{n-1} + q^{n-3} + ... + q^{1-n}; [-n] = -[n].

    Only the specialized domain carries q; the symbolic domain raises.
    """
    if not isinstance(dom, Specialized):
        raise DomainError("quantum integers need a specialized domain (q is not a symbol here)")
    q = dom.q
    sign = 1 if n >= 0 else -1
    n = abs(n)
    return sign * sum((q ** (n - 1 - 2 * k) for k in range(n)), Fraction(0))


def quantum_factorial(n: int, dom: Domain) -> Fraction:
    out = Fraction(1)
    for k in range(1, n + 1):
        out *= quantum_integer(k, dom)
    return out


def bubble_value(dom: Domain):
    """Value of a closed unknotted circle, (t - t^-1)/z."""
    if isinstance(dom, Specialized):
        if dom.z == 0:
            raise DegenerateParameterError("z0 = 0")
        return (dom.t - 1 / dom.t) / dom.z
    return RationalFunction(T - TINV, Z)


def lp_arith(a: LaurentPoly, b: LaurentPoly, op: str):
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    if op == "eq":
        return a == b
    raise ValueError(f"unknown op {op}")


def power(x, n: int, dom: Domain):
    out = dom.one
    for _ in range(abs(n)):
        out = out * x
    return out if n >= 0 else dom.one / out


def t_power(n: int, dom: Domain):
    if isinstance(dom, Specialized):
        return dom.t ** n
    return RationalFunction(LaurentPoly.monomial(0, n))


def z_power(n: int, dom: Domain):
    if isinstance(dom, Specialized):
        return dom.z ** n
    return RationalFunction(LaurentPoly.monomial(n, 0))


def parse_rational(s: str) -> Fraction:
    return Fraction(s.strip())


def is_zero(x) -> bool:
    return not x


def iter_nonzero(items: Iterable):
    for k, v in items:
        if v:
            yield k, v

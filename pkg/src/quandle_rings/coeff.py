"""Exact coefficient rings.

Four kinds are supported: the integers, the rationals, the integers modulo
``m`` and integer polynomials in named variables.  Scalars are stored as
plain Python values (``int``, ``Fraction``, residue ``int`` or
:class:`Poly`); a :class:`CoeffRing` knows how to normalize and combine
them.  :class:`Scalar` pairs a value with its ring for callers that want
mixed-ring operations to be rejected.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping

from .errors import NonUnitError, RingMismatchError, UnboundSymbolError


class Poly:
    """Sparse integer polynomial: exponent tuple -> nonzero integer coefficient."""

    __slots__ = ("nvars", "terms")

    def __init__(self, terms: Mapping[tuple[int, ...], int] | None = None, nvars: int = 0):
        self.nvars = nvars
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != nvars:
                raise ValueError(f"exponent {exps} has wrong length for {nvars} variables")
            c = int(c)
            if c:
                clean[exps] = clean.get(exps, 0) + c
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def constant(cls, c: int, nvars: int) -> "Poly":
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def variable(cls, k: int, nvars: int) -> "Poly":
        exps = [0] * nvars
        exps[k] = 1
        return cls({tuple(exps): 1}, nvars)

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise RingMismatchError("polynomials over different variable sets")
            return other
        if isinstance(other, int):
            return Poly.constant(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Poly(out, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return Poly({e: -c for e, c in self.terms.items()}, self.nvars)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Poly(out, self.nvars)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = Poly.constant(other, self.nvars)
        return isinstance(other, Poly) and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, exps: Iterable[int]) -> int:
        return self.terms.get(tuple(exps), 0)

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def evaluate(self, values: Iterable[int]) -> int:
        values = list(values)
        total = 0
        for exps, c in self.terms.items():
            term = c
            for v, k in zip(values, exps):
                term *= v**k
            total += term
        return total

    def render(self, names: Iterable[str] | None = None) -> str:
        names = list(names) if names is not None else [f"c{k}" for k in range(self.nvars)]
        if not self.terms:
            return "0"
        pieces = []
        for exps in sorted(self.terms, reverse=True):
            c = self.terms[exps]
            factors = [f"{names[k]}^{p}" for k, p in enumerate(exps) if p]
            body = "*".join([str(abs(c))] + factors) if (abs(c) != 1 or not factors) else "*".join(factors)
            pieces.append(("-" if c < 0 else "+", body))
        head_sign, head = pieces[0]
        text = ("-" if head_sign == "-" else "") + head
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"Poly({self.render()})"


@dataclass(frozen=True)
class CoeffRing:
    """Descriptor of a coefficient ring.

    ``kind`` is one of ``"Z"``, ``"Q"``, ``"Zmod"`` or ``"Poly"``.
    """

    kind: str
    modulus: int | None = None
    variables: tuple[str, ...] = ()

    def __post_init__(self):
        if self.kind not in ("Z", "Q", "Zmod", "Poly"):
            raise ValueError(f"unknown coefficient ring kind {self.kind!r}")
        if self.kind == "Zmod" and (self.modulus is None or self.modulus < 2):
            raise ValueError("Zmod needs a modulus >= 2")
        if self.kind == "Poly" and len(set(self.variables)) != len(self.variables):
            raise ValueError("polynomial variable names must be distinct")

    # -- construction --------------------------------------------------

    @classmethod
    def parse(cls, text: str) -> "CoeffRing":
        """``"Z"``, ``"Q"`` or ``"Zmod:m"``."""
        text = text.strip()
        if text == "Z":
            return ZZ
        if text == "Q":
            return QQ
        if text.startswith("Zmod:"):
            return Zmod(int(text[5:]))
        raise ValueError(f"cannot parse coefficient ring {text!r}")

    def __str__(self):
        if self.kind == "Zmod":
            return f"Zmod:{self.modulus}"
        if self.kind == "Poly":
            return f"Z[{','.join(self.variables)}]"
        return self.kind

    @property
    def is_finite(self) -> bool:
        return self.kind == "Zmod"

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def __call__(self, value):
        """Coerce ``value`` into a normalized scalar of this ring."""
        if self.kind == "Z":
            if isinstance(value, Fraction):
                if value.denominator != 1:
                    raise ValueError(f"{value} is not an integer")
                return int(value.numerator)
            if isinstance(value, Poly):
                raise RingMismatchError("polynomial given where an integer was expected")
            return int(value)
        if self.kind == "Q":
            if isinstance(value, Poly):
                raise RingMismatchError("polynomial given where a rational was expected")
            return Fraction(value)
        if self.kind == "Zmod":
            if isinstance(value, Fraction):
                return self.mul(value.numerator % self.modulus, self.inv(value.denominator % self.modulus))
            if isinstance(value, Poly):
                raise RingMismatchError("polynomial given where a residue was expected")
            return int(value) % self.modulus
        if isinstance(value, Poly):
            if value.nvars != self.nvars:
                raise RingMismatchError("polynomial over a different variable set")
            return value
        if isinstance(value, Fraction) and value.denominator != 1:
            raise ValueError(f"{value} is not an integer polynomial")
        return Poly.constant(int(value), self.nvars)

    def zero(self):
        return self(0)

    def one(self):
        return self(1)

    def var(self, name_or_index) -> Poly:
        if self.kind != "Poly":
            raise RingMismatchError("only polynomial rings have variables")
        k = self.variables.index(name_or_index) if isinstance(name_or_index, str) else name_or_index
        return Poly.variable(k, self.nvars)

    def gens(self) -> list[Poly]:
        return [self.var(k) for k in range(self.nvars)]

    # -- arithmetic on raw values --------------------------------------

    def add(self, a, b):
        if self.kind == "Zmod":
            return (a + b) % self.modulus
        return a + b

    def sub(self, a, b):
        if self.kind == "Zmod":
            return (a - b) % self.modulus
        return a - b

    def neg(self, a):
        if self.kind == "Zmod":
            return (-a) % self.modulus
        return -a

    def mul(self, a, b):
        if self.kind == "Zmod":
            return (a * b) % self.modulus
        return a * b

    def is_zero(self, a) -> bool:
        return not a

    def is_unit(self, a) -> bool:
        if self.kind == "Z":
            return a in (1, -1)
        if self.kind == "Q":
            return a != 0
        if self.kind == "Zmod":
            return gcd(a, self.modulus) == 1
        return a.degree() == 0 and a.coefficient((0,) * self.nvars) in (1, -1)

    def inv(self, a):
        if not self.is_unit(a):
            raise NonUnitError(f"{self.render(a)} is not a unit in {self}")
        if self.kind == "Z":
            return a
        if self.kind == "Q":
            return 1 / a
        if self.kind == "Zmod":
            return pow(a, -1, self.modulus)
        return a

    def units(self) -> list:
        """All units of a finite ring, in increasing order."""
        if self.kind != "Zmod":
            raise ValueError(f"{self} has infinitely many elements")
        return [a for a in range(self.modulus) if gcd(a, self.modulus) == 1]

    def elements(self) -> range:
        if self.kind != "Zmod":
            raise ValueError(f"{self} has infinitely many elements")
        return range(self.modulus)

    def render(self, a) -> str:
        if self.kind == "Poly":
            return a.render(self.variables)
        if isinstance(a, Fraction):
            return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"
        return str(a)

    def to_json(self, a):
        if self.kind == "Q":
            return str(a) if a.denominator != 1 else int(a)
        if self.kind == "Poly":
            return a.render(self.variables)
        return int(a)


ZZ = CoeffRing("Z")
QQ = CoeffRing("Q")


def Zmod(m: int) -> CoeffRing:
    return CoeffRing("Zmod", modulus=m)


def PolyRing(*names: str) -> CoeffRing:
    return CoeffRing("Poly", variables=tuple(names))


def poly_eval(p: Poly, assignment: Mapping[str, int], ring: CoeffRing) -> int:
    """Substitute integers for the named variables of ``ring``."""
    missing = [name for k, name in enumerate(ring.variables)
               if name not in assignment and any(e[k] for e in p.terms)]
    if missing:
        raise UnboundSymbolError(f"no value for {', '.join(missing)}")
    return p.evaluate(assignment.get(name, 0) for name in ring.variables)


@dataclass(frozen=True)
class Scalar:
    """A value tagged with its ring; arithmetic refuses to mix rings."""

    ring: CoeffRing
    value: object

    def __post_init__(self):
        object.__setattr__(self, "value", self.ring(self.value))

    def _check(self, other) -> "Scalar":
        if not isinstance(other, Scalar):
            return Scalar(self.ring, other)
        if other.ring != self.ring:
            raise RingMismatchError(f"cannot combine {self.ring} with {other.ring}")
        return other

    def __add__(self, other):
        return Scalar(self.ring, self.ring.add(self.value, self._check(other).value))

    def __sub__(self, other):
        return Scalar(self.ring, self.ring.sub(self.value, self._check(other).value))

    def __mul__(self, other):
        return Scalar(self.ring, self.ring.mul(self.value, self._check(other).value))

    def __neg__(self):
        return Scalar(self.ring, self.ring.neg(self.value))

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.ring == other.ring and self.value == other.value
        try:
            return self.value == self.ring(other)
        except (ValueError, TypeError, RingMismatchError):
            return False

    def __hash__(self):
        return hash((self.ring, self.value))

    def is_unit(self) -> bool:
        return self.ring.is_unit(self.value)

    def inv(self) -> "Scalar":
        return Scalar(self.ring, self.ring.inv(self.value))

    def __str__(self):
        return self.ring.render(self.value)

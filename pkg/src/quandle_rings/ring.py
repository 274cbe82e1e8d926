"""Elements of the rack ring R[X] and the extended ring R°[X] = R[X] + Re."""

from __future__ import annotations

import json
from typing import Sequence

from .coeff import ZZ, CoeffRing, Scalar
from .errors import RingMismatchError
from .quandle import FiniteRack


def table_product(table: Sequence[Sequence[int]], u: Sequence[int], v: Sequence[int]) -> list[int]:
    """Bilinear product of two integer coefficient vectors.

    This is the hot loop of every lattice computation, kept free of ring
    dispatch.
    """
    n = len(table)
    out = [0] * n
    for i in range(n):
        a = u[i]
        if a:
            row = table[i]
            for j in range(n):
                b = v[j]
                if b:
                    out[row[j]] += a * b
    return out


def basis_label(i: int) -> str:
    return f"a{i}"


def _render_terms(ring: CoeffRing, terms: list[tuple[object, str]]) -> str:
    pieces = []
    for c, label in terms:
        if ring.is_zero(c):
            continue
        text = ring.render(c)
        if ring.kind == "Poly" and len(c.terms) > 1:
            text, negative = f"({text})", False
        else:
            negative = text.startswith("-")
            text = text.lstrip("-")
        if label:
            text = label if text == "1" else f"{text}*{label}"
        pieces.append(("-" if negative else "+", text))
    if not pieces:
        return "0"
    sign, first = pieces[0]
    out = ("-" if sign == "-" else "") + first
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


class RingElt:
    """``sum_i c_i x_i`` in R[X], stored densely."""

    __slots__ = ("rack", "ring", "coeffs")

    def __init__(self, rack: FiniteRack, coeffs: Sequence, ring: CoeffRing = ZZ):
        if len(coeffs) != rack.size:
            raise RingMismatchError(f"expected {rack.size} coefficients, got {len(coeffs)}")
        self.rack = rack
        self.ring = ring
        self.coeffs = tuple(ring(c) for c in coeffs)

    @classmethod
    def zero(cls, rack: FiniteRack, ring: CoeffRing = ZZ) -> "RingElt":
        return cls(rack, [0] * rack.size, ring)

    @classmethod
    def basis(cls, rack: FiniteRack, i: int, ring: CoeffRing = ZZ) -> "RingElt":
        c = [0] * rack.size
        c[i] = 1
        return cls(rack, c, ring)

    def _same(self, other: "RingElt"):
        if not isinstance(other, RingElt):
            raise RingMismatchError(f"expected a RingElt, got {type(other).__name__}")
        if other.rack != self.rack or other.ring != self.ring:
            raise RingMismatchError("operands over different racks or coefficient rings")

    def __add__(self, other):
        self._same(other)
        r = self.ring
        return RingElt(self.rack, [r.add(a, b) for a, b in zip(self.coeffs, other.coeffs)], r)

    def __sub__(self, other):
        self._same(other)
        r = self.ring
        return RingElt(self.rack, [r.sub(a, b) for a, b in zip(self.coeffs, other.coeffs)], r)

    def __neg__(self):
        return RingElt(self.rack, [self.ring.neg(a) for a in self.coeffs], self.ring)

    def scale(self, c) -> "RingElt":
        c = c.value if isinstance(c, Scalar) else self.ring(c)
        return RingElt(self.rack, [self.ring.mul(c, a) for a in self.coeffs], self.ring)

    def __mul__(self, other):
        if not isinstance(other, RingElt):
            return self.scale(other)
        return mul(self, other)

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        return (
            isinstance(other, RingElt)
            and self.rack == other.rack
            and self.ring == other.ring
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.rack, self.ring, self.coeffs))

    def is_zero(self) -> bool:
        return all(self.ring.is_zero(c) for c in self.coeffs)

    def augmentation(self):
        return augmentation(self)

    def __str__(self):
        return _render_terms(self.ring, [(c, basis_label(i)) for i, c in enumerate(self.coeffs)])

    def __repr__(self):
        return f"RingElt({self})"

    def to_json(self) -> dict:
        return {"coeffs": [self.ring.to_json(c) for c in self.coeffs]}


def mul(u: RingElt, v: RingElt) -> RingElt:
    """``(sum a_i x_i)(sum b_j x_j) = sum a_i b_j (x_i x_j)``."""
    u._same(v)
    r = u.ring
    t = u.rack.table
    n = u.rack.size
    if r.kind == "Z":
        return RingElt(u.rack, table_product(t, u.coeffs, v.coeffs), r)
    out = [r.zero()] * n
    for i, a in enumerate(u.coeffs):
        if r.is_zero(a):
            continue
        for j, b in enumerate(v.coeffs):
            if r.is_zero(b):
                continue
            k = t[i][j]
            out[k] = r.add(out[k], r.mul(a, b))
    return RingElt(u.rack, out, r)


def augmentation(u: RingElt):
    """Sum of coefficients, as a raw value of ``u.ring``."""
    total = u.ring.zero()
    for c in u.coeffs:
        total = u.ring.add(total, c)
    return total


def symmetrization_defect(X: FiniteRack, x: int, y: int, ring: CoeffRing = ZZ) -> RingElt:
    """``x.y + y.x - x - y``; lies in the square of the augmentation ideal for quandles."""
    bx, by = RingElt.basis(X, x, ring), RingElt.basis(X, y, ring)
    return mul(bx, by) + mul(by, bx) - bx - by


def aug_basis(X: FiniteRack, x0: int = 0, ring: CoeffRing = ZZ) -> list[RingElt]:
    """The ``n-1`` elements ``x - x0`` spanning the augmentation ideal."""
    b0 = RingElt.basis(X, x0, ring)
    return [RingElt.basis(X, i, ring) - b0 for i in range(X.size) if i != x0]


class ExtElt:
    """``body + c e`` in the extended ring, where ``e`` is a two-sided identity."""

    __slots__ = ("body", "unit_coeff")

    def __init__(self, body: RingElt, unit_coeff=0):
        self.body = body
        if isinstance(unit_coeff, Scalar):
            if unit_coeff.ring != body.ring:
                raise RingMismatchError("unit coefficient over a different ring")
            unit_coeff = unit_coeff.value
        self.unit_coeff = body.ring(unit_coeff)

    @classmethod
    def from_coeffs(cls, rack: FiniteRack, coeffs: Sequence, e, ring: CoeffRing = ZZ) -> "ExtElt":
        return cls(RingElt(rack, coeffs, ring), e)

    @classmethod
    def identity(cls, rack: FiniteRack, ring: CoeffRing = ZZ) -> "ExtElt":
        return cls(RingElt.zero(rack, ring), 1)

    @classmethod
    def basis(cls, rack: FiniteRack, i: int, ring: CoeffRing = ZZ) -> "ExtElt":
        return cls(RingElt.basis(rack, i, ring), 0)

    @property
    def rack(self) -> FiniteRack:
        return self.body.rack

    @property
    def ring(self) -> CoeffRing:
        return self.body.ring

    def vector(self) -> tuple:
        """Coordinates ``(c_0, ..., c_{n-1}, c_e)``."""
        return self.body.coeffs + (self.unit_coeff,)

    def _same(self, other):
        if not isinstance(other, ExtElt):
            raise RingMismatchError(f"expected an ExtElt, got {type(other).__name__}")
        self.body._same(other.body)

    def __add__(self, other):
        self._same(other)
        return ExtElt(self.body + other.body, self.ring.add(self.unit_coeff, other.unit_coeff))

    def __sub__(self, other):
        self._same(other)
        return ExtElt(self.body - other.body, self.ring.sub(self.unit_coeff, other.unit_coeff))

    def __neg__(self):
        return ExtElt(-self.body, self.ring.neg(self.unit_coeff))

    def scale(self, c) -> "ExtElt":
        c = c.value if isinstance(c, Scalar) else self.ring(c)
        return ExtElt(self.body.scale(c), self.ring.mul(c, self.unit_coeff))

    def __mul__(self, other):
        if not isinstance(other, ExtElt):
            return self.scale(other)
        return ext_mul(self, other)

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        return isinstance(other, ExtElt) and self.body == other.body and self.unit_coeff == other.unit_coeff

    def __hash__(self):
        return hash((self.body, self.unit_coeff))

    def augmentation(self):
        return ext_augmentation(self)

    def __str__(self):
        terms = [(c, basis_label(i)) for i, c in enumerate(self.body.coeffs)]
        terms.append((self.unit_coeff, "e"))
        return _render_terms(self.ring, terms)

    def __repr__(self):
        return f"ExtElt({self})"

    def to_json(self) -> dict:
        return {"coeffs": [self.ring.to_json(c) for c in self.body.coeffs], "e": self.ring.to_json(self.unit_coeff)}

    @classmethod
    def from_json(cls, rack: FiniteRack, data: dict, ring: CoeffRing = ZZ) -> "ExtElt":
        return cls(RingElt(rack, data["coeffs"], ring), data.get("e", 0))


def ext_mul(u: ExtElt, v: ExtElt) -> ExtElt:
    """``(a + al e)(b + be e) = ab + al b + be a + al be e``."""
    u._same(v)
    r = u.ring
    a, al = u.body, u.unit_coeff
    b, be = v.body, v.unit_coeff
    body = mul(a, b) + b.scale(al) + a.scale(be)
    return ExtElt(body, r.mul(al, be))


def ext_augmentation(u: ExtElt):
    return u.ring.add(augmentation(u.body), u.unit_coeff)


def dumps(elt) -> str:
    return json.dumps(elt.to_json())

"""Associativity and power-associativity of rack rings."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .coeff import ZZ, CoeffRing, Poly, PolyRing
from .errors import ResourceLimitError
from .groups import FiniteGroup
from .quandle import FiniteRack, core
from .ring import RingElt, mul

SYMBOLIC_SIZE_CAP = 8

IDENTITY_CUBE = "u2u != uu2"
IDENTITY_FOURTH = "(u2u)u != u2u2"


@dataclass(frozen=True)
class AssocReport:
    kind: str  # "associative" or "non_associative"
    witness: tuple[int, int, int] | None = None

    @property
    def associative(self) -> bool:
        return self.kind == "associative"


def is_associative(X: FiniteRack) -> AssocReport:
    # by bilinearity, basis triples decide the whole ring
    t = X.table
    for x, y, z in itertools.product(range(X.size), repeat=3):
        if t[t[x][y]][z] != t[x][t[y][z]]:
            return AssocReport("non_associative", (x, y, z))
    return AssocReport("associative")


def core_exponent2_check(G: FiniteGroup) -> tuple[bool, bool]:
    """``(Core(G) associative, exponent of G divides 2)``; the two must agree."""
    assoc = is_associative(core(G)).associative
    exp2 = all(G.mul(g, g) == G.identity for g in range(G.size))
    assert assoc == exp2, f"core criterion fails for {G.name}"
    return assoc, exp2


@dataclass
class PowerAssocWitness:
    identity: str
    element: RingElt
    lhs: RingElt
    rhs: RingElt
    differing_basis_index: int
    differing_values: tuple
    monomial: tuple[int, ...] | None = None

    def describe(self) -> str:
        i = self.differing_basis_index
        r = self.element.ring
        a, b = self.differing_values
        head = f"{self.identity} at u = {self.element}"
        if self.monomial is not None:
            mono = Poly({self.monomial: 1}, len(self.monomial)).render(r.variables)
            where = f"coefficient of {mono} on a{i}"
            return f"{head}: {where} is {a} vs {b}"
        return f"{head}: coefficient of a{i} is {r.render(a)} vs {r.render(b)}"


def power_sides(u: RingElt) -> dict[str, tuple[RingElt, RingElt]]:
    """Both sides of the two identities, keyed by identity name."""
    u2 = mul(u, u)
    u2u = mul(u2, u)
    return {
        IDENTITY_CUBE: (u2u, mul(u, u2)),
        IDENTITY_FOURTH: (mul(u2u, u), mul(u2, u2)),
    }


def _first_difference(lhs: RingElt, rhs: RingElt) -> int | None:
    return next((i for i, (a, b) in enumerate(zip(lhs.coeffs, rhs.coeffs)) if a != b), None)


def check_element(u: RingElt, identities=(IDENTITY_CUBE, IDENTITY_FOURTH)) -> PowerAssocWitness | None:
    """First identity in ``identities`` that ``u`` violates, as a witness."""
    sides = power_sides(u)
    for name in identities:
        lhs, rhs = sides[name]
        i = _first_difference(lhs, rhs)
        if i is not None:
            return PowerAssocWitness(name, u, lhs, rhs, i, (lhs.coeffs[i], rhs.coeffs[i]))
    return None


def box_order(radius: int) -> list[int]:
    """``0, 1, -1, 2, -2, ...``: the digit order used for lexicographic scans."""
    out = [0]
    for k in range(1, radius + 1):
        out += [k, -k]
    return out


def power_assoc_numeric(
    X: FiniteRack, box_radius: int, identities=(IDENTITY_CUBE, IDENTITY_FOURTH)
) -> PowerAssocWitness | None:
    """Scan integer elements with entries in ``[-r, r]`` in lexicographic order.

    Digits are ordered ``0 < 1 < -1 < 2 < -2 < ...`` so small elements come
    first.
    """
    if box_radius < 1:
        raise ValueError("box radius must be at least 1")
    for vec in itertools.product(box_order(box_radius), repeat=X.size):
        if not any(vec):
            continue
        w = check_element(RingElt(X, vec, ZZ), identities)
        if w is not None:
            return w
    return None


def generic_element(X: FiniteRack) -> RingElt:
    """``u = c0 a0 + ... + c_{n-1} a_{n-1}`` with polynomial coefficients."""
    if X.size > SYMBOLIC_SIZE_CAP:
        raise ResourceLimitError(f"symbolic expansion is capped at {SYMBOLIC_SIZE_CAP} elements")
    R = PolyRing(*(f"c{i}" for i in range(X.size)))
    return RingElt(X, R.gens(), R)


def symbolic_sides(X: FiniteRack) -> dict[str, tuple[RingElt, RingElt]]:
    return power_sides(generic_element(X))


def power_assoc_symbolic(
    X: FiniteRack, identities=(IDENTITY_CUBE, IDENTITY_FOURTH)
) -> PowerAssocWitness | None:
    """Expand both identities for a generic element and report the first differing monomial.

    Basis indices are scanned in order; within a basis coefficient the
    monomial is chosen among those appearing on both sides with different
    coefficients, fewest variables first, then by decreasing exponent
    tuple.  If every differing monomial is one-sided, the same order applies
    to all of them.
    """
    u = generic_element(X)
    sides = power_sides(u)
    for name in identities:
        lhs, rhs = sides[name]
        i = _first_difference(lhs, rhs)
        if i is None:
            continue
        L, R = lhs.coeffs[i], rhs.coeffs[i]
        differing = list((L - R).terms)
        both = [m for m in differing if L.coefficient(m) and R.coefficient(m)]
        pool = both or differing
        mono = min(pool, key=lambda m: (sum(1 for k in m if k), tuple(-k for k in m)))
        values = (L.coefficient(mono), R.coefficient(mono))
        return PowerAssocWitness(name, u, lhs, rhs, i, values, mono)
    return None


def coefficient_difference(X: FiniteRack, identity: str) -> list[Poly]:
    """Per basis element, ``lhs - rhs`` of an identity as an integer polynomial."""
    lhs, rhs = symbolic_sides(X)[identity]
    return [a - b for a, b in zip(lhs.coeffs, rhs.coeffs)]


def evaluate_in(polys: list[Poly], values, ring: CoeffRing) -> list:
    """Evaluate coefficient polynomials at an integer point, reducing into ``ring``."""
    return [ring(p.evaluate(values)) for p in polys]

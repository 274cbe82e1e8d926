"""Finite groups given by Cayley tables.

Only what the quandle constructions need: a table, the identity, inverses,
automorphism checks and a small catalog of every group of order at most 8.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Hashable, Sequence

import numpy as np

from .errors import EmptyStructureError, MalformedTableError


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """A group on ``{0, ..., m-1}`` with ``table[a][b] = a*b``."""

    table: tuple[tuple[int, ...], ...]
    name: str = ""
    identity: int = field(init=False)
    inverse: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        table = tuple(tuple(int(v) for v in row) for row in self.table)
        m = len(table)
        if m == 0:
            raise EmptyStructureError("a group needs at least one element")
        if any(len(row) != m for row in table):
            raise MalformedTableError("group table must be square")
        if any(not 0 <= v < m for row in table for v in row):
            raise MalformedTableError("group table entry out of range")
        object.__setattr__(self, "table", table)

        ident = [e for e in range(m) if all(table[e][x] == x == table[x][e] for x in range(m))]
        if len(ident) != 1:
            raise MalformedTableError("group table has no two-sided identity")
        e = ident[0]
        inverse = []
        for a in range(m):
            inv = [b for b in range(m) if table[a][b] == e and table[b][a] == e]
            if len(inv) != 1:
                raise MalformedTableError(f"element {a} has no inverse")
            inverse.append(inv[0])
        object.__setattr__(self, "identity", e)
        object.__setattr__(self, "inverse", tuple(inverse))

        # (ab)c against a(bc) over every triple
        T = np.array(table)
        lhs = T[T[:, :, None], np.arange(m)[None, None, :]]
        rhs = T[np.arange(m)[:, None, None], T[None, :, :]]
        if not np.array_equal(lhs, rhs):
            raise MalformedTableError("group table is not associative")

    @property
    def size(self) -> int:
        return len(self.table)

    def __len__(self):
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def is_abelian(self) -> bool:
        m = self.size
        return all(self.table[a][b] == self.table[b][a] for a in range(m) for b in range(m))

    def order_of(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.table[x][a]
            k += 1
        return k

    def exponent(self) -> int:
        from math import lcm

        out = 1
        for a in range(self.size):
            out = lcm(out, self.order_of(a))
        return out

    def is_automorphism(self, phi: Sequence[int]) -> bool:
        m = self.size
        if len(phi) != m or sorted(phi) != list(range(m)):
            return False
        return all(
            phi[self.table[a][b]] == self.table[phi[a]][phi[b]]
            for a in range(m)
            for b in range(m)
        )

    def automorphisms(self) -> list[tuple[int, ...]]:
        """All automorphisms, by brute force over permutations fixing the identity."""
        m = self.size
        others = [x for x in range(m) if x != self.identity]
        found = []
        for perm in itertools.permutations(others):
            phi = [0] * m
            phi[self.identity] = self.identity
            for x, y in zip(others, perm):
                phi[x] = y
            if self.is_automorphism(phi):
                found.append(tuple(phi))
        return found

    def inner_automorphism(self, g: int) -> tuple[int, ...]:
        """``a -> g a g^{-1}``."""
        gi = self.inverse[g]
        return tuple(self.table[self.table[g][a]][gi] for a in range(self.size))

    def conjugacy_classes(self) -> list[frozenset[int]]:
        seen: set[int] = set()
        classes = []
        for a in range(self.size):
            if a in seen:
                continue
            cls = frozenset(self.inner_automorphism(g)[a] for g in range(self.size))
            seen |= cls
            classes.append(cls)
        return classes

    def __repr__(self):
        return f"FiniteGroup({self.name or '?'}, order={self.size})"


def group_from_elements(elements: Sequence[Hashable], op: Callable, name: str = "") -> FiniteGroup:
    index = {x: i for i, x in enumerate(elements)}
    table = [[index[op(a, b)] for b in elements] for a in elements]
    return FiniteGroup(table, name=name)


def cyclic(m: int) -> FiniteGroup:
    if m < 1:
        raise EmptyStructureError("cyclic group needs m >= 1")
    return FiniteGroup([[(a + b) % m for b in range(m)] for a in range(m)], name=f"Z{m}")


def direct_product(g: FiniteGroup, h: FiniteGroup, name: str = "") -> FiniteGroup:
    elements = [(a, b) for a in range(g.size) for b in range(h.size)]
    return group_from_elements(
        elements,
        lambda x, y: (g.table[x[0]][y[0]], h.table[x[1]][y[1]]),
        name=name or f"{g.name}x{h.name}",
    )


def abelian(*orders: int) -> FiniteGroup:
    """``Z_{m1} x Z_{m2} x ...`` with lexicographic element order."""
    elements = list(itertools.product(*[range(m) for m in orders]))
    return group_from_elements(
        elements,
        lambda x, y: tuple((a + b) % m for a, b, m in zip(x, y, orders)),
        name="x".join(f"Z{m}" for m in orders),
    )


def symmetric(k: int) -> FiniteGroup:
    # composition (p*q)(i) = p(q(i))
    elements = list(itertools.permutations(range(k)))
    return group_from_elements(
        elements, lambda p, q: tuple(p[q[i]] for i in range(k)), name=f"S{k}"
    )


def dihedral_group(k: int) -> FiniteGroup:
    """Symmetries of a regular k-gon, order 2k; elements ``(s, r)`` mean ``x -> (-1)^s x + r``."""
    elements = [(s, r) for s in range(2) for r in range(k)]

    def op(a, b):
        s1, r1 = a
        s2, r2 = b
        sign = -1 if s1 else 1
        return ((s1 + s2) % 2, (sign * r2 + r1) % k)

    return group_from_elements(elements, op, name=f"D{k}")


def quaternion() -> FiniteGroup:
    # unit quaternions as (sign, basis) with basis in 1,i,j,k
    mult = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }
    elements = [(s, b) for s in (1, -1) for b in "1ijk"]

    def op(x, y):
        s, b = mult[(x[1], y[1])]
        return (x[0] * y[0] * s, b)

    return group_from_elements(elements, op, name="Q8")


def small_groups() -> dict[str, FiniteGroup]:
    """One representative of every isomorphism type of order at most 8."""
    groups = {f"Z{m}": cyclic(m) for m in range(1, 9)}
    groups["Z2xZ2"] = abelian(2, 2)
    groups["S3"] = symmetric(3)
    groups["Z2xZ4"] = abelian(2, 4)
    groups["Z2xZ2xZ2"] = abelian(2, 2, 2)
    groups["D4"] = dihedral_group(4)
    groups["Q8"] = quaternion()
    return groups

"""Finite racks and quandles stored as Cayley tables.

Elements are the indices ``0..n-1`` and ``table[i][j]`` is the index of
``x_i * x_j``.  The right translation ``S_j : i -> table[i][j]`` is the
inner automorphism attached to ``x_j``.
"""

from __future__ import annotations

import enum
import json
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from math import factorial
from pathlib import Path
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import (
    EmptyStructureError,
    InvalidAutomorphismError,
    InvalidHomomorphismError,
    MalformedTableError,
    ResourceLimitError,
    SizeError,
    SubquandleError,
)
from .groups import FiniteGroup

Permutation = tuple[int, ...]

DEFAULT_CLOSURE_CAP = factorial(10)


class Classification(enum.Enum):
    NOT_RACK = "not a rack"
    RACK_ONLY = "rack"
    QUANDLE = "quandle"


def _validated_table(table) -> tuple[tuple[int, ...], ...]:
    rows = tuple(tuple(int(v) for v in row) for row in table)
    n = len(rows)
    if n == 0:
        raise EmptyStructureError("a rack needs at least one element")
    for row in rows:
        if len(row) != n:
            raise MalformedTableError("Cayley table must be square")
        for v in row:
            if not 0 <= v < n:
                raise MalformedTableError(f"table entry {v} outside [0, {n})")
    return rows


class FiniteRack:
    """An order-n magma given by its Cayley table.

    Axiom flags are computed lazily and cached; instances are immutable.
    Construction never requires the table to be a rack, so ``check_axioms``
    can classify arbitrary magmas.
    """

    def __init__(self, table, name: str = ""):
        self.table = _validated_table(table)
        self.name = name

    @property
    def size(self) -> int:
        return len(self.table)

    def __len__(self):
        return len(self.table)

    def __eq__(self, other):
        return isinstance(other, FiniteRack) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        return f"FiniteRack({self.name or '?'}, n={self.size})"

    def op(self, i: int, j: int) -> int:
        return self.table[i][j]

    @cached_property
    def array(self) -> np.ndarray:
        arr = np.array(self.table, dtype=np.int64)
        arr.setflags(write=False)
        return arr

    # -- axiom flags -------------------------------------------------------

    @cached_property
    def satisfies_r1(self) -> bool:
        # every right translation z -> z*y is a bijection
        T = self.array
        return bool(all(len(set(T[:, j].tolist())) == self.size for j in range(self.size)))

    @cached_property
    def satisfies_r2(self) -> bool:
        T = self.array
        n = self.size
        lhs = T[T[:, :, None], np.arange(n)[None, None, :]]  # (i*j)*k
        rhs = T[T[:, None, :], T[None, :, :]]  # (i*k)*(j*k)
        return bool(np.array_equal(lhs, rhs))

    @cached_property
    def satisfies_q1(self) -> bool:
        return all(self.table[i][i] == i for i in range(self.size))

    @property
    def is_rack(self) -> bool:
        return self.satisfies_r1 and self.satisfies_r2

    @property
    def is_quandle(self) -> bool:
        return self.is_rack and self.satisfies_q1

    @cached_property
    def is_trivial(self) -> bool:
        return all(self.table[i][j] == i for i in range(self.size) for j in range(self.size))

    @cached_property
    def is_involutary(self) -> bool:
        # S_y^2 = id for every y
        T = self.array
        n = self.size
        return bool(np.array_equal(T[T, np.arange(n)[None, :]], np.tile(np.arange(n)[:, None], (1, n))))

    @cached_property
    def is_latin(self) -> bool:
        return all(len(set(row)) == self.size for row in self.table)

    @cached_property
    def is_connected(self) -> bool:
        return len(orbits(self)) == 1

    @cached_property
    def classification(self) -> Classification:
        if not self.is_rack:
            return Classification.NOT_RACK
        return Classification.QUANDLE if self.satisfies_q1 else Classification.RACK_ONLY

    def flags(self) -> dict[str, bool]:
        return {
            "is_rack": self.is_rack,
            "is_quandle": self.is_quandle,
            "is_trivial": self.is_trivial,
            "is_involutary": self.is_involutary,
            "is_latin": self.is_latin,
            "is_connected": self.is_connected if self.is_rack else False,
        }

    # -- serialization -----------------------------------------------------

    def to_dict(self) -> dict:
        return {"name": self.name, "size": self.size, "table": [list(r) for r in self.table]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def check_axioms(table) -> Classification:
    """Classify a Cayley table as a quandle, a rack that is not a quandle, or neither."""
    rack = table if isinstance(table, FiniteRack) else FiniteRack(table)
    return rack.classification


def load_quandle(source) -> FiniteRack:
    """Read the JSON quandle format from a path, a JSON string or a parsed dict."""
    if isinstance(source, dict):
        data = source
    elif isinstance(source, Path) or (isinstance(source, str) and not source.lstrip().startswith("{")):
        try:
            data = json.loads(Path(source).read_text())
        except json.JSONDecodeError as exc:
            raise MalformedTableError(f"invalid JSON in {source}: {exc}") from exc
    else:
        try:
            data = json.loads(source)
        except json.JSONDecodeError as exc:
            raise MalformedTableError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict) or "table" not in data:
        raise MalformedTableError("quandle JSON must be an object with a 'table' field")
    rack = FiniteRack(data["table"], name=str(data.get("name", "")))
    if "size" in data and int(data["size"]) != rack.size:
        raise MalformedTableError(f"declared size {data['size']} does not match table size {rack.size}")
    rack.classification  # populate flags on load
    return rack


def dump_quandle(rack: FiniteRack, path) -> None:
    Path(path).write_text(json.dumps(rack.to_dict(), indent=1) + "\n")


# -- constructions -------------------------------------------------------


def trivial(n: int) -> FiniteRack:
    if n < 1:
        raise EmptyStructureError("trivial quandle needs n >= 1")
    return FiniteRack([[i] * n for i in range(n)], name=f"T{n}")


def dihedral(n: int) -> FiniteRack:
    if n < 1:
        raise EmptyStructureError("dihedral quandle needs n >= 1")
    return FiniteRack([[(2 * j - i) % n for j in range(n)] for i in range(n)], name=f"R{n}")


def conj(G: FiniteGroup) -> FiniteRack:
    """``a * b = b^{-1} a b``."""
    t = G.table
    return FiniteRack(
        [[t[t[G.inverse[b]][a]][b] for b in range(G.size)] for a in range(G.size)],
        name=f"Conj({G.name})",
    )


def core(G: FiniteGroup) -> FiniteRack:
    """``a * b = b a^{-1} b``."""
    t = G.table
    return FiniteRack(
        [[t[t[b][G.inverse[a]]][b] for b in range(G.size)] for a in range(G.size)],
        name=f"Core({G.name})",
    )


def gen_alexander(G: FiniteGroup, phi: Sequence[int]) -> FiniteRack:
    """``a * b = phi(a b^{-1}) b`` for an automorphism ``phi`` of ``G``."""
    if not G.is_automorphism(phi):
        raise InvalidAutomorphismError(f"{tuple(phi)} is not an automorphism of {G.name or 'G'}")
    t = G.table
    return FiniteRack(
        [[t[phi[t[a][G.inverse[b]]]][b] for b in range(G.size)] for a in range(G.size)],
        name=f"GAlex({G.name},{tuple(phi)})",
    )


def alexander(A: FiniteGroup, t_map: Sequence[int]) -> FiniteRack:
    """``a * b = t(a) + (id - t)(b)`` on an abelian group written additively.

    ``(id - t)(b) = b - t(b)``, so the product is ``t(a) + b - t(b)``.
    """
    if not A.is_abelian():
        raise InvalidAutomorphismError("Alexander quandles need an abelian group")
    if not A.is_automorphism(t_map):
        raise InvalidAutomorphismError(f"{tuple(t_map)} is not an automorphism of {A.name or 'A'}")
    add, neg = A.table, A.inverse
    return FiniteRack(
        [[add[add[t_map[a]][b]][neg[t_map[b]]] for b in range(A.size)] for a in range(A.size)],
        name=f"Alex({A.name},{tuple(t_map)})",
    )


def flip_rack(n: int) -> FiniteRack:
    """The rack ``a_i * a_j = a_{n-i+1}``, stored 0-based as ``table[i][j] = n-1-i``."""
    if n < 2:
        raise SizeError("flip rack needs n >= 2")
    return FiniteRack([[n - 1 - i] * n for i in range(n)], name=f"flip{n}")


def two_elem_rack() -> FiniteRack:
    """``a.a = a.b = b`` and ``b.a = b.b = a``."""
    return FiniteRack([[1, 1], [0, 0]], name="rack2")


# -- inner automorphisms and orbits ---------------------------------------


def inner_generators(X: FiniteRack) -> list[Permutation]:
    """The right translations ``S_x : y -> y*x``, one per element."""
    return [tuple(X.table[y][x] for y in range(X.size)) for x in range(X.size)]


def compose(p: Permutation, q: Permutation) -> Permutation:
    """``(p q)(i) = p(q(i))``."""
    return tuple(p[i] for i in q)


def inner_group_closure(X: FiniteRack, cap: int = DEFAULT_CLOSURE_CAP) -> set[Permutation]:
    """Breadth-first closure of the group generated by the inner generators."""
    gens = list(dict.fromkeys(inner_generators(X)))
    identity = tuple(range(X.size))
    seen = {identity}
    queue = deque([identity])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = compose(s, g)
            if h not in seen:
                seen.add(h)
                if len(seen) > cap:
                    raise ResourceLimitError(f"Inn closure exceeds cap of {cap} elements")
                queue.append(h)
    return seen


def orbits(X: FiniteRack) -> list[frozenset[int]]:
    """Orbits of Inn(X), sorted by smallest element.

    Orbits of a finite group are the connected components of the graph with
    edges ``y -- S_x(y)``, so the group itself is never built.
    """
    parent = list(range(X.size))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for y in range(X.size):
        for x in range(X.size):
            ra, rb = find(y), find(X.table[y][x])
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    blocks: dict[int, set[int]] = {}
    for y in range(X.size):
        blocks.setdefault(find(y), set()).add(y)
    return sorted((frozenset(b) for b in blocks.values()), key=min)


def orbit_of(X: FiniteRack, x: int) -> frozenset[int]:
    return next(o for o in orbits(X) if x in o)


# -- subquandles -----------------------------------------------------------


def is_closed(X: FiniteRack, S: Iterable[int]) -> bool:
    S = set(S)
    return all(X.table[a][b] in S for a in S for b in S)


def subquandle_closure(X: FiniteRack, S: Iterable[int]) -> frozenset[int]:
    """Smallest superset of ``S`` closed under the operation.

    For a finite rack a multiplicatively closed subset is automatically a
    subrack (each restricted right translation is an injective self-map of
    a finite set); this is re-verified on the result.
    """
    closed = set(S)
    if not closed:
        raise SizeError("closure of the empty set is not a subquandle")
    frontier = list(closed)
    while frontier:
        new = set()
        for a in frontier:
            for b in list(closed):
                for c in (X.table[a][b], X.table[b][a]):
                    if c not in closed:
                        new.add(c)
        closed |= new
        frontier = list(new)
    result = frozenset(closed)
    assert subrack(X, result).satisfies_r1
    return result


def subrack(X: FiniteRack, S: Iterable[int]) -> FiniteRack:
    """The restriction of ``X`` to a closed subset, relabelled by sorted order."""
    elems = sorted(set(S))
    index = {x: k for k, x in enumerate(elems)}
    try:
        table = [[index[X.table[a][b]] for b in elems] for a in elems]
    except KeyError:
        raise SubquandleError(f"{elems} is not closed in {X.name or 'X'}") from None
    return FiniteRack(table, name=f"{X.name}|{elems}")


# -- homomorphisms ---------------------------------------------------------


@dataclass(frozen=True, eq=False)
class QuandleHom:
    """A verified homomorphism ``source -> target``."""

    source: FiniteRack
    target: FiniteRack
    map: tuple[int, ...]

    def __post_init__(self):
        m = tuple(int(v) for v in self.map)
        object.__setattr__(self, "map", m)
        if len(m) != self.source.size or any(not 0 <= v < self.target.size for v in m):
            raise InvalidHomomorphismError("map has the wrong length or out-of-range images")
        S, T = self.source.table, self.target.table
        n = self.source.size
        for x in range(n):
            for y in range(n):
                if m[S[x][y]] != T[m[x]][m[y]]:
                    raise InvalidHomomorphismError(f"f(x{x}*x{y}) != f(x{x})*f(x{y})")

    def __call__(self, x: int) -> int:
        return self.map[x]

    @property
    def is_surjective(self) -> bool:
        return set(self.map) == set(range(self.target.size))

    @property
    def is_injective(self) -> bool:
        return len(set(self.map)) == len(self.map)

    def fiber(self, x: int) -> frozenset[int]:
        """The class ``X_x`` of elements with the same image as ``x``."""
        return frozenset(y for y in range(self.source.size) if self.map[y] == self.map[x])


def homomorphisms(X: FiniteRack, Z: FiniteRack, limit: int | None = None) -> Iterator[QuandleHom]:
    """All homomorphisms ``X -> Z`` by backtracking with incremental checks."""
    n = X.size
    S, T = X.table, Z.table
    f = [-1] * n
    found = 0

    def consistent(k):
        for a in range(k + 1):
            for b in range(k + 1):
                c = S[a][b]
                if c <= k and f[c] != T[f[a]][f[b]]:
                    return False
        return True

    def extend(k):
        nonlocal found
        if k == n:
            yield QuandleHom(X, Z, tuple(f))
            found += 1
            return
        for z in range(Z.size):
            f[k] = z
            if consistent(k):
                yield from extend(k + 1)
                if limit is not None and found >= limit:
                    return
        f[k] = -1

    yield from extend(0)


def quotient_by_hom(f: QuandleHom) -> tuple[FiniteRack, tuple[int, ...]]:
    """The quandle on the fibres of ``f`` with ``X_a o X_b = X_{a*b}``.

    Returns the quotient and the class map ``x -> index of X_x``; classes are
    numbered by their smallest element.
    """
    X = f.source
    reps: dict[int, int] = {}
    class_of = []
    for x in range(X.size):
        class_of.append(reps.setdefault(f.map[x], len(reps)))
    rep_list = [None] * len(reps)
    for x in range(X.size):
        if rep_list[class_of[x]] is None:
            rep_list[class_of[x]] = x
    m = len(rep_list)
    table = [[class_of[X.table[rep_list[a]][rep_list[b]]] for b in range(m)] for a in range(m)]
    for a in range(X.size):
        for b in range(X.size):
            assert table[class_of[a]][class_of[b]] == class_of[X.table[a][b]], "ill-defined class product"
    Q = FiniteRack(table, name=f"{X.name}/~")
    if f.is_surjective:
        induced = [f.map[rep_list[c]] for c in range(m)]
        assert all(
            induced[table[a][b]] == f.target.table[induced[a]][induced[b]]
            for a in range(m)
            for b in range(m)
        ), "quotient is not isomorphic to the image"
    return Q, tuple(class_of)


# -- isomorphism -----------------------------------------------------------


def _element_invariants(X: FiniteRack) -> list[tuple]:
    orb_size = {}
    for o in orbits(X) if X.is_rack else [frozenset(range(X.size))]:
        for x in o:
            orb_size[x] = len(o)
    gens = inner_generators(X)
    invs = []
    for x in range(X.size):
        s = gens[x]
        fixed = sum(1 for y in range(X.size) if s[y] == y)
        row_image = len(set(X.table[x]))
        col_image = len(set(s))
        invs.append((X.table[x][x] == x, orb_size[x], fixed, row_image, col_image, _cycle_type(s)))
    return invs


def _cycle_type(p: Permutation) -> tuple[int, ...]:
    if len(set(p)) != len(p):
        return ()
    seen = [False] * len(p)
    lengths = []
    for i in range(len(p)):
        if not seen[i]:
            k, j = 0, i
            while not seen[j]:
                seen[j] = True
                j = p[j]
                k += 1
            lengths.append(k)
    return tuple(sorted(lengths))


def are_isomorphic(X: FiniteRack, Y: FiniteRack) -> Permutation | None:
    """A bijection ``f`` with ``f(a*b) = f(a)*f(b)``, or ``None``.

    Candidates are pruned by per-element invariants (idempotence, orbit
    size, fixed points and cycle type of ``S_x``) before backtracking.
    """
    n = X.size
    if Y.size != n:
        return None
    ix, iy = _element_invariants(X), _element_invariants(Y)
    if sorted(ix) != sorted(iy):
        return None
    candidates = [[y for y in range(n) if iy[y] == ix[x]] for x in range(n)]
    order = sorted(range(n), key=lambda x: len(candidates[x]))
    S, T = X.table, Y.table
    f = [-1] * n
    used = [False] * n
    assigned: list[int] = []

    def ok(x):
        for a in assigned:
            for b in assigned:
                c = S[a][b]
                if f[c] != -1 and f[c] != T[f[a]][f[b]]:
                    return False
        return True

    def search(k):
        if k == n:
            return all(f[S[a][b]] == T[f[a]][f[b]] for a in range(n) for b in range(n))
        x = order[k]
        for y in candidates[x]:
            if used[y]:
                continue
            f[x] = y
            used[y] = True
            assigned.append(x)
            if ok(x) and search(k + 1):
                return True
            assigned.pop()
            used[y] = False
            f[x] = -1
        return False

    return tuple(f) if search(0) else None

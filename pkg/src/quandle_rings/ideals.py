"""Ideals of integral rack rings as lattices in Z^n.

Coordinates are taken in the basis ``x_0, ..., x_{n-1}`` of Z[X].  Powers of
the augmentation ideal, two-sided closures, the subquandles ``X_{I,x0}`` cut
out by an ideal and the ideals attached to quandle homomorphisms all reduce
to HNF computations in :mod:`quandle_rings.zlattice`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import zlattice as zl
from .errors import HypothesisError, SubquandleError, UncertifiedIdealError
from .quandle import (
    FiniteRack,
    QuandleHom,
    are_isomorphic,
    is_closed,
    orbits,
    subrack,
    trivial,
)
from .ring import ExtElt, RingElt, ext_mul, table_product
from .zlattice import IntLattice, QuotientShape


@dataclass(frozen=True)
class IdealHandle:
    """A subgroup of Z[X] together with a flag saying it is a verified two-sided ideal.

    ``r_prime`` is metadata only: whether the ideal factors as ``I0 * I1``
    is never decided, so it stays ``None`` unless a caller sets it.
    """

    rack: FiniteRack
    lattice: IntLattice
    certified: bool = False
    label: str = ""
    r_prime: bool | None = None

    def __contains__(self, v) -> bool:
        if isinstance(v, RingElt):
            v = v.coeffs
        return zl.member(self.lattice, v)

    @property
    def rank(self) -> int:
        return self.lattice.rank

    def __eq__(self, other):
        return isinstance(other, IdealHandle) and self.rack == other.rack and self.lattice == other.lattice

    def __hash__(self):
        return hash((self.rack, self.lattice))


@dataclass(frozen=True)
class GradedSeries:
    """``Delta^1 ⊇ Delta^2 ⊇ ...`` and the shapes of the successive quotients.

    ``lattices[i]`` is ``Delta^{i+1}``; ``shapes[i]`` describes
    ``Delta^{i+1} / Delta^{i+2}``.
    """

    rack: FiniteRack
    lattices: tuple[IntLattice, ...]
    shapes: tuple[QuotientShape, ...]

    def shape(self, k: int) -> QuotientShape:
        """Shape of ``Delta^k / Delta^{k+1}``."""
        return self.shapes[k - 1]

    def power(self, k: int) -> IntLattice:
        return self.lattices[k - 1]


def _vec(u) -> list[int]:
    if isinstance(u, RingElt):
        return [int(c) for c in u.coeffs]
    return [int(c) for c in u]


def is_two_sided(X: FiniteRack, L: IntLattice) -> bool:
    """Closed under left and right multiplication by every basis element ``x``."""
    n = X.size
    for v in L.basis:
        for x in range(n):
            ex = [int(i == x) for i in range(n)]
            if not zl.member(L, table_product(X.table, ex, v)):
                return False
            if not zl.member(L, table_product(X.table, v, ex)):
                return False
    return True


def certify(X: FiniteRack, L: IntLattice, label: str = "") -> IdealHandle:
    """Wrap ``L``; the certificate is set only if two-sided closure checks out."""
    return IdealHandle(X, L, is_two_sided(X, L), label)


def zero_ideal(X: FiniteRack) -> IdealHandle:
    return IdealHandle(X, zl.zero_lattice(X.size), True, "0")


def whole_ring(X: FiniteRack) -> IdealHandle:
    return IdealHandle(X, zl.full_lattice(X.size), True, "R[X]")


def aug_ideal(X: FiniteRack, x0: int = 0) -> IdealHandle:
    """The augmentation ideal, spanned by ``x - x0``."""
    n = X.size
    rows = [[int(j == i) - int(j == x0) for j in range(n)] for i in range(n) if i != x0]
    L = zl.hnf(rows, n)
    return IdealHandle(X, L, is_two_sided(X, L), "Delta")


def _products(X: FiniteRack, A: IntLattice, B: IntLattice) -> list[list[int]]:
    return [table_product(X.table, u, v) for u in A.basis for v in B.basis]


_POWER_CACHE: dict[tuple, list[IntLattice]] = {}


def _power_lattices(X: FiniteRack, k: int, convention: str) -> list[IntLattice]:
    """``[Delta^1, ..., Delta^k]`` under the given bracketing convention."""
    if convention not in ("full", "edge"):
        raise ValueError("convention must be 'full' or 'edge'")
    key = (X.table, convention)
    powers = _POWER_CACHE.setdefault(key, [aug_ideal(X).lattice])
    n = X.size
    while len(powers) < k:
        m = len(powers) + 1
        if convention == "full":
            splits = [(a, m - a) for a in range(1, m)]
        else:
            splits = [(m - 1, 1), (1, m - 1)]
        rows: list[list[int]] = []
        for a, b in splits:
            rows += _products(X, powers[a - 1], powers[b - 1])
        powers.append(zl.hnf(rows, n))
    return powers[:k]


def ideal_power(X: FiniteRack, k: int, convention: str = "full") -> IdealHandle:
    """``Delta^k``.

    With ``convention="full"`` this is ``sum_{a+b=k} Delta^a Delta^b``; with
    ``"edge"`` only ``Delta^{k-1} Delta + Delta Delta^{k-1}`` is used.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    L = _power_lattices(X, k, convention)[-1]
    return IdealHandle(X, L, is_two_sided(X, L), f"Delta^{k}")


def power_conventions_agree(X: FiniteRack, k_max: int) -> bool:
    full = _power_lattices(X, k_max, "full")
    edge = _power_lattices(X, k_max, "edge")
    return full == edge


def graded_series(X: FiniteRack, k_max: int, convention: str = "full") -> GradedSeries:
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    lats = _power_lattices(X, k_max + 1, convention)
    shapes = tuple(zl.quotient_shape(lats[i + 1], lats[i]) for i in range(k_max))
    return GradedSeries(X, tuple(lats[:k_max]), shapes)


def two_sided_closure(X: FiniteRack, gens: Iterable, label: str = "") -> IdealHandle:
    """Smallest two-sided ideal of Z[X] containing ``gens``.

    Iterates ``L <- L + X.L + L.X`` to a fixpoint; the ascending chain
    condition on subgroups of Z^n guarantees termination.
    """
    n = X.size
    L = zl.hnf([_vec(g) for g in gens], n)
    while True:
        rows = list(L.basis)
        for v in L.basis:
            for x in range(n):
                ex = [int(i == x) for i in range(n)]
                rows.append(table_product(X.table, ex, v))
                rows.append(table_product(X.table, v, ex))
        new = zl.hnf(rows, n)
        if new == L:
            return IdealHandle(X, L, True, label)
        L = new


def relative_ideal(X: FiniteRack, Y: Iterable[int]) -> IdealHandle:
    """Two-sided ideal generated by ``{y - y0 : y in Y}`` for a subrack ``Y``."""
    Y = sorted(set(Y))
    if not Y or not is_closed(X, Y):
        raise SubquandleError(f"{Y} is not a subrack of {X.name or 'X'}")
    n = X.size
    y0 = Y[0]
    gens = [[int(j == y) - int(j == y0) for j in range(n)] for y in Y[1:]]
    return two_sided_closure(X, gens, label=f"Delta(X:{Y})")


def with_modulus(I: IdealHandle, m: int) -> IdealHandle:
    """Pull back the image of ``I`` in (Z/m)[X]: adjoin ``m x_i`` for every ``i``."""
    n = I.rack.size
    L = zl.add(I.lattice, zl.scaled(zl.full_lattice(n), m))
    return IdealHandle(I.rack, L, I.certified, f"{I.label} + {m}Z[X]")


def _require_certified(I: IdealHandle):
    if not I.certified:
        raise UncertifiedIdealError("ideal has no two-sided closure certificate")


def sub_from_ideal(X: FiniteRack, I: IdealHandle, x0: int) -> frozenset[int]:
    """``X_{I,x0} = {x : x - x0 in I}``."""
    _require_certified(I)
    n = X.size
    return frozenset(
        x for x in range(n) if zl.member(I.lattice, [int(j == x) - int(j == x0) for j in range(n)])
    )


def partition_from_ideal(X: FiniteRack, I: IdealHandle) -> list[frozenset[int]]:
    """Blocks ``X_{I,x}``, each checked to be multiplicatively closed, sorted by smallest element."""
    _require_certified(I)
    blocks: list[frozenset[int]] = []
    covered: set[int] = set()
    for x in range(X.size):
        if x in covered:
            continue
        block = sub_from_ideal(X, I, x)
        if not is_closed(X, block):
            raise SubquandleError(f"block {sorted(block)} is not closed")
        blocks.append(block)
        covered |= block
    return blocks


@dataclass
class OrbitIsoReport:
    """Result of comparing ``X_{I,x0}`` and ``X_{I,y0}`` for ``x0, y0`` in one Inn-orbit."""

    rack: FiniteRack
    involutary: bool
    pairs: list[tuple[int, int, frozenset, frozenset, bool]] = field(default_factory=list)

    @property
    def all_isomorphic(self) -> bool:
        return all(p[4] for p in self.pairs)

    @property
    def counterexamples(self) -> list[tuple[int, int]]:
        return [(p[0], p[1]) for p in self.pairs if not p[4]]


def orbit_iso_check(X: FiniteRack, I: IdealHandle, require_involutary: bool = True) -> OrbitIsoReport:
    """Check ``X_{I,x0} ≅ X_{I,y0}`` for every pair in a common Inn-orbit.

    The isomorphism is guaranteed for finite involutary quandles.  With
    ``require_involutary=False`` other racks are scanned too, and any failure
    is reported as a counterexample candidate rather than raised.
    """
    if require_involutary and not (X.is_quandle and X.is_involutary):
        raise HypothesisError(f"{X.name or 'X'} is not an involutary quandle")
    _require_certified(I)
    report = OrbitIsoReport(X, X.is_involutary)
    blocks = {x: sub_from_ideal(X, I, x) for x in range(X.size)}
    for orb in orbits(X):
        elems = sorted(orb)
        for i, x0 in enumerate(elems):
            for y0 in elems[i + 1:]:
                bx, by = blocks[x0], blocks[y0]
                iso = are_isomorphic(subrack(X, bx), subrack(X, by)) is not None
                report.pairs.append((x0, y0, bx, by, iso))
    return report


def normal_ideal(f: QuandleHom) -> IdealHandle:
    """Kernel of ``Z[X] -> Z[X/~]``: vectors whose coefficients sum to zero on every fibre of ``f``."""
    X = f.source
    images = sorted(set(f.map))
    M = [[int(f.map[x] == z) for x in range(X.size)] for z in images]
    L = zl.integer_kernel(M, X.size)
    return certify(X, L, label="ker(pi)")


def dictionary_check(X: FiniteRack, x0: int, f: QuandleHom) -> bool:
    """Recover the normal subquandle ``Y = X_{x0}`` from its ideal: ``Phi(Psi(Y)) == Y``."""
    if f.source != X:
        raise ValueError("homomorphism does not start at X")
    Y = f.fiber(x0)
    return sub_from_ideal(X, normal_ideal(f), x0) == Y


def psi_phi_whole_ring(X: FiniteRack, x0: int = 0) -> IdealHandle:
    """``Psi(Phi(R[X]))``: ``Phi`` of the whole ring is ``X``, normal via the constant map to a point."""
    phi = sub_from_ideal(X, whole_ring(X), x0)
    assert phi == frozenset(range(X.size))
    collapse = QuandleHom(X, trivial(1), (0,) * X.size)
    return normal_ideal(collapse)


def trivial_iff_delta_sq_zero(X: FiniteRack) -> tuple[bool, bool]:
    """``(X is trivial, Delta^2(X) = 0)``; the two agree for quandles."""
    return X.is_trivial, ideal_power(X, 2).lattice.is_zero()


# -- the extended augmentation ideal ---------------------------------------


def _ext_vec(u: ExtElt) -> list[int]:
    return [int(c) for c in u.vector()]


def ext_aug_ideal(X: FiniteRack) -> IntLattice:
    """Kernel of augmentation on Z°[X], spanned by ``x - e``; coordinates ``(x_0..x_{n-1}, e)``."""
    n = X.size
    return zl.hnf([[int(j == i) for j in range(n)] + [-1] for i in range(n)], n + 1)


def ext_aug_square(X: FiniteRack) -> IntLattice:
    n = X.size
    basis = [ExtElt.basis(X, i) - ExtElt.identity(X) for i in range(n)]
    return zl.hnf([_ext_vec(ext_mul(u, v)) for u in basis for v in basis], n + 1)


def ext_delta_idempotent(X: FiniteRack) -> bool:
    return ext_aug_square(X) == ext_aug_ideal(X)

"""Subgroups of Z^n in Hermite normal form, and Smith normal form.

Everything is exact Python integer arithmetic.  The canonical form is the
row-style HNF: nonzero rows, strictly increasing pivot columns, positive
pivots, and entries above each pivot reduced into ``[0, pivot)``.  Two
lattices are equal iff their HNF bases are identical.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ContainmentError, DimensionMismatchError

Matrix = list[list[int]]


@dataclass(frozen=True)
class IntLattice:
    ambient_dim: int
    basis: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(j for j, x in enumerate(row) if x) for row in self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def __contains__(self, v) -> bool:
        return member(self, v)

    def __le__(self, other: "IntLattice") -> bool:
        return contains(other, self)

    def __add__(self, other: "IntLattice") -> "IntLattice":
        return add(self, other)

    def rows(self) -> list[list[int]]:
        return [list(r) for r in self.basis]

    def __str__(self):
        if not self.basis:
            return f"0 in Z^{self.ambient_dim}"
        return "span{" + ", ".join("(" + ",".join(map(str, r)) + ")" for r in self.basis) + "}"


@dataclass(frozen=True)
class QuotientShape:
    """``Z^free_rank + Z/d1 + Z/d2 + ...`` with ``d1 | d2 | ...``, each ``d >= 2``."""

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(self.torsion))
        assert all(d >= 2 for d in self.torsion)
        assert all(b % a == 0 for a, b in zip(self.torsion, self.torsion[1:]))

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def order(self) -> int | None:
        """Number of elements, or ``None`` if infinite."""
        if self.free_rank:
            return None
        out = 1
        for d in self.torsion:
            out *= d
        return out

    def is_cyclic_of_order(self, n: int) -> bool:
        if n == 1:
            return self.free_rank == 0 and not self.torsion
        return self.free_rank == 0 and self.torsion == (n,)

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts += [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion), "text": str(self)}


def _check_dim(v: Sequence[int], dim: int):
    if len(v) != dim:
        raise DimensionMismatchError(f"vector of length {len(v)} in Z^{dim}")


def hnf(rows: Iterable[Sequence[int]], ambient_dim: int) -> IntLattice:
    """Canonical HNF basis of the subgroup generated by ``rows``."""
    A: Matrix = []
    for r in rows:
        _check_dim(r, ambient_dim)
        if any(r):
            A.append([int(x) for x in r])
    p = 0
    for col in range(ambient_dim):
        if p == len(A):
            break
        while True:
            nz = [i for i in range(p, len(A)) if A[i][col]]
            if not nz:
                break
            k = min(nz, key=lambda i: abs(A[i][col]))
            A[p], A[k] = A[k], A[p]
            piv = A[p]
            clean = True
            for i in range(p + 1, len(A)):
                if A[i][col]:
                    q = A[i][col] // piv[col]
                    row = A[i]
                    for j in range(col, ambient_dim):
                        row[j] -= q * piv[j]
                    if row[col]:
                        clean = False
            if clean:
                break
        if not any(A[i][col] for i in range(p, len(A))):
            continue
        if A[p][col] < 0:
            A[p] = [-x for x in A[p]]
        piv = A[p]
        for i in range(p):
            q = A[i][col] // piv[col]
            if q:
                row = A[i]
                for j in range(col, ambient_dim):
                    row[j] -= q * piv[j]
        p += 1
        A = A[:p] + [r for r in A[p:] if any(r)]
    return IntLattice(ambient_dim, tuple(tuple(r) for r in A[:p]))


def zero_lattice(dim: int) -> IntLattice:
    return IntLattice(dim, ())


def full_lattice(dim: int) -> IntLattice:
    return IntLattice(dim, tuple(tuple(int(i == j) for j in range(dim)) for i in range(dim)))


def coordinates(L: IntLattice, v: Sequence[int]) -> list[int] | None:
    """Integer coefficients of ``v`` in the basis of ``L`` (back-substitution), or ``None``."""
    _check_dim(v, L.ambient_dim)
    v = list(v)
    coeffs = []
    for row, c in zip(L.basis, L.pivots):
        if any(v[j] for j in range(c)):
            return None
        q, r = divmod(v[c], row[c])
        if r:
            return None
        coeffs.append(q)
        if q:
            for j in range(c, L.ambient_dim):
                v[j] -= q * row[j]
    return coeffs if not any(v) else None


def member(L: IntLattice, v: Sequence[int]) -> bool:
    return coordinates(L, v) is not None


def add(L1: IntLattice, L2: IntLattice) -> IntLattice:
    if L1.ambient_dim != L2.ambient_dim:
        raise DimensionMismatchError("lattices in different ambient dimensions")
    return hnf(L1.basis + L2.basis, L1.ambient_dim)


def equal(L1: IntLattice, L2: IntLattice) -> bool:
    if L1.ambient_dim != L2.ambient_dim:
        raise DimensionMismatchError("lattices in different ambient dimensions")
    return L1.basis == L2.basis


def contains(sup: IntLattice, sub: IntLattice) -> bool:
    if sup.ambient_dim != sub.ambient_dim:
        raise DimensionMismatchError("lattices in different ambient dimensions")
    return all(member(sup, r) for r in sub.basis)


def scaled(L: IntLattice, k: int) -> IntLattice:
    return hnf([[k * x for x in r] for r in L.basis], L.ambient_dim)


# -- Smith normal form ----------------------------------------------------


def _identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(M: Sequence[Sequence[int]], ncols: int | None = None) -> tuple[Matrix, Matrix, Matrix]:
    """Return ``(D, U, V)`` with ``U M V = D`` diagonal, ``U`` and ``V`` unimodular.

    The diagonal entries are non-negative and each divides the next.
    """
    A = [[int(x) for x in row] for row in M]
    m = len(A)
    n = ncols if ncols is not None else (len(A[0]) if A else 0)
    if any(len(r) != n for r in A):
        raise DimensionMismatchError("ragged matrix")
    U, V = _identity(m), _identity(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst += q row_src
        A[dst] = [a + q * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):  # col_dst += q col_src
        for row in A:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    for t in range(min(m, n)):
        entries = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
        if not entries:
            break
        _, i, j = min(entries)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            done = True
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // A[t][t]))
                    if A[i][t]:
                        done = False
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // A[t][t]))
                    if A[t][j]:
                        done = False
            if not done:
                entries = [(abs(A[i][t]), i, t) for i in range(t, m) if A[i][t]]
                entries += [(abs(A[t][j]), t, j) for j in range(t, n) if A[t][j]]
                _, i, j = min(entries)
                swap_rows(t, i)
                swap_cols(t, j)
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % A[t][t]),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
    return A, U, V


def invariant_factors(M: Sequence[Sequence[int]], ncols: int | None = None) -> list[int]:
    D, _, _ = smith_normal_form(M, ncols)
    return [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0)) if D[i][i]]


def quotient_shape(sub: IntLattice, sup: IntLattice) -> QuotientShape:
    """Structure of ``sup / sub`` as a finitely generated abelian group."""
    if sub.ambient_dim != sup.ambient_dim:
        raise DimensionMismatchError("lattices in different ambient dimensions")
    coords = []
    for r in sub.basis:
        c = coordinates(sup, r)
        if c is None:
            raise ContainmentError(f"{r} is not in the larger lattice")
        coords.append(c)
    diag = invariant_factors(coords, sup.rank) if coords else []
    return QuotientShape(sup.rank - len(diag), tuple(d for d in diag if d > 1))


def integer_kernel(M: Sequence[Sequence[int]], ncols: int | None = None) -> IntLattice:
    """The lattice ``{v in Z^ncols : M v = 0}``."""
    n = ncols if ncols is not None else len(M[0])
    if not M:
        return full_lattice(n)
    D, _, V = smith_normal_form(M, n)
    rank = sum(1 for i in range(min(len(D), n)) if D[i][i])
    return hnf([[V[i][j] for i in range(n)] for j in range(rank, n)], n)

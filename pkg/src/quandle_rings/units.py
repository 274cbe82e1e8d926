"""Units of extended rack rings.

The closed-form results here concern trivial racks, where R°[T] is
associative, and latin racks, whose element ``w = x_1 + ... + x_n`` is
central.  Independent checks solve ``u v = e`` directly: by exact linear
algebra over Z and Q, and by exhaustive enumeration over Z/m.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import zlattice as zl
from .coeff import QQ, ZZ, CoeffRing
from .errors import HypothesisError, NonUnitError, ResourceLimitError
from .quandle import FiniteRack
from .ring import ExtElt, RingElt, ext_augmentation, ext_mul, mul
from .zlattice import IntLattice

DEFAULT_ENUMERATION_CAP = 5_000


@dataclass(frozen=True)
class UnitRecord:
    element: ExtElt
    inverse: ExtElt
    classification: str  # "V1", "V2" or "general"
    epsilon: object

    def __post_init__(self):
        e = ExtElt.identity(self.element.rack, self.element.ring)
        assert ext_mul(self.element, self.inverse) == e
        assert ext_mul(self.inverse, self.element) == e

    def to_json(self) -> dict:
        ring = self.element.ring
        return {
            "element": self.element.to_json(),
            "inverse": self.inverse.to_json(),
            "classification": self.classification,
            "epsilon": ring.to_json(self.epsilon),
            "text": str(self.element),
        }


def classify(u: ExtElt, x0: int = 0) -> str:
    """``V1`` for ``e + a`` with ``a`` augmentation-zero, ``V2`` for ``e + (l-1) x0``."""
    r = u.ring
    if u.unit_coeff != r.one():
        return "general"
    body = u.body.coeffs
    if r.is_zero(_sum(r, body)):
        return "V1"
    if all(r.is_zero(c) for i, c in enumerate(body) if i != x0):
        return "V2"
    return "general"


def _sum(r: CoeffRing, values):
    total = r.zero()
    for c in values:
        total = r.add(total, c)
    return total


def _x0(T: FiniteRack, x0: int, ring: CoeffRing) -> ExtElt:
    return ExtElt.basis(T, x0, ring)


# -- generic inverse search ------------------------------------------------


def structure_tensor(X: FiniteRack) -> np.ndarray:
    """``C[i, j, k]``: coefficient of basis ``k`` in ``b_i b_j`` over ``(x_0, ..., x_{n-1}, e)``.

    Built by multiplying basis elements with :func:`ext_mul`.
    """
    n = X.size
    basis = [ExtElt.basis(X, i) for i in range(n)] + [ExtElt.identity(X)]
    C = np.zeros((n + 1, n + 1, n + 1), dtype=np.int64)
    for i, bi in enumerate(basis):
        for j, bj in enumerate(basis):
            C[i, j] = [int(c) for c in ext_mul(bi, bj).vector()]
    return C


def left_mult_matrix(u: ExtElt) -> list[list]:
    """Matrix of ``v -> u v`` in the basis ``(x_0, ..., x_{n-1}, e)``."""
    X, r = u.rack, u.ring
    n = X.size
    cols = []
    for k in range(n + 1):
        b = ExtElt.identity(X, r) if k == n else ExtElt.basis(X, k, r)
        cols.append(ext_mul(u, b).vector())
    return [[cols[k][i] for k in range(n + 1)] for i in range(n + 1)]


def _solve_rational(A: list[list], b: list) -> list[Fraction] | None:
    """Unique solution of ``A x = b`` over Q, or ``None`` if ``A`` is singular."""
    n = len(A)
    M = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(A, b)]
    for c in range(n):
        p = next((i for i in range(c, n) if M[i][c]), None)
        if p is None:
            return None
        M[c], M[p] = M[p], M[c]
        piv = M[c][c]
        M[c] = [x / piv for x in M[c]]
        for i in range(n):
            if i != c and M[i][c]:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[c])]
    return [M[i][n] for i in range(n)]


def ext_inverse(u: ExtElt) -> ExtElt | None:
    """A two-sided inverse of ``u``, found without any closed form.

    Over Z and Q the equation ``u v = e`` is solved exactly (a singular left
    multiplication means no inverse in the associative case); over Z/m every
    element of the ring is tried.
    """
    X, r = u.rack, u.ring
    n = X.size
    e = ExtElt.identity(X, r)
    if r.kind in ("Z", "Q"):
        target = [0] * n + [1]
        sol = _solve_rational(left_mult_matrix(u), target)
        if sol is None:
            return None
        if r.kind == "Z" and any(x.denominator != 1 for x in sol):
            return None
        v = ExtElt.from_coeffs(X, sol[:n], sol[n], r)
        return v if ext_mul(v, u) == e else None
    if r.kind == "Zmod":
        ring = FiniteExtRing(X, r.modulus)
        idx = ring.index_of(u.vector())
        j = ring.two_sided_inverse(idx)
        return None if j is None else ring.element(j)
    raise HypothesisError(f"inverse search is not available over {r}")


class FiniteExtRing:
    """All of (Z/m)°[X], enumerated, with vectorized multiplication."""

    def __init__(self, X: FiniteRack, m: int, cap: int = DEFAULT_ENUMERATION_CAP):
        size = m ** (X.size + 1)
        if size > cap:
            raise ResourceLimitError(f"(Z/{m})°[X] has {size} elements, cap is {cap}")
        self.rack = X
        self.m = m
        self.ring = CoeffRing("Zmod", modulus=m)
        self.dim = X.size + 1
        self.vectors = np.array(list(itertools.product(range(m), repeat=self.dim)), dtype=np.int64)
        self.C = structure_tensor(X)
        self.weights = m ** np.arange(self.dim - 1, -1, -1)
        self.e_index = self.index_of([0] * X.size + [1])
        self._unit_cache: list[int] | None = None

    def __len__(self):
        return len(self.vectors)

    def index_of(self, vec) -> int:
        return int(np.dot(np.asarray([int(v) % self.m for v in vec]), self.weights))

    def element(self, idx: int) -> ExtElt:
        v = self.vectors[idx].tolist()
        return ExtElt.from_coeffs(self.rack, v[:-1], v[-1], self.ring)

    def left_products(self, idx: int) -> np.ndarray:
        """Indices of ``a b`` for the fixed ``a = elements[idx]`` and every ``b``."""
        a = self.vectors[idx]
        L = np.einsum("i,ijk->jk", a, self.C) % self.m  # row j: a * basis_j
        prods = (self.vectors @ L) % self.m
        return prods @ self.weights

    def right_products(self, idx: int) -> np.ndarray:
        b = self.vectors[idx]
        R = np.einsum("j,ijk->ik", b, self.C) % self.m
        prods = (self.vectors @ R) % self.m
        return prods @ self.weights

    def product(self, i: int, j: int) -> int:
        a, b = self.vectors[i], self.vectors[j]
        vec = np.einsum("i,j,ijk->k", a, b, self.C) % self.m
        return int(vec @ self.weights)

    def two_sided_inverse(self, idx: int) -> int | None:
        right = np.nonzero(self.left_products(idx) == self.e_index)[0]
        if len(right) == 0:
            return None
        left = self.right_products(idx)
        for j in right:
            if left[j] == self.e_index:
                return int(j)
        return None

    def units(self) -> list[int]:
        if self._unit_cache is None:
            self._unit_cache = [i for i in range(len(self)) if self.two_sided_inverse(i) is not None]
        return self._unit_cache

    def augmentation(self, idx: int) -> int:
        return int(self.vectors[idx].sum() % self.m)


# -- trivial racks -----------------------------------------------------------


def _require_trivial(T: FiniteRack):
    if not T.is_trivial:
        raise HypothesisError(f"{T.name or 'X'} is not a trivial rack")


def _require_unital(ring: CoeffRing):
    if ring.kind not in ("Z", "Q", "Zmod"):
        raise HypothesisError(f"{ring} is not a supported unital coefficient ring")


def trivial_unit_decomposition(u: ExtElt, x0: int = 0) -> tuple[RingElt, object]:
    """Write a normalized ``u`` as ``e + a + alpha (x0 - e)``; return ``(a, alpha)``."""
    r = u.ring
    alpha = r.sub(r.one(), u.unit_coeff)
    a = u.body - RingElt.basis(u.rack, x0, r).scale(alpha)
    return a, alpha


def trivial_rack_unit(u: ExtElt, x0: int = 0) -> UnitRecord | None:
    """Closed-form unit test and inverse for the extended ring of a trivial rack.

    A normalized ``u = e + a + alpha (x0 - e)`` is a unit iff ``alpha - 1`` is
    a unit, with inverse ``e + a/(alpha-1) + alpha/(alpha-1) (x0 - e)``.  An
    element with unit augmentation ``l`` is handled as ``l`` times a
    normalized one.
    """
    T, r = u.rack, u.ring
    _require_trivial(T)
    _require_unital(r)
    lam = ext_augmentation(u)
    if not r.is_unit(lam):
        return None
    lam_inv = r.inv(lam)
    w = u.scale(lam_inv)
    a, alpha = trivial_unit_decomposition(w, x0)
    am1 = r.sub(alpha, r.one())
    if not r.is_unit(am1):
        return None
    c = r.inv(am1)
    e = ExtElt.identity(T, r)
    x0_minus_e = _x0(T, x0, r) - e
    w_inv = e + ExtElt(a.scale(c), 0) + x0_minus_e.scale(r.mul(alpha, c))
    inverse = w_inv.scale(lam_inv)
    return UnitRecord(u, inverse, classify(u, x0), lam)


def closed_form_is_unit(u: ExtElt, x0: int = 0) -> bool:
    T, r = u.rack, u.ring
    _require_trivial(T)
    lam = ext_augmentation(u)
    if not r.is_unit(lam):
        return False
    _, alpha = trivial_unit_decomposition(u.scale(r.inv(lam)), x0)
    return r.is_unit(r.sub(alpha, r.one()))


def trivial_v_inverse(v: ExtElt, x0: int = 0) -> ExtElt:
    """Inverse of ``v = e + a0 + (l - 1) x0`` in R°[T]: ``e - a0/l + (1/l - 1) x0``."""
    T, r = v.rack, v.ring
    _require_trivial(T)
    if v.unit_coeff != r.one():
        raise ValueError("element does not have unit coefficient 1")
    lam = ext_augmentation(v)
    if not r.is_unit(lam):
        raise NonUnitError(f"augmentation {r.render(lam)} is not a unit")
    li = r.inv(lam)
    x0e = RingElt.basis(T, x0, r)
    a0 = v.body - x0e.scale(r.sub(lam, r.one()))
    body = a0.scale(r.neg(li)) + x0e.scale(r.sub(li, r.one()))
    return ExtElt(body, 1)


def v_decompose(v: ExtElt, x0: int = 0) -> tuple[ExtElt, ExtElt]:
    """Split ``v = e + a0 + (l-1) x0`` as ``u1 u2`` with ``u1 = e + a0 (e + (1/l - 1) x0)`` and ``u2 = e + (l-1) x0``.

    The recombination is verified; it holds for trivial racks and can fail
    for non-associative extended rings, in which case ``HypothesisError`` is
    raised.
    """
    X, r = v.rack, v.ring
    if v.unit_coeff != r.one():
        raise ValueError("v must have unit coefficient 1")
    lam = ext_augmentation(v)
    if not r.is_unit(lam):
        raise NonUnitError(f"augmentation {r.render(lam)} is not a unit")
    x0e = RingElt.basis(X, x0, r)
    a0 = v.body - x0e.scale(r.sub(lam, r.one()))
    right = ExtElt(x0e.scale(r.sub(r.inv(lam), r.one())), 1)
    u1 = ExtElt.identity(X, r) + ext_mul(ExtElt(a0, 0), right)
    u2 = ExtElt(x0e.scale(r.sub(lam, r.one())), 1)
    if ext_mul(u1, u2) != v:
        raise HypothesisError("u1 u2 does not recombine to v in this ring")
    return u1, u2


def v2_element(T: FiniteRack, lam, ring: CoeffRing, x0: int = 0) -> ExtElt:
    return ExtElt(RingElt.basis(T, x0, ring).scale(ring.sub(ring(lam), ring.one())), 1)


@dataclass
class SplitSequenceReport:
    modulus: int
    ring_size: int
    units: int
    V: int
    V1: int
    V2: int
    V2_matches_unit_group: bool
    order_multiplies: bool
    V1_normal: bool
    phi_is_hom: bool
    kernel_is_V1: bool

    @property
    def ok(self) -> bool:
        return all(
            (self.V2_matches_unit_group, self.order_multiplies, self.V1_normal, self.phi_is_hom, self.kernel_is_V1)
        )


def split_sequence_probe(T: FiniteRack, m: int, x0: int = 0, cap: int = DEFAULT_ENUMERATION_CAP) -> SplitSequenceReport:
    """Check ``1 -> V1 -> V -> V2 -> 1`` by enumerating all of (Z/m)°[T]."""
    _require_trivial(T)
    ring = FiniteExtRing(T, m, cap)
    R = ring.ring
    n = T.size
    units = ring.units()
    V = [i for i in units if ring.vectors[i][n] == 1]
    V1 = [i for i in V if ring.augmentation(i) == 1]
    V2 = sorted(ring.index_of([0] * x0 + [(lam - 1) % m] + [0] * (n - x0 - 1) + [1]) for lam in R.units())
    Vset, V1set = set(V), set(V1)
    unit_set = set(units)

    def phi(i):
        lam = ring.augmentation(i)
        return ring.index_of([0] * x0 + [(lam - 1) % m] + [0] * (n - x0 - 1) + [1])

    phi_hom = all(phi(ring.product(a, b)) == ring.product(phi(a), phi(b)) for a in V for b in V)
    kernel = sorted(i for i in V if phi(i) == ring.e_index)
    normal = True
    for g in units:
        gi = ring.two_sided_inverse(g)
        for h in V1:
            if ring.product(ring.product(gi, h), g) not in V1set:
                normal = False
                break
        if not normal:
            break
    return SplitSequenceReport(
        modulus=m,
        ring_size=len(ring),
        units=len(unit_set),
        V=len(V),
        V1=len(V1),
        V2=len(V2),
        V2_matches_unit_group=set(V2) <= Vset and len(V2) == len(R.units()),
        order_multiplies=len(V) == len(V1) * len(V2),
        V1_normal=normal,
        phi_is_hom=phi_hom,
        kernel_is_V1=kernel == sorted(V1),
    )


@dataclass
class UnitScanRow:
    element: ExtElt
    has_inverse: bool
    closed_form: bool


def unit_scan(T: FiniteRack, ring: CoeffRing, radius: int = 3, x0: int = 0, normalized_only: bool = False) -> list[UnitScanRow]:
    """Compare the independent inverse search with the closed form on a box of elements.

    Over Z the box is ``[-radius, radius]^(n+1)``; over Z/m the whole ring is
    scanned.
    """
    _require_trivial(T)
    n = T.size
    rows = []
    if ring.kind == "Zmod":
        fr = FiniteExtRing(T, ring.modulus)
        for i in range(len(fr)):
            u = fr.element(i)
            if normalized_only and ext_augmentation(u) != ring.one():
                continue
            rows.append(UnitScanRow(u, fr.two_sided_inverse(i) is not None, closed_form_is_unit(u, x0)))
        return rows
    rng = range(-radius, radius + 1)
    for vec in itertools.product(rng, repeat=n + 1):
        u = ExtElt.from_coeffs(T, vec[:n], vec[n], ring)
        if normalized_only and ext_augmentation(u) != ring.one():
            continue
        rows.append(UnitScanRow(u, ext_inverse(u) is not None, closed_form_is_unit(u, x0)))
    return rows


# -- commutators -------------------------------------------------------------


def pair_element(T2: FiniteRack, eps, ring: CoeffRing) -> ExtElt:
    """``e + (y - x) + (eps - 1) x`` in R°[T2] with ``x = x_0``, ``y = x_1``."""
    eps = ring(eps)
    return ExtElt.from_coeffs(T2, [ring.sub(eps, ring(2)), 1], 1, ring)


def commutator(a: ExtElt, b: ExtElt, a_inv: ExtElt, b_inv: ExtElt) -> ExtElt:
    """``[a, b] = a^-1 b^-1 a b``."""
    return ext_mul(ext_mul(ext_mul(a_inv, b_inv), a), b)


@dataclass
class CommutatorSequence:
    terms: list[ExtElt]
    closed_forms: list[ExtElt] = field(default_factory=list)

    @property
    def matches_closed_form(self) -> bool:
        return self.terms == self.closed_forms

    def nontrivial(self) -> list[bool]:
        if not self.terms:
            return []
        e = ExtElt.identity(self.terms[0].rack, self.terms[0].ring)
        return [w != e for w in self.terms]


def commutator_closed_form(T2: FiniteRack, eps_v, eps_u, n: int, ring: CoeffRing) -> ExtElt:
    """``e + (eps_u - eps_v)(eps_u - 1)^(n-1) (y - x)``."""
    c = ring.mul(ring.sub(eps_u, eps_v), ring(ring.sub(eps_u, ring.one()) ** (n - 1) if ring.kind != "Zmod"
                                             else pow(ring.sub(eps_u, ring.one()), n - 1, ring.modulus)))
    return ExtElt.from_coeffs(T2, [ring.neg(c), c], 1, ring)


def commutator_sequence(v: ExtElt, u: ExtElt, depth: int) -> CommutatorSequence:
    """``w_1 = [v, u]``, ``w_k = [w_{k-1}, u]`` in R°[T2], inverses from the trivial-rack formula.

    When ``v`` and ``u`` both have the form ``e + (y-x) + (eps-1) x`` the
    terms are paired with the closed form.
    """
    T, r = v.rack, v.ring
    _require_trivial(T)
    if T.size != 2:
        raise HypothesisError("commutator sequence is defined on the two-element trivial rack")
    if r.kind not in ("Q", "Zmod"):
        raise HypothesisError("commutator sequence needs Q or Z/m coefficients")
    eps_v, eps_u = ext_augmentation(v), ext_augmentation(u)
    for eps in (eps_v, eps_u):
        if not r.is_unit(eps):
            raise NonUnitError(f"augmentation {r.render(eps)} is not a unit")
    u_inv = trivial_v_inverse(u)
    terms = []
    w = commutator(v, u, trivial_v_inverse(v), u_inv)
    terms.append(w)
    for _ in range(depth - 1):
        w = commutator(w, u, trivial_v_inverse(w), u_inv)
        terms.append(w)
    seq = CommutatorSequence(terms)
    if v == pair_element(T, eps_v, r) and u == pair_element(T, eps_u, r):
        seq.closed_forms = [commutator_closed_form(T, eps_v, eps_u, k, r) for k in range(1, depth + 1)]
    return seq


# -- centers and latin racks ---------------------------------------------------


@dataclass(frozen=True)
class CenterLattice:
    rack: FiniteRack
    lattice: IntLattice


def center_lattice(X: FiniteRack) -> CenterLattice:
    """Integer vectors ``u`` with ``u a_j = a_j u`` for every basis element ``a_j``."""
    n, t = X.size, X.table
    M = []
    for j in range(n):
        for k in range(n):
            M.append([int(t[i][j] == k) - int(t[j][i] == k) for i in range(n)])
    return CenterLattice(X, zl.integer_kernel(M, n))


def is_central(u: RingElt) -> bool:
    X = u.rack
    return all(
        mul(u, RingElt.basis(X, j, u.ring)) == mul(RingElt.basis(X, j, u.ring), u) for j in range(X.size)
    )


def sum_element(X: FiniteRack, ring: CoeffRing = ZZ) -> RingElt:
    """``w = x_1 + ... + x_n``."""
    return RingElt(X, [1] * X.size, ring)


def latin_central_units(X: FiniteRack, alpha) -> UnitRecord:
    """``e + alpha w`` over Q with inverse ``e - alpha/(1 + n alpha) w``.

    Also checks that ``w`` is central and that ``w/n`` is idempotent.
    """
    if not X.is_latin:
        raise HypothesisError(f"{X.name or 'X'} is not latin")
    alpha = Fraction(alpha)
    n = X.size
    if 1 + n * alpha == 0:
        raise NonUnitError(f"alpha = -1/{n} gives a non-invertible element")
    w = sum_element(X, QQ)
    assert is_central(w), "w is not central"
    idem = w.scale(Fraction(1, n))
    assert mul(idem, idem) == idem, "w/n is not idempotent"
    e = ExtElt.identity(X, QQ)
    element = e + ExtElt(w.scale(alpha), 0)
    inverse = e + ExtElt(w.scale(-alpha / (1 + n * alpha)), 0)
    return UnitRecord(element, inverse, classify(element), ext_augmentation(element))

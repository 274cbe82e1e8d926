import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from quandle_rings import catalog
from quandle_rings import ideals as idl
from quandle_rings import zlattice as zl
from quandle_rings.errors import HypothesisError, SubquandleError, UncertifiedIdealError
from quandle_rings.quandle import QuandleHom, dihedral, flip_rack, homomorphisms, trivial, two_elem_rack
from quandle_rings.ring import symmetrization_defect, table_product


def e(n, i):
    return [int(j == i) - int(j == 0) for j in range(n)]


def comb(n, *terms):
    return [sum(c * v[j] for c, v in terms) for j in range(n)]


def span(n, *rows):
    return zl.hnf(rows, n)


def brute_two_sided(X, L):
    n = X.size
    for v in L.basis:
        for x in range(n):
            ex = [int(i == x) for i in range(n)]
            if table_product(X.table, ex, v) not in L or table_product(X.table, v, ex) not in L:
                return False
    return True


def test_aug_ideal():
    assert idl.aug_ideal(dihedral(3)).rank == 2
    assert idl.aug_ideal(trivial(1)).lattice.is_zero()
    R4 = dihedral(4)
    D = idl.aug_ideal(R4)
    assert D.certified
    for x, y in itertools.product(range(4), repeat=2):
        assert [int(j == x) - int(j == y) for j in range(4)] in D
    assert idl.aug_ideal(R4, x0=2) == D


@pytest.mark.parametrize("k", range(1, 4))
def test_r3_powers(k):
    n = 3
    odd = span(n, comb(n, (3 ** (k - 1), e(n, 1))), comb(n, (3 ** (k - 1), e(n, 2))))
    even = span(n, comb(n, (3 ** (k - 1), e(n, 1)), (3 ** (k - 1), e(n, 2))), comb(n, (3**k, e(n, 2))))
    assert idl.ideal_power(dihedral(3), 2 * k - 1).lattice == odd
    assert idl.ideal_power(dihedral(3), 2 * k).lattice == even


def test_r3_quotients_and_residual_probe():
    gs = idl.graded_series(dihedral(3), 8)
    assert all(gs.shape(k).is_cyclic_of_order(3) for k in range(1, 9))
    assert all(not gs.power(k).is_zero() for k in range(1, 9))


def test_r4_square_and_shapes():
    n = 4
    D2 = span(n, comb(n, (1, e(n, 1)), (-1, e(n, 2)), (-1, e(n, 3))), comb(n, (2, e(n, 2))))
    assert idl.ideal_power(dihedral(4), 2).lattice == D2
    gs = idl.graded_series(dihedral(4), 6)
    assert str(gs.shape(1)) == "Z + Z/2"
    assert all(str(gs.shape(k)) == "Z/2 + Z/2" for k in range(2, 7))


@pytest.mark.parametrize("k", range(3, 7))
def test_r4_higher_powers(k):
    # the computed pattern: 2^(k-2)(e1 - e2 - e3), 2^(k-1) e2
    n = 4
    got = idl.ideal_power(dihedral(4), k).lattice
    computed = span(n, comb(n, (2 ** (k - 2), e(n, 1)), (-(2 ** (k - 2)), e(n, 2)), (-(2 ** (k - 2)), e(n, 3))),
                    comb(n, (2 ** (k - 1), e(n, 2))))
    assert got == computed
    # Delta^3 by direct multiplication of the Delta^2 basis by e1, e2, e3 on both sides
    if k == 3:
        X = dihedral(4)
        D2 = idl.ideal_power(X, 2).lattice
        rows = []
        for v in D2.basis:
            for i in (1, 2, 3):
                rows += [table_product(X.table, v, e(n, i)), table_product(X.table, e(n, i), v)]
        assert zl.hnf(rows, n) == got


def test_r5_square():
    n = 5
    expected = span(
        n,
        comb(n, (1, e(n, 1)), (-1, e(n, 2)), (-1, e(n, 4))),
        comb(n, (1, e(n, 2)), (2, e(n, 4))),
        comb(n, (1, e(n, 3)), (3, e(n, 4))),
        comb(n, (5, e(n, 4))),
    )
    assert idl.ideal_power(dihedral(5), 2).lattice == expected
    assert idl.graded_series(dihedral(5), 1).shape(1).is_cyclic_of_order(5)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_power_conventions_agree(n):
    assert idl.power_conventions_agree(dihedral(n), 6)


@pytest.mark.parametrize("key", [k for k in catalog.keys() if catalog.get(k).size <= 8])
def test_containment_chain(key):
    X = catalog.get(key)
    gs = idl.graded_series(X, 4)
    for k in range(1, 4):
        assert gs.power(k + 1) <= gs.power(k)


def test_t2_closure_example():
    X = trivial(2)
    I = idl.two_sided_closure(X, [[2, 2]])
    assert I.lattice == span(2, [2, 2], [0, 4])
    # {2a x + (2a + 4b) y}: brute-force membership in a box
    for a, b in itertools.product(range(-3, 4), repeat=2):
        assert [2 * a, 2 * a + 4 * b] in I
    assert [2, 0] not in I and [0, 2] not in I
    assert idl.sub_from_ideal(X, I, 0) == {0}
    assert idl.sub_from_ideal(X, I, 1) == {1}
    assert idl.two_sided_closure(X, [[0, 0]]).lattice.is_zero()


@given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=1, max_size=2))
@settings(max_examples=40, deadline=None)
def test_closure_is_smallest_two_sided(gens):
    X = dihedral(4)
    I = idl.two_sided_closure(X, gens)
    assert brute_two_sided(X, I.lattice)
    assert all(g in I for g in gens)
    # minimality: contained in Delta whenever the generators are
    if all(sum(g) == 0 for g in gens):
        assert I.lattice <= idl.aug_ideal(X).lattice


def test_relative_ideal():
    T3 = trivial(3)
    assert idl.relative_ideal(T3, [0, 1]).lattice == span(3, [1, -1, 0])
    R4 = dihedral(4)
    assert idl.relative_ideal(R4, range(4)).lattice == idl.aug_ideal(R4).lattice
    assert idl.relative_ideal(R4, [2]).lattice.is_zero()
    with pytest.raises(SubquandleError):
        idl.relative_ideal(dihedral(3), [0, 1])


def test_partitions():
    R4 = dihedral(4)
    assert idl.partition_from_ideal(R4, idl.ideal_power(R4, 2)) == [frozenset({i}) for i in range(4)]
    assert idl.partition_from_ideal(R4, idl.aug_ideal(R4)) == [frozenset(range(4))]
    assert idl.partition_from_ideal(R4, idl.zero_ideal(R4)) == [frozenset({i}) for i in range(4)]
    with pytest.raises(UncertifiedIdealError):
        idl.sub_from_ideal(R4, idl.IdealHandle(R4, zl.full_lattice(4)), 0)
    # certify refuses a lattice that is not an ideal
    assert not idl.certify(dihedral(3), span(3, [1, -1, 0])).certified


@pytest.mark.parametrize("key", catalog.keys())
def test_partition_blocks_cover_disjointly(key):
    X = catalog.get(key)
    if not X.is_quandle:
        return
    ideals = [idl.ideal_power(X, k) for k in (1, 2, 3)]
    ideals.append(idl.with_modulus(idl.ideal_power(X, 2), 2))
    for I in ideals:
        blocks = idl.partition_from_ideal(X, I)
        assert sorted(x for b in blocks for x in b) == list(range(X.size))


def test_blocks_of_racks_need_not_be_closed():
    X = flip_rack(4)
    with pytest.raises(SubquandleError):
        idl.partition_from_ideal(X, idl.ideal_power(X, 2))


def test_orbit_iso():
    R5 = dihedral(5)
    rep = idl.orbit_iso_check(R5, idl.ideal_power(R5, 2))
    assert rep.all_isomorphic and len(rep.pairs) == 10
    T2 = trivial(2)
    I = idl.two_sided_closure(T2, [[2, 2]])
    assert idl.sub_from_ideal(T2, I, 0) != idl.sub_from_ideal(T2, I, 1)
    with pytest.raises(HypothesisError):
        idl.orbit_iso_check(catalog.get("alexZ5t2"), idl.aug_ideal(dihedral(5)))


def test_dictionary():
    R4, T2 = dihedral(4), trivial(2)
    f = QuandleHom(R4, T2, (0, 1, 0, 1))
    assert f.fiber(0) == {0, 2}
    assert idl.dictionary_check(R4, 0, f)
    inj = QuandleHom(R4, R4, (0, 1, 2, 3))
    assert idl.normal_ideal(inj).lattice.is_zero()
    assert idl.dictionary_check(R4, 1, inj)
    whole = idl.psi_phi_whole_ring(R4)
    assert whole.lattice == idl.aug_ideal(R4).lattice != zl.full_lattice(4)


def test_dictionary_random_homs():
    rng = random.Random(7)
    keys = [k for k in catalog.keys() if catalog.get(k).is_quandle and catalog.get(k).size <= 6]
    checked = 0
    while checked < 10:
        X, Z = catalog.get(rng.choice(keys)), catalog.get(rng.choice(keys))
        homs = list(homomorphisms(X, Z, limit=20))
        if not homs:
            continue
        f = rng.choice(homs)
        assert all(idl.dictionary_check(X, x0, f) for x0 in range(X.size))
        checked += 1


def test_trivial_iff_delta_square_zero():
    for X in catalog.quandles():
        t, z = idl.trivial_iff_delta_sq_zero(X)
        assert t == z, X.name
    assert idl.trivial_iff_delta_sq_zero(flip_rack(4)) == (False, True)
    assert idl.trivial_iff_delta_sq_zero(dihedral(3)) == (False, False)


def test_symmetrization_in_square():
    for X in catalog.quandles():
        D2 = idl.ideal_power(X, 2)
        for x, y in itertools.product(range(X.size), repeat=2):
            assert symmetrization_defect(X, x, y).coeffs in D2


def test_extended_idempotence():
    for X in catalog.quandles():
        assert idl.ext_delta_idempotent(X), X.name
    # the two-element rack also satisfies it although it is not a quandle
    assert idl.ext_delta_idempotent(two_elem_rack())
    assert not two_elem_rack().is_quandle

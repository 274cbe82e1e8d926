import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from quandle_rings import catalog
from quandle_rings.coeff import QQ, ZZ, Zmod
from quandle_rings.errors import RingMismatchError
from quandle_rings.quandle import dihedral, trivial
from quandle_rings.ring import ExtElt, RingElt, augmentation, aug_basis, ext_augmentation, ext_mul, mul, symmetrization_defect

coeffs = st.integers(-4, 4)


def naive_product(X, u, v):
    out = [0] * X.size
    for i, j in itertools.product(range(X.size), repeat=2):
        out[X.table[i][j]] += u[i] * v[j]
    return out


@given(st.lists(coeffs, min_size=5, max_size=5), st.lists(coeffs, min_size=5, max_size=5))
@settings(max_examples=50)
def test_product_matches_naive_expansion(u, v):
    X = dihedral(5)
    assert list(mul(RingElt(X, u), RingElt(X, v)).coeffs) == naive_product(X, u, v)


@given(st.lists(coeffs, min_size=4, max_size=4), st.lists(coeffs, min_size=4, max_size=4))
@settings(max_examples=50)
def test_augmentation_is_multiplicative(u, v):
    X = catalog.get("conjZ2xZ2")
    a, b = RingElt(X, u), RingElt(X, v)
    assert augmentation(mul(a, b)) == augmentation(a) * augmentation(b)


def test_rendering_and_json():
    X = dihedral(3)
    u = RingElt(X, [3, -2, 0])
    assert str(u) == "3*a0 - 2*a1"
    assert u.to_json() == {"coeffs": [3, -2, 0]}
    e = ExtElt.identity(X)
    assert str(e) == "e"
    w = ExtElt.from_coeffs(X, [1, 0, 0], -1)
    assert ExtElt.from_json(X, w.to_json()) == w


def test_rational_coefficients():
    X = trivial(2)
    u = RingElt(X, [Fraction(1, 2), 1], QQ)
    assert mul(u, u) == u.scale(Fraction(3, 2))


def test_ring_mismatch():
    with pytest.raises(RingMismatchError):
        RingElt(trivial(2), [1, 0]) + RingElt(trivial(3), [1, 0, 0])
    with pytest.raises(RingMismatchError):
        RingElt(trivial(2), [1, 0], ZZ) + RingElt(trivial(2), [1, 0], Zmod(3))


@given(st.lists(coeffs, min_size=4, max_size=4), st.integers(-3, 3))
@settings(max_examples=40)
def test_e_is_two_sided_identity(c, k):
    X = dihedral(3)
    u = ExtElt.from_coeffs(X, c[:3], c[3])
    e = ExtElt.identity(X)
    assert ext_mul(e, u) == u == ext_mul(u, e)
    assert ext_augmentation(u.scale(k)) == k * ext_augmentation(u)


def test_symmetrization_defect_and_aug_basis():
    X = dihedral(3)
    d = symmetrization_defect(X, 0, 1)
    assert augmentation(d) == 0
    assert len(aug_basis(X)) == 2
    # for a trivial quandle the defect vanishes
    assert symmetrization_defect(trivial(3), 0, 2).is_zero()

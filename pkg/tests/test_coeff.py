from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from quandle_rings.coeff import QQ, ZZ, CoeffRing, Poly, PolyRing, Scalar, Zmod, poly_eval
from quandle_rings.errors import NonUnitError, RingMismatchError, UnboundSymbolError

ints = st.integers(-50, 50)
fracs = st.fractions(max_denominator=20).filter(lambda f: abs(f) < 100)


def test_units():
    assert not ZZ.is_unit(2) and ZZ.is_unit(-1)
    assert Zmod(5).inv(2) == 3
    assert QQ.inv(Fraction(-1, 6)) == -6
    with pytest.raises(NonUnitError):
        Zmod(6).inv(2)
    with pytest.raises(NonUnitError):
        ZZ.inv(0)


@pytest.mark.parametrize("m", range(2, 21))
def test_mod_units_exhaustive(m):
    R = Zmod(m)
    for a in range(m):
        assert R.is_unit(a) == any((a * b) % m == 1 for b in range(m))
    assert R.units() == [a for a in range(m) if gcd(a, m) == 1]


def test_parse_and_render():
    assert CoeffRing.parse("Zmod:7") == Zmod(7)
    assert CoeffRing.parse("Q") is QQ
    with pytest.raises(ValueError):
        CoeffRing.parse("R")
    with pytest.raises(ValueError):
        Zmod(1)
    with pytest.raises(ValueError):
        PolyRing("a", "a")
    assert QQ.render(Fraction(-1, 6)) == "-1/6"
    R = PolyRing("a", "b")
    a, b = R.gens()
    assert (4 * a * b * b * b).render(R.variables) == "4*a^1*b^3"


@given(fracs, fracs, fracs)
@settings(max_examples=60)
def test_rational_ring_axioms(x, y, z):
    R = QQ
    assert R.mul(R.mul(x, y), z) == R.mul(x, R.mul(y, z))
    assert R.mul(x, R.add(y, z)) == R.add(R.mul(x, y), R.mul(x, z))
    assert R.mul(x, y) == R.mul(y, x)


@given(st.integers(2, 30), ints, ints, ints)
@settings(max_examples=60)
def test_mod_ring_axioms(m, x, y, z):
    R = Zmod(m)
    x, y, z = R(x), R(y), R(z)
    assert R.mul(R.mul(x, y), z) == R.mul(x, R.mul(y, z))
    assert R.mul(x, R.add(y, z)) == R.add(R.mul(x, y), R.mul(x, z))


def polys(nvars=3):
    exps = st.tuples(*[st.integers(0, 2)] * nvars)
    return st.dictionaries(exps, st.integers(-5, 5), max_size=4).map(lambda d: Poly(d, nvars))


@given(polys(), polys(), polys(), st.tuples(ints, ints, ints))
@settings(max_examples=60)
def test_poly_evaluation_is_a_homomorphism(p, q, r, pt):
    assert (p * q + r).evaluate(pt) == p.evaluate(pt) * q.evaluate(pt) + r.evaluate(pt)
    assert (p - q).evaluate(pt) == p.evaluate(pt) - q.evaluate(pt)
    assert (p * q) * r == p * (q * r)
    assert p * q == q * p


def test_poly_eval_examples():
    R = PolyRing("alpha", "beta", "gamma")
    al, be, ga = R.gens()
    p = al * al * al * al + 6 * be * be * ga * ga
    assert poly_eval(p, {"alpha": 1, "beta": 2, "gamma": 0}, R) == 1
    assert poly_eval(R.zero(), {}, R) == 0
    with pytest.raises(UnboundSymbolError):
        poly_eval(p, {"alpha": 1}, R)
    # a variable absent from p need not be bound
    assert poly_eval(al + 1, {"alpha": 2}, R) == 3


def test_zero_polynomial_has_no_terms():
    p = Poly({(1, 0): 3, (0, 1): 0}, 2) - Poly({(1, 0): 3}, 2)
    assert p.terms == {} and not p


def test_scalar_mismatch():
    a, b = Scalar(Zmod(5), 2), Scalar(Zmod(7), 2)
    with pytest.raises(RingMismatchError):
        a + b
    assert (a * 3).value == 1
    assert a.inv() == 3
    assert Scalar(QQ, Fraction(2, 4)).value == Fraction(1, 2)

"""Exact computations in rack and quandle rings over Z, Q, Z/m and polynomial coefficients."""

from .coeff import QQ, ZZ, CoeffRing, Poly, PolyRing, Scalar, Zmod, poly_eval
from .groups import FiniteGroup, abelian, cyclic, dihedral_group, quaternion, small_groups, symmetric
from .quandle import (
    Classification,
    FiniteRack,
    QuandleHom,
    alexander,
    are_isomorphic,
    check_axioms,
    conj,
    core,
    dihedral,
    dump_quandle,
    flip_rack,
    gen_alexander,
    homomorphisms,
    inner_group_closure,
    load_quandle,
    orbits,
    quotient_by_hom,
    subquandle_closure,
    subrack,
    trivial,
    two_elem_rack,
)
from .ring import ExtElt, RingElt, augmentation, ext_augmentation, ext_mul, mul
from .zlattice import IntLattice, QuotientShape, hnf, integer_kernel, quotient_shape, smith_normal_form

__all__ = [
    "QQ", "ZZ", "CoeffRing", "Poly", "PolyRing", "Scalar", "Zmod", "poly_eval",
    "FiniteGroup", "abelian", "cyclic", "dihedral_group", "quaternion", "small_groups", "symmetric",
    "Classification", "FiniteRack", "QuandleHom", "alexander", "are_isomorphic", "check_axioms",
    "conj", "core", "dihedral", "dump_quandle", "flip_rack", "gen_alexander", "homomorphisms",
    "inner_group_closure", "load_quandle", "orbits", "quotient_by_hom", "subquandle_closure",
    "subrack", "trivial", "two_elem_rack",
    "ExtElt", "RingElt", "augmentation", "ext_augmentation", "ext_mul", "mul",
    "IntLattice", "QuotientShape", "hnf", "integer_kernel", "quotient_shape", "smith_normal_form",
]

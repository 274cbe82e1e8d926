"""Units in extended rack rings."""

from quandle_rings import units
from quandle_rings.coeff import QQ, ZZ
from quandle_rings.quandle import dihedral, trivial

# Exhaustive scan of Z°[T1] in a box of radius 3: coordinates (x, e).
for row in units.unit_scan(trivial(1), ZZ, radius=3):
    if row.has_inverse:
        print("unit:", row.element)

# Over Z/5 the unit group of the extended ring of T2 splits.
rep = units.split_sequence_probe(trivial(2), 5)
print(f"|V|={rep.V} |V1|={rep.V1} |V2|={rep.V2} split={rep.ok}")

# Iterated commutators never reach the identity.
T2 = trivial(2)
seq = units.commutator_sequence(units.pair_element(T2, 2, QQ), units.pair_element(T2, 3, QQ), 6)
for n, w in enumerate(seq.terms, 1):
    print(f"w_{n} =", w)

# Latin quandles: the sum of all elements is central.
R5 = dihedral(5)
print("sum of R5 central:", units.is_central(units.sum_element(R5, QQ)))
print(units.latin_central_units(R5, 1).to_json())

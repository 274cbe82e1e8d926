"""Racks and quandles: building them, checking axioms, looking at orbits."""

from quandle_rings import catalog
from quandle_rings.groups import symmetric
from quandle_rings.quandle import are_isomorphic, conj, core, dihedral, flip_rack, orbits, trivial

# The dihedral quandle R_n: i * j = 2j - i mod n.
R4 = dihedral(4)
for row in R4.table:
    print(row)
print("R4 classification:", R4.classification.name)
print("R4 orbits:", [sorted(o) for o in orbits(R4)])

# A flip rack satisfies the rack axioms but not idempotence.
F = flip_rack(4)
print("flip4 is a rack:", F.is_rack, "| is a quandle:", F.is_quandle)

# Group constructions.
S3 = symmetric(3)
print("Conj(S3) connected:", conj(S3).is_connected, "| Core(S3) involutary:", core(S3).is_involutary)

# Everything in the catalog, with a few flags.
for key in catalog.keys()[:12]:
    X = catalog.get(key)
    print(f"{key:>8}  size={X.size}  quandle={X.is_quandle}  latin={X.is_latin}")

# T_2 and R_2 coincide.
print("R2 ~ T2:", are_isomorphic(dihedral(2), trivial(2)) is not None)

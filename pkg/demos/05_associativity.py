"""Associativity and power-associativity with exact witnesses."""

from quandle_rings import assoc
from quandle_rings.groups import small_groups
from quandle_rings.quandle import core, dihedral
from quandle_rings.ring import RingElt

# Z[Core(G)] is associative exactly when G has exponent 2.
for name, G in small_groups().items():
    report = assoc.is_associative(core(G))
    print(f"Core({name}): associative={report.associative}")

# Symbolic: a generic element of Z[R3] with coefficients c0, c1, c2.
w = assoc.power_assoc_symbolic(dihedral(3))
print(w.describe())
print("u2u = uu2 holds identically in Z[R3]:", assoc.power_assoc_symbolic(dihedral(3), (assoc.IDENTITY_CUBE,)) is None)

# Numeric: u = a0 + 2a1 in R_n.
for n in range(4, 9):
    u = RingElt(dihedral(n), [1, 2] + [0] * (n - 2))
    lhs, rhs = assoc.power_sides(u)[assoc.IDENTITY_CUBE]
    print(f"R{n}: u2u = {lhs}")
    print(f"{'':>4}uu2 = {rhs}")

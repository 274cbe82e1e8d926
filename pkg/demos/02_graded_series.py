"""Powers of the augmentation ideal and their graded quotients."""

from quandle_rings import ideals
from quandle_rings.quandle import dihedral

for n in (3, 4, 5, 6):
    series = ideals.graded_series(dihedral(n), 4)
    shapes = ", ".join(str(series.shape(k)) for k in range(1, 5))
    print(f"R{n}: Delta^k / Delta^(k+1) for k=1..4 -> {shapes}")

# The lattice itself, in HNF rows over the basis a_0..a_{n-1}.
print("Delta^3(R4) rows:", ideals.ideal_power(dihedral(4), 3).lattice.basis)

# Two ways of bracketing the products agree on these examples.
print("bracketing conventions agree on R5 up to k=6:", ideals.power_conventions_agree(dihedral(5), 6))

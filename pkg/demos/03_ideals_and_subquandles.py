"""From two-sided ideals to subquandles, and back through homomorphisms."""

from quandle_rings import ideals
from quandle_rings.quandle import QuandleHom, dihedral, trivial

# The ideal of Z[T2] generated by 2x + 2y.
T2 = trivial(2)
I = ideals.two_sided_closure(T2, [[2, 2]])
print("closure of 2x+2y:", I.lattice.basis)
print("blocks:", [sorted(b) for b in ideals.partition_from_ideal(T2, I)])

# R4 split by Delta^2 falls apart into singletons, and mod 2 into orbits.
R4 = dihedral(4)
print("R4 / Delta^2:", [sorted(b) for b in ideals.partition_from_ideal(R4, ideals.ideal_power(R4, 2))])
I2 = ideals.with_modulus(ideals.aug_ideal(R4), 2)
print("R4 / (Delta + 2Z[R4]):", [sorted(b) for b in ideals.partition_from_ideal(R4, I2)])

# The collapse R4 -> T2 sends a_i to i mod 2.
f = QuandleHom(R4, T2, (0, 1, 0, 1))
print("normal ideal of the collapse:", ideals.normal_ideal(f).lattice.basis)
print("round trip recovers the fibres:", all(ideals.dictionary_check(R4, x0, f) for x0 in range(4)))

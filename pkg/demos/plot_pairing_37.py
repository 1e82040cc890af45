"""
The pairing vector for (37, 32)
===============================

Solve the mod-37 relation system and print the vector in symmetric residues.
The kernel is one-dimensional, so the vector is determined up to a scalar;
we normalize the first nonzero entry to 1.
"""

from cyclopair import IrregularPair, build_system, solve_pairing

pair = IrregularPair(37, 32)
system = build_system(pair)
print(f"{system.relation_count} relation rows, {system.skew_count} skew rows, "
      f"{len(system.columns)} unknowns")

v = solve_pairing(pair)
print("kernel dimension:", v.kernel_dimension)
for i, e in sorted(v.symmetric().items()):
    print(f"  x_{i:<2d} = {e:3d}")

# the entry at p - r is always zero
print("x_5 =", v[37 - 32])

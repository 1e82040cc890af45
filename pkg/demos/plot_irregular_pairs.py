"""
Finding irregular pairs
=======================

A pair (p, r) is irregular when p divides the numerator of B_r for some
even r <= p-3.  Scanning means reducing one Bernoulli table per prime.
"""

from cyclopair import scan_irregular, bernoulli_exact

# B_12 = -691/2730, so 691 shows up as soon as we reach it
print(bernoulli_exact(12).fraction)

table = scan_irregular(400)
for p, rs in table.items():
    print(p, rs)

# the proportion creeps up toward about 39% as the bound grows
print(f"{len(table)} irregular primes below 400")

"""
Working modulo p^2
==================

Over Z/p^2 the solution module is no longer a vector space.  Its order
bounds the relevant piece of K_2; for every pair we have tried it is p.
"""

from cyclopair import IrregularPair, solve_pairing_mod_p2

for p, r in [(37, 32), (59, 44), (67, 58), (101, 68)]:
    pair = IrregularPair(p, r)
    teich = solve_pairing_mod_p2(pair)
    naive = solve_pairing_mod_p2(pair, convention="naive")
    print(f"{pair}: order {teich.order} (Teichmuller lifts), {naive.order} (plain integers)")

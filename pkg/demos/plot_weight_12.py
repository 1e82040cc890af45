"""
Weight 12 and the prime 691
===========================

Ihara's derivation relation 2[D_3,D_9] - 27[D_5,D_7] maps to a relation
between Galois commutators.  Its ratio should agree with the pairing for
(691, 12), and it does.
"""

from cyclopair import IrregularPair, solve_pairing
from cyclopair.ihara import WEIGHT_12, commutator_ratio, derivation_to_galois, ihara_report

coeffs = derivation_to_galois(WEIGHT_12)
print(coeffs)                       # proportional to (190, 174)
print("ratio:", commutator_ratio(coeffs))

v = solve_pairing(IrregularPair(691, 12))
print("e_3, e_5 =", v[3], v[5])
print(ihara_report(v))

# A degenerate case needs no matrix at all: for p = 89209, 2 is a square mod p
from cyclopair.cyclo_relations import check_degenerate_candidate
print(check_degenerate_candidate(89209, 44606).to_json())

"""
A relation in the Galois group
==============================

Two Bernoulli congruences mod p^2 give the head coefficients; the pairing
vector gives the commutator part.  For 37 the head ratio comes out as -3.
"""

from cyclopair import IrregularPair, iwasawa_coeffs, solve_pairing
from cyclopair.galois import fox_image, galois_relation, relation_report, render_relation

pair = IrregularPair(37, 32)
coeffs = iwasawa_coeffs(pair)
print("f(0)/p =", coeffs.f0_over_p.value, " f'(0) =", coeffs.fprime0.value)

rel = galois_relation(pair, solve_pairing(pair), coeffs)
print(render_relation(rel))

# linear part of the Fox-derivative image
for term in fox_image(rel)[:4]:
    print("  ", term)
print("verdict:", relation_report(rel)["greenberg"])

"""Pairing values on cyclotomic p-units for irregular pairs, by linear algebra mod p and p^2."""

from .bernoulli import (
    IrregularPair,
    IwasawaCoeffs,
    bernoulli_exact,
    bernoulli_mod,
    irregular_pairs,
    iwasawa_coeffs,
    scan_irregular,
)
from .cyclo_relations import (
    PairingVector,
    build_system,
    check_degenerate_candidate,
    check_vanishing_at_p_minus_r,
    relation_coefficient,
    solve_pairing,
    solve_pairing_mod_p2,
)
from .galois import fox_image, galois_relation, greenberg_criterion, render_relation
from .ihara import WEIGHT_12, commutator_ratio, cross_check_pairing, derivation_to_galois
from .linalg_mod import KernelBasis, ModMatrix, kernel_mod_p, solution_module_mod_p2
from .modring import Residue, mod_inv, mod_pow, teichmuller

__version__ = "0.1.0"

"""Weight-12 cross-check between Ihara's derivation relation and the pairing.

A stable derivation D_m corresponds to -(m-1)! lambda_m(D_m) sigma_m mod p,
so a commutator [D_i, D_j] becomes

    (i-1)! lambda_i (j-1)! lambda_j [sigma_i, sigma_j]

(the two minus signs cancel).  For p = 691 the relation
691 delta = 2[D_3, D_9] - 27[D_5, D_7] then gives a relation between
[sigma_3, sigma_9] and [sigma_5, sigma_7] that must be proportional to the
pairing values e_{3,12}, e_{5,12}.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cyclo_relations import PairingVector
from .errors import DomainError, MissingLambda, PairMismatch, WrongShape, ZeroCoefficient

__all__ = [
    "IHARA_LAMBDA",
    "WEIGHT_12",
    "DerivationRelation",
    "derivation_to_galois",
    "commutator_ratio",
    "cross_check_pairing",
    "ihara_report",
]

# lambda_m(D_m) for the odd weights where it is known
IHARA_LAMBDA = {3: 1, 5: 2, 7: 16, 9: 144}


@dataclass(frozen=True)
class DerivationRelation:
    p: int
    m: int
    head: int
    terms: tuple[tuple[int, int, int], ...] = field(default_factory=tuple)

    def __post_init__(self):
        for i, j, _ in self.terms:
            if i + j != self.m or i >= j or i < 3 or i % 2 == 0 or j % 2 == 0:
                raise DomainError(f"bad commutator [D_{i}, D_{j}] in weight {self.m}")


WEIGHT_12 = DerivationRelation(p=691, m=12, head=691, terms=((3, 9, 2), (5, 7, -27)))


def derivation_to_galois(rel: DerivationRelation, lam=None) -> dict[tuple[int, int], int]:
    """Coefficient of each [sigma_i, sigma_j] mod p, up to a global unit."""
    lam = IHARA_LAMBDA if lam is None else lam
    p = rel.p
    out = {}
    for i, j, c in rel.terms:
        if i not in lam or j not in lam:
            raise MissingLambda(f"no lambda value for weight {i if i not in lam else j}")
        coeff = c % p
        for n in (i, j):
            for k in range(2, n):
                coeff = coeff * k % p
            coeff = coeff * lam[n] % p
        out[(i, j)] = coeff
    return out


def commutator_ratio(coeffs: dict[tuple[int, int], int], p: int = 691) -> int:
    """rho with [sigma_3, sigma_9] = rho [sigma_5, sigma_7], i.e. -c57/c39."""
    if set(coeffs) != {(3, 9), (5, 7)}:
        raise WrongShape(f"expected exactly (3,9) and (5,7), got {sorted(coeffs)}")
    c39, c57 = coeffs[(3, 9)] % p, coeffs[(5, 7)] % p
    if c39 == 0 or c57 == 0:
        raise ZeroCoefficient("both commutator coefficients must be nonzero")
    return -c57 * pow(c39, -1, p) % p


def cross_check_pairing(v: PairingVector, coeffs: dict[tuple[int, int], int], p: int = 691, r: int = 12) -> bool:
    """e_3 : e_5 equals c_(3,9) : c_(5,7) projectively.

    Only the weight-12 piece is compared: index 1 stands for the generator
    of weight p, so e_1 cannot occur here.
    """
    if (v.pair.p, v.pair.r) != (p, r):
        raise PairMismatch(f"pairing vector is for {v.pair}, not ({p}, {r})")
    return (v.entries[3] * coeffs[(5, 7)] - v.entries[5] * coeffs[(3, 9)]) % p == 0


def ihara_report(v: PairingVector, rel: DerivationRelation = WEIGHT_12) -> dict:
    coeffs = derivation_to_galois(rel)
    return {
        "p": rel.p,
        "r": rel.m,
        "galois_coeffs": {f"{i},{j}": c for (i, j), c in sorted(coeffs.items())},
        "ratio": commutator_ratio(coeffs, rel.p),
        "pairing_consistent": cross_check_pairing(v, coeffs, rel.p, rel.m),
    }

"""The linear system cutting out the pairing on cyclotomic p-units.

For an irregular pair (p, r) the unknowns are x_i = e_{i,r} for odd
1 <= i <= p-2.  Each even a in [4, p-1] contributes the row

    sum_i (1 + a^(p-i) - 2^(p-i)) (1 - 2^(p-r+i)) (1 - (a-1)^(p-r+i)) x_i = 0,

and skew-symmetry contributes x_i + x_j = 0 for j = r - i (mod p-1), or
2 x_i = 0 when i is its own partner.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .bernoulli import IrregularPair
from .errors import BoundExceeded, DomainError, NotIrregular, TriviallyZero
from .linalg_mod import KernelBasis, ModMatrix, kernel_mod_p, solution_module_mod_p2
from .modring import Residue, is_prime, pow_array, teichmuller

__all__ = [
    "NORMALIZATION",
    "P2_LIMIT",
    "RelationSystem",
    "PairingVector",
    "DegeneracyReport",
    "odd_indices",
    "partner",
    "relation_coefficient",
    "relation_rows",
    "build_system",
    "solve_pairing",
    "solve_pairing_mod_p2",
    "check_vanishing_at_p_minus_r",
    "check_degenerate_candidate",
]

NORMALIZATION = "first_nonzero_one"
P2_LIMIT = 3000
CONVENTIONS = ("teichmuller", "naive")


def odd_indices(p: int) -> list[int]:
    return list(range(1, p - 1, 2))


def partner(i: int, r: int, p: int) -> int:
    """r - i reduced into [1, p-2]; odd whenever i is odd."""
    j = (r - i) % (p - 1)
    return j if j else p - 1


def _check_pair(pair):
    if not isinstance(pair, IrregularPair):
        raise NotIrregular(f"expected an IrregularPair, got {pair!r}")


def _lift(values, p: int, precision: int, convention: str):
    if convention not in CONVENTIONS:
        raise DomainError(f"unknown convention {convention!r}")
    values = np.asarray(values, dtype=np.int64)
    if precision == 1 or convention == "naive":
        return values % p**precision
    # Teichmuller lift a -> a^p mod p^2
    return pow_array(values, p, p * p)


def relation_rows(p: int, r: int, a_values, precision: int = 1, convention: str = "teichmuller") -> np.ndarray:
    """Coefficient rows for the given a's, columns the odd i in [1, p-2].

    No irregularity check, so also usable for arbitrary (p, r).
    """
    mod = p**precision
    a = np.asarray(list(a_values), dtype=np.int64)[:, None]
    i = np.asarray(odd_indices(p), dtype=np.int64)[None, :]
    la = _lift(a, p, precision, convention)
    la1 = _lift(a - 1, p, precision, convention)
    two = _lift(np.array([2]), p, precision, convention)[0]
    e1 = p - i
    e2 = p - r + i
    first = (1 + pow_array(la, e1, mod) - pow_array(two, e1, mod)) % mod
    second = (1 - pow_array(two, e2, mod)) % mod
    third = (1 - pow_array(la1, e2, mod)) % mod
    return first * second % mod * third % mod


def relation_coefficient(pair: IrregularPair, a: int, i: int, precision: int = 1, convention: str = "teichmuller") -> Residue:
    """Coefficient of x_i in the relation for a, mod p**precision."""
    _check_pair(pair)
    p, r = pair.p, pair.r
    if a % 2 or not 4 <= a <= p - 1:
        raise DomainError(f"a={a} must be even with 4 <= a <= p-1")
    if i % 2 == 0 or not 1 <= i <= p - 2:
        raise DomainError(f"i={i} must be odd with 1 <= i <= p-2")
    if precision not in (1, 2):
        raise DomainError("precision must be 1 or 2")
    mod = p**precision
    if precision == 2 and convention == "teichmuller":
        A, T, A1 = (teichmuller(b, p).value for b in (a, 2, a - 1))
    elif convention in CONVENTIONS:
        A, T, A1 = a, 2, a - 1
    else:
        raise DomainError(f"unknown convention {convention!r}")
    value = (1 + pow(A, p - i, mod) - pow(T, p - i, mod)) * (1 - pow(T, p - r + i, mod)) * (1 - pow(A1, p - r + i, mod))
    return Residue.of(value, mod)


@dataclass
class RelationSystem:
    pair: IrregularPair
    precision: int
    matrix: ModMatrix
    include_odd_a: bool = False
    convention: str = "teichmuller"

    @property
    def columns(self) -> list[int]:
        return odd_indices(self.pair.p)

    @property
    def relation_count(self) -> int:
        return sum(tag[0] == "relation" for tag in self.matrix.row_tags)

    @property
    def skew_count(self) -> int:
        return sum(tag[0] in ("skew", "self") for tag in self.matrix.row_tags)


def build_system(pair: IrregularPair, precision: int = 1, include_odd_a: bool = False, convention: str = "teichmuller") -> RelationSystem:
    """Relation rows for even a (and odd a if asked), then the skew rows.

    Row tags: ``("relation", a)``, ``("skew", i, j)`` with i < j, ``("self", i)``.
    """
    _check_pair(pair)
    if precision not in (1, 2):
        raise DomainError("precision must be 1 or 2")
    p, r = pair.p, pair.r
    mod = p**precision
    a_values = list(range(4, p, 2))
    if include_odd_a:
        a_values += list(range(3, p - 1, 2))
    rel = relation_rows(p, r, a_values, precision, convention)
    tags = [("relation", a) for a in a_values]

    cols = odd_indices(p)
    where = {c: n for n, c in enumerate(cols)}
    skew = []
    for i in cols:
        j = partner(i, r, p)
        if j < i:
            continue
        row = np.zeros(len(cols), dtype=np.int64)
        if j == i:
            row[where[i]] = 2
            tags.append(("self", i))
        else:
            row[where[i]] = 1
            row[where[j]] = 1
            tags.append(("skew", i, j))
        skew.append(row)
    entries = np.vstack([rel, np.array(skew, dtype=np.int64).reshape(-1, len(cols))]) % mod
    return RelationSystem(pair, precision, ModMatrix(mod, entries, tags), include_odd_a, convention)


@dataclass
class PairingVector:
    """Projective solution e_{i,r}, normalized so the first nonzero entry is 1.

    When the kernel has dimension > 1 the normalized first basis vector is
    stored in ``entries`` and the whole basis in ``basis``; ``unique`` is
    False in that case.
    """

    pair: IrregularPair
    entries: dict[int, int]
    kernel_dimension: int
    normalization: str = NORMALIZATION
    basis: list[dict[int, int]] = field(default_factory=list)

    @property
    def unique(self) -> bool:
        return self.kernel_dimension == 1

    def __getitem__(self, i: int) -> int:
        return self.entries[i]

    def vector(self) -> np.ndarray:
        return np.array([self.entries[i] for i in odd_indices(self.pair.p)], dtype=np.int64)

    def symmetric(self) -> dict[int, int]:
        p = self.pair.p
        return {i: (e - p if e > p // 2 else e) for i, e in self.entries.items()}

    def to_json(self) -> dict:
        return {
            "p": self.pair.p,
            "r": self.pair.r,
            "kernel_dim": self.kernel_dimension,
            "normalization": self.normalization,
            "entries": {str(i): int(e) for i, e in sorted(self.entries.items())},
        }


def _normalize(vec: np.ndarray, p: int) -> np.ndarray:
    nz = np.flatnonzero(vec)
    if nz.size == 0:
        return vec
    return vec * pow(int(vec[nz[0]]), -1, p) % p


def solve_pairing(pair: IrregularPair, include_odd_a: bool = False) -> PairingVector:
    """Kernel of the mod-p system.  Dimension > 1 is reported, not raised."""
    system = build_system(pair, 1, include_odd_a)
    kernel = kernel_mod_p(system.matrix)
    if kernel.dimension == 0:
        raise TriviallyZero(f"relation system for {pair} has only the zero solution")
    cols = system.columns
    basis = [dict(zip(cols, map(int, _normalize(v, pair.p)))) for v in kernel.vectors]
    return PairingVector(pair, basis[0], kernel.dimension, basis=basis)


def solve_pairing_mod_p2(pair: IrregularPair, convention: str = "teichmuller", limit: int = P2_LIMIT) -> KernelBasis:
    """Solution module of the p^2 system; its ``order`` is the bound on K_2."""
    _check_pair(pair)
    if pair.p >= limit:
        raise BoundExceeded(f"p={pair.p} at or above the mod-p^2 limit {limit}")
    system = build_system(pair, 2, convention=convention)
    return solution_module_mod_p2(system.matrix)


def check_vanishing_at_p_minus_r(v: PairingVector) -> bool:
    return v.entries.get(v.pair.p - v.pair.r, 0) == 0


@dataclass(frozen=True)
class DegeneracyReport:
    p: int
    r: int
    two_power_is_one: bool  # 2^(p-r+1) = 2^((p-1)/2) = 1 mod p
    partner_column_vanishes: bool  # p-r+(p+1)/2 = 0 mod p-1
    skew_consistent: bool  # (p+1)/2 is the partner of 1

    @property
    def present(self) -> bool:
        return self.two_power_is_one and self.partner_column_vanishes and self.skew_consistent

    @property
    def vector(self) -> dict[int, int]:
        """The candidate solution x_1 = 1, x_{(p+1)/2} = -1, zero elsewhere."""
        return {1: 1, (self.p + 1) // 2: self.p - 1}

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "r": self.r,
            "two_power_is_one": self.two_power_is_one,
            "partner_column_vanishes": self.partner_column_vanishes,
            "skew_consistent": self.skew_consistent,
            "degenerate": self.present,
        }


def check_degenerate_candidate(p: int, r: int) -> DegeneracyReport:
    """Whether x_1 = -x_{(p+1)/2} = 1 solves every relation row for r = (p+3)/2.

    Column i of a relation row carries the factor 1 - 2^(p-r+i).  For i = 1
    that is 1 - 2^((p-1)/2); for i = (p+1)/2 the exponent is p-1.  When both
    vanish mod p the two columns are zero in every row, and the skew row for
    the partner pair {1, (p+1)/2} is satisfied by the sign choice.  Costs a
    handful of modular exponentiations, no matrix.
    """
    if p == 2 or not is_prime(p):
        raise DomainError(f"{p} is not an odd prime")
    if 2 * r != p + 3 or r % 2:
        raise DomainError(f"r={r} is not the even index (p+3)/2 for p={p}")
    half = (p + 1) // 2
    return DegeneracyReport(
        p,
        r,
        two_power_is_one=pow(2, p - r + 1, p) == 1,
        partner_column_vanishes=(p - r + half) % (p - 1) == 0,
        skew_consistent=partner(1, r, p) == half,
    )

"""The gr^2 relation attached to an irregular pair, and what it implies.

For (p, r) the relation reads

    a_x * p * x_r + a_gamma * [gamma, x_r] + sum e_{i,r} [x_i, x_j] = 0,

with i < j, i + j = r (mod p-1), and generator indices taken in [2, p] so
that index 1 is written as p.  The head coefficients come from the
characteristic power series f = f_{p-r}:

    a_x = f(0)/p + f'(0),    a_gamma = -f'(0)    (mod p).

The commutator coefficients are the pairing values, known only up to a
common unit; the head pair is known only up to another unit (the choice of
x_r).  Everything here is compared projectively.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .bernoulli import IrregularPair, IwasawaCoeffs, irregular_pairs
from .cyclo_relations import PairingVector, odd_indices, partner
from .errors import PairMismatch
from .modring import symmetric

__all__ = [
    "ATTESTED_NONTRIVIAL",
    "GaloisRelation",
    "FoxTerm",
    "GreenbergVerdict",
    "galois_relation",
    "render_relation",
    "fox_image",
    "greenberg_criterion",
    "relation_report",
]

# Pairs whose cup product on cyclotomic p-units is known to be nonzero by an
# independent computation (not by the linear system, which cannot show it).
ATTESTED_NONTRIVIAL = {
    (37, 32): "cup product on cyclotomic 37-units shown nonzero by explicit local norm-residue computation",
}


def generator_index(i: int, p: int) -> int:
    """Generators are indexed by 2..p, so index 1 is written as p."""
    return p if i == 1 else i


@dataclass
class GaloisRelation:
    pair: IrregularPair
    a_x: int
    a_gamma: int
    commutator_terms: list[tuple[int, int, int]]
    even_even_slots: list[tuple[int, int]] = field(default_factory=list)
    f0_over_p: int | None = None

    @property
    def p(self) -> int:
        return self.pair.p

    @property
    def r(self) -> int:
        return self.pair.r

    def nonzero_terms(self) -> list[tuple[int, int, int]]:
        return [t for t in self.commutator_terms if t[2] % self.p]

    def is_zero(self) -> bool:
        return self.a_x % self.p == 0 and self.a_gamma % self.p == 0 and not self.nonzero_terms()

    def head_ratio(self) -> int | None:
        """a_gamma / a_x mod p; invariant under rescaling x_r."""
        if self.a_x % self.p == 0:
            return None
        return self.a_gamma * pow(self.a_x, -1, self.p) % self.p


def galois_relation(pair: IrregularPair, v: PairingVector, coeffs: IwasawaCoeffs) -> GaloisRelation:
    if v.pair != pair:
        raise PairMismatch(f"pairing vector is for {v.pair}, not {pair}")
    if (coeffs.p, coeffs.r) != (pair.p, pair.r):
        raise PairMismatch(f"coefficients are for ({coeffs.p}, {coeffs.r}), not {pair}")
    p, r = pair.p, pair.r
    f0 = int(coeffs.f0_over_p) % p
    fp = int(coeffs.fprime0) % p

    terms = []
    for i in odd_indices(p):
        j = partner(i, r, p)
        if j == i:
            continue
        gi, gj = generator_index(i, p), generator_index(j, p)
        if gi > gj:
            continue
        terms.append((gi, gj, v.entries[i] % p))
    terms.sort()

    # even-even commutators need the global units b_m, which are not
    # computed here; record the slots only
    evens = {q.r for q in irregular_pairs(p)} if p < 20_000 else {r}
    slots = []
    for i in sorted(evens):
        j = (r - i) % (p - 1) or p - 1
        if j in evens and i < j:
            slots.append((i, j))

    return GaloisRelation(pair, (f0 + fp) % p, -fp % p, terms, slots, f0)


def _signed(c: int, text: str, first: bool) -> str:
    if first:
        return f"-{-c}{text}" if c < 0 else f"{c}{text}"
    return f" - {-c}{text}" if c < 0 else f" + {c}{text}"


def render_relation(rel: GaloisRelation, normalize_head: bool = True) -> str:
    """Display ``A·p·x_r + B[γ,x_r] + Σ e[x_i,x_j] = 0`` with symmetric residues.

    With ``normalize_head`` the head pair is divided by a_x, which amounts
    to replacing x_r by a suitable power of itself; the commutator part is
    untouched.
    """
    p, r = rel.p, rel.r
    if rel.is_zero():
        return "0 = 0"
    a_x, a_g = rel.a_x % p, rel.a_gamma % p
    if normalize_head and a_x:
        inv = pow(a_x, -1, p)
        a_x, a_g = 1, a_g * inv % p
    parts = []
    if a_x:
        parts.append(_signed(symmetric(a_x, p), f"·{p}·x_{r}", not parts))
    if a_g:
        parts.append(_signed(symmetric(a_g, p), f"[γ,x_{r}]", not parts))
    for i, j, e in rel.nonzero_terms():
        parts.append(_signed(symmetric(e, p), f"[x_{i},x_{j}]", not parts))
    scope = "head and commutator parts each defined up to a unit" if normalize_head else "defined up to a unit"
    return "".join(parts) + " = 0\n" + f"# projective: {scope} mod {p}"


@dataclass(frozen=True)
class FoxTerm:
    """coefficient * T_t * dx_d, or coefficient * dx_d when t is None."""

    coefficient: int
    t_index: int | None
    dx_index: int
    label: str = ""

    def __str__(self):
        t = f"T_{self.t_index} " if self.t_index is not None else ""
        name = f"{self.label}=" if self.label else ""
        return f"{name}{self.coefficient}·{t}dx_{self.dx_index}"


def fox_image(rel: GaloisRelation) -> list[FoxTerm]:
    """Degree <= 1 image of the relation under the Fox-derivative map.

    Each commutator e[x_i, x_j] gives -e T_j dx_i + e T_i dx_j (mod p); the
    power x_r^(a_x p) gives l dx_r with l = a_x p, kept mod p^2.
    """
    p = rel.p
    out = []
    for i, j, e in rel.nonzero_terms():
        out.append(FoxTerm(-e % p, j, i))
        out.append(FoxTerm(e % p, i, j))
    l = rel.a_x * p % (p * p)
    if l:
        out.append(FoxTerm(l, None, rel.r, label=f"l_{rel.r}"))
    return out


class GreenbergVerdict(enum.Enum):
    HOLDS = "holds"
    CONDITIONAL = "conditional"
    FAILS = "fails"


def greenberg_criterion(rel: GaloisRelation, nontriviality_attested: bool) -> GreenbergVerdict:
    """Does a nonzero odd-odd commutator force torsion-freeness?

    The linear system only proves the pairing is a multiple of the computed
    vector, possibly zero; without outside evidence that the cup product is
    nonzero the best available verdict is CONDITIONAL.
    """
    odd_odd = [t for t in rel.nonzero_terms() if t[0] % 2 and t[1] % 2]
    if not odd_odd:
        return GreenbergVerdict.FAILS
    return GreenbergVerdict.HOLDS if nontriviality_attested else GreenbergVerdict.CONDITIONAL


def relation_report(rel: GaloisRelation, attested: bool | None = None) -> dict:
    key = (rel.p, rel.r)
    if attested is None:
        attested = key in ATTESTED_NONTRIVIAL
    verdict = greenberg_criterion(rel, attested)
    report = {
        "p": rel.p,
        "r": rel.r,
        "a_x": rel.a_x,
        "a_gamma": rel.a_gamma,
        "terms": [[i, j, e] for i, j, e in rel.commutator_terms],
        "scalar_class": "projective",
        "greenberg": verdict.value,
    }
    if attested:
        report["attestation"] = ATTESTED_NONTRIVIAL.get(key, "supplied by caller")
    return report

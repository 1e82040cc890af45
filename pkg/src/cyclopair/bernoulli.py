"""Bernoulli numbers: exact, modulo p, modulo p^2; irregular pairs.

Three independent routes to B_k mod p live here:

* the defining recurrence ``sum_{j<=k} C(k+1, j) B_j = 0`` over exact rationals
  (:func:`bernoulli_exact`), usable up to a configurable index bound;
* inversion of the power series ``(e^t - 1)/t`` over GF(p), which yields the
  whole table ``B_0 .. B_{p-3}`` mod p in one pass (:func:`bernoulli_table_mod_p`);
* Voronoi's congruence for a single index (:func:`voronoi_bernoulli_mod_p`),
  linear in p, used when p is too large for the series table.
"""

from __future__ import annotations

import math
import threading
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import BoundExceeded, DomainError, IntegralityFailure, NotIrregular, PoleAtIndex
from .modring import Residue, is_prime, pow_array, primes_below

__all__ = [
    "DEFAULT_BOUND",
    "SCAN_LIMIT",
    "ExactBernoulli",
    "IrregularPair",
    "IwasawaCoeffs",
    "bernoulli_exact",
    "bernoulli_mod",
    "bernoulli_table_mod_p",
    "voronoi_bernoulli_mod_p",
    "irregular_pairs",
    "scan_irregular",
    "iwasawa_coeffs",
]

DEFAULT_BOUND = 2048
SCAN_LIMIT = 10_000
# above this the O(p log p)-per-step series table gets expensive; single
# indices fall back to Voronoi's congruence
SERIES_TABLE_MAX = 20_000


@dataclass(frozen=True)
class ExactBernoulli:
    index: int
    numerator: int
    denominator: int

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def reduce(self, modulus: int) -> int:
        if math.gcd(self.denominator, modulus) != 1:
            raise PoleAtIndex(f"B_{self.index} is not integral at {modulus}")
        return self.numerator * pow(self.denominator, -1, modulus) % modulus


# Exact table, extended lazily.  Odd entries beyond B_1 are zero.
_num: list[int] = [1, -1]
_den: list[int] = [1, 2]
_den_lcm = 2
_table_lock = threading.Lock()


def _extend_exact(k: int):
    global _den_lcm
    with _table_lock:
        for n in range(len(_num), k + 1):
            if n % 2:
                _num.append(0)
                _den.append(1)
                continue
            # (n+1) B_n = -sum_{j<n} C(n+1, j) B_j, summed over the common
            # denominator _den_lcm so the inner loop is integer-only
            D = _den_lcm
            s = 0
            for j in range(0, n, 2):
                s += math.comb(n + 1, j) * _num[j] * (D // _den[j])
            s += (n + 1) * _num[1] * (D // _den[1])
            q = Fraction(-s, D * (n + 1))
            _num.append(q.numerator)
            _den.append(q.denominator)
            _den_lcm = math.lcm(_den_lcm, q.denominator)


def bernoulli_exact(k: int, bound: int = DEFAULT_BOUND) -> ExactBernoulli:
    """B_k as an exact reduced fraction, for even k >= 0.

    >>> bernoulli_exact(4).fraction
    Fraction(-1, 30)
    """
    if k < 0 or k % 2:
        raise DomainError(f"index must be even and nonnegative, got {k}")
    if k > bound:
        raise BoundExceeded(f"index {k} above bound {bound}")
    if k >= len(_num):
        _extend_exact(k)
    return ExactBernoulli(k, _num[k], _den[k])


@lru_cache(maxsize=256)
def bernoulli_table_mod_p(p: int) -> np.ndarray:
    """B_0, ..., B_{p-3} mod p as a read-only int64 array.

    Inverts ``sum t^n/(n+1)!`` mod p by Newton iteration; every factorial
    involved has argument <= p-1, so all are units.
    """
    if p < 5 or not is_prime(p):
        if p == 3:
            return np.array([1], dtype=np.int64)
        raise DomainError(f"{p} is not an odd prime")
    n = p - 2
    fact = np.ones(p, dtype=np.int64)
    for i in range(1, p):
        fact[i] = fact[i - 1] * i % p
    inv_fact = pow_array(fact, p - 2, p)
    f = inv_fact[1 : n + 1].copy()  # coefficient of t^i is 1/(i+1)!

    g = np.array([1], dtype=np.int64)
    length = 1
    while length < n:
        length = min(2 * length, n)
        fg = np.convolve(f[:length], g)[:length] % p
        h = (-fg) % p
        h[0] = (h[0] + 2) % p
        g = np.convolve(g, h)[:length] % p
    table = g * fact[:n] % p
    table.setflags(write=False)
    return table


def voronoi_bernoulli_mod_p(k: int, p: int) -> int:
    """B_k mod p from Voronoi's congruence, O(p) work.

    (c^k - 1) B_k / k = c^(k-1) sum_{j<p} j^(k-1) floor(jc/p)  (mod p),
    with c the least base >= 2 making c^k != 1.
    """
    if k % 2 or k < 2 or k % (p - 1) == 0:
        raise PoleAtIndex(f"B_{k} is not p-integral or not supported for p={p}")
    if k % p == 0:
        raise DomainError("Voronoi route requires p not dividing k")
    c = 2
    while pow(c, k, p) == 1:
        c += 1
    j = np.arange(1, p, dtype=np.int64)
    s = int((pow_array(j, k - 1, p) * ((j * c) // p) % p).sum()) % p
    return pow(c, k - 1, p) * s * k * pow(pow(c, k, p) - 1, -1, p) % p


def _check_prime(p: int):
    if p == 2 or not is_prime(p):
        raise DomainError(f"{p} is not an odd prime")


def bernoulli_mod(k: int, p: int, precision: int = 1, bound: int = DEFAULT_BOUND) -> Residue:
    """B_k reduced mod p**precision.

    Precision 1 with k <= p-3 uses the series table (or Voronoi for very
    large p); everything else goes through the exact recurrence.
    """
    _check_prime(p)
    if k < 2 or k % 2:
        raise DomainError(f"index must be even and >= 2, got {k}")
    if k % (p - 1) == 0:
        raise PoleAtIndex(f"(p-1) divides {k}")
    if precision not in (1, 2):
        raise DomainError("precision must be 1 or 2")
    modulus = p**precision
    if precision == 1 and k <= p - 3:
        if p <= SERIES_TABLE_MAX:
            return Residue(int(bernoulli_table_mod_p(p)[k]), p)
        if k % p:
            return Residue(voronoi_bernoulli_mod_p(k, p), p)
    return Residue(bernoulli_exact(k, bound).reduce(modulus), modulus)


@dataclass(frozen=True)
class IrregularPair:
    """A prime p and even 2 <= r <= p-3 with p | B_r; validated on construction."""

    p: int
    r: int

    def __post_init__(self):
        _check_prime(self.p)
        if self.r % 2 or not 2 <= self.r <= self.p - 3:
            raise NotIrregular(f"r={self.r} must be even with 2 <= r <= p-3")
        if bernoulli_mod(self.r, self.p).value != 0:
            raise NotIrregular(f"{self.p} does not divide B_{self.r}")

    def __str__(self):
        return f"({self.p}, {self.r})"


def _even_residues(p: int) -> dict[int, int]:
    table = bernoulli_table_mod_p(p)
    return {k: int(table[k]) for k in range(2, p - 2, 2)}


def irregular_pairs(p: int) -> list[IrregularPair]:
    _check_prime(p)
    return [IrregularPair(p, k) for k, v in _even_residues(p).items() if v == 0]


def scan_irregular(limit: int, cache=None, workers: int = 1) -> dict[int, list[int]]:
    """Irregular indices for every odd prime p < limit; regular primes omitted.

    With a :class:`~cyclopair.cache.BernoulliCache`, complete tables are
    reused and fresh ones appended, so an interrupted scan resumes where it
    stopped.
    """
    if limit > SCAN_LIMIT:
        raise BoundExceeded(f"scan limit {limit} above {SCAN_LIMIT}")
    primes = [q for q in primes_below(limit) if q > 2]
    tables: dict[int, dict[int, int]] = {}
    todo = []
    for q in primes:
        hit = cache.get_table(q, 1, range(2, q - 2, 2)) if cache is not None else None
        if hit is not None:
            tables[q] = hit
        else:
            todo.append(q)
    if workers > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            computed = zip(todo, pool.map(_even_residues, todo, chunksize=8))
            for q, table in computed:
                tables[q] = table
                if cache is not None:
                    cache.put_table(q, 1, table)
    else:
        for q in todo:
            tables[q] = _even_residues(q)
            if cache is not None:
                cache.put_table(q, 1, tables[q])
    result = {}
    for q in primes:
        rs = [k for k, v in sorted(tables[q].items()) if v == 0]
        if rs:
            result[q] = rs
    return result


@dataclass(frozen=True)
class IwasawaCoeffs:
    """f(0)/p and f'(0) mod p for the characteristic series f = f_{p-r}."""

    p: int
    r: int
    f0_over_p: Residue
    fprime0: Residue


def iwasawa_coeffs(pair: IrregularPair, bound: int = DEFAULT_BOUND) -> IwasawaCoeffs:
    """Constant and linear coefficients of f_{p-r} from two Bernoulli numbers.

    f(0)    = ((r-2)/r) B_r - B_{r+p-1}          (mod p^2)
    p f'(0) = B_r/r - B_{r+p-1}/(r-1)            (mod p^2)
    Both right-hand sides vanish mod p for an irregular pair.
    """
    if not isinstance(pair, IrregularPair):
        raise NotIrregular("expected an IrregularPair")
    p, r = pair.p, pair.r
    m = p * p
    b_r = bernoulli_exact(r, bound).fraction
    b_s = bernoulli_exact(r + p - 1, bound).fraction
    x = Fraction(r - 2, r) * b_r - b_s
    y = b_r / r - b_s / (r - 1)
    x_mod = x.numerator * pow(x.denominator, -1, m) % m
    y_mod = y.numerator * pow(y.denominator, -1, m) % m
    if x_mod % p or y_mod % p:
        raise IntegralityFailure(f"f(0) or p f'(0) not divisible by p for {pair}")
    return IwasawaCoeffs(p, r, Residue(x_mod // p, p), Residue(y_mod // p, p))

"""Exact arithmetic in Z/p and Z/p^2 for an odd prime p.

Scalars are :class:`Residue` values.  The heavy paths (matrix construction,
Bernoulli tables) work on plain ``int`` or on int64 numpy arrays; the helpers
:func:`pow_array` and :func:`primes_below` serve them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DomainError, NotInvertible

__all__ = [
    "Residue",
    "is_prime",
    "primes_below",
    "base_prime",
    "mod_pow",
    "mod_inv",
    "teichmuller",
    "pow_array",
    "symmetric",
]

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 3.3e24."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_below(limit: int) -> list[int]:
    """All primes p < limit (sieve of Eratosthenes)."""
    if limit <= 2:
        return []
    sieve = np.ones(limit, dtype=bool)
    sieve[:2] = False
    for q in range(2, math.isqrt(limit - 1) + 1):
        if sieve[q]:
            sieve[q * q :: q] = False
    return [int(q) for q in np.flatnonzero(sieve)]


@lru_cache(maxsize=4096)
def base_prime(modulus: int) -> tuple[int, int]:
    """Return ``(p, k)`` with ``modulus == p**k``, p an odd prime, k in {1, 2}.

    Raises DomainError for anything else, including p = 2.
    """
    if modulus > 2 and is_prime(modulus):
        return modulus, 1
    root = math.isqrt(modulus)
    if root > 2 and root * root == modulus and is_prime(root):
        return root, 2
    raise DomainError(f"modulus {modulus} is not p or p^2 for an odd prime p")


@dataclass(frozen=True, slots=True)
class Residue:
    """An element of Z/p or Z/p^2, stored as its least nonnegative value."""

    value: int
    modulus: int

    def __post_init__(self):
        base_prime(self.modulus)
        if not 0 <= self.value < self.modulus:
            raise DomainError(f"value {self.value} not reduced mod {self.modulus}")

    @classmethod
    def of(cls, x: int, modulus: int) -> Residue:
        return cls(int(x) % modulus, modulus)

    @property
    def prime(self) -> int:
        return base_prime(self.modulus)[0]

    def _coerce(self, other) -> int:
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                raise DomainError("residues with different moduli")
            return other.value
        if isinstance(other, (int, np.integer)):
            return int(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue((self.value + o) % self.modulus, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue((self.value - o) % self.modulus, self.modulus)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue((o - self.value) % self.modulus, self.modulus)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(self.value * o % self.modulus, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return Residue(-self.value % self.modulus, self.modulus)

    def __pow__(self, exponent: int):
        return mod_pow(self, exponent)

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.value == other.value and self.modulus == other.modulus
        if isinstance(other, (int, np.integer)):
            return self.value == int(other) % self.modulus
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus))

    def symmetric(self) -> int:
        """Representative in (-m/2, m/2]."""
        return symmetric(self.value, self.modulus)

    def __repr__(self):
        return f"Residue({self.value} mod {self.modulus})"


def symmetric(x: int, modulus: int) -> int:
    x %= modulus
    return x - modulus if x > modulus // 2 else x


def mod_pow(base: Residue, exponent: int) -> Residue:
    if exponent < 0:
        raise DomainError("exponent must be nonnegative")
    return Residue(pow(base.value, exponent, base.modulus), base.modulus)


def mod_inv(a: Residue) -> Residue:
    if a.value % a.prime == 0:
        raise NotInvertible(f"{a.value} is not a unit mod {a.modulus}")
    return Residue(pow(a.value, -1, a.modulus), a.modulus)


def teichmuller(a: int, p: int) -> Residue:
    """The (p-1)-th root of unity mod p^2 congruent to a mod p, i.e. a^p mod p^2."""
    base_prime(p)
    if a % p == 0:
        raise NotInvertible(f"{p} divides {a}")
    m = p * p
    return Residue(pow(a % m, p, m), m)


def pow_array(base, exponent, modulus: int) -> np.ndarray:
    """Elementwise ``base**exponent % modulus`` on int64 arrays.

    Square-and-multiply over the whole array at once.  Requires
    modulus**2 < 2**63, which holds for p^2 with p < 10^4 and beyond.
    """
    if modulus * modulus >= 2**63:
        raise DomainError("modulus too large for int64 products")
    b = np.asarray(base, dtype=np.int64) % modulus
    e = np.asarray(exponent, dtype=np.int64)
    if np.any(e < 0):
        raise DomainError("exponents must be nonnegative")
    b, e = np.broadcast_arrays(b, e)
    b = b.copy()
    e = e.copy()
    out = np.ones_like(b) % modulus
    while np.any(e):
        odd = (e & 1).astype(bool)
        out[odd] = out[odd] * b[odd] % modulus
        b = b * b % modulus
        e >>= 1
    return out

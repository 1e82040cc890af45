"""Dense linear algebra over Z/p and Z/p^2.

Matrices are int64 numpy arrays with entries reduced mod the modulus.  All
products stay below modulus**2, so p^2 moduli are exact for p < 3 * 10^4.
Pivot choice is deterministic (first qualifying entry in row-major order),
so identical inputs give identical bases.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, ModulusNotPrime, ModulusNotSquareOfPrime
from .modring import base_prime

__all__ = [
    "ModMatrix",
    "KernelBasis",
    "kernel_mod_p",
    "solution_module_mod_p2",
    "annihilates",
]


@dataclass
class ModMatrix:
    modulus: int
    entries: np.ndarray
    row_tags: list = field(default_factory=list)

    def __post_init__(self):
        base_prime(self.modulus)
        a = np.asarray(self.entries, dtype=np.int64)
        if a.ndim != 2 or a.shape[0] < 1 or a.shape[1] < 1:
            raise DomainError("entries must be a nonempty 2-d array")
        if np.any(a < 0) or np.any(a >= self.modulus):
            raise DomainError("entries must be reduced mod the modulus")
        self.entries = a
        if not self.row_tags:
            self.row_tags = [None] * a.shape[0]
        elif len(self.row_tags) != a.shape[0]:
            raise DomainError("one row tag per row")

    @classmethod
    def from_rows(cls, rows, modulus: int, row_tags=None) -> ModMatrix:
        a = np.asarray(rows, dtype=np.int64) % modulus
        return cls(modulus, a, list(row_tags) if row_tags else [])

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    def reduce(self, modulus: int) -> ModMatrix:
        if self.modulus % modulus:
            raise DomainError(f"{modulus} does not divide {self.modulus}")
        return ModMatrix(modulus, self.entries % modulus, list(self.row_tags))


@dataclass
class KernelBasis:
    """Generators of the solution set of M v = 0.

    ``exponents[k]`` is e with p^e the additive order of ``vectors[k]``; over
    Z/p every exponent is 1, so ``dimension == len(vectors)``.
    """

    modulus: int
    vectors: np.ndarray
    exponents: list[int]

    @property
    def prime(self) -> int:
        return base_prime(self.modulus)[0]

    @property
    def dimension(self) -> int:
        return len(self.exponents)

    @property
    def order_exponent(self) -> int:
        return sum(self.exponents)

    @property
    def order(self) -> int:
        return self.prime**self.order_exponent


def annihilates(m: ModMatrix, vectors) -> bool:
    """True iff every vector v satisfies M v = 0 mod the modulus."""
    v = np.asarray(vectors, dtype=np.int64).reshape(-1, m.cols)
    if len(v) == 0:
        return True
    mat, vt = m.entries, v.T % m.modulus
    if m.cols * (m.modulus - 1) ** 2 >= 2**63:
        mat, vt = mat.astype(object), vt.astype(object)
    prod = (mat @ vt) % m.modulus
    return not np.any(prod != 0)


def kernel_mod_p(m: ModMatrix) -> KernelBasis:
    """Kernel over GF(p) from the reduced row echelon form.

    One basis vector per free column, with a 1 in that column.
    """
    p, k = base_prime(m.modulus)
    if k != 1:
        raise ModulusNotPrime(f"modulus {m.modulus} is not prime")
    a = m.entries.copy()
    nrows, ncols = a.shape
    pivots: list[int] = []
    row = 0
    for col in range(ncols):
        if row == nrows:
            break
        nz = np.flatnonzero(a[row:, col])
        if nz.size == 0:
            continue
        i = row + nz[0]
        if i != row:
            a[[row, i]] = a[[i, row]]
        a[row, col:] = a[row, col:] * pow(int(a[row, col]), -1, p) % p
        factors = a[:, col].copy()
        factors[row] = 0
        hit = np.flatnonzero(factors)
        if hit.size:
            a[hit, col:] = (a[hit, col:] - np.outer(factors[hit], a[row, col:])) % p
        pivots.append(col)
        row += 1

    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for n, fc in enumerate(free):
        basis[n, fc] = 1
        for r, pc in enumerate(pivots):
            basis[n, pc] = -a[r, fc] % p
    return KernelBasis(m.modulus, basis, [1] * len(free))


def solution_module_mod_p2(m: ModMatrix) -> KernelBasis:
    """All v in (Z/p^2)^n with M v = 0, as generators with their orders.

    Diagonalizes ``U M V = diag(d_1, ..., d_t, 0, ...)`` with each d_k in
    {1, p}: unit pivots are taken while any remain, then pivots of valuation
    one.  The column transform V is kept, and the solution module is spanned
    by p*V[:, k] for d_k = p and V[:, k] for the columns beyond the rank.
    Working with V (not just an echelon form) is what makes the generating
    set complete in the presence of zero divisors.
    """
    p, k = base_prime(m.modulus)
    if k != 2:
        raise ModulusNotSquareOfPrime(f"modulus {m.modulus} is not p^2")
    mod = m.modulus
    a = m.entries.copy()
    nrows, ncols = a.shape
    v = np.eye(ncols, dtype=np.int64)
    diag_val: list[int] = []  # valuation of each pivot, 0 or 1

    t = 0
    while t < min(nrows, ncols):
        sub = a[t:, t:]
        units = np.argwhere(sub % p != 0)
        if units.size:
            i, j = units[0]
            val = 0
        else:
            rest = np.argwhere(sub != 0)
            if rest.size == 0:
                break
            i, j = rest[0]
            val = 1
        i += t
        j += t
        if i != t:
            a[[t, i]] = a[[i, t]]
        if j != t:
            a[:, [t, j]] = a[:, [j, t]]
            v[:, [t, j]] = v[:, [j, t]]
        unit = int(a[t, t]) // p**val
        inv = pow(unit, -1, mod)
        # everything left of valuation >= val, so dividing by p**val is exact
        f = (a[t + 1 :, t] // p**val) * inv % mod
        hit = np.flatnonzero(f)
        if hit.size:
            rows = t + 1 + hit
            a[rows, t:] = (a[rows, t:] - np.outer(f[hit], a[t, t:])) % mod
        # column t is now zero off the pivot, so the column operations
        # clearing row t touch no other row of a
        g = (a[t, t + 1 :] // p**val) * inv % mod
        hit = np.flatnonzero(g)
        if hit.size:
            cols = t + 1 + hit
            v[:, cols] = (v[:, cols] - np.outer(v[:, t], g[hit])) % mod
        a[t, t + 1 :] = 0
        diag_val.append(val)
        t += 1

    gens, exps = [], []
    for col, val in enumerate(diag_val):
        if val == 1:
            gens.append(p * v[:, col] % mod)
            exps.append(1)
    for col in range(len(diag_val), ncols):
        gens.append(v[:, col].copy())
        exps.append(2)
    vectors = np.array(gens, dtype=np.int64).reshape(len(gens), ncols)
    return KernelBasis(mod, vectors, exps)

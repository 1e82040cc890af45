"""End-to-end checks of every headline number, as runnable functions.

Each check returns a :class:`CheckResult`; :func:`run_all` runs them in order.
The test suite has its own copy of these criteria (tests/test_acceptance.py);
this module is what ``cyclopair verify-all`` executes.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .bernoulli import IrregularPair, bernoulli_exact, bernoulli_mod, iwasawa_coeffs, scan_irregular
from .cyclo_relations import (
    build_system,
    check_degenerate_candidate,
    check_vanishing_at_p_minus_r,
    partner,
    solve_pairing,
    solve_pairing_mod_p2,
)
from .galois import galois_relation
from .ihara import WEIGHT_12, commutator_ratio, cross_check_pairing, derivation_to_galois
from .linalg_mod import annihilates
from .modring import primes_below

GOLDEN_37 = {1: 1, 3: -11, 5: 0, 7: -1, 9: 1, 11: -2, 13: -6, 15: -3, 31: -1, 33: 11}


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.name}: {self.detail} ({self.seconds:.2f}s)"


def projectively_equal(a: dict[int, int], b: dict[int, int], p: int) -> bool:
    """a = c*b mod p on the keys of b, for a single unit c."""
    keys = sorted(b)
    anchor = next((k for k in keys if b[k] % p), None)
    if anchor is None:
        return all(a[k] % p == 0 for k in keys)
    if a[anchor] % p == 0:
        return False
    c = a[anchor] * pow(b[anchor], -1, p) % p
    return all((a[k] - c * b[k]) % p == 0 for k in keys)


def _timed(name, fn) -> CheckResult:
    t0 = time.perf_counter()
    try:
        passed, detail = fn()
    except Exception as exc:  # a crash is a failed check, reported as such
        passed, detail = False, f"{type(exc).__name__}: {exc}"
    return CheckResult(name, passed, detail, time.perf_counter() - t0)


def check_golden_37():
    p, r = 37, 32
    v = solve_pairing(IrregularPair(p, r))
    golden = dict(GOLDEN_37)
    for i, e in GOLDEN_37.items():
        golden[partner(i, r, p)] = -e
    ok = v.kernel_dimension == 1 and projectively_equal(v.entries, golden, p)
    return ok, f"kernel_dim={v.kernel_dimension}, entries={v.symmetric()}"


def pairs_below(limit: int) -> list[IrregularPair]:
    return [IrregularPair(p, r) for p, rs in scan_irregular(limit).items() for r in rs]


def check_uniqueness_and_vanishing(limit: int = 1000):
    bad_dim, bad_van = [], []
    pairs = pairs_below(limit)
    for pair in pairs:
        v = solve_pairing(pair)
        if v.kernel_dimension != 1:
            bad_dim.append(str(pair))
        if not check_vanishing_at_p_minus_r(v):
            bad_van.append(str(pair))
    ok = not bad_dim and not bad_van
    return ok, f"{len(pairs)} pairs below {limit}; dim!=1: {bad_dim or 'none'}; x_(p-r)!=0: {bad_van or 'none'}"


def check_mod_p2(limit: int = 300, convention: str = "teichmuller"):
    bad = []
    pairs = pairs_below(limit)
    for pair in pairs:
        order = solve_pairing_mod_p2(pair, convention=convention).order
        if order != pair.p:
            bad.append(f"{pair}: {order}")
    return not bad, f"{len(pairs)} pairs below {limit} ({convention}); order != p: {bad or 'none'}"


def check_bernoulli_37():
    pair = IrregularPair(37, 32)
    c = iwasawa_coeffs(pair)
    rel = galois_relation(pair, solve_pairing(pair), c)
    ratio = rel.head_ratio()
    ok = (c.f0_over_p.value, c.fprime0.value) == (14, 16) and ratio == 37 - 3
    return ok, f"f(0)/p={c.f0_over_p.value}, f'(0)={c.fprime0.value}, a_gamma/a_x={ratio}"


def check_ihara():
    coeffs = derivation_to_galois(WEIGHT_12)
    prop = projectively_equal(
        {1: coeffs[(3, 9)], 2: coeffs[(5, 7)]}, {1: 190, 2: 174}, 691
    )
    ratio = commutator_ratio(coeffs)
    v = solve_pairing(IrregularPair(691, 12))
    consistent = cross_check_pairing(v, {(3, 9): 190, (5, 7): 174})
    ok = prop and ratio == 50 and consistent and v.kernel_dimension == 1
    return ok, f"coeffs={coeffs} ∝ (190,174): {prop}, ratio={ratio}, e3*174==e5*190: {consistent}"


def check_degeneracy():
    rep = check_degenerate_candidate(89209, 44606)
    ok = rep.present and pow(2, (89209 - 1) // 2, 89209) == 1
    return ok, f"{rep.to_json()}"


def check_properties():
    failures = []
    for p in primes_below(101)[2:]:
        for k in range(2, min(p - 3, 512) + 1, 2):
            if bernoulli_mod(k, p).value != bernoulli_exact(k).reduce(p):
                failures.append(f"B_{k} mod {p}")
    for pair in pairs_below(300):
        v = solve_pairing(pair)
        system = build_system(pair)
        if not annihilates(system.matrix, v.vector()):
            failures.append(f"M v != 0 for {pair}")
        if any((v.entries[i] + v.entries[partner(i, pair.r, pair.p)]) % pair.p for i in v.entries):
            failures.append(f"skew {pair}")
        if solve_pairing(pair, include_odd_a=True).kernel_dimension > v.kernel_dimension:
            failures.append(f"odd-a rows grew kernel for {pair}")
    return not failures, f"failures: {failures or 'none'}"


def run_all(limit: int = 1000, p2_limit: int = 300) -> list[CheckResult]:
    checks = [
        ("1 golden (37,32) vector", check_golden_37),
        (f"2+3 uniqueness and x_(p-r)=0, p<{limit}", lambda: check_uniqueness_and_vanishing(limit)),
        (f"4 mod-p^2 order = p, p<{p2_limit}", lambda: check_mod_p2(p2_limit)),
        ("5 Bernoulli congruences (37,32)", check_bernoulli_37),
        ("6 Ihara cross-check (691,12)", check_ihara),
        ("7 degeneracy at p=89209", check_degeneracy),
        ("8 property checks", check_properties),
    ]
    return [_timed(name, fn) for name, fn in checks]


if __name__ == "__main__":  # pragma: no cover
    for res in run_all():
        print(res.line())

"""Property suites exercising the package against first-principles oracles.

Each suite recomputes some invariant the fast paths rely on (Euler's
criterion, square roots, character classes, product formulas, Pfaffian
squares, permutation invariance, rank-based vanishing, set computations by
two independent routes) using only brute force, and reports a count of
checks plus any failures.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import ekm as ekm_mod
from . import residue_matrix as rm
from .closed_forms import residue_det_closed_form
from .finite_field import (
    CHI_MINUS_ONE,
    CHI_ONE,
    CHI_ZERO,
    chi_k,
    legendre,
    primes_up_to,
    sqrt_mod,
)
from .verify import INAPPLICABLE, VIOLATED, run_sweep


@dataclass
class SuiteResult:
    name: str
    checks: int
    failures: list[str]

    @property
    def ok(self) -> bool:
        return not self.failures


def _odd_primes(pmax: int) -> list[int]:
    return [p for p in primes_up_to(pmax) if p > 2]


def _suite_euler_criterion() -> SuiteResult:
    checks, failures = 0, []
    for p in _odd_primes(101):
        squares = {x * x % p for x in range(1, p)}
        for a in range(p):
            want = 0 if a == 0 else (1 if a in squares else -1)
            got = legendre(a, p)
            checks += 1
            if got != want:
                failures.append(f"legendre({a},{p}) = {got}, want {want}")
    return SuiteResult("euler-criterion", checks, failures)


def _suite_symbol_multiplicativity() -> SuiteResult:
    rng = random.Random(1009)
    ps = _odd_primes(997)
    checks, failures = 0, []
    for _ in range(500):
        p = rng.choice(ps)
        a, b = rng.randrange(1, p), rng.randrange(1, p)
        checks += 1
        if legendre(a * b, p) != legendre(a, p) * legendre(b, p):
            failures.append(f"symbol not multiplicative at a={a} b={b} p={p}")
    return SuiteResult("symbol-multiplicativity", checks, failures)


def _suite_character_classes() -> SuiteResult:
    rng = random.Random(2003)
    checks, failures = 0, []
    for p in _odd_primes(61):
        for k in range(2, (p - 1) // 2 + 1):
            if (p - 1) % k:
                continue
            q = (p - 1) // k
            residues = set(rm.kth_residues(p, k).alphas)
            saw_minus_one = False
            for d in range(1, p):
                c = chi_k(d, k, p)
                checks += 1
                if c.raw != pow(d, q, p) or (c.kind == CHI_ONE) != (d in residues):
                    failures.append(f"character mismatch at d={d} k={k} p={p}")
                saw_minus_one = saw_minus_one or c.kind == CHI_MINUS_ONE
            checks += 1
            if saw_minus_one != (k % 2 == 0):
                failures.append(f"character -1 attainability wrong at k={k} p={p}")
            for _ in range(5):
                a, b = rng.randrange(1, p), rng.randrange(1, p)
                checks += 1
                if chi_k(a * b % p, k, p).raw != chi_k(a, k, p).raw * chi_k(b, k, p).raw % p:
                    failures.append(f"character not multiplicative at a={a} b={b} k={k} p={p}")
        if p > 3:
            checks += 1
            if chi_k(p, 2, p).kind != CHI_ZERO:
                failures.append(f"character of a multiple of p not zero at p={p}")
    return SuiteResult("character-classes", checks, failures)


def _suite_sqrt_roundtrip() -> SuiteResult:
    checks, failures = 0, []
    for p in _odd_primes(101):
        for a in range(p):
            r = sqrt_mod(a, p)
            checks += 1
            if legendre(a, p) == -1:
                if r is not None:
                    failures.append(f"sqrt of a nonresidue {a} mod {p} returned {r}")
            elif r is None or r * r % p != a or r > p - r:
                failures.append(f"bad canonical root for {a} mod {p}: {r}")
    return SuiteResult("sqrt-roundtrip", checks, failures)


def _sweep_suite(name: str, check: str, pmax: int) -> SuiteResult:
    checks, failures = 0, []
    for rec in run_sweep(check, pmax, jobs=1):
        if rec.verdict == INAPPLICABLE:
            continue
        checks += 1
        if rec.verdict == VIOLATED:
            failures.append(f"{check} violated at {rec.to_dict()}")
    return SuiteResult(name, checks, failures)


def _suite_reciprocity() -> SuiteResult:
    return _sweep_suite("reciprocity", "QR", 97)


def _suite_half_factorial_symbol() -> SuiteResult:
    return _sweep_suite("half-factorial-symbol", "L23", 997)


def _suite_double_factorial_count() -> SuiteResult:
    return _sweep_suite("double-factorial-count", "L24", 997)


def _suite_square_difference_product() -> SuiteResult:
    return _sweep_suite("square-difference-product", "L25", 997)


def _suite_double_factorial_split() -> SuiteResult:
    return _sweep_suite("double-factorial-split", "E2", 997)


def _suite_difference_product_symbol() -> SuiteResult:
    return _sweep_suite("difference-product-symbol", "E3", 997)


def _suite_product_formula_oracle() -> SuiteResult:
    rng = random.Random(20409)
    checks, failures = 0, []
    for _ in range(1000):
        p = rng.choice((13, 17, 101, 257))
        n = rng.randrange(1, 9)
        coeffs = [rng.randrange(p) for _ in range(n)]
        xs = rng.sample(range(p), n)
        ys = rng.sample(range(p), n)
        ent = [
            [sum(c * pow(x * y % p, t, p) for t, c in enumerate(coeffs)) % p for y in ys]
            for x in xs
        ]
        got = rm.det_mod(np.array(ent, dtype=np.int64), p)
        want = rm.structured_det(coeffs, xs, ys, p)
        checks += 1
        if got != want:
            failures.append(f"product formula off at p={p} n={n}: {got} != {want}")
    return SuiteResult("product-formula-oracle", checks, failures)


def _suite_residue_product_sign() -> SuiteResult:
    checks, failures = 0, []
    for p in _odd_primes(200):
        for k in range(2, (p - 1) // 2 + 1):
            if (p - 1) % k:
                continue
            res = rm.kth_residues(p, k)
            prod = 1
            for a in res.alphas:
                prod = prod * a % p
            checks += 1
            if prod != ((p - 1) if res.q % 2 == 0 else 1):
                failures.append(f"residue product sign wrong at p={p} k={k}")
    return SuiteResult("residue-product-sign", checks, failures)


def _suite_skew_and_pfaffian() -> SuiteResult:
    checks, failures = 0, []
    for p in _odd_primes(61):
        for k in range(2, (p - 1) // 2 + 1):
            if (p - 1) % (2 * k):
                continue
            res = rm.kth_residues(p, k)
            q = res.q
            for n in range(q + 1, 2 * q, 2):
                mat = rm.build_matrix(res, n, p - 1)
                e = mat.entries
                checks += 1
                if not (np.all((e + e.T) % p == 0) and np.all(np.diag(e) == 0)):
                    failures.append(f"matrix not skew at p={p} k={k} n={n}")
                    continue
                pf = rm.pfaffian_mod_p(mat)
                det = rm.det_mod_p(mat)
                checks += 1
                if pf * pf % p != det:
                    failures.append(f"pfaffian square != det at p={p} k={k} n={n}")
    return SuiteResult("skew-and-pfaffian", checks, failures)


def _pfaffian_brute(mat: list[list[int]], p: int) -> int:
    """Pfaffian by recursive expansion over perfect matchings."""
    n = len(mat)
    if n == 0:
        return 1
    total = 0
    rest = list(range(1, n))
    for idx, j in enumerate(rest):
        keep = [r for r in rest if r != j]
        sub = [[mat[r][c] for c in keep] for r in keep]
        total += (-1) ** idx * mat[0][j] * _pfaffian_brute(sub, p)
    return total % p


def _suite_pfaffian_reference() -> SuiteResult:
    rng = random.Random(40013)
    checks, failures = 0, []
    for _ in range(60):
        p = rng.choice((7, 13, 31, 101))
        n = rng.choice((2, 4, 6))
        mat = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                mat[i][j] = rng.randrange(p)
                mat[j][i] = (p - mat[i][j]) % p
        got = rm.pfaffian_mod(np.array(mat, dtype=np.int64), p)
        want = _pfaffian_brute(mat, p)
        checks += 1
        if got != want:
            failures.append(f"pfaffian off at p={p} n={n}: {got} != {want}")
    return SuiteResult("pfaffian-reference", checks, failures)


def _suite_ordering_invariance() -> SuiteResult:
    rng = random.Random(50021)
    ps = [p for p in _odd_primes(61) if p >= 5]
    checks, failures = 0, []
    for _ in range(100):
        p = rng.choice(ps)
        ks = [k for k in range(2, (p - 1) // 2 + 1) if (p - 1) % k == 0]
        k = rng.choice(ks)
        res = rm.kth_residues(p, k)
        n = rng.randrange(0, 2 * res.q)
        d = rng.randrange(1, p)
        want = rm.det_mod_p(rm.build_matrix(res, n, d))
        perm = list(res.alphas)
        rng.shuffle(perm)
        ent = [[pow((x + d * y) % p, n, p) for y in perm] for x in perm]
        got = rm.det_mod(np.array(ent, dtype=np.int64), p)
        checks += 1
        if got != want:
            failures.append(f"det changed under reordering at p={p} k={k} n={n} d={d}")
    return SuiteResult("ordering-invariance", checks, failures)


def _suite_low_exponent_vanishing() -> SuiteResult:
    checks, failures = 0, []
    for p in (7, 11, 13, 17, 19, 23):
        res = rm.kth_residues(p, 2)
        for n in range((p - 3) // 2):
            for d in (1, 2, -1):
                checks += 1
                if rm.det_exact(res, n, d) != 0:
                    failures.append(f"exact det nonzero at p={p} n={n} d={d}")
    return SuiteResult("low-exponent-vanishing", checks, failures)


def _suite_quadratic_form_symbol() -> SuiteResult:
    checks, failures = 0, []
    for p in _odd_primes(199):
        if p == 3:
            continue
        res = rm.kth_residues(p, 2)
        q = res.q
        ds = list(range(1, p))
        dets = rm.det_mod_batch(rm.power_stack(rm.base_stack(res, ds), q, p), p)
        want_sym = legendre(p - 1, p)
        for d, det in zip(ds, dets.tolist()):
            checks += 1
            if legendre(d, p) == 1:
                sym = 0 if det == 0 else legendre(det, p)
                if sym != want_sym:
                    failures.append(f"half-exponent symbol wrong at p={p} d={d}")
            elif det != 0:
                failures.append(f"half-exponent det nonzero at p={p} d={d}")
    return SuiteResult("quadratic-form-symbol", checks, failures)


def _suite_closed_form_determinant() -> SuiteResult:
    rng = random.Random(60091)
    checks, failures = 0, []
    for p in _odd_primes(61):
        for k in range(2, (p - 1) // 2 + 1):
            if (p - 1) % k:
                continue
            res = rm.kth_residues(p, k)
            for _ in range(3):
                n = rng.randrange(0, min(2 * res.q + 5, p))
                d = rng.randrange(1, p)
                checks += 1
                if residue_det_closed_form(p, k, n, d) != rm.det_mod_p(rm.build_matrix(res, n, d)):
                    failures.append(f"closed-form det off at p={p} k={k} n={n} d={d}")
    return SuiteResult("closed-form-determinant", checks, failures)


def _suite_shift_one_set_empty() -> SuiteResult:
    checks, failures = 0, []
    for k in range(2, 7):
        report = ekm_mod.ekm_by_scan(k, 1, bound=600)
        checks += 1
        if report.members:
            failures.append(f"shift-1 set nonempty for k={k}: {report.members}")
    return SuiteResult("shift-one-set-empty", checks, failures)


def _suite_set_route_agreement() -> SuiteResult:
    checks, failures = 0, []
    for m in (3, 5, 7, 9):
        by_scan = ekm_mod.ekm_by_scan(2, m, bound=600).members
        by_crit = ekm_mod.ekm_by_criterion(2, m, bound=600).members_within_bound
        checks += 1
        if tuple(by_scan) != tuple(by_crit):
            failures.append(f"set routes disagree at m={m}: scan {by_scan} criterion {by_crit}")
    return SuiteResult("set-route-agreement", checks, failures)


SUITES: tuple[Callable[[], SuiteResult], ...] = (
    _suite_euler_criterion,
    _suite_symbol_multiplicativity,
    _suite_character_classes,
    _suite_sqrt_roundtrip,
    _suite_reciprocity,
    _suite_half_factorial_symbol,
    _suite_double_factorial_count,
    _suite_square_difference_product,
    _suite_double_factorial_split,
    _suite_difference_product_symbol,
    _suite_product_formula_oracle,
    _suite_residue_product_sign,
    _suite_skew_and_pfaffian,
    _suite_pfaffian_reference,
    _suite_ordering_invariance,
    _suite_low_exponent_vanishing,
    _suite_quadratic_form_symbol,
    _suite_closed_form_determinant,
    _suite_shift_one_set_empty,
    _suite_set_route_agreement,
)


def run_selftest() -> list[SuiteResult]:
    """Run every property suite and return the per-suite results."""
    return [fn() for fn in SUITES]

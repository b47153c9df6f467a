"""Acceptance gate: one test per headline requirement, each emitting a
single [PASS]/[FAIL] line that survives pytest's output capture."""

import math
import time

from resdet.closed_forms import sqrt_symbol_shift1_k2, sqrt_symbol_shift3_k2
from resdet.ekm import ekm_by_criterion
from resdet.finite_field import legendre, sqrt_mod
from resdet.residue_matrix import build_matrix, det_exact, det_mod_p, kth_residues
from resdet.selftest import run_selftest
from resdet.verify import run_sweep, summarize


def _report(capsys, ok: bool, label: str) -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] {label}"
    with capsys.disabled():
        print(line, flush=True)
    assert ok, label


def test_acceptance_1_exceptional_prime_sets(capsys):
    t0 = time.monotonic()
    expect_within = {5: {29}, 7: {13, 53}, 9: {13, 17, 29}, 11: {17, 29}}
    ok = True
    for m, within in expect_within.items():
        rep = ekm_by_criterion(2, m, 1000)
        ok = ok and set(rep.members_within_bound) == within
        ok = ok and rep.unfactored_cofactors == ()
    rep13 = ekm_by_criterion(2, 13, 1000)
    ok = ok and set(rep13.members) == {17, 109, 401, 29629, 924397}
    head = rep13.factorizations[0]
    ok = ok and head.n == 58917607974225
    ok = ok and head.factors == ((3, 6), (5, 2), (7, 1), (11, 1), (13, 1), (109, 1), (29629, 1))
    ok = ok and math.prod(p**e for p, e in head.factors) == head.n
    ok = ok and rep13.unfactored_cofactors == ()
    elapsed = time.monotonic() - t0
    ok = ok and elapsed < 60
    _report(
        capsys,
        ok,
        f"acceptance 1: exceptional prime sets for k=2, m=5..13 ({elapsed:.1f}s)",
    )


def test_acceptance_2_master_square_congruence(capsys):
    t0 = time.monotonic()
    s = summarize("L26", run_sweep("L26", 200))
    elapsed = time.monotonic() - t0
    ok = s.violated == 0 and s.attempted > 0 and elapsed < 300
    _report(
        capsys,
        ok,
        f"acceptance 2: a^2*b split vs determinant, {s.attempted} cases, "
        f"{s.violated} violations ({elapsed:.1f}s)",
    )


def test_acceptance_3_vanishing_and_exclusion_sweeps(capsys):
    t0 = time.monotonic()
    parts = []
    ok = True
    for check, pmax, klist in (
        ("T1", 200, None),
        ("T2", 200, None),
        ("T3", 200, None),
        ("T4", 200, None),
        ("T3", 500, [2]),
        ("T4", 500, [2]),
    ):
        s = summarize(check, run_sweep(check, pmax, klist=klist))
        ok = ok and s.violated == 0 and s.holds > 0
        parts.append(f"{check}@{pmax}:{s.violated}")
    elapsed = time.monotonic() - t0
    _report(
        capsys,
        ok,
        f"acceptance 3: determinant vanishing and symbol-exclusion sweeps, "
        f"violations {' '.join(parts)} ({elapsed:.1f}s)",
    )


def test_acceptance_4_square_root_symbol_counts(capsys):
    t0 = time.monotonic()
    ok = True
    for check in ("C63", "C64"):
        s = summarize(check, run_sweep(check, 1000))
        ok = ok and s.violated == 0 and s.holds > 0

    # independent exact-integer route at p = 5
    res = kth_residues(5, 2)
    for shift, want_det, form in ((1, 729, sqrt_symbol_shift1_k2), (3, 59049, sqrt_symbol_shift3_k2)):
        exact = det_exact(res, res.q + shift, -1)
        root = math.isqrt(int(exact))
        ok = ok and int(exact) == want_det and root * root == int(exact)
        ok = ok and int(exact) % 5 == det_mod_p(build_matrix(res, res.q + shift, 4))
        canonical = sqrt_mod(int(exact) % 5, 5)
        ok = ok and root % 5 in (canonical, 5 - canonical)
        ok = ok and legendre(root % 5, 5) == form(5)
    elapsed = time.monotonic() - t0
    _report(
        capsys,
        ok,
        f"acceptance 4: square-root symbol counts to 1000 plus exact integer "
        f"cross-check at p=5 ({elapsed:.1f}s)",
    )


def test_acceptance_5_membership_biconditional(capsys):
    t0 = time.monotonic()
    s = summarize("T5", run_sweep("T5", 1000))
    elapsed = time.monotonic() - t0
    ok = s.violated == 0 and s.holds > 0
    _report(
        capsys,
        ok,
        f"acceptance 5: divisibility criterion biconditional, {s.holds} cases, "
        f"{s.violated} violations ({elapsed:.1f}s)",
    )


def test_acceptance_6_internal_selftest(capsys):
    t0 = time.monotonic()
    results = run_selftest()
    elapsed = time.monotonic() - t0
    bad = [r.name for r in results if not r.ok]
    ok = not bad and len(results) >= 20 and elapsed < 120
    _report(
        capsys,
        ok,
        f"acceptance 6: {len(results)} property suites, failing: {bad or 'none'} "
        f"({elapsed:.1f}s)",
    )

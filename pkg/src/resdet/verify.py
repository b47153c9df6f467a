"""Verification sweeps and property suites.

Every closed-form identity shipped by this package can be replayed against
an independent brute-force computation.  A sweep walks a prime range,
enumerates the admissible parameter tuples for one identity, and emits one
record per tuple with both sides and a verdict.  The check ids:

  T1   vanishing of the determinant when the parameter has character -1
  T2   excluded Legendre symbol values for character +1 and odd exponent
  T3   closed form for the symbol of sqrt(det) at shift 1 (d = -1)
  T4   closed form for the symbol of sqrt(det) at shift 3 (d = -1)
  T5   membership criterion vs direct divisibility for exceptional sets
  C63  count-based shift-1 symbol at k = 2
  C64  count-based shift-3 symbol at k = 2
  L23  symbol of ((p-1)/2)! equals symbol of 2 (p = 1 mod 4)
  L24  symbol of ((p-3)/2)!! equals the quarter-range nonresidue sign
  L25  product of (j^2 - i^2) over i < j <= (p-1)/2 mod p
  L26  master congruence det = a^2 * b for exponents between q and 2q
  E1   k = 2 three-branch display of the shift-1 closed form
  E2   splitting of ((p-1)/2)!! into ((p-3)/2)!! times 2
  E3   symbol of the ordered difference product equals symbol of 2
  QR   quadratic reciprocity over prime pairs
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from typing import Callable, Iterator

from . import closed_forms as cf
from . import ekm as ekm_mod
from . import residue_matrix as rm
from .finite_field import (
    CHI_MINUS_ONE,
    CHI_ONE,
    CHI_ZERO,
    chi_k,
    count_nonresidues_quarter,
    legendre,
    primes_up_to,
    primitive_root,
    sqrt_mod,
)

HOLDS = "holds"
VIOLATED = "violated"
INAPPLICABLE = "inapplicable"


@dataclass(frozen=True)
class VerificationRecord:
    check: str
    verdict: str
    p: int
    k: int | None = None
    n: int | None = None
    m: int | None = None
    d: int | None = None
    aux: int | None = None
    lhs: int | None = None
    rhs: int | None = None
    note: str = ""

    def to_dict(self) -> dict:
        out = {"check": self.check, "verdict": self.verdict, "p": self.p}
        for key in ("k", "n", "m", "d", "aux", "lhs", "rhs"):
            v = getattr(self, key)
            if v is not None:
                out[key] = int(v)
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class SweepSummary:
    check: str
    attempted: int = 0
    holds: int = 0
    violated: int = 0
    inapplicable: int = 0

    def add(self, rec: VerificationRecord) -> None:
        self.attempted += 1
        if rec.verdict == HOLDS:
            self.holds += 1
        elif rec.verdict == VIOLATED:
            self.violated += 1
        else:
            self.inapplicable += 1

    def to_dict(self) -> dict:
        return {
            "summary": self.check,
            "attempted": self.attempted,
            "holds": self.holds,
            "violated": self.violated,
            "inapplicable": self.inapplicable,
        }


@dataclass(frozen=True)
class SweepOptions:
    klist: tuple[int, ...] | None = None
    mlist: tuple[int, ...] | None = None
    dlist: tuple[int, ...] | None = None


def _divisor_ks(p: int, klist: tuple[int, ...] | None, *, exclude_edge: bool) -> list[int]:
    """Divisors k of p-1 with 2 <= k <= (p-1)/2; exclude_edge drops the
    k = (p-1)/2 case (i.e. keeps only p > 2k+1)."""
    ks = [k for k in range(2, (p - 1) // 2 + 1) if (p - 1) % k == 0]
    if exclude_edge:
        ks = [k for k in ks if p > 2 * k + 1]
    if klist is not None:
        ks = [k for k in ks if k in klist]
    return ks


def _filtered(values: list[int], chosen: tuple[int, ...] | None) -> list[int]:
    if chosen is None:
        return values
    return [v for v in values if v in chosen]


def _symbol_of_residue(x: int, p: int) -> int:
    return 0 if x % p == 0 else legendre(x, p)


def _t1_worker(p: int, opts: SweepOptions) -> list[VerificationRecord]:
    out = []
    for k in _divisor_ks(p, opts.klist, exclude_edge=True):
        q = (p - 1) // k
        if k % 2:
            out.append(
                VerificationRecord(
                    "T1", INAPPLICABLE, p, k=k, note="character -1 unattainable for odd k"
                )
            )
            continue
        ds = _filtered([d for d in range(1, p) if pow(d, q, p) == p - 1], opts.dlist)
        ns = _filtered([n for n in range(q + 1, 2 * q) if (n - q) % 2 == 0], opts.mlist)
        if not ds or not ns:
            continue
        bases = rm.base_stack(rm.kth_residues(p, k), ds)
        for n in ns:
            dets = rm.det_mod_batch(rm.power_stack(bases, n, p), p)
            for d, det in zip(ds, dets.tolist()):
                out.append(
                    VerificationRecord(
                        "T1",
                        HOLDS if det == 0 else VIOLATED,
                        p,
                        k=k,
                        n=n,
                        d=d,
                        lhs=det,
                        rhs=0,
                    )
                )
    return out


def _t2_worker(p: int, opts: SweepOptions) -> list[VerificationRecord]:
    out = []
    for k in _divisor_ks(p, opts.klist, exclude_edge=True):
        q = (p - 1) // k
        if q % 2:
            out.append(
                VerificationRecord("T2", INAPPLICABLE, p, k=k, note="needs p = 1 mod 2k")
            )
            continue
        res = rm.kth_residues(p, k)
        ds = _filtered(list(res.alphas), opts.dlist)
        ns = _filtered([n for n in range(q + 1, 2 * q) if n % 2], opts.mlist)
        if not ds or not ns:
            continue
        flat_excluded = -1 if (k % 2 == 0 or p % (4 * k) == 1) else None
        bases = rm.base_stack(res, ds)
        for n in ns:
            dets = rm.det_mod_batch(rm.power_stack(bases, n, p), p)
            for d, det in zip(ds, dets.tolist()):
                excluded = flat_excluded if flat_excluded is not None else legendre(d, p)
                sym = _symbol_of_residue(det, p)
                out.append(
                    VerificationRecord(
                        "T2",
                        HOLDS if sym != excluded else VIOLATED,
                        p,
                        k=k,
                        n=n,
                        d=d,
                        lhs=sym,
                        rhs=excluded,
                        note="lhs must differ from rhs",
                    )
                )
    return out


def _shift_worker(check: str, shift: int, p: int, opts: SweepOptions) -> list[VerificationRecord]:
    out = []
    for k in _divisor_ks(p, opts.klist, exclude_edge=False):
        if (p - 1) % (2 * k):
            continue
        if p % (4 * k) != 1 and k % 2:
            out.append(
                VerificationRecord(
                    check, INAPPLICABLE, p, k=k, note="no closed form for odd k in this class"
                )
            )
            continue
        res = rm.kth_residues(p, k)
        n = (p - 1) // k + shift
        pf = rm.pfaffian_mod_p(rm.build_matrix(res, n, p - 1))
        t_sym = legendre(rm.residue_diff_product(res), p)
        form = cf.sqrt_symbol_shift1 if shift == 1 else cf.sqrt_symbol_shift3
        rhs = form(k, p, t_sym)
        lhs = _symbol_of_residue(pf, p)
        out.append(
            VerificationRecord(
                check,
                HOLDS if lhs == rhs else VIOLATED,
                p,
                k=k,
                n=n,
                d=p - 1,
                lhs=lhs,
                rhs=rhs,
            )
        )
    return out


def _t3_worker(p: int, opts: SweepOptions) -> list[VerificationRecord]:
    return _shift_worker("T3", 1, p, opts)


def _t4_worker(p: int, opts: SweepOptions) -> list[VerificationRecord]:
    return _shift_worker("T4", 3, p, opts)


def _t5_worker(p: int, opts: SweepOptions) -> list[VerificationRecord]:
    out = []
    for k in opts.klist or (2, 3):
        for m in opts.mlist or (3, 5, 7):
            if m < 3 or m % 2 == 0 or (p - 1) % (2 * k) or p <= k * m + 1:
                continue
            q = (p - 1) // k
            det = rm.det_mod_p(rm.build_matrix(rm.kth_residues(p, k), m + q, p - 1))
            lhs = int(det == 0)
            rhs = int(ekm_mod.criterion_integers(k, m).divides(p))
            out.append(
                VerificationRecord(
                    "T5",
                    HOLDS if lhs == rhs else VIOLATED,
                    p,
                    k=k,
                    m=m,
                    d=p - 1,
                    lhs=lhs,
                    rhs=rhs,
                )
            )
    return out


def _count_worker(check: str, shift: int, p: int) -> list[VerificationRecord]:
    if p % 4 != 1:
        return [VerificationRecord(check, INAPPLICABLE, p, note="needs p = 1 mod 4")]
    n = shift + (p - 1) // 2
    det = rm.det_mod_p(rm.build_matrix(rm.kth_residues(p, 2), n, p - 1))
    root = sqrt_mod(det, p)
    form = cf.sqrt_symbol_shift1_k2 if shift == 1 else cf.sqrt_symbol_shift3_k2
    rhs = form(p)
    if root is None:
        return [
            VerificationRecord(
                check, VIOLATED, p, k=2, n=n, d=p - 1, rhs=rhs, note="determinant is a nonresidue"
            )
        ]
    lhs = _symbol_of_residue(root, p)
    return [
        VerificationRecord(
            check,
            HOLDS if lhs == rhs else VIOLATED,
            p,
            k=2,
            n=n,
            d=p - 1,
            lhs=lhs,
            rhs=rhs,
        )
    ]


def _c63_worker(p: int, opts: SweepOptions) -> list[VerificationRecord]:
    return _count_worker("C63", 1, p)


def _c64_worker(p: int, opts: SweepOptions) -> list[VerificationRecord]:
    return _count_worker("C64", 3, p)


def _l23_worker(p: int, opts: SweepOptions) -> list[VerificationRecord]:
    if p % 4 != 1:
        return [VerificationRecord("L23", INAPPLICABLE, p, note="needs p = 1 mod 4")]
    lhs = legendre(cf.factorial_mod((p - 1) // 2, p), p)
    rhs = legendre(2, p)
    return [VerificationRecord("L23", HOLDS if lhs == rhs else VIOLATED, p, lhs=lhs, rhs=rhs)]


def _l24_worker(p: int, opts: SweepOptions) -> list[VerificationRecord]:
    if p % 4 != 1:
        return [VerificationRecord("L24", INAPPLICABLE, p, note="needs p = 1 mod 4")]
    lhs = legendre(cf.double_factorial_mod((p - 3) // 2, p), p)
    rhs = (-1) ** count_nonresidues_quarter(p)
    return [VerificationRecord("L24", HOLDS if lhs == rhs else VIOLATED, p, lhs=lhs, rhs=rhs)]


def _l25_worker(p: int, opts: SweepOptions) -> list[VerificationRecord]:
    q = (p - 1) // 2
    sq = [i * i % p for i in range(q + 1)]
    lhs = 1
    for i in range(1, q + 1):
        si = sq[i]
        for j in range(i + 1, q + 1):
            lhs = lhs * (sq[j] - si) % p
    rhs = (p - cf.factorial_mod(q, p)) % p if p % 4 == 1 else 1
    return [VerificationRecord("L25", HOLDS if lhs == rhs else VIOLATED, p, lhs=lhs, rhs=rhs)]


def _l26_worker(p: int, opts: SweepOptions) -> list[VerificationRecord]:
    out = []
    for k in _divisor_ks(p, opts.klist, exclude_edge=True):
        q = (p - 1) // k
        ds = _filtered(
            [d for d in range(1, p) if pow(d, q, p) in (1, p - 1)], opts.dlist
        )
        ms = _filtered(list(range(q + 1, 2 * q)), opts.mlist)
        if not ds or not ms:
            continue
        bases = rm.base_stack(rm.kth_residues(p, k), ds)
        for m in ms:
            dets = rm.det_mod_batch(rm.power_stack(bases, m, p), p)
            for d, det in zip(ds, dets.tolist()):
                rhs = cf.square_split(m, k, d, p).product
                out.append(
                    VerificationRecord(
                        "L26",
                        HOLDS if det == rhs else VIOLATED,
                        p,
                        k=k,
                        m=m,
                        d=d,
                        lhs=det,
                        rhs=rhs,
                    )
                )
    return out


def _e1_worker(p: int, opts: SweepOptions) -> list[VerificationRecord]:
    if p % 4 != 1:
        return [VerificationRecord("E1", INAPPLICABLE, p, note="needs p = 1 mod 4")]
    q = (p - 1) // 2
    res = rm.kth_residues(p, 2)
    pf = rm.pfaffian_mod_p(rm.build_matrix(res, 1 + q, p - 1))
    t_sym = legendre(rm.residue_diff_product(res), p)
    if p % 8 == 1:
        rhs = legendre(3, p) * legendre(cf.double_factorial_mod(q, p), p) * t_sym
    elif p == 5:
        rhs = t_sym
    else:
        rhs = legendre(6, p) * legendre(cf.double_factorial_mod(q - 1, p), p) * t_sym
    lhs = _symbol_of_residue(pf, p)
    return [
        VerificationRecord(
            "E1", HOLDS if lhs == rhs else VIOLATED, p, k=2, n=1 + q, d=p - 1, lhs=lhs, rhs=rhs
        )
    ]


def _e2_worker(p: int, opts: SweepOptions) -> list[VerificationRecord]:
    if p % 4 != 1:
        return [VerificationRecord("E2", INAPPLICABLE, p, note="needs p = 1 mod 4")]
    q = (p - 1) // 2
    lhs = legendre(cf.double_factorial_mod(q, p), p)
    rhs = legendre(cf.double_factorial_mod(q - 1, p), p) * legendre(2, p)
    return [VerificationRecord("E2", HOLDS if lhs == rhs else VIOLATED, p, lhs=lhs, rhs=rhs)]


def _e3_worker(p: int, opts: SweepOptions) -> list[VerificationRecord]:
    if p % 4 != 1:
        return [VerificationRecord("E3", INAPPLICABLE, p, note="needs p = 1 mod 4")]
    lhs = legendre(rm.residue_diff_product(rm.kth_residues(p, 2)), p)
    rhs = legendre(2, p)
    return [VerificationRecord("E3", HOLDS if lhs == rhs else VIOLATED, p, lhs=lhs, rhs=rhs)]


def _qr_worker(p: int, opts: SweepOptions) -> list[VerificationRecord]:
    out = []
    for r in primes_up_to(p - 1):
        if r == 2:
            continue
        lhs = legendre(p, r) * legendre(r, p)
        rhs = (-1) ** (((p - 1) // 2) * ((r - 1) // 2))
        out.append(
            VerificationRecord(
                "QR", HOLDS if lhs == rhs else VIOLATED, p, aux=r, lhs=lhs, rhs=rhs
            )
        )
    return out


@dataclass(frozen=True)
class CheckInfo:
    worker: Callable[[int, SweepOptions], list[VerificationRecord]]
    default_pmax: int
    description: str


CHECKS: dict[str, CheckInfo] = {
    "T1": CheckInfo(_t1_worker, 200, "determinant vanishes when the parameter has character -1"),
    "T2": CheckInfo(_t2_worker, 200, "excluded symbol values for character +1, odd exponent"),
    "T3": CheckInfo(_t3_worker, 200, "closed form for the sqrt symbol at shift 1"),
    "T4": CheckInfo(_t4_worker, 200, "closed form for the sqrt symbol at shift 3"),
    "T5": CheckInfo(_t5_worker, 1000, "membership criterion vs direct divisibility"),
    "C63": CheckInfo(_c63_worker, 1000, "count-based shift-1 symbol at k=2"),
    "C64": CheckInfo(_c64_worker, 1000, "count-based shift-3 symbol at k=2"),
    "L23": CheckInfo(_l23_worker, 997, "symbol of ((p-1)/2)! equals symbol of 2"),
    "L24": CheckInfo(_l24_worker, 997, "symbol of ((p-3)/2)!! equals quarter-count sign"),
    "L25": CheckInfo(_l25_worker, 997, "square-difference product congruence"),
    "L26": CheckInfo(_l26_worker, 200, "master congruence det = a^2 * b"),
    "E1": CheckInfo(_e1_worker, 997, "k=2 display of the shift-1 closed form"),
    "E2": CheckInfo(_e2_worker, 997, "double-factorial split identity"),
    "E3": CheckInfo(_e3_worker, 997, "difference-product symbol identity"),
    "QR": CheckInfo(_qr_worker, 97, "quadratic reciprocity over prime pairs"),
}


def records_for_prime(check: str, p: int, opts: SweepOptions) -> list[VerificationRecord]:
    return CHECKS[check].worker(p, opts)


def run_sweep(
    check: str,
    pmax: int | None = None,
    *,
    klist: list[int] | None = None,
    mlist: list[int] | None = None,
    dlist: list[int] | None = None,
    jobs: int | None = None,
) -> Iterator[VerificationRecord]:
    """Yield records for one check over all odd primes <= pmax, ordered by
    (p, k, exponent, d)."""
    if check not in CHECKS:
        raise ValueError(f"unknown check {check!r}; choose from {sorted(CHECKS)}")
    info = CHECKS[check]
    pmax = info.default_pmax if pmax is None else pmax
    opts = SweepOptions(
        klist=tuple(klist) if klist else None,
        mlist=tuple(mlist) if mlist else None,
        dlist=tuple(dlist) if dlist else None,
    )
    ps = [p for p in primes_up_to(pmax) if p > 2]
    jobs = jobs if jobs and jobs > 0 else (os.cpu_count() or 1)
    if jobs == 1 or len(ps) < 2:
        for p in ps:
            yield from records_for_prime(check, p, opts)
        return
    fn = partial(records_for_prime, check, opts=opts)
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        for recs in ex.map(fn, ps, chunksize=max(1, len(ps) // (4 * jobs))):
            yield from recs


def summarize(check: str, records) -> SweepSummary:
    s = SweepSummary(check=check)
    for r in records:
        s.add(r)
    return s

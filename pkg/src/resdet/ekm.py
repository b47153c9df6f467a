"""Exceptional-prime sets for the shifted skew determinants.

E_k(m) is the set of primes p = 1 (mod 2k) dividing the determinant with
exponent m + (p-1)/k at d = -1.  Two routes are implemented: a direct scan
over a prime range, and the finite criterion (for odd m >= 3 and
p > km + 1, membership is equivalent to p dividing one of a fixed list of
e-factorial sums), which reduces the search to factoring a handful of
integers.  Every candidate produced by the criterion is re-verified
against an actual determinant evaluation before being reported.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .closed_forms import e_factorial, residue_det_closed_form
from .finite_field import is_prime, primes_up_to
from .residue_matrix import build_matrix, det_mod_p, kth_residues

# Largest matrix order handled by Gaussian elimination during candidate
# re-verification; larger primes use the closed-form product evaluation,
# which is exact and O(p) but shares no code with the criterion integers.
_DIRECT_ORDER_CAP = 600

# Candidates whose matrix order exceeds this are beyond feasible
# re-verification of either kind.
_VERIFY_ORDER_CAP = 50_000_000

_SMALL_PRIME_CAP = 1 << 16


@lru_cache(maxsize=1)
def _small_primes() -> list[int]:
    return primes_up_to(_SMALL_PRIME_CAP)


def _brent_rho(n: int, c: int) -> int | None:
    """One Brent cycle of Pollard's rho with increment c; returns a
    nontrivial factor or None."""
    y, r, acc = 2, 1, 1
    g = 1
    m = 128
    x = ys = y
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                acc = acc * abs(x - y) % n
            g = math.gcd(acc, n)
            k += m
        r <<= 1
    if g == n:
        g = 1
        while g == 1:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
    return g if g != n else None


@dataclass(frozen=True)
class Factorization:
    """Prime factorization with any composite residue left unfactored."""

    n: int
    factors: tuple[tuple[int, int], ...]
    unfactored: tuple[int, ...]

    def recombined(self) -> int:
        t = 1
        for q, e in self.factors:
            t *= q**e
        for u in self.unfactored:
            t *= u
        return t


def factor(n: int) -> Factorization:
    """Factor n >= 2 deterministically: trial division below 2^16, then
    Brent-rho with a fixed restart schedule.  A composite that survives
    every restart is reported in `unfactored` rather than raised."""
    if n < 2:
        raise ValueError("need n >= 2")
    remaining = n
    found: dict[int, int] = {}
    for q in _small_primes():
        if q * q > remaining:
            break
        while remaining % q == 0:
            found[q] = found.get(q, 0) + 1
            remaining //= q
    unfactored: list[int] = []
    stack = [remaining] if remaining > 1 else []
    while stack:
        v = stack.pop()
        if is_prime(v):
            found[v] = found.get(v, 0) + 1
            continue
        split = None
        for c in range(1, 21):
            split = _brent_rho(v, c)
            if split is not None:
                break
        if split is None:
            unfactored.append(v)
            continue
        stack.append(split)
        stack.append(v // split)
    return Factorization(
        n=n,
        factors=tuple(sorted(found.items())),
        unfactored=tuple(sorted(unfactored)),
    )


@dataclass(frozen=True)
class CriterionIntegers:
    """The e-factorial sums whose prime factors > km+1 decide membership."""

    k: int
    m: int
    head: int
    quotients: tuple[int, ...]

    def values(self) -> list[int]:
        return [self.head, *self.quotients]

    def divides(self, p: int) -> bool:
        return any(v % p == 0 for v in self.values())


@lru_cache(maxsize=None)
def criterion_integers(k: int, m: int) -> CriterionIntegers:
    """head = (km)!_(k) + (km-1)!_(k) and, for l = 1..(m-1)/2, the exact
    quotient sums (km-kl)!_(k)/(kl)!_(k) + (km-kl-1)!_(k)/(kl-1)!_(k).

    Needs odd m >= 3 and k >= 2; the quotients are exact by construction
    (numerator and denominator run over the same residue class mod k)."""
    if k < 2:
        raise ValueError("need k >= 2")
    if m < 3 or m % 2 == 0:
        raise ValueError("criterion integers exist for odd m >= 3 only")
    head = e_factorial(k * m, k) + e_factorial(k * m - 1, k)
    quotients = []
    for l in range(1, (m - 1) // 2 + 1):
        qa, ra = divmod(e_factorial(k * m - k * l, k), e_factorial(k * l, k))
        qb, rb = divmod(e_factorial(k * m - k * l - 1, k), e_factorial(k * l - 1, k))
        if ra or rb:
            raise ArithmeticError(f"inexact e-factorial quotient at l={l}")
        quotients.append(qa + qb)
    return CriterionIntegers(k=k, m=m, head=head, quotients=tuple(quotients))


def shifted_det_divisible(p: int, k: int, m: int) -> bool:
    """Does p divide the determinant with exponent m + (p-1)/k at d = -1?

    Uses Gaussian elimination while the matrix order is tractable and the
    closed-form product evaluation beyond that.
    """
    if (p - 1) % (2 * k):
        raise ValueError(f"p={p} must be 1 mod {2 * k}")
    q = (p - 1) // k
    n = m + q
    if q <= _DIRECT_ORDER_CAP:
        return det_mod_p(build_matrix(kth_residues(p, k), n, p - 1)) == 0
    if q > _VERIFY_ORDER_CAP:
        raise ValueError(f"candidate p={p} too large to verify")
    return residue_det_closed_form(p, k, n, p - 1) == 0


@dataclass(frozen=True)
class EkmReport:
    """Search result for one (k, m), with provenance per member."""

    k: int
    m: int
    bound: int
    members: tuple[int, ...]
    provenance: tuple[tuple[int, str], ...]
    criterion: CriterionIntegers | None
    factorizations: tuple[Factorization, ...]
    unfactored_cofactors: tuple[int, ...]

    @property
    def members_within_bound(self) -> tuple[int, ...]:
        return tuple(p for p in self.members if p <= self.bound)


def _check_odd_m(k: int, m: int) -> None:
    if k < 2:
        raise ValueError("need k >= 2")
    if m < 1 or m % 2 == 0:
        raise ValueError("the set is defined for odd m >= 1")


def ekm_by_criterion(k: int, m: int, bound: int = 1000) -> EkmReport:
    """Full E_k(m) via the divisibility criterion.

    Primes at most km+1 are scanned directly; larger members must divide a
    criterion integer, so they are read off the factorizations, filtered by
    the 1 mod 2k condition, and re-verified against the determinant.  The
    bound only selects the members_within_bound view of the report.
    """
    _check_odd_m(k, m)
    if m == 1:
        # Provably empty: the shift-1 closed form never vanishes.
        return EkmReport(k, m, bound, (), (), None, (), ())
    ci = criterion_integers(k, m)
    facs = tuple(factor(v) for v in ci.values())
    members: dict[int, str] = {}
    for p in primes_up_to(k * m + 1):
        if (p - 1) % (2 * k) == 0 and shifted_det_divisible(p, k, m):
            members[p] = "small-scan"
    candidates = sorted(
        {
            q
            for f in facs
            for q, _ in f.factors
            if q > k * m + 1 and (q - 1) % (2 * k) == 0
        }
    )
    for p in candidates:
        if not shifted_det_divisible(p, k, m):
            raise ArithmeticError(
                f"criterion candidate p={p} failed determinant re-verification"
            )
        members[p] = "criterion-factor"
    unfactored = tuple(sorted({u for f in facs for u in f.unfactored}))
    ordered = tuple(sorted(members))
    return EkmReport(
        k=k,
        m=m,
        bound=bound,
        members=ordered,
        provenance=tuple((p, members[p]) for p in ordered),
        criterion=ci,
        factorizations=facs,
        unfactored_cofactors=unfactored,
    )


def ekm_by_scan(k: int, m: int, bound: int = 1000) -> EkmReport:
    """E_k(m) restricted to p <= bound, by direct determinant scan."""
    _check_odd_m(k, m)
    if bound < 3:
        raise ValueError("bound must be at least 3")
    members = tuple(
        p
        for p in primes_up_to(bound)
        if (p - 1) % (2 * k) == 0 and shifted_det_divisible(p, k, m)
    )
    return EkmReport(
        k=k,
        m=m,
        bound=bound,
        members=members,
        provenance=tuple((p, "scan") for p in members),
        criterion=None,
        factorizations=(),
        unfactored_cofactors=(),
    )

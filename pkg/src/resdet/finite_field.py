"""Arithmetic in the multiplicative group of a prime field.

Residues are plain Python integers kept in [0, p).  The matrix routines in
this package store residues in signed 64-bit machine words and rely on a
product of two residues never overflowing, so moduli are capped at
MAX_MODULUS = floor(sqrt(2**63 - 1)), which is comfortably above 2**31.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

MAX_MODULUS = 3_037_000_499

# Deterministic Miller-Rabin witness set, valid for n < 3.3 * 10**24
# (Sorenson-Webster), far beyond 64-bit.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_BOUND = 3_317_044_064_679_887_385_961_981

CHI_ONE = "one"
CHI_MINUS_ONE = "minus-one"
CHI_OTHER = "other"
CHI_ZERO = "zero"


def is_prime(n: int) -> bool:
    """Deterministic primality test (valid for all n below the witness bound)."""
    if n >= _MR_BOUND:
        raise ValueError(f"{n} exceeds the deterministic witness bound")
    if n < 2:
        return False
    for w in _MR_WITNESSES:
        if n == w:
            return True
        if n % w == 0:
            return False
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for w in _MR_WITNESSES:
        x = pow(w, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def mod_pow(base: int, exp: int, p: int) -> int:
    """base**exp mod p for exp >= 0."""
    if exp < 0:
        raise ValueError("negative exponent")
    return pow(base, exp, p)


def legendre(a: int, p: int) -> int:
    """Legendre symbol of a modulo an odd prime p, in {-1, 0, 1}."""
    if p < 3 or p % 2 == 0:
        raise ValueError(f"odd prime modulus required, got {p}")
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


@dataclass(frozen=True)
class CharacterValue:
    """A power-residue character value d**((p-1)/k) mod p with its class."""

    raw: int
    kind: str  # CHI_ONE | CHI_MINUS_ONE | CHI_OTHER | CHI_ZERO

    @property
    def sign(self) -> int:
        """The value as a signed unit; only defined for the +-1 classes."""
        if self.kind == CHI_ONE:
            return 1
        if self.kind == CHI_MINUS_ONE:
            return -1
        raise ValueError(f"character value {self.raw} is not a unit sign")


def chi_k(d: int, k: int, p: int) -> CharacterValue:
    """Order-k power-residue character of d modulo p.

    Requires k | p - 1 with 2 <= k <= (p - 1) // 2.  The raw value is
    d**((p-1)/k) mod p; it equals 1 exactly when d is a k-th power residue,
    and p - 1 is attainable only for even k.
    """
    if not 2 <= k <= (p - 1) // 2 or (p - 1) % k:
        raise ValueError(f"k={k} must divide p-1 with 2 <= k <= (p-1)/2 for p={p}")
    raw = pow(d % p, (p - 1) // k, p)
    if raw == 0:
        kind = CHI_ZERO
    elif raw == 1:
        kind = CHI_ONE
    elif raw == p - 1:
        kind = CHI_MINUS_ONE
    else:
        kind = CHI_OTHER
    return CharacterValue(raw=raw, kind=kind)


def _trial_factor(n: int) -> tuple[tuple[int, int], ...]:
    """Factor n by trial division; adequate for n up to MAX_MODULUS."""
    out = []
    for q in (2, 3):
        e = 0
        while n % q == 0:
            n //= q
            e += 1
        if e:
            out.append((q, e))
    f = 5
    while f * f <= n:
        for q in (f, f + 2):
            e = 0
            while n % q == 0:
                n //= q
                e += 1
            if e:
                out.append((q, e))
        f += 6
    if n > 1:
        out.append((n, 1))
    return tuple(out)


@dataclass(frozen=True)
class PrimeModulus:
    """A validated odd prime p with the factorization of p - 1 and its
    least primitive root."""

    p: int
    p_minus_one_factors: tuple[tuple[int, int], ...]
    g: int


@lru_cache(maxsize=None)
def prime_modulus(p: int) -> PrimeModulus:
    """Construct (and cache) a validated PrimeModulus."""
    if p > MAX_MODULUS:
        raise ValueError(f"p={p} exceeds the 64-bit-safe cap {MAX_MODULUS}")
    if p < 3 or not is_prime(p):
        raise ValueError(f"p={p} is not an odd prime")
    factors = _trial_factor(p - 1)
    primes = [q for q, _ in factors]
    g = next(
        g
        for g in range(2, p)
        if all(pow(g, (p - 1) // q, p) != 1 for q in primes)
    )
    return PrimeModulus(p=p, p_minus_one_factors=factors, g=g)


def primitive_root(p: int) -> int:
    """Least primitive root modulo an odd prime p."""
    return prime_modulus(p).g


def sqrt_mod(a: int, p: int) -> int | None:
    """Canonical square root of a modulo an odd prime p, or None.

    Returns the root r with r <= p - r (Tonelli-Shanks), or None when a is
    a quadratic nonresidue.  For p = 1 (mod 4) both roots have the same
    Legendre symbol, so the canonical choice never affects symbol work.
    """
    a %= p
    if a == 0:
        return 0
    if legendre(a, p) != 1:
        return None
    if p % 4 == 3:
        r = pow(a, (p + 1) // 4, p)
        return min(r, p - r)
    # Tonelli-Shanks; z is the least quadratic nonresidue.
    q = p - 1
    s = 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = next(z for z in range(2, p) if legendre(z, p) == -1)
    c = pow(z, q, p)
    r = pow(a, (q + 1) // 2, p)
    t = pow(a, q, p)
    m = s
    while t != 1:
        i = 0
        t2 = t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        r = r * b % p
        c = b * b % p
        t = t * c % p
        m = i
    return min(r, p - r)


def primes_up_to(n: int) -> list[int]:
    """All primes <= n by a plain sieve."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, int(n**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i in range(2, n + 1) if sieve[i]]


def count_nonresidues_quarter(p: int) -> int:
    """Number of quadratic nonresidues t with 0 < t < p/4; needs p = 1 (mod 4)."""
    if p % 4 != 1:
        raise ValueError(f"p={p} must be 1 mod 4")
    return sum(1 for t in range(1, (p - 1) // 4 + 1) if legendre(t, p) == -1)

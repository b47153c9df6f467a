"""Closed-form evaluations attached to the residue determinant family.

Conventions used throughout: p is an odd prime, k | p - 1 with
2 <= k <= (p-1)/2, q = (p-1)/k is the matrix order, and chi denotes the
order-k power-residue character d -> d^q mod p.  Formulas that mention a
"shift" refer to the determinant with exponent n = q + shift at d = -1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .finite_field import count_nonresidues_quarter, is_prime, legendre
from .residue_matrix import kth_residues, residue_diff_product

_fact_cache: dict[int, tuple[list[int], list[int]]] = {}


def _tables(p: int, limit: int) -> tuple[list[int], list[int]]:
    """Factorial and inverse-factorial tables mod p covering 0..limit."""
    cached = _fact_cache.get(p)
    if cached is not None and len(cached[0]) > limit:
        return cached
    size = min(max(limit + 1, 256), p)
    fac = [1] * size
    for i in range(1, size):
        fac[i] = fac[i - 1] * i % p
    inv = [1] * size
    inv[-1] = pow(fac[-1], -1, p)
    for i in range(size - 1, 0, -1):
        inv[i - 1] = inv[i] * i % p
    _fact_cache[p] = (fac, inv)
    return fac, inv


def factorial_mod(n: int, p: int) -> int:
    """n! mod p for 0 <= n < p."""
    if not 0 <= n < p:
        raise ValueError("factorial argument must lie in [0, p)")
    return _tables(p, n)[0][n]


def binomial_mod(n: int, r: int, p: int) -> int:
    """Binomial coefficient C(n, r) mod p for 0 <= n < p."""
    if not 0 <= n < p:
        raise ValueError("binomial row must lie in [0, p)")
    if r < 0 or r > n:
        return 0
    fac, inv = _tables(p, n)
    return fac[n] * inv[r] % p * inv[n - r] % p


def e_factorial(a: int, e: int) -> int:
    """The e-step factorial a * (a-e) * (a-2e) * ..., last factor in [1, e].

    Undefined for a < 1 (the recursion never terminates at 0), so such
    arguments are rejected.
    """
    if e < 1:
        raise ValueError("step must be a positive integer")
    if a < 1:
        raise ValueError(f"e-factorial undefined for a={a}")
    t = 1
    while a > e:
        t *= a
        a -= e
    return t * a


def double_factorial_mod(a: int, p: int) -> int:
    """a!! mod p (empty product for a in {0, 1})."""
    if a < 0:
        raise ValueError("negative double factorial")
    t = 1
    while a > 1:
        t = t * a % p
        a -= 2
    return t


def _sign(e: int, p: int) -> int:
    """(-1)**e as a residue mod p."""
    return p - 1 if e % 2 else 1


@dataclass(frozen=True)
class SquareSplit:
    """The determinant mod p written as a**2 * b.

    The square part a soaks up the paired coefficient products and the
    residue difference product; b is the unpaired remainder that decides
    vanishing and quadratic character.
    """

    a: int
    b: int
    product: int


def square_split(m: int, k: int, d: int, p: int) -> SquareSplit:
    """Decompose the order-q determinant with exponent m at parameter d as
    a^2 * b mod p.

    Valid for p > 2k+1, k | p-1, q < m < 2q, p not dividing d, and
    d^q = +-1 mod p; rejects anything else.  The product field equals
    the determinant mod p.
    """
    if not 2 <= k <= (p - 1) // 2 or (p - 1) % k:
        raise ValueError(f"k={k} invalid for p={p}")
    if p <= 2 * k + 1:
        raise ValueError(f"p={p} must exceed 2k+1={2 * k + 1}")
    q = (p - 1) // k
    if not q < m < 2 * q:
        raise ValueError(f"exponent m={m} must lie strictly between q={q} and 2q")
    dr = d % p
    if dr == 0:
        raise ValueError(f"d={d} is divisible by p={p}")
    chi_raw = pow(dr, q, p)
    if chi_raw == 1:
        chi = 1
    elif chi_raw == p - 1:
        chi = -1
    else:
        raise ValueError(f"d={d} needs character +-1 mod p={p}, got {chi_raw}")

    a = residue_diff_product(kth_residues(p, k))
    for l in range((m - q - 1) // 2 + 1):
        bracket = (binomial_mod(m, l, p) + chi * binomial_mod(m, m - q - l, p)) % p
        a = a * bracket % p
    for l in range(q - 1 - m // 2):
        a = a * binomial_mod(m, m - q + 1 + l, p) % p

    if m % 2 == 0 and q % 2 == 0:
        omega = pow(dr, q // 2, p)
        b = omega * _sign(q // 2 - 1, p) % p
        b = b * ((1 + chi) % p) % p
        b = b * binomial_mod(m, (m - q) // 2, p) % p * binomial_mod(m, m // 2, p) % p
    elif m % 2 == 0:
        b = _sign(m // 2, p) if chi == -1 else 1
        b = b * _sign((q - 1) // 2, p) % p * binomial_mod(m, m // 2, p) % p
    elif q % 2 == 0:
        b = pow(dr, (q // 2) * m, p) * _sign(q // 2, p) % p
    else:
        b = _sign((q - 1) // 2, p) * ((1 + chi) % p) % p
        b = b * binomial_mod(m, (m - q) // 2, p) % p

    return SquareSplit(a=a, b=b, product=a * a % p * b % p)


def residue_det_closed_form(p: int, k: int, n: int, d: int) -> int:
    """The order-q determinant mod p by pure product evaluation, no matrix.

    Column j carries the factor alpha_j^n; what remains is det[f(x_i y_j)]
    where f is (x + d)^n folded by x^q = 1 (the k-th power residues are
    exactly the q-th roots of unity mod p).  The determinant of such a
    matrix is the product of the q folded coefficients times two
    Vandermonde factors, and those factors collapse to q^q because the
    residues are the roots of x^q - 1.  Runs in O(n + q) after factorial
    tables, which makes divisibility checks feasible for primes far beyond
    any explicit matrix.  Requires 0 <= n < p and p not dividing d.
    """
    if not is_prime(p) or p == 2:
        raise ValueError(f"p={p} is not an odd prime")
    if not 2 <= k <= (p - 1) // 2 or (p - 1) % k:
        raise ValueError(f"k={k} invalid for p={p}")
    if not 0 <= n < p:
        raise ValueError("exponent must lie in [0, p)")
    q = (p - 1) // k
    dr = d % p
    if dr == 0:
        raise ValueError(f"d={d} is divisible by p={p}")
    fac, inv = _tables(p, n)
    fn = fac[n]
    dpow = [1] * (n + 1)
    for i in range(1, n + 1):
        dpow[i] = dpow[i - 1] * dr % p
    acc = 1
    for l in range(q):
        c = 0
        for t in range(l, n + 1, q):
            c = (c + fn * inv[t] % p * inv[n - t] % p * dpow[n - t]) % p
        acc = acc * c % p
    sign = _sign(n * (q + 1), p)
    return acc * pow(q, q, p) % p * sign % p


def _shift_precheck(k: int, p: int) -> int:
    if not 2 <= k <= (p - 1) // 2:
        raise ValueError(f"k={k} out of range for p={p}")
    if (p - 1) % (2 * k):
        raise ValueError(f"p={p} must be 1 mod {2 * k}")
    if p % (4 * k) != 1 and k % 2:
        raise ValueError(f"no closed form for odd k={k} with p={p} = 2k+1 mod 4k")
    return (p - 1) // k


def sqrt_symbol_shift1(k: int, p: int, t_symbol: int) -> int:
    """Legendre symbol of the square root of the shift-1 determinant.

    t_symbol is the Legendre symbol of the residue difference product.
    Defined when p = 1 (mod 2k), except for odd k with p = 2k+1 (mod 4k).
    """
    q = _shift_precheck(k, p)
    if p % (4 * k) == 1:
        return legendre((k - 1) * (2 * k - 1), p) * legendre(double_factorial_mod(q, p), p) * t_symbol
    if p == 2 * k + 1:
        return t_symbol
    return legendre(k * (2 * k - 1), p) * legendre(double_factorial_mod(q - 1, p), p) * t_symbol


def sqrt_symbol_shift3(k: int, p: int, t_symbol: int) -> int:
    """Legendre symbol of the square root of the shift-3 determinant.

    Same domain as sqrt_symbol_shift1.  Returns 0 exactly when p divides
    the constant 6k^3 + (3k-1)(2k-1)(k-1), which is the only way the
    shift-3 determinant can vanish mod p in this domain.
    """
    q = _shift_precheck(k, p)
    extra = 6 * k**3 + (3 * k - 1) * (2 * k - 1) * (k - 1)
    if p % (4 * k) == 1:
        const = k * (3 * k - 1) * (4 * k - 1) * extra
        return legendre(const, p) * legendre(double_factorial_mod(q - 1, p), p) * t_symbol
    if p == 2 * k + 1:
        return t_symbol
    const = (k - 1) * (2 * k - 1) * (4 * k - 1) * extra
    return legendre(const, p) * legendre(double_factorial_mod(q, p), p) * t_symbol


def sqrt_symbol_shift1_k2(p: int) -> int:
    """Count-based form of the shift-1 symbol at k = 2: (-1)^N (p|3), where
    N counts quadratic nonresidues below p/4.  Needs p = 1 (mod 4)."""
    if p % 4 != 1:
        raise ValueError(f"p={p} must be 1 mod 4")
    return (-1) ** count_nonresidues_quarter(p) * legendre(p, 3)


def sqrt_symbol_shift3_k2(p: int) -> int:
    """Count-based form of the shift-3 symbol at k = 2: (-1)^N (p|5) when
    (p-1)/4 is even, (-1)^N (p|3) when odd.  Needs p = 1 (mod 4)."""
    if p % 4 != 1:
        raise ValueError(f"p={p} must be 1 mod 4")
    modulus = 4 + (-1) ** (((p - 1) // 4) % 2)
    return (-1) ** count_nonresidues_quarter(p) * legendre(p, modulus)

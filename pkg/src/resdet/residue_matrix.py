"""Power-residue lists and the determinant family built on them.

The central object is the q x q matrix with entries (alpha_i + d*alpha_j)^n
mod p, where alpha_1 < ... < alpha_q are the distinct k-th power residues
modulo p and q = (p-1)/k.  Everything computational about that family lives
here: exact and modular determinants, Pfaffians of the skew cases, and the
ordered difference product over the residue list.

Matrices are stored as int64 arrays with entries reduced into [0, p); all
row operations use a single widening multiply, which is why finite_field
caps the modulus.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .finite_field import PrimeModulus, prime_modulus

MAX_EXACT_DIM = 12


@dataclass(frozen=True)
class ResidueList:
    """The ascending list of distinct k-th power residues modulo p."""

    modulus: PrimeModulus
    k: int
    alphas: tuple[int, ...]

    @property
    def p(self) -> int:
        return self.modulus.p

    @property
    def q(self) -> int:
        """Number of k-th power residues, (p-1)/k; also the matrix order."""
        return len(self.alphas)


@lru_cache(maxsize=None)
def _kth_residues(p: int, k: int) -> ResidueList:
    pm = prime_modulus(p)
    if not 2 <= k <= (p - 1) // 2 or (p - 1) % k:
        raise ValueError(f"k={k} must divide p-1 with 2 <= k <= (p-1)/2 for p={p}")
    q = (p - 1) // k
    step = pow(pm.g, k, p)
    vals = []
    x = 1
    for _ in range(q):
        x = x * step % p
        vals.append(x)
    alphas = tuple(sorted(vals))
    if len(set(alphas)) != q:
        raise AssertionError("k-th power residues are not distinct")
    return ResidueList(modulus=pm, k=k, alphas=alphas)


def kth_residues(p: int | PrimeModulus, k: int) -> ResidueList:
    """Ascending k-th power residues modulo p (cached per (p, k))."""
    pm = p if isinstance(p, PrimeModulus) else prime_modulus(p)
    return _kth_residues(pm.p, k)


@dataclass(frozen=True, eq=False)
class ResidueMatrix:
    """The q x q matrix [(alpha_i + d*alpha_j)^n mod p] over a residue list."""

    source: ResidueList
    n: int
    d: int
    entries: np.ndarray  # (q, q) int64, residues in [0, p)

    @property
    def p(self) -> int:
        return self.source.p

    @property
    def q(self) -> int:
        return self.source.q


def _power_table(p: int, n: int) -> np.ndarray:
    """v -> v**n mod p for all v in [0, p); only sensible for small p."""
    return np.fromiter((pow(v, n, p) for v in range(p)), dtype=np.int64, count=p)


def _pow_elementwise(bases: np.ndarray, n: int, p: int) -> np.ndarray:
    """Binary exponentiation on a whole array; used when p is too large
    for a lookup table."""
    result = np.ones_like(bases)
    b = bases % p
    e = n
    while e:
        if e & 1:
            result = result * b % p
        b = b * b % p
        e >>= 1
    return result


def build_matrix(res: ResidueList, n: int, d: int) -> ResidueMatrix:
    """Assemble [(alpha_i + d*alpha_j)^n mod p]; requires n >= 0 and p not
    dividing d."""
    p = res.p
    if n < 0:
        raise ValueError("exponent must be nonnegative")
    dr = d % p
    if dr == 0:
        raise ValueError(f"d={d} is divisible by p={p}")
    a = np.array(res.alphas, dtype=np.int64)
    bases = (a[:, None] + dr * a[None, :]) % p
    if res.q * res.q * 4 >= p:
        entries = _power_table(p, n)[bases]
    else:
        entries = _pow_elementwise(bases, n, p)
    return ResidueMatrix(source=res, n=n, d=d, entries=entries)


def base_stack(res: ResidueList, ds: list[int]) -> np.ndarray:
    """(len(ds), q, q) stack of (alpha_i + d*alpha_j) mod p, one layer per d."""
    p = res.p
    a = np.array(res.alphas, dtype=np.int64)
    dv = np.array([d % p for d in ds], dtype=np.int64)
    if (dv == 0).any():
        raise ValueError("d values must not be divisible by p")
    return (a[None, :, None] + dv[:, None, None] * a[None, None, :]) % p


def power_stack(bases: np.ndarray, n: int, p: int) -> np.ndarray:
    """Raise a base stack to the n-th power elementwise mod p."""
    if n < 0:
        raise ValueError("exponent must be nonnegative")
    if p <= 1 << 22:
        return _power_table(p, n)[bases]
    return _pow_elementwise(bases, n, p)


def _batch_inverse(vals: list[int], p: int) -> list[int]:
    """Inverses of nonzero residues with one modular exponentiation."""
    prefixes = [1] * len(vals)
    acc = 1
    for i, v in enumerate(vals):
        prefixes[i] = acc
        acc = acc * v % p
    inv = pow(acc, -1, p)
    out = [0] * len(vals)
    for i in range(len(vals) - 1, -1, -1):
        out[i] = prefixes[i] * inv % p
        inv = inv * vals[i] % p
    return out


def det_mod_batch(mats: np.ndarray, p: int) -> np.ndarray:
    """Determinants mod p of a stack of square matrices.

    Gaussian elimination carried out across the whole stack at once; a
    matrix whose pivot column is entirely zero is marked singular and kept
    in the stack with a dummy pivot so the vectorized updates stay aligned.
    """
    m = np.array(mats, dtype=np.int64, copy=True)
    if m.ndim != 3 or m.shape[1] != m.shape[2]:
        raise ValueError("expected a stack of square matrices")
    np.remainder(m, p, out=m)
    b, n, _ = m.shape
    if b == 0:
        return np.zeros(0, dtype=np.int64)
    det = np.ones(b, dtype=np.int64)
    if n == 0:
        return det
    # Entries stay exact in int64 while |entry| <= p*(p+1)^steps is clear
    # of 2^62, so the expensive full-block reduction can be deferred for
    # several elimination steps; only the pivot column must be reduced
    # before each zero test.
    period, bound = 0, p
    while period < 8 and bound * (p + 1) < 1 << 62:
        bound *= p + 1
        period += 1
    period = max(period, 1)
    rows = np.arange(b)
    since = 0
    for c in range(n):
        colview = m[:, c:, c]
        if since:
            np.remainder(colview, p, out=colview)
        nz = colview != 0
        first = np.argmax(nz, axis=1)
        alive = nz[rows, first]
        det[~alive] = 0
        swap = alive & (first > 0)
        if swap.any():
            idx = np.flatnonzero(swap)
            r = c + first[idx]
            tmp = m[idx, c].copy()
            m[idx, c] = m[idx, r]
            m[idx, r] = tmp
            det[idx] = p - det[idx]
        piv = m[:, c, c].copy()
        piv[~alive] = 1
        det = det * piv % p
        if c + 1 == n:
            break
        inv = np.array(_batch_inverse([int(x) for x in piv], p), dtype=np.int64)
        factors = m[:, c + 1 :, c] * inv[:, None]
        np.remainder(factors, p, out=factors)
        block = m[:, c + 1 :, c + 1 :]
        np.subtract(block, factors[:, :, None] * m[:, c : c + 1, c + 1 :], out=block)
        since += 1
        if since >= period:
            np.remainder(block, p, out=block)
            since = 0
    return det


def det_mod(mat: np.ndarray | list, p: int) -> int:
    """Determinant mod p of one square matrix (Gaussian elimination)."""
    a = np.array(mat, dtype=np.int64)
    return int(det_mod_batch(a[None, :, :], p)[0])


def det_mod_p(M: ResidueMatrix) -> int:
    """Determinant of a residue matrix mod its prime."""
    return det_mod(M.entries, M.p)


def det_exact(res: ResidueList, n: int, d: int) -> int:
    """Exact integer determinant of [(alpha_i + d*alpha_j)^n] built from the
    least-positive residue lifts and the integer d as given.

    Exact arithmetic is only offered for order <= MAX_EXACT_DIM; beyond
    that the entries make the Bareiss sweep explode and the modular
    determinant is the supported route.
    """
    if res.q > MAX_EXACT_DIM:
        raise ValueError(f"order {res.q} exceeds exact-arithmetic cap {MAX_EXACT_DIM}")
    if n < 0:
        raise ValueError("exponent must be nonnegative")
    a = [[(x + d * y) ** n for y in res.alphas] for x in res.alphas]
    return _bareiss(a)


def _bareiss(a: list[list[int]]) -> int:
    """Fraction-free determinant of a square integer matrix (mutates a)."""
    n = len(a)
    sign = 1
    prev = 1
    for c in range(n - 1):
        if a[c][c] == 0:
            r = next((i for i in range(c + 1, n) if a[i][c] != 0), None)
            if r is None:
                return 0
            a[c], a[r] = a[r], a[c]
            sign = -sign
        for i in range(c + 1, n):
            for j in range(c + 1, n):
                a[i][j] = (a[i][j] * a[c][c] - a[i][c] * a[c][j]) // prev
            a[i][c] = 0
        prev = a[c][c]
    return sign * a[n - 1][n - 1]


def pfaffian_mod(mat: np.ndarray | list, p: int) -> int:
    """Pfaffian mod p of a skew-symmetric matrix of even order.

    Elimination by congruence transformations, so the result is the
    Pfaffian of the matrix exactly as given (no sign ambiguity).
    """
    m = np.array(mat, dtype=np.int64, copy=True) % p
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("expected a square matrix")
    n = m.shape[0]
    if n % 2:
        raise ValueError("Pfaffian needs even order")
    if ((m + m.T) % p).any():
        raise ValueError("matrix is not skew-symmetric mod p")
    pf = 1
    for s in range(0, n, 2):
        nz = np.flatnonzero(m[s, s + 1 :])
        if nz.size == 0:
            return 0
        j = s + 1 + int(nz[0])
        if j != s + 1:
            m[[s + 1, j], :] = m[[j, s + 1], :]
            m[:, [s + 1, j]] = m[:, [j, s + 1]]
            pf = p - pf
        piv = int(m[s, s + 1])
        pf = pf * piv % p
        if s + 2 < n:
            inv = pow(piv, -1, p)
            u = m[s, s + 2 :]
            v = m[s + 1, s + 2 :]
            t = (np.outer(v, u) - np.outer(u, v)) % p
            m[s + 2 :, s + 2 :] = (m[s + 2 :, s + 2 :] + inv * t) % p
    return int(pf % p)


def pfaffian_mod_p(M: ResidueMatrix) -> int:
    """Pfaffian of a residue matrix mod its prime (d = -1 mod p, odd n)."""
    return pfaffian_mod(M.entries, M.p)


@lru_cache(maxsize=None)
def _residue_diff_product(p: int, k: int) -> int:
    a = kth_residues(p, k).alphas
    t = 1
    for i in range(len(a)):
        ai = a[i]
        for j in range(i + 1, len(a)):
            t = t * (ai - a[j]) % p
    return t


def residue_diff_product(res: ResidueList) -> int:
    """Ordered product of (alpha_i - alpha_j) over i < j, mod p."""
    return _residue_diff_product(res.p, res.k)


def structured_det(coeffs: list[int], xs: list[int], ys: list[int], p: int) -> int:
    """Closed form for det[P(x_i * y_j)] where P(t) = sum coeffs[l] * t^l.

    For an n x n matrix and a polynomial with exactly n coefficients the
    determinant factors as (prod of coefficients) * prod_{i<j} (x_i - x_j)
    * (y_i - y_j); this evaluates that product mod p.
    """
    n = len(xs)
    if len(ys) != n or len(coeffs) != n:
        raise ValueError("need n coefficients and n points on each side")
    t = 1
    for c in coeffs:
        t = t * c % p
    for i in range(n):
        for j in range(i + 1, n):
            t = t * (xs[i] - xs[j]) % p * (ys[i] - ys[j]) % p
    return t % p

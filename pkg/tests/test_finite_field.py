"""Arithmetic layer: primality, symbols, characters, roots."""

import random

import pytest

from resdet.finite_field import (
    CHI_MINUS_ONE,
    CHI_ONE,
    CHI_OTHER,
    CHI_ZERO,
    MAX_MODULUS,
    chi_k,
    count_nonresidues_quarter,
    is_prime,
    legendre,
    mod_pow,
    prime_modulus,
    primes_up_to,
    primitive_root,
    sqrt_mod,
)


def test_primes_up_to():
    assert primes_up_to(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert primes_up_to(1) == []
    assert primes_up_to(2) == [2]


def test_is_prime_against_sieve():
    sieve = set(primes_up_to(5000))
    for n in range(5000):
        assert is_prime(n) == (n in sieve), n


def test_is_prime_large_values():
    assert is_prime(2**31 - 1)
    assert is_prime(10**9 + 7)
    assert not is_prime(561)  # Carmichael
    assert not is_prime(1299709 * 1299721)
    with pytest.raises(ValueError):
        is_prime(10**25)


def test_mod_pow():
    assert mod_pow(2, 0, 7) == 1
    assert mod_pow(2, 3, 5) == 3
    assert mod_pow(3, 6, 13) == 1
    rng = random.Random(11)
    for _ in range(200):
        b, e, p = rng.randrange(10**6), rng.randrange(10**6), 10**9 + 7
        assert mod_pow(b, e, p) == pow(b, e, p)
    with pytest.raises(ValueError):
        mod_pow(2, -1, 7)


def test_legendre_small_table():
    # exhaustive squares mod 5 are {1, 4}
    assert [legendre(a, 5) for a in range(5)] == [0, 1, -1, -1, 1]
    assert legendre(2, 7) == 1
    assert legendre(3, 7) == -1
    assert legendre(-1, 13) == 1
    assert legendre(-1, 19) == -1
    assert legendre(0, 7) == 0
    assert legendre(7 + 2, 7) == legendre(2, 7)
    with pytest.raises(ValueError):
        legendre(3, 8)
    with pytest.raises(ValueError):
        legendre(3, 1)


def test_legendre_reciprocity_spot():
    assert legendre(13, 17) * legendre(17, 13) == (-1) ** (6 * 8)


def test_chi_k_classes():
    c = chi_k(5, 3, 13)  # 5^4 = 625 = 1 mod 13
    assert c.raw == 1 and c.kind == CHI_ONE and c.sign == 1
    c = chi_k(2, 2, 13)  # 2^6 = 64 = 12 mod 13
    assert c.raw == 12 and c.kind == CHI_MINUS_ONE and c.sign == -1
    c = chi_k(2, 3, 13)  # 2^4 = 3 mod 13
    assert c.raw == 3 and c.kind == CHI_OTHER
    with pytest.raises(ValueError):
        c.sign
    assert chi_k(26, 2, 13).kind == CHI_ZERO
    with pytest.raises(ValueError):
        chi_k(2, 5, 13)  # 5 does not divide 12
    with pytest.raises(ValueError):
        chi_k(2, 12, 13)  # k above (p-1)/2


def test_chi_k_matches_residue_membership():
    for p in (13, 17, 29):
        for k in range(2, (p - 1) // 2 + 1):
            if (p - 1) % k:
                continue
            kth = {pow(x, k, p) for x in range(1, p)}
            for d in range(1, p):
                assert (chi_k(d, k, p).kind == CHI_ONE) == (d in kth)


def test_prime_modulus():
    pm = prime_modulus(13)
    assert pm.p == 13 and pm.g == 2
    assert prime_modulus(13) is pm  # cached
    for q, _ in pm.p_minus_one_factors:
        assert pow(pm.g, (pm.p - 1) // q, pm.p) != 1
    for bad in (1, 2, 9, 15, 2**40):
        with pytest.raises(ValueError):
            prime_modulus(bad)
    assert MAX_MODULUS * MAX_MODULUS < 2**63


def test_primitive_root_least():
    assert primitive_root(5) == 2
    assert primitive_root(7) == 3
    assert primitive_root(13) == 2
    assert primitive_root(17) == 3
    for p in (5, 7, 11, 13, 17, 19, 23, 41):
        g = primitive_root(p)
        assert {pow(g, e, p) for e in range(p - 1)} == set(range(1, p))


def test_sqrt_mod_values():
    assert sqrt_mod(0, 13) == 0
    assert sqrt_mod(4, 13) == 2
    assert sqrt_mod(12, 13) == 5  # 5^2 = 25 = 12; canonical min(5, 8)
    assert sqrt_mod(2, 13) is None
    assert sqrt_mod(2, 7) == 3  # p = 3 mod 4 route


def test_sqrt_mod_roundtrip():
    for p in (5, 13, 17, 41, 97, 193):  # includes high 2-adic valuation of p-1
        for a in range(p):
            r = sqrt_mod(a, p)
            if legendre(a, p) == -1:
                assert r is None
            else:
                assert r is not None and r * r % p == a and r <= p - r


def test_count_nonresidues_quarter():
    assert count_nonresidues_quarter(5) == 0
    assert count_nonresidues_quarter(13) == 1
    assert count_nonresidues_quarter(17) == 1
    assert count_nonresidues_quarter(29) == 2
    with pytest.raises(ValueError):
        count_nonresidues_quarter(7)
    # independent recount
    for p in (13, 17, 29, 97, 101):
        brute = sum(1 for t in range(1, p) if 4 * t < p and legendre(t, p) == -1)
        assert count_nonresidues_quarter(p) == brute

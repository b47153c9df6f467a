"""Integer factorization, membership criterion integers, and the E-sets."""

import math

import pytest

from resdet.closed_forms import e_factorial
from resdet.ekm import (
    criterion_integers,
    ekm_by_criterion,
    ekm_by_scan,
    factor,
    shifted_det_divisible,
)


def _brute_factors(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def test_factor_small_grid():
    with pytest.raises(ValueError):
        factor(1)
    for n in list(range(2, 400)) + [720720, 2**20, 3**12, 999983]:
        f = factor(n)
        assert dict(f.factors) == _brute_factors(n)
        assert f.unfactored == ()
        assert f.recombined() == n


def test_factor_semiprime():
    n = 1299709 * 1299721
    f = factor(n)
    assert dict(f.factors) == {1299709: 1, 1299721: 1}
    assert f.recombined() == n


def test_criterion_integers_small():
    c = criterion_integers(2, 5)
    assert c.head == 4785
    assert c.quotients == (297, 11)
    assert c.values() == [4785, 297, 11]
    assert c.divides(29) and c.divides(11) and not c.divides(13)

    c3 = criterion_integers(2, 3)
    assert c3.values() == [63, 7]


def test_criterion_integers_m13():
    c = criterion_integers(2, 13)
    assert c.head == e_factorial(26, 2) + e_factorial(25, 2)
    assert c.head == 58917607974225
    assert len(c.quotients) == 6
    # independent recompute of each quotient sum
    for l, got in enumerate(c.quotients, start=1):
        qa = e_factorial(26 - 2 * l, 2) // e_factorial(2 * l, 2)
        qb = e_factorial(25 - 2 * l, 2) // e_factorial(2 * l - 1, 2)
        assert e_factorial(26 - 2 * l, 2) == qa * e_factorial(2 * l, 2)
        assert e_factorial(25 - 2 * l, 2) == qb * e_factorial(2 * l - 1, 2)
        assert got == qa + qb
    # members above km+1 = 27 must divide a criterion integer; 17 enters
    # the set through the small-prime scan instead
    for p in (109, 401, 29629, 924397):
        assert c.divides(p)
    assert not c.divides(17)


def test_criterion_integers_validation():
    for k, m in ((2, 4), (2, 1), (1, 3), (2, 0)):
        with pytest.raises(ValueError):
            criterion_integers(k, m)


def test_shifted_det_divisible():
    assert shifted_det_divisible(13, 2, 7)
    assert not shifted_det_divisible(17, 2, 7)
    assert shifted_det_divisible(29, 2, 5)
    assert not shifted_det_divisible(13, 2, 5)
    with pytest.raises(ValueError):
        shifted_det_divisible(19, 2, 5)  # needs p = 1 mod 2k


def test_ekm_by_criterion_sets():
    expect = {
        3: (set(), set()),
        5: ({29}, {29}),
        7: ({13, 53, 2477}, {13, 53}),
        9: ({13, 17, 29, 1201}, {13, 17, 29}),
        11: ({17, 29, 1597}, {17, 29}),
        13: ({17, 109, 401, 29629, 924397}, {17, 109, 401}),
    }
    for m, (full, within) in expect.items():
        rep = ekm_by_criterion(2, m, 1000)
        assert set(rep.members) == full, m
        assert set(rep.members_within_bound) == within, m
        assert rep.unfactored_cofactors == ()
        prov = dict(rep.provenance)
        for p in rep.members:
            want = "small-scan" if p <= 2 * m + 1 else "criterion-factor"
            assert prov[p] == want, (m, p)


def test_ekm_provenance_tags():
    rep = ekm_by_criterion(2, 7, 1000)
    assert dict(rep.provenance) == {
        13: "small-scan",
        53: "criterion-factor",
        2477: "criterion-factor",
    }
    rep13 = ekm_by_criterion(2, 13, 1000)
    assert dict(rep13.provenance)[17] == "small-scan"


def test_ekm_head_factorization():
    rep = ekm_by_criterion(2, 13, 1000)
    head = rep.factorizations[0]
    assert head.n == 58917607974225
    assert head.factors == ((3, 6), (5, 2), (7, 1), (11, 1), (13, 1), (109, 1), (29629, 1))
    assert head.unfactored == ()
    assert math.prod(p**e for p, e in head.factors) == head.n


def test_ekm_shift_one_empty():
    for k in range(2, 7):
        assert ekm_by_criterion(k, 1, 1000).members == ()
        assert ekm_by_scan(k, 1, 1000).members == ()
    assert ekm_by_criterion(2, 1, 1000).criterion is None


def test_ekm_routes_agree_within_bound():
    for m in (3, 5, 7, 9, 11, 13):
        scan = ekm_by_scan(2, m, 1000)
        crit = ekm_by_criterion(2, m, 1000)
        assert scan.members == crit.members_within_bound, m
        assert all(tag == "scan" for _, tag in scan.provenance)


def test_ekm_validation():
    with pytest.raises(ValueError):
        ekm_by_scan(2, 1, 2)  # bound below the smallest odd prime
    with pytest.raises(ValueError):
        ekm_by_scan(2, 4, 100)
    with pytest.raises(ValueError):
        ekm_by_criterion(1, 3, 100)

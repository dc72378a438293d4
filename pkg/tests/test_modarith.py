import math

import pytest

from weylhom.modarith import (
    binomial,
    binomial_gcd,
    binomial_mod,
    divides_binomial_gcd,
    is_prime,
    least_power_gt,
    require_prime,
)

from identity_checks import check_alternating_pair, check_alternating_zero, check_vandermonde


def test_is_prime():
    primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}
    assert {n for n in range(2, 50) if is_prime(n)} == primes
    assert not is_prime(1) and not is_prime(0) and not is_prime(-3)
    with pytest.raises(ValueError):
        require_prime(9)


def test_binomial_small():
    assert binomial(4, 2) == 6
    assert binomial(3, 5) == 0
    assert binomial(3, -1) == 0
    assert binomial(0, 0) == 1
    with pytest.raises(ValueError):
        binomial(-1, 0)


def test_binomial_against_pascal_recurrence():
    # independent additive oracle up to row 60
    rows = [[1]]
    for a in range(1, 61):
        prev = rows[-1]
        rows.append([1] + [prev[i - 1] + prev[i] for i in range(1, a)] + [1])
    for a in range(61):
        for b in range(a + 1):
            assert binomial(a, b) == rows[a][b]
    assert binomial(60, 30) == rows[60][30]


def test_binomial_mod_examples():
    assert binomial_mod(5, 2, 2) == 0      # 10 mod 2
    assert binomial_mod(4, 2, 3) == 0      # base-3 digits (1,1) vs (0,2)
    for p in (2, 3, 5, 7):
        for a in (0, 1, 17, 99):
            assert binomial_mod(a, 0, p) == 1


def test_lucas_agreement():
    for a in range(501):
        for b in range(a + 1):
            exact = math.comb(a, b)
            for p in (2, 3, 5, 7):
                assert binomial_mod(a, b, p) == exact % p, (a, b, p)


def test_binomial_gcd():
    assert binomial_gcd(7, 0) == 0
    assert binomial_gcd(4, 3) == math.gcd(4, 10, 20) == 2
    assert binomial_gcd(2, 1) == 2
    with pytest.raises(ValueError):
        binomial_gcd(0, 1)


def test_least_power_gt():
    assert least_power_gt(3, 2) == 2
    assert least_power_gt(1, 3) == 1
    assert least_power_gt(9, 3) == 3
    assert least_power_gt(8, 2) == 4
    with pytest.raises(ValueError):
        least_power_gt(0, 2)


def test_divides_binomial_gcd_examples():
    assert divides_binomial_gcd(4, 3, 2)       # gcd 2
    assert divides_binomial_gcd(3, 2, 3)       # gcd(3, 6) = 3
    assert not divides_binomial_gcd(2, 1, 3)   # gcd 2
    assert divides_binomial_gcd(1, 0, 5)       # empty run, gcd 0


def test_divisibility_matches_gcd_small():
    # the full x <= 300 sweep runs in the acceptance suite
    for p in (2, 3, 5, 7):
        for x in range(1, 80):
            for y in range(1, min(x, 10) + 1):
                assert divides_binomial_gcd(x, y, p) == (binomial_gcd(x, y) % p == 0), (x, y, p)


def test_vandermonde_identity_small():
    assert check_vandermonde(4, 3) > 0


def test_alternating_sum_identity_small():
    assert check_alternating_zero(4, 3) > 0


def test_alternating_pair_identities_small():
    assert check_alternating_pair(6, 6) > 0

"""Exact binomial arithmetic, over the integers and modulo a prime.

Everything downstream reduces to three ingredients: big-integer binomial
coefficients, the gcd of a diagonal run of binomials, and the p-power
divisibility test that decides when a prime divides such a gcd.
"""

from __future__ import annotations

import math
from functools import lru_cache


def is_prime(p: int) -> bool:
    """Trial-division primality check, adequate for the small primes used here."""
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def require_prime(p: int) -> int:
    if not is_prime(p):
        raise ValueError(f"modulus must be prime, got {p}")
    return p


def binomial(a: int, b: int) -> int:
    """C(a, b) as an exact integer, with C(a, b) = 0 when b < 0 or b > a."""
    if a < 0:
        raise ValueError("binomial requires a >= 0")
    if b < 0 or b > a:
        return 0
    return math.comb(a, b)


@lru_cache(maxsize=1 << 17)
def binomial_mod(a: int, b: int, p: int) -> int:
    """C(a, b) mod p by Lucas digit decomposition in base p."""
    if a < 0:
        raise ValueError("binomial requires a >= 0")
    if b < 0 or b > a:
        return 0
    result = 1
    while a or b:
        da, db = a % p, b % p
        if db > da:
            return 0
        result = result * (math.comb(da, db) % p) % p
        a //= p
        b //= p
    return result


def binomial_gcd(x: int, y: int) -> int:
    """gcd{C(x,1), C(x+1,2), ..., C(x+y-1,y)}, with the value 0 when y = 0."""
    if x < 1 or y < 0:
        raise ValueError("binomial_gcd requires x >= 1, y >= 0")
    g = 0
    for k in range(1, y + 1):
        g = math.gcd(g, math.comb(x + k - 1, k))
        if g == 1:
            break
    return g


def least_power_gt(y: int, p: int) -> int:
    """Least i with p**i > y, for y >= 1."""
    if y < 1:
        raise ValueError("least_power_gt requires y >= 1")
    i, q = 1, p
    while q <= y:
        q *= p
        i += 1
    return i


def divides_binomial_gcd(x: int, y: int, p: int) -> bool:
    """Whether p divides binomial_gcd(x, y).

    Decided arithmetically: for y >= 1 this happens exactly when
    p**least_power_gt(y, p) divides x; the y = 0 run is empty with gcd 0,
    which every prime divides.
    """
    if x < 1 or y < 0:
        raise ValueError("divides_binomial_gcd requires x >= 1, y >= 0")
    if y == 0:
        return True
    return x % p ** least_power_gt(y, p) == 0

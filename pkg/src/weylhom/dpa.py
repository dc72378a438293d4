"""Divided-power tensor monomials over GF(p).

A monomial is an exponent tuple over letters 1..n, a tensor monomial is a
tuple of monomials (one per factor), and an element is a dict mapping tensor
monomials to nonzero residues mod p.  Multiplying divided powers picks up
binomial coefficients, v^(i) v^(j) = C(i+j, j) v^(i+j); comultiplication
splits are coefficient-free.
"""

from __future__ import annotations

from functools import lru_cache

from .modarith import binomial_mod
from .tableaux import bounded_compositions

Monomial = tuple  # exponent vector
TensorMonomial = tuple  # tuple of exponent vectors


def degree(mono) -> int:
    return sum(mono)


@lru_cache(maxsize=1 << 17)
def multiply(m1, m2, p: int):
    """Divided-power product of two monomials: (coefficient mod p, exponent sum)."""
    coeff = 1
    for e, f in zip(m1, m2):
        if f and e:
            coeff = coeff * binomial_mod(e + f, f, p) % p
            if coeff == 0:
                break
    return coeff, tuple(e + f for e, f in zip(m1, m2))


@lru_cache(maxsize=1 << 16)
def splits(mono, d: int) -> tuple:
    """All (u, v) with u + v = mono exponentwise and deg u = d, lex in u.

    Cached: the same small monomials are split over and over in sweeps.
    """
    if d < 0 or d > degree(mono):
        return ()
    return tuple(
        (u, tuple(e - f for e, f in zip(mono, u)))
        for u in bounded_compositions(mono, d)
    )


def add_term(acc: dict, key, coeff: int, p: int) -> None:
    """Accumulate coeff * key into acc, dropping zero entries."""
    c = (acc.get(key, 0) + coeff) % p
    if c:
        acc[key] = c
    else:
        acc.pop(key, None)


def scale_into(acc: dict, element: dict, factor: int, p: int) -> None:
    factor %= p
    if factor:
        for key, c in element.items():
            add_term(acc, key, c * factor, p)


def canonical_generator(degrees, n: int | None = None) -> TensorMonomial:
    """The tensor monomial whose i-th factor is letter i raised to degrees[i]."""
    if n is None:
        n = len(degrees)
    factors = []
    for i, d in enumerate(degrees):
        exps = [0] * n
        exps[i] = d
        factors.append(tuple(exps))
    return tuple(factors)


def box_image(factors: TensorMonomial, i: int, t: int, p: int) -> dict:
    """Relation-map image of one tensor monomial, for the row pair (i, i+1).

    Factor i (1-based), of degree d + t, is comultiplied into bidegree (d, t)
    and the degree-t piece is multiplied into factor i+1.  Summing over all
    splits gives the image with divided-power coefficients.
    """
    w = factors[i - 1]
    d1 = degree(w) - t
    out: dict = {}
    for u, v in splits(w, d1):
        c, merged = multiply(v, factors[i], p)
        if c:
            add_term(out, factors[: i - 1] + (u, merged) + factors[i + 1 :], c, p)
    return out


def box_generator_image(lam, i: int, t: int, p: int) -> dict:
    """Image of the canonical generator of the (i, t) relation summand.

    For the summand with degrees (lam1, ..., lam_i + t, lam_{i+1} - t, ...)
    this is the single tensor monomial that keeps letters on their own rows
    except for t copies of letter i pushed into factor i+1, coefficient 1.
    """
    m = len(lam)
    if not 1 <= i <= m - 1:
        raise ValueError(f"row index {i} out of range for {m} rows")
    if not 1 <= t <= lam[i]:
        raise ValueError(f"box parameter t={t} must satisfy 1 <= t <= {lam[i]}")
    degrees = list(lam)
    degrees[i - 1] += t
    degrees[i] -= t
    return box_image(canonical_generator(degrees, n=m), i, t, p)

"""Carter-Payne one-box raising and the two-hom construction.

The raising map splits d boxes off row 2 and multiplies them into row 1.
Composing with the collapse map that multiplies all remaining rows into one
gives a second hom candidate into the two-row target, independent from the
sum-of-tableaux candidate whenever the relevant binomial-run gcds all vanish
mod p.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import gflinalg
from .dpa import add_term, canonical_generator, multiply, splits
from .homspace import Condition, constraint_matrix, sum_hom_conditions
from .modarith import divides_binomial_gcd, require_prime
from .tableaux import check_partition, normalize_shape
from .weyl2 import straighten


def raising_image(factors, d: int, p: int) -> dict:
    """Split factor 2 into (d, rest) and multiply the d piece into factor 1."""
    out: dict = {}
    for u, v in splits(factors[1], d):
        c, merged = multiply(factors[0], u, p)
        if c:
            add_term(out, (merged, v) + factors[2:], c, p)
    return out


def raising_on_generator(lam, d: int, p: int) -> dict:
    """Image of the canonical generator under the raising map.

    A single tensor monomial: row 1 becomes 1^(lam1) 2^(d), row 2 keeps
    lam2 - d twos, later rows untouched; coefficient 1.
    """
    lam = check_partition(lam)
    if not 0 < d <= lam[1]:
        raise ValueError(f"raising requires 0 < d <= lam2, got d={d}")
    return raising_image(canonical_generator(lam), d, p)


def raise_collapse_on_generator(lam, d: int, p: int) -> dict:
    """Standard-basis image of the canonical generator under raise-then-collapse.

    After raising, factors 2..m are multiplied together into the second row
    of the two-row target and the resulting bideterminant straightened.
    """
    lam = check_partition(lam)
    mu = (lam[0] + d, sum(lam) - lam[0] - d)
    out: dict = {}
    for factors, c in raising_on_generator(lam, d, p).items():
        merged = factors[1]
        coeff = c
        for f in factors[2:]:
            c2, merged = multiply(merged, f, p)
            coeff = coeff * c2 % p
            if not coeff:
                break
        if coeff:
            for tab, cc in straighten(mu, factors[0], merged, p).items():
                add_term(out, tab, coeff * cc, p)
    return out


@dataclass
class RaisingReport:
    lam: tuple
    mu: tuple
    d: int
    p: int
    condition: Condition
    checked: bool = False
    candidate: list = field(default_factory=list)
    in_nullspace: bool = False

    @property
    def passed(self) -> bool:
        return self.condition.holds and self.in_nullspace and any(self.candidate)


def verify_raising(lam, d: int, p: int) -> RaisingReport:
    """Check the raising map induces a nonzero hom between two-row Weyl modules.

    The candidate's coordinates are read off from its value at the canonical
    generator, valid because the basis homs evaluate there to distinct basis
    elements.
    """
    lam = check_partition(lam)
    require_prime(p)
    if len(lam) != 2:
        raise ValueError("standalone raising check is for two-row sources")
    if not 0 < d <= lam[1]:
        raise ValueError(f"raising requires 0 < d <= lam2, got d={d}")
    mu = (lam[0] + d, lam[1] - d)
    x = lam[0] - lam[1] + d + 1
    report = RaisingReport(lam, mu, d, p,
                           Condition("raise", x, d, divides_binomial_gcd(x, d, p)))
    if not report.condition.holds:
        return report
    report.checked = True
    value = raise_collapse_on_generator(lam, d, p)
    cs = constraint_matrix(lam, mu, p)
    coords = np.zeros(len(cs.tableaux), dtype=np.int64)
    for k, tab in enumerate(cs.tableaux):
        coords[k] = value.get(tab, 0)
    report.candidate = coords.tolist()
    report.in_nullspace = not (cs.matrix @ coords % p).any()
    return report


@dataclass
class Dim2Conditions:
    raise_run: Condition           # gcd run at (lam1 - mu2 + 1, d)
    lower_rows: list               # gcd runs at (lam_i + 1, lam_{i+1}), i >= 2
    raise_vs_row2: Condition       # gcd run at (lam1 - lam2 + d + 1, d)
    collapse_row2: Condition       # gcd run at (lam2 - d + 1, lam3)

    def as_list(self) -> list:
        return [self.raise_run, *self.lower_rows, self.raise_vs_row2, self.collapse_row2]

    @property
    def all_hold(self) -> bool:
        return all(c.holds for c in self.as_list())


def dim2_conditions(lam, mu, p: int) -> Dim2Conditions:
    """The four divisibility conditions of the two-hom construction."""
    lam = check_partition(lam)
    mu = normalize_shape(mu)
    require_prime(p)
    if sum(lam) != sum(mu):
        raise ValueError("degree mismatch")
    if len(lam) < 3:
        raise ValueError("the two-hom construction needs at least three rows")
    d = mu[0] - lam[0]
    if not 0 < d <= lam[1] - lam[2]:
        raise ValueError(f"requires 0 < mu1 - lam1 <= lam2 - lam3, got d={d}")
    if not mu[1] <= lam[0]:
        raise ValueError("requires mu2 <= lam1")
    base = sum_hom_conditions(lam, mu, p)
    return Dim2Conditions(
        raise_run=base[0],
        lower_rows=base[1:],
        raise_vs_row2=Condition("raise", lam[0] - lam[1] + d + 1, d,
                                divides_binomial_gcd(lam[0] - lam[1] + d + 1, d, p)),
        collapse_row2=Condition("collapse", lam[1] - d + 1, lam[2],
                                divides_binomial_gcd(lam[1] - d + 1, lam[2], p)),
    )


@dataclass
class Dim2Report:
    lam: tuple
    mu: tuple
    d: int
    p: int
    conditions: Dim2Conditions
    checked: bool = False
    tableau_count: int = 0
    psi1_in_nullspace: bool = False
    psi2_in_nullspace: bool = False
    pair_rank: int = 0
    dimension: int = -1

    @property
    def passed(self) -> bool:
        return (self.conditions.all_hold and self.psi1_in_nullspace
                and self.psi2_in_nullspace and self.pair_rank == 2
                and self.dimension >= 2)


def verify_dim2(lam, mu, p: int) -> Dim2Report:
    """Verify the two independent homs and report the computed dimension.

    psi1 is the all-ones candidate, psi2 the raise-then-collapse candidate;
    both must kill the constraints and span a rank-2 coordinate space.
    """
    conditions = dim2_conditions(lam, mu, p)
    lam = check_partition(lam)
    mu = normalize_shape(mu)
    d = mu[0] - lam[0]
    report = Dim2Report(lam, mu, d, p, conditions)
    if not conditions.all_hold:
        return report
    report.checked = True
    cs = constraint_matrix(lam, mu, p)
    report.tableau_count = len(cs.tableaux)
    psi1 = np.ones(len(cs.tableaux), dtype=np.int64)
    value = raise_collapse_on_generator(lam, d, p)
    psi2 = np.zeros(len(cs.tableaux), dtype=np.int64)
    for k, tab in enumerate(cs.tableaux):
        psi2[k] = value.get(tab, 0)
    report.psi1_in_nullspace = not (cs.matrix @ psi1 % p).any()
    report.psi2_in_nullspace = not (cs.matrix @ psi2 % p).any()
    report.pair_rank = gflinalg.rank(np.vstack([psi1, psi2]), p)
    report.dimension = len(cs.tableaux) - gflinalg.rank(cs.matrix, p)
    return report


def dim2_family(p: int):
    """Smallest member of the built-in family with a two-dimensional hom space.

    For a prime p: the least a >= (p^2 + 1)(p - 1) with a = p - 2 mod p^2,
    source (a, 2p - 1, (p-1)^(p^2)), target (a + p, (p^2 + 1)(p - 1)).
    """
    require_prime(p)
    lower = (p * p + 1) * (p - 1)
    residue = (p - 2) % (p * p)
    a = lower + (residue - lower) % (p * p)
    lam = (a, 2 * p - 1) + (p - 1,) * (p * p)
    mu = (a + p, (p * p + 1) * (p - 1))
    return a, lam, mu

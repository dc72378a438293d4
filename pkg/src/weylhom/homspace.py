"""Hom spaces between Weyl modules with a two-row target.

A hom candidate is a coefficient vector over the basis homs indexed by
standard tableaux of shape mu and weight lam.  The candidate kills the
defining relations of the source Weyl module iff it lies in the nullspace of
the constraint matrix assembled here, one row per standard basis element of
each relation image's weight space.

Constraints are imposed at the canonical generator of each relation summand
only: the summands are cyclic and the maps equivariant, so vanishing at the
generator image forces vanishing on the whole summand image.  This is an
assumption of the construction and ``generator_constraints_suffice`` checks
it by brute force at small sizes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import gflinalg
from .dpa import add_term, box_generator_image, box_image, canonical_generator, degree, multiply, splits
from .modarith import divides_binomial_gcd, require_prime
from .tableaux import (
    Tableau,
    check_partition,
    compositions_of,
    dominates,
    normalize_shape,
    standard_tableaux,
)
from .weyl2 import is_zero_in_weyl, straighten_first_column, to_standard_basis


class Condition(NamedTuple):
    label: str
    x: int
    y: int
    holds: bool


@dataclass
class ConstraintSystem:
    lam: tuple
    mu: tuple
    p: int
    tableaux: list
    matrix: np.ndarray
    blocks: list  # (i, t, row count) provenance, in row order


@dataclass
class HomSpaceResult:
    lam: tuple
    mu: tuple
    p: int
    dimension: int
    tableaux: list
    basis: list
    constraints: tuple  # (rows, cols, rank)
    reason: str | None = None


def _raw_pair_image(mu, tab: Tableau, factors, p: int) -> dict:
    """Pair-space value of the basis hom attached to tab, before straightening.

    Each factor s is split into a degree-(row_a[s]) piece and the rest; the
    first pieces multiply into the top row, the second into the bottom row.
    """
    n = len(tab.row_a)
    if len(factors) != n:
        raise ValueError("alphabet mismatch between tableau and tensor monomial")
    for s in range(n):
        if degree(factors[s]) != tab.row_a[s] + tab.row_b[s]:
            raise ValueError("tensor monomial degrees must match the tableau weight")
    zero = (0,) * n
    state = {(zero, zero): 1}
    for s in range(n):
        nxt: dict = {}
        for (ra, rb), c in state.items():
            for u, v in splits(factors[s], tab.row_a[s]):
                c1, ra2 = multiply(ra, u, p)
                if not c1:
                    continue
                c2, rb2 = multiply(rb, v, p)
                coeff = c * c1 * c2 % p
                if coeff:
                    add_term(nxt, (ra2, rb2), coeff, p)
        state = nxt
        if not state:
            break
    mu1 = mu[0]
    return {pair: c for pair, c in state.items() if pair[0][0] + pair[1][0] <= mu1}


def basis_hom_image(mu, tab: Tableau, factors, p: int) -> dict:
    """Image of one tensor monomial under the basis hom attached to tab,
    written in the standard basis of the target Weyl module."""
    out: dict = {}
    pending: dict = {}
    for (ra, rb), c in _raw_pair_image(mu, tab, factors, p).items():
        standard, remainder = straighten_first_column(mu, ra, rb, p)
        for key, cc in standard.items():
            add_term(out, key, c * cc, p)
        for key, cc in remainder.items():
            add_term(pending, key, c * cc, p)
    if pending:
        for key, cc in to_standard_basis(mu, pending, p).items():
            add_term(out, key, cc, p)
    return out


def basis_hom_image_element(mu, tab: Tableau, element: dict, p: int) -> dict:
    out: dict = {}
    for factors, c in element.items():
        for key, cc in basis_hom_image(mu, tab, factors, p).items():
            add_term(out, key, c * cc, p)
    return out


def constraint_matrix(lam, mu, p: int) -> ConstraintSystem:
    """Relation constraints on hom candidates from Weyl(lam) to Weyl(mu).

    Columns are indexed by standard_tableaux(mu, lam); the row block for the
    relation summand (i, t) has one row per standard tableau of the moved
    weight, with entries the coordinates of the image of that summand's
    canonical generator.
    """
    lam = check_partition(lam)
    mu = normalize_shape(mu)
    require_prime(p)
    if sum(lam) != sum(mu):
        raise ValueError("degree mismatch")
    m = len(lam)
    cols = standard_tableaux(mu, lam)
    block_data = []
    total_rows = 0
    for i in range(1, m):
        for t in range(1, lam[i] + 1):
            moved = list(lam)
            moved[i - 1] += t
            moved[i] -= t
            row_index = {s: k for k, s in enumerate(standard_tableaux(mu, tuple(moved)))}
            generator = box_generator_image(lam, i, t, p)
            block_data.append((i, t, row_index, generator))
            total_rows += len(row_index)
    matrix = np.zeros((total_rows, len(cols)), dtype=np.int64)
    for j, tab in enumerate(cols):
        offset = 0
        for i, t, row_index, generator in block_data:
            if row_index:
                image = basis_hom_image_element(mu, tab, generator, p)
                for s, c in image.items():
                    matrix[offset + row_index[s], j] = c
            offset += len(row_index)
    blocks = [(i, t, len(row_index)) for i, t, row_index, _ in block_data]
    return ConstraintSystem(lam, mu, p, cols, matrix, blocks)


def hom_space(lam, mu, p: int) -> HomSpaceResult:
    """Dimension and nullspace basis of the hom space Weyl(lam) -> Weyl(mu)."""
    lam = check_partition(lam)
    mu = normalize_shape(mu)
    require_prime(p)
    if sum(lam) != sum(mu):
        raise ValueError("degree mismatch")
    if not dominates(mu, lam):
        return HomSpaceResult(lam, mu, p, 0, [], [], (0, 0, 0), reason="dominance")
    cs = constraint_matrix(lam, mu, p)
    rk = gflinalg.rank(cs.matrix, p)
    basis = [vec.tolist() for vec in gflinalg.nullspace(cs.matrix, p)]
    return HomSpaceResult(
        lam, mu, p,
        dimension=len(cs.tableaux) - rk,
        tableaux=cs.tableaux,
        basis=basis,
        constraints=(cs.matrix.shape[0], cs.matrix.shape[1], rk),
    )


def sum_hom_conditions(lam, mu, p: int) -> list[Condition]:
    """The divisibility conditions under which the all-ones candidate is a hom.

    One condition per adjacent row pair of lam: the pair (1,2) contributes
    divisibility of the binomial-run gcd at (lam1 - mu2 + 1, min(lam2,
    mu1 - lam1)), each later pair (i, i+1) at (lam_i + 1, lam_{i+1}).
    """
    lam = check_partition(lam)
    mu = normalize_shape(mu)
    require_prime(p)
    if sum(lam) != sum(mu):
        raise ValueError("degree mismatch")
    if len(lam) < 2:
        raise ValueError("conditions require at least two rows in lam")
    if not mu[1] <= lam[0] <= mu[0]:
        raise ValueError("conditions require mu2 <= lam1 <= mu1")
    run = min(lam[1], mu[0] - lam[0])
    conds = [Condition("rows(1,2)", lam[0] - mu[1] + 1, run,
                       divides_binomial_gcd(lam[0] - mu[1] + 1, run, p))]
    for i in range(2, len(lam)):
        conds.append(Condition(f"rows({i},{i + 1})", lam[i - 1] + 1, lam[i],
                               divides_binomial_gcd(lam[i - 1] + 1, lam[i], p)))
    return conds


@dataclass
class SumHomReport:
    lam: tuple
    mu: tuple
    p: int
    conditions: list
    all_hold: bool
    checked: bool = False
    in_nullspace: bool = False
    generator_image_nonzero: bool = False
    tableau_count: int = 0

    @property
    def passed(self) -> bool:
        return self.all_hold and self.in_nullspace and self.generator_image_nonzero


def verify_sum_hom(lam, mu, p: int) -> SumHomReport:
    """Check that the sum of all basis homs is a nonzero hom when the
    divisibility conditions hold.

    Verifies both halves computationally: the all-ones vector lies in the
    constraint nullspace, and the image of the canonical generator is the
    (nonzero) sum of all standard tableaux of weight lam.
    """
    conditions = sum_hom_conditions(lam, mu, p)
    report = SumHomReport(tuple(lam), normalize_shape(mu), p, conditions,
                          all_hold=all(c.holds for c in conditions))
    if not report.all_hold:
        return report
    cs = constraint_matrix(lam, mu, p)
    report.checked = True
    report.tableau_count = len(cs.tableaux)
    ones = np.ones(len(cs.tableaux), dtype=np.int64)
    report.in_nullspace = not (cs.matrix @ ones % p).any()
    gen = canonical_generator(lam)
    image: dict = {}
    for tab in cs.tableaux:
        for key, c in basis_hom_image(cs.mu, tab, gen, p).items():
            add_term(image, key, c, p)
    report.generator_image_nonzero = bool(image)
    return report


def _tensor_monomials(degrees, n: int):
    """All tensor monomials with the given factor degrees over letters 1..n."""
    per_factor = [list(compositions_of(d, n)) for d in degrees]
    return itertools.product(*per_factor)


def generator_constraints_suffice(lam, mu, p: int) -> bool:
    """Brute-force check that generator-only constraints cut the same nullspace.

    Constraints at every monomial of every relation summand can only shrink
    the nullspace, so it is enough to check that each generator-nullspace
    candidate also kills the relation image of every monomial.  The kill
    test works on raw pair-space values: zero in the target Weyl module
    means membership in the relation span, no straightening required.
    """
    lam = check_partition(lam)
    mu = normalize_shape(mu)
    cs = constraint_matrix(lam, mu, p)
    null = gflinalg.nullspace(cs.matrix, p)
    if not null:
        return True
    m = len(lam)
    support = [j for j in range(len(cs.tableaux))
               if any(vec[j] for vec in null)]
    for i in range(1, m):
        for t in range(1, lam[i] + 1):
            degrees = list(lam)
            degrees[i - 1] += t
            degrees[i] -= t
            for w in _tensor_monomials(degrees, m):
                relation = box_image(w, i, t, p)
                if not relation:
                    continue
                raws: dict = {j: {} for j in support}
                for term, c0 in relation.items():
                    for j in support:
                        raw = _raw_pair_image(mu, cs.tableaux[j], term, p)
                        for pair, c in raw.items():
                            add_term(raws[j], pair, c * c0, p)
                for vec in null:
                    total: dict = {}
                    for j in support:
                        scale = int(vec[j]) % p
                        if scale:
                            for pair, c in raws[j].items():
                                add_term(total, pair, c * scale, p)
                    if total and not is_zero_in_weyl(mu, total, p):
                        return False
    return True

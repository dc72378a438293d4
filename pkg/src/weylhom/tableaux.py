"""Partitions, weights, dominance order, and two-row standard tableaux.

A two-row tableau is stored in exponent form: ``row_a[i]`` and ``row_b[i]``
count how many times letter i+1 appears in the first and second row.  Rows
are weakly increasing by construction, so standardness reduces to the
column condition, which in exponent form is the prefix inequality

    sum(row_b[:k]) <= sum(row_a[:k-1])   for every letter position k.
"""

from __future__ import annotations

from typing import Iterator, NamedTuple


class Tableau(NamedTuple):
    row_a: tuple[int, ...]
    row_b: tuple[int, ...]

    def shape(self) -> tuple[int, int]:
        return (sum(self.row_a), sum(self.row_b))

    def weight(self) -> tuple[int, ...]:
        return tuple(a + b for a, b in zip(self.row_a, self.row_b))

    def is_standard(self) -> bool:
        b_prefix = 0
        a_prefix = 0
        for a, b in zip(self.row_a, self.row_b):
            b_prefix += b
            if b_prefix > a_prefix:
                return False
            a_prefix += a
        return True


def check_partition(parts) -> tuple[int, ...]:
    """Validate a weakly decreasing sequence of positive integers."""
    parts = tuple(int(x) for x in parts)
    if not parts:
        raise ValueError("partition must have at least one part")
    for i, x in enumerate(parts):
        if x <= 0:
            raise ValueError(f"partition parts must be positive, got {parts}")
        if i and parts[i - 1] < x:
            raise ValueError(f"partition parts must be weakly decreasing, got {parts}")
    return parts


def normalize_shape(mu) -> tuple[int, int]:
    """Coerce a one- or two-part partition into the pair (mu1, mu2), mu2 >= 0."""
    mu = tuple(int(x) for x in mu)
    if len(mu) == 1:
        mu = (mu[0], 0)
    if len(mu) != 2 or mu[0] < mu[1] or mu[1] < 0 or mu[0] < 1:
        raise ValueError(f"expected a shape with at most two rows, got {mu}")
    return mu


def transpose(lam) -> tuple[int, ...]:
    """Conjugate partition: column lengths of the diagram."""
    lam = check_partition(lam)
    return tuple(sum(1 for part in lam if part >= j) for j in range(1, lam[0] + 1))


def dominates(mu, lam) -> bool:
    """True iff lam is dominated by mu: all partial sums of lam are <= those of mu."""
    if sum(mu) != sum(lam):
        raise ValueError("dominance is only defined for equal degrees")
    total_mu = 0
    total_lam = 0
    for k in range(max(len(mu), len(lam))):
        total_mu += mu[k] if k < len(mu) else 0
        total_lam += lam[k] if k < len(lam) else 0
        if total_lam > total_mu:
            return False
    return True


def bounded_compositions(caps, total: int) -> Iterator[tuple[int, ...]]:
    """All tuples v with 0 <= v[i] <= caps[i] and sum(v) == total, in lex order."""
    n = len(caps)
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] + caps[i]
    out = [0] * n

    def rec(i: int, left: int):
        if i == n:
            if left == 0:
                yield tuple(out)
            return
        lo = max(0, left - suffix[i + 1])
        hi = min(caps[i], left)
        for v in range(lo, hi + 1):
            out[i] = v
            yield from rec(i + 1, left - v)
        out[i] = 0

    if 0 <= total:
        yield from rec(0, total)


def compositions_of(total: int, slots: int) -> Iterator[tuple[int, ...]]:
    """All weak compositions of total into the given number of slots."""
    yield from bounded_compositions((total,) * slots, total)


def partitions_of(r: int, max_parts: int | None = None, max_first: int | None = None):
    """All partitions of r (descending parts), optionally bounded in length/first part."""
    if max_first is None:
        max_first = r
    if max_parts is None:
        max_parts = r
    out: list[tuple[int, ...]] = []

    def rec(left: int, cap: int, acc: list[int]):
        if left == 0:
            out.append(tuple(acc))
            return
        if len(acc) == max_parts:
            return
        for part in range(min(cap, left), 0, -1):
            acc.append(part)
            rec(left - part, part, acc)
            acc.pop()

    rec(r, max_first, [])
    return out


def standard_tableaux(mu, alpha) -> list[Tableau]:
    """All standard tableaux of two-row shape mu and weight alpha, lex in row_b.

    Enumerates the second row's exponent vector position by position; the
    prefix inequality is monotone in the prefix, so violations prune the
    whole subtree.
    """
    mu1, mu2 = normalize_shape(mu)
    alpha = tuple(int(x) for x in alpha)
    if any(x < 0 for x in alpha):
        raise ValueError("weights must be nonnegative")
    if sum(alpha) != mu1 + mu2:
        raise ValueError("weight degree must match the shape degree")
    n = len(alpha)
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] + alpha[i]
    results: list[Tableau] = []
    b = [0] * n

    def rec(k: int, left: int, a_prefix: int):
        if k == n:
            if left == 0:
                row_b = tuple(b)
                results.append(Tableau(tuple(x - y for x, y in zip(alpha, row_b)), row_b))
            return
        lo = max(0, left - suffix[k + 1])
        hi = min(alpha[k], left, a_prefix - (mu2 - left))
        for v in range(lo, hi + 1):
            b[k] = v
            rec(k + 1, left - v, a_prefix + alpha[k] - v)
        b[k] = 0

    rec(0, mu2, 0)
    return results


def hom_basis_tableaux(lam, mu) -> list[Tableau]:
    """Tableaux indexing the basis homs D(lam) -> Weyl(mu), for mu2 <= lam1 <= mu1.

    Built directly from the defining constraints: the first row starts with
    all lam1 ones, rows split each remaining part of lam, and the second-row
    counts add up to mu2.  Under mu2 <= lam1 every such filling is standard,
    and the set coincides with standard_tableaux(mu, lam).
    """
    lam = check_partition(lam)
    mu1, mu2 = normalize_shape(mu)
    if sum(lam) != mu1 + mu2:
        raise ValueError("degree mismatch")
    if not (mu2 <= lam[0] <= mu1):
        raise ValueError("hom basis requires mu2 <= lam1 <= mu1")
    out = []
    for comp in bounded_compositions(lam[1:], mu2):
        row_b = (0,) + comp
        row_a = tuple(x - y for x, y in zip(lam, row_b))
        out.append(Tableau(row_a, row_b))
    return out


def render_row(exps) -> str:
    parts = [f"{i}^({e})" if e > 1 else f"{i}" for i, e in enumerate(exps, 1) if e]
    return " ".join(parts) if parts else "∅"


def render_tableau(tab: Tableau) -> str:
    return f"[{render_row(tab.row_a)} / {render_row(tab.row_b)}]"

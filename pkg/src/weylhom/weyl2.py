"""The two-row Weyl module: standard-basis arithmetic over GF(p).

Elements of the Weyl module of shape mu are stored as dicts mapping standard
``Tableau`` keys to nonzero residues.  Two independent routes write an
arbitrary bideterminant [row_a / row_b] in that basis:

* ``straighten_first_column`` is the closed form that clears letter 1 out of
  the second row in one step:

      [a / b] = (-1)^{b1} * sum  prod_s C(b_s + i_s, b_s) * [a' / b']

  summed over i_2 + ... + i_n = b1 with i_s <= a_s, where row a' gains all
  b1 ones and gives i_s letters of s to row b'.  When a1 + b1 exceeds the
  first row length the bideterminant is 0 outright.

* the quotient engine reduces elements of the ambient divided-power pair
  space modulo the span of the defining relations, one weight space at a
  time, and solves for the unique standard-basis combination.  It assumes
  nothing about column violations and is the ground truth for inputs the
  closed form does not settle.

Per-weight relation data is memoized; with process-based parallelism each
worker simply grows its own cache.
"""

from __future__ import annotations

import numpy as np

from .gflinalg import inverse, rref
from .modarith import binomial_mod, require_prime
from .tableaux import Tableau, bounded_compositions, normalize_shape, standard_tableaux
from .dpa import add_term, box_image

_straighten_cache: dict = {}
_weight_cache: dict = {}


def clear_caches() -> None:
    _straighten_cache.clear()
    _weight_cache.clear()


def straighten_first_column(mu, row_a, row_b, p: int):
    """Clear letter 1 from the second row of a bideterminant.

    Returns (standard, remainder): dicts mapping Tableau -> coeff and
    (row_a, row_b) -> coeff.  The remainder holds expansion terms that are
    still not standard (possible only when a1 + b1 < mu2); the caller routes
    them through the quotient engine.
    """
    mu = normalize_shape(mu)
    mu1, mu2 = mu
    a1, b1 = row_a[0], row_b[0]
    if a1 + b1 > mu1:
        return {}, {}
    if b1 == 0:
        tab = Tableau(row_a, row_b)
        if tab.is_standard():
            return {tab: 1}, {}
        return {}, {(row_a, row_b): 1}
    key = (mu, row_a, row_b, p)
    hit = _straighten_cache.get(key)
    if hit is not None:
        return hit
    sign = p - 1 if b1 % 2 else 1
    standard: dict = {}
    remainder: dict = {}
    tail_b = row_b[1:]
    for comp in bounded_compositions(row_a[1:], b1):
        coeff = sign
        for bs, inc in zip(tail_b, comp):
            if inc:
                coeff = coeff * binomial_mod(bs + inc, bs, p) % p
                if coeff == 0:
                    break
        if coeff == 0:
            continue
        new_a = (a1 + b1,) + tuple(a - i for a, i in zip(row_a[1:], comp))
        new_b = (0,) + tuple(b + i for b, i in zip(tail_b, comp))
        tab = Tableau(new_a, new_b)
        if tab.is_standard():
            add_term(standard, tab, coeff, p)
        else:
            add_term(remainder, (new_a, new_b), coeff, p)
    result = (standard, remainder)
    if b1 >= 2:
        # cheap cases are recomputed; caching them would swamp memory in sweeps
        _straighten_cache[key] = result
    return result


class _WeightSpace:
    """Relation data for one weight space of the divided-power pair space.

    The pair space D(mu1) (x) D(mu2) at weight alpha has the monomial pairs
    as basis; the relation span is generated by the box images of every
    monomial of every relation summand at that weight.  The reduced form of
    the relation matrix turns quotient classes into coordinates on the free
    columns.
    """

    __slots__ = ("mu", "alpha", "p", "pairs", "index", "rows", "rank", "pivots",
                 "free", "_solver")

    def __init__(self, mu, alpha, p):
        self.mu = mu
        self.alpha = alpha
        self.p = p
        mu1, mu2 = mu
        self.pairs = [
            (ma, tuple(x - y for x, y in zip(alpha, ma)))
            for ma in bounded_compositions(alpha, mu1)
        ]
        self.index = {pair: k for k, pair in enumerate(self.pairs)}
        raw = []
        for t in range(1, mu2 + 1):
            for top in bounded_compositions(alpha, mu1 + t):
                rest = tuple(x - y for x, y in zip(alpha, top))
                image = box_image((top, rest), 1, t, p)
                if image:
                    row = np.zeros(len(self.pairs), dtype=np.int64)
                    for pair, c in image.items():
                        row[self.index[pair]] = c
                    raw.append(row)
        if raw:
            self.rows, self.rank, self.pivots = rref(np.array(raw), p)
            self.rows = self.rows[: self.rank]
        else:
            self.rows = np.zeros((0, len(self.pairs)), dtype=np.int64)
            self.rank = 0
            self.pivots = []
        pivot_set = set(self.pivots)
        self.free = [c for c in range(len(self.pairs)) if c not in pivot_set]
        self._solver = None

    @property
    def dimension(self) -> int:
        return len(self.pairs) - self.rank

    def reduce(self, vec: np.ndarray) -> np.ndarray:
        if self.rank:
            vec = (vec - vec[self.pivots] @ self.rows) % self.p
        return vec

    def _build_solver(self):
        tabs = standard_tableaux(self.mu, self.alpha)
        if len(tabs) != self.dimension:
            raise RuntimeError(
                f"standard tableaux do not span the weight space: shape {self.mu}, "
                f"weight {self.alpha}, p={self.p}: {len(tabs)} tableaux vs "
                f"quotient dimension {self.dimension}"
            )
        if not tabs:
            self._solver = ([], None)
            return
        b = np.zeros((len(tabs), len(self.free)), dtype=np.int64)
        for j, tab in enumerate(tabs):
            vec = np.zeros(len(self.pairs), dtype=np.int64)
            vec[self.index[(tab.row_a, tab.row_b)]] = 1
            b[j] = self.reduce(vec)[self.free]
        binv = inverse(b, self.p)
        if binv is None:
            raise RuntimeError(
                f"standard tableau classes are dependent at shape {self.mu}, "
                f"weight {self.alpha}, p={self.p}"
            )
        self._solver = (tabs, binv)

    def express(self, vec: np.ndarray) -> dict:
        if self._solver is None:
            self._build_solver()
        tabs, binv = self._solver
        cls = self.reduce(vec)[self.free]
        if not tabs:
            if cls.size and cls.any():
                raise RuntimeError("nonzero class in a zero-dimensional weight space")
            return {}
        coeffs = cls @ binv % self.p
        return {tabs[j]: int(c) for j, c in enumerate(coeffs) if c}

    def is_zero(self, vec: np.ndarray) -> bool:
        return not self.reduce(vec).any()


def _weight_space(mu, alpha, p) -> _WeightSpace:
    key = (mu, alpha, p)
    ws = _weight_cache.get(key)
    if ws is None:
        ws = _WeightSpace(mu, alpha, p)
        _weight_cache[key] = ws
    return ws


def _grouped_vectors(mu, element, p):
    """Split a pair-space element by weight and vectorize each part."""
    groups: dict = {}
    for (ra, rb), c in element.items():
        alpha = tuple(x + y for x, y in zip(ra, rb))
        groups.setdefault(alpha, []).append(((ra, rb), c % p))
    for alpha, terms in groups.items():
        ws = _weight_space(mu, alpha, p)
        vec = np.zeros(len(ws.pairs), dtype=np.int64)
        for pair, c in terms:
            vec[ws.index[pair]] = (vec[ws.index[pair]] + c) % p
        yield ws, vec


def to_standard_basis(mu, element, p: int) -> dict:
    """Quotient-engine reduction of a pair-space element into the standard basis."""
    mu = normalize_shape(mu)
    require_prime(p)
    out: dict = {}
    for ws, vec in _grouped_vectors(mu, element, p):
        for tab, c in ws.express(vec).items():
            add_term(out, tab, c, p)
    return out


def is_zero_in_weyl(mu, element, p: int) -> bool:
    """Whether a pair-space element lies in the relation span."""
    mu = normalize_shape(mu)
    return all(ws.is_zero(vec) for ws, vec in _grouped_vectors(mu, element, p))


def weight_space_dimension(mu, alpha, p: int) -> int:
    """Dimension of the weight-alpha subspace of the Weyl module, by the quotient."""
    mu = normalize_shape(mu)
    alpha = tuple(int(x) for x in alpha)
    if sum(alpha) != sum(mu):
        raise ValueError("weight degree must match the shape degree")
    require_prime(p)
    return _weight_space(mu, alpha, p).dimension


def straighten(mu, row_a, row_b, p: int) -> dict:
    """Full standard-basis expansion of one bideterminant.

    Uses the closed form and hands any leftover nonstandard terms to the
    quotient engine.
    """
    mu = normalize_shape(mu)
    require_prime(p)
    row_a = tuple(int(x) for x in row_a)
    row_b = tuple(int(x) for x in row_b)
    if len(row_a) != len(row_b):
        raise ValueError("rows must use the same alphabet")
    if sum(row_a) != mu[0] or sum(row_b) != mu[1]:
        raise ValueError("row degrees must match the shape")
    standard, remainder = straighten_first_column(mu, row_a, row_b, p)
    if not remainder:
        return dict(standard)
    out = dict(standard)
    for tab, c in to_standard_basis(mu, remainder, p).items():
        add_term(out, tab, c, p)
    return out

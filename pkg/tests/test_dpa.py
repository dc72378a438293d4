import itertools

import pytest

from weylhom.dpa import (
    add_term,
    box_generator_image,
    box_image,
    canonical_generator,
    degree,
    multiply,
    splits,
)
from weylhom.tableaux import compositions_of


def test_multiply_examples():
    assert multiply((2, 0), (1, 0), 2) == (1, (3, 0))   # C(3,1) = 3 = 1 mod 2
    assert multiply((2, 0), (0, 1), 7) == (1, (2, 1))   # distinct letters
    assert multiply((1, 0), (1, 0), 2) == (0, (2, 0))   # C(2,1) = 2


def test_multiply_commutative_and_associative():
    # exhaustive over triples of total degree <= 6 on three letters
    monos = [m for d in range(3) for m in compositions_of(d, 3)]
    for p in (2, 3, 5):
        for m1, m2 in itertools.product(monos, repeat=2):
            assert multiply(m1, m2, p) == multiply(m2, m1, p)
        for m1, m2, m3 in itertools.product(monos, repeat=3):
            c12, m12 = multiply(m1, m2, p)
            ca, ma = multiply(m12, m3, p)
            c23, m23 = multiply(m2, m3, p)
            cb, mb = multiply(m1, m23, p)
            assert ma == mb and (c12 * ca) % p == (c23 * cb) % p


def test_splits_examples():
    assert splits((1, 1), 1) == (((0, 1), (1, 0)), ((1, 0), (0, 1)))
    assert splits((0, 0, 2), 0) == (((0, 0, 0), (0, 0, 2)),)
    # single-letter splits: exactly one per degree
    for m in range(5):
        for u in range(m + 1):
            assert len(splits((m,), u)) == 1
    assert splits((1, 1), 5) == ()


def test_splits_coassociative():
    # splitting (d1, d2+d3) then (d2, d3) agrees with one-shot 3-part splits
    monos = [m for deg in range(7) for m in compositions_of(deg, 2)]
    monos += [m for deg in range(5) for m in compositions_of(deg, 3)]
    for mono in monos:
        total = degree(mono)
        for d1 in range(total + 1):
            for d2 in range(total - d1 + 1):
                nested = sorted(
                    (u, u2, v2)
                    for u, v in splits(mono, d1)
                    for u2, v2 in splits(v, d2)
                )
                direct = sorted(
                    (u, u2, tuple(a - b - c for a, b, c in zip(mono, u, u2)))
                    for u in splits_set(mono, d1)
                    for u2 in splits_set(tuple(a - b for a, b in zip(mono, u)), d2)
                )
                assert nested == direct


def splits_set(mono, d):
    return [u for u, _ in splits(mono, d)]


def test_canonical_generator():
    assert canonical_generator((2, 1)) == ((2, 0), (0, 1))
    gen = canonical_generator((8, 3, 1, 1, 1, 1))
    assert gen[0] == (8, 0, 0, 0, 0, 0) and gen[5] == (0, 0, 0, 0, 0, 1)
    assert tuple(degree(f) for f in gen) == (8, 3, 1, 1, 1, 1)


def test_box_generator_image_examples():
    img = box_generator_image((2, 2, 2), 1, 1, 2)
    assert img == {((2, 0, 0), (1, 1, 0), (0, 0, 2)): 1}
    img = box_generator_image((2, 1), 1, 1, 3)
    assert img == {((2, 0), (1, 0)): 1}
    img = box_generator_image((3, 2, 1), 2, 1, 5)
    assert img == {((3, 0, 0), (0, 2, 0), (0, 1, 0)): 1}
    with pytest.raises(ValueError):
        box_generator_image((2, 1), 2, 1, 3)
    with pytest.raises(ValueError):
        box_generator_image((2, 1), 1, 2, 3)


def test_box_generator_image_single_unit_term():
    from weylhom.tableaux import partitions_of

    for p in (2, 5):
        for r in range(2, 9):
            for lam in partitions_of(r, max_parts=4):
                for i in range(1, len(lam)):
                    for t in range(1, lam[i] + 1):
                        img = box_generator_image(lam, i, t, p)
                        assert list(img.values()) == [1], (lam, i, t)


def test_box_image_full_examples():
    # target shape (2,1), relation parameter t=1
    assert box_image(((3, 0), (0, 0)), 1, 1, 5) == {((2, 0), (1, 0)): 1}
    assert box_image(((2, 1), (0, 0)), 1, 1, 5) == {
        ((2, 0), (0, 1)): 1,
        ((1, 1), (1, 0)): 1,
    }
    # degree is conserved in every output term
    for t in (1, 2):
        for top in compositions_of(3 + t, 2):
            for rest in compositions_of(3 - t, 2):
                for key in box_image((top, rest), 1, t, 3):
                    assert sum(degree(f) for f in key) == 6


def test_add_term_drops_zeros():
    acc = {}
    add_term(acc, "k", 2, 3)
    add_term(acc, "k", 1, 3)
    assert acc == {}

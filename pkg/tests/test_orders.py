"""Monomial orders: axioms, comparisons, the depth-selecting block order."""

import random

import pytest

from gbdepth.orders import (LexOrder, WeightOrder, block_weight_order,
                            compare, validate_order, weight_of)
from gbdepth.errors import OrderError
from gbdepth.rings import mono_mul, unit_mono


def test_lex_basic():
    lex = LexOrder((0, 1, 2))
    assert compare((1, 0, 0), (0, 1, 0), lex) == 1   # x1 > x2
    assert compare((0, 1, 0), (0, 0, 1), lex) == 1   # x2 > x3
    assert compare((1, 0, 0), (1, 0, 0), lex) == 0


def test_lex_permutation():
    # x3 most significant
    lex = LexOrder((2, 0, 1))
    assert compare((0, 0, 1), (1, 1, 0), lex) == 1
    assert compare((1, 0, 0), (0, 1, 0), lex) == 1


def test_weight_then_tie():
    w = WeightOrder((1, 2, 2), LexOrder((0, 1, 2)))
    # x1^2 has weight 2, x2*x3 has weight 4
    assert compare((2, 0, 0), (0, 1, 1), w) == -1
    # equal weight 2: tie-break by lex, x1^2 > x1... compare x1*x2 vs x3^2: 3 vs 4
    assert compare((1, 1, 0), (0, 0, 2), w) == -1
    # equal weights fall to the tie-break
    assert compare((0, 2, 0), (0, 0, 2), w) == 1
    assert weight_of((1, 1, 0), (1, 2, 2)) == 3
    with pytest.raises(OrderError):
        weight_of((1, 1), (1, 2, 2))


def test_validate_rejects_bad_specs():
    with pytest.raises(OrderError, match="not minimal"):
        validate_order(WeightOrder((0, 1, 1)), 3)
    with pytest.raises(OrderError, match="not minimal"):
        validate_order(WeightOrder((1, -2, 1)), 3)
    with pytest.raises(OrderError):
        validate_order(WeightOrder((1, 1)), 3)
    with pytest.raises(OrderError, match="permutation"):
        validate_order(LexOrder((0, 0, 1)), 3)
    with pytest.raises(OrderError):
        validate_order(LexOrder((0, 1)), 3)
    # normalization fills the identity priority
    assert validate_order(LexOrder(), 2).perm == (0, 1)


def test_order_axioms_on_random_monomials():
    """Totality, multiplicativity, and minimality of the unit monomial."""
    rng = random.Random(99)
    orders = [
        LexOrder((0, 1, 2)),
        LexOrder((2, 0, 1)),
        WeightOrder((1, 2, 2), LexOrder((0, 1, 2))),
        WeightOrder((3, 1, 4), WeightOrder((1, 1, 1), LexOrder((1, 2, 0)))),
    ]
    monos = [tuple(rng.randint(0, 4) for _ in range(3)) for _ in range(40)]
    for order in orders:
        order = validate_order(order, 3)
        for u in monos:
            if u != unit_mono(3):
                assert compare(u, unit_mono(3), order) == 1
            for v in monos:
                c = compare(u, v, order)
                assert c == -compare(v, u, order)
                assert (c == 0) == (u == v)  # totality: keys separate monomials
                for w in monos[:10]:
                    assert compare(mono_mul(u, w), mono_mul(v, w), order) == c


def test_block_weight_order():
    o = block_weight_order(2, 1)
    assert o.weights == (1, 2, 2, 1, 1, 1)
    assert o.tie.perm == (0, 1, 2, 3, 4, 5)
    assert block_weight_order(1, 0).weights == (1, 1, 1)
    assert block_weight_order(3, 3).weights == (1, 2, 2) * 3
    with pytest.raises(ValueError):
        block_weight_order(2, 3)
    with pytest.raises(ValueError):
        block_weight_order(0, 0)

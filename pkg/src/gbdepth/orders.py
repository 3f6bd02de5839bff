"""Monomial orders as key functions.

An order exposes key(mono) returning a tuple; monomials compare by comparing
keys lexicographically as python tuples. Supported orders:

  * LexOrder(perm): lexicographic with an explicit variable priority
    (perm lists variable indices, most significant first; None means x1 is
    the most significant).
  * WeightOrder(weights, tie): compare total weight first, break ties with
    another order. Weights must be strictly positive integers so the unit
    monomial stays the unique minimum and the order is a well-order.

Orders are value objects; polynomials never carry one.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import OrderError
from .rings import Mono


class MonomialOrder:
    def key(self, m: Mono):
        raise NotImplementedError


@dataclass(frozen=True)
class LexOrder(MonomialOrder):
    """Pure lexicographic order. perm[0] is the most significant variable."""

    perm: tuple = None

    def key(self, m: Mono):
        if self.perm is None:
            return tuple(m)
        return tuple(m[i] for i in self.perm)


@dataclass(frozen=True)
class WeightOrder(MonomialOrder):
    """Weight vector first, then a tie-break order."""

    weights: tuple
    tie: MonomialOrder = field(default_factory=LexOrder)

    def key(self, m: Mono):
        if len(m) != len(self.weights):
            raise OrderError(
                f"monomial has {len(m)} exponents, weight vector has {len(self.weights)}")
        w = sum(a * b for a, b in zip(self.weights, m))
        return (w,) + tuple(self.tie.key(m))


def compare(u: Mono, v: Mono, order: MonomialOrder) -> int:
    """-1, 0 or 1 as u <, =, > v under the order."""
    if len(u) != len(v):
        raise OrderError(f"cannot compare exponent vectors of lengths {len(u)} and {len(v)}")
    ku, kv = order.key(u), order.key(v)
    if ku < kv:
        return -1
    if ku > kv:
        return 1
    return 0


def weight_of(m: Mono, weights) -> int:
    if len(m) != len(weights):
        raise OrderError(f"monomial has {len(m)} exponents, weight vector has {len(weights)}")
    return sum(a * b for a, b in zip(weights, m))


def validate_order(order: MonomialOrder, n: int) -> MonomialOrder:
    """Check the order fits an n-variable ring and satisfies the order axioms;
    returns a normalized copy. Raises OrderError naming the violated axiom."""
    if isinstance(order, LexOrder):
        if order.perm is None:
            return LexOrder(tuple(range(n)))
        perm = tuple(order.perm)
        if sorted(perm) != list(range(n)):
            raise OrderError(
                f"lex priority {perm} is not a permutation of the {n} variable indices "
                "(order would not be total)")
        return LexOrder(perm)
    if isinstance(order, WeightOrder):
        weights = tuple(order.weights)
        if len(weights) != n:
            raise OrderError(f"weight vector has {len(weights)} entries, ring has {n} variables")
        for w in weights:
            if not isinstance(w, int) or w < 1:
                raise OrderError(
                    "1 is not minimal: weight vector has a non-positive entry "
                    f"({w}); the order would not be a well-order")
        return WeightOrder(weights, validate_order(order.tie, n))
    raise OrderError(f"unknown order type {type(order).__name__}")


def block_weight_order(d: int, r: int) -> WeightOrder:
    """The depth-selecting weight order on 3d variables: blocks 1..r get
    weights (1, 2, 2), blocks r+1..d get (1, 1, 1); ties broken by lex with
    x1 most significant."""
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    if not 0 <= r <= d:
        raise ValueError(f"r must be in 0..{d}, got {r}")
    weights = (1, 2, 2) * r + (1, 1, 1) * (d - r)
    return WeightOrder(weights, LexOrder(tuple(range(3 * d))))

"""Betti numbers through the Taylor complex, as an independent oracle.

The Taylor complex on s monomial generators has one basis element per
generator subset; tensoring with the residue field splits it into strands
indexed by multidegree (the lcm of the subset). The i-th homology of the
strand at degree a is beta_{i,a}(S/J). This shares no code path with the
upper Koszul route beyond exact rank, so agreement of the two tables is a
real cross-check, not a tautology.
"""

from __future__ import annotations

import itertools
from collections import defaultdict

from .invariants import BettiTable
from .linalg import matrix_rank
from .rings import MonomialIdeal, QQ, mono_lcm, unit_mono

MAX_TAYLOR_GENS = 20


def taylor_betti_table(J: MonomialIdeal, field=QQ) -> BettiTable:
    """Betti table of S/J from homology of Taylor strands. Exponential in
    the number of generators; meant for small oracle instances."""
    if J.is_unit:
        raise ValueError("unit ideal: the quotient is the zero ring")
    gens = list(J.gens)
    s = len(gens)
    if s > MAX_TAYLOR_GENS:
        raise ValueError(f"Taylor oracle limited to {MAX_TAYLOR_GENS} generators, got {s}")
    unit = unit_mono(J.n)

    def subset_lcm(subset):
        m = unit
        for idx in subset:
            m = mono_lcm(m, gens[idx])
        return m

    # group subsets by the multidegree of their lcm
    strands = defaultdict(lambda: defaultdict(list))
    for k in range(s + 1):
        for subset in itertools.combinations(range(s), k):
            strands[subset_lcm(subset)][k].append(subset)

    entries = {}
    for a, by_size in strands.items():
        sizes = sorted(by_size)
        top = sizes[-1]
        ranks = {}
        for k in range(1, top + 1):
            cols = by_size.get(k, [])
            lower = {sub: i for i, sub in enumerate(by_size.get(k - 1, []))}
            if not cols or not lower:
                ranks[k] = 0
                continue
            rows = [[0] * len(cols) for _ in lower]
            for c, subset in enumerate(cols):
                for pos in range(len(subset)):
                    smaller = subset[:pos] + subset[pos + 1:]
                    # the face map keeps only arrows that stay in the strand
                    if smaller in lower:
                        rows[lower[smaller]][c] = -1 if pos % 2 else 1
            ranks[k] = matrix_rank(rows, field)
        for k in range(top + 1):
            dim_k = len(by_size.get(k, []))
            h = dim_k - ranks.get(k, 0) - ranks.get(k + 1, 0)
            if h:
                entries[(k, a)] = h
    return BettiTable(J.n, entries)

"""Exact matrix rank.

Integer matrices go through fraction-free (Bareiss) elimination, so no
rational arithmetic and no tolerances; prime-field matrices go through
ordinary Gaussian elimination, which is exact there.
"""

from __future__ import annotations

from .rings import QQ


def _rank_bareiss(rows):
    m = [list(r) for r in rows]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    rank = 0
    prev = 1
    for c in range(nc):
        if rank >= nr:
            break
        piv = next((i for i in range(rank, nr) if m[i][c]), None)
        if piv is None:
            continue
        if piv != rank:
            m[rank], m[piv] = m[piv], m[rank]
        pivot = m[rank][c]
        for i in range(rank + 1, nr):
            fi = m[i][c]
            for j in range(c + 1, nc):
                # Sylvester identity guarantees exact divisibility
                m[i][j] = (pivot * m[i][j] - fi * m[rank][j]) // prev
            m[i][c] = 0
        prev = pivot
        rank += 1
    return rank


def _rank_field(rows, field):
    m = [[field(x) for x in r] for r in rows]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    rank = 0
    for c in range(nc):
        if rank >= nr:
            break
        piv = next((i for i in range(rank, nr) if m[i][c]), None)
        if piv is None:
            continue
        if piv != rank:
            m[rank], m[piv] = m[piv], m[rank]
        pivot = m[rank][c]
        for i in range(rank + 1, nr):
            if m[i][c]:
                f = m[i][c] / pivot
                for j in range(c, nc):
                    m[i][j] = m[i][j] - f * m[rank][j]
        rank += 1
    return rank


def matrix_rank(rows, field=QQ) -> int:
    """Rank of an integer matrix over the given coefficient field."""
    if not rows or not rows[0]:
        return 0
    if field == QQ:
        return _rank_bareiss(rows)
    return _rank_field(rows, field)

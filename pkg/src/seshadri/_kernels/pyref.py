"""Pure-Python reference for the prime-field row-reduction kernel."""

from __future__ import annotations

from typing import Sequence


def modrank(rows: Sequence[Sequence[int]], prime: int) -> int:
    """Rank over GF(prime) of an integer matrix given row-wise.

    Entries are reduced modulo ``prime`` on entry; ``prime`` must be prime
    (inverses are taken by Fermat exponentiation).
    """
    if prime < 2:
        raise ValueError("prime must be at least 2")
    m = [[e % prime for e in row] for row in rows]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, nrows):
            if m[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = pow(m[rank][col], prime - 2, prime)
        prow = m[rank]
        for r in range(rank + 1, nrows):
            f = m[r][col]
            if not f:
                continue
            f = f * inv % prime
            row = m[r]
            for j in range(col, ncols):
                row[j] = (row[j] - f * prow[j]) % prime
        rank += 1
        if rank == nrows:
            break
    return rank

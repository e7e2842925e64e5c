"""Exact rational linear programming by simplex with Bland's rule.

Solves  max c.x  subject to  A x <= b  with x free and b >= 0, entirely
over Fraction.  Free variables are split into differences of nonnegatives;
with nonnegative right-hand sides the slack basis is immediately feasible,
so no phase-one is needed.  The regularity systems solved here are
homogeneous except for a single normalization row, so this covers them.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Q = Fraction


class Unbounded(Exception):
    pass


def maximize(
    c: Sequence[Fraction],
    a_rows: Sequence[Sequence[Fraction]],
    b: Sequence[Fraction],
) -> tuple[Fraction, list[Fraction]]:
    """max c.x subject to A x <= b (x free, all b >= 0); returns (value, x)."""
    if any(Q(v) < 0 for v in b):
        raise ValueError("right-hand sides must be nonnegative")
    nfree = len(c)
    nrows = len(a_rows)
    ncols = 2 * nfree + nrows

    tab: list[list[Fraction]] = []
    for r in range(nrows):
        row = [Q(a_rows[r][i]) for i in range(nfree)]
        row += [-Q(a_rows[r][i]) for i in range(nfree)]
        row += [Q(1) if s == r else Q(0) for s in range(nrows)]
        row.append(Q(b[r]))
        tab.append(row)
    basis = list(range(2 * nfree, 2 * nfree + nrows))

    obj = [Q(c[i]) for i in range(nfree)]
    obj += [-Q(c[i]) for i in range(nfree)]
    obj += [Q(0)] * nrows + [Q(0)]
    tab.append(obj)

    while True:
        objrow = tab[-1]
        col = next((j for j in range(ncols) if objrow[j] > 0), None)
        if col is None:
            break
        pivot = None
        for r in range(nrows):
            if tab[r][col] > 0:
                ratio = tab[r][-1] / tab[r][col]
                if pivot is None or (ratio, basis[r]) < (pivot[0], basis[pivot[1]]):
                    pivot = (ratio, r)
        if pivot is None:
            raise Unbounded()
        row = pivot[1]
        pv = tab[row][col]
        tab[row] = [x / pv for x in tab[row]]
        for r in range(nrows + 1):
            if r != row and tab[r][col] != 0:
                f = tab[r][col]
                tab[r] = [a - f * bb for a, bb in zip(tab[r], tab[row])]
        basis[row] = col

    value = -tab[-1][-1]
    split = [Q(0)] * (2 * nfree)
    for r in range(nrows):
        if basis[r] < 2 * nfree:
            split[basis[r]] = tab[r][-1]
    x = [split[i] - split[nfree + i] for i in range(nfree)]
    return value, x

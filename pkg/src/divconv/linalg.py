"""Exact linear algebra: fraction-free rank and rational solving.

Rank uses Bareiss elimination over the integers (rows are cleared of
denominators first; scaling rows does not change rank).  Solving uses
Gauss-Jordan over Fractions and rejects underdetermined or inconsistent
systems instead of guessing.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm


class UnderdeterminedSystem(ValueError):
    pass


class InconsistentSystem(ValueError):
    pass


def _integer_rows(rows):
    out = []
    for row in rows:
        den = 1
        for x in row:
            if isinstance(x, Fraction):
                den = lcm(den, x.denominator)
        out.append([int(x * den) if isinstance(x, Fraction) else x * den for x in row])
    return out


def rank(rows) -> int:
    """Exact rank via fraction-free (Bareiss) elimination."""
    m = [r[:] for r in _integer_rows(rows)]
    if not m:
        return 0
    nr, nc = len(m), len(m[0])
    piv_r = 0
    prev = 1
    for c in range(nc):
        if piv_r >= nr:
            break
        p = next((r for r in range(piv_r, nr) if m[r][c] != 0), None)
        if p is None:
            continue
        if p != piv_r:
            m[piv_r], m[p] = m[p], m[piv_r]
        pivot = m[piv_r][c]
        for r in range(piv_r + 1, nr):
            mr = m[r]
            mp = m[piv_r]
            factor = mr[c]
            for j in range(c, nc):
                mr[j] = (pivot * mr[j] - factor * mp[j]) // prev
        prev = pivot
        piv_r += 1
    return piv_r


def solve(rows, rhs) -> list[Fraction]:
    """Unique exact solution of rows * x = rhs.

    The system may be overdetermined; every extra equation must be
    consistent with the unique solution or InconsistentSystem is raised.
    Raises UnderdeterminedSystem when column rank < number of unknowns.
    """
    nr = len(rows)
    if nr == 0:
        raise UnderdeterminedSystem("no equations")
    nc = len(rows[0])
    m = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    piv_r = 0
    for c in range(nc):
        p = next((r for r in range(piv_r, nr) if m[r][c] != 0), None)
        if p is None:
            continue
        if p != piv_r:
            m[piv_r], m[p] = m[p], m[piv_r]
        pv = m[piv_r][c]
        m[piv_r] = [x / pv for x in m[piv_r]]
        for r in range(nr):
            if r != piv_r and m[r][c] != 0:
                f = m[r][c]
                mp = m[piv_r]
                m[r] = [x - f * y for x, y in zip(m[r], mp)]
        piv_r += 1
    if piv_r < nc:
        raise UnderdeterminedSystem(f"rank {piv_r} < {nc} unknowns")
    for r in range(piv_r, nr):
        if m[r][nc] != 0:
            raise InconsistentSystem("no exact solution satisfies every sampled equation")
    return [m[c][nc] for c in range(nc)]

"""Exact rank and nullspace over the rationals.

Rows are sparse ``{column: value}`` dicts.  Elimination is fraction-free:
rows are scaled to integers up front, combined as ``a*r - b*p`` and divided by
their content after every step, so no rational arithmetic happens inside the
loop.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping

SparseRow = Mapping[int, object]


def _integer_row(row: SparseRow) -> dict[int, int]:
    fr = {c: Fraction(v) for c, v in row.items() if v}
    if not fr:
        return {}
    den = lcm(*(v.denominator for v in fr.values()))
    return _primitive({c: int(v * den) for c, v in fr.items()})


def _primitive(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    if g > 1:
        row = {c: v // g for c, v in row.items()}
    # Fix the sign so the leading entry is positive.
    if row and row[min(row)] < 0:
        row = {c: -v for c, v in row.items()}
    return row


def _reduce(r: dict[int, int], pivots: dict[int, dict[int, int]]) -> dict[int, int]:
    while r:
        c = min(r)
        p = pivots.get(c)
        if p is None:
            return r
        a, b = p[c], r[c]
        g = gcd(a, b)
        a, b = a // g, b // g
        new = {k: a * v for k, v in r.items()}
        for k, v in p.items():
            w = new.get(k, 0) - b * v
            if w:
                new[k] = w
            else:
                new.pop(k, None)
        r = _primitive(new)
    return r


def echelon(rows: Iterable[SparseRow]) -> dict[int, dict[int, int]]:
    """Row echelon form as ``{leading column: primitive integer row}``."""
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        r = _reduce(_integer_row(row), pivots)
        if r:
            pivots[min(r)] = r
    return pivots


def rank(rows: Iterable[SparseRow]) -> int:
    return len(echelon(rows))


def reduced_echelon(rows: Iterable[SparseRow]) -> dict[int, dict[int, int]]:
    """Echelon form in which each pivot column appears in its pivot row only."""
    piv = echelon(rows)
    cols = sorted(piv)
    for c in reversed(cols):
        p = piv[c]
        for c2 in cols:
            if c2 >= c:
                break
            r = piv[c2]
            if c in r:
                a, b = p[c], r[c]
                g = gcd(a, b)
                a, b = a // g, b // g
                new = {k: a * v for k, v in r.items()}
                for k, v in p.items():
                    w = new.get(k, 0) - b * v
                    if w:
                        new[k] = w
                    else:
                        new.pop(k, None)
                piv[c2] = _primitive(new)
    return piv


def nullspace(rows: Iterable[SparseRow], ncols: int) -> list[dict[int, int]]:
    """Integer basis of ``{v : A v = 0}``, one vector per free column."""
    piv = reduced_echelon(rows)
    by_free: dict[int, list[int]] = {}
    for c, r in piv.items():
        for k in r:
            if k != c:
                by_free.setdefault(k, []).append(c)
    basis = []
    for f in range(ncols):
        if f in piv:
            continue
        vec = {f: Fraction(1)}
        for c in by_free.get(f, ()):
            r = piv[c]
            vec[c] = Fraction(-r[f], r[c])
        den = lcm(*(v.denominator for v in vec.values()))
        basis.append({k: int(v * den) for k, v in vec.items()})
    return basis


def apply(rows: Iterable[SparseRow], vec: Mapping[int, object]) -> list[Fraction]:
    """Matrix-vector product for sparse rows."""
    out = []
    for row in rows:
        out.append(sum((Fraction(v) * Fraction(vec.get(c, 0)) for c, v in row.items()), Fraction(0)))
    return out


def bareiss_rank(matrix: list[list[object]]) -> int:
    """Rank of a dense matrix by Bareiss fraction-free elimination."""
    if not matrix:
        return 0
    dens = [lcm(*(Fraction(x).denominator for x in row)) if row else 1 for row in matrix]
    A = [[int(Fraction(x) * d) for x in row] for row, d in zip(matrix, dens)]
    m, n = len(A), len(A[0])
    prev, r = 1, 0
    for c in range(n):
        if r == m:
            break
        piv = next((i for i in range(r, m) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        for i in range(r + 1, m):
            for j in range(c + 1, n):
                A[i][j] = (A[r][c] * A[i][j] - A[i][c] * A[r][j]) // prev
            A[i][c] = 0
        prev = A[r][c]
        r += 1
    return r

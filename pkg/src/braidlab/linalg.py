"""Exact integer linear algebra: rank over Q and F_p, Smith invariants, span membership.

Matrices are lists of rows of Python ints.  Nothing here uses floating point.
"""

from __future__ import annotations

from math import gcd
from typing import Sequence

__all__ = ["rank", "rank_mod_p", "smith_invariants", "in_span", "vectorize", "transpose"]

Matrix = list  # list[list[int]]


def _copy(rows: Sequence[Sequence[int]]) -> Matrix:
    return [list(r) for r in rows]


def rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination."""
    a = _copy(rows)
    if not a:
        return 0
    m, n = len(a), len(a[0])
    r = 0
    prev = 1
    for c in range(n):
        piv = next((i for i in range(r, m) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        for i in range(r + 1, m):
            f = a[i][c]
            row_i = a[i]
            row_r = a[r]
            for j in range(c + 1, n):
                row_i[j] = (p * row_i[j] - f * row_r[j]) // prev
            row_i[c] = 0
        prev = p
        r += 1
        if r == m:
            break
    return r


def rank_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
    a = [[x % p for x in row] for row in rows]
    if not a:
        return 0
    m, n = len(a), len(a[0])
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], -1, p)
        row_r = [(x * inv) % p for x in a[r]]
        a[r] = row_r
        for i in range(m):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], row_r)]
        r += 1
        if r == m:
            break
    return r


def smith_invariants(rows: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero elementary divisors ``d_1 | d_2 | ...`` of an integer matrix.

    Straightforward pivot-and-clear Smith reduction with the smallest
    nonzero entry as pivot, followed by the divisibility fix-up.
    """
    a = [list(r) for r in rows if any(r)]
    if not a:
        return []
    m, n = len(a), len(a[0])
    diag = []
    t = 0
    while t < min(m, n):
        # smallest nonzero entry in the remaining block
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = a[i][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            p = a[t][t]
            done = True
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // p
                    if q:
                        rt = a[t]
                        a[i] = [x - q * y for x, y in zip(a[i], rt)]
                    if a[i][t]:
                        done = False
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // p
                    if q:
                        for row in a:
                            row[j] -= q * row[t]
                    if a[t][j]:
                        done = False
            if done:
                break
            # move the smallest remainder to the pivot position
            best = (abs(p), t, t)
            for i in range(t + 1, m):
                v = a[i][t]
                if v and abs(v) < best[0]:
                    best = (abs(v), i, t)
            for j in range(t + 1, n):
                v = a[t][j]
                if v and abs(v) < best[0]:
                    best = (abs(v), t, j)
            _, i, j = best
            a[t], a[i] = a[i], a[t]
            for row in a:
                row[t], row[j] = row[j], row[t]
        diag.append(abs(a[t][t]))
        t += 1
    # restore the divisibility chain
    changed = True
    while changed:
        changed = False
        for i in range(len(diag)):
            for j in range(i + 1, len(diag)):
                x, y = diag[i], diag[j]
                if y % x:
                    g = gcd(x, y)
                    diag[i], diag[j] = g, x * y // g
                    changed = True
    return sorted(diag)


def in_span(vectors: Sequence[Sequence[int]], target: Sequence[int]) -> bool:
    """Whether ``target`` is a rational combination of ``vectors``."""
    if not any(target):
        return True
    if not vectors:
        return False
    return rank(list(vectors) + [list(target)]) == rank(vectors)


def vectorize(elements: Sequence[dict], keys: Sequence | None = None) -> tuple[list, Matrix]:
    """Turn sparse ``{key: coeff}`` dicts into dense rows over a shared key order."""
    if keys is None:
        keys = sorted({k for e in elements for k in e})
    index = {k: i for i, k in enumerate(keys)}
    rows = []
    for e in elements:
        row = [0] * len(keys)
        for k, v in e.items():
            row[index[k]] = v
        rows.append(row)
    return list(keys), rows


def transpose(rows: Matrix) -> Matrix:
    return [list(c) for c in zip(*rows)] if rows else []

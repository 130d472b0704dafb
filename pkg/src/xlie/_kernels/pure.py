"""Pure-Python mod-p matrix kernels.

Entries are ints in [0, p) with p prime.  Callers guarantee nonempty
shapes; degenerate matrices are handled a layer up.
"""

from __future__ import annotations

BACKEND = "pure"


def rref_mod(rows: list[list[int]], p: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form over F_p.  Returns (new rows, pivot columns)."""
    m = [row[:] for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pivot = -1
        for i in range(r, nrows):
            if m[i][c] % p:
                pivot = i
                break
        if pivot < 0:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = pow(m[r][c], p - 2, p)
        m[r] = [(x * inv) % p for x in m[r]]
        row_r = m[r]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                row_i = m[i]
                for j in range(c, ncols):
                    row_i[j] = (row_i[j] - f * row_r[j]) % p
        pivots.append(c)
        r += 1
    return m, pivots


def matmul_mod(a: list[list[int]], b: list[list[int]], p: int) -> list[list[int]]:
    """Product of an (m x k) and a (k x n) matrix over F_p."""
    n = len(b[0])
    out = []
    for row in a:
        acc = [0] * n
        for i, x in enumerate(row):
            if x:
                brow = b[i]
                for j in range(n):
                    acc[j] += x * brow[j]
        out.append([v % p for v in acc])
    return out

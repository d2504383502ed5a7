"""Exact linear algebra over any field whose elements support + - * / and == 0.

Matrices are lists of rows.  Used with ``FieldElem`` and ``Fraction`` entries.
"""

from __future__ import annotations


def _size(x) -> int:
    return x.size() if hasattr(x, "size") else 1


class Echelon:
    """Incremental row echelon form; answers whether a new row is independent."""

    def __init__(self):
        self.rows = []  # list of (pivot column, normalized row)

    def reduce(self, row):
        row = list(row)
        for col, piv in self.rows:
            c = row[col]
            if c != 0:
                row = [a - c * b for a, b in zip(row, piv)]
        return row

    def add(self, row) -> bool:
        r = self.reduce(row)
        cols = [k for k, x in enumerate(r) if x != 0]
        if not cols:
            return False
        col = min(cols, key=lambda k: (_size(r[k]), k))
        p = r[col]
        r = [x / p for x in r]
        # keep the basis fully reduced on the new pivot column
        self.rows = [(c, [a - b[col] * x for a, x in zip(b, r)]) if b[col] != 0 else (c, b)
                     for c, b in self.rows]
        self.rows.append((col, r))
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)


def independent_rows(M) -> list:
    """Indices of the lexicographically first maximal independent set of rows."""
    ech = Echelon()
    return [i for i, row in enumerate(M) if ech.add(row)]


def rank(M) -> int:
    return len(independent_rows(M))


def transpose(M):
    return [list(col) for col in zip(*M)] if M else []


def inverse(M, zero=0, one=1):
    """Inverse of a square matrix by Gauss-Jordan; raises ZeroDivisionError if singular."""
    n = len(M)
    aug = [list(row) + [one if i == j else zero for j in range(n)] for i, row in enumerate(M)]
    for c in range(n):
        cand = [r for r in range(c, n) if aug[r][c] != 0]
        if not cand:
            raise ZeroDivisionError("singular matrix")
        p = min(cand, key=lambda r: (_size(aug[r][c]), r))
        aug[c], aug[p] = aug[p], aug[c]
        piv = aug[c][c]
        aug[c] = [x / piv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return [row[n:] for row in aug]


def left_kernel(M) -> list:
    """Basis of {y : y M = 0} as a list of coefficient rows."""
    if not M:
        return []
    m, n = len(M), len(M[0])
    kernel = []
    pivots = []
    for i, row in enumerate(M):
        r = list(row)
        comb = [0] * m
        comb[i] = 1
        for col, prow, pcomb in pivots:
            c = r[col]
            if c != 0:
                r = [a - c * b for a, b in zip(r, prow)]
                comb = [a - c * b for a, b in zip(comb, pcomb)]
        nz = [k for k in range(n) if r[k] != 0]
        if not nz:
            kernel.append(comb)
            continue
        col = min(nz, key=lambda k: (_size(r[k]), k))
        p = r[col]
        pivots.append((col, [x / p for x in r], [x / p for x in comb]))
    return kernel


def matmul(A, B):
    return [[sum((a * b for a, b in zip(row, col)), 0) for col in zip(*B)] for row in A]


def matvec(A, x):
    return [sum((a * b for a, b in zip(row, x)), 0) for row in A]

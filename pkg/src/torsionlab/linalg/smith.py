"""Smith normal form over the integers by gcd row/column reduction."""

from __future__ import annotations

from .matrix import DomainError, ExactMatrix
from .scalars import ZZ


def smith_normal_form(m: ExactMatrix) -> tuple[ExactMatrix, ExactMatrix, ExactMatrix]:
    """Return unimodular ``u``, ``v`` and diagonal ``d`` with ``u @ m @ v == d``.

    Pivots are chosen by minimal absolute value; the diagonal is non-negative
    and each entry divides the next.
    """
    if m.domain is not ZZ:
        raise DomainError("smith_normal_form needs an integer matrix")
    rows, cols = m.rows, m.cols
    a = [[int(x) for x in r] for r in m.to_rows()]
    u = [[int(i == j) for j in range(rows)] for i in range(rows)]
    v = [[int(i == j) for j in range(cols)] for i in range(cols)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):
        for r in a:
            r[dst] += q * r[src]
        for r in v:
            r[dst] += q * r[src]

    for t in range(min(rows, cols)):
        while True:
            best = None
            for i in range(t, rows):
                for j in range(t, cols):
                    if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                break
            swap_rows(t, best[0])
            swap_cols(t, best[1])
            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
                    dirty = dirty or a[i][t] != 0
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
                    dirty = dirty or a[t][j] != 0
            if dirty:
                continue
            bad = next((i for i in range(t + 1, rows)
                        for j in range(t + 1, cols) if a[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad, 1)
        if t < rows and t < cols and a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]

    return (ExactMatrix.from_rows(ZZ, u, rows),
            ExactMatrix.from_rows(ZZ, a, cols),
            ExactMatrix.from_rows(ZZ, v, cols))


def diagonal(d: ExactMatrix) -> list[int]:
    return [d[i, i] for i in range(min(d.rows, d.cols))]


def unimodular_inverse(u: ExactMatrix) -> ExactMatrix:
    """Exact inverse of a unimodular integer matrix."""
    from fractions import Fraction

    from .matrix import rref
    from .scalars import QQ

    n = u.rows
    aug = ExactMatrix.from_rows(QQ, [[Fraction(x) for x in r] + [int(i == j) for j in range(n)]
                                     for i, r in enumerate(u.to_rows())], 2 * n)
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    inv = [[x for x in r[n:]] for r in red[:n]]
    if any(x.denominator != 1 for r in inv for x in r):
        raise ValueError("matrix is not unimodular")
    return ExactMatrix.from_rows(ZZ, [[x.numerator for x in r] for r in inv], n)

"""Exact integer linear algebra: fraction-free elimination and simplex.

Elimination keeps every intermediate entry an integer by dividing by the
previous pivot, which is always exact (Sylvester's identity).
"""

from fractions import Fraction
from math import gcd

from .errors import UnboundedLPError


def _bareiss_forward(rows, ncols):
    """Upper-triangularise ``rows`` in place; return (sign, last pivot, rank)."""
    m = len(rows)
    prev = 1
    sign = 1
    r = 0
    for c in range(ncols):
        if r == m:
            break
        piv = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
            sign = -sign
        p = rows[r][c]
        pr = rows[r]
        for i in range(r + 1, m):
            row = rows[i]
            f = row[c]
            if f == 0:
                if p != prev:
                    for k in range(c + 1, len(row)):
                        row[k] = row[k] * p // prev
            else:
                for k in range(c + 1, len(row)):
                    row[k] = (row[k] * p - f * pr[k]) // prev
            row[c] = 0
        prev = p
        r += 1
    return sign, prev, r


def bareiss_det(matrix):
    """Determinant of a square integer matrix."""
    n = len(matrix)
    if n == 0:
        return 1
    rows = [list(map(int, row)) for row in matrix]
    sign, last, rank = _bareiss_forward(rows, n)
    if rank < n:
        return 0
    return sign * last


def bareiss_solve(matrix, rhs):
    """Solve ``matrix @ x = rhs`` exactly for integer inputs.

    Returns a list of Fractions, or None if the matrix is singular.
    """
    n = len(matrix)
    rows = [list(map(int, row)) + [int(b)] for row, b in zip(matrix, rhs)]
    _, _, rank = _bareiss_forward(rows, n)
    if rank < n or any(rows[i][i] == 0 for i in range(n)):
        return None
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = Fraction(rows[i][n])
        for k in range(i + 1, n):
            if rows[i][k]:
                acc -= rows[i][k] * x[k]
        x[i] = acc / rows[i][i]
    return x


def simplex_max(G, h, c):
    """Maximize ``c.x`` subject to ``G x <= h``, ``x >= 0`` with ``h >= 0``.

    Bland's rule, so it terminates on degenerate problems.  The slack basis is
    the starting vertex, hence the ``h >= 0`` requirement.  Each tableau row is
    stored as a primitive integer vector (the true row is a positive multiple of
    it), which keeps entries far smaller than a common-denominator tableau.
    Returns ``(x, objective, pivots)`` with exact Fractions.
    """
    m = len(G)
    nv = len(c)
    if any(b < 0 for b in h):
        raise ValueError("simplex_max needs a feasible slack basis (h >= 0)")
    width = nv + m
    T = []
    for i in range(m):
        row = [int(v) for v in G[i]] + [0] * m + [int(h[i])]
        row[nv + i] = 1
        T.append(row)
    z = [-int(v) for v in c] + [0] * m + [0]
    basis = list(range(nv, nv + m))
    pivots = 0
    while True:
        e = next((j for j in range(width) if z[j] < 0), None)
        if e is None:
            break
        best = None
        for i in range(m):
            a = T[i][e]
            if a > 0:
                if best is None:
                    best = i
                    continue
                # compare T[i][-1]/a against T[best][-1]/T[best][e]
                lhs = T[i][-1] * T[best][e]
                rhs = T[best][-1] * a
                if lhs < rhs or (lhs == rhs and basis[i] < basis[best]):
                    best = i
        if best is None:
            raise UnboundedLPError(f"objective unbounded along column {e}")
        prow = T[best]
        p = prow[e]
        for i in range(m):
            f = T[i][e]
            if i == best or f == 0:
                continue
            T[i] = _primitive([u * p - f * v for u, v in zip(T[i], prow)])
        # the objective row carries a scale: keep z as true values
        f = z[e]
        if f:
            z = [u - Fraction(f * v, p) for u, v in zip(z, prow)]
        basis[best] = e
        pivots += 1
    x = [Fraction(0)] * nv
    for i, b in enumerate(basis):
        if b < nv:
            x[b] = Fraction(T[i][-1], T[i][b])
    return x, Fraction(z[-1]), pivots


def _primitive(row):
    g = gcd(*row)
    if g > 1:
        return [v // g for v in row]
    return row

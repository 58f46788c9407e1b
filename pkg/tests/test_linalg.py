import itertools
import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from nonsplit.errors import UnboundedLPError
from nonsplit.linalg import bareiss_det, bareiss_solve, simplex_max

small_ints = st.integers(min_value=-20, max_value=20)


@st.composite
def square_matrices(draw, max_n=6):
    n = draw(st.integers(min_value=1, max_value=max_n))
    return [draw(st.lists(small_ints, min_size=n, max_size=n)) for _ in range(n)]


@given(square_matrices())
def test_det_matches_sympy(m):
    assert bareiss_det(m) == sympy.Matrix(m).det()


@given(square_matrices(), st.data())
def test_solve_satisfies_system(m, data):
    n = len(m)
    b = data.draw(st.lists(small_ints, min_size=n, max_size=n))
    x = bareiss_solve(m, b)
    if sympy.Matrix(m).det() == 0:
        assert x is None
    else:
        for row, rhs in zip(m, b):
            assert sum(Fraction(a) * xi for a, xi in zip(row, x)) == rhs


def test_det_needs_row_swap():
    assert bareiss_det([[0, 1], [1, 0]]) == -1
    assert bareiss_det([[0, 0, 1], [0, 1, 0], [1, 0, 0]]) == -1


def _brute_force_lp(G, h, c):
    # enumerate basic solutions of G x <= h, x >= 0
    m, n = len(G), len(c)
    rows = [list(r) for r in G] + [[-int(i == j) for j in range(n)] for i in range(n)]
    rhs = list(h) + [0] * n
    best = None
    for combo in itertools.combinations(range(m + n), n):
        x = bareiss_solve([rows[i] for i in combo], [rhs[i] for i in combo])
        if x is None:
            continue
        if all(sum(Fraction(a) * v for a, v in zip(r, x)) <= b for r, b in zip(rows, rhs)):
            val = sum(ci * v for ci, v in zip(c, x))
            if best is None or val > best:
                best = val
    return best


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=1, max_value=4), st.integers(min_value=1, max_value=4), st.randoms())
def test_simplex_matches_vertex_enumeration(n, m, rnd):
    G = [[rnd.randint(-3, 5) for _ in range(n)] for _ in range(m)]
    # a row of ones keeps the problem bounded
    G.append([1] * n)
    h = [rnd.randint(0, 6) for _ in range(m)] + [rnd.randint(1, 9)]
    c = [rnd.randint(0, 4) for _ in range(n)]
    x, obj, _ = simplex_max(G, h, c)
    assert obj == sum(ci * xi for ci, xi in zip(c, x))
    assert all(xi >= 0 for xi in x)
    assert all(sum(a * xi for a, xi in zip(r, x)) <= b for r, b in zip(G, h))
    assert obj == _brute_force_lp(G, h, c)


def test_simplex_degenerate_terminates():
    # classic degenerate example; Bland's rule must not cycle
    G = [[Fraction(1, 2), Fraction(-11, 2), Fraction(-5, 2), 9],
         [Fraction(1, 2), Fraction(-3, 2), Fraction(-1, 2), 1],
         [1, 0, 0, 0]]
    G = [[int(v * 2) for v in row] for row in G]
    h = [0, 0, 2]
    x, obj, _ = simplex_max(G, h, [10, -57, -9, -24])
    assert obj == 1
    assert x == [1, 0, 1, 0]


def test_simplex_unbounded():
    with pytest.raises(UnboundedLPError):
        simplex_max([[1, -1]], [1], [0, 1])


def test_simplex_rejects_infeasible_start():
    with pytest.raises(ValueError):
        simplex_max([[1]], [-1], [1])

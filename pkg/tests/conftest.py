from fractions import Fraction

import pytest

from nonsplit.admissible import generate_extremal


@pytest.fixture(scope="session")
def P1():
    return generate_extremal(1)


@pytest.fixture(scope="session")
def P100():
    return generate_extremal(100)


def gaussian_constraint_value(coeffs, y):
    """sum_k a_k (1+y^2)^{d-k} Re{(1-iy)^k}, via Gaussian-rational powers of (1 - iy)."""
    d = len(coeffs)
    y = Fraction(y)
    re, im = Fraction(1), Fraction(0)
    total = Fraction(0)
    for k, a in enumerate(coeffs, 1):
        # (re + i im) * (1 - i y)
        re, im = re + im * y, im - re * y
        total += a * (1 + y * y) ** (d - k) * re
    return total


def constraint_value_in_u(coeffs, u):
    """Same quantity written in u = y^2, through (1-iy)^k expanded as a polynomial in y."""
    d = len(coeffs)
    u = Fraction(u)
    # poly[j] = (re_j, im_j): coefficient of y^j in (1 - iy)^k
    poly = [(Fraction(1), Fraction(0))]
    total = Fraction(0)
    for k, a in enumerate(coeffs, 1):
        nxt = [(Fraction(0), Fraction(0))] * (len(poly) + 1)
        for j, (r, i) in enumerate(poly):
            nr, ni = nxt[j]
            nxt[j] = (nr + r, ni + i)
            # times (-i y): (r + i*i_) * (-i) = i_ - i r
            nr, ni = nxt[j + 1]
            nxt[j + 1] = (nr + i, ni - r)
        poly = nxt
        re_part = sum((poly[j][0] * u ** (j // 2) for j in range(0, len(poly), 2)), Fraction(0))
        total += a * (1 + u) ** (d - k) * re_part
    return total

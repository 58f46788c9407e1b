"""The exponent quantity A(n, P) = sup_{lam > 0} a(lam; n, P).

All evaluation is done in mpmath at a configurable binary precision; the
coefficients of ``P`` are lifted from exact rationals at that precision.
"""

from dataclasses import dataclass

import mpmath
import numpy as np
from scipy.special import gammaincc

from .admissible import AdmissiblePolynomial
from .errors import PeakAtBoundaryError

DEFAULT_PRECISION = 256
LAMBDA_LO = mpmath.mpf("1e-6")
LAMBDA_CAP = 1000
GRID_POINTS = 10_000
GRID_SLACK = 1e-10
REL_TOL = mpmath.mpf("1e-12")

_INVPHI = (mpmath.sqrt(5) - 1) / 2


def _mpq(q):
    return mpmath.mpf(q.numerator) / q.denominator


def partial_exp(k, t):
    """E_{k-1}(t) = sum_{j<k} t^j / j!."""
    if k < 1:
        raise ValueError("k must be >= 1")
    t = mpmath.mpf(t)
    term = mpmath.mpf(1)
    total = mpmath.mpf(0)
    for j in range(k):
        total += term
        term = term * t / (j + 1)
    return total


def _weighted_partial_exp(P, lam):
    # sum_k a_k E_{k-1}(lam), accumulating E incrementally
    total = mpmath.mpf(0)
    E = mpmath.mpf(0)
    term = mpmath.mpf(1)
    for k, a in enumerate(P.coeffs, 1):
        E += term
        term = term * lam / k
        if a:
            total += _mpq(a) * E
    return total


def _tail_weighted(P, lam):
    # sum_k a_k lam^{k-1} / (k-1)!, which is S(lam) - S'(lam)
    total = mpmath.mpf(0)
    term = mpmath.mpf(1)
    for k, a in enumerate(P.coeffs, 1):
        if a:
            total += _mpq(a) * term
        term = term * lam / k
    return total


def _factor(n):
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    return mpmath.mpf(n) / (n - 1)


def a_of_lambda(n, P, lam):
    lam = mpmath.mpf(lam)
    if lam <= 0:
        raise ValueError("lambda must be positive")
    return (_mpq(P.value_at_one) - _factor(n) * mpmath.exp(-lam) * _weighted_partial_exp(P, lam)) / lam


def b_of_lambda(P, lam):
    lam = mpmath.mpf(lam)
    if lam <= 0:
        raise ValueError("lambda must be positive")
    return (_mpq(P.value_at_one) - mpmath.exp(-lam) * _weighted_partial_exp(P, lam)) / lam


def _a_derivative(n, P, lam, a_val=None):
    # d/dlam a = (c e^{-lam} sum a_k lam^{k-1}/(k-1)! - a) / lam
    if a_val is None:
        a_val = a_of_lambda(n, P, lam)
    return (_factor(n) * mpmath.exp(-lam) * _tail_weighted(P, lam) - a_val) / lam


@dataclass(frozen=True)
class ExponentResult:
    n: int
    polynomial: AdmissiblePolynomial
    A: mpmath.mpf
    lambda_star: mpmath.mpf
    precision_bits: int

    @property
    def four_A(self):
        return 4 * self.A

    @property
    def degree(self):
        return self.polynomial.degree

    def to_json(self, digits=40):
        return {
            "n": self.n,
            "degree": self.degree,
            "A": mpmath.nstr(self.A, digits),
            "four_A": mpmath.nstr(self.four_A, digits),
            "lambda": mpmath.nstr(self.lambda_star, digits),
            "precision_bits": self.precision_bits,
        }


def grid_scan(n, P, points=GRID_POINTS, lo=1e-6, hi=float(LAMBDA_CAP)):
    """Max of a(lam) over a log-spaced grid, evaluated in float64.

    Uses ``e^{-lam} E_{k-1}(lam) = Q(k, lam)`` (regularized upper incomplete
    gamma), so it shares no code with the mpmath evaluator.
    """
    lam = np.logspace(np.log10(lo), np.log10(hi), points)
    weights = np.array([float(a) for a in P.coeffs])
    ks = np.arange(1, P.degree + 1)
    mask = weights != 0
    tail = gammaincc(ks[mask][None, :], lam[:, None]) @ weights[mask]
    vals = (float(P.value_at_one) - n / (n - 1) * tail) / lam
    i = int(np.argmax(vals))
    return float(lam[i]), float(vals[i])


def _bracket(f, lo):
    hi = mpmath.mpf(1)
    f_hi = f(hi)
    while True:
        nxt = 2 * hi
        if nxt > LAMBDA_CAP:
            raise PeakAtBoundaryError(f"a(lambda) still increasing at lambda = {hi}")
        f_nxt = f(nxt)
        if f_nxt <= f_hi:
            return lo, nxt
        hi, f_hi = nxt, f_nxt


def _golden(f, lo, hi, rel_tol):
    c = hi - _INVPHI * (hi - lo)
    d = lo + _INVPHI * (hi - lo)
    fc, fd = f(c), f(d)
    while hi - lo > rel_tol * (lo + hi) / 2:
        if fc >= fd:
            hi, d, fd = d, c, fc
            c = hi - _INVPHI * (hi - lo)
            fc = f(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + _INVPHI * (hi - lo)
            fd = f(d)
    return (lo + hi) / 2


def _polish(n, P, lam, lo, hi):
    # Newton on a'(lam) = 0 with a bisection safeguard; golden section alone
    # stops at the requested lambda tolerance
    g = lambda x: _a_derivative(n, P, x)
    try:
        root = mpmath.findroot(g, (lo, hi), solver="anderson")
    except (ValueError, ZeroDivisionError):
        return lam
    if lo < root < hi:
        return root
    return lam


def maximize_A(n, P, precision=DEFAULT_PRECISION, rel_tol=REL_TOL, grid_points=GRID_POINTS):
    """Compute A(n, P) and its maximizer.

    Raises PeakAtBoundaryError if the maximizer sits on the search bracket or
    the float grid finds a higher value than the line search.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    with mpmath.workprec(precision):
        f = lambda x: a_of_lambda(n, P, x)
        lo, hi = _bracket(f, LAMBDA_LO)
        lam = _golden(f, lo, hi, mpmath.mpf(rel_tol))
        width = max(rel_tol * lam * 10, mpmath.mpf("1e-30"))
        if lam - lo <= width or hi - lam <= width:
            raise PeakAtBoundaryError(f"maximizer {lam} hit bracket [{lo}, {hi}]")
        step = rel_tol * lam * 100
        lam = _polish(n, P, lam, max(lam - step, lo), min(lam + step, hi))
        A = f(lam)
        result = ExponentResult(n, P, +A, +lam, precision)
    if grid_points:
        _, g_max = grid_scan(n, P, grid_points)
        if g_max > float(A) + GRID_SLACK:
            raise PeakAtBoundaryError(
                f"grid maximum {g_max} exceeds line-search value {float(A)} (n={n}, d={P.degree})")
    return result


def sup_b(P, precision=DEFAULT_PRECISION, rel_tol=REL_TOL):
    """sup_{lam>0} b(lam; P) with the same bracketing and golden-section search."""
    with mpmath.workprec(precision):
        f = lambda x: b_of_lambda(P, x)
        lo, hi = _bracket(f, LAMBDA_LO)
        lam = _golden(f, lo, hi, mpmath.mpf(rel_tol))
        return +f(lam), +lam


def quadratic_lower_bound(n):
    """1 - 2 n^{-2/3}, the closed-form lower bound on A(n, x + x^2)."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    return 1 - 2 * mpmath.power(n, mpmath.mpf(-2) / 3)


def quadratic_chain_value(n):
    """a(cbrt(6/n); n, x + x^2): the evaluation point behind the lower bound."""
    P = AdmissiblePolynomial((1, 1))
    return a_of_lambda(n, P, mpmath.cbrt(mpmath.mpf(6) / n))


def li_lower_bound(n):
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    return 1 - mpmath.sqrt(mpmath.mpf(2) / (n - 1))

"""Extremal admissible polynomials and exact admissibility certificates.

A candidate ``P(x) = sum_k a_k x^k`` (``a_1 = 1``, ``a_k >= 0``) is admissible
when ``Re P(1/(1+iy)) >= 0`` for every ``y >= 0``.  Clearing the denominator
``(1+y^2)^d`` turns this into nonnegativity of an even polynomial

    Q(y) = sum_j C_{2j}(a) y^{2j},   C_{2j}(a) = sum_k M[j][k] a_k,

whose coefficients are linear in ``a``.  The extremal ``P_d`` maximizes
``P(1) = C_0`` subject to ``C_{2j} >= 0``.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Optional

from . import sturm
from .errors import (DegeneratePolynomialError, SingularSystemError,
                     SolverMismatchError)
from .linalg import bareiss_solve, simplex_max
from .rational import fmt, from_json, to_json

DEFAULT_DEGREE_CAP = 200

FAST_PATH = "all-constraints-nonnegative"
STURM_NO_ROOT = "sturm-no-positive-root"
STURM_SIGNS = "sturm-root-sign-analysis"


@dataclass(frozen=True)
class AdmissiblePolynomial:
    """Coefficients ``(a_1, ..., a_d)``; the constant term is always zero."""

    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        if not coeffs:
            raise ValueError("need at least the linear coefficient")
        if coeffs[0] != 1:
            raise ValueError(f"a_1 must be 1 (P'(0) = 1), got {coeffs[0]}")
        if any(c < 0 for c in coeffs):
            raise ValueError("coefficients must be nonnegative")

    @property
    def degree(self):
        return len(self.coeffs)

    @property
    def value_at_one(self):
        return sum(self.coeffs, Fraction(0))

    def __call__(self, x):
        return sum((a * x ** k for k, a in enumerate(self.coeffs, 1)), Fraction(0))

    def __str__(self):
        terms = []
        for k, a in enumerate(self.coeffs, 1):
            if a == 0:
                continue
            mono = "x" if k == 1 else f"x^{k}"
            terms.append(mono if a == 1 else f"{fmt(a)}*{mono}")
        return " + ".join(terms)

    def to_json(self):
        return {"degree": self.degree, "coeffs": [to_json(a) for a in self.coeffs]}

    @classmethod
    def from_json(cls, obj):
        poly = cls(tuple(from_json(c) for c in obj["coeffs"]))
        if "degree" in obj and int(obj["degree"]) != poly.degree:
            raise ValueError(f"degree {obj['degree']} does not match {poly.degree} coefficients")
        return poly


@dataclass(frozen=True)
class AdmissibilityCertificate:
    admissible: bool
    method: str
    witness: Optional[Fraction] = None   # u0 = y0^2 with Q(u0) < 0
    witness_value: Optional[Fraction] = None

    @property
    def verdict(self):
        return "admissible" if self.admissible else "not-admissible"

    def to_json(self):
        out = {"verdict": self.verdict, "method": self.method}
        if self.witness is not None:
            out["witness_u0"] = to_json(self.witness)
            out["q_at_witness"] = to_json(self.witness_value)
        return out


@dataclass(frozen=True)
class ConstraintSystem:
    degree: int
    matrix: tuple = field(repr=False)

    def coefficients(self, a):
        """``[C_0, ..., C_{2(d-1)}]`` for the coefficient vector ``a``."""
        a = [Fraction(x) for x in a]
        if len(a) != self.degree:
            raise ValueError(f"expected {self.degree} coefficients, got {len(a)}")
        return [sum((m * x for m, x in zip(row, a) if m), Fraction(0)) for row in self.matrix]


def _entry(d, j, k):
    return sum((-1) ** i * comb(k, 2 * i) * comb(d - k, j - i)
               for i in range(min(k // 2, j) + 1))


@lru_cache(maxsize=None)
def build_constraint_matrix(d):
    if d < 1:
        raise ValueError(f"degree must be >= 1, got {d}")
    rows = tuple(tuple(_entry(d, j, k) for k in range(1, d + 1)) for j in range(d))
    return ConstraintSystem(d, rows)


def _check_degree(d, lo, cap):
    if not isinstance(d, int) or d < lo:
        raise ValueError(f"degree must be an integer >= {lo}, got {d!r}")
    if cap is not None and d > cap:
        raise ValueError(f"degree {d} exceeds the configured cap {cap}")


@lru_cache(maxsize=None)
def solve_square_system(d):
    """Solve ``C_{2j}(1, a_2, ..., a_d) = 0`` for ``j = 1..d-1``; returns ``(a_2..a_d)``."""
    _check_degree(d, 2, None)
    M = build_constraint_matrix(d).matrix
    lhs = [row[1:] for row in M[1:]]
    rhs = [-row[0] for row in M[1:]]
    x = bareiss_solve(lhs, rhs)
    if x is None:
        raise SingularSystemError(d)
    return tuple(x)


@lru_cache(maxsize=None)
def solve_lp(d):
    """Maximize ``P(1)`` over ``C_{2j} >= 0``, ``a_k >= 0`` by exact simplex; returns ``(a_2..a_d)``."""
    _check_degree(d, 2, None)
    M = build_constraint_matrix(d).matrix
    # C_{2j} >= 0  <=>  -sum_{k>=2} M[j][k] a_k <= M[j][1], and M[j][1] = binom(d-1, j) >= 0
    G = [[-v for v in row[1:]] for row in M[1:]]
    h = [row[0] for row in M[1:]]
    x, _, _ = simplex_max(G, h, [1] * (d - 1))
    return tuple(x)


@lru_cache(maxsize=None)
def generate_extremal(d, cap=DEFAULT_DEGREE_CAP):
    _check_degree(d, 1, cap)
    if d == 1:
        poly = AdmissiblePolynomial((Fraction(1),))
    else:
        sq = solve_square_system(d)
        lp = solve_lp(d)
        if sq != lp:
            diff = [k for k, (u, v) in enumerate(zip(sq, lp), 2) if u != v]
            raise SolverMismatchError(
                f"degree {d}: square-system and LP optima differ at a_k for k in {diff}")
        if any(a < 0 for a in sq):
            raise SolverMismatchError(f"degree {d}: tight-constraint solution has a negative coefficient")
        poly = AdmissiblePolynomial((Fraction(1),) + sq)
    cert = verify_admissible(poly)
    if not cert.admissible:
        raise SolverMismatchError(f"degree {d}: extremal polynomial failed certification")
    return poly


def constraint_polynomial(P):
    """``Q(u) = sum_j C_{2j} u^j`` as a coefficient list (``u = y^2``)."""
    return sturm.trim(build_constraint_matrix(P.degree).coefficients(P.coeffs))


def verify_admissible(P):
    Q = constraint_polynomial(P)
    if not Q:
        raise DegeneratePolynomialError("constraint polynomial vanishes identically")
    if all(c >= 0 for c in Q):
        return AdmissibilityCertificate(True, FAST_PATH)
    intervals = sturm.isolate_positive_roots(Q)
    if not intervals:
        # constant sign on (0, inf); Q(0) = P(1) > 0 fixes it
        probe = Fraction(1)
        if sturm.evaluate(Q, probe) < 0:
            return AdmissibilityCertificate(False, STURM_NO_ROOT, probe, sturm.evaluate(Q, probe))
        return AdmissibilityCertificate(True, STURM_NO_ROOT)
    # each hi lies strictly between consecutive distinct roots, or past the last one
    for _, hi in intervals:
        v = sturm.evaluate(Q, hi)
        if v < 0:
            return AdmissibilityCertificate(False, STURM_SIGNS, hi, v)
    return AdmissibilityCertificate(True, STURM_SIGNS)

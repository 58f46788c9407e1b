"""Least non-split primes of concrete fields K = Q[x]/(f).

Splitting is read off ``f mod p``: for ``p`` not dividing ``disc(f)``, ``p``
splits completely in ``K`` exactly when ``f`` has ``deg f`` distinct roots
modulo ``p``, i.e. ``deg gcd(x^p - x, f) = deg f``.  Primes dividing
``disc(f)`` may be index divisors, where that test says nothing; they are
decided exactly for quadratic fields and otherwise only when ``f`` has no
root mod ``p`` (no degree-1 prime can lie above ``p`` then).
"""

import csv
import enum
import io
import math
import re
from dataclasses import dataclass, field
from functools import lru_cache

from sympy import factorint

from .admissible import generate_extremal
from .errors import DegeneratePolynomialError, PolynomialParseError, PrimeNotFoundError
from .exponent import DEFAULT_PRECISION, maximize_A
from .linalg import bareiss_det
from .primes import iter_primes

DEFAULT_PRIME_CAP = 10 ** 7


class Classification(enum.Enum):
    SPLITS_COMPLETELY = "splits-completely"
    NON_SPLIT = "non-split"
    DIVIDES_POLY_DISC = "divides-poly-disc"


class Variant(enum.Enum):
    ANY_NON_SPLIT = "any"            # least prime not splitting completely
    UNRAMIFIED_NON_SPLIT = "unramified"


@dataclass(frozen=True)
class IntPolynomial:
    """Monic integer polynomial; ``coeffs`` are lowest degree first."""

    coeffs: tuple

    def __post_init__(self):
        c = [int(v) for v in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))
        if len(c) < 3:
            raise ValueError("need degree >= 2")
        if c[-1] != 1:
            raise ValueError(f"polynomial must be monic, leading coefficient is {c[-1]}")

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __str__(self):
        parts = []
        for k in range(self.degree, -1, -1):
            a = self.coeffs[k]
            if a == 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            mag = abs(a)
            body = str(mag) if k == 0 else (mono if mag == 1 else f"{mag}*{mono}")
            if not parts:
                parts.append(body if a > 0 else f"-{body}")
            else:
                parts.append(f"{'+' if a > 0 else '-'} {body}")
        return " ".join(parts)


_TERM = re.compile(r"([+-])(\d*)\*?(?:(x)(?:\^(\d+))?)?")


def parse_polynomial(text):
    """Parse ``"x^3 - x - 1"`` style input (integer coefficients, one variable)."""
    s = re.sub(r"\s+", "", text)
    if not s:
        raise PolynomialParseError("empty polynomial")
    if s[0] not in "+-":
        s = "+" + s
    coeffs = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos or (not m.group(2) and not m.group(3)):
            raise PolynomialParseError(f"cannot parse {text!r} near position {pos}")
        sign, num, var, exp = m.groups()
        if exp is not None and var is None:
            raise PolynomialParseError(f"exponent without variable in {text!r}")
        k = 0 if var is None else int(exp or 1)
        a = int(num) if num else 1
        coeffs[k] = coeffs.get(k, 0) + (a if sign == "+" else -a)
        pos = m.end()
    n = max(coeffs)
    try:
        return IntPolynomial(tuple(coeffs.get(k, 0) for k in range(n + 1)))
    except ValueError as exc:
        raise PolynomialParseError(f"{text!r}: {exc}") from None


def resultant(f, g):
    """Res(f, g) as the determinant of the Sylvester matrix (fraction-free)."""
    n, m = len(f) - 1, len(g) - 1
    size = n + m
    rows = []
    for i in range(m):
        row = [0] * size
        for j, c in enumerate(reversed(f)):
            row[i + j] = c
        rows.append(row)
    for i in range(n):
        row = [0] * size
        for j, c in enumerate(reversed(g)):
            row[i + j] = c
        rows.append(row)
    return bareiss_det(rows)


def discriminant(f):
    n = f.degree
    df = [k * f.coeffs[k] for k in range(1, n + 1)]
    d = (-1) ** (n * (n - 1) // 2) * resultant(list(f.coeffs), df)
    if d == 0:
        raise DegeneratePolynomialError(f"{f} has a repeated factor (zero discriminant)")
    return d


def has_rational_root(f):
    c0 = f.coeffs[0]
    if c0 == 0:
        return True
    for q in _divisors(abs(c0)):
        for r in (q, -q):
            if sum(c * r ** k for k, c in enumerate(f.coeffs)) == 0:
                return True
    return False


def _divisors(n):
    out = set()
    for i in range(1, math.isqrt(n) + 1):
        if n % i == 0:
            out.update((i, n // i))
    return sorted(out)


def check_irreducible(f):
    """Return a flag list; raises for degree <= 3 polynomials with a rational root."""
    if f.degree <= 3:
        if has_rational_root(f):
            raise DegeneratePolynomialError(f"{f} has a rational root, so it is reducible")
        return []
    return ["irreducibility-trusted"]


# polynomials mod p: lists of ints, lowest degree first, no trailing zeros

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _mod_poly(a, f, p):
    a = [c % p for c in a]
    _trim(a)
    n = len(f) - 1
    inv = pow(f[-1], -1, p)
    while len(a) - 1 >= n:
        c = a[-1] * inv % p
        shift = len(a) - 1 - n
        for i, fc in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fc) % p
        _trim(a)
    return a


def _mulmod(a, b, f, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _mod_poly(out, f, p)


def _gcd_mod(a, b, p):
    a, b = _trim([c % p for c in a]), _trim([c % p for c in b])
    while b:
        a, b = b, _mod_poly(a, b, p)
    return a


def x_pow_mod(e, f, p):
    """x^e modulo (f, p) by square-and-multiply."""
    fp = _trim([c % p for c in f])
    result = [1]
    base = _mod_poly([0, 1], fp, p)
    while e:
        if e & 1:
            result = _mulmod(result, base, fp, p)
        base = _mulmod(base, base, fp, p)
        e >>= 1
    return result


def distinct_roots_mod_p(f, p):
    """deg gcd(x^p - x, f mod p), the number of distinct roots of f in F_p."""
    coeffs = list(f.coeffs) if isinstance(f, IntPolynomial) else list(f)
    xp = x_pow_mod(p, coeffs, p)
    xp = xp + [0] * max(0, 2 - len(xp))
    xp[1] -= 1
    g = _gcd_mod(coeffs, xp, p)
    return len(g) - 1


def classify_prime(f, p, disc=None):
    if disc is None:
        disc = discriminant(f)
    if disc % p == 0:
        return Classification.DIVIDES_POLY_DISC
    if distinct_roots_mod_p(f, p) == f.degree:
        return Classification.SPLITS_COMPLETELY
    return Classification.NON_SPLIT


def squarefree_kernel(n):
    """Signed squarefree part: n = m^2 * kernel."""
    if n == 0:
        raise ValueError("zero has no squarefree kernel")
    k = -1 if n < 0 else 1
    for q, e in factorint(abs(n)).items():
        if e % 2:
            k *= q
    return k


def quadratic_field_discriminant(f):
    d0 = squarefree_kernel(discriminant(f))
    return d0 if d0 % 4 == 1 else 4 * d0


def kronecker(a, p):
    """Kronecker symbol (a/p) for a prime p."""
    if p == 2:
        if a % 2 == 0:
            return 0
        return 1 if a % 8 in (1, 7) else -1
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


@dataclass(frozen=True)
class SplitReport:
    polynomial: IntPolynomial
    disc_f: int
    variant: Variant
    least_prime: int = None
    bound_exponent_used: float = None
    log_bound: float = None
    within_bound: bool = None
    flags: tuple = field(default_factory=tuple)

    def to_json(self):
        return {
            "polynomial": str(self.polynomial),
            "degree": self.polynomial.degree,
            "disc_f": str(self.disc_f),
            "variant": self.variant.value,
            "least_prime": self.least_prime,
            "bound_exponent": self.bound_exponent_used,
            "log_bound": self.log_bound,
            "within_bound": self.within_bound,
            "flags": list(self.flags),
        }


def least_nonsplit(f, variant=Variant.ANY_NON_SPLIT, prime_cap=DEFAULT_PRIME_CAP):
    """Scan primes upward for the least one that fails to split completely."""
    if prime_cap < 2:
        raise ValueError("prime_cap must be >= 2")
    variant = Variant(variant)
    flags = check_irreducible(f)
    disc = discriminant(f)
    dK = quadratic_field_discriminant(f) if f.degree == 2 else None
    for p in iter_primes(prime_cap):
        if disc % p:
            if distinct_roots_mod_p(f, p) < f.degree:
                return SplitReport(f, disc, variant, p, flags=tuple(flags))
            continue
        if dK is not None:
            k = kronecker(dK, p)
            if k == 1:
                flags.append(f"index-divisor-{p}-splits")
                continue
            if k == 0 and variant is Variant.UNRAMIFIED_NON_SPLIT:
                continue
            if k == -1:
                flags.append(f"index-divisor-{p}-inert")
            return SplitReport(f, disc, variant, p, flags=tuple(flags))
        if variant is Variant.UNRAMIFIED_NON_SPLIT:
            # ramification is invisible without the maximal order
            flags.append(f"{p}-divides-disc-skipped")
            continue
        if distinct_roots_mod_p(f, p) == 0:
            flags.append(f"{p}-divides-disc-no-root")
            return SplitReport(f, disc, variant, p, flags=tuple(flags))
        flags.append(f"{p}-divides-disc-undecided-skipped")
    raise PrimeNotFoundError(prime_cap)


@lru_cache(maxsize=None)
def _exponent_A(n, d, precision):
    return float(maximize_A(n, generate_extremal(d), precision).A)


def compare_bound(f, d=100, epsilon=0.01, variant=Variant.ANY_NON_SPLIT,
                  prime_cap=DEFAULT_PRIME_CAP, precision=DEFAULT_PRECISION):
    """least_nonsplit plus the implied-constant-free comparison p <= |disc f|^exponent.

    The comparison is a sanity check, not a test of any theorem: the true
    bound carries an unknown constant and uses disc(K), which divides disc(f).
    """
    report = least_nonsplit(f, variant, prime_cap)
    n = f.degree
    A = _exponent_A(n, d, precision)
    exponent = (1 + epsilon) / (4 * A * (n - 1))
    log_bound = exponent * math.log(abs(report.disc_f))
    within = math.log(report.least_prime) <= log_bound
    flags = report.flags + ("constant-free-comparison",)
    return SplitReport(f, report.disc_f, report.variant, report.least_prime,
                       exponent, log_bound, within, flags)


CSV_COLUMNS = ["polynomial", "degree", "disc_f", "variant", "least_prime", "log_bound", "flags"]


def read_batch(lines):
    """Parse one polynomial per line; blank lines and ``#`` comments are skipped."""
    out = []
    for lineno, line in enumerate(lines, 1):
        text = line.split("#", 1)[0].strip()
        if not text:
            continue
        try:
            out.append(parse_polynomial(text))
        except PolynomialParseError as exc:
            raise PolynomialParseError(f"line {lineno}: {exc}") from None
    return out


def report_row(rep):
    return {
        "polynomial": str(rep.polynomial),
        "degree": rep.polynomial.degree,
        "disc_f": rep.disc_f,
        "variant": rep.variant.value,
        "least_prime": "not-found" if rep.least_prime is None else rep.least_prime,
        "log_bound": "" if rep.log_bound is None else f"{rep.log_bound:.10g}",
        "flags": ";".join(rep.flags),
    }


def run_batch(polys, d=100, epsilon=0.01, variant=Variant.ANY_NON_SPLIT,
              prime_cap=DEFAULT_PRIME_CAP, precision=DEFAULT_PRECISION):
    """Yield one SplitReport per polynomial; misses become not-found reports."""
    for f in polys:
        try:
            yield compare_bound(f, d, epsilon, variant, prime_cap, precision)
        except PrimeNotFoundError as exc:
            yield SplitReport(f, discriminant(f), Variant(variant),
                              flags=(f"not-found-below-{exc.cap}",))


def write_csv(reports, stream):
    w = csv.DictWriter(stream, fieldnames=CSV_COLUMNS, lineterminator="\n")
    w.writeheader()
    for rep in reports:
        w.writerow(report_row(rep))
        if hasattr(stream, "flush"):
            stream.flush()


def batch_csv(reports):
    buf = io.StringIO()
    write_csv(reports, buf)
    return buf.getvalue()

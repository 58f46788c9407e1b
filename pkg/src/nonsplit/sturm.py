"""Univariate polynomials over the rationals and Sturm-sequence root counting.

Polynomials are plain lists of Fractions, lowest degree first, with no
trailing zeros (the zero polynomial is ``[]``).
"""

from fractions import Fraction


def trim(p):
    p = [Fraction(c) for c in p]
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p):
    return len(p) - 1


def evaluate(p, x):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def derivative(p):
    return trim([k * p[k] for k in range(1, len(p))])


def divmod_poly(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        f = a[-1] / lead
        q[shift] = f
        for i, c in enumerate(b):
            a[i + shift] -= f * c
        a = trim(a)
    return trim(q), a


def monic(p):
    return [c / p[-1] for c in p] if p else []


def gcd_poly(a, b):
    a, b = trim(a), trim(b)
    while b:
        a, b = b, divmod_poly(a, b)[1]
    return monic(a)


def squarefree_part(p):
    p = trim(p)
    g = gcd_poly(p, derivative(p))
    if degree(g) <= 0:
        return p
    return divmod_poly(p, g)[0]


def sturm_sequence(p):
    seq = [trim(p), derivative(p)]
    while seq[-1]:
        r = divmod_poly(seq[-2], seq[-1])[1]
        if not r:
            break
        seq.append([-c for c in r])
    return [s for s in seq if s]


def _variations(values):
    signs = [v > 0 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sign_changes_at(seq, x):
    return _variations([evaluate(s, x) for s in seq])


def sign_changes_at_infinity(seq):
    return _variations([s[-1] for s in seq])


def count_roots(seq, a, b=None):
    """Number of distinct roots in ``(a, b]``; ``b=None`` means ``+inf``."""
    va = sign_changes_at(seq, a)
    vb = sign_changes_at_infinity(seq) if b is None else sign_changes_at(seq, b)
    return va - vb


def cauchy_bound(p):
    lead = abs(p[-1])
    return 1 + max((abs(c) / lead for c in p[:-1]), default=Fraction(0))


def isolate_positive_roots(p):
    """Disjoint intervals ``(lo, hi]``, each holding one distinct root of ``p`` in
    ``(0, inf)``, sorted, with ``p(hi) != 0``.
    """
    sf = squarefree_part(p)
    if degree(sf) < 1:
        return []
    seq = sturm_sequence(sf)
    bound = cauchy_bound(sf)
    out = []
    stack = [(Fraction(0), bound)]
    while stack:
        lo, hi = stack.pop()
        n = count_roots(seq, lo, hi)
        if n == 0:
            continue
        if n == 1:
            if evaluate(sf, hi) == 0:
                # exact rational root at hi: widen past it into a root-free gap
                w = (hi - lo) or Fraction(1)
                while count_roots(seq, hi, hi + w) != 0:
                    w /= 2
                hi = hi + w
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        stack.append((mid, hi))
        stack.append((lo, mid))
    return sorted(out)

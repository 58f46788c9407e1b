"""Incremental segmented sieve of Eratosthenes."""

from functools import lru_cache
from itertools import compress
from math import isqrt

BLOCK = 1 << 20


def _small_primes(n):
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p::p] = bytes(len(range(p * p, n + 1, p)))
    return [i for i, v in enumerate(sieve) if v]


@lru_cache(maxsize=8)
def _segment(lo, hi):
    base = _small_primes(isqrt(hi - 1))
    seg = bytearray([1]) * (hi - lo)
    for p in base:
        start = max(p * p, (lo + p - 1) // p * p)
        if start < hi:
            seg[start - lo::p] = bytes(len(range(start, hi, p)))
    return tuple(compress(range(lo, hi), seg))


def iter_primes(limit=None, block=BLOCK):
    """Yield primes in increasing order, up to ``limit`` inclusive if given.

    Sieves in fixed blocks; the most recent segments are cached, so repeated
    short scans (one per polynomial in a batch) reuse the first block.
    """
    lo = 2
    while limit is None or lo <= limit:
        hi = lo + block
        for p in _segment(lo, hi):
            if limit is not None and p > limit:
                return
            yield p
        lo = hi


def is_prime(n):
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # deterministic for n < 3.3e24
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True

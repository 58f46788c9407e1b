import csv
import io
import math

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from nonsplit.errors import DegeneratePolynomialError, PolynomialParseError, PrimeNotFoundError
from nonsplit.numfield import (Classification, IntPolynomial, Variant, batch_csv,
                               classify_prime, compare_bound, discriminant,
                               distinct_roots_mod_p, kronecker, least_nonsplit,
                               parse_polynomial, read_batch, run_batch, squarefree_kernel,
                               x_pow_mod)
from nonsplit.primes import is_prime, iter_primes


def roots_mod_p(coeffs, p):
    return sum(1 for r in range(p) if sum(c * pow(r, k, p) for k, c in enumerate(coeffs)) % p == 0)


def brute_least_nonsplit_quadratic(d, unramified):
    """Least p with x^2 - d not splitting, by residue scanning and the field discriminant."""
    d0 = squarefree_kernel(4 * d)
    dK = d0 if d0 % 4 == 1 else 4 * d0
    p = 2
    while True:
        if sympy.isprime(p):
            ramified = dK % p == 0
            if p == 2:
                splits = not ramified and dK % 8 == 1
            else:
                splits = not ramified and any((r * r - dK) % p == 0 for r in range(p))
            if unramified:
                if not ramified and not splits:
                    return p
            elif not splits:
                return p
        p += 1


def test_parse():
    assert parse_polynomial("x^3 - x - 1").coeffs == (-1, -1, 0, 1)
    assert parse_polynomial(" x^2+1 ").coeffs == (1, 0, 1)
    assert parse_polynomial("x^2 - 3*x + 2x - 5").coeffs == (-5, -1, 1)
    assert str(parse_polynomial("x^4 - 2x^2 + 9")) == "x^4 - 2*x^2 + 9"
    for bad in ("", "2x^2 + 1", "x^", "x^2 + y", "x + 1", "x^2 ++ 1"):
        with pytest.raises(PolynomialParseError):
            parse_polynomial(bad)


@pytest.mark.parametrize("text, disc", [
    ("x^2 - 5", 20), ("x^2 + 1", -4), ("x^3 - x - 1", -23), ("x^2 - x - 1", 5),
    ("x^5 - x - 1", 2869), ("x^4 + 1", 256),
])
def test_discriminant(text, disc):
    assert discriminant(parse_polynomial(text)) == disc


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-9, 9), min_size=2, max_size=5))
def test_discriminant_matches_sympy(low):
    f = IntPolynomial(tuple(low) + (1,))
    x = sympy.symbols("x")
    expected = sympy.discriminant(sum(c * x ** k for k, c in enumerate(f.coeffs)), x)
    if expected == 0:
        with pytest.raises(DegeneratePolynomialError):
            discriminant(f)
    else:
        assert discriminant(f) == expected


def test_classify_examples():
    f = parse_polynomial("x^2 - 5")
    assert pow(4, 2, 11) == 5
    assert classify_prime(f, 11) is Classification.SPLITS_COMPLETELY
    assert classify_prime(f, 2) is Classification.DIVIDES_POLY_DISC
    assert classify_prime(parse_polynomial("x^2 - x - 1"), 2) is Classification.NON_SPLIT


def test_x_pow_mod_is_fermat():
    f = parse_polynomial("x^3 - x - 1")
    # every irreducible factor mod p has degree 1, 2 or 3, so x^(p^6) = x
    for p in (3, 5, 7, 101):
        assert x_pow_mod(p ** 6, f.coeffs, p) == [0, 1]
    # irreducible mod 3, hence already x^(p^3) = x
    assert x_pow_mod(27, f.coeffs, 3) == [0, 1]


def test_gcd_degree_counts_roots_exhaustively():
    import random
    rnd = random.Random(3)
    for p in iter_primes(97):
        for _ in range(12):
            n = rnd.randint(2, 5)
            coeffs = [rnd.randint(-50, 50) for _ in range(n)] + [1]
            assert distinct_roots_mod_p(coeffs, p) == roots_mod_p(coeffs, p)


def test_euler_criterion():
    ds = [d for d in range(-500, 501) if d not in (0, 1) and squarefree_kernel(d) == d]
    for d in ds:
        f = IntPolynomial((-d, 0, 1))
        for p in iter_primes(1000):
            if p == 2 or (2 * d) % p == 0:
                continue
            splits = classify_prime(f, p) is Classification.SPLITS_COMPLETELY
            assert splits == (pow(d, (p - 1) // 2, p) == 1)


def test_kronecker():
    assert kronecker(5, 2) == -1 and kronecker(17, 2) == 1 and kronecker(-4, 2) == 0
    assert kronecker(3, 11) == 1 and kronecker(2, 3) == -1


@pytest.mark.parametrize("text, variant, expected", [
    ("x^2 + 1", Variant.ANY_NON_SPLIT, 2),
    ("x^2 + 1", Variant.UNRAMIFIED_NON_SPLIT, 3),
    ("x^2 - x - 1", Variant.ANY_NON_SPLIT, 2),
    ("x^3 - x - 1", Variant.ANY_NON_SPLIT, 2),
    ("x^2 - 5", Variant.ANY_NON_SPLIT, 2),
])
def test_least_nonsplit_examples(text, variant, expected):
    assert least_nonsplit(parse_polynomial(text), variant).least_prime == expected


def test_least_nonsplit_brute_force_x2_plus_1():
    assert brute_least_nonsplit_quadratic(-1, unramified=False) == 2
    assert brute_least_nonsplit_quadratic(-1, unramified=True) == 3


def test_index_divisor_flags():
    # x^2 - 17 has disc 68; 2 divides it but 17 = 1 mod 8, so 2 splits in Q(sqrt 17)
    rep = least_nonsplit(parse_polynomial("x^2 - 17"), Variant.ANY_NON_SPLIT)
    assert "index-divisor-2-splits" in rep.flags
    assert rep.least_prime == 3


def test_unramified_index_divisor_counts():
    # disc(x^2 - 5) = 20 but 2 is unramified and inert in Q(sqrt 5)
    rep = least_nonsplit(parse_polynomial("x^2 - 5"), Variant.UNRAMIFIED_NON_SPLIT)
    assert rep.least_prime == 2 and "index-divisor-2-inert" in rep.flags
    assert brute_least_nonsplit_quadratic(5, unramified=True) == 2


def test_higher_degree_disc_primes_flagged():
    # x^3 - 2: disc -108; 2 and 3 ramify, f has a root mod both
    rep = least_nonsplit(parse_polynomial("x^3 - 2"), Variant.ANY_NON_SPLIT)
    assert any("undecided" in fl for fl in rep.flags)
    assert rep.least_prime == 5  # x^3 - 2 has a single root mod 5
    rep_u = least_nonsplit(parse_polynomial("x^3 - 2"), Variant.UNRAMIFIED_NON_SPLIT)
    assert rep_u.disc_f % rep_u.least_prime != 0
    assert "2-divides-disc-skipped" in rep_u.flags and "3-divides-disc-skipped" in rep_u.flags


def test_reducible_rejected():
    with pytest.raises(DegeneratePolynomialError):
        least_nonsplit(parse_polynomial("x^2 - 4"))
    with pytest.raises(DegeneratePolynomialError):
        least_nonsplit(parse_polynomial("x^3 - 1"))


def test_not_found_reports_cap():
    # 2 ramifies in Q(sqrt 2); the first unramified non-split prime is 3
    with pytest.raises(PrimeNotFoundError) as exc:
        least_nonsplit(parse_polynomial("x^2 - 2"), Variant.UNRAMIFIED_NON_SPLIT, prime_cap=2)
    assert exc.value.cap == 2


def test_determinism():
    f = parse_polynomial("x^4 - 2x^2 + 9")
    assert least_nonsplit(f) == least_nonsplit(f)


def test_compare_bound_composition():
    rep = compare_bound(parse_polynomial("x^2 + 1"), d=1, epsilon=0.01,
                        variant=Variant.UNRAMIFIED_NON_SPLIT)
    assert rep.least_prime == 3
    assert rep.log_bound == pytest.approx(rep.bound_exponent_used * math.log(4))
    assert rep.bound_exponent_used == pytest.approx(1.01 / 1.4934585, rel=1e-6)
    rep3 = compare_bound(parse_polynomial("x^3 - x - 1"), d=100, epsilon=0.01)
    assert rep3.least_prime == 2


def test_batch_csv_and_parse_errors():
    polys = read_batch(["x^2 + 1", "# comment", "", "x^2 - x - 1", "x^3 - x - 1"])
    text = batch_csv(run_batch(polys, d=1, variant=Variant.ANY_NON_SPLIT))
    rows = list(csv.DictReader(io.StringIO(text)))
    assert [r["polynomial"] for r in rows] == ["x^2 + 1", "x^2 - x - 1", "x^3 - x - 1"]
    assert list(rows[0]) == ["polynomial", "degree", "disc_f", "variant", "least_prime",
                             "log_bound", "flags"]
    assert text == batch_csv(run_batch(polys, d=1, variant=Variant.ANY_NON_SPLIT))
    with pytest.raises(PolynomialParseError, match="line 2"):
        read_batch(["x^2 + 1", "x^2 + y"])


def test_batch_not_found_row():
    rows = list(run_batch([parse_polynomial("x^2 - 2")], d=1,
                          variant=Variant.UNRAMIFIED_NON_SPLIT, prime_cap=2))
    assert rows[0].least_prime is None and "not-found-below-2" in rows[0].flags


def test_is_prime():
    assert [n for n in range(60) if is_prime(n)] == list(iter_primes(59))
    assert is_prime(2 ** 61 - 1) and not is_prime(2 ** 61 + 1)


@pytest.mark.slow
def test_all_quadratics_up_to_10_4():
    ds = [d for d in range(-10 ** 4, 10 ** 4 + 1)
          if d not in (0, 1) and squarefree_kernel(d) == d]
    polys = [IntPolynomial((-d, 0, 1)) for d in ds]
    for variant in (Variant.ANY_NON_SPLIT, Variant.UNRAMIFIED_NON_SPLIT):
        reps = list(run_batch(polys, d=100, variant=variant, prime_cap=10 ** 5))
        assert all(r.least_prime is not None for r in reps)
        for d, r in list(zip(ds, reps))[::97]:
            assert r.least_prime == brute_least_nonsplit_quadratic(d, variant is Variant.UNRAMIFIED_NON_SPLIT)

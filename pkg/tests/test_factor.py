"""Arithmetic kernel checked against independent oracles (sympy) and
structural invariants."""

import os
import random

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from deficia.factor import (
    DivisorCapError,
    Factorization,
    divisor_list,
    factorize,
    is_perfect_square,
    is_prime,
    omega,
    sigma,
    tau,
)


def test_factorize_round_trip_small():
    for n in range(1, 2000):
        f = factorize(n)
        prod = 1
        for p, e in f.factors:
            assert e >= 1 and is_prime(p)
            prod *= p**e
        assert prod == n
        assert [p for p, _ in f.factors] == sorted({p for p, _ in f.factors})


def test_sigma_tau_omega_against_sympy():
    rng = random.Random(20260826)
    samples = list(range(1, 300)) + [rng.randrange(1, 10**12) for _ in range(200)]
    for n in samples:
        assert sigma(n) == sympy.divisor_sigma(n)
        assert tau(n) == sympy.divisor_count(n)
        assert omega(n) == len(sympy.factorint(n))


def test_is_prime_against_sympy():
    rng = random.Random(7)
    for n in list(range(1, 2000)) + [rng.randrange(2, 10**15) for _ in range(300)]:
        assert is_prime(n) == sympy.isprime(n)


def test_divisor_list_complete_and_sorted():
    for n in (1, 2, 12, 360, 1521, 2**10, 3**4 * 5**2):
        divs = divisor_list(n)
        assert divs == sorted(divs)
        assert len(divs) == tau(n)
        assert all(n % d == 0 for d in divs)
        assert divs[0] == 1 and divs[-1] == n


def test_divisor_cap_enforced():
    highly_composite = 2**6 * 3**4 * 5**2 * 7 * 11 * 13 * 17 * 19
    with pytest.raises(DivisorCapError):
        divisor_list(highly_composite, cap=10)


def test_is_perfect_square():
    squares = {i * i for i in range(200)}
    for n in range(1, 40000):
        assert is_perfect_square(n) == (n in squares)


@given(st.integers(min_value=1, max_value=2**50))
@settings(max_examples=200, deadline=None)
def test_factorize_round_trip_property(n):
    f = factorize(n)
    prod = 1
    for p, e in f.factors:
        prod *= p**e
    assert prod == n
    assert sigma(f) == sympy.divisor_sigma(n)


def test_factorization_value_mismatch_rejected():
    with pytest.raises(ValueError):
        Factorization(10, ((2, 1), (3, 1)))


@pytest.mark.skipif(
    os.environ.get("DEFICIA_FULL_PROPS") != "1",
    reason="full 10^5-sample 64-bit round-trip runs only with DEFICIA_FULL_PROPS=1",
)
def test_factorize_round_trip_full():
    rng = random.Random(1)
    for _ in range(100_000):
        n = rng.randrange(1, 2**64)
        f = factorize(n)
        prod = 1
        for p, e in f.factors:
            prod *= p**e
        assert prod == n


def test_factorize_round_trip_sampled_64bit():
    rng = random.Random(2)
    for _ in range(2000):
        n = rng.randrange(1, 2**64)
        f = factorize(n)
        prod = 1
        for p, e in f.factors:
            assert is_prime(p)
            prod *= p**e
        assert prod == n

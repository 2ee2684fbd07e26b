"""Arithmetic helpers: primality, factorization, radicals, primitive roots."""

import math

import pytest
from hypothesis import given, strategies as st

from derangements.numbers import (divisors, factorize, is_prime,
                                  prime_divisors, primitive_root_mod, radical)


def test_small_primes():
    primes = [n for n in range(60) if is_prime(n)]
    assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31,
                      37, 41, 43, 47, 53, 59]


def test_known_factorizations():
    assert factorize(1) == {}
    assert factorize(2**7 * 3**2 * 7**2 * 127) == {2: 7, 3: 2, 7: 2, 127: 1}
    assert prime_divisors(7920) == [2, 3, 5, 11]
    assert radical(63) == 21
    assert radical(1) == 1
    assert divisors(12) == [1, 2, 3, 4, 6, 12]


@given(st.integers(min_value=1, max_value=200000))
def test_factorize_reconstructs(n):
    f = factorize(n)
    prod = 1
    for p, e in f.items():
        assert is_prime(p)
        prod *= p ** e
    assert prod == n


@given(st.integers(min_value=1, max_value=5000))
def test_divisors_exact(n):
    ds = divisors(n)
    assert ds == sorted(d for d in range(1, n + 1) if n % d == 0)


@given(st.integers(min_value=2, max_value=5000))
def test_radical_is_squarefree_part(n):
    r = radical(n)
    assert n % r == 0
    assert set(prime_divisors(r)) == set(prime_divisors(n))
    for p in prime_divisors(r):
        assert r % (p * p) != 0


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 127])
def test_primitive_root(p):
    g = primitive_root_mod(p)
    seen = {pow(g, k, p) for k in range(1, p)}
    assert seen == set(range(1, p))


def test_primitive_root_rejects_composite():
    with pytest.raises(ValueError):
        primitive_root_mod(8)


@given(st.integers(min_value=0, max_value=10**6))
def test_is_prime_agrees_with_trial_division(n):
    naive = n >= 2 and all(n % d for d in range(2, int(math.isqrt(n)) + 1))
    assert is_prime(n) == naive

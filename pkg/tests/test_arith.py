import math

import pytest
from hypothesis import given, settings, strategies as st

from abelian_points.arith import (
    abelian_ramification_obstruction,
    catalan_solutions,
    crt,
    crt_search,
    cyclotomic_ramification,
    euler_phi,
    factor_product,
    factorize,
    is_prime,
    is_prime_power,
    multiplicative_order,
    next_prime,
    prime_power,
    primes_up_to,
    smallest_prime_factor,
    valuation,
)
from abelian_points.errors import NotFoundError, ResourceLimitError

from conftest import naive_is_prime


def test_is_prime_matches_trial_division():
    assert [n for n in range(-5, 5000) if is_prime(n)] == [n for n in range(5000) if naive_is_prime(n)]


def test_is_prime_large_and_carmichael():
    assert is_prime(2**61 - 1)
    assert is_prime(2**127 - 1)
    assert not is_prime((2**61 - 1) * (2**31 - 1))
    for n in (561, 1105, 1729, 3215031751, 3825123056546413051):
        assert not is_prime(n)


def test_selmer_discriminant_neighbour_is_composite():
    assert not is_prime(1555201)
    assert 1555201 == 97 * 16033


def test_factorize_selmer_constant():
    assert factorize(1555200) == [(2, 8), (3, 5), (5, 2)]
    assert valuation(1555200, 2) == 8


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=1, max_value=10**15))
def test_factorize_reconstructs(n):
    fac = factorize(n)
    assert factor_product(fac) == n
    assert all(is_prime(p) and e >= 1 for p, e in fac)
    assert [p for p, _ in fac] == sorted(p for p, _ in fac)


def test_factorize_semiprime_of_large_primes():
    p, q = 1_000_000_007, 998_244_353
    assert factorize(p * q) == [(q, 1), (p, 1)]


def test_factorize_effort_bound():
    p, q = next_prime(10**15), next_prime(2 * 10**15)
    with pytest.raises(ResourceLimitError):
        factorize(p * q, effort=10)


def test_valuation_rejects_zero():
    with pytest.raises(ValueError):
        valuation(0, 3)


def test_euler_phi_against_gcd_count():
    for n in range(1, 300):
        assert euler_phi(n) == sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def test_cyclotomic_ramification():
    assert cyclotomic_ramification(2, 3) == 1
    assert cyclotomic_ramification(2, 8) == 4
    assert cyclotomic_ramification(5, 75) == 20
    assert cyclotomic_ramification(3, 9) == euler_phi(9)


def test_abelian_obstruction_examples():
    assert abelian_ramification_obstruction(3, 2)
    assert abelian_ramification_obstruction(3, 5)
    assert not abelian_ramification_obstruction(3, 7)
    assert not abelian_ramification_obstruction(3, 3)
    assert abelian_ramification_obstruction(5, 3)


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 40), st.sampled_from(primes_up_to(200)), st.integers(1, 4))
def test_obstruction_bounds_every_cyclotomic_ramification(d, p, i):
    # when gcd(d, p(p-1)) = 1 every ramification index of Q_p(mu_N) is prime to d
    if abelian_ramification_obstruction(d, p):
        assert math.gcd(cyclotomic_ramification(p, p**i * 7), d) == 1


def test_multiplicative_order():
    assert multiplicative_order(10, 487) == 486
    assert multiplicative_order(2, 7) == 3
    with pytest.raises(ValueError):
        multiplicative_order(3, 9)
    with pytest.raises(ValueError):
        multiplicative_order(3, 1)


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 2000), st.integers(1, 10**6))
def test_multiplicative_order_is_minimal(m, a):
    if math.gcd(a, m) != 1:
        return
    k = multiplicative_order(a, m)
    assert pow(a, k, m) == 1 % m
    assert all(pow(a, j, m) != 1 for j in range(1, k))


def test_crt_and_search():
    assert crt([(2, 3), (4, 5)]) == (14, 15)
    with pytest.raises(ValueError):
        crt([(1, 4), (1, 6)])
    assert crt_search([(2, 3), (4, 5)]) == 29
    assert crt_search([(2, 3), (6, 7)]) == 41
    with pytest.raises(ResourceLimitError):
        crt_search([(0, 2)], predicate=lambda n: n % 2 == 1, limit=100)


def test_catalan_box():
    assert catalan_solutions(60, 40) == {(1, 0), (1, 1), (2, 1), (3, 2)}


def test_prime_power():
    assert prime_power(256) == (2, 8)
    assert prime_power(9973) == (9973, 1)
    assert not is_prime_power(12)
    assert not is_prime_power(1)
    with pytest.raises(ValueError):
        prime_power(36)


def test_smallest_prime_factor():
    assert smallest_prime_factor(130, 5) == 5
    assert smallest_prime_factor(130, 6) == 13
    with pytest.raises(NotFoundError):
        smallest_prime_factor(12, 5)

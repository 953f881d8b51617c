"""Arithmetic kernel: spec examples plus sieve/enumeration cross-checks."""

import math

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from powsumdiv.arith import (
    NotInvertibleError,
    euler_phi,
    factorize,
    is_prime,
    legendre_symbol,
    log_integral,
    mod_inverse,
    mod_pow,
    moebius,
    p_adic_valuation,
    squarefree_kernel,
)


# ---------------------------------------------------------------------------
# p-adic valuation

@pytest.mark.parametrize("p,n,want", [(2, 48, 4), (3, 10, 0), (2, -12, 2)])
def test_valuation_examples(p, n, want):
    assert p_adic_valuation(p, n) == want


def test_valuation_rejects_zero():
    with pytest.raises(ValueError):
        p_adic_valuation(2, 0)


# ---------------------------------------------------------------------------
# modular arithmetic

def test_mod_pow_examples():
    assert mod_pow(2, 10, 1000) == 24
    assert mod_pow(5, 0, 7) == 1
    # Fermat oracle: 101 is prime, so 3^100 = 1 mod 101
    assert mod_pow(3, 100, 101) == 1


def test_fermat_all_primes_to_1e4():
    primes = [p for p in range(2, 10**4) if is_prime(p)]
    for p in primes:
        for g in range(1, p):
            assert pow(g, p - 1, p) == 1


def test_mod_inverse_examples():
    assert mod_inverse(3, 7) == 5
    assert mod_inverse(1, 11) == 1
    # exhaustive-search oracle
    want = next(x for x in range(1, 17) if 10 * x % 17 == 1)
    assert want == 12
    assert mod_inverse(10, 17) == want


def test_mod_inverse_not_invertible():
    with pytest.raises(NotInvertibleError):
        mod_inverse(6, 9)


# ---------------------------------------------------------------------------
# Legendre symbol

def test_legendre_examples():
    # oracle: squares mod 7 are {1,2,4}; mod 5 are {1,4}
    assert {x * x % 7 for x in range(1, 7)} == {1, 2, 4}
    assert legendre_symbol(2, 7) == 1
    assert {x * x % 5 for x in range(1, 5)} == {1, 4}
    assert legendre_symbol(2, 5) == -1
    assert legendre_symbol(14, 7) == 0


def test_legendre_rejects_two():
    with pytest.raises(ValueError):
        legendre_symbol(3, 2)


def test_legendre_against_square_enumeration():
    for p in range(3, 201):
        if not is_prime(p):
            continue
        squares = {x * x % p for x in range(1, p)}
        for a in range(0, p):
            want = 0 if a == 0 else (1 if a in squares else -1)
            assert legendre_symbol(a, p) == want


# ---------------------------------------------------------------------------
# factorization and multiplicative functions

def test_factorize_examples():
    assert factorize(360) == [(2, 3), (3, 2), (5, 1)]
    assert factorize(97) == [(97, 1)]
    fac = factorize(60466176)  # 2^10 * 3^10
    assert math.prod(p**e for p, e in fac) == 60466176
    assert fac == [(2, 10), (3, 10)]


def test_factorize_rho_path():
    n = (2**31 - 1) * (2**61 - 1)  # two Mersenne primes, beyond trial range
    assert factorize(n) == [(2**31 - 1, 1), (2**61 - 1, 1)]


def test_factorize_reconstruction_and_tables_to_1e5():
    limit = 10**5
    # sieve oracles for phi and mu
    phi = list(range(limit + 1))
    mu = [1] * (limit + 1)
    sieve = [True] * (limit + 1)
    for p in range(2, limit + 1):
        if not sieve[p]:
            continue
        for m in range(p, limit + 1, p):
            if m > p:
                sieve[m] = False
            phi[m] -= phi[m] // p
            mu[m] = 0 if m % (p * p) == 0 else -mu[m]
    for n in range(2, limit + 1):
        fac = factorize(n)
        assert math.prod(p**e for p, e in fac) == n
        primes = [p for p, _ in fac]
        assert primes == sorted(primes)
        assert all(e >= 1 for _, e in fac)
    for n in range(1, limit + 1):
        assert euler_phi(n) == phi[n] if n > 1 else True
        assert moebius(n) == mu[n]


@pytest.mark.parametrize("n,want", [(8, 2), (36, 1), (12, 3)])
def test_kernel_examples(n, want):
    assert squarefree_kernel(n) == want


def test_kernel_square_invariance():
    for n in range(1, 101):
        for k in range(1, 101):
            assert squarefree_kernel(n * k * k) == squarefree_kernel(n)


def test_phi_mu_examples():
    assert euler_phi(8) == 4 and moebius(8) == 0
    assert euler_phi(1) == 1 and moebius(1) == 1
    assert euler_phi(30) == 8 and moebius(30) == -1


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=2, max_value=10**12))
def test_factorize_reconstruction_property(n):
    fac = factorize(n)
    assert math.prod(p**e for p, e in fac) == n
    assert all(is_prime(p) for p, _ in fac)


# ---------------------------------------------------------------------------
# logarithmic integral

def test_log_integral_examples():
    assert log_integral(2) == 0.0
    # independent high-order quadrature oracle
    oracle = float(mpmath.li(10**6, offset=True))
    value = log_integral(10**6)
    assert abs(value - oracle) < 1e-3
    assert abs(value - 78626.5) < 0.5
    # sanity against pi(10^6)
    assert abs(value - 78498) < 200
    assert log_integral(10**4) < log_integral(10**5)


def test_log_integral_against_oracle_at_many_points():
    for x in (2.5, 3, 10, 100, 12345.6, 10**5, 10**7):
        oracle = float(mpmath.li(x, offset=True))
        assert abs(log_integral(x) - oracle) <= max(1e-9 * abs(oracle), 1e-7)


def test_log_integral_rejects_below_two():
    with pytest.raises(ValueError):
        log_integral(1.5)

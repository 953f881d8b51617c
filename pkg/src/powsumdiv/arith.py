"""Exact integer primitives: valuations, modular arithmetic, quadratic
symbols, factorization, multiplicative functions, and the logarithmic
integral.

Everything here is a pure function; results for the multiplicative
functions are derived from the complete factorization, never from
floating point.
"""

import functools
import math

# A factorization is a list of (prime, exponent) pairs, primes strictly
# increasing, exponents >= 1.
Factorization = list[tuple[int, int]]

# Witness set making Miller-Rabin deterministic for all n < 3.3e24,
# in particular for the full 64-bit range.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_TRIAL_LIMIT = 10**6


class NotInvertibleError(ValueError):
    """gcd(a, m) > 1, so a has no inverse mod m."""


def p_adic_valuation(p: int, n: int) -> int:
    """Largest v such that p**v divides n.  The sign of n is ignored.

    n = 0 is rejected (the valuation would be infinite).
    """
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def v2(n: int) -> int:
    """2-adic valuation of n != 0, via the low set bit."""
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    return (n & -n).bit_length() - 1


def mod_pow(base: int, exp: int, m: int) -> int:
    """base**exp mod m for exp >= 0, m >= 2."""
    if m < 2:
        raise ValueError("modulus must be >= 2")
    if exp < 0:
        raise ValueError("exponent must be >= 0")
    return pow(base, exp, m)


def mod_inverse(a: int, m: int) -> int:
    """x in [1, m) with a*x == 1 (mod m); NotInvertibleError if gcd(a,m) > 1."""
    if m < 2:
        raise ValueError("modulus must be >= 2")
    try:
        return pow(a, -1, m)
    except ValueError as exc:
        raise NotInvertibleError(f"{a} is not invertible mod {m}") from exc


def legendre_symbol(a: int, p: int) -> int:
    """Legendre symbol (a/p) for an odd prime p, by Euler's criterion.

    Returns 0 if p | a, +1 if a is a nonzero square mod p, -1 otherwise.
    """
    if p == 2 or p < 2:
        raise ValueError("p must be an odd prime")
    a %= p
    if a == 0:
        return 0
    r = pow(a, (p - 1) // 2, p)
    return 1 if r == 1 else -1


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 2**64 (no randomness)."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d = n - 1
    s = v2(d)
    d >>= s
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent_rho(n: int) -> int:
    """Nontrivial factor of composite odd n (Brent's cycle variant).

    Deterministic: the polynomial offset c is bumped on failure instead of
    being drawn at random, so factorizations are reproducible.
    """
    if n % 2 == 0:
        return 2
    for c in range(1, 100):
        y, r, q = 2, 1, 1
        g, x, ys = 1, 0, 0
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += 128
            r <<= 1
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"rho failed to split {n}")  # unreachable in 64-bit range


def _factor_into(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _brent_rho(n)
    _factor_into(d, out)
    _factor_into(n // d, out)


def factorize(n: int) -> Factorization:
    """Complete prime factorization of n >= 2.

    Trial division up to min(sqrt(n), 10**6); any remaining cofactor is
    certified prime by Miller-Rabin or split with Brent's rho.
    """
    if n < 2:
        raise ValueError("factorize requires n >= 2")
    return list(_factorize_cached(n))


@functools.lru_cache(maxsize=1 << 16)
def _factorize_cached(n: int) -> tuple[tuple[int, int], ...]:
    fac: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            fac[p] = fac.get(p, 0) + 1
            n //= p
    d = 5
    while d * d <= n and d <= _TRIAL_LIMIT:
        for q in (d, d + 2):  # 6k+5, 6k+7
            while n % q == 0:
                fac[q] = fac.get(q, 0) + 1
                n //= q
        d += 6
    if n > 1:
        if d * d > n:
            # trial division reached sqrt(n), so the cofactor is prime
            fac[n] = fac.get(n, 0) + 1
        else:
            _factor_into(n, fac)
    return tuple(sorted(fac.items()))


def squarefree_kernel(n: int) -> int:
    """Product of the primes dividing n to an odd exponent; Q(sqrt n) = Q(sqrt kernel)."""
    if n < 1:
        raise ValueError("kernel requires n >= 1")
    if n == 1:
        return 1
    k = 1
    for p, ex in _factorize_cached(n):
        if ex & 1:
            k *= p
    return k


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("phi requires n >= 1")
    if n == 1:
        return 1
    out = 1
    for p, ex in _factorize_cached(n):
        out *= (p - 1) * p ** (ex - 1)
    return out


def moebius(n: int) -> int:
    if n < 1:
        raise ValueError("mu requires n >= 1")
    if n == 1:
        return 1
    fac = _factorize_cached(n)
    if any(ex > 1 for _, ex in fac):
        return 0
    return -1 if len(fac) & 1 else 1


def divisors(n: int) -> list[int]:
    """All positive divisors of n >= 1, ascending."""
    if n < 1:
        raise ValueError("divisors requires n >= 1")
    out = [1]
    if n > 1:
        for p, ex in _factorize_cached(n):
            out = [d * p**k for d in out for k in range(ex + 1)]
    out.sort()
    return out


def _adaptive_simpson(a: float, fa: float, b: float, fb: float,
                      whole: float, fm: float, tol: float, depth: int) -> float:
    m = 0.5 * (a + b)
    lm, rm = 0.5 * (a + m), 0.5 * (m + b)
    flm, frm = 1.0 / math.log(lm), 1.0 / math.log(rm)
    left = (m - a) / 6.0 * (fa + 4.0 * flm + fm)
    right = (b - m) / 6.0 * (fm + 4.0 * frm + fb)
    delta = left + right - whole
    if depth <= 0 or abs(delta) <= 15.0 * tol:
        return left + right + delta / 15.0
    return (_adaptive_simpson(a, fa, m, fm, left, flm, 0.5 * tol, depth - 1)
            + _adaptive_simpson(m, fm, b, fb, right, frm, 0.5 * tol, depth - 1))


def _li_once(x: float, tol: float) -> float:
    a, b = 2.0, float(x)
    fa, fb = 1.0 / math.log(a), 1.0 / math.log(b)
    m = 0.5 * (a + b)
    fm = 1.0 / math.log(m)
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    return _adaptive_simpson(a, fa, b, fb, whole, fm, tol, 60)


def log_integral(x: float) -> float:
    """Li(x) = integral of dt/log t from 2 to x, by adaptive Simpson.

    The tolerance is tightened until two successive estimates agree to
    1e-9 relative.
    """
    if x < 2:
        raise ValueError("log_integral requires x >= 2")
    if x == 2:
        return 0.0
    tol = 1e-6
    prev = _li_once(x, tol)
    for _ in range(6):
        tol *= 0.1
        cur = _li_once(x, tol)
        if abs(cur - prev) <= 1e-9 * abs(cur):
            return cur
        prev = cur
    return prev

"""Ramanujan sums c_n(m) in exact integer arithmetic.

c_n(m) = sum of e^(2*pi*i*k*m/n) over 1 <= k <= n with gcd(k, n) = 1.
All values here come from Holder's identity
    c_n(m) = phi(n) * mu(n/(n,m)) / phi(n/(n,m))
(the division is exact), so the complex definition never enters the
computation; it exists only as a test oracle.
"""

import math
from fractions import Fraction

from .arith import divisors, euler_phi, moebius, v2


def ramanujan_c(n: int, m: int) -> int:
    """c_n(m) for n >= 1, m >= 0, via Holder's identity."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if m < 0:
        raise ValueError("m must be >= 0")
    if n == 1:
        return 1
    g = math.gcd(n, m)  # m = 0 gives g = n, i.e. c_n(0) = phi(n)
    k = n // g
    mu = moebius(k)
    if mu == 0:
        return 0
    return mu * (euler_phi(n) // euler_phi(k))


def ramanujan_c_2pow(v: int, t: int) -> int:
    """c_{2^v}(t) from the 2-adic valuation of t alone.

    Piecewise: 0 if v2(t) < v-1, -phi(2^v) if v2(t) = v-1, +phi(2^v) if
    v2(t) >= v.  t = 0 is treated as v2(t) = infinity.
    """
    if v < 0:
        raise ValueError("v must be >= 0")
    if t < 0:
        raise ValueError("t must be >= 0")
    if v == 0:
        return 1
    phi = 1 << (v - 1)
    if t == 0:
        return phi
    nu = v2(t)
    if nu >= v:
        return phi
    if nu == v - 1:
        return -phi
    return 0


def divisor_indicator(n: int, m: int) -> Fraction:
    """(1/n) * sum of c_d(m) over d | n: exactly 1 if n | m, else 0."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return Fraction(sum(ramanujan_c(d, m) for d in divisors(n)), n)

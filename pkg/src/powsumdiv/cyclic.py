"""Cyclic-group counting formulas, their brute-force counterparts, and
explicit character tables over small prime fields.

This module is the trusted oracle layer: the formulas are cheap closed
forms, the enumerations spell out the group element by element, and the
property suites require them to agree exactly.  Group elements are
represented by exponents relative to a fixed generator, so every
computation below is integer arithmetic until a character value is
finally evaluated as a complex number.
"""

import cmath
import functools
import math

from .arith import _factorize_cached, is_prime, mod_inverse, v2
from .ramanujan import ramanujan_c

_TWO_PI = 2.0 * math.pi


def power_subgroup_size(n: int, h: int) -> int:
    """#{g^h : g in G} = n/(n,h) for G cyclic of order n."""
    if n < 1 or h < 1:
        raise ValueError("n and h must be >= 1")
    return n // math.gcd(n, h)


def order_valuation_count(n: int, h: int, w: int) -> int:
    """Number of h-th powers in a cyclic group of order n whose order has
    2-adic valuation exactly w.

    With q = n/(n,h) and nu = v2(q): q/2^nu for w = 0, q*2^(w-1-nu) for
    1 <= w <= nu, and 0 for w > nu.
    """
    if n < 1 or h < 1:
        raise ValueError("n and h must be >= 1")
    if w < 0:
        raise ValueError("w must be >= 0")
    q = n // math.gcd(n, h)
    nu = v2(q)
    odd = q >> nu
    if w == 0:
        return odd
    if w > nu:
        return 0
    return odd << (w - 1)


def power_exponent_set(n: int, h: int) -> set[int]:
    """Exponents (mod n) of the h-th powers: {h*k mod n}."""
    return {h * k % n for k in range(n)}


def brute_force_valuation_count(n: int, h: int, w: int) -> int:
    """order_valuation_count by enumeration; the element g0^j has order
    n/gcd(n, j)."""
    count = 0
    for j in power_exponent_set(n, h):
        order = n // math.gcd(n, j)
        if v2(order) == w:
            count += 1
    return count


def multiplicative_order(g: int, p: int) -> int:
    """Least k >= 1 with g^k == 1 mod p, for p prime and p not dividing g."""
    g %= p
    if g == 0:
        raise ValueError("g must be a unit mod p")
    order = p - 1
    for q, _ in _factorize_cached(p - 1):
        while order % q == 0 and pow(g, order // q, p) == 1:
            order //= q
    return order


def find_primitive_root(p: int) -> int:
    """Smallest primitive root mod an odd prime p."""
    if p == 2 or not is_prime(p):
        raise ValueError("p must be an odd prime")
    factors = [q for q, _ in _factorize_cached(p - 1)]
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
    raise ArithmeticError(f"no primitive root found mod {p}")  # unreachable


class CharacterTable:
    """The full character group of (Z/pZ)* for a small odd prime p.

    Characters are indexed by j in [0, p-1): chi_j(g0^k) = e^(2*pi*i*j*k/(p-1))
    for the fixed primitive root g0.  Exponent arithmetic stays exact;
    complex values appear only when a character is finally evaluated.
    """

    def __init__(self, p: int):
        if p == 2 or not is_prime(p):
            raise ValueError("p must be an odd prime")
        self.p = p
        self.g0 = find_primitive_root(p)
        n = self.n = p - 1
        dlog = [0] * p
        acc = 1
        for k in range(n):
            dlog[acc] = k
            acc = acc * self.g0 % p
        self._dlog = dlog
        self._roots = [cmath.exp(1j * _TWO_PI * k / n) for k in range(n)]
        self._orders = [n // math.gcd(j, n) for j in range(n)]

    def dlog(self, g: int) -> int:
        """Discrete logarithm of g to base g0."""
        g %= self.p
        if g == 0:
            raise ValueError("g must be a unit mod p")
        return self._dlog[g]

    def chi(self, j: int, g: int) -> complex:
        """chi_j(g) as a unit complex number."""
        k = self.dlog(g)
        return self._roots[j * k % self.n]

    def char_order(self, j: int) -> int:
        return self._orders[j % self.n]

    def group_index(self, g: int) -> int:
        """[(Z/pZ)* : <g>] = gcd(dlog(g), p-1)."""
        return math.gcd(self.dlog(g), self.n)

    def order_sum(self, d: int, g: int) -> complex:
        """Sum of chi(g) over the characters of exact order d | p-1."""
        if self.n % d != 0:
            raise ValueError(f"{d} does not divide p-1 = {self.n}")
        k = self.dlog(g)
        n, roots = self.n, self._roots
        total = 0j
        for j, order in enumerate(self._orders):
            if order == d:
                total += roots[j * k % n]
        return total


@functools.lru_cache(maxsize=512)
def character_table(p: int) -> CharacterTable:
    return CharacterTable(p)


def character_order_sum(p: int, d: int, g: int) -> complex:
    """Sum of chi_j(g) over characters of exact order d; equals the
    integer c_d([(Z/pZ)* : <g>]) up to float rounding."""
    return character_table(p).order_sum(d, g)


def character_order_sum_expected(p: int, d: int, g: int) -> int:
    """The exact integer the character sum must round to."""
    return ramanujan_c(d, character_table(p).group_index(g))


def rational_mod(num: int, den: int, p: int) -> int:
    """num/den as an element of (Z/pZ)*; requires p coprime to den."""
    return num % p * mod_inverse(den % p, p) % p

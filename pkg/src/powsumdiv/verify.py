"""Property suites: every closed-form identity in the package checked
against an independent brute-force route, with counterexamples reported.

Each checker returns (cases_checked, failures); an empty failure list
means the suite passed.  These back both the ``verify`` CLI subcommand
and the acceptance tests.
"""

import cmath
import math
from fractions import Fraction
from typing import Callable

import numpy as np

from .arith import divisors, v2
from .census import (
    _accumulate,
    classify_prime,
    heuristic_counts,
    local_factor_k1,
    local_factor_k2,
    ramanujan_count,
    character_count,
    _primes_in_range,
)
from .cyclic import (
    CharacterTable,
    brute_force_valuation_count,
    character_table,
    multiplicative_order,
    order_valuation_count,
    power_exponent_set,
    power_subgroup_size,
    rational_mod,
)
from .density import (
    delta_naive,
    delta_refined,
    delta_sign_difference,
    delta_table,
)
from .profile import decompose
from .ramanujan import divisor_indicator, ramanujan_c, ramanujan_c_2pow

# profile grid used by the per-prime identity and character suites
PROFILE_GRID = [
    (2, 1), (-2, 1), (4, 1), (-4, 1), (8, 27),
    (3, 1), (-3, 1), (16, 1), (5, 2), (-5, 2),
]

CheckResult = tuple[int, list[str]]


def check_group(n_max: int = 300, h_max: int = 50, w_max: int = 6) -> CheckResult:
    """Cyclic-group counting formulas vs exhaustive enumeration, plus the
    odd-order / doubled-exponent set inclusions."""
    checked = 0
    failures: list[str] = []
    for n in range(1, n_max + 1):
        v2n = v2(n)
        for h in range(1, h_max + 1):
            exps = power_exponent_set(n, h)
            checked += 1
            if len(exps) != power_subgroup_size(n, h):
                failures.append(f"#G^h mismatch at n={n}, h={h}")
                continue
            by_w: dict[int, int] = {}
            odd_order = set()
            w1 = set()
            for j in exps:
                w = v2(n // math.gcd(n, j))
                by_w[w] = by_w.get(w, 0) + 1
                if w == 0:
                    odd_order.add(j)
                elif w == 1:
                    w1.add(j)
            for w in range(w_max + 1):
                if by_w.get(w, 0) != order_valuation_count(n, h, w):
                    failures.append(f"count mismatch at n={n}, h={h}, w={w}")
            # inclusions
            v2h = v2(h)
            if v2h >= v2n:
                if odd_order != exps:
                    failures.append(f"odd-order violation at n={n}, h={h}")
            else:
                exps_2h = power_exponent_set(n, 2 * h)
                if not odd_order <= exps_2h:
                    failures.append(f"G_0 not in G^2h at n={n}, h={h}")
                if v2n == v2h + 1:
                    if not w1 <= (exps - exps_2h):
                        failures.append(f"G_1 not in G^h-G^2h at n={n}, h={h}")
                elif not w1 <= exps_2h:
                    failures.append(f"G_1 not in G^2h at n={n}, h={h}")
            if v2n <= v2h and w1:
                failures.append(f"G_1 nonempty at n={n}, h={h}")
    return checked, failures


def _ramanujan_direct(n: int, m: int) -> complex:
    return sum(
        cmath.exp(2j * math.pi * k * m / n)
        for k in range(1, n + 1)
        if math.gcd(k, n) == 1
    )


def check_ramanujan() -> CheckResult:
    """Holder's identity vs the exponential sum, its weak 2-power form,
    the gcd reduction, and the divisor indicator."""
    checked = 0
    failures: list[str] = []
    for n in range(1, 101):
        for m in range(0, 101):
            z = _ramanujan_direct(n, m)
            c = ramanujan_c(n, m)
            checked += 1
            if abs(z.imag) > 1e-6 or abs(z.real - c) > 1e-6:
                failures.append(f"direct sum mismatch at n={n}, m={m}: {z} vs {c}")
    for n in range(1, 201):
        for m in range(0, 201):
            checked += 1
            if ramanujan_c(n, m) != ramanujan_c(n, math.gcd(n, m)):
                failures.append(f"gcd reduction fails at n={n}, m={m}")
    for v in range(0, 11):
        for t in range(0, 4097):
            checked += 1
            if ramanujan_c_2pow(v, t) != ramanujan_c(1 << v, t):
                failures.append(f"weak form mismatch at v={v}, t={t}")
    for n in range(1, 201):
        for m in range(0, 401):
            checked += 1
            want = Fraction(1) if m % n == 0 else Fraction(0)
            if divisor_indicator(n, m) != want:
                failures.append(f"indicator mismatch at n={n}, m={m}")
    return checked, failures


def check_characters(p_max: int = 200, x_char: int = 500) -> CheckResult:
    """Orthogonality, the order-d character sums against c_d(index), and
    the character-sum count against the Ramanujan-sum count."""
    checked = 0
    failures: list[str] = []
    for p in _primes_in_range(3, p_max + 1):
        table = character_table(p)
        n = p - 1
        for j in range(n):
            total = sum(table.chi(j, g) for g in range(1, p))
            want = n if j == 0 else 0
            checked += 1
            if abs(total - want) > 1e-8:
                failures.append(f"orthogonality fails at p={p}, j={j}")
        for d in divisors(n):
            for g in range(1, p):
                z = table.order_sum(d, g)
                c = ramanujan_c(d, table.group_index(g))
                checked += 1
                if abs(z.imag) > 1e-8 or abs(z.real - c) > 1e-8:
                    failures.append(
                        f"order sum mismatch at p={p}, d={d}, g={g}: {z} vs {c}")
    for a, b in PROFILE_GRID:
        profile = decompose(a, b)
        checked += 1
        if character_count(profile, x_char) != ramanujan_count(profile, x_char, "full"):
            failures.append(f"character count mismatch for (a,b)=({a},{b})")
    return checked, failures


def check_local_factors(p_limit: int = 10**5,
                        checkpoints: tuple[int, ...] = (10**3, 10**4, 10**5)) -> CheckResult:
    """Per-prime truncated Ramanujan sums against the naive and refined
    local weights, using the exact group index of r (full multiplicative
    order, factored p-1), then the summed forms at several checkpoints."""
    checked = 0
    failures: list[str] = []
    for a, b in PROFILE_GRID:
        profile = decompose(a, b)
        e = profile.e
        sums = {x: [Fraction(0), Fraction(0)] for x in checkpoints}
        k1_acc, k2_acc = Fraction(0), Fraction(0)
        cps = sorted(checkpoints)
        ci = 0
        for p in _primes_in_range(2, p_limit + 1):
            while ci < len(cps) and p > cps[ci]:
                sums[cps[ci]] = [k1_acc, k2_acc]
                ci += 1
            cls = classify_prime(profile, p)
            if cls.special:
                continue
            r = rational_mod(profile.a, profile.b, p)
            index = (p - 1) // multiplicative_order(r, p)
            s = cls.s
            if v2(index) != s - cls.t:
                failures.append(f"index valuation mismatch at ({a},{b}), p={p}")
            lhs1 = Fraction(
                sum(ramanujan_c(1 << v, index) for v in range(min(s, e) + 1)), 1 << s)
            lhs2 = Fraction(
                sum(ramanujan_c(1 << v, index) for v in range(min(s, e + 1) + 1)), 1 << s)
            k1 = local_factor_k1(profile, s)
            k2 = local_factor_k2(profile, s, cls.leg_r0)
            checked += 2
            if lhs1 != k1:
                failures.append(f"naive weight mismatch at ({a},{b}), p={p}: {lhs1} vs {k1}")
            if lhs2 != k2:
                failures.append(f"refined weight mismatch at ({a},{b}), p={p}: {lhs2} vs {k2}")
            k1_acc += k1
            k2_acc += k2
        while ci < len(cps):
            sums[cps[ci]] = [k1_acc, k2_acc]
            ci += 1
        for x in cps:
            hc = heuristic_counts(profile, x)
            checked += 2
            if sums[x][0] != hc.k1 or sums[x][1] != hc.k2:
                failures.append(f"summed weights mismatch at ({a},{b}), x={x}")
            if ramanujan_count(profile, x, "e") != hc.h1 \
                    or ramanujan_count(profile, x, "e+1") != hc.h2:
                failures.append(f"truncated count mismatch at ({a},{b}), x={x}")
    return checked, failures


def check_densities(bound: int = 30) -> CheckResult:
    """Refined density equals the closed-form table on the whole grid;
    sign-difference formula; naive density exact iff the field is not
    Q(sqrt 2)."""
    checked = 0
    failures: list[str] = []
    for a in range(-bound, bound + 1):
        for b in range(1, bound + 1):
            if a == 0 or abs(a) == b:
                continue
            profile = decompose(a, b)
            d_table = delta_table(profile)
            d_ref = delta_refined(profile)
            checked += 1
            if d_ref != d_table:
                failures.append(f"refined != table at ({a},{b}): {d_ref} vs {d_table}")
            if not 0 <= d_table <= 1:
                failures.append(f"density out of range at ({a},{b})")
            if profile.eps == -1 and d_table < Fraction(1, 2):
                failures.append(f"negative-ratio density below 1/2 at ({a},{b})")
            if not profile.is_sqrt2 and delta_naive(profile) != d_table:
                failures.append(f"naive density wrong off the anomaly at ({a},{b})")
            diff = delta_sign_difference(profile)
            neg = decompose(-abs(a), b)
            pos = decompose(abs(a), b)
            if diff != delta_refined(neg) - delta_refined(pos):
                failures.append(f"sign difference mismatch at ({a},{b})")
    for a in (2, 4, -4, 16):
        profile = decompose(a, 1)
        checked += 1
        if delta_naive(profile) == delta_table(profile):
            failures.append(f"anomaly missing at r={a}")
    return checked, failures


def check_oracle(p_limit: int = 2000, coeff_bound: int = 12) -> CheckResult:
    """Order-parity classification vs direct search for a k <= 2p with
    p | a^k + b^k, over every admissible pair |a|, |b| <= coeff_bound."""
    primes = np.array(_primes_in_range(2, p_limit + 1), dtype=np.int64)
    pairs = [
        (a, b)
        for a in range(-coeff_bound, coeff_bound + 1)
        for b in range(-coeff_bound, coeff_bound + 1)
        if a != 0 and b != 0 and abs(a) != abs(b)
    ]
    a_col = np.array([p[0] for p in pairs], dtype=np.int64)[:, None]
    b_col = np.array([p[1] for p in pairs], dtype=np.int64)[:, None]
    P = primes[None, :]
    base_a = a_col % P
    base_b = b_col % P
    cur_a = base_a.copy()
    cur_b = base_b.copy()
    first_k = np.zeros(base_a.shape, dtype=np.int64)
    k_max = 2 * int(primes[-1])
    for k in range(1, k_max + 1):
        if k > 1:
            cur_a = cur_a * base_a % P
            cur_b = cur_b * base_b % P
        hit = ((cur_a + cur_b) % P == 0) & (first_k == 0)
        if hit.any():
            first_k[hit] = k
    expected = (first_k > 0) & (first_k <= 2 * P)

    checked = 0
    failures: list[str] = []
    prime_list = [int(p) for p in primes]
    for i, (a, b) in enumerate(pairs):
        profile = decompose(a, b)
        for j, p in enumerate(prime_list):
            got = classify_prime(profile, p).divides
            checked += 1
            if got != bool(expected[i, j]):
                failures.append(
                    f"parity criterion vs search at (a,b)=({a},{b}), p={p}: "
                    f"classified {got}, search {bool(expected[i, j])}")
    return checked, failures


SUITES: dict[str, Callable[[], CheckResult]] = {
    "group": check_group,
    "ramanujan": check_ramanujan,
    "characters": check_characters,
    "local-factors": check_local_factors,
    "densities": check_densities,
    "oracle": check_oracle,
}


def run_suite(name: str) -> dict[str, CheckResult]:
    """Run one named suite, or all of them."""
    if name == "all":
        return {key: fn() for key, fn in SUITES.items()}
    if name not in SUITES:
        raise KeyError(name)
    return {name: SUITES[name]()}

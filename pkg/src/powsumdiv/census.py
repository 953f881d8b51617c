"""The counting core: stream primes with a segmented sieve, classify each
one against a BaseProfile, and accumulate every counting function exactly.

Per generic prime p (p not dividing 2ab) the classification computes

* s = v2(p-1),
* t = v2 of the multiplicative order of r = a/b mod p, found by raising
  r to the odd part of p-1 and squaring at most s times (the full order
  is never computed and p-1 is never factored in this loop),
* the Legendre symbol of the maximal root r0 at p.

p divides some a^k + b^k iff t >= 1.  All heuristic weights attached to a
prime are dyadic rationals with denominator 2^s, so the accumulators hold
plain integers scaled by 2**SHIFT and every identity in the test suite
can be checked as exact equality.  Special primes p | 2ab are kept out of
every heuristic sum and enter only the exact count (and pi).

Checkpointed sweeps split the prime range at segment and checkpoint
boundaries; partial accumulators are integers under addition, so any
merge schedule (1 worker or many) produces bit-identical results.
"""

import cmath
import functools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, fields, replace
from fractions import Fraction
from typing import Iterator, Literal, NamedTuple

import numpy as np

from .arith import log_integral, v2
from .cyclic import character_table, rational_mod
from .density import delta_naive, delta_table
from .profile import BaseProfile

# Fixed binary scale for the dyadic accumulators.  Every per-prime weight
# has denominator 2^s with s = v2(p-1) < 64 for any x below 2^40, so the
# scaled contributions are exact integers.
SHIFT = 64
_ONE = 1 << SHIFT

DEFAULT_SEGMENT_SIZE = 1 << 20
MAX_X = 1 << 40

CHARACTER_X_LIMIT = 2000

Truncation = Literal["full", "e", "e+1"]


class InternalInconsistencyError(ArithmeticError):
    """A character sum failed to round to an integer within tolerance."""


@dataclass(frozen=True)
class PrimeClassification:
    p: int
    s: int                  # v2(p-1)
    t: int | None           # v2(ord_r(p)); None on the special path
    leg_r0: int | None      # Legendre symbol of r0 at p; None on the special path
    divides: bool           # p divides some a^k + b^k
    special: bool           # p | 2ab


@dataclass(slots=True)
class CountAccumulator:
    """Additive per-prime tallies; merge order never matters.

    Integer fields suffixed _num are numerators at scale 2**SHIFT.
    """

    pi: int = 0                    # all primes counted
    pi_generic: int = 0            # primes not dividing 2ab
    pi_progression: int = 0        # p = 1 mod 2^(e+1), all primes
    pi_progression_generic: int = 0
    n_exact: int = 0               # primes dividing the sequence
    n_generic: int = 0             # same, special primes excluded
    k1_num: int = 0
    k2_num: int = 0
    ram1_num: int = 0              # truncation v <= min(s, e)
    ram2_num: int = 0              # truncation v <= min(s, e+1)
    ram_full_num: int = 0          # truncation v <= s
    cnt_legm1_s_e1: int = 0        # generic p with (r0/p) = -1, s = e+1
    sum_leg1_sgt_e_num: int = 0    # sum of 2^-s over generic p, (r0/p)=1, s > e
    sum_leg1_sgt_e1_num: int = 0   # same with s > e+1

    def merge(self, other: "CountAccumulator") -> None:
        for f in fields(self):
            setattr(self, f.name, getattr(self, f.name) + getattr(other, f.name))

    def copy(self) -> "CountAccumulator":
        return replace(self)

    # -- exact rational views -------------------------------------------

    @property
    def k1(self) -> Fraction:
        return Fraction(self.k1_num, _ONE)

    @property
    def k2(self) -> Fraction:
        return Fraction(self.k2_num, _ONE)

    @property
    def h1(self) -> Fraction:
        return self.pi_generic - self.k1

    @property
    def h2(self) -> Fraction:
        return self.pi_generic - self.k2

    @property
    def ram_trunc_j1(self) -> Fraction:
        return Fraction(self.ram1_num, _ONE)

    @property
    def ram_trunc_j2(self) -> Fraction:
        return Fraction(self.ram2_num, _ONE)

    @property
    def tail(self) -> Fraction:
        """n_generic - h2, i.e. the weight the refined truncation discards.

        Sign convention: this equals ramanujan_count(full) minus
        ramanujan_count("e+1"); the raw inner sum over v >= e+2 is its
        negative.
        """
        return Fraction(self.ram2_num - self.ram_full_num, _ONE)


# ---------------------------------------------------------------------------
# prime generation


def _simple_sieve(limit: int) -> np.ndarray:
    """All primes <= limit (plain sieve, used for base primes and tests)."""
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    mask = np.ones(limit + 1, dtype=bool)
    mask[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if mask[p]:
            mask[p * p :: p] = False
    return np.flatnonzero(mask).astype(np.int64)


def _primes_in_range(lo: int, hi: int) -> list[int]:
    """Primes in [lo, hi) via a sieve segment."""
    lo = max(lo, 2)
    if hi <= lo:
        return []
    mask = np.ones(hi - lo, dtype=bool)
    for p in _simple_sieve(math.isqrt(hi - 1)):
        p = int(p)
        start = max(p * p, (lo + p - 1) // p * p)
        if start < hi:
            mask[start - lo :: p] = False
    return (np.flatnonzero(mask) + lo).tolist()


def prime_stream(x_max: int, segment_size: int = DEFAULT_SEGMENT_SIZE) -> Iterator[int]:
    """Every prime <= x_max exactly once, ascending, in independent segments."""
    _check_bounds(x_max, segment_size)
    lo = 2
    while lo <= x_max:
        hi = min((lo // segment_size + 1) * segment_size, x_max + 1)
        yield from _primes_in_range(lo, hi)
        lo = hi


def _check_bounds(x_max: int, segment_size: int) -> None:
    if x_max < 2:
        raise ValueError("x_max must be >= 2")
    if x_max > MAX_X:
        raise ValueError(f"x_max must be <= 2^40 = {MAX_X}")
    if segment_size < 2 or segment_size & (segment_size - 1):
        raise ValueError("segment_size must be a power of two")


# ---------------------------------------------------------------------------
# per-prime classification


def classify_prime(profile: BaseProfile, p: int) -> PrimeClassification:
    """Order-parity data of one prime against a profile."""
    a, b = profile.a, profile.b
    if p == 2 or a % p == 0 or b % p == 0:
        # p | 2ab, so decompose() has already decided it
        return PrimeClassification(
            p=p, s=v2(p - 1) if p > 2 else 0, t=None, leg_r0=None,
            divides=dict(profile.special_primes)[p], special=True,
        )
    pm1 = p - 1
    s = (pm1 & -pm1).bit_length() - 1
    r = a % p * pow(b % p, p - 2, p) % p
    y = pow(r, pm1 >> s, p)
    t = 0
    while y != 1:
        y = y * y % p
        t += 1
    leg = 1 if pow(profile.r0_num * profile.r0_den % p, pm1 >> 1, p) == 1 else -1
    return PrimeClassification(p=p, s=s, t=t, leg_r0=leg, divides=t >= 1, special=False)


def local_factor_k1(profile: BaseProfile, s: int) -> Fraction:
    """Naive per-prime weight: probability that r has odd order among the
    h-th powers, as a function of s = v2(p-1) only."""
    if s < 0:
        raise ValueError("s must be >= 0")
    if s <= profile.e:
        return Fraction(1 + profile.eps, 2)
    return Fraction(1, 1 << (s - profile.e))


def local_factor_k2(profile: BaseProfile, s: int, leg_r0: int) -> Fraction:
    """Refined per-prime weight, using the Legendre symbol of r0 at p."""
    if s < 0:
        raise ValueError("s must be >= 0")
    if leg_r0 not in (-1, 1):
        raise ValueError("leg_r0 must be +-1")
    e = profile.e
    if s <= e:
        return Fraction(1 + profile.eps, 2)
    if s == e + 1:
        return Fraction(1 + profile.eps * leg_r0, 2)
    return Fraction(1 + leg_r0, 1 << (s - e))


# ---------------------------------------------------------------------------
# accumulation


def _fold_range(profile: BaseProfile, lo: int, hi: int) -> CountAccumulator:
    """Classify every prime in [lo, hi) and tally it."""
    acc = CountAccumulator()
    primes = _primes_in_range(lo, hi)
    if not primes:
        return acc

    a, b = profile.a, profile.b
    e, eps = profile.e, profile.eps
    r0prod = profile.r0_num * profile.r0_den
    special = dict(profile.special_primes)
    mod_prog = 1 << (e + 1)
    half_eps = (1 + eps) >> 1

    pi = pi_g = prog = prog_g = n_ex = n_g = 0
    k1n = k2n = ram1 = ram2 = ramf = 0
    cnt_m1 = sum_e = sum_e1 = 0

    for p in primes:
        pi += 1
        sp = special.get(p)
        if sp is not None:
            if p % mod_prog == 1:
                prog += 1
            if sp:
                n_ex += 1
            continue
        pi_g += 1
        pm1 = p - 1
        s = (pm1 & -pm1).bit_length() - 1
        bp = b % p
        r = a % p if bp == 1 else a % p * pow(bp, p - 2, p) % p
        y = pow(r, pm1 >> s, p)
        t = 0
        while y != 1:
            y = y * y % p
            t += 1
        if t:
            n_ex += 1
            n_g += 1
        leg = 1 if pow(r0prod % p, pm1 >> 1, p) == 1 else -1
        sh = SHIFT - s

        # naive and refined local weights, scaled by 2**SHIFT
        if s <= e:
            k1n += half_eps << SHIFT
            k2n += half_eps << SHIFT
        else:
            k1n += 1 << (sh + e)
            if s == e + 1:
                k2n += (1 + eps * leg) >> 1 << SHIFT
            elif leg == 1:
                k2n += 1 << (sh + e + 1)

        # truncated 2-power Ramanujan sums: with w = v2 of the group index
        # of r, sum_{v<=V} c_{2^v} = 2^min(V,w) - (2^w if V > w else 0)
        w = s - t
        v1 = e if e < s else s
        ram1 += ((1 << min(v1, w)) - ((1 << w) if v1 > w else 0)) << sh
        v2_ = e + 1 if e + 1 < s else s
        ram2 += ((1 << min(v2_, w)) - ((1 << w) if v2_ > w else 0)) << sh
        if t == 0:
            ramf += 1 << SHIFT

        # components of the explicit progression-minus-sum formulas
        if s > e:
            prog += 1
            prog_g += 1
            if leg == 1:
                sum_e += 1 << sh
                if s > e + 1:
                    sum_e1 += 1 << sh
            elif s == e + 1:
                cnt_m1 += 1

    acc.pi = pi
    acc.pi_generic = pi_g
    acc.pi_progression = prog
    acc.pi_progression_generic = prog_g
    acc.n_exact = n_ex
    acc.n_generic = n_g
    acc.k1_num = k1n
    acc.k2_num = k2n
    acc.ram1_num = ram1
    acc.ram2_num = ram2
    acc.ram_full_num = ramf
    acc.cnt_legm1_s_e1 = cnt_m1
    acc.sum_leg1_sgt_e_num = sum_e
    acc.sum_leg1_sgt_e1_num = sum_e1
    return acc


@functools.lru_cache(maxsize=64)
def _accumulate(profile: BaseProfile, x: int) -> CountAccumulator:
    _check_bounds(x, DEFAULT_SEGMENT_SIZE)
    acc = CountAccumulator()
    lo = 2
    while lo <= x:
        hi = min((lo // DEFAULT_SEGMENT_SIZE + 1) * DEFAULT_SEGMENT_SIZE, x + 1)
        acc.merge(_fold_range(profile, lo, hi))
        lo = hi
    return acc


# ---------------------------------------------------------------------------
# counting functions


def count_exact(profile: BaseProfile, x: int) -> int:
    """#{p <= x : p divides some a^k + b^k}, special primes included."""
    return _accumulate(profile, x).n_exact


class HeuristicCounts(NamedTuple):
    k1: Fraction
    k2: Fraction
    h1: Fraction
    h2: Fraction


def heuristic_counts(profile: BaseProfile, x: int) -> HeuristicCounts:
    """K1/K2 = summed local weights over generic primes <= x; H_j = the
    generic prime count minus K_j."""
    acc = _accumulate(profile, x)
    return HeuristicCounts(k1=acc.k1, k2=acc.k2, h1=acc.h1, h2=acc.h2)


def _formula_from(acc: CountAccumulator, profile: BaseProfile) -> Fraction:
    e = profile.e
    if profile.eps == 1:
        return acc.pi_progression_generic - Fraction(
            acc.sum_leg1_sgt_e_num << (e + 1), _ONE
        )
    return (acc.pi_generic - acc.cnt_legm1_s_e1
            - Fraction(acc.sum_leg1_sgt_e1_num << (e + 1), _ONE))


def formula_count(profile: BaseProfile, x: int) -> Fraction:
    """The explicit form of the refined heuristic: for positive ratios
    pi(x; 2^(e+1), 1) minus a Legendre-weighted 2-power sum, for negative
    ones the variant with the s = e+1 correction term.  All prime sums are
    restricted to generic primes; equals h2 exactly."""
    return _formula_from(_accumulate(profile, x), profile)


_TRUNCATIONS = ("full", "e", "e+1")


def ramanujan_count(profile: BaseProfile, x: int, truncation: Truncation = "full") -> Fraction:
    """pi_generic(x) minus the truncated double sum of 2-power Ramanujan
    sums of the group index of r.

    truncation "full" (v <= s) reproduces the exact generic count;
    "e" and "e+1" reproduce H1 and H2.
    """
    if truncation not in _TRUNCATIONS:
        raise ValueError(f"truncation must be one of {_TRUNCATIONS}")
    acc = _accumulate(profile, x)
    num = {"full": acc.ram_full_num, "e": acc.ram1_num, "e+1": acc.ram2_num}[truncation]
    return acc.pi_generic - Fraction(num, _ONE)


def tail_sum(profile: BaseProfile, x: int) -> Fraction:
    """The exact amount by which the refined truncation misses:
    tail = n_generic - h2 = ramanujan_count(full) - ramanujan_count("e+1").

    The inner sum over v in [e+2, s] carries the opposite sign.
    """
    return _accumulate(profile, x).tail


def character_count(profile: BaseProfile, x: int) -> Fraction:
    """The exact generic count recomputed through explicit character sums.

    For each generic p <= x sums chi(eps) * chi(r0)^h over the characters
    of (Z/pZ)* of order dividing 2^s, by complex evaluation from a
    character table; each inner sum must round to an integer (tolerance
    1e-8).  Oracle-scale only: x <= 2000.
    """
    if x > CHARACTER_X_LIMIT:
        raise ValueError(f"character_count requires x <= {CHARACTER_X_LIMIT}")
    h = profile.h
    pi_g = 0
    total_num = 0  # scaled by 2**SHIFT
    special = dict(profile.special_primes)
    for p in _primes_in_range(2, x + 1):
        if p in special:
            continue
        pi_g += 1
        table = character_table(p)
        pm1 = p - 1
        s = (pm1 & -pm1).bit_length() - 1
        k_eps = 0 if profile.eps == 1 else pm1 >> 1
        k0 = table.dlog(rational_mod(profile.r0_num, profile.r0_den, p))
        base = (k_eps + h * k0) % pm1
        step = pm1 >> s
        inner = 0j
        for q in range(1 << s):
            inner += cmath.exp(2j * math.pi * (q * step * base % pm1) / pm1)
        if abs(inner.imag) > 1e-8 or abs(inner.real - round(inner.real)) > 1e-8:
            raise InternalInconsistencyError(
                f"character sum at p={p} is not integral: {inner!r}")
        total_num += round(inner.real) << (SHIFT - s)
    return pi_g - Fraction(total_num, _ONE)


# ---------------------------------------------------------------------------
# checkpointed sweeps


@dataclass(frozen=True)
class SweepPoint:
    x: int
    acc: CountAccumulator
    li: float


@dataclass(frozen=True)
class SweepSeries:
    profile: BaseProfile
    points: tuple[SweepPoint, ...]

    def rows(self) -> list[dict]:
        """One dict per checkpoint with the frozen column set."""
        delta = delta_table(self.profile)
        delta1 = delta_naive(self.profile)
        out = []
        for pt in self.points:
            acc = pt.acc
            out.append({
                "x": pt.x,
                "pi": acc.pi,
                "li": pt.li,
                "n_exact": acc.n_exact,
                "n_generic": acc.n_generic,
                "h1": acc.h1,
                "h2": acc.h2,
                "k1": acc.k1,
                "k2": acc.k2,
                "tail": acc.tail,
                "delta": delta,
                "delta1": delta1,
            })
        return out


def _sweep_task(args: tuple[BaseProfile, int, int]) -> CountAccumulator:
    profile, lo, hi = args
    return _fold_range(profile, lo, hi)


def sweep(
    profile: BaseProfile,
    x_max: int,
    checkpoints: list[int],
    threads: int = 1,
    segment_size: int = DEFAULT_SEGMENT_SIZE,
) -> SweepSeries:
    """Single pass over the primes <= x_max with snapshots at each
    checkpoint.  Output is identical for any worker count: the work ranges
    and their merge order depend only on (x_max, checkpoints, segment_size),
    and merging is integer addition.
    """
    _check_bounds(x_max, segment_size)
    if threads < 1:
        raise ValueError("threads must be >= 1")
    if not checkpoints:
        raise ValueError("at least one checkpoint required")
    if sorted(checkpoints) != list(checkpoints) or len(set(checkpoints)) != len(checkpoints):
        raise ValueError("checkpoints must be strictly ascending")
    if checkpoints[0] < 2 or checkpoints[-1] > x_max:
        raise ValueError("checkpoints must lie in [2, x_max]")

    edges = {2, x_max + 1}
    edges.update(c + 1 for c in checkpoints)
    edges.update(range(segment_size, x_max + 1, segment_size))
    bounds = sorted(edges)
    ranges = [(bounds[i], bounds[i + 1]) for i in range(len(bounds) - 1)]

    def collect(partials) -> tuple[SweepPoint, ...]:
        acc = CountAccumulator()
        points: list[SweepPoint] = []
        snapshot_at = {c + 1: c for c in checkpoints}
        for (_, hi), part in zip(ranges, partials):
            acc.merge(part)
            if hi in snapshot_at:
                x = snapshot_at[hi]
                points.append(SweepPoint(x=x, acc=acc.copy(), li=log_integral(x)))
        return tuple(points)

    if threads == 1:
        points = collect(_fold_range(profile, lo, hi) for lo, hi in ranges)
    else:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            points = collect(pool.map(_sweep_task, [(profile, lo, hi) for lo, hi in ranges]))
    return SweepSeries(profile=profile, points=tuple(points))

"""Prime counting: exact by segmented sieve, approximate by x/ln x or li(x)."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np
from scipy.special import expi

SIEVE_LIMIT = 10**8
SEGMENT = 1 << 22


class PrimePiMode(str, Enum):
    EXACT_SIEVE = "exact_sieve"
    T_OVER_LN_T = "t_over_ln_t"
    LOG_INTEGRAL = "log_integral"


class CapabilityError(ValueError):
    """Requested computation is outside what this build supports."""


@dataclass(frozen=True)
class PrimePiResult:
    x: float
    count: float  # int for exact_sieve
    mode: PrimePiMode


def _base_primes(limit: int) -> np.ndarray:
    is_p = np.ones(limit + 1, dtype=bool)
    is_p[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if is_p[p]:
            is_p[p * p :: p] = False
    return np.flatnonzero(is_p)


@lru_cache(maxsize=64)
def count_primes(n: int) -> int:
    """Number of primes <= n by an odd-only segmented sieve (n <= SIEVE_LIMIT)."""
    if n > SIEVE_LIMIT:
        raise CapabilityError(f"exact prime count beyond sieve limit {SIEVE_LIMIT:.0e}; use an approximate mode")
    if n < 2:
        return 0
    base = _base_primes(math.isqrt(n) + 1)[1:]  # odd base primes
    total = 1  # the prime 2
    lo = 3
    while lo <= n:
        hi = min(lo + 2 * SEGMENT, n + 1)  # odd numbers lo, lo+2, ..., < hi
        size = (hi - lo + 1) // 2
        mark = np.ones(size, dtype=bool)
        for p in base:
            p = int(p)
            sq = p * p
            if sq >= hi:
                break
            start = max(sq, ((lo + p - 1) // p) * p)
            if start % 2 == 0:
                start += p
            mark[(start - lo) // 2 :: p] = False
        total += int(mark.sum())
        lo = hi if hi % 2 == 1 else hi + 1
    return total


def log_integral(x: float) -> float:
    """li(x), principal value, via Ei(ln x)."""
    if x <= 1:
        raise ValueError("li(x) needs x > 1")
    return float(expi(math.log(x)))


def prime_pi(x: float, mode: PrimePiMode | str = PrimePiMode.EXACT_SIEVE) -> PrimePiResult:
    mode = PrimePiMode(mode)
    x = float(x)
    if mode is PrimePiMode.EXACT_SIEVE:
        if x < 2:
            raise ValueError("exact mode needs x >= 2")
        if x > SIEVE_LIMIT:
            raise CapabilityError(
                f"x={x:.6g} exceeds the sieve limit {SIEVE_LIMIT:.0e}; use mode 't_over_ln_t' or 'log_integral'"
            )
        return PrimePiResult(x, count_primes(int(math.floor(x))), mode)
    if x <= 1:
        raise ValueError("approximate modes need x > 1")
    if mode is PrimePiMode.T_OVER_LN_T:
        return PrimePiResult(x, x / math.log(x), mode)
    return PrimePiResult(x, log_integral(x), mode)

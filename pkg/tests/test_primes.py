import math

import mpmath as mp
import pytest
from hypothesis import given
from hypothesis import strategies as st

from jacob_ladder.primes import SIEVE_LIMIT, CapabilityError, PrimePiMode, count_primes, log_integral, prime_pi


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, math.isqrt(n) + 1))


@pytest.mark.parametrize("x, n", [(2, 1), (3, 2), (10, 4), (100, 25), (1000, 168), (10**6, 78498), (10**7, 664579)])
def test_known_counts(x, n):
    assert prime_pi(x).count == n


@given(st.integers(2, 200_000))
def test_step_is_primality(x):
    assert count_primes(x + 1) - count_primes(x) == _is_prime(x + 1)


def test_segment_boundaries():
    # both sides of the first segment edge, computed by brute force
    edge = 3 + 2 * (1 << 22)
    for x in (edge - 2, edge - 1, edge, edge + 1):
        assert count_primes(x) - count_primes(edge - 100) == sum(_is_prime(n) for n in range(edge - 99, x + 1))


def test_approximate_modes():
    assert prime_pi(1e6, PrimePiMode.T_OVER_LN_T).count == pytest.approx(72382.4, abs=0.05)
    li = prime_pi(1e6, "log_integral").count
    assert li == pytest.approx(float(mp.li(1e6)), rel=1e-13)
    assert li > prime_pi(1e6).count > 1e6 / math.log(1e6)


def test_log_integral_domain():
    with pytest.raises(ValueError):
        log_integral(1.0)
    assert log_integral(2.0) == pytest.approx(1.045163780117492784, rel=1e-14)


def test_beyond_sieve_limit():
    with pytest.raises(CapabilityError, match="log_integral"):
        prime_pi(SIEVE_LIMIT + 1)
    assert prime_pi(1e9, PrimePiMode.LOG_INTEGRAL).count > 5e7

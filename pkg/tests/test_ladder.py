import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from jacob_ladder.ladder import (
    DEFAULT_CONSTANTS,
    EULER_C,
    Constants,
    LadderError,
    inverse_bracket,
    ladder_lhs,
    phi1,
    phi1_derivative,
    phi1_inverse,
    reverse_sequence,
    solve_phi1,
)
from jacob_ladder.primes import prime_pi


def test_constants():
    k = DEFAULT_CONSTANTS
    assert k.c_bar == pytest.approx(0.4227843350984671, abs=1e-15)
    assert k.lambda1 == pytest.approx(2 * EULER_C - 1 - math.log(2 * math.pi))
    assert k.lambda2 == pytest.approx(EULER_C - math.log(2 * math.pi))
    assert k.c + k.c_bar == 1.0


@pytest.mark.parametrize("kw", [{"c": 0.5}, {"a_exp": 0.2}, {"a_exp": 0.5}, {"delta": 0.0}, {"c0": math.nan}])
def test_constants_reject(kw):
    with pytest.raises(ValueError):
        Constants(**kw)


@given(st.floats(10.0, 1e9))
def test_solve_inverts_lhs(w):
    back, _ = solve_phi1(ladder_lhs(w))
    assert back == pytest.approx(w, rel=1e-11)


def test_solve_below_range():
    with pytest.raises(LadderError):
        solve_phi1(-10.0)


def test_forward_round_trip(store):
    # feed J computed from w = 1e5 and recover w
    w = 1e5
    assert solve_phi1(ladder_lhs(w))[0] == pytest.approx(w, rel=1e-12)
    p = phi1(1e5, store=store)
    assert ladder_lhs(p.phi1) == pytest.approx(p.j, rel=1e-12)
    assert p.phi1 < p.t


@pytest.mark.parametrize("t", [100.0, 1e3, 1e5])
def test_inverse_round_trip(store, t):
    x = phi1_inverse(t, store=store)
    lo, _, hi = inverse_bracket(t)
    assert lo < x < hi
    assert phi1(x, store=store).phi1 == pytest.approx(t, rel=1e-10)


def test_inverse_domain():
    with pytest.raises(ValueError):
        phi1_inverse(99.0)


def test_reverse_sequence_increases(store):
    seq = reverse_sequence(1e4, 4, store=store)
    assert seq.points[0] == 1e4 and len(seq.points) == 5
    assert all(a < b for a, b in zip(seq.points, seq.points[1:]))


def test_spacing_is_prime_count(store):
    # T^1 - T ~ (1 - c) pi(T^1)
    t1 = phi1_inverse(1e5, store=store)
    gap = t1 - 1e5
    assert gap == pytest.approx(DEFAULT_CONSTANTS.c_bar * prime_pi(t1).count, rel=0.15)


def test_derivative_matches_difference(store):
    t, h = 1e5, 1e-3
    fd = (phi1(t + h, store=store).phi1 - phi1(t - h, store=store).phi1) / (2 * h)
    assert phi1_derivative(phi1(t, store=store)) == pytest.approx(fd, rel=1e-4)


def test_derivative_vanishes_at_a_zero(store, oracles):
    g = dict(oracles["zeros"])[200]
    p = phi1(g, store=store)
    assert abs(phi1_derivative(p)) < 1e-12


def test_c0_shift_is_small(store):
    base = phi1(1e5, store=store).phi1
    shifted = phi1(1e5, Constants(c0=10.0), store).phi1
    # dphi1 = -c0 / (ln phi1 + 1 + c - ln 2pi)
    assert shifted - base == pytest.approx(-10.0 / (math.log(base) + 1 + DEFAULT_CONSTANTS.lambda2), rel=1e-6)


def test_c0_barely_moves_the_sequence(store):
    base = reverse_sequence(1e5, 3, store=store).points
    for c0 in (-10.0, 10.0):
        moved = reverse_sequence(1e5, 3, Constants(c0=c0), store).points
        assert all(abs(u - v) / u < 1e-3 for u, v in zip(base, moved))

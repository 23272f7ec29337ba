import math

import mpmath as mp
import numpy as np
import pytest

from jacob_ladder.zeta_core import (
    DomainError,
    spectral_window,
    spectral_z,
    theta,
    z,
    z_array,
    z_euler_maclaurin,
    z_riemann_siegel,
    zeta_abs2,
)


def test_theta_matches_frozen_values(oracles):
    for t, ref in oracles["theta"]:
        assert theta(t) == pytest.approx(ref, abs=1e-9 * max(1.0, abs(ref)))


@pytest.mark.parametrize("t", [10.5, 33.3, 77.0, 99.999, 100.0, 150.0, 4321.0])
def test_theta_against_mpmath(t):
    assert abs(theta(t) - float(mp.siegeltheta(t))) < 1e-11


def test_z_on_frozen_grid(oracles):
    ts = np.array([p[0] for p in oracles["z"]])
    ref = np.array([p[1] for p in oracles["z"]])
    assert np.max(np.abs(z_array(ts) - ref)) <= 1e-6


def test_z_array_agrees_with_scalar():
    ts = np.array([12.0, 199.0, 201.0, 5e4, 3e6])
    assert np.array_equal(z_array(ts), np.array([z(t).z for t in ts]))


def test_z_sample_fields():
    lo, hi = z(50.0), z(1e6)
    assert lo.method == "euler_maclaurin" and hi.method == "riemann_siegel"
    assert hi.terms_used == math.floor(math.sqrt(1e6 / (2 * math.pi)))


@pytest.mark.parametrize("t", np.linspace(150.0, 250.0, 11))
def test_methods_agree_across_the_crossover(t):
    assert abs(z_riemann_siegel(t) - z_euler_maclaurin(t)) < 1e-6


@pytest.mark.parametrize("t", [14.0, 220.0, 12345.6])
def test_square_is_zeta_modulus(t):
    ref = float(abs(mp.zeta(mp.mpc(0.5, t))) ** 2)
    assert zeta_abs2(t) == pytest.approx(ref, rel=1e-8)


def test_known_zeros_are_sign_changes(oracles):
    for _, g in oracles["zeros"]:
        assert z(g - 1e-3).z * z(g + 1e-3).z < 0


def test_gram_scale_sign_changes_are_zeros():
    # every sign change on a fine grid in [10, 300] is a zero mpmath also finds
    ts = np.arange(10.0, 300.0, 0.05)
    v = z_array(ts)
    idx = np.flatnonzero(np.sign(v[:-1]) != np.sign(v[1:]))
    found = [mp.findroot(mp.siegelz, (ts[i], ts[i + 1]), solver="anderson") for i in idx]
    zeros = [float(mp.im(mp.zetazero(n))) for n in range(1, len(idx) + 1)]
    assert len(idx) == 138  # N(300) = 138
    assert np.allclose([float(r) for r in found], zeros, atol=1e-8)


@pytest.mark.parametrize("t", [9.99, -5.0, float("nan"), float("inf")])
def test_domain(t):
    with pytest.raises(DomainError):
        z(t)


def test_spectral_window_layout():
    w = spectral_window(2 * math.pi * 1e4, 5.0)
    assert len(w.oscillators) == 100 and w.n[-1] == 100  # tau = 100 exactly
    assert w.amplitudes[0] == 2.0 and w.omegas[-1] == pytest.approx(0.0, abs=1e-12)
    with pytest.raises(DomainError):
        spectral_window(1e4, 10.1)
    with pytest.raises(DomainError):
        spectral_z(w, w.x - 1.0)


def test_spectral_sum_tracks_z():
    x = 1e6
    w = spectral_window(x, x ** 0.25)
    ts = np.linspace(x, x + w.v, 50)
    # remainder is O(x^(-1/4)); the constant is about 1.3 at these heights
    assert np.max(np.abs(spectral_z(w, ts) - z_array(ts))) < 2.0 * x ** -0.25

"""Riemann-Siegel theta, the Hardy function Z(t) and its local spectral form.

Two evaluation routes for Z are provided:

* Euler-Maclaurin summation of zeta(1/2 + it), used below ``T_CROSS``;
* the Riemann-Siegel main sum with remainder terms C0..C4 above it.

Everything here is a pure function of its arguments.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from numba import njit

from ._tables import RS_COEFFS

T_MIN = 10.0
T_CROSS = 200.0
THETA_ASYMPTOTIC_MIN = 100.0

TWO_PI = 2.0 * math.pi
LN_PI = math.log(math.pi)

_C0, _C1, _C2, _C3, _C4 = (np.ascontiguousarray(c, dtype=np.float64) for c in RS_COEFFS)

# B_2k / (2k)! for the Euler-Maclaurin tail, k = 1..15
_EM_TERMS = 15
_BERN = np.array([
    1 / 6, -1 / 30, 1 / 42, -1 / 30, 5 / 66, -691 / 2730, 7 / 6, -3617 / 510,
    43867 / 798, -174611 / 330, 854513 / 138, -236364091 / 2730, 8553103 / 6,
    -23749461029 / 870, 8615841276005 / 14322,
])
_BERN_OVER_FACT = np.array([_BERN[k] / math.factorial(2 * k + 2) for k in range(_EM_TERMS)])


class DomainError(ValueError):
    """Raised when an argument lies outside the supported height range."""


# ---------------------------------------------------------------------------
# jitted kernels (shared with the quadrature module)


@njit(cache=True)
def _theta_small(t):
    # Im log Gamma(1/4 + it/2) by upward shift and Stirling; continuous branch
    zr = 0.25
    zi = 0.5 * t
    shift = 0.0
    for k in range(12):
        shift += math.atan2(zi, zr + k)
    wr = zr + 12.0
    w = complex(wr, zi)
    lw = np.log(w)
    s = (w - 0.5) * lw - w + 0.5 * math.log(TWO_PI)
    w2 = w * w
    inv = 1.0 / w
    s += inv * (1.0 / 12.0 - (1.0 / w2) * (1.0 / 360.0 - (1.0 / w2) * (1.0 / 1260.0 - (1.0 / w2) * (1.0 / 1680.0))))
    return s.imag - shift - 0.5 * t * LN_PI


@njit(cache=True)
def theta_jit(t):
    if t < THETA_ASYMPTOTIC_MIN:
        return _theta_small(t)
    u = t / TWO_PI
    inv = 1.0 / t
    return 0.5 * t * math.log(u) - 0.5 * t - math.pi / 8.0 + inv / 48.0 + 7.0 * inv * inv * inv / 5760.0


@njit(cache=True)
def _horner(c, x):
    acc = 0.0
    for i in range(c.shape[0] - 1, -1, -1):
        acc = acc * x + c[i]
    return acc


@njit(cache=True)
def rs_remainder_jit(t, c0, c1, c2, c3, c4):
    a = math.sqrt(t / TWO_PI)
    n = int(a)
    x = a - n - 0.5
    inv = 1.0 / a
    s = _horner(c4, x)
    s = s * inv + _horner(c3, x)
    s = s * inv + _horner(c2, x)
    s = s * inv + _horner(c1, x)
    s = s * inv + _horner(c0, x)
    sign = 1.0 if (n - 1) % 2 == 0 else -1.0
    return sign * s / math.sqrt(a)


@njit(cache=True)
def z_rs_jit(t, c0, c1, c2, c3, c4):
    th = theta_jit(t)
    n_terms = int(math.sqrt(t / TWO_PI))
    s = 0.0
    for n in range(1, n_terms + 1):
        ln = math.log(n)
        s += math.cos(th - t * ln) / math.sqrt(n)
    return 2.0 * s + rs_remainder_jit(t, c0, c1, c2, c3, c4)


@njit(cache=True)
def zeta_em_jit(t, bern):
    """zeta(1/2 + it) by Euler-Maclaurin summation; intended for 0 <= t <= ~300."""
    s = complex(0.5, t)
    m = int(0.5 * t) + 20
    acc = complex(0.0, 0.0)
    for n in range(1, m):
        acc += np.exp(-s * math.log(n))
    lm = math.log(m)
    pw = np.exp(-s * lm)  # m^-s
    acc += pw * m / (s - 1.0) + 0.5 * pw
    # sum_k B_2k/(2k)! s(s+1)...(s+2k-2) m^(-s-2k+1)
    rising = s
    term_pow = pw / m
    for k in range(bern.shape[0]):
        acc += bern[k] * rising * term_pow
        rising = rising * (s + 2 * k + 1) * (s + 2 * k + 2)
        term_pow = term_pow / (m * m)
    return acc


@njit(cache=True)
def z_em_jit(t, bern):
    th = theta_jit(t)
    zeta = zeta_em_jit(t, bern)
    return math.cos(th) * zeta.real - math.sin(th) * zeta.imag


@njit(cache=True)
def z_jit(t, bern, c0, c1, c2, c3, c4):
    if t < T_CROSS:
        return z_em_jit(t, bern)
    return z_rs_jit(t, c0, c1, c2, c3, c4)


@njit(cache=True)
def _z_many(ts, bern, c0, c1, c2, c3, c4):
    out = np.empty(ts.shape[0])
    for i in range(ts.shape[0]):
        out[i] = z_jit(ts[i], bern, c0, c1, c2, c3, c4)
    return out


# ---------------------------------------------------------------------------
# public API


@dataclass(frozen=True)
class ZSample:
    t: float
    z: float
    terms_used: int
    method: str  # "riemann_siegel" | "euler_maclaurin"


@dataclass(frozen=True)
class SpectralWindow:
    """Frozen-phase oscillator bank anchored at ``x``, valid on ``[x, x + v]``."""

    x: float
    v: float
    tau: float
    psi: float
    oscillators: list[tuple[int, float, float]] = field(repr=False)

    @property
    def n(self) -> np.ndarray:
        return np.array([o[0] for o in self.oscillators], dtype=np.int64)

    @property
    def amplitudes(self) -> np.ndarray:
        return np.array([o[1] for o in self.oscillators])

    @property
    def omegas(self) -> np.ndarray:
        return np.array([o[2] for o in self.oscillators])


def _check_height(t: float) -> None:
    if not (t >= T_MIN) or not math.isfinite(t):
        raise DomainError(f"height t={t!r} is below t_min={T_MIN}")


def theta(t: float) -> float:
    """Riemann-Siegel theta function for ``t >= T_MIN``."""
    t = float(t)
    _check_height(t)
    return float(theta_jit(t))


def z(t: float) -> ZSample:
    """Hardy's Z(t); ``abs(z(t).z) == abs(zeta(1/2 + it))``."""
    t = float(t)
    _check_height(t)
    if t < T_CROSS:
        return ZSample(t, float(z_em_jit(t, _BERN_OVER_FACT)), int(0.5 * t) + 19, "euler_maclaurin")
    return ZSample(t, float(z_rs_jit(t, _C0, _C1, _C2, _C3, _C4)), int(math.sqrt(t / TWO_PI)), "riemann_siegel")


def z_riemann_siegel(t: float) -> float:
    """Riemann-Siegel route regardless of height (for overlap checks)."""
    return float(z_rs_jit(float(t), _C0, _C1, _C2, _C3, _C4))


def z_euler_maclaurin(t: float) -> float:
    """Euler-Maclaurin route regardless of height; slow for large t."""
    return float(z_em_jit(float(t), _BERN_OVER_FACT))


def z_array(ts) -> np.ndarray:
    """Vectorised Z over an array of heights (no range check below T_MIN)."""
    ts = np.ascontiguousarray(ts, dtype=np.float64)
    return _z_many(ts, _BERN_OVER_FACT, _C0, _C1, _C2, _C3, _C4)


def zeta_abs2(t: float) -> float:
    """|zeta(1/2 + it)|^2 for any t >= 0."""
    t = float(t)
    if t < 0:
        raise DomainError("t must be nonnegative")
    if t < T_CROSS:
        v = zeta_em_jit(t, _BERN_OVER_FACT)
        return float(v.real * v.real + v.imag * v.imag)
    return z(t).z ** 2


def spectral_window(x: float, v: float) -> SpectralWindow:
    """Oscillators 2/sqrt(n) cos(t ln(tau/n) + psi), n <= tau = sqrt(x/2pi)."""
    x = float(x)
    v = float(v)
    _check_height(x)
    if not (0.0 < v <= x ** 0.25):
        raise DomainError(f"window length v={v} must satisfy 0 < v <= x^(1/4)={x ** 0.25}")
    tau = math.sqrt(x / TWO_PI)
    psi = -0.5 * x - math.pi / 8.0
    # floor with a guard for exact squares such as x = 2pi * 10^4
    count = int(math.floor(tau + 1e-9))
    osc = [(n, 2.0 / math.sqrt(n), math.log(tau / n)) for n in range(1, count + 1)]
    return SpectralWindow(x=x, v=v, tau=tau, psi=psi, oscillators=osc)


def spectral_z(w: SpectralWindow, t) -> float | np.ndarray:
    """Evaluate the oscillator bank of ``w`` at ``t`` in ``[w.x, w.x + w.v]``."""
    ta = np.asarray(t, dtype=np.float64)
    if np.any(ta < w.x) or np.any(ta > w.x + w.v):
        raise DomainError(f"t outside window [{w.x}, {w.x + w.v}]")
    amp = w.amplitudes
    om = w.omegas
    # reduce the phase relative to the anchor: t*omega + psi with t = x + s
    s = ta[..., None] - w.x
    base = np.mod(w.x * om + w.psi, TWO_PI)
    vals = (amp * np.cos(base + s * om)).sum(axis=-1)
    return float(vals) if np.ndim(t) == 0 else vals

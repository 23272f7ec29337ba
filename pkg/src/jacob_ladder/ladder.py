"""The Jacob's ladder phi1 and its reverse iterations.

phi1(T) is the root w of  w ln w + (c - ln 2pi) w + c0 = J(T),  which is
strictly increasing in w above ``w_guard``; the reverse iterate of T is
the height x with phi1(x) = T, i.e. the root of J(x) = F(T).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .quadrature import CheckpointStore, hl_integral
from .zeta_core import z

EULER_C = float(np.euler_gamma)
LN_2PI = math.log(2.0 * math.pi)

FORWARD_RTOL = 1e-12
INVERSE_RTOL = 1e-10


class LadderError(RuntimeError):
    """Root could not be bracketed or the iteration did not converge."""


@dataclass(frozen=True)
class Constants:
    """Scalars shared by every formula; derived ones are recomputed on access."""

    c: float = EULER_C
    c0: float = 0.0
    a_exp: float = 1.0 / 3.0
    delta: float = 0.05

    def __post_init__(self):
        if not (0.577215 < self.c < 0.577216):
            raise ValueError(f"Euler's constant out of range: {self.c}")
        if not (0.25 <= self.a_exp <= 1.0 / 3.0 + 1e-15):
            raise ValueError(f"a_exp must lie in [1/4, 1/3], got {self.a_exp}")
        if not self.delta > 0:
            raise ValueError("delta must be positive")
        if not math.isfinite(self.c0):
            raise ValueError("c0 must be finite")

    @property
    def c_bar(self) -> float:
        return 1.0 - self.c

    @property
    def ln2pi(self) -> float:
        return LN_2PI

    @property
    def lambda1(self) -> float:
        return 2.0 * self.c - 1.0 - LN_2PI

    @property
    def lambda2(self) -> float:
        return self.c - LN_2PI

    @property
    def w_guard(self) -> float:
        # F'(w) = ln w + 1 + c - ln 2pi vanishes here
        return math.exp(LN_2PI - 1.0 - self.c)

    def as_dict(self) -> dict:
        return {
            "c": self.c, "c_bar": self.c_bar, "ln2pi": self.ln2pi, "lambda1": self.lambda1,
            "lambda2": self.lambda2, "c0": self.c0, "a_exp": self.a_exp, "delta": self.delta,
        }


DEFAULT_CONSTANTS = Constants()


@dataclass(frozen=True)
class LadderPoint:
    t: float
    j: float
    phi1: float
    residual: float


@dataclass(frozen=True)
class ReverseSequence:
    base: float
    k: int
    points: list[float]


def ladder_lhs(w: float, consts: Constants = DEFAULT_CONSTANTS) -> float:
    """w ln w + (c - ln 2pi) w + c0."""
    return w * math.log(w) + consts.lambda2 * w + consts.c0


def _newton_bisect(f: Callable[[float], float], df: Callable[[float], float],
                   lo: float, hi: float, x: float, fx: float, done: Callable[[float, float, float], bool],
                   maxiter: int = 200) -> tuple[float, float]:
    """Newton on a bracket lo < root < hi with f(lo) < 0 < f(hi) (not evaluated).

    Steps leaving the bracket, or failing to halve |f|, fall back to bisection.
    ``done(x, fx, step)`` decides convergence.
    """
    prev = math.inf
    for _ in range(maxiter):
        if fx < 0:
            lo = max(lo, x)
        elif fx > 0:
            hi = min(hi, x)
        d = df(x)
        cand = x - fx / d if d > 0 else math.nan
        if not (lo < cand < hi) or abs(fx) > 0.5 * prev:
            cand = 0.5 * (lo + hi)
        step = cand - x
        prev = abs(fx)
        if fx == 0 or done(x, fx, step):
            return x, fx
        x = cand
        fx = f(x)
    raise LadderError(f"no convergence after {maxiter} iterations (x={x!r}, f={fx!r})")


def solve_phi1(j: float, consts: Constants = DEFAULT_CONSTANTS, w0: float | None = None) -> tuple[float, float]:
    """Root w > w_guard of ladder_lhs(w) = j; returns (w, residual)."""
    guard = consts.w_guard

    def f(w):
        return ladder_lhs(w, consts) - j

    def df(w):
        return math.log(w) + 1.0 + consts.lambda2

    if w0 is None or w0 <= guard:
        w0 = max(2.0 * guard, j / max(math.log(max(j, 3.0)), 1.0))
    lo, hi = max(0.5 * w0, guard), 2.0 * w0
    if f(lo) > 0:
        lo = guard
        if f(lo) > 0:
            raise LadderError(f"J={j!r} lies below the ladder range (minimum at w_guard={guard:.6g})")
    n = 0
    while f(hi) < 0:
        hi *= 2.0
        n += 1
        if n > 60:
            raise LadderError(f"cannot bracket the ladder root for J={j!r}")

    def done(x, fx, step):
        return abs(step) <= FORWARD_RTOL * x

    w, fw = _newton_bisect(f, df, lo, hi, w0, f(w0), done)
    return w, fw


def phi1(t: float, consts: Constants = DEFAULT_CONSTANTS, store: CheckpointStore | None = None) -> LadderPoint:
    """phi1(t) from the Hardy-Littlewood integral J(t)."""
    t = float(t)
    if store is None:
        store = CheckpointStore()
    j = hl_integral(t, store=store).value
    w, res = solve_phi1(j, consts, w0=t)
    return LadderPoint(t=t, j=j, phi1=w, residual=res)


def phi1_derivative(p: LadderPoint, consts: Constants = DEFAULT_CONSTANTS) -> float:
    """d phi1/dt = Z(t)^2 / (ln phi1 + 1 + c - ln 2pi)."""
    denom = math.log(p.phi1) + 1.0 + consts.lambda2
    if not denom > 0:
        raise ValueError(f"point below the guarded region (phi1={p.phi1})")
    return z(p.t).z ** 2 / denom


def inverse_bracket(t_target: float, consts: Constants = DEFAULT_CONSTANTS) -> tuple[float, float, float]:
    """(lower, initial guess, upper) heights for phi1^{-1}(t_target)."""
    lt = math.log(t_target)
    return t_target, t_target + consts.c_bar * t_target / lt, t_target * (1.0 + 4.0 * consts.c_bar / lt)


def phi1_inverse(t_target: float, consts: Constants = DEFAULT_CONSTANTS,
                 store: CheckpointStore | None = None) -> float:
    """Height x > t_target with phi1(x) = t_target to 1e-10 relative."""
    t_target = float(t_target)
    if not t_target >= 100.0:
        raise ValueError(f"phi1_inverse needs t_target >= 100, got {t_target!r}")
    if store is None:
        store = CheckpointStore()
    goal = ladder_lhs(t_target, consts)
    slope_at_goal = math.log(t_target) + 1.0 + consts.lambda2
    # |phi1(x) - t| ~ |J(x) - goal| / F'(t); keep a margin of 2
    f_tol = 0.5 * INVERSE_RTOL * t_target * slope_at_goal

    def g(x):
        return hl_integral(x, store=store).value - goal

    def dg(x):
        return z(x).z ** 2

    lo, x0, hi = inverse_bracket(t_target, consts)
    g_lo = g(lo)
    if g_lo >= 0:
        raise LadderError(f"bracket failure: J({lo!r}) already reaches the target for t={t_target!r}")
    g0 = g(x0)
    if g0 < 0:
        # find an upper end inside [x0, hi] by widening steps of the mean slope
        lo, g_lo = x0, g0
        mean_slope = math.log(x0 / (2.0 * math.pi))
        step = max(-g0 / mean_slope, 1.0)
        x = x0
        while True:
            x = min(x + 2.0 * step, hi)
            gx = g(x)
            if gx >= 0:
                break
            lo, g_lo = x, gx
            step *= 2.0
            if x >= hi:
                raise LadderError(f"bracket failure: J stays below the target up to {hi!r} for t={t_target!r}")
        hi = x
        x0, g0 = x, gx

    def done(x, fx, step):
        return abs(fx) <= f_tol

    x, _ = _newton_bisect(g, dg, lo, hi, x0, g0, done)
    return x


def reverse_sequence(t: float, k: int, consts: Constants = DEFAULT_CONSTANTS,
                     store: CheckpointStore | None = None) -> ReverseSequence:
    """T = T^0 < T^1 < ... < T^k with phi1(T^r) = T^(r-1)."""
    t = float(t)
    if not t >= 100.0:
        raise ValueError("reverse_sequence needs t >= 100")
    if int(k) != k or k < 1:
        raise ValueError("k must be a positive integer")
    if store is None:
        store = CheckpointStore()
    pts = [t]
    for r in range(1, int(k) + 1):
        try:
            pts.append(phi1_inverse(pts[-1], consts, store))
        except (LadderError, ValueError) as exc:
            raise LadderError(f"reverse iteration r={r} from T^{r - 1}={pts[-1]!r} failed: {exc}") from exc
    return ReverseSequence(base=t, k=int(k), points=pts)

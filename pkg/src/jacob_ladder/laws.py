"""Numerical checks of the asymptotic laws built on the reverse iterates.

Every check returns a :class:`LawReport` with both sides and their
residuals.  Nothing here decides pass or fail; thresholds belong to the
caller.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from enum import Enum

import numpy as np
from scipy.special import exp1

from .ladder import DEFAULT_CONSTANTS, Constants, phi1, phi1_inverse, reverse_sequence
from .primes import SIEVE_LIMIT, CapabilityError, PrimePiMode, prime_pi
from .quadrature import CheckpointStore, hl_integral, panel_layout
from ._tables import GK_NODES, GK_WEIGHTS
from .zeta_core import z_array

ENDPOINT_GUARD = 1e9
BOX_NODE_GUARD = 2e9
MIN_T_LEVEL = 1e3
MIN_T_PRODUCT = 100.0


class LawId(str, Enum):
    INCREMENT = "INCREMENT"
    MEAN = "MEAN"
    WINDOW_MEAN = "WINDOW_MEAN"
    INCR_DIFF = "INCR_DIFF"
    MULT = "MULT"
    POWER = "POWER"
    ADD = "ADD"
    MIXED = "MIXED"
    GEN1 = "GEN1"
    GEN2 = "GEN2"
    COMPLEMENT = "COMPLEMENT"
    RHO = "RHO"
    BOX2 = "BOX2"


PRODUCT_LAWS = {LawId.MULT, LawId.POWER, LawId.MIXED, LawId.RHO, LawId.BOX2}


@dataclass(frozen=True)
class LawReport:
    law_id: LawId
    T: float
    k: int
    r: int
    lhs: float
    rhs: float
    abs_residual: float
    rel_residual: float
    notes: str = ""

    def as_row(self) -> dict:
        d = asdict(self)
        d["law_id"] = self.law_id.value
        return d


@dataclass(frozen=True)
class ResidualDiagnostic:
    t: float
    r_t: float
    ratio_quarter: float
    ratio_third: float


def residuals(lhs: float, rhs: float) -> tuple[float, float]:
    diff = abs(lhs - rhs)
    scale = max(abs(lhs), abs(rhs))
    return diff, (diff / scale if scale > 0 else 0.0)


def make_report(law_id, T, k, r, lhs, rhs, notes="") -> LawReport:
    a, rel = residuals(lhs, rhs)
    return LawReport(LawId(law_id), float(T), int(k), int(r), float(lhs), float(rhs), a, rel, notes)


class _Ctx:
    """Shared J, ladder and increment lookups for one law evaluation."""

    def __init__(self, consts: Constants, store: CheckpointStore):
        self.consts = consts
        self.store = store

    def J(self, t: float) -> float:
        return hl_integral(t, store=self.store).value

    def dJ(self, a: float, b: float) -> float:
        return self.J(b) - self.J(a)

    def seq(self, T: float, k: int) -> list[float]:
        return reverse_sequence(T, k, self.consts, self.store).points

    def inv(self, x: float) -> float:
        if x > ENDPOINT_GUARD:
            raise CapabilityError(f"derived endpoint {x:.6g} exceeds the evaluation guard {ENDPOINT_GUARD:.0e}")
        return phi1_inverse(x, self.consts, self.store)

    def bracket_increment(self, x: float) -> float:
        """Delta J(X, [X]^1)."""
        return self.dJ(x, self.inv(x))


def _check_params(law: LawId, T: float, k: int, r: int) -> None:
    if int(k) != k or int(r) != r or not (1 <= r <= k):
        raise ValueError(f"need integers 1 <= r <= k, got k={k}, r={r}")
    if k > 8:
        raise ValueError("k > 8 is outside the supported range")
    floor = MIN_T_PRODUCT if law in PRODUCT_LAWS else MIN_T_LEVEL
    if not T >= floor:
        raise ValueError(f"{law.value} needs T >= {floor:g}, got {T!r}")


def _guard(x: float, what: str) -> None:
    if x > ENDPOINT_GUARD:
        raise CapabilityError(f"{what} = {x:.6g} exceeds the evaluation guard {ENDPOINT_GUARD:.0e}")


def box2_integral(a: float, b: float, c: float) -> float:
    """Iterated integral of Z(x)^2 Z(y)^2 over [a, b] x [b, c].

    Both factors use the quadrature module's panel layout; the inner
    integral is recomputed for every outer node.
    """
    def nodes(lo, hi):
        ts, ws = [], []
        for _, s, h, n in panel_layout(lo, hi):
            centres = s + (np.arange(n) + 0.5) * h
            ts.append((centres[:, None] + 0.5 * h * GK_NODES[None, :]).ravel())
            ws.append(np.broadcast_to(0.5 * h * GK_WEIGHTS, (n, GK_NODES.size)).ravel())
        return np.concatenate(ts), np.concatenate(ws)

    tx, wx = nodes(a, b)
    ty, wy = nodes(b, c)
    if tx.size * ty.size > BOX_NODE_GUARD:
        raise CapabilityError(f"box integral needs {tx.size * ty.size:.3g} node pairs (> {BOX_NODE_GUARD:.0e})")
    fx = z_array(tx) ** 2
    fy = z_array(ty) ** 2
    inner = np.empty(ty.size)
    chunk = max(1, int(4e6 // max(tx.size, 1)))
    for s in range(0, ty.size, chunk):
        block = fx[:, None] * fy[None, s : s + chunk]
        inner[s : s + chunk] = wx @ block
    return math.fsum(wy * inner)


def verify_law(law_id: LawId | str, T: float, k: int = 1, r: int = 1,
               consts: Constants = DEFAULT_CONSTANTS, store: CheckpointStore | None = None) -> LawReport:
    """Evaluate both sides of one law at (T, k, r)."""
    law = LawId(law_id)
    T = float(T)
    _check_params(law, T, k, r)
    if store is None:
        store = CheckpointStore()
    cx = _Ctx(consts, store)
    cb = consts.c_bar

    if law in (LawId.INCREMENT, LawId.MEAN, LawId.WINDOW_MEAN):
        pts = cx.seq(T, r)
        lo, hi = pts[r - 1], pts[r]
        d = cx.dJ(lo, hi)
        if law is LawId.INCREMENT:
            return make_report(law, T, k, r, d, cb * lo)
        if law is LawId.MEAN:
            return make_report(law, T, k, r, d / lo, cb)
        return make_report(law, T, k, r, d / (hi - lo), cb * lo / (hi - lo))

    if law is LawId.INCR_DIFF:
        pts = cx.seq(T, r + 1)
        lhs = cx.dJ(pts[r], pts[r + 1]) - cx.dJ(pts[r - 1], pts[r])
        return make_report(law, T, k, r, lhs, cb * (pts[r] - pts[r - 1]), "uses T^(r+1)")

    if law is LawId.MULT:
        pts = cx.seq(T, k)
        P = math.prod(pts[:k])
        _guard(P, "product endpoint")
        rhs = cb ** (1 - k) * math.prod(cx.dJ(pts[i - 1], pts[i]) for i in range(1, k + 1))
        return make_report(law, T, k, r, cx.bracket_increment(P), rhs, f"endpoint={P:.17g}")

    if law is LawId.POWER:
        Tk = T ** k
        _guard(Tk, "power endpoint")
        pts = cx.seq(T, 1)
        rhs = cb ** (1 - k) * cx.dJ(pts[0], pts[1]) ** k
        return make_report(law, T, k, r, cx.bracket_increment(Tk), rhs, f"endpoint={Tk:.17g}")

    if law is LawId.ADD:
        pts = cx.seq(T, k)
        S = math.fsum(pts[:k])
        rhs = math.fsum(cx.dJ(pts[i - 1], pts[i]) for i in range(1, k + 1))
        return make_report(law, T, k, r, cx.bracket_increment(S), rhs, f"endpoint={S:.17g}")

    if law is LawId.MIXED:
        pts = cx.seq(T, 3)
        M = pts[0] + pts[1] * pts[2]
        _guard(M, "mixed endpoint")
        rhs = cx.dJ(pts[0], pts[1]) + cx.dJ(pts[1], pts[2]) * cx.dJ(pts[2], pts[3]) / cb
        return make_report(law, T, k, r, cx.bracket_increment(M), rhs, f"endpoint={M:.17g}")

    if law in (LawId.GEN1, LawId.GEN2):
        pts = cx.seq(T, r)
        d = cx.dJ(pts[r - 1], pts[r])
        lam = consts.lambda1 if law is LawId.GEN1 else consts.lambda2
        rhs = d / cb * (lam + math.log(d / cb))
        lhs = cx.J(pts[r - 1] if law is LawId.GEN1 else pts[r])
        return make_report(law, T, k, r, lhs, rhs, "rhs = dJ/(1-c) * ln{e^L dJ/(1-c)}")

    if law is LawId.COMPLEMENT:
        p = phi1(T, consts, store)
        if T <= SIEVE_LIMIT:
            pi_t, note = prime_pi(T).count, "exact sieve pi(T)"
        else:
            pi_t, note = prime_pi(T, PrimePiMode.LOG_INTEGRAL).count, "pi(T) replaced by li(T)"
        return make_report(law, T, k, r, p.phi1 + cb * pi_t, T, note)

    if law is LawId.RHO:
        pts = cx.seq(T, k)
        P = math.prod(pts[:k])
        _guard(P, "product endpoint")
        return make_report(law, T, k, r, P - pts[k], 0.9 * T ** k, "scalar distance P - T^k vs 0.9 T^k")

    if law is LawId.BOX2:
        pts = cx.seq(T, 2)
        lhs = box2_integral(pts[0], pts[1], pts[2])
        rhs = cx.dJ(pts[0], pts[1]) * cx.dJ(pts[1], pts[2])
        return make_report(law, T, 2, min(r, 2), lhs, rhs, "iterated 2-d integral vs product of increments")

    raise ValueError(f"unknown law {law_id!r}")  # pragma: no cover


def sweep(law_id: LawId | str, heights, k: int = 1, r: int = 1,
          consts: Constants = DEFAULT_CONSTANTS, store: CheckpointStore | None = None) -> list[LawReport]:
    """verify_law over several heights, reports in input order."""
    if store is None:
        store = CheckpointStore()
    return [verify_law(law_id, T, k, r, consts, store) for T in heights]


def estimate_euler_constant(T: float, r: int = 1, consts: Constants = DEFAULT_CONSTANTS,
                            store: CheckpointStore | None = None) -> float:
    """1 - Delta J(T^(r-1), T^r) / T^(r-1)."""
    if not T >= MIN_T_LEVEL:
        raise ValueError(f"need T >= {MIN_T_LEVEL:g}")
    if store is None:
        store = CheckpointStore()
    cx = _Ctx(consts, store)
    pts = cx.seq(float(T), r)
    return 1.0 - cx.dJ(pts[r - 1], pts[r]) / pts[r - 1]


def complementary_euler(c_hat: float) -> float:
    return 1.0 - c_hat


# ---------------------------------------------------------------------------
# Euler's constant from the Dirichlet integral int_0^inf (1/(1+t) - e^-t) dt/t


def _dirichlet_integrand(t: np.ndarray) -> np.ndarray:
    t = np.asarray(t, dtype=np.float64)
    out = np.empty_like(t)
    small = t < 0.05
    ts = t[small]
    # sum_{n>=2} (-1)^n t^(n-1) (1 - 1/n!)
    acc = np.zeros_like(ts)
    fact = 1.0
    for n in range(2, 24):
        fact *= n
        acc += (-1) ** n * ts ** (n - 1) * (1.0 - 1.0 / fact)
    out[small] = acc
    tb = t[~small]
    out[~small] = (1.0 / (1.0 + tb) - np.exp(-tb)) / tb
    return out


def _gl_composite(f, a: float, b: float, panels: int, order: int = 20) -> float:
    x, w = np.polynomial.legendre.leggauss(order)
    edges = np.linspace(a, b, panels + 1)
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[1:] + edges[:-1])
    ts = mid[:, None] + half[:, None] * x[None, :]
    return math.fsum((half[:, None] * w[None, :] * f(ts)).ravel())


def euler_reference_dirichlet(tol: float = 1e-12) -> float:
    """Euler's constant from Dirichlet's integral, split at t = 1.

    Beyond the cutoff L the tail is ln((1+L)/L) - E1(L) in closed form.
    """
    if not tol >= 1e-12:
        raise ValueError("tol must be >= 1e-12")
    cutoff = 60.0
    tail = math.log1p(1.0 / cutoff) - float(exp1(cutoff))
    panels = 4
    prev = None
    while True:
        val = (_gl_composite(_dirichlet_integrand, 0.0, 1.0, panels)
               + _gl_composite(_dirichlet_integrand, 1.0, cutoff, 4 * panels) + tail)
        if prev is not None and abs(val - prev) <= 0.1 * tol:
            return val
        if panels > 4096:
            raise RuntimeError("Dirichlet integral did not converge")
        prev = val
        panels *= 2


def hli_residual(T: float, consts: Constants = DEFAULT_CONSTANTS,
                 store: CheckpointStore | None = None) -> ResidualDiagnostic:
    """R(T) = J(T) - T ln T + (1 + ln 2pi - 2c) T with two normalisations."""
    T = float(T)
    if not T >= MIN_T_LEVEL:
        raise ValueError(f"need T >= {MIN_T_LEVEL:g}")
    if store is None:
        store = CheckpointStore()
    j = hl_integral(T, store=store).value
    r_t = j - T * math.log(T) + (1.0 + consts.ln2pi - 2.0 * consts.c) * T
    return ResidualDiagnostic(T, r_t, abs(r_t) / T ** 0.25, abs(r_t) / T ** (consts.a_exp + consts.delta))

"""Hardy-Littlewood integral J(T) = int_0^T Z(t)^2 dt and its increments.

The integrand is resolved with fixed 21-point Gauss-Kronrod panels whose
width follows the local oscillation scale 2*pi/ln(t/2pi) of Z(t)^2.  The
panel decomposition depends only on the interval, and panel values are
reduced with ``math.fsum``, so results are bit-identical whatever the
number of worker threads.
"""

from __future__ import annotations

import bisect
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import _kernels
from ._tables import G_WEIGHTS, GK_NODES, GK_WEIGHTS
from .zeta_core import _BERN_OVER_FACT, _C0, _C1, _C2, _C3, _C4, T_CROSS, T_MIN, TWO_PI

DEFAULT_TOL_PER_UNIT = 1e-3
PANEL_SCALES = 3.0  # panel width in units of the oscillation scale
MAX_PANEL_WIDTH = 2.0
HEAD_PANEL_WIDTH = 0.5
BLOCK_PANELS = 512
MAX_REFINE = 3

__all__ = [
    "CheckpointStore",
    "QuadratureError",
    "QuadratureResult",
    "StoreError",
    "hl_integral",
    "integrate_z2",
    "oscillation_scale",
    "panel_layout",
]


class QuadratureError(RuntimeError):
    """Error estimate stayed above tolerance after the last refinement."""

    def __init__(self, message: str, best: "QuadratureResult"):
        super().__init__(message)
        self.best = best


class StoreError(ValueError):
    """Checkpoint file could not be parsed or violates its invariants."""


@dataclass(frozen=True)
class QuadratureResult:
    a: float
    b: float
    value: float
    err_estimate: float
    panels: int


def oscillation_scale(t: float) -> float:
    """Local oscillation scale 2*pi / ln(t / 2*pi) of Z(t)^2 (inf at low t)."""
    lg = math.log(t / TWO_PI) if t > TWO_PI else 0.0
    return TWO_PI / lg if lg > 0 else math.inf


def _target_width(t: float, refine: int) -> float:
    w = min(MAX_PANEL_WIDTH, PANEL_SCALES * oscillation_scale(t))
    return w / (1 << refine)


def panel_layout(a: float, b: float, refine: int = 0) -> list[tuple[str, float, float, int]]:
    """Fixed decomposition of [a, b] into blocks ``(kind, start, width, count)``.

    ``kind`` is ``"em"`` below ``T_CROSS`` and ``"rs"`` above.  Each block
    holds equal panels; the width is chosen from the block end, where the
    integrand oscillates fastest.
    """
    blocks = []
    s = a
    head_end = min(b, T_MIN)
    if s < head_end:
        n = max(1, math.ceil((head_end - s) / (HEAD_PANEL_WIDTH / (1 << refine))))
        blocks.append(("em", s, (head_end - s) / n, n))
        s = head_end
    while s < b:
        kind = "em" if s < T_CROSS else "rs"
        limit = min(b, T_CROSS) if kind == "em" else b
        e = min(limit, s + BLOCK_PANELS * _target_width(s, refine))
        h = _target_width(e, refine)
        n = max(1, math.ceil((e - s) / h))
        blocks.append((kind, s, (e - s) / n, n))
        s = e
    return blocks


def _run_block(block):
    kind, s, h, n = block
    out_k = np.empty(n)
    out_g = np.empty(n)
    if kind == "em":
        _kernels.panels_em(s, h, n, GK_NODES, GK_WEIGHTS, G_WEIGHTS, _BERN_OVER_FACT, out_k, out_g)
    else:
        _kernels.panels_rs(s, h, n, GK_NODES, GK_WEIGHTS, G_WEIGHTS, _C0, _C1, _C2, _C3, _C4, out_k, out_g)
    return out_k, out_g


def _integrate_once(a: float, b: float, refine: int, workers: int) -> QuadratureResult:
    layout = panel_layout(a, b, refine)
    if workers > 1 and len(layout) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_run_block, layout))
    else:
        parts = [_run_block(blk) for blk in layout]
    value = math.fsum(math.fsum(k) for k, _ in parts)
    err = math.fsum(float(np.abs(k - g).sum()) for k, g in parts)
    panels = sum(blk[3] for blk in layout)
    return QuadratureResult(a, b, max(value, 0.0), err, panels)


def default_tol(a: float, b: float) -> float:
    return DEFAULT_TOL_PER_UNIT * max(b - a, 1.0)


def integrate_z2(a: float, b: float, tol: float | None = None, workers: int = 1) -> QuadratureResult:
    """Integral of Z(t)^2 = |zeta(1/2+it)|^2 over [a, b].

    ``tol`` is an absolute tolerance on the Kronrod-Gauss error estimate;
    it defaults to 1e-3 per unit length.  Panels are halved up to
    ``MAX_REFINE`` times before :class:`QuadratureError` is raised.
    """
    a = float(a)
    b = float(b)
    if not (math.isfinite(a) and math.isfinite(b)) or a < 0 or b < a:
        raise ValueError(f"need 0 <= a <= b, got a={a}, b={b}")
    if a == b:
        return QuadratureResult(a, b, 0.0, 0.0, 0)
    if tol is None:
        tol = default_tol(a, b)
    if not tol > 0:
        raise ValueError("tol must be positive")
    res = None
    for refine in range(MAX_REFINE + 1):
        res = _integrate_once(a, b, refine, workers)
        if res.err_estimate <= tol:
            return res
    raise QuadratureError(
        f"no convergence on [{a}, {b}]: error estimate {res.err_estimate:.3g} > tol {tol:.3g}", res
    )


# ---------------------------------------------------------------------------
# checkpoints


def grid_heights(lo: float, hi: float) -> list[float]:
    """Powers of sqrt(10) strictly inside (lo, hi)."""
    out = []
    k = math.floor(2 * math.log10(max(lo, 1.0))) + 1
    while True:
        g = 10.0 ** (k / 2)
        if g >= hi:
            break
        if g > lo:
            out.append(g)
        k += 1
    return out


class CheckpointStore:
    """Ordered table of (t, J(t), tol) records, optionally backed by a file.

    Single writer, many readers; the caller serialises writes.  ``panels``
    counts quadrature panels evaluated through this store, which makes
    cache hits observable.
    """

    def __init__(self, path: str | os.PathLike | None = None, autosave: bool = True):
        self.path = Path(path) if path is not None else None
        self.autosave = autosave
        self._t: list[float] = [0.0]
        self._rec: dict[float, tuple[float, float]] = {0.0: (0.0, 0.0)}
        self.panels = 0
        self.dirty = False
        if self.path is not None and self.path.exists():
            self._load(self.path)

    def __len__(self) -> int:
        return len(self._t)

    def __contains__(self, t: float) -> bool:
        return float(t) in self._rec

    def records(self) -> list[tuple[float, float, float]]:
        return [(t, *self._rec[t]) for t in self._t]

    def get(self, t: float) -> tuple[float, float] | None:
        return self._rec.get(float(t))

    def floor(self, t: float) -> tuple[float, float, float]:
        """Largest record with height <= t."""
        i = bisect.bisect_right(self._t, t) - 1
        t0 = self._t[i]
        return (t0, *self._rec[t0])

    def put(self, t: float, j: float, tol: float) -> None:
        t = float(t)
        if t in self._rec:
            return
        i = bisect.bisect_left(self._t, t)
        lo = self._t[i - 1] if i > 0 else None
        hi = self._t[i] if i < len(self._t) else None
        # nondecreasing J, up to the quoted tolerances
        if lo is not None:
            jl, tl = self._rec[lo]
            if j < jl - (tol + tl):
                raise StoreError(f"record t={t!r} J={j!r} below J({lo!r})={jl!r}")
        if hi is not None:
            jh, th = self._rec[hi]
            if j > jh + (tol + th):
                raise StoreError(f"record t={t!r} J={j!r} above J({hi!r})={jh!r}")
        self._t.insert(i, t)
        self._rec[t] = (float(j), float(tol))
        self.dirty = True

    # -- persistence ---------------------------------------------------

    @staticmethod
    def format_record(t: float, j: float, tol: float) -> str:
        return f"{t:.17g}\t{j:.17g}\t{tol:.17g}"

    def dumps(self) -> str:
        return "".join(self.format_record(*r) + "\n" for r in self.records() if r[0] > 0.0)

    def save(self, path: str | os.PathLike | None = None) -> None:
        target = Path(path) if path is not None else self.path
        if target is None:
            return
        tmp = target.with_name(target.name + ".tmp")
        tmp.write_text(self.dumps())
        os.replace(tmp, target)
        if path is None:
            self.dirty = False

    def _load(self, path: Path) -> None:
        self._fill(path.read_text(), str(path))

    def _fill(self, text: str, source: str) -> None:
        prev = None
        for lineno, line in enumerate(text.splitlines(), 1):
            if not line.strip():
                continue
            parts = line.split("\t")
            try:
                if len(parts) != 3:
                    raise ValueError("expected 3 tab-separated fields")
                t, j, tol = (float(p) for p in parts)
                if not all(math.isfinite(v) for v in (t, j, tol)) or t <= 0 or j < 0 or tol < 0:
                    raise ValueError("fields must be finite with t > 0, J >= 0, tol >= 0")
                if prev is not None and t <= prev:
                    raise ValueError("records not sorted by t")
                self.put(t, j, tol)
            except (ValueError, StoreError) as exc:
                raise StoreError(f"{source}:{lineno}: bad checkpoint record {line!r}: {exc}") from None
            prev = t
        self.dirty = False

    @classmethod
    def loads(cls, text: str) -> "CheckpointStore":
        store = cls()
        store._fill(text, "<string>")
        return store


def hl_integral(T: float, tol: float | None = None, store: CheckpointStore | None = None,
                workers: int = 1) -> QuadratureResult:
    """J(T), filling only the gap above the nearest checkpoint.

    New records are written at every power of sqrt(10) crossed and at T.
    ``tol`` bounds each gap integration (default: 1e-3 per unit length).
    The returned ``err_estimate`` accumulates the tolerances of the chain.
    """
    T = float(T)
    if not (T >= 0 and math.isfinite(T)):
        raise ValueError(f"T must be a finite nonnegative height, got {T!r}")
    if store is None:
        store = CheckpointStore()
    if T == 0.0:
        return QuadratureResult(0.0, 0.0, 0.0, 0.0, 0)
    hit = store.get(T)
    if hit is not None:
        return QuadratureResult(0.0, T, hit[0], hit[1], 0)
    t0, j0, tol0 = store.floor(T)
    panels = 0
    for g in grid_heights(t0, T) + [T]:
        gap_tol = tol if tol is not None else default_tol(t0, g)
        res = integrate_z2(t0, g, gap_tol, workers=workers)
        panels += res.panels
        j0 = j0 + res.value
        tol0 = tol0 + max(res.err_estimate, 0.0)
        store.put(g, j0, tol0)
        t0 = g
    store.panels += panels
    if store.autosave and store.path is not None:
        store.save()
    return QuadratureResult(0.0, T, j0, tol0, panels)

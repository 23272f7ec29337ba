"""Freeze independent reference values into tests/data/oracles.json.

* Z(t) at 100 log-spaced heights in [10, 1e6] and theta(t) at a few heights,
  from mpmath at 30 digits;
* 20 critical-line zeros below t = 1000 from mpmath.zetazero;
* J(1e4) from plain Euler-Maclaurin summation of |zeta(1/2+it)|^2 (numpy,
  independent of the package) and 30-point Gauss-Legendre on unit panels.
"""

import json
import math
import sys
from pathlib import Path

import mpmath as mp
import numpy as np


def zeta_em_batch(ts):
    """zeta(1/2 + it) for an array of t by Euler-Maclaurin (vectorised)."""
    tmax = float(np.max(ts))
    m = int(tmax / 2) + 40
    s = 0.5 + 1j * np.asarray(ts)
    n = np.arange(1, m, dtype=np.float64)
    ln = np.log(n)
    acc = np.exp(-np.outer(s, ln)).sum(axis=1)
    pw = np.exp(-s * math.log(m))
    acc += pw * m / (s - 1) + 0.5 * pw
    rising = s.copy()
    tp = pw / m
    for k in range(1, 16):
        acc += float(mp.bernoulli(2 * k) / mp.factorial(2 * k)) * rising * tp
        rising = rising * (s + 2 * k - 1) * (s + 2 * k)
        tp = tp / (m * m)
    return acc


def hl_oracle(T, order=30):
    x, w = np.polynomial.legendre.leggauss(order)
    total = []
    for a in range(int(T)):
        ts = a + 0.5 + 0.5 * x
        z = zeta_em_batch(ts)
        total.append(0.5 * float(np.dot(w, (z * z.conjugate()).real)))
    return math.fsum(total)


def main(out):
    mp.mp.dps = 30
    ts = np.logspace(1, 6, 100)
    data = {
        "z": [[float(t), float(mp.siegelz(mp.mpf(float(t))))] for t in ts],
        "theta": [[t, float(mp.siegeltheta(t))] for t in (10.0, 50.0, 99.0, 100.0, 1000.0, 1e5, 1e6, 1e7)],
    }
    picks = [1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 120, 160, 200, 250, 300, 380, 450, 520, 600, 649]
    data["zeros"] = [[n, float(mp.im(mp.zetazero(n)))] for n in picks]
    # spot check of the Euler-Maclaurin integrand against mpmath
    for t in (0.0, 7.0, 500.0, 9999.5):
        em = zeta_em_batch(np.array([t]))[0]
        ref = complex(mp.zeta(mp.mpc(0.5, t)))
        assert abs(em - ref) < 1e-9, (t, em, ref)
    data["hl_1e4"] = hl_oracle(1e4)
    # the same rule at order 20 shows convergence of the panel rule
    data["hl_1e4_order20"] = hl_oracle(1e4, order=20)
    Path(out).write_text(json.dumps(data, indent=1) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/data/oracles.json")

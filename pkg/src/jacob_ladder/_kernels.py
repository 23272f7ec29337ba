"""Panel kernels for integrating Z(t)^2 with the 21/10 Gauss-Kronrod pair."""

import math

import numpy as np
from numba import njit

from .zeta_core import TWO_PI, rs_remainder_jit, theta_jit, z_em_jit


@njit(cache=True, nogil=True)
def panels_em(start, h, npan, nodes, wk, wg, bern, out_k, out_g):
    """Direct Euler-Maclaurin evaluation at every node (low heights only)."""
    half = 0.5 * h
    for p in range(npan):
        c = start + (p + 0.5) * h
        sk = 0.0
        sg = 0.0
        for j in range(nodes.shape[0]):
            t = c + nodes[j] * half
            zt = z_em_jit(t, bern)
            f = zt * zt
            sk += wk[j] * f
            sg += wg[j] * f
        out_k[p] = sk * half
        out_g[p] = sg * half


@njit(cache=True, fastmath=True, nogil=True)
def panels_rs(start, h, npan, nodes, wk, wg, c0, c1, c2, c3, c4, out_k, out_g):
    """Riemann-Siegel evaluation with phasor recurrence across equal panels.

    The main-sum phasors n^(-1/2) exp(-i t ln n) at the panel centre are
    advanced by exp(-i h ln n) per panel; node offsets are a fixed table.
    """
    nn = nodes.shape[0]
    half = 0.5 * h
    end = start + npan * h
    nmax = int(math.sqrt(end / TWO_PI)) + 1
    br = np.empty(nmax + 1)
    bi = np.empty(nmax + 1)
    sr = np.empty(nmax + 1)
    si = np.empty(nmax + 1)
    off_r = np.empty((nn, nmax + 1))
    off_i = np.empty((nn, nmax + 1))
    c_first = start + half
    for n in range(1, nmax + 1):
        ln = math.log(n)
        a = 1.0 / math.sqrt(n)
        ph = c_first * ln
        br[n] = a * math.cos(ph)
        bi[n] = -a * math.sin(ph)
        sr[n] = math.cos(h * ln)
        si[n] = -math.sin(h * ln)
        for j in range(nn):
            q = nodes[j] * half * ln
            off_r[j, n] = math.cos(q)
            off_i[j, n] = -math.sin(q)
    for p in range(npan):
        c = start + (p + 0.5) * h
        sk = 0.0
        sg = 0.0
        for j in range(nn):
            t = c + nodes[j] * half
            nt = int(math.sqrt(t / TWO_PI))
            accr = 0.0
            acci = 0.0
            orow = off_r[j]
            oirow = off_i[j]
            for n in range(1, nt + 1):
                accr += br[n] * orow[n] - bi[n] * oirow[n]
                acci += br[n] * oirow[n] + bi[n] * orow[n]
            th = theta_jit(t)
            zt = 2.0 * (math.cos(th) * accr - math.sin(th) * acci)
            zt += rs_remainder_jit(t, c0, c1, c2, c3, c4)
            f = zt * zt
            sk += wk[j] * f
            sg += wg[j] * f
        out_k[p] = sk * half
        out_g[p] = sg * half
        for n in range(1, nmax + 1):
            r = br[n] * sr[n] - bi[n] * si[n]
            bi[n] = br[n] * si[n] + bi[n] * sr[n]
            br[n] = r

"""Regenerate src/jacob_ladder/_tables.py (Riemann-Siegel remainder
polynomials and Gauss-Kronrod 10/21 nodes) with mpmath."""

import sys
from pathlib import Path

import mpmath as mp

mp.mp.dps = 60
DEG = 90


def series_mul(a, b):
    out = [mp.mpf(0)] * DEG
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j in range(DEG - i):
            out[i + j] += ai * b[j]
    return out


def cos_series(poly):
    """cos(poly(x)) as a truncated power series; poly[0] may be nonzero."""
    c0 = poly[0]
    q = [mp.mpf(0)] + list(poly[1:])
    # cos(c0 + q) = cos c0 cos q - sin c0 sin q
    cq = [mp.mpf(0)] * DEG
    sq = [mp.mpf(0)] * DEG
    term = [mp.mpf(1)] + [mp.mpf(0)] * (DEG - 1)
    k = 0
    while any(term) and k < 2 * DEG:
        coef = term
        if k % 4 == 0:
            cq = [x + y / mp.factorial(k) for x, y in zip(cq, coef)]
        elif k % 4 == 1:
            sq = [x + y / mp.factorial(k) for x, y in zip(sq, coef)]
        elif k % 4 == 2:
            cq = [x - y / mp.factorial(k) for x, y in zip(cq, coef)]
        else:
            sq = [x - y / mp.factorial(k) for x, y in zip(sq, coef)]
        term = series_mul(term, q)
        k += 1
    return [mp.cos(c0) * x - mp.sin(c0) * y for x, y in zip(cq, sq)]


def series_div(a, b):
    out = [mp.mpf(0)] * DEG
    for n in range(DEG):
        s = a[n] - sum(out[k] * b[n - k] for k in range(n))
        out[n] = s / b[0]
    return out


def remainder_polys():
    # Psi(p) = cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p), x = p - 1/2
    pi = mp.pi
    num = cos_series([2 * pi * mp.mpf(-5) / 16, 0, 2 * pi] + [0] * (DEG - 3))
    den = cos_series([pi, 2 * pi] + [0] * (DEG - 2))
    psi = series_div(num, den)

    def d(k):
        return [psi[n + k] * mp.factorial(n + k) / mp.factorial(n) for n in range(DEG - k)]

    def comb(pairs):
        out = [mp.mpf(0)] * (DEG - 12)
        for coef, k in pairs:
            dk = d(k)
            for n in range(DEG - 12):
                out[n] += coef * dk[n]
        return out

    C = [
        comb([(1, 0)]),
        comb([(-1 / (96 * pi**2), 3)]),
        comb([(1 / (18432 * pi**4), 6), (1 / (64 * pi**2), 2)]),
        comb([(-1 / (5308416 * pi**6), 9), (-1 / (3840 * pi**4), 5), (-1 / (64 * pi**2), 1)]),
        comb([(1 / (2038431744 * pi**8), 12), (11 / (5898240 * pi**6), 8),
              (19 / (24576 * pi**4), 4), (1 / (128 * pi**2), 0)]),
    ]
    trimmed = []
    for c in C:
        # |x| <= 1/2 on the working range; drop terms below 1e-22
        last = max(i for i, v in enumerate(c) if abs(v) * mp.mpf(0.5) ** i > mp.mpf("1e-22"))
        trimmed.append(c[: last + 1])
    return trimmed


def kronrod(n=10):
    """Gauss-Kronrod (n, 2n+1) nodes/weights on [-1, 1] by Stieltjes polynomial roots."""
    L = [mp.legendre(k, mp.mpf(0)) for k in range(0)]
    del L
    # E_{n+1}(x) = sum_j a_j P_j(x), j = n+1, n-1, ..., orthogonal to x^k P_n for k <= n
    m = n + 1
    idx = list(range(m, -1, -2))
    unknown = idx[1:]

    def quad(f):
        return mp.quad(f, [-1, 0, 1])

    A = mp.matrix(len(unknown), len(unknown))
    rhs = mp.matrix(len(unknown), 1)
    test_degs = list(range(0, n + 1))
    # choose orthogonality against P_k * P_n, k with parity matching
    rows = [k for k in test_degs if (k + n + m) % 2 == 0][: len(unknown)]
    for i, k in enumerate(rows):
        for j, q in enumerate(unknown):
            A[i, j] = quad(lambda x: mp.legendre(q, x) * mp.legendre(n, x) * mp.legendre(k, x))
        rhs[i] = -quad(lambda x: mp.legendre(m, x) * mp.legendre(n, x) * mp.legendre(k, x))
    coeffs = mp.lu_solve(A, rhs)

    def E(x):
        return mp.legendre(m, x) + sum(coeffs[j] * mp.legendre(q, x) for j, q in enumerate(unknown))

    gx = sorted(mp.polyroots(mp.taylor(lambda x: mp.legendre(n, x), 0, n)[::-1], maxsteps=200, extraprec=200))
    ex = sorted(mp.polyroots(mp.taylor(E, 0, m)[::-1], maxsteps=200, extraprec=200))
    gx = [mp.re(v) for v in gx]
    ex = [mp.re(v) for v in ex]
    nodes = sorted(gx + ex)
    # weights from exactness on Legendre moments
    N = len(nodes)
    V = mp.matrix(N, N)
    b = mp.matrix(N, 1)
    for i in range(N):
        for j in range(N):
            V[i, j] = mp.legendre(i, nodes[j])
        b[i] = 2 if i == 0 else 0
    wk = mp.lu_solve(V, b)
    Vg = mp.matrix(n, n)
    bg = mp.matrix(n, 1)
    for i in range(n):
        for j in range(n):
            Vg[i, j] = mp.legendre(i, gx[j])
        bg[i] = 2 if i == 0 else 0
    wg = mp.lu_solve(Vg, bg)
    gauss_w = []
    for x in nodes:
        hit = [wg[j] for j, g in enumerate(gx) if abs(g - x) < mp.mpf("1e-40")]
        gauss_w.append(hit[0] if hit else mp.mpf(0))
    return nodes, list(wk), gauss_w


def fmt(v):
    if abs(v) < mp.mpf("1e-40"):
        return "0.0"
    return mp.nstr(v, 20, min_fixed=-30, max_fixed=30)


def main(out):
    C = remainder_polys()
    nodes, wk, wg = kronrod(10)
    lines = ['"""Generated by tools/gen_tables.py; do not edit."""', "", "import numpy as np", ""]
    lines.append("# Riemann-Siegel remainder coefficients C0..C4 as polynomials in (p - 1/2), low order first")
    lines.append("RS_COEFFS = (")
    for c in C:
        lines.append("    np.array([")
        for v in c:
            lines.append(f"        {fmt(v)},")
        lines.append("    ]),")
    lines.append(")")
    lines.append("")
    lines.append("# Gauss-Kronrod 21-point rule on [-1, 1] with embedded 10-point Gauss weights")
    for name, arr in (("GK_NODES", nodes), ("GK_WEIGHTS", wk), ("G_WEIGHTS", wg)):
        lines.append(f"{name} = np.array([")
        for v in arr:
            lines.append(f"    {fmt(v)},")
        lines.append("])")
    Path(out).write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "src/jacob_ladder/_tables.py")

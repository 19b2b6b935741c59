"""Numpy fallback for the compiled Hermite-function kernels.

Vectorized over points, sequential over mode index, so results match the
compiled core up to the last-bit behaviour of ``exp``.
"""

import numpy as np


def ladder(n_top, x, up, down, c0):
    x = np.asarray(x, dtype=np.float64)
    out = np.empty((n_top + 1, x.shape[0]))
    out[0] = c0 * np.exp(-0.5 * x * x)
    if n_top >= 1:
        out[1] = up[0] * x * out[0]
    for k in range(1, n_top):
        out[k + 1] = up[k] * x * out[k] - down[k] * out[k - 1]
    return out


def overlap_sums(n_modes, x, xp, w, up, down, c0):
    x = np.asarray(x, dtype=np.float64)
    xp = np.asarray(xp, dtype=np.float64)
    a = c0 * np.exp(-0.5 * x * x)
    ap = c0 * np.exp(-0.5 * xp * xp)
    a_prev = np.zeros_like(a)
    ap_prev = np.zeros_like(ap)
    f = np.zeros_like(a)
    nx = np.zeros_like(a)
    nxp = np.zeros_like(a)
    fw = np.zeros_like(a)
    for k in range(n_modes):
        prod = a * ap
        f = f + prod
        nx = nx + a * a
        nxp = nxp + ap * ap
        fw = fw + w[k] * prod
        if k + 1 < n_modes:
            if k == 0:
                a_next = up[0] * x * a
                ap_next = up[0] * xp * ap
            else:
                a_next = up[k] * x * a - down[k] * a_prev
                ap_next = up[k] * xp * ap - down[k] * ap_prev
            a_prev, ap_prev = a, ap
            a, ap = a_next, ap_next
    return f, nx, nxp, fw


def exchange_sums(n_modes, x, xp, up, down, c0):
    top = max(n_modes - 1, 0)
    a = ladder(top, x, up, down, c0)
    b = ladder(top, xp, up, down, c0)
    acc = np.zeros(a.shape[1])
    for m in range(n_modes):
        for n in range(m + 1, n_modes):
            t = a[m] * b[n] - a[n] * b[m]
            acc = acc + t * t
    return acc

# cython: boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled Hermite-function kernels.

Same recurrence, coefficient tables and summation order as ``_pykernels``;
the two differ only through the platform ``exp``.
"""
import numpy as np

from libc.math cimport exp


def ladder(int n_top, const double[::1] x, const double[::1] up,
           const double[::1] down, double c0):
    cdef Py_ssize_t npts = x.shape[0]
    out = np.empty((n_top + 1, npts), dtype=np.float64)
    cdef double[:, ::1] o = out
    cdef Py_ssize_t i
    cdef int k
    cdef double xi
    for i in range(npts):
        xi = x[i]
        o[0, i] = c0 * exp(-0.5 * xi * xi)
        if n_top >= 1:
            o[1, i] = up[0] * xi * o[0, i]
        for k in range(1, n_top):
            o[k + 1, i] = up[k] * xi * o[k, i] - down[k] * o[k - 1, i]
    return out


def overlap_sums(int n_modes, const double[::1] x, const double[::1] xp,
                 const double[::1] w, const double[::1] up,
                 const double[::1] down, double c0):
    cdef Py_ssize_t npts = x.shape[0]
    f_arr = np.zeros(npts)
    nx_arr = np.zeros(npts)
    nxp_arr = np.zeros(npts)
    fw_arr = np.zeros(npts)
    cdef double[::1] f = f_arr
    cdef double[::1] nx = nx_arr
    cdef double[::1] nxp = nxp_arr
    cdef double[::1] fw = fw_arr
    cdef Py_ssize_t i
    cdef int k
    cdef double a, ap, a_prev, ap_prev, a_next, ap_next, xi, xpi
    cdef double sf, sn, snp, sw
    for i in range(npts):
        xi = x[i]
        xpi = xp[i]
        a = c0 * exp(-0.5 * xi * xi)
        ap = c0 * exp(-0.5 * xpi * xpi)
        a_prev = 0.0
        ap_prev = 0.0
        sf = 0.0
        sn = 0.0
        snp = 0.0
        sw = 0.0
        for k in range(n_modes):
            sf = sf + a * ap
            sn = sn + a * a
            snp = snp + ap * ap
            sw = sw + w[k] * (a * ap)
            if k + 1 < n_modes:
                if k == 0:
                    a_next = up[0] * xi * a
                    ap_next = up[0] * xpi * ap
                else:
                    a_next = up[k] * xi * a - down[k] * a_prev
                    ap_next = up[k] * xpi * ap - down[k] * ap_prev
                a_prev = a
                ap_prev = ap
                a = a_next
                ap = ap_next
        f[i] = sf
        nx[i] = sn
        nxp[i] = snp
        fw[i] = sw
    return f_arr, nx_arr, nxp_arr, fw_arr


def exchange_sums(int n_modes, const double[::1] x, const double[::1] xp,
                  const double[::1] up, const double[::1] down, double c0):
    """sum_{m<n} (phi_m(x) phi_n(x') - phi_n(x) phi_m(x'))**2 per point pair."""
    cdef Py_ssize_t npts = x.shape[0]
    out_arr = np.zeros(npts)
    cdef double[::1] out = out_arr
    a_arr = np.empty(max(n_modes, 1))
    b_arr = np.empty(max(n_modes, 1))
    cdef double[::1] a = a_arr
    cdef double[::1] b = b_arr
    cdef Py_ssize_t i
    cdef int k, m, n
    cdef double xi, xpi, acc, t
    for i in range(npts):
        xi = x[i]
        xpi = xp[i]
        a[0] = c0 * exp(-0.5 * xi * xi)
        b[0] = c0 * exp(-0.5 * xpi * xpi)
        if n_modes >= 2:
            a[1] = up[0] * xi * a[0]
            b[1] = up[0] * xpi * b[0]
        for k in range(1, n_modes - 1):
            a[k + 1] = up[k] * xi * a[k] - down[k] * a[k - 1]
            b[k + 1] = up[k] * xpi * b[k] - down[k] * b[k - 1]
        acc = 0.0
        for m in range(n_modes):
            for n in range(m + 1, n_modes):
                t = a[m] * b[n] - a[n] * b[m]
                acc = acc + t * t
        out[i] = acc
    return out_arr

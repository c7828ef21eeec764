# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled cyclic Jacobi eigensolver for complex Hermitian matrices."""

import numpy as np
cimport numpy as cnp
from libc.math cimport sqrt, fabs

cnp.import_array()

DEF MAX_SWEEPS_DEFAULT = 100


cdef double _offdiag_norm(double complex[:, ::1] a, Py_ssize_t n) nogil:
    cdef Py_ssize_t p, q
    cdef double acc = 0.0
    cdef double re, im
    for p in range(n - 1):
        for q in range(p + 1, n):
            re = a[p, q].real
            im = a[p, q].imag
            acc += 2.0 * (re * re + im * im)
    return sqrt(acc)


def jacobi_eigh(h, int max_sweeps=MAX_SWEEPS_DEFAULT, double rtol=1e-14):
    """Diagonalize a Hermitian matrix; returns (eigenvalues, vectors, sweeps)."""
    cdef cnp.ndarray[cnp.complex128_t, ndim=2] a_arr = np.array(h, dtype=np.complex128, order="C")
    cdef Py_ssize_t n = a_arr.shape[0]
    cdef cnp.ndarray[cnp.complex128_t, ndim=2] v_arr = np.eye(n, dtype=np.complex128)
    if n == 1:
        return np.array([a_arr[0, 0].real]), v_arr, 0

    cdef double complex[:, ::1] a = a_arr
    cdef double complex[:, ::1] v = v_arr

    cdef double fro = 0.0
    cdef Py_ssize_t i, j, p, q, sweep
    cdef double re, im
    for i in range(n):
        for j in range(n):
            re = a[i, j].real
            im = a[i, j].imag
            fro += re * re + im * im
    fro = sqrt(fro)
    if fro == 0.0:
        return np.zeros(n), v_arr, 0
    cdef double thresh = rtol * fro

    cdef double ag, alpha, beta, theta, sgn, t, c, s
    cdef double complex g, phase, cp, sp, tp, tq
    cdef int sweeps = max_sweeps
    cdef bint converged = 0

    for sweep in range(max_sweeps):
        if _offdiag_norm(a, n) <= thresh:
            sweeps = sweep
            converged = 1
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                g = a[p, q]
                ag = sqrt(g.real * g.real + g.imag * g.imag)
                if ag == 0.0:
                    continue
                phase = g / ag
                alpha = a[p, p].real
                beta = a[q, q].real
                theta = (alpha - beta) / (2.0 * ag)
                sgn = 1.0 if theta >= 0.0 else -1.0
                t = sgn / (fabs(theta) + sqrt(1.0 + theta * theta))
                c = 1.0 / sqrt(1.0 + t * t)
                s = t * c
                cp = c * phase
                sp = s * phase

                for i in range(n):
                    tp = a[i, p]
                    tq = a[i, q]
                    a[i, p] = tp * cp + tq * s
                    a[i, q] = -tp * sp + tq * c
                for j in range(n):
                    tp = a[p, j]
                    tq = a[q, j]
                    a[p, j] = cp.conjugate() * tp + s * tq
                    a[q, j] = -sp.conjugate() * tp + c * tq
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real

                for i in range(n):
                    tp = v[i, p]
                    tq = v[i, q]
                    v[i, p] = tp * cp + tq * s
                    v[i, q] = -tp * sp + tq * c

    vals = np.empty(n, dtype=np.float64)
    for i in range(n):
        vals[i] = a[i, i].real
    return vals, v_arr, sweeps

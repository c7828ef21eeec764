"""Pure NumPy cyclic Jacobi eigensolver for complex Hermitian matrices.

Fallback used when the compiled extension is unavailable.  Same rotation
order and convergence policy as the Cython kernel.
"""

import numpy as np

MAX_SWEEPS = 100
OFFDIAG_RTOL = 1e-14


def _offdiag_norm(a):
    n = a.shape[0]
    acc = 0.0
    for p in range(n - 1):
        for q in range(p + 1, n):
            acc += 2.0 * (a[p, q].real ** 2 + a[p, q].imag ** 2)
    return np.sqrt(acc)


def jacobi_eigh(h, max_sweeps=MAX_SWEEPS, rtol=OFFDIAG_RTOL):
    """Diagonalize a Hermitian matrix by cyclic Jacobi rotations.

    Returns ``(eigenvalues, vectors)`` unsorted; columns of ``vectors``
    are the eigenvectors.  Raises no exception on slow convergence; the
    caller checks the sweep count via the third return value.
    """
    a = np.array(h, dtype=np.complex128)
    n = a.shape[0]
    v = np.eye(n, dtype=np.complex128)
    if n == 1:
        return np.array([a[0, 0].real]), v, 0

    fro = float(np.linalg.norm(a))
    if fro == 0.0:
        return np.zeros(n), v, 0
    thresh = rtol * fro

    sweeps = max_sweeps
    for sweep in range(max_sweeps):
        if _offdiag_norm(a) <= thresh:
            sweeps = sweep
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                g = a[p, q]
                ag = abs(g)
                if ag == 0.0:
                    continue
                phase = g / ag
                alpha = a[p, p].real
                beta = a[q, q].real
                theta = (alpha - beta) / (2.0 * ag)
                sgn = 1.0 if theta >= 0.0 else -1.0
                t = sgn / (abs(theta) + np.sqrt(1.0 + theta * theta))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                cp = c * phase
                sp = s * phase

                col_p = a[:, p] * cp + a[:, q] * s
                col_q = -a[:, p] * sp + a[:, q] * c
                a[:, p] = col_p
                a[:, q] = col_q
                row_p = np.conj(cp) * a[p, :] + s * a[q, :]
                row_q = -np.conj(sp) * a[p, :] + c * a[q, :]
                a[p, :] = row_p
                a[q, :] = row_q
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real

                vcol_p = v[:, p] * cp + v[:, q] * s
                vcol_q = -v[:, p] * sp + v[:, q] * c
                v[:, p] = vcol_p
                v[:, q] = vcol_q

    return np.real(np.diag(a)).copy(), v, sweeps

# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled spectral-sum kernel.

Fused weighted reduction of the per-node KL and MI integrands over a
tensor-product frequency grid.  This inner loop dominates the runtime of
density sweeps and finite-lattice validation, hence the compiled core;
``sfcar._specsum_py`` provides the drop-in NumPy fallback.
"""

from libc.math cimport log1p


def rate_sums(double[::1] cos1, double[::1] w1,
              double[::1] cos2, double[::1] w2,
              double zeta, double snr, double cnorm):
    """Return (kli_sum, mi_sum) with

        mi_sum  = sum_ij w1[i] w2[j] * 0.5*log(1 + s_ij)
        kli_sum = sum_ij w1[i] w2[j] * (0.5*log(1 + s_ij) - 0.5*s_ij/(1 + s_ij))

    where s_ij = snr / (cnorm * (1 - 2*zeta*(cos1[i] + cos2[j]))).
    Accumulation order is fixed (row-major), so results are deterministic.
    """
    cdef Py_ssize_t n1 = cos1.shape[0]
    cdef Py_ssize_t n2 = cos2.shape[0]
    cdef Py_ssize_t i, j
    cdef double two_zeta = 2.0 * zeta
    cdef double kli = 0.0, mi = 0.0
    cdef double row_k, row_m, s, m, c1i
    for i in range(n1):
        c1i = cos1[i]
        row_k = 0.0
        row_m = 0.0
        for j in range(n2):
            s = snr / (cnorm * (1.0 - two_zeta * (c1i + cos2[j])))
            m = 0.5 * log1p(s)
            row_m += w2[j] * m
            row_k += w2[j] * (m - 0.5 * s / (1.0 + s))
        kli += w1[i] * row_k
        mi += w1[i] * row_m
    return kli, mi

# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: linear sieves and compensated reductions.

The pure-python twin of this module is ``_kernels_py``; both expose the
same functions and ``_backend`` picks one at import time.  Every table
routine returns a numpy array of length n+1 indexed directly by k, with
slot 0 unused.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport fabs, log

cnp.import_array()


def spf_sieve(Py_ssize_t n):
    """Smallest-prime-factor table via a linear (Euler) sieve, O(n)."""
    if n < 1:
        raise ValueError("spf_sieve needs n >= 1")
    out = np.zeros(n + 1, dtype=np.int32)
    cdef cnp.int32_t[::1] spf = out
    # pi(n) < 1.3 n/ln n for n >= 17; generous floor covers small n.
    cdef Py_ssize_t cap = 32 + (<Py_ssize_t>(1.3 * n / log(n)) if n >= 17 else n)
    primes_arr = np.empty(cap, dtype=np.int32)
    cdef cnp.int32_t[::1] primes = primes_arr
    cdef Py_ssize_t k, j, count = 0
    cdef Py_ssize_t p
    with nogil:
        for k in range(2, n + 1):
            if spf[k] == 0:
                spf[k] = <cnp.int32_t>k
                primes[count] = <cnp.int32_t>k
                count += 1
            for j in range(count):
                p = primes[j]
                if p > spf[k] or k * p > n:
                    break
                spf[k * p] = <cnp.int32_t>p
    if n >= 1:
        spf[1] = 1
    return out


def phi_from_spf(const cnp.int32_t[::1] spf):
    """Euler totient table driven by an spf table: phi(mp) = phi(m)*p or *(p-1)."""
    cdef Py_ssize_t n = spf.shape[0] - 1
    out = np.zeros(n + 1, dtype=np.int64)
    cdef cnp.int64_t[::1] phi = out
    cdef Py_ssize_t k, m
    cdef cnp.int64_t p
    if n >= 1:
        phi[1] = 1
    with nogil:
        for k in range(2, n + 1):
            p = spf[k]
            m = k // p
            if m % p == 0:
                phi[k] = phi[m] * p
            else:
                phi[k] = phi[m] * (p - 1)
    return out


def jordan_from_spf(const cnp.int32_t[::1] spf, int v):
    """Jordan totient of order v; the caller guarantees n**v < 2**63."""
    cdef Py_ssize_t n = spf.shape[0] - 1
    out = np.zeros(n + 1, dtype=np.int64)
    cdef cnp.int64_t[::1] jv = out
    cdef Py_ssize_t k, m
    cdef cnp.int64_t p, pv
    cdef int i
    if n >= 1:
        jv[1] = 1
    with nogil:
        for k in range(2, n + 1):
            p = spf[k]
            pv = 1
            for i in range(v):
                pv *= p
            m = k // p
            if m % p == 0:
                jv[k] = jv[m] * pv
            else:
                jv[k] = jv[m] * (pv - 1)
    return out


def mobius_from_spf(const cnp.int32_t[::1] spf):
    """Mobius function table: 0 on squarefull k, else (-1)**(number of primes)."""
    cdef Py_ssize_t n = spf.shape[0] - 1
    out = np.zeros(n + 1, dtype=np.int8)
    cdef cnp.int8_t[::1] mu = out
    cdef Py_ssize_t k, m
    cdef cnp.int64_t p
    if n >= 1:
        mu[1] = 1
    with nogil:
        for k in range(2, n + 1):
            p = spf[k]
            m = k // p
            if m % p == 0:
                mu[k] = 0
            else:
                mu[k] = -mu[m]
    return out


def sigma_from_spf(const cnp.int32_t[::1] spf):
    """Divisor-sum table; tracks sigma(p^e) of the smallest-prime part."""
    cdef Py_ssize_t n = spf.shape[0] - 1
    out = np.zeros(n + 1, dtype=np.int64)
    aux = np.zeros(n + 1, dtype=np.int64)
    cdef cnp.int64_t[::1] sig = out
    cdef cnp.int64_t[::1] sp = aux  # sigma of the spf-power dividing k
    cdef Py_ssize_t k, m
    cdef cnp.int64_t p
    if n >= 1:
        sig[1] = 1
        sp[1] = 1
    with nogil:
        for k in range(2, n + 1):
            p = spf[k]
            m = k // p
            if m % p == 0:
                sp[k] = sp[m] * p + 1
                sig[k] = (sig[m] // sp[m]) * sp[k]
            else:
                sp[k] = 1 + p
                sig[k] = sig[m] * (1 + p)
    return out


def neumaier_partial_sums(const double[::1] terms, const cnp.int64_t[::1] bounds):
    """Compensated prefix sums: out[i] = sum of the first bounds[i] terms.

    ``bounds`` must be ascending prefix lengths, each <= len(terms).
    Neumaier's variant of Kahan summation keeps the running error term.
    """
    cdef Py_ssize_t n = terms.shape[0]
    cdef Py_ssize_t nb = bounds.shape[0]
    out = np.empty(nb, dtype=np.float64)
    cdef double[::1] res = out
    cdef double s = 0.0, c = 0.0, t, x
    cdef Py_ssize_t k, bi = 0
    with nogil:
        while bi < nb and bounds[bi] == 0:
            res[bi] = 0.0
            bi += 1
        for k in range(n):
            x = terms[k]
            t = s + x
            if fabs(s) >= fabs(x):
                c += (s - t) + x
            else:
                c += (x - t) + s
            s = t
            while bi < nb and bounds[bi] == k + 1:
                res[bi] = s + c
                bi += 1
            if bi == nb:
                break
    return out


def neumaier_sum(const double[::1] terms):
    """Compensated sum of the whole array."""
    cdef Py_ssize_t n = terms.shape[0]
    cdef double s = 0.0, c = 0.0, t, x
    cdef Py_ssize_t k
    with nogil:
        for k in range(n):
            x = terms[k]
            t = s + x
            if fabs(s) >= fabs(x):
                c += (s - t) + x
            else:
                c += (x - t) + s
            s = t
    return s + c

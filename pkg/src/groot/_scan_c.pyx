# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled tau scan; same contract as ``groot._scan_py.tau_extrema``."""
from libc.stdlib cimport malloc, realloc, free


cdef inline long long _floordiv(long long p, long long q) nogil:
    cdef long long r = p / q
    if (p % q != 0) and ((p < 0) != (q < 0)):
        r -= 1
    return r


cdef int _push(long long **buf, Py_ssize_t *size, Py_ssize_t *cap, long long v) nogil:
    cdef long long *grown
    if size[0] == cap[0]:
        grown = <long long *> realloc(buf[0], 2 * cap[0] * sizeof(long long))
        if grown == NULL:
            return -1
        buf[0] = grown
        cap[0] *= 2
    buf[0][size[0]] = v
    size[0] += 1
    return 0


def tau_extrema(long long e0, alphas, omegas, long long horizon):
    cdef long long a1 = alphas[0], a2 = alphas[1], a3 = alphas[2]
    cdef long long w1 = omegas[0], w2 = omegas[1], w3 = omegas[2]
    cdef long long n, delta, tau = 0
    cdef bint rising = True
    cdef int err = 0
    cdef Py_ssize_t nmin = 0, nmax = 0, cmin = 64, cmax = 64, i
    cdef long long *mins = <long long *> malloc(cmin * sizeof(long long))
    cdef long long *maxs = <long long *> malloc(cmax * sizeof(long long))
    if mins == NULL or maxs == NULL:
        free(mins)
        free(maxs)
        raise MemoryError()
    try:
        with nogil:
            err = _push(&mins, &nmin, &cmin, 0)
            n = 0
            while n < horizon and err == 0:
                delta = (1 - n * e0 + _floordiv(-n * w1, a1)
                         + _floordiv(-n * w2, a2) + _floordiv(-n * w3, a3))
                if delta > 0:
                    if not rising:
                        err = _push(&mins, &nmin, &cmin, tau)
                        rising = True
                elif delta < 0:
                    if rising:
                        err = _push(&maxs, &nmax, &cmax, tau)
                        rising = False
                tau += delta
                n += 1
        if err:
            raise MemoryError()
        minima = [mins[i] for i in range(nmin)]
        maxima = [maxs[i] for i in range(nmax)]
    finally:
        free(mins)
        free(maxs)
    return minima, maxima, bool(rising)

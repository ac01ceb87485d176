# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled arithmetic kernels (int64 fast path with overflow guard).

Same contract as ``_pykernel``: lists of Python ints in, list out, exact
results.  Inputs whose coefficients could overflow signed 64-bit arithmetic
are delegated to the pure-Python kernel, so exactness never depends on the
fast path applying.
"""

from libc.stdlib cimport free, malloc

from . import _pykernel

BACKEND = "c"

# Intermediate values are kept below 2**62 so a further add/sub cannot wrap.
cdef long long _LIMIT = (<long long> 1) << 62


cdef long long _absmax(list xs) except? -1:
    cdef long long m = 0
    cdef object x
    cdef long long v
    for x in xs:
        v = x  # raises OverflowError for ints outside long long
        if v < 0:
            v = -v
        if v > m:
            m = v
    return m


def polymul(list a, list b):
    """Schoolbook product; falls back to Python ints on potential overflow."""
    cdef Py_ssize_t la = len(a), lb = len(b), i, j
    cdef long long ma, mb
    try:
        ma = _absmax(a)
        mb = _absmax(b)
    except OverflowError:
        return _pykernel.polymul(a, b)
    cdef Py_ssize_t lmin = la if la < lb else lb
    # bound check in Python ints (cannot itself overflow)
    if (<object> ma) * mb * lmin > _LIMIT:
        return _pykernel.polymul(a, b)

    cdef long long *ca = <long long *> malloc(la * sizeof(long long))
    cdef long long *cb = <long long *> malloc(lb * sizeof(long long))
    cdef long long *out = <long long *> malloc((la + lb - 1) * sizeof(long long))
    if ca == NULL or cb == NULL or out == NULL:
        free(ca); free(cb); free(out)
        raise MemoryError
    try:
        for i in range(la):
            ca[i] = a[i]
        for j in range(lb):
            cb[j] = b[j]
        for i in range(la + lb - 1):
            out[i] = 0
        for i in range(la):
            if ca[i]:
                for j in range(lb):
                    out[i + j] += ca[i] * cb[j]
        return [out[i] for i in range(la + lb - 1)]
    finally:
        free(ca); free(cb); free(out)


def poly_reduce(list vec, Py_ssize_t n, list phi_idx, list phi_val):
    """Synthetic division by the monic modulus; guarded int64 arithmetic."""
    cdef Py_ssize_t lv = len(vec), nz = len(phi_idx), k, t, base
    cdef long long mv, mphi, c, ac, cur
    if lv < n:
        return _pykernel.poly_reduce(vec, n, phi_idx, phi_val)
    try:
        mv = _absmax(vec)
        mphi = _absmax(phi_val)
    except OverflowError:
        return _pykernel.poly_reduce(vec, n, phi_idx, phi_val)
    if mphi == 0:
        mphi = 1

    cdef long long *v = <long long *> malloc(lv * sizeof(long long))
    cdef long long *pv = <long long *> malloc((nz if nz else 1) * sizeof(long long))
    cdef Py_ssize_t *pi = <Py_ssize_t *> malloc((nz if nz else 1) * sizeof(Py_ssize_t))
    if v == NULL or pv == NULL or pi == NULL:
        free(v); free(pv); free(pi)
        raise MemoryError
    try:
        for k in range(lv):
            v[k] = vec[k]
        for t in range(nz):
            pi[t] = phi_idx[t]
            pv[t] = phi_val[t]
        # invariant: |v[i]| <= cur for all i throughout the elimination
        cur = mv
        for k in range(lv - 1, n - 1, -1):
            c = v[k]
            if c:
                v[k] = 0
                ac = -c if c < 0 else c
                if ac > (_LIMIT - cur) // mphi:
                    return _pykernel.poly_reduce(vec, n, phi_idx, phi_val)
                cur += ac * mphi
                base = k - n
                for t in range(nz):
                    v[base + pi[t]] -= c * pv[t]
        return [v[k] for k in range(n)]
    finally:
        free(v); free(pv); free(pi)


def polymul_reduce(list a, list b, Py_ssize_t n, list phi_idx, list phi_val):
    """(a*b) mod the monic modulus described by (n, phi_idx, phi_val)."""
    return poly_reduce(polymul(a, b), n, phi_idx, phi_val)

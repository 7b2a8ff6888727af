# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the kernels in ``_pykernels``.

Same signatures, same witness ordering.  Tables arrive as read-only
C-contiguous ``int32`` arrays.
"""
import numpy as np

BACKEND = "cython"


def assoc_witness(const int[:, :, ::1] T):
    cdef Py_ssize_t n = T.shape[0]
    cdef int x, y, z, t, u, w
    for x in range(n):
        for y in range(n):
            for z in range(n):
                w = T[x, y, z]
                for t in range(n):
                    for u in range(n):
                        if T[w, t, u] != T[x, T[y, t, u], T[z, t, u]]:
                            return (x, y, z, t, u)
    return None


def derived_witness(const int[:, :, ::1] T):
    cdef Py_ssize_t n = T.shape[0]
    cdef int x, y, z, t, w
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if T[x, y, T[x, y, z]] != T[x, y, z]:
                    return ("absorption", (x, y, z))
    for x in range(n):
        for y in range(n):
            for z in range(n):
                w = T[x, y, z]
                for t in range(n):
                    if T[T[w, x, t], T[w, z, t], T[w, y, t]] != w:
                        return ("reconstruction", (x, y, z, t))
    return None


def hom_witness(const int[:, :, ::1] TA, const int[:, :, ::1] TB, f):
    cdef int[::1] fv = np.ascontiguousarray(f, dtype=np.int32)
    cdef Py_ssize_t n = TA.shape[0]
    cdef int x, y, z
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if fv[TA[x, y, z]] != TB[fv[x], fv[y], fv[z]]:
                    return (x, y, z)
    return None


cdef bint _is_hom(const int[:, :, ::1] TA, const int[:, :, ::1] TB, int[::1] f, Py_ssize_t n) nogil:
    cdef int x, y, z
    for x in range(n):
        for y in range(x, n):
            for z in range(y, n):
                if f[TA[x, y, z]] != TB[f[x], f[y], f[z]]:
                    return False
    return True


def brute_homs(const int[:, :, ::1] TA, const int[:, :, ::1] TB):
    cdef Py_ssize_t na = TA.shape[0]
    cdef int nb = TB.shape[0]
    cdef int[::1] f = np.zeros(na, dtype=np.int32)
    cdef Py_ssize_t i
    out = []
    while True:
        if _is_hom(TA, TB, f, na):
            out.append(np.asarray(f).copy())
        # odometer, last coordinate fastest
        i = na - 1
        while i >= 0:
            f[i] += 1
            if f[i] < nb:
                break
            f[i] = 0
            i -= 1
        if i < 0:
            break
    if not out:
        return np.empty((0, na), dtype=np.int32)
    return np.stack(out).astype(np.int32)


cdef bint _convex(const int[:, :, ::1] T, unsigned long long mask, Py_ssize_t n) nogil:
    cdef int c1, c2, a
    for c1 in range(n):
        if not (mask >> c1) & 1:
            continue
        for c2 in range(c1, n):
            if not (mask >> c2) & 1:
                continue
            for a in range(n):
                if not (mask >> T[c1, c2, a]) & 1:
                    return False
    return True


def prime_convex_masks(const int[:, :, ::1] T):
    cdef Py_ssize_t n = T.shape[0]
    cdef unsigned long long full = (1ULL << n) - 1
    cdef unsigned long long mask
    out = []
    for mask in range(full + 1):
        if _convex(T, mask, n) and _convex(T, full ^ mask, n):
            out.append(int(mask))
    return out


def a2_subalgebra_witness(const int[:, :, ::1] T):
    cdef Py_ssize_t n = T.shape[0]
    cdef int p, q, r, s, c
    for p in range(n):
        for q in range(p + 1, n):
            for r in range(q + 1, n):
                c = T[p, q, r]
                for s in range(r + 1, n):
                    if c != p and c != q and c != r and c != s:
                        continue
                    if T[p, q, s] == c and T[p, r, s] == c and T[q, r, s] == c:
                        return (p, q, r, s), c
    return None

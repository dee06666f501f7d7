# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled flag propagation; same contract as ``_flagkernel_py``."""
import numpy as np
cimport numpy as cnp

cnp.import_array()


cdef bint _propagate(const long[:, ::1] a, const long[:, ::1] b, long base, long target,
                     long[::1] phi, long[::1] stack) nogil:
    cdef Py_ssize_t n = a.shape[1]
    cdef Py_ssize_t i, top = 0, count = 1
    cdef int s
    cdef long x, y, xs, ys, cur
    for i in range(n):
        phi[i] = -1
    phi[base] = target
    stack[0] = base
    top = 1
    while top > 0:
        top -= 1
        x = stack[top]
        y = phi[x]
        for s in range(3):
            xs = a[s, x]
            ys = b[s, y]
            cur = phi[xs]
            if cur < 0:
                phi[xs] = ys
                stack[top] = xs
                top += 1
                count += 1
            elif cur != ys:
                return False
    return count == n


def propagate(a, b, long base, long target):
    a = np.ascontiguousarray(a, dtype=np.int_)
    b = np.ascontiguousarray(b, dtype=np.int_)
    if a.shape[1] != b.shape[1]:
        return None
    phi = np.empty(a.shape[1], dtype=np.int_)
    stack = np.empty(a.shape[1], dtype=np.int_)
    if _propagate(a, b, base, target, phi, stack):
        return phi.tolist()
    return None


def search(a, b, long base, candidates):
    cdef const long[:, ::1] av = np.ascontiguousarray(a, dtype=np.int_)
    cdef const long[:, ::1] bv = np.ascontiguousarray(b, dtype=np.int_)
    out = []
    if av.shape[1] != bv.shape[1]:
        return out
    phi = np.empty(av.shape[1], dtype=np.int_)
    stack = np.empty(av.shape[1], dtype=np.int_)
    cdef long[::1] pv = phi
    cdef long[::1] sv = stack
    cdef long t
    for t in candidates:
        if _propagate(av, bv, base, t, pv, sv):
            out.append(phi.tolist())
    return out

# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops; see ``_kernels_py`` for the reference semantics."""

import numpy as np

from libc.math cimport floor


def tile_colours(const double[::1] xs, const double[::1] ys, double side,
                 double row_shift, long colours, long sign):
    cdef Py_ssize_t n = xs.shape[0]
    cdef Py_ssize_t i
    cdef double row
    cdef long col
    out = np.empty(n, dtype=np.int64)
    cdef long long[::1] res = out
    for i in range(n):
        row = floor(ys[i] / side)
        col = <long>floor((xs[i] + sign * row * row_shift) / side)
        res[i] = ((col % colours) + colours) % colours
    return out


def points_in_polygon(const long long[::1] px, const long long[::1] py,
                      const long long[::1] qx, const long long[::1] qy):
    cdef Py_ssize_t n = px.shape[0]
    cdef Py_ssize_t m = qx.shape[0]
    cdef Py_ssize_t a, b, k
    cdef long long x1, y1, x2, y2, dy, lhs, rhs, x, y
    cdef bint inside
    out = np.zeros(m, dtype=np.bool_)
    cdef unsigned char[::1] res = out.view(np.uint8)
    for k in range(m):
        x = qx[k]
        y = qy[k]
        inside = False
        b = n - 1
        for a in range(n):
            x1 = px[b]
            y1 = py[b]
            x2 = px[a]
            y2 = py[a]
            if (y1 > y) != (y2 > y):
                dy = y2 - y1
                lhs = (x - x1) * dy
                rhs = (y - y1) * (x2 - x1)
                if (dy > 0 and lhs < rhs) or (dy < 0 and lhs > rhs):
                    inside = not inside
            b = a
        res[k] = inside
    return out


def first_match(const long long[::1] a, const long long[::1] b):
    cdef Py_ssize_t i
    for i in range(a.shape[0]):
        if a[i] == b[i]:
            return i
    return -1

# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled tensor kernels.  Same contract as ``_pykernels``."""

import numpy as np
cimport numpy as cnp
from libc.math cimport fabs, pow

cnp.import_array()

NAME = "cython"


cdef inline double _ipow(double v, Py_ssize_t p) noexcept nogil:
    cdef double r = 1.0
    while p > 0:
        if p & 1:
            r *= v
        v *= v
        p >>= 1
    return r


def q_form(const cnp.int64_t[:, ::1] edges, const double[::1] x):
    cdef Py_ssize_t m = edges.shape[0], k = edges.shape[1]
    cdef Py_ssize_t j, a
    cdef double diag = 0.0, cross = 0.0, prod, v
    with nogil:
        for j in range(m):
            prod = 1.0
            for a in range(k):
                v = x[edges[j, a]]
                diag += _ipow(v, k)
                prod *= v
            cross += prod
    return diag + k * cross


def q_apply(const cnp.int64_t[:, ::1] edges, const cnp.int64_t[::1] degrees,
            const double[::1] x):
    cdef Py_ssize_t m = edges.shape[0], k = edges.shape[1], n = x.shape[0]
    cdef cnp.ndarray[double, ndim=1] out_arr = np.empty(n)
    cdef double[::1] out = out_arr
    cdef double pre[64]
    cdef double suf
    cdef Py_ssize_t j, a, v
    if k > 64:
        raise ValueError("uniformity above 64 not supported by the compiled kernel")
    with nogil:
        for v in range(n):
            out[v] = degrees[v] * _ipow(x[v], k - 1)
        for j in range(m):
            pre[0] = 1.0
            for a in range(1, k):
                pre[a] = pre[a - 1] * x[edges[j, a - 1]]
            suf = 1.0
            for a in range(k - 1, -1, -1):
                out[edges[j, a]] += pre[a] * suf
                suf *= x[edges[j, a]]
    return out_arr


def q_jacobian(const cnp.int64_t[:, ::1] edges, const cnp.int64_t[::1] degrees,
               const double[::1] x):
    cdef Py_ssize_t m = edges.shape[0], k = edges.shape[1], n = x.shape[0]
    cdef cnp.ndarray[double, ndim=2] J_arr = np.zeros((n, n))
    cdef double[:, ::1] J = J_arr
    cdef Py_ssize_t j, a, b, c, va, vb
    cdef double p
    with nogil:
        for j in range(m):
            for a in range(k):
                va = edges[j, a]
                for b in range(a + 1, k):
                    vb = edges[j, b]
                    p = 1.0
                    for c in range(k):
                        if c != a and c != b:
                            p *= x[edges[j, c]]
                    J[va, vb] += p
                    J[vb, va] += p
        for a in range(n):
            J[a, a] += (k - 1) * degrees[a] * _ipow(x[a], k - 2)
    return J_arr


cdef double _form(const cnp.int64_t[:, ::1] edges, const double* x) noexcept nogil:
    cdef Py_ssize_t m = edges.shape[0], k = edges.shape[1]
    cdef Py_ssize_t j, a
    cdef double diag = 0.0, cross = 0.0, prod, v
    for j in range(m):
        prod = 1.0
        for a in range(k):
            v = x[edges[j, a]]
            diag += _ipow(v, k)
            prod *= v
        cross += prod
    return diag + k * cross


cdef void _apply(const cnp.int64_t[:, ::1] edges, const cnp.int64_t[::1] degrees,
                 const double* x, double* out, Py_ssize_t n) noexcept nogil:
    cdef Py_ssize_t m = edges.shape[0], k = edges.shape[1]
    cdef Py_ssize_t j, a, v
    cdef double pre[64]
    cdef double suf
    for v in range(n):
        out[v] = degrees[v] * _ipow(x[v], k - 1)
    for j in range(m):
        pre[0] = 1.0
        for a in range(1, k):
            pre[a] = pre[a - 1] * x[edges[j, a - 1]]
        suf = 1.0
        for a in range(k - 1, -1, -1):
            out[edges[j, a]] += pre[a] * suf
            suf *= x[edges[j, a]]


cdef double _knorm(const double* y, Py_ssize_t n, Py_ssize_t k) noexcept nogil:
    cdef Py_ssize_t v
    cdef double s = 0.0, acc = 0.0
    for v in range(n):
        if fabs(y[v]) > s:
            s = fabs(y[v])
    if s == 0.0:
        return 0.0
    for v in range(n):
        acc += _ipow(y[v] / s, k)
    return s * pow(acc, 1.0 / k)


def descend(const cnp.int64_t[:, ::1] edges, const cnp.int64_t[::1] degrees, x0,
            Py_ssize_t max_iters, double grad_tol, double stop_res, double step,
            double step_max, double armijo_c, double shrink, bint record=False):
    """Projected gradient with Armijo backtracking on the unit k-norm sphere.

    Returns ``(x, f, res, iters, step, status, history)``; status 0 means
    ``res < grad_tol``, 1 ``res < stop_res``, 2 iteration budget spent,
    3 line search stalled.
    """
    cdef Py_ssize_t n = degrees.shape[0], k = edges.shape[1]
    if k > 64:
        raise ValueError("uniformity above 64 not supported by the compiled kernel")
    cdef cnp.ndarray[double, ndim=1] x_arr = np.array(x0, dtype=np.float64, copy=True)
    cdef cnp.ndarray[double, ndim=1] y_arr = np.empty(n)
    cdef cnp.ndarray[double, ndim=1] r_arr = np.empty(n)
    cdef cnp.ndarray[double, ndim=1] h_arr = np.empty(max_iters + 1 if record else 1)
    cdef double* x = &x_arr[0]
    cdef double* y = &y_arr[0]
    cdef double* r = &r_arr[0]
    cdef double* h = &h_arr[0]
    cdef double f, fy, res, rr, slope, nrm, t = step
    cdef Py_ssize_t it = 0, v, nh = 0
    cdef int status = 2
    with nogil:
        f = _form(edges, x)
        if record:
            h[0] = f
            nh = 1
        while True:
            _apply(edges, degrees, x, r, n)
            res = 0.0
            rr = 0.0
            for v in range(n):
                r[v] -= f * _ipow(x[v], k - 1)
                if fabs(r[v]) > res:
                    res = fabs(r[v])
                rr += r[v] * r[v]
            if res < grad_tol:
                status = 0
                break
            if res < stop_res:
                status = 1
                break
            if it >= max_iters:
                status = 2
                break
            it += 1
            slope = k * rr
            while True:
                for v in range(n):
                    y[v] = x[v] - t * r[v]
                nrm = _knorm(y, n, k)
                for v in range(n):
                    y[v] /= nrm
                fy = _form(edges, y)
                if fy <= f - armijo_c * t * slope:
                    break
                t *= shrink
                if t < 1e-16:
                    status = 3
                    break
            if status == 3:
                break
            for v in range(n):
                x[v] = y[v]
            f = fy
            if record:
                h[nh] = f
                nh += 1
            t = 2.0 * t
            if t > step_max:
                t = step_max
    return x_arr, f, res, it, t, status, (h_arr[:nh].tolist() if record else [])

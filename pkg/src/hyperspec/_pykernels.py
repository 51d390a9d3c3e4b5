"""Numpy implementations of the tensor kernels (fallback backend).

Signatures mirror the compiled ``_ckernels`` module exactly.  ``edges`` is an
``(m, k)`` int64 array, ``degrees`` an ``(n,)`` int64 array, ``x`` a float64
vector of length n.
"""

import numpy as np

NAME = "python"


def q_form(edges, x):
    k = edges.shape[1]
    X = x[edges]
    return float(np.sum(X**k) + k * np.sum(np.prod(X, axis=1)))


def _leave_one_out(X):
    # products of all entries but one, via prefix/suffix products (no division)
    m, k = X.shape
    pre = np.ones((m, k))
    suf = np.ones((m, k))
    if k > 1:
        pre[:, 1:] = np.cumprod(X[:, :-1], axis=1)
        suf[:, :-1] = np.cumprod(X[:, :0:-1], axis=1)[:, ::-1]
    return pre * suf


def q_apply(edges, degrees, x):
    k = edges.shape[1]
    X = x[edges]
    others = _leave_one_out(X)
    out = np.bincount(edges.ravel(), weights=others.ravel(), minlength=x.shape[0])
    return degrees * x ** (k - 1) + out


def q_jacobian(edges, degrees, x):
    """Jacobian of ``q_apply``: ``(k-1) diag(d x^(k-2)) + sum_e x^(e minus {v, w})``."""
    n = x.shape[0]
    k = edges.shape[1]
    X = x[edges]
    J = np.zeros((n, n))
    for a in range(k):
        for b in range(a + 1, k):
            keep = [c for c in range(k) if c != a and c != b]
            p = np.prod(X[:, keep], axis=1)
            np.add.at(J, (edges[:, a], edges[:, b]), p)
            np.add.at(J, (edges[:, b], edges[:, a]), p)
    J[np.diag_indices(n)] += (k - 1) * degrees * x ** (k - 2)
    return J


def _knorm(y, k):
    s = np.max(np.abs(y))
    if s == 0.0:
        return 0.0
    return s * np.sum((y / s) ** k) ** (1.0 / k)


def descend(edges, degrees, x0, max_iters, grad_tol, stop_res, step, step_max,
            armijo_c, shrink, record=False):
    """Projected gradient with Armijo backtracking; see ``_ckernels.descend``."""
    k = edges.shape[1]
    x = np.array(x0, dtype=np.float64, copy=True)
    t = step
    f = q_form(edges, x)
    history = [f] if record else []
    it = 0
    while True:
        r = q_apply(edges, degrees, x) - f * x ** (k - 1)
        res = float(np.max(np.abs(r)))
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
        slope = k * float(r @ r)
        stalled = False
        while True:
            y = x - t * r
            y /= _knorm(y, k)
            fy = q_form(edges, y)
            if fy <= f - armijo_c * t * slope:
                break
            t *= shrink
            if t < 1e-16:
                stalled = True
                break
        if stalled:
            status = 3
            break
        x, f = y, fy
        if record:
            history.append(f)
        t = min(2.0 * t, step_max)
    return x, f, res, it, t, status, history

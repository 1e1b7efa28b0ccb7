"""Hot loops: compensated Gram products and compensated matrix-vector products.

Every kernel exists twice: a numba ``@njit`` version and a pure-numpy
version with identical semantics. ``ORTHOTRIG_DISABLE_NUMBA=1`` (or a
missing numba install) selects the numpy path at import time. Both paths
stay importable so they can be benchmarked and cross-checked.
"""

import os

import numpy as np

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

DISABLE_FLAG = "ORTHOTRIG_DISABLE_NUMBA"

USE_NUMBA = HAVE_NUMBA and os.environ.get(DISABLE_FLAG, "").strip().lower() not in (
    "1",
    "true",
    "yes",
)
BACKEND = "numba" if USE_NUMBA else "numpy"


# ---------------------------------------------------------------------------
# numpy fallbacks (Neumaier summation vectorised over the output entries)


def _neumaier_step(s, c, t):
    u = s + t
    big = np.abs(s) >= np.abs(t)
    c += np.where(big, (s - u) + t, (t - u) + s)
    return u, c


def row_gram_numpy(g):
    """Return ``g @ g.T`` with every entry summed in compensated form."""
    g = np.ascontiguousarray(g, dtype=np.float64)
    rows, cols = g.shape
    s = np.zeros((rows, rows))
    c = np.zeros((rows, rows))
    for j in range(cols):
        col = g[:, j]
        s, c = _neumaier_step(s, c, np.multiply.outer(col, col))
    return s + c


def matmat_numpy(a, b):
    """Return ``a @ b`` with compensated summation per output entry."""
    a = np.ascontiguousarray(a, dtype=np.float64)
    b = np.ascontiguousarray(b, dtype=np.float64)
    s = np.zeros((a.shape[0], b.shape[1]))
    c = np.zeros_like(s)
    for j in range(a.shape[1]):
        s, c = _neumaier_step(s, c, np.multiply.outer(a[:, j], b[j, :]))
    return s + c


def matvec_numpy(a, x):
    a = np.ascontiguousarray(a, dtype=np.float64)
    x = np.ascontiguousarray(x, dtype=np.float64)
    s = np.zeros(a.shape[0])
    c = np.zeros(a.shape[0])
    for j in range(a.shape[1]):
        s, c = _neumaier_step(s, c, a[:, j] * x[j])
    return s + c


# ---------------------------------------------------------------------------
# numba kernels

if HAVE_NUMBA:

    @numba.njit(cache=True)
    def _dot_neumaier(u, v):
        s = 0.0
        c = 0.0
        for i in range(u.shape[0]):
            t = u[i] * v[i]
            w = s + t
            if abs(s) >= abs(t):
                c += (s - w) + t
            else:
                c += (t - w) + s
            s = w
        return s + c

    @numba.njit(cache=True)
    def row_gram_numba(g):
        rows = g.shape[0]
        out = np.empty((rows, rows))
        for i in range(rows):
            for j in range(i, rows):
                d = _dot_neumaier(g[i], g[j])
                out[i, j] = d
                out[j, i] = d
        return out

    @numba.njit(cache=True)
    def matvec_numba(a, x):
        out = np.empty(a.shape[0])
        for i in range(a.shape[0]):
            out[i] = _dot_neumaier(a[i], x)
        return out

    @numba.njit(cache=True)
    def matmat_numba(a, b):
        bt = np.ascontiguousarray(b.T)
        out = np.empty((a.shape[0], b.shape[1]))
        for i in range(a.shape[0]):
            for j in range(b.shape[1]):
                out[i, j] = _dot_neumaier(a[i], bt[j])
        return out

else:  # pragma: no cover
    row_gram_numba = row_gram_numpy
    matvec_numba = matvec_numpy
    matmat_numba = matmat_numpy


def _f64(a):
    return np.ascontiguousarray(a, dtype=np.float64)


if USE_NUMBA:

    def row_gram(g):
        return row_gram_numba(_f64(g))

    def matvec(a, x):
        return matvec_numba(_f64(a), _f64(x))

    def matmat(a, b):
        return matmat_numba(_f64(a), _f64(b))

else:
    row_gram = row_gram_numpy
    matvec = matvec_numpy
    matmat = matmat_numpy

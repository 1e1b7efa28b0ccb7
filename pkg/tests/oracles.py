"""Independent reference evaluators used only by the tests.

Kernels are recomputed straight from their defining formulas in 40-digit
mpmath arithmetic (no integer angle reduction, no numpy), and Gram matrices
by ``math.fsum`` over Python floats. Neither shares code with the package.
"""

import math
from fractions import Fraction

import mpmath

mp = mpmath.mp.clone() if hasattr(mpmath.mp, "clone") else mpmath.mp
mp.dps = 40
pi = mp.pi
sqrt = mp.sqrt


def _cas(x):
    return mp.cos(x) + mp.sin(x)


def _w(i, ends, value):
    return value if i in ends else mp.mpf(1)


def kernel(family, n, params=None):
    """Return the family's matrix as a list of rows of mpf values."""
    N = mp.mpf(n)
    h = 1 / sqrt(2)
    if family == "dct1":
        return [[sqrt(2 / N) * _w(k, (0, n), h) * _w(j, (0, n), h) * mp.cos(k * j * pi / N)
                 for j in range(n + 1)] for k in range(n + 1)]
    if family == "dct2":
        a = lambda j: sqrt(1 / N) if j == 0 else sqrt(2 / N)
        return [[a(j) * mp.cos((2 * k + 1) * j * pi / (2 * N)) for j in range(n)] for k in range(n)]
    if family == "dct3":
        a = lambda k: sqrt(1 / N) if k == 0 else sqrt(2 / N)
        return [[a(k) * mp.cos(k * (2 * j + 1) * pi / (2 * N)) for j in range(n)] for k in range(n)]
    if family == "dct4":
        return [[sqrt(2 / N) * mp.cos((2 * k + 1) * (2 * j + 1) * pi / (4 * N)) for j in range(n)]
                for k in range(n)]
    if family in ("gen-dct3", "gen-dct2"):
        p, q, r = params
        m = [[sqrt(2 / N) * _w(k, (0,), h) * mp.cos(k * (4 * q * j + r) * p * pi / (2 * N))
              for j in range(n)] for k in range(n)]
        return m if family == "gen-dct3" else [list(col) for col in zip(*m)]
    if family == "gen-dct4":
        p, q, r = params
        return [[sqrt(2 / N) * mp.cos((2 * k + 1) * (4 * q * j + r) * p * pi / (4 * N))
                 for j in range(n)] for k in range(n)]
    if family == "new-dct":
        s = sqrt(4 / (2 * N - 1))
        return [[s * _w(k, (n - 1,), h) * _w(j, (n - 1,), h)
                 * mp.cos((2 * k + 1) * (2 * j + 1) * pi / (2 * N - 1)) for j in range(n)]
                for k in range(n)]
    if family == "new-dst":
        s = sqrt(4 / (2 * N + 1))
        return [[s * mp.sin((2 * k + 1) * (2 * j + 1) * pi / (2 * N + 1)) for j in range(n)]
                for k in range(n)]
    if family == "new-sct":
        size = 2 * n + 1
        s = sqrt(2 / mp.mpf(size))
        ang = lambda k, j: (2 * k + 1) * (2 * j + 1) * pi / size
        rows = [[s * mp.cos(ang(k, j)) for j in range(size)] for k in range(n)]
        rows.append([-sqrt(1 / mp.mpf(size))] * size)
        rows += [[s * mp.sin(ang(k, j)) for j in range(size)] for k in range(n)]
        return rows
    if family == "dwt-unified":
        alpha, beta, gamma = (Fraction(params[0]), Fraction(params[1]), params[2])
        al = mp.mpf(alpha.numerator) / alpha.denominator
        be = mp.mpf(beta.numerator) / beta.denominator
        return [[sqrt(2 / N) * mp.sin(pi / 4 + (k + al) * (j + be) * gamma * pi / N)
                 for j in range(n)] for k in range(n)]
    if family == "gen-dwt-cas":
        p, q, r = params
        return [[_cas((2 * k + 1) * (q * j + r) * p * pi / N) / sqrt(N) for j in range(n)]
                for k in range(n)]
    if family == "gen-dwt4":
        p, q, r = params
        return [[_cas((2 * k + 1) * (2 * q * j + r) * p * pi / (2 * N)) / sqrt(N) for j in range(n)]
                for k in range(n)]
    if family in ("dwt1", "dwt2", "dwt3", "dwt4"):
        half = Fraction(1, 2)
        alpha, beta = {"dwt1": (0, 0), "dwt2": (half, 0), "dwt3": (0, half), "dwt4": (half, half)}[family]
        return kernel("dwt-unified", n, (alpha, beta, 2))
    raise KeyError(family)


def kernel_float(family, n, params=None):
    return [[float(v) for v in row] for row in kernel(family, n, params)]


def brute_gram_deviation(rows):
    """max |<row_i, row_j> - delta_ij| with exactly rounded fsum."""
    rows = [[float(v) for v in row] for row in rows]
    worst = 0.0
    for i, a in enumerate(rows):
        for j in range(i, len(rows)):
            d = math.fsum(x * y for x, y in zip(a, rows[j]))
            worst = max(worst, abs(d - (1.0 if i == j else 0.0)))
    return worst


def hartley_direct(n):
    """(1/sqrt N)(cos + sin)(2 pi k n' / N) evaluated in 40-digit arithmetic."""
    N = mp.mpf(n)
    return [[float(_cas(2 * pi * k * j / N) / sqrt(N)) for j in range(n)] for k in range(n)]

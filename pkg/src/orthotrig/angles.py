"""Trigonometric evaluation at rational multiples of pi.

Every kernel in the library has the form ``f(num * pi / den)`` with an
integer ``num``. The integer is reduced exactly to the nearest multiple of
``pi/2`` before any floating point is involved, so the residual angle passed
to ``np.cos``/``np.sin`` lies in ``[-pi/4, pi/4)`` whatever the size of
``num``. This keeps the argument error at a few ulps even for N ~ 1000 and
parameters near 100.
"""

import math

import numpy as np

# numerators above this are not exactly representable as float64
MAX_EXACT_NUMERATOR = 2**53


class ParameterOverflowError(ValueError):
    """Kernel numerator exceeds the exactly representable integer range."""


def cas(x):
    """Hartley kernel ``cos(x) + sin(x)``; works on scalars and arrays."""
    return np.cos(x) + np.sin(x)


def check_numerator_bound(bound: int, what: str = "kernel numerator") -> None:
    if abs(int(bound)) > MAX_EXACT_NUMERATOR:
        raise ParameterOverflowError(
            f"{what} reaches {bound}, beyond 2**53; reduce N or p, q, r"
        )


def _reduce(num, den):
    """Split ``num*pi/den`` into quadrant index and residual angle."""
    num = np.asarray(num, dtype=np.int64)
    den = int(den)
    if den < 1:
        raise ValueError("denominator must be positive")
    m = np.mod(num, 2 * den)
    quadrant = (4 * m + den) // (2 * den)
    resid = 2 * m - quadrant * den  # units of pi/(2*den), |resid| <= den/2
    theta = resid.astype(np.float64) * math.pi / (2 * den)
    return np.mod(quadrant, 4), theta


def cos_sin_pi_ratio(num, den):
    """Return ``(cos(num*pi/den), sin(num*pi/den))`` for integer ``num``."""
    quadrant, theta = _reduce(num, den)
    c = np.cos(theta)
    s = np.sin(theta)
    cos_out = np.choose(quadrant, [c, -s, -c, s])
    sin_out = np.choose(quadrant, [s, c, -s, -c])
    return cos_out, sin_out


def cos_pi_ratio(num, den):
    return cos_sin_pi_ratio(num, den)[0]


def sin_pi_ratio(num, den):
    return cos_sin_pi_ratio(num, den)[1]


def cas_pi_ratio(num, den):
    c, s = cos_sin_pi_ratio(num, den)
    return c + s

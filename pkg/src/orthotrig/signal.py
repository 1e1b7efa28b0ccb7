"""Applying transforms to vectors and square images.

The inverse is always the transpose action; nothing is ever inverted
numerically. ``inverse`` refuses matrices whose measured Gram deviation
exceeds :data:`~orthotrig.types.INVERSE_GATE_TOL`; ``roundtrip_error`` is
the ungated diagnostic.
"""

from __future__ import annotations

import numpy as np

from . import _kernels
from .types import INVERSE_GATE_TOL, CoefficientVector, TransformMatrix

# Numerical Recipes LCG: state <- (A*state + C) mod 2**32
LCG_A = 1664525
LCG_C = 1013904223
LCG_MOD = 2**32
DEFAULT_SEED = 20240601


class ShapeMismatchError(ValueError):
    def __init__(self, expected, actual, what="signal length"):
        super().__init__(f"{what} mismatch: expected {expected}, got {actual}")
        self.expected = expected
        self.actual = actual


class NotOrthogonalError(ArithmeticError):
    def __init__(self, deviation, tol=INVERSE_GATE_TOL):
        super().__init__(
            f"matrix is not orthogonal: Gram deviation {deviation:.3e} exceeds {tol:.1e}"
        )
        self.deviation = deviation
        self.tol = tol


def _signal(x) -> np.ndarray:
    x = np.asarray(getattr(x, "values", x), dtype=np.float64)
    if x.ndim != 1:
        raise ValueError(f"signal must be one-dimensional, got shape {x.shape}")
    if not np.all(np.isfinite(x)):
        raise ValueError("signal contains non-finite values")
    return x


def _matrix(m):
    if isinstance(m, TransformMatrix):
        return m
    return TransformMatrix.from_array(m)


def lcg_signal(length: int, seed: int = DEFAULT_SEED) -> np.ndarray:
    """Deterministic test signal with values in [-1, 1).

    ``state = (1664525 * state + 1013904223) mod 2**32`` starting from
    ``seed``; each step emits ``2 * state / 2**32 - 1``.
    """
    out = np.empty(length)
    state = seed % LCG_MOD
    for i in range(length):
        state = (LCG_A * state + LCG_C) % LCG_MOD
        out[i] = 2.0 * state / LCG_MOD - 1.0
    return out


def lcg_signals(count: int, length: int, seed: int = DEFAULT_SEED) -> np.ndarray:
    """``count`` consecutive LCG signals (one per row) from a single stream."""
    flat = lcg_signal(count * length, seed)
    return flat.reshape(count, length)


def forward(m, x) -> CoefficientVector:
    m = _matrix(m)
    x = _signal(x)
    if x.shape[0] != m.cols:
        raise ShapeMismatchError(m.cols, x.shape[0])
    return CoefficientVector(_kernels.matvec(m.entries, x), m.family, m.n)


def forward_many(m, xs) -> np.ndarray:
    """Transform each row of ``xs``; same arithmetic as :func:`forward`."""
    m = _matrix(m)
    xs = np.atleast_2d(np.asarray(xs, dtype=np.float64))
    if xs.shape[1] != m.cols:
        raise ShapeMismatchError(m.cols, xs.shape[1])
    return _kernels.matmat(m.entries, xs.T).T


def _transpose_action(m: TransformMatrix, c: np.ndarray) -> np.ndarray:
    return _kernels.matvec(np.ascontiguousarray(m.entries.T), c)


def inverse(m, c) -> np.ndarray:
    """Transpose action ``m.T @ c``, gated on measured orthogonality."""
    m = _matrix(m)
    c = _signal(c)
    if c.shape[0] != m.rows:
        raise ShapeMismatchError(m.rows, c.shape[0], "coefficient length")
    if not m.is_square:
        raise ValueError("inverse needs a square matrix")
    dev = m.gram_max_dev
    if dev > INVERSE_GATE_TOL:
        raise NotOrthogonalError(dev)
    return _transpose_action(m, c)


def roundtrip_error(m, x) -> float:
    """max |x - m.T (m x)| without the orthogonality gate."""
    m = _matrix(m)
    x = _signal(x)
    if x.shape[0] != m.cols:
        raise ShapeMismatchError(m.cols, x.shape[0])
    if not m.is_square:
        raise ValueError("round trip needs a square matrix")
    back = _transpose_action(m, _kernels.matvec(m.entries, x))
    return float(np.max(np.abs(x - back)))


def forward_2d(m, img) -> np.ndarray:
    """Separable 2-D transform ``m @ img @ m.T`` of a square block."""
    m = _matrix(m)
    img = np.asarray(img, dtype=np.float64)
    if img.ndim != 2 or img.shape[0] != img.shape[1]:
        raise ValueError(f"image must be a square 2-D array, got shape {img.shape}")
    if img.shape[0] != m.cols:
        raise ShapeMismatchError(m.cols, img.shape[0], "image size")
    cols_done = _kernels.matmat(m.entries, img)
    return _kernels.matmat(cols_done, np.ascontiguousarray(m.entries.T))

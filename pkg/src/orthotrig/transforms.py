"""Builders that materialise every transform family as a dense matrix.

Each kernel angle is ``row(k) * col(n) * factor * pi / den`` with integer
row/column terms. Numerators are formed in exact integer arithmetic, checked
against 2**53, and only then handed to the rational-angle evaluators in
:mod:`orthotrig.angles`. Endpoint weights are multiplied in afterwards.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .angles import (
    cas_pi_ratio,
    check_numerator_bound,
    cos_pi_ratio,
    sin_pi_ratio,
)
from .types import DwtParams, ParamsPQR, TransformFamily, TransformMatrix

_ROMAN = {"I": 1, "II": 2, "III": 3, "IV": 4}

CLASSIC_DWT_PAIRS = {
    1: (Fraction(0), Fraction(0)),
    2: (Fraction(1, 2), Fraction(0)),
    3: (Fraction(0), Fraction(1, 2)),
    4: (Fraction(1, 2), Fraction(1, 2)),
}


def _variant(variant, allowed) -> int:
    if isinstance(variant, str):
        v = _ROMAN.get(variant.strip().upper())
        if v is None and variant.strip().isdigit():
            v = int(variant)
    else:
        v = variant
    if v not in allowed:
        names = ", ".join(k for k, i in _ROMAN.items() if i in allowed)
        raise ValueError(f"variant must be one of {names}, got {variant!r}")
    return v


def _check_n(n) -> int:
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise TypeError(f"n must be an integer, got {n!r}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return int(n)


def _pqr(params) -> ParamsPQR:
    if isinstance(params, ParamsPQR):
        return params
    return ParamsPQR(*params)


def _numerators(row_terms, col_terms, factor=1, offset=0):
    """Exact integer grid ``row[k] * col[n] * factor + offset``."""
    row_terms = [int(t) for t in row_terms]
    col_terms = [int(t) for t in col_terms]
    bound = max(map(abs, row_terms)) * max(map(abs, col_terms)) * abs(int(factor)) + abs(int(offset))
    check_numerator_bound(bound)
    rows = np.array(row_terms, dtype=np.int64)
    cols = np.array(col_terms, dtype=np.int64)
    return np.multiply.outer(rows, cols) * int(factor) + int(offset)


def _edge_weights(size, value, at):
    w = np.ones(size)
    w[list(at)] = value
    return w


def _weight_grid(size, at):
    """Outer product of 1/sqrt(2) endpoint weights, exact 1/2 where both apply."""
    w = _edge_weights(size, 1 / math.sqrt(2), at)
    grid = np.multiply.outer(w, w)
    for i in at:
        for j in at:
            grid[i, j] = 0.5
    return grid


def build_classic_dct(variant, n) -> TransformMatrix:
    """Classic even DCT of type I-IV (orthonormal scaling).

    DCT-I is (N+1) x (N+1). DCT-IV uses the 4N denominator, which is the
    orthogonal reading of its kernel.
    """
    v = _variant(variant, (1, 2, 3, 4))
    n = _check_n(n)
    idx = range(n)
    if v == 1:
        full = range(n + 1)
        kern = cos_pi_ratio(_numerators(full, full), n)
        a = math.sqrt(2 / n) * (_weight_grid(n + 1, (0, n)) * kern)
        return TransformMatrix(a, TransformFamily.DCT1, n)
    odd = [2 * i + 1 for i in idx]
    w = np.full(n, math.sqrt(2 / n))
    w[0] = math.sqrt(1 / n)
    if v == 2:
        a = cos_pi_ratio(_numerators(odd, idx), 2 * n) * w[None, :]
        return TransformMatrix(a, TransformFamily.DCT2, n)
    if v == 3:
        a = w[:, None] * cos_pi_ratio(_numerators(idx, odd), 2 * n)
        return TransformMatrix(a, TransformFamily.DCT3, n)
    a = math.sqrt(2 / n) * cos_pi_ratio(_numerators(odd, odd), 4 * n)
    return TransformMatrix(a, TransformFamily.DCT4, n)


def _gen_dct3_entries(n, pqr):
    idx = range(n)
    cols = [4 * pqr.q * j + pqr.r for j in idx]
    w = np.ones(n)
    w[0] = 1 / math.sqrt(2)
    kern = cos_pi_ratio(_numerators(idx, cols, pqr.p), 2 * n)
    return math.sqrt(2 / n) * w[:, None] * kern


def build_gen_dct(variant, n, params) -> TransformMatrix:
    """Generalized DCT with parameters (p, q, r).

    Variant III has kernel ``cos(k(4qn+r)p*pi/(2N))`` with the first row
    weighted by 1/sqrt(2); variant II is its exact transpose; variant IV
    has kernel ``cos((2k+1)(4qn+r)p*pi/(4N))`` and constant scale sqrt(2/N).
    Orthogonality conditions are not enforced here, see
    :func:`orthotrig.validation.check_conditions`.
    """
    v = _variant(variant, (2, 3, 4))
    n = _check_n(n)
    pqr = _pqr(params)
    if v == 3:
        return TransformMatrix(_gen_dct3_entries(n, pqr), TransformFamily.GEN_DCT3, n, pqr)
    if v == 2:
        a = np.ascontiguousarray(_gen_dct3_entries(n, pqr).T)
        return TransformMatrix(a, TransformFamily.GEN_DCT2, n, pqr)
    rows = [2 * i + 1 for i in range(n)]
    cols = [4 * pqr.q * j + pqr.r for j in range(n)]
    a = math.sqrt(2 / n) * cos_pi_ratio(_numerators(rows, cols, pqr.p), 4 * n)
    return TransformMatrix(a, TransformFamily.GEN_DCT4, n, pqr)


def build_new_dct(n) -> TransformMatrix:
    """Odd-length DCT of size N with period 2N-1 and a weighted last index."""
    n = _check_n(n)
    odd = [2 * i + 1 for i in range(n)]
    kern = cos_pi_ratio(_numerators(odd, odd), 2 * n - 1)
    a = math.sqrt(4 / (2 * n - 1)) * (_weight_grid(n, (n - 1,)) * kern)
    return TransformMatrix(a, TransformFamily.NEW_DCT, n)


def build_new_dst(n) -> TransformMatrix:
    n = _check_n(n)
    odd = [2 * i + 1 for i in range(n)]
    a = math.sqrt(4 / (2 * n + 1)) * sin_pi_ratio(_numerators(odd, odd), 2 * n + 1)
    return TransformMatrix(a, TransformFamily.NEW_DST, n)


def build_new_sct(n) -> TransformMatrix:
    """Sine-cosine transform of size 2N+1.

    Rows 0..N-1 are cosines, row N is the constant -1/sqrt(2N+1), rows
    N+1..2N are sines, all over the odd grid ``(2k+1)(2n+1)pi/(2N+1)``.
    """
    n = _check_n(n)
    size = 2 * n + 1
    odd_k = [2 * i + 1 for i in range(n)]
    odd_n = [2 * j + 1 for j in range(size)]
    num = _numerators(odd_k, odd_n)
    scale = math.sqrt(2 / size)
    a = np.vstack(
        [
            scale * cos_pi_ratio(num, size),
            np.full((1, size), -math.sqrt(1 / size)),
            scale * sin_pi_ratio(num, size),
        ]
    )
    return TransformMatrix(a, TransformFamily.NEW_SCT, n)


def build_dwt_unified(n, params, family=TransformFamily.DWT_UNIFIED) -> TransformMatrix:
    """Unified W transform ``sqrt(2/N) sin(pi/4 + (k+alpha)(n+beta) gamma pi/N)``.

    With alpha = a/A and beta = b/B the shifted angle is the exact rational
    ``(4(kA+a)(nB+b)gamma + NAB) pi / (4NAB)``.
    """
    n = _check_n(n)
    if not isinstance(params, DwtParams):
        params = DwtParams(*params)
    al, be = params.alpha, params.beta
    rows = [k * al.denominator + al.numerator for k in range(n)]
    cols = [j * be.denominator + be.numerator for j in range(n)]
    den = n * al.denominator * be.denominator
    num = _numerators(rows, cols, 4 * params.gamma, den)
    a = math.sqrt(2 / n) * sin_pi_ratio(num, 4 * den)
    return TransformMatrix(a, family, n, params)


def build_dwt_classic(variant, n) -> TransformMatrix:
    """DWT-I..IV: gamma = 2 with the four half-integer (alpha, beta) shifts.

    DWT-I is the discrete Hartley transform.
    """
    v = _variant(variant, (1, 2, 3, 4))
    alpha, beta = CLASSIC_DWT_PAIRS[v]
    family = TransformFamily(f"dwt{v}")
    return build_dwt_unified(n, DwtParams(alpha, beta, 2), family=family)


def build_dwt_cas(n, params) -> TransformMatrix:
    """``(1/sqrt N) cas((2k+1)(qn+r) p pi / N)``; r is unrestricted."""
    n = _check_n(n)
    pqr = _pqr(params)
    rows = [2 * i + 1 for i in range(n)]
    cols = [pqr.q * j + pqr.r for j in range(n)]
    a = cas_pi_ratio(_numerators(rows, cols, pqr.p), n) / math.sqrt(n)
    return TransformMatrix(a, TransformFamily.GEN_DWT_CAS, n, pqr)


def build_gen_dwt4(n, params) -> TransformMatrix:
    """``(1/sqrt N) cas((2k+1)(2qn+r) p pi / (2N))``.

    For even r = 2m this is bit-identical to ``build_dwt_cas(n, (p, q, m))``
    because the exact reduction cancels the common factor 2.
    """
    n = _check_n(n)
    pqr = _pqr(params)
    rows = [2 * i + 1 for i in range(n)]
    cols = [2 * pqr.q * j + pqr.r for j in range(n)]
    a = cas_pi_ratio(_numerators(rows, cols, pqr.p), 2 * n) / math.sqrt(n)
    return TransformMatrix(a, TransformFamily.GEN_DWT4, n, pqr)


def build(family, n, params=None) -> TransformMatrix:
    """Dispatch on family tag; ``params`` is required exactly when the family takes it."""
    fam = family if isinstance(family, TransformFamily) else TransformFamily.from_name(family)
    F = TransformFamily
    if fam is F.DWT_UNIFIED:
        if params is None:
            raise ValueError("dwt-unified needs (alpha, beta, gamma)")
        return build_dwt_unified(n, params)
    if fam.takes_pqr:
        if params is None:
            raise ValueError(f"{fam.value} needs (p, q, r)")
    elif params is not None:
        raise ValueError(f"{fam.value} takes no parameters")
    table = {
        F.DCT1: lambda: build_classic_dct(1, n),
        F.DCT2: lambda: build_classic_dct(2, n),
        F.DCT3: lambda: build_classic_dct(3, n),
        F.DCT4: lambda: build_classic_dct(4, n),
        F.GEN_DCT2: lambda: build_gen_dct(2, n, params),
        F.GEN_DCT3: lambda: build_gen_dct(3, n, params),
        F.GEN_DCT4: lambda: build_gen_dct(4, n, params),
        F.NEW_DCT: lambda: build_new_dct(n),
        F.NEW_DST: lambda: build_new_dst(n),
        F.NEW_SCT: lambda: build_new_sct(n),
        F.DWT1: lambda: build_dwt_classic(1, n),
        F.DWT2: lambda: build_dwt_classic(2, n),
        F.DWT3: lambda: build_dwt_classic(3, n),
        F.DWT4: lambda: build_dwt_classic(4, n),
        F.GEN_DWT_CAS: lambda: build_dwt_cas(n, params),
        F.GEN_DWT4: lambda: build_gen_dwt4(n, params),
    }
    return table[fam]()


def scale_factor(m: TransformMatrix) -> float:
    """Global normalisation constant of ``m``'s family (before edge weights)."""
    F = TransformFamily
    fam, n = m.family, m.n
    if fam in (F.DCT1, F.DCT2, F.DCT3, F.DCT4, F.GEN_DCT2, F.GEN_DCT3, F.GEN_DCT4):
        return math.sqrt(2 / n)
    if fam is F.NEW_DCT:
        return math.sqrt(4 / (2 * n - 1))
    if fam is F.NEW_DST:
        return math.sqrt(4 / (2 * n + 1))
    if fam is F.NEW_SCT:
        return math.sqrt(2 / (2 * n + 1))
    # W transforms: sqrt(2/N) sin(.) == cas(.)/sqrt(N)
    return 1 / math.sqrt(n)

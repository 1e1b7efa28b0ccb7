"""Orthogonality checks: Gram deviation reports, gcd conditions, sweeps."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, List, Optional, Tuple, Union

import numpy as np

from . import _kernels
from .angles import ParameterOverflowError
from .transforms import CLASSIC_DWT_PAIRS, build
from .types import (
    PQR_FAMILIES,
    DwtParams,
    Params,
    ParamsPQR,
    TransformFamily,
    TransformMatrix,
)

DEFAULT_TOL = 1e-10


class NotSquareError(ValueError):
    pass


class NotParameterizedError(ValueError):
    """The family takes no (p, q, r) triple."""


def default_tolerance(n: int) -> float:
    """1e-10, growing as 1e-13 * N once that is larger (N > 1000)."""
    return max(DEFAULT_TOL, 1e-13 * n)


@dataclass(frozen=True)
class GramReport:
    n: int
    max_offdiag: float
    max_diag_dev: float
    frobenius_dev: float

    @property
    def max_dev(self) -> float:
        return max(self.max_offdiag, self.max_diag_dev)

    def orthogonal_at(self, tol: float) -> bool:
        return self.max_offdiag <= tol and self.max_diag_dev <= tol


def _as_array(m) -> np.ndarray:
    if isinstance(m, TransformMatrix):
        return m.entries
    return np.asarray(m, dtype=np.float64)


def gram_report(m: Union[TransformMatrix, np.ndarray]) -> GramReport:
    """Deviation of the row Gram matrix from the identity.

    Row-pair inner products are accumulated with Neumaier summation, one
    independent loop per pair, so this path shares nothing with a BLAS
    matrix product (see :func:`gram_deviation_plain`). For a square matrix
    the row and column Gram matrices are the identity together.
    """
    a = _as_array(m)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NotSquareError(f"Gram report needs a square matrix, got shape {a.shape}")
    g = _kernels.row_gram(a)
    dev = g - np.eye(a.shape[0])
    diag = np.abs(np.diag(dev))
    off = np.abs(dev)
    np.fill_diagonal(off, 0.0)
    return GramReport(
        n=a.shape[0],
        max_offdiag=float(off.max()),
        max_diag_dev=float(diag.max()),
        frobenius_dev=float(np.sqrt(np.sum(dev * dev))),
    )


def gram_deviation_plain(m) -> float:
    """Same row Gram deviation as :func:`gram_report`, via a BLAS product."""
    a = _as_array(m)
    return float(np.abs(a @ a.T - np.eye(a.shape[0])).max())


@dataclass(frozen=True)
class ConditionReport:
    satisfied: bool
    checks: Tuple[Tuple[str, bool], ...] = ()

    @property
    def failing(self) -> List[str]:
        return [name for name, holds in self.checks if not holds]


def _report(checks) -> ConditionReport:
    checks = tuple(checks)
    return ConditionReport(all(h for _, h in checks), checks)


def _dwt_unified_condition(n: int, params: DwtParams) -> ConditionReport:
    # Either a classic (alpha, beta) pair with gamma = 2, or the cas form
    # alpha = 1/2, beta = r/q, gamma = 2pq with gcd(pq, N) = 1. With beta
    # in lowest terms b/B that means B | gamma/2 and gcd(gamma/2, N) = 1.
    classic = params.gamma == 2 and (params.alpha, params.beta) in CLASSIC_DWT_PAIRS.values()
    half = params.gamma // 2
    cas_form = (
        params.alpha == Fraction(1, 2)
        and params.beta > 0
        and params.gamma % 2 == 0
        and half % params.beta.denominator == 0
        and math.gcd(half, n) == 1
    )
    name = "classic (alpha,beta) with gamma=2, or (1/2, r/q, 2pq) with gcd(pq,N)=1"
    return _report([(name, classic or cas_form)])


def check_conditions(family, n: int, params: Optional[Params] = None) -> ConditionReport:
    """Sufficient orthogonality conditions for ``family`` at size ``n``.

    Generalized DCTs need gcd(pq, N) = 1 and gcd(pr, 2) = 1; the generalized
    W transforms need only gcd(pq, N) = 1. Families without parameters
    report ``satisfied=True`` with no checks, and passing them a triple
    raises :class:`NotParameterizedError`.
    """
    fam = family if isinstance(family, TransformFamily) else TransformFamily.from_name(family)
    F = TransformFamily
    if fam is F.DWT_UNIFIED:
        if not isinstance(params, DwtParams):
            raise TypeError("dwt-unified conditions need DwtParams")
        return _dwt_unified_condition(n, params)
    if fam not in PQR_FAMILIES:
        if params is not None:
            raise NotParameterizedError(f"{fam.value} is not parameterized by (p, q, r)")
        return ConditionReport(True, ())
    if not isinstance(params, ParamsPQR):
        params = ParamsPQR(*params)
    p, q, r = params.p, params.q, params.r
    checks = [("gcd(pq,N)=1", math.gcd(p * q, n) == 1)]
    if fam in (F.GEN_DCT2, F.GEN_DCT3, F.GEN_DCT4):
        checks.append(("gcd(pr,2)=1", math.gcd(p * r, 2) == 1))
    return _report(checks)


@dataclass(frozen=True)
class SweepRow:
    family: TransformFamily
    n: int
    params: ParamsPQR
    condition_satisfied: bool
    gram_max_dev: Optional[float]
    error: Optional[str] = None

    def sort_key(self):
        return (self.family.value, self.n, self.params.p, self.params.q, self.params.r)


@dataclass
class SweepReport:
    rows: List[SweepRow] = field(default_factory=list)
    tol: float = DEFAULT_TOL

    def violations(self, tol: Optional[float] = None) -> List[SweepRow]:
        """Condition-satisfied rows whose Gram deviation exceeds ``tol``."""
        tol = self.tol if tol is None else tol
        return [
            row
            for row in self.rows
            if row.condition_satisfied
            and (row.gram_max_dev is None or row.gram_max_dev > tol)
        ]

    def __len__(self):
        return len(self.rows)


def _sweep_one(fam, n, pqr) -> SweepRow:
    cond = check_conditions(fam, n, pqr).satisfied
    try:
        dev = gram_report(build(fam, n, pqr)).max_dev
    except ParameterOverflowError as exc:
        return SweepRow(fam, n, pqr, cond, None, f"overflow: {exc}")
    return SweepRow(fam, n, pqr, cond, dev)


def sweep(
    family,
    n_values: Iterable[int],
    p_max: int,
    q_max: int,
    r_max: int,
    tol: float = DEFAULT_TOL,
) -> SweepReport:
    """Measure every (n, p, q, r) in the box, condition-violating ones included."""
    fam = family if isinstance(family, TransformFamily) else TransformFamily.from_name(family)
    if fam not in PQR_FAMILIES:
        raise NotParameterizedError(f"{fam.value} takes no p,q,r")
    n_values = sorted(set(int(n) for n in n_values))
    if not n_values or min(n_values) < 1:
        raise ValueError("n values must be positive")
    for name, bound in (("p_max", p_max), ("q_max", q_max), ("r_max", r_max)):
        if bound < 1:
            raise ValueError(f"{name} must be >= 1")
    if not tol > 0:
        raise ValueError("tol must be positive")
    rows = [
        _sweep_one(fam, n, ParamsPQR(p, q, r))
        for n, p, q, r in itertools.product(
            n_values, range(1, p_max + 1), range(1, q_max + 1), range(1, r_max + 1)
        )
    ]
    rows.sort(key=SweepRow.sort_key)
    return SweepReport(rows, tol)

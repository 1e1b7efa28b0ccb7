"""Value types shared by the builders, the validators and the CLI."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Optional, Union

import numpy as np


class TransformFamily(str, enum.Enum):
    """Closed set of transform families; values double as CLI names."""

    DCT1 = "dct1"
    DCT2 = "dct2"
    DCT3 = "dct3"
    DCT4 = "dct4"
    GEN_DCT2 = "gen-dct2"
    GEN_DCT3 = "gen-dct3"
    GEN_DCT4 = "gen-dct4"
    NEW_DCT = "new-dct"
    NEW_DST = "new-dst"
    NEW_SCT = "new-sct"
    DWT_UNIFIED = "dwt-unified"
    DWT1 = "dwt1"
    DWT2 = "dwt2"
    DWT3 = "dwt3"
    DWT4 = "dwt4"
    GEN_DWT_CAS = "gen-dwt-cas"
    GEN_DWT4 = "gen-dwt4"

    @classmethod
    def from_name(cls, name: str) -> "TransformFamily":
        """Look up a family by CLI name (``gen-dct3``) or tag (``GEN_DCT3``)."""
        key = name.strip()
        for fam in cls:
            if key == fam.value or key.upper() == fam.name:
                return fam
        raise ValueError(f"unknown transform family {name!r}")

    @property
    def takes_pqr(self) -> bool:
        return self in PQR_FAMILIES

    def __str__(self) -> str:
        return self.value


PQR_FAMILIES = frozenset(
    {
        TransformFamily.GEN_DCT2,
        TransformFamily.GEN_DCT3,
        TransformFamily.GEN_DCT4,
        TransformFamily.GEN_DWT_CAS,
        TransformFamily.GEN_DWT4,
    }
)


def _positive_int(name, value):
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
        raise TypeError(f"{name} must be an integer, got {value!r}")
    if value < 1:
        raise ValueError(f"{name} must be >= 1, got {value}")
    return int(value)


@dataclass(frozen=True, order=True)
class ParamsPQR:
    """Positive integer triple (p, q, r) of the generalized families."""

    p: int
    q: int
    r: int

    def __post_init__(self):
        for name in ("p", "q", "r"):
            object.__setattr__(self, name, _positive_int(name, getattr(self, name)))

    def as_dict(self) -> dict:
        return {"p": self.p, "q": self.q, "r": self.r}


def as_rational(value) -> Fraction:
    """Coerce ``value`` to an exact ``Fraction``; floats are refused.

    Accepts ints, Fractions and strings such as ``"1/2"`` or ``"-3"``.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, np.integer)):
        return Fraction(int(value))
    if isinstance(value, str):
        text = value.strip()
        if "." in text or "e" in text.lower():
            raise ValueError(f"rational literal must be 'num/den', got {value!r}")
        return Fraction(text)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


@dataclass(frozen=True)
class DwtParams:
    """(alpha, beta, gamma) of the unified W transform, alpha/beta exact."""

    alpha: Fraction
    beta: Fraction
    gamma: int

    def __post_init__(self):
        object.__setattr__(self, "alpha", as_rational(self.alpha))
        object.__setattr__(self, "beta", as_rational(self.beta))
        object.__setattr__(self, "gamma", _positive_int("gamma", self.gamma))

    def sort_key(self):
        return (self.alpha, self.beta, self.gamma)

    def as_dict(self) -> dict:
        return {"alpha": str(self.alpha), "beta": str(self.beta), "gamma": self.gamma}


Params = Union[ParamsPQR, DwtParams]

# gate used by ``inverse``; looser than the test-suite tolerance on purpose
INVERSE_GATE_TOL = 1e-8


@dataclass(frozen=True, eq=False)
class TransformMatrix:
    """Dense, immutable transform matrix plus the metadata that produced it.

    ``n`` is the size parameter the family was built with, which differs
    from the matrix size for ``DCT1`` (N+1) and ``NEW_SCT`` (2N+1).
    """

    entries: np.ndarray
    family: Optional[TransformFamily]
    n: int
    params: Optional[Params] = None

    def __post_init__(self):
        a = np.array(self.entries, dtype=np.float64, order="C", copy=True)
        if a.ndim != 2 or a.size == 0:
            raise ValueError(f"transform matrix must be a non-empty 2-D array, got shape {a.shape}")
        if not np.all(np.isfinite(a)):
            raise ValueError("transform matrix contains non-finite entries")
        a.flags.writeable = False
        object.__setattr__(self, "entries", a)

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    @property
    def shape(self):
        return self.entries.shape

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self.entries
        return self.entries.astype(dtype)

    @cached_property
    def gram_max_dev(self) -> float:
        """Measured Gram deviation, computed once on first use."""
        from .validation import gram_report

        return gram_report(self).max_dev

    @classmethod
    def from_array(cls, array, family=None, n=None, params=None) -> "TransformMatrix":
        """Wrap an arbitrary array (e.g. a matrix read from disk)."""
        a = np.asarray(array, dtype=np.float64)
        if a.ndim != 2:
            raise ValueError(f"expected a 2-D array, got shape {a.shape}")
        return cls(a, family, a.shape[0] if n is None else n, params)


@dataclass(frozen=True, eq=False)
class CoefficientVector:
    values: np.ndarray
    family: Optional[TransformFamily]
    n_param: int

    def __len__(self):
        return len(self.values)

    def __array__(self, dtype=None, copy=None):
        return self.values if dtype is None else self.values.astype(dtype)

"""Parameterized discrete trigonometric transforms with orthogonality checks.

Dense matrix builders for the classic DCT-I..IV and DWT-I..IV, the
(p, q, r)-generalized DCT and W transforms, and the odd-length DCT, DST and
sine-cosine transforms, plus Gram-matrix validation and signal application.
"""

from ._kernels import BACKEND
from .angles import ParameterOverflowError, cas
from .signal import (
    NotOrthogonalError,
    ShapeMismatchError,
    forward,
    forward_2d,
    forward_many,
    inverse,
    lcg_signal,
    roundtrip_error,
)
from .transforms import (
    build,
    build_classic_dct,
    build_dwt_cas,
    build_dwt_classic,
    build_dwt_unified,
    build_gen_dct,
    build_gen_dwt4,
    build_new_dct,
    build_new_dst,
    build_new_sct,
)
from .types import (
    CoefficientVector,
    DwtParams,
    ParamsPQR,
    TransformFamily,
    TransformMatrix,
)
from .validation import (
    ConditionReport,
    GramReport,
    NotParameterizedError,
    SweepReport,
    check_conditions,
    gram_report,
    sweep,
)

__version__ = "0.1.0"

import os
import subprocess
import sys

import numpy as np
import pytest

from orthotrig import _kernels
from orthotrig import build

pytestmark = pytest.mark.skipif(not _kernels.HAVE_NUMBA, reason="numba not installed")


@pytest.mark.parametrize("family, n, params", [("new-sct", 9, None), ("dct1", 16, None), ("dwt3", 33, None)])
def test_row_gram_backends_agree(family, n, params):
    a = build(family, n, params).entries
    fast = _kernels.row_gram_numba(a)
    slow = _kernels.row_gram_numpy(a)
    np.testing.assert_allclose(fast, slow, rtol=0, atol=2e-16)
    np.testing.assert_allclose(fast, a @ a.T, rtol=0, atol=1e-14)


def test_matvec_and_matmat_backends_agree():
    rng = np.random.default_rng(5)
    a = rng.standard_normal((17, 23))
    b = rng.standard_normal((23, 4))
    x = rng.standard_normal(23)
    np.testing.assert_allclose(_kernels.matvec_numba(a, x), _kernels.matvec_numpy(a, x), atol=1e-14)
    np.testing.assert_allclose(_kernels.matmat_numba(a, b), _kernels.matmat_numpy(a, b), atol=1e-14)
    np.testing.assert_allclose(_kernels.matmat_numba(a, b), a @ b, atol=1e-12)


def test_compensation_beats_naive_sum():
    # 1 + many tiny terms - 1: naive left-to-right summation loses them all
    n = 1000
    u = np.concatenate([[1.0], np.full(n, 1e-17), [-1.0]])
    v = np.ones_like(u)
    exact = n * 1e-17
    assert _kernels.matvec_numba(u[None, :], v)[0] == pytest.approx(exact, rel=1e-6)
    assert _kernels.matvec_numpy(u[None, :], v)[0] == pytest.approx(exact, rel=1e-6)


@pytest.mark.parametrize("flag, expected", [("1", "numpy"), ("0", "numba")])
def test_env_flag_selects_backend(flag, expected):
    env = dict(os.environ, ORTHOTRIG_DISABLE_NUMBA=flag)
    out = subprocess.run(
        [sys.executable, "-c", "import orthotrig; print(orthotrig.BACKEND)"],
        env=env,
        capture_output=True,
        text=True,
        check=True,
    )
    assert out.stdout.strip() == expected

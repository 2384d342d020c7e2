"""Hot inner loops: strided correlation in numba and pure-numpy flavors.

The active flavor is chosen once at import: numba when importable, unless
the environment variable OCWT_DISABLE_NUMBA is set to 1/true/yes.  Both
flavors accumulate tap products in identical k-order, so for a given input
they produce bit-identical rows; either way each output column is an
independent dot product, which makes stride-H output an exact subsample of
the stride-1 output.
"""

from __future__ import annotations

import os

import numpy as np

_ENV_FLAG = os.environ.get("OCWT_DISABLE_NUMBA", "").strip().lower()
NUMBA_DISABLED = _ENV_FLAG in {"1", "true", "yes"}

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and not NUMBA_DISABLED


def correlate_strided_numpy(xpad: np.ndarray, taps: np.ndarray, hop: int, n_cols: int) -> np.ndarray:
    """out[m] = sum_k taps[k] * xpad[m*hop + k], accumulated in k-order."""
    out = np.zeros(n_cols)
    last = (n_cols - 1) * hop
    for k in range(taps.size):
        out += taps[k] * xpad[k : k + last + 1 : hop]
    return out


if HAVE_NUMBA:

    @njit(cache=True, nogil=True)
    def _correlate_strided_jit(xpad, taps, hop, out):  # pragma: no cover - jitted
        for m in range(out.size):
            start = m * hop
            acc = 0.0
            for k in range(taps.size):
                acc += taps[k] * xpad[start + k]
            out[m] = acc

    def correlate_strided_numba(xpad: np.ndarray, taps: np.ndarray, hop: int, n_cols: int) -> np.ndarray:
        out = np.empty(n_cols)
        _correlate_strided_jit(xpad, taps, hop, out)
        return out

else:
    correlate_strided_numba = None


if USE_NUMBA:
    ACTIVE_PATH = "numba"
    correlate_strided = correlate_strided_numba
else:
    ACTIVE_PATH = "numpy"
    correlate_strided = correlate_strided_numpy


def warmup() -> None:
    """Trigger JIT compilation outside any timed region (no-op on numpy path)."""
    if USE_NUMBA:
        correlate_strided(np.zeros(8), np.zeros(3), 2, 3)

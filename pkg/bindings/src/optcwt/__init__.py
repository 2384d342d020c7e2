"""Familiar cwt-style entry point over the strided Morlet transform.

The signature mirrors the classic wavelet-library call, extended with the
two knobs that make the strided transform cheap: `wavelet_length` (tap
budget per scale) and `hop` (output stride).  Computation delegates to the
ocwt core, so results are bit-identical to that package's CLI raw export
for the same inputs; the core's compiled kernels release the GIL, so
transforms may run concurrently on separate threads.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from ocwt import cwt_matrix

__version__ = "0.1.0"

__all__ = ["BindingResult", "cwt"]

_SUPPORTED_WAVELETS = ("morl",)


class BindingResult(NamedTuple):
    """Coefficient matrix (scales x time) and the scales it was computed at."""

    coefficients: np.ndarray
    scales_out: np.ndarray


def cwt(
    data,
    scales,
    wavelet: str = "morl",
    wavelet_length: int = 64,
    hop: int = 1,
) -> BindingResult:
    """Strided CWT of `data` over `scales` with the real Morlet wavelet.

    Returns coefficients of shape (len(scales), ceil(len(data)/hop));
    row order matches the given scales.  Arrays are freshly allocated on
    every call, so callers may mutate them freely.
    """
    if wavelet not in _SUPPORTED_WAVELETS:
        raise ValueError(
            f"unsupported wavelet {wavelet!r}; supported: {', '.join(_SUPPORTED_WAVELETS)}"
        )
    samples = np.ascontiguousarray(data, dtype=np.float64)
    if samples.ndim != 1 or samples.size == 0:
        raise ValueError("data must be a non-empty 1-D array")
    scales_arr = np.ascontiguousarray(scales, dtype=np.float64)
    if scales_arr.ndim != 1 or scales_arr.size == 0:
        raise ValueError("scales must be a non-empty 1-D array")
    if np.any(scales_arr < 1):
        raise ValueError("all scales must be >= 1")
    if wavelet_length < 1:
        raise ValueError(f"wavelet_length must be >= 1, got {wavelet_length}")
    if hop < 1:
        raise ValueError(f"hop must be >= 1, got {hop}")

    coefficients = cwt_matrix(samples, scales_arr, wavelet_length, hop, backend="auto")
    return BindingResult(coefficients=coefficients, scales_out=scales_arr.copy())

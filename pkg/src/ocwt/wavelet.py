"""Truncated, scale-dilated, energy-normalized Morlet kernels.

The mother wavelet is the real Morlet psi(t) = exp(-t^2/2) * cos(5t).
A kernel at scale `a` with `length` taps samples psi on the signal's own
sample grid, taps[k] = (1/sqrt(a)) * psi((k - center)/a), so compute per
scale is fixed by the tap count regardless of dilation.  For lengths well
below 16*a + 1 this deliberately truncates the wavelet's support.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


def morlet(t):
    """Mother wavelet exp(-t^2/2) * cos(5t); accepts scalars or arrays."""
    arr = np.asarray(t, dtype=np.float64)
    # t*t may overflow to inf for astronomically large |t|; exp(-inf) = 0 is
    # exactly the right limit, so the overflow warning is spurious
    with np.errstate(over="ignore"):
        out = np.exp(-0.5 * arr * arr) * np.cos(5.0 * arr)
    if np.ndim(t) == 0:
        return float(out)
    return out


@dataclass(frozen=True)
class MorletKernel:
    """One scale's tap sequence; built via build_kernel."""

    scale: float
    length: int
    center_index: int
    taps: np.ndarray

    def __post_init__(self):
        taps = np.ascontiguousarray(self.taps, dtype=np.float64)
        if taps.size != self.length:
            raise ValueError(f"taps has {taps.size} entries, expected {self.length}")
        taps.setflags(write=False)
        object.__setattr__(self, "taps", taps)


def build_kernel(scale: float, length: int) -> MorletKernel:
    """Sample the dilated Morlet into `length` taps normalized by 1/sqrt(scale).

    center_index = floor((length - 1)/2); for even lengths there is no exact
    center sample and the grid is one step longer on the right.
    """
    if scale < 1:
        raise ValueError(f"scale must be >= 1, got {scale}")
    if length < 1:
        raise ValueError(f"length must be >= 1, got {length}")
    center = (length - 1) // 2
    t = (np.arange(length) - center) / scale
    norm = 1.0 / np.sqrt(scale)
    taps = norm * morlet(t)
    return MorletKernel(scale=float(scale), length=length, center_index=center, taps=taps)


def full_support_length(scale: float) -> int:
    """Tap count covering the canonical support t in [-8, 8] at this scale.

    The Gaussian envelope is below 1e-13 outside that window, so this is the
    natural kernel length for an untruncated (baseline) transform.
    """
    if scale < 1:
        raise ValueError(f"scale must be >= 1, got {scale}")
    return int(math.ceil(16.0 * scale)) + 1

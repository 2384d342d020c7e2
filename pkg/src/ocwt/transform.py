"""Strided CWT core: coefficient matrices with translation restricted to
multiples of a hop size.

Every output column is W(b, a) = sum_k x[b + k - center] * taps_a[k] with
b = m*hop and x zero-extended outside [0, N-1].  Two production backends
(direct dot products, FFT linear correlation) must agree within 1e-9 on
unit-amplitude inputs; cwt_reference is the slow literal-summation oracle
used to verify both.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import _accel
from .audio_io import AudioSignal
from .wavelet import MorletKernel, build_kernel, full_support_length

BACKENDS = ("direct", "fft", "auto")

# Rough complex-multiply vs real multiply-add cost ratio; keep at 4 so the
# auto choice is reproducible across installs.
FFT_COST_FACTOR = 4.0


@dataclass(frozen=True)
class TransformConfig:
    """Scales, kernel length WL, hop H, and backend policy for one transform."""

    scales: tuple
    wavelet_length: int = 64
    hop: int = 128
    backend: str = "auto"
    padding: str = "zero"

    def __post_init__(self):
        scales = tuple(float(s) for s in np.atleast_1d(np.asarray(self.scales, dtype=np.float64)))
        if len(scales) == 0:
            raise ValueError("scales must be non-empty")
        if any(s < 1 for s in scales):
            raise ValueError("all scales must be >= 1")
        if any(s2 <= s1 for s1, s2 in zip(scales, scales[1:])):
            raise ValueError("scales must be strictly increasing")
        if self.wavelet_length < 1:
            raise ValueError(f"wavelet_length must be >= 1, got {self.wavelet_length}")
        if self.hop < 1:
            raise ValueError(f"hop must be >= 1, got {self.hop}")
        if self.backend not in BACKENDS:
            raise ValueError(f"backend must be one of {BACKENDS}, got {self.backend!r}")
        if self.padding != "zero":
            raise ValueError("only zero padding is supported")
        object.__setattr__(self, "scales", scales)


@dataclass(frozen=True)
class Scalogram:
    """Coefficient matrix (rows = scales, cols = ceil(N/hop)) plus provenance."""

    values: np.ndarray
    scales: np.ndarray
    hop: int
    source_length: int
    sample_rate_hz: int

    def __post_init__(self):
        values = np.ascontiguousarray(self.values, dtype=np.float64)
        scales = np.ascontiguousarray(self.scales, dtype=np.float64)
        if values.ndim != 2:
            raise ValueError("values must be a 2-D matrix")
        if values.shape[0] != scales.size:
            raise ValueError("row count must match the number of scales")
        if self.hop < 1:
            raise ValueError(f"hop must be >= 1, got {self.hop}")
        if values.shape[1] != n_output_columns(self.source_length, self.hop):
            raise ValueError("column count must equal ceil(source_length / hop)")
        values.setflags(write=False)
        scales.setflags(write=False)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "scales", scales)

    @property
    def shape(self):
        return self.values.shape


def _as_samples(signal) -> np.ndarray:
    samples = signal.samples if isinstance(signal, AudioSignal) else signal
    samples = np.ascontiguousarray(samples, dtype=np.float64)
    if samples.ndim != 1 or samples.size == 0:
        raise ValueError("signal must be a non-empty 1-D sample sequence")
    return samples


def n_output_columns(n_samples: int, hop: int) -> int:
    return -(-n_samples // hop)


def choose_backend(n_samples: int, wavelet_length: int, hop: int) -> str:
    """Pick direct vs fft from the per-scale work estimate.

    direct costs WL * ceil(N/H) multiply-adds; fft costs about
    (N+WL) * log2(N+WL) complex multiplies, weighted by FFT_COST_FACTOR.
    """
    if min(n_samples, wavelet_length, hop) < 1:
        raise ValueError("n_samples, wavelet_length and hop must all be >= 1")
    direct_cost = wavelet_length * n_output_columns(n_samples, hop)
    m = n_samples + wavelet_length
    fft_cost = FFT_COST_FACTOR * m * math.log2(m)
    return "direct" if direct_cost < fft_cost else "fft"


def _padded(samples: np.ndarray, wavelet_length: int, center: int, hop: int, n_cols: int) -> np.ndarray:
    pad_right = max(0, (n_cols - 1) * hop + wavelet_length - center - samples.size)
    return np.concatenate([np.zeros(center), samples, np.zeros(pad_right)])


def direct_strided(signal, kernel: MorletKernel, hop: int) -> np.ndarray:
    """One coefficient row as explicit WL-length dot products at stride `hop`."""
    samples = _as_samples(signal)
    if hop < 1:
        raise ValueError(f"hop must be >= 1, got {hop}")
    n_cols = n_output_columns(samples.size, hop)
    xpad = _padded(samples, kernel.length, kernel.center_index, hop, n_cols)
    return _accel.correlate_strided(xpad, kernel.taps, hop, n_cols)


def fft_convolve_strided(signal, kernel: MorletKernel, hop: int) -> np.ndarray:
    """One coefficient row via full FFT linear correlation, then stride-H pickup.

    The FFT size depends only on N and WL, never on hop, so the hop-H row is
    an exact subsample of the hop-1 row.
    """
    samples = _as_samples(signal)
    if hop < 1:
        raise ValueError(f"hop must be >= 1, got {hop}")
    n, wl = samples.size, kernel.length
    full = n + wl - 1
    nfft = 1 << (full - 1).bit_length()
    spectrum = np.fft.rfft(samples, nfft) * np.fft.rfft(kernel.taps[::-1], nfft)
    conv = np.fft.irfft(spectrum, nfft)
    n_cols = n_output_columns(n, hop)
    first = wl - 1 - kernel.center_index
    return conv[first : first + (n_cols - 1) * hop + 1 : hop].copy()


def _resolve_lengths(scales, wavelet_length) -> list[int]:
    if wavelet_length is None:
        return [full_support_length(a) for a in scales]
    if np.ndim(wavelet_length) == 0:
        return [int(wavelet_length)] * len(scales)
    lengths = [int(w) for w in wavelet_length]
    if len(lengths) != len(scales):
        raise ValueError("per-scale wavelet_length list must match the number of scales")
    return lengths


def cwt_matrix(
    samples,
    scales: Sequence[float],
    wavelet_length: int | Sequence[int] | None = 64,
    hop: int = 128,
    backend: str = "auto",
    map_fn=map,
) -> np.ndarray:
    """Array-level transform: rows = scales, cols = ceil(N/hop).

    wavelet_length may be a single tap count, a per-scale list, or None for
    full-support kernels.  backend 'auto' resolves per scale via
    choose_backend.  map_fn lets callers compute rows concurrently; rows are
    independent, so any execution order gives bit-identical results.
    """
    samples = _as_samples(samples)
    if backend not in BACKENDS:
        raise ValueError(f"backend must be one of {BACKENDS}, got {backend!r}")
    scales = [float(a) for a in scales]
    lengths = _resolve_lengths(scales, wavelet_length)
    n_cols = n_output_columns(samples.size, hop)

    # One kernel length across scales (the common case) shares a single
    # zero-padded copy of the signal; per-scale padding would otherwise
    # dominate the direct backend at large hops.
    shared_xpad = None
    if len(set(lengths)) == 1:
        length = lengths[0]
        shared_xpad = _padded(samples, length, (length - 1) // 2, hop, n_cols)

    def one_row(args):
        scale, length = args
        kernel = build_kernel(scale, length)
        chosen = backend
        if chosen == "auto":
            chosen = choose_backend(samples.size, length, hop)
        if chosen == "direct":
            xpad = shared_xpad
            if xpad is None:
                xpad = _padded(samples, length, kernel.center_index, hop, n_cols)
            return _accel.correlate_strided(xpad, kernel.taps, hop, n_cols)
        return fft_convolve_strided(samples, kernel, hop)

    rows = list(map_fn(one_row, zip(scales, lengths)))
    return np.vstack(rows)


def cwt_strided(signal: AudioSignal, config: TransformConfig) -> Scalogram:
    """Strided CWT of an audio signal under `config`."""
    values = cwt_matrix(
        signal,
        config.scales,
        config.wavelet_length,
        config.hop,
        config.backend,
    )
    return Scalogram(
        values=values,
        scales=np.asarray(config.scales),
        hop=config.hop,
        source_length=len(signal),
        sample_rate_hz=signal.sample_rate_hz,
    )


def cwt_reference(signal: AudioSignal, config: TransformConfig) -> Scalogram:
    """Ground-truth transform by literal summation (exactly-rounded fsum).

    Same contract as cwt_strided, no performance guarantees; intended for
    verification on short signals only.
    """
    samples = _as_samples(signal)
    hop, wl = config.hop, config.wavelet_length
    n_cols = n_output_columns(samples.size, hop)
    values = np.empty((len(config.scales), n_cols))
    for i, scale in enumerate(config.scales):
        kernel = build_kernel(scale, wl)
        xpad = _padded(samples, wl, kernel.center_index, hop, n_cols)
        for m in range(n_cols):
            window = xpad[m * hop : m * hop + wl]
            values[i, m] = math.fsum(window * kernel.taps)
    return Scalogram(
        values=values,
        scales=np.asarray(config.scales),
        hop=hop,
        source_length=samples.size,
        sample_rate_hz=signal.sample_rate_hz if isinstance(signal, AudioSignal) else 0,
    )

"""Strided Morlet CWT: compact scalograms via kernel-length and hop control.

The transform evaluates W(b, a) = (1/sqrt(a)) * sum_n x[n] psi((n-b)/a)
with a fixed tap budget per scale (wavelet_length) and translations
restricted to multiples of a hop size, so cost per scale drops from
O(support * N) to O(wavelet_length * N / hop).
"""

from .audio_io import (
    AudioSignal,
    MalformedWavError,
    UnsupportedEncodingError,
    read_wav,
    synth_impulse,
    synth_sine,
    write_wav,
)
from .bench import (
    BenchEntry,
    BenchReport,
    compare_kernel_paths,
    dataset_hours,
    grid_cost,
    run_speedup_bench,
    seeded_signal,
)
from .scalogram import (
    COLORMAPS,
    HeatmapSpec,
    export_matrix,
    read_raw,
    render_png,
    resize_bilinear,
    to_magnitude,
)
from .transform import (
    Scalogram,
    TransformConfig,
    choose_backend,
    cwt_matrix,
    cwt_reference,
    cwt_strided,
    direct_strided,
    fft_convolve_strided,
)
from .wavelet import MorletKernel, build_kernel, full_support_length, morlet

__version__ = "0.1.0"

__all__ = [
    "AudioSignal",
    "BenchEntry",
    "BenchReport",
    "COLORMAPS",
    "HeatmapSpec",
    "MalformedWavError",
    "MorletKernel",
    "Scalogram",
    "TransformConfig",
    "UnsupportedEncodingError",
    "build_kernel",
    "choose_backend",
    "compare_kernel_paths",
    "cwt_matrix",
    "cwt_reference",
    "cwt_strided",
    "dataset_hours",
    "direct_strided",
    "export_matrix",
    "fft_convolve_strided",
    "full_support_length",
    "grid_cost",
    "morlet",
    "read_raw",
    "read_wav",
    "render_png",
    "resize_bilinear",
    "run_speedup_bench",
    "seeded_signal",
    "synth_impulse",
    "synth_sine",
    "to_magnitude",
    "write_wav",
]

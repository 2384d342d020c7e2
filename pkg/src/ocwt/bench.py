"""Wall-time benchmarks: baseline full-resolution CWT vs the strided transform.

The baseline emulates an unoptimized CWT's work profile (per-scale
full-support kernels, hop 1); the optimized configuration is WL=64, H=128
over the 128 integer scales 2..129.  Only the transform call sits inside
the timed region; signal synthesis and reporting are excluded.  Medians
are reported because scheduler noise skews means.
"""

from __future__ import annotations

import statistics
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import _accel
from .audio_io import AudioSignal
from .transform import cwt_matrix, n_output_columns
from .wavelet import build_kernel

FILES_IN_DATASET = 54507
BENCH_SEED = 42
DEFAULT_SCALES = tuple(range(2, 130))


def dataset_hours(median_s: float) -> float:
    """Extrapolate one file's transform time to the full 54,507-file corpus."""
    return median_s * FILES_IN_DATASET / 3600.0


def seeded_signal(length: int, sample_rate_hz: int = 16000) -> AudioSignal:
    """Uniform pseudorandom samples in [-1, 1], fixed seed 42."""
    rng = np.random.default_rng(BENCH_SEED)
    samples = rng.uniform(-1.0, 1.0, length)
    return AudioSignal(samples, sample_rate_hz, f"seeded-uniform-{BENCH_SEED}")


@dataclass(frozen=True)
class BenchEntry:
    name: str
    wavelet_length: str
    hop: int
    backend: str
    run_seconds: tuple
    median_s: float
    extrapolation_hours: float


@dataclass(frozen=True)
class BenchReport:
    entries: tuple
    baseline_median_s: float
    optimized_median_s: float
    speedup: float
    dataset_extrapolation_hours: float
    parallel: bool = False


def _timed_runs(fn, repetitions: int) -> tuple:
    fn()  # warm-up: JIT compilation and page faults stay out of the timings
    runs = []
    for _ in range(repetitions):
        t0 = time.perf_counter()
        fn()
        t1 = time.perf_counter()
        runs.append(t1 - t0)
    return tuple(runs)


def _make_entry(name, wavelet_length, hop, backend, runs) -> BenchEntry:
    median_s = statistics.median(runs)
    return BenchEntry(
        name=name,
        wavelet_length=wavelet_length,
        hop=hop,
        backend=backend,
        run_seconds=runs,
        median_s=median_s,
        extrapolation_hours=dataset_hours(median_s),
    )


def run_speedup_bench(
    signal_length: int = 160000,
    repetitions: int = 5,
    parallel: bool = False,
) -> BenchReport:
    """Time the baseline and optimized configurations on the seeded signal."""
    if repetitions < 3:
        raise ValueError(f"repetitions must be >= 3, got {repetitions}")
    signal = seeded_signal(signal_length)
    samples = signal.samples
    scales = DEFAULT_SCALES
    suffix = "-parallel" if parallel else ""

    def time_config(wavelet_length, hop):
        if parallel:
            with ThreadPoolExecutor() as pool:
                return _timed_runs(
                    lambda: cwt_matrix(samples, scales, wavelet_length, hop, "auto", map_fn=pool.map),
                    repetitions,
                )
        return _timed_runs(
            lambda: cwt_matrix(samples, scales, wavelet_length, hop, "auto"),
            repetitions,
        )

    baseline_runs = time_config(None, 1)
    optimized_runs = time_config(64, 128)

    baseline = _make_entry(f"baseline{suffix}", "full", 1, "auto", baseline_runs)
    optimized = _make_entry(f"optimized{suffix}", "64", 128, "auto", optimized_runs)
    return BenchReport(
        entries=(baseline, optimized),
        baseline_median_s=baseline.median_s,
        optimized_median_s=optimized.median_s,
        speedup=baseline.median_s / optimized.median_s,
        dataset_extrapolation_hours=optimized.extrapolation_hours,
        parallel=parallel,
    )


def grid_cost(
    wl_values,
    hop_values,
    signal_length: int = 160000,
    repetitions: int = 3,
) -> list:
    """Median transform seconds for every (WL, H) pair on the seeded signal."""
    if not wl_values or not hop_values:
        raise ValueError("wl_values and hop_values must be non-empty")
    if repetitions < 3:
        raise ValueError(f"repetitions must be >= 3, got {repetitions}")
    samples = seeded_signal(signal_length).samples
    rows = []
    for wl in wl_values:
        for hop in hop_values:
            runs = _timed_runs(
                lambda wl=wl, hop=hop: cwt_matrix(samples, DEFAULT_SCALES, wl, hop, "auto"),
                repetitions,
            )
            rows.append((int(wl), int(hop), statistics.median(runs)))
    return rows


def _direct_transform_with(correlate, samples, scales, wavelet_length, hop):
    n_cols = n_output_columns(samples.size, hop)
    rows = np.empty((len(scales), n_cols))
    for i, scale in enumerate(scales):
        kernel = build_kernel(scale, wavelet_length)
        pad_right = max(0, (n_cols - 1) * hop + kernel.length - kernel.center_index - samples.size)
        xpad = np.concatenate([np.zeros(kernel.center_index), samples, np.zeros(pad_right)])
        rows[i] = correlate(xpad, kernel.taps, hop, n_cols)
    return rows


def compare_kernel_paths(
    signal_length: int = 160000,
    repetitions: int = 3,
    wavelet_length: int = 64,
    hop: int = 128,
) -> list:
    """Time the direct backend under the numba and pure-numpy kernel flavors.

    Returns BenchEntry rows for every available flavor, regardless of which
    one the OCWT_DISABLE_NUMBA flag selected for the public API.
    """
    if repetitions < 3:
        raise ValueError(f"repetitions must be >= 3, got {repetitions}")
    samples = seeded_signal(signal_length).samples
    flavors = [("numpy", _accel.correlate_strided_numpy)]
    if _accel.HAVE_NUMBA:
        flavors.insert(0, ("numba", _accel.correlate_strided_numba))
    entries = []
    for name, correlate in flavors:
        runs = _timed_runs(
            lambda c=correlate: _direct_transform_with(c, samples, DEFAULT_SCALES, wavelet_length, hop),
            repetitions,
        )
        entries.append(
            _make_entry(f"direct-{name}", str(wavelet_length), hop, f"direct-{name}", runs)
        )
    return entries


def write_bench_csv(report: BenchReport, path, extra_entries=()) -> None:
    lines = ["name,WL,H,backend,median_s,speedup_vs_baseline"]
    for entry in list(report.entries) + list(extra_entries):
        speedup = report.baseline_median_s / entry.median_s
        lines.append(
            f"{entry.name},{entry.wavelet_length},{entry.hop},{entry.backend},"
            f"{entry.median_s:.6f},{speedup:.3f}"
        )
    with open(path, "w", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def write_grid_csv(rows, path) -> None:
    lines = ["WL,H,median_s"]
    for wl, hop, median_s in rows:
        lines.append(f"{wl},{hop},{median_s:.6f}")
    with open(path, "w", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")

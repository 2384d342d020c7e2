"""Scalogram rendering and lossless matrix export.

Heatmaps use |coefficient| with per-image min-max normalization, bilinear
resizing (align-corners sampling), and a fixed 256-entry colormap; row 0
(the smallest scale) maps to the top pixel row.  The RAW binary format and
the CSV format round-trip matrices losslessly for tests and bindings.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass

import numpy as np

from ._png import encode_rgb
from .transform import Scalogram

RAW_MAGIC = b"OCWT"
RAW_VERSION = 1
_RAW_HEADER = struct.Struct("<4sIIIIQI")


def _viridis_table() -> np.ndarray:
    # Anchor colors along the viridis ramp, linearly interpolated to 256 entries.
    anchors = np.array(
        [
            (68, 1, 84),
            (72, 40, 120),
            (62, 74, 137),
            (49, 104, 142),
            (38, 130, 142),
            (31, 158, 137),
            (53, 183, 121),
            (109, 205, 89),
            (180, 222, 44),
            (253, 231, 37),
        ],
        dtype=np.float64,
    )
    xp = np.linspace(0.0, 255.0, anchors.shape[0])
    x = np.arange(256, dtype=np.float64)
    table = np.stack([np.interp(x, xp, anchors[:, ch]) for ch in range(3)], axis=1)
    return np.rint(table).astype(np.uint8)


def _grayscale_table() -> np.ndarray:
    ramp = np.arange(256, dtype=np.uint8)
    return np.stack([ramp, ramp, ramp], axis=1)


COLORMAPS = {
    "grayscale": _grayscale_table(),
    "viridis": _viridis_table(),
}


@dataclass(frozen=True)
class HeatmapSpec:
    width: int = 512
    height: int = 512
    colormap: str = "viridis"

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise ValueError("width and height must both be >= 1")
        if self.colormap not in COLORMAPS:
            raise ValueError(f"colormap must be one of {sorted(COLORMAPS)}, got {self.colormap!r}")


def to_magnitude(scalogram: Scalogram) -> np.ndarray:
    """|values| rescaled to [0, 1] over the whole matrix; all zeros when flat."""
    mag = np.abs(scalogram.values)
    lo = mag.min()
    hi = mag.max()
    if hi == lo:
        return np.zeros_like(mag)
    return (mag - lo) / (hi - lo)


def _axis_positions(n_src: int, n_dst: int) -> np.ndarray:
    # Align-corners sampling: destination pixel i reads source n_src-1 at the far edge.
    if n_dst == 1 or n_src == 1:
        return np.zeros(n_dst)
    return np.linspace(0.0, n_src - 1.0, n_dst)


def resize_bilinear(matrix: np.ndarray, height: int, width: int) -> np.ndarray:
    """Bilinear resample of a 2-D matrix to (height, width)."""
    rows, cols = matrix.shape
    ry = _axis_positions(rows, height)
    rx = _axis_positions(cols, width)
    y0 = np.floor(ry).astype(np.intp)
    x0 = np.floor(rx).astype(np.intp)
    y1 = np.minimum(y0 + 1, rows - 1)
    x1 = np.minimum(x0 + 1, cols - 1)
    fy = (ry - y0)[:, None]
    fx = (rx - x0)[None, :]
    top = matrix[np.ix_(y0, x0)] * (1.0 - fx) + matrix[np.ix_(y0, x1)] * fx
    bottom = matrix[np.ix_(y1, x0)] * (1.0 - fx) + matrix[np.ix_(y1, x1)] * fx
    return top * (1.0 - fy) + bottom * fy


def render_png(scalogram: Scalogram, spec: HeatmapSpec = HeatmapSpec()) -> bytes:
    """Render the normalized magnitude matrix as deterministic PNG bytes."""
    mag = to_magnitude(scalogram)
    resized = resize_bilinear(mag, spec.height, spec.width)
    indices = np.rint(resized * 255.0).astype(np.uint8)
    pixels = COLORMAPS[spec.colormap][indices]
    return encode_rgb(pixels)


def _format_value(v: float) -> str:
    return f"{v:.17g}"


def export_matrix(scalogram: Scalogram, path, format: str = "csv") -> None:
    """Write the coefficient matrix as `csv` (text) or `raw` (binary)."""
    if format == "csv":
        _write_csv(scalogram, path)
    elif format == "raw":
        _write_raw(scalogram, path)
    else:
        raise ValueError(f"format must be 'csv' or 'raw', got {format!r}")


def _write_csv(scalogram: Scalogram, path) -> None:
    scales = ",".join(f"{s:g}" for s in scalogram.scales)
    header = (
        f"# scales={scales} hop={scalogram.hop} "
        f"n={scalogram.source_length} rate={scalogram.sample_rate_hz}"
    )
    lines = [header]
    for row in scalogram.values:
        lines.append(",".join(_format_value(v) for v in row))
    with open(path, "w", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def _write_raw(scalogram: Scalogram, path) -> None:
    rows, cols = scalogram.values.shape
    header = _RAW_HEADER.pack(
        RAW_MAGIC,
        RAW_VERSION,
        rows,
        cols,
        scalogram.hop,
        scalogram.source_length,
        scalogram.sample_rate_hz,
    )
    with open(path, "wb") as fh:
        fh.write(header)
        fh.write(scalogram.scales.astype("<f4").tobytes())
        fh.write(scalogram.values.astype("<f8").tobytes())


def read_raw(path) -> Scalogram:
    """Read a RAW matrix file back into a Scalogram (f64 values, lossless)."""
    with open(path, "rb") as fh:
        header = fh.read(_RAW_HEADER.size)
        if len(header) < _RAW_HEADER.size:
            raise ValueError(f"{path}: truncated header")
        magic, version, rows, cols, hop, source_length, rate = _RAW_HEADER.unpack(header)
        if magic != RAW_MAGIC:
            raise ValueError(f"{path}: bad magic {magic!r}")
        if version != RAW_VERSION:
            raise ValueError(f"{path}: unsupported version {version}")
        scales = np.frombuffer(fh.read(4 * rows), dtype="<f4").astype(np.float64)
        values = np.frombuffer(fh.read(8 * rows * cols), dtype="<f8").reshape(rows, cols)
    return Scalogram(
        values=values,
        scales=scales,
        hop=hop,
        source_length=source_length,
        sample_rate_hz=rate,
    )

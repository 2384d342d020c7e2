import io

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from PIL import Image

from ocwt import (
    COLORMAPS,
    HeatmapSpec,
    Scalogram,
    export_matrix,
    read_raw,
    render_png,
    resize_bilinear,
    to_magnitude,
)


def make_scalogram(values, hop=1, rate=16000):
    values = np.asarray(values, dtype=np.float64)
    return Scalogram(
        values=values,
        scales=np.arange(2, 2 + values.shape[0], dtype=np.float64),
        hop=hop,
        source_length=values.shape[1] * hop,
        sample_rate_hz=rate,
    )


def decode(png_bytes):
    return np.asarray(Image.open(io.BytesIO(png_bytes)).convert("RGB"))


# ------------------------------------------------------------ magnitude


def test_magnitude_zero_matrix():
    s = make_scalogram(np.zeros((3, 4)))
    assert np.all(to_magnitude(s) == 0.0)


def test_magnitude_minmax_arithmetic():
    s = make_scalogram([[-2.0, 0.0], [1.0, 2.0]])
    np.testing.assert_array_equal(to_magnitude(s), [[1.0, 0.0], [0.5, 1.0]])


def test_magnitude_scale_invariant():
    rng = np.random.default_rng(4)
    base = rng.normal(size=(5, 9))
    for factor in (0.25, 3.0, 1e6):
        a = to_magnitude(make_scalogram(base))
        b = to_magnitude(make_scalogram(base * factor))
        np.testing.assert_allclose(a, b, atol=1e-12)


@settings(max_examples=50)
@given(st.lists(st.floats(-1e6, 1e6), min_size=2, max_size=40).map(np.asarray))
def test_magnitude_range_and_peak(vals):
    m = make_scalogram(vals.reshape(1, -1))
    out = to_magnitude(m)
    assert np.all((0.0 <= out) & (out <= 1.0))
    if np.ptp(np.abs(vals)) > 0:
        assert out.max() == 1.0


# ------------------------------------------------------------ rendering


def test_render_default_is_512x512():
    rng = np.random.default_rng(0)
    s = make_scalogram(rng.normal(size=(128, 1250)))
    img = decode(render_png(s))
    assert img.shape == (512, 512, 3)


def test_render_1x1_black():
    s = make_scalogram([[0.0]])
    img = decode(render_png(s, HeatmapSpec(colormap="grayscale")))
    assert img.shape == (512, 512, 3)
    assert np.all(img == 0)


def test_render_constant_matrix_uniform_color():
    s = make_scalogram(np.full((4, 7), 3.5))
    for cmap in ("grayscale", "viridis"):
        img = decode(render_png(s, HeatmapSpec(width=32, height=16, colormap=cmap)))
        assert img.shape == (16, 32, 3)
        assert np.all(img.reshape(-1, 3) == COLORMAPS[cmap][0])


def test_render_deterministic():
    rng = np.random.default_rng(10)
    s = make_scalogram(rng.normal(size=(16, 40)))
    assert render_png(s) == render_png(s)


def test_smallest_scale_maps_to_top_row():
    # bottom row has the large values; top pixel rows must stay dark
    values = np.vstack([np.zeros((1, 8)), np.full((1, 8), 9.0)])
    s = make_scalogram(values)
    img = decode(render_png(s, HeatmapSpec(width=8, height=8, colormap="grayscale")))
    assert np.all(img[0] == 0)
    assert np.all(img[-1] == 255)


def test_argmax_cell_hits_top_colormap_index():
    # corner cells are sampled exactly under align-corners resizing
    values = np.array([[5.0, 1.0, 0.5], [0.25, 0.125, 0.0]])
    s = make_scalogram(values)
    img = decode(render_png(s, HeatmapSpec(width=30, height=20, colormap="grayscale")))
    assert tuple(img[0, 0]) == (255, 255, 255)
    assert img.max() == 255


def test_colormap_tables_have_256_entries():
    for table in COLORMAPS.values():
        assert table.shape == (256, 3)
        assert table.dtype == np.uint8


def test_heatmap_spec_validation():
    with pytest.raises(ValueError):
        HeatmapSpec(width=0)
    with pytest.raises(ValueError):
        HeatmapSpec(colormap="plasma")


def test_resize_bilinear_identity():
    rng = np.random.default_rng(5)
    m = rng.normal(size=(6, 11))
    np.testing.assert_allclose(resize_bilinear(m, 6, 11), m, atol=1e-12)


def test_resize_bilinear_midpoint():
    m = np.array([[0.0, 1.0]])
    out = resize_bilinear(m, 1, 3)
    np.testing.assert_allclose(out, [[0.0, 0.5, 1.0]], atol=1e-15)


# ------------------------------------------------------------ export


def test_csv_export_layout(tmp_path):
    s = make_scalogram([[1.0, 2.0, 3.0], [4.0, 5.0, 6.0]], hop=2)
    path = tmp_path / "matrix.csv"
    export_matrix(s, path, format="csv")
    lines = path.read_text().splitlines()
    assert len(lines) == 3
    assert lines[0] == "# scales=2,3 hop=2 n=6 rate=16000"
    assert lines[1].split(",") == ["1", "2", "3"]
    assert len(lines[2].split(",")) == 3


def test_csv_17_significant_digits(tmp_path):
    value = 1.0 / 3.0
    s = make_scalogram([[value]])
    path = tmp_path / "matrix.csv"
    export_matrix(s, path, format="csv")
    data_line = path.read_text().splitlines()[1]
    assert float(data_line) == value


def test_raw_round_trip(tmp_path):
    rng = np.random.default_rng(77)
    s = make_scalogram(rng.normal(size=(5, 13)), hop=3, rate=44100)
    path = tmp_path / "matrix.raw"
    export_matrix(s, path, format="raw")
    back = read_raw(path)
    np.testing.assert_array_equal(back.values, s.values)
    np.testing.assert_array_equal(back.scales, s.scales)
    assert back.hop == 3
    assert back.source_length == s.source_length
    assert back.sample_rate_hz == 44100


def test_raw_file_size_formula(tmp_path):
    rng = np.random.default_rng(8)
    s = make_scalogram(rng.normal(size=(128, 1250)), hop=128)
    path = tmp_path / "big.raw"
    export_matrix(s, path, format="raw")
    assert path.stat().st_size == 32 + 4 * 128 + 8 * 128 * 1250


def test_raw_rejects_bad_magic(tmp_path):
    path = tmp_path / "bad.raw"
    path.write_bytes(b"NOPE" + bytes(60))
    with pytest.raises(ValueError):
        read_raw(path)


def test_export_rejects_unknown_format(tmp_path):
    s = make_scalogram([[1.0]])
    with pytest.raises(ValueError):
        export_matrix(s, tmp_path / "x.bin", format="npz")

"""Command-line front end: transform, kernel inspection, bench, grid search.

Exit codes: 0 success, 1 usage error, 2 I/O or data error.  Progress goes
to stdout; data is written only to --out paths.
"""

from __future__ import annotations

import argparse
import sys

from .audio_io import MalformedWavError, UnsupportedEncodingError, read_wav
from .bench import (
    compare_kernel_paths,
    grid_cost,
    run_speedup_bench,
    write_bench_csv,
    write_grid_csv,
)
from .scalogram import HeatmapSpec, export_matrix, render_png
from .transform import TransformConfig, cwt_strided
from .wavelet import build_kernel

_COLORMAP_ALIASES = {"gray": "grayscale", "viridis": "viridis"}


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage; this tool reserves 2 for
    # I/O and data failures, so usage errors exit 1 instead.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _parse_scales(text: str) -> tuple:
    try:
        lo_text, hi_text = text.split(":", 1)
        lo, hi = int(lo_text), int(hi_text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected lo:hi integer range, got {text!r}")
    if lo < 1 or hi < lo:
        raise argparse.ArgumentTypeError(f"invalid scale range {text!r}: need 1 <= lo <= hi")
    return tuple(range(lo, hi + 1))


def _parse_int_list(text: str) -> tuple:
    try:
        values = tuple(int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not values or any(v < 1 for v in values):
        raise argparse.ArgumentTypeError(f"values must be positive integers, got {text!r}")
    return values


def _build_parser() -> _Parser:
    parser = _Parser(prog="ocwt", description="Strided Morlet CWT scalogram tool")
    sub = parser.add_subparsers(dest="command", required=True)

    p_tr = sub.add_parser("transform", help="transform a WAV file into a scalogram")
    p_tr.add_argument("input", help="input WAV file (PCM16)")
    p_tr.add_argument("--out", required=True, help="output file path")
    p_tr.add_argument("--format", required=True, choices=("png", "csv", "raw"))
    p_tr.add_argument("--scales", type=_parse_scales, default=tuple(range(2, 130)),
                      metavar="LO:HI", help="inclusive integer scale range (default 2:129)")
    p_tr.add_argument("--wl", type=int, default=64, help="wavelet kernel length (default 64)")
    p_tr.add_argument("--hop", type=int, default=128, help="output hop size (default 128)")
    p_tr.add_argument("--backend", choices=("auto", "direct", "fft"), default="auto")
    p_tr.add_argument("--width", type=int, default=512, help="PNG width (default 512)")
    p_tr.add_argument("--height", type=int, default=512, help="PNG height (default 512)")
    p_tr.add_argument("--colormap", choices=sorted(_COLORMAP_ALIASES), default="viridis")

    p_k = sub.add_parser("kernel", help="dump one kernel's taps as CSV")
    p_k.add_argument("--scale", type=float, required=True)
    p_k.add_argument("--wl", type=int, required=True)
    p_k.add_argument("--out", required=True)

    p_b = sub.add_parser("bench", help="baseline vs optimized speedup benchmark")
    p_b.add_argument("--n", type=int, default=160000, help="signal length (default 160000)")
    p_b.add_argument("--reps", type=int, default=5, help="repetitions per config (default 5)")
    p_b.add_argument("--out", default=None, help="write results CSV here")
    p_b.add_argument("--parallel", action="store_true",
                     help="compute scales concurrently (reported separately)")
    p_b.add_argument("--compare-kernels", action="store_true",
                     help="also time the numba and pure-numpy direct kernels")

    p_g = sub.add_parser("grid", help="cost grid search over (WL, H)")
    p_g.add_argument("--wl", type=_parse_int_list, required=True, metavar="W1,W2,...")
    p_g.add_argument("--hop", type=_parse_int_list, required=True, metavar="H1,H2,...")
    p_g.add_argument("--n", type=int, default=160000, help="signal length (default 160000)")
    p_g.add_argument("--reps", type=int, default=3, help="repetitions per cell (default 3)")
    p_g.add_argument("--out", required=True, help="write grid CSV here")

    return parser


def _cmd_transform(args) -> int:
    try:
        signal = read_wav(args.input)
    except (FileNotFoundError, MalformedWavError, UnsupportedEncodingError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        config = TransformConfig(
            scales=args.scales,
            wavelet_length=args.wl,
            hop=args.hop,
            backend=args.backend,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"transforming {args.input}: N={len(signal)}, "
          f"{len(config.scales)} scales, WL={config.wavelet_length}, H={config.hop}")
    scalogram = cwt_strided(signal, config)
    rows, cols = scalogram.shape
    print(f"coefficient matrix {rows}x{cols}")
    try:
        if args.format == "png":
            spec = HeatmapSpec(
                width=args.width,
                height=args.height,
                colormap=_COLORMAP_ALIASES[args.colormap],
            )
            png = render_png(scalogram, spec)
            with open(args.out, "wb") as fh:
                fh.write(png)
        else:
            export_matrix(scalogram, args.out, format=args.format)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return 2
    print(f"wrote {args.out}")
    return 0


def _cmd_kernel(args) -> int:
    try:
        kernel = build_kernel(args.scale, args.wl)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    lines = ["index,t,value"]
    for k, tap in enumerate(kernel.taps):
        t = (k - kernel.center_index) / kernel.scale
        lines.append(f"{k},{t:.17g},{tap:.17g}")
    try:
        with open(args.out, "w", newline="\n") as fh:
            fh.write("\n".join(lines) + "\n")
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return 2
    print(f"wrote {len(kernel.taps)} taps to {args.out}")
    return 0


def _cmd_bench(args) -> int:
    try:
        report = run_speedup_bench(args.n, args.reps, parallel=args.parallel)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    for entry in report.entries:
        print(f"{entry.name}: median {entry.median_s:.4f} s "
              f"(dataset ~{entry.extrapolation_hours:.1f} h)")
    print(f"speedup: {report.speedup:.2f}x")
    extra = []
    if args.compare_kernels:
        extra = compare_kernel_paths(args.n, max(args.reps, 3))
        for entry in extra:
            print(f"{entry.name}: median {entry.median_s:.4f} s")
    if args.out:
        try:
            write_bench_csv(report, args.out, extra_entries=extra)
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
            return 2
        print(f"wrote {args.out}")
    return 0


def _cmd_grid(args) -> int:
    try:
        rows = grid_cost(args.wl, args.hop, args.n, args.reps)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    for wl, hop, median_s in rows:
        print(f"WL={wl} H={hop}: median {median_s:.4f} s")
    try:
        write_grid_csv(rows, args.out)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return 2
    print(f"wrote {args.out}")
    return 0


_COMMANDS = {
    "transform": _cmd_transform,
    "kernel": _cmd_kernel,
    "bench": _cmd_bench,
    "grid": _cmd_grid,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    return _COMMANDS[args.command](args)


def run() -> None:
    sys.exit(main(sys.argv[1:]))


if __name__ == "__main__":
    run()

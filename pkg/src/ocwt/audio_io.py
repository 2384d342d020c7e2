"""WAV decoding and deterministic test-signal synthesis.

Only RIFF/WAVE containers with 16-bit signed PCM samples are accepted.
Multi-channel files are reduced to mono by the per-frame arithmetic mean.
Samples are normalized by 1/32768 so that the int16 floor maps to -1.0.
"""

from __future__ import annotations

import math
import wave
from dataclasses import dataclass
from pathlib import Path

import numpy as np

PCM16_SCALE = 32768.0


class MalformedWavError(ValueError):
    """The file is not a readable RIFF/WAVE container."""


class UnsupportedEncodingError(ValueError):
    """The WAV file is valid but is not 16-bit integer PCM."""


@dataclass(frozen=True)
class AudioSignal:
    """Immutable mono sample sequence with its sample rate.

    samples are dimensionless amplitudes in [-1, 1]; sample_rate_hz is the
    native rate of the source (no resampling is ever applied).
    """

    samples: np.ndarray
    sample_rate_hz: int
    source_label: str = ""

    def __post_init__(self):
        samples = np.ascontiguousarray(self.samples, dtype=np.float64)
        if samples.ndim != 1 or samples.size == 0:
            raise ValueError("samples must be a non-empty 1-D sequence")
        if self.sample_rate_hz <= 0:
            raise ValueError(f"sample_rate_hz must be positive, got {self.sample_rate_hz}")
        peak = float(np.max(np.abs(samples)))
        if peak > 1.0:
            raise ValueError(f"samples must lie in [-1, 1], found |s| = {peak}")
        samples.setflags(write=False)
        object.__setattr__(self, "samples", samples)

    def __len__(self) -> int:
        return self.samples.size


def read_wav(path) -> AudioSignal:
    """Decode a PCM16 WAV file into a normalized mono AudioSignal.

    Raises FileNotFoundError for a missing file, MalformedWavError for a
    broken container, UnsupportedEncodingError for non-PCM16 payloads.
    """
    p = Path(path)
    if not p.is_file():
        raise FileNotFoundError(f"no such file: {p}")
    try:
        with wave.open(str(p), "rb") as wav:
            n_channels = wav.getnchannels()
            sample_width = wav.getsampwidth()
            rate = wav.getframerate()
            n_frames = wav.getnframes()
            if wav.getcomptype() != "NONE":
                raise UnsupportedEncodingError(
                    f"{p}: compressed WAV ({wav.getcomptype()}) is not supported"
                )
            if sample_width != 2:
                raise UnsupportedEncodingError(
                    f"{p}: only 16-bit PCM is supported, got {8 * sample_width}-bit"
                )
            raw = wav.readframes(n_frames)
    except wave.Error as exc:
        # wave reports unknown fmt codes (float, ADPCM, ...) as 'unknown format'
        if "unknown format" in str(exc):
            raise UnsupportedEncodingError(f"{p}: {exc}") from exc
        raise MalformedWavError(f"{p}: not a valid RIFF/WAVE file ({exc})") from exc
    except EOFError as exc:
        raise MalformedWavError(f"{p}: truncated WAV file") from exc

    data = np.frombuffer(raw, dtype="<i2")
    if n_channels > 1:
        usable = (data.size // n_channels) * n_channels
        data = data[:usable].reshape(-1, n_channels).mean(axis=1)
    samples = np.asarray(data, dtype=np.float64) / PCM16_SCALE
    return AudioSignal(samples=samples, sample_rate_hz=rate, source_label=str(p))


def write_wav(path, signal: AudioSignal) -> None:
    """Encode an AudioSignal as mono PCM16 WAV (round-half-even quantization)."""
    quantized = np.clip(np.rint(signal.samples * PCM16_SCALE), -32768, 32767)
    with wave.open(str(path), "wb") as wav:
        wav.setnchannels(1)
        wav.setsampwidth(2)
        wav.setframerate(signal.sample_rate_hz)
        wav.writeframes(quantized.astype("<i2").tobytes())


def synth_impulse(length: int, position: int, sample_rate_hz: int = 16000) -> AudioSignal:
    """Unit impulse: 1.0 at `position`, zero elsewhere."""
    if not 0 <= position < length:
        raise ValueError(f"position {position} out of range for length {length}")
    samples = np.zeros(length)
    samples[position] = 1.0
    return AudioSignal(samples, sample_rate_hz, f"impulse@{position}")


def synth_sine(
    length: int,
    freq_hz: float,
    sample_rate_hz: int = 16000,
    amplitude: float = 1.0,
) -> AudioSignal:
    """Pure sine: samples[n] = amplitude * sin(2*pi*freq_hz*n/sample_rate_hz)."""
    if freq_hz <= 0:
        raise ValueError(f"freq_hz must be positive, got {freq_hz}")
    if freq_hz >= sample_rate_hz / 2:
        raise ValueError(
            f"freq_hz {freq_hz} is at or above the Nyquist rate {sample_rate_hz / 2}"
        )
    if not 0.0 < amplitude <= 1.0:
        raise ValueError(f"amplitude must be in (0, 1], got {amplitude}")
    n = np.arange(length)
    samples = amplitude * np.sin(2.0 * math.pi * freq_hz * n / sample_rate_hz)
    return AudioSignal(samples, sample_rate_hz, f"sine{freq_hz:g}Hz")

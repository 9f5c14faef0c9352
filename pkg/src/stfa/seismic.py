"""Trace/section readers, frequency slices and grid/heatmap writers.

File formats
------------
Trace CSV
    First line ``# fs=<Hz> t0=<s>``, then one sample per line, either
    ``value`` (real) or ``re,im``.
STFA section binary (little-endian)
    ``b"STFA"``, u32 trace_count, u32 samples, f64 fs, f64 t0,
    i32 cdp_start, then trace_count*samples f64 values, trace-major.
Grid CSV
    One matrix row per line, ``%.17e`` values separated by commas.
PGM
    Binary 8-bit greymap (``P5``), min-max scaled to 0..255.
"""

from __future__ import annotations

import os
import re
import struct
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from .errors import FormatError, OutOfBandError, ParseError
from .signals import ComplexSignal, TFDGrid

MAGIC = b"STFA"
_HEADER = struct.Struct("<4sIIddi")
_HEADER_RE = re.compile(r"^#\s*fs=(\S+)\s+t0=(\S+)\s*$")


@dataclass(frozen=True)
class SeismicSection:
    traces: np.ndarray
    fs: float
    t0: float = 0.0
    cdp_start: int = 0

    def __post_init__(self):
        tr = np.array(self.traces, dtype=np.float64)
        if tr.ndim != 2:
            raise ValueError("traces must be a 2-D array (trace_count, samples)")
        if tr.shape[0] == 0:
            raise ValueError("section has no traces")
        if not self.fs > 0:
            raise ValueError(f"fs must be positive, got {self.fs}")
        tr.setflags(write=False)
        object.__setattr__(self, "traces", tr)

    @property
    def cdps(self) -> np.ndarray:
        return self.cdp_start + np.arange(self.traces.shape[0])

    def trace_signal(self, k: int) -> ComplexSignal:
        """Trace ``k`` as a complex signal with zero imaginary part."""
        return ComplexSignal(self.traces[k], self.fs, self.t0)


@dataclass(frozen=True)
class FrequencySlice:
    values: np.ndarray
    freq_hz: float
    bin_hz: float


def read_trace_csv(path) -> ComplexSignal:
    with open(path, encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    if not lines:
        raise ParseError("empty file", 1)
    head = _HEADER_RE.match(lines[0].strip())
    if head is None:
        raise ParseError("expected header '# fs=<Hz> t0=<s>'", 1)
    try:
        fs, t0 = float(head.group(1)), float(head.group(2))
    except ValueError:
        raise ParseError("non-numeric fs or t0 in header", 1) from None
    samples = []
    for lineno, line in enumerate(lines[1:], start=2):
        line = line.strip()
        if not line:
            continue
        parts = line.split(",")
        try:
            if len(parts) == 1:
                samples.append(complex(float(parts[0]), 0.0))
            elif len(parts) == 2:
                samples.append(complex(float(parts[0]), float(parts[1])))
            else:
                raise ValueError
        except ValueError:
            raise ParseError(f"cannot parse sample {line!r}", lineno) from None
    if not samples:
        raise ParseError("no samples", len(lines))
    try:
        return ComplexSignal(np.array(samples), fs, t0)
    except ValueError as exc:
        raise ParseError(str(exc), 1) from None


def write_trace_csv(signal: ComplexSignal, path, real=None) -> None:
    """Write a trace CSV; ``real`` defaults to True when every imaginary part is 0."""
    s = signal.samples
    if real is None:
        real = not np.any(s.imag)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"# fs={signal.fs!r} t0={signal.t0!r}\n")
        for v in s:
            re_, im_ = float(v.real), float(v.imag)
            fh.write(f"{re_!r}\n" if real else f"{re_!r},{im_!r}\n")


def write_section_bin(section: SeismicSection, path) -> None:
    count, samples = section.traces.shape
    with open(path, "wb") as fh:
        fh.write(_HEADER.pack(MAGIC, count, samples, section.fs, section.t0, section.cdp_start))
        fh.write(section.traces.astype("<f8").tobytes())


def read_section_bin(path) -> SeismicSection:
    data = Path(path).read_bytes()
    if len(data) < _HEADER.size:
        raise FormatError(f"file too short for header ({len(data)} bytes)")
    magic, count, samples, fs, t0, cdp_start = _HEADER.unpack_from(data)
    if magic != MAGIC:
        raise FormatError(f"bad magic {magic!r}, expected {MAGIC!r}")
    if count == 0:
        raise FormatError("empty section: trace_count is 0")
    expected = _HEADER.size + 8 * count * samples
    if len(data) != expected:
        raise FormatError(f"payload size mismatch: expected {expected} bytes, got {len(data)}")
    traces = np.frombuffer(data, dtype="<f8", offset=_HEADER.size).reshape(count, samples)
    try:
        return SeismicSection(traces, fs, t0, cdp_start)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def frequency_slice(tfds: Sequence[TFDGrid], f: float) -> FrequencySlice:
    """Row nearest ``f`` Hz from each trace's TFD, stacked as ``(traces, times)``."""
    if len(tfds) == 0:
        raise ValueError("no TFDs given")
    axes = tfds[0].axes
    for g in tfds[1:]:
        if g.shape != tfds[0].shape or not (
            np.array_equal(g.axes.freqs, axes.freqs) and np.array_equal(g.axes.times, axes.times)
        ):
            raise ValueError("all TFDs must share the same axes")
    try:
        row = axes.nearest_row(f)
    except OutOfBandError as exc:
        raise OutOfBandError(f"slice frequency: {exc}") from None
    values = np.stack([g.values[row] for g in tfds])
    return FrequencySlice(values, float(f), float(axes.freqs[row]))


def export_heatmap_pgm(grid, path, flip_rows=True) -> None:
    """Write ``grid`` as an 8-bit binary PGM.

    Values are min-max scaled to 0..255; a constant grid gives all zeros.
    With ``flip_rows`` the last matrix row becomes the top image row, so a
    TFD shows its highest frequency at the top.
    """
    g = np.asarray(grid, dtype=float)
    if g.ndim != 2 or g.size == 0:
        raise ValueError("grid must be a non-empty 2-D array")
    if not np.all(np.isfinite(g)):
        raise ValueError("grid contains non-finite values")
    lo, hi = g.min(), g.max()
    pix = np.zeros(g.shape, dtype=np.uint8)
    if hi > lo:
        pix = np.rint((g - lo) / (hi - lo) * 255).astype(np.uint8)
    if flip_rows:
        pix = pix[::-1]
    h, w = pix.shape
    with open(path, "wb") as fh:
        fh.write(f"P5\n{w} {h}\n255\n".encode("ascii"))
        fh.write(np.ascontiguousarray(pix).tobytes())


def read_pgm(path) -> np.ndarray:
    """Read back a P5 file written by :func:`export_heatmap_pgm` (image row order)."""
    data = Path(path).read_bytes()
    parts = data.split(b"\n", 3)
    if len(parts) < 4 or parts[0] != b"P5" or parts[2] != b"255":
        raise FormatError("not an 8-bit P5 file")
    w, h = (int(v) for v in parts[1].split())
    pix = np.frombuffer(parts[3], dtype=np.uint8)
    if pix.size != w * h:
        raise FormatError("PGM payload size mismatch")
    return pix.reshape(h, w)


def export_grid_csv(grid, path) -> None:
    g = np.asarray(grid.values if isinstance(grid, TFDGrid) else grid, dtype=float)
    if g.ndim == 1:
        g = g[None, :]
    if g.ndim != 2 or g.size == 0:
        raise ValueError("grid must be a non-empty 1-D or 2-D array")
    tmp = f"{os.fspath(path)}.tmp"
    try:
        np.savetxt(tmp, g, fmt="%.17e", delimiter=",")
        os.replace(tmp, path)
    finally:
        if os.path.exists(tmp):
            os.remove(tmp)


def read_grid_csv(path) -> np.ndarray:
    try:
        g = np.loadtxt(path, delimiter=",", dtype=float, ndmin=2)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    if g.size == 0:
        raise ParseError("empty grid")
    return g


def section_tfds(section: SeismicSection, method="lps", params=None, sigma=None, workers=1):
    """TFD of every trace, in trace order, all with the same parameters."""
    from .framing import gaussian_window
    from .solver import SolverParams, stfa_lps
    from .stft import stft

    params = params or SolverParams()
    out = []
    for k in range(section.traces.shape[0]):
        s = section.trace_signal(k)
        if method == "lps":
            out.append(stfa_lps(s, params, sigma=sigma, workers=workers))
        elif method == "stft":
            out.append(stft(s, gaussian_window(params.m, sigma)))
        else:
            raise ValueError(f"unknown method {method!r}")
    return out


def synthetic_section(traces=16, fs=512.0, n=512, cdp_start=51) -> SeismicSection:
    """Real-valued test section: a tone whose frequency ramps across CDPs plus a fixed 60 Hz burst.

    Trace ``k`` holds ``cos(2*pi*f_k*t)`` with ``f_k`` running from 20 to 40 Hz,
    and ``0.5*cos(2*pi*60*t)`` under a Gaussian envelope centered mid-trace.
    """
    t = np.arange(n) / fs
    ramp = np.linspace(20.0, 40.0, traces) if traces > 1 else np.array([30.0])
    env = np.exp(-(((t - t[n // 2]) / (0.1 * n / fs)) ** 2))
    data = np.cos(2 * np.pi * ramp[:, None] * t) + 0.5 * env * np.cos(2 * np.pi * 60.0 * t)
    return SeismicSection(data, fs, 0.0, cdp_start)

"""Signal and grid types, the synthetic test signals and their ideal TFDs.

All synthetic signals are sampled on ``t_k = t0 + k / fs`` for ``k = 0..n-1``.
The default grid (t0=-8 s, fs=16 Hz, n=256) spans [-8, 8) s, so the
centered frequency axis is exactly [-8, 8) Hz with 1/16 Hz bins.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .errors import OutOfBandError

DEFAULT_T0 = -8.0
DEFAULT_FS = 16.0
DEFAULT_N = 256


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, copy=True)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class ComplexSignal:
    """Uniformly sampled complex time series.

    Parameters
    ----------
    samples : array_like of complex
        Sample values, length ``n``.
    fs : float
        Sampling rate in Hz.
    t0 : float
        Time of the first sample in seconds.
    """

    samples: np.ndarray
    fs: float
    t0: float = 0.0

    def __post_init__(self):
        s = np.asarray(self.samples, dtype=np.complex128)
        if s.ndim != 1 or s.size == 0:
            raise ValueError("samples must be a non-empty 1-D sequence")
        if not self.fs > 0:
            raise ValueError(f"fs must be positive, got {self.fs}")
        object.__setattr__(self, "samples", _frozen(s))
        object.__setattr__(self, "fs", float(self.fs))
        object.__setattr__(self, "t0", float(self.t0))

    def __len__(self):
        return self.samples.size

    @property
    def n(self) -> int:
        return self.samples.size

    @property
    def times(self) -> np.ndarray:
        return self.t0 + np.arange(self.n) / self.fs

    def axes(self) -> TimeFreqAxes:
        return TimeFreqAxes.from_grid(self.t0, self.fs, self.n)


@dataclass(frozen=True)
class TimeFreqAxes:
    """Time and centered-frequency axes of an ``n x n`` TFD.

    ``freqs[j] = (j - n/2) * fs / n``, the order produced by fftshift.
    """

    times: np.ndarray
    freqs: np.ndarray
    fs: float

    def __post_init__(self):
        if len(self.times) != len(self.freqs):
            raise ValueError("times and freqs must have equal length")
        object.__setattr__(self, "times", _frozen(np.asarray(self.times, dtype=float)))
        object.__setattr__(self, "freqs", _frozen(np.asarray(self.freqs, dtype=float)))

    @classmethod
    def from_grid(cls, t0: float, fs: float, n: int) -> TimeFreqAxes:
        if n <= 0 or not fs > 0:
            raise ValueError("n and fs must be positive")
        times = t0 + np.arange(n) / fs
        freqs = (np.arange(n) - n // 2) * fs / n
        return cls(times, freqs, float(fs))

    @property
    def n(self) -> int:
        return self.times.size

    @property
    def df(self) -> float:
        return self.fs / self.n

    def nearest_row(self, f: float) -> int:
        """Index of the frequency row nearest ``f`` (ties go to the lower row).

        Raises
        ------
        OutOfBandError
            If the nearest row falls outside the grid.
        """
        u = (f - self.freqs[0]) / self.df
        j = math.ceil(u - 0.5) if np.isfinite(u) else -1
        if not 0 <= j < self.n:
            hi = self.freqs[-1] + self.df / 2
            raise OutOfBandError(
                f"frequency {f} Hz outside the band [{self.freqs[0]}, {hi}) Hz"
            )
        return j


@dataclass(frozen=True)
class TFDGrid:
    """Nonnegative ``n x n`` time-frequency magnitudes.

    Rows are frequency bins in centered order (``axes.freqs``), columns
    are time indices (``axes.times``).
    """

    values: np.ndarray
    axes: TimeFreqAxes

    def __post_init__(self):
        v = np.asarray(self.values, dtype=float)
        n = self.axes.n
        if v.shape != (n, n):
            raise ValueError(f"grid shape {v.shape} does not match axes ({n}, {n})")
        if not np.all(np.isfinite(v)) or np.any(v < 0):
            raise ValueError("grid values must be finite and nonnegative")
        object.__setattr__(self, "values", _frozen(v))

    @property
    def shape(self):
        return self.values.shape


@dataclass(frozen=True)
class IFTrack:
    """Analytic instantaneous frequency of one signal component."""

    f_of_t: Callable[[np.ndarray], np.ndarray]
    amplitude: float = 1.0
    label: str = field(default="", compare=False)


def _check_grid(t0, fs, n):
    if int(n) != n or n <= 0:
        raise ValueError(f"n must be a positive integer, got {n}")
    if not fs > 0:
        raise ValueError(f"fs must be positive, got {fs}")
    return float(t0) + np.arange(int(n)) / float(fs)


def gen_lfm(t0=DEFAULT_T0, fs=DEFAULT_FS, n=DEFAULT_N) -> ComplexSignal:
    """Linear FM chirp ``exp(j*pi*t**2)``; instantaneous frequency ``t`` Hz."""
    t = _check_grid(t0, fs, n)
    return ComplexSignal(np.exp(1j * np.pi * t**2), fs, t0)


def gen_parabola(t0=DEFAULT_T0, fs=DEFAULT_FS, n=DEFAULT_N) -> ComplexSignal:
    """Parabolic FM ``exp(j*pi*t**3/12)``; instantaneous frequency ``t**2/8`` Hz."""
    t = _check_grid(t0, fs, n)
    return ComplexSignal(np.exp(1j * np.pi * t**3 / 12), fs, t0)


def gen_multicomponent(t0=DEFAULT_T0, fs=DEFAULT_FS, n=DEFAULT_N) -> ComplexSignal:
    """Sum of two parabolic FMs, a -4 Hz tone and a sinusoidal FM around -7 Hz."""
    t = _check_grid(t0, fs, n)
    s = (
        np.exp(1j * np.pi * t**3 / 12)
        + np.exp(-1j * np.pi * t**3 / 12)
        + np.exp(-8j * np.pi * t)
        + np.exp(-1j * np.pi * (14 * t + np.cos(2 * t)))
    )
    return ComplexSignal(s, fs, t0)


def gen_tone(freq_hz, t0=DEFAULT_T0, fs=DEFAULT_FS, n=DEFAULT_N) -> ComplexSignal:
    t = _check_grid(t0, fs, n)
    return ComplexSignal(np.exp(2j * np.pi * freq_hz * t), fs, t0)


def lfm_tracks() -> list[IFTrack]:
    return [IFTrack(lambda t: np.asarray(t, dtype=float), label="t")]


def parabola_tracks() -> list[IFTrack]:
    return [IFTrack(lambda t: np.asarray(t, dtype=float) ** 2 / 8, label="t^2/8")]


def multicomponent_tracks() -> list[IFTrack]:
    return [
        IFTrack(lambda t: np.asarray(t, dtype=float) ** 2 / 8, label="t^2/8"),
        IFTrack(lambda t: -np.asarray(t, dtype=float) ** 2 / 8, label="-t^2/8"),
        IFTrack(lambda t: np.full_like(np.asarray(t, dtype=float), -4.0), label="-4"),
        IFTrack(lambda t: -7 + np.sin(2 * np.asarray(t, dtype=float)), label="-7+sin(2t)"),
    ]


def tone_tracks(freq_hz) -> list[IFTrack]:
    return [IFTrack(lambda t: np.full_like(np.asarray(t, dtype=float), freq_hz))]


SIGNALS = {
    "lfm": (gen_lfm, lfm_tracks),
    "parabola": (gen_parabola, parabola_tracks),
    "multi": (gen_multicomponent, multicomponent_tracks),
}


def ideal_tfd(tracks: Sequence[IFTrack], axes: TimeFreqAxes, clip=False) -> TFDGrid:
    """Rasterize instantaneous-frequency tracks into a binary reference TFD.

    Each track puts a 1 in the row nearest its frequency at every time
    column; coinciding tracks still give 1.

    Parameters
    ----------
    tracks : sequence of IFTrack
    axes : TimeFreqAxes
    clip : bool, optional
        If True, samples whose frequency has no row in the grid are
        skipped. Otherwise they raise.

    Raises
    ------
    OutOfBandError
        A track leaves the band and ``clip`` is False.
    """
    n = axes.n
    values = np.zeros((n, n))
    for track in tracks:
        f = np.broadcast_to(np.asarray(track.f_of_t(axes.times), dtype=float), (n,))
        for k in range(n):
            try:
                j = axes.nearest_row(f[k])
            except OutOfBandError as exc:
                if clip:
                    continue
                raise OutOfBandError(f"at t={axes.times[k]} s: {exc}") from None
            values[j, k] = 1.0
    return TFDGrid(values, axes)


def synthetic(name, t0=DEFAULT_T0, fs=DEFAULT_FS, n=DEFAULT_N):
    """Return ``(signal, ideal_grid)`` for one of ``SIGNALS``.

    Edge samples whose instantaneous frequency leaves the band are left
    out of the reference instead of wrapping around.
    """
    try:
        gen, tracks = SIGNALS[name]
    except KeyError:
        raise ValueError(f"unknown signal {name!r}; choose from {sorted(SIGNALS)}") from None
    s = gen(t0, fs, n)
    return s, ideal_tfd(tracks(), s.axes(), clip=True)

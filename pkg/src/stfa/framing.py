"""Pad, truncate and Gaussian-weight a signal into one short frame per sample."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .signals import ComplexSignal


def default_sigma(m: int) -> float:
    """Default Gaussian width in samples, ``(m - 1) / 5``."""
    return (m - 1) / 5


def _check_odd(m):
    if int(m) != m or m < 3 or m % 2 == 0:
        raise ValueError(f"window length must be an odd integer >= 3, got {m}")
    return int(m)


@dataclass(frozen=True)
class Window:
    weights: np.ndarray

    def __post_init__(self):
        w = np.array(self.weights, dtype=float)
        _check_odd(w.size)
        if np.any(w <= 0):
            raise ValueError("window weights must be positive")
        w.setflags(write=False)
        object.__setattr__(self, "weights", w)

    @property
    def m(self) -> int:
        return self.weights.size


@dataclass(frozen=True)
class Frame:
    y: np.ndarray
    center_index: int


def gaussian_window(m: int, sigma: float | None = None) -> Window:
    """Gaussian window of odd length ``m`` with unit peak at the center.

    Parameters
    ----------
    m : int
        Odd window length, at least 3.
    sigma : float, optional
        Standard deviation in samples; defaults to ``default_sigma(m)``.
    """
    m = _check_odd(m)
    if sigma is None:
        sigma = default_sigma(m)
    if not sigma > 0:
        raise ValueError(f"sigma must be positive, got {sigma}")
    k = np.arange(m) - (m - 1) / 2
    return Window(np.exp(-(k**2) / (2.0 * sigma**2)))


def pad_signal(s: ComplexSignal | np.ndarray, m: int) -> np.ndarray:
    """Zero-pad ``(m - 1) / 2`` samples on both ends."""
    m = _check_odd(m)
    x = s.samples if isinstance(s, ComplexSignal) else np.asarray(s, dtype=np.complex128)
    h = (m - 1) // 2
    return np.concatenate([np.zeros(h, np.complex128), x, np.zeros(h, np.complex128)])


def extract_frame(padded: np.ndarray, i: int, m: int) -> Frame:
    """Unweighted length-``m`` frame centered on original sample ``i``."""
    m = _check_odd(m)
    n = len(padded) - (m - 1)
    if not 0 <= i < n:
        raise ValueError(f"frame index {i} out of range [0, {n})")
    return Frame(np.array(padded[i : i + m]), int(i))


def weight_frame(frame: Frame, w: Window) -> Frame:
    if len(frame.y) != w.m:
        raise ValueError(f"frame length {len(frame.y)} != window length {w.m}")
    return Frame(frame.y * w.weights, frame.center_index)


def frame_matrix(s: ComplexSignal | np.ndarray, w: Window) -> np.ndarray:
    """All weighted frames stacked as an ``(n, m)`` array, row ``i`` = frame ``i``.

    Row ``i`` equals ``weight_frame(extract_frame(pad_signal(s, m), i, m), w).y``.
    """
    padded = pad_signal(s, w.m)
    n = len(padded) - (w.m - 1)
    view = np.lib.stride_tricks.sliding_window_view(padded, w.m)[:n]
    return view * w.weights

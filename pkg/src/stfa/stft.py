"""Plain STFT baseline on the same frames and grid as the sparse solver."""

from __future__ import annotations

import numpy as np

from .framing import Window, frame_matrix
from .signals import ComplexSignal, TFDGrid


def stft(s: ComplexSignal, window: Window, n: int | None = None) -> TFDGrid:
    """Magnitude STFT with hop 1.

    Each weighted frame is zero-padded to ``n`` (the signal length),
    transformed with the forward DFT and fftshifted into one column.
    """
    n = s.n if n is None else n
    if n != s.n:
        raise ValueError(f"transform length {n} must equal the signal length {s.n}")
    if window.m > n:
        raise ValueError(f"window length {window.m} exceeds n={n}")
    spec = np.fft.fft(frame_matrix(s, window), n=n, axis=-1)
    return TFDGrid(np.abs(np.fft.fftshift(spec, axes=-1)).T, s.axes())

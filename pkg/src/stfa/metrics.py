"""Quality measures for TFDs: concentration, Renyi entropy, PSNR, relative error.

Integrals over the time-frequency plane are plain sums over grid cells.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import UndefinedMetricError
from .signals import TFDGrid


def _values(tf):
    return np.asarray(tf.values if isinstance(tf, TFDGrid) else tf, dtype=float)


def _nonzero(v, what="grid"):
    if not np.any(v):
        raise UndefinedMetricError(f"{what} is all zero")


def cm(tf) -> float:
    """Concentration ``sum|TF|^4 / (sum|TF|^2)^2``; larger is sharper."""
    v = np.abs(_values(tf))
    _nonzero(v)
    # scale first so the fourth powers cannot overflow or underflow
    v = v / v.max()
    return float(np.sum(v**4) / np.sum(v**2) ** 2)


def renyi(tf, alpha: float = 3.0) -> float:
    """Renyi entropy in bits of the grid normalized to unit sum; smaller is sharper."""
    if alpha == 1:
        raise ValueError("alpha must differ from 1")
    v = np.abs(_values(tf))
    _nonzero(v)
    prob = v / v.sum()
    return float(math.log2(np.sum(prob**alpha)) / (1.0 - alpha))


def normalize_peak(v):
    """Scale to a maximum of 1; an all-zero array is returned unchanged."""
    v = np.asarray(v, dtype=float)
    peak = np.max(np.abs(v)) if v.size else 0.0
    return v / peak if peak > 0 else v.copy()


def psnr(x, y_ideal) -> float:
    """PSNR in dB of ``x`` against the reference ``y_ideal``.

    Both grids are scaled to a peak of 1 first. Identical grids give ``inf``.
    """
    xv, yv = _values(x), _values(y_ideal)
    if xv.shape != yv.shape:
        raise ValueError(f"shape mismatch: {xv.shape} vs {yv.shape}")
    _nonzero(yv, "reference grid")
    mse = np.mean((normalize_peak(xv) - normalize_peak(yv)) ** 2)
    if mse == 0:
        return math.inf
    return float(10.0 * math.log10(1.0 / mse))


def rel_err(x, y) -> float:
    """``||x - y||_2 / ||x||_2`` with the estimate ``x`` in the denominator."""
    xv, yv = _values(x), _values(y)
    if xv.shape != yv.shape:
        raise ValueError(f"shape mismatch: {xv.shape} vs {yv.shape}")
    den = np.linalg.norm(xv.ravel())
    if den == 0:
        raise UndefinedMetricError("estimate has zero norm")
    return float(np.linalg.norm((xv - yv).ravel()) / den)


@dataclass(frozen=True)
class MetricReport:
    psnr_db: float
    renyi_bits: float
    cm: float
    re: float
    elapsed_s: float = 0.0

    FIELDS = ("psnr_db", "renyi_bits", "cm", "re")


def report(x, y_ideal, elapsed_s: float = 0.0, alpha: float = 3.0) -> MetricReport:
    """All four measures of ``x`` against ``y_ideal``.

    The relative error is taken between the peak-normalized grids, the
    same scaling PSNR uses, so it does not depend on the raw amplitude.
    """
    xv, yv = _values(x), _values(y_ideal)
    return MetricReport(
        psnr_db=psnr(xv, yv),
        renyi_bits=renyi(xv, alpha),
        cm=cm(xv),
        re=rel_err(normalize_peak(xv), normalize_peak(yv)),
        elapsed_s=float(elapsed_s),
    )

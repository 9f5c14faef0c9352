"""ADMM with complex Lp shrinkage for per-frame sparse spectral inversion.

Each weighted frame ``y`` is inverted for a sparse spectrum ``x`` by
approximately solving::

    min_x  mu * ||x||_p^p + 1/2 * ||y - Theta x||_2^2

with the splitting ``x = z`` and scaled dual ``zt``. One iteration is::

    x  <- (Theta^H Theta + beta J)^-1 (Theta^H y + beta (z - zt))
    z  <- shrink_p(x + zt, mu / beta)
    zt <- zt + gamma * beta * (x - z)

The iteration count is fixed; there is no tolerance-based exit.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .dictionary import DictionaryOp
from .framing import Frame, frame_matrix, gaussian_window
from .signals import ComplexSignal, TFDGrid

#: Frames are solved in fixed-size blocks so the arithmetic, and hence the
#: result, does not depend on how many workers share the blocks.
BLOCK_SIZE = 32


@dataclass(frozen=True)
class SolverParams:
    """Parameters of one ADMM run.

    ``spectral_scale`` fixes the units of ``x``: a unit-modulus tone on a
    grid frequency is represented by one coefficient of this magnitude,
    which is what the threshold ``mu / beta`` is compared against. The
    solver uses ``Theta = (n / spectral_scale) * S F^-1``. ``None`` keeps
    the plain ``S F^-1`` (the same as ``spectral_scale = n``); with it the
    default ``mu`` zeroes every coefficient of a unit-amplitude signal.
    """

    p: float = 0.1
    beta: float = 1.0
    mu: float = 0.5
    gamma: float = 1.0
    m: int = 11
    max_iter: int = 25
    spectral_scale: float | None = 8.0

    def __post_init__(self):
        if not 0 < self.p <= 1:
            raise ValueError(f"p must lie in (0, 1], got {self.p}")
        for name in ("beta", "mu", "gamma"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive, got {getattr(self, name)}")
        if int(self.m) != self.m or self.m < 3 or self.m % 2 == 0:
            raise ValueError(f"m must be an odd integer >= 3, got {self.m}")
        if int(self.max_iter) != self.max_iter or self.max_iter < 1:
            raise ValueError(f"max_iter must be a positive integer, got {self.max_iter}")
        if self.spectral_scale is not None and not self.spectral_scale > 0:
            raise ValueError(f"spectral_scale must be positive, got {self.spectral_scale}")

    def operator(self, n: int, mode: str = "fast") -> DictionaryOp:
        gain = 1.0 if self.spectral_scale is None else n / self.spectral_scale
        return DictionaryOp(n, self.m, mode=mode, gain=gain)


@dataclass(frozen=True)
class FrameSolution:
    x: np.ndarray
    residual_history: np.ndarray


def shrink_p(xi, tau, p):
    """Complex p-shrinkage.

    Magnitude ``max(|xi| - tau**(2-p) * |xi|**(p-1), 0)`` with the phase of
    ``xi`` kept; zero maps to zero. ``p = 1`` is soft thresholding.
    Works elementwise on arrays.
    """
    if not tau > 0:
        raise ValueError(f"tau must be positive, got {tau}")
    xi = np.asarray(xi)
    a = np.atleast_1d(np.abs(xi))
    with np.errstate(over="ignore", divide="ignore", invalid="ignore"):
        mag = np.maximum(a - tau ** (2 - p) * a ** (p - 1), 0.0)
    mag[a == 0] = 0.0
    keep = mag > 0
    flat = np.atleast_1d(xi)
    out = np.zeros(flat.shape, dtype=np.result_type(xi, np.float64))
    out[keep] = mag[keep] * (flat[keep] / a[keep])
    return out[0] if xi.ndim == 0 else out


def admm_frames(frames, op: DictionaryOp, params: SolverParams):
    """Run the ADMM iteration on a stack of frames.

    Parameters
    ----------
    frames : ndarray, shape (k, m)
        Weighted frames, one per row.
    op : DictionaryOp
    params : SolverParams

    Returns
    -------
    x : ndarray, shape (k, n)
        Final spectra.
    history : ndarray, shape (k, max_iter)
        ``||x - z||_2`` after each iteration.
    """
    y = np.asarray(frames, dtype=np.complex128)
    if y.ndim != 2 or y.shape[1] != op.m:
        raise ValueError(f"frames must have shape (k, {op.m}), got {y.shape}")
    beta, gamma = params.beta, params.gamma
    tau = params.mu / beta
    b = op.apply_theta_h(y)
    x = np.zeros_like(b)
    z = np.zeros_like(b)
    zt = np.zeros_like(b)
    history = np.empty((y.shape[0], params.max_iter))
    for k in range(params.max_iter):
        x = op.regularized_inverse_apply(b + beta * (z - zt), beta)
        z = shrink_p(x + zt, tau, params.p)
        r = x - z
        zt = zt + gamma * beta * r
        history[:, k] = np.linalg.norm(r, axis=1)
    return x, history


def admm_frame(y: Frame | np.ndarray, op: DictionaryOp, params: SolverParams) -> FrameSolution:
    """Solve a single frame; see :func:`admm_frames`."""
    data = y.y if isinstance(y, Frame) else np.asarray(y)
    if data.ndim != 1 or data.size != op.m:
        raise ValueError(f"frame length {data.size} does not match operator m={op.m}")
    x, hist = admm_frames(data[None, :], op, params)
    return FrameSolution(x[0], hist[0])


def _solve_block(frames, start, op, params):
    try:
        x, _ = admm_frames(frames, op, params)
    except Exception as exc:
        raise RuntimeError(
            f"solver failed on frames {start}..{start + len(frames) - 1}: {exc}"
        ) from exc
    bad = ~np.all(np.isfinite(x), axis=1)
    if bad.any():
        raise FloatingPointError(f"non-finite spectrum at time index {start + int(np.argmax(bad))}")
    return np.abs(np.fft.fftshift(x, axes=-1))


def solve_blocks(frames, op, params, workers=1):
    """Magnitude spectra (fftshifted) for every frame row, in order."""
    n_frames = frames.shape[0]
    starts = range(0, n_frames, BLOCK_SIZE)
    jobs = [(frames[s : s + BLOCK_SIZE], s) for s in starts]
    if workers is None or workers <= 1 or len(jobs) == 1:
        parts = [_solve_block(f, s, op, params) for f, s in jobs]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda j: _solve_block(j[0], j[1], op, params), jobs))
    return np.concatenate(parts, axis=0)


def stfa_lps(
    s: ComplexSignal,
    params: SolverParams | None = None,
    sigma: float | None = None,
    workers: int = 1,
    mode: str = "fast",
) -> TFDGrid:
    """Sparse time-frequency distribution of ``s``.

    Every sample gets a Gaussian-weighted frame of length ``params.m``;
    the frame's sparse spectrum magnitude, fftshifted, becomes that
    time's column.

    Parameters
    ----------
    s : ComplexSignal
    params : SolverParams, optional
        Defaults to ``SolverParams()``.
    sigma : float, optional
        Gaussian window width in samples; default ``(m - 1) / 5``.
    workers : int
        Number of threads. The output is bitwise identical for any value.
    mode : {"fast", "explicit"}
        Dictionary implementation.
    """
    params = params or SolverParams()
    n = s.n
    if params.m > n:
        raise ValueError(f"window length m={params.m} exceeds signal length {n}")
    w = gaussian_window(params.m, sigma)
    op = params.operator(n, mode=mode)
    mags = solve_blocks(frame_matrix(s, w), op, params, workers)
    return TFDGrid(mags.T, s.axes())

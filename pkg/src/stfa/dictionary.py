"""The partial inverse-DFT dictionary ``Theta = gain * S * F^-1``.

``F`` is the un-normalized DFT matrix ``F[a, b] = exp(-2j*pi*a*b/n)`` and
``F^-1 = conj(F) / n``, matching ``numpy.fft.fft`` / ``numpy.fft.ifft``.
``S = [I_m  0]`` keeps the first ``m`` time samples. With this
normalization ``Theta Theta^H = (gain**2 / n) I_m``, which turns the
Woodbury form of ``(Theta^H Theta + beta J)^-1`` into a scalar correction.

Two interchangeable modes: ``"fast"`` uses FFTs and never forms an
``n x n`` matrix; ``"explicit"`` builds dense matrices and solves the
``m x m`` Woodbury system directly. Both act on the last axis, so a
stack of frames can be processed in one call.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

MODES = ("fast", "explicit")


def dft_matrix(n: int) -> np.ndarray:
    """Un-normalized ``n x n`` DFT matrix, ``W_n ** (a*b)`` with ``W_n = exp(-2j*pi/n)``."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    ab = np.outer(np.arange(n), np.arange(n)) % n
    return np.exp(-2j * np.pi * ab / n)


@dataclass(frozen=True)
class DictionaryOp:
    """Linear map from an ``n``-bin spectrum to the first ``m`` samples of its inverse DFT.

    Parameters
    ----------
    n : int
        Spectrum length.
    m : int
        Frame length, ``1 <= m <= n``.
    mode : {"fast", "explicit"}
    gain : float
        Amplitude factor on the whole operator (1 gives the plain ``S F^-1``).
    """

    n: int
    m: int
    mode: str = "fast"
    gain: float = 1.0

    def __post_init__(self):
        if not 1 <= self.m <= self.n:
            raise ValueError(f"need 1 <= m <= n, got m={self.m}, n={self.n}")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if not self.gain > 0:
            raise ValueError(f"gain must be positive, got {self.gain}")
        if self.mode == "explicit":
            f = dft_matrix(self.n)
            theta = self.gain * (np.conj(f) / self.n)[: self.m]
            object.__setattr__(self, "_theta", theta)
            object.__setattr__(self, "_theta_h", theta.conj().T)

    @property
    def gram_scale(self) -> float:
        """``rho`` with ``Theta Theta^H = rho * I_m``."""
        return self.gain**2 / self.n

    def matrix(self) -> np.ndarray:
        """Dense ``m x n`` matrix of the operator (small sizes only)."""
        if self.mode == "explicit":
            return self._theta.copy()
        return self.apply_theta(np.eye(self.n, dtype=np.complex128)).T

    def _check(self, a, size, what):
        a = np.asarray(a, dtype=np.complex128)
        if a.shape[-1:] != (size,):
            raise ValueError(f"{what} must have length {size} on the last axis, got shape {a.shape}")
        return a

    def apply_theta(self, x):
        x = self._check(x, self.n, "x")
        if self.mode == "explicit":
            return x @ self._theta.T
        return self.gain * np.fft.ifft(x, axis=-1)[..., : self.m]

    def apply_theta_h(self, y):
        y = self._check(y, self.m, "y")
        if self.mode == "explicit":
            return y @ self._theta_h.T
        return (self.gain / self.n) * np.fft.fft(y, n=self.n, axis=-1)

    def apply_gram(self, v):
        """``Theta^H Theta v``."""
        v = self._check(v, self.n, "v")
        if self.mode == "explicit":
            return self.apply_theta_h(self.apply_theta(v))
        t = np.fft.ifft(v, axis=-1)
        t[..., self.m :] = 0
        return self.gram_scale * np.fft.fft(t, axis=-1)

    def regularized_inverse_apply(self, v, beta):
        """``(Theta^H Theta + beta J)^-1 v`` via the Woodbury identity."""
        if not beta > 0:
            raise ValueError(f"beta must be positive, got {beta}")
        v = self._check(v, self.n, "v")
        if self.mode == "explicit":
            # beta^-1 v - beta^-2 Theta^H (I + beta^-1 Theta Theta^H)^-1 Theta v
            inner = np.eye(self.m) + (self._theta @ self._theta_h) / beta
            rhs = self.apply_theta(v)
            sol = np.linalg.solve(inner, rhs.reshape(-1, self.m).T).T.reshape(rhs.shape)
            return v / beta - self.apply_theta_h(sol) / beta**2
        coef = 1.0 / (beta**2 * (1.0 + self.gram_scale / beta))
        return v / beta - coef * self.apply_gram(v)

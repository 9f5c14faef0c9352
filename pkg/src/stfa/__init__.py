"""Sparse time-frequency analysis via ADMM with Lp-quasinorm shrinkage (STFA-LpS)."""

from .dictionary import DictionaryOp, dft_matrix
from .errors import FormatError, OutOfBandError, ParseError, UndefinedMetricError
from .framing import Frame, Window, extract_frame, gaussian_window, pad_signal, weight_frame
from .metrics import MetricReport, cm, psnr, rel_err, renyi, report
from .signals import (
    ComplexSignal,
    IFTrack,
    TFDGrid,
    TimeFreqAxes,
    gen_lfm,
    gen_multicomponent,
    gen_parabola,
    ideal_tfd,
    synthetic,
)
from .solver import FrameSolution, SolverParams, admm_frame, shrink_p, stfa_lps
from .stft import stft

__version__ = "0.1.0"

"""Command line front end: ``stfa synth | analyze | metrics | slice | compare | section``.

Exit codes: 0 success, 1 runtime or data error, 2 usage error.
"""

from __future__ import annotations

import functools
import time

import click

from . import metrics as mt
from .errors import FormatError, OutOfBandError, ParseError, UndefinedMetricError
from .framing import gaussian_window
from .seismic import (
    export_grid_csv,
    export_heatmap_pgm,
    frequency_slice,
    read_grid_csv,
    read_section_bin,
    read_trace_csv,
    section_tfds,
    synthetic_section,
    write_section_bin,
    write_trace_csv,
)
from .signals import DEFAULT_FS, DEFAULT_N, DEFAULT_T0, SIGNALS, synthetic
from .solver import SolverParams, stfa_lps
from .stft import stft

_DEFAULTS = SolverParams()
_DATA_ERRORS = (ValueError, OSError, ParseError, FormatError, OutOfBandError, UndefinedMetricError,
                FloatingPointError, RuntimeError)


def _data_errors(func):
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except click.ClickException:
            raise
        except _DATA_ERRORS as exc:
            raise click.ClickException(str(exc)) from exc
    return wrapper


_METHOD = click.option("--method", type=click.Choice(["lps", "stft"]), default="lps", show_default=True)


def solver_options(func):
    opts = [
        click.option("--p", "p", type=click.FloatRange(0, 1, min_open=True), default=_DEFAULTS.p,
                     show_default=True, help="Lp quasinorm exponent, in (0, 1]."),
        click.option("--beta", type=float, default=_DEFAULTS.beta, show_default=True),
        click.option("--mu", type=float, default=_DEFAULTS.mu, show_default=True),
        click.option("--gamma", type=float, default=_DEFAULTS.gamma, show_default=True),
        click.option("--m", "m", type=int, default=_DEFAULTS.m, show_default=True,
                     help="Odd frame length."),
        click.option("--iters", type=int, default=_DEFAULTS.max_iter, show_default=True),
        click.option("--sigma", type=float, default=None,
                     help="Gaussian width in samples [default: (m-1)/5]."),
        click.option("--spectral-scale", type=float, default=_DEFAULTS.spectral_scale, show_default=True,
                     help="Coefficient magnitude of a unit-amplitude on-grid tone."),
        click.option("--threads", type=click.IntRange(min=1), default=1, envvar="STFA_THREADS",
                     show_default=True, help="Worker threads (env STFA_THREADS)."),
    ]
    for opt in reversed(opts):
        func = opt(func)
    return func


def _params(p, beta, mu, gamma, m, iters, spectral_scale):
    try:
        return SolverParams(p=p, beta=beta, mu=mu, gamma=gamma, m=m, max_iter=iters,
                            spectral_scale=spectral_scale)
    except ValueError as exc:
        raise click.ClickException(f"invalid solver parameter: {exc}") from exc


def _tfd(signal, method, params, sigma, threads):
    if method == "lps":
        return stfa_lps(signal, params, sigma=sigma, workers=threads)
    return stft(signal, gaussian_window(params.m, sigma))


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
def cli():
    """Sparse time-frequency analysis with Lp-quasinorm shrinkage."""


@cli.command()
@click.argument("signal", type=click.Choice(sorted(SIGNALS)))
@click.argument("prefix", type=click.Path(dir_okay=False))
@click.option("--fs", type=float, default=DEFAULT_FS, show_default=True)
@click.option("--t0", type=float, default=DEFAULT_T0, show_default=True)
@click.option("--n", "n", type=int, default=DEFAULT_N, show_default=True)
@_data_errors
def synth(signal, prefix, fs, t0, n):
    """Write a synthetic SIGNAL to PREFIX_trace.csv and its ideal TFD to PREFIX_ideal.csv/.pgm."""
    s, ideal = synthetic(signal, t0, fs, n)
    write_trace_csv(s, f"{prefix}_trace.csv")
    export_grid_csv(ideal, f"{prefix}_ideal.csv")
    export_heatmap_pgm(ideal.values, f"{prefix}_ideal.pgm")
    click.echo(f"wrote {prefix}_trace.csv ({s.n} samples) and {prefix}_ideal.csv")


@cli.command()
@click.argument("trace", type=click.Path(exists=True, dir_okay=False))
@click.argument("prefix", type=click.Path(dir_okay=False))
@_METHOD
@solver_options
@_data_errors
def analyze(trace, prefix, method, p, beta, mu, gamma, m, iters, sigma, spectral_scale, threads):
    """Compute the TFD of a trace CSV; writes PREFIX_tfd.csv and PREFIX_tfd.pgm."""
    params = _params(p, beta, mu, gamma, m, iters, spectral_scale)
    signal = read_trace_csv(trace)
    t_start = time.perf_counter()
    grid = _tfd(signal, method, params, sigma, threads)
    elapsed = time.perf_counter() - t_start
    export_grid_csv(grid, f"{prefix}_tfd.csv")
    export_heatmap_pgm(grid.values, f"{prefix}_tfd.pgm")
    click.echo(f"elapsed {elapsed:.6f} s")


def _metric_rows(x, y):
    rep = mt.report(x, y)
    return [(name, getattr(rep, name)) for name in mt.MetricReport.FIELDS]


@cli.command()
@click.argument("x", type=click.Path(exists=True, dir_okay=False))
@click.argument("y_ideal", type=click.Path(exists=True, dir_okay=False))
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Also write the table as CSV.")
@_data_errors
def metrics(x, y_ideal, out):
    """Compare grid CSV X with reference grid CSV Y_IDEAL (PSNR, Renyi, CM, RE)."""
    gx, gy = read_grid_csv(x), read_grid_csv(y_ideal)
    if gx.shape != gy.shape:
        raise click.ClickException(f"shape mismatch: {gx.shape} vs {gy.shape}")
    lines = ["metric,value"] + [f"{k},{v!r}" for k, v in _metric_rows(gx, gy)]
    text = "\n".join(lines) + "\n"
    click.echo(text, nl=False)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


@cli.command("slice")
@click.argument("section", type=click.Path(exists=True, dir_okay=False))
@click.argument("prefix", type=click.Path(dir_okay=False))
@click.option("--freq", type=float, required=True, help="Slice frequency in Hz.")
@_METHOD
@solver_options
@_data_errors
def slice_cmd(section, prefix, freq, method, p, beta, mu, gamma, m, iters, sigma, spectral_scale, threads):
    """Constant-frequency slice of an STFA section; writes PREFIX_slice.csv and .pgm."""
    params = _params(p, beta, mu, gamma, m, iters, spectral_scale)
    sec = read_section_bin(section)
    n = sec.traces.shape[1]
    axes_probe = sec.trace_signal(0).axes()
    try:
        axes_probe.nearest_row(freq)
    except OutOfBandError as exc:
        raise click.ClickException(str(exc)) from exc
    tfds = section_tfds(sec, method, params, sigma, threads)
    sl = frequency_slice(tfds, freq)
    export_grid_csv(sl.values, f"{prefix}_slice.csv")
    # image: CDP across, time downward
    export_heatmap_pgm(sl.values.T, f"{prefix}_slice.pgm", flip_rows=False)
    click.echo(f"bin {sl.bin_hz!r} Hz ({sec.traces.shape[0]} traces x {n} samples)")


@cli.command()
@click.argument("signal", type=click.Choice(sorted(SIGNALS)))
@solver_options
@_data_errors
def compare(signal, p, beta, mu, gamma, m, iters, sigma, spectral_scale, threads):
    """Table of PSNR, Renyi, CM, RE and time for STFT and STFA-LpS on a synthetic SIGNAL."""
    params = _params(p, beta, mu, gamma, m, iters, spectral_scale)
    s, ideal = synthetic(signal)
    click.echo("method,psnr_db,renyi_bits,cm,re,time_s")
    for name in ("stft", "lps"):
        t_start = time.perf_counter()
        grid = _tfd(s, name, params, sigma, threads)
        rep = mt.report(grid, ideal, time.perf_counter() - t_start)
        click.echo(f"{name},{rep.psnr_db:.4f},{rep.renyi_bits:.4f},{rep.cm:.4e},{rep.re:.4f},{rep.elapsed_s:.3f}")


@cli.command()
@click.argument("path", type=click.Path(dir_okay=False))
@click.option("--traces", type=click.IntRange(min=1), default=16, show_default=True)
@click.option("--fs", type=float, default=512.0, show_default=True)
@click.option("--n", "n", type=click.IntRange(min=3), default=512, show_default=True)
@click.option("--cdp-start", type=int, default=51, show_default=True)
@_data_errors
def section(path, traces, fs, n, cdp_start):
    """Write a synthetic STFA section binary built from chirps and tones."""
    sec = synthetic_section(traces, fs, n, cdp_start)
    write_section_bin(sec, path)
    click.echo(f"wrote {path}: {traces} traces x {n} samples at {fs:g} Hz")


def main():
    cli(prog_name="stfa")


if __name__ == "__main__":
    main()

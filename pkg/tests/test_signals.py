import numpy as np
import pytest

from stfa.errors import OutOfBandError
from stfa.signals import (
    ComplexSignal,
    IFTrack,
    TimeFreqAxes,
    gen_lfm,
    gen_multicomponent,
    gen_parabola,
    ideal_tfd,
    lfm_tracks,
    parabola_tracks,
    synthetic,
)

GRID = dict(t0=-8.0, fs=16.0, n=256)


def test_lfm_values():
    s = gen_lfm(**GRID)
    assert s.samples[128] == 1 + 0j
    # t = -8: exp(j*64*pi) = 1
    assert abs(s.samples[0] - 1) < 1e-12
    np.testing.assert_allclose(np.abs(s.samples), 1.0, atol=1e-15)


def test_parabola_values():
    s = gen_parabola(**GRID)
    assert s.samples[128] == 1 + 0j
    k = int(round((2 - GRID["t0"]) * GRID["fs"]))
    assert abs(s.samples[k] - np.exp(2j * np.pi / 3)) < 1e-12
    np.testing.assert_allclose(np.abs(s.samples), 1.0, atol=1e-15)


def test_multicomponent_values():
    s = gen_multicomponent(**GRID)
    assert abs(s.samples[128] - 2) < 1e-12
    assert np.all(np.abs(s.samples) <= 4 + 1e-12)


def test_stationary_component_frequency():
    # phase -8*pi*t, so d(phase)/dt / 2pi = -4 Hz
    t = np.linspace(-1, 1, 11)
    phase = -8 * np.pi * t
    assert np.allclose(np.gradient(phase, t) / (2 * np.pi), -4.0)


@pytest.mark.parametrize("gen", [gen_lfm, gen_parabola, gen_multicomponent])
def test_generators_deterministic(gen):
    a, b = gen(**GRID), gen(**GRID)
    assert a.samples.tobytes() == b.samples.tobytes()


@pytest.mark.parametrize("kw", [dict(n=0), dict(fs=0), dict(fs=-1.0)])
def test_generator_rejects_bad_grid(kw):
    with pytest.raises(ValueError):
        gen_lfm(**{**GRID, **kw})


def test_signal_is_immutable():
    s = gen_lfm(**GRID)
    with pytest.raises(ValueError):
        s.samples[0] = 2


def test_axes_layout():
    ax = TimeFreqAxes.from_grid(-8, 16, 256)
    assert ax.freqs[0] == -8 and ax.freqs[128] == 0 and ax.freqs[-1] < 8
    assert np.all(np.diff(ax.freqs) > 0)
    assert len(ax.times) == len(ax.freqs) == 256


def test_nearest_row_ties_go_low():
    ax = TimeFreqAxes.from_grid(0, 4, 4)  # freqs -2, -1, 0, 1
    assert ax.nearest_row(-0.5) == 1
    assert ax.nearest_row(-0.49) == 2
    with pytest.raises(OutOfBandError):
        ax.nearest_row(1.6)


def test_ideal_lfm_is_diagonal():
    s = gen_lfm(**GRID)
    g = ideal_tfd(lfm_tracks(), s.axes())
    assert np.all(g.values.sum(axis=0) == 1)
    rows = g.values.argmax(axis=0)
    assert np.array_equal(rows, np.arange(256))  # f(t_k) = t_k lands on row k


def test_ideal_constant_track_is_a_row():
    ax = TimeFreqAxes.from_grid(**{"t0": -8, "fs": 16, "n": 256})
    g = ideal_tfd([IFTrack(lambda t: np.full_like(t, -4.0))], ax)
    j = ax.nearest_row(-4.0)
    assert np.all(g.values[j] == 1) and g.values.sum() == 256


def test_ideal_parabola_edge_raises_unless_clipped():
    s = gen_parabola(**GRID)
    with pytest.raises(OutOfBandError, match="t=-8"):
        ideal_tfd(parabola_tracks(), s.axes())
    g = ideal_tfd(parabola_tracks(), s.axes(), clip=True)
    assert g.values[:, 0].sum() == 0
    assert np.all(g.values[:, 1:].sum(axis=0) == 1)


@pytest.mark.parametrize("name", ["lfm", "parabola", "multi"])
def test_ideal_binary_and_bounded(name):
    _, g = synthetic(name)
    assert set(np.unique(g.values)) <= {0.0, 1.0}
    ntracks = {"lfm": 1, "parabola": 1, "multi": 4}[name]
    assert g.values.sum(axis=0).max() <= ntracks


def test_overlapping_tracks_not_summed():
    ax = TimeFreqAxes.from_grid(0, 8, 8)
    tr = IFTrack(lambda t: np.ones_like(t))
    g = ideal_tfd([tr, tr], ax)
    assert g.values.max() == 1


def test_complex_signal_validation():
    with pytest.raises(ValueError):
        ComplexSignal([], 1.0)
    with pytest.raises(ValueError):
        ComplexSignal([1.0], 0.0)

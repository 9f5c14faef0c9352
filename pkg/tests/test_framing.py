import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stfa.framing import (
    Frame,
    Window,
    extract_frame,
    frame_matrix,
    gaussian_window,
    pad_signal,
    weight_frame,
)
from stfa.signals import ComplexSignal


def test_gaussian_flat_limit():
    w = gaussian_window(3, 1e6)
    np.testing.assert_allclose(w.weights, 1.0, atol=1e-6)


def test_gaussian_m11_sigma2():
    w = gaussian_window(11, 2.0)
    assert w.weights[5] == 1.0
    assert w.weights[0] == pytest.approx(np.exp(-25 / 8), rel=1e-14)
    assert w.weights[0] == pytest.approx(0.04394, abs=1e-5)
    assert np.array_equal(w.weights, w.weights[::-1])


def test_gaussian_default_sigma():
    assert np.array_equal(gaussian_window(11).weights, gaussian_window(11, 2.0).weights)


@pytest.mark.parametrize("m", [1, 2, 10, 4.5])
def test_gaussian_rejects_bad_length(m):
    with pytest.raises(ValueError):
        gaussian_window(m, 1.0)


def test_pad_small():
    out = pad_signal(np.array([1 + 1j, 2]), 3)
    assert np.array_equal(out, [0, 1 + 1j, 2, 0])


def test_extract_frame_edges():
    padded = pad_signal(np.array([1.0, 2.0, 3.0]), 3)
    assert np.array_equal(extract_frame(padded, 0, 3).y, [0, 1, 2])
    assert extract_frame(padded, 2, 3).y[-1] == 0
    with pytest.raises(ValueError):
        extract_frame(padded, 3, 3)
    with pytest.raises(ValueError):
        extract_frame(padded, -1, 3)


def test_weight_frame():
    f = Frame(np.array([1.0, 1.0, 1.0]), 0)
    out = weight_frame(f, Window([0.5, 1.0, 0.5]))
    assert np.array_equal(out.y, [0.5, 1.0, 0.5])
    assert np.array_equal(weight_frame(f, Window([1.0, 1.0, 1.0])).y, f.y)
    with pytest.raises(ValueError):
        weight_frame(Frame(np.ones(5), 0), Window([1.0, 1.0, 1.0]))


complex_arrays = st.lists(
    st.complex_numbers(max_magnitude=1e3, allow_nan=False, allow_infinity=False), min_size=1, max_size=40
)
odd_m = st.integers(1, 7).map(lambda k: 2 * k + 1)


@given(complex_arrays, odd_m)
def test_pad_properties(xs, m):
    x = np.array(xs, dtype=complex)
    p = pad_signal(x, m)
    h = (m - 1) // 2
    assert len(p) == len(x) + m - 1
    assert np.array_equal(p[h : h + len(x)], x)
    assert np.sum(np.abs(p) ** 2) == pytest.approx(np.sum(np.abs(x) ** 2))


@given(complex_arrays, odd_m)
def test_frames_centered_and_counted(xs, m):
    x = np.array(xs, dtype=complex)
    p = pad_signal(x, m)
    h = (m - 1) // 2
    frames = [extract_frame(p, i, m) for i in range(len(x))]
    assert len(frames) == len(x)
    assert all(f.y[h] == x[i] for i, f in enumerate(frames))


@settings(max_examples=50)
@given(complex_arrays, complex_arrays, odd_m)
def test_framing_is_linear(xs, ys, m):
    k = min(len(xs), len(ys))
    a, b = np.array(xs[:k]), np.array(ys[:k])
    w = gaussian_window(m, 1.3)
    lhs = frame_matrix(2 * a - 3j * b, w)
    rhs = 2 * frame_matrix(a, w) - 3j * frame_matrix(b, w)
    np.testing.assert_allclose(lhs, rhs, atol=1e-9)


@given(complex_arrays, odd_m)
def test_weighting_preserves_zeros_and_shrinks(xs, m):
    x = np.array(xs)
    w = gaussian_window(m)
    p = pad_signal(x, m)
    for i in range(len(x)):
        raw = extract_frame(p, i, m)
        wy = weight_frame(raw, w).y
        assert np.array_equal(wy == 0, raw.y == 0)
        assert np.all(np.abs(wy) <= np.abs(raw.y))


def test_frame_matrix_matches_single_frames():
    rng = np.random.default_rng(0)
    s = ComplexSignal(rng.normal(size=20) + 1j * rng.normal(size=20), 1.0)
    w = gaussian_window(7)
    fm = frame_matrix(s, w)
    p = pad_signal(s, 7)
    for i in range(20):
        assert np.array_equal(fm[i], weight_frame(extract_frame(p, i, 7), w).y)

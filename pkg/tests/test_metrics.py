import itertools
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from stfa.errors import UndefinedMetricError
from stfa.metrics import MetricReport, cm, psnr, rel_err, renyi, report


def one_hot(n, i=0, j=0):
    g = np.zeros((n, n))
    g[i, j] = 1
    return g


def test_cm_cases():
    assert cm(one_hot(8, 3, 5)) == 1.0
    assert cm(np.full((256, 256), 0.37)) == pytest.approx(1 / 256**2, rel=1e-12)
    assert 1 / 256**2 == pytest.approx(1.526e-5, rel=1e-3)


def test_renyi_cases():
    assert renyi(one_hot(8, 2, 2)) == 0.0
    assert abs(renyi(np.ones((256, 256))) - 16.0) <= 1e-12
    with pytest.raises(ValueError):
        renyi(np.ones((2, 2)), alpha=1)


@pytest.mark.parametrize("f", [cm, renyi])
def test_all_zero_undefined(f):
    with pytest.raises(UndefinedMetricError):
        f(np.zeros((4, 4)))


grids = arrays(np.float64, (5, 5), elements=st.floats(0, 1e3)).filter(lambda a: a.max() > 1e-3)


@given(grids, st.floats(1e-3, 1e3))
def test_scale_invariance(g, c):
    assert cm(c * g) == pytest.approx(cm(g), rel=1e-9)
    assert renyi(c * g) == pytest.approx(renyi(g), rel=1e-9, abs=1e-9)


def test_renyi_max_entropy_bruteforce():
    # every 2x2 grid with cell values in 0..4 against the uniform one
    top = renyi(np.ones((2, 2)))
    for cells in itertools.product(range(5), repeat=4):
        if any(cells):
            assert renyi(np.array(cells, float).reshape(2, 2)) <= top + 1e-12


def test_psnr_cases():
    y = one_hot(4, 1, 2)
    assert psnr(y, y) == math.inf
    assert psnr(one_hot(4, 1, 2) * 7.0, y) == math.inf
    assert psnr(np.ones((4, 4)), y) == pytest.approx(10 * math.log10(16 / 15), abs=1e-12)
    assert psnr(np.ones((4, 4)), y) == pytest.approx(0.28, abs=0.005)


def test_psnr_errors():
    with pytest.raises(ValueError):
        psnr(np.ones((3, 3)), np.ones((4, 4)))
    with pytest.raises(UndefinedMetricError):
        psnr(np.ones((3, 3)), np.zeros((3, 3)))


def test_rel_err_cases():
    x = np.array([1.5, -2.0, 3.0])
    assert rel_err(x, x) == 0
    assert rel_err([2, 0], [0, 0]) == 1
    assert rel_err([3, 4], [3, 0]) == pytest.approx(0.8, abs=1e-15)
    with pytest.raises(UndefinedMetricError):
        rel_err([0, 0], [1, 1])
    with pytest.raises(ValueError):
        rel_err([1, 2], [1, 2, 3])


def test_report_identical():
    g = one_hot(6, 2, 3) + 0.1
    r = report(g, g, elapsed_s=1.5)
    assert isinstance(r, MetricReport)
    assert r.psnr_db == math.inf and r.re == 0 and r.elapsed_s == 1.5
    assert math.isfinite(r.renyi_bits) and r.cm > 0

import numpy as np
import pytest


def dense_theta(n, m, gain=1.0):
    """Theta = gain * S F^-1 from first principles: F^-1[a, b] = exp(2j*pi*a*b/n) / n."""
    a = np.arange(m)[:, None]
    b = np.arange(n)[None, :]
    return gain * np.exp(2j * np.pi * a * b / n) / n


def crandn(rng, *shape):
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)

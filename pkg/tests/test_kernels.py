import os
import subprocess
import sys

import numpy as np
import pytest

from wpkit import _kernels

backends = [_kernels.numpy_impl]
if _kernels.numba_impl is not None:
    backends.append(_kernels.numba_impl)


@pytest.fixture
def data(rng):
    coeffs = rng.normal(size=9) + 1j * rng.normal(size=9)
    y = np.linspace(-3, 3, 257)
    return coeffs, y


@pytest.mark.parametrize("impl", backends, ids=lambda b: b.name)
def test_horner_matches_polyval(impl, data):
    coeffs, y = data
    np.testing.assert_allclose(impl.horner(coeffs, y), np.polynomial.polynomial.polyval(y, coeffs),
                               rtol=1e-13, atol=1e-12)


@pytest.mark.parametrize("impl", backends, ids=lambda b: b.name)
def test_packet_values(impl, data):
    coeffs, y = data
    got = impl.packet_values(coeffs, y, 0.3 - 0.1j, 0.5 + 0.2j, 1.7)
    ref = (0.3 - 0.1j) * np.polynomial.polynomial.polyval(y, coeffs) * np.exp(-(0.5 + 0.2j) * y ** 2 + 1.7j * y)
    np.testing.assert_allclose(got, ref, rtol=1e-13, atol=1e-14)


@pytest.mark.parametrize("impl", backends, ids=lambda b: b.name)
def test_trapezoid_inner(impl):
    y = np.linspace(-10, 10, 2001)
    w = np.exp(-y ** 2)
    f = (1 + 1j * y).astype(complex)
    g = (y * y).astype(complex)
    # int exp(-y^2) (1 - i y) y^2 dy = sqrt(pi)/2
    got = impl.trapezoid_inner(w, f, g, y[1] - y[0])
    assert got == pytest.approx(np.sqrt(np.pi) / 2, abs=1e-13)


@pytest.mark.parametrize("impl", backends, ids=lambda b: b.name)
def test_flow_scan(impl):
    A, B = 0.6 + 0.2j, (1 + 1.5j) / (0.6 - 0.2j)
    ts = np.linspace(0, np.pi, 64)
    ma, mb, im = impl.flow_scan(A, B, ts)
    At = A * np.cos(ts) + 1j * B * np.sin(ts)
    Bt = 1j * A * np.sin(ts) + B * np.cos(ts)
    np.testing.assert_allclose(ma, np.abs(At), rtol=1e-14)
    np.testing.assert_allclose(mb, np.abs(Bt), rtol=1e-14)
    np.testing.assert_allclose(im, (Bt * np.conj(At)).imag, atol=1e-14)


@pytest.mark.skipif(_kernels.numba_impl is None, reason="numba not installed")
def test_backends_agree(data):
    coeffs, y = data
    a = _kernels.numpy_impl.packet_values(coeffs, y, 1.0, 0.4 + 0.1j, -0.3)
    b = _kernels.numba_impl.packet_values(coeffs, y, 1.0 + 0j, 0.4 + 0.1j, -0.3)
    np.testing.assert_allclose(a, b, rtol=1e-14, atol=1e-15)


@pytest.mark.parametrize("flag,expected", [("1", "numpy"), ("0", "numba")])
def test_env_flag_selects_backend(flag, expected):
    if expected == "numba" and not _kernels.NUMBA_AVAILABLE:
        pytest.skip("numba not installed")
    env = dict(os.environ, WPKIT_DISABLE_NUMBA=flag)
    out = subprocess.run([sys.executable, "-c", "import wpkit; print(wpkit.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == expected


def test_numpy_fallback_runs_library():
    env = dict(os.environ, WPKIT_DISABLE_NUMBA="1")
    code = ("from wpkit import *; p = validate(1, 1+1j); wp = packet(p, 3); "
            "print(quadrature_expectation(wp, X)[1])")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert float(out.stdout) == pytest.approx(3.5, rel=1e-10)


def test_benchmark_script_runs():
    script = os.path.join(os.path.dirname(__file__), "..", "benchmarks", "bench_kernels.py")
    out = subprocess.run([sys.executable, script, "--grid", "1001", "--repeat", "1"],
                         capture_output=True, text=True, check=True)
    assert "packet_values" in out.stdout or "numba not installed" in out.stdout

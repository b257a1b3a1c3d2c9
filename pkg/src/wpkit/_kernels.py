"""Grid kernels: numba-compiled versions with a pure-numpy fallback.

The numba path is used when numba imports and ``WPKIT_DISABLE_NUMBA`` is
unset (or "0"). Both implementations stay importable so the tests and the
benchmark can compare them directly::

    from wpkit import _kernels
    _kernels.numpy_impl.horner(coeffs, y)
    _kernels.numba_impl.horner(coeffs, y)   # None members if numba is missing
"""

import os
from types import SimpleNamespace

import numpy as np

try:
    from numba import njit
    NUMBA_AVAILABLE = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    NUMBA_AVAILABLE = False

USE_NUMBA = NUMBA_AVAILABLE and os.environ.get("WPKIT_DISABLE_NUMBA", "0") in ("", "0")


# ---------------------------------------------------------------------------
# numpy implementations
# ---------------------------------------------------------------------------

def _horner_np(coeffs, y):
    out = np.zeros(y.shape, dtype=np.complex128)
    for c in coeffs[::-1]:
        out = out * y + c
    return out


def _packet_values_np(coeffs, y, prefactor, quad, lin):
    return prefactor * _horner_np(coeffs, y) * np.exp(-quad * y * y + 1j * lin * y)


def _trapezoid_inner_np(w, f, g, dx):
    integrand = w * np.conj(f) * g
    return dx * (integrand.sum() - 0.5 * (integrand[0] + integrand[-1]))


def _flow_scan_np(A, B, ts):
    c = np.cos(ts)
    s = np.sin(ts)
    At = A * c + 1j * B * s
    Bt = 1j * A * s + B * c
    return np.abs(At), np.abs(Bt), (Bt * np.conj(At)).imag


numpy_impl = SimpleNamespace(
    name="numpy",
    horner=_horner_np,
    packet_values=_packet_values_np,
    trapezoid_inner=_trapezoid_inner_np,
    flow_scan=_flow_scan_np,
)


# ---------------------------------------------------------------------------
# numba implementations
# ---------------------------------------------------------------------------

if NUMBA_AVAILABLE:

    @njit(cache=True)
    def _horner_nb(coeffs, y):
        n = y.shape[0]
        m = coeffs.shape[0]
        out = np.empty(n, dtype=np.complex128)
        for i in range(n):
            yi = y[i]
            acc = 0j
            for j in range(m - 1, -1, -1):
                acc = acc * yi + coeffs[j]
            out[i] = acc
        return out

    @njit(cache=True)
    def _packet_values_nb(coeffs, y, prefactor, quad, lin):
        n = y.shape[0]
        m = coeffs.shape[0]
        out = np.empty(n, dtype=np.complex128)
        for i in range(n):
            yi = y[i]
            acc = 0j
            for j in range(m - 1, -1, -1):
                acc = acc * yi + coeffs[j]
            out[i] = prefactor * acc * np.exp(-quad * yi * yi + 1j * lin * yi)
        return out

    @njit(cache=True)
    def _trapezoid_inner_nb(w, f, g, dx):
        n = w.shape[0]
        acc = 0j
        for i in range(1, n - 1):
            acc += w[i] * np.conj(f[i]) * g[i]
        acc += 0.5 * (w[0] * np.conj(f[0]) * g[0] + w[n - 1] * np.conj(f[n - 1]) * g[n - 1])
        return dx * acc

    @njit(cache=True)
    def _flow_scan_nb(A, B, ts):
        n = ts.shape[0]
        mod_a = np.empty(n)
        mod_b = np.empty(n)
        im_ba = np.empty(n)
        for i in range(n):
            c = np.cos(ts[i])
            s = np.sin(ts[i])
            At = A * c + 1j * B * s
            Bt = 1j * A * s + B * c
            mod_a[i] = abs(At)
            mod_b[i] = abs(Bt)
            im_ba[i] = (Bt * np.conj(At)).imag
        return mod_a, mod_b, im_ba

    numba_impl = SimpleNamespace(
        name="numba",
        horner=_horner_nb,
        packet_values=_packet_values_nb,
        trapezoid_inner=_trapezoid_inner_nb,
        flow_scan=_flow_scan_nb,
    )
else:  # pragma: no cover
    numba_impl = None


_active = numba_impl if USE_NUMBA else numpy_impl
BACKEND = _active.name


def horner(coeffs, y):
    """Evaluate sum_m coeffs[m] * y**m for real y (complex coefficients)."""
    return _active.horner(np.ascontiguousarray(coeffs, dtype=np.complex128),
                          np.ascontiguousarray(y, dtype=np.float64))


def packet_values(coeffs, y, prefactor, quad, lin):
    """prefactor * q(y) * exp(-quad*y**2 + i*lin*y) on a real grid."""
    return _active.packet_values(np.ascontiguousarray(coeffs, dtype=np.complex128),
                                 np.ascontiguousarray(y, dtype=np.float64),
                                 complex(prefactor), complex(quad), float(lin))


def trapezoid_inner(w, f, g, dx):
    """Composite trapezoid rule for the integral of w * conj(f) * g."""
    return complex(_active.trapezoid_inner(np.ascontiguousarray(w, dtype=np.float64),
                                           np.ascontiguousarray(f, dtype=np.complex128),
                                           np.ascontiguousarray(g, dtype=np.complex128),
                                           float(dx)))


def flow_scan(A, B, ts):
    """|A(t)|, |B(t)| and Im(B(t) conj(A(t))) along the rotation flow."""
    return _active.flow_scan(complex(A), complex(B), np.ascontiguousarray(ts, dtype=np.float64))

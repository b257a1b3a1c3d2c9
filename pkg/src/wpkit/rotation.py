"""Phase-space rotation of (A, B) and the quadratic form behind the optimal angle.

The frequency-1 oscillator moves the width parameters along

    A(t) = A cos t + i B sin t,    B(t) = i A sin t + B cos t,

which keeps Re(conj(A) B) = 1 and |A|^2 + |B|^2 fixed. Since
|A(t)|^2 |B(t)|^2 = 1 + Im(B(t) conj(A(t)))^2, the product |A(t)||B(t)|
bottoms out at 1 exactly where Im(B(t) conj(A(t))) = 0, which happens at
the optimal angle and at that angle plus pi/2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .params import GaussianParams, validate

GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class QuadForm2:
    """Symmetric M for the form 1/2 (x p) M (x p)^T."""

    m11: float
    m12: float
    m22: float

    def as_array(self) -> np.ndarray:
        return np.array([[self.m11, self.m12], [self.m12, self.m22]])

    def rotated(self, theta: float) -> np.ndarray:
        """R(theta)^T M R(theta) with R the counterclockwise rotation."""
        c, s = math.cos(theta), math.sin(theta)
        R = np.array([[c, -s], [s, c]])
        return R.T @ self.as_array() @ R

    def offdiag_residual(self, theta: float) -> float:
        c, s = math.cos(theta), math.sin(theta)
        return abs((self.m22 - self.m11) * c * s + self.m12 * (c * c - s * s))


def optimal_theta(params: GaussianParams) -> float:
    """Angle in (-pi/2, pi/2] that minimizes Delta alpha * Delta beta.

    Computed as atan2 rather than arctan of the ratio so the |A| = |B| case
    is defined; the fully circular case (both arguments zero) gives 0.
    """
    A, B = params.A, params.B
    theta = 0.5 * math.atan2(2.0 * params.im_ba, abs(B) ** 2 - abs(A) ** 2)
    # atan2(-0.0, x < 0) lands on the excluded endpoint -pi/2
    return theta + math.pi if theta <= -0.5 * math.pi else theta


def flow(A: complex, B: complex, t: float) -> tuple[complex, complex]:
    c, s = math.cos(t), math.sin(t)
    return A * c + 1j * B * s, 1j * A * s + B * c


def rotate_params(params: GaussianParams, t: float) -> GaussianParams:
    At, Bt = flow(params.A, params.B, t)
    return validate(At, Bt, params.hbar, params.a, params.eta)


def flow_quantities(params: GaussianParams, t: float) -> tuple[float, float, float]:
    """(f, Im(B conj(A)), |A|^2 - |B|^2) at time t, f = |A|^2 |B|^2."""
    At, Bt = flow(params.A, params.B, t)
    ma2, mb2 = abs(At) ** 2, abs(Bt) ** 2
    return ma2 * mb2, (Bt * At.conjugate()).imag, ma2 - mb2


def flow_invariant_scale(params: GaussianParams) -> float:
    """(|A|^2 + |B|^2) / 2, conserved by the flow and always >= 1."""
    return 0.5 * (abs(params.A) ** 2 + abs(params.B) ** 2)


def flow_derivative_residuals(params: GaussianParams, t: float, h: float = 1e-5,
                      normalized: bool = False) -> tuple[float, float, float]:
    """Central-difference derivatives along the flow minus their closed forms.

    Checks d/dt f = 2 (|A|^2 - |B|^2) Im(B conj A), d/dt Im(B conj A) =
    |A|^2 - |B|^2 and d/dt (|A|^2 - |B|^2) = -4 Im(B conj A). With
    ``normalized`` the residuals are divided by powers of
    :func:`flow_invariant_scale` matching each quantity's degree in
    |A|^2, |B|^2 (2, 1, 1).
    """
    fp = np.array(flow_quantities(params, t + h))
    fm = np.array(flow_quantities(params, t - h))
    d = (fp - fm) / (2.0 * h)
    _, im, diff = flow_quantities(params, t)
    r = np.abs(d - np.array([2.0 * diff * im, diff, -4.0 * im]))
    if normalized:
        s = flow_invariant_scale(params)
        r = r / np.array([s * s, s, s])
    return float(r[0]), float(r[1]), float(r[2])


def f_second_derivative(params: GaussianParams, t: float, h: float = 1e-4) -> float:
    f = lambda u: flow_quantities(params, u)[0]  # noqa: E731
    return (f(t + h) - 2.0 * f(t) + f(t - h)) / (h * h)


def equal_moduli_times(params: GaussianParams) -> tuple[float, float]:
    """The two times in [0, pi) where |A(t)| = |B(t)|.

    Uses |A(t)|^2 - |B|^2(t) = D cos 2t - 2 I sin 2t with D, I at t = 0.
    """
    _, im, diff = flow_quantities(params, 0.0)
    t0 = 0.5 * math.atan2(diff, 2.0 * im)
    return t0 % math.pi, (t0 + 0.5 * math.pi) % math.pi


# -- quadratic forms --------------------------------------------------------

def hamiltonian_matrix(params: GaussianParams) -> QuadForm2:
    return QuadForm2(abs(params.B) ** 2, params.im_ba, abs(params.A) ** 2)


def h_eigenvalues(params: GaussianParams) -> tuple[float, float]:
    """Eigenvalues (lo, hi) of M/2 in closed form; their product is 1/4."""
    ma2, mb2, im = abs(params.A) ** 2, abs(params.B) ** 2, params.im_ba
    trace = ma2 + mb2
    root = math.sqrt((ma2 - mb2) ** 2 + 4.0 * im * im)
    return 0.25 * (trace - root), 0.25 * (trace + root)


def diagonalizing_angle(M: QuadForm2) -> float:
    """Jacobi angle theta with R(theta)^T M R(theta) diagonal, in (-pi/2, pi/2]."""
    theta = 0.5 * math.atan2(2.0 * M.m12, M.m11 - M.m22)
    return theta + math.pi if theta <= -0.5 * math.pi else theta


def h1_matrix(params: GaussianParams) -> np.ndarray:
    """Matrix N of H1 = hbar A A*, written as 1/2 (x p) N (x p)^T."""
    A, B = params.A, params.B
    return np.array([[abs(B) ** 2, -1j * B * A.conjugate()],
                     [1j * A * B.conjugate(), abs(A) ** 2]])


def h2_matrix(params: GaussianParams) -> np.ndarray:
    """Matrix N of H2 = hbar A* A."""
    A, B = params.A, params.B
    return np.array([[abs(B) ** 2, 1j * A * B.conjugate()],
                     [-1j * B * A.conjugate(), abs(A) ** 2]])


def h1_h2_classical_form(params: GaussianParams, which: str = "h1") -> QuadForm2:
    """Classical quadratic form of H1 (or H2): the symmetric part of its matrix."""
    N = {"h1": h1_matrix, "h2": h2_matrix}[which](params)
    S = 0.5 * (N + N.T)
    if np.max(np.abs(S.imag)) > 1e-12 * max(1.0, np.max(np.abs(S.real))):
        raise ArithmeticError("symmetrized form is not real")
    S = S.real
    return QuadForm2(S[0, 0], S[0, 1], S[1, 1])


# -- minimization oracle ---------------------------------------------------

def _golden_section(g, lo: float, hi: float, xtol: float, maxiter: int = 200) -> float:
    c = hi - GOLDEN * (hi - lo)
    d = lo + GOLDEN * (hi - lo)
    gc, gd = g(c), g(d)
    for _ in range(maxiter):
        if hi - lo <= xtol:
            break
        if gc <= gd:
            hi, d, gd = d, c, gc
            c = hi - GOLDEN * (hi - lo)
            gc = g(c)
        else:
            lo, c, gc = c, d, gd
            d = lo + GOLDEN * (hi - lo)
            gd = g(d)
    return c if gc <= gd else d


def scan_minimize(params: GaussianParams, n: int = 4096, xtol: float = 1e-13) -> tuple[float, float]:
    """Brute-force scan of |A(t)||B(t)| over [0, pi), then golden-section refinement.

    The refinement minimizes g(t) = Im(B(t) conj A(t))^2, which has the same
    minimizers as the product but stays resolvable in floating point right
    down to the bottom, where the product itself is flat to 1 + O(dt^2).

    Returns (t_star in [0, pi), |A(t_star)| |B(t_star)|).
    """
    if n < 1000:
        raise ValueError("scan needs at least 1000 grid points")
    ts = np.linspace(0.0, math.pi, n, endpoint=False)
    mod_a, mod_b, im = _kernels.flow_scan(params.A, params.B, ts)
    i = int(np.argmin(mod_a * mod_b))
    dt = ts[1] - ts[0]

    def g(t):
        return flow_quantities(params, t)[1] ** 2

    t_star = _golden_section(g, ts[i] - dt, ts[i] + dt, xtol) % math.pi
    At, Bt = flow(params.A, params.B, t_star)
    return float(t_star), abs(At) * abs(Bt)


def angle_distance(t1: float, t2: float, period: float = 0.5 * math.pi) -> float:
    """Distance between two angles modulo ``period``."""
    d = (t1 - t2) % period
    return min(d, period - d)


# -- phase-space ellipse ---------------------------------------------------

def phase_space_ellipse(params: GaussianParams, n_points: int = 64) -> dict:
    """Tilted ellipse {1/2 z^T M z = hbar} centered at (a, eta).

    Semiaxes are listed along the rotated x and p axes, so the untilted
    oscillator gives (sqrt(2 hbar/omega), sqrt(2 hbar omega)); their product
    is 2 hbar, i.e. area 2 pi hbar.
    """
    theta = optimal_theta(params)
    D = hamiltonian_matrix(params).rotated(theta)
    d1, d2 = 0.5 * D[0, 0], 0.5 * D[1, 1]
    hbar = params.hbar
    s1, s2 = math.sqrt(hbar / d1), math.sqrt(hbar / d2)
    phi = np.linspace(0.0, 2.0 * math.pi, n_points, endpoint=False)
    u, v = s1 * np.cos(phi), s2 * np.sin(phi)
    c, s = math.cos(theta), math.sin(theta)
    xs = params.a + c * u - s * v
    ps = params.eta + s * u + c * v
    return {
        "center": [params.a, params.eta],
        "tilt": theta,
        "semiaxes": [s1, s2],
        "omega_eff": math.sqrt(d1 / d2),
        "semiaxis_product": s1 * s2,
        "eigenvalues": list(h_eigenvalues(params)),
        "boundary": [[float(x), float(p)] for x, p in zip(xs, ps)],
    }

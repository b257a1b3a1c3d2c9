"""Semiclassical wave packets phi_k as (polynomial in y = x - a) * phi_0.

Raising and lowering act on the polynomial coefficients exactly. With
p = -i hbar d/dx and the normalization conj(A) B + conj(B) A = 2,

    A* (q phi_0) = (2 hbar)^(-1/2) [(2/A) y q - hbar conj(A) q'] phi_0
    A  (q phi_0) = (hbar/2)^(1/2) A q' phi_0

so phi_k never has to be differentiated on a grid.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .params import GaussianParams

PI_QUARTER = np.pi ** -0.25


@dataclass(frozen=True, eq=False)
class ComplexPoly:
    """Dense complex polynomial; ``coeffs[m]`` multiplies y**m."""

    coeffs: np.ndarray = field(default_factory=lambda: np.ones(1, dtype=np.complex128))

    def __post_init__(self):
        c = np.atleast_1d(np.asarray(self.coeffs, dtype=np.complex128))
        nz = np.flatnonzero(c)
        c = c[: nz[-1] + 1] if nz.size else c[:1] * 0
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        if self.is_zero():
            return -1
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] == 0

    def derivative(self) -> "ComplexPoly":
        if len(self.coeffs) == 1:
            return ComplexPoly(np.zeros(1))
        return ComplexPoly(self.coeffs[1:] * np.arange(1, len(self.coeffs)))

    def times_y(self) -> "ComplexPoly":
        return ComplexPoly(np.concatenate(([0j], self.coeffs)))

    def __add__(self, other: "ComplexPoly") -> "ComplexPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        out = np.zeros(n, dtype=np.complex128)
        out[: len(self.coeffs)] += self.coeffs
        out[: len(other.coeffs)] += other.coeffs
        return ComplexPoly(out)

    def __sub__(self, other: "ComplexPoly") -> "ComplexPoly":
        return self + other.scale(-1.0)

    def scale(self, c: complex) -> "ComplexPoly":
        return ComplexPoly(self.coeffs * c)

    def __call__(self, y):
        return _kernels.horner(self.coeffs, np.atleast_1d(np.asarray(y, dtype=float)))

    def __repr__(self):
        return f"ComplexPoly({self.coeffs!r})"


@dataclass(frozen=True, eq=False)
class PolyState:
    """A general state q(x - a) * phi_0(x); not necessarily normalized."""

    params: GaussianParams
    poly: ComplexPoly


@dataclass(frozen=True, eq=False)
class WavePacket(PolyState):
    """The basis state phi_k, with ``poly`` the degree-k polynomial q_k."""

    k: int = 0

    def __repr__(self):
        return f"WavePacket(k={self.k}, params={self.params})"


class _Zero:
    """Result of lowering phi_0."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Zero"

    def __bool__(self):
        return False


ZERO = _Zero()


def apply_raising(poly: ComplexPoly, params: GaussianParams) -> ComplexPoly:
    """Polynomial of A*(q phi_0), without the 1/sqrt(k+1) factor."""
    A, hbar = params.A, params.hbar
    out = poly.times_y().scale(2.0 / A) - poly.derivative().scale(hbar * A.conjugate())
    return out.scale(1.0 / np.sqrt(2.0 * hbar))


def apply_lowering(poly: ComplexPoly, params: GaussianParams) -> ComplexPoly:
    """Polynomial of A(q phi_0), without the 1/sqrt(k) factor."""
    return poly.derivative().scale(np.sqrt(params.hbar / 2.0) * params.A)


def apply_centered_momentum(poly: ComplexPoly, params: GaussianParams) -> ComplexPoly:
    """Polynomial of (p - eta)(q phi_0): -i hbar q' + i (B/A) y q."""
    A, B, hbar = params.A, params.B, params.hbar
    return poly.derivative().scale(-1j * hbar) + poly.times_y().scale(1j * B / A)


def ground_state(params: GaussianParams) -> WavePacket:
    return WavePacket(params, ComplexPoly(np.ones(1)), 0)


def raise_(wp: WavePacket) -> WavePacket:
    """phi_k -> phi_{k+1}."""
    k = wp.k
    poly = apply_raising(wp.poly, wp.params).scale(1.0 / np.sqrt(k + 1))
    return WavePacket(wp.params, poly, k + 1)


def lower(wp: WavePacket):
    """phi_k -> phi_{k-1}; returns :data:`ZERO` for phi_0."""
    if wp.k == 0:
        return ZERO
    poly = apply_lowering(wp.poly, wp.params).scale(1.0 / np.sqrt(wp.k))
    return WavePacket(wp.params, poly, wp.k - 1)


def packet(params: GaussianParams, k: int) -> WavePacket:
    """phi_k built by k applications of the raising recurrence."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    wp = ground_state(params)
    for _ in range(k):
        wp = raise_(wp)
    return wp


def basis(params: GaussianParams, n: int) -> list[WavePacket]:
    """[phi_0, ..., phi_n]."""
    out = [ground_state(params)]
    for _ in range(n):
        out.append(raise_(out[-1]))
    return out


def superpose(packets, amplitudes) -> PolyState:
    """sum_j amplitudes[j] * packets[j]; all packets must share parameters."""
    packets = list(packets)
    params = packets[0].params
    if any(p.params != params for p in packets):
        raise ValueError("superposed packets must share (A, B, hbar, a, eta)")
    poly = ComplexPoly(np.zeros(1))
    for wp, c in zip(packets, amplitudes):
        poly = poly + wp.poly.scale(c)
    return PolyState(params, poly)


def ground_prefactor(params: GaussianParams) -> complex:
    """pi^(-1/4) hbar^(-1/4) A^(-1/2), principal branch of the square root."""
    return PI_QUARTER * params.hbar ** -0.25 / cmath.sqrt(params.A)


def evaluate(state: PolyState, xs) -> np.ndarray:
    """Values of the state at the points ``xs``."""
    p = state.params
    y = np.atleast_1d(np.asarray(xs, dtype=float)) - p.a
    quad = p.B / (2.0 * p.A * p.hbar)
    return _kernels.packet_values(state.poly.coeffs, y, ground_prefactor(p), quad, p.eta / p.hbar)

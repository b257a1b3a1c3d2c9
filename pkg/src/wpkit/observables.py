"""Uncertainties of linear observables c_x (x - a) + c_p (p - eta).

Two engines live here. The ladder engine writes the observable as
sqrt(hbar/2) [r A* + conj(r) A] and reads variances off in closed form;
it is the production path. The quadrature engine integrates on a grid in
position space and serves as the independent check, and it is the only
one that handles superpositions.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from . import _kernels
from .params import GaussianParams
from .wavepacket import (ComplexPoly, PolyState, WavePacket, apply_centered_momentum,
                         evaluate, packet)


class GridTooCoarse(ValueError):
    pass


@dataclass(frozen=True)
class LinearObservable:
    cx: float
    cp: float
    label: str = ""

    def __post_init__(self):
        if self.cx == 0 and self.cp == 0:
            raise ValueError("observable coefficients (cx, cp) must not both vanish")


X = LinearObservable(1.0, 0.0, "x")
P = LinearObservable(0.0, 1.0, "p")


def alpha(theta: float) -> LinearObservable:
    return LinearObservable(math.cos(theta), math.sin(theta), "alpha")


def beta(theta: float) -> LinearObservable:
    return LinearObservable(-math.sin(theta), math.cos(theta), "beta")


@dataclass(frozen=True)
class UncertaintyReport:
    delta_x: float
    delta_p: float
    delta_alpha: float
    delta_beta: float
    product_xp: float
    product_alphabeta: float
    theta: float
    hbar: float
    k: int

    @property
    def minimal_product(self) -> float:
        return 0.5 * self.hbar * (2 * self.k + 1)

    @property
    def residual_min(self) -> float:
        return abs(self.product_alphabeta - self.minimal_product)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["residual_min"] = self.residual_min
        return d


# -- ladder engine ---------------------------------------------------------

def ladder_coefficients(obs: LinearObservable, params: GaussianParams) -> tuple[complex, complex]:
    """(r, l) with obs = sqrt(hbar/2) [r A* + l A]; l == conj(r)."""
    A, B = params.A, params.B
    r = obs.cx * A + 1j * obs.cp * B
    l = obs.cx * A.conjugate() - 1j * obs.cp * B.conjugate()
    return r, l


def mean(obs: LinearObservable, wp: WavePacket) -> float:
    """Expectation of the centered observable in phi_k.

    A* and A each shift k by one, so the diagonal element vanishes.
    """
    return 0.0


def variance(obs: LinearObservable, wp: WavePacket) -> float:
    r, _ = ladder_coefficients(obs, wp.params)
    return 0.5 * wp.params.hbar * abs(r) ** 2 * (2 * wp.k + 1)


def uncertainty(obs: LinearObservable, wp: WavePacket) -> float:
    return math.sqrt(variance(obs, wp))


def commutator_constant(o1: LinearObservable, o2: LinearObservable) -> float:
    """c with [o1, o2] = i c hbar."""
    return o1.cx * o2.cp - o1.cp * o2.cx


def uncertainty_report(params: GaussianParams, k: int, theta: float) -> UncertaintyReport:
    wp = packet(params, k)
    dx, dp = uncertainty(X, wp), uncertainty(P, wp)
    da, db = uncertainty(alpha(theta), wp), uncertainty(beta(theta), wp)
    return UncertaintyReport(
        delta_x=dx, delta_p=dp, delta_alpha=da, delta_beta=db,
        product_xp=dx * dp, product_alphabeta=da * db,
        theta=float(theta), hbar=params.hbar, k=k,
    )


# -- quadrature engine -----------------------------------------------------

@dataclass(frozen=True)
class QuadratureSpec:
    half_width: float
    points: int = 4001

    @property
    def spacing(self) -> float:
        return 2.0 * self.half_width / (self.points - 1)


def position_spread(state: PolyState) -> float:
    """sqrt(hbar/2) |A| sqrt(2d + 1) with d the polynomial degree.

    Exact Delta x for phi_d; an upper scale for states of degree d.
    """
    p = state.params
    d = max(state.poly.degree, 0)
    return math.sqrt(p.hbar / 2.0) * abs(p.A) * math.sqrt(2 * d + 1)


def default_grid(state: PolyState, points: int = 4001) -> QuadratureSpec:
    return QuadratureSpec(10.0 * max(position_spread(state), math.sqrt(state.params.hbar)), points)


def _check_grid(state: PolyState, grid: QuadratureSpec):
    dx = position_spread(state)
    if grid.points < 3 or grid.points % 2 == 0:
        raise GridTooCoarse(f"points must be odd and >= 3, got {grid.points}")
    if grid.half_width < 8.0 * dx:
        raise GridTooCoarse(f"half_width {grid.half_width:g} < 8 * Delta x = {8 * dx:g}")
    if grid.spacing > dx / 20.0:
        raise GridTooCoarse(f"spacing {grid.spacing:g} > Delta x / 20 = {dx / 20:g}")


def _grid(state: PolyState, grid: QuadratureSpec | None):
    grid = grid or default_grid(state)
    _check_grid(state, grid)
    y = np.linspace(-grid.half_width, grid.half_width, grid.points)
    phi0 = evaluate(PolyState(state.params, ComplexPoly(np.ones(1))), y + state.params.a)
    return y, np.abs(phi0) ** 2, grid.spacing


def apply_observable(obs: LinearObservable, state: PolyState) -> ComplexPoly:
    """Polynomial s with obs(q phi_0) = s phi_0, in position representation."""
    xpart = state.poly.times_y().scale(obs.cx)
    ppart = apply_centered_momentum(state.poly, state.params).scale(obs.cp)
    return xpart + ppart


def quadrature_inner(f: PolyState, g: PolyState, grid: QuadratureSpec | None = None) -> complex:
    """<f, g> by the trapezoid rule; f and g must share parameters."""
    if f.params != g.params:
        raise ValueError("inner products need identical parameter sets")
    state = f if f.poly.degree >= g.poly.degree else g
    y, w, h = _grid(state, grid)
    return _kernels.trapezoid_inner(w, f.poly(y), g.poly(y), h)


def quadrature_expectation(state: PolyState, obs: LinearObservable,
                           grid: QuadratureSpec | None = None) -> tuple[float, float]:
    """(mean, variance) of the centered observable, integrated on a grid.

    Variance is ||O psi||^2 - <psi, O psi>^2, which needs only the first
    derivative of the polynomial part.
    """
    y, w, h = _grid(state, grid)
    q = state.poly(y)
    s = apply_observable(obs, state)(y)
    m = _kernels.trapezoid_inner(w, q, s, h).real
    second = _kernels.trapezoid_inner(w, s, s, h).real
    return m, second - m * m


def quadrature_uncertainty(state: PolyState, obs: LinearObservable,
                           grid: QuadratureSpec | None = None) -> float:
    return math.sqrt(max(quadrature_expectation(state, obs, grid)[1], 0.0))

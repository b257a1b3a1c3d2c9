"""Randomized invariant suites run by ``wpkit verify``.

Each suite returns a :class:`SuiteResult` holding the worst residual seen
and the tolerance it is held to.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import observables as obs
from . import rotation as rot
from .params import random_params, validate
from .wavepacket import basis, lower, packet, raise_, superpose


@dataclass
class SuiteResult:
    name: str
    max_residual: float
    tol: float

    @property
    def passed(self) -> bool:
        return bool(self.max_residual <= self.tol)


def _rel(a, b):
    return abs(a - b) / abs(b)


def rotated_product(rng, trials):
    worst0 = worstk = 0.0
    for _ in range(trials):
        p = random_params(rng)
        theta = rot.optimal_theta(p)
        for k in range(11):
            r = obs.uncertainty_report(p, k, theta)
            err = _rel(r.product_alphabeta, 0.5 * p.hbar * (2 * k + 1))
            if k == 0:
                worst0 = max(worst0, err)
            else:
                worstk = max(worstk, err)
    return [SuiteResult("rotated_product_k0", worst0, 1e-10),
            SuiteResult("rotated_product_k1_10", worstk, 1e-9)]


def unrotated_product(rng, trials, kmax=8):
    worst_ladder = worst_quad = 0.0
    for _ in range(trials):
        p = random_params(rng)
        expected_base = 0.5 * p.hbar * abs(p.A) * abs(p.B)
        for wp in basis(p, kmax):
            expected = expected_base * (2 * wp.k + 1)
            ladder = obs.uncertainty(obs.X, wp) * obs.uncertainty(obs.P, wp)
            quad = obs.quadrature_uncertainty(wp, obs.X) * obs.quadrature_uncertainty(wp, obs.P)
            worst_ladder = max(worst_ladder, _rel(ladder, expected))
            worst_quad = max(worst_quad, _rel(quad, expected), _rel(quad, ladder))
    return [SuiteResult("xp_product_ladder", worst_ladder, 1e-12),
            SuiteResult("xp_product_quadrature", worst_quad, 1e-7)]


def lower_bound(rng, trials=50):
    worst = 0.0
    for _ in range(trials):
        p = random_params(rng)
        theta = rng.uniform(-math.pi, math.pi)
        c = rng.normal(size=2) + 1j * rng.normal(size=2)
        c /= np.linalg.norm(c)
        state = superpose(basis(p, 1), c)
        prod = (obs.quadrature_uncertainty(state, obs.alpha(theta))
                * obs.quadrature_uncertainty(state, obs.beta(theta)))
        bound = 0.5 * p.hbar * abs(obs.commutator_constant(obs.alpha(theta), obs.beta(theta)))
        worst = max(worst, bound - prod)
    return [SuiteResult("rotated_lower_bound", max(worst, 0.0), 1e-8)]


def eigenvalue_product(rng, trials):
    worst = 0.0
    for _ in range(trials):
        lo, hi = rot.h_eigenvalues(random_params(rng))
        worst = max(worst, abs(lo * hi - 0.25))
    p = validate(1.0, 1.0 + 1.0j)
    lo, hi = rot.h_eigenvalues(p)
    ref = np.linalg.eigvalsh(0.5 * rot.hamiltonian_matrix(p).as_array())
    exact = (0.25 * (3 - math.sqrt(5)), 0.25 * (3 + math.sqrt(5)))
    spot = max(abs(lo - exact[0]), abs(hi - exact[1]), *np.abs(ref - exact))
    return [SuiteResult("eigenvalue_product", worst, 1e-12),
            SuiteResult("eigenvalues_1_1plusi", spot, 1e-12)]


def flow_derivatives(rng, trials, per_set=10):
    worst = 0.0
    for _ in range(trials):
        p = random_params(rng)
        for t in rng.uniform(0.0, math.pi, per_set):
            worst = max(worst, *rot.flow_derivative_residuals(p, t, 1e-5, normalized=True))
    return [SuiteResult("flow_derivative_residuals", worst, 1e-8)]


def minimizer(rng, trials):
    worst_im = worst_prod = worst_angle = 0.0
    for _ in range(trials):
        p = random_params(rng)
        t_star, prod = rot.scan_minimize(p)
        _, im, _ = rot.flow_quantities(p, t_star)
        worst_im = max(worst_im, abs(im))
        worst_prod = max(worst_prod, abs(prod - 1.0))
        worst_angle = max(worst_angle, rot.angle_distance(t_star, rot.optimal_theta(p)))
    return [SuiteResult("minimizer_im_ba", worst_im, 1e-9),
            SuiteResult("minimizer_product", worst_prod, 1e-9),
            SuiteResult("minimizer_vs_optimal_theta", worst_angle, 1e-6)]


def basis_integrity(rng, trials, n_gram=10, kmax=20):
    worst_gram = worst_ladder = 0.0
    for _ in range(max(1, trials // 10)):
        p = random_params(rng)
        states = basis(p, n_gram)
        for i, f in enumerate(states):
            for j in range(i, len(states)):
                g = obs.quadrature_inner(f, states[j])
                worst_gram = max(worst_gram, abs(g - (1.0 if i == j else 0.0)))
    for _ in range(trials):
        p = random_params(rng)
        wp = packet(p, 0)
        for _k in range(kmax + 1):
            back = lower(raise_(wp)).poly.coeffs
            ref = wp.poly.coeffs
            worst_ladder = max(worst_ladder, np.max(np.abs(back - ref)) / np.max(np.abs(ref)))
            wp = raise_(wp)
    return [SuiteResult("gram_identity", worst_gram, 1e-9),
            SuiteResult("ladder_roundtrip", worst_ladder, 1e-10)]


SUITES = [rotated_product, unrotated_product, lower_bound, eigenvalue_product,
          flow_derivatives, minimizer, basis_integrity]


def run_all(seed: int = 0, trials: int = 100, tamper: bool = False) -> list[SuiteResult]:
    """Run every suite from one seeded generator.

    ``tamper`` replaces every tolerance with -1 so the harness must report
    failure; it exists to test the reporting path.
    """
    rng = np.random.default_rng(seed)
    results = []
    for suite in SUITES:
        if suite is lower_bound:
            results.extend(suite(rng, min(trials, 50)))
        else:
            results.extend(suite(rng, trials))
    if tamper:
        for r in results:
            r.tol = -1.0
    return results

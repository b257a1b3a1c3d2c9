"""One-dimensional semiclassical wave packets and their rotated uncertainty products."""

from ._kernels import BACKEND
from .observables import (P, X, GridTooCoarse, LinearObservable, QuadratureSpec,
                          UncertaintyReport, alpha, beta, commutator_constant,
                          ladder_coefficients, mean, quadrature_expectation,
                          quadrature_inner, uncertainty, uncertainty_report, variance)
from .params import (GaussianParams, NonPositiveHbar, NonPositiveOmega,
                     NormalizationViolation, ParameterError, ZeroParameter,
                     random_params, standard_oscillator, validate)
from .rotation import (QuadForm2, diagonalizing_angle, h1_h2_classical_form, h_eigenvalues,
                       hamiltonian_matrix, flow_derivative_residuals, optimal_theta,
                       phase_space_ellipse, rotate_params, scan_minimize)
from .wavepacket import (ZERO, ComplexPoly, PolyState, WavePacket, basis, evaluate,
                         ground_state, lower, packet, raise_, superpose)

__version__ = "0.1.0"

"""Parameter tuples (A, B, hbar, a, eta) indexing the wave-packet family."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

DEFAULT_TOL = 1e-12


class ParameterError(ValueError):
    """Base class for invalid wave-packet parameters."""


class NormalizationViolation(ParameterError):
    def __init__(self, residual: float, tol: float):
        self.residual = residual
        self.tol = tol
        super().__init__(
            f"Re(conj(A)*B) - 1 = {residual:.3e} exceeds tolerance {tol:.1e}"
        )


class NonPositiveHbar(ParameterError):
    pass


class ZeroParameter(ParameterError):
    pass


class NonPositiveOmega(ParameterError):
    pass


@dataclass(frozen=True)
class GaussianParams:
    """Validated parameters of a semiclassical wave packet.

    Build instances through :func:`validate` or :func:`standard_oscillator`;
    the constructor itself does not check the normalization.
    """

    A: complex
    B: complex
    hbar: float
    a: float = 0.0
    eta: float = 0.0

    @property
    def im_ba(self) -> float:
        """Im(B * conj(A))."""
        return (self.B * self.A.conjugate()).imag

    @property
    def re_ab(self) -> float:
        return (self.A.conjugate() * self.B).real

    def centered(self) -> "GaussianParams":
        return GaussianParams(self.A, self.B, self.hbar, 0.0, 0.0)


def validate(A, B, hbar=1.0, a=0.0, eta=0.0, tol=DEFAULT_TOL) -> GaussianParams:
    """Check the constraints on (A, B, hbar, a, eta) and return the tuple.

    Raises
    ------
    ZeroParameter
        If A or B is zero.
    NonPositiveHbar
        If hbar <= 0.
    NormalizationViolation
        If |Re(conj(A) B) - 1| > tol.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    A = complex(A)
    B = complex(B)
    if A == 0 or B == 0:
        raise ZeroParameter("A and B must both be nonzero")
    if not hbar > 0:
        raise NonPositiveHbar(f"hbar must be positive, got {hbar}")
    residual = (A.conjugate() * B).real - 1.0
    if not abs(residual) <= tol:
        raise NormalizationViolation(residual, tol)
    return GaussianParams(A, B, float(hbar), float(a), float(eta))


def standard_oscillator(omega: float, hbar: float = 1.0) -> GaussianParams:
    """Ground-state parameters of the frequency-omega harmonic oscillator."""
    if not omega > 0:
        raise NonPositiveOmega(f"omega must be positive, got {omega}")
    return validate(omega ** -0.5, omega ** 0.5, hbar)


def repair(A, B) -> tuple[complex, complex]:
    """Project B so that Re(conj(A) B) = 1 holds, keeping A fixed.

    Never called implicitly by the constructors.
    """
    A = complex(A)
    B = complex(B)
    return A, B + (1.0 - (A.conjugate() * B).real) / A.conjugate()


def from_moduli(mod_a: float, mod_b: float, phase: float = 0.0, sign: int = 1,
                hbar: float = 1.0, a: float = 0.0, eta: float = 0.0) -> GaussianParams:
    """Build valid parameters with prescribed |A|, |B| (requires |A||B| >= 1).

    ``sign`` picks the sign of Im(B conj(A)); ``phase`` is arg(A).
    """
    prod = mod_a * mod_b
    if prod < 1.0 - 1e-12:
        raise ParameterError(f"|A||B| = {prod} < 1 is not attainable")
    im = sign * np.sqrt(max(prod * prod - 1.0, 0.0))
    A = mod_a * np.exp(1j * phase)
    B = (1.0 + 1j * im) / np.conj(A)
    A, B = repair(A, B)
    return validate(A, B, hbar, a, eta)


def random_params(rng: np.random.Generator, mod_range=(0.3, 4.0),
                  hbars=(0.01, 0.1, 1.0), centered: bool = False) -> GaussianParams:
    """Draw a valid parameter set with |A|, |B| inside ``mod_range``."""
    lo, hi = mod_range
    mod_a = rng.uniform(max(lo, 1.0 / hi), hi)
    mod_b = rng.uniform(max(lo, 1.0 / mod_a), hi)
    hbar = float(rng.choice(hbars))
    a, eta = (0.0, 0.0) if centered else rng.uniform(-2.0, 2.0, size=2)
    return from_moduli(mod_a, mod_b, phase=rng.uniform(-np.pi, np.pi),
                       sign=int(rng.choice([-1, 1])), hbar=hbar, a=a, eta=eta)

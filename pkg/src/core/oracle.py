"""
Aberth-Ehrlich simultaneous iteration: an independent root finder for
monic polynomials of any degree, used to validate the radical solvers.
"""
import logging
from dataclasses import dataclass

import numpy as np

from config import (
    ORACLE_BACKWARD_ERROR_FACTOR, ORACLE_CONVERGENCE_TOL, ORACLE_MAX_ITERATIONS,
    ORACLE_PHASE_OFFSET, ORACLE_SEED_RADIUS_FACTOR,
)
from core.errors import OracleNonConvergenceError
from core.models import MonicPolynomial, RootMultiset
from core.radical_solvers import polish_root

logger = logging.getLogger(__name__)

EPS = np.finfo(float).eps


@dataclass(frozen=True)
class OracleConfig:
    """Iteration limits for the oracle"""
    max_iterations: int = ORACLE_MAX_ITERATIONS
    convergence_tol: float = ORACLE_CONVERGENCE_TOL
    seed_radius_factor: float = ORACLE_SEED_RADIUS_FACTOR

    def __post_init__(self):
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be >= 1")
        if not self.convergence_tol > 0:
            raise ValueError("convergence_tol must be positive")
        if not self.seed_radius_factor > 0:
            raise ValueError("seed_radius_factor must be positive")


def initial_guesses(p: MonicPolynomial, cfg: OracleConfig) -> np.ndarray:
    """
    Equally spaced points on a circle around -c_{n-1}/n.

    The radius is seed_radius_factor * (1 + max_k |c_k|^(1/(n-k))); a fixed
    phase offset breaks the symmetry of real polynomials.
    """
    n = p.degree
    center = -p.coeffs[-1] / n
    bound = max(abs(c) ** (1.0 / (n - k)) for k, c in enumerate(p.coeffs))
    radius = cfg.seed_radius_factor * (1.0 + bound)
    angles = 2.0 * np.pi * np.arange(n) / n + ORACLE_PHASE_OFFSET
    return center + radius * np.exp(1j * angles)


def _horner(p: MonicPolynomial, z: np.ndarray):
    """Values, derivatives and rounding bounds of P at every point of z."""
    value = np.ones_like(z)
    slope = np.zeros_like(z)
    bound = np.ones(z.shape)
    modulus = np.abs(z)
    for c in reversed(p.coeffs):
        slope = slope * z + value
        value = value * z + c
        bound = bound * modulus + abs(c)
    return value, slope, bound


def oracle_roots(p: MonicPolynomial, cfg: OracleConfig = OracleConfig()) -> RootMultiset:
    """
    All roots of p by Aberth-Ehrlich iteration.

    Args:
        p: Monic polynomial of degree >= 1
        cfg: Iteration limits

    Returns:
        RootMultiset sorted by (re, im), each root polished by one Newton step

    Raises:
        OracleNonConvergenceError: no convergence within cfg.max_iterations
    """
    n = p.degree
    if n == 1:
        return RootMultiset((-p.coeffs[0],))

    z = initial_guesses(p, cfg)
    off_diagonal = ~np.eye(n, dtype=bool)
    converged = False
    iterations = 0
    best_z, best_value = z, None

    for iterations in range(1, cfg.max_iterations + 1):
        value, slope, bound = _horner(p, z)
        if best_value is None or np.max(np.abs(value)) < np.max(np.abs(best_value)):
            best_z, best_value = z, value
        # every residual already at the rounding floor: nothing left to gain
        if np.all(np.abs(value) <= ORACLE_BACKWARD_ERROR_FACTOR * n * EPS * bound):
            converged = True
            break

        diff = z[:, None] - z[None, :]
        with np.errstate(divide="ignore", invalid="ignore"):
            repulsion = np.where(off_diagonal, 1.0 / np.where(off_diagonal, diff, 1.0), 0.0).sum(axis=1)
            denominator = slope - value * repulsion
            correction = np.where(denominator != 0, value / denominator, 0.0)
        correction = np.nan_to_num(correction, nan=0.0, posinf=0.0, neginf=0.0)

        z = z - correction
        step = np.max(np.abs(correction) / (np.abs(z) + 1.0))
        if step < cfg.convergence_tol:
            converged = True
            break

    if not converged:
        # the last update has not been evaluated yet
        value = _horner(p, z)[0]
        if np.max(np.abs(value)) < np.max(np.abs(best_value)):
            best_z, best_value = z, value
        raise OracleNonConvergenceError(
            iterations,
            [complex(r) for r in best_z],
            [float(r) for r in np.abs(best_value)],
        )

    logger.debug("oracle converged after %d iterations (degree %d)", iterations, n)
    roots = [polish_root(p, complex(r), 1) for r in z]
    return RootMultiset(tuple(sorted(roots, key=lambda r: (r.real, r.imag))))

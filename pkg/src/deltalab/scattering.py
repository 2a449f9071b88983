"""Stationary scattering off a finite set of delta potentials.

The eigenfunction for wavenumber k is an incident plane wave plus one
outgoing wave per center,

    w(x) = exp(ikx) + sum_a c_a exp(i|k| |x - x_a|),

and the derivative jump condition at each center turns the coefficients
c_a into the solution of a dense complex linear system. Units: hbar = 1,
2m = 1, so omega = k^2.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple, Union

import numpy as np

from .errors import EmptyScattererSet, InvariantError, WavenumberTooSmall
from .linalg import lu_solve, norm_inf

K_MIN = 1e-6
MIN_SEPARATION = 1e-9
RESIDUAL_RTOL = 1e-10


@dataclass(frozen=True)
class DeltaScatterer:
    """A single point interaction: strength * delta(x - position)."""

    position: float
    strength: float

    def __post_init__(self):
        if not (math.isfinite(self.position) and math.isfinite(self.strength)):
            raise InvariantError("scatterer position and strength must be finite")


@dataclass(frozen=True)
class ScattererSet:
    """Ordered delta scatterers plus a global coupling multiplier.

    Positions are sorted on construction; the effective strength of each
    scatterer is coupling_scale * strength everywhere downstream.
    """

    scatterers: Tuple[DeltaScatterer, ...]
    coupling_scale: float = 1.0

    def __post_init__(self):
        object.__setattr__(
            self,
            "scatterers",
            tuple(sorted(self.scatterers, key=lambda s: s.position)),
        )
        if not (math.isfinite(self.coupling_scale) and self.coupling_scale >= 0.0):
            raise InvariantError("coupling_scale must be finite and >= 0")
        pos = [s.position for s in self.scatterers]
        for a, b in zip(pos, pos[1:]):
            if b - a < MIN_SEPARATION:
                raise InvariantError(
                    "scatterer positions closer than %g (got %r and %r)"
                    % (MIN_SEPARATION, a, b)
                )

    def __len__(self) -> int:
        return len(self.scatterers)

    @property
    def positions(self) -> np.ndarray:
        return np.array([s.position for s in self.scatterers])

    @property
    def effective_strengths(self) -> np.ndarray:
        return self.coupling_scale * np.array([s.strength for s in self.scatterers])

    @property
    def span(self) -> float:
        if not self.scatterers:
            return 0.0
        return self.scatterers[-1].position - self.scatterers[0].position

    @property
    def mean_spacing(self) -> float:
        if len(self.scatterers) < 2:
            return 0.0
        return self.span / (len(self.scatterers) - 1)


@dataclass(frozen=True)
class ScatteringSolution:
    """Outgoing-wave coefficients and far-field amplitudes for one k."""

    k: float
    coefs: np.ndarray
    reflection: complex
    transmission: complex
    residual: float


def _check_k(k: float) -> float:
    k = float(k)
    if abs(k) < K_MIN:
        raise WavenumberTooSmall("|k| = %g below cutoff %g" % (abs(k), K_MIN))
    return k


def assemble_system(sset: ScattererSet, k: float) -> Tuple[np.ndarray, np.ndarray]:
    """Build the linear system M c = rhs for the outgoing-wave coefficients.

    M[b, a] = 2i|k| delta_ba - alpha_b exp(i|k| |x_b - x_a|),
    rhs[b]  = alpha_b exp(i k x_b),
    with alpha the effective (coupling-scaled) strengths.
    """
    k = _check_k(k)
    n = len(sset)
    if n == 0:
        raise EmptyScattererSet("cannot assemble system for an empty scatterer set")
    x = sset.positions
    alpha = sset.effective_strengths
    ak = abs(k)
    dist = np.abs(x[:, None] - x[None, :])
    m = 2j * ak * np.eye(n) - alpha[:, None] * np.exp(1j * ak * dist)
    rhs = alpha * np.exp(1j * k * x)
    return m, rhs


def extract_rt(sset: ScattererSet, coefs: np.ndarray, k: float) -> Tuple[complex, complex]:
    """Reflection and transmission amplitudes from the far-field ansatz.

    R = sum_a c_a exp(i k x_a), T = 1 + sum_a c_a exp(-i k x_a); the same
    formulas hold for either sign of k (mirror substitution x -> -x).
    """
    k = _check_k(k)
    coefs = np.asarray(coefs, dtype=np.complex128)
    x = sset.positions
    if coefs.shape != x.shape:
        raise InvariantError(
            "coefficient vector length %d != scatterer count %d"
            % (coefs.size, x.size)
        )
    r = complex(np.sum(coefs * np.exp(1j * k * x)))
    t = complex(1.0 + np.sum(coefs * np.exp(-1j * k * x)))
    return r, t


def solve_coefficients(sset: ScattererSet, k: float) -> ScatteringSolution:
    """Solve for the outgoing-wave coefficients at wavenumber k."""
    m, rhs = assemble_system(sset, k)
    coefs, residual = lu_solve(m, rhs)
    tol = RESIDUAL_RTOL * (1.0 + norm_inf(rhs))
    if residual > tol:
        raise InvariantError(
            "solve residual %.3e exceeds %.3e (ill-conditioned set?)"
            % (residual, tol)
        )
    refl, trans = extract_rt(sset, coefs, k)
    coefs.setflags(write=False)
    return ScatteringSolution(
        k=k, coefs=coefs, reflection=refl, transmission=trans, residual=residual
    )


@lru_cache(maxsize=8192)
def solve_cached(sset: ScattererSet, k: float) -> ScatteringSolution:
    """Per-(set, k) memoized solve; safe for concurrent readers."""
    return solve_coefficients(sset, k)


def eval_eigenfunction(
    sset: ScattererSet, sol: ScatteringSolution, x: Union[float, np.ndarray]
):
    """Evaluate w(x) = exp(ikx) + sum_a c_a exp(i|k| |x - x_a|).

    Accepts a scalar or an array of positions.
    """
    scalar = np.isscalar(x)
    xv = np.atleast_1d(np.asarray(x, dtype=float))
    ak = abs(sol.k)
    out = np.exp(1j * sol.k * xv)
    out += np.exp(1j * ak * np.abs(xv[:, None] - sset.positions[None, :])) @ sol.coefs
    return complex(out[0]) if scalar else out

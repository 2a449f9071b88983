"""Discrete mode spectra and the free / scattered superposition fields.

The free field is sum_m A_m exp(i phi_m) exp(-i w_m t) exp(i k_m x) with
w_m = k_m^2; the scattered ("non-free") field replaces each plane wave
with the corresponding scattering eigenfunction. Time evolution is exact,
no PDE stepping anywhere.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Tuple, Union

import numpy as np

from .errors import (
    InvariantError,
    PeakNotResolved,
    SpectrumSolutionMismatch,
    WavenumberTooSmall,
)
from .scattering import (
    K_MIN,
    ScattererSet,
    ScatteringSolution,
    eval_eigenfunction,
    solve_cached,
)


@dataclass(frozen=True)
class SpectrumSpec:
    """Arithmetic ladder of wavenumbers k_m = k0 + m*dk, m = 0..n_waves-1."""

    k0: float
    dk: float
    n_waves: int
    amplitudes: Optional[Tuple[float, ...]] = None
    phases: Optional[Tuple[float, ...]] = None

    def __post_init__(self):
        if not (math.isfinite(self.dk) and self.dk > 0):
            raise InvariantError("dk must be finite and > 0")
        if int(self.n_waves) != self.n_waves or self.n_waves < 1:
            raise InvariantError("n_waves must be an integer >= 1")
        object.__setattr__(self, "n_waves", int(self.n_waves))
        for name in ("amplitudes", "phases"):
            seq = getattr(self, name)
            if seq is not None:
                seq = tuple(float(v) for v in seq)
                object.__setattr__(self, name, seq)
                if len(seq) != self.n_waves:
                    raise InvariantError(
                        "%s has length %d, expected n_waves = %d"
                        % (name, len(seq), self.n_waves)
                    )
        for k in self.wavenumbers():
            if abs(k) < K_MIN:
                raise WavenumberTooSmall(
                    "spectrum wavenumber %g below cutoff %g" % (k, K_MIN)
                )

    def wavenumbers(self) -> np.ndarray:
        return self.k0 + self.dk * np.arange(self.n_waves)


@dataclass(frozen=True)
class SpectralComponent:
    k: float
    omega: float
    amplitude: float
    phase: float


@dataclass(frozen=True)
class Grid:
    """Uniform spatial grid, endpoints inclusive."""

    x_min: float
    x_max: float
    n_points: int

    def __post_init__(self):
        if not self.x_min < self.x_max:
            raise InvariantError("grid requires x_min < x_max")
        if int(self.n_points) != self.n_points or self.n_points < 2:
            raise InvariantError("grid requires an integer n_points >= 2")
        object.__setattr__(self, "n_points", int(self.n_points))

    @property
    def step(self) -> float:
        return (self.x_max - self.x_min) / (self.n_points - 1)

    def points(self) -> np.ndarray:
        return np.linspace(self.x_min, self.x_max, self.n_points)


@dataclass(frozen=True)
class DensityField:
    """Sampled |psi(t, x)|^2 on a grid."""

    grid: Grid
    t: float
    values: np.ndarray


def build_spectrum(spec: SpectrumSpec) -> Tuple[SpectralComponent, ...]:
    """Expand a SpectrumSpec into its components with omega = k^2."""
    amps = spec.amplitudes or (1.0,) * spec.n_waves
    phases = spec.phases or (0.0,) * spec.n_waves
    return tuple(
        SpectralComponent(k=float(k), omega=float(k) ** 2, amplitude=a, phase=p)
        for k, a, p in zip(spec.wavenumbers(), amps, phases)
    )


def _mode_factors(components: Sequence[SpectralComponent], t: float) -> np.ndarray:
    return np.array(
        [c.amplitude * np.exp(1j * (c.phase - c.omega * t)) for c in components]
    )


def eval_free(
    components: Sequence[SpectralComponent], t: float, x: Union[float, np.ndarray]
):
    """Free superposition field at (t, x); x may be scalar or array."""
    if not components:
        raise InvariantError("spectrum must be nonempty")
    scalar = np.isscalar(x)
    xv = np.atleast_1d(np.asarray(x, dtype=float))
    ks = np.array([c.k for c in components])
    out = np.exp(1j * xv[:, None] * ks[None, :]) @ _mode_factors(components, t)
    return complex(out[0]) if scalar else out


def solve_spectrum(
    sset: ScattererSet, components: Sequence[SpectralComponent]
) -> Tuple[ScatteringSolution, ...]:
    """Scattering solutions for every mode, via the per-(set, k) cache."""
    return tuple(solve_cached(sset, c.k) for c in components)


def eval_scattered(
    components: Sequence[SpectralComponent],
    solutions: Sequence[ScatteringSolution],
    sset: ScattererSet,
    t: float,
    x: Union[float, np.ndarray],
):
    """Non-free superposition: each plane wave replaced by its eigenfunction."""
    if len(components) != len(solutions):
        raise SpectrumSolutionMismatch(
            "%d components vs %d solutions" % (len(components), len(solutions))
        )
    for c, s in zip(components, solutions):
        if abs(c.k - s.k) > 1e-12:
            raise SpectrumSolutionMismatch(
                "component k = %r vs solution k = %r" % (c.k, s.k)
            )
    scalar = np.isscalar(x)
    xv = np.atleast_1d(np.asarray(x, dtype=float))
    factors = _mode_factors(components, t)
    out = np.zeros(xv.shape, dtype=np.complex128)
    for f, sol in zip(factors, solutions):
        out += f * eval_eigenfunction(sset, sol, xv)
    return complex(out[0]) if scalar else out


def density_grid(
    evaluator: Callable[[float, np.ndarray], np.ndarray], grid: Grid, t: float
) -> DensityField:
    """Sample |psi(t, x)|^2 produced by an evaluator closure on a grid."""
    psi = evaluator(t, grid.points())
    values = np.abs(psi) ** 2
    values.setflags(write=False)
    return DensityField(grid=grid, t=t, values=values)


def free_density(
    components: Sequence[SpectralComponent], grid: Grid, t: float
) -> DensityField:
    return density_grid(lambda tt, xs: eval_free(components, tt, xs), grid, t)


def scattered_density(
    components: Sequence[SpectralComponent],
    solutions: Sequence[ScatteringSolution],
    sset: ScattererSet,
    grid: Grid,
    t: float,
) -> DensityField:
    return density_grid(
        lambda tt, xs: eval_scattered(components, solutions, sset, tt, xs), grid, t
    )


def fwhm_central_excitation(field: DensityField) -> float:
    """Full width at half maximum of the central excitation of a density.

    Scans outward from the global maximum to the half-height crossings,
    interpolating linearly between samples. Raises PeakNotResolved when
    the density is structureless (no crossing found) or fewer than five
    samples lie above half maximum.
    """
    v = np.asarray(field.values, dtype=float)
    xs = field.grid.points()
    i0 = int(np.argmax(v))
    peak = v[i0]
    if peak <= 0:
        raise PeakNotResolved("density is identically zero")
    half = peak / 2.0

    def crossing(direction: int) -> Tuple[float, int]:
        j = i0
        while 0 <= j + direction < v.size and v[j + direction] >= half:
            j += direction
        if not (0 <= j + direction < v.size):
            raise PeakNotResolved(
                "no half-maximum crossing found scanning %s from the peak"
                % ("right" if direction > 0 else "left")
            )
        # linear interpolation between the last sample above and first below
        a, b = j, j + direction
        frac = (v[a] - half) / (v[a] - v[b])
        return xs[a] + frac * (xs[b] - xs[a]), j

    x_right, j_right = crossing(+1)
    x_left, j_left = crossing(-1)
    if j_right - j_left + 1 < 5:
        raise PeakNotResolved(
            "only %d samples above half maximum" % (j_right - j_left + 1)
        )
    return x_right - x_left


def spectrum_fwhm(spec: SpectrumSpec, n_points: int = 8193) -> float:
    """FWHM of the free excitation, measured on one period centered at 0."""
    half_period = math.pi / spec.dk
    grid = Grid(-half_period, half_period, n_points)
    field = free_density(build_spectrum(spec), grid, 0.0)
    return fwhm_central_excitation(field)

"""Retardation estimators and the scenario evaluation pipeline.

Two independent estimators quantify the spatial lag of the scattered
density pattern behind the free one: a cross-correlation peak over an
analysis window in the transmitted zone, and the spectrum-averaged
derivative of the transmission phase with respect to k. Both use the
same sign convention: positive = non-free retarded.
"""
from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .errors import (
    DeltaLabError,
    GridTooCoarse,
    InvariantError,
    PeakNotResolved,
    PhaseUnwrapAmbiguous,
    WindowOutsideGrid,
)
from .retardation_types import AnalysisWindow, RetardationReport
from .scattering import ScattererSet, solve_cached
from .scenario import Scenario
from .wavefield import (
    DensityField,
    SpectrumSpec,
    build_spectrum,
    free_density,
    scattered_density,
    solve_spectrum,
    spectrum_fwhm,
)

SWEEP_AXES = ("coupling_scale", "n_waves", "dk", "scatterer_spacing")


def correlation_lag(
    rho_free: DensityField, rho_nf: DensityField, window: AnalysisWindow
) -> Tuple[float, float]:
    """Correlation-peak lag of the non-free density behind the free one.

    Scans C(s) = sum_i rho_nf(x_i) * rho_free(x_i + s), normalized by the
    energy of the shifted free segment so that identical patterns peak at
    zero shift exactly (Cauchy-Schwarz), for lags s in [-max_lag, max_lag]
    over the window. The discrete argmax is refined with a parabolic fit.
    Reports prominence = 1 - C_second / C_max where
    C_second is the largest correlation at least max_lag/20 away from the
    peak (one grid step at the coarsest sampling the estimator accepts,
    so the figure does not depend on grid resolution).
    """
    if rho_free.grid != rho_nf.grid:
        raise InvariantError("density fields must share the same grid")
    grid = rho_free.grid
    step = grid.step
    if step > window.max_lag / 20 * (1 + 1e-12):
        raise GridTooCoarse(
            "grid step %g exceeds max_lag/20 = %g" % (step, window.max_lag / 20)
        )
    eps = 1e-9 * step
    if (
        window.x_lo - window.max_lag < grid.x_min - eps
        or window.x_hi + window.max_lag > grid.x_max + eps
    ):
        raise WindowOutsideGrid(
            "window [%g, %g] +/- max_lag %g is not covered by grid [%g, %g]"
            % (window.x_lo, window.x_hi, window.max_lag, grid.x_min, grid.x_max)
        )
    xs = grid.points()
    mask = (xs >= window.x_lo - eps) & (xs <= window.x_hi + eps)
    xw = xs[mask]
    nf = np.asarray(rho_nf.values)[mask]
    free = np.asarray(rho_free.values)
    n_lag = int(math.floor(window.max_lag / step + 1e-9))
    lags = step * np.arange(-n_lag, n_lag + 1)
    segments = [np.interp(xw + s, xs, free) for s in lags]
    norms = np.array([math.sqrt(seg @ seg) for seg in segments])
    norms[norms == 0.0] = 1.0
    corr = np.array([nf @ seg for seg in segments]) / norms

    jmax = int(np.argmax(corr))
    lag = lags[jmax]
    if 0 < jmax < corr.size - 1:
        c_lo, c_mid, c_hi = corr[jmax - 1], corr[jmax], corr[jmax + 1]
        denom = c_lo - 2 * c_mid + c_hi
        if denom < 0:
            lag += 0.5 * step * (c_lo - c_hi) / denom

    c_max = corr[jmax]
    if c_max <= 0:
        return float(lag), 0.0
    exclusion = max(step, window.max_lag / 20.0)
    outside = np.abs(lags - lag) >= exclusion
    if not np.any(outside):
        return float(lag), 0.0
    prominence = 1.0 - float(np.max(corr[outside])) / float(c_max)
    return float(lag), float(min(max(prominence, 0.0), 1.0))


def phase_delay(sset: ScattererSet, spec: SpectrumSpec) -> float:
    """Spectrum-averaged d(arg T)/dk via central differences of step dk/10."""
    ks = spec.wavenumbers()
    if not (np.all(ks > 0) or np.all(ks < 0)):
        raise InvariantError("phase delay requires all wavenumbers of one sign")
    h = spec.dk / 10.0
    delays = []
    for k in ks:
        t_hi = solve_cached(sset, float(k + h)).transmission
        t_lo = solve_cached(sset, float(k - h)).transmission
        dphi = np.angle(t_hi) - np.angle(t_lo)
        dphi = (dphi + math.pi) % (2 * math.pi) - math.pi  # nearest branch
        if abs(dphi) > math.pi / 2:
            raise PhaseUnwrapAmbiguous(
                "transmission phase jumps by %g rad across k = %g" % (dphi, k)
            )
        delays.append(dphi / (2 * h))
    return float(np.mean(delays))


def default_window(scenario: Scenario, fwhm: float) -> AnalysisWindow:
    """Transmitted-zone window: [max x_a + 2*fwhm, grid end - max_lag]."""
    margin = 2.0 * fwhm if math.isfinite(fwhm) else 1.0
    x_lo = float(scenario.set.positions.max()) + margin
    room = scenario.grid.x_max - x_lo
    if room <= 0:
        raise InvariantError("grid ends before the transmitted analysis zone")
    max_lag = 0.99 * min(math.pi / scenario.spectrum.dk, room / 5.0)
    return AnalysisWindow(
        x_lo=x_lo, x_hi=scenario.grid.x_max - max_lag, max_lag=max_lag
    )


@dataclass(frozen=True)
class ScenarioResult:
    """Everything the CLI and HTTP service emit for one scenario."""

    scenario: Scenario
    window: AnalysisWindow
    rho_free: DensityField
    rho_nonfree: DensityField
    solutions: tuple
    report: RetardationReport


def evaluate_scenario(scenario: Scenario) -> ScenarioResult:
    """Solve all modes, sample both densities, and estimate retardation."""
    components = build_spectrum(scenario.spectrum)
    solutions = solve_spectrum(scenario.set, components)
    rho_free = free_density(components, scenario.grid, scenario.t)
    rho_nf = scattered_density(
        components, solutions, scenario.set, scenario.grid, scenario.t
    )
    try:
        fwhm = spectrum_fwhm(scenario.spectrum)
    except PeakNotResolved:
        fwhm = float("nan")
    window = scenario.window or default_window(scenario, fwhm)
    lag, prominence = correlation_lag(rho_free, rho_nf, window)
    delay = phase_delay(scenario.set, scenario.spectrum)
    report = RetardationReport(
        corr_lag=lag,
        phase_delay=delay,
        fwhm=fwhm,
        scatterer_span=scenario.set.span,
        mean_spacing=scenario.set.mean_spacing,
        peak_prominence=prominence,
    )
    return ScenarioResult(
        scenario=scenario,
        window=window,
        rho_free=rho_free,
        rho_nonfree=rho_nf,
        solutions=solutions,
        report=report,
    )


@dataclass(frozen=True)
class SweepPoint:
    value: float
    report: Optional[RetardationReport]
    reason: Optional[str] = None


def _with_axis_value(scenario: Scenario, axis: str, value: float) -> Scenario:
    if axis == "coupling_scale":
        sset = dataclasses.replace(scenario.set, coupling_scale=float(value))
        return dataclasses.replace(scenario, set=sset)
    if axis == "n_waves":
        spec = dataclasses.replace(scenario.spectrum, n_waves=int(value))
        return dataclasses.replace(scenario, spectrum=spec)
    if axis == "dk":
        spec = dataclasses.replace(scenario.spectrum, dk=float(value))
        return dataclasses.replace(scenario, spectrum=spec)
    if axis == "scatterer_spacing":
        old = scenario.set
        if len(old) < 2:
            raise InvariantError("scatterer_spacing sweep needs >= 2 scatterers")
        center = float(old.positions.mean())
        factor = float(value) / old.mean_spacing
        sset = ScattererSet(
            scatterers=tuple(
                dataclasses.replace(s, position=center + factor * (s.position - center))
                for s in old.scatterers
            ),
            coupling_scale=old.coupling_scale,
        )
        return dataclasses.replace(scenario, set=sset)
    raise InvariantError("unknown sweep axis %r (expected one of %s)" % (axis, (SWEEP_AXES,)))


def sweep_retardation(
    base: Scenario, axis: str, values: Sequence[float]
) -> List[SweepPoint]:
    """One retardation report per axis value, other parameters fixed.

    Failed points are recorded with a reason instead of aborting the sweep.
    """
    if axis not in SWEEP_AXES:
        raise InvariantError("unknown sweep axis %r" % axis)
    if len(values) < 3:
        raise InvariantError("sweep needs at least 3 values")
    points: List[SweepPoint] = []
    for value in values:
        try:
            result = evaluate_scenario(_with_axis_value(base, axis, value))
            points.append(SweepPoint(value=float(value), report=result.report))
        except DeltaLabError as e:
            points.append(
                SweepPoint(value=float(value), report=None, reason=e.oneline())
            )
    return points

"""Value types for the retardation estimators (kept import-light so the
scenario module can reference them without a cycle)."""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvariantError


@dataclass(frozen=True)
class AnalysisWindow:
    """Spatial region and lag bound used by the correlation estimator."""

    x_lo: float
    x_hi: float
    max_lag: float

    def __post_init__(self):
        if not self.x_lo < self.x_hi:
            raise InvariantError("analysis window requires x_lo < x_hi")
        if not (math.isfinite(self.max_lag) and self.max_lag > 0):
            raise InvariantError("max_lag must be > 0")
        if not self.max_lag < (self.x_hi - self.x_lo) / 4:
            raise InvariantError("max_lag must be below a quarter of the window")


@dataclass(frozen=True)
class RetardationReport:
    """Comparison quantities between the free and non-free density patterns.

    corr_lag > 0 means the non-free pattern trails the free one along the
    direction of motion (retarded); phase_delay is the spectrum-averaged
    derivative of the transmission phase with respect to k.
    """

    corr_lag: float
    phase_delay: float
    fwhm: float
    scatterer_span: float
    mean_spacing: float
    peak_prominence: float

    def to_dict(self) -> dict:
        def finite_or_none(v: float):
            return v if math.isfinite(v) else None

        return {
            "corr_lag": finite_or_none(self.corr_lag),
            "phase_delay": finite_or_none(self.phase_delay),
            "fwhm": finite_or_none(self.fwhm),
            "scatterer_span": finite_or_none(self.scatterer_span),
            "mean_spacing": finite_or_none(self.mean_spacing),
            "peak_prominence": finite_or_none(self.peak_prominence),
        }

"""deltalab: a virtual laboratory for 1D scattering off delta potentials."""

from .classical import (
    ClassicalBarrier,
    ClassicalParticle,
    integrate_oracle,
    oracle_traversal_time,
    retardation_distance,
    traversal_time,
)
from .errors import DeltaLabError
from .linalg import lu_solve
from .retardation import (
    correlation_lag,
    default_window,
    evaluate_scenario,
    phase_delay,
    sweep_retardation,
)
from .retardation_types import AnalysisWindow, RetardationReport
from .scattering import (
    K_MIN,
    DeltaScatterer,
    ScattererSet,
    ScatteringSolution,
    assemble_system,
    eval_eigenfunction,
    extract_rt,
    solve_cached,
    solve_coefficients,
)
from .scenario import Scenario, default_scenario, load_scenario, parse_scenario, save_scenario
from .wavefield import (
    DensityField,
    Grid,
    SpectralComponent,
    SpectrumSpec,
    build_spectrum,
    density_grid,
    eval_free,
    eval_scattered,
    free_density,
    fwhm_central_excitation,
    scattered_density,
    solve_spectrum,
    spectrum_fwhm,
)

__all__ = [
    "AnalysisWindow",
    "ClassicalBarrier",
    "ClassicalParticle",
    "DeltaLabError",
    "DeltaScatterer",
    "DensityField",
    "Grid",
    "K_MIN",
    "RetardationReport",
    "Scenario",
    "ScattererSet",
    "ScatteringSolution",
    "SpectralComponent",
    "SpectrumSpec",
    "assemble_system",
    "build_spectrum",
    "correlation_lag",
    "default_scenario",
    "default_window",
    "density_grid",
    "eval_eigenfunction",
    "eval_free",
    "eval_scattered",
    "evaluate_scenario",
    "extract_rt",
    "free_density",
    "fwhm_central_excitation",
    "integrate_oracle",
    "load_scenario",
    "lu_solve",
    "oracle_traversal_time",
    "parse_scenario",
    "phase_delay",
    "retardation_distance",
    "save_scenario",
    "scattered_density",
    "solve_cached",
    "solve_coefficients",
    "solve_spectrum",
    "spectrum_fwhm",
    "sweep_retardation",
    "traversal_time",
]

__version__ = "0.1.0"

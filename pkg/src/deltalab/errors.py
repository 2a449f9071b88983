"""Exception hierarchy shared across the package.

Every error renders as a single machine-parsable line via ``oneline()``,
which the CLI prints to stderr and the HTTP service returns in 400 bodies.
"""


class DeltaLabError(Exception):
    """Base class for all validation and computation errors."""

    def oneline(self) -> str:
        return "%s: %s" % (type(self).__name__, self)


class WavenumberTooSmall(DeltaLabError):
    """|k| below the k_min cutoff where the linear system degenerates."""


class EmptyScattererSet(DeltaLabError):
    pass


class SingularMatrix(DeltaLabError):
    pass


class SpectrumSolutionMismatch(DeltaLabError):
    """Spectrum wavenumbers and scattering solutions disagree."""


class PeakNotResolved(DeltaLabError):
    """Density has no resolvable central excitation (e.g. single mode)."""


class WindowOutsideGrid(DeltaLabError):
    pass


class GridTooCoarse(DeltaLabError):
    pass


class PhaseUnwrapAmbiguous(DeltaLabError):
    pass


class DoesNotPass(DeltaLabError):
    """Classical particle is reflected by the barrier."""


class StepTooLarge(DeltaLabError):
    pass


class SchemaError(DeltaLabError):
    """Scenario JSON does not match the schema; message carries a JSON pointer."""


class InvariantError(DeltaLabError):
    """Scenario parsed but violates a domain invariant."""

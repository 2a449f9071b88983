"""Classical reference: a particle crossing a symmetric triangular barrier.

The force is -F0 on the first half of the barrier and +F0 on the second
(so the potential rises linearly to F0*w/2 at the center and falls back).
Traversal time comes in closed form; a velocity-Verlet oracle verifies it
in tests.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DoesNotPass, InvariantError, StepTooLarge


@dataclass(frozen=True)
class ClassicalBarrier:
    """Triangular force barrier (f0 > 0) or well (f0 < 0) of full width w."""

    x0: float
    w: float
    f0: float
    mass: float

    def __post_init__(self):
        if not (math.isfinite(self.w) and self.w > 0):
            raise InvariantError("barrier width must be > 0")
        if not (math.isfinite(self.mass) and self.mass > 0):
            raise InvariantError("mass must be > 0")

    def force(self, x: float) -> float:
        if self.x0 - self.w / 2 <= x < self.x0:
            return -self.f0
        if self.x0 <= x <= self.x0 + self.w / 2:
            return self.f0
        return 0.0

    def potential(self, x: float) -> float:
        h = self.w / 2
        if x <= self.x0 - h or x >= self.x0 + h:
            return 0.0
        return self.f0 * (h - abs(x - self.x0))


@dataclass(frozen=True)
class ClassicalParticle:
    """Incident particle moving in +x with speed v0."""

    v0: float

    def __post_init__(self):
        if not (math.isfinite(self.v0) and self.v0 > 0):
            raise InvariantError("incident speed must be > 0")


def _check_passes(barrier: ClassicalBarrier, particle: ClassicalParticle) -> None:
    if barrier.f0 > 0 and particle.v0 ** 2 <= barrier.f0 * barrier.w / barrier.mass:
        raise DoesNotPass(
            "v0^2 = %g does not exceed F0*w/m = %g"
            % (particle.v0 ** 2, barrier.f0 * barrier.w / barrier.mass)
        )


def traversal_time(barrier: ClassicalBarrier, particle: ClassicalParticle) -> float:
    """Time to cross [x0 - w/2, x0 + w/2]; exit speed equals v0."""
    _check_passes(barrier, particle)
    v0, f0, w, m = particle.v0, barrier.f0, barrier.w, barrier.mass
    if f0 == 0.0:
        return w / v0
    return 2.0 * (m / f0) * (v0 - math.sqrt(v0 ** 2 - f0 * w / m))


def retardation_distance(barrier: ClassicalBarrier, particle: ClassicalParticle) -> float:
    """Spatial lag behind the free particle after crossing (negative = advance)."""
    t = traversal_time(barrier, particle)
    return particle.v0 * (t - barrier.w / particle.v0)


def integrate_oracle(
    barrier: ClassicalBarrier, particle: ClassicalParticle, dt: float
) -> np.ndarray:
    """Event-split velocity-Verlet trajectory used as an independent oracle.

    The force is piecewise constant, so each Verlet step is split exactly
    at region boundaries; within a region the kick-drift-kick update is
    the exact (and symplectic) flow. Starts one length unit before the
    barrier and runs until one unit past it. Returns an (N, 3) array of
    rows (t, x, v).
    """
    if dt <= 0:
        raise InvariantError("dt must be > 0")
    if dt > barrier.w / (100.0 * particle.v0):
        raise StepTooLarge(
            "dt = %g exceeds w / (100 v0) = %g"
            % (dt, barrier.w / (100.0 * particle.v0))
        )
    half = barrier.w / 2
    edges = (barrier.x0 - half, barrier.x0, barrier.x0 + half)
    x = barrier.x0 - half - 1.0
    x_end = barrier.x0 + half + 1.0
    v = particle.v0
    t = 0.0
    m = barrier.mass
    rows = [(t, x, v)]

    def next_edge(x, v, a):
        """Earliest positive time to reach a region edge, or (None, None)."""
        best = (None, None)
        for edge in edges:
            d = edge - x
            if d <= 0:
                continue
            disc = v * v + 2.0 * a * d
            if disc < 0:
                continue
            tau = 2.0 * d / (v + math.sqrt(disc))
            if tau > 0 and (best[0] is None or tau < best[0]):
                best = (tau, edge)
        return best

    while x <= x_end:
        remaining = dt
        while remaining > 0:
            a = barrier.force(x) / m
            tau_edge, edge = next_edge(x, v, a)
            if tau_edge is not None and tau_edge < remaining:
                v = v + a * tau_edge  # exact within the constant-force region
                x = math.nextafter(edge, math.inf)
                remaining -= tau_edge
            else:
                v_half = v + 0.5 * a * remaining
                x = x + v_half * remaining
                v = v_half + 0.5 * a * remaining
                remaining = 0.0
            if v <= 0.0:
                raise DoesNotPass("particle reflected at x = %g" % x)
        t += dt
        rows.append((t, x, v))
    return np.array(rows)


def oracle_traversal_time(traj: np.ndarray, barrier: ClassicalBarrier) -> float:
    """Barrier crossing time from a trajectory, interpolating edge crossings."""

    def crossing_time(x_edge: float) -> float:
        idx = int(np.searchsorted(traj[:, 1], x_edge))
        if idx == 0 or idx >= traj.shape[0]:
            raise DoesNotPass("trajectory never reaches x = %g" % x_edge)
        t0, x0v, _ = traj[idx - 1]
        t1, x1v, _ = traj[idx]
        return t0 + (t1 - t0) * (x_edge - x0v) / (x1v - x0v)

    return crossing_time(barrier.x0 + barrier.w / 2) - crossing_time(
        barrier.x0 - barrier.w / 2
    )

import math

import numpy as np
import pytest

from deltalab.classical import (
    ClassicalBarrier,
    ClassicalParticle,
    integrate_oracle,
    oracle_traversal_time,
    retardation_distance,
    traversal_time,
)
from deltalab.errors import DoesNotPass, InvariantError, StepTooLarge


def barrier(f0, w=2.0, mass=1.0, x0=0.0):
    return ClassicalBarrier(x0=x0, w=w, f0=f0, mass=mass)


class TestClosedForm:
    def test_free_motion(self):
        assert traversal_time(barrier(0.0), ClassicalParticle(2.0)) == 1.0
        assert retardation_distance(barrier(0.0), ClassicalParticle(2.0)) == 0.0

    def test_reference_barrier(self):
        t = traversal_time(barrier(1.0), ClassicalParticle(2.0))
        assert abs(t - 2 * (2 - math.sqrt(2))) < 1e-12
        delta = retardation_distance(barrier(1.0), ClassicalParticle(2.0))
        assert abs(delta - 2 * (2 * (2 - math.sqrt(2)) - 1)) < 1e-12
        assert abs(delta - 0.343146) < 1e-6

    def test_well_gives_advance(self):
        delta = retardation_distance(barrier(-1.0), ClassicalParticle(2.0))
        assert delta < 0
        t = traversal_time(barrier(-1.0), ClassicalParticle(2.0))
        assert abs(t - 2 * (math.sqrt(6) - 2)) < 1e-12

    def test_threshold_is_rejected(self):
        with pytest.raises(DoesNotPass):
            traversal_time(barrier(1.0), ClassicalParticle(1.0))

    def test_sign_law_random(self):
        rng = np.random.default_rng(17)
        for _ in range(60):
            f0 = float(rng.uniform(-3, 3))
            w = float(rng.uniform(0.5, 4.0))
            m = float(rng.uniform(0.5, 3.0))
            v0 = float(rng.uniform(0.3, 4.0))
            b = barrier(f0, w=w, mass=m)
            if f0 > 0 and v0 ** 2 <= f0 * w / m:
                with pytest.raises(DoesNotPass):
                    traversal_time(b, ClassicalParticle(v0))
                continue
            delta = retardation_distance(b, ClassicalParticle(v0))
            assert np.sign(delta) == np.sign(f0)

    def test_dimensionless_collapse(self):
        # Delta/w depends only on F0*w/(m*v0^2).
        triples = [(2.0, 1.0, 2.0, 1.0), (4.0, 2.0, 4.0, 1.0), (2.0, 1.0, 4.0, 2.0)]
        ratios = []
        for v0, w, f0, m in triples:
            assert abs(f0 * w / (m * v0 ** 2) - 0.5) < 1e-12
            b = ClassicalBarrier(x0=0.0, w=w, f0=f0, mass=m)
            ratios.append(retardation_distance(b, ClassicalParticle(v0)) / w)
        assert abs(ratios[0] - ratios[1]) < 1e-9
        assert abs(ratios[0] - ratios[2]) < 1e-9


class TestOracle:
    def test_free_motion_uniform(self):
        traj = integrate_oracle(barrier(0.0), ClassicalParticle(2.0), 1e-3)
        ts, xs = traj[:, 0], traj[:, 1]
        assert np.max(np.abs(xs - (xs[0] + 2.0 * ts))) < 1e-12

    def test_matches_closed_form(self):
        for f0 in (1.0, -1.0):
            b = barrier(f0)
            p = ClassicalParticle(2.0)
            traj = integrate_oracle(b, p, 1e-5)
            t_oracle = oracle_traversal_time(traj, b)
            assert abs(t_oracle - traversal_time(b, p)) < 1e-6

    def test_energy_conservation(self):
        b = barrier(1.0)
        p = ClassicalParticle(2.0)
        traj = integrate_oracle(b, p, 1e-5)
        e0 = 0.5 * b.mass * p.v0 ** 2
        for t, x, v in traj[:: len(traj) // 200 + 1]:
            e = 0.5 * b.mass * v ** 2 + b.potential(x)
            assert abs(e - e0) < 1e-8

    def test_exit_speed_random(self):
        rng = np.random.default_rng(29)
        for _ in range(10):
            f0 = float(rng.uniform(-2, 2))
            w = float(rng.uniform(0.5, 3.0))
            v0 = float(rng.uniform(0.5, 3.0))
            b = barrier(f0, w=w)
            if f0 > 0 and v0 ** 2 <= f0 * w:
                continue
            traj = integrate_oracle(b, ClassicalParticle(v0), w / (150.0 * v0))
            assert abs(traj[-1, 2] - v0) < 1e-8

    def test_step_too_large(self):
        with pytest.raises(StepTooLarge):
            integrate_oracle(barrier(1.0), ClassicalParticle(2.0), 0.05)

    def test_reflection_detected(self):
        with pytest.raises(DoesNotPass):
            integrate_oracle(barrier(5.0), ClassicalParticle(1.0), 1e-4)


class TestValidation:
    def test_bad_barrier(self):
        with pytest.raises(InvariantError):
            ClassicalBarrier(x0=0.0, w=-1.0, f0=1.0, mass=1.0)
        with pytest.raises(InvariantError):
            ClassicalBarrier(x0=0.0, w=1.0, f0=1.0, mass=0.0)

    def test_bad_particle(self):
        with pytest.raises(InvariantError):
            ClassicalParticle(0.0)

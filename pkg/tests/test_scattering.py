import numpy as np
import pytest

from deltalab.errors import (
    EmptyScattererSet,
    InvariantError,
    WavenumberTooSmall,
)
from deltalab.scattering import (
    DeltaScatterer,
    ScattererSet,
    assemble_system,
    eval_eigenfunction,
    extract_rt,
    solve_coefficients,
)


def single(alpha=2.0, x0=0.0, coupling=1.0):
    return ScattererSet((DeltaScatterer(x0, alpha),), coupling)


def random_set(rng, n=None):
    n = n or int(rng.integers(1, 9))
    pos = np.sort(rng.uniform(-5, 5, size=n))
    while np.any(np.diff(pos) < 1e-6):
        pos = np.sort(rng.uniform(-5, 5, size=n))
    alphas = rng.uniform(-5, 5, size=n)
    return ScattererSet(
        tuple(DeltaScatterer(float(x), float(a)) for x, a in zip(pos, alphas)), 1.0
    )


class TestScattererSet:
    def test_sorted_on_construction(self):
        s = ScattererSet(
            (DeltaScatterer(3.0, 1.0), DeltaScatterer(-1.0, 2.0)), 1.0
        )
        assert list(s.positions) == [-1.0, 3.0]
        assert s.span == 4.0
        assert s.mean_spacing == 4.0

    def test_coincident_positions_rejected(self):
        with pytest.raises(InvariantError):
            ScattererSet((DeltaScatterer(0.0, 1.0), DeltaScatterer(0.0, 2.0)), 1.0)

    def test_negative_coupling_rejected(self):
        with pytest.raises(InvariantError):
            ScattererSet((DeltaScatterer(0.0, 1.0),), -0.5)

    def test_effective_strengths_scaled(self):
        s = single(alpha=2.0, coupling=0.25)
        assert s.effective_strengths[0] == 0.5


class TestAssembleSystem:
    def test_single_delta_hand_algebra(self):
        m, rhs = assemble_system(single(), 1.0)
        assert m.shape == (1, 1)
        assert abs(m[0, 0] - (2j - 2)) < 1e-14
        assert abs(rhs[0] - 2.0) < 1e-14

    def test_zero_coupling_zero_rhs(self):
        s = ScattererSet(
            (DeltaScatterer(0.0, 2.0), DeltaScatterer(1.0, -1.0)), 0.0
        )
        m, rhs = assemble_system(s, 1.5)
        assert np.all(rhs == 0)
        assert np.allclose(np.diag(m), 2j * 1.5)

    def test_two_delta_entries(self):
        s = ScattererSet(
            (DeltaScatterer(0.0, 1.0), DeltaScatterer(1.0, 1.0)), 1.0
        )
        m, _ = assemble_system(s, 2.0)
        assert abs(m[0, 1] + np.exp(2j)) < 1e-14
        assert abs(m[1, 0] + np.exp(2j)) < 1e-14
        assert abs(m[0, 0] - (4j - 1)) < 1e-14

    def test_small_k_rejected(self):
        with pytest.raises(WavenumberTooSmall):
            assemble_system(single(), 1e-7)

    def test_empty_set_rejected(self):
        with pytest.raises(EmptyScattererSet):
            assemble_system(ScattererSet((), 1.0), 1.0)


class TestSolveAndRT:
    def test_single_delta_analytic(self):
        sol = solve_coefficients(single(), 1.0)
        assert abs(sol.coefs[0] - (-0.5 - 0.5j)) < 1e-12
        assert abs(sol.reflection - (-0.5 - 0.5j)) < 1e-12
        assert abs(sol.transmission - (0.5 - 0.5j)) < 1e-12

    def test_single_well_analytic(self):
        # alpha < 0: coef = alpha / (2ik - alpha) = -2 / (2i + 2)
        sol = solve_coefficients(single(alpha=-2.0), 1.0)
        assert abs(sol.coefs[0] - (-2 / (2j + 2))) < 1e-12
        r2t2 = abs(sol.reflection) ** 2 + abs(sol.transmission) ** 2
        assert abs(r2t2 - 1.0) < 1e-10

    def test_zero_coupling_free_limit(self):
        s = ScattererSet(
            (DeltaScatterer(-1.0, 3.0), DeltaScatterer(2.0, -1.0)), 0.0
        )
        sol = solve_coefficients(s, 1.0)
        assert np.all(sol.coefs == 0)
        assert sol.reflection == 0
        assert sol.transmission == 1

    def test_high_k_transmission(self):
        sol = solve_coefficients(single(), 10.0)
        assert abs(abs(sol.transmission) ** 2 - 400.0 / 404.0) < 1e-12

    def test_flux_conservation_random(self):
        rng = np.random.default_rng(42)
        for _ in range(120):
            s = random_set(rng)
            k = float(rng.uniform(0.2, 10.0)) * (1 if rng.random() < 0.5 else -1)
            sol = solve_coefficients(s, k)
            flux = abs(sol.reflection) ** 2 + abs(sol.transmission) ** 2
            assert abs(flux - 1.0) < 1e-8

    def test_residual_contract_random(self):
        rng = np.random.default_rng(3)
        for _ in range(60):
            s = random_set(rng)
            k = float(rng.uniform(0.2, 10.0))
            sol = solve_coefficients(s, k)
            m, rhs = assemble_system(s, k)
            res = np.max(np.abs(m @ sol.coefs - rhs))
            assert res <= 1e-10 * (1 + np.max(np.abs(rhs)))
            assert sol.residual <= 1e-10 * (1 + np.max(np.abs(rhs)))

    def test_mirror_symmetry(self):
        rng = np.random.default_rng(5)
        for _ in range(20):
            s = random_set(rng, n=4)
            mirrored = ScattererSet(
                tuple(
                    DeltaScatterer(-sc.position, sc.strength)
                    for sc in s.scatterers
                ),
                s.coupling_scale,
            )
            k = float(rng.uniform(0.3, 6.0))
            a = solve_coefficients(s, k)
            b = solve_coefficients(mirrored, -k)
            assert abs(abs(a.reflection) - abs(b.reflection)) < 1e-10
            assert abs(abs(a.transmission) - abs(b.transmission)) < 1e-10

    def test_linearity_in_coupling(self):
        base = ScattererSet(
            (DeltaScatterer(-1.0, 2.0), DeltaScatterer(1.5, -1.0)), 1.0
        )

        def coefs_at(eps):
            import dataclasses

            s = dataclasses.replace(base, coupling_scale=eps)
            return solve_coefficients(s, 1.3).coefs

        def deviation(eps):
            return np.max(np.abs(coefs_at(eps) / eps - coefs_at(2 * eps) / (2 * eps)))

        d1 = deviation(1e-3)
        d2 = deviation(5e-4)
        assert d2 < d1
        assert abs(d2 / d1 - 0.5) < 0.2

    def test_extract_rt_dimension_mismatch(self):
        with pytest.raises(InvariantError):
            extract_rt(single(), np.zeros(3, dtype=complex), 1.0)


class TestEigenfunction:
    def test_zero_coupling_plane_wave(self):
        s = single(coupling=0.0)
        sol = solve_coefficients(s, 1.7)
        xs = np.linspace(-5, 5, 41)
        assert np.allclose(
            eval_eigenfunction(s, sol, xs), np.exp(1.7j * xs), atol=1e-14
        )

    def test_transmitted_asymptotics(self):
        s = single()
        sol = solve_coefficients(s, 1.0)
        val = eval_eigenfunction(s, sol, 5.0)
        assert abs(val - sol.transmission * np.exp(5j)) < 1e-12

    def test_incident_side_asymptotics(self):
        s = single()
        sol = solve_coefficients(s, 1.0)
        x = -5.0
        expected = np.exp(1j * x) + sol.reflection * np.exp(-1j * x)
        assert abs(eval_eigenfunction(s, sol, x) - expected) < 1e-12

    def test_continuity_at_centers(self):
        rng = np.random.default_rng(9)
        for _ in range(10):
            s = random_set(rng, n=3)
            sol = solve_coefficients(s, float(rng.uniform(0.5, 5.0)))
            for xa in s.positions:
                lo = eval_eigenfunction(s, sol, xa - 1e-9)
                hi = eval_eigenfunction(s, sol, xa + 1e-9)
                assert abs(hi - lo) < 1e-6

    def test_ode_residual_away_from_centers(self):
        rng = np.random.default_rng(21)
        h = 1e-3
        for _ in range(25):
            s = random_set(rng)
            k = float(rng.uniform(0.2, 10.0))
            sol = solve_coefficients(s, k)
            for _ in range(12):
                x = float(rng.uniform(-8, 8))
                if np.min(np.abs(x - s.positions)) < 0.1:
                    continue
                psi = eval_eigenfunction(s, sol, np.array([x - h, x, x + h]))
                second = (psi[0] - 2 * psi[1] + psi[2]) / h ** 2
                rel = abs(-second - k ** 2 * psi[1]) / (k ** 2 * abs(psi[1]))
                assert rel < 1e-4

    def test_jump_condition_at_centers(self):
        rng = np.random.default_rng(22)
        h = 1e-6
        for _ in range(25):
            s = random_set(rng)
            alphas = s.effective_strengths
            if np.any(np.abs(alphas) < 0.3):
                continue
            k = float(rng.uniform(0.3, 5.0))
            sol = solve_coefficients(s, k)
            for xa, alpha in zip(s.positions, alphas):
                psi0 = eval_eigenfunction(s, sol, xa)
                dplus = (eval_eigenfunction(s, sol, xa + h) - psi0) / h
                dminus = (psi0 - eval_eigenfunction(s, sol, xa - h)) / h
                jump = dplus - dminus
                rel = abs(jump - alpha * psi0) / abs(alpha * psi0)
                assert rel < 1e-4

"""Tests for the descent-path geometry: level lines, Jacobians, classification."""

from __future__ import annotations

import math

import numpy as np
import pytest

from scorerlib.contour import (
    DomainError,
    PhaseParts,
    gi_jacobian_u,
    gi_path_v_of_u,
    gi_phase_parts,
    hi_branch_point,
    hi_jacobian_u,
    hi_jacobian_v,
    hi_path_spec,
    hi_path_u_of_v,
    hi_path_v_of_u,
    hi_phase_parts,
    hi_saddle,
    stokes_path,
)

_SQRT3 = math.sqrt(3.0)


def _osc_scale(u, v, x, y):
    # Natural size of the individual phase terms; residuals are compared
    # against it so huge |z| does not mask genuine path errors.
    return np.abs(u) ** 3 / 3.0 + np.abs(x * u) + np.abs(y * v) + 1.0


def _seeded_hi_points(n):
    rng = np.random.default_rng(314159)
    out = []
    for _ in range(n):
        ph = rng.uniform(2.0 * math.pi / 3.0 + 0.02, math.pi)
        r = rng.uniform(0.3, 30.0)
        out.append((r * math.cos(ph), r * math.sin(ph)))
    return out


def _seeded_gi_points(n):
    rng = np.random.default_rng(271828)
    out = []
    for _ in range(n):
        ph = rng.uniform(0.0, 2.0 * math.pi / 3.0 - 0.02)
        r = rng.uniform(0.3, 30.0)
        out.append((r * math.cos(ph), r * math.sin(ph)))
    return out


class TestGrowingKernelPath:
    @pytest.mark.parametrize("x,y", _seeded_hi_points(12))
    def test_oscillation_vanishes_along_path(self, x, y):
        u = np.linspace(0.0, 8.0, 81)
        v = hi_path_v_of_u(u, x, y)
        parts = hi_phase_parts(u, v, x, y)
        residual = np.abs(parts.oscillation) / _osc_scale(u, v, x, y)
        assert float(residual.max()) < 1e-12

    @pytest.mark.parametrize("x,y", _seeded_hi_points(8))
    def test_decay_increases_monotonically(self, x, y):
        u = np.linspace(0.0, 10.0, 201)
        v = hi_path_v_of_u(u, x, y)
        decay = np.asarray(hi_phase_parts(u, v, x, y).decay)
        assert decay[0] == 0.0
        assert np.all(np.diff(decay) > 0.0)

    def test_path_starts_at_origin(self):
        v0 = hi_path_v_of_u(np.array([0.0]), -2.0, 1.0)
        assert float(v0[0]) == 0.0

    @pytest.mark.parametrize("x,y", _seeded_hi_points(6))
    def test_jacobian_matches_finite_differences(self, x, y):
        for u in (0.25, 0.7, 1.6, 3.0, 6.0):
            du = 1e-6 * max(u, 1.0)
            grid = np.array([u - du, u, u + du])
            v = hi_path_v_of_u(grid, x, y)
            fd = 1.0 + 1j * (float(v[2]) - float(v[0])) / (2.0 * du)
            jac = complex(np.asarray(hi_jacobian_u(u, float(v[1]), x, y)))
            assert abs(jac - fd) / max(abs(jac), 1.0) < 1e-8

    def test_rejects_wrong_sector(self):
        with pytest.raises(DomainError, match="x < 0"):
            hi_path_v_of_u(1.0, 2.0, 1.0)
        with pytest.raises(DomainError, match="conjugation"):
            hi_path_v_of_u(1.0, -2.0, -1.0)
        with pytest.raises(DomainError, match="Stokes"):
            hi_path_v_of_u(1.0, -1.0, 5.0)
        with pytest.raises(DomainError, match="u >= 0"):
            hi_path_v_of_u(-0.5, -2.0, 1.0)


class TestFoldedPath:
    @pytest.mark.parametrize("x,y", [(-3.0, 1.0), (-8.0, 2.5), (-1.5, 0.4), (-20.0, 9.0)])
    def test_branches_satisfy_level_condition(self, x, y):
        v1, u1 = hi_branch_point(x, y)
        v = np.linspace(0.0, v1, 41)[1:-1]
        for branch in ("near", "far"):
            u = hi_path_u_of_v(v, x, y, branch=branch)
            parts = hi_phase_parts(u, v, x, y)
            residual = np.abs(parts.oscillation) / _osc_scale(u, v, x, y)
            assert float(residual.max()) < 1e-12

    @pytest.mark.parametrize("x,y", [(-3.0, 1.0), (-8.0, 2.5), (-20.0, 9.0)])
    def test_branches_meet_at_fold_point(self, x, y):
        v1, u1 = hi_branch_point(x, y)
        near = float(np.asarray(hi_path_u_of_v(v1, x, y, branch="near")))
        far = float(np.asarray(hi_path_u_of_v(v1, x, y, branch="far")))
        assert abs(near - u1) < 1e-7 * max(u1, 1.0)
        assert abs(far - u1) < 1e-7 * max(u1, 1.0)

    def test_fold_point_sits_on_level_line(self):
        x, y = -5.0, 2.0
        v1, u1 = hi_branch_point(x, y)
        parts = hi_phase_parts(u1, v1, x, y)
        assert abs(float(np.asarray(parts.oscillation))) < 1e-12 * _osc_scale(u1, v1, x, y)

    def test_jacobian_v_matches_finite_differences(self):
        x, y = -4.0, 1.2
        v1, _ = hi_branch_point(x, y)
        for frac in (0.2, 0.5, 0.8):
            v = frac * v1
            dv = 1e-7 * max(v, 1.0)
            u = [
                float(np.asarray(hi_path_u_of_v(w, x, y, branch="near")))
                for w in (v - dv, v, v + dv)
            ]
            fd = (u[2] - u[0]) / (2.0 * dv) + 1j
            jac = complex(np.asarray(hi_jacobian_v(u[1], v, x, y)))
            assert abs(jac - fd) / max(abs(jac), 1.0) < 1e-7

    def test_rejects_height_above_fold(self):
        x, y = -3.0, 1.0
        v1, _ = hi_branch_point(x, y)
        with pytest.raises(DomainError, match="fold"):
            hi_path_u_of_v(1.01 * v1, x, y)

    def test_rejects_unknown_branch(self):
        with pytest.raises(ValueError, match="branch"):
            hi_path_u_of_v(0.1, -3.0, 1.0, branch="middle")

    def test_rejects_wrong_sector(self):
        with pytest.raises(DomainError):
            hi_branch_point(1.0, 1.0)
        with pytest.raises(DomainError, match="y > 0"):
            hi_branch_point(-3.0, 0.0)


class TestStokesRayPath:
    @pytest.mark.parametrize("x", [-0.5, -2.0, -50.0])
    def test_oscillation_vanishes_on_both_segments(self, x):
        u0 = math.sqrt(-x / 2.0)
        u = np.concatenate(
            [np.linspace(0.0, u0, 30), np.linspace(u0, u0 + 8.0, 40)]
        )
        v, _ = stokes_path(u, x)
        y = -_SQRT3 * x  # phase of z exactly 2*pi/3
        parts = hi_phase_parts(u, v, x, y)
        residual = np.abs(parts.oscillation) / _osc_scale(u, v, x, y)
        assert float(residual.max()) < 1e-11

    def test_straight_segment_has_exact_slope(self):
        x = -2.0
        u0 = math.sqrt(-x / 2.0)
        u = np.linspace(0.0, 0.999 * u0, 20)
        v, dv = stokes_path(u, x)
        assert np.all(dv == _SQRT3)
        assert np.allclose(v, _SQRT3 * u, rtol=0.0, atol=0.0)

    def test_corner_is_continuous_and_slope_jumps(self):
        x = -2.0
        u0 = math.sqrt(-x / 2.0)
        eps = 1e-9
        v_lo, dv_lo = stokes_path(np.array([u0 - eps]), x)
        v_hi, dv_hi = stokes_path(np.array([u0 + eps]), x)
        assert abs(float(v_hi[0]) - float(v_lo[0])) < 1e-8
        assert float(dv_lo[0]) == _SQRT3
        assert abs(float(dv_hi[0]) - (-1.0 / _SQRT3)) < 1e-7

    def test_height_decays_beyond_corner(self):
        x = -2.0
        u0 = math.sqrt(-x / 2.0)
        u = np.linspace(u0, u0 + 20.0, 100)
        v, dv = stokes_path(u, x)
        assert np.all(np.diff(v) < 0.0)
        assert np.all(dv[1:] < 0.0)

    def test_saddle_sits_at_the_corner(self):
        x = -2.0
        u0 = math.sqrt(-x / 2.0)
        v0, _ = stokes_path(np.array([u0]), x)
        z = complex(x, -_SQRT3 * x)
        saddle = hi_saddle(z)
        assert abs(complex(u0, float(v0[0])) - saddle) < 1e-12

    def test_rejects_nonnegative_x(self):
        with pytest.raises(DomainError):
            stokes_path(1.0, 0.5)
        with pytest.raises(DomainError, match="u >= 0"):
            stokes_path(-1.0, -0.5)


class TestOscillatoryKernelPath:
    @pytest.mark.parametrize("x,y", _seeded_gi_points(12))
    def test_oscillation_vanishes_along_path(self, x, y):
        u = np.linspace(0.0, 8.0, 81)
        v = gi_path_v_of_u(u, x, y)
        parts = gi_phase_parts(u, v, x, y)
        residual = np.abs(parts.oscillation) / _osc_scale(u, v, x, y)
        assert float(residual.max()) < 1e-12

    @pytest.mark.parametrize("x,y", _seeded_gi_points(8))
    def test_decay_increases_monotonically(self, x, y):
        if y == 0.0:
            y = 1e-12
        u = np.linspace(0.0, 10.0, 201)
        v = gi_path_v_of_u(u, x, y)
        decay = np.asarray(gi_phase_parts(u, v, x, y).decay)
        assert np.all(np.diff(decay) > 0.0)

    def test_stable_on_the_positive_real_axis(self):
        # y = 0 makes the naive form 0/0; the rationalized form must return
        # the correct limit path v = 0 for u**2 <= -3x (here all u).
        u = np.linspace(0.0, 5.0, 21)
        v = gi_path_v_of_u(u, 2.0, 0.0)
        assert np.all(np.isfinite(v))
        assert float(np.abs(np.asarray(gi_phase_parts(u, v, 2.0, 0.0).oscillation) /
                            _osc_scale(u, v, 2.0, 0.0)).max()) < 1e-12

    @pytest.mark.parametrize("x,y", _seeded_gi_points(6))
    def test_jacobian_matches_finite_differences(self, x, y):
        for u in (0.25, 0.7, 1.6, 3.0, 6.0):
            du = 1e-6 * max(u, 1.0)
            grid = np.array([u - du, u, u + du])
            v = gi_path_v_of_u(grid, x, y)
            fd = 1.0 + 1j * (float(v[2]) - float(v[0])) / (2.0 * du)
            jac = complex(np.asarray(gi_jacobian_u(u, float(v[1]), x, y)))
            assert abs(jac - fd) / max(abs(jac), 1.0) < 1e-8

    def test_rejects_wrong_sector(self):
        with pytest.raises(DomainError, match="conjugation"):
            gi_path_v_of_u(1.0, 1.0, -0.5)
        with pytest.raises(DomainError):
            gi_path_v_of_u(1.0, -3.0, 1.0)
        with pytest.raises(DomainError, match="u >= 0"):
            gi_path_v_of_u(-1.0, 1.0, 1.0)


class TestJacobianSingularities:
    def test_growing_kernel_jacobian_rejects_saddle(self):
        # v**2 - u**2 + x = 0 is the saddle of the exponent.
        with pytest.raises(DomainError, match="saddle"):
            hi_jacobian_u(1.0, 1.0, 0.0, 1.0)

    def test_parameter_swap_jacobian_rejects_its_singularity(self):
        with pytest.raises(DomainError):
            hi_jacobian_v(1.0, 0.5, -3.0, 1.0)

    def test_oscillatory_jacobian_rejects_its_singularity(self):
        with pytest.raises(DomainError):
            gi_jacobian_u(1.0, -0.5, 1.0, 1.0)


class TestPathClassification:
    def test_interior_point(self):
        spec = hi_path_spec(complex(-2.0, 1.0))
        assert spec.kind == "interior"
        assert spec.corner_u is None
        assert (spec.x, spec.y) == (-2.0, 1.0)

    def test_negative_axis_point(self):
        spec = hi_path_spec(complex(-3.0, 0.0))
        assert spec.kind == "real_axis"
        assert spec.y == 0.0

    def test_stokes_ray_point(self):
        z = 4.0 * complex(math.cos(2.0 * math.pi / 3.0), math.sin(2.0 * math.pi / 3.0))
        spec = hi_path_spec(z)
        assert spec.kind == "stokes"
        assert spec.corner_u is not None
        assert math.isclose(spec.corner_u, math.sqrt(-z.real / 2.0), rel_tol=1e-12)

    def test_lower_half_plane_is_folded_up(self):
        spec = hi_path_spec(complex(-2.0, -1.0))
        assert spec.y == 1.0

    def test_rejects_phase_outside_principal_range(self):
        with pytest.raises(DomainError):
            hi_path_spec(complex(1.0, 1.0))
        with pytest.raises(DomainError):
            hi_path_spec(0j)

    def test_phase_tolerance_widens_stokes_ray(self):
        z = 4.0 * complex(
            math.cos(2.0 * math.pi / 3.0 + 1e-6), math.sin(2.0 * math.pi / 3.0 + 1e-6)
        )
        assert hi_path_spec(z).kind == "interior"
        assert hi_path_spec(z, phase_tol=1e-5).kind == "stokes"


class TestPhaseParts:
    def test_dataclass_is_frozen(self):
        parts = PhaseParts(1.0, 2.0)
        with pytest.raises(AttributeError):
            parts.decay = 3.0

    def test_growing_kernel_exponent_reconstruction(self):
        # exp(z t - t**3/3) must equal exp(-decay - i*oscillation).
        z = complex(-1.3, 0.7)
        t = complex(0.8, 0.5)
        parts = hi_phase_parts(t.real, t.imag, z.real, z.imag)
        direct = z * t - t**3 / 3.0
        assert abs(direct - complex(-parts.decay, -parts.oscillation)) < 1e-14

    def test_oscillatory_kernel_exponent_reconstruction(self):
        # exp(i(z t + t**3/3)) must equal exp(-decay + i*oscillation).
        z = complex(0.9, 1.1)
        t = complex(0.6, 0.4)
        parts = gi_phase_parts(t.real, t.imag, z.real, z.imag)
        direct = 1j * (z * t + t**3 / 3.0)
        assert abs(direct - complex(-parts.decay, parts.oscillation)) < 1e-14

    def test_saddle_is_square_root(self):
        z = complex(-3.0, 4.0)
        s = hi_saddle(z)
        assert abs(s * s - z) < 1e-14

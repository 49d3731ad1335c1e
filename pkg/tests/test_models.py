"""Tests for the model catalog: closed-form constants, pointwise identities,
and normalization sweeps against quadrature."""

import math

import numpy as np
import pytest

from nse import models
from nse.errors import DomainError

# numeric normalization of the softened-delta state at a=1, b0=1, pinned
# from a high-precision quadrature run before the build
SOFTDELTA_C0_A1_B1 = 0.6955600441461883

DEFAULTS = [
    models.Gausson(omega=1.0, N=1),
    models.Gausson(omega=1.0, N=2),
    models.Gausson(omega=1.0, N=3),
    models.TrappedGausson(omega1=2 ** -0.5, omega2=2 ** -0.5),
    models.Cosh1D(a=1.0),
    models.CoshND(a=1.0, N=1),
    models.CoshND(a=1.0, N=2),
    models.CoshND(a=1.0, N=3),
    models.PowerLaw(a=1.0, lam=0.5),
    models.PowerLaw(a=1.0, lam=1.0),
    models.PowerLaw(a=1.0, lam=2.0),
    models.TanSquared(L=1.0, beta=2.0),
    models.SoftenedDelta(a=1.0, b0=1.0),
    models.Coulomb(aB=1.0),
]


def _identity_grid(spec):
    gs = spec.ground_state()
    scale = gs.length_scale
    if isinstance(spec, models.TanSquared):
        return np.linspace(1e-4, spec.half_width * (1.0 - 1e-9), 1000)
    if isinstance(spec, models.Coulomb):
        return np.linspace(1e-3 * scale, 8.0 * scale, 1000)
    if spec.dim >= 2:
        return np.linspace(1e-3 * scale, 6.0 * scale, 1000)
    return np.linspace(1e-3 * scale, 8.0 * scale, 1000)


class TestPotential:
    def test_cosh1d_depth_is_twice_ground_energy(self):
        spec = models.Cosh1D(a=1.0)
        gs = spec.ground_state()
        assert math.isclose(models.potential(spec, 0.0), 2.0 * gs.energy, rel_tol=1e-14)

    def test_tan2_center_and_wall(self):
        spec = models.TanSquared(L=1.0, beta=2.0)
        assert models.potential(spec, 0.0) == 0.0
        assert models.potential(spec, spec.half_width) == math.inf
        assert models.potential(spec, 10.0) == math.inf

    def test_softened_delta_minimum(self):
        for a, b0 in [(1.0, 1.0), (2.0, 0.5), (1.0, 1e-3)]:
            spec = models.SoftenedDelta(a=a, b0=b0)
            e0 = abs(spec.ground_state().energy)
            expected = -(a / b0 + 1.0) * e0
            assert math.isclose(models.potential(spec, 0.0), expected, rel_tol=1e-12)

    def test_coulomb_singularity(self):
        spec = models.Coulomb(aB=1.0)
        with pytest.raises(DomainError):
            models.potential(spec, 0.0)
        assert models.potential(spec, 1.0) == -1.0

    def test_harmonic(self):
        spec = models.Gausson(omega=2.0, N=3)
        assert math.isclose(models.potential(spec, 1.5), 0.5 * 4.0 * 1.5 ** 2, rel_tol=1e-14)


class TestGroundState:
    def test_cosh1d_constants(self):
        gs = models.Cosh1D(a=2.0).ground_state()
        assert math.isclose(gs.norm_const, 0.5, rel_tol=1e-14)
        assert math.isclose(gs.energy, -1.0 / 8.0, rel_tol=1e-14)

    def test_gausson_energy(self):
        gs = models.Gausson(omega=1.0, N=3).ground_state()
        assert math.isclose(gs.energy, 1.5, rel_tol=1e-14)

    def test_coshnd_n2_norm(self):
        for a in (0.5, 1.0, 2.0):
            gs = models.CoshND(a=a, N=2).ground_state()
            assert math.isclose(
                gs.norm_const, 1.0 / (a * math.sqrt(2.0 * math.pi * math.log(2.0))),
                rel_tol=1e-14,
            )

    def test_coshnd_reduces_to_cosh1d(self):
        one = models.CoshND(a=1.3, N=1).ground_state()
        ref = models.Cosh1D(a=1.3).ground_state()
        assert math.isclose(one.norm_const, ref.norm_const, rel_tol=1e-14)
        assert math.isclose(one.energy, ref.energy, rel_tol=1e-14)

    def test_softened_delta_numeric_norm_pinned(self):
        gs = models.SoftenedDelta(a=1.0, b0=1.0).ground_state()
        assert math.isclose(gs.norm_const, SOFTDELTA_C0_A1_B1, rel_tol=1e-10)

    def test_softened_delta_cusp_limit_norm(self):
        gs = models.SoftenedDelta(a=4.0, b0=0.0).ground_state()
        assert math.isclose(gs.norm_const, 0.5, rel_tol=1e-14)

    @pytest.mark.parametrize("spec", DEFAULTS, ids=lambda s: f"{s.name}-{s.dim}d")
    def test_profile_normalized_and_decreasing(self, spec):
        gs = spec.ground_state()
        assert gs.profile(0.0) == pytest.approx(1.0, abs=1e-14)
        r = _identity_grid(spec)
        vals = gs.profile(r)
        assert np.all(vals >= 0.0) and np.all(vals <= 1.0)
        assert np.all(np.diff(vals) < 0.0)

    @pytest.mark.parametrize("spec", DEFAULTS, ids=lambda s: f"{s.name}-{s.dim}d")
    def test_profile_deriv_consistent(self, spec):
        gs = spec.ground_state()
        r = np.linspace(0.3, 2.0, 7) * gs.length_scale
        if gs.half_width is not None:
            r = np.linspace(0.1, 0.8, 7) * gs.half_width
        h = 1e-6 * gs.length_scale
        fd = (gs.profile(r + h) - gs.profile(r - h)) / (2.0 * h)
        assert np.allclose(gs.profile_deriv(r), fd, rtol=1e-7, atol=1e-9)


class TestNonlinearity:
    def test_gausson_shape(self):
        nl = models.Gausson(omega=1.0, N=3).nonlinearity()
        assert nl.shape(1.0) == 0.0
        # phi*G(phi) peaks at phi = 1/e
        phi = np.linspace(1e-3, 1.0, 100001)
        prod = phi * nl.shape(phi)
        assert abs(phi[np.argmax(prod)] - 1.0 / math.e) < 1e-4
        assert math.isclose(nl.scale, 0.5, rel_tol=1e-14)

    def test_coulomb_point_value(self):
        nl = models.Coulomb(aB=1.0).nonlinearity()
        assert math.isclose(nl.shape(math.exp(-0.5)), -1.0, rel_tol=1e-12)

    @pytest.mark.parametrize("N", [2, 3, 5])
    def test_coshnd_limit_at_one(self, N):
        nl = models.CoshND(a=1.0, N=N).nonlinearity()
        assert math.isclose(nl.shape(1.0), -(N + 1) / 2.0, rel_tol=1e-12)
        # near-edge evaluation stays finite and close to the limit
        val = nl.shape(1.0 - 1e-12)
        assert math.isclose(val, -(N + 1) / 2.0, rel_tol=1e-9)

    def test_tan2_shape(self):
        nl = models.TanSquared(L=1.0, beta=2.0).nonlinearity()
        assert math.isclose(nl.shape(0.5), 2.0, rel_tol=1e-14)
        assert nl.shape(1.0) == 0.0

    def test_domain_guard(self):
        nl = models.Cosh1D(a=1.0).nonlinearity()
        with pytest.raises(DomainError):
            nl.shape(1.5)
        with pytest.raises(DomainError):
            nl.shape(0.0)
        with pytest.raises(DomainError):
            nl.shape(-0.2)
        # raw shape admits transient amplitudes above the ground-state range
        assert nl.shape_raw(2.0) == -4.0

    def test_softened_delta_b0_zero_rejected(self):
        with pytest.raises(DomainError):
            models.SoftenedDelta(a=1.0, b0=0.0).nonlinearity()

    @pytest.mark.parametrize("spec", DEFAULTS, ids=lambda s: f"{s.name}-{s.dim}d")
    def test_pointwise_identity(self, spec):
        """A*G(phi0(r)) + U_ext(r) rebuilds U(r) over the support.

        Measured relative to max(|U|, |E0|): where the potential crosses zero
        the plain ratio would only amplify representation rounding of phi
        near 1.
        """
        gs = spec.ground_state()
        nl = spec.nonlinearity()
        r = _identity_grid(spec)
        lhs = nl.scale * nl.shape_raw(gs.profile(r)) + nl.u_ext(r)
        rhs = models.potential(spec, r)
        dev = np.abs(lhs - rhs) / np.maximum(np.abs(rhs), abs(gs.energy))
        assert np.max(dev) < 1e-10

    def test_power_law_lambda_one_matches_cosh1d(self):
        pl = models.PowerLaw(a=1.7, lam=1.0)
        c1 = models.Cosh1D(a=1.7)
        x = np.linspace(-5.0, 5.0, 301)
        assert np.allclose(pl.potential(x), c1.potential(x), rtol=1e-12)
        gp, gc = pl.ground_state(), c1.ground_state()
        assert math.isclose(gp.energy, gc.energy, rel_tol=1e-12)
        assert math.isclose(gp.norm_const, gc.norm_const, rel_tol=1e-12)
        np_, nc = pl.nonlinearity(), c1.nonlinearity()
        assert math.isclose(np_.scale, nc.scale, rel_tol=1e-12)
        phi = np.linspace(0.01, 1.0, 100)
        assert np.allclose(np_.shape(phi), nc.shape(phi), rtol=1e-12)

    def test_coshnd_n1_matches_cosh1d(self):
        nd = models.CoshND(a=0.8, N=1)
        c1 = models.Cosh1D(a=0.8)
        x = np.linspace(-4.0, 4.0, 101)
        assert np.allclose(nd.potential(x), c1.potential(x), rtol=1e-12)
        phi = np.linspace(0.01, 1.0, 100)
        assert np.allclose(
            nd.nonlinearity().shape(phi), c1.nonlinearity().shape(phi), rtol=1e-12
        )
        assert math.isclose(
            nd.nonlinearity().scale, c1.nonlinearity().scale, rel_tol=1e-14
        )


class TestNormalization:
    SWEEPS = {
        "gausson": [models.Gausson(omega=w, N=n) for w in (0.3, 1.0, 2.5) for n in (1, 3)],
        "trapped": [
            models.TrappedGausson(omega1=math.sqrt(f), omega2=math.sqrt(1 - f))
            for f in (0.1, 0.3, 0.5, 0.7, 0.9)
        ],
        "cosh1d": [models.Cosh1D(a=a) for a in (0.25, 0.5, 1.0, 2.0, 4.0)],
        "coshNd": [models.CoshND(a=a, N=n) for a in (0.5, 1.0, 2.0) for n in (2, 3)],
        "power-law": [models.PowerLaw(a=1.0, lam=l) for l in (0.3, 0.5, 1.0, 2.0, 5.0)],
        "tan2": [models.TanSquared(L=l, beta=b) for l in (0.5, 1.0) for b in (1.5, 2.0, 6.0)],
        "coulomb": [models.Coulomb(aB=a) for a in (0.25, 0.5, 1.0, 2.0, 4.0)],
    }

    @pytest.mark.parametrize(
        "spec",
        [s for sweep in SWEEPS.values() for s in sweep],
        ids=lambda s: f"{s.name}-{'-'.join(f'{v:g}' for k, v in sorted(vars(s).items()) if k != 'const')}",
    )
    def test_numeric_matches_analytic(self, spec):
        analytic = spec.ground_state().norm_const
        numeric = models.norm_constant_numeric(spec)
        assert abs(numeric - analytic) / analytic < 1e-8

    def test_cosh1d_value(self):
        assert math.isclose(
            models.norm_constant_numeric(models.Cosh1D(a=1.0)), 2 ** -0.5, rel_tol=1e-10
        )

    def test_coshnd_n3_value(self):
        # oracle: 4*pi*int r^2 sech^2 r dr = pi^3/3, so c0 = sqrt(3/pi^3)
        assert math.isclose(
            models.norm_constant_numeric(models.CoshND(a=1.0, N=3)),
            math.sqrt(3.0 / math.pi ** 3),
            rel_tol=1e-10,
        )

    def test_gausson_n1_value(self):
        spec = models.Gausson(omega=1.3, N=1)
        assert math.isclose(
            models.norm_constant_numeric(spec),
            (1.3 / math.pi) ** 0.25,
            rel_tol=1e-10,
        )


class TestSampleStationary:
    def test_phase_convention(self):
        from nse.evolve import ComplexField  # noqa: F401
        from nse.numerics import SpectralGrid

        spec = models.Cosh1D(a=1.0)
        grid = SpectralGrid(64, -8.0, 8.0)
        f0 = models.sample_stationary(spec, grid, t=0.0)
        assert np.all(f0.samples.imag == 0.0)
        assert np.all(f0.samples.real > 0.0)

        gs = spec.ground_state()
        t_pi = math.pi / abs(gs.energy)
        f1 = models.sample_stationary(spec, grid, t=t_pi)
        assert np.allclose(f1.samples, -f0.samples, rtol=1e-12, atol=1e-15)

    def test_amplitude_at_origin(self):
        from nse.numerics import SpectralGrid

        spec = models.Gausson(omega=1.0, N=1)
        grid = SpectralGrid(64, -8.0, 8.0)
        f = models.sample_stationary(spec, grid, t=0.3)
        gs = spec.ground_state()
        assert abs(np.max(np.abs(f.samples)) - gs.norm_const) < 1e-12

    def test_support_violation(self):
        from nse.evolve import BoxGrid

        spec = models.TanSquared(L=1.0, beta=2.0)
        with pytest.raises(DomainError):
            models.sample_stationary(spec, BoxGrid(64, 2.0), t=0.0)


class TestValidationAndFactory:
    def test_invalid_params(self):
        with pytest.raises(DomainError):
            models.Gausson(omega=-1.0)
        with pytest.raises(DomainError):
            models.TanSquared(L=1.0, beta=1.0)
        with pytest.raises(DomainError):
            models.PowerLaw(a=1.0, lam=0.0)
        with pytest.raises(DomainError):
            models.SoftenedDelta(a=0.0, b0=1.0)
        with pytest.raises(DomainError):
            models.PhysicalConstants(hbar=0.0)

    def test_from_params(self):
        spec = models.from_params("power-law", a=2.0, **{"lambda": 0.5})
        assert isinstance(spec, models.PowerLaw)
        assert spec.lam == 0.5
        spec = models.from_params("gausson", omega=2.0, N=2, hbar=2.0, mass=3.0)
        assert spec.const.hbar == 2.0 and spec.const.mass == 3.0
        with pytest.raises(DomainError):
            models.from_params("nope")

    def test_registry_covers_eight_families(self):
        assert len(models.FAMILIES) == 8
        assert set(models.PARAM_KEYS) == set(models.FAMILIES)

import math

import pytest

import ellipselaw as el


def test_version():
    assert el.__version__


def test_branch_sqrt_quadrants():
    assert el.branch_sqrt(-2 + 0j, 5.0) == pytest.approx(-3 + 0j)
    w = el.branch_sqrt(1 + 1j, 2.0)
    assert w * w == pytest.approx((1 + 1j) ** 2 + 2.0)
    with pytest.raises(ValueError):
        el.branch_sqrt(0.5j, 1.0)


def test_kernel_values():
    assert el.w_alpha(1 + 0j, 0.7) == pytest.approx(0.7)
    assert el.fourier_weight(1 + 0j, 0.5) == pytest.approx(0.5)
    assert el.fourier_weight(1 + 0.01j, 1.1) < 0.0
    assert el.regime(0.5) == el.Regime.ellipse
    assert el.regime(1.5) == el.Regime.wall


def test_potential_circle_law():
    disk = el.EllipseDomain(1.0, 1.0)
    assert el.potential(0j, disk, 0.0) == pytest.approx(0.5, abs=1e-15)
    assert el.grad_potential(0.3 + 0.1j, disk, 0.0) == pytest.approx(-0.3 - 0.1j)
    assert el.log_potential(2j, disk) == pytest.approx(-math.log(2.0))


def test_minimizer_and_constants():
    d = el.minimizer(0.5)
    assert d.regime == el.MinimizerRegime.ellipse
    assert d.ellipse.a == pytest.approx(math.sqrt(0.5))
    assert d.ellipse.b == pytest.approx(math.sqrt(1.5))
    assert el.minimizer(2.0).axis == 1j
    assert el.c_alpha(0.0) == pytest.approx(0.5, abs=1e-16)
    assert el.min_energy(0.0) == pytest.approx(0.375, abs=1e-16)
    assert el.ellipse_energy(d.ellipse, 0.5) == pytest.approx(el.min_energy(0.5), abs=1e-13)
    with pytest.raises(ValueError):
        el.c_alpha(1.0)


def test_swap_guard():
    wide = el.EllipseDomain(1.2, 0.8)
    with pytest.raises(ValueError):
        el.potential(1 + 1j, wide, 0.3)
    assert el.potential(1 + 1j, wide, 0.3, allow_swap=True) == pytest.approx(
        el.potential(1 + 1j, el.EllipseDomain(0.8, 1.2), -0.3) + 0.3
    )


def test_el_checks():
    r = el.check_el1(0.5, 51)
    assert r.max_abs_interior_residual < 1e-10
    assert r.max_abs_gradient_residual < 1e-10
    r2 = el.check_el2(0.5, 4.0, 81)
    assert r2.min_exterior_margin >= -1e-10
    c1 = el.check_c1(el.EllipseDomain(0.8, 1.2), 0.5, 32)
    assert c1.max_value_mismatch < 1e-10
    assert "max_value_mismatch" in c1.to_json()


def test_quadrature_oracle():
    disk = el.EllipseDomain(1.0, 1.0)
    r = el.conv_oracle(el.ConvKernel.log, 0j, disk, 0.0)
    assert r.converged
    assert r.value.real == pytest.approx(0.5, abs=1e-5)
    cfg = el.QuadratureConfig()
    cfg.mc_samples = 200_000
    cfg.rng_seed = 5
    est = el.energy_oracle(disk, 0.0, cfg)
    assert abs(est.value - 0.375) <= 3.0 * est.std_error


def test_reduce():
    r = el.reduce(el.GeneralAnisotropy(0.0, 0.0, 1.0))
    assert r.effective_strength == pytest.approx(1.0)
    assert r.predicted_regime == el.MinimizerRegime.semicircle
    assert r.rotation.det() == pytest.approx(1.0)
    l1, l2 = el.force_zero_lines(el.GeneralAnisotropy(0.0, 0.0, 1.0))
    assert l1.imag / l1.real == pytest.approx(-1.0)
    assert l2.imag / l2.real == pytest.approx(1.0)


def test_small_simulation_is_deterministic():
    cfg = el.SimConfig()
    cfg.n_particles = 40
    cfg.t_end = 1.0
    cfg.dt = 2e-3
    cfg.record_every = 100
    cfg.seed = 11
    cfg.interaction = el.GeneralAnisotropy(0.5, 0.0, 0.0)
    t1 = el.run(cfg)
    t2 = el.run(cfg)
    assert t1.final_state.positions == t2.final_state.positions
    assert t1.final_moments.m11 > 0.0
    assert t1.energy_trace[-1].energy <= t1.energy_trace[0].energy


def test_collision_error_is_exposed():
    ens = el.ParticleEnsemble()
    ens.positions = [0.1 + 0.1j, 0.1 + 0.1j, 1 + 0j]
    with pytest.raises(el.CollisionError):
        el.velocity_field(ens, el.GeneralAnisotropy())

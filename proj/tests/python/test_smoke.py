import math

import numpy as np
import pytest

import hsgeo


@pytest.fixture
def grid():
    return hsgeo.Grid.default_line()


def test_grid_and_sampling(grid):
    u = hsgeo.sample("gaussian:amp=0.5", grid)
    assert len(u) == grid.size == 2001
    x = grid.nodes()
    assert np.allclose(u.values, 0.5 * np.exp(-x**2), atol=1e-14)


def test_r_map_round_trip(grid):
    phi = hsgeo.Diffeo.from_displacement(hsgeo.sample("bump:amp=0.6", grid))
    gamma = hsgeo.r_map(phi)
    back = hsgeo.r_inverse(gamma)
    assert np.max(np.abs(back.f.values - phi.f.values)) < 1e-8
    assert abs(hsgeo.image_defect(gamma)) < 1e-8


def test_compose_inverse(grid):
    phi = hsgeo.Diffeo.from_displacement(hsgeo.sample("bump:amp=0.6", grid))
    ident = hsgeo.compose(phi, hsgeo.invert(phi))
    assert np.max(np.abs(ident.f.values)) < 1e-8


def test_hs_blowup(grid):
    u0 = hsgeo.sample("gaussian:amp=0.5", grid)
    sol = hsgeo.hs_solve(u0)
    du = hsgeo.derivative(u0).values
    assert sol.t_blowup == pytest.approx(2 / abs(du.min()), rel=1e-14)
    assert np.max(np.abs(sol.velocity(0.0).values - u0.values)) < 1e-14
    assert isinstance(sol.flow(sol.t_blowup + 0.1), hsgeo.MonotoneMap)


def test_geodesic_from_identity(grid):
    k = hsgeo.sample("logistic-neg", grid)
    path = hsgeo.geodesic_from_identity(k)
    assert path.t_exit_forward == pytest.approx(8.0, rel=1e-12)
    assert math.isinf(path.t_exit_backward)


def test_two_solitons():
    s = hsgeo.SolitonState([0.0, 1.0], [1.0, -1.0])
    assert hsgeo.soliton_energy(s) == pytest.approx(0.5)
    closed = hsgeo.soliton_flow(s, 0.5)
    rk4 = hsgeo.soliton_rk4(s, 0.5, 1e-4)
    assert np.allclose(closed.y, rk4.y, atol=1e-10)


def test_errors_carry_kind(grid):
    with pytest.raises(hsgeo.HsgeoError) as info:
        hsgeo.SolitonState([1.0, 0.0], [1.0, -1.0])
    assert info.value.kind == "InvalidArgument"
    sol = hsgeo.hs_solve(hsgeo.sample("gaussian:amp=0.5", grid))
    with pytest.raises(hsgeo.HsgeoError):
        hsgeo.Diffeo.from_displacement(sol.flow(sol.t_blowup).f)


def test_periodic_and_twocomp(grid):
    p = hsgeo.Grid.periodic(256)
    sol = hsgeo.PeriodicHSSolution(hsgeo.sample("sine:amp=0.5", p))
    g = sol.gamma(0.3).values
    assert np.sum(g**2) * p.spacing == pytest.approx(8 * math.pi, rel=1e-10)
    u0 = hsgeo.sample("gaussian:amp=0.5", grid)
    tc = hsgeo.twocomp_solve(u0, hsgeo.sample("gaussian:amp=0.3", grid))
    # only underflowed tail nodes can break down
    assert tc.t_breakdown > 1e6
    zero = hsgeo.GridFunction(grid, np.zeros(grid.size))
    assert hsgeo.twocomp_solve(u0, zero).t_breakdown == hsgeo.hs_solve(u0).t_blowup
    u, rho = tc.velocity(1.0)
    assert len(u) == len(rho) == grid.size


def test_acceptance_checks():
    assert hsgeo.run_check(5).passed
    blowup = hsgeo.run_check(4)
    assert not blowup.passed
    assert blowup.value == pytest.approx(8.0, rel=1e-9)

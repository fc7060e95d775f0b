import math

import pytest

from auxfield.errors import NoBoundState, SpecError
from auxfield.model import Coulomb, Exponential, Harmonic, Linear, Yukawa
from auxfield.oracle import (
    RadialProblem,
    critical_bisection,
    expectation,
    nr_eigenvalue,
    radial_density,
    solve_radial,
    sr_eigenvalue_swave,
    sr_levels_swave,
)
from auxfield.qnum import airy_zero

# Frozen oracle outputs (computed once by this module, cross-checked below
# against closed forms where those exist).
YUKAWA_CRITICAL = 1.6798077734
SR_LINEAR_M0 = (3.15693028, 4.70935546, 5.88901107)


@pytest.mark.parametrize("n,l", [(0, 0), (1, 0), (0, 1), (2, 1), (3, 3)])
def test_hydrogen_levels(n, l):
    E = nr_eigenvalue(RadialProblem(1.0, Coulomb(1.0), l, n))
    assert E == pytest.approx(-0.5 / (n + l + 1) ** 2, rel=1e-9)


@pytest.mark.parametrize("n,l", [(0, 0), (2, 0), (1, 2), (3, 3)])
def test_oscillator_levels(n, l):
    E = nr_eigenvalue(RadialProblem(1.0, Harmonic(0.5), l, n))
    assert E == pytest.approx(2 * n + l + 1.5, rel=1e-9)


def test_linear_airy_levels():
    for n in range(3):
        E = nr_eigenvalue(RadialProblem(0.5, Linear(1.0), 0, n))
        assert E == pytest.approx(-airy_zero(n), rel=1e-9)


def test_two_body_convention_includes_rest():
    E = nr_eigenvalue(RadialProblem.two_body(1.0, Coulomb(1.0)))
    assert E == pytest.approx(1.75, rel=1e-9)


def test_error_estimate_reported():
    sol = solve_radial(RadialProblem(1.0, Coulomb(1.0), 0, 1))
    assert sol.error < 1e-8
    assert sol.r_max > 0 and sol.step > 0


def test_expectations():
    prob = RadialProblem(1.0, Coulomb(1.0))
    assert expectation(prob, lambda r: 1.0 + 0 * r) == pytest.approx(1.0, rel=1e-9)
    assert expectation(prob, lambda r: r) == pytest.approx(1.5, rel=1e-9)
    assert expectation(prob, lambda r: r * r) == pytest.approx(3.0, rel=1e-9)
    r, rho = radial_density(prob)
    assert r.shape == rho.shape


def test_unbound_short_range():
    with pytest.raises(NoBoundState):
        nr_eigenvalue(RadialProblem.two_body(1.0, Yukawa(1.0, 1.0)))


def test_yukawa_bound_state():
    # above threshold the level exists and is negative
    E = nr_eigenvalue(RadialProblem.two_body(1.0, Yukawa(3.0, 1.0))) - 2.0
    assert E < 0


def test_critical_yukawa_frozen():
    assert critical_bisection(Yukawa(1.0, 1.0), 1.0) == pytest.approx(YUKAWA_CRITICAL, rel=1e-8)


def test_critical_exponential_analytic():
    # -u'' /m... s-wave threshold of g e^{-r} with kinetic p^2/m: g = (j_{0,1}/2)^2
    j01 = 2.404825557695773
    assert critical_bisection(Exponential(1.0, 1.0), 1.0) == pytest.approx((j01 / 2) ** 2, rel=1e-8)


def test_critical_scales_with_mass_and_range():
    g = critical_bisection(Yukawa(1.0, 2.0), 3.0)
    assert g == pytest.approx(YUKAWA_CRITICAL * 2.0 / 3.0, rel=1e-7)


def test_critical_needs_short_range():
    with pytest.raises(SpecError):
        critical_bisection(Linear(1.0), 1.0)


def test_sr_massless_linear_frozen():
    res = sr_levels_swave(0.0, Linear(1.0), 2)
    for got, want in zip(res.energies, SR_LINEAR_M0):
        assert got == pytest.approx(want, rel=1e-6)


def test_sr_massless_matches_one_body_literature_scaling():
    # 2|p| + r is sqrt(2) times |p| + r, whose ground state is 2.2322
    assert SR_LINEAR_M0[0] / math.sqrt(2) == pytest.approx(2.2322, abs=1e-4)


def test_sr_heavy_matches_nonrelativistic():
    m = 1000.0
    sr = sr_eigenvalue_swave(m, Harmonic(1.0)) - 2 * m
    nr = nr_eigenvalue(RadialProblem.two_body(m, Harmonic(1.0))) - 2 * m
    assert sr == pytest.approx(nr, rel=1e-4)

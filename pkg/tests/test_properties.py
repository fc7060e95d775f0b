"""Property-based checks of solver invariants."""

import math

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from auxfield.afm import observables, quartic_root, solve, solve_sqrt_closed_form, sqrt_system
from auxfield.model import AuxiliaryForm, BoundCharacter, Harmonic, Kinematics, Linear, PowerLaw, SystemSpec
from auxfield.qnum import QuantumSpec

pos = st.floats(0.05, 20.0)
settings.register_profile("auxfield", max_examples=60, deadline=None)
settings.load_profile("auxfield")


@given(N=st.integers(2, 8), a=pos, lam=st.floats(0.2, 3.0), m=pos, n=st.integers(0, 3), l=st.integers(0, 3))
def test_virial_and_uncertainty(N, a, lam, m, n, l):
    s = SystemSpec(N, Kinematics.nonrelativistic(m), two_body=PowerLaw(a, lam))
    states = [(n, l)] + [(0, 0)] * (N - 2)
    sol = solve(s, QuantumSpec.explicit(states))
    assert math.isclose(sol.p0 * sol.r0, sol.Q, rel_tol=1e-13)
    assert abs(sol.virial_residual) <= 1e-10 * abs(sol.M0)
    obs = observables(sol, N)
    assert math.isclose(obs["mean_rij_sq"] * N * (N - 1) / 2, sol.r0**2, rel_tol=1e-13)


@given(N=st.integers(2, 6), a=pos, m=pos, q1=st.floats(0.5, 10), dq=st.floats(0.1, 5))
def test_energy_increases_with_q(N, a, m, q1, dq):
    s = SystemSpec(N, Kinematics.nonrelativistic(m), two_body=Linear(a))
    assert solve(s, q1).M0 < solve(s, q1 + dq).M0


@given(N=st.integers(2, 6), a=pos, m=pos)
def test_harmonic_exact_for_any_parameters(N, a, m):
    s = SystemSpec(N, Kinematics.nonrelativistic(m), two_body=Harmonic(a))
    sol = solve(s, QuantumSpec.ground_state())
    assert sol.bound is BoundCharacter.EXACT
    assert math.isclose(sol.M0, N * m + sol.Q * math.sqrt(2 * a * N / m), rel_tol=1e-12)


@given(lam=st.floats(0.1, 1.9), a=pos)
def test_sandwich_ordering_of_afm_forms(lam, a):
    # for 0 < lam < 2 the Coulomb-like form sits below the quadratic one
    s = SystemSpec(2, Kinematics.nonrelativistic(1.0), two_body=PowerLaw(a, lam))
    lo = solve(s, QuantumSpec.ground_state(AuxiliaryForm.COULOMB))
    hi = solve(s, QuantumSpec.ground_state(AuxiliaryForm.QUADRATIC))
    assert lo.M0 < hi.M0
    assert lo.bound is BoundCharacter.LOWER and hi.bound is BoundCharacter.UPPER


@given(Y=st.floats(0.0, 1e6))
def test_quartic_root_residual(Y):
    G = quartic_root(Y)
    assert G >= 2 ** (1 / 3) * (1 - 1e-15)
    assert abs(4 * G**4 - 8 * G - 3 * Y) <= 1e-12 * max(1.0, 3 * Y)


@given(mu=pos, a=pos, b=pos, Q=st.floats(0.5, 10))
def test_sqrt_closed_form(mu, a, b, Q):
    exact = solve_sqrt_closed_form(mu, a, b, Q)
    gen = solve(sqrt_system(mu, a, b), Q).binding
    assert math.isclose(exact, gen, rel_tol=1e-10, abs_tol=1e-12)


@given(m=st.one_of(st.just(0.0), st.floats(1e-3, 5.0)), a=pos)
def test_relativistic_never_below_nonrelativistic_upper(m, a):
    # sqrt(p^2+m^2) <= m + p^2/(2m), so SR energies sit below NR ones
    sr = solve(SystemSpec(2, Kinematics.semirelativistic(m), two_body=Linear(a)), 1.5).binding
    if m > 0:
        nr = solve(SystemSpec(2, Kinematics.nonrelativistic(m), two_body=Linear(a)), 1.5).binding
        assert sr <= nr * (1 + 1e-12)
    assert np.isfinite(sr)

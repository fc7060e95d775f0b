import json
import math

import numpy as np
import pytest

from auxfield.errors import NonrelZeroMass, SpecError
from auxfield.model import (
    AuxiliaryForm,
    BoundCharacter,
    Coulomb,
    Custom,
    Exponential,
    Funnel,
    Harmonic,
    Kinematics,
    Linear,
    Logarithmic,
    PowerLaw,
    SquareRoot,
    Sum,
    SystemSpec,
    Tabulated,
    Yukawa,
    combine_bounds,
    potential_from_dict,
    tangent_classify,
)

POTENTIALS = [
    PowerLaw(1.3, 0.5),
    PowerLaw(0.7, -0.5),
    Coulomb(0.8),
    Linear(2.0),
    Harmonic(0.5),
    Yukawa(1.5, 0.7),
    Exponential(1.2, 0.9),
    Logarithmic(1.0, 2.0),
    SquareRoot(1.0, 0.5),
    Funnel(1.0, 0.4),
    Sum((Linear(1.0), Coulomb(0.3))),
    Harmonic(1.0).scaled(2.0, 0.5),
]


@pytest.mark.parametrize("pot", POTENTIALS, ids=lambda p: type(p).__name__)
def test_derivatives_match_finite_differences(pot):
    x = np.array([0.3, 1.0, 2.7])
    h = 1e-5 * x
    d1 = (pot.value(x + h) - pot.value(x - h)) / (2 * h)
    d2 = (pot.deriv(x + h) - pot.deriv(x - h)) / (2 * h)
    np.testing.assert_allclose(pot.deriv(x), d1, rtol=1e-7, atol=1e-9)
    np.testing.assert_allclose(pot.deriv2(x), d2, rtol=1e-6, atol=1e-8)


@pytest.mark.parametrize("pot", POTENTIALS, ids=lambda p: type(p).__name__)
def test_json_round_trip(pot):
    d = json.loads(json.dumps(pot.to_dict()))
    back = potential_from_dict(d)
    x = np.array([0.5, 1.5, 4.0])
    np.testing.assert_array_equal(back.value(x), pot.value(x))


def test_unknown_form_rejected():
    with pytest.raises(SpecError):
        potential_from_dict({"form": "nonsense"})
    with pytest.raises(SpecError):
        potential_from_dict({"form": "linear"})


def test_short_range_flags():
    assert Yukawa(1, 1).short_range and Exponential(1, 1).short_range
    assert Coulomb(1).short_range  # vanishes at infinity, though it never reaches a threshold
    assert not Linear(1).short_range and not Harmonic(1).short_range and not Funnel(1, 1).short_range


@pytest.mark.parametrize("kin", [Kinematics.nonrelativistic(1.3), Kinematics.semirelativistic(0.7),
                                 Kinematics.semirelativistic(0.0), Kinematics.ultrarelativistic()])
def test_kinetic_derivatives(kin):
    p = 0.9
    h = 1e-5
    T, dT, d2T = kin.evaluate(p)
    assert dT == pytest.approx((kin.evaluate(p + h)[0] - kin.evaluate(p - h)[0]) / (2 * h), rel=1e-8)
    assert d2T == pytest.approx((kin.evaluate(p + h)[1] - kin.evaluate(p - h)[1]) / (2 * h), rel=1e-6, abs=1e-9)
    assert kin.excess(p) == pytest.approx(T - kin.rest, rel=1e-12)


def test_excess_is_stable_for_heavy_sr():
    kin = Kinematics.semirelativistic(1e8)
    assert kin.excess(1.0) == pytest.approx(0.5e-8, rel=1e-10)


def test_kinematics_json():
    for kin in (Kinematics.nonrelativistic(2.0), Kinematics.semirelativistic(0.0), Kinematics.ultrarelativistic()):
        assert Kinematics.from_dict(json.loads(json.dumps(kin.to_dict()))) == kin


def test_nr_zero_mass_rejected():
    with pytest.raises(NonrelZeroMass):
        Kinematics.nonrelativistic(0.0)


@pytest.mark.parametrize(
    "pot, aux, expected",
    [
        (Harmonic(1.0), AuxiliaryForm.QUADRATIC, BoundCharacter.EXACT),
        (Coulomb(1.0), AuxiliaryForm.COULOMB, BoundCharacter.EXACT),
        (Linear(1.0), AuxiliaryForm.LINEAR, BoundCharacter.EXACT),
        (Linear(1.0), AuxiliaryForm.QUADRATIC, BoundCharacter.UPPER),
        (Linear(1.0), AuxiliaryForm.COULOMB, BoundCharacter.LOWER),
        (PowerLaw(1.0, 3.0), AuxiliaryForm.QUADRATIC, BoundCharacter.LOWER),
        (Logarithmic(1.0, 1.0), AuxiliaryForm.QUADRATIC, BoundCharacter.UPPER),
        (Yukawa(1.0, 1.0), AuxiliaryForm.COULOMB, BoundCharacter.UPPER),
    ],
)
def test_tangent_classification(pot, aux, expected):
    assert tangent_classify(pot, aux, 1.3) is expected


def test_combine_bounds():
    U, L, E, I = BoundCharacter.UPPER, BoundCharacter.LOWER, BoundCharacter.EXACT, BoundCharacter.INDEFINITE
    assert combine_bounds([E, U]) is U
    assert combine_bounds([L, E]) is L
    assert combine_bounds([U, L]) is I
    assert combine_bounds([E, E]) is E


def test_system_round_trip_and_pairs():
    s = SystemSpec(4, Kinematics.nonrelativistic(1.0), one_body=Harmonic(0.2), two_body=Linear(1.0))
    assert s.pair_count == 6
    assert SystemSpec.from_dict(json.loads(json.dumps(s.to_dict()))) == s


def test_system_needs_a_potential():
    with pytest.raises(SpecError):
        SystemSpec(2, Kinematics.nonrelativistic(1.0))


def test_fold_one_body_for_pairs():
    s = SystemSpec(2, Kinematics.nonrelativistic(1.0), one_body=Harmonic(1.0), two_body=Linear(1.0))
    U, V = s.reduced()
    assert U is None
    assert V.value(2.0) == pytest.approx(2.0 + 2 * 1.0)


def test_custom_and_tabulated():
    c = Custom.from_function(lambda x: x**1.5)
    assert c.deriv(1.0) == pytest.approx(1.5, rel=1e-6)
    xs = np.linspace(0.1, 10, 400)
    t = Tabulated(tuple(xs), tuple(xs**2))
    assert t.value(3.0) == pytest.approx(9.0, rel=1e-8)
    assert t.deriv2(3.0) == pytest.approx(2.0, rel=1e-5)
    with pytest.raises(SpecError):
        Tabulated((1.0, 0.5, 2.0, 3.0), (1.0, 2.0, 3.0, 4.0))


def test_array_and_scalar_agree():
    pot = Yukawa(1.0, 0.5)
    xs = np.array([0.5, 2.0])
    assert pot.value(xs)[1] == pot.value(2.0)
    assert math.isfinite(pot(2.0))

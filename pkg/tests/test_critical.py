import math

import pytest

from auxfield.critical import (
    critical_one_body,
    critical_table,
    critical_two_body,
    gs_scaling_laws,
    tangency_point,
)
from auxfield.errors import CoulombAuxManyBody, NoTangency, NotShortRange
from auxfield.model import AuxiliaryForm, BoundCharacter, Coulomb, Exponential, Linear, PowerLaw, Yukawa
from auxfield.oracle import critical_bisection


def test_yukawa_tangency():
    assert tangency_point(Yukawa(1.0, 2.0)) == pytest.approx(0.5, rel=1e-13)
    assert tangency_point(Exponential(1.0, 1.0)) == pytest.approx(2.0, rel=1e-13)


@pytest.mark.parametrize("N", [2, 3, 5])
def test_yukawa_two_body_closed_form(N):
    beta, m, Q = 1.7, 0.8, 2.3
    res = critical_two_body(Yukawa(1.0, beta), N, Q, m)
    assert res.coupling == pytest.approx(2 * math.e * beta * Q**2 / (N * (N - 1) ** 2 * m), rel=1e-12)


def test_yukawa_pair_coulomb_form_gives_e():
    res = critical_two_body(Yukawa(1.0, 1.0), 2, aux=AuxiliaryForm.COULOMB)
    assert res.Q == 1.0
    assert res.coupling == pytest.approx(math.e, rel=1e-12)
    assert res.bound_character is BoundCharacter.UPPER
    assert res.coupling > critical_bisection(Yukawa(1.0, 1.0), 1.0)


def test_yukawa_one_body_closed_form():
    beta, m, Q, N = 0.6, 1.3, 1.5, 3
    res = critical_one_body(Yukawa(1.0, beta), N, Q, m)
    assert res.coupling == pytest.approx(math.e * beta * Q**2 / (2 * N**2 * m), rel=1e-12)


def test_one_body_n4():
    y = Yukawa(1.0, 1.0)
    assert critical_one_body(y, 4).coupling / critical_one_body(y, 2).coupling == pytest.approx(2.25, rel=1e-12)


def test_three_over_two():
    y = Yukawa(1.0, 1.0)
    assert critical_two_body(y, 3).coupling / critical_two_body(y, 2).coupling == pytest.approx(2 / 3, rel=1e-12)


@pytest.mark.parametrize("N", range(2, 8))
def test_scaling_laws_consistent(N):
    pot = Exponential(1.0, 0.7)
    laws = gs_scaling_laws(N)
    g = [critical_two_body(pot, k).coupling for k in (2, N, N + 1)]
    k = [critical_one_body(pot, n).coupling for n in (2, N, N + 1)]
    assert g[2] / g[1] == pytest.approx(laws["ratio_two_body"], rel=1e-12)
    assert g[1] / g[0] == pytest.approx(laws["gn_vs_g2"], rel=1e-12)
    assert k[2] / k[1] == pytest.approx(laws["ratio_one_body"], rel=1e-12)
    assert k[1] / k[0] == pytest.approx(laws["kn_vs_k2"], rel=1e-12)


def test_table_columns():
    rows = critical_table(Yukawa(1.0, 1.0), range(2, 7))
    for row in rows[:-1]:
        assert row["ratio_next"] == pytest.approx(row["N"] / (row["N"] + 1), rel=1e-12)
        assert row["ratio_next"] == pytest.approx(row["law_next"], rel=1e-12)


def test_errors():
    with pytest.raises(NotShortRange):
        critical_two_body(Linear(1.0), 2)
    with pytest.raises(NoTangency):
        critical_two_body(Coulomb(1.0), 2)
    with pytest.raises(NoTangency):
        critical_two_body(PowerLaw(1.0, -3.0), 2)
    with pytest.raises(CoulombAuxManyBody):
        critical_two_body(Yukawa(1.0, 1.0), 3, aux=AuxiliaryForm.COULOMB)

"""Critical coupling constants of short-range NR interactions.

For an attraction ``-kappa * w(x)`` the AFM threshold condition reduces to the
tangency equation ``2 w(y0) + y0 w'(y0) = 0`` (a maximum of ``y**2 w(y)``),
independent of N, Q and m. The couplings then follow in closed form:

two-body  ``g_N = 2 Q**2 / (N (N-1)**2 m y0**2 w(y0))``
one-body  ``k_N = Q**2 / (2 N**2 m y0**2 w(y0))``
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .errors import CoulombAuxManyBody, NoTangency, NotShortRange, SpecError
from .model import AuxiliaryForm, BoundCharacter, Potential, tangent_classify
from .qnum import QuantumSpec, global_q

TWO_BODY = "two_body"
ONE_BODY = "one_body"


@dataclass(frozen=True)
class CriticalResult:
    y0: float
    coupling: float
    body_type: str
    bound_character: BoundCharacter
    N: int
    Q: float

    def to_dict(self) -> dict:
        return {
            "N": self.N,
            "Q": self.Q,
            "y0": self.y0,
            "coupling": self.coupling,
            "body_type": self.body_type,
            "bound_character": self.bound_character.value,
        }


def _shape(potential: Potential):
    s = potential.strength

    def w(x):
        return -np.asarray(potential.value(x)) / s

    def dw(x):
        return -np.asarray(potential.deriv(x)) / s

    return w, dw


def tangency_point(potential: Potential) -> float:
    """Positive root of ``2 w + y w' = 0`` maximizing ``y**2 w(y)``."""
    if not potential.short_range:
        raise NotShortRange("the potential does not vanish at infinity")
    w, dw = _shape(potential)
    ell = max(potential.lengths(1.0) or [1.0])
    y = np.geomspace(1e-3 * ell, 1e3 * ell, 512)
    with np.errstate(all="ignore"):
        f = 2 * w(y) + y * dw(y)
    roots = []
    for i in range(len(y) - 1):
        if np.isfinite(f[i]) and np.isfinite(f[i + 1]) and f[i] > 0 >= f[i + 1]:
            r = brentq(lambda t: float(2 * w(t) + t * dw(t)), y[i], y[i + 1], xtol=1e-300, rtol=1e-15)
            if w(r) > 0:
                roots.append(r)
    if not roots:
        raise NoTangency("2 w(y) + y w'(y) has no admissible positive root")
    return float(max(roots, key=lambda r: r * r * w(r)))


def _check(N, Q, m, aux):
    if m <= 0:
        raise SpecError("critical couplings need a positive NR mass")
    if Q is not None and Q <= 0:
        raise SpecError("Q must be positive")
    if AuxiliaryForm(aux) is not AuxiliaryForm.QUADRATIC and N >= 3:
        raise CoulombAuxManyBody("only the quadratic auxiliary form exists for N >= 3")


def _ground_q(N, aux):
    return global_q(QuantumSpec.ground_state(AuxiliaryForm(aux)), N)


def critical_two_body(
    potential: Potential, N: int, Q: float | None = None, m: float = 1.0, aux=AuxiliaryForm.QUADRATIC
) -> CriticalResult:
    """AFM critical value of the pair coupling.

    ``Q`` defaults to the ground state of the chosen auxiliary form (1 for the
    Coulomb-like form at N = 2, ``3(N-1)/2`` for the quadratic one).
    """
    if N < 2:
        raise SpecError("two-body forces need N >= 2")
    _check(N, Q, m, aux)
    Q = _ground_q(N, aux) if Q is None else float(Q)
    y0 = tangency_point(potential)
    w0 = float(_shape(potential)[0](y0))
    g = 2.0 * Q * Q / (N * (N - 1) ** 2 * m * y0 * y0 * w0)
    return CriticalResult(y0, g, TWO_BODY, tangent_classify(potential, aux, y0), N, Q)


def critical_one_body(
    potential: Potential, N: int, Q: float | None = None, m: float = 1.0, aux=AuxiliaryForm.QUADRATIC
) -> CriticalResult:
    """AFM critical value of the one-body coupling; Q defaults to the boson ground state."""
    if N < 1:
        raise SpecError("N must be >= 1")
    _check(N, Q, m, aux)
    Q = _ground_q(N, aux) if Q is None else float(Q)
    y0 = tangency_point(potential)
    u0 = float(_shape(potential)[0](y0))
    k = Q * Q / (2.0 * N * N * m * y0 * y0 * u0)
    return CriticalResult(y0, k, ONE_BODY, tangent_classify(potential, aux, y0), N, Q)


def gs_scaling_laws(N: int) -> dict:
    """Ground-state ratios ``g_{N+1}/g_N``, ``g_N/g_2``, ``k_{N+1}/k_N`` and ``k_N/k_2``."""
    if N < 2:
        raise SpecError("scaling laws need N >= 2")
    return {
        "ratio_two_body": N / (N + 1),
        "gn_vs_g2": 2.0 / N,
        "ratio_one_body": (N * N / (N * N - 1.0)) ** 2,
        "kn_vs_k2": 4.0 * ((N - 1) / N) ** 2,
    }


def critical_table(
    potential: Potential, Ns, m: float = 1.0, body_type: str = TWO_BODY, Q=None, aux=AuxiliaryForm.QUADRATIC
) -> list[dict]:
    """Rows of critical couplings over ``Ns`` with the measured and predicted ground-state ratios.

    ``Q=None`` uses the boson ground state for every N.
    """
    fn = critical_two_body if body_type == TWO_BODY else critical_one_body
    results = [fn(potential, N, Q, m, aux) for N in Ns]
    rows = []
    first = results[0].coupling
    ref2 = fn(potential, 2, Q, m, aux).coupling
    for i, res in enumerate(results):
        row = res.to_dict()
        nxt = results[i + 1] if i + 1 < len(results) else None
        row["ratio_next"] = nxt.coupling / res.coupling if nxt is not None else None
        row["ratio_to_N2"] = res.coupling / ref2
        if res.N >= 2:
            laws = gs_scaling_laws(res.N)
            key = "ratio_two_body" if body_type == TWO_BODY else "ratio_one_body"
            row["law_next"] = laws[key] if nxt is not None and nxt.N == res.N + 1 else None
            row["law_to_N2"] = laws["gn_vs_g2" if body_type == TWO_BODY else "kn_vs_k2"]
        row["ratio_to_first"] = res.coupling / first
        rows.append(row)
    return rows

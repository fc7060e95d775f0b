"""Mean-radius / mean-momentum solver.

An eigenmass is approximated by::

    M0 = N T(p0) + N U(r0/N) + C_N V(r0/sqrt(C_N)),     p0 = Q / r0,

where ``r0`` zeroes the virial imbalance::

    F(r) = N p T'(p) - r U'(r/N) - sqrt(C_N) r V'(r/sqrt(C_N)),   p = Q / r.

Since ``F(r) = -r dM/dr`` the admissible solution is a local minimum of
``M(r)``: a sign change of ``F`` from positive to negative.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import brentq

from .errors import MultipleRoots, NoRoot, NonConvergence, NotLowerBoundable, SpecError
from .model import (
    AuxiliaryForm,
    BoundCharacter,
    Kinematics,
    SquareRoot,
    SystemSpec,
    combine_bounds,
    tangent_classify,
)
from .qnum import QuantumSpec, global_q

SCAN_POINTS = 512
SCAN_DECADES = 4.0
_EPS = np.finfo(float).eps


@dataclass(frozen=True)
class AfmSolution:
    M0: float
    r0: float
    p0: float
    X0: float
    Q: float
    bound: BoundCharacter
    virial_residual: float
    N: int = field(default=2, compare=False)
    binding: float = field(default=math.nan, compare=False)
    """``M0`` minus the rest energies, computed without cancellation."""

    def to_dict(self) -> dict:
        return {
            "M0": self.M0,
            "r0": self.r0,
            "p0": self.p0,
            "X0": self.X0,
            "Q": self.Q,
            "bound": self.bound.value,
            "virial_residual": self.virial_residual,
        }

    @classmethod
    def from_dict(cls, d: dict, N: int = 2) -> AfmSolution:
        return cls(
            float(d["M0"]), float(d["r0"]), float(d["p0"]), float(d["X0"]), float(d["Q"]),
            BoundCharacter(d["bound"]), float(d["virial_residual"]), N,
        )


def _geometry(system: SystemSpec):
    N = system.n_particles
    C = system.pair_count
    U, V = system.reduced()
    if C == 0:
        V = None
    return N, C, math.sqrt(C), U, V


def energy_at(system: SystemSpec, r, Q: float, excess: bool = False):
    """``M(r)`` for trial mean radius ``r``; ``excess`` drops the rest energies."""
    N, C, sC, U, V = _geometry(system)
    r = np.asarray(r, dtype=float)
    p = Q / r
    kin = system.kinematics
    out = N * (kin.excess(p) if excess else kin.evaluate(p)[0])
    if U is not None:
        out = out + N * np.asarray(U.value(r / N))
    if V is not None:
        out = out + C * np.asarray(V.value(r / sC))
    return float(out) if np.ndim(out) == 0 else out


def virial_residual(system: SystemSpec, r, Q: float):
    """Virial imbalance ``F(r)``; zero at the AFM mean radius."""
    N, C, sC, U, V = _geometry(system)
    r = np.asarray(r, dtype=float)
    p = Q / r
    out = N * p * system.kinematics.evaluate(p)[1]
    if U is not None:
        out = out - r * np.asarray(U.deriv(r / N))
    if V is not None:
        out = out - sC * r * np.asarray(V.deriv(r / sC))
    return float(out) if np.ndim(out) == 0 else out


def natural_length(system: SystemSpec, Q: float) -> float:
    """Largest length implied by the potential parameters (scan centre)."""
    N, C, sC, U, V = _geometry(system)
    kin = system.kinematics
    mass = kin.inertia if kin.kind == "NR" else kin.m
    lengths = []
    if U is not None:
        lengths += [N * L for L in U.lengths(mass, Q, kin.relativistic)]
    if V is not None:
        lengths += [sC * L for L in V.lengths(mass, Q, kin.relativistic)]
    lengths = [L for L in lengths if math.isfinite(L) and L > 0]
    return max(lengths) if lengths else 1.0


def find_minima_brackets(system: SystemSpec, Q: float, length: float | None = None):
    """Brackets ``(a, b)`` where ``F`` turns from positive to negative."""
    ell = natural_length(system, Q) if length is None else length
    r = np.geomspace(ell * 10**-SCAN_DECADES, ell * 10**SCAN_DECADES, SCAN_POINTS)
    with np.errstate(all="ignore"):
        F = np.asarray(virial_residual(system, r, Q))
    ok = np.isfinite(F)
    brackets = []
    for i in range(len(r) - 1):
        if not (ok[i] and ok[i + 1]):
            continue
        if F[i] > 0 and F[i + 1] <= 0:
            brackets.append((float(r[i]), float(r[i + 1])))
    return brackets


def bound_character(system: SystemSpec, quantum: QuantumSpec, r0: float) -> BoundCharacter:
    """Variational character of an AFM solution at mean radius ``r0``."""
    if quantum.modifier is not None:
        return BoundCharacter.INDEFINITE
    N, C, sC, U, V = _geometry(system)
    chars = []
    if U is not None:
        chars.append(tangent_classify(U, quantum.aux, r0 / N))
    if V is not None:
        chars.append(tangent_classify(V, quantum.aux, r0 / sC))
    char = combine_bounds(chars)
    if system.kinematics.relativistic:
        # the nonrelativistic auxiliary kinetic term only raises eigenvalues
        return BoundCharacter.UPPER if char in (BoundCharacter.UPPER, BoundCharacter.EXACT) else BoundCharacter.INDEFINITE
    return char


def solve(system: SystemSpec, quantum: QuantumSpec | float) -> AfmSolution:
    """Approximate eigenmass of ``system`` in the state described by ``quantum``.

    Raises
    ------
    NoRoot
        ``M(r)`` has no local minimum in the scanned range (no AFM solution;
        for short-range attraction, no bound state at this coupling).
    MultipleRoots
        More than one local minimum; ``exc.brackets`` lists them.
    """
    if not isinstance(quantum, QuantumSpec):
        quantum = QuantumSpec.direct(float(quantum))
    N = system.n_particles
    Q = global_q(quantum, N)
    brackets = find_minima_brackets(system, Q)
    if not brackets:
        raise NoRoot(f"virial equation has no admissible root for Q = {Q:g}")
    if len(brackets) > 1:
        raise MultipleRoots(f"{len(brackets)} admissible roots for Q = {Q:g}", brackets)
    a, b = brackets[0]
    try:
        r0 = brentq(lambda r: virial_residual(system, r, Q), a, b, xtol=1e-300, rtol=4 * _EPS, maxiter=500)
    except (RuntimeError, ValueError) as exc:
        raise NonConvergence(str(exc)) from exc
    p0 = Q / r0
    M0 = energy_at(system, r0, Q)
    return AfmSolution(
        M0=M0,
        r0=r0,
        p0=p0,
        X0=N * Q / r0**2,
        Q=Q,
        bound=bound_character(system, quantum, r0),
        virial_residual=virial_residual(system, r0, Q),
        N=N,
        binding=energy_at(system, r0, Q, excess=True),
    )


def solve_sqrt_closed_form(mu: float, a: float, b: float, Q: float) -> float:
    """Energy of ``p**2/(2 mu) + sqrt(a**2 r**2 + b**2)`` without the rest mass."""
    if min(mu, a, b, Q) <= 0:
        raise SpecError("mu, a, b and Q must be positive")
    Y = b * b / 3.0 * (32.0 * mu / (a * a * Q * Q)) ** (2.0 / 3.0)
    G = quartic_root(Y)
    return 2.0 * b / math.sqrt(3.0 * Y) * (G * G + 1.0 / G)


def quartic_root(Y: float) -> float:
    """Unique positive root of ``4 G**4 - 8 G - 3 Y = 0`` for ``Y >= 0``."""
    if Y < 0:
        raise SpecError("Y must be non-negative")
    lo = 2.0 ** (1.0 / 3.0)
    if Y == 0:
        return lo
    hi = lo + (0.75 * Y) ** 0.25 + 1.0
    G = brentq(lambda g: 4 * g**4 - 8 * g - 3 * Y, lo, hi, xtol=1e-300, rtol=4 * _EPS)
    # one Newton step to land on the nearest representable root
    return G - (4 * G**4 - 8 * G - 3 * Y) / (16 * G**3 - 8)


def sqrt_system(mu: float, a: float, b: float) -> SystemSpec:
    """Two-body system whose relative Hamiltonian is ``p**2/(2 mu) + sqrt(a**2 r**2 + b**2)``."""
    return SystemSpec(2, Kinematics.nonrelativistic(2.0 * mu), two_body=SquareRoot(a, b / a))


def ground_state_lower_bound(system: SystemSpec) -> float:
    """Lower bound on the boson-like ground state of an NR ``system``.

    The N-body mass is bounded below by ``N/2`` times the ground state of the
    two-body Hamiltonian ``2 T(p) + 2 U(r/2) + (N-1) V(r)``, whose AFM
    solution with the ``-1/x`` auxiliary form is itself a lower bound when
    the effective potential lies above all its tangents.
    """
    if system.kinematics.kind != "NR":
        raise SpecError("the ground-state lower bound needs NR kinematics")
    N = system.n_particles
    terms = []
    if system.two_body is not None:
        terms.append(system.two_body.scaled(float(N - 1)) if N != 2 else system.two_body)
    pair = SystemSpec(
        2,
        system.kinematics,
        one_body=system.one_body,
        two_body=None if not terms else terms[0],
    )
    sol = solve(pair, QuantumSpec.ground_state(AuxiliaryForm.COULOMB))
    if sol.bound not in (BoundCharacter.LOWER, BoundCharacter.EXACT):
        raise NotLowerBoundable(f"effective two-body problem classifies as {sol.bound.value}")
    return 0.5 * N * sol.M0


def observables(sol: AfmSolution, N: int | None = None) -> dict:
    """Mean squares of one-particle momentum, distance to the centre of mass and pair distance."""
    N = sol.N if N is None else N
    C = N * (N - 1) // 2
    return {
        "mean_p_sq": sol.p0**2,
        "mean_s_sq": (sol.r0 / N) ** 2,
        "mean_rij_sq": sol.r0**2 / C if C else math.nan,
    }

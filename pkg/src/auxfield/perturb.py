"""First-order corrections for small additions to the kinetic, one-body and two-body terms."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

from .afm import AfmSolution
from .errors import OracleUnavailable, SpecError, ZeroDenominator
from .model import BoundCharacter, Harmonic, PowerLaw, Potential, SystemSpec, potential_from_dict
from .oracle import RadialProblem, expectation


@dataclass(frozen=True)
class PerturbationSpec:
    """Perturbing terms ``tau*t(p)``, ``eta*u(s)`` and ``eps*v(r)``.

    Smallness of the couplings is left to the caller. ``t`` is a function of
    momentum and uses the same interface as a potential.
    """

    tau: float = 0.0
    t: Potential | None = None
    eta: float = 0.0
    u: Potential | None = None
    eps: float = 0.0
    v: Potential | None = None

    def __post_init__(self):
        if self.t is None and self.u is None and self.v is None:
            raise SpecError("a perturbation needs at least one term")

    def scaled(self, factor: float) -> PerturbationSpec:
        """Same functions with every coupling multiplied by ``factor``."""
        return PerturbationSpec(self.tau * factor, self.t, self.eta * factor, self.u, self.eps * factor, self.v)

    def apply(self, system: SystemSpec) -> SystemSpec:
        """The perturbed system (potential terms only), for a direct re-solve."""
        if self.t is not None and self.tau != 0:
            raise SpecError("kinetic perturbations cannot be folded into a SystemSpec")
        U, V = system.one_body, system.two_body
        if self.u is not None and self.eta != 0:
            du = self.u.scaled(self.eta)
            U = du if U is None else U + du
        if self.v is not None and self.eps != 0:
            dv = self.v.scaled(self.eps)
            V = dv if V is None else V + dv
        return SystemSpec(system.n_particles, system.kinematics, U, V, system.fold_one_body)

    def to_dict(self) -> dict:
        out = {}
        for key, c, f in (("tau", self.tau, self.t), ("eta", self.eta, self.u), ("eps", self.eps, self.v)):
            if f is not None:
                out[key] = {"coupling": c, **f.to_dict()}
        return out

    @classmethod
    def from_dict(cls, d: dict) -> PerturbationSpec:
        kw = {}
        for key, fname in (("tau", "t"), ("eta", "u"), ("eps", "v")):
            if key in d:
                item = dict(d[key])
                kw[key] = float(item.pop("coupling"))
                kw[fname] = potential_from_dict(item)
        return cls(**kw)


@dataclass(frozen=True)
class PerturbedSolution:
    M1: float
    delta: float
    r1: float
    p1: float

    def to_dict(self) -> dict:
        return {"M1": self.M1, "delta": self.delta, "r1": self.r1, "p1": self.p1}


def first_order(base: AfmSolution, system: SystemSpec, pert: PerturbationSpec) -> PerturbedSolution:
    """First-order mass shift and relative change ``delta`` of the mean radius."""
    N = system.n_particles
    C = system.pair_count
    sC = math.sqrt(C)
    U, V = system.reduced()
    r0, p0 = base.r0, base.p0
    _, dT, d2T = system.kinematics.evaluate(p0)

    M1 = base.M0
    num = 0.0
    if pert.t is not None:
        M1 += N * pert.tau * pert.t.value(p0)
        num += N * p0 * pert.tau * pert.t.deriv(p0)
    if pert.u is not None:
        M1 += N * pert.eta * pert.u.value(r0 / N)
        num -= r0 * pert.eta * pert.u.deriv(r0 / N)
    if pert.v is not None and C:
        M1 += C * pert.eps * pert.v.value(r0 / sC)
        num -= sC * r0 * pert.eps * pert.v.deriv(r0 / sC)

    den = 2 * N * p0 * dT + N * p0**2 * d2T
    if U is not None:
        den += r0**2 / N * U.deriv2(r0 / N)
    if V is not None and C:
        den += r0**2 * V.deriv2(r0 / sC)
    scale = abs(2 * N * p0 * dT) + abs(N * p0**2 * d2T)
    if not math.isfinite(den) or abs(den) <= 1e-14 * scale:
        raise ZeroDenominator("vanishing curvature of the virial equation")
    delta = num / den
    return PerturbedSolution(float(M1), float(delta), (1 + delta) * r0, (1 - delta) * p0)


@dataclass(frozen=True)
class MeanValueReport:
    afm_shift: float
    mean_value_shift: float
    relative_difference: float

    def to_dict(self) -> dict:
        return {
            "afm_shift": self.afm_shift,
            "mean_value_shift": self.mean_value_shift,
            "relative_difference": self.relative_difference,
        }


def _harmonic_strength(V):
    if isinstance(V, Harmonic):
        return V.a
    if isinstance(V, PowerLaw) and V.lam == 2 and V.sign > 0:
        return V.a
    return None


def _pair_mean(system: SystemSpec, base: AfmSolution, v: Potential, state) -> float:
    """Exact ``<v(r_ij)>`` in the unperturbed eigenstate."""
    kin = system.kinematics
    if kin.kind != "NR":
        raise OracleUnavailable("mean values need NR kinematics")
    N = system.n_particles
    if N == 2:
        _, V = system.reduced()
        n, l = state
        return expectation(RadialProblem(0.5 * kin.inertia, V, l, n), v.value)
    a = _harmonic_strength(system.two_body)
    if system.one_body is not None or a is None or base.Q != 1.5 * (N - 1):
        raise OracleUnavailable("for N >= 3 only the harmonic ground state is available")
    C = system.pair_count
    # virial theorem: <V> = (M - N m)/2 shared among C pairs
    mean_sq = base.Q * math.sqrt(2 * a * N / kin.m) / (2 * a * C)
    var = mean_sq / 3.0
    norm = 4 * math.pi * (2 * math.pi * var) ** -1.5

    def integrand(r):
        return float(v.value(r)) * norm * r * r * math.exp(-r * r / (2 * var))

    cut = 40.0 * math.sqrt(var)
    val, _ = quad(integrand, 0.0, cut, limit=200, epsabs=0.0, epsrel=1e-12)
    return val


def compare_with_mean_value(
    base: AfmSolution, system: SystemSpec, pert: PerturbationSpec, state: tuple = (0, 0)
) -> MeanValueReport:
    """AFM two-body shift versus the first-order perturbation-theory shift.

    ``base`` must be an exact AFM solution (harmonic or Coulomb-like base) and
    ``state`` its ``(n, l)`` quantum numbers for the N = 2 oracle.
    """
    if pert.v is None:
        raise SpecError("only the two-body term is compared")
    if base.bound is not BoundCharacter.EXACT:
        raise OracleUnavailable("the unperturbed AFM solution is not exact")
    C = system.pair_count
    afm = C * pert.eps * float(pert.v.value(base.r0 / math.sqrt(C)))
    exact = C * pert.eps * _pair_mean(system, base, pert.v, state)
    rel = abs(afm - exact) / abs(exact) if exact != 0 else float(np.inf if afm != 0 else 0.0)
    return MeanValueReport(afm, exact, rel)

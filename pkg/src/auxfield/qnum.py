"""Global quantum number Q for the supported auxiliary forms."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.optimize import brentq
from scipy.special import airy

from .errors import CoulombAuxManyBody, NonSWave, OutOfTableRange, SpecError
from .model import AuxiliaryForm

AIRY_TABLE_SIZE = 51


def _ai(x):
    return airy(x)[0]


@lru_cache(maxsize=None)
def airy_zero(n: int) -> float:
    """The (n+1)-th zero of Ai, located by bracketing around its asymptotic estimate."""
    if not 0 <= n < AIRY_TABLE_SIZE:
        raise OutOfTableRange(f"Airy zero index {n} outside [0, {AIRY_TABLE_SIZE - 1}]")
    t = 3 * math.pi * (4 * n + 3) / 8
    guess = -(t ** (2 / 3)) * (1 + 5 / (48 * t * t))
    # zeros are separated by at least ~ pi / sqrt(|x|); this window holds exactly one
    half = 0.45 * math.pi / math.sqrt(abs(guess))
    a, b = guess - half, guess + half
    if _ai(a) * _ai(b) > 0:
        raise OutOfTableRange(f"could not bracket Airy zero {n}")
    return brentq(_ai, a, b, xtol=1e-15, rtol=4 * np.finfo(float).eps, maxiter=200)


def airy_zeros(count: int = AIRY_TABLE_SIZE) -> np.ndarray:
    """First ``count`` zeros of Ai, strictly decreasing."""
    return np.array([airy_zero(k) for k in range(count)])


@dataclass(frozen=True)
class QuantumSpec:
    """Which state to compute and with which auxiliary form.

    ``mode`` is ``"explicit"`` (one ``(n, l)`` pair per Jacobi coordinate),
    ``"ground"`` (boson-like ground state) or ``"direct"`` (a given Q).
    ``modifier`` is an optional ``(alpha, beta, gamma)`` replacing the
    coefficients ``(2, 1, 3/2)`` of the quadratic rule.
    """

    mode: str = "ground"
    states: tuple = ()
    q: float | None = None
    aux: AuxiliaryForm = AuxiliaryForm.QUADRATIC
    modifier: tuple | None = None

    def __post_init__(self):
        object.__setattr__(self, "aux", AuxiliaryForm(self.aux))
        object.__setattr__(self, "states", tuple(tuple(int(v) for v in s) for s in self.states))
        if self.mode not in ("explicit", "ground", "direct"):
            raise SpecError(f"unknown quantum mode {self.mode!r}")
        if self.mode == "direct" and not (self.q is not None and self.q > 0):
            raise SpecError("direct Q must be positive")
        if self.mode == "explicit":
            if not self.states:
                raise SpecError("explicit mode needs at least one (n, l) pair")
            for s in self.states:
                if len(s) != 2 or min(s) < 0:
                    raise SpecError(f"bad quantum numbers {s!r}")
            if self.aux is AuxiliaryForm.LINEAR and any(l > 0 for _, l in self.states):
                raise NonSWave("the linear auxiliary form only handles S-waves")
        if self.modifier is not None:
            object.__setattr__(self, "modifier", tuple(float(v) for v in self.modifier))
            if len(self.modifier) != 3:
                raise SpecError("modifier must be an (alpha, beta, gamma) triple")
            if self.aux is not AuxiliaryForm.QUADRATIC:
                raise SpecError("the (alpha, beta, gamma) modifier is only defined for the quadratic form")

    @classmethod
    def explicit(cls, states, aux=AuxiliaryForm.QUADRATIC, modifier=None) -> QuantumSpec:
        return cls("explicit", tuple(states), None, aux, modifier)

    @classmethod
    def ground_state(cls, aux=AuxiliaryForm.QUADRATIC, modifier=None) -> QuantumSpec:
        return cls("ground", (), None, aux, modifier)

    @classmethod
    def direct(cls, Q: float, aux=AuxiliaryForm.QUADRATIC) -> QuantumSpec:
        return cls("direct", (), float(Q), aux, None)

    def pairs(self, N: int) -> tuple:
        """The ``(n, l)`` pairs, one per Jacobi coordinate (one for N = 1)."""
        k = max(N - 1, 1)
        if self.mode == "ground":
            return ((0, 0),) * k
        if self.mode == "explicit":
            if len(self.states) != k:
                raise SpecError(f"N = {N} needs exactly {k} (n, l) pairs, got {len(self.states)}")
            return self.states
        return ()

    def to_dict(self) -> dict:
        d = {"mode": self.mode, "aux": self.aux.value}
        if self.mode == "explicit":
            d["states"] = [list(s) for s in self.states]
        if self.mode == "direct":
            d["Q"] = self.q
        if self.modifier is not None:
            d["modifier"] = list(self.modifier)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> QuantumSpec:
        mode = d.get("mode", "ground")
        return cls(
            mode,
            tuple(tuple(s) for s in d.get("states", ())),
            d.get("Q"),
            AuxiliaryForm(d.get("aux", "quadratic")),
            None if d.get("modifier") is None else tuple(d["modifier"]),
        )


def global_q(spec: QuantumSpec, N: int) -> float:
    """Global quantum number of ``spec`` for an ``N``-particle system.

    N = 1 follows the single-coordinate rules of N = 2.
    """
    if N < 1:
        raise SpecError("N must be >= 1")
    if spec.aux is not AuxiliaryForm.QUADRATIC and N >= 3:
        raise CoulombAuxManyBody(f"{spec.aux.value} auxiliary form is only available for N <= 2")
    if spec.mode == "direct":
        return float(spec.q)
    pairs = spec.pairs(N)
    k = len(pairs)
    if spec.modifier is not None:
        alpha, beta, gamma = spec.modifier
        return sum(alpha * n + beta * l for n, l in pairs) + gamma * k
    if spec.aux is AuxiliaryForm.QUADRATIC:
        return sum(2 * n + l for n, l in pairs) + 1.5 * k
    (n, l), = pairs
    if spec.aux is AuxiliaryForm.COULOMB:
        return float(n + l + 1)
    if l:
        raise NonSWave("the linear auxiliary form only handles S-waves")
    return 2.0 * (-airy_zero(n) / 3.0) ** 1.5

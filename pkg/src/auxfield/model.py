"""Physical problem description: kinematics, potentials and envelope tangents.

All quantities are in natural units (hbar = c = 1). Masses and energies share
one unit, lengths are inverse energies.

Potentials are small frozen dataclasses exposing ``value``, ``deriv`` and
``deriv2``; each accepts scalars or numpy arrays. They serialize to a flat JSON
dictionary keyed by ``"form"``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Any, Callable, ClassVar

import numpy as np
from scipy.interpolate import CubicSpline

from .errors import DegenerateTangent, NonrelZeroMass, SpecError

# ---------------------------------------------------------------------------
# Kinematics
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Kinematics:
    """Single-particle kinetic energy operator.

    Parameters
    ----------
    kind : {"NR", "SR", "UR"}
        Nonrelativistic ``m + p**2/(2m)``, semirelativistic ``sqrt(p**2 + m**2)``
        or ultrarelativistic ``p``.
    m : float
        Particle mass.
    m2 : float, optional
        Mass of the second particle of an unequal-mass NR pair. Only valid for
        two-body systems; the pair is folded into a reduced mass.
    """

    kind: str
    m: float = 0.0
    m2: float | None = None

    def __post_init__(self):
        if self.kind not in ("NR", "SR", "UR"):
            raise SpecError(f"unknown kinematics {self.kind!r}")
        if self.kind == "UR" and self.m != 0.0:
            raise SpecError("ultrarelativistic kinematics has m = 0")
        if self.m < 0 or (self.m2 is not None and self.m2 < 0):
            raise SpecError("masses must be non-negative")
        if self.kind == "NR" and (self.m <= 0 or (self.m2 is not None and self.m2 <= 0)):
            raise NonrelZeroMass("nonrelativistic kinematics requires m > 0")
        if self.m2 is not None and self.kind != "NR":
            raise SpecError("unequal masses are only supported for NR kinematics")

    @classmethod
    def nonrelativistic(cls, m: float, m2: float | None = None) -> Kinematics:
        return cls("NR", float(m), None if m2 is None else float(m2))

    @classmethod
    def semirelativistic(cls, m: float) -> Kinematics:
        return cls("SR", float(m))

    @classmethod
    def ultrarelativistic(cls) -> Kinematics:
        return cls("UR", 0.0)

    @property
    def relativistic(self) -> bool:
        return self.kind != "NR"

    @property
    def rest(self) -> float:
        """Rest energy per particle."""
        if self.m2 is not None:
            return 0.5 * (self.m + self.m2)
        return self.m

    @property
    def inertia(self) -> float:
        """Effective mass M with ``T = rest + p**2/(2M)`` in the NR case."""
        if self.m2 is not None:
            # m1 + m2 + p^2/(2 m_r) shared between two particles
            return 4.0 * self.m * self.m2 / (self.m + self.m2)
        return self.m

    def evaluate(self, p):
        """Return ``(T, T', T'')`` at momentum ``p``."""
        p = np.asarray(p, dtype=float)
        if self.kind == "NR":
            M = self.inertia
            out = (self.rest + p * p / (2 * M), p / M, np.full_like(p, 1.0 / M))
        else:
            e = np.sqrt(p * p + self.m * self.m)
            out = (e, p / e, self.m * self.m / e**3)
        if out[0].ndim == 0:
            return tuple(float(v) for v in out)
        return out

    def excess(self, p):
        """``T(p) - rest`` without cancellation for heavy particles."""
        p = np.asarray(p, dtype=float)
        if self.kind == "NR":
            val = p * p / (2 * self.inertia)
        else:
            val = p * p / (np.sqrt(p * p + self.m * self.m) + self.m)
        return float(val) if val.ndim == 0 else val

    def to_dict(self) -> dict:
        d: dict[str, Any] = {"type": self.kind}
        if self.kind != "UR":
            d["m"] = self.m
        if self.m2 is not None:
            d["m2"] = self.m2
        return d

    @classmethod
    def from_dict(cls, d: dict) -> Kinematics:
        try:
            kind = str(d["type"]).upper()
        except KeyError:
            raise SpecError("kinematics needs a 'type' field") from None
        return cls(kind, float(d.get("m", 0.0)), None if d.get("m2") is None else float(d["m2"]))


def evaluate_kinetic(kin: Kinematics, p: float):
    """Kinetic energy and its first two derivatives at momentum ``p > 0``."""
    if not p > 0:
        raise SpecError("momentum must be positive")
    return kin.evaluate(p)


# ---------------------------------------------------------------------------
# Potentials
# ---------------------------------------------------------------------------

_FORMS: dict[str, type] = {}


def _register(name):
    def deco(cls):
        cls.form = name
        _FORMS[name] = cls
        return cls

    return deco


def _balance_length(strength, lam, mass, Q, relativistic):
    """Length at which a ``strength * x**lam`` term balances the kinetic energy."""
    strength = abs(strength)
    if strength == 0:
        return None
    nr = ur = None
    if mass > 0 and lam > -2:
        # log space keeps extreme parameters from overflowing
        nr = math.exp((2 * math.log(Q) - math.log(mass) - math.log(strength)) / (lam + 2))
    if lam > -1:
        ur = math.exp((math.log(Q) - math.log(strength)) / (lam + 1))
    if not relativistic:
        return nr
    if nr is not None and (Q / nr <= mass or ur is None):
        return nr
    return ur


class Potential:
    """Base class for radial potentials defined for ``x > 0``."""

    form: ClassVar[str] = ""

    def value(self, x):
        raise NotImplementedError

    def deriv(self, x):
        raise NotImplementedError

    def deriv2(self, x):
        raise NotImplementedError

    def __call__(self, x):
        return self.value(x)

    @property
    def strength(self) -> float:
        """Positive overall coupling multiplying the potential's shape."""
        return 1.0

    @property
    def short_range(self) -> bool:
        """True when the potential vanishes at infinity."""
        return False

    def lengths(self, mass: float, Q: float = 1.0, relativistic: bool = False) -> list[float]:
        """Characteristic lengths implied by the parameters (scan heuristics)."""
        return []

    def _params(self) -> dict:
        return {}

    def to_dict(self) -> dict:
        return {"form": self.form, **self._params()}

    def scaled(self, factor: float = 1.0, arg_scale: float = 1.0) -> Potential:
        """Return ``x -> factor * self(arg_scale * x)``."""
        return Scaled(self, factor, arg_scale)

    def __add__(self, other: Potential) -> Potential:
        return Sum((self, other))


def _f(v):
    v = np.asarray(v, dtype=float)
    return float(v) if v.ndim == 0 else v


@_register("power")
@dataclass(frozen=True)
class PowerLaw(Potential):
    """``sign * a * x**lam``; ``sign`` defaults to ``sgn(lam)``."""

    a: float
    lam: float
    sign: float | None = None

    def __post_init__(self):
        if self.sign is None:
            object.__setattr__(self, "sign", -1.0 if self.lam < 0 else 1.0)

    def value(self, x):
        return _f(self.sign * self.a * np.power(x, self.lam))

    def deriv(self, x):
        return _f(self.sign * self.a * self.lam * np.power(x, self.lam - 1))

    def deriv2(self, x):
        return _f(self.sign * self.a * self.lam * (self.lam - 1) * np.power(x, self.lam - 2))

    @property
    def strength(self):
        return abs(self.a)

    @property
    def short_range(self):
        return self.lam < 0 or self.a == 0

    def lengths(self, mass, Q=1.0, relativistic=False):
        L = _balance_length(self.a, self.lam, mass, Q, relativistic)
        return [] if L is None else [L]

    def _params(self):
        return {"a": self.a, "lambda": self.lam, "sign": self.sign}

    @classmethod
    def from_params(cls, d):
        return cls(float(d["a"]), float(d["lambda"]), None if d.get("sign") is None else float(d["sign"]))


@_register("coulomb")
@dataclass(frozen=True)
class Coulomb(Potential):
    """``-g / x``."""

    g: float

    def value(self, x):
        return _f(-self.g / np.asarray(x, dtype=float))

    def deriv(self, x):
        return _f(self.g / np.square(x))

    def deriv2(self, x):
        return _f(-2.0 * self.g / np.power(x, 3))

    @property
    def strength(self):
        return abs(self.g)

    @property
    def short_range(self):
        return True

    def lengths(self, mass, Q=1.0, relativistic=False):
        L = _balance_length(self.g, -1.0, mass, Q, relativistic)
        return [] if L is None else [L]

    def _params(self):
        return {"g": self.g}


@_register("linear")
@dataclass(frozen=True)
class Linear(Potential):
    """``a * x``."""

    a: float

    def value(self, x):
        return _f(self.a * np.asarray(x, dtype=float))

    def deriv(self, x):
        return _f(np.full_like(np.asarray(x, dtype=float), self.a))

    def deriv2(self, x):
        return _f(np.zeros_like(np.asarray(x, dtype=float)))

    @property
    def strength(self):
        return abs(self.a)

    def lengths(self, mass, Q=1.0, relativistic=False):
        L = _balance_length(self.a, 1.0, mass, Q, relativistic)
        return [] if L is None else [L]

    def _params(self):
        return {"a": self.a}


@_register("harmonic")
@dataclass(frozen=True)
class Harmonic(Potential):
    """``a * x**2``."""

    a: float

    def value(self, x):
        return _f(self.a * np.square(x))

    def deriv(self, x):
        return _f(2.0 * self.a * np.asarray(x, dtype=float))

    def deriv2(self, x):
        return _f(np.full_like(np.asarray(x, dtype=float), 2.0 * self.a))

    @property
    def strength(self):
        return abs(self.a)

    def lengths(self, mass, Q=1.0, relativistic=False):
        L = _balance_length(self.a, 2.0, mass, Q, relativistic)
        return [] if L is None else [L]

    def _params(self):
        return {"a": self.a}


@_register("yukawa")
@dataclass(frozen=True)
class Yukawa(Potential):
    """``-g * exp(-beta x) / x``."""

    g: float
    beta: float

    def value(self, x):
        x = np.asarray(x, dtype=float)
        return _f(-self.g * np.exp(-self.beta * x) / x)

    def deriv(self, x):
        x = np.asarray(x, dtype=float)
        return _f(self.g * np.exp(-self.beta * x) * (1.0 + self.beta * x) / (x * x))

    def deriv2(self, x):
        x = np.asarray(x, dtype=float)
        b = self.beta
        return _f(-self.g * np.exp(-b * x) * (2.0 / x**3 + 2.0 * b / x**2 + b * b / x))

    @property
    def strength(self):
        return abs(self.g)

    @property
    def short_range(self):
        return True

    def lengths(self, mass, Q=1.0, relativistic=False):
        out = [1.0 / self.beta]
        L = _balance_length(self.g, -1.0, mass, Q, relativistic)
        return out if L is None else out + [L]

    def _params(self):
        return {"g": self.g, "beta": self.beta}


@_register("exponential")
@dataclass(frozen=True)
class Exponential(Potential):
    """``-g * exp(-beta x)``."""

    g: float
    beta: float

    def value(self, x):
        return _f(-self.g * np.exp(-self.beta * np.asarray(x, dtype=float)))

    def deriv(self, x):
        return _f(self.g * self.beta * np.exp(-self.beta * np.asarray(x, dtype=float)))

    def deriv2(self, x):
        return _f(-self.g * self.beta**2 * np.exp(-self.beta * np.asarray(x, dtype=float)))

    @property
    def strength(self):
        return abs(self.g)

    @property
    def short_range(self):
        return True

    def lengths(self, mass, Q=1.0, relativistic=False):
        out = [1.0 / self.beta]
        L = _balance_length(self.g, 0.0, mass, Q, relativistic)
        return out if L is None else out + [L]

    def _params(self):
        return {"g": self.g, "beta": self.beta}


@_register("log")
@dataclass(frozen=True)
class Logarithmic(Potential):
    """``a * ln(b x)``."""

    a: float
    b: float

    def value(self, x):
        return _f(self.a * np.log(self.b * np.asarray(x, dtype=float)))

    def deriv(self, x):
        return _f(self.a / np.asarray(x, dtype=float))

    def deriv2(self, x):
        return _f(-self.a / np.square(x))

    @property
    def strength(self):
        return abs(self.a)

    def lengths(self, mass, Q=1.0, relativistic=False):
        out = [1.0 / self.b]
        L = _balance_length(self.a, 0.0, mass, Q, relativistic)
        return out if L is None else out + [L]

    def _params(self):
        return {"a": self.a, "b": self.b}


@_register("sqrt")
@dataclass(frozen=True)
class SquareRoot(Potential):
    """``a * sqrt(x**2 + b**2)``."""

    a: float
    b: float

    def value(self, x):
        return _f(self.a * np.sqrt(np.square(x) + self.b**2))

    def deriv(self, x):
        x = np.asarray(x, dtype=float)
        return _f(self.a * x / np.sqrt(x * x + self.b**2))

    def deriv2(self, x):
        x = np.asarray(x, dtype=float)
        return _f(self.a * self.b**2 / (x * x + self.b**2) ** 1.5)

    @property
    def strength(self):
        return abs(self.a)

    def lengths(self, mass, Q=1.0, relativistic=False):
        out = [self.b] if self.b > 0 else []
        L = _balance_length(self.a, 1.0, mass, Q, relativistic)
        return out if L is None else out + [L]

    def _params(self):
        return {"a": self.a, "b": self.b}


@_register("funnel")
@dataclass(frozen=True)
class Funnel(Potential):
    """``a * x - b / x``."""

    a: float
    b: float

    def value(self, x):
        x = np.asarray(x, dtype=float)
        return _f(self.a * x - self.b / x)

    def deriv(self, x):
        return _f(self.a + self.b / np.square(x))

    def deriv2(self, x):
        return _f(-2.0 * self.b / np.power(x, 3))

    def lengths(self, mass, Q=1.0, relativistic=False):
        out = []
        for s, lam in ((self.a, 1.0), (self.b, -1.0)):
            L = _balance_length(s, lam, mass, Q, relativistic)
            if L is not None:
                out.append(L)
        return out

    def _params(self):
        return {"a": self.a, "b": self.b}


@_register("sum")
@dataclass(frozen=True)
class Sum(Potential):
    """Sum of potentials (covers sums of power laws)."""

    terms: tuple

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        if not self.terms:
            raise SpecError("sum potential needs at least one term")

    def value(self, x):
        return _f(sum(np.asarray(t.value(x)) for t in self.terms))

    def deriv(self, x):
        return _f(sum(np.asarray(t.deriv(x)) for t in self.terms))

    def deriv2(self, x):
        return _f(sum(np.asarray(t.deriv2(x)) for t in self.terms))

    @property
    def short_range(self):
        return all(t.short_range for t in self.terms)

    def lengths(self, mass, Q=1.0, relativistic=False):
        return [L for t in self.terms for L in t.lengths(mass, Q, relativistic)]

    def to_dict(self):
        return {"form": "sum", "terms": [t.to_dict() for t in self.terms]}


@_register("scaled")
@dataclass(frozen=True)
class Scaled(Potential):
    """``factor * inner(arg_scale * x)``."""

    inner: Potential
    factor: float = 1.0
    arg_scale: float = 1.0

    def value(self, x):
        return _f(self.factor * np.asarray(self.inner.value(self.arg_scale * np.asarray(x, dtype=float))))

    def deriv(self, x):
        s = self.arg_scale
        return _f(self.factor * s * np.asarray(self.inner.deriv(s * np.asarray(x, dtype=float))))

    def deriv2(self, x):
        s = self.arg_scale
        return _f(self.factor * s * s * np.asarray(self.inner.deriv2(s * np.asarray(x, dtype=float))))

    @property
    def strength(self):
        return abs(self.factor) * self.inner.strength

    @property
    def short_range(self):
        return self.inner.short_range

    def lengths(self, mass, Q=1.0, relativistic=False):
        return [L / self.arg_scale for L in self.inner.lengths(mass, Q, relativistic)]

    def to_dict(self):
        return {
            "form": "scaled",
            "factor": self.factor,
            "arg_scale": self.arg_scale,
            "inner": self.inner.to_dict(),
        }


@dataclass(frozen=True)
class Custom(Potential):
    """User-supplied callable with explicit first and second derivatives.

    Not serializable. ``reduced_precision`` is set by :meth:`from_function`,
    whose derivatives come from central finite differences.
    """

    func: Callable
    d1: Callable
    d2: Callable
    is_short_range: bool = False
    length: float = 1.0
    reduced_precision: bool = False
    form: ClassVar[str] = "custom"

    def value(self, x):
        return _f(self.func(np.asarray(x, dtype=float)))

    def deriv(self, x):
        return _f(self.d1(np.asarray(x, dtype=float)))

    def deriv2(self, x):
        return _f(self.d2(np.asarray(x, dtype=float)))

    @property
    def short_range(self):
        return self.is_short_range

    def lengths(self, mass, Q=1.0, relativistic=False):
        return [self.length]

    @classmethod
    def from_function(cls, func: Callable, rel_step: float = 1e-4, **kw) -> Custom:
        def d1(x):
            h = rel_step * np.maximum(np.abs(x), 1e-8)
            return (func(x + h) - func(x - h)) / (2 * h)

        def d2(x):
            h = rel_step * np.maximum(np.abs(x), 1e-8)
            return (func(x + h) - 2 * func(x) + func(x - h)) / (h * h)

        return cls(func, d1, d2, reduced_precision=True, **kw)

    def to_dict(self):
        raise SpecError("custom callables cannot be serialized; use a tabulated potential")


@_register("tabulated")
@dataclass(frozen=True, eq=False)
class Tabulated(Potential):
    """Cubic-spline interpolation of tabulated ``(x, y)`` samples."""

    x: tuple
    y: tuple
    is_short_range: bool = False
    _spline: Any = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        xs = np.asarray(self.x, dtype=float)
        ys = np.asarray(self.y, dtype=float)
        if xs.ndim != 1 or xs.shape != ys.shape or len(xs) < 4 or np.any(np.diff(xs) <= 0):
            raise SpecError("tabulated potential needs >= 4 strictly increasing samples")
        object.__setattr__(self, "x", tuple(xs))
        object.__setattr__(self, "y", tuple(ys))
        object.__setattr__(self, "_spline", CubicSpline(xs, ys))

    def value(self, x):
        return _f(self._spline(x))

    def deriv(self, x):
        return _f(self._spline(x, 1))

    def deriv2(self, x):
        return _f(self._spline(x, 2))

    @property
    def short_range(self):
        return self.is_short_range

    def lengths(self, mass, Q=1.0, relativistic=False):
        return [math.sqrt(self.x[0] * self.x[-1])]

    def to_dict(self):
        return {"form": "tabulated", "x": list(self.x), "y": list(self.y), "short_range": self.is_short_range}


def potential_from_dict(d: dict) -> Potential:
    """Inverse of ``Potential.to_dict``."""
    try:
        form = d["form"]
    except (KeyError, TypeError):
        raise SpecError(f"potential spec needs a 'form': {d!r}") from None
    cls = _FORMS.get(form)
    if cls is None:
        raise SpecError(f"unknown potential form {form!r}")
    try:
        if form == "sum":
            return Sum(tuple(potential_from_dict(t) for t in d["terms"]))
        if form == "scaled":
            return Scaled(potential_from_dict(d["inner"]), float(d.get("factor", 1.0)), float(d.get("arg_scale", 1.0)))
        if form == "tabulated":
            return Tabulated(tuple(d["x"]), tuple(d["y"]), bool(d.get("short_range", False)))
        if form == "power":
            return PowerLaw.from_params(d)
        names = [f for f in cls.__dataclass_fields__ if f != "form"]
        return cls(**{n: float(d[n]) for n in names})
    except KeyError as exc:
        raise SpecError(f"potential {form!r} is missing parameter {exc}") from None


# ---------------------------------------------------------------------------
# Auxiliary forms and bound characters
# ---------------------------------------------------------------------------


class AuxiliaryForm(str, enum.Enum):
    QUADRATIC = "quadratic"
    COULOMB = "coulomb"
    LINEAR = "linear"

    def P(self, x):
        x = np.asarray(x, dtype=float)
        if self is AuxiliaryForm.QUADRATIC:
            return x * x
        if self is AuxiliaryForm.COULOMB:
            return -1.0 / x
        return x

    def dP(self, x):
        x = np.asarray(x, dtype=float)
        if self is AuxiliaryForm.QUADRATIC:
            return 2.0 * x
        if self is AuxiliaryForm.COULOMB:
            return 1.0 / (x * x)
        return np.ones_like(x)


class BoundCharacter(str, enum.Enum):
    UPPER = "upper"
    LOWER = "lower"
    EXACT = "exact"
    INDEFINITE = "indefinite"


TANGENT_GRID_POINTS = 400
TANGENT_GRID_SPAN = 50.0
TANGENT_RTOL = 1e-9


def tangent_classify(pot: Potential, aux: AuxiliaryForm, x_star: float, grid=None) -> BoundCharacter:
    """Compare ``pot`` with its auxiliary tangent ``nu*P(x) + c`` touching at ``x_star``.

    ``LOWER`` means the potential lies above the tangent everywhere on the grid,
    so the auxiliary Hamiltonian is smaller and the AFM energy is a lower bound
    (NR kinematics). ``UPPER`` is the reverse; ``EXACT`` means both hold.
    """
    aux = AuxiliaryForm(aux)
    dp = float(aux.dP(x_star))
    if dp == 0 or not math.isfinite(dp):
        raise DegenerateTangent(f"P'({x_star}) vanishes")
    nu = pot.deriv(x_star) / dp
    c = pot.value(x_star) - nu * float(aux.P(x_star))
    if grid is None:
        grid = np.geomspace(x_star / TANGENT_GRID_SPAN, x_star * TANGENT_GRID_SPAN, TANGENT_GRID_POINTS)
    grid = np.asarray(grid, dtype=float)
    v = np.asarray(pot.value(grid))
    diff = v - (nu * aux.P(grid) + c)
    tol = TANGENT_RTOL * (1.0 + np.abs(v))
    above = bool(np.all(diff >= -tol))
    below = bool(np.all(diff <= tol))
    if above and below:
        return BoundCharacter.EXACT
    if above:
        return BoundCharacter.LOWER
    if below:
        return BoundCharacter.UPPER
    return BoundCharacter.INDEFINITE


def combine_bounds(chars) -> BoundCharacter:
    """Joint character of several envelope comparisons that must all hold."""
    chars = set(chars)
    if not chars or chars == {BoundCharacter.EXACT}:
        return BoundCharacter.EXACT
    if chars <= {BoundCharacter.EXACT, BoundCharacter.UPPER}:
        return BoundCharacter.UPPER
    if chars <= {BoundCharacter.EXACT, BoundCharacter.LOWER}:
        return BoundCharacter.LOWER
    return BoundCharacter.INDEFINITE


# ---------------------------------------------------------------------------
# System
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SystemSpec:
    """N identical particles with optional one-body ``U`` and two-body ``V`` terms."""

    n_particles: int
    kinematics: Kinematics
    one_body: Potential | None = None
    two_body: Potential | None = None
    fold_one_body: bool = True

    def __post_init__(self):
        N = self.n_particles
        if not isinstance(N, (int, np.integer)) or N < 1:
            raise SpecError("n_particles must be an integer >= 1")
        if self.one_body is None and self.two_body is None:
            raise SpecError("at least one potential is required")
        if N == 1 and self.two_body is not None:
            raise SpecError("a single particle has no two-body potential")
        if N == 2 and self.one_body is not None and not self.fold_one_body:
            raise SpecError("for N = 2 the one-body potential must be folded into the two-body one")
        if self.kinematics.m2 is not None and N != 2:
            raise SpecError("unequal masses are only supported for N = 2")

    @property
    def pair_count(self) -> int:
        N = self.n_particles
        return N * (N - 1) // 2

    def reduced(self) -> tuple[Potential | None, Potential | None]:
        """Potentials entering the solver; for N = 2, ``U`` is folded as ``2 U(r/2)``."""
        U, V = self.one_body, self.two_body
        if self.n_particles == 2 and U is not None:
            folded = U.scaled(2.0, 0.5)
            return None, folded if V is None else Sum((V, folded))
        return U, V

    def to_dict(self) -> dict:
        d: dict[str, Any] = {"N": self.n_particles, "kinematics": self.kinematics.to_dict()}
        if self.two_body is not None:
            d["two_body"] = self.two_body.to_dict()
        if self.one_body is not None:
            d["one_body"] = self.one_body.to_dict()
        return d

    @classmethod
    def from_dict(cls, d: dict) -> SystemSpec:
        try:
            N = int(d["N"])
            kin = Kinematics.from_dict(d["kinematics"])
        except KeyError as exc:
            raise SpecError(f"system spec is missing {exc}") from None
        U = potential_from_dict(d["one_body"]) if d.get("one_body") else None
        V = potential_from_dict(d["two_body"]) if d.get("two_body") else None
        return cls(N, kin, U, V)

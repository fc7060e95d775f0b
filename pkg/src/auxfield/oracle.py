"""Independent reference solvers used to check AFM results.

* :func:`nr_eigenvalue` -- radial Schroedinger equation by Numerov integration
  on a logarithmic grid with node-counting bisection, Richardson-extrapolated
  in the step and checked under grid doubling.
* :func:`sr_eigenvalue_swave` -- S-wave spinless Salpeter equation in a sine
  basis (kinetic term diagonal in momentum, potential diagonal in position).
* :func:`expectation` -- radial quadrature over the Numerov wavefunction.
* :func:`critical_bisection` -- coupling at which a short-range potential
  starts binding a given state, from zero-energy node counting.

None of these routines use the AFM machinery.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import linalg
from scipy.integrate import simpson

from . import _numerov
from .errors import NoBoundState, NotConverged, SpecError
from .model import Potential

DEFAULT_STEP = 0.004
INNER_FACTOR = 1e-8
TAIL_ACTION = 25.0
NR_TOL = 1e-8
SR_TOL = 1e-6


class _NotInBox(Exception):
    pass


class _Unstable(NotConverged):
    pass


@dataclass(frozen=True)
class RadialProblem:
    """Radial eigenproblem ``-u''/(2 mu) + [V + l(l+1)/(2 mu r^2)] u = E u``.

    ``rest`` is added to every returned energy. ``r_max`` and ``step`` (the
    spacing of the logarithmic grid) are chosen automatically when ``None``.
    """

    mu: float
    potential: Potential
    l: int = 0
    n: int = 0
    r_max: float | None = None
    step: float | None = None
    rest: float = 0.0

    def __post_init__(self):
        if self.mu <= 0:
            raise SpecError("reduced mass must be positive")
        if self.l < 0 or self.n < 0:
            raise SpecError("quantum numbers must be non-negative")

    @classmethod
    def two_body(cls, m: float, potential: Potential, l: int = 0, n: int = 0, **kw) -> RadialProblem:
        """Two particles of mass ``m``: reduced mass ``m/2``, rest energy ``2m``."""
        return cls(0.5 * m, potential, l, n, rest=2.0 * m, **kw)

    @classmethod
    def one_body(cls, m: float, potential: Potential, l: int = 0, n: int = 0, **kw) -> RadialProblem:
        return cls(m, potential, l, n, rest=m, **kw)

    def lengths(self):
        L = [v for v in self.potential.lengths(self.mu, float(self.n + self.l + 1)) if v > 0 and math.isfinite(v)]
        return L or [1.0]

    def v_eff(self, r):
        r = np.asarray(r, dtype=float)
        return np.asarray(self.potential.value(r)) + self.l * (self.l + 1) / (2 * self.mu * r * r)


@dataclass(frozen=True)
class RadialSolution:
    energy: float
    error: float
    r_max: float
    step: float


class _Grid:
    def __init__(self, prob: RadialProblem, r_min: float, r_max: float, h: float):
        npts = int(math.ceil(math.log(r_max / r_min) / h)) + 1
        self.x = math.log(r_min) + h * np.arange(npts)
        self.r = np.exp(self.x)
        self.h = h
        k = prob.l + 0.5
        self.B = 2.0 * prob.mu * self.r**2
        self.A = self.B * np.asarray(prob.potential.value(self.r)) + k * k
        self.veff = prob.v_eff(self.r)
        self.phi0 = 1.0
        self.phi1 = math.exp(k * h)

    def nodes(self, E):
        return _numerov.count_nodes(self.A, self.B, E, self.h, self.phi0, self.phi1)[0]


def _r_min(prob):
    return INNER_FACTOR * min(prob.lengths())


def _bisect_level(grid: _Grid, n: int, short_range: bool) -> float:
    # Numerov stays stable (no spurious nodes) while h^2 |g| / 12 <= 1/2
    stable = float(np.max(grid.A / grid.B - 6.0 / (grid.h**2 * grid.B)))
    lo = max(float(np.min(grid.veff)), stable)
    if grid.nodes(lo) > n:
        raise _Unstable("requested level lies below the grid's stable energy range")
    if short_range:
        hi = 0.0
        if grid.nodes(hi) < n + 1:
            raise _NotInBox
    else:
        span = max(1.0, abs(lo))
        hi = lo + span
        while grid.nodes(hi) < n + 1:
            span *= 2.0
            hi = lo + span
            if span > 1e30:
                raise NotConverged("could not bracket the requested level")
    for _ in range(400):
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        if grid.nodes(mid) >= n + 1:
            hi = mid
        else:
            lo = mid
        if hi - lo <= 2e-16 * max(abs(lo), abs(hi)):
            break
    return 0.5 * (lo + hi)


def _level(prob, R, h):
    grid = _Grid(prob, _r_min(prob), R, h)
    return _bisect_level(grid, prob.n, prob.potential.short_range)


def _radius_for_action(prob, E, target=TAIL_ACTION):
    """Radius beyond the outer turning point at which the WKB decay action reaches ``target``."""
    ell = max(prob.lengths())
    R = 10.0 * ell
    while R < 1e12 * ell:
        r = np.geomspace(_r_min(prob), R, 4000)
        v = prob.v_eff(r)
        inside = np.nonzero(v < E)[0]
        if inside.size and inside[-1] < r.size - 1:
            i = inside[-1]
            kappa = np.sqrt(2 * prob.mu * np.clip(v[i:] - E, 0.0, None))
            action = np.concatenate([[0.0], np.cumsum(0.5 * (kappa[1:] + kappa[:-1]) * np.diff(r[i:]))])
            if action[-1] >= target:
                return float(np.interp(target, action, r[i:]))
        R *= 4.0
    raise NotConverged("bound state does not decay within the search range")


def zero_energy_nodes(mu: float, potential: Potential, l: int = 0, step: float = DEFAULT_STEP):
    """Number of bound states of angular momentum ``l`` (short-range ``potential``).

    Counts nodes of the regular zero-energy solution, adding the node beyond
    the grid predicted by the free solution ``A r^(l+1) + B r^(-l)``.
    """
    lengths = [v for v in potential.lengths(mu, 1.0) if v > 0 and math.isfinite(v)] or [1.0]
    r_min = INNER_FACTOR * min(lengths)
    R = max(lengths)
    while abs(2 * mu * R * R * potential.value(R)) > 1e-14 and R < 1e8 * max(lengths):
        R *= 1.5
    prob = RadialProblem(mu, potential, l)
    grid = _Grid(prob, r_min, R, step)
    nodes, y, y_prev = _numerov.count_nodes(grid.A, grid.B, 0.0, step, grid.phi0, grid.phi1)
    k = l + 0.5
    # phi = a e^{k x} + b e^{-k x} beyond the grid, matched on the last two points
    x1, x0 = grid.x[-1], grid.x[-2]
    det = math.exp(k * (x1 - x0)) - math.exp(k * (x0 - x1))
    a = (y * math.exp(-k * x0) - y_prev * math.exp(-k * x1)) / det
    if a != 0.0 and math.copysign(1.0, a) != math.copysign(1.0, y):
        nodes += 1
    return nodes


def _auto_radius(prob):
    if prob.r_max is not None:
        return prob.r_max
    R = 5.0 * max(prob.lengths()) * (prob.n + prob.l + 1)
    h = prob.step or DEFAULT_STEP
    for _ in range(60):
        try:
            E = _level(prob, R, h)
        except _Unstable:
            R *= 0.5
            continue
        except _NotInBox:
            if zero_energy_nodes(prob.mu, prob.potential, prob.l) < prob.n + 1:
                raise NoBoundState(f"no bound state with n={prob.n}, l={prob.l}") from None
            R *= 4.0
            continue
        need = _radius_for_action(prob, E)
        if need <= R <= 1.5 * need:
            return R
        R = 1.2 * need
    raise NotConverged("could not choose an outer radius")


def _richardson(prob, R, h):
    e1 = _level(prob, R, h)
    e2 = _level(prob, R, 0.5 * h)
    return e2 + (e2 - e1) / 15.0


def solve_radial(prob: RadialProblem, tol: float = NR_TOL) -> RadialSolution:
    """Eigenvalue with error estimate from doubling both the radius and the point density."""
    R = _auto_radius(prob)
    h = prob.step or DEFAULT_STEP
    try:
        e = _richardson(prob, R, h)
        e_fine = _richardson(prob, 2.0 * R, 0.5 * h)
    except _NotInBox:
        raise NotConverged("state lost while refining the grid") from None
    err = abs(e_fine - e)
    if err > tol * (1.0 + abs(e_fine)):
        raise NotConverged(f"grid doubling changed the energy by {err:.3e}")
    return RadialSolution(e_fine + prob.rest, err, 2.0 * R, 0.5 * h)


def nr_eigenvalue(prob: RadialProblem, tol: float = NR_TOL) -> float:
    """Total energy (rest energy included) of the requested radial state."""
    return solve_radial(prob, tol).energy


def _wavefunction(prob, R, h):
    grid = _Grid(prob, _r_min(prob), R, h)
    E = _bisect_level(grid, prob.n, prob.potential.short_range)
    npts = grid.x.size
    inside = np.nonzero(grid.veff < E)[0]
    m = int(inside[-1]) if inside.size else npts // 2
    m = min(max(m, 2), npts - 3)
    out = _numerov.sweep_out(grid.A, grid.B, E, h, grid.phi0, grid.phi1, m)
    inn = _numerov.sweep_in(grid.A, grid.B, E, h, m - 1)
    phi = np.concatenate([out[:m], inn[m:] * (out[m] / inn[m])])
    weight = phi**2 * np.exp(2.0 * grid.x)
    weight /= simpson(weight, x=grid.x)
    return grid, weight


def expectation(prob: RadialProblem, f) -> float:
    """``<f(r)>`` in the requested state, Richardson-extrapolated in the step."""
    R = _auto_radius(prob)
    h = prob.step or DEFAULT_STEP
    vals = []
    for hh in (h, 0.5 * h):
        grid, w = _wavefunction(prob, R, hh)
        vals.append(simpson(np.asarray(f(grid.r), dtype=float) * w, x=grid.x))
    return float(vals[1] + (vals[1] - vals[0]) / 15.0)


def radial_density(prob: RadialProblem):
    """``(r, rho)`` with ``rho = |u(r)|^2`` normalized on the returned grid."""
    R = _auto_radius(prob)
    grid, w = _wavefunction(prob, R, 0.5 * (prob.step or DEFAULT_STEP))
    return grid.r, w / grid.r


def critical_bisection(
    potential: Potential, m: float, l: int = 0, n: int = 0, step: float = DEFAULT_STEP, rtol: float = 1e-12
) -> float:
    """Critical coupling for the two-body state ``(n, l)``, in units of the potential's own coupling.

    The kinetic term is ``p**2/m`` (two particles of mass ``m``). The state is
    bound iff the regular zero-energy solution has at least ``n + 1`` nodes.
    """
    if not potential.short_range:
        raise SpecError("critical couplings need a potential vanishing at infinity")
    mu = 0.5 * m
    unit = potential.scaled(1.0 / potential.strength)

    def bound(g, hh):
        return zero_energy_nodes(mu, unit.scaled(g), l, hh) >= n + 1

    def bisect(hh):
        hi = 1.0
        while not bound(hi, hh):
            hi *= 2.0
            if hi > 1e12:
                raise NotConverged("no binding found up to very large coupling")
        lo = 0.5 * hi
        while bound(lo, hh):
            hi, lo = lo, 0.5 * lo
        while hi - lo > rtol * hi:
            mid = 0.5 * (lo + hi)
            if bound(mid, hh):
                hi = mid
            else:
                lo = mid
        return 0.5 * (lo + hi)

    g1, g2, g3 = bisect(step), bisect(0.5 * step), bisect(0.25 * step)
    coarse = g2 + (g2 - g1) / 15.0
    fine = g3 + (g3 - g2) / 15.0
    if abs(fine - coarse) > 1e-6 * fine:
        raise NotConverged(f"critical coupling not converged: {coarse} vs {fine}")
    return fine


# ---------------------------------------------------------------------------
# semirelativistic S-wave oracle
# ---------------------------------------------------------------------------


def _sine_levels(m, potential, R, K, n):
    j = np.arange(1, K + 1)
    S = math.sqrt(2.0 / (K + 1)) * np.sin(math.pi * np.outer(j, j) / (K + 1))
    p = j * math.pi / R
    kin = 2.0 * p * p / (np.sqrt(p * p + m * m) + m)
    H = (S * kin) @ S
    r = j * R / (K + 1)
    H[np.diag_indices(K)] += np.asarray(potential.value(r))
    return linalg.eigh(H, eigvals_only=True, subset_by_index=[0, n])


@dataclass(frozen=True)
class SineBasisResult:
    energies: np.ndarray
    error: float
    r_max: float
    size: int


def sr_levels_swave(
    m: float,
    potential: Potential,
    n: int = 0,
    r_max: float | None = None,
    density: float | None = None,
    tol: float = SR_TOL,
    max_size: int = 3000,
) -> SineBasisResult:
    """Lowest ``n + 1`` S-wave levels of ``2 sqrt(p^2 + m^2) + V(r)`` (rest energy included).

    Only confining potentials are supported. The box radius and the basis size
    are doubled together (fixed density, in functions per unit length) until
    every level changes by less than ``tol`` relative. For ``m = 0`` the box
    error decays only algebraically, so several doublings may be needed.
    """
    ell = max([v for v in potential.lengths(m, float(n + 1), True) if v > 0] or [1.0])
    density = density if density is not None else 20.0 / ell

    def size(RR):
        return max(int(density * RR), 100)

    R = r_max if r_max is not None else 10.0 * ell
    if r_max is None:
        for _ in range(40):
            e = _sine_levels(m, potential, R, size(R), n)[-1]
            # outer classical turning point of the highest requested level
            rs = np.linspace(R / 400, R, 400)
            allowed = rs[np.asarray(potential.value(rs)) < e]
            r_t = allowed[-1] if allowed.size else R
            if R >= 2.5 * r_t + 4 * ell or size(R) > max_size:
                break
            R = 2.5 * r_t + 4 * ell
    prev = _sine_levels(m, potential, R, size(R), n)
    while size(2 * R) <= max_size:
        R *= 2
        cur = _sine_levels(m, potential, R, size(R), n)
        err = float(np.max(np.abs(cur - prev) / np.maximum(1.0, np.abs(cur))))
        if err <= tol:
            return SineBasisResult(cur + 2 * m, err, R, size(R))
        prev = cur
    raise NotConverged(f"sine basis not converged within {max_size} functions")


def sr_eigenvalue_swave(m: float, potential: Potential, n: int = 0, **kw) -> float:
    """Energy of the ``n``-th S-wave level of the two-body spinless Salpeter equation."""
    return float(sr_levels_swave(m, potential, n, **kw).energies[n])

"""Command-line front end.

Problem files are JSON objects holding a system (``N``, ``kinematics``,
``one_body``, ``two_body``) plus optional ``quantum`` and ``perturbation``
entries::

    {"N": 2, "kinematics": {"type": "NR", "m": 1.0},
     "two_body": {"form": "coulomb", "g": 1.0},
     "quantum": {"mode": "explicit", "states": [[0, 0]], "aux": "coulomb"}}

Exit status is 0 on success, 1 for invalid input and 2 when a solver fails.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import re
import sys
from dataclasses import dataclass, field

from . import afm, critical, oracle
from .errors import AuxFieldError, SolverError, SpecError
from .model import (
    AuxiliaryForm,
    Exponential,
    Funnel,
    Kinematics,
    Linear,
    Logarithmic,
    PowerLaw,
    SquareRoot,
    SystemSpec,
    Yukawa,
)
from .perturb import PerturbationSpec, first_order
from .qnum import QuantumSpec

CSV_COLUMNS = ("N", "Q", "n", "l", "M0", "r0", "p0", "bound", "virial_residual")
COMMANDS = ("solve", "spectrum", "critical", "perturb", "verify", "observables")


@dataclass
class RunConfig:
    command: str
    input: str | None = None
    format: str = "table"
    tol: float | None = None
    sweep: dict = field(default_factory=dict)
    aux: str | None = None
    modifier: tuple | None = None
    gnuplot: str | None = None
    error_json: bool = False
    suite: str = "bounds"
    shape: str = "yukawa"
    beta: float = 1.0
    m: float = 1.0
    Ns: tuple = (2,)
    gs: bool = False
    Q: float | None = None
    body: str = critical.TWO_BODY

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise SpecError(f"unknown command {self.command!r}")
        if self.format not in ("table", "csv", "json"):
            raise SpecError(f"unknown format {self.format!r}")
        if self.command in ("solve", "spectrum", "perturb", "observables") and not self.input:
            raise SpecError(f"{self.command} needs --input")
        if self.command == "critical" and not self.gs and self.Q is None:
            raise SpecError("critical needs --gs or --Q")


def parse_range(text: str) -> tuple:
    """``"2..6"`` -> (2, 3, 4, 5, 6); ``"3"`` -> (3,)."""
    m = re.fullmatch(r"\s*(\d+)\s*(?:\.\.\s*(\d+)\s*)?", text)
    if not m:
        raise SpecError(f"bad range {text!r}")
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) is not None else lo
    if hi < lo:
        raise SpecError(f"empty range {text!r}")
    return tuple(range(lo, hi + 1))


def parse_sweep(text: str) -> dict:
    """``"n=0..3,l=0..3"`` -> {"n": (0, 1, 2, 3), "l": (0, 1, 2, 3)}."""
    out = {}
    for part in text.split(","):
        key, sep, value = part.partition("=")
        key = key.strip()
        if not sep or key not in ("n", "l", "N"):
            raise SpecError(f"bad sweep item {part!r}")
        out[key] = parse_range(value)
    return out


def parse_modifier(text: str) -> tuple:
    try:
        vals = tuple(float(v) for v in text.split(","))
    except ValueError as exc:
        raise SpecError(f"bad modifier {text!r}") from exc
    if len(vals) != 3:
        raise SpecError("modifier needs three comma-separated numbers")
    return vals


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="auxfield", description="Auxiliary field method for N-body Hamiltonians.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--input", help="JSON problem file")
    p.add_argument("--format", default="table", choices=("table", "csv", "json"))
    p.add_argument("--tol", type=float, help="oracle tolerance override")
    p.add_argument("--sweep", help="quantum-number ranges, e.g. n=0..3,l=0..3[,N=2..4]")
    p.add_argument("--aux", choices=[a.value for a in AuxiliaryForm])
    p.add_argument("--modifier", help="alpha,beta,gamma replacing (2, 1, 3/2)")
    p.add_argument("--gnuplot", metavar="PATH", help="also write a two-column plot file")
    p.add_argument("--error-json", action="store_true", help="report errors as JSON on stdout")
    p.add_argument("--suite", default="bounds", choices=("bounds",))
    p.add_argument("--shape", default="yukawa", choices=("yukawa", "exponential"))
    p.add_argument("--beta", type=float, default=1.0)
    p.add_argument("--m", type=float, default=1.0)
    p.add_argument("--N", default="2", help="particle numbers, e.g. 2..6")
    p.add_argument("--gs", action="store_true", help="ground-state Q for every N")
    p.add_argument("--Q", type=float)
    p.add_argument("--body", default=critical.TWO_BODY, choices=(critical.TWO_BODY, critical.ONE_BODY))
    return p


def config_from_args(argv=None) -> RunConfig:
    a = build_parser().parse_args(argv)
    return RunConfig(
        command=a.command,
        input=a.input,
        format=a.format,
        tol=a.tol,
        sweep=parse_sweep(a.sweep) if a.sweep else {},
        aux=a.aux,
        modifier=parse_modifier(a.modifier) if a.modifier else None,
        gnuplot=a.gnuplot,
        error_json=a.error_json,
        suite=a.suite,
        shape=a.shape,
        beta=a.beta,
        m=a.m,
        Ns=parse_range(a.N),
        gs=a.gs,
        Q=a.Q,
        body=a.body,
    )


# -- problem files -------------------------------------------------------


def load_problem(path: str):
    """Read a problem file; returns (system, quantum dict or None, perturbation dict or None)."""
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise SpecError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SpecError(f"invalid JSON in {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise SpecError("problem file must hold a JSON object")
    try:
        system = SystemSpec.from_dict(data)
    except (KeyError, TypeError) as exc:
        raise SpecError(f"malformed system: {exc}") from exc
    return system, data.get("quantum"), data.get("perturbation")


def _quantum(qdict, cfg: RunConfig, states=None) -> QuantumSpec:
    d = dict(qdict or {})
    if cfg.aux:
        d["aux"] = cfg.aux
    if cfg.modifier is not None:
        d["modifier"] = list(cfg.modifier)
    if states is not None:
        d["mode"] = "explicit"
        d["states"] = states
        d.pop("Q", None)
    try:
        return QuantumSpec.from_dict(d)
    except (TypeError, ValueError) as exc:
        if isinstance(exc, SpecError):
            raise
        raise SpecError(f"malformed quantum spec: {exc}") from exc


def _solution_row(sol, N, n="", l=""):
    return {
        "N": N,
        "Q": sol.Q,
        "n": n,
        "l": l,
        "M0": sol.M0,
        "r0": sol.r0,
        "p0": sol.p0,
        "bound": sol.bound.value,
        "virial_residual": sol.virial_residual,
    }


# -- commands --------------------------------------------------------------


def cmd_solve(cfg):
    system, q, _ = load_problem(cfg.input)
    sol = afm.solve(system, _quantum(q, cfg))
    return [_solution_row(sol, system.n_particles)], sol.to_dict(), CSV_COLUMNS


def _sweep_states(N, n, l):
    # a single excited Jacobi coordinate, the others in their ground state
    return [[n, l]] + [[0, 0]] * (max(N - 1, 1) - 1)


def cmd_spectrum(cfg):
    system, q, _ = load_problem(cfg.input)
    Ns = cfg.sweep.get("N", (system.n_particles,))
    ns = cfg.sweep.get("n", (0,))
    ls = cfg.sweep.get("l", (0,))
    rows = []
    for N in Ns:
        sysN = SystemSpec(N, system.kinematics, system.one_body, system.two_body, system.fold_one_body)
        for n in ns:
            for l in ls:
                sol = afm.solve(sysN, _quantum(q, cfg, _sweep_states(N, n, l)))
                rows.append(_solution_row(sol, N, n, l))
    rows.sort(key=lambda r: (r["N"], r["n"], r["l"]))
    return rows, rows, CSV_COLUMNS


def _shape(cfg):
    if cfg.shape == "yukawa":
        return Yukawa(1.0, cfg.beta)
    return Exponential(1.0, cfg.beta)


def cmd_critical(cfg):
    aux = cfg.aux or AuxiliaryForm.QUADRATIC
    rows = critical.critical_table(_shape(cfg), cfg.Ns, cfg.m, cfg.body, None if cfg.gs else cfg.Q, aux)
    cols = ("N", "Q", "y0", "coupling", "bound_character", "ratio_next", "law_next", "ratio_to_N2", "law_to_N2")
    return rows, rows, cols


def cmd_perturb(cfg):
    system, q, pdict = load_problem(cfg.input)
    if not pdict:
        raise SpecError("perturb needs a 'perturbation' entry")
    try:
        pert = PerturbationSpec.from_dict(pdict)
    except (KeyError, TypeError) as exc:
        raise SpecError(f"malformed perturbation: {exc}") from exc
    base = afm.solve(system, _quantum(q, cfg))
    res = first_order(base, system, pert)
    row = {"M0": base.M0, **res.to_dict()}
    return [row], row, ("M0", "M1", "delta", "r1", "p1")


def cmd_observables(cfg):
    system, q, _ = load_problem(cfg.input)
    sol = afm.solve(system, _quantum(q, cfg))
    row = {"N": system.n_particles, "Q": sol.Q, **afm.observables(sol, system.n_particles)}
    return [row], row, ("N", "Q", "mean_p_sq", "mean_s_sq", "mean_rij_sq")


BOUND_SUITE = (
    ("sqrt_power", PowerLaw(1.0, 0.5)),
    ("linear", Linear(1.0)),
    ("square_root", SquareRoot(1.0, 1.0)),
    ("log", Logarithmic(1.0, 1.0)),
    ("funnel", Funnel(1.0, 0.5)),
)
BOUND_STATES = ((0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2))


def bound_sandwich(potential, states=BOUND_STATES, m: float = 1.0, tol: float = oracle.NR_TOL):
    """Rows comparing AFM(Coulomb-like) <= exact <= AFM(quadratic) for an NR pair."""
    system = SystemSpec(2, Kinematics.nonrelativistic(m), two_body=potential)
    rows = []
    for n, l in states:
        lo = afm.solve(system, QuantumSpec.explicit([(n, l)], AuxiliaryForm.COULOMB)).M0
        hi = afm.solve(system, QuantumSpec.explicit([(n, l)], AuxiliaryForm.QUADRATIC)).M0
        exact = oracle.nr_eigenvalue(oracle.RadialProblem.two_body(m, potential, l, n), tol)
        slack = 10 * tol * max(1.0, abs(exact))
        rows.append({
            "n": n,
            "l": l,
            "lower": lo,
            "exact": exact,
            "upper": hi,
            "margin_lower": exact - lo,
            "margin_upper": hi - exact,
            "violation": lo > exact + slack or hi < exact - slack,
        })
    return rows


def cmd_verify(cfg):
    tol = cfg.tol or oracle.NR_TOL
    rows = []
    for name, pot in BOUND_SUITE:
        for r in bound_sandwich(pot, tol=tol):
            rows.append({"potential": name, **r})
    cols = ("potential", "n", "l", "lower", "exact", "upper", "margin_lower", "margin_upper", "violation")
    return rows, {"rows": rows, "violations": sum(r["violation"] for r in rows)}, cols


HANDLERS = {
    "solve": cmd_solve,
    "spectrum": cmd_spectrum,
    "critical": cmd_critical,
    "perturb": cmd_perturb,
    "verify": cmd_verify,
    "observables": cmd_observables,
}


# -- output ----------------------------------------------------------------


def _fmt(v):
    if isinstance(v, float):
        return "" if math.isnan(v) else f"{v:.12g}"
    return "" if v is None else str(v)


def render(rows, payload, columns, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2, allow_nan=True)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(columns)
        for r in rows:
            w.writerow([_fmt(r.get(c)) for c in columns])
        return buf.getvalue().rstrip("\n")
    cells = [list(columns)] + [[_fmt(r.get(c)) for c in columns] for r in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(columns))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def _gnuplot(path, cfg, rows):
    key = {"critical": ("N", "coupling"), "verify": (None, "exact")}.get(cfg.command, (None, "M0"))
    with open(path, "w") as fh:
        fh.write(f"# {key[0] or 'index'} {key[1]}\n")
        for i, r in enumerate(rows):
            x = r[key[0]] if key[0] else i
            fh.write(f"{x} {_fmt(r.get(key[1]))}\n")


def run(cfg: RunConfig, out=None) -> int:
    """Execute ``cfg`` and write the report to ``out``; returns the exit status."""
    out = sys.stdout if out is None else out
    rows, payload, columns = HANDLERS[cfg.command](cfg)
    print(render(rows, payload, columns, cfg.format), file=out)
    if cfg.command == "verify" and cfg.format != "json":
        print(f"violations: {payload['violations']}", file=out)
    if cfg.gnuplot:
        _gnuplot(cfg.gnuplot, cfg, rows)
    if cfg.command == "verify" and payload["violations"]:
        return 2
    return 0


def _report_error(exc, code, as_json, out, err):
    if as_json:
        doc = {"error": type(exc).__name__, "message": str(exc), "exit_code": code}
        if getattr(exc, "brackets", None):
            doc["brackets"] = [list(b) for b in exc.brackets]
        print(json.dumps(doc), file=out)
    else:
        print(f"error: {type(exc).__name__}: {exc}", file=err)
    return code


def main(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    as_json = "--error-json" in (sys.argv[1:] if argv is None else argv)
    try:
        cfg = config_from_args(argv)
        return run(cfg, out)
    except SpecError as exc:
        return _report_error(exc, 1, as_json, out, err)
    except SolverError as exc:
        return _report_error(exc, 2, as_json, out, err)
    except AuxFieldError as exc:
        return _report_error(exc, 2, as_json, out, err)
    except SystemExit as exc:
        # argparse usage errors
        return 1 if exc.code else 0


if __name__ == "__main__":
    sys.exit(main())

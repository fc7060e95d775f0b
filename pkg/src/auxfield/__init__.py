"""Auxiliary field method for N-body quantum Hamiltonians.

Approximate eigenmasses from the mean-radius / mean-momentum system, their
classification as upper or lower bounds, first-order perturbative corrections,
critical coupling constants, and exact reference solvers to check them.
"""

from .afm import (
    AfmSolution,
    ground_state_lower_bound,
    observables,
    quartic_root,
    solve,
    solve_sqrt_closed_form,
    sqrt_system,
)
from .critical import CriticalResult, critical_one_body, critical_table, critical_two_body, gs_scaling_laws
from .errors import AuxFieldError, SolverError, SpecError
from .model import (
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
    potential_from_dict,
    tangent_classify,
)
from .perturb import PerturbationSpec, PerturbedSolution, compare_with_mean_value, first_order
from .qnum import QuantumSpec, airy_zero, global_q

__all__ = [
    "AfmSolution", "AuxFieldError", "AuxiliaryForm", "BoundCharacter", "Coulomb", "CriticalResult", "Custom",
    "Exponential", "Funnel", "Harmonic", "Kinematics", "Linear", "Logarithmic", "PerturbationSpec",
    "PerturbedSolution", "PowerLaw", "QuantumSpec", "SolverError", "SpecError", "SquareRoot", "Sum",
    "SystemSpec", "Tabulated", "Yukawa", "airy_zero", "compare_with_mean_value", "critical_one_body",
    "critical_table", "critical_two_body", "first_order", "global_q", "ground_state_lower_bound",
    "observables", "potential_from_dict", "quartic_root", "solve", "solve_sqrt_closed_form", "sqrt_system",
    "tangent_classify", "gs_scaling_laws",
]

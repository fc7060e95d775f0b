"""
A small linear term on top of hydrogen
======================================

The first-order AFM shift is ``eps v(r0)``, evaluated at the mean radius,
where ordinary perturbation theory would use ``eps <v>``. The defect against
a full re-solve shrinks as ``eps**2``.
"""

from auxfield import (
    AuxiliaryForm,
    Coulomb,
    Kinematics,
    Linear,
    PerturbationSpec,
    QuantumSpec,
    SystemSpec,
    compare_with_mean_value,
    first_order,
    solve,
)

system = SystemSpec(2, Kinematics.nonrelativistic(1.0), two_body=Coulomb(1.0))
q = QuantumSpec.ground_state(AuxiliaryForm.COULOMB)
base = solve(system, q)

for eps in (1e-2, 5e-3, 2.5e-3):
    pert = PerturbationSpec(eps=eps, v=Linear(1.0))
    approx = first_order(base, system, pert)
    direct = solve(pert.apply(system), q)
    print(f"eps={eps:<7g} M1={approx.M1:.10f} direct={direct.M0:.10f} defect={abs(direct.M0 - approx.M1):.3e}")

rep = compare_with_mean_value(base, system, PerturbationSpec(eps=1e-3, v=Linear(1.0)))
print(f"AFM shift {rep.afm_shift:.6g} vs <v> shift {rep.mean_value_shift:.6g}")

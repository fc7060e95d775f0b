"""
Upper and lower bounds from two auxiliary forms
===============================================

A linear confinement ``a r`` is bent the wrong way to be matched by a
harmonic tangent everywhere, and the right way for a Coulomb tangent. The
two AFM answers therefore bracket the exact levels.
"""

from auxfield import AuxiliaryForm, Kinematics, Linear, QuantumSpec, SystemSpec, solve
from auxfield.oracle import RadialProblem, nr_eigenvalue

pot = Linear(1.0)
system = SystemSpec(2, Kinematics.nonrelativistic(1.0), two_body=pot)

print(f"{'n':>2} {'l':>2} {'coulomb-like':>13} {'exact':>13} {'quadratic':>13}")
for n, l in [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]:
    low = solve(system, QuantumSpec.explicit([(n, l)], AuxiliaryForm.COULOMB))
    high = solve(system, QuantumSpec.explicit([(n, l)], AuxiliaryForm.QUADRATIC))
    exact = nr_eigenvalue(RadialProblem.two_body(1.0, pot, l, n))
    print(f"{n:>2} {l:>2} {low.M0:13.8f} {exact:13.8f} {high.M0:13.8f}")

# The bound character comes from the tangent test, not from the comparison.
print(low.bound.value, high.bound.value)

"""
N bosons bound by harmonic pair forces
======================================

Harmonic pair forces are the one case where the quadratic auxiliary form is
exact for every N. The mean radius also fixes the pair distance.
"""

import math

from auxfield import Harmonic, Kinematics, QuantumSpec, SystemSpec, observables, solve

m, a = 1.0, 1.0
for N in range(2, 8):
    sol = solve(SystemSpec(N, Kinematics.nonrelativistic(m), two_body=Harmonic(a)), QuantumSpec.ground_state())
    exact = N * m + sol.Q * math.sqrt(2 * a * N / m)
    obs = observables(sol, N)
    print(f"N={N}  M0={sol.M0:.12f}  exact={exact:.12f}  <r_ij^2>={obs['mean_rij_sq']:.6f}  {sol.bound.value}")

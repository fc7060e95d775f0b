"""
Massless constituents in a linear potential
===========================================

For ``2|p| + a r`` the AFM gives ``2 sqrt(2 a Q)``, an upper bound. The exact
S-wave levels come from a sine basis.
"""

import math

from auxfield import Kinematics, Linear, QuantumSpec, SystemSpec, solve
from auxfield.oracle import sr_levels_swave

a = 1.0
exact = sr_levels_swave(0.0, Linear(a), 2).energies
system = SystemSpec(2, Kinematics.ultrarelativistic(), two_body=Linear(a))
for n in range(3):
    sol = solve(system, QuantumSpec.explicit([(n, 0)]))
    print(f"n={n}  AFM={sol.M0:.6f}  2sqrt(2aQ)={2 * math.sqrt(2 * a * sol.Q):.6f}  exact={exact[n]:.6f}")

"""
How strong must a Yukawa well be?
=================================

The AFM threshold is a closed formula; the exact threshold comes from
counting nodes of the zero-energy solution.
"""

import math

from auxfield import AuxiliaryForm, Yukawa, critical_table, critical_two_body
from auxfield.oracle import critical_bisection

shape = Yukawa(1.0, 1.0)
afm = critical_two_body(shape, 2, aux=AuxiliaryForm.COULOMB)
exact = critical_bisection(shape, m=1.0)
print(f"AFM g2 = {afm.coupling:.6f} (e = {math.e:.6f}, {afm.bound_character.value}), exact g2 = {exact:.6f}")

# More bosons need a weaker pair force: g_{N+1}/g_N = N/(N+1).
for row in critical_table(shape, range(2, 8)):
    print(row["N"], f"{row['coupling']:.6f}", row["ratio_next"])

"""Hilbert series, the Koszul functional equation, and the dual dimensions.

For a Koszul operad P, f_P(-f_{P!}(-t)) = t.  Everything here is an exact
power series over Q[u, v].
"""

from hypertrees import hilbert, koszul_check
from hypertrees.series import dual_dims, ps_reverse, ps_reverse_lagrange

for p in ("ComPreLie", "ComGreg"):
    print(f"{p:10} Koszul equation through t^8:", koszul_check(hilbert(p, 8), hilbert(p + "_dual", 8)))

print("ComPreLie^! dims:", dual_dims("ComPreLie_dual", 7))
print("ComGreg^!  dims:", dual_dims("ComGreg_dual", 7))

# Newton reversion and Lagrange inversion are independent; they must agree.
f = hilbert("FH", 6)
print("reversions agree:", ps_reverse(f) == ps_reverse_lagrange(f))

# Specialising the Greg variable to -1 gives an Euler characteristic.
print("FRG at (1, -1):", [int(c) for c in hilbert("FRG", 7).egf_counts(1, -1)[1:]])

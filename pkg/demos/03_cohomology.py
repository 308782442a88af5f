"""The differential d(x) = g, d(c) = 0 on reduced forests, and its cohomology.

With black vertices in degree one each, FRG(n) becomes a cochain complex.
Its cohomology sits in degree 0 and has dimension n^(n-1).  The same happens
for Greg_{-1} on rooted Greg trees, with (n-1)! in degree 0.
"""

import time

from hypertrees import betti, differential, parse_forest
from hypertrees.checks import two_oracle_dims
from hypertrees.cohomology import complex_for

print("d(1<2>)     =", differential(parse_forest("1<2>")))
print("d(1<2><3>)  =", differential(parse_forest("1<2><3>")))
print("d(1<2,3>)   =", differential(parse_forest("1<2,3>")))
print("d(B<1><2>) in Greg-1 =", differential(parse_forest("B<1><2>"), "Greg-1"))

print("\n n  dims per degree              betti")
for n in range(1, 5):
    cx = complex_for(n, "dgComGreg")
    print(f" {n}  {str(cx.dims):28} {cx.betti()}")

for conv in ("Greg-1", "dgComGreg"):
    start = time.perf_counter()
    print(f"{conv:9} n=4 betti {betti(4, conv)}  ({time.perf_counter() - start:.2f}s)")

# H^0 is the kernel of d on FH(n).  The suboperad generated by the bracket
# x - y and the product c fills exactly that kernel.
for n in range(2, 5):
    dc, dk, same = two_oracle_dims(n)
    print(f"n={n}: closure {dc}, kernel {dk}, same space: {same}")

"""Counting forests of rooted hypertrees three ways.

We list the elements of each family directly, read the same numbers off the
closed-form generating functions, and solve the species equations by
iteration.  All three agree, grade by grade.
"""

from hypertrees import count_bigraded, enumerate_family, format_forest, hilbert
from hypertrees.series import bigraded_table, species_solution

# The smallest interesting arity: three rooted Greg trees and three forests
# of rooted hypertrees on {1, 2}.
for family in ("Greg", "FH"):
    print(family, [format_forest(f) for f in enumerate_family(family, 2)])

# Total counts per arity, straight from the closed forms.
for family in ("RT", "Greg", "FH", "FG", "FRG"):
    counts = [int(c) for c in hilbert(family, 6).egf_counts(1, 1)[1:]]
    print(f"{family:5}", counts)

# The variable u tracks hypertree weight and v the number of black vertices.
# Here is FG(3) split by both, next to the direct count.
series = bigraded_table(hilbert("FG", 3))
direct = count_bigraded("FG", 3)
print("\n  j k  series  direct")
for (n, j, k), c in sorted(series.items()):
    if n == 3 and c:
        print(f"  {j} {k}  {c:6}  {direct.get((n, j, k), 0):6}")

# A third route that never inverts a series: fixed-point iteration of the
# species equation.  It lands on the same power series.
print("\nspecies solver agrees with closed form:",
      all(species_solution(f, 7) == hilbert(f, 7) for f in ("RT", "Greg", "FH", "FG", "FRG")))

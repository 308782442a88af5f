"""Grafting, the symmetric group action, and the reduction to FRG."""

import random

from hypertrees import act, compose, format_forest, generator, parse_forest, reduce
from hypertrees.checks import check_axioms
from hypertrees.operad import reduce_with_strategy
from hypertrees.forest import height

P = parse_forest

# Grafting 1<2> into the root of 1<2>: the loose child 3 goes to either vertex.
print("x o1 x =", compose(P("1<2>"), 1, P("1<2>"), "RT"))

# Grafting a two-tree forest into a leaf turns the edge into a hyperedge.
print("x o2 c =", compose(P("1<2>"), 2, P("{1,2}"), "FH"))

# Relabelling acts on the right; the bracket l = x - y is antisymmetric.
print("l.(1 2) =", act((2, 1), generator("l")))

# A black vertex carrying a hyperedge is not reduced.  Rewriting spreads the
# hyperedge out and each step lowers the height.
f = P("B<1><2,3<4>>")
trace = []
reduce_with_strategy(f, "random", random.Random(1), trace=trace)
print(f"\nreduce {format_forest(f)} = {reduce(f)}")
print("height per step:", trace, "start", height(f))

# The operad axioms, checked on random triples.
for fam in ("FG", "FRG"):
    print(check_axioms(fam, max_arity=4, trials=200, seed=0))

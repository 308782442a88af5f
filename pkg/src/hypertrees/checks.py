"""Seeded property checks shared by the test suite and ``hypertrees verify``."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .enumeration import enumerate_family
from .forest import Family, Forest, format_forest, greg_weight, is_reduced
from .lincomb import LinComb
from .operad import (
    UNIT,
    act,
    compose_lin,
    normal_form,
    redexes,
    reduce_with_strategy,
)


@dataclass
class Report:
    name: str
    trials: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, message: str) -> None:
        if len(self.failures) < 20:
            self.failures.append(message)
        else:
            self.failures[-1] = f"... and more (last: {message})"

    def __str__(self) -> str:
        status = "ok" if self.ok else f"{len(self.failures)} failure(s)"
        return f"{self.name}: {self.trials} trials, {status}"


def _random_forest(rng: random.Random, family: Family, n: int) -> Forest:
    return rng.choice(enumerate_family(family, n))


def _block_permutation(sigma, i: int, a: int, b: int):
    """The permutation of ``S o_i T`` induced by ``sigma`` acting on ``S`` (arity ``a``)."""
    si = sigma[i - 1]

    def pos(k, at):  # position of S-label k after inserting b labels at ``at``
        return k if k < at else k + b - 1

    img = {}
    for k in range(1, a + 1):
        if k != i:
            img[pos(k, i)] = pos(sigma[k - 1], si)
    for t in range(1, b + 1):
        img[t + i - 1] = t + si - 1
    return tuple(img[p] for p in range(1, a + b))


def _inner_permutation(tau, i: int, a: int, b: int):
    """The permutation of ``S o_i T`` induced by ``tau`` acting on ``T``."""
    img = list(range(1, a + b))
    for t in range(1, b + 1):
        img[t + i - 2] = tau[t - 1] + i - 1
    return tuple(img)


def check_axioms(family, max_arity: int = 4, trials: int = 1000, seed: int = 0,
                 graded: bool = False) -> Report:
    """Sequential, parallel, equivariance and unit axioms on random triples.

    With ``graded`` black vertices are odd and the parallel axiom carries the
    sign ``(-1)^{|T||R|}``.
    """
    family = Family.parse(family)
    rng = random.Random(seed)
    rep = Report(f"axioms[{family.value}{', graded' if graded else ''}]")

    def comp(x, i, y):
        return compose_lin(x, i, y, family, graded)

    for _ in range(trials):
        rep.trials += 1
        while True:
            a, b, c = (rng.randint(1, 3) for _ in range(3))
            if a + b + c - 2 <= max_arity:
                break
        S = LinComb.of(_random_forest(rng, family, a))
        T = LinComb.of(_random_forest(rng, family, b))
        R = LinComb.of(_random_forest(rng, family, c))
        (s,), (t,), (r,) = S, T, R
        tag = f"S={format_forest(s)} T={format_forest(t)} R={format_forest(r)}"
        i = rng.randint(1, a)
        # sequential
        j = rng.randint(1, b)
        lhs = comp(comp(S, i, T), i + j - 1, R)
        rhs = comp(S, i, comp(T, j, R))
        if lhs != rhs:
            rep.fail(f"sequential i={i} j={j} {tag}: {lhs} != {rhs}")
        # parallel
        if a >= 2:
            i2, k = sorted(rng.sample(range(1, a + 1), 2))
            sign = -1 if graded and (greg_weight(t) * greg_weight(r)) % 2 else 1
            lhs = comp(comp(S, i2, T), k + b - 1, R)
            rhs = comp(comp(S, k, R), i2, T) * sign
            if lhs != rhs:
                rep.fail(f"parallel i={i2} k={k} {tag}: {lhs} != {rhs}")
        # equivariance in S and in T
        sigma = tuple(rng.sample(range(1, a + 1), a))
        lhs = comp(act(sigma, S, graded), sigma[i - 1], T)
        rhs = act(_block_permutation(sigma, i, a, b), comp(S, i, T), graded)
        if lhs != rhs:
            rep.fail(f"equivariance sigma={sigma} i={i} {tag}: {lhs} != {rhs}")
        tau = tuple(rng.sample(range(1, b + 1), b))
        lhs = comp(S, i, act(tau, T, graded))
        rhs = act(_inner_permutation(tau, i, a, b), comp(S, i, T), graded)
        if lhs != rhs:
            rep.fail(f"inner equivariance tau={tau} i={i} {tag}: {lhs} != {rhs}")
        # unit
        one = LinComb.of(UNIT)
        if comp(S, i, one) != S or comp(one, 1, S) != S:
            rep.fail(f"unit {tag}")
    return rep


def _random_reducible(rng: random.Random, max_arity: int) -> Forest:
    for _ in range(200):
        f = _random_forest(rng, Family.FG, rng.randint(2, max_arity))
        if redexes(f):
            return f
    return f


def check_confluence(max_arity: int = 4, trials: int = 500, seed: int = 0, graded: bool = False) -> Report:
    """Innermost, outermost and random rewriting orders give the same normal form,
    and every step strictly lowers the height."""
    rng = random.Random(seed)
    rep = Report(f"confluence[FG<={max_arity}{', graded' if graded else ''}]")
    for _ in range(trials):
        rep.trials += 1
        f = _random_reducible(rng, max_arity)
        trace: list = []
        results = [
            LinComb(reduce_with_strategy(f, "innermost", graded=graded, trace=trace)),
            LinComb(reduce_with_strategy(f, "outermost", graded=graded, trace=trace)),
            LinComb(reduce_with_strategy(f, "random", rng=random.Random(rng.random()), graded=graded, trace=trace)),
            LinComb(normal_form(f, graded)),
        ]
        if any(r != results[0] for r in results[1:]):
            rep.fail(f"{format_forest(f)}: normal forms differ {[str(r) for r in results]}")
        if any(after >= before for before, after in trace):
            rep.fail(f"{format_forest(f)}: height did not decrease")
        if any(not is_reduced(g) for g in results[0]):
            rep.fail(f"{format_forest(f)}: normal form not reduced")
    return rep


def check_fixed_points(max_arity: int = 4) -> Report:
    """``reduce(f) = f`` exactly when ``f`` is reduced, over all of FG(<= max_arity)."""
    rep = Report(f"fixed points[FG<={max_arity}]")
    for n in range(1, max_arity + 1):
        frg = set(enumerate_family(Family.FRG, n))
        for f in enumerate_family(Family.FG, n):
            rep.trials += 1
            fixed = normal_form(f) == {f: 1}
            if fixed != (f in frg):
                rep.fail(f"{format_forest(f)}: fixed={fixed}, reduced={f in frg}")
    return rep


def check_leibniz_random(convention, max_arity: int = 4, trials: int = 500, seed: int = 0) -> Report:
    """Signed Leibniz rule ``d(S o_i T) = dS o_i T + (-1)^{|S|} S o_i dT`` on random pairs."""
    from .differential import Convention, check_leibniz

    conv = Convention.parse(convention)
    rng = random.Random(seed)
    rep = Report(f"leibniz[{conv.value}]")
    for _ in range(trials):
        rep.trials += 1
        a = rng.randint(1, max_arity)
        b = rng.randint(1, max_arity + 1 - a)
        S = _random_forest(rng, conv.family, a)
        T = _random_forest(rng, conv.family, b)
        i = rng.randint(1, a)
        if not check_leibniz(S, i, T, conv):
            rep.fail(f"S={format_forest(S)} i={i} T={format_forest(T)}")
    return rep


def check_enumeration_series(family, max_arity: Optional[int] = None) -> Report:
    """Bigraded counts of the enumerator against the closed form and the species solver."""
    from .enumeration import DEFAULT_MAX_ARITY, count_bigraded
    from .series import bigraded_table, hilbert, species_solution

    family = Family.parse(family)
    top = min(max_arity or DEFAULT_MAX_ARITY[family], DEFAULT_MAX_ARITY[family])
    rep = Report(f"enumeration vs series[{family.value}, n<={top}]")
    closed = bigraded_table(hilbert(family.value, top))
    solved = bigraded_table(species_solution(family.value, top))
    for n in range(1, top + 1):
        rep.trials += 1
        ours = count_bigraded(family, n)
        for name, table in (("closed form", closed), ("species", solved)):
            theirs = {key: c for key, c in table.items() if key[0] == n and c}
            if ours != theirs:
                rep.fail(f"n={n}: enumeration {sorted(ours.items())} != {name} {sorted(theirs.items())}")
    return rep


def two_oracle_dims(n: int) -> Tuple[int, int, bool]:
    """``(dim closure, dim ker d0, mutual containment)`` inside FH(n).

    The closure is the suboperad generated by ``x - y`` and ``c``; the kernel
    is that of the degree-zero differential of dgComGreg.
    """
    from .cohomology import h0_basis
    from .linalg import Echelon
    from .operad import generator
    from .suboperad import closure_bases

    closure = closure_bases([generator("l"), generator("c")], n, Family.FH)[n]
    kernel = h0_basis(n, "dgComGreg")
    ech_c, ech_k = Echelon(), Echelon()
    for v in closure:
        ech_c.add(dict(v.items()))
    for v in kernel:
        ech_k.add(dict(v.items()))
    contained = all(ech_k.contains(dict(v.items())) for v in closure) and all(
        ech_c.contains(dict(v.items())) for v in kernel
    )
    return len(closure), len(kernel), contained


def check_two_oracles(max_arity: int = 5) -> Report:
    rep = Report(f"closure{{x-y,c}} = ker d0[n<={max_arity}]")
    for n in range(1, max_arity + 1):
        rep.trials += 1
        dc, dk, ok = two_oracle_dims(n)
        if dc != dk or not ok:
            rep.fail(f"n={n}: closure dim {dc}, kernel dim {dk}, mutual containment {ok}")
    return rep

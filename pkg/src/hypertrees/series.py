"""Truncated exponential generating functions with coefficients in Q[u, v].

A :class:`PowerSeries` is a list of coefficients ``c_0 .. c_N`` of ``t^n``; each
coefficient is a :class:`Poly` in the two grading variables ``u`` (hypertree
weight) and ``v`` (Greg weight).  Everything is exact (``fractions.Fraction``).

The named Hilbert series of the operads are available through :func:`hilbert`,
and the Koszul functional equation ``f(-g(-t)) = t`` through :func:`koszul_check`.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Callable, Dict, Iterable, List, Tuple

Monomial = Tuple[int, int]


class SeriesError(ValueError):
    pass


class BadConstantTerm(SeriesError):
    pass


class NonUnitLinearTerm(SeriesError):
    pass


class UnknownSeries(KeyError):
    pass


class Poly:
    """Polynomial in ``u`` and ``v`` with rational coefficients.

    Stored sparsely as ``{(deg_u, deg_v): Fraction}`` without zero entries.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        elif not isinstance(terms, dict):
            terms = {(0, 0): terms}
        self.terms: Dict[Monomial, Fraction] = {
            m: Fraction(c) for m, c in terms.items() if c != 0
        }

    @classmethod
    def const(cls, c) -> "Poly":
        return cls({(0, 0): c})

    @classmethod
    def u(cls, k: int = 1) -> "Poly":
        return cls({(k, 0): 1})

    @classmethod
    def v(cls, k: int = 1) -> "Poly":
        return cls({(0, k): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def constant(self) -> Fraction:
        """The value if the polynomial is a constant, else raise."""
        if any(m != (0, 0) for m in self.terms):
            raise ValueError(f"{self} is not a constant")
        return self.terms.get((0, 0), Fraction(0))

    def is_constant(self) -> bool:
        return all(m == (0, 0) for m in self.terms)

    def __add__(self, other) -> "Poly":
        other = _as_poly(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "Poly":
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> "Poly":
        return _as_poly(other) - self

    def __mul__(self, other) -> "Poly":
        other = _as_poly(other)
        out: Dict[Monomial, Fraction] = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                key = (a1 + a2, b1 + b2)
                out[key] = out.get(key, 0) + c1 * c2
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, c) -> "Poly":
        c = Fraction(c)
        return Poly({m: x / c for m, x in self.terms.items()})

    def __eq__(self, other) -> bool:
        try:
            other = _as_poly(other)
        except TypeError:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def evaluate(self, u=1, v=1) -> Fraction:
        return sum(
            (c * Fraction(u) ** a * Fraction(v) ** b for (a, b), c in self.terms.items()),
            Fraction(0),
        )

    def substitute(self, u=None, v=None) -> "Poly":
        """Specialise ``u`` and/or ``v`` to numbers, keeping the other symbolic."""
        out: Dict[Monomial, Fraction] = {}
        for (a, b), c in self.terms.items():
            if u is not None:
                c, a = c * Fraction(u) ** a, 0
            if v is not None:
                c, b = c * Fraction(v) ** b, 0
            out[(a, b)] = out.get((a, b), 0) + c
        return Poly(out)

    def coefficient(self, a: int = 0, b: int = 0) -> Fraction:
        return self.terms.get((a, b), Fraction(0))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (a, b), c in sorted(self.terms.items()):
            mono = "".join(
                s if e == 1 else f"{s}^{e}" for s, e in (("u", a), ("v", b)) if e
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _as_poly(x) -> Poly:
    if isinstance(x, Poly):
        return x
    if isinstance(x, (int, Fraction)):
        return Poly.const(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to Poly")


ZERO = Poly()
ONE = Poly.const(1)


class PowerSeries:
    """Series ``sum c_n t^n`` truncated after ``t^order``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [_as_poly(c) for c in coeffs]
        if order is not None:
            cs = (cs + [ZERO] * (order + 1))[: order + 1]
        if not cs:
            raise ValueError("a series needs at least the constant coefficient")
        self.coeffs: List[Poly] = cs

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, order: int) -> "PowerSeries":
        return cls([ZERO] * (order + 1))

    @classmethod
    def one(cls, order: int) -> "PowerSeries":
        return cls([ONE], order)

    @classmethod
    def t(cls, order: int) -> "PowerSeries":
        return cls([ZERO, ONE], order)

    @classmethod
    def from_function(cls, f: Callable[[int], object], order: int) -> "PowerSeries":
        return cls([f(n) for n in range(order + 1)])

    def __getitem__(self, n: int) -> Poly:
        return self.coeffs[n] if 0 <= n <= self.order else ZERO

    def _coerce(self, other) -> "PowerSeries":
        if isinstance(other, PowerSeries):
            return other
        return PowerSeries([_as_poly(other)], self.order)

    def __add__(self, other) -> "PowerSeries":
        other = self._coerce(other)
        n = min(self.order, other.order)
        return PowerSeries([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)])

    __radd__ = __add__

    def __neg__(self) -> "PowerSeries":
        return PowerSeries([-c for c in self.coeffs])

    def __sub__(self, other) -> "PowerSeries":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "PowerSeries":
        return self._coerce(other) - self

    def __mul__(self, other) -> "PowerSeries":
        if isinstance(other, (int, Fraction, Poly)):
            p = _as_poly(other)
            return PowerSeries([c * p for c in self.coeffs])
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(n + 1):
            acc = ZERO
            for i in range(k + 1):
                if a[i].terms and b[k - i].terms:
                    acc = acc + a[i] * b[k - i]
            out.append(acc)
        return PowerSeries(out)

    __rmul__ = __mul__

    def __truediv__(self, c) -> "PowerSeries":
        return PowerSeries([x / c for x in self.coeffs])

    def __eq__(self, other) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return all(self.coeffs[i] == other.coeffs[i] for i in range(n + 1))

    def __repr__(self) -> str:
        return f"PowerSeries({self.coeffs!r})"

    def truncate(self, order: int) -> "PowerSeries":
        return PowerSeries(self.coeffs, order)

    def derivative(self) -> "PowerSeries":
        return PowerSeries([self.coeffs[n] * n for n in range(1, self.order + 1)] or [ZERO])

    def integral(self) -> "PowerSeries":
        """Antiderivative with zero constant term; the order goes up by one."""
        return PowerSeries([ZERO] + [c / (n + 1) for n, c in enumerate(self.coeffs)])

    def shift_down(self) -> "PowerSeries":
        """Divide by ``t``; the constant term must vanish."""
        if not self.coeffs[0].is_zero():
            raise BadConstantTerm("cannot divide by t: nonzero constant term")
        return PowerSeries(self.coeffs[1:] or [ZERO], self.order)

    def substitute(self, u=None, v=None) -> "PowerSeries":
        return PowerSeries([c.substitute(u, v) for c in self.coeffs])

    def egf_counts(self, u=None, v=None) -> list:
        """``n! [t^n]`` for n = 0..order, optionally specialised at (u, v)."""
        out = []
        for n, c in enumerate(self.coeffs):
            c = c * factorial(n)
            if u is not None or v is not None:
                c = c.substitute(u, v)
                if c.is_constant():
                    c = c.constant()
            out.append(c)
        return out


def ps_inverse(s: PowerSeries) -> PowerSeries:
    """Multiplicative inverse; the constant term must be a nonzero rational."""
    c0 = s.coeffs[0]
    if c0.is_zero() or not c0.is_constant():
        raise BadConstantTerm("reciprocal needs an invertible rational constant term")
    inv0 = 1 / c0.constant()
    out = [Poly.const(inv0)]
    for n in range(1, s.order + 1):
        acc = ZERO
        for k in range(1, n + 1):
            if s.coeffs[k].terms and out[n - k].terms:
                acc = acc + s.coeffs[k] * out[n - k]
        out.append(-acc * inv0)
    return PowerSeries(out)


def ps_exp(s: PowerSeries) -> PowerSeries:
    """``exp(s)`` for ``s`` with zero constant term."""
    if not s.coeffs[0].is_zero():
        raise BadConstantTerm("exp needs a zero constant term")
    out = [ONE]
    for n in range(1, s.order + 1):
        acc = ZERO
        for k in range(1, n + 1):
            if s.coeffs[k].terms and out[n - k].terms:
                acc = acc + s.coeffs[k] * out[n - k] * k
        out.append(acc / n)
    return PowerSeries(out)


def ps_log(s: PowerSeries) -> PowerSeries:
    """``log(s)`` for ``s`` with constant term 1."""
    if s.coeffs[0] != ONE:
        raise BadConstantTerm("log needs constant term 1")
    return (s.derivative() * ps_inverse(s).truncate(s.order - 1)).integral().truncate(s.order)


def ps_compose(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    """``f(g(t))``; ``g`` must have zero constant term."""
    if not g.coeffs[0].is_zero():
        raise BadConstantTerm("the inner series must have zero constant term")
    order = min(f.order, g.order)
    out = PowerSeries([f.coeffs[order]], order)
    for n in range(order - 1, -1, -1):
        out = out * g + f.coeffs[n]
    return out


def _check_reversible(f: PowerSeries) -> Fraction:
    if not f.coeffs[0].is_zero():
        raise BadConstantTerm("reversion needs a zero constant term")
    c1 = f[1]
    if c1.is_zero() or not c1.is_constant():
        raise NonUnitLinearTerm("reversion needs an invertible rational linear term")
    return c1.constant()


def ps_reverse(f: PowerSeries) -> PowerSeries:
    """Compositional inverse by Newton iteration (precision doubles each step)."""
    c1 = _check_reversible(f)
    order = f.order
    g = PowerSeries([ZERO, Poly.const(1 / c1)], order)
    df = f.derivative()
    prec = 1
    while prec < order:
        prec = min(2 * prec, order)
        fg = ps_compose(f.truncate(prec), g.truncate(prec))
        dfg = ps_compose(df.truncate(prec), g.truncate(prec))
        correction = (fg - PowerSeries.t(prec)) * ps_inverse(dfg)
        g = (g.truncate(prec) - correction).truncate(order)
    return g


def ps_reverse_lagrange(f: PowerSeries) -> PowerSeries:
    """Compositional inverse from ``[t^n] g = [t^(n-1)] (t/f)^n / n``.

    Kept independent of :func:`ps_reverse` as a cross-check.
    """
    _check_reversible(f)
    order = f.order
    h = ps_inverse(f.shift_down())  # t / f
    out = [ZERO]
    power = PowerSeries.one(order)
    for n in range(1, order + 1):
        power = power * h
        out.append(power[n - 1] / n)
    return PowerSeries(out)


# --- building blocks of the closed forms -------------------------------------


def exp_t(order: int, sign: int = 1) -> PowerSeries:
    """``exp(sign * t)``."""
    return PowerSeries.from_function(lambda n: Fraction(sign**n, factorial(n)), order)


def log1p_ut_over_u(order: int) -> PowerSeries:
    """``ln(1 + u t) / u`` written as a series with polynomial coefficients."""

    def coeff(n):
        if n == 0:
            return ZERO
        return Poly.u(n - 1) * Fraction((-1) ** (n + 1), n)

    return PowerSeries.from_function(coeff, order)


def log1p_t(order: int, sign: int = 1) -> PowerSeries:
    """``log(1 + sign*t)``."""
    return PowerSeries.from_function(
        lambda n: 0 if n == 0 else Fraction(-((-sign) ** n), n), order
    )


def set_minus_one_over_u(h: PowerSeries) -> PowerSeries:
    """``(exp(u h) - 1) / u`` for ``h`` with zero constant term."""
    if not h.coeffs[0].is_zero():
        raise BadConstantTerm("inner series must have zero constant term")
    order = h.order
    out = PowerSeries.zero(order)
    power = PowerSeries.one(order)
    for k in range(1, order + 1):
        power = power * h
        out = out + power * (Poly.u(k - 1) / factorial(k))
    return out


def _closed_forms(order: int) -> Dict[str, Callable[[], PowerSeries]]:
    u = Poly.u()
    v = Poly.v()
    t = PowerSeries.t(order)
    em = exp_t(order, -1)
    ep = exp_t(order, 1)
    L = log1p_ut_over_u(order)

    def FH():
        return ps_reverse(L * em)

    def FG():
        return ps_reverse((L - (ep - t - 1) * v) * em)

    def FRG():
        return ps_reverse((L * (v + 1) + v - ps_exp(L) * v) * em)

    def RT():
        return ps_reverse(t * em)

    def Greg():
        return ps_reverse((t - (ep - t - 1) * v) * em)

    def ComPreLie():
        return ps_reverse(log1p_t(order) * em)

    def ComPreLie_dual():
        return -log1p_t(order, -1) * ep

    def ComGreg():
        return ps_reverse(log1p_t(order) * em + t * em + em - 1)

    def ComGreg_dual():
        return -log1p_t(order, -1) * ep + t * ep - ep + 1

    def FMan():
        return ps_reverse((ps_exp(L) - 1) * em)

    return {
        "RT": RT,
        "Greg": Greg,
        "FH": FH,
        "FG": FG,
        "FRG": FRG,
        "ComPreLie": ComPreLie,
        "ComPreLie_dual": ComPreLie_dual,
        "ComGreg": ComGreg,
        "ComGreg_dual": ComGreg_dual,
        "FMan": FMan,
    }


SERIES_IDS = tuple(_closed_forms(1))


def hilbert(series_id: str, order: int) -> PowerSeries:
    """The closed-form Hilbert series ``series_id`` truncated after ``t^order``."""
    forms = _closed_forms(order)
    if series_id not in forms:
        raise UnknownSeries(series_id)
    return forms[series_id]()


def koszul_check(f: PowerSeries, f_dual: PowerSeries, order: int | None = None) -> bool:
    """Whether ``f(-f_dual(-t)) = t`` through ``t^order``."""
    if order is None:
        order = min(f.order, f_dual.order)
    f = f.truncate(order)
    g = f_dual.truncate(order)
    neg_t = PowerSeries([ZERO, Poly.const(-1)], order)
    inner = -ps_compose(g, neg_t)
    return ps_compose(f, inner) == PowerSeries.t(order)


def dual_dims(operad_id: str, order: int) -> list:
    """Arity-wise dimensions ``n! [t^n]``, n = 1..order, of a Koszul dual operad."""
    if operad_id not in ("ComPreLie_dual", "ComGreg_dual"):
        raise UnknownSeries(operad_id)
    counts = hilbert(operad_id, order).egf_counts(1, 1)
    return [int(c) for c in counts[1:]]


def lc_multilinear_dim(n: int) -> int:
    """``dim Mult(LC(n)) = sum_k C(n,k) (k-1)!``: a Lie word on k letters times a monomial."""
    from math import comb

    return sum(comb(n, k) * factorial(k - 1) for k in range(1, n + 1))


def arrow_multilinear_dim(n: int) -> int:
    """Dimension of the multilinear part of the arrow algebra on n letters."""
    return max(n - 1, 0)


def species_solution(family: str, order: int) -> PowerSeries:
    """Solve the implicit species equation of ``family`` by fixed-point iteration.

    Each pass fixes one more coefficient in ``t``; this path never reverts a series,
    so it is independent of the closed forms in :func:`hilbert`.
    """
    t = PowerSeries.t(order)
    v = Poly.v()
    y = PowerSeries.zero(order)
    if family == "RT":
        for _ in range(order + 1):
            y = t * ps_exp(y)
    elif family == "Greg":
        for _ in range(order + 1):
            y = t * ps_exp(y) + (ps_exp(y) - 1 - y) * v
    elif family == "FH":
        for _ in range(order + 1):
            y = set_minus_one_over_u(t * ps_exp(y))
    elif family == "FG":
        for _ in range(order + 1):
            tree = t * ps_exp(y) + (ps_exp(y) - 1 - y) * v
            y = set_minus_one_over_u(tree)
    elif family == "FRG":
        tree = PowerSeries.zero(order)
        for _ in range(order + 1):
            y = set_minus_one_over_u(tree)
            tree = t * ps_exp(y) + (ps_exp(tree) - 1 - tree) * v
        y = set_minus_one_over_u(tree)
    else:
        raise UnknownSeries(family)
    return y


def bigraded_table(s: PowerSeries) -> Dict[Tuple[int, int, int], int]:
    """``{(n, j, k): count}`` from the (u, v)-graded egf ``s``."""
    out = {}
    for n, c in enumerate(s.coeffs):
        for (j, k), x in c.terms.items():
            val = x * factorial(n)
            if val.denominator != 1:
                raise ValueError(f"non-integral count at t^{n} u^{j} v^{k}: {val}")
            out[(n, j, k)] = int(val)
    return out

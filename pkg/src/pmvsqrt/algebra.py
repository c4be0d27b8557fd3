"""Pseudo MV-algebras: constructions, basic and derived operations, axioms.

Every algebra exposes ``oplus``, ``minus`` (left negation ``x^-``), ``sim``
(right negation ``x^~``), ``zero`` and ``one``.  Everything else is derived
by the generic expansions in :class:`PseudoMV`; :class:`Gamma` overrides the
hot paths with direct group formulas.

Operand convention for the product: ``x (.) y = (y^- (+) x^-)^~``, which on
``Gamma(G,u)`` reads ``(x - u + y) v 0``.  The classical display
``(x^- (+) y^-)^~`` is the same operation with its arguments swapped; the
group form is the one that makes the lattice expansions below hold.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from . import checks
from .checks import Property
from .groups import (
    CocycleQ4, GroupDescriptor, IntVector, LexPair, UnitalGroup, _Vector,
    format_element, group_grid, show_element,
)
from .rational import format_rational
from .report import SuiteReport


class AlgebraError(ValueError):
    pass


class ElementError(AlgebraError):
    """An element is outside the algebra it is used with."""


class UnsupportedCarrier(AlgebraError):
    """The requested enumeration is impossible on this (infinite) carrier."""


class PseudoMV:
    finite: bool = False

    zero = None
    one = None

    def oplus(self, x, y):
        raise NotImplementedError

    def minus(self, x):
        raise NotImplementedError

    def sim(self, x):
        raise NotImplementedError

    def odot(self, x, y):
        return self.sim(self.oplus(self.minus(y), self.minus(x)))

    def join(self, x, y):
        return self.oplus(x, self.odot(self.sim(x), y))

    def meet(self, x, y):
        return self.odot(x, self.oplus(self.minus(x), y))

    def leq(self, x, y) -> bool:
        return self.meet(x, y) == x

    def lt(self, x, y) -> bool:
        return x != y and self.leq(x, y)

    def arrow(self, x, y):
        return self.oplus(self.minus(x), y)

    def squig(self, x, y):
        return self.oplus(y, self.sim(x))

    def power(self, x, n: int):
        """``x (.) x (.) ... (.) x`` with ``n >= 1`` factors."""
        acc = x
        for _ in range(n - 1):
            acc = self.odot(acc, x)
        return acc

    def is_boolean(self, x) -> bool:
        return self.oplus(x, x) == x

    @property
    def degenerate(self) -> bool:
        return self.zero == self.one

    # carrier
    def elements(self) -> list:
        raise UnsupportedCarrier(f"{self.describe()} is infinite")

    @property
    def size(self) -> int:
        return len(self.elements())

    def contains(self, x) -> bool:
        raise NotImplementedError

    def check(self, x):
        """Validate (and normalise) an element, raising :class:`ElementError`."""
        if not self.contains(x):
            raise ElementError(f"{x!r} is not an element of {self.describe()}")
        return x

    def sample(self, budget: int = 512, seed: int = 0) -> list:
        if self.finite:
            return self.elements()[:budget] if budget < self.size else self.elements()
        key = (budget, seed)
        cache = self.__dict__.setdefault("_sample_cache", {})
        if key not in cache:
            cache[key] = self._sample(budget, seed)
        return cache[key]

    def _sample(self, budget, seed):
        raise UnsupportedCarrier(f"cannot sample {self.describe()}")

    # presentation
    def show(self, x) -> str:
        return str(x)

    def format(self, x):
        return x

    def parse(self, literal):
        return self.check(literal)

    def describe(self) -> str:
        return type(self).__name__


def _dedupe(xs):
    seen = set()
    out = []
    for x in xs:
        if x not in seen:
            seen.add(x)
            out.append(x)
    return out


class Gamma(PseudoMV):
    """``Gamma(G,u)``: the interval ``[0,u]`` with ``x (+) y = (x+y) ^ u``,
    ``x^- = u - x`` and ``x^~ = -x + u``."""

    def __init__(self, group: UnitalGroup):
        self.group = group
        self.G: GroupDescriptor = group.descriptor
        self.zero = self.G.zero()
        self.one = group.unit
        self.finite = (
            self.one == self.zero
            or (isinstance(self.G, IntVector) and (self.G.order == "product" or self.G.dims <= 1))
        )
        self._elements = None

    def oplus(self, x, y):
        return self.G.meet(self.G.add(x, y), self.one)

    def minus(self, x):
        return self.G.add(self.one, self.G.neg(x))

    def sim(self, x):
        return self.G.add(self.G.neg(x), self.one)

    def odot(self, x, y):
        G = self.G
        return G.join(G.add(G.add(x, G.neg(self.one)), y), self.zero)

    def join(self, x, y):
        return self.G.join(x, y)

    def meet(self, x, y):
        return self.G.meet(x, y)

    def leq(self, x, y):
        return self.G.leq(x, y)

    def elements(self):
        if not self.finite:
            raise UnsupportedCarrier(f"{self.describe()} is infinite")
        if self._elements is None:
            if self.one == self.zero:
                self._elements = [self.zero]
            else:
                ranges = [range(0, int(c) + 1) for c in self.one]
                self._elements = [tuple(Fraction(i) for i in idx)
                                  for idx in itertools.product(*ranges)]
        return self._elements

    def contains(self, x):
        try:
            x = self.G.coerce(x)
        except ValueError:
            return False
        return self.G.leq(self.zero, x) and self.G.leq(x, self.one)

    def check(self, x):
        try:
            y = self.G.coerce(x)
        except ValueError as exc:
            raise ElementError(str(exc)) from exc
        if not (self.G.leq(self.zero, y) and self.G.leq(y, self.one)):
            raise ElementError(f"{show_element(y)} is outside [0,{show_element(self.one)}]")
        return y

    def clamp(self, g):
        return self.G.meet(self.G.join(g, self.zero), self.one)

    def _sample(self, budget, seed):
        pts = [self.zero, self.one]
        pts += [self.clamp(g) for g in group_grid(self.G, budget, seed)]
        pts += [self.clamp(g) for g in group_grid(self.G, 8 * budget, seed, max_den=64)]
        return _dedupe(pts)[:budget]

    def boolean_elements(self) -> list:
        """Closed form of the Boolean skeleton of ``[0,u]``."""
        if self.finite:
            return [x for x in self.elements() if self.is_boolean(x)]
        return _gamma_boolean(self.G, self.one)

    def show(self, x):
        return show_element(x)

    def format(self, x):
        if len(x) == 1:
            return format_rational(x[0])
        return format_element(x)

    def parse(self, literal):
        if not isinstance(literal, (list, tuple)):
            literal = [literal]
        return self.check(literal)

    def describe(self):
        return f"Γ({self.G.describe()},{show_element(self.one)})"


def _gamma_boolean(G, u) -> list:
    zero = G.zero()
    if u == zero:
        return [zero]
    if isinstance(G, _Vector) and G.order == "product" and G.dims > 1:
        choices = [(Fraction(0), c) if c != 0 else (Fraction(0),) for c in u]
        return [tuple(t) for t in itertools.product(*choices)]
    if G.linear or isinstance(G, (CocycleQ4, _Vector)):
        return [zero, u]
    if isinstance(G, LexPair):
        uh, ug = G.split(u)
        if uh != G.h.zero():
            return [zero, u]
        return [G.h.zero() + b for b in _gamma_boolean(G.g, ug)]
    raise UnsupportedCarrier(f"no closed-form Boolean skeleton for {G.describe()}")


class Product(PseudoMV):
    def __init__(self, factors):
        self.factors = tuple(factors)
        self.zero = tuple(M.zero for M in self.factors)
        self.one = tuple(M.one for M in self.factors)
        self.finite = all(M.finite for M in self.factors)
        self._elements = None

    def _each(self, op, *args):
        return tuple(getattr(M, op)(*(a[i] for a in args)) for i, M in enumerate(self.factors))

    def oplus(self, x, y):
        return self._each("oplus", x, y)

    def minus(self, x):
        return self._each("minus", x)

    def sim(self, x):
        return self._each("sim", x)

    def odot(self, x, y):
        return self._each("odot", x, y)

    def join(self, x, y):
        return self._each("join", x, y)

    def meet(self, x, y):
        return self._each("meet", x, y)

    def leq(self, x, y):
        return all(M.leq(a, b) for M, a, b in zip(self.factors, x, y))

    def elements(self):
        if not self.finite:
            raise UnsupportedCarrier(f"{self.describe()} is infinite")
        if self._elements is None:
            self._elements = list(itertools.product(*(M.elements() for M in self.factors)))
        return self._elements

    def contains(self, x):
        return (isinstance(x, tuple) and len(x) == len(self.factors)
                and all(M.contains(a) for M, a in zip(self.factors, x)))

    def check(self, x):
        if not isinstance(x, (tuple, list)) or len(x) != len(self.factors):
            raise ElementError(f"{x!r} is not an element of {self.describe()}")
        return tuple(M.check(a) for M, a in zip(self.factors, x))

    def _sample(self, budget, seed):
        samples = [M.sample(budget, seed) for M in self.factors]
        pts = [self.zero, self.one]
        m = max(1, int(round((budget / 2) ** (1 / max(1, len(samples))))))
        pts += list(itertools.product(*(s[:m] for s in samples)))
        pts = _dedupe(pts)
        seen = set(pts)
        rng = random.Random(seed + 17)
        attempts = 0
        while len(pts) < budget and attempts < 10 * budget:
            attempts += 1
            t = tuple(rng.choice(s) for s in samples)
            if t not in seen:
                seen.add(t)
                pts.append(t)
        return pts[:budget]

    def boolean_elements(self):
        return list(itertools.product(*(boolean_skeleton(M) for M in self.factors)))

    def show(self, x):
        return "(" + ",".join(M.show(a) for M, a in zip(self.factors, x)) + ")"

    def format(self, x):
        return [M.format(a) for M, a in zip(self.factors, x)]

    def parse(self, literal):
        if not isinstance(literal, (list, tuple)) or len(literal) != len(self.factors):
            raise ElementError(f"{literal!r} does not match {len(self.factors)} factors")
        return tuple(M.parse(a) for M, a in zip(self.factors, literal))

    def describe(self):
        return " × ".join(M.describe() for M in self.factors)


class Interval(PseudoMV):
    """``[0,a]`` with ``x (+)_a y = (x (+) y) ^ a``, ``x^{-a} = a (.) x^-``,
    ``x^{~a} = x^~ (.) a``."""

    def __init__(self, base: PseudoMV, a):
        self.base = base
        self.a = base.check(a)
        self.zero = base.zero
        self.one = self.a
        self._parts = None
        if isinstance(base, Product) and not base.finite:
            parts = [Interval(F, ai) for F, ai in zip(base.factors, self.a)]
            if all(P.finite for P in parts):
                self._parts = parts
        self.finite = base.finite or self.a == base.zero or self._parts is not None
        self._elements = None

    def oplus(self, x, y):
        return self.base.meet(self.base.oplus(x, y), self.a)

    def minus(self, x):
        return self.base.odot(self.a, self.base.minus(x))

    def sim(self, x):
        return self.base.odot(self.base.sim(x), self.a)

    def join(self, x, y):
        return self.base.join(x, y)

    def meet(self, x, y):
        return self.base.meet(x, y)

    def leq(self, x, y):
        return self.base.leq(x, y)

    def elements(self):
        if not self.finite:
            raise UnsupportedCarrier(f"{self.describe()} is infinite")
        if self._elements is None:
            if self.a == self.base.zero:
                self._elements = [self.zero]
            elif self._parts is not None:
                self._elements = list(itertools.product(*(P.elements() for P in self._parts)))
            else:
                self._elements = [x for x in self.base.elements() if self.base.leq(x, self.a)]
        return self._elements

    def contains(self, x):
        return self.base.contains(x) and self.base.leq(x, self.a)

    def check(self, x):
        x = self.base.check(x)
        if not self.base.leq(x, self.a):
            raise ElementError(f"{self.base.show(x)} is not below {self.base.show(self.a)}")
        return x

    def _sample(self, budget, seed):
        return _dedupe([self.zero, self.a] + [self.base.meet(x, self.a)
                                              for x in self.base.sample(budget, seed)])[:budget]

    def boolean_elements(self):
        if self.finite:
            return [x for x in self.elements() if self.is_boolean(x)]
        raise UnsupportedCarrier(f"no closed-form Boolean skeleton for {self.describe()}")

    def show(self, x):
        return self.base.show(x)

    def format(self, x):
        return self.base.format(x)

    def parse(self, literal):
        return self.check(self.base.parse(literal))

    def describe(self):
        return f"[0,{self.base.show(self.a)}] of {self.base.describe()}"


class FiniteTable(PseudoMV):
    """An algebra given by operation tables over indices ``0..n-1``."""

    finite = True

    def __init__(self, labels, oplus, minus, sim, zero: int, one: int, source=None):
        n = len(labels)
        self.labels = [str(s) for s in labels]
        self.table = [list(row) for row in oplus]
        self.minus_table = list(minus)
        self.sim_table = list(sim)
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise AlgebraError("oplus table must be n x n")
        if len(self.minus_table) != n or len(self.sim_table) != n:
            raise AlgebraError("negation tables must have n entries")
        for v in itertools.chain(itertools.chain.from_iterable(self.table),
                                 self.minus_table, self.sim_table, (zero, one)):
            if not (isinstance(v, int) and 0 <= v < n):
                raise AlgebraError(f"table entry {v!r} is not an index below {n}")
        self.zero = zero
        self.one = one
        self.source = source
        self._elements = list(range(n))
        self._meet = None

    @property
    def size(self):
        return len(self.labels)

    def oplus(self, x, y):
        return self.table[x][y]

    def minus(self, x):
        return self.minus_table[x]

    def sim(self, x):
        return self.sim_table[x]

    def meet(self, x, y):
        if self._meet is None:
            n = self.size
            self._meet = [[PseudoMV.meet(self, a, b) for b in range(n)] for a in range(n)]
        return self._meet[x][y]

    def elements(self):
        return self._elements

    def contains(self, x):
        return isinstance(x, int) and not isinstance(x, bool) and 0 <= x < self.size

    def boolean_elements(self):
        return [x for x in self._elements if self.is_boolean(x)]

    def show(self, x):
        return self.labels[x]

    def format(self, x):
        return self.labels[x]

    def parse(self, literal):
        if isinstance(literal, str) and literal in self.labels:
            return self.labels.index(literal)
        return self.check(literal)

    def describe(self):
        return f"table({self.size})"

    def index_of(self, element) -> int:
        if self.source is None:
            return element
        return self.source.index(element)


def tabulate(M: PseudoMV) -> FiniteTable:
    """Operation tables of a finite algebra; ``source`` maps indices back."""
    if isinstance(M, FiniteTable):
        return M
    cached = M.__dict__.get("_table")
    if cached is not None:
        return cached
    elems = M.elements()
    idx = {x: i for i, x in enumerate(elems)}
    table = FiniteTable(
        [M.show(x) for x in elems],
        [[idx[M.oplus(x, y)] for y in elems] for x in elems],
        [idx[M.minus(x)] for x in elems],
        [idx[M.sim(x)] for x in elems],
        idx[M.zero], idx[M.one], source=list(elems),
    )
    M._table = table
    return table


class Quotient(PseudoMV):
    """``M/I`` for a normal ideal ``I`` of a finite ``M``.

    Classes are represented by their first member in ``M.elements()``.
    """

    finite = True

    def __init__(self, base: PseudoMV, ideal):
        self.base = base
        self.ideal = frozenset(base.check(x) for x in ideal)
        elems = base.elements()
        rep = {}
        for x in elems:
            if x in rep:
                continue
            for y in elems:
                if y not in rep and self._congruent(x, y):
                    rep[y] = x
        self.rep = rep
        self._elements = _dedupe(rep[x] for x in elems)
        self.zero = rep[base.zero]
        self.one = rep[base.one]

    def _congruent(self, x, y):
        b = self.base
        return b.odot(x, b.minus(y)) in self.ideal and b.odot(y, b.minus(x)) in self.ideal

    def oplus(self, x, y):
        return self.rep[self.base.oplus(x, y)]

    def minus(self, x):
        return self.rep[self.base.minus(x)]

    def sim(self, x):
        return self.rep[self.base.sim(x)]

    def elements(self):
        return self._elements

    def contains(self, x):
        return x in self.rep and self.rep[x] == x

    def project(self, x):
        return self.rep[self.base.check(x)]

    def class_of(self, x) -> list:
        r = self.project(x)
        return [y for y in self.base.elements() if self.rep[y] == r]

    def show(self, x):
        return self.base.show(x) + "/I"

    def format(self, x):
        return self.base.format(x)

    def parse(self, literal):
        return self.project(self.base.parse(literal))

    def describe(self):
        return f"{self.base.describe()}/I"


# -- constructions -------------------------------------------------------------

def gamma_construct(G: UnitalGroup) -> Gamma:
    return Gamma(G)


def product_algebra(Ms) -> Product:
    return Product(Ms)


def interval_algebra(M: PseudoMV, a) -> Interval:
    return Interval(M, a)


def mv_chain(n: int) -> Gamma:
    """``Gamma(Z, n)``, the (n+1)-element Lukasiewicz chain."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return Gamma(UnitalGroup(IntVector(1), (n,)))


def boolean_cube(n: int) -> Gamma:
    """The Boolean algebra ``2^n`` as ``Gamma(Z^n, (1,...,1))``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return Gamma(UnitalGroup(IntVector(n), (1,) * n))


# -- element operations ----------------------------------------------------------

_BASIC = {"oplus": 2, "odot": 2, "minus": 1, "sim": 1}
_DERIVED = ("join", "meet", "arrow", "squig")


def eval_basic(M: PseudoMV, op: str, x, y=None):
    if op not in _BASIC:
        raise ValueError(f"unknown basic operation {op!r}")
    x = M.check(x)
    if _BASIC[op] == 1:
        return getattr(M, op)(x)
    return getattr(M, op)(x, M.check(y))


def derived_ops(M: PseudoMV, op: str, x, y):
    """Join and meet through their defining expansions, plus both arrows."""
    x, y = M.check(x), M.check(y)
    if op == "join":
        return M.oplus(x, M.odot(M.sim(x), y))
    if op == "meet":
        return M.odot(x, M.oplus(M.minus(x), y))
    if op == "arrow":
        return M.oplus(M.minus(x), y)
    if op == "squig":
        return M.oplus(y, M.sim(x))
    raise ValueError(f"unknown derived operation {op!r}")


def partial_add(M: PseudoMV, x, y):
    """``x + y``, defined only when ``y (.) x = 0``."""
    x, y = M.check(x), M.check(y)
    if M.odot(y, x) != M.zero:
        return None
    return M.oplus(x, y)


def nat_mul(M: PseudoMV, n: int, x, mode: str = "circled"):
    if n < 0:
        raise ValueError("n must be >= 0")
    x = M.check(x)
    acc = M.zero
    for _ in range(n):
        if mode == "circled":
            acc = M.oplus(acc, x)
        elif mode == "partial":
            acc = partial_add(M, acc, x)
            if acc is None:
                return None
        else:
            raise ValueError(f"unknown mode {mode!r}")
    return acc


def is_boolean(M: PseudoMV, x) -> bool:
    return M.is_boolean(M.check(x))


def boolean_skeleton(M: PseudoMV) -> list:
    if M.finite:
        return [x for x in M.elements() if M.is_boolean(x)]
    if hasattr(M, "boolean_elements"):
        return M.boolean_elements()
    raise UnsupportedCarrier(f"no closed-form Boolean skeleton for {M.describe()}")


# -- axioms -----------------------------------------------------------------------

def axiom_properties(M: PseudoMV) -> list[Property]:
    o, mi, si, od = M.oplus, M.minus, M.sim, M.odot
    zero, one = M.zero, M.one

    def a1(x, y, z):
        lhs, rhs = o(x, o(y, z)), o(o(x, y), z)
        return None if lhs == rhs else {"x+(y+z)": lhs, "(x+y)+z": rhs}

    def a2(x):
        l, r = o(x, zero), o(zero, x)
        return None if l == x == r else {"x+0": l, "0+x": r}

    def a3(x):
        l, r = o(x, one), o(one, x)
        return None if l == one == r else {"x+1": l, "1+x": r}

    def a4():
        l, r = mi(one), si(one)
        return None if l == zero == r else {"1^-": l, "1^~": r}

    def a5(x, y):
        l, r = si(o(mi(x), mi(y))), mi(o(si(x), si(y)))
        return None if l == r else {"(x^- + y^-)^~": l, "(x^~ + y^~)^-": r}

    def a6(x, y):
        vals = (o(x, od(si(x), y)), o(y, od(si(y), x)), o(od(x, mi(y)), y), o(od(y, mi(x)), x))
        if len(set(vals)) == 1:
            return None
        return dict(zip(("x+(x~.y)", "y+(y~.x)", "(x.y-)+y", "(y.x-)+x"), vals))

    def a7(x, y):
        l, r = od(x, o(mi(x), y)), od(o(x, si(y)), y)
        return None if l == r else {"x.(x- + y)": l, "(x + y~).y": r}

    def a8(x):
        v = si(mi(x))
        return None if v == x else {"(x^-)^~": v}

    return [Property("A1", 3, a1), Property("A2", 1, a2), Property("A3", 1, a3),
            Property("A4", 0, a4), Property("A5", 2, a5), Property("A6", 2, a6),
            Property("A7", 2, a7), Property("A8", 1, a8)]


def check_axioms(M: PseudoMV, budget: int = checks.DEFAULT_BUDGET, seed: int = 0) -> SuiteReport:
    """A1--A8, exhaustively on finite algebras (via operation tables)."""
    if M.finite and not isinstance(M, FiniteTable):
        T = tabulate(M)
        report = checks.run_properties("axioms", T, axiom_properties(T), budget, seed)
        _relabel(report, T, M)
        return report
    return checks.run_properties("axioms", M, axiom_properties(M), budget, seed)


def _relabel(report: SuiteReport, T: FiniteTable, M: PseudoMV):
    """Map table-index counterexamples back to elements of ``M``."""
    for r in [report] + report.checks:
        cex = r.counterexample
        if cex is not None and T.source is not None:
            cex.args = tuple(T.source[i] for i in cex.args)
            cex.trace = {k: T.source[v] for k, v in cex.trace.items()}


def is_symmetric(M: PseudoMV, budget: int = checks.DEFAULT_BUDGET, seed: int = 0) -> bool:
    return symmetry_report(M, budget, seed).passed


def symmetry_report(M, budget=checks.DEFAULT_BUDGET, seed=0) -> SuiteReport:
    def sym(x):
        a, b = M.minus(x), M.sim(x)
        return None if a == b else {"x^-": a, "x^~": b}
    return checks.run_properties("symmetric", M, [Property("x^- = x^~", 1, sym)], budget, seed)


def is_boolean_algebra(M: PseudoMV, budget: int = checks.DEFAULT_BUDGET, seed: int = 0) -> SuiteReport:
    def idem(x):
        v = M.oplus(x, x)
        return None if v == x else {"x+x": v}
    return checks.run_properties("boolean", M, [Property("x+x = x", 1, idem)], budget, seed)


def n_divisibility_report(M: PseudoMV, n: int, budget: int = checks.DEFAULT_BUDGET,
                          seed: int = 0) -> SuiteReport:
    """Every ``x`` has ``y`` with ``n.y = x`` and ``(n-1).y (.) y^- = 0``.

    Finite algebras are searched exhaustively.  On ``Gamma`` over an
    n-divisible carrier the witness is ``y = x/n``; other infinite carriers
    are searched over the sample.
    """
    if n < 2:
        raise ValueError("n must be >= 2")

    def ok(x, y):
        return (nat_mul(M, n, y) == x
                and M.odot(nat_mul(M, n - 1, y), M.minus(y)) == M.zero)

    if M.finite:
        elems = M.elements()
        search = lambda x: next((y for y in elems if ok(x, y)), None)
    elif isinstance(M, Gamma) and M.G.divide(M.one, n) is not None and _divisible(M.G, n):
        search = lambda x: M.G.divide(x, n)
    else:
        elems = M.sample(budget, seed)
        search = lambda x: next((y for y in elems if ok(x, y)), None)

    def prop(x):
        y = search(x)
        if y is None:
            return {"witness": "none"}
        if not ok(x, y):
            return {"witness": y, f"{n}.y": nat_mul(M, n, y)}
        return None

    return checks.run_properties(f"{n}-divisible", M, [Property("n-divisible", 1, prop)],
                                 budget, seed)


def _divisible(G, n) -> bool:
    if isinstance(G, _Vector):
        return not G.integral or G.dims == 0
    if isinstance(G, CocycleQ4):
        return True
    if isinstance(G, LexPair):
        return _divisible(G.h, n) and _divisible(G.g, n)
    return False


def is_n_divisible(M: PseudoMV, n: int, budget: int = checks.DEFAULT_BUDGET, seed: int = 0) -> bool:
    return n_divisibility_report(M, n, budget, seed).passed


# -- isomorphism --------------------------------------------------------------------

def find_isomorphism(A: PseudoMV, B: PseudoMV) -> dict | None:
    """Backtracking search for an isomorphism between finite algebras."""
    TA, TB = tabulate(A), tabulate(B)
    n = TA.size
    if n != TB.size:
        return None
    order = [TA.zero, TA.one] + [i for i in range(n) if i not in (TA.zero, TA.one)]
    order = _dedupe(order)
    fixed = {TA.zero: TB.zero, TA.one: TB.one}
    if len(set(fixed.values())) != len(fixed):
        return None

    def consistent(m):
        for x, fx in m.items():
            if TA.minus(x) in m and m[TA.minus(x)] != TB.minus(fx):
                return False
            if TA.sim(x) in m and m[TA.sim(x)] != TB.sim(fx):
                return False
            for y, fy in m.items():
                s = TA.oplus(x, y)
                if s in m and m[s] != TB.oplus(fx, fy):
                    return False
        return True

    def extend(m, i):
        if i == len(order):
            return dict(m)
        x = order[i]
        if x in m:
            return extend(m, i + 1)
        used = set(m.values())
        for cand in range(n):
            if cand in used:
                continue
            m[x] = cand
            if consistent(m):
                found = extend(m, i + 1)
                if found is not None:
                    return found
            del m[x]
        return None

    if not consistent(fixed):
        return None
    iso = extend(dict(fixed), 0)
    if iso is None:
        return None
    src_a = TA.source or list(range(n))
    src_b = TB.source or list(range(n))
    return {src_a[i]: src_b[j] for i, j in iso.items()}


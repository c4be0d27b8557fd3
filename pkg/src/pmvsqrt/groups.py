"""Exact unital l-group carriers.

Elements are flat tuples of :class:`~fractions.Fraction` coordinates.  A
:class:`LexPair` stores the ``h`` coordinates first, then the ``g`` ones.

Four carrier families are supported:

* :class:`IntVector` / :class:`RatVector` -- Z^n or Q^n, ordered either
  coordinatewise (``"product"``) or lexicographically (``"lex"``);
* :class:`CocycleQ4` -- Q^4 with the twisted addition
  ``(a,b,c,d)+(x,y,z,w) = (a+x, b+y, c+z, d+w+bz)``, lex ordered, non-abelian;
* :class:`LexPair` -- the lexicographic product ``H x G`` of two carriers,
  with ``H`` linearly ordered.
"""

from __future__ import annotations

import enum
import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from math import floor

from .rational import format_rational, parse_rational, show_rational

Element = tuple

ZERO = Fraction(0)

# base coordinate values of the deterministic sample grid, in priority order
GRID_VALUES = (
    Fraction(0), Fraction(1), Fraction(-1), Fraction(1, 2), Fraction(-1, 2),
    Fraction(1, 4), Fraction(-1, 4), Fraction(3, 4), Fraction(-3, 4),
    Fraction(2), Fraction(-2),
)


class CarrierError(ValueError):
    """An element does not belong to the carrier it is used with."""


class Order(enum.Enum):
    LT = "LT"
    EQ = "EQ"
    GT = "GT"
    INCOMPARABLE = "INCOMPARABLE"


class Centrality(enum.Enum):
    TRUE = "true"
    SAMPLED_TRUE = "sampled-true"
    FALSE = "false"

    def __bool__(self) -> bool:
        return self is not Centrality.FALSE


def _cmp(a, b) -> Order:
    if a < b:
        return Order.LT
    if a > b:
        return Order.GT
    return Order.EQ


class GroupDescriptor:
    """Common interface of all carriers.  Instances are immutable."""

    dims: int = 0
    abelian: bool = True
    linear: bool = True

    def zero(self) -> Element:
        return (ZERO,) * self.dims

    def coerce(self, x) -> Element:
        try:
            coords = tuple(parse_rational(c) for c in x)
        except (TypeError, ValueError) as exc:
            raise CarrierError(f"{x!r} is not an element of {self.describe()}") from exc
        if len(coords) != self.dims:
            raise CarrierError(
                f"{self.describe()} expects {self.dims} coordinates, got {len(coords)}")
        return coords

    # subclasses implement these on already-coerced elements
    def add(self, x: Element, y: Element) -> Element:
        raise NotImplementedError

    def neg(self, x: Element) -> Element:
        raise NotImplementedError

    def compare(self, x: Element, y: Element) -> Order:
        raise NotImplementedError

    def meet(self, x: Element, y: Element) -> Element:
        raise NotImplementedError

    def join(self, x: Element, y: Element) -> Element:
        raise NotImplementedError

    def divide(self, x: Element, n: int) -> Element | None:
        """The unique ``h`` with ``n*h = x``, or None when the carrier has none."""
        raise NotImplementedError

    def central_closed_form(self, x: Element) -> bool | None:
        """Closed-form centrality test; None when no closed form is known."""
        return True if self.abelian else None

    def two_divisible(self) -> bool:
        raise NotImplementedError

    def describe(self) -> str:
        raise NotImplementedError

    def leq(self, x: Element, y: Element) -> bool:
        return self.compare(x, y) in (Order.LT, Order.EQ)

    def sub(self, x: Element, y: Element) -> Element:
        """``x - y``, i.e. ``x + (-y)``."""
        return self.add(x, self.neg(y))

    def nmul(self, n: int, x: Element) -> Element:
        acc = self.zero()
        for _ in range(n):
            acc = self.add(acc, x)
        return acc


@dataclass(frozen=True)
class _Vector(GroupDescriptor):
    dims: int = 1
    order: str = "product"

    integral = False

    def __post_init__(self):
        if self.dims < 0:
            raise ValueError("dims must be >= 0")
        if self.order not in ("product", "lex"):
            raise ValueError(f"unknown order {self.order!r}")

    @property
    def linear(self) -> bool:
        return self.dims <= 1 or self.order == "lex"

    def coerce(self, x) -> Element:
        coords = super().coerce(x)
        if self.integral and any(c.denominator != 1 for c in coords):
            raise CarrierError(f"{x!r} has non-integer coordinates for {self.describe()}")
        return coords

    def add(self, x, y):
        return tuple(a + b for a, b in zip(x, y))

    def neg(self, x):
        return tuple(-a for a in x)

    def compare(self, x, y):
        if self.order == "lex":
            return _cmp(x, y)
        le = all(a <= b for a, b in zip(x, y))
        ge = all(a >= b for a, b in zip(x, y))
        if le and ge:
            return Order.EQ
        if le:
            return Order.LT
        if ge:
            return Order.GT
        return Order.INCOMPARABLE

    def meet(self, x, y):
        if self.order == "lex":
            return min(x, y)
        return tuple(min(a, b) for a, b in zip(x, y))

    def join(self, x, y):
        if self.order == "lex":
            return max(x, y)
        return tuple(max(a, b) for a, b in zip(x, y))

    def divide(self, x, n):
        h = tuple(a / n for a in x)
        if self.integral and any(c.denominator != 1 for c in h):
            return None
        return h

    def two_divisible(self):
        return not self.integral or self.dims == 0

    def describe(self):
        base = "ℤ" if self.integral else "ℚ"
        if self.dims == 1:
            return base
        if self.dims == 0:
            return "O"
        sep = "^" if self.order == "product" else " lex^"
        return f"{base}{sep}{self.dims}"


class IntVector(_Vector):
    integral = True


class RatVector(_Vector):
    integral = False


@dataclass(frozen=True)
class CocycleQ4(GroupDescriptor):
    """Q^4 with ``(a,b,c,d)+(x,y,z,w) = (a+x, b+y, c+z, d+w+b*z)``.

    The order is plain lexicographic on coordinates.  It is invariant under
    left and right translation because the twist ``b*z`` only touches the
    last coordinate, and only through coordinates that already agree.
    """

    dims = 4
    abelian = False
    linear = True

    def add(self, x, y):
        a, b, c, d = x
        p, q, s, t = y
        return (a + p, b + q, c + s, d + t + b * s)

    def neg(self, x):
        a, b, c, d = x
        return (-a, -b, -c, -d + b * c)

    def compare(self, x, y):
        return _cmp(x, y)

    def meet(self, x, y):
        return min(x, y)

    def join(self, x, y):
        return max(x, y)

    def divide(self, x, n):
        # n copies of (a',b',c',d') sum to d-coordinate n*d' + C(n,2)*b'*c'
        a, b, c, d = x
        return (a / n, b / n, c / n, (d - Fraction(n - 1, 2 * n) * b * c) / n)

    def central_closed_form(self, x):
        # b*z = y*c for all y, z forces b = c = 0
        return x[1] == 0 and x[2] == 0

    def two_divisible(self):
        return True

    def describe(self):
        return "ℚ⁴ cocycle"


@dataclass(frozen=True)
class LexPair(GroupDescriptor):
    """Lexicographic product ``h x g``; ``h`` must be linearly ordered."""

    h: GroupDescriptor
    g: GroupDescriptor

    def __post_init__(self):
        if not self.h.linear:
            raise ValueError(f"lex_pair needs a linearly ordered h, got {self.h.describe()}")

    @property
    def dims(self):
        return self.h.dims + self.g.dims

    @property
    def abelian(self):
        return self.h.abelian and self.g.abelian

    @property
    def linear(self):
        return self.g.linear

    def split(self, x):
        k = self.h.dims
        return x[:k], x[k:]

    def coerce(self, x):
        coords = super().coerce(x)
        hx, gx = self.split(coords)
        return self.h.coerce(hx) + self.g.coerce(gx)

    def add(self, x, y):
        (xh, xg), (yh, yg) = self.split(x), self.split(y)
        return self.h.add(xh, yh) + self.g.add(xg, yg)

    def neg(self, x):
        xh, xg = self.split(x)
        return self.h.neg(xh) + self.g.neg(xg)

    def compare(self, x, y):
        (xh, xg), (yh, yg) = self.split(x), self.split(y)
        first = self.h.compare(xh, yh)
        if first is not Order.EQ:
            return first
        return self.g.compare(xg, yg)

    def meet(self, x, y):
        (xh, xg), (yh, yg) = self.split(x), self.split(y)
        first = self.h.compare(xh, yh)
        if first is Order.EQ:
            return xh + self.g.meet(xg, yg)
        return x if first is Order.LT else y

    def join(self, x, y):
        (xh, xg), (yh, yg) = self.split(x), self.split(y)
        first = self.h.compare(xh, yh)
        if first is Order.EQ:
            return xh + self.g.join(xg, yg)
        return y if first is Order.LT else x

    def divide(self, x, n):
        xh, xg = self.split(x)
        hh, hg = self.h.divide(xh, n), self.g.divide(xg, n)
        if hh is None or hg is None:
            return None
        return hh + hg

    def central_closed_form(self, x):
        xh, xg = self.split(x)
        ch, cg = self.h.central_closed_form(xh), self.g.central_closed_form(xg)
        if ch is False or cg is False:
            return False
        if ch is None or cg is None:
            return None
        return True

    def two_divisible(self):
        return self.h.two_divisible() and self.g.two_divisible()

    def describe(self):
        return f"({self.h.describe()} lex {self.g.describe()})"


@dataclass(frozen=True)
class UnitalGroup:
    """A carrier together with a designated unit ``u >= 0``.

    ``u = 0`` is accepted so that degenerate algebras can be built; use
    :func:`strong_unit_check` to test the strong-unit property.
    """

    descriptor: GroupDescriptor
    unit: Element

    def __post_init__(self):
        u = self.descriptor.coerce(self.unit)
        object.__setattr__(self, "unit", u)
        if not self.descriptor.leq(self.descriptor.zero(), u):
            raise CarrierError(f"unit {show_element(u)} is not >= 0")

    def describe(self) -> str:
        return f"({self.descriptor.describe()},{show_element(self.unit)})"


def show_element(x: Element) -> str:
    if len(x) == 1:
        return show_rational(x[0])
    return "(" + ",".join(show_rational(c) for c in x) + ")"


def format_element(x: Element):
    return [format_rational(c) for c in x]


def _desc(G) -> GroupDescriptor:
    return G.descriptor if isinstance(G, UnitalGroup) else G


# -- public operations -------------------------------------------------------

def g_add(G, x, y) -> Element:
    d = _desc(G)
    return d.add(d.coerce(x), d.coerce(y))


def g_neg(G, x) -> Element:
    d = _desc(G)
    return d.neg(d.coerce(x))


def g_compare(G, x, y) -> Order:
    d = _desc(G)
    return d.compare(d.coerce(x), d.coerce(y))


def g_meet_join(G, x, y) -> tuple[Element, Element]:
    d = _desc(G)
    x, y = d.coerce(x), d.coerce(y)
    return d.meet(x, y), d.join(x, y)


def g_nmul(G, n: int, x) -> Element:
    if n < 0:
        raise ValueError("n must be >= 0")
    d = _desc(G)
    return d.nmul(n, d.coerce(x))


def g_halve(G, x) -> Element | None:
    d = _desc(G)
    return d.divide(d.coerce(x), 2)


def g_divide(G, x, n: int) -> Element | None:
    if n < 1:
        raise ValueError("n must be >= 1")
    d = _desc(G)
    return d.divide(d.coerce(x), n)


def is_two_divisible(G) -> bool:
    return _desc(G).two_divisible()


def centrality(G, x, grid: list | None = None) -> Centrality:
    """Closed-form centrality where available, otherwise a grid commutator check."""
    d = _desc(G)
    x = d.coerce(x)
    closed = d.central_closed_form(x)
    if closed is not None:
        return Centrality.TRUE if closed else Centrality.FALSE
    if grid is None:
        grid = group_grid(d)
    for h in grid:
        if d.add(x, h) != d.add(h, x):
            return Centrality.FALSE
    return Centrality.SAMPLED_TRUE


def is_central(G, x) -> bool:
    return bool(centrality(G, x))


def commutes_on(G, x, grid) -> tuple | None:
    """First grid element that fails to commute with ``x``, if any."""
    d = _desc(G)
    for h in grid:
        if d.add(x, h) != d.add(h, x):
            return h
    return None


def pos_neg_parts(G, g) -> tuple[Element, Element]:
    """``(g v 0, (-g) v 0)``."""
    d = _desc(G)
    g = d.coerce(g)
    z = d.zero()
    return d.join(g, z), d.join(d.neg(g), z)


# -- sampling ------------------------------------------------------------------

def _structured(dims: int):
    if dims == 0:
        yield ()
        return
    n = len(GRID_VALUES)
    for level in range(n):
        for idx in itertools.product(range(level + 1), repeat=dims):
            if max(idx) == level:
                yield tuple(GRID_VALUES[i] for i in idx)


def random_rational(rng: random.Random, max_den: int = 16, bound: int = 2) -> Fraction:
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(-bound * den, bound * den), den)


def group_grid(G, budget: int = 512, seed: int = 0, max_den: int = 16) -> list[Element]:
    """Deterministic sample of carrier elements.

    Half of the budget comes from the base values in :data:`GRID_VALUES`
    (small values first), the rest from seeded random rationals with
    denominator at most ``max_den``.
    """
    d = _desc(G)
    out: list = []
    seen: set = set()
    for x in itertools.islice(_structured(d.dims), max(1, (budget + 1) // 2)):
        if x not in seen:
            seen.add(x)
            out.append(x)
    rng = random.Random(seed)
    attempts = 0
    while len(out) < budget and attempts < 20 * budget and d.dims > 0:
        attempts += 1
        x = d.coerce(_random_coords(d, rng, max_den))
        if x not in seen:
            seen.add(x)
            out.append(x)
    return out


def _random_coords(d: GroupDescriptor, rng: random.Random, max_den: int):
    if isinstance(d, LexPair):
        return _random_coords(d.h, rng, max_den) + _random_coords(d.g, rng, max_den)
    if isinstance(d, IntVector):
        return tuple(Fraction(rng.randint(-3, 3)) for _ in range(d.dims))
    return tuple(random_rational(rng, max_den) for _ in range(d.dims))


def strong_unit_witness(G: UnitalGroup, g: Element) -> int | None:
    """Smallest ``n <= bound`` found with ``g <= n*u``, computed then checked."""
    d, u = G.descriptor, G.unit
    lead = _leading_bound(d, g, u)
    if lead is None:
        return None
    n = max(1, lead)
    if d.leq(g, d.nmul(n, u)):
        return n
    return None


def _leading_bound(d, g, u) -> int | None:
    if d.dims == 0:
        return 1
    if isinstance(d, LexPair):
        gh, _ = d.split(g)
        uh, _ = d.split(u)
        if d.g.dims == 0:
            return _leading_bound(d.h, gh, uh)
        b = _leading_bound(d.h, gh, uh)
        return None if b is None else b + 1
    if isinstance(d, CocycleQ4) or (isinstance(d, _Vector) and d.linear):
        if u[0] <= 0:
            return None
        return floor(g[0] / u[0]) + 1
    if any(c <= 0 for c in u):
        return None
    return max(floor(a / c) + 1 for a, c in zip(g, u))


def strong_unit_check(G: UnitalGroup, grid: list | None = None) -> bool:
    """Every sampled ``g`` lies below some multiple of the unit."""
    if grid is None:
        grid = group_grid(G.descriptor)
    return all(strong_unit_witness(G, g) is not None for g in grid)

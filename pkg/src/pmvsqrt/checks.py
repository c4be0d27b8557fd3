"""Exhaustive-or-sampled evaluation of element properties."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable

from .report import FAIL, PASS, SAMPLED_PASS, Counterexample, SuiteReport

# largest number of argument tuples enumerated exhaustively per property
EXHAUSTIVE_LIMIT = 600_000
DEFAULT_BUDGET = 512


@dataclass(frozen=True)
class Property:
    """``check(*args)`` returns None when the property holds, else a trace dict.

    ``points``, when given, overrides the default tuple generator; it is
    called with ``(M, budget, seed)`` and returns ``(tuples, exhaustive)``.
    """

    name: str
    arity: int
    check: Callable[..., dict | None]
    points: Callable | None = None


def sampled_tuples(elements: list, arity: int, budget: int, seed: int) -> list[tuple]:
    if arity == 0:
        return [()]
    if arity == 1:
        return [(x,) for x in elements[:budget]]
    m = max(1, int((budget / 2) ** (1 / arity)))
    out = list(itertools.product(elements[:m], repeat=arity))
    seen = set(out)
    rng = random.Random(seed * 7919 + arity)
    attempts = 0
    while len(out) < budget and attempts < 10 * budget:
        attempts += 1
        t = tuple(rng.choice(elements) for _ in range(arity))
        if t not in seen:
            seen.add(t)
            out.append(t)
    return out


def tuple_points(M, arity: int, budget: int = DEFAULT_BUDGET, seed: int = 0) -> tuple[list, bool]:
    if arity == 0:
        return [()], True
    if M.finite and M.size ** arity <= EXHAUSTIVE_LIMIT:
        return list(itertools.product(M.elements(), repeat=arity)), True
    elements = M.elements() if M.finite else M.sample(budget, seed)
    return sampled_tuples(elements, arity, budget, seed), False


def show_value(M, v) -> str:
    if isinstance(v, str):
        return v
    if isinstance(v, bool):
        return "true" if v else "false"
    return M.show(v)


def run_property(M, prop: Property, budget: int = DEFAULT_BUDGET, seed: int = 0) -> SuiteReport:
    if prop.points is not None:
        pts, exhaustive = prop.points(M, budget, seed)
    else:
        pts, exhaustive = tuple_points(M, prop.arity, budget, seed)
    count = 0
    for args in pts:
        count += 1
        trace = prop.check(*args)
        if trace is not None:
            cex = Counterexample(
                prop.name, tuple(args), dict(trace),
                [show_value(M, a) for a in args],
                {k: show_value(M, v) for k, v in trace.items()},
            )
            return SuiteReport(prop.name, FAIL, count, cex)
    return SuiteReport(prop.name, PASS if exhaustive else SAMPLED_PASS, count)


def run_properties(suite: str, M, props: list[Property], budget: int = DEFAULT_BUDGET,
                   seed: int = 0, note: str = "") -> SuiteReport:
    return SuiteReport.combine(suite, [run_property(M, p, budget, seed) for p in props], note)


def replay(prop: Property, args: tuple) -> dict | None:
    """Re-evaluate a property at recorded arguments."""
    return prop.check(*args)

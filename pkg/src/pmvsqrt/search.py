"""Deterministic search for small counterexamples.

Candidates are enumerated by size, then shape: for each ``n`` the chain
``Gamma(Z, n-1)`` comes first, followed by products of chains whose sizes
form a non-decreasing factorisation of ``n``.  Every candidate is checked
against A1-A8 before the property is evaluated.  The enumeration does not
depend on any seed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import FiniteTable, check_axioms, tabulate
from .checks import Property, run_property
from .report import FAIL, PASS, Counterexample, SuiteReport
from .spec import AlgebraSpec, build_algebra
from .sqrt import sqrt_decision
from .suites import SUITE_NAMES, run_property_suite

DEFAULT_MAX_SIZE = 6
SEARCH_PROPERTIES = ("Sq1-solvability", "sqrt-existence", "axioms") + tuple(SUITE_NAMES)


class SearchError(ValueError):
    pass


@dataclass
class SearchResult:
    spec: AlgebraSpec
    table: FiniteTable
    report: SuiteReport

    @property
    def size(self) -> int:
        return self.table.size


def _factorisations(n: int, smallest: int = 2) -> list[list[int]]:
    out = []
    for d in range(smallest, n + 1):
        if n % d:
            continue
        if d == n:
            out.append([n])
        else:
            out.extend([d] + rest for rest in _factorisations(n // d, d))
    return out


def candidate_trees(max_size: int):
    """Spec trees of the candidate algebras, in search order."""
    for n in range(1, max_size + 1):
        yield {"kind": "mv_chain", "n": n - 1}
        for sizes in _factorisations(n):
            if len(sizes) > 1:
                yield {"kind": "product",
                       "factors": [{"kind": "mv_chain", "n": k - 1} for k in sizes]}


def sq1_solvability_property(M) -> Property:
    """Every ``x`` is a square ``y (.) y``; the trace lists the squares."""
    squares = {M.odot(y, y) for y in M.elements()}

    def prop(x):
        if x in squares:
            return None
        return {"squares": "{" + ",".join(M.show(s) for s in M.elements() if s in squares) + "}"}

    return Property("Sq1-solvability", 1, prop)


def _sqrt_existence(M) -> SuiteReport:
    d = sqrt_decision(M)
    if d.status == "found":
        return SuiteReport("sqrt-existence", PASS, M.size)
    if d.report is not None and d.report.counterexample is not None:
        return SuiteReport("sqrt-existence", FAIL, d.report.points, d.report.counterexample,
                           note=d.reason)
    cex = Counterexample("sqrt-existence", (), {}, [], {"reason": d.reason})
    return SuiteReport("sqrt-existence", FAIL, M.size, cex, note=d.reason)


def evaluate(prop: str, M) -> SuiteReport | None:
    """Report for ``prop`` on ``M``; None when ``M`` is outside its scope."""
    if prop == "Sq1-solvability":
        return run_property(M, sq1_solvability_property(M))
    if prop == "sqrt-existence":
        return _sqrt_existence(M)
    if prop == "axioms":
        return check_axioms(M)
    if prop in SUITE_NAMES:
        d = sqrt_decision(M)
        if d.status != "found":
            return None
        return run_property_suite(prop, M, d.witness)
    raise SearchError(f"unknown property {prop!r}; known: {', '.join(SEARCH_PROPERTIES)}")


def counterexample_search(prop: str, max_size: int = DEFAULT_MAX_SIZE) -> SearchResult | None:
    """First candidate of size at most ``max_size`` violating ``prop``."""
    if prop not in SEARCH_PROPERTIES:
        raise SearchError(f"unknown property {prop!r}; known: {', '.join(SEARCH_PROPERTIES)}")
    if max_size < 1:
        raise SearchError("max-size must be >= 1")
    for tree in candidate_trees(max_size):
        M = build_algebra(tree)
        if prop != "axioms" and check_axioms(M).status == FAIL:
            continue
        report = evaluate(prop, M)
        if report is not None and report.status == FAIL:
            return SearchResult(AlgebraSpec(tree), tabulate(M), report)
    return None


def table_lines(T: FiniteTable) -> list[str]:
    """Human-readable operation tables."""
    labels = T.labels
    width = max(len(s) for s in labels)
    pad = lambda s: s.rjust(width)
    lines = ["elements: " + " ".join(labels),
             "0 = " + labels[T.zero] + ", 1 = " + labels[T.one],
             "(+) " + " ".join(pad(s) for s in labels)]
    for i, row in enumerate(T.table):
        lines.append(pad(labels[i]).rjust(3) + " " + " ".join(pad(labels[v]) for v in row))
    lines.append("x^- " + " ".join(pad(labels[v]) for v in T.minus_table))
    lines.append("x^~ " + " ".join(pad(labels[v]) for v in T.sim_table))
    return lines


def table_dict(T: FiniteTable) -> dict:
    return {"elements": list(T.labels), "oplus": [list(r) for r in T.table],
            "minus": list(T.minus_table), "sim": list(T.sim_table),
            "zero": T.zero, "one": T.one}

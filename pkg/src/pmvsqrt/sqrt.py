"""Square roots on pseudo MV-algebras.

A square root ``r`` satisfies

* Sq1: ``r(x) (.) r(x) = x``;
* Sq2: ``y (.) y <= x`` implies ``y <= r(x)``;
* Sq3: ``r(x^-) = r(x) -> r(0)`` and ``r(x^~) = r(x) ~> r(0)``.

A weak square root satisfies Sq1 and Sq2 only.  Any square root agrees
pointwise with the candidate ``x -> max{y ^ (y -> x)}``, so on finite
algebras :func:`candidate_sqrt` is a decision procedure.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable

from . import checks
from .algebra import (
    AlgebraError, ElementError, FiniteTable, Gamma, Interval, Product, PseudoMV,
    is_boolean_algebra, partial_add, tabulate,
)
from .checks import Property
from .groups import LexPair, _Vector, centrality, group_grid
from .report import PASS, SuiteReport

EXHAUSTIVE = "exhaustive"
SAMPLED = "sampled"
UNVERIFIED = "unverified"

MAX_ORBIT = 64


class SqrtError(AlgebraError):
    pass


class ReconstructionError(SqrtError):
    """A precondition of the reconstruction failed; ``point`` is the witness."""

    def __init__(self, reason: str, point=None):
        super().__init__(reason)
        self.reason = reason
        self.point = point


@dataclass
class SqrtWitness:
    """A square root on ``algebra``.

    ``form`` is one of ``FiniteMap``, ``Identity``, ``ClosedHalfUnit``
    (``r(x) = (x+u)/2``), ``HPerfect`` (``r((x,y)) = ((x+1)/2, y/2)``),
    ``ProductOf``, ``Restriction`` (``r(x) ^ a`` on ``[0,a]``) or
    ``Reconstructed`` (``r(x) = b^- + f(x)``).
    """

    algebra: PseudoMV
    form: str
    fn: Callable
    verified: str = UNVERIFIED
    table: dict | None = None
    parts: tuple = ()

    def __call__(self, x):
        return self.fn(x)

    def describe(self) -> str:
        if self.form == "ProductOf":
            return "ProductOf(" + ", ".join(p.form for p in self.parts) + ")"
        return self.form


def _from_table(M, table, form="FiniteMap") -> SqrtWitness:
    return SqrtWitness(M, form, table.__getitem__, table=dict(table))


def identity_witness(M) -> SqrtWitness:
    return SqrtWitness(M, "Identity", lambda x: x)


# -- verification ------------------------------------------------------------------

def sqrt_properties(M, r, weak: bool = False) -> list[Property]:
    od, mi, si, leq = M.odot, M.minus, M.sim, M.leq
    r0 = r(M.zero)

    def sq1(x):
        rx = r(x)
        v = od(rx, rx)
        return None if v == x else {"r(x)": rx, "r(x).r(x)": v}

    def sq2(y, x):
        yy = od(y, y)
        if not leq(yy, x):
            return None
        rx = r(x)
        return None if leq(y, rx) else {"y.y": yy, "r(x)": rx}

    def sq3(x):
        rx = r(x)
        a, b = r(mi(x)), M.arrow(rx, r0)
        if a != b:
            return {"r(x^-)": a, "r(x)->r(0)": b}
        c, d = r(si(x)), M.squig(rx, r0)
        if c != d:
            return {"r(x^~)": c, "r(x)~>r(0)": d}
        return None

    props = [Property("Sq1", 1, sq1), Property("Sq2", 2, sq2)]
    if not weak:
        props.append(Property("Sq3", 1, sq3))
    return props


def table_view(M, r):
    """Operation tables of a finite ``M`` together with ``r`` on indices."""
    T = tabulate(M)
    if T.source is None:
        return T, [r(i) for i in range(T.size)]
    index = {x: i for i, x in enumerate(T.source)}
    return T, [index[r(x)] for x in T.source]


def relabel(report: SuiteReport, T: FiniteTable):
    """Map index-valued counterexamples of ``T`` back to the source algebra."""
    if T.source is None:
        return report
    conv = lambda v: T.source[v] if isinstance(v, int) and not isinstance(v, bool) else v
    for rep in _walk(report):
        cex = rep.counterexample
        if cex is not None and not getattr(cex, "_relabelled", False):
            cex.args = tuple(conv(a) for a in cex.args)
            cex.trace = {k: conv(v) for k, v in cex.trace.items()}
            cex._relabelled = True
    return report


def _walk(report):
    yield report
    for c in report.checks:
        yield from _walk(c)


def run_on(M, r, make_props, suite, budget, seed, note=""):
    """Run properties built by ``make_props(A, r)``; finite algebras use tables."""
    if M.finite:
        T, rt = table_view(M, r)
        report = checks.run_properties(suite, T, make_props(T, rt.__getitem__), budget, seed, note)
        return relabel(report, T)
    return checks.run_properties(suite, M, make_props(M, r), budget, seed, note)


def verify_sqrt(M, r, budget: int = checks.DEFAULT_BUDGET, seed: int = 0,
                weak: bool = False) -> SuiteReport:
    """Sq1, Sq2 and (unless ``weak``) Sq3: exhaustive on finite algebras."""
    return run_on(M, r, lambda A, rr: sqrt_properties(A, rr, weak),
                  "weak-sqrt" if weak else "sqrt", budget, seed)


def _stamp(w: SqrtWitness, report: SuiteReport) -> SqrtWitness | None:
    if not report.passed:
        return None
    w.verified = EXHAUSTIVE if report.status == PASS else SAMPLED
    return w


# -- candidate ------------------------------------------------------------------------

@dataclass
class CandidateMap:
    values: dict
    missing: object = None  # first x whose candidate set has no maximum


def candidate_map(M) -> CandidateMap:
    """``x -> max{y ^ (y -> x)}`` on a finite algebra."""
    T = tabulate(M)
    n = T.size
    leq = [[T.meet(a, b) == a for b in range(n)] for a in range(n)]
    out = {}
    src = T.source or list(range(n))
    for x in range(n):
        vals = {T.meet(y, T.arrow(y, x)) for y in range(n)}
        top = [v for v in vals if all(leq[w][v] for w in vals)]
        if not top:
            return CandidateMap(out, src[x])
        out[src[x]] = src[top[0]]
    return CandidateMap(out)


def candidate_value(M, x, budget: int = checks.DEFAULT_BUDGET, seed: int = 0):
    """Largest ``y ^ (y -> x)`` over the sample: a lower bound for ``r(x)``."""
    x = M.check(x)
    best = M.zero
    for y in M.sample(budget, seed):
        best = M.join(best, M.meet(y, M.arrow(y, x)))
    return best


@dataclass
class SqrtDecision:
    """Outcome of the square-root search on one algebra.

    ``status`` is ``found``, ``absent`` (proved) or ``undecided``.
    """

    algebra: PseudoMV
    status: str
    witness: SqrtWitness | None = None
    method: str = ""
    reason: str = ""
    report: SuiteReport | None = None

    @property
    def found(self) -> bool:
        return self.witness is not None


def _candidate_decision(M, budget, seed) -> SqrtDecision:
    cand = candidate_map(M)
    if cand.missing is not None:
        return SqrtDecision(M, "absent", method="candidate",
                            reason=f"no maximum of y^(y->x) at x={M.show(cand.missing)}")
    if all(k == v for k, v in cand.values.items()):
        w = identity_witness(M)
        w.table = dict(cand.values)
    else:
        w = _from_table(M, cand.values)
    report = verify_sqrt(M, w, budget, seed)
    if report.passed:
        return SqrtDecision(M, "found", _stamp(w, report), "candidate", report=report)
    cex = report.counterexample
    x = cex.args[-1] if cex.property == "Sq2" else cex.args[0]
    reason = (f"{cex.property} violated at x={M.show(x)} by candidate "
              f"r({M.show(x)})={M.show(cand.values[x])}")
    return SqrtDecision(M, "absent", method="candidate", reason=reason, report=report)


def candidate_sqrt(M, budget: int = checks.DEFAULT_BUDGET, seed: int = 0) -> SqrtWitness | None:
    """The max-formula map when it is a square root, else None (finite ``M``)."""
    if not M.finite:
        raise SqrtError("candidate_sqrt needs a finite algebra; see candidate_value")
    return _candidate_decision(M, budget, seed).witness


# -- closed forms ------------------------------------------------------------------------

def closed_form_obstruction(M) -> str | None:
    """Why ``r(x) = (x+u)/2`` is unavailable on ``M``, or None when it is."""
    if not isinstance(M, Gamma):
        return "closed form needs a Gamma algebra"
    G = M.G
    if not G.two_divisible():
        return f"{G.describe()} is not two-divisible"
    half = G.divide(M.one, 2)
    if half is None:
        return "u has no half"
    if not centrality(G, half, group_grid(G)):
        return "u/2 is not central"
    return None


def closed_form_sqrt(M, budget: int = checks.DEFAULT_BUDGET, seed: int = 0,
                     verify: bool = True) -> SqrtWitness | None:
    if closed_form_obstruction(M) is not None:
        return None
    G, u = M.G, M.one
    w = SqrtWitness(M, "ClosedHalfUnit", lambda x: G.divide(G.add(x, u), 2))
    return _stamp(w, verify_sqrt(M, w, budget, seed)) if verify else w


def hperfect_obstruction(M) -> str | None:
    if not isinstance(M, Gamma) or not isinstance(M.G, LexPair):
        return "needs Gamma over a lexicographic pair"
    G = M.G
    if G.h.dims != 1:
        return "h must be one-dimensional"
    if M.one != (1,) + G.g.zero():
        return "unit must be (1,0)"
    return None


def hperfect_sqrt(M, budget: int = checks.DEFAULT_BUDGET, seed: int = 0,
                  verify: bool = True) -> SqrtWitness | None:
    """``r((x,y)) = ((x+1)/2, y/2)`` on ``Gamma(H lex G, (1,0))``.

    With ``H = Z`` a square root exists only for trivial ``G`` (then ``M``
    is the 2-element chain and ``r`` is the identity).
    """
    if hperfect_obstruction(M) is not None:
        return None
    P = M.G
    if not P.h.two_divisible():
        if P.g.dims == 0:
            w = identity_witness(M)
            return _stamp(w, verify_sqrt(M, w, budget, seed)) if verify else w
        return None
    if not P.g.two_divisible():
        return None
    one = (1,) + P.g.zero()

    def r(x):
        xh, xg = P.split(x)
        return P.h.divide(P.h.add(xh, one[:1]), 2) + P.g.divide(xg, 2)

    w = SqrtWitness(M, "HPerfect", r)
    return _stamp(w, verify_sqrt(M, w, budget, seed)) if verify else w


def product_sqrt(M: Product, witnesses) -> SqrtWitness:
    """Componentwise square root; verified at the weakest component level."""
    witnesses = tuple(witnesses)
    if len(witnesses) != len(M.factors):
        raise SqrtError("one witness per factor is required")
    if all(w.form == "Identity" for w in witnesses):
        form = "Identity"
    else:
        form = "ProductOf"
    levels = [w.verified for w in witnesses]
    level = UNVERIFIED if UNVERIFIED in levels else SAMPLED if SAMPLED in levels else EXHAUSTIVE
    fn = lambda x: tuple(w(a) for w, a in zip(witnesses, x))
    return SqrtWitness(M, form, fn, level, parts=witnesses)


def restriction_witness(M, r, a) -> SqrtWitness:
    """``x -> r(x) ^ a`` on the interval ``[0,a]``."""
    I = Interval(M, a)
    return SqrtWitness(I, "Restriction", lambda x: M.meet(r(x), a))


# -- decision ------------------------------------------------------------------------------

def sqrt_decision(M, budget: int = checks.DEFAULT_BUDGET, seed: int = 0) -> SqrtDecision:
    if M.finite:
        return _candidate_decision(M, budget, seed)
    if isinstance(M, Product):
        parts = [sqrt_decision(F, budget, seed) for F in M.factors]
        for i, d in enumerate(parts):
            if not d.found:
                return SqrtDecision(M, d.status, method="product",
                                    reason=f"factor {i + 1} ({d.algebra.describe()}): {d.reason}")
        w = product_sqrt(M, [d.witness for d in parts])
        report = verify_sqrt(M, w, budget, seed)
        if not report.passed:
            return SqrtDecision(M, "undecided", method="product",
                                reason=f"componentwise map fails: {report.counterexample}",
                                report=report)
        return SqrtDecision(M, "found", _stamp(w, report), "product", report=report)
    if isinstance(M, Gamma):
        return _gamma_decision(M, budget, seed)
    return SqrtDecision(M, "undecided", reason=f"no decision procedure for {M.describe()}")


def _gamma_decision(M: Gamma, budget, seed) -> SqrtDecision:
    G = M.G
    if hperfect_obstruction(M) is None:
        w = hperfect_sqrt(M, budget, seed, verify=False)
        if w is not None:
            report = verify_sqrt(M, w, budget, seed)
            if report.passed:
                return SqrtDecision(M, "found", _stamp(w, report), "hperfect", report=report)
        elif not G.h.two_divisible():
            return SqrtDecision(M, "absent", method="hperfect",
                                reason="H = Z with non-trivial G admits no square root")
    obstruction = closed_form_obstruction(M)
    if obstruction is None:
        w = closed_form_sqrt(M, budget, seed, verify=False)
        report = verify_sqrt(M, w, budget, seed)
        if report.passed:
            return SqrtDecision(M, "found", _stamp(w, report), "closed-form", report=report)
        return SqrtDecision(M, "undecided", method="closed-form",
                            reason=f"(x+u)/2 fails: {report.counterexample}", report=report)
    if G.linear:
        # an infinite chain with a square root is strict, which forces both
        # two-divisibility and a central half-unit
        return SqrtDecision(M, "absent", method="chain", reason=f"infinite chain and {obstruction}")
    return SqrtDecision(M, "undecided", method="closed-form", reason=obstruction)


def find_sqrt(M, budget: int = checks.DEFAULT_BUDGET, seed: int = 0) -> SqrtWitness | None:
    return sqrt_decision(M, budget, seed).witness


# -- strictness and classification ------------------------------------------------------------

def is_strict(M, r) -> bool:
    r0 = r(M.zero)
    return r0 == M.minus(r0)


@dataclass
class ClassifyResult:
    kind: str  # Degenerate, Boolean, Strict or Mixed
    w: object
    v: object
    r0: object
    boolean_part: PseudoMV | None = None
    strict_part: PseudoMV | None = None
    boolean_report: SuiteReport | None = None
    strict_report: SuiteReport | None = None
    notes: list = field(default_factory=list)


def w_and_classify(M, r, budget: int = checks.DEFAULT_BUDGET, seed: int = 0) -> ClassifyResult:
    r0 = r(M.zero)
    w = M.odot(M.minus(r0), M.minus(r0))
    if M.degenerate:
        return ClassifyResult("Degenerate", w, w, r0)
    if r0 == M.minus(r0):
        return ClassifyResult("Strict", w, w, r0)
    if r0 == M.zero:
        return ClassifyResult("Boolean", w, w, r0)
    v = w
    if v in (M.zero, M.one):
        raise SqrtError(f"w={M.show(w)} contradicts a non-strict, non-identity root")
    B = Interval(M, v)
    vm = M.minus(v)
    sw = restriction_witness(M, r, vm)
    S = sw.algebra
    breport = is_boolean_algebra(B, budget, seed)
    sreport = verify_sqrt(S, sw, budget, seed)
    notes = []
    if not breport.passed:
        notes.append(f"[0,v] is not Boolean: {breport.counterexample}")
    if not sreport.passed:
        notes.append(f"restricted root fails on [0,v^-]: {sreport.counterexample}")
    elif not is_strict(S, sw):
        notes.append("restricted root on [0,v^-] is not strict")
    _stamp(sw, sreport)
    return ClassifyResult("Mixed", w, v, r0, B, S, breport, sreport, notes)


def interval_summary(M, a) -> str:
    """Human-readable description of ``[0,a]``."""
    if isinstance(M, Product):
        parts = []
        for F, ai in zip(M.factors, a):
            if ai == F.zero:
                continue
            parts.append(F.describe() if ai == F.one else Interval(F, ai).describe())
        return " × ".join(parts) if parts else "degenerate"
    I = Interval(M, a)
    if I.finite:
        return f"{I.size} elements"
    return I.describe()


def interval_size(M, a) -> int | None:
    if isinstance(M, Product):
        size = 1
        for F, ai in zip(M.factors, a):
            if ai == F.zero:
                continue
            if not F.finite:
                return None
            size *= Interval(F, ai).size
        return size
    I = Interval(M, a)
    return I.size if I.finite else None


def classification_line(M, result: ClassifyResult) -> str:
    if result.kind != "Mixed":
        return f"{result.kind}; w={M.show(result.w)}"
    size = interval_size(M, result.v)
    bpart = f"{size} elements" if size is not None else interval_summary(M, result.v)
    spart = interval_summary(M, M.minus(result.v))
    return f"Mixed; v={M.show(result.v)}; Boolean part {bpart}; strict part {spart}"


# -- R, f and the induced interval ------------------------------------------------------------

def R_and_f(M, r, x) -> tuple:
    """``R(x)``, the element below ``r(0)^-`` with ``R(x) (+) r(0) = r(x)``,
    and ``f(x) = r(x^~)^-``; both routes must agree."""
    x = M.check(x)
    r0 = r(M.zero)
    b = M.minus(r0)
    f = M.minus(r(M.sim(x)))
    R = M.sim(r(M.minus(x)))
    if R != f:
        raise SqrtError(f"r(x^-)^~={M.show(R)} differs from r(x^~)^-={M.show(f)}")
    if not M.leq(R, b):
        raise SqrtError(f"R(x)={M.show(R)} is not below r(0)^-={M.show(b)}")
    if M.oplus(R, r0) != r(x):
        raise SqrtError(f"R(x)+r(0) differs from r(x) at x={M.show(x)}")
    if M.oplus(R, R) != x:
        raise SqrtError(f"R(x)+R(x) differs from x at x={M.show(x)}")
    return R, f


@dataclass(frozen=True)
class InducedOps:
    oplus_r: object
    minus_r: object
    sim_r: object


def induced_interval_ops(M, r, x, y) -> InducedOps:
    """Operations of ``[0, r(0)^-]`` transported through ``f``.

    ``f`` is inverted by ``f^{-1}(z) = z (+) z``.
    """
    x, y = M.check(x), M.check(y)
    b = M.minus(r(M.zero))
    for z in (x, y):
        if not M.leq(z, b):
            raise ElementError(f"{M.show(z)} is not in [0,{M.show(b)}]")
    f = lambda z: M.minus(r(M.sim(z)))
    a, c = M.oplus(x, x), M.oplus(y, y)
    return InducedOps(f(M.oplus(a, c)), M.odot(M.minus(x), b), M.odot(M.sim(x), b))


class InducedInterval(PseudoMV):
    """``([0, r(0)^-]; (+)_r, ^{-r}, ^{~r}, 0, r(0)^-)``."""

    def __init__(self, M, r):
        self.base = M
        self.r = r
        self.b = M.minus(r(M.zero))
        self.zero = M.zero
        self.one = self.b
        self.finite = M.finite
        self._interval = Interval(M, self.b)

    def f(self, x):
        return self.base.minus(self.r(self.base.sim(x)))

    def oplus(self, x, y):
        M = self.base
        return self.f(M.oplus(M.oplus(x, x), M.oplus(y, y)))

    def minus(self, x):
        return self.base.odot(self.base.minus(x), self.b)

    def sim(self, x):
        return self.base.odot(self.base.sim(x), self.b)

    def elements(self):
        return self._interval.elements()

    def contains(self, x):
        return self._interval.contains(x)

    def check(self, x):
        return self._interval.check(x)

    def _sample(self, budget, seed):
        return self._interval.sample(budget, seed)

    def show(self, x):
        return self.base.show(x)

    def describe(self):
        return f"[0,{self.base.show(self.b)}] with induced operations"


def f_isomorphism_report(M, r, budget: int = checks.DEFAULT_BUDGET, seed: int = 0) -> SuiteReport:
    """``f`` is a bijection onto ``[0, r(0)^-]`` preserving the operations."""
    I = InducedInterval(M, r)
    f = I.f

    def hom(x, y):
        pairs = {
            "oplus": (f(M.oplus(x, y)), I.oplus(f(x), f(y))),
            "minus": (f(M.minus(x)), I.minus(f(x))),
            "sim": (f(M.sim(x)), I.sim(f(x))),
        }
        for name, (p, q) in pairs.items():
            if p != q:
                return {"f(" + name + ")": p, name + "_r(f)": q}
        return None

    def inverse(x):
        fx = f(x)
        if not M.leq(fx, I.b):
            return {"f(x)": fx}
        back = M.oplus(fx, fx)
        return None if back == x else {"f(x)": fx, "f(x)+f(x)": back}

    def order(x, y):
        if M.leq(x, y) and not M.leq(f(x), f(y)):
            return {"f(x)": f(x), "f(y)": f(y)}
        return None

    return checks.run_properties("f-isomorphism", M, [
        Property("homomorphism", 2, hom), Property("inverse", 1, inverse),
        Property("monotone", 2, order)], budget, seed)


# -- reconstruction -----------------------------------------------------------------------------

def _points(M, budget, seed):
    return M.elements() if M.finite else M.sample(budget, seed)


def reconstruct_sqrt(M, b, f=None, budget: int = checks.DEFAULT_BUDGET,
                     seed: int = 0) -> SqrtWitness:
    """``r(x) = b^- + f(x)`` from ``b`` and a halving map ``f : M -> [0,b]``.

    ``f`` may be a callable, a dict, or None; with None and a finite ``M``
    the halves are searched exhaustively.  Raises
    :class:`ReconstructionError` when a precondition fails.
    """
    b = M.check(b)
    bm = M.minus(b)
    if not M.leq(bm, b):
        raise ReconstructionError(f"b^-={M.show(bm)} is not below b={M.show(b)}", b)
    pts = _points(M, budget, seed)
    for x in pts:
        if M.odot(b, x) != M.odot(x, b):
            raise ReconstructionError(f"b.x differs from x.b at x={M.show(x)}", x)
    if f is None:
        if not M.finite:
            raise ReconstructionError("a halving map is required on infinite algebras")
        below = [y for y in M.elements() if M.leq(y, b)]
        table = {}
        for x in M.elements():
            halves = [y for y in below if M.oplus(y, y) == x]
            if not halves:
                raise ReconstructionError(
                    f"no f(x) <= b with f(x)+f(x)=x at x={M.show(x)}", x)
            table[x] = halves[0]
        f = table.__getitem__
    elif isinstance(f, dict):
        f = dict(f).__getitem__
    for x in pts:
        fx = f(x)
        if not M.leq(fx, b):
            raise ReconstructionError(f"f(x)={M.show(fx)} is not below b at x={M.show(x)}", x)
        if M.oplus(fx, fx) != x:
            raise ReconstructionError(f"f(x)+f(x) differs from x at x={M.show(x)}", x)

    def r(x):
        v = partial_add(M, bm, f(x))
        if v is None:
            raise ReconstructionError(f"b^- + f(x) undefined at x={M.show(x)}", x)
        return v

    for x in pts:
        r(x)
    w = SqrtWitness(M, "Reconstructed", r)
    report = verify_sqrt(M, w, budget, seed)
    if not report.passed:
        raise ReconstructionError(f"reconstructed map is not a square root: {report.counterexample}",
                                  report.counterexample.args)
    return _stamp(w, report)


def round_trip_report(M, r, budget: int = checks.DEFAULT_BUDGET, seed: int = 0) -> SuiteReport:
    """Rebuild ``r`` from ``(r(0)^-, f)`` and compare pointwise."""
    b = M.minus(r(M.zero))
    f = lambda x: R_and_f(M, r, x)[1]
    rebuilt = reconstruct_sqrt(M, b, f, budget, seed)

    def same(x):
        a, c = r(x), rebuilt(x)
        return None if a == c else {"r(x)": a, "rebuilt(x)": c}

    return checks.run_properties("round-trip", M, [Property("pointwise", 1, same)], budget, seed)


# -- orbit and the H-root0 ideal ------------------------------------------------------------------

def r_orbit(M, r, n: int) -> list:
    """``[r(0), r^2(0), ..., r^n(0)]``."""
    if not 0 <= n <= MAX_ORBIT:
        raise ValueError(f"orbit length must be in 0..{MAX_ORBIT}")
    out = []
    x = M.zero
    for _ in range(n):
        x = r(x)
        out.append(x)
    return out


def strict_chain_orbit(M: Gamma, n: int) -> list:
    """``(2^k - 1) u / 2^k`` for ``k = 1..n``."""
    G = M.G
    out = []
    for k in range(1, n + 1):
        p = 2 ** k
        out.append(G.divide(G.nmul(p - 1, M.one), p))
    return out


def hroot0_membership(M, r, x, depth: int = 8) -> bool:
    """``x <= r^n(0)^-`` for ``n = 1..depth``."""
    x = M.check(x)
    return all(M.leq(x, M.minus(z)) for z in r_orbit(M, r, depth))


def hroot0_exact(M: Gamma, x) -> bool:
    """Exact membership on ``Gamma(H lex G, (1,0))`` with ``H`` two-divisible:
    the ``H`` coordinate is 0 (the ``G`` part is then automatically >= 0)."""
    if hperfect_obstruction(M) is not None:
        raise SqrtError("exact form needs Gamma(H lex G, (1,0))")
    x = M.check(x)
    return x[0] == 0


def orbit_supremum(M, r, depth: int = 8):
    """``sup r^n(0)`` when it is known, else None.

    Known cases: the orbit stabilises within ``depth``; ``r`` is the
    half-unit map on an Archimedean chain ``Gamma(Q,u)`` (sup is ``u``);
    products of known cases.
    """
    orbit = r_orbit(M, r, depth + 1)
    if len(orbit) >= 2 and orbit[-1] == orbit[-2]:
        return orbit[-1]
    if isinstance(M, Product) and r.form in ("ProductOf", "Identity") and r.parts:
        sups = [orbit_supremum(F, w, depth) for F, w in zip(M.factors, r.parts)]
        return None if any(s is None for s in sups) else tuple(sups)
    if (isinstance(M, Gamma) and isinstance(M.G, _Vector) and not M.G.integral
            and M.G.dims == 1 and r.form == "ClosedHalfUnit"):
        return M.one
    return None


def upper_interval(M, a) -> list | None:
    """Elements of ``[a,1]`` when enumerable."""
    if a == M.one:
        return [a]
    if M.finite:
        return [x for x in M.elements() if M.leq(a, x)]
    if isinstance(M, Product):
        parts = []
        for F, ai in zip(M.factors, a):
            if ai == F.one:
                parts.append([ai])
            elif F.finite:
                parts.append([x for x in F.elements() if F.leq(ai, x)])
            else:
                return None
        return list(itertools.product(*parts))
    return None


def is_two_divisible_carrier(M) -> bool | None:
    if isinstance(M, Gamma):
        return M.G.two_divisible()
    if isinstance(M, Product):
        flags = [is_two_divisible_carrier(F) for F in M.factors]
        return None if None in flags else all(flags)
    return None


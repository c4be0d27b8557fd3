"""Named property suites about square roots.

Each suite returns a :class:`~pmvsqrt.report.SuiteReport`.  On finite
algebras every suite runs exhaustively on the operation tables; on infinite
ones it runs over the deterministic sample.  Suites whose hypotheses do not
apply to the given algebra pass vacuously with an explanatory note.
"""

from __future__ import annotations

import itertools

from . import checks
from .algebra import Gamma, Product, is_symmetric, partial_add
from .checks import Property
from .groups import Centrality, centrality, group_grid, pos_neg_parts
from .ideals import is_representable
from .report import PASS, SAMPLED_PASS, SuiteReport
from .sqrt import (
    SqrtError, find_sqrt, is_strict, is_two_divisible_carrier, orbit_supremum,
    run_on, upper_interval,
)

L861_GRID = 24
L861_MAX_SUBSET = 3
POW_MAX = 5


class SuiteError(ValueError):
    pass


def _vacuous(name, note) -> SuiteReport:
    return SuiteReport(name, PASS, 0, note=note)


# -- P32 items ------------------------------------------------------------

def _p32(item):
    def make(M, r):
        o, od, mi, si = M.oplus, M.odot, M.minus, M.sim
        meet, join, leq = M.meet, M.join, M.leq
        r0 = r(M.zero)
        one = M.one
        boolean = lambda x: o(x, x) == x

        def i1(x):
            rx = r(x)
            xr = join(x, r0)
            if not (leq(x, xr) and leq(xr, rx)):
                return {"x v r(0)": xr, "r(x)": rx}
            if r(one) != one:
                return {"r(1)": r(one)}
            lhs = join(od(rx, r0), od(r0, rx))
            if not leq(lhs, x):
                return {"(r(x).r(0)) v (r(0).r(x))": lhs}
            if od(rx, x) != od(x, rx):
                return {"r(x).x": od(rx, x), "x.r(x)": od(x, rx)}
            return None

        def i2(x, y):
            if leq(x, y) and not leq(r(x), r(y)):
                return {"r(x)": r(x), "r(y)": r(y)}
            return None

        def i3(x, y):
            m = meet(x, y)
            a, b = od(r(x), r(y)), od(r(y), r(x))
            if not (leq(m, a) and leq(m, b)):
                return {"x^y": m, "r(x).r(y)": a, "r(y).r(x)": b}
            if boolean(x) and leq(x, r0) and x != M.zero:
                return {"Boolean below r(0)": x}
            return None

        def i4(x):
            xx = od(x, x)
            rxx = r(xx)
            if not leq(x, rxx):
                return {"r(x.x)": rxx}
            rx = r(x)
            a = od(rxx, rxx)
            b = od(od(od(rx, rx), rx), rx)
            if not a == b == xx:
                return {"r(x.x)^2": a, "r(x)^4": b, "x.x": xx}
            return None

        def i5(x):
            lhs = join(meet(x, mi(x)), meet(x, si(x)))
            return None if leq(lhs, r0) else {"(x^x-) v (x^x~)": lhs}

        def i6(x):
            rx = r(x)
            return None if boolean(rx) == (rx == x) else {"r(x)": rx}

        def i7(x, y):
            a, b = meet(r(x), r(y)), r(meet(x, y))
            return None if a == b else {"r(x)^r(y)": a, "r(x^y)": b}

        def i8(x, y):
            a, b = M.arrow(r(x), r(y)), r(M.arrow(x, y))
            if not leq(a, b):
                return {"r(x)->r(y)": a, "r(x->y)": b}
            c, d = M.squig(r(x), r(y)), r(M.squig(x, y))
            if not leq(c, d):
                return {"r(x)~>r(y)": c, "r(x~>y)": d}
            return None

        def i9(x, y):
            a, b = r(join(x, y)), join(r(x), r(y))
            return None if a == b else {"r(x v y)": a, "r(x) v r(y)": b}

        def i10(x, y):
            a = r(od(x, y))
            b = join(od(r(x), r(y)), r0)
            if not leq(a, b):
                return {"r(x.y)": a, "(r(x).r(y)) v r(0)": b}
            rx = r(x)
            c, d = r(od(x, x)), join(od(rx, rx), r0)
            if c != d:
                return {"r(x.x)": c, "(r(x).r(x)) v r(0)": d}
            if leq(r0, x) and c != x:
                return {"r(x.x)": c}
            return None

        def i11(x):
            b = boolean(x)
            if b != (r(x) == o(x, r0)) or b != (r(x) == o(r0, x)):
                return {"r(x)": r(x), "x+r(0)": o(x, r0), "r(0)+x": o(r0, x)}
            return None

        def i11b():
            a, b = M.arrow(r0, M.zero), M.squig(r0, M.zero)
            p, q = od(a, a), od(b, b)
            if p != q or not boolean(p):
                return {"(r(0)->0)^2": p, "(r(0)~>0)^2": q}
            return None

        def i11c(a, b, z):
            # r maps [a,b] onto [r(a), r(b)]; the preimage of z >= r(0) is z.z
            if not (leq(a, b) and leq(r(a), z) and leq(z, r(b))):
                return None
            p = od(z, z)
            if r(p) != z or not (leq(a, p) and leq(p, b)):
                return {"z.z": p, "r(z.z)": r(p)}
            return None

        def i11c_image(x):
            rx = r(x)
            return None if leq(r0, rx) else {"r(x)": rx}

        table = {
            1: [Property("P32-1", 1, i1)],
            2: [Property("P32-2", 2, i2)],
            3: [Property("P32-3", 2, i3)],
            4: [Property("P32-4", 1, i4)],
            5: [Property("P32-5", 1, i5)],
            6: [Property("P32-6", 1, i6)],
            7: [Property("P32-7", 2, i7)],
            8: [Property("P32-8", 2, i8)],
            9: [Property("P32-9", 2, i9)],
            10: [Property("P32-10", 2, i10)],
            11: [Property("P32-11a", 1, i11), Property("P32-11b", 0, i11b),
                 Property("P32-11c", 3, i11c), Property("P32-11c image", 1, i11c_image)],
        }
        return table[item]
    return make


def _p32_8_moreover(M, r, budget, seed) -> SuiteReport:
    """The EQ85 inequality holds everywhere iff both arrow inequalities are equalities."""
    def make(A, rr):
        def glob():
            pts, _ = checks.tuple_points(A, 2, budget, seed)
            ineq = all(A.leq(A.odot(rr(x), rr(y)), rr(A.odot(x, y))) for x, y in pts)
            eq = all(A.arrow(rr(x), rr(y)) == rr(A.arrow(x, y))
                     and A.squig(rr(x), rr(y)) == rr(A.squig(x, y)) for x, y in pts)
            return None if ineq == eq else {"inequality": ineq, "arrow equalities": eq}
        return [Property("P32-8 equivalence", 0, glob)]
    return run_on(M, r, make, "P32-8 equivalence", budget, seed)


# -- the remaining suites ------------------------------------------------------------------

def _p71viii(M, r):
    r0 = r(M.zero)

    def prop(x):
        a, b = M.odot(x, r0), M.odot(x, x)
        return None if M.leq(a, b) else {"x.r(0)": a, "x.x": b}
    return [Property("P71-viii", 1, prop)]


def _ns1(M, r):
    r0 = r(M.zero)

    def prop(x):
        a, b = M.odot(r0, x), M.odot(x, r0)
        return None if a == b else {"r(0).x": a, "x.r(0)": b}
    return [Property("NS1", 1, prop)]


def _pow(M, r):
    r0 = r(M.zero)

    def prop(x):
        rx = r(x)
        for n in range(1, POW_MAX + 1):
            a = r(M.power(x, n))
            b = M.join(M.power(rx, n), r0)
            if a != b:
                return {"n": str(n), "r(x^n)": a, "r(x)^n v r(0)": b}
        return None
    return [Property("POW", 1, prop)]


def _l861_points(A, budget, seed):
    base = A.elements() if A.finite else A.sample(budget, seed)
    base = base[:L861_GRID]
    pts = []
    for k in range(1, L861_MAX_SUBSET + 1):
        pts.extend(itertools.combinations(base, k))
    return [(S,) for S in pts], A.finite and len(A.elements()) <= L861_GRID


def _l861(M, r):
    elems = M.elements() if M.finite else None

    def glb(S):
        if elems is None:
            acc = S[0]
            for s in S[1:]:
                acc = M.meet(acc, s)
            return acc
        lower = [x for x in elems if all(M.leq(x, s) for s in S)]
        tops = [x for x in lower if all(M.leq(y, x) for y in lower)]
        return tops[0] if tops else None

    def lub(S):
        if elems is None:
            acc = S[0]
            for s in S[1:]:
                acc = M.join(acc, s)
            return acc
        upper = [x for x in elems if all(M.leq(s, x) for s in S)]
        bots = [x for x in upper if all(M.leq(x, y) for y in upper)]
        return bots[0] if bots else None

    def meets(S):
        m = glb(S)
        rm = glb(tuple(r(s) for s in S))
        if m is not None and rm != r(m):
            return {"glb r(S)": "none" if rm is None else rm, "r(glb S)": r(m)}
        return None

    def joins(S):
        j = lub(S)
        rj = lub(tuple(r(s) for s in S))
        if j is not None and rj != r(j):
            return {"lub r(S)": "none" if rj is None else rj, "r(lub S)": r(j)}
        return None

    return [Property("L861 meets", 1, meets, _l861_points),
            Property("L861 joins", 1, joins, _l861_points)]


def _eq85(M, r):
    r0 = r(M.zero)

    def ineq(x, y):
        a, b = M.odot(r(x), r(y)), r(M.odot(x, y))
        return None if M.leq(a, b) else {"r(x).r(y)": a, "r(x.y)": b}

    def ident(x, y):
        a, b = M.join(M.odot(r(x), r(y)), r0), r(M.odot(x, y))
        return None if a == b else {"(r(x).r(y)) v r(0)": a, "r(x.y)": b}

    return [Property("EQ85 inequality", 2, ineq), Property("EQ85 identity", 2, ident)]


def _p84(M, r, budget, seed) -> SuiteReport:
    r0 = r(M.zero)
    w = M.odot(M.minus(r0), M.minus(r0))
    reports = []

    def algebra_route():
        t = partial_add(M, w, r0)
        if t != M.minus(r0):
            return {"w + r(0)": "undefined" if t is None else t, "r(0)^-": M.minus(r0)}
        s = partial_add(M, r0, t)
        if s != M.one:
            return {"r(0) + r(0) + w": "undefined" if s is None else s}
        return None

    reports.append(checks.run_property(M, Property("P84 r(0)+r(0)+w = 1", 0, algebra_route),
                                       budget, seed))
    gammas = _flatten_gamma(M, r0, w)
    if gammas is None:
        return SuiteReport.combine("P84", reports, "no group carrier; algebra route only")

    def group_route():
        for A, a0, aw in gammas:
            G, u = A.G, A.one
            h1 = G.divide(G.sub(u, aw), 2)
            h2 = G.divide(G.add(G.neg(aw), u), 2)
            if h1 != a0 or h2 != a0:
                return {"(u-w)/2": "none" if h1 is None else A.show(h1),
                        "(-w+u)/2": "none" if h2 is None else A.show(h2), "r(0)": A.show(a0)}
        return None

    levels = []

    def central():
        for A, a0, _ in gammas:
            level = centrality(A.G, a0, group_grid(A.G, budget, seed))
            levels.append(level)
            if not level:
                return {"r(0)": A.show(a0)}
        return None

    reports.append(checks.run_property(M, Property("P84 (u-w)/2 = r(0)", 0, group_route),
                                       budget, seed))
    creport = checks.run_property(M, Property("P84 r(0) central", 0, central), budget, seed)
    if creport.passed and Centrality.SAMPLED_TRUE in levels:
        creport.status = SAMPLED_PASS
    reports.append(creport)
    return SuiteReport.combine("P84", reports)


def _flatten_gamma(M, r0, w):
    if isinstance(M, Gamma):
        return [(M, r0, w)]
    if isinstance(M, Product):
        out = []
        for F, a, b in zip(M.factors, r0, w):
            sub = _flatten_gamma(F, a, b)
            if sub is None:
                return None
            out.extend(sub)
        return out
    return None


def _p83(M, r, budget, seed) -> SuiteReport:
    div = is_two_divisible_carrier(M)
    if not div:
        return _vacuous("P83", "carrier is not known to be two-divisible")

    def strict():
        r0 = r(M.zero)
        return None if is_strict(M, r) else {"r(0)": r0, "r(0)^-": M.minus(r0)}
    return checks.run_properties("P83", M, [Property("P83 strict", 0, strict)], budget, seed)


def _p862(M, r, budget, seed, depth) -> SuiteReport:
    a = orbit_supremum(M, r, depth)
    if a is None:
        return _vacuous("P862", "orbit supremum unknown")
    upper = upper_interval(M, a)

    def fixed():
        ra = r(a)
        if ra != a or M.oplus(a, a) != a:
            return {"a": a, "r(a)": ra, "a+a": M.oplus(a, a)}
        return None

    def boolean(x):
        if not M.leq(a, x):
            return None
        v = M.oplus(x, x)
        return None if v == x else {"x+x": v}

    def points(A, b, s):
        if upper is not None:
            return [(x,) for x in upper], True
        return [(M.join(x, a),) for x in A.sample(b, s)], False

    note = f"a={M.show(a)}" + (f", |[a,1]|={len(upper)}" if upper is not None else "")
    return checks.run_properties("P862", M, [
        Property("P862 r(a)=a", 0, fixed), Property("P862 [a,1] Boolean", 1, boolean, points),
    ], budget, seed, note)


def _dense(M, r, budget, seed) -> SuiteReport:
    if not isinstance(M, Gamma):
        return _vacuous("DENSE", "needs a Gamma algebra")
    G = M.G
    half = G.divide(M.one, 2) if G.two_divisible() else None
    if half is None or not centrality(G, half, group_grid(G, budget, seed)):
        return _vacuous("DENSE", "needs a two-divisible carrier with central u/2")

    def witness(g):
        gp, _ = pos_neg_parts(G, g)
        for k in range(0, 64):
            x = G.divide(gp, 2 ** k)
            if M.contains(x):
                back = G.nmul(2 ** k, x)
                return None if back == gp else {"g": M.show(gp), "x": M.show(x), "n*x": M.show(back)}
        return {"g": M.show(gp), "x": "none"}

    def points(A, b, s):
        return [(g,) for g in group_grid(G, b, s)], False

    def strict():
        return None if is_strict(M, r) else {"r(0)": r(M.zero)}

    return checks.run_properties("DENSE", M, [Property("DENSE g=nx", 1, witness, points),
                                               Property("DENSE strict", 0, strict)], budget, seed)


def _eq85_applicable(M, budget, seed) -> str | None:
    if not is_symmetric(M, budget, seed):
        return "identity needs a symmetric algebra"
    if M.finite:
        if M.size <= 16 and not is_representable(M):
            return "identity needs a representable algebra"
        return None
    if not _linear_or_product(M):
        return "representability unknown"
    return None


def _linear_or_product(M) -> bool:
    if isinstance(M, Gamma):
        return M.G.linear or M.G.abelian
    if isinstance(M, Product):
        return all(_linear_or_product(F) for F in M.factors)
    return False


# -- dispatcher -----------------------------------------------------------------------------

P32_NAMES = [f"P32-{i}" for i in range(1, 12)]
SUITE_NAMES = P32_NAMES + ["P71-viii", "NS1", "POW", "L861", "EQ85", "P84", "P83", "P862", "DENSE"]


def run_property_suite(name: str, M, r=None, budget: int = checks.DEFAULT_BUDGET,
                       seed: int = 0, depth: int = 8) -> SuiteReport:
    """Run one named suite; ``r`` defaults to the square root found on ``M``."""
    if name not in SUITE_NAMES:
        raise SuiteError(f"unknown suite {name!r}; known: {', '.join(SUITE_NAMES)}")
    if r is None:
        r = find_sqrt(M, budget, seed)
        if r is None:
            raise SqrtError(f"{M.describe()} has no square root to test")
    if name in P32_NAMES:
        item = int(name.split("-")[1])
        report = run_on(M, r, _p32(item), name, budget, seed)
        if item == 8:
            report = SuiteReport.combine(name, [report, _p32_8_moreover(M, r, budget, seed)])
        return report
    if name == "P71-viii":
        return run_on(M, r, _p71viii, name, budget, seed)
    if name == "NS1":
        return run_on(M, r, _ns1, name, budget, seed)
    if name == "POW":
        return run_on(M, r, _pow, name, budget, seed)
    if name == "L861":
        return run_on(M, r, _l861, name, budget, seed)
    if name == "EQ85":
        reason = _eq85_applicable(M, budget, seed)
        if reason is not None:
            props = lambda A, rr: _eq85(A, rr)[:1]
            return run_on(M, r, props, name, budget, seed, note=reason + "; inequality only")
        return run_on(M, r, _eq85, name, budget, seed)
    if name == "P84":
        return _p84(M, r, budget, seed)
    if name == "P83":
        return _p83(M, r, budget, seed)
    if name == "P862":
        return _p862(M, r, budget, seed, depth)
    return _dense(M, r, budget, seed)


def run_all(M, r=None, budget: int = checks.DEFAULT_BUDGET, seed: int = 0,
            depth: int = 8) -> SuiteReport:
    if r is None:
        r = find_sqrt(M, budget, seed)
        if r is None:
            raise SqrtError(f"{M.describe()} has no square root to test")
    return SuiteReport.combine("all", [run_property_suite(n, M, r, budget, seed, depth)
                                       for n in SUITE_NAMES])

"""Ideals of finite pseudo MV-algebras: predicates, enumeration, quotients.

All computations run on the operation tables of the algebra (see
:func:`~pmvsqrt.algebra.tabulate`); sets are given and returned as
collections of elements of the original algebra.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    AlgebraError, PseudoMV, Quotient, UnsupportedCarrier, check_axioms, tabulate,
)

DEFAULT_BOUND = 16


class IdealError(AlgebraError):
    pass


@dataclass(frozen=True)
class IdealSet:
    base: PseudoMV
    members: frozenset

    def __contains__(self, x) -> bool:
        return x in self.members

    def __len__(self) -> int:
        return len(self.members)

    def sorted(self) -> list:
        order = {x: i for i, x in enumerate(self.base.elements())}
        return sorted(self.members, key=order.__getitem__)

    def show(self) -> str:
        return "{" + ",".join(self.base.show(x) for x in self.sorted()) + "}"


def _require_finite(M):
    if not M.finite:
        raise UnsupportedCarrier(f"ideals of the infinite algebra {M.describe()} are not enumerable")


def _indices(M, S):
    T = tabulate(M)
    src = T.source
    if src is None:
        return T, frozenset(M.check(x) for x in S)
    index = {x: i for i, x in enumerate(src)}
    out = set()
    for x in S:
        x = M.check(x)
        out.add(index[x])
    return T, frozenset(out)


def _leq_matrix(T):
    cached = T.__dict__.get("_leq")
    if cached is None:
        n = T.size
        cached = [[T.meet(a, b) == a for b in range(n)] for a in range(n)]
        T._leq = cached
    return cached


def _is_ideal(T, I) -> bool:
    if T.zero not in I:
        return False
    leq = _leq_matrix(T)
    for x in I:
        if any(leq[y][x] and y not in I for y in range(T.size)):
            return False
        if any(T.oplus(x, y) not in I for y in I):
            return False
    return True


def _is_normal(T, I, method):
    n = range(T.size)
    if method == "definition":
        return all({T.oplus(x, i) for i in I} == {T.oplus(i, x) for i in I} for x in n)
    if method == "criterion":
        return all((T.odot(x, T.minus(y)) in I) == (T.odot(T.sim(y), x) in I)
                   for x in n for y in n)
    raise ValueError(f"unknown normality method {method!r}")


def _is_prime(T, I, method):
    if len(I) == T.size:
        return False
    n = range(T.size)
    if method == "meet":
        return all(x in I or y in I for x in n for y in n if T.meet(x, y) in I)
    if method == "P1":
        return all(T.odot(x, T.minus(y)) in I or T.odot(y, T.minus(x)) in I for x in n for y in n)
    if method == "P2":
        return all(T.odot(x, T.sim(y)) in I or T.odot(y, T.sim(x)) in I for x in n for y in n)
    raise ValueError(f"unknown primality method {method!r}")


def _generated(T, S) -> frozenset:
    """Smallest ideal containing ``S``."""
    leq = _leq_matrix(T)
    cur = set(S) | {T.zero}
    while True:
        sums = {T.oplus(a, b) for a in cur for b in cur}
        nxt = {y for y in range(T.size) if any(leq[y][s] for s in cur | sums)}
        if nxt == cur:
            return frozenset(cur)
        cur = nxt


def _is_maximal(T, I) -> bool:
    if len(I) == T.size:
        return False
    return all(len(_generated(T, I | {x})) == T.size for x in range(T.size) if x not in I)


def is_ideal(M, S) -> bool:
    _require_finite(M)
    if not S:
        return False
    T, I = _indices(M, S)
    return _is_ideal(T, I)


def is_normal(M, S, method: str = "definition") -> bool:
    """``x (+) I = I (+) x`` for every ``x``; ``method="criterion"`` uses
    ``x (.) y^- in I  <=>  y^~ (.) x in I`` instead."""
    _require_finite(M)
    T, I = _indices(M, S)
    return _is_ideal(T, I) and _is_normal(T, I, method)


def is_prime(M, S, method: str = "meet") -> bool:
    """Proper ideal with ``x ^ y in I => x in I or y in I``.

    ``method`` selects the equivalent forms ``"P1"`` (``x (.) y^- in I`` or
    ``y (.) x^- in I``) and ``"P2"`` (same with ``~``).
    """
    _require_finite(M)
    T, I = _indices(M, S)
    return _is_ideal(T, I) and _is_prime(T, I, method)


def is_maximal(M, S) -> bool:
    _require_finite(M)
    T, I = _indices(M, S)
    return _is_ideal(T, I) and _is_maximal(T, I)


def generated_ideal(M, S) -> IdealSet:
    _require_finite(M)
    T, I = _indices(M, S)
    return _to_set(M, T, _generated(T, I))


_PREDICATES = {"ideal", "normal", "prime", "maximal"}


def ideal_predicates(M, S, which: str) -> bool:
    if which not in _PREDICATES:
        raise ValueError(f"unknown predicate {which!r}; expected one of {sorted(_PREDICATES)}")
    return {"ideal": is_ideal, "normal": is_normal, "prime": is_prime,
            "maximal": is_maximal}[which](M, S)


def _to_set(M, T, I) -> IdealSet:
    src = T.source
    return IdealSet(M, frozenset(src[i] for i in I) if src is not None else frozenset(I))


def _down_sets(T):
    """All down-sets containing 0, by extending along a linear extension."""
    leq = _leq_matrix(T)
    n = T.size
    order = sorted(range(n), key=lambda x: sum(leq[y][x] for y in range(n)))
    below = [{y for y in range(n) if leq[y][x] and y != x} for x in range(n)]
    out = []

    def grow(i, cur):
        if i == n:
            out.append(frozenset(cur))
            return
        x = order[i]
        if x != T.zero:
            grow(i + 1, cur)
        if below[x] <= cur:
            cur.add(x)
            grow(i + 1, cur)
            cur.discard(x)

    grow(0, set())
    return [d for d in out if T.zero in d]


def enumerate_ideals(M, predicate=None, bound: int = DEFAULT_BOUND) -> list[IdealSet]:
    """Every ideal of a finite ``M``, smallest first.

    ``predicate`` (e.g. ``"prime"`` or a callable on ``IdealSet``) filters
    the result.
    """
    _require_finite(M)
    if M.size > bound:
        raise IdealError(f"|M| = {M.size} exceeds the enumeration bound {bound}")
    T = tabulate(M)
    ideals = [I for I in _down_sets(T) if _is_ideal(T, I)]
    order = {x: i for i, x in enumerate(range(T.size))}
    ideals.sort(key=lambda I: (len(I), sorted(order[i] for i in I)))
    result = [_to_set(M, T, I) for I in ideals]
    if predicate is None:
        return result
    if isinstance(predicate, str):
        name = predicate
        predicate = lambda I: ideal_predicates(M, I.members, name)
    return [I for I in result if predicate(I)]


def quotient_algebra(M, I) -> Quotient:
    """``M/I`` for a normal ideal of a finite ``M``."""
    _require_finite(M)
    members = I.members if isinstance(I, IdealSet) else I
    if not is_ideal(M, members):
        raise IdealError("not an ideal")
    if not is_normal(M, members):
        raise IdealError("ideal is not normal")
    Q = Quotient(M, members)
    if Q.size * len(Q.class_of(M.zero)) != M.size:
        raise IdealError("class sizes are inconsistent")
    return Q


def projection_report(M, I):
    """Exhaustive check that ``x -> x/I`` preserves the basic operations."""
    from . import checks
    from .checks import Property

    Q = quotient_algebra(M, I)
    p = Q.project

    def hom(x, y):
        pairs = {
            "oplus": (p(M.oplus(x, y)), Q.oplus(p(x), p(y))),
            "minus": (p(M.minus(x)), Q.minus(p(x))),
            "sim": (p(M.sim(x)), Q.sim(p(x))),
        }
        for name, (a, b) in pairs.items():
            if a != b:
                return {name + " image": a, name + " in quotient": b}
        return None

    def consts():
        if p(M.zero) != Q.zero or p(M.one) != Q.one:
            return {"0/I": p(M.zero), "1/I": p(M.one)}
        return None

    return checks.run_properties("projection", M, [Property("homomorphism", 2, hom),
                                                    Property("constants", 0, consts)])


def polar(M, a) -> IdealSet:
    """``a^perp = {x : x ^ a = 0}``."""
    _require_finite(M)
    a = M.check(a)
    return IdealSet(M, frozenset(x for x in M.elements() if M.meet(x, a) == M.zero))


def is_representable(M) -> bool:
    """Every polar ``a^perp`` is a normal ideal."""
    _require_finite(M)
    return all(is_normal(M, polar(M, a).members) for a in M.elements())


def check_quotient_axioms(M, I):
    return check_axioms(quotient_algebra(M, I))

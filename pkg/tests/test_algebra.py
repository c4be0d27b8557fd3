from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from pmvsqrt.algebra import (
    ElementError, FiniteTable, Gamma, Interval, Product, UnsupportedCarrier, axiom_properties,
    boolean_cube, boolean_skeleton, check_axioms, derived_ops, find_isomorphism,
    is_boolean_algebra, is_n_divisible, is_symmetric, mv_chain, nat_mul, partial_add, tabulate,
)
from pmvsqrt.groups import CocycleQ4, LexPair, RatVector, UnitalGroup
from pmvsqrt.report import FAIL, PASS, SAMPLED_PASS

F = Fraction
RATCHAIN = Gamma(UnitalGroup(RatVector(1), (1,)))
COCYCLE = Gamma(UnitalGroup(CocycleQ4(), (1, 0, 0, 0)))
LEXPAIR = Gamma(UnitalGroup(LexPair(RatVector(1), RatVector(1)), (1, 0)))


def test_chain_operations():
    M = mv_chain(4)
    x, y = (F(3),), (F(2),)
    assert M.size == 5
    assert M.oplus(x, y) == (4,)
    assert M.odot(x, y) == (1,)
    assert M.minus(x) == M.sim(x) == (1,)
    assert derived_ops(M, "arrow", x, y) == (3,)


def test_odot_convention_on_cocycle():
    # x.y = (x - u + y) v 0 = (y^- (+) x^-)^~
    M = COCYCLE
    for x in M.sample(40):
        for y in M.sample(40)[:10]:
            assert M.odot(x, y) == M.sim(M.oplus(M.minus(y), M.minus(x)))


def test_partial_addition():
    M = mv_chain(4)
    assert partial_add(M, (F(1),), (F(2),)) == (3,)
    assert partial_add(M, (F(3),), (F(2),)) is None


def test_nat_mul():
    M = RATCHAIN
    x = (F(1, 3),)
    assert nat_mul(M, 2, x) == (F(2, 3),)
    assert nat_mul(M, 4, x) == (1,)
    assert nat_mul(M, 4, x, mode="partial") is None


def test_out_of_range_element():
    with pytest.raises(ElementError):
        mv_chain(2).check((3,))
    with pytest.raises(UnsupportedCarrier):
        RATCHAIN.elements()


@pytest.mark.parametrize("n", range(0, 9))
def test_chain_axioms_exhaustive(n):
    assert check_axioms(mv_chain(n)).status == PASS


@pytest.mark.parametrize("M", [RATCHAIN, COCYCLE, LEXPAIR], ids=["ratchain", "cocycle", "lexpair"])
def test_infinite_axioms_sampled(M):
    report = check_axioms(M)
    assert report.status == SAMPLED_PASS
    assert all(c.points >= 512 for c in report.checks if c.suite != "A4")


def test_broken_table_fails_with_replayable_counterexample():
    # 3-element chain with a corrupted (+): 1 (+) 1 = 1
    T = FiniteTable(["0", "a", "1"], [[0, 1, 2], [1, 1, 2], [2, 2, 2]],
                    [2, 1, 0], [2, 1, 0], 0, 2)
    report = check_axioms(T)
    assert report.status == FAIL
    cex = report.counterexample
    prop = next(p for p in axiom_properties(T) if p.name == cex.property)
    assert prop.check(*cex.args) is not None


def test_symmetry():
    assert is_symmetric(mv_chain(3))
    # u has vanishing middle coordinates, so both negations agree
    assert is_symmetric(COCYCLE)
    assert not is_symmetric(Gamma(UnitalGroup(CocycleQ4(), (1, 1, 1, 0))))


def test_cocycle_oplus_is_not_commutative():
    M = COCYCLE
    x, y = (F(1, 4), 1, 0, 0), (F(1, 4), 0, 1, 0)
    assert M.oplus(x, y) != M.oplus(y, x)


def test_boolean_skeleton_and_products():
    M = Product([mv_chain(1), RATCHAIN])
    assert sorted(boolean_skeleton(M)) == [((0,), (0,)), ((0,), (1,)), ((1,), (0,)), ((1,), (1,))]
    assert is_boolean_algebra(boolean_cube(3)).status == PASS
    assert is_boolean_algebra(mv_chain(2)).status == FAIL


def test_interval_algebra():
    M = Product([mv_chain(1), RATCHAIN])
    I = Interval(M, ((1,), (0,)))
    assert I.size == 2
    assert check_axioms(I).status == PASS


def test_divisibility():
    assert is_n_divisible(RATCHAIN, 2)
    assert not is_n_divisible(mv_chain(4), 2)


def test_isomorphism():
    assert find_isomorphism(boolean_cube(2), Product([mv_chain(1), mv_chain(1)])) is not None
    assert find_isomorphism(boolean_cube(2), mv_chain(3)) is None


def test_tabulate_round_trip():
    M = Product([mv_chain(2), mv_chain(1)])
    T = tabulate(M)
    for i, x in enumerate(T.source):
        for j, y in enumerate(T.source):
            assert T.source[T.oplus(i, j)] == M.oplus(x, y)


unit_interval = st.fractions(min_value=0, max_value=1, max_denominator=32).map(lambda q: (q,))


@given(unit_interval, unit_interval, unit_interval)
def test_ratchain_mv_identities(x, y, z):
    M = RATCHAIN
    assert M.oplus(x, y) == M.oplus(y, x)
    assert M.oplus(M.oplus(x, y), z) == M.oplus(x, M.oplus(y, z))
    # Lukasiewicz: x v y = (x . y^-) (+) y
    assert M.join(x, y) == M.oplus(M.odot(x, M.minus(y)), y)
    assert M.minus(M.minus(x)) == x

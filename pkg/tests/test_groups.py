from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from pmvsqrt.groups import (
    CarrierError, Centrality, CocycleQ4, IntVector, LexPair, Order, RatVector, UnitalGroup,
    centrality, g_add, g_compare, g_halve, g_meet_join, g_neg, g_nmul, group_grid, is_central,
    is_two_divisible,
)

small = st.fractions(min_value=-4, max_value=4, max_denominator=8)


def elems(dims):
    return st.tuples(*[small] * dims)


CARRIERS = [
    RatVector(1), RatVector(2, "lex"), RatVector(2, "product"), CocycleQ4(),
    LexPair(RatVector(1), RatVector(1)),
]
CARRIER_IDS = ["Q", "Q2-lex", "Q2-product", "cocycle", "Q-lex-Q"]


@pytest.mark.parametrize("G", CARRIERS, ids=CARRIER_IDS)
@given(data=st.data())
def test_group_axioms(G, data):
    x, y, z = (data.draw(elems(G.dims)) for _ in range(3))
    zero = G.zero()
    assert g_add(G, g_add(G, x, y), z) == g_add(G, x, g_add(G, y, z))
    assert g_add(G, x, zero) == x == g_add(G, zero, x)
    assert g_add(G, x, g_neg(G, x)) == zero == g_add(G, g_neg(G, x), x)


@pytest.mark.parametrize("G", CARRIERS, ids=CARRIER_IDS)
@given(data=st.data())
def test_order_is_translation_invariant(G, data):
    x, y, z = (data.draw(elems(G.dims)) for _ in range(3))
    if G.leq(x, y):
        assert G.leq(g_add(G, x, z), g_add(G, y, z))
        assert G.leq(g_add(G, z, x), g_add(G, z, y))


@pytest.mark.parametrize("G", CARRIERS, ids=CARRIER_IDS)
@given(data=st.data())
def test_lattice(G, data):
    x, y = data.draw(elems(G.dims)), data.draw(elems(G.dims))
    m, j = g_meet_join(G, x, y)
    assert G.leq(m, x) and G.leq(m, y) and G.leq(x, j) and G.leq(y, j)
    _, nj = g_meet_join(G, g_neg(G, x), g_neg(G, y))
    assert m == g_neg(G, nj)


@given(elems(4))
def test_cocycle_halving_and_doubling(x):
    G = CocycleQ4()
    h = g_halve(G, x)
    assert h is not None and g_add(G, h, h) == x


def test_cocycle_is_not_abelian():
    G = CocycleQ4()
    x = tuple(map(Fraction, (0, 1, 0, 0)))
    y = tuple(map(Fraction, (0, 0, 1, 0)))
    assert g_add(G, x, y) != g_add(G, y, x)
    assert g_add(G, x, y)[3] == 1


def test_cocycle_unit_half_is_central():
    G = CocycleQ4()
    half = g_halve(G, (1, 0, 0, 0))
    assert half == (Fraction(1, 2), 0, 0, 0)
    assert centrality(G, half) is Centrality.TRUE
    assert is_central(G, half)
    assert not is_central(G, (0, 1, 0, 0))


def test_compare_and_nmul():
    G = RatVector(2, "product")
    assert g_compare(G, (1, 0), (0, 1)) is Order.INCOMPARABLE
    assert g_compare(RatVector(2, "lex"), (1, -5), (0, 9)) is Order.GT
    assert g_nmul(G, 3, (Fraction(1, 3), 1)) == (1, 3)


def test_divisibility_flags():
    assert is_two_divisible(RatVector(1))
    assert not is_two_divisible(IntVector(1))
    assert g_halve(IntVector(1), (3,)) is None


def test_unit_must_be_positive():
    with pytest.raises(CarrierError):
        UnitalGroup(RatVector(1), (-1,))
    with pytest.raises(CarrierError):
        UnitalGroup(IntVector(1), ("1/2",))


def test_grid_is_deterministic_and_distinct():
    a = group_grid(CocycleQ4(), 256, seed=3)
    assert a == group_grid(CocycleQ4(), 256, seed=3)
    assert len(set(a)) == len(a) == 256

import json

import pytest
from hypothesis import given, strategies as st

from pmvsqrt.algebra import Gamma, Interval, Product, check_axioms
from pmvsqrt.report import PASS
from pmvsqrt.spec import (
    CORPUS, SpecError, corpus, corpus_text, load_spec, parse_element, parse_spec, print_spec,
)


@pytest.mark.parametrize("name", CORPUS)
def test_corpus_round_trip_is_byte_identical(name):
    once = print_spec(parse_spec(corpus_text(name)))
    assert print_spec(parse_spec(once)) == once


def test_chain4():
    M = parse_spec('{"kind":"mv_chain","n":4}').algebra
    assert M.describe() == "Γ(ℤ,4)"


def test_cocycle_spec():
    M = parse_spec('{"kind":"gamma","group":{"kind":"cocycle_q4"},"unit":["1","0","0","0"]}').algebra
    assert isinstance(M, Gamma) and M.one == (1, 0, 0, 0)


def test_negative_n_error():
    with pytest.raises(SpecError) as info:
        parse_spec('{"kind":"mv_chain","n":-1}')
    assert info.value.message == "n must be ≥ 0"
    assert (info.value.line, info.value.col) == (1, 24)


@pytest.mark.parametrize("text, line, col, fragment", [
    ('{"kind":"mv_chainz","n":1}', 1, 9, "unknown algebra kind"),
    ('{\n  "kind": "gamma",\n  "group": {"kind": "rat_vector"},\n  "unit": 0.5\n}', 4, 11, "float"),
    ('{"kind":"gamma","group":{"kind":"rat_vector"},"unit":"1/x"}', 1, 54, "malformed rational"),
    ('{"kind":"gamma","group":{"kind":"cocycle_q4"},"unit":[1,0]}', 1, 54, "coordinates"),
    ('{"kind":"gamma","group":{"kind":"int_vector","order":"weird"},"unit":1}', 1, 54, "order"),
    ('{"kind":"boolean","n":2,"extra":1}', 1, 1, "unexpected key"),
    ('{"kind":"product","factors":[]}', 1, 29, "non-empty"),
    ('{"kind": "mv_chain", "n": 1', 1, 28, "Expecting"),
    ('{"kind":"gamma","group":{"kind":"rat_vector"},"unit":-1}', 1, 54, "not >= 0"),
])
def test_errors_carry_positions(text, line, col, fragment):
    with pytest.raises(SpecError) as info:
        parse_spec(text)
    err = info.value
    assert (err.line, err.col) == (line, col)
    assert fragment in err.message


def test_all_kinds_build():
    spec = parse_spec(json.dumps({
        "kind": "quotient",
        "base": {"kind": "product", "factors": [{"kind": "mv_chain", "n": 1}, {"kind": "boolean", "n": 1}]},
        "ideal": [[0, 0], [0, 1]],
    }))
    assert spec.algebra.size == 2
    I = parse_spec('{"kind":"interval","base":{"kind":"mv_chain","n":4},"a":2}').algebra
    assert isinstance(I, Interval) and I.size == 3
    T = parse_spec(json.dumps({"kind": "table", "elements": ["0", "1"], "oplus": [[0, 1], [1, 1]],
                               "minus": [1, 0], "sim": [1, 0], "zero": 0, "one": 1})).algebra
    assert check_axioms(T).status == PASS
    L = parse_spec('{"kind":"gamma","group":{"kind":"lex_pair","h":{"kind":"rat_vector"},'
                   '"g":{"kind":"rat_vector","dims":2}},"unit":[1,0,0]}').algebra
    assert L.one == (1, 0, 0)


def test_table_arity_mismatch():
    with pytest.raises(SpecError) as info:
        parse_spec('{"kind":"table","elements":["0","1"],"oplus":[[0,1]],'
                   '"minus":[1,0],"sim":[1,0],"zero":0,"one":1}')
    assert "rows" in info.value.message


def test_corpus_entries():
    specs = corpus()
    assert set(specs) == set(CORPUS)
    assert isinstance(specs["prop862"].algebra, Product)
    assert len(specs["prop862"].algebra.factors) == 5


def test_load_spec_from_file(tmp_path):
    path = tmp_path / "chain.spec"
    path.write_text('{"kind": "mv_chain", "n": 2}', encoding="utf-8")
    assert load_spec(str(path)).algebra.size == 3
    with pytest.raises(SpecError):
        load_spec(str(tmp_path / "missing.spec"))


def test_parse_element():
    M = corpus()["lexpair"].algebra
    assert parse_element(M, '["1/2", 3]') == (0.5, 3)
    assert parse_element(corpus()["ratchain"].algebra, "1/4") == (0.25,)
    with pytest.raises(SpecError):
        parse_element(M, '[2, 0]')


rationals = st.fractions(min_value=0, max_value=4, max_denominator=12)


@given(st.lists(rationals, min_size=1, max_size=3))
def test_generated_specs_round_trip(coords):
    unit = [str(q) for q in coords]
    text = json.dumps({"kind": "gamma", "group": {"kind": "rat_vector", "dims": len(coords)},
                       "unit": unit})
    once = print_spec(parse_spec(text))
    assert print_spec(parse_spec(once)) == once
    assert parse_spec(once).algebra.one == tuple(coords)

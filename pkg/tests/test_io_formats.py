import json

import pytest

from src.core.errors import ParseError
from src.core.io_formats import (
    bipartite_names,
    canonical_json,
    format_ideal,
    ideal_from_json,
    ideal_to_json,
    parse_ideal,
    parse_int_list,
    parse_monomial,
)
from src.core.monomial_core import Monomial, MonomialIdeal


def test_parse_and_format_round_trip():
    ideal, names = parse_ideal("x1^3, x1^2*x2^2, x2^4")
    assert names == ["x1", "x2"]
    text = format_ideal(ideal, names)
    assert text == "x1^3, x1^2*x2^2, x2^4"
    assert parse_ideal(text)[0] == ideal


def test_parse_with_explicit_ambient():
    ideal, names = parse_ideal("x1", n=3)
    assert ideal.ambient_n == 3
    assert names == ["x1", "x2", "x3"]


def test_parse_bipartite_inference():
    ideal, names = parse_ideal("x1*y1, x1*y2, x2*y1")
    assert names == bipartite_names(2, 2) == ["x1", "x2", "y1", "y2"]
    assert ideal.ambient_n == 4


def test_parse_identity_and_zero():
    assert parse_ideal("1")[0].is_unit()
    assert parse_ideal("0")[0].is_zero()
    assert format_ideal(MonomialIdeal.zero(2)) == "0"
    assert format_ideal(MonomialIdeal.unit(2)) == "1"


@pytest.mark.parametrize("text", ["x0", "z1", "x1^", "x1**2", "x1^a"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_ideal(text)


def test_ambient_smaller_than_index_is_rejected():
    with pytest.raises(ParseError):
        parse_ideal("x3", n=2)


def test_parse_monomial_requires_single_term():
    names = ["x1", "x2"]
    assert parse_monomial("x1*x2^2", names) == Monomial((1, 2))
    with pytest.raises(ParseError):
        parse_monomial("x1, x2", names)


def test_json_round_trip():
    ideal, _ = parse_ideal("x1^2, x1*x2")
    payload = ideal_to_json(ideal)
    assert payload == {"n": 2, "generators": [[2, 0], [1, 1]]}
    assert ideal_from_json(json.dumps(payload)) == ideal
    assert parse_ideal(json.dumps(payload))[0] == ideal


@pytest.mark.parametrize(
    "text",
    ['{"n": 0, "generators": []}', '{"n": 2, "generators": [[1]]}', '{"n": 2, "generators": [[-1, 0]]}', "{oops"],
)
def test_json_errors(text):
    with pytest.raises(ParseError):
        ideal_from_json(text)


def test_parse_int_list():
    assert parse_int_list("4,4,3") == (4, 4, 3)
    with pytest.raises(ParseError):
        parse_int_list("4,a")
    with pytest.raises(ParseError):
        parse_int_list("")


def test_canonical_json_is_stable():
    payload = {"b": [1, 2], "a": {"y": 1, "x": 2}}
    text = canonical_json(payload)
    assert canonical_json(json.loads(text)) == text
    assert text.index('"a"') < text.index('"b"')

import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qlinset.fileio import (
    SystemFileError,
    dumps_system,
    load_system,
    loads_system,
    parse_point,
    system_to_dict,
)
from qlinset.interval import Interval
from qlinset.selftest import random_system
from qlinset.system import ParamRef, QuantIntervalSystem

WEAK = {
    "m": 1, "n": 1,
    "A": [[{"lo": 1, "hi": 2, "q": "exists"}]],
    "b": [{"lo": 1, "hi": 2, "q": "exists"}],
    "sigma": ["eq"],
}


def doc(**changes):
    d = json.loads(json.dumps(WEAK))
    d.update(changes)
    return json.dumps(d)


@given(st.integers(0, 2**32 - 1))
def test_roundtrip_generated(seed):
    rng = random.Random(seed)
    s = random_system(rng, rng.randint(1, 3), rng.randint(1, 3))
    assert loads_system(dumps_system(s)) == s


@given(st.lists(st.fractions(max_denominator=50), min_size=2, max_size=2))
def test_roundtrip_rationals(ends):
    lo, hi = sorted(ends)
    s = QuantIntervalSystem([[(lo, hi)]], [(lo, hi)], [["A"]], ["E"], ["le"])
    t = loads_system(dumps_system(s))
    assert t == s
    assert t.A[0][0] == Interval(lo, hi)


def test_fraction_strings():
    s = loads_system(doc(b=[{"lo": "1/3", "hi": "0.5", "q": "forall"}]))
    assert s.b[0] == Interval(Fraction(1, 3), Fraction(1, 2))
    assert system_to_dict(s)["b"][0] == {"lo": "1/3", "hi": 0.5, "q": "forall"}


def test_decimal_numbers_are_exact():
    s = loads_system('{"A": [[{"lo": 0.1, "hi": 0.2, "q": "E"}]],'
                     ' "b": [{"lo": 0, "hi": 1, "q": "E"}], "sigma": ["ge"]}')
    assert s.A[0][0].lo == Fraction(1, 10)


def test_prefix_parsing():
    s = loads_system(doc(b=[{"lo": 1, "hi": 2, "q": "forall"}], prefix=["b_1", "a_1_1"]))
    assert s.prefix == (ParamRef("b", 0), ParamRef("a", 0, 0))


def test_missing_prefix_gets_default():
    s = loads_system(doc())
    assert [p.name for p in s.prefix] == ["a_1_1", "b_1"]


@pytest.mark.parametrize("text, msg", [
    ("{", "malformed JSON"),
    ("[]", "JSON object"),
    (doc(sigma=["eq", "eq"]), "sigma"),
    (doc(m=2), "m/n"),
    (doc(A=[[{"lo": 2, "hi": 1, "q": "E"}]]), "improper"),
    (doc(A=[[{"lo": 1, "hi": "inf", "q": "E"}]]), "finite"),
    (doc(A=[[{"lo": 1, "hi": 2}]]), "lo, hi, q"),
    (doc(A=[[{"lo": 1, "hi": 2, "q": "sometimes"}]]), "quantifier"),
    (doc(sigma=["lt"]), "relation"),
    (doc(prefix=["a_1_1"]), "exactly once"),
    (doc(prefix="a_1_1 b_1"), "prefix"),
    (json.dumps({"A": [], "b": [], "sigma": []}), "non-empty"),
])
def test_malformed(text, msg):
    with pytest.raises(SystemFileError, match=msg):
        loads_system(text)


def test_load_from_path(tmp_path):
    p = tmp_path / "s.json"
    p.write_text(doc())
    assert load_system(p).sigma[0].value == "eq"


def test_parse_point():
    assert parse_point("1,-0.5,1/3") == [1, Fraction(-1, 2), Fraction(1, 3)]
    with pytest.raises(SystemFileError):
        parse_point("1,inf")
    with pytest.raises(SystemFileError):
        parse_point("1,x")

import json

import pytest
from hypothesis import given, settings, strategies as st

from revent.errors import BoundExceeded
from revent.io import ParseError, dumps, from_json, load_map_file, loads, map_json, to_dot
from revent.testkit import FixtureId, enumerate_structures, fixture

POP = (
    [fixture(f) for f in FixtureId]
    + list(enumerate_structures("rpes", 3, samples=20))
    + list(enumerate_structures("raes", 3, samples=20))
    + list(enumerate_structures("res", 3, samples=20))
    + list(enumerate_structures("cs", 3, samples=20))
)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(POP))
def test_round_trip(s):
    text = dumps(s)
    assert loads(text) == s
    assert dumps(loads(text)) == text


def test_con_all():
    r = from_json({"kind": "res", "events": ["a", "b"], "con": "all", "enablings": []})
    assert len(r.con) == 4


def test_con_all_respects_bound():
    with pytest.raises(BoundExceeded):
        from_json({"kind": "res", "events": [f"e{i}" for i in range(12)], "con": "all"})


@pytest.mark.parametrize(
    "data",
    [
        [],
        {"kind": "graph"},
        {"kind": "rpes", "events": "ab"},
        {"kind": "rpes", "events": ["a"], "lt": [["a"]]},
        {"kind": "raes", "events": ["a"], "cau": [{"cause": "a"}]},
        {"kind": "res", "events": ["a"], "enablings": [{"X": [], "event": "a", "polarity": "sideways"}]},
        {"kind": "cs", "events": ["a"], "transitions": [{"add": ["a"]}]},
    ],
)
def test_malformed(data):
    with pytest.raises(ParseError):
        from_json(data)


def test_not_json():
    with pytest.raises(ParseError):
        loads("{nope")


def test_metadata_ignored():
    data = json.loads(dumps(fixture("fig4_cs"), {"printed": "x", "notes": ["y"]}))
    assert from_json(data) == fixture("fig4_cs")


def test_dot_fig4():
    dot = to_dot(fixture("fig4_cs"))
    lines = dot.splitlines()
    assert sum(1 for l in lines if "->" in l) == 9
    assert sum(1 for l in lines if l.strip().endswith(";") and "->" not in l) == 4
    assert '  "{b}" -> "{a}" [label="a,b-"];' in lines
    assert dot == to_dot(fixture("fig4_cs"))


def test_map_file(tmp_path):
    (tmp_path / "m.json").write_text(map_json([("b", "y"), ("a", "x")], "s.json", "t.json"))
    mapping, src, dst = load_map_file(tmp_path / "m.json")
    assert mapping == {"a": "x", "b": "y"}
    assert src == str(tmp_path / "s.json") and dst == str(tmp_path / "t.json")


def test_bad_map_file(tmp_path):
    (tmp_path / "m.json").write_text('{"map": []}')
    with pytest.raises(ParseError):
        load_map_file(tmp_path / "m.json")

import pytest
from hypothesis import given, settings, strategies as st

from revent.analysis import (
    check_fwd_reachability,
    check_preservation,
    check_roundtrip_cs,
    check_roundtrip_res,
    has_unnecessary_enablings,
    is_cause_respecting_cs,
    is_cause_respecting_res,
    is_stable_cs,
    is_stable_res,
    m_cs,
    m_res,
    reachable,
    scs_hypotheses,
)
from revent.core import Cs, Res, enabling, fs, powerset, transition, validate_cs
from revent.errors import HypothesisUnmet, NoEmptyConfig
from revent.functors import c_r, r_functor
from revent.testkit import enumerate_structures, fixture


def _without(c, *ts):
    return Cs(c.events, c.reversible, c.configs, c.trans - {transition(*t) for t in ts})


ONE = Cs({"a"}, {"a"}, [(), ("a",)], [transition((), ("a",)), transition(("a",), (), ("a",))])


# --- reachability ---------------------------------------------------------------


def test_reachable_fig4():
    r = reachable(fixture("fig4_cs"), forward_only=True)
    assert r.reached == {fs(), fs("a"), fs("b"), fs("a", "b")}
    assert r.start == fs() and r.forward_only


def test_reachable_without_transitions():
    assert reachable(Cs({"a"}, (), [(), ("a",)], [])).reached == {fs()}


def test_reachable_drawn_left_operand():
    assert reachable(fixture("csp0"), forward_only=True).reached == {fs(), fs("a"), fs("a", "b")}


def test_reachable_needs_empty_configuration():
    with pytest.raises(NoEmptyConfig):
        reachable(Cs({"a"}, (), [("a",)], []))


CS2 = list(enumerate_structures("cs", 2))


@settings(max_examples=80, deadline=None)
@given(st.sampled_from([c for c in CS2 if fs() in c.configs]))
def test_forward_reach_is_included(c):
    assert reachable(c, True).reached <= reachable(c, False).reached


# --- minimal enabling sets ---------------------------------------------------------


def test_m_res_examples():
    assert m_res(fixture("res0"), "b") == {fs("a")}
    assert m_res(fixture("fig4_res"), "a") == {fs()}
    assert m_res(Res({"a"}, powerset({"a"}), []), "a") == frozenset()


def test_m_cs_examples():
    assert m_cs(fixture("fig4_cs"), "a") == {fs()}
    assert m_cs(Cs({"a"}, (), [(), ("a",)], []), "a") == frozenset()
    assert m_cs(c_r(fixture("res0")), "b") == {fs("a")}


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(CS2), st.sampled_from(["a", "b"]))
def test_minimal_sets_are_antichains(c, e):
    m = m_cs(c, e)
    assert not any(X < Y for X in m for Y in m)
    r = r_functor(c)
    m = m_res(r, e)
    assert not any(X < Y for X in m for Y in m)


# --- stability ---------------------------------------------------------------------


def test_stable_res_examples():
    assert is_stable_res(fixture("fig4_res")).ok
    es3 = fixture("es3")
    assert is_stable_res(es3).ok
    variant = Res(es3.events, powerset(es3.events), es3.gens)
    rep = is_stable_res(variant)
    assert "stable-res.intersection" in rep.clauses()


def test_stable_cs_examples():
    c = fixture("fig4_cs")
    assert is_stable_cs(c).ok
    rep = is_stable_cs(_without(c, ((), ("a", "b"))))
    assert rep.clauses() == {"stable-cs.square"}
    assert is_stable_cs(ONE).ok


def test_stable_cs_reversible_without_reversal():
    c = Cs({"a"}, {"a"}, [(), ("a",)], [transition((), ("a",))])
    assert "stable-cs.reversible-has-reversal" in is_stable_cs(c).clauses()


def test_stable_cs_not_downward_closed():
    c = Cs({"a", "b"}, (), [(), ("a", "b")], [])
    assert "stable-cs.downward-closed" in is_stable_cs(c).clauses()


# --- cause-respecting ----------------------------------------------------------------


def test_cause_respecting_res_examples():
    assert is_cause_respecting_res(fixture("fig4_res")).ok
    rep = is_cause_respecting_res(fixture("res0"))
    assert "cause-respecting-res.forward" in rep.clauses()
    plain = Res({"a", "b"}, powerset({"a", "b"}), [enabling((), (), "a"), enabling({"a"}, (), "b")])
    assert is_cause_respecting_res(plain).ok


def test_cause_respecting_res_strict_converse_is_demanding():
    # the literal biconditional flags the fig4 structure itself: reversing b never disturbs a,
    # yet b is in no minimal enabling set of a
    rep = is_cause_respecting_res(fixture("fig4_res"), strict_iff=True)
    assert "cause-respecting-res.converse" in rep.clauses()


def test_cause_respecting_cs_examples():
    c = fixture("fig4_cs")
    assert is_cause_respecting_cs(c).ok
    assert not is_cause_respecting_cs(_without(c, ((), ("a",)))).ok
    assert is_cause_respecting_cs(Cs({"a", "b"}, (), powerset({"a", "b"}), [transition((), ("a",))])).ok


# --- unnecessary enablings -------------------------------------------------------------


def test_unnecessary_enablings():
    r = fixture("fig4_res")
    assert not has_unnecessary_enablings(r)
    assert has_unnecessary_enablings(Res(r.events, r.con, set(r.gens) | {enabling((), ("b",), "a")}))
    assert not has_unnecessary_enablings(Res())


# --- theorem-shaped checks ---------------------------------------------------------------


def test_roundtrip_examples():
    assert check_roundtrip_cs(fixture("fig4_cs")).ok
    assert check_roundtrip_cs(Cs()).ok
    assert check_roundtrip_res(fixture("fig4_res")).ok
    assert check_roundtrip_res(Res()).ok


def test_roundtrip_hypotheses_reported():
    c = fixture("fig4_cs")
    with pytest.raises(HypothesisUnmet) as exc:
        check_roundtrip_cs(_without(c, ((), ("a", "b"))))
    assert exc.value.failed == ["stable"]
    r = fixture("fig4_res")
    with pytest.raises(HypothesisUnmet) as exc:
        check_roundtrip_res(Res(r.events, r.con, set(r.gens) | {enabling((), ("b",), "a")}))
    assert "no-unnecessary-enablings" in exc.value.failed


def test_scs_hypotheses_empty_family():
    assert "has-empty-configuration" in scs_hypotheses(Cs({"a"}, (), [], []))


def test_roundtrip_res_counterexample_frozen():
    # ∅ ⊢ a alone with Con = {∅,{a},{b}}: the system only ever adds a at ∅, so
    # the rebuilt enabling carries the preventing set {b}
    r = Res({"a", "b"}, [(), ("a",), ("b",)], [enabling((), (), "a")])
    assert is_stable_res(r).ok and not has_unnecessary_enablings(r)
    rebuilt = r_functor(c_r(r))
    assert enabling((), ("b",), "a") in rebuilt.gens
    assert not check_roundtrip_res(r).ok


def test_fwd_reachability_examples():
    assert check_fwd_reachability(fixture("fig4_cs")).ok
    assert check_fwd_reachability(Cs()).ok
    with pytest.raises(HypothesisUnmet):
        check_fwd_reachability(_without(fixture("fig4_cs"), ((), ("a",))))


def test_preservation_examples():
    rep = check_preservation(fixture("fig4_res"))
    assert rep.ok
    plain = Res({"a", "b"}, powerset({"a", "b"}), [enabling((), (), "a"), enabling({"a"}, (), "b")])
    assert check_preservation(plain).ok
    assert check_preservation(fixture("fig4_cs")).ok
    with pytest.raises(HypothesisUnmet):
        check_preservation(_without(fixture("fig4_cs"), ((), ("a", "b"))))


def test_preservation_counterexample_frozen():
    # a stable, cause-respecting CS whose rebuilt RES is not stable: c is added at
    # ∅, {a} and {b} but {a,b} is not a configuration, so the two rebuilt
    # enablings of c prevent b and a respectively and their meet is missing
    E = {"a", "b", "c"}
    configs = [(), ("a",), ("b",), ("c",), ("a", "c"), ("b", "c")]
    trans = [
        transition((), ("a",)), transition((), ("b",)), transition((), ("c",)),
        transition(("a",), ("c",)), transition(("b",), ("c",)),
        transition(("c",), ("a",)), transition(("c",), ("b",)),
        transition((), ("a", "c")), transition((), ("b", "c")),
    ]
    c = Cs(E, (), configs, trans)
    assert validate_cs(c).ok
    assert is_stable_cs(c).ok and is_cause_respecting_cs(c).ok
    assert not is_stable_res(r_functor(c)).ok
    assert not check_preservation(c).ok


@pytest.mark.parametrize("c", [c for c in CS2 if not scs_hypotheses(c)][::5])
def test_roundtrip_cs_on_two_events(c):
    assert check_roundtrip_cs(c).ok


@pytest.mark.parametrize("c", [c for c in CS2 if fs() in c.configs and is_stable_cs(c).ok and is_cause_respecting_cs(c).ok][::5])
def test_fwd_reachability_on_two_events(c):
    assert check_fwd_reachability(c).ok

"""Reachability, stability and cause-respecting checks, plus the round-trip,
forward-reachability and preservation results as executable checks.

Theorem-shaped checks first verify their hypotheses and raise
:class:`~revent.errors.HypothesisUnmet` naming the ones that fail; the
returned report then says whether the conclusion holds.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from revent.core import (
    Cs,
    Enabling,
    Res,
    Transition,
    ValidationReport,
    _Collector,
    check_bound,
    enabling_closure,
    enabling_key,
    fmt_set,
    fwd,
    is_left_closed,
    rev,
    sorted_sets,
    transition_key,
)
from revent.errors import HypothesisUnmet, NoEmptyConfig
from revent.functors import c_r, r_functor

EMPTY = frozenset()


@dataclass(frozen=True)
class ReachabilitySet:
    start: frozenset
    forward_only: bool
    reached: frozenset


def reachable(c: Cs, forward_only: bool = False) -> ReachabilitySet:
    """Configurations reachable from the empty one (only adding, if ``forward_only``)."""
    if EMPTY not in c.configs:
        raise NoEmptyConfig("the empty set is not a configuration")
    seen = {EMPTY}
    queue = deque([EMPTY])
    while queue:
        X = queue.popleft()
        for t in c.outgoing(X):
            if forward_only and t.undo:
                continue
            Y = t.target
            if Y not in seen:
                seen.add(Y)
                queue.append(Y)
    return ReachabilitySet(EMPTY, forward_only, frozenset(seen))


def _minimal(family) -> frozenset:
    family = set(family)
    return frozenset(X for X in family if not any(Z < X for Z in family))


def m_res(r: Res, e: str) -> frozenset:
    """Minimal enabling sets of ``e`` in the closed relation."""
    return _minimal(t.X for t in enabling_closure(r) if t.target == fwd(e))


def m_cs(c: Cs, e: str) -> frozenset:
    """Minimal configurations with a single-step transition adding ``e``."""
    return _minimal(c.sources(frozenset({e})))


# ---------------------------------------------------------------------------
# stability
# ---------------------------------------------------------------------------


def is_stable_res(r: Res, bound: int | None = None) -> ValidationReport:
    col = _Collector("stable-res")
    closed = enabling_closure(r, bound)
    groups: dict = {}
    for t in closed:
        groups.setdefault(t.target, []).append(t)
    for target in sorted(groups):
        ts = sorted(groups[target], key=enabling_key)
        for i, t in enumerate(ts):
            for u in ts[i + 1:]:
                if t.X | u.X | {target.event} not in r.con:
                    continue
                meet = Enabling(t.X & u.X, t.Y & u.Y, target)
                if meet not in closed:
                    col.add("stable-res.intersection", f"{t} and {u} hold but {meet} does not")
    return col.report()


def _label(add: frozenset, undo: frozenset) -> str:
    return ",".join(sorted(add) + [f"{e}-" for e in sorted(undo)])


def is_stable_cs(c: Cs, bound: int | None = None) -> ValidationReport:
    check_bound("is_stable_cs", len(c.events), bound)
    col = _Collector("stable-cs")
    if not is_left_closed(c.configs):
        for X in sorted_sets(c.configs):
            for e in sorted(X):
                if X - {e} not in c.configs:
                    col.add("stable-cs.downward-closed", f"{fmt_set(X)} is a configuration but {fmt_set(X - {e})} is not")
    for e in sorted(c.reversible):
        if not c.sources(EMPTY, frozenset({e})):
            col.add("stable-cs.reversible-has-reversal", f"{e} is reversible but no transition undoes it alone")

    configs = sorted_sets(c.configs)
    for add, undo in c.labels():
        srcs = sorted_sets(c.sources(add, undo))
        tag = _label(add, undo)
        src_set = set(srcs)
        for X1 in srcs:
            for X3 in srcs:
                if X1 < X3:
                    for X2 in configs:
                        if X1 < X2 < X3 and X2 not in src_set:
                            col.add("stable-cs.convex", f"[{tag}] holds at {fmt_set(X1)} and {fmt_set(X3)} but not at {fmt_set(X2)}")
        for i, X1 in enumerate(srcs):
            for X2 in srcs[i + 1:]:
                if ((X1 | X2) - undo) | add not in c.configs:
                    continue
                for Z, what in ((X1 | X2, "union"), (X1 & X2, "intersection")):
                    if Z not in src_set:
                        col.add(f"stable-cs.{what}", f"[{tag}] holds at {fmt_set(X1)} and {fmt_set(X2)} but not at {fmt_set(Z)}")

    for X0 in configs:
        out = c.outgoing(X0)
        for i, t0 in enumerate(out):
            for t1 in out[i + 1:]:
                X1, X2 = t0.target, t1.target
                if not (c.has(X1, t1.add, t1.undo) and c.has(X2, t0.add, t0.undo)):
                    continue
                X3 = Transition(X1, t1.add, t1.undo).target
                if Transition(X2, t0.add, t0.undo).target != X3:
                    continue
                if not c.has(X0, t0.add | t1.add, t0.undo | t1.undo):
                    col.add("stable-cs.square", f"{t0} and {t1} close a square at {fmt_set(X3)} without the combined step")
    return col.report()


# ---------------------------------------------------------------------------
# cause-respecting
# ---------------------------------------------------------------------------


def is_cause_respecting_res(r: Res, strict_iff: bool = False, bound: int | None = None) -> ValidationReport:
    """Cause-respecting check.

    Default: whenever ``e2`` lies in a minimal enabling set of ``e``, every
    closed reversal enabling ``X' / Y' |- e2-`` has ``e`` in ``Y'`` or keeps
    some minimal enabling set of ``e`` inside ``X' - {e2}``.  With
    ``strict_iff`` the converse is checked as well.
    """
    col = _Collector("cause-respecting-res")
    closed = enabling_closure(r, bound)
    E = sorted(r.events)
    m = {e: m_res(r, e) for e in E}
    reversals = {e: sorted((t for t in closed if t.target == rev(e)), key=enabling_key) for e in E}

    def guarded(e: str, e2: str) -> Enabling | None:
        for t in reversals[e2]:
            if e in t.Y:
                continue
            if not any(X2 <= t.X - {e2} for X2 in m[e]):
                return t
        return None

    for e in E:
        for e2 in E:
            is_cause = any(e2 in X for X in m[e])
            bad = guarded(e, e2)
            if is_cause and bad is not None:
                col.add("cause-respecting-res.forward", f"{e2} causes {e} but {bad} may undo it with no other cause of {e} left")
            if strict_iff and not is_cause and bad is None:
                col.add("cause-respecting-res.converse", f"every reversal of {e2} keeps a cause of {e}, yet {e2} is in no minimal enabling set of {e}")
    return col.report()


def is_cause_respecting_cs(c: Cs) -> ValidationReport:
    col = _Collector("cause-respecting-cs")
    E = sorted(c.events)
    m = {e: m_cs(c, e) for e in E}
    for e in E:
        for e2 in E:
            if not any(e2 in X for X in m[e]):
                continue
            for X1 in sorted_sets(c.sources(EMPTY, frozenset({e2}))):
                if e not in X1:
                    continue
                Y1 = X1 - {e2}
                if not any(X2 <= Y1 for X2 in m[e]):
                    col.add("cause-respecting-cs.reversal", f"{e2} causes {e} but undoing it at {fmt_set(X1)} leaves no minimal cause of {e}")
    return col.report()


# ---------------------------------------------------------------------------
# unnecessary enablings
# ---------------------------------------------------------------------------


def unnecessary_enablings(r: Res) -> list[tuple[Enabling, Enabling]]:
    """Pairs ``(X / Y' |- t, X / Y |- t)`` of closed enablings with ``Y < Y'``."""
    groups: dict = {}
    for t in enabling_closure(r):
        groups.setdefault((t.X, t.target), []).append(t)
    out = []
    for key in sorted(groups, key=lambda k: enabling_key(Enabling(k[0], EMPTY, k[1]))):
        ts = sorted(groups[key], key=enabling_key)
        for big in ts:
            for small in ts:
                if small.Y < big.Y:
                    out.append((big, small))
    return out


def has_unnecessary_enablings(r: Res) -> bool:
    return bool(unnecessary_enablings(r))


# ---------------------------------------------------------------------------
# equality helpers (shared with the testkit)
# ---------------------------------------------------------------------------


def res_difference(a: Res, b: Res, bound: int | None = None) -> list[str]:
    out = []
    if a.events != b.events:
        out.append(f"events differ: {fmt_set(a.events)} vs {fmt_set(b.events)}")
        return out
    for X in sorted_sets(a.con ^ b.con):
        out.append(f"consistent set {fmt_set(X)} only on the {'left' if X in a.con else 'right'}")
    ca, cb = enabling_closure(a, bound), enabling_closure(b, bound)
    for t in sorted(ca ^ cb, key=enabling_key):
        out.append(f"enabling {t} only on the {'left' if t in ca else 'right'}")
    return out


def cs_difference(a: Cs, b: Cs) -> list[str]:
    out = []
    if a.events != b.events:
        out.append(f"events differ: {fmt_set(a.events)} vs {fmt_set(b.events)}")
    if a.reversible != b.reversible:
        out.append(f"reversible events differ: {fmt_set(a.reversible)} vs {fmt_set(b.reversible)}")
    for X in sorted_sets(a.configs ^ b.configs):
        out.append(f"configuration {fmt_set(X)} only on the {'left' if X in a.configs else 'right'}")
    for t in sorted(a.trans ^ b.trans, key=transition_key):
        out.append(f"transition {t} only on the {'left' if t in a.trans else 'right'}")
    return out


# ---------------------------------------------------------------------------
# theorem-shaped checks
# ---------------------------------------------------------------------------


def _report(subject: str, clause: str, lines: list[str]) -> ValidationReport:
    col = _Collector(subject)
    for line in lines:
        col.add(clause, line)
    return col.report()


def scs_hypotheses(c: Cs) -> list[str]:
    failed = []
    if not is_stable_cs(c).ok:
        failed.append("stable")
    if not is_left_closed(c.configs):
        failed.append("downward-closed")
    if EMPTY not in c.configs:
        # an RES always has the empty set consistent, so R cannot give back an empty family
        failed.append("has-empty-configuration")
    if any(not c.sources(EMPTY, frozenset({e})) for e in c.reversible):
        failed.append("reversible-events-reversible")
    return failed


def check_roundtrip_cs(c: Cs) -> ValidationReport:
    """``c_r(r_functor(c)) == c`` for a stable, downward-closed system."""
    failed = scs_hypotheses(c)
    if failed:
        raise HypothesisUnmet(failed)
    return _report("roundtrip-cs", "roundtrip-cs.equal", cs_difference(c_r(r_functor(c)), c))


def check_roundtrip_res(r: Res) -> ValidationReport:
    """``r_functor(c_r(r)) == r`` for a stable RES with no unnecessary enablings."""
    failed = []
    if not is_stable_res(r).ok:
        failed.append("stable")
    if has_unnecessary_enablings(r):
        failed.append("no-unnecessary-enablings")
    if failed:
        raise HypothesisUnmet(failed)
    return _report("roundtrip-res", "roundtrip-res.equal", res_difference(r_functor(c_r(r)), r))


def check_fwd_reachability(c: Cs) -> ValidationReport:
    failed = []
    if not is_stable_cs(c).ok:
        failed.append("stable")
    if not is_cause_respecting_cs(c).ok:
        failed.append("cause-respecting")
    if failed:
        raise HypothesisUnmet(failed)
    if EMPTY not in c.configs:
        # a stable system without the empty configuration has no configurations at all
        return _report("fwd-reachability", "fwd-reachability.included", [])
    both = reachable(c, False).reached
    fwd_only = reachable(c, True).reached
    lines = [f"{fmt_set(X)} is reachable but not forwards reachable" for X in sorted_sets(both - fwd_only)]
    return _report("fwd-reachability", "fwd-reachability.included", lines)


def check_preservation(x) -> ValidationReport:
    """Stability (and cause-respect) carries over through ``c_r`` or ``r_functor``.

    The input must at least be stable; cause-respect is carried over when the
    input has it.
    """
    if isinstance(x, Res):
        stable, respecting = is_stable_res(x).ok, is_cause_respecting_res(x).ok
        if not stable:
            raise HypothesisUnmet(["stable"])
        image = c_r(x)
        checks = [("stable", is_stable_cs(image))]
        if respecting:
            checks.append(("cause-respecting", is_cause_respecting_cs(image)))
    elif isinstance(x, Cs):
        stable, respecting = is_stable_cs(x).ok, is_cause_respecting_cs(x).ok
        if not stable:
            raise HypothesisUnmet(["stable"])
        image = r_functor(x)
        checks = [("stable", is_stable_res(image))]
        if respecting:
            checks.append(("cause-respecting", is_cause_respecting_res(image)))
    else:
        raise TypeError("check_preservation expects an RES or a CS")
    col = _Collector("preservation")
    for name, rep in checks:
        for f in rep.findings:
            col.add(f"preservation.{name}", f"[{f.clause}] {f.message}")
    return col.report()

"""Finite reversible event structures and configuration systems.

Four structure families live here:

* :class:`Rpes` -- reversible prime event structures (causality, conflict,
  reverse causality, prevention),
* :class:`Raes` -- reversible asymmetric event structures (causation and
  precedence over events and reversals),
* :class:`Res` -- reversible general event structures (consistency family
  plus enablings ``X / Y |- e*``),
* :class:`Cs` -- configuration systems (configurations plus mixed
  transitions that add a set ``A`` and undo a set ``B``).

All structures are immutable and hashable.  Events are plain strings;
composite events built by coproducts and products are encoded as strings
such as ``"(0,a)"`` or ``"(a,*)"`` (see :func:`tag` and :func:`pair`).

Validators never raise on malformed input; they return a
:class:`ValidationReport` listing every violated clause in a deterministic
order.
"""

from __future__ import annotations

import functools
import itertools
import os
from dataclasses import dataclass
from graphlib import CycleError, TopologicalSorter
from typing import Iterable, Iterator, NamedTuple

from revent.errors import BoundExceeded

Event = str
EventSet = frozenset  # frozenset[str]
Family = frozenset  # frozenset[frozenset[str]]

STAR = "*"
DEFAULT_MAX_EVENTS = 8
DEFAULT_MAX_PRODUCT_EVENTS = 10
ENV_MAX_EVENTS = "REVENT_MAX_EVENTS"

_max_events_override: int | None = None


# ---------------------------------------------------------------------------
# bounds
# ---------------------------------------------------------------------------


def set_max_events(n: int | None) -> None:
    """Override the materialization bound for this process (``None`` resets it)."""
    global _max_events_override
    _max_events_override = n


def max_events() -> int:
    if _max_events_override is not None:
        return _max_events_override
    env = os.environ.get(ENV_MAX_EVENTS)
    if env:
        return int(env)
    return DEFAULT_MAX_EVENTS


def max_product_events() -> int:
    return max(DEFAULT_MAX_PRODUCT_EVENTS, max_events())


def check_bound(what: str, size: int, bound: int | None = None) -> None:
    limit = max_events() if bound is None else bound
    if size > limit:
        raise BoundExceeded(what, size, limit)


# ---------------------------------------------------------------------------
# labels, sets and families
# ---------------------------------------------------------------------------


def tag(j: int, e: Event) -> Event:
    """Label of event ``e`` from component ``j`` of a coproduct."""
    return f"({j},{e})"


def pair(left: Event | None, right: Event | None) -> Event:
    """Label of a product event; ``None`` stands for the ``*`` placeholder."""
    if left is None and right is None:
        raise ValueError("a product event needs at least one component")
    return f"({STAR if left is None else left},{STAR if right is None else right})"


def fs(*items) -> frozenset:
    return frozenset(items)


def set_key(s: Iterable[Event]) -> tuple:
    """Sort key for event sets: by size, then lexicographically."""
    items = sorted(s)
    return (len(items), tuple(items))


def sorted_sets(family: Iterable[frozenset]) -> list[frozenset]:
    return sorted(family, key=set_key)


def fmt_set(s: Iterable[Event]) -> str:
    return "{" + ",".join(sorted(s)) + "}"


def powerset(s: Iterable[Event]) -> Iterator[frozenset]:
    """All subsets of ``s`` in (size, lexicographic) order."""
    items = sorted(s)
    for k in range(len(items) + 1):
        for combo in itertools.combinations(items, k):
            yield frozenset(combo)


def subsets_between(lower: frozenset, upper: frozenset) -> Iterator[frozenset]:
    """All ``Z`` with ``lower <= Z <= upper`` (``lower`` must be inside ``upper``)."""
    for extra in powerset(upper - lower):
        yield lower | extra


def downward_closure(family: Iterable[frozenset]) -> frozenset:
    out = set()
    for s in family:
        out.update(powerset(s))
    return frozenset(out)


def is_left_closed(family: frozenset) -> bool:
    return all(s - {e} in family for s in family for e in s)


def _as_family(sets) -> frozenset:
    return frozenset(frozenset(s) for s in sets)


def _has_cycle(nodes: Iterable[Event], edges: Iterable[tuple[Event, Event]]) -> bool:
    graph: dict[Event, set[Event]] = {n: set() for n in nodes}
    for x, y in edges:
        if x == y:
            return True
        graph.setdefault(y, set()).add(x)
        graph.setdefault(x, set())
    try:
        tuple(TopologicalSorter(graph).static_order())
    except CycleError:
        return True
    return False


# ---------------------------------------------------------------------------
# polarized items, enablings, transitions
# ---------------------------------------------------------------------------


class Polarized(NamedTuple):
    """An event together with a direction: performing it or undoing it."""

    event: Event
    reverse: bool = False

    def __str__(self) -> str:
        return f"{self.event}-" if self.reverse else self.event


def fwd(e: Event) -> Polarized:
    return Polarized(e, False)


def rev(e: Event) -> Polarized:
    return Polarized(e, True)


class Enabling(NamedTuple):
    """``X / Y |- target``: target may happen when all of X and none of Y are present."""

    X: frozenset
    Y: frozenset
    target: Polarized

    def __str__(self) -> str:
        return f"{fmt_set(self.X)} ⊘ {fmt_set(self.Y)} ⊢ {self.target}"


def enabling(X: Iterable[Event], Y: Iterable[Event], event: Event, reverse: bool = False) -> Enabling:
    return Enabling(frozenset(X), frozenset(Y), Polarized(event, reverse))


def enabling_key(en: Enabling) -> tuple:
    return (en.target.event, en.target.reverse, set_key(en.X), set_key(en.Y))


class Transition(NamedTuple):
    """``source --(add, undo)--> target`` with target = (source - undo) | add."""

    source: frozenset
    add: frozenset
    undo: frozenset

    @property
    def target(self) -> frozenset:
        return (self.source - self.undo) | self.add

    @property
    def label(self) -> tuple[frozenset, frozenset]:
        return (self.add, self.undo)

    def __str__(self) -> str:
        parts = sorted(self.add) + [f"{e}-" for e in sorted(self.undo)]
        return f"{fmt_set(self.source)} --{','.join(parts)}--> {fmt_set(self.target)}"


def transition(source: Iterable[Event], add: Iterable[Event] = (), undo: Iterable[Event] = ()) -> Transition:
    return Transition(frozenset(source), frozenset(add), frozenset(undo))


def transition_key(t: Transition) -> tuple:
    return (set_key(t.source), set_key(t.add), set_key(t.undo))


# ---------------------------------------------------------------------------
# validation reports
# ---------------------------------------------------------------------------


class Finding(NamedTuple):
    clause: str
    message: str

    def to_json(self) -> dict:
        return {"clause": self.clause, "message": self.message}


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of a check: an empty findings list means the check passed."""

    findings: tuple[Finding, ...] = ()
    subject: str = ""

    @property
    def ok(self) -> bool:
        return not self.findings

    def __bool__(self) -> bool:
        return self.ok

    def clauses(self) -> set[str]:
        return {f.clause for f in self.findings}

    def merged(self, other: ValidationReport) -> ValidationReport:
        return ValidationReport(self.findings + other.findings, self.subject or other.subject)

    def to_json(self) -> dict:
        return {
            "subject": self.subject,
            "valid": self.ok,
            "findings": [f.to_json() for f in self.findings],
        }

    def __str__(self) -> str:
        if self.ok:
            return f"{self.subject or 'check'}: ok"
        lines = [f"{self.subject or 'check'}: {len(self.findings)} finding(s)"]
        lines += [f"  [{f.clause}] {f.message}" for f in self.findings]
        return "\n".join(lines)


class _Collector:
    def __init__(self, subject: str):
        self.subject = subject
        self.items: list[Finding] = []

    def add(self, clause: str, message: str) -> None:
        self.items.append(Finding(clause, message))

    def report(self) -> ValidationReport:
        return ValidationReport(tuple(self.items), self.subject)


def _coerce(obj, name: str, value) -> None:
    object.__setattr__(obj, name, value)


# ---------------------------------------------------------------------------
# RPES
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Rpes:
    """Reversible prime event structure.

    ``rcau`` holds pairs ``(e, e2)`` meaning e is a reverse cause of
    undoing e2; ``prev`` holds pairs ``(e, e2)`` meaning e prevents undoing
    e2.  Conflict is stored as given; use :meth:`build` to symmetrize.
    """

    events: frozenset = frozenset()
    reversible: frozenset = frozenset()
    lt: frozenset = frozenset()
    conf: frozenset = frozenset()
    rcau: frozenset = frozenset()
    prev: frozenset = frozenset()

    def __post_init__(self):
        _coerce(self, "events", frozenset(self.events))
        _coerce(self, "reversible", frozenset(self.reversible))
        for name in ("lt", "conf", "rcau", "prev"):
            _coerce(self, name, frozenset(tuple(p) for p in getattr(self, name)))

    @classmethod
    def build(cls, events, reversible=(), lt=(), conf=(), rcau=(), prev=()) -> Rpes:
        """Convenience constructor: symmetrizes conflict and adds ``e`` as reverse cause of itself."""
        conf = {tuple(p) for p in conf}
        conf |= {(y, x) for x, y in conf}
        rcau = {tuple(p) for p in rcau} | {(e, e) for e in reversible}
        return cls(events, reversible, lt, conf, rcau, prev)

    def causes(self, e: Event) -> frozenset:
        return frozenset(x for x, y in self.lt if y == e)

    def reverse_causes(self, e: Event) -> frozenset:
        return frozenset(x for x, y in self.rcau if y == e)

    def conflict_free(self, s: Iterable[Event]) -> bool:
        s = set(s)
        return not any(x in s and y in s for x, y in self.conf)


def sustained_causation(r: Rpes) -> frozenset:
    """Pairs ``(e, e2)`` with ``e < e2`` where, if e is reversible, e2 prevents undoing e."""
    return frozenset(
        (x, y) for x, y in r.lt if x not in r.reversible or (y, x) in r.prev
    )


def validate_rpes(r: Rpes) -> ValidationReport:
    c = _Collector("rpes")
    E, F = r.events, r.reversible
    if not F <= E:
        c.add("rpes.reversible-subset", f"reversible events {fmt_set(F - E)} are not events")
    for name, rel, cod in (("lt", r.lt, E), ("conf", r.conf, E), ("rcau", r.rcau, F), ("prev", r.prev, F)):
        for x, y in sorted(rel):
            if x not in E or y not in cod:
                c.add(f"rpes.{name}.domain", f"pair ({x},{y}) lies outside its domain")

    for x, y in sorted(r.lt):
        if x == y:
            c.add("rpes.causality.irreflexive", f"{x} < {x}")
    for x, y in sorted(r.lt):
        for y2, z in sorted(r.lt):
            if y == y2 and (x, z) not in r.lt:
                c.add("rpes.causality.transitive", f"{x} < {y} < {z} but not {x} < {z}")
    for e in sorted(E):
        if not r.conflict_free(r.causes(e)):
            c.add("rpes.causality.conflict-free-causes", f"causes of {e} contain a conflict")

    for x, y in sorted(r.conf):
        if x == y:
            c.add("rpes.conflict.irreflexive", f"{x} # {x}")
        if (y, x) not in r.conf:
            c.add("rpes.conflict.symmetric", f"{x} # {y} but not {y} # {x}")
        if (x, y) in r.lt:
            c.add("rpes.conflict.disjoint-from-causality", f"{x} < {y} and {x} # {y}")

    for e in sorted(F & E):
        if (e, e) not in r.rcau:
            c.add("rpes.reverse-causality.self", f"{e} is reversible but not a reverse cause of itself")
        if not r.conflict_free(r.reverse_causes(e)):
            c.add("rpes.reverse-causality.conflict-free", f"reverse causes of {e} contain a conflict")
    for x, y in sorted(r.rcau & r.prev):
        c.add("rpes.reverse-causality.not-prevention", f"{x} both reverse-causes and prevents undoing {y}")

    ll = sustained_causation(r)
    for x, y in sorted(ll):
        for y2, z in sorted(ll):
            if y == y2 and (x, z) not in ll:
                c.add("rpes.sustained.transitive", f"{x} << {y} << {z} but not {x} << {z}")
    for x, y in sorted(r.conf):
        for x2, z in sorted(ll):
            if x == x2 and (z, y) not in r.conf:
                c.add("rpes.conflict.hereditary", f"{x} # {y} and {x} << {z} but not {z} # {y}")
    return c.report()


# ---------------------------------------------------------------------------
# RAES
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Raes:
    """Reversible asymmetric event structure.

    ``cau`` holds pairs ``(e, alpha)`` with alpha a :class:`Polarized` item:
    e causes alpha.  ``prec`` holds pairs ``(alpha, e)``: alpha precedes e,
    equivalently e prevents alpha.
    """

    events: frozenset = frozenset()
    reversible: frozenset = frozenset()
    cau: frozenset = frozenset()
    prec: frozenset = frozenset()

    def __post_init__(self):
        _coerce(self, "events", frozenset(self.events))
        _coerce(self, "reversible", frozenset(self.reversible))
        _coerce(self, "cau", frozenset((e, Polarized(*a)) for e, a in self.cau))
        _coerce(self, "prec", frozenset((Polarized(*a), e) for a, e in self.prec))

    def items(self) -> list[Polarized]:
        """The causation targets ``E`` plus the reversals of ``F``."""
        out = [fwd(e) for e in sorted(self.events)]
        out += [rev(e) for e in sorted(self.reversible)]
        return out

    def causes(self, alpha: Polarized) -> frozenset:
        return frozenset(e for e, a in self.cau if a == alpha)

    def preventers(self, alpha: Polarized) -> frozenset:
        """Events e with e ⊳ alpha (equivalently alpha ⊲ e)."""
        return frozenset(e for a, e in self.prec if a == alpha)

    def forward_prec(self) -> frozenset:
        return frozenset((a.event, e) for a, e in self.prec if not a.reverse)

    def conflict(self) -> frozenset:
        """Derived symmetric conflict: mutual precedence between two events."""
        p = self.forward_prec()
        return frozenset((x, y) for x, y in p if (y, x) in p)

    def sustained(self) -> frozenset:
        """Pairs (e, e2): e causes e2 and, if e is reversible, e2 prevents undoing e."""
        return frozenset(
            (e, a.event)
            for e, a in self.cau
            if not a.reverse and (e not in self.reversible or (rev(e), a.event) in self.prec)
        )

    def precedence_acyclic_on(self, s: Iterable[Event]) -> bool:
        s = set(s)
        return not _has_cycle(s, [(x, y) for x, y in self.forward_prec() if x in s and y in s])


def validate_raes(r: Raes) -> ValidationReport:
    c = _Collector("raes")
    E, F = r.events, r.reversible
    if not F <= E:
        c.add("raes.reversible-subset", f"reversible events {fmt_set(F - E)} are not events")

    def item_ok(a: Polarized) -> bool:
        return a.event in (F if a.reverse else E)

    for e, a in sorted(r.cau):
        if e not in E or not item_ok(a):
            c.add("raes.causation.domain", f"pair ({e},{a}) lies outside E x (E + reversals of F)")
    for a, e in sorted(r.prec):
        if e not in E or not item_ok(a):
            c.add("raes.precedence.domain", f"pair ({a},{e}) lies outside (E + reversals of F) x E")

    for a, e in sorted(r.prec):
        if a == fwd(e):
            c.add("raes.precedence.irreflexive", f"{e} ⊲ {e}")
    for e, a in sorted(r.cau):
        if a == fwd(e):
            c.add("raes.causation.irreflexive", f"{e} ≺ {e}")
    if _has_cycle(E, [(e, a.event) for e, a in r.cau if not a.reverse and e != a.event]):
        c.add("raes.causation.well-founded", "forward causation has a cycle")
    for a in r.items():
        cs = r.causes(a)
        if not r.precedence_acyclic_on(cs):
            c.add("raes.causation.no-precedence-cycles", f"causes of {a} contain a ⊲-cycle")
    for e in sorted(F & E):
        if (e, rev(e)) not in r.cau:
            c.add("raes.causation.self-reversal", f"{e} is reversible but does not cause its own reversal")
    for e, a in sorted(r.cau):
        if (a, e) in r.prec:
            c.add("raes.causation.not-prevention", f"{e} ≺ {a} and {e} ⊳ {a}")

    ss = r.sustained()
    for x, y in sorted(ss):
        if (fwd(x), y) not in r.prec:
            c.add("raes.sustained.implies-precedence", f"{x} ≺≺ {y} but not {x} ⊲ {y}")
    for x, y in sorted(ss):
        for y2, z in sorted(ss):
            if y == y2 and (x, z) not in ss:
                c.add("raes.sustained.transitive", f"{x} ≺≺ {y} ≺≺ {z} but not {x} ≺≺ {z}")
    conf = r.conflict()
    for x, y in sorted(conf):
        for x2, z in sorted(ss):
            if x == x2 and (z, y) not in conf:
                c.add("raes.conflict.hereditary", f"{x} # {y} and {x} ≺≺ {z} but not {z} # {y}")
    return c.report()


# ---------------------------------------------------------------------------
# RES
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Res:
    """Reversible event structure given by a consistency family and generator enablings.

    Each generator ``X / Y |- e*`` stands for every ``X' / Y |- e*`` with
    ``X <= X'`` in ``con`` and ``X'`` disjoint from ``Y``; see
    :func:`enabling_closure`.
    """

    events: frozenset = frozenset()
    con: frozenset = frozenset({frozenset()})
    gens: frozenset = frozenset()

    def __post_init__(self):
        _coerce(self, "events", frozenset(self.events))
        _coerce(self, "con", _as_family(self.con))
        _coerce(self, "gens", frozenset(Enabling(frozenset(g[0]), frozenset(g[1]), Polarized(*g[2])) for g in self.gens))

    @classmethod
    def full(cls, events, gens=()) -> Res:
        """RES whose consistency family is the whole powerset of ``events``."""
        return cls(events, frozenset(powerset(events)), gens)


def validate_res(r: Res, bound: int | None = None) -> ValidationReport:
    c = _Collector("res")
    E = r.events
    if frozenset() not in r.con:
        c.add("res.con.nonempty", "the consistency family must contain the empty set")
    for X in sorted_sets(r.con):
        if not X <= E:
            c.add("res.con.domain", f"{fmt_set(X)} contains non-events")
    if not is_left_closed(r.con):
        for X in sorted_sets(r.con):
            for e in sorted(X):
                if X - {e} not in r.con:
                    c.add("res.con.left-closed", f"{fmt_set(X)} is consistent but {fmt_set(X - {e})} is not")
    for g in sorted(r.gens, key=enabling_key):
        if not (g.X <= E and g.Y <= E and g.target.event in E):
            c.add("res.enabling.domain", f"{g} mentions non-events")
        if g.X not in r.con:
            c.add("res.enabling.consistent", f"{g}: enabling set is not consistent")
        if (g.X | {g.target.event}) & g.Y:
            c.add("res.enabling.disjoint", f"{g}: enabling set or event meets the preventing set")
        if g.target.reverse and g.target.event not in g.X:
            c.add("res.enabling.reverse-present", f"{g}: an undone event must be in its enabling set")
    limit = max_events() if bound is None else bound
    if c.items or len(E) > limit:
        return c.report()
    closed = enabling_closure(r, bound)
    for t in sorted(closed, key=enabling_key):
        if (t.X | {t.target.event}) & t.Y:
            c.add("res.closure.disjoint", f"closed enabling {t} meets its preventing set")
        if t.target.reverse and t.target.event not in t.X:
            c.add("res.closure.reverse-present", f"closed enabling {t} lacks its event")
    for t in sorted(closed, key=enabling_key):
        for X2 in r.con:
            if t.X <= X2 and not (X2 & t.Y) and Enabling(X2, t.Y, t.target) not in closed:
                c.add("res.closure.upward", f"{t} holds but not at {fmt_set(X2)}")
    return c.report()


@functools.lru_cache(maxsize=4096)
def _closure(r: Res) -> frozenset:
    out = set(r.gens)
    for g in r.gens:
        for X in r.con:
            if g.X <= X and not (X & g.Y):
                out.add(Enabling(X, g.Y, g.target))
    return frozenset(out)


def enabling_closure(r: Res, bound: int | None = None) -> frozenset:
    """Least relation containing the generators and closed under consistent supersets.

    A generator ``X / Y |- e*`` contributes ``X' / Y |- e*`` for every
    consistent ``X' >= X`` that avoids ``Y``.
    """
    check_bound("enabling closure", len(r.events), bound)
    return _closure(r)


def minimal_generators(closed: Iterable[Enabling]) -> frozenset:
    """Smallest generator set with the same closure as an upward-closed relation.

    Keeps, for each preventing set and target, the minimal enabling sets.
    """
    groups: dict[tuple, list[frozenset]] = {}
    for t in closed:
        groups.setdefault((t.Y, t.target), []).append(t.X)
    out = set()
    for (Y, target), xs in groups.items():
        for X in xs:
            if not any(X2 < X for X2 in xs):
                out.add(Enabling(X, Y, target))
    return frozenset(out)


def normalized(r: Res) -> Res:
    """Same RES with its generators replaced by the minimal generators of the closure."""
    return Res(r.events, r.con, minimal_generators(enabling_closure(r)))


# ---------------------------------------------------------------------------
# CS
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Cs:
    """Configuration system.

    Transitions with an empty label are implicit at every configuration and
    are never stored; the constructor drops them.
    """

    events: frozenset = frozenset()
    reversible: frozenset = frozenset()
    configs: frozenset = frozenset({frozenset()})
    trans: frozenset = frozenset()

    def __post_init__(self):
        _coerce(self, "events", frozenset(self.events))
        _coerce(self, "reversible", frozenset(self.reversible))
        _coerce(self, "configs", _as_family(self.configs))
        ts = (Transition(frozenset(t[0]), frozenset(t[1]), frozenset(t[2])) for t in self.trans)
        _coerce(self, "trans", frozenset(t for t in ts if t.add or t.undo))

    def has(self, source: frozenset, add: frozenset = frozenset(), undo: frozenset = frozenset()) -> bool:
        """Whether the transition exists; empty labels hold at every configuration."""
        if not add and not undo:
            return frozenset(source) in self.configs
        return Transition(frozenset(source), frozenset(add), frozenset(undo)) in self.trans

    def sources(self, add: frozenset = frozenset(), undo: frozenset = frozenset()) -> frozenset:
        """Configurations from which the transition with this label exists."""
        return _label_index(self).get((frozenset(add), frozenset(undo)), frozenset())

    def labels(self) -> list[tuple[frozenset, frozenset]]:
        return sorted(_label_index(self), key=lambda l: (set_key(l[0]), set_key(l[1])))

    def outgoing(self, source: frozenset) -> list[Transition]:
        return sorted((t for t in self.trans if t.source == source), key=transition_key)


@functools.lru_cache(maxsize=4096)
def _label_index(c: Cs) -> dict:
    idx: dict[tuple, set] = {}
    for t in c.trans:
        idx.setdefault((t.add, t.undo), set()).add(t.source)
    return {k: frozenset(v) for k, v in idx.items()}


def validate_cs(c: Cs) -> ValidationReport:
    col = _Collector("cs")
    E, F = c.events, c.reversible
    if not F <= E:
        col.add("cs.reversible-subset", f"reversible events {fmt_set(F - E)} are not events")
    for X in sorted_sets(c.configs):
        if not X <= E:
            col.add("cs.configs.domain", f"{fmt_set(X)} contains non-events")
    for t in sorted(c.trans, key=transition_key):
        X, A, B = t
        if X not in c.configs:
            col.add("cs.transition.source", f"{t}: source is not a configuration")
        if A & X:
            col.add("cs.transition.add-disjoint", f"{t}: added events already present")
        if not B <= X & F:
            col.add("cs.transition.undo-subset", f"{t}: undone events must be present and reversible")
        if t.target not in c.configs:
            col.add("cs.transition.target", f"{t}: target is not a configuration")
    for t in sorted(c.trans, key=transition_key):
        X, A, B = t
        if A & X or not B <= X:
            continue
        for A1 in powerset(A):
            for B1 in powerset(B):
                if (A1, B1) in ((frozenset(), frozenset()), (A, B)):
                    continue
                Z = (X - B1) | A1
                if Z not in c.configs:
                    col.add("cs.decomposition.intermediate", f"{t}: intermediate {fmt_set(Z)} is not a configuration")
                    continue
                if not c.has(X, A1, B1):
                    col.add("cs.decomposition.first-step", f"{t}: missing {Transition(X, A1, B1)}")
                if not c.has(Z, A - A1, B - B1):
                    col.add("cs.decomposition.second-step", f"{t}: missing {Transition(Z, A - A1, B - B1)}")
    return col.report()


Structure = Rpes | Raes | Res | Cs


def kind_of(s) -> str:
    for cls, name in ((Rpes, "rpes"), (Raes, "raes"), (Res, "res"), (Cs, "cs")):
        if isinstance(s, cls):
            return name
    raise TypeError(f"not a structure: {type(s).__name__}")


def validate(s) -> ValidationReport:
    """Dispatch to the validator for the structure's family."""
    return {"rpes": validate_rpes, "raes": validate_raes, "res": validate_res, "cs": validate_cs}[kind_of(s)](s)

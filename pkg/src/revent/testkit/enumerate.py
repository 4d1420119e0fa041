"""Small-structure generators used as oracles for universally quantified claims.

Up to two events the generators are exhaustive; for three or four events
they sample with a seeded :class:`random.Random` and reject anything that
fails its validator.
"""

from __future__ import annotations

import itertools
import random
from typing import Iterator

from revent.core import (
    Cs,
    Enabling,
    Polarized,
    Raes,
    Res,
    Rpes,
    Transition,
    check_bound,
    downward_closure,
    enabling_closure,
    fwd,
    minimal_generators,
    powerset,
    rev,
    sorted_sets,
    validate_cs,
    validate_raes,
    validate_res,
    validate_rpes,
)
from revent.errors import BoundExceeded
from revent.functors import c_r

LABELS = "abcd"
MAX_ENUM_EVENTS = 4
EXHAUSTIVE_EVENTS = 2


def _subsets(items) -> Iterator[tuple]:
    items = list(items)
    for k in range(len(items) + 1):
        yield from itertools.combinations(items, k)


def left_closed_families(events) -> Iterator[frozenset]:
    """Every subset-closed family over ``events`` that contains the empty set."""
    sets = sorted_sets(powerset(events))[1:]
    for chosen in _subsets(sets):
        fam = frozenset(chosen) | {frozenset()}
        if all(X - {e} in fam for X in fam for e in X):
            yield fam


# ---------------------------------------------------------------------------
# exhaustive enumeration
# ---------------------------------------------------------------------------


def _exhaustive_rpes(E: list[str]) -> Iterator[Rpes]:
    ordered = [(x, y) for x in E for y in E if x != y]
    unordered = [(x, y) for x, y in ordered if x < y]
    for F in _subsets(E):
        rpairs = [(x, y) for x in E for y in F if x != y]
        ppairs = [(x, y) for x in E for y in F]
        for lt in _subsets(ordered):
            for conf in _subsets(unordered):
                for rc in _subsets(rpairs):
                    for pv in _subsets(ppairs):
                        r = Rpes.build(E, F, lt, conf, rc, pv)
                        if validate_rpes(r).ok:
                            yield r


def _exhaustive_raes(E: list[str]) -> Iterator[Raes]:
    for F in _subsets(E):
        items = [fwd(e) for e in E] + [rev(e) for e in F]
        cpairs = [(e, a) for e in E for a in items if a != fwd(e) and a != rev(e)]
        ppairs = [(a, e) for a in items for e in E if a != fwd(e)]
        forced = {(e, rev(e)) for e in F}
        for cau in _subsets(cpairs):
            cau = set(cau) | forced
            free = [p for p in ppairs if (p[1], p[0]) not in cau]
            for prec in _subsets(free):
                r = Raes(E, F, cau, prec)
                if validate_raes(r).ok:
                    yield r


def _closed_options(E: list[str], con: frozenset, target: Polarized) -> list[frozenset]:
    """Every upward-closed set of triples for one target, as a frozenset of Enablings."""
    e = target.event
    per_y = []
    for Y in powerset(set(E) - {e}):
        xs = [X for X in sorted_sets(con) if not X & Y and (not target.reverse or e in X)]
        ups = []
        for chosen in _subsets(xs):
            chosen = set(chosen)
            if all(X2 in chosen for X in chosen for X2 in xs if X <= X2):
                ups.append(frozenset(Enabling(X, Y, target) for X in chosen))
        per_y.append(ups)
    return [frozenset().union(*combo) for combo in itertools.product(*per_y)]


def _exhaustive_res(E: list[str]) -> Iterator[Res]:
    targets = [fwd(e) for e in E] + [rev(e) for e in E]
    for con in left_closed_families(E):
        options = [sorted(set(_closed_options(E, con, t)), key=lambda s: sorted(map(str, s))) for t in targets]
        for combo in itertools.product(*options):
            closed = frozenset().union(*combo)
            yield Res(E, con, minimal_generators(closed))


def _cs_candidates(E: list[str], F, configs: frozenset) -> list[Transition]:
    out = []
    for X in sorted_sets(configs):
        for A in powerset(set(E) - X):
            for B in powerset(X & set(F)):
                if (A or B) and (X - B) | A in configs and X | A in configs:
                    out.append(Transition(X, A, B))
    out.sort(key=lambda t: len(t.add) + len(t.undo))
    return out


def _decomposes(t: Transition, chosen: set, configs: frozenset) -> bool:
    X, A, B = t
    for A1 in powerset(A):
        for B1 in powerset(B):
            if (A1, B1) in ((frozenset(), frozenset()), (A, B)):
                continue
            Z = (X - B1) | A1
            if Z not in configs:
                return False
            if Transition(X, A1, B1) not in chosen or Transition(Z, A - A1, B - B1) not in chosen:
                return False
    return True


def _transition_sets(cands: list[Transition], configs: frozenset) -> Iterator[frozenset]:
    def rec(i: int, chosen: set):
        if i == len(cands):
            yield frozenset(chosen)
            return
        yield from rec(i + 1, chosen)
        t = cands[i]
        if _decomposes(t, chosen, configs):
            chosen.add(t)
            yield from rec(i + 1, chosen)
            chosen.discard(t)

    yield from rec(0, set())


def _exhaustive_cs(E: list[str]) -> Iterator[Cs]:
    all_sets = sorted_sets(powerset(E))
    for F in _subsets(E):
        for fam in _subsets(all_sets):
            configs = frozenset(fam)
            for trans in _transition_sets(_cs_candidates(E, F, configs), configs):
                c = Cs(E, F, configs, trans)
                if validate_cs(c).ok:
                    yield c


# ---------------------------------------------------------------------------
# sampling
# ---------------------------------------------------------------------------


def _random_subset(rng: random.Random, items, p: float) -> list:
    return [x for x in items if rng.random() < p]


def _random_family(rng: random.Random, E: list[str]) -> frozenset:
    k = rng.randint(1, 3)
    tops = [frozenset(_random_subset(rng, E, rng.uniform(0.3, 1.0))) for _ in range(k)]
    return downward_closure(tops + [frozenset()])


def _sample_rpes(rng: random.Random, E: list[str], budget: int) -> Rpes:
    F = _random_subset(rng, E, 0.5)
    order = E[:]
    rng.shuffle(order)
    lt = {(order[i], order[j]) for i in range(len(order)) for j in range(i + 1, len(order)) if rng.random() < 0.35}
    lt |= {(x, z) for x, y in lt for y2, z in lt if y == y2}
    conf = {(x, y) for x in E for y in E if x < y and rng.random() < 0.25}
    rc = {(x, y) for x in E for y in F if x != y and rng.random() < 0.2}
    pv = {(x, y) for x in E for y in F if rng.random() < 0.3}
    return Rpes.build(E, F, lt, conf, rc, pv)


def _sample_raes(rng: random.Random, E: list[str], budget: int) -> Raes:
    F = _random_subset(rng, E, 0.5)
    items = [fwd(e) for e in E] + [rev(e) for e in F]
    cau = {(e, a) for e in E for a in items if a != fwd(e) and rng.random() < 0.2}
    cau |= {(e, rev(e)) for e in F}
    prec = {(a, e) for a in items for e in E if a != fwd(e) and (e, a) not in cau and rng.random() < 0.2}
    ss = Raes(E, F, cau, prec).sustained()
    prec |= {(fwd(x), y) for x, y in ss}
    return Raes(E, F, cau, prec)


def _sample_res(rng: random.Random, E: list[str], budget: int) -> Res:
    con = _random_family(rng, E)
    cons = sorted_sets(con)
    gens = set()
    for _ in range(rng.randint(0, budget)):
        e = rng.choice(E)
        reverse = rng.random() < 0.4
        X = rng.choice(cons)
        if reverse:
            X = X | {e}
            if X not in con:
                continue
        Y = frozenset(_random_subset(rng, [x for x in E if x != e and x not in X], 0.25))
        gens.add(Enabling(X, Y, Polarized(e, reverse)))
    return Res(E, con, gens)


def _sample_stable_res(rng: random.Random, E: list[str], budget: int) -> Res:
    """Random RES whose closed relation is made stable by adding intersections."""
    r = _sample_res(rng, E, budget)
    closed = set(enabling_closure(r))
    changed = True
    while changed:
        changed = False
        for t in list(closed):
            for u in list(closed):
                if t.target == u.target and t.X | u.X | {t.target.event} in r.con:
                    meet = Enabling(t.X & u.X, t.Y & u.Y, t.target)
                    if meet not in closed:
                        closed.add(meet)
                        changed = True
        closed = set(enabling_closure(Res(r.events, r.con, closed)))
    return Res(r.events, r.con, minimal_generators(closed))


def _sample_cs(rng: random.Random, E: list[str], budget: int) -> Cs:
    if rng.random() < 0.5:
        return c_r(_sample_stable_res(rng, E, budget))
    F = _random_subset(rng, E, 0.5)
    configs = _random_family(rng, E)
    cands = _cs_candidates(E, F, configs)
    chosen: set = set()
    p = rng.uniform(0.3, 0.9)
    for t in cands:
        if rng.random() < p and _decomposes(t, chosen, configs):
            chosen.add(t)
        if len(chosen) >= budget:
            break
    return Cs(E, F, configs, chosen)


_EXHAUSTIVE = {"rpes": _exhaustive_rpes, "raes": _exhaustive_raes, "res": _exhaustive_res, "cs": _exhaustive_cs}
_SAMPLERS = {"rpes": _sample_rpes, "raes": _sample_raes, "res": _sample_res, "cs": _sample_cs, "sres": _sample_stable_res}
_VALIDATORS = {"rpes": validate_rpes, "raes": validate_raes, "res": validate_res, "cs": validate_cs, "sres": validate_res}


def enumerate_structures(kind: str, n: int, budget: int = 8, seed: int = 0, samples: int = 100, exhaustive: bool | None = None) -> Iterator:
    """Valid structures of ``kind`` over the first ``n`` labels of ``abcd``.

    Exhaustive for ``n <= 2`` (``budget`` and ``samples`` are ignored);
    otherwise ``samples`` seeded random draws, each with at most ``budget``
    generators or transitions.  ``kind="sres"`` samples RESs pushed towards
    stability.
    """
    if n > MAX_ENUM_EVENTS:
        raise BoundExceeded("enumerate_structures", n, MAX_ENUM_EVENTS)
    check_bound("enumerate_structures", n)
    E = list(LABELS[:n])
    if exhaustive is None:
        exhaustive = n <= EXHAUSTIVE_EVENTS
    if exhaustive:
        if kind == "sres":
            kind = "res"
        yield from _EXHAUSTIVE[kind](E)
        return
    rng = random.Random(f"{kind}:{n}:{seed}")
    sampler, validator = _SAMPLERS[kind], _VALIDATORS[kind]
    made = 0
    attempts = 0
    while made < samples and attempts < samples * 200:
        attempts += 1
        s = sampler(rng, E, budget)
        if validator(s).ok:
            made += 1
            yield s

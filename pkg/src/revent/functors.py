"""Translations between the structure families.

``a_r``: RPES to RAES, ``p_ar``: RAES to RES, ``c_r``: RES to CS and
``r_functor``: CS to RES.  All four act as the identity on event maps;
:func:`map_morphism` retargets a map and checks that it stays a morphism.
"""

from __future__ import annotations

from revent.core import (
    Cs,
    Enabling,
    Raes,
    Res,
    Rpes,
    Transition,
    check_bound,
    downward_closure,
    fwd,
    kind_of,
    powerset,
    rev,
    sustained_causation,
    validate_raes,
)
from revent.errors import FunctorialityViolation, ReconstructionViolation, StructureMismatch
from revent.morphisms import PartialMap, check_morphism


def a_r(r: Rpes, sustained_only: bool = True) -> Raes:
    """Reconstructed translation of an RPES into an RAES.

    Causation collects ``<`` and reverse causality.  Precedence collects the
    symmetric conflict in both directions, ``e ⊲ e2`` for sustained causation
    ``e << e2`` (all of ``<`` when ``sustained_only`` is false), and each
    prevention pair ``e ⊳ e2-`` as ``e2- ⊲ e``.
    """
    cau = {(x, fwd(y)) for x, y in r.lt} | {(x, rev(y)) for x, y in r.rcau}
    order = sustained_causation(r) if sustained_only else r.lt
    prec = {(fwd(x), y) for x, y in r.conf} | {(fwd(y), x) for x, y in r.conf}
    prec |= {(fwd(x), y) for x, y in order}
    prec |= {(rev(y), x) for x, y in r.prev}
    out = Raes(r.events, r.reversible, cau, prec)
    rep = validate_raes(out)
    if not rep.ok:
        raise ReconstructionViolation("translated structure is not an RAES", rep)
    return out


def p_ar(r: Raes) -> Res:
    events = r.events
    con = frozenset(X for X in powerset(events) if r.precedence_acyclic_on(X))
    gens = set()
    for alpha in r.items():
        X, Y = r.causes(alpha), r.preventers(alpha)
        if X in con and not X & Y:
            gens.add(Enabling(X, Y, alpha))
    return Res(events, con, gens)


def _generators_by_target(r: Res) -> tuple[dict, dict]:
    fw: dict[str, list] = {}
    rv: dict[str, list] = {}
    for g in r.gens:
        (rv if g.target.reverse else fw).setdefault(g.target.event, []).append((g.X, g.Y))
    return fw, rv


def c_r(r: Res, bound: int | None = None) -> Cs:
    """Configuration system of an RES.

    Checking the per-event witness clauses against generators is equivalent
    to checking them against the closed relation: a closed entry below
    ``X - B`` has a generator below it with the same preventing set.
    """
    E = r.events
    check_bound("c_r", len(E), bound)
    fw, rv = _generators_by_target(r)
    F = frozenset(rv)
    con = r.con
    trans = set()
    for X in con:
        for A in powerset(E - X):
            XA = X | A
            if XA not in con:
                continue
            if not all(any(not Z & XA and Xg <= X for Xg, Z in fw.get(a, ())) for a in A):
                continue
            for B in powerset(X & F):
                if not A and not B:
                    continue
                if (X - B) | A not in con:
                    continue
                rest = X - B
                if not all(any(Xg <= rest for Xg, Z in fw[a] if not Z & XA) for a in A):
                    continue
                if not all(any(Xg <= rest | {b} for Xg, Z in rv[b] if not Z & XA) for b in B):
                    continue
                trans.add(Transition(X, A, B))
    return Cs(E, F, con, trans)


def is_finitely_enabled(c: Cs) -> bool:
    """Always true: every configuration of a finite system is finite."""
    return True


def _intervals(sources: frozenset, events: frozenset) -> list[tuple[frozenset, frozenset]]:
    """Pairs ``(low, high)`` such that every set between them is a source,
    with ``low`` minimal for ``high`` and ``high`` maximal for ``low``."""
    reach: dict[frozenset, frozenset] = {}
    for low in sources:
        valid = {low}
        frontier = [low]
        while frontier:
            nxt = []
            for X in frontier:
                for S in sources:
                    if len(S) == len(X) + 1 and X < S and S not in valid:
                        if all(S - {y} in valid for y in S - low):
                            valid.add(S)
                            nxt.append(S)
            frontier = nxt
        reach[low] = frozenset(valid)
    out = []
    for low, highs in reach.items():
        for high in highs:
            if any(high | {y} in highs for y in events - high):
                continue
            if any(high in reach.get(low - {y}, ()) for y in low):
                continue
            out.append((low, high))
    return out


def r_functor(c: Cs, bound: int | None = None) -> Res:
    E = c.events
    check_bound("r_functor", len(E), bound)
    # the empty set is always consistent, even for a system with no configurations
    con = downward_closure(c.configs) | {frozenset()}
    gens = set()
    for e in sorted(E):
        for reverse in (False, True):
            label = (frozenset(), frozenset({e})) if reverse else (frozenset({e}), frozenset())
            for low, high in _intervals(c.sources(*label), E):
                if reverse:
                    gens.add(Enabling(low, E - high, rev(e)))
                else:
                    gens.add(Enabling(low, E - (high | {e}), fwd(e)))
    return Res(E, con, gens)


def to_cs(s, bound: int | None = None) -> Cs:
    """Configuration system of any structure via the functor pipeline."""
    kind = kind_of(s)
    if kind == "rpes":
        s = a_r(s)
        kind = "raes"
    if kind == "raes":
        s = p_ar(s)
        kind = "res"
    if kind == "res":
        return c_r(s, bound)
    return s


FUNCTORS = {
    "ar": ("rpes", "raes", a_r),
    "par": ("raes", "res", p_ar),
    "cr": ("res", "cs", c_r),
    "r": ("cs", "res", r_functor),
}


def apply_functor(functor_id: str, s):
    src_kind, _, fn = FUNCTORS[functor_id]
    if kind_of(s) != src_kind:
        raise StructureMismatch(f"functor {functor_id} expects a {src_kind} structure, got {kind_of(s)}")
    return fn(s)


def map_morphism(functor_id: str, f: PartialMap) -> PartialMap:
    """Image of a morphism: the same event map between the translated structures."""
    g = PartialMap(apply_functor(functor_id, f.source), apply_functor(functor_id, f.target), f.pairs)
    rep = check_morphism(g)
    if not rep.ok:
        raise FunctorialityViolation(f"image under {functor_id} is not a morphism: {rep.findings[0].clause}", rep)
    return g

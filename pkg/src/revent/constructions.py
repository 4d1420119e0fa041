"""Coproducts and products with their injections and projections.

Coproduct events are tagged ``(j,e)``; product events are pairs ``(e0,e1)``
where either side may be ``*``.  Every construction returns a
:class:`Construction` holding the structure and the two canonical maps.

:func:`coproduct_mediator` and :func:`product_mediator` build the map given
by the universal property and report whether it is a valid morphism, whether
it commutes, and whether it is the only such map.
"""

from __future__ import annotations

import itertools
from typing import NamedTuple

from revent.core import (
    Cs,
    Enabling,
    Polarized,
    Raes,
    Res,
    Rpes,
    Transition,
    ValidationReport,
    _Collector,
    check_bound,
    enabling_closure,
    kind_of,
    max_product_events,
    minimal_generators,
    pair,
    powerset,
    tag,
    validate_cs,
)
from revent.errors import NotCommuting, ReconstructionViolation, StructureMismatch
from revent.morphisms import PartialMap, check_morphism, compose

UNIQUENESS_BRUTE_FORCE_EVENTS = 4


class Construction(NamedTuple):
    structure: object
    left: PartialMap
    right: PartialMap


def _tag_set(j: int, s) -> frozenset:
    return frozenset(tag(j, e) for e in s)


def _injections(a, b, result) -> Construction:
    i0 = PartialMap.of(a, result, {e: tag(0, e) for e in a.events})
    i1 = PartialMap.of(b, result, {e: tag(1, e) for e in b.events})
    return Construction(result, i0, i1)


# ---------------------------------------------------------------------------
# coproducts
# ---------------------------------------------------------------------------


def rpes_coproduct(a: Rpes, b: Rpes) -> Construction:
    E = _tag_set(0, a.events) | _tag_set(1, b.events)
    F = _tag_set(0, a.reversible) | _tag_set(1, b.reversible)
    lt, conf, rcau, prev = set(), set(), set(), set()
    for j, s in enumerate((a, b)):
        lt |= {(tag(j, x), tag(j, y)) for x, y in s.lt}
        conf |= {(tag(j, x), tag(j, y)) for x, y in s.conf}
        rcau |= {(tag(j, x), tag(j, y)) for x, y in s.rcau}
        prev |= {(tag(j, x), tag(j, y)) for x, y in s.prev}
    for j, s, o in ((0, a, b), (1, b, a)):
        for x in s.events:
            conf |= {(tag(j, x), tag(1 - j, y)) for y in o.events}
            prev |= {(tag(j, x), tag(1 - j, y)) for y in o.reversible}
    return _injections(a, b, Rpes(E, F, lt, conf, rcau, prev))


def raes_coproduct(a: Raes, b: Raes) -> Construction:
    E = _tag_set(0, a.events) | _tag_set(1, b.events)
    F = _tag_set(0, a.reversible) | _tag_set(1, b.reversible)
    cau, prec = set(), set()
    for j, s in enumerate((a, b)):
        cau |= {(tag(j, e), Polarized(tag(j, al.event), al.reverse)) for e, al in s.cau}
        prec |= {(Polarized(tag(j, al.event), al.reverse), tag(j, e)) for al, e in s.prec}
    for j, s, o in ((0, a, b), (1, b, a)):
        for x in s.events:
            # cross-component events block each other: the symmetric conflict
            prec |= {(Polarized(tag(1 - j, y)), tag(j, x)) for y in o.events}
            # and each prevents the reversal of the other component's events
            prec |= {(Polarized(tag(1 - j, y), True), tag(j, x)) for y in o.reversible}
    return _injections(a, b, Raes(E, F, cau, prec))


def res_coproduct(a: Res, b: Res) -> Construction:
    E = _tag_set(0, a.events) | _tag_set(1, b.events)
    con = {_tag_set(0, X) for X in a.con} | {_tag_set(1, X) for X in b.con}
    gens = set()
    for j, s in enumerate((a, b)):
        others = E - _tag_set(j, s.events)
        for g in s.gens:
            gens.add(Enabling(_tag_set(j, g.X), _tag_set(j, g.Y) | others, Polarized(tag(j, g.target.event), g.target.reverse)))
    return _injections(a, b, Res(E, con, gens))


def cs_coproduct(a: Cs, b: Cs) -> Construction:
    E = _tag_set(0, a.events) | _tag_set(1, b.events)
    F = _tag_set(0, a.reversible) | _tag_set(1, b.reversible)
    configs = {_tag_set(0, X) for X in a.configs} | {_tag_set(1, X) for X in b.configs}
    trans = set()
    for j, s in enumerate((a, b)):
        trans |= {Transition(_tag_set(j, t.source), _tag_set(j, t.add), _tag_set(j, t.undo)) for t in s.trans}
    return _injections(a, b, Cs(E, F, configs, trans))


# ---------------------------------------------------------------------------
# products
# ---------------------------------------------------------------------------


class _Product(NamedTuple):
    events: frozenset
    proj: tuple[dict, dict]


def _product_events(e0, e1) -> _Product:
    p0, p1 = {}, {}
    for x in e0:
        p0[pair(x, None)] = x
    for y in e1:
        p1[pair(None, y)] = y
    for x in e0:
        for y in e1:
            p0[pair(x, y)] = x
            p1[pair(x, y)] = y
    events = frozenset(p0) | frozenset(p1)
    check_bound("product", len(events), max_product_events())
    return _Product(events, (p0, p1))


def _project(p: dict, s) -> frozenset:
    return frozenset(p[e] for e in s if e in p)


def _product_family(prod: _Product, fam0: frozenset, fam1: frozenset) -> frozenset:
    """Sets whose projections are in the component families and are injective.

    Configuration families need not be downward closed, so the search only
    prunes on injectivity and tests membership at every node.
    """
    order = sorted(prod.events)
    p0, p1 = prod.proj
    out = []

    def extend(current: frozenset, used0: frozenset, used1: frozenset, start: int) -> None:
        if used0 in fam0 and used1 in fam1:
            out.append(current)
        for k in range(start, len(order)):
            e = order[k]
            x, y = p0.get(e), p1.get(e)
            if (x is not None and x in used0) or (y is not None and y in used1):
                continue
            n0 = used0 | {x} if x is not None else used0
            n1 = used1 | {y} if y is not None else used1
            extend(current | {e}, n0, n1, k + 1)

    extend(frozenset(), frozenset(), frozenset(), 0)
    return frozenset(out)


def _projections(prod: _Product, a, b, result) -> Construction:
    p0, p1 = prod.proj
    return Construction(result, PartialMap.of(result, a, p0), PartialMap.of(result, b, p1))


def res_product(a: Res, b: Res) -> Construction:
    """Partially synchronous product.

    A triple ``X / Y |- e*`` is included when ``X`` is consistent, each
    component ``i`` that ``e`` involves has a closed enabling
    ``pi_i(X) / Y_i |- pi_i(e)*``, and ``Y`` is the union of the full
    preimages of those ``Y_i``.  The result keeps only minimal generators.
    """
    prod = _product_events(a.events, b.events)
    con = _product_family(prod, a.con, b.con)
    comps = (a, b)
    index = []
    for s in comps:
        idx: dict[tuple, list[frozenset]] = {}
        for t in enabling_closure(s, max_product_events()):
            idx.setdefault((t.X, t.target), []).append(t.Y)
        index.append(idx)
    preimage = [{}, {}]
    for i, p in enumerate(prod.proj):
        for e, x in p.items():
            preimage[i].setdefault(x, set()).add(e)

    def lift(i: int, Yi: frozenset) -> frozenset:
        return frozenset(e for x in Yi for e in preimage[i].get(x, ()))

    closed = set()
    for X in con:
        for e in prod.events:
            for reverse in (False, True):
                if reverse and e not in X:
                    continue
                options = []
                for i, p in enumerate(prod.proj):
                    if e in p:
                        key = (_project(p, X), Polarized(p[e], reverse))
                        options.append([lift(i, Yi) for Yi in index[i].get(key, [])])
                for choice in itertools.product(*options):
                    Y = frozenset().union(*choice)
                    if (X | {e}) & Y:
                        continue
                    closed.add(Enabling(X, Y, Polarized(e, reverse)))
    result = Res(prod.events, con, minimal_generators(closed))
    return _projections(prod, a, b, result)


def cs_product(a: Cs, b: Cs) -> Construction:
    """Partially synchronous product.

    A candidate ``(X, A, B)`` over the product is a transition when it is
    well formed (``A`` disjoint from ``X``, ``B`` inside ``X``, ``X | A`` and
    the target are configurations) and each component touched by ``A | B``
    has the projected transition.
    """
    prod = _product_events(a.events, b.events)
    p0, p1 = prod.proj
    F = frozenset(e for e in prod.events if (e not in p0 or p0[e] in a.reversible) and (e not in p1 or p1[e] in b.reversible))
    configs = _product_family(prod, a.configs, b.configs)
    comps = ((a, p0), (b, p1))
    trans = set()
    for X in configs:
        for A in powerset(prod.events - X):
            if X | A not in configs:
                continue
            for B in powerset(X & F):
                if not A and not B:
                    continue
                if (X - B) | A not in configs:
                    continue
                ok = True
                for s, p in comps:
                    pa, pb = _project(p, A), _project(p, B)
                    if not pa and not pb:
                        continue
                    px = _project(p, X)
                    if not s.has(px, pa, pb) or Transition(px, pa, pb).target != _project(p, (X - B) | A):
                        ok = False
                        break
                if ok:
                    trans.add(Transition(X, A, B))
    result = Cs(prod.events, F, configs, trans)
    rep = validate_cs(result)
    if not rep.ok:
        raise ReconstructionViolation("product is not a configuration system", rep)
    return _projections(prod, a, b, result)


_COPRODUCTS = {"rpes": rpes_coproduct, "raes": raes_coproduct, "res": res_coproduct, "cs": cs_coproduct}
_PRODUCTS = {"res": res_product, "cs": cs_product}


def coproduct(a, b) -> Construction:
    kind = kind_of(a)
    if kind_of(b) != kind:
        raise StructureMismatch("coproduct operands belong to different families")
    return _COPRODUCTS[kind](a, b)


def product(a, b) -> Construction:
    kind = kind_of(a)
    if kind_of(b) != kind:
        raise StructureMismatch("product operands belong to different families")
    if kind not in _PRODUCTS:
        raise StructureMismatch(f"no product is defined for {kind}")
    return _PRODUCTS[kind](a, b)


# ---------------------------------------------------------------------------
# universal properties
# ---------------------------------------------------------------------------


def _all_partial_maps(src, dst):
    keys = sorted(src.events)
    values = [None] + sorted(dst.events)
    for combo in itertools.product(values, repeat=len(keys)):
        yield PartialMap.of(src, dst, {k: v for k, v in zip(keys, combo) if v is not None})


def _mediator_report(m: PartialMap, legs, col: _Collector, commutes) -> ValidationReport:
    valid = check_morphism(m)
    for f in valid.findings:
        col.add("mediator.valid", f"[{f.clause}] {f.message}")
    for j, (leg, f) in enumerate(legs):
        if not commutes(m, leg, f):
            col.add("mediator.commutes", f"the mediator does not commute with leg {j}")
    if len(m.source.events) <= UNIQUENESS_BRUTE_FORCE_EVENTS and len(m.target.events) <= UNIQUENESS_BRUTE_FORCE_EVENTS:
        for g in _all_partial_maps(m.source, m.target):
            if g == m:
                continue
            if all(commutes(g, leg, f) for leg, f in legs) and check_morphism(g).ok:
                col.add("mediator.unique", f"another commuting morphism exists: {g}")
                break
    return col.report()


def coproduct_mediator(f0: PartialMap, f1: PartialMap) -> tuple[PartialMap, ValidationReport]:
    """The map ``[f0, f1]`` out of the coproduct of the two sources."""
    if f0.target != f1.target:
        raise StructureMismatch("the two maps must share a codomain")
    cons = coproduct(f0.source, f1.source)
    table = {tag(0, k): v for k, v in f0.pairs} | {tag(1, k): v for k, v in f1.pairs}
    m = PartialMap.of(cons.structure, f0.target, table)

    def commutes(g, leg, f):
        return compose(leg, g).pairs == f.pairs

    rep = _mediator_report(m, ((cons.left, f0), (cons.right, f1)), _Collector("coproduct-mediator"), commutes)
    if "mediator.valid" in rep.clauses():
        raise NotCommuting("the only commuting map out of the coproduct is not a morphism", rep)
    return m, rep


def product_mediator(f0: PartialMap, f1: PartialMap) -> tuple[PartialMap, ValidationReport]:
    """The map ``<f0, f1>`` into the product of the two targets."""
    if f0.source != f1.source:
        raise StructureMismatch("the two maps must share a domain")
    cons = product(f0.target, f1.target)
    d0, d1 = f0.as_dict(), f1.as_dict()
    table = {}
    for e in f0.source.events:
        x, y = d0.get(e), d1.get(e)
        if x is not None or y is not None:
            table[e] = pair(x, y)
    m = PartialMap.of(f0.source, cons.structure, table)

    def commutes(g, leg, f):
        return compose(g, leg).pairs == f.pairs

    rep = _mediator_report(m, ((cons.left, f0), (cons.right, f1)), _Collector("product-mediator"), commutes)
    if "mediator.valid" in rep.clauses():
        raise NotCommuting("the only commuting map into the product is not a morphism", rep)
    return m, rep


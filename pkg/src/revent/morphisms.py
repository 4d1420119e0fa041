"""Partial event maps and morphism checks for every structure family.

A :class:`PartialMap` is a partial function between the event sets of two
structures of the same family.  The ``check_*`` functions return a
:class:`~revent.core.ValidationReport`; they never raise on an invalid map.

The prime and asymmetric morphism clauses are reconstructions assembled from
the forward-only clauses plus reversal counterparts.  :func:`induced_cs_check`
pushes a map through the functor pipeline to configuration systems and is the
semantic arbiter for those reconstructions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

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
    enabling_closure,
    enabling_key,
    fmt_set,
    kind_of,
    rev,
    fwd,
    set_key,
    sorted_sets,
    transition_key,
)
from revent.errors import StructureMismatch


@dataclass(frozen=True)
class PartialMap:
    source: object
    target: object
    pairs: tuple[tuple[str, str], ...] = ()

    def __post_init__(self):
        pairs = tuple(sorted(dict(self.pairs).items()))
        object.__setattr__(self, "pairs", pairs)
        src_events, dst_events = self.source.events, self.target.events
        for k, v in pairs:
            if k not in src_events:
                raise StructureMismatch(f"{k} is not an event of the source")
            if v not in dst_events:
                raise StructureMismatch(f"{v} is not an event of the target")

    @classmethod
    def of(cls, source, target, mapping: Mapping[str, str] | Iterable[tuple[str, str]] = ()) -> PartialMap:
        items = mapping.items() if isinstance(mapping, Mapping) else mapping
        return cls(source, target, tuple(items))

    def as_dict(self) -> dict[str, str]:
        return dict(self.pairs)

    def __call__(self, e: str) -> str | None:
        return self.as_dict().get(e)

    def domain(self) -> frozenset:
        return frozenset(k for k, _ in self.pairs)

    def image(self, s: Iterable[str]) -> frozenset:
        d = self.as_dict()
        return frozenset(d[e] for e in s if e in d)

    def preimage(self, s: Iterable[str]) -> frozenset:
        s = set(s)
        return frozenset(k for k, v in self.pairs if v in s)

    def injective_on(self, s: Iterable[str]) -> bool:
        d = self.as_dict()
        vals = [d[e] for e in s if e in d]
        return len(vals) == len(set(vals))

    def __str__(self) -> str:
        return "{" + ", ".join(f"{k}->{v}" for k, v in self.pairs) + "}"


def identity(s) -> PartialMap:
    return PartialMap.of(s, s, {e: e for e in s.events})


def compose(f: PartialMap, g: PartialMap) -> PartialMap:
    """``f`` followed by ``g``."""
    if f.target != g.source:
        raise StructureMismatch("cannot compose: the target of f is not the source of g")
    gd = g.as_dict()
    return PartialMap.of(f.source, g.target, {k: gd[v] for k, v in f.pairs if v in gd})


def _check_kinds(f: PartialMap, src, dst, kind: str) -> None:
    if kind_of(src) != kind or kind_of(dst) != kind:
        raise StructureMismatch(f"expected two {kind} structures")


def _same_image_in(col: _Collector, f: PartialMap, family: Iterable[frozenset], clause: str, what: str) -> None:
    for X in sorted_sets(family):
        if not f.injective_on(X):
            col.add(clause, f"f is not injective on the {what} {fmt_set(X)}")


# ---------------------------------------------------------------------------
# RES
# ---------------------------------------------------------------------------


def _y_witness(f: PartialMap, t: Enabling, dst_index: dict) -> frozenset | None:
    fe = f(t.target.event)
    candidates = dst_index.get((f.image(t.X), Polarized(fe, t.target.reverse)), [])
    for Y1 in candidates:
        if f.preimage(Y1) <= t.Y:
            return Y1
    return None


def res_witnesses(f: PartialMap, src: Res, dst: Res, bound: int | None = None) -> dict[Enabling, frozenset | None]:
    """For each closed source enabling of a mapped event, the first Y1 witness (or None)."""
    closed0 = enabling_closure(src, bound)
    closed1 = enabling_closure(dst, bound)
    index: dict[tuple, list[frozenset]] = {}
    for t in closed1:
        index.setdefault((t.X, t.target), []).append(t.Y)
    for ys in index.values():
        ys.sort(key=set_key)
    out = {}
    for t in sorted(closed0, key=enabling_key):
        if f(t.target.event) is None:
            continue
        out[t] = _y_witness(f, t, index)
    return out


def check_res_morphism(f: PartialMap, src: Res | None = None, dst: Res | None = None, bound: int | None = None) -> ValidationReport:
    src = f.source if src is None else src
    dst = f.target if dst is None else dst
    _check_kinds(f, src, dst, "res")
    col = _Collector("res-morphism")
    for t, Y1 in res_witnesses(f, src, dst, bound).items():
        if Y1 is None:
            col.add("res-morphism.enabling", f"no image enabling for {t}")
    for X in sorted_sets(src.con):
        if f.image(X) not in dst.con:
            col.add("res-morphism.consistency", f"image of {fmt_set(X)} is not consistent")
    _same_image_in(col, f, src.con, "res-morphism.injective", "consistent set")
    return col.report()


# ---------------------------------------------------------------------------
# CS
# ---------------------------------------------------------------------------


def check_cs_morphism(f: PartialMap, src: Cs | None = None, dst: Cs | None = None) -> ValidationReport:
    src = f.source if src is None else src
    dst = f.target if dst is None else dst
    _check_kinds(f, src, dst, "cs")
    col = _Collector("cs-morphism")
    for t in sorted(src.trans, key=transition_key):
        fx, fa, fb = f.image(t.source), f.image(t.add), f.image(t.undo)
        fy = f.image(t.target)
        if not fa and not fb:
            if fx != fy or fx not in dst.configs:
                col.add("cs-morphism.transition", f"{t} has an empty image but {fmt_set(fx)} and {fmt_set(fy)} differ or are not configurations")
            continue
        image = Transition(fx, fa, fb)
        if not dst.has(fx, fa, fb) or image.target != fy:
            col.add("cs-morphism.transition", f"{t} maps to the missing transition {image}")
    for X in sorted_sets(src.configs):
        if f.image(X) not in dst.configs:
            col.add("cs-morphism.configuration", f"image of {fmt_set(X)} is not a configuration")
    _same_image_in(col, f, src.configs, "cs-morphism.injective", "configuration")
    return col.report()


# ---------------------------------------------------------------------------
# RPES and RAES (reconstructed clauses)
# ---------------------------------------------------------------------------


def _f_sync(col: _Collector, f: PartialMap, F0: frozenset, F1: frozenset, prefix: str, strict: bool) -> None:
    for e, fe in f.pairs:
        if e in F0 and fe not in F1:
            col.add(f"{prefix}.reversible-sync", f"reversible {e} maps to irreversible {fe}")
        if strict and e not in F0 and fe in F1:
            col.add(f"{prefix}.reversible-sync", f"irreversible {e} maps to reversible {fe}")


def check_rpes_morphism(f: PartialMap, src: Rpes | None = None, dst: Rpes | None = None, strict: bool = True) -> ValidationReport:
    src = f.source if src is None else src
    dst = f.target if dst is None else dst
    _check_kinds(f, src, dst, "rpes")
    col = _Collector("rpes-morphism")
    for e, fe in f.pairs:
        missing = dst.causes(fe) - f.image(src.causes(e))
        if missing:
            col.add("rpes-morphism.causes", f"causes {fmt_set(missing)} of {fe} are not images of causes of {e}")
        if e in src.reversible and fe in dst.reversible:
            missing = dst.reverse_causes(fe) - f.image(src.reverse_causes(e))
            if missing:
                col.add("rpes-morphism.reverse-causes", f"reverse causes {fmt_set(missing)} of {fe} are not images of reverse causes of {e}")
    for e, fe in f.pairs:
        for e2, fe2 in f.pairs:
            if e == e2:
                continue
            if (fe == fe2 or (fe, fe2) in dst.conf) and (e, e2) not in src.conf:
                col.add("rpes-morphism.conflict", f"{e} and {e2} map to conflicting or equal events but are not in conflict")
            if (fe2, fe) in dst.prev and (e2, e) not in src.prev:
                col.add("rpes-morphism.prevention", f"{fe2} prevents undoing {fe} but {e2} does not prevent undoing {e}")
    _f_sync(col, f, src.reversible, dst.reversible, "rpes-morphism", strict)
    return col.report()


def check_raes_morphism(f: PartialMap, src: Raes | None = None, dst: Raes | None = None, strict: bool = True) -> ValidationReport:
    src = f.source if src is None else src
    dst = f.target if dst is None else dst
    _check_kinds(f, src, dst, "raes")
    col = _Collector("raes-morphism")
    for e, fe in f.pairs:
        for a0, a1 in ((fwd(e), fwd(fe)), (rev(e), rev(fe))):
            if a0.reverse and not (e in src.reversible and fe in dst.reversible):
                continue
            missing = dst.causes(a1) - f.image(src.causes(a0))
            if missing:
                col.add("raes-morphism.causes", f"causes {fmt_set(missing)} of {a1} are not images of causes of {a0}")
    conf0 = src.conflict()
    for e, fe in f.pairs:
        for e2, fe2 in f.pairs:
            if e == e2:
                continue
            if fe == fe2 and (e, e2) not in conf0:
                col.add("raes-morphism.same-image", f"{e} and {e2} share the image {fe} but are not in conflict")
            if (fwd(fe), fe2) in dst.prec and (fwd(e), e2) not in src.prec:
                col.add("raes-morphism.precedence", f"{fe} ⊲ {fe2} is not reflected by {e} ⊲ {e2}")
            if (rev(fe), fe2) in dst.prec and e in src.reversible and (rev(e), e2) not in src.prec:
                col.add("raes-morphism.precedence", f"{rev(fe)} ⊲ {fe2} is not reflected by {rev(e)} ⊲ {e2}")
    _f_sync(col, f, src.reversible, dst.reversible, "raes-morphism", strict)
    return col.report()


def check_morphism(f: PartialMap, strict: bool = True) -> ValidationReport:
    """Dispatch on the family of the map's source and target."""
    kind = kind_of(f.source)
    if kind_of(f.target) != kind:
        raise StructureMismatch("source and target belong to different families")
    if kind == "res":
        return check_res_morphism(f)
    if kind == "cs":
        return check_cs_morphism(f)
    if kind == "rpes":
        return check_rpes_morphism(f, strict=strict)
    return check_raes_morphism(f, strict=strict)


def induced_cs_check(f: PartialMap) -> ValidationReport:
    """Push the map through the functors to configuration systems and check it there."""
    from revent.functors import to_cs

    g = PartialMap(to_cs(f.source), to_cs(f.target), f.pairs)
    rep = check_cs_morphism(g)
    return ValidationReport(rep.findings, "induced-cs-morphism")

"""JSON structure files, morphism files and DOT export.

Structure files are objects with a ``kind`` field (``rpes``, ``raes``,
``res`` or ``cs``) plus ``events``, ``reversible`` and kind-specific blocks::

    rpes: lt, conf, rcau, prev          lists of [x, y] pairs
    raes: cau   [{"cause": e, "event": x, "polarity": "forward"|"reverse"}]
          prec  [{"event": x, "polarity": ..., "preventer": e}]   (x* ⊲ e)
    res:  con   "all" or a list of event lists
          enablings [{"X": [...], "Y": [...], "event": e, "polarity": ...}]
    cs:   configs [[...], ...]
          transitions [{"source": [...], "add": [...], "undo": [...]}]

Unknown top-level keys (``printed``, ``notes``) are ignored on input.
Serialization sorts everything, so output is byte-stable.
"""

from __future__ import annotations

import json
from pathlib import Path

from revent.core import (
    Cs,
    Enabling,
    Polarized,
    Raes,
    Res,
    Rpes,
    Transition,
    check_bound,
    enabling_key,
    kind_of,
    powerset,
    sorted_sets,
    transition_key,
)
from revent.errors import ReventError

POLARITIES = {"forward": False, "reverse": True}


class ParseError(ReventError):
    """A structure or morphism file could not be read."""


def _pol(v) -> bool:
    if v not in POLARITIES:
        raise ParseError(f"polarity must be 'forward' or 'reverse', got {v!r}")
    return POLARITIES[v]


def _pol_name(reverse: bool) -> str:
    return "reverse" if reverse else "forward"


def _events(v, what: str) -> list[str]:
    if not isinstance(v, list) or not all(isinstance(e, str) for e in v):
        raise ParseError(f"{what} must be a list of event names")
    return v


def _pairs(v, what: str) -> list[tuple[str, str]]:
    if not isinstance(v, list):
        raise ParseError(f"{what} must be a list of pairs")
    out = []
    for p in v:
        if not (isinstance(p, list) and len(p) == 2 and all(isinstance(x, str) for x in p)):
            raise ParseError(f"{what}: {p!r} is not a pair of event names")
        out.append((p[0], p[1]))
    return out


def _family(v, what: str) -> list[frozenset]:
    if not isinstance(v, list):
        raise ParseError(f"{what} must be a list of event lists")
    return [frozenset(_events(s, what)) for s in v]


def from_json(data) -> object:
    """Build a structure from parsed JSON data."""
    if not isinstance(data, dict):
        raise ParseError("a structure file must hold a JSON object")
    kind = data.get("kind")
    try:
        events = _events(data.get("events", []), "events")
        reversible = _events(data.get("reversible", []), "reversible")
        if kind == "rpes":
            return Rpes(
                events,
                reversible,
                *(_pairs(data.get(k, []), k) for k in ("lt", "conf", "rcau", "prev")),
            )
        if kind == "raes":
            cau = [(c["cause"], Polarized(c["event"], _pol(c.get("polarity", "forward")))) for c in data.get("cau", [])]
            prec = [(Polarized(p["event"], _pol(p.get("polarity", "forward"))), p["preventer"]) for p in data.get("prec", [])]
            return Raes(events, reversible, cau, prec)
        if kind == "res":
            con = data.get("con", "all")
            if con == "all":
                check_bound("con: all", len(events))
                family = list(powerset(events))
            else:
                family = _family(con, "con")
            gens = [
                Enabling(frozenset(_events(g.get("X", []), "X")), frozenset(_events(g.get("Y", []), "Y")), Polarized(g["event"], _pol(g.get("polarity", "forward"))))
                for g in data.get("enablings", [])
            ]
            return Res(events, family, gens)
        if kind == "cs":
            configs = _family(data.get("configs", []), "configs")
            trans = [
                Transition(frozenset(_events(t["source"], "source")), frozenset(_events(t.get("add", []), "add")), frozenset(_events(t.get("undo", []), "undo")))
                for t in data.get("transitions", [])
            ]
            return Cs(events, reversible, configs, trans)
    except (KeyError, TypeError, AttributeError) as exc:
        raise ParseError(f"malformed {kind} structure: {exc!r}") from exc
    raise ParseError(f"unknown kind {kind!r}")


def _set(s) -> list[str]:
    return sorted(s)


def to_json(s) -> dict:
    kind = kind_of(s)
    out: dict = {"kind": kind, "events": _set(s.events)}
    if kind != "res":
        out["reversible"] = _set(s.reversible)
    if kind == "rpes":
        for name in ("lt", "conf", "rcau", "prev"):
            out[name] = [list(p) for p in sorted(getattr(s, name))]
    elif kind == "raes":
        out["cau"] = [
            {"cause": e, "event": a.event, "polarity": _pol_name(a.reverse)}
            for e, a in sorted(s.cau, key=lambda p: (p[1].event, p[1].reverse, p[0]))
        ]
        out["prec"] = [
            {"event": a.event, "polarity": _pol_name(a.reverse), "preventer": e}
            for a, e in sorted(s.prec, key=lambda p: (p[0].event, p[0].reverse, p[1]))
        ]
    elif kind == "res":
        out["con"] = [_set(X) for X in sorted_sets(s.con)]
        out["enablings"] = [
            {"X": _set(g.X), "Y": _set(g.Y), "event": g.target.event, "polarity": _pol_name(g.target.reverse)}
            for g in sorted(s.gens, key=enabling_key)
        ]
    else:
        out["configs"] = [_set(X) for X in sorted_sets(s.configs)]
        out["transitions"] = [
            {"source": _set(t.source), "add": _set(t.add), "undo": _set(t.undo)}
            for t in sorted(s.trans, key=transition_key)
        ]
    return out


def dumps(s, extra: dict | None = None) -> str:
    data = to_json(s)
    if extra:
        data.update(extra)
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def loads(text: str):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc}") from exc
    return from_json(data)


def load(path) -> object:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return loads(text)


def save(s, path, extra: dict | None = None) -> None:
    Path(path).write_text(dumps(s, extra), encoding="utf-8", newline="\n")


# ---------------------------------------------------------------------------
# morphism files
# ---------------------------------------------------------------------------


def load_map_file(path) -> tuple[dict[str, str], str | None, str | None]:
    """Read ``{"map": {...}, "source": file, "target": file}``; file paths are
    resolved relative to the map file."""
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read map file {path}: {exc}") from exc
    if not isinstance(data, dict) or not isinstance(data.get("map", {}), dict):
        raise ParseError("a map file must hold an object with a 'map' object")
    base = Path(path).parent

    def resolve(key):
        v = data.get(key)
        return None if v is None else str(base / v)

    return {str(k): str(v) for k, v in data.get("map", {}).items()}, resolve("source"), resolve("target")


def map_json(pairs, source: str | None = None, target: str | None = None) -> str:
    data: dict = {"map": dict(sorted(pairs))}
    if source is not None:
        data["source"] = source
    if target is not None:
        data["target"] = target
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


# ---------------------------------------------------------------------------
# DOT
# ---------------------------------------------------------------------------


def _node(X) -> str:
    return json.dumps("{" + ",".join(sorted(X)) + "}", ensure_ascii=False)


def to_dot(c: Cs, name: str = "cs") -> str:
    """Directed graph with one node per configuration and one edge per transition.

    Edge labels list added events, then undone events suffixed with ``-``.
    """
    lines = [f"digraph {name} {{"]
    for X in sorted_sets(c.configs):
        lines.append(f"  {_node(X)};")
    for t in sorted(c.trans, key=transition_key):
        label = ",".join(sorted(t.add) + [f"{e}-" for e in sorted(t.undo)])
        lines.append(f"  {_node(t.source)} -> {_node(t.target)} [label={json.dumps(label, ensure_ascii=False)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


__all__ = ["ParseError", "dumps", "from_json", "load", "load_map_file", "loads", "map_json", "save", "to_dot", "to_json"]

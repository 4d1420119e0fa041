"""Command-line interface.

Exit codes: 0 valid / property holds, 1 violations found (report on stdout),
2 parse errors, bound errors, incompatible kinds or unmet hypotheses.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from revent import analysis, functors
from revent.constructions import coproduct, product
from revent.core import ValidationReport, kind_of, normalized, set_max_events, validate
from revent.errors import BoundExceeded, HypothesisUnmet, ReventError, StructureMismatch
from revent.io import ParseError, dumps, load, load_map_file, map_json, to_dot
from revent.morphisms import PartialMap, check_morphism

OK, VIOLATION, ERROR = 0, 1, 2


class _Fail(Exception):
    def __init__(self, code: int, payload: str, stream: str = "stderr"):
        super().__init__(payload)
        self.code = code
        self.payload = payload
        self.stream = stream


def _report_text(rep: ValidationReport) -> str:
    return json.dumps(rep.to_json(), indent=2, ensure_ascii=False) + "\n"


def _load_valid(path: str):
    s = load(path)
    rep = validate(s)
    if not rep.ok:
        raise _Fail(VIOLATION, _report_text(rep), "stdout")
    return s


def _expect(s, *kinds: str) -> None:
    if kind_of(s) not in kinds:
        raise StructureMismatch(f"expected {' or '.join(kinds)}, got {kind_of(s)}")


# ---------------------------------------------------------------------------
# commands; each returns (exit code, stdout text)
# ---------------------------------------------------------------------------


def cmd_validate(args) -> tuple[int, str]:
    rep = validate(load(args.file))
    return (OK if rep.ok else VIOLATION), _report_text(rep)


def cmd_map(args) -> tuple[int, str]:
    s = _load_valid(args.file)
    out = functors.apply_functor(args.functor, s)
    if args.functor == "r":
        out = normalized(out)
    return OK, dumps(out)


def cmd_construct(args) -> tuple[int, str]:
    a, b = _load_valid(args.a), _load_valid(args.b)
    cons = (coproduct if args.op == "coproduct" else product)(a, b)
    text = dumps(cons.structure)
    if args.out_dir:
        out = Path(args.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        names = ("inj0", "inj1") if args.op == "coproduct" else ("proj0", "proj1")
        files = {"result.json": text}
        for name, m, other in ((names[0], cons.left, args.a), (names[1], cons.right, args.b)):
            other = str(Path(other).resolve())
            src, dst = ("result.json", other) if args.op == "product" else (other, "result.json")
            files[f"{name}.map.json"] = map_json(m.pairs, src, dst)
        for name, content in files.items():
            (out / name).write_text(content, encoding="utf-8", newline="\n")
    return OK, text


def cmd_check(args) -> tuple[int, str]:
    s = _load_valid(args.file)
    prop = args.property
    kind = kind_of(s)
    if prop == "stable":
        _expect(s, "res", "cs")
        rep = analysis.is_stable_res(s) if kind == "res" else analysis.is_stable_cs(s)
    elif prop == "cause-respecting":
        _expect(s, "res", "cs")
        rep = analysis.is_cause_respecting_res(s, args.strict_iff) if kind == "res" else analysis.is_cause_respecting_cs(s)
    elif prop == "roundtrip":
        _expect(s, "res", "cs")
        rep = analysis.check_roundtrip_res(s) if kind == "res" else analysis.check_roundtrip_cs(s)
    elif prop == "fwd-reachable":
        _expect(s, "cs")
        rep = analysis.check_fwd_reachability(s)
    elif prop == "preservation":
        _expect(s, "res", "cs")
        rep = analysis.check_preservation(s)
    else:
        _expect(s, "cs")
        assert functors.is_finitely_enabled(s)
        rep = ValidationReport((), "finitely-enabled")
    return (OK if rep.ok else VIOLATION), _report_text(rep)


def cmd_morphism(args) -> tuple[int, str]:
    mapping, src_path, dst_path = load_map_file(args.map)
    src_path = args.src or src_path
    dst_path = args.dst or dst_path
    if src_path is None or dst_path is None:
        raise ParseError("source and target structure files are required")
    src, dst = _load_valid(src_path), _load_valid(dst_path)
    if kind_of(src) != kind_of(dst):
        raise StructureMismatch("source and target belong to different families")
    rep = check_morphism(PartialMap.of(src, dst, mapping), strict=not args.lenient)
    return (OK if rep.ok else VIOLATION), _report_text(rep)


def cmd_export(args) -> tuple[int, str]:
    s = _load_valid(args.file)
    if args.format == "json":
        return OK, dumps(s)
    return OK, to_dot(functors.to_cs(s))


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _global_flags(p: argparse.ArgumentParser, suppress: bool) -> None:
    d = argparse.SUPPRESS if suppress else None
    p.add_argument("--max-events", type=int, default=d, help="materialization bound (default 8, or $REVENT_MAX_EVENTS)")
    p.add_argument("--seed", type=int, default=d, help="seed for commands that sample (currently none do)")
    p.add_argument("--strict-iff", action="store_true", default=argparse.SUPPRESS if suppress else False,
                   help="check the literal biconditional form of the cause-respecting RES condition")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="revent", description="Reversible event structures and configuration systems.")
    _global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        _global_flags(p, suppress=True)
        p.set_defaults(func=func)
        return p

    p = add("validate", cmd_validate, "validate a structure file")
    p.add_argument("file")

    p = add("map", cmd_map, "apply a functor")
    p.add_argument("--functor", required=True, choices=sorted(functors.FUNCTORS))
    p.add_argument("file")

    p = add("construct", cmd_construct, "build a coproduct or product")
    p.add_argument("--op", required=True, choices=["coproduct", "product"])
    p.add_argument("--out-dir", help="also write the result and its two maps here")
    p.add_argument("a")
    p.add_argument("b")

    p = add("check", cmd_check, "check a property")
    p.add_argument("--property", required=True,
                   choices=["stable", "cause-respecting", "roundtrip", "fwd-reachable", "preservation", "finitely-enabled"])
    p.add_argument("file")

    p = add("morphism", cmd_morphism, "check a morphism file")
    p.add_argument("--lenient", action="store_true", help="only require reversible events to map to reversible events")
    p.add_argument("map")
    p.add_argument("src", nargs="?")
    p.add_argument("dst", nargs="?")

    p = add("export", cmd_export, "export a structure as DOT or canonical JSON")
    p.add_argument("--format", required=True, choices=["dot", "json"])
    p.add_argument("file")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    set_max_events(args.max_events)
    try:
        code, text = args.func(args)
    except _Fail as exc:
        code, text = exc.code, exc.payload
        if exc.stream == "stderr":
            sys.stderr.write(text)
            return code
    except HypothesisUnmet as exc:
        sys.stderr.write(json.dumps({"error": "hypothesis-unmet", "failed": exc.failed}) + "\n")
        return ERROR
    except (ParseError, BoundExceeded, StructureMismatch, ReventError) as exc:
        sys.stderr.write(json.dumps({"error": type(exc).__name__, "message": str(exc)}, ensure_ascii=False) + "\n")
        return ERROR
    finally:
        set_max_events(None)
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    raise SystemExit(main())

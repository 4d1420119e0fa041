"""Named fixture structures.

Each fixture is a hand transcription.  Where the printed source contains an
evident slip (a wrong tag, a missing brace, a missing underline) the
structure follows the governing definition and the fixture record keeps the
printed fragment next to a note on what was changed.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from revent.core import Cs, Raes, Res, Rpes, enabling, fs, fwd, powerset, rev, tag, transition
from revent.errors import UnknownFixture


class FixtureId(str, enum.Enum):
    RPES_A = "rpes_a"
    RPES_A_NOREV = "rpes_a_norev"
    RPES_B = "rpes_b"
    COPROD = "rpes_coprod"
    RES0 = "res0"
    RES1 = "res1"
    PROD = "res_prod"
    RES_FIG4 = "fig4_res"
    CS = "fig4_cs"
    CS_ONE = "cs_one"
    RES_ONE = "res_one"
    CSCOP0 = "cscop0"
    CSCOP1 = "cscop1"
    CSCOP = "cscop"
    CSP0 = "csp0"
    CSP1 = "csp1"
    CSPRO = "cspro"
    PES1 = "pes1"
    AES2 = "aes2"
    ES3 = "es3"


@dataclass(frozen=True)
class Fixture:
    id: FixtureId
    structure: object
    printed: str = ""
    notes: tuple[str, ...] = ()


def _p(x, y):
    return f"({x},{y})"


def _rpes_a() -> Fixture:
    r = Rpes.build({"a", "b"}, {"a", "b"}, lt={("a", "b")}, rcau={("a", "b")})
    return Fixture(
        FixtureId.RPES_A,
        r,
        printed="E0={a,b}, F0={a,b}, a <0 b, a ≺0 b_",
        notes=("self reverse causes a ≺ a_ and b ≺ b_ are added; every reversible event must cause its own reversal",),
    )


def _rpes_b() -> Fixture:
    r = Rpes.build({"c", "d"}, {"c"}, prev={("d", "c")})
    return Fixture(
        FixtureId.RPES_B,
        r,
        printed="E1={c,d}, F1={c}, d ⊳1 c_",
        notes=("self reverse cause c ≺ c_ is added",),
    )


def _coprod() -> Fixture:
    a0, b0, c1, d1 = tag(0, "a"), tag(0, "b"), tag(1, "c"), tag(1, "d")
    left, right = (a0, b0), (c1, d1)
    conf = {(x, y) for x in left for y in right}
    r = Rpes.build(
        {a0, b0, c1, d1},
        {a0, b0, c1},
        lt={(a0, b0)},
        conf=conf,
        rcau={(a0, b0)},
        prev={(a0, c1), (b0, c1), (c1, a0), (d1, a0), (c1, b0), (d1, b0), (d1, c1)},
    )
    printed = (
        "E={(0,a),(0,b),(1,c),(1,d)}, F={(0,a),(0,b),(1,c)}, (0,a)<(0,b), (0,a)≺(0,b)_, "
        "(0,a)♯(1,c), (0,a)♯(1,d), (0,b)♯(0,c), (0,b)♯(0,d), "
        "(0,a)⊳(1,c), (0,b)⊳(1,c), (1,c)⊳(0,a), (1,d)⊳(0,a), (1,c)⊳(0,b), (1,d)⊳(0,b), (1,d)⊳(1,c)_"
    )
    notes = (
        "(0,b)♯(0,c) and (0,b)♯(0,d) read as (0,b)♯(1,c) and (0,b)♯(1,d): the coproduct puts every cross-component pair in conflict",
        "all prevention pairs target reversals; the printed form drops the underline on six of them",
        "conflict is symmetric, so each printed pair is stored in both directions",
        "self reverse causes of (0,a), (0,b), (1,c) are included",
    )
    return Fixture(FixtureId.COPROD, r, printed, notes)


def _res0() -> Fixture:
    r = Res.full(
        {"a", "b"},
        [
            enabling((), (), "a"),
            enabling({"a"}, (), "b"),
            enabling({"a", "b"}, (), "b", True),
            enabling({"a"}, (), "a", True),
        ],
    )
    return Fixture(FixtureId.RES0, r, "E0={a,b}, Con0=2^E0, ∅⊘∅⊢a, {a}⊘∅⊢b, {a,b}⊘∅⊢b_, {a}⊘∅⊢a_")


def _res1() -> Fixture:
    r = Res({"c"}, [(), {"c"}], [enabling((), (), "c"), enabling({"c"}, (), "c", True)])
    return Fixture(
        FixtureId.RES1,
        r,
        "E1={c}, Con1={∅,{c}}, ∅⊘∅⊢c, {c}⊘⊢c_",
        notes=("the empty preventing set of the reversal of c is missing in print",),
    )


def _prod() -> Fixture:
    A, B, AC, BC, C = _p("a", "*"), _p("b", "*"), _p("a", "c"), _p("b", "c"), _p("*", "c")
    con = [
        (), {A}, {B}, {AC}, {BC}, {C},
        {A, B}, {A, BC}, {A, C}, {AC, B}, {B, C},
        {A, B, C},
    ]
    gens = [
        enabling((), (), A),
        enabling({A}, (), B),
        enabling({AC}, (), B),
        enabling((), (), AC),
        enabling({A}, (), BC),
        enabling({AC}, (), BC),
        enabling((), (), C),
        enabling({A}, (), A, True),
        enabling({B, A}, (), B, True),
        enabling({B, AC}, (), B, True),
        enabling({AC}, (), AC, True),
        enabling({BC, A}, (), BC, True),
        enabling({C}, (), C, True),
    ]
    printed = (
        "Con={∅,{(a,*)},{(b,*)},{(a,c)},{(b,c)},{(*,c)},{(a,*),(b,*)},{(a,*),(b,c)},{(a,*),(*,c)},"
        "{(a,c),(b,*)},{(b,*),(*,c)},{(a,*),(b,*),(*,c)}}; "
        "∅⊘∅⊢(a,*), {(a,*)⊘∅⊢(b,*), {(a,c)}⊘∅⊢(b,*), ∅⊘∅⊢(a,c), {(a,*)⊘∅⊢(b,c), {(a,c)}⊘∅⊢(b,c), "
        "∅⊘∅⊢(*,c), {(a,*)}⊘∅⊢(a,*)_, {(b,*),(a,*)}⊘∅⊢(b,*)_, {(b,*),(a,c)}⊘∅⊢(b,*)_, "
        "{(a,c)}⊘∅⊢(a,c)_, {(b,c),(a,*)}⊘∅⊢(b,c)_, {(*,c)}⊘∅⊢(*,c)_"
    )
    notes = ("two enabling sets are printed without their closing brace: {(a,*)} is meant",)
    return Fixture(FixtureId.PROD, Res({A, B, AC, BC, C}, con, gens), printed, notes)


def _res_fig4() -> Fixture:
    r = Res.full(
        {"a", "b"},
        [
            enabling((), (), "a"),
            enabling((), (), "b"),
            enabling({"b"}, (), "b", True),
            enabling({"a"}, {"b"}, "a", True),
        ],
    )
    return Fixture(FixtureId.RES_FIG4, r, "E={a,b}, Con=2^E, ∅⊘∅⊢a, ∅⊘∅⊢b, {b}⊘∅⊢b_, {a}⊘{b}⊢a_")


def _cs_fig4() -> Fixture:
    a, b = "a", "b"
    c = Cs(
        {a, b},
        {a, b},
        powerset({a, b}),
        [
            transition((), {a}),
            transition((), {b}),
            transition({a}, {b}),
            transition({b}, {a}),
            transition((), {a, b}),
            transition({b}, (), {b}),
            transition({b}, {a}, {b}),
            transition({a, b}, (), {b}),
            transition({a}, (), {a}),
        ],
    )
    printed = "∅→{a}, ∅→{b}, {a}→{a,b}, {b}→{a,b}, ∅→{a,b}, {b}→∅, {b}→{a}, {a,b}→{a}, {a}→∅"
    return Fixture(FixtureId.CS, c, printed, ("reversible events are those undone by some arrow",))


def _cs_one() -> Fixture:
    c = Cs({"a"}, {"a"}, [(), {"a"}], [transition((), {"a"}), transition({"a"}, (), {"a"})])
    return Fixture(FixtureId.CS_ONE, c)


def _res_one() -> Fixture:
    r = Res({"a"}, [(), {"a"}], [enabling((), (), "a"), enabling({"a"}, (), "a", True)])
    return Fixture(FixtureId.RES_ONE, r)


def _left_ab(events=("a", "b")) -> tuple[list, list]:
    a, b = events
    configs = [(), {a}, {b}, {a, b}]
    trans = [
        transition((), {a}),
        transition({a}, {b}),
        transition({a, b}, (), {b}),
        transition({b}, {a}),
        transition({a, b}, (), {a}),
    ]
    return configs, trans


def _cscop0() -> Fixture:
    configs, trans = _left_ab()
    printed = "∅→{a}, {a}→{a,b}, {a,b}→{a}, {b}→{a,b}, {a,b}→{b}"
    return Fixture(FixtureId.CSCOP0, Cs({"a", "b"}, {"a", "b"}, configs, trans), printed)


def _right_cd(events=("c", "d")) -> tuple[list, list]:
    c, d = events
    configs = [(), {c}, {d}, {c, d}]
    trans = [
        transition((), {c}),
        transition({c}, (), {c}),
        transition((), {d}),
        transition({c}, {d}),
        transition({d}, {c}),
        transition((), {c, d}),
    ]
    return configs, trans


def _cscop1() -> Fixture:
    configs, trans = _right_cd()
    printed = "∅→{c}, {c}→∅, ∅→{d}, {c}→{c,d}, {d}→{c,d}, ∅→{c,d}"
    return Fixture(FixtureId.CSCOP1, Cs({"c", "d"}, {"c"}, configs, trans), printed)


def _cscop() -> Fixture:
    a, b, c, d = tag(0, "a"), tag(0, "b"), tag(1, "c"), tag(1, "d")
    c0, t0 = _left_ab((a, b))
    c1, t1 = _right_cd((c, d))
    cs = Cs({a, b, c, d}, {a, b, c}, c0 + c1, t0 + t1)
    notes = ("nodes are drawn untagged; component 0 events get tag 0 and component 1 events tag 1",)
    return Fixture(FixtureId.CSCOP, cs, "union of the two diagrams sharing ∅", notes)


def _csp0() -> Fixture:
    configs, trans = _left_ab()
    notes = (
        "transcribed as drawn: there is no arrow {a}→∅ and {b} has no incoming arrow",
    )
    return Fixture(FixtureId.CSP0, Cs({"a", "b"}, {"a", "b"}, configs, trans), "∅→{a}, {a}→{a,b}, {a,b}→{a}, {b}→{a,b}, {a,b}→{b}", notes)


def _csp1() -> Fixture:
    c = Cs({"c"}, {"c"}, [(), {"c"}], [transition((), {"c"}), transition({"c"}, (), {"c"})])
    return Fixture(FixtureId.CSP1, c, "∅→{c}, {c}→∅")


# drawn arrows of the product diagram, as (source, target) pairs over the
# abbreviations below
_CSPRO_DRAWN = [
    ("0", "A"), ("0", "AC"), ("0", "C"), ("C", "0"),
    ("A", "AB"), ("AB", "A"),
    ("A", "A.BC"), ("A.BC", "A"),
    ("A", "A.C"), ("A.C", "A"),
    ("B", "AB"), ("AB", "B"),
    ("B", "AC.B"), ("AC.B", "B"),
    ("B", "B.C"), ("B.C", "B"),
    ("AC", "AC.B"), ("AC.B", "AC"),
    ("BC", "A.BC"), ("A.BC", "BC"),
    ("C", "A.C"),
    ("AB", "AB.C"), ("AB.C", "AB"),
    ("A.C", "AB.C"), ("AB.C", "A.C"),
    ("B.C", "AB.C"), ("AB.C", "B.C"),
    ("0", "A.C"),
    ("B", "AB.C"), ("AB.C", "B"),
    ("A", "AB.C"), ("AB.C", "A"),
]

# Mixed arrows (adding and undoing at once) that the product definition
# yields but the diagram leaves out.  Each one decomposes into two drawn
# arrows in both orders.
_CSPRO_MIXED = [
    ("AB", "A.C"),     # undo (b,*), add (*,c)
    ("AB", "B.C"),     # undo (a,*), add (*,c)
    ("A.C", "AB"),     # undo (*,c), add (b,*)
    ("B.C", "AB"),     # undo (*,c), add (a,*)
    ("C", "A"),        # undo (*,c), add (a,*)
    ("A", "C"),        # never: (a,*) cannot be undone from {(a,*)}
]


def _cspro_nodes() -> dict[str, frozenset]:
    A, B, AC, BC, C = _p("a", "*"), _p("b", "*"), _p("a", "c"), _p("b", "c"), _p("*", "c")
    return {
        "0": fs(),
        "A": fs(A),
        "B": fs(B),
        "AC": fs(AC),
        "BC": fs(BC),
        "C": fs(C),
        "AB": fs(A, B),
        "A.BC": fs(A, BC),
        "A.C": fs(A, C),
        "AC.B": fs(AC, B),
        "B.C": fs(B, C),
        "AB.C": fs(A, B, C),
    }


def cspro_drawn() -> Cs:
    """The product diagram exactly as drawn (only arrows that add or only undo)."""
    nodes = _cspro_nodes()
    trans = []
    for s, t in _CSPRO_DRAWN:
        X, Y = nodes[s], nodes[t]
        trans.append(transition(X, Y - X, X - Y))
    events = frozenset().union(*nodes.values())
    return Cs(events, events, nodes.values(), trans)


def _cspro() -> Fixture:
    drawn = cspro_drawn()
    nodes = _cspro_nodes()
    extra = []
    for s, t in _CSPRO_MIXED:
        if (s, t) == ("A", "C"):
            continue
        X, Y = nodes[s], nodes[t]
        extra.append(transition(X, Y - X, X - Y))
    cs = Cs(drawn.events, drawn.reversible, drawn.configs, drawn.trans | frozenset(extra))
    notes = (
        "the diagram draws only arrows that purely add or purely undo; five mixed arrows "
        "(undo one event while adding another) follow from the product definition and are added",
        "every added mixed arrow decomposes into drawn arrows in both orders",
    )
    return Fixture(FixtureId.CSPRO, cs, "12 configurations, 32 drawn arrows", notes)


def _pes1() -> Fixture:
    r = Rpes.build({"a", "b", "c"}, (), lt={("a", "b"), ("a", "c")}, conf={("c", "b")})
    return Fixture(FixtureId.PES1, r, "a<b, a<c, c♯b")


def _aes2() -> Fixture:
    r = Raes({"a", "b", "c"}, (), cau={("a", fwd("b"))}, prec={(fwd("a"), "b"), (fwd("b"), "c")})
    return Fixture(
        FixtureId.AES2,
        r,
        "a<b, b⊲c",
        notes=("a ⊲ b is added: causation between irreversible events implies precedence",),
    )


def _es3() -> Fixture:
    r = Res(
        {"a", "b", "c"},
        [(), {"a"}, {"b"}, {"c"}, {"a", "c"}, {"b", "c"}],
        [enabling((), (), "a"), enabling((), (), "b"), enabling({"a"}, (), "c"), enabling({"b"}, (), "c")],
    )
    return Fixture(FixtureId.ES3, r, "Con={∅,{a},{b},{a,c},{b,c}}, ∅⊢a, ∅⊢b, {a}⊢c, {b}⊢c",
                   ("enablings carry empty preventing sets",
                    "{c} is added to Con: consistency must be left-closed and {a,c} is consistent; "
                    "c alone is never enabled, so the configurations are unchanged"))


def _rpes_a_norev() -> Fixture:
    return Fixture(FixtureId.RPES_A_NOREV, Rpes({"a", "b"}, (), lt={("a", "b")}))


_BUILDERS = {
    FixtureId.RPES_A: _rpes_a,
    FixtureId.RPES_A_NOREV: _rpes_a_norev,
    FixtureId.RPES_B: _rpes_b,
    FixtureId.COPROD: _coprod,
    FixtureId.RES0: _res0,
    FixtureId.RES1: _res1,
    FixtureId.PROD: _prod,
    FixtureId.RES_FIG4: _res_fig4,
    FixtureId.CS: _cs_fig4,
    FixtureId.CS_ONE: _cs_one,
    FixtureId.RES_ONE: _res_one,
    FixtureId.CSCOP0: _cscop0,
    FixtureId.CSCOP1: _cscop1,
    FixtureId.CSCOP: _cscop,
    FixtureId.CSP0: _csp0,
    FixtureId.CSP1: _csp1,
    FixtureId.CSPRO: _cspro,
    FixtureId.PES1: _pes1,
    FixtureId.AES2: _aes2,
    FixtureId.ES3: _es3,
}


def fixture_record(fid) -> Fixture:
    try:
        key = FixtureId(fid)
    except ValueError:
        raise UnknownFixture(fid) from None
    return _BUILDERS[key]()


def fixture(fid):
    """Return the structure of a named fixture."""
    return fixture_record(fid).structure


def all_fixtures() -> list[Fixture]:
    return [fixture_record(f) for f in FixtureId]

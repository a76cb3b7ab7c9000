"""Handle-number decisions from a Whitehead diagram of a spine.

The fibered test, the associated-primitive upper bound, the exhaustive
search over boundary parallel arcs (one candidate per pair of faces) and
the circular width that follows from the handle number.
"""

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import List, Optional, Sequence

from .diagram import Crossing, Diagram, DiagramError
from .free_group import (CyclicWord, PrimitivityResult, Word, WhiteheadAutomorphism,
                         is_primitive_set, letter_name, power_root, replay)
from .graph import GWGraph, SlideStep, analyze_graph, slide_loop

NO_DISK = "no essential disk misses the spine"
NOT_NEIGHBOURHOOD = "disconnection does not come from a neighbourhood of the spine"


@dataclass(frozen=True)
class ArcCandidate:
    """A boundary parallel arc joining two faces along a dual path."""

    id: int
    faces: tuple
    path: tuple
    around_vertex: Optional[int] = None

    @property
    def length(self) -> int:
        return len(self.path)

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "faces": list(self.faces),
            "length": self.length,
            "crossed": [c.edge for c in self.path],
            "around": letter_name(self.around_vertex) if self.around_vertex else None,
        }


def _around(d: Diagram, path) -> Optional[int]:
    common = None
    for c in path:
        ends = {d.where[(c.edge, 0)][0], d.where[(c.edge, 1)][0]}
        common = ends if common is None else common & ends
    if not common:
        return None
    return min(common, key=lambda v: 2 * (abs(v) - 1) + (v < 0))


def make_candidate(d: Diagram, path: Sequence[Crossing], cid: int = 0) -> ArcCandidate:
    path = tuple(path)
    if not path:
        raise DiagramError("empty drill path")
    return ArcCandidate(cid, (path[0].src, path[-1].dst), path, _around(d, path))


def enumerate_arcs(d: Diagram) -> List[ArcCandidate]:
    """One candidate per unordered pair of distinct faces, shortest paths."""
    n = len(d.faces())
    out = []
    for a, b in combinations(range(n), 2):
        path = d.shortest_path(a, b)
        out.append(ArcCandidate(len(out), (a, b), tuple(path), _around(d, path)))
    return out


@dataclass
class ArcResult:
    candidate: ArcCandidate
    ok: bool
    reason: str
    drilled: List[Word]
    steps: List[SlideStep]
    terminal: GWGraph
    primitivity: PrimitivityResult

    @property
    def trace(self) -> List[WhiteheadAutomorphism]:
        return [s.automorphism for s in self.steps] + list(self.primitivity.trace)

    def to_dict(self) -> dict:
        simple = self.terminal.simple()
        return {
            "arc": self.candidate.to_dict(),
            "ok": self.ok,
            "reason": self.reason,
            "drilled": [str(w) for w in self.drilled],
            "slides": [s.automorphism.to_dict() for s in self.steps],
            "terminal": {
                "edges": self.terminal.summary(),
                "connected": self.terminal.is_connected(),
                "cut_vertices": [self.terminal.name(v) for v in self.terminal.cut_vertices()],
                "simple_edges": len(simple.edges),
                "simple_degrees": list(simple.degree_sequence()),
            },
        }


def test_arc(d: Diagram, c: ArcCandidate) -> ArcResult:
    """Drill ``c``, slide at cut vertices, then test the spine curves.

    Success means the spine curves are associated primitive in the drilled
    handlebody; the witness is the slide trace followed by the primitivity
    trace and the basis completion.
    """
    if c.faces[0] == c.faces[1] or not c.path:
        raise DiagramError("arc joins a face to itself")
    dr = d.drill(c.path)
    _, steps, terminal = slide_loop(dr.cyclic, z_last=True)
    for s in steps:
        if s.complexity_after >= s.complexity_before:
            raise AssertionError("slide did not reduce complexity")
    slid = replay([s.automorphism for s in steps], dr.based)
    prim = is_primitive_set(slid, d.rank + 1)
    if prim.ok:
        reason = ""
    elif terminal.is_connected() and not terminal.cut_vertices():
        reason = NO_DISK
    else:
        reason = NOT_NEIGHBOURHOOD
    return ArcResult(c, prim.ok, reason, dr.based, steps, terminal, prim)


def verify_arc_witness(r: ArcResult) -> bool:
    """Replay the recorded trace on the drilled words."""
    return _single_generators(replay(r.trace, r.drilled))


def _single_generators(words) -> bool:
    gens = [w.letters[0] for w in words if len(w) == 1]
    return len(gens) == len(words) and len({abs(a) for a in gens}) == len(gens)


def verify_witness(report: "HandleReport", rank: int) -> bool:
    """Replay a report's witness from its JSON form.

    The trace must carry every element of the recorded basis to a
    distinct generator; for an arc witness the rank is one higher.
    """
    w = report.witness
    if w is None:
        return False
    r = rank + 1 if w.get("arc") else rank
    trace = [WhiteheadAutomorphism.from_dict(a, r) for a in w["trace"]]
    basis = [Word.parse(s, r) for s in w["basis"]]
    return len(basis) == r and _single_generators(replay(trace, basis))


def arc_basis(r: ArcResult) -> List[Word]:
    """The drilled curves completed to a basis of the drilled group."""
    rank = r.drilled[0].rank
    images = replay(r.trace, r.drilled)
    used = {abs(w.letters[0]) for w in images}
    back = [a.inverse() for a in reversed(r.trace)]
    rest = [Word((g,), rank) for g in range(1, rank + 1) if g not in used]
    return list(r.drilled) + replay(back, rest)


@dataclass
class HandleReport:
    fibered: Optional[bool]
    h_lower: int
    h_upper: int
    witness: Optional[dict] = None
    cw: object = None
    assumptions: List[str] = field(default_factory=list)
    per_arc: List[dict] = field(default_factory=list)
    arcs_tested: int = 0

    @property
    def h(self) -> Optional[int]:
        return self.h_lower if self.h_lower == self.h_upper else None

    def to_dict(self, per_arc: bool = True) -> dict:
        cw = list(self.cw) if isinstance(self.cw, tuple) else self.cw
        out = {
            "schema": 1,
            "fibered": self.fibered,
            "h_lower": self.h_lower,
            "h_upper": self.h_upper,
            "witness": self.witness,
            "cw": cw,
            "assumptions": list(self.assumptions),
            "arcs_tested": self.arcs_tested,
        }
        out["per_arc"] = list(self.per_arc) if per_arc else []
        return out

    def to_json(self, per_arc: bool = True) -> str:
        return json.dumps(self.to_dict(per_arc), indent=2, sort_keys=True)

    def summary(self) -> str:
        if self.fibered:
            return "fibered h=0"
        h = "h=%d" % self.h if self.h is not None else "h in [%d,%d]" % (self.h_lower, self.h_upper)
        cw = self.cw
        if isinstance(cw, (list, tuple)):
            cw = "(" + ",".join(str(x) for x in cw) + ")"
        return "%s cw=%s" % (h, cw)


def _basis_witness(words, res: PrimitivityResult, idx=None) -> dict:
    """``words`` are the curves in the witness, ``idx`` their positions."""
    return {
        "arc": None,
        "curves": list(idx) if idx is not None else list(range(len(words))),
        "trace": [a.to_dict() for a in res.trace],
        "basis": [str(w) for w in res.basis(words)],
    }


def largest_primitive_subset(words: Sequence[Word], rank: int):
    """Largest subset of curves that is associated primitive.

    Subsets are tried by decreasing size, in lexicographic order, so the
    first hit is canonical.  Returns ``(indices, result)``.
    """
    n = len(words)
    for k in range(min(n, rank), 0, -1):
        for idx in combinations(range(n), k):
            res = is_primitive_set([words[i] for i in idx], rank)
            if res.ok:
                return idx, res
    return (), None


def circular_width(h: int, rank: int, components: int = 1):
    """Circular width for a non-fibered knot given its handle number.

    With one handle the thin level is the free surface: cw = 2 * rank, plus
    one for a two component link.  With two handles on a genus one surface
    cw = 6.  Otherwise only the possible values are known.
    """
    if h == 1:
        return 2 * rank + (1 if components > 1 else 0)
    if h == 2 and rank == 2:
        return 6
    return None


def decide(d: Diagram, assumptions: Sequence[str] = (), components: int = 1,
           search: Optional[bool] = None, words: Optional[Sequence[Word]] = None) -> HandleReport:
    """Fibered test, upper bound, optional one-handle search and cw.

    ``words`` overrides the based curves read from ``d`` (the diagram is
    still used for the arc search).  ``search`` forces the arc search on
    or off; by default it runs for genus one spines whose bound is 2.
    """
    words = list(words) if words is not None else d.based_words()
    rank = d.rank
    assumptions = list(assumptions)
    if len(words) > rank:
        raise ValueError("more curves than the rank")
    if len(words) == rank:
        full = is_primitive_set(words, rank)
        if full.ok:
            return HandleReport(True, 0, 0, _basis_witness(words, full), None, assumptions)
    if not any("not fibered" in a for a in assumptions):
        assumptions.append("the knot is not fibered (external result)")
    idx, res = largest_primitive_subset(words, rank)
    ell = len(idx)
    h_upper = rank - ell
    if res is None:
        # the empty set of curves: the standard basis completes it
        res = PrimitivityResult(True, rank, completion=[Word((g,), rank) for g in range(1, rank + 1)])
    witness = _basis_witness([words[i] for i in idx], res, idx)
    report = HandleReport(False, 1, h_upper, witness, None, assumptions)
    run_search = search if search is not None else (rank == 2 and h_upper > 1)
    if run_search:
        results = [test_arc(d, c) for c in enumerate_arcs(d)]
        report.arcs_tested = len(results)
        report.per_arc = [r.to_dict() for r in results]
        hits = [r for r in results if r.ok]
        if hits:
            r = hits[0]
            report.h_upper = 1
            report.witness = {
                "arc": r.candidate.to_dict(),
                "curves": list(range(len(words))),
                "drilled": [str(w) for w in r.drilled],
                "trace": [a.to_dict() for a in r.trace],
                "basis": [str(w) for w in arc_basis(r)],
            }
        elif rank == 2:
            report.h_lower = 2
            report.h_upper = 2
            report.assumptions.append(
                "every boundary parallel arc is isotopic to a face-pair arc of this diagram")
            report.assumptions.append("handle number of a genus one free surface is at most 2")
    if report.h_lower == report.h_upper:
        if report.h_lower == 2:
            report.assumptions.append("the free genus one surface is the unique incompressible Seifert surface")
        report.cw = circular_width(report.h_lower, rank, components)
    if report.cw is None:
        report.cw = [4, 6, "(4,...,4)"]
    return report


@dataclass
class PowerCheck:
    curve: int
    root: str
    exponent: int
    root_primitive: bool

    @property
    def flagged(self) -> bool:
        return self.exponent >= 2 and self.root_primitive

    def to_dict(self) -> dict:
        return {
            "curve": self.curve,
            "root": self.root,
            "exponent": self.exponent,
            "root_primitive": self.root_primitive,
            "flagged": self.flagged,
        }


def power_of_primitive_check(words: Sequence) -> dict:
    """Which curves are proper powers of primitive elements.

    This is only the algebraic half of the criterion: whether the other
    curve spoils the disks of the first is not checked.
    """
    rows = []
    for i, w in enumerate(words):
        cw = w if isinstance(w, CyclicWord) else CyclicWord(w.letters, w.rank)
        if not len(cw):
            rows.append(PowerCheck(i, "1", 0, False))
            continue
        root, n = power_root(cw)
        prim = is_primitive_set([root.as_word()], cw.rank).ok
        rows.append(PowerCheck(i, str(root), n, prim))
    return {
        "curves": [r.to_dict() for r in rows],
        "flagged": [r.curve for r in rows if r.flagged],
        "unverified": "disk spoiling condition not checked",
    }

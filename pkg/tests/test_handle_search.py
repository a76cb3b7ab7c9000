import json

import pytest

from handlenum.diagram import DiagramError
from handlenum.families import RationalKnot, pretzel_diagram, pretzel_normalize, rational_diagram
from handlenum.free_group import CyclicWord, Word
from handlenum.handle_search import (NO_DISK, NOT_NEIGHBOURHOOD, ArcCandidate, circular_width, decide,
                                     enumerate_arcs, largest_primitive_subset,
                                     power_of_primitive_check, test_arc as run_arc,
                                     verify_arc_witness, verify_witness)


def W(s):
    return Word.parse(s, 2)


def test_candidates_are_face_pairs():
    d = pretzel_diagram(pretzel_normalize(5, 5, 5))
    arcs = enumerate_arcs(d)
    F = len(d.faces())
    assert len(arcs) == F * (F - 1) // 2
    assert all(a.length >= 1 for a in arcs)
    assert [a.id for a in arcs] == list(range(len(arcs)))


def test_arc_to_same_face_rejected():
    d = pretzel_diagram(pretzel_normalize(5, 5, 5))
    a = enumerate_arcs(d)[0]
    with pytest.raises(DiagramError):
        run_arc(d, ArcCandidate(0, (1, 1), a.path))


def test_verdict_does_not_depend_on_order():
    d = pretzel_diagram(pretzel_normalize(3, 5, 5))
    arcs = enumerate_arcs(d)
    forward = [run_arc(d, a).ok for a in arcs]
    backward = [run_arc(d, a).ok for a in reversed(arcs)][::-1]
    assert forward == backward
    assert any(forward)


def test_failing_arc_reason():
    d = pretzel_diagram(pretzel_normalize(5, 5, 5))
    arcs = enumerate_arcs(d)
    short = run_arc(d, arcs[0])
    assert short.candidate.length == 1 and not short.terminal.is_connected()
    assert short.reason == NOT_NEIGHBOURHOOD
    two = run_arc(d, next(a for a in arcs if a.length == 2))
    assert not two.ok and two.reason == NO_DISK


def test_successful_arc_replays():
    d = rational_diagram(RationalKnot((2, 1)))
    hits = [run_arc(d, a) for a in enumerate_arcs(d)]
    hits = [r for r in hits if r.ok]
    assert hits
    assert all(verify_arc_witness(r) for r in hits)


def test_fibered_skips_search():
    d = rational_diagram(RationalKnot((1, -1)))
    r = decide(d)
    assert r.fibered and r.h_upper == 0 and r.arcs_tested == 0


def test_rational_4_2_search_finds_arc():
    d = rational_diagram(RationalKnot((2, 1)))
    r = decide(d, search=True)
    assert r.h == 1 and r.witness["arc"] is not None
    assert verify_witness(r, 2)


def test_report_json_schema():
    r = decide(pretzel_diagram(pretzel_normalize(5, 5, 5)))
    data = json.loads(r.to_json())
    assert data["schema"] == 1
    assert set(data) >= {"fibered", "h_lower", "h_upper", "witness", "cw", "assumptions", "per_arc"}
    assert data["h_lower"] == data["h_upper"] == 2
    assert any("face-pair" in a for a in data["assumptions"])


def test_largest_subset():
    idx, res = largest_primitive_subset([W("x1 x1"), W("x2 x1")], 2)
    assert idx == (1,) and res.ok


def test_circular_width_values():
    assert circular_width(1, 2) == 4
    assert circular_width(1, 3, components=2) == 7
    assert circular_width(2, 2) == 6
    assert circular_width(2, 3) is None


def test_power_of_primitive():
    flagged = power_of_primitive_check([CyclicWord.parse("x2 x1 x2 x1", 2), W("x1")])
    assert flagged["flagged"] == [0]
    assert flagged["curves"][0]["exponent"] == 2
    plain = power_of_primitive_check([W("x2 x2 x2 X1 X1"), W("x1 x1 x1 x2 x1 x2 x1")])
    assert plain["flagged"] == []
    comm = power_of_primitive_check([W("x1 x2 X1 X2")])
    assert comm["curves"][0]["root_primitive"] is False

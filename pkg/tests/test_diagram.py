import pytest

from handlenum.diagram import Diagram, DiagramError, fill, from_words, occurrences
from handlenum.families import (RationalKnot, pretzel_diagram, pretzel_normalize,
                                rational_diagram)
from handlenum.free_group import Word
from handlenum.graph import genuine_graph

SIMPLE = """\
rank 1
curves a
vertex x1: e.0
vertex X1: e.1
edge e a
"""


def test_parse_single_edge():
    d = Diagram.from_text(SIMPLE)
    assert [str(w) for w in d.based_words()] == ["x1"]
    assert d.counts() == (2, 1, 1)


def test_text_roundtrip():
    d = pretzel_diagram(pretzel_normalize(5, 5, 5))
    again = Diagram.from_text(d.to_text())
    assert again.based_words() == d.based_words()
    assert again.counts() == d.counts()


def test_basepoint_shorthand():
    d = pretzel_diagram(pretzel_normalize(3, 5, 5))
    text = d.to_text().replace(
        [l for l in d.to_text().splitlines() if l.startswith("basepoint")][0],
        "basepoint e1_1 e2_1")
    assert Diagram.from_text(text).based_words() == d.based_words()


@pytest.mark.parametrize("text, msg", [
    (SIMPLE.replace("vertex X1: e.1\n", ""), "not on any vertex"),
    (SIMPLE.replace("e.1", "e.0"), "used twice"),
    ("rank 1\ncurves a\nvertex x1: e.0 e.1\nedge e a\n", "loop"),
    ("curves a\n", "missing rank"),
    (SIMPLE + "bogus 1\n", "unknown keyword"),
])
def test_malformed(text, msg):
    with pytest.raises(DiagramError, match=msg):
        Diagram.from_text(text)


def test_nonplanar_rotation_rejected():
    words = [Word((2, 2, 2, -1, -1), 2), Word((1, 1, 1, 2, 1, 2, 1), 2)]
    order = {1: list(range(3, 5)) + list(range(5, 8)) + [9, 11],
             2: [0, 1, 2, 8, 10]}
    with pytest.raises(DiagramError, match="not planar"):
        from_words(words, order, [(0, 1), (1, 1), (0, -1), (1, -1)])


def test_occurrences():
    assert occurrences([Word((1, -2), 2)]) == [(0, 0, 1), (0, 1, 2)]


def test_trace_matches_graph():
    for d in (pretzel_diagram(pretzel_normalize(7, 9, 9)),
              rational_diagram(RationalKnot((2, -3, 1)))):
        assert genuine_graph(d.trace_words(), d.rank).summary() == d.graph().summary()


def test_drill_grows_rank_and_faces():
    d = pretzel_diagram(pretzel_normalize(5, 5, 5))
    V, E, F = d.counts()
    path = d.shortest_path(0, 7)
    dr = d.drill(path)
    assert dr.based[0].rank == 3
    V2, E2, F2 = dr.diagram.counts()
    assert V2 - E2 + F2 == 2
    assert F2 == F + len(path) - 2
    assert fill(dr.based) == d.based_words()


def test_drill_empty_path():
    d = pretzel_diagram(pretzel_normalize(5, 5, 5))
    with pytest.raises(DiagramError):
        d.drill([])


def test_faces_cover_every_side_twice():
    d = rational_diagram(RationalKnot((2, 2, 2)))
    sides = sum(len(f.walk) for f in d.faces())
    assert sides == 2 * d.counts()[1]

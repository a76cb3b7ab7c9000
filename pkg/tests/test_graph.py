import pytest
from hypothesis import given, strategies as st

from handlenum.free_group import CyclicWord, replay
from handlenum.graph import analyze_graph, genuine_graph, slide, slide_loop

from strategies import cyclic_words


def C(s, rank=2):
    return CyclicWord.parse(s, rank)


def test_edges_from_cyclic_subwords():
    G = genuine_graph([C("x1 x2")])
    assert G.summary() == {"x1-X2": 1, "X1-x2": 1}
    assert G.complexity() == 4


def test_single_letter_word():
    G = genuine_graph([C("x2")])
    assert G.summary() == {"x2-X2": 1}


def test_empty_word_rejected():
    with pytest.raises(ValueError):
        genuine_graph([CyclicWord((), 2)])


def test_cut_vertex_and_slide():
    ws = [C("x2 x2 x2 X1")]
    G = genuine_graph(ws)
    assert G.is_connected()
    v = G.cut_vertices()[0]
    comp = next(c for c in G.components(drop=v) if -v not in c)
    new, aut = slide(ws, v, comp)
    assert sum(map(len, new)) < 4


def test_slide_rejects_non_cut_vertex():
    ws = [C("x1 x2 X1 X2")]
    with pytest.raises(ValueError):
        slide(ws, 1, [2])


def test_commutator_has_no_cut_vertex():
    a = analyze_graph(genuine_graph([C("x1 x2 X1 X2")]))
    assert a.connected and not a.cut_vertices


def test_export_lists_every_edge():
    text = genuine_graph([C("x1 x2")]).export()
    assert text.count("edge") == 2
    assert text.startswith("nodes x1 X1 x2 X2")


@given(st.lists(cyclic_words(3, 8), min_size=1, max_size=2))
def test_multigraph_and_simple_graph_agree(ws):
    analyze_graph(genuine_graph(ws, 3))


@given(st.lists(cyclic_words(3, 8), min_size=1, max_size=2))
def test_slide_loop_strictly_decreases(ws):
    out, steps, G = slide_loop(ws)
    for s in steps:
        assert s.complexity_after < s.complexity_before
    assert replay([s.automorphism for s in steps], ws) == out
    assert not G.is_connected() or not G.cut_vertices()


@given(cyclic_words(2, 10))
def test_valence_counts(w):
    G = genuine_graph([w])
    assert sum(G.valence(v) for v in G.vertices) == G.complexity()
    assert G.valence(1) == G.valence(-1)

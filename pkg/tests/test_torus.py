from math import gcd

import pytest
from hypothesis import assume, given, strategies as st

from handlenum.diagram import Diagram
from handlenum.graph import genuine_graph
from handlenum.torus import (TorusError, build_diagram, canonical_handle, cf_expand,
                             compare_words, drill_canonical, euclid_slide, numbering_q,
                             stage_diagram)


def test_cf_examples():
    cf = cf_expand(19, 12)
    assert cf.terms == (1, 1, 1, 2, 2)
    assert cf.convergent(4) == (8, 5)
    assert cf.beta == (8, 5)
    assert cf_expand(9, 4).terms == (2, 4)
    assert cf_expand(9, 4).beta == (2, 1)
    assert cf_expand(11, 1).terms == (11,)


@pytest.mark.parametrize("p, q", [(6, 4), (5, 5), (5, 0), (3, 7)])
def test_cf_rejects(p, q):
    with pytest.raises(TorusError):
        cf_expand(p, q)


@given(st.integers(2, 400), st.integers(1, 399))
def test_convergent_identities(p, q):
    assume(q < p and gcd(p, q) == 1)
    cf = cf_expand(p, q)
    for i in range(0, cf.n + 1):
        pi, qi = cf.convergent(i)
        pj, qj = cf.convergent(i - 1)
        assert pi * qj - pj * qi == (-1) ** i
    assert cf.convergent(cf.n) == (p, q)
    assert all(k >= 1 for k in cf.terms)
    if cf.n >= 2:
        assert cf.terms[-1] >= 2
    r, s = cf.beta_pair(3)
    assert (r, s) == (cf.beta[0] + 3 * p, cf.beta[1] + 3 * q)


def test_alpha_only_diagram_reads_power():
    t = build_diagram(9, 4, with_beta=False)
    assert [str(w) for w in t.diagram.based_words()] == ["x1 " * 8 + "x1"]


def test_19_12_layout():
    t = build_diagram(19, 12)
    assert len(t.alpha_edges()) == 19
    assert len(t.beta_edges()) == 8
    halves = {e for e, _ in t.diagram.basepoint}
    assert halves == {t.infinity, "be1"}
    assert t.diagram.edge_curve[t.infinity] == "alpha"


def test_infinity_side_follows_parity():
    # n even puts infinity at position q, n odd at q + 1
    assert build_diagram(9, 4).case_a
    assert not build_diagram(9, 5).case_a
    xs = [e for e, _ in build_diagram(9, 4, False).diagram.vertices[1]]
    assert xs.index("al4") == 3
    xs = [e for e, _ in build_diagram(9, 5, False).diagram.vertices[1]]
    assert xs.index("al1") == 5


def test_at_most_one_beta_between_alphas():
    for p, q in [(19, 12), (9, 4), (29, 17)]:
        d = build_diagram(p, q).diagram
        kinds = [d.edge_curve[e] for e, _ in d.vertices[1]]
        assert all(not (a == b == "beta") for a, b in zip(kinds, kinds[1:] + kinds[:1]))


@pytest.mark.parametrize("p, q", [(9, 4), (9, 5), (19, 12), (23, 7), (2, 1)])
def test_numbering_recovers_q(p, q):
    assert numbering_q(build_diagram(p, q)) == q


def test_drilled_counts_9_4():
    t = build_diagram(9, 4, with_beta=False)
    G = genuine_graph(drill_canonical(t).cyclic, 2, z_last=True)
    assert G.summary() == {"x1-X1": 5, "x1-z": 4, "X1-Z": 4}


@pytest.mark.parametrize("p", [3, 5, 8])
def test_drilled_counts_p_1(p):
    t = build_diagram(p, 1, with_beta=False)
    G = genuine_graph(drill_canonical(t).cyclic, 2, z_last=True)
    assert G.summary() == {"x1-X1": p - 1, "x1-z": 1, "X1-Z": 1}


def test_canonical_handle_starts_at_beta():
    t = build_diagram(19, 12)
    c = canonical_handle(t)
    edges = [x.edge for x in c.path]
    assert edges.count("be1") == 1
    assert "be1" in (edges[0], edges[-1])
    assert sum(t.diagram.edge_curve[e] == "alpha" for e in edges) == 12
    assert sum(t.diagram.edge_curve[e] == "beta" for e in edges) == 5


def test_canonical_drill_reads_inverse_letters():
    for p, q in [(9, 4), (9, 5), (19, 12)]:
        dr = drill_canonical(build_diagram(p, q))
        assert 2 not in dr.based[0].letters
        assert dr.based[0].letters.count(-2) == q


def test_euclid_19_12():
    tr = euclid_slide(build_diagram(19, 12))
    assert tr.stage_counts == [1, 1, 1, 2, 2]
    assert tr.terminal_shape() == {"alpha": 1, "beta": 1}
    assert tr.lines()[0].startswith("slide z along x (kappa 1/1) complexity 88")


def test_euclid_9_4_stage_one():
    tr = euclid_slide(build_diagram(9, 4))
    st1 = tr.stages[1]
    assert st1.pair == (4, 1)
    ref = drill_canonical(build_diagram(4, 1)).based
    assert compare_words(st1.words, ref) is not None


def test_euclid_q_1_single_stage():
    tr = euclid_slide(build_diagram(6, 1))
    assert tr.stage_counts == [6]
    assert tr.terminal_ok()


def test_euclid_needs_beta():
    with pytest.raises(TorusError):
        euclid_slide(build_diagram(9, 4, with_beta=False))


def test_stage_export_roundtrip():
    t = build_diagram(19, 12)
    for i in range(t.cf.n + 1):
        d = stage_diagram(t, i)
        again = Diagram.from_text(d.to_text())
        assert again.based_words() == d.based_words()
    with pytest.raises(TorusError):
        stage_diagram(t, 9)


@given(st.integers(2, 30), st.integers(1, 29))
def test_slides_strictly_decrease(p, q):
    assume(q < p and gcd(p, q) == 1)
    tr = euclid_slide(build_diagram(p, q), check_stages=False)
    for s in tr.steps:
        assert s.complexity_after < s.complexity_before
    assert tr.stage_counts == list(cf_expand(p, q).terms)

"""Torus knot diagrams on a genus one handlebody and the Euclidean slides.

The (p, q) curve alpha runs p times around the handle x.  The companion
curve beta is the (r, s) curve given by the convergent before last of the
continued fraction of p/q; it meets alpha once, at the point at infinity.
Drilling the canonical handle of length q and sliding at cut vertices
runs the Euclidean algorithm on (p, q) until both curves are single
letters.
"""

from dataclasses import dataclass, field
from itertools import permutations, product
from math import gcd
from typing import Dict, List, Optional, Tuple

from .diagram import Crossing, Diagram, DrillResult
from .free_group import CyclicWord, Word, WhiteheadAutomorphism
from .graph import GWGraph, genuine_graph
from .handle_search import ArcCandidate, make_candidate


class TorusError(ValueError):
    pass


@dataclass(frozen=True)
class ContinuedFraction:
    """``p/q = [k1, ..., kn]`` with convergents ``p_i/q_i`` for ``i = -1..n``."""

    p: int
    q: int
    terms: Tuple[int, ...]
    ps: Tuple[int, ...]
    qs: Tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.terms)

    def convergent(self, i: int) -> Tuple[int, int]:
        if not -1 <= i <= self.n:
            raise IndexError(i)
        return self.ps[i + 1], self.qs[i + 1]

    @property
    def beta(self) -> Tuple[int, int]:
        return self.convergent(self.n - 1)

    def beta_pair(self, ell: int = 0) -> Tuple[int, int]:
        """The companion pair after sliding it ``ell`` times over alpha."""
        r, s = self.beta
        return r + ell * self.p, s + ell * self.q

    def remainders(self) -> List[int]:
        """``r_1 = p, r_2 = q, r_{i+2} = r_i - k_i r_{i+1}``, ending at 0."""
        out = [self.p, self.q]
        for k in self.terms:
            out.append(out[-2] - k * out[-1])
        return out

    def beta_remainders(self) -> List[int]:
        r, s = self.beta
        out = [r, s]
        for k in self.terms:
            out.append(out[-2] - k * out[-1])
        return out

    def check(self) -> None:
        for i in range(1, self.n + 1):
            pi, qi = self.convergent(i)
            pj, qj = self.convergent(i - 1)
            if pi * qj - pj * qi != (-1) ** i:
                raise AssertionError("determinant identity fails at %d" % i)
            pk, qk = self.convergent(i - 2)
            k = self.terms[i - 1]
            if (pi, qi) != (k * pj + pk, k * qj + qk):
                raise AssertionError("recurrence fails at %d" % i)
            if i >= 2 and not pi > pj:
                raise AssertionError("convergents not increasing at %d" % i)
        if self.convergent(self.n) != (self.p, self.q):
            raise AssertionError("last convergent is not p/q")


def cf_expand(p: int, q: int) -> ContinuedFraction:
    if not (isinstance(p, int) and isinstance(q, int)) or not 0 < q < p:
        raise TorusError("need 0 < q < p, got (%r, %r)" % (p, q))
    if gcd(p, q) != 1:
        raise TorusError("p and q must be coprime")
    terms = []
    a, b = p, q
    while b:
        terms.append(a // b)
        a, b = b, a % b
    ps, qs = [0, 1], [1, 0]
    for k in terms:
        ps.append(k * ps[-1] + ps[-2])
        qs.append(k * qs[-1] + qs[-2])
    cf = ContinuedFraction(p, q, tuple(terms), tuple(ps), tuple(qs))
    cf.check()
    return cf


@dataclass
class TorusDiagram:
    p: int
    q: int
    cf: ContinuedFraction
    diagram: Diagram
    with_beta: bool

    @property
    def case_a(self) -> bool:
        # infinity sits to the right of the canonical handle when n is even
        return self.cf.n % 2 == 0

    @property
    def infinity(self) -> str:
        return self.diagram.infinity

    def alpha_edges(self) -> List[str]:
        return [e for e in self.diagram.edge_ids if self.diagram.edge_curve[e] == "alpha"]

    def beta_edges(self) -> List[str]:
        return [e for e in self.diagram.edge_ids if self.diagram.edge_curve[e] == "beta"]


def build_diagram(p: int, q: int, with_beta: bool = True) -> TorusDiagram:
    cf = cf_expand(p, q)
    n = cf.n
    r, s = cf.beta
    case_a = n % 2 == 0
    eps = 1 if n % 2 else -1
    if (r * q - eps) % p:
        raise AssertionError("companion slope does not satisfy rq = %d mod p" % eps)

    def alab(m):
        return "al%d" % (m if case_a else (m - q - 1) % p + 1)

    inf_pos = q if case_a else q % p + 1
    gaps: Dict[int, int] = {}
    if with_beta and p > 1:
        gaps[q % p or p] = 1
        for k in range(2, r + 1):
            g = (eps - (k - 2) * q) % p or p
            if g in gaps:
                raise AssertionError("two beta edges in one gap")
            gaps[g] = k
    xs, Xs = [], []
    for m in range(1, p + 1):
        xs.append((alab(m), 0))
        Xs.append((alab((m + q - 1) % p + 1), 1))
        if m in gaps:
            k = gaps[m]
            xs.append(("be%d" % k, 0))
            Xs.append(("be%d" % (k - 1 if k > 1 else r), 1))
    edges = [("al%d" % j, "alpha") for j in range(1, p + 1)]
    edges += [("be%d" % k, "beta") for k in range(1, len(gaps) + 1)]
    curves = ["alpha", "beta"] if gaps else ["alpha"]
    bp = [alab(inf_pos), "be1"] if gaps else None
    d = Diagram(1, curves, edges, {1: xs, -1: Xs}, infinity=alab(inf_pos), basepoint=bp)
    return TorusDiagram(p, q, cf, d, bool(gaps))


def numbering_q(t: TorusDiagram) -> int:
    """Recover q from the alpha endpoints alone.

    Alpha points on x and on its partner are numbered 1..p in vertex
    order; the edge leaving point 1 of x ends at point p - q + 1.
    """
    d = t.diagram
    xs = [e for e, _ in d.vertices[1] if d.edge_curve[e] == "alpha"]
    Xs = [e for e, _ in d.vertices[-1] if d.edge_curve[e] == "alpha"]
    end = Xs.index(xs[0]) + 1
    return t.p - end + 1


def canonical_handle(t: TorusDiagram) -> ArcCandidate:
    """The arc around x next to infinity that encircles q alpha edges.

    With beta present the arc first crosses the beta edge leaving the
    base point.  The arc is oriented so that drilling reads Z letters.
    """
    d = t.diagram
    rot = d.rotation[1]
    L = len(rot)
    step = -1 if t.case_a else 1
    if t.with_beta:
        i = rot.index(2 * d.edge_segments["be1"][0])
        if t.cf.beta[1] == 0:
            i += step
    else:
        i = rot.index(2 * d.edge_segments[d.infinity][0])
    path = []
    alpha = 0
    while True:
        dart = rot[i % L]
        seg = dart >> 1
        prev = rot[(i - 1) % L]
        if t.case_a:
            src, dst = d.face_of[dart], d.face_of[prev]
        else:
            src, dst = d.face_of[prev], d.face_of[dart]
        edge = d.segments[seg][0]
        path.append(Crossing(seg, edge, src, dst))
        if d.edge_curve[edge] == "alpha":
            alpha += 1
            if alpha == t.q:
                break
        i += step
        if len(path) > L:
            raise AssertionError("canonical handle did not close")
    if not t.case_a:
        path = [Crossing(c.segment, c.edge, c.dst, c.src) for c in reversed(path)]
    return make_candidate(d, path)


def drill_canonical(t: TorusDiagram) -> DrillResult:
    return t.diagram.drill(canonical_handle(t).path)


def terminal_diagram(words: List[Word]) -> Diagram:
    """Diagram of single letter curves on distinct handles, crossing at the base point."""
    rank = words[0].rank
    names = ["alpha", "beta"][:len(words)]
    edges, verts = [], {}
    for g in range(1, rank + 1):
        verts[g], verts[-g] = [], []
    for name, w in zip(names, words):
        if len(w) != 1:
            raise TorusError("terminal curves must be single letters")
        a = w.letters[0]
        e = name[:2] + "1"
        edges.append((e, name))
        verts[a].append((e, 0))
        verts[-a].append((e, 1))
    bp = [e for e, _ in edges] if len(edges) == 2 else None
    return Diagram(rank, names, edges, verts, edges[0][0], bp)


# ----------------------------------------------------------------------
# Euclidean slides


def _cyclically_reduced(w: Word) -> bool:
    s = w.letters
    return len(s) < 2 or s[0] != -s[-1]


def _type1_maps() -> List[WhiteheadAutomorphism]:
    out = []
    for perm in permutations((1, 2)):
        for sg in product((1, -1), repeat=2):
            out.append(WhiteheadAutomorphism.type1([perm[0] * sg[0], perm[1] * sg[1]], 2))
    return out


def compare_words(words: List[Word], ref: List[Word]) -> Optional[str]:
    """``"exact"`` if a relabelling of handles carries the based words to
    ``ref``, ``"cyclic"`` if it only matches conjugacy classes, else None."""
    maps = _type1_maps()
    if any([t(w) for w in words] == list(ref) for t in maps):
        return "exact"
    rc = [CyclicWord(w.letters, 2) for w in ref]
    for t in maps:
        if [CyclicWord(t(w).letters, 2) for w in words] == rc:
            return "cyclic"
    return None


def _signature(G: GWGraph):
    # edge counts per unordered pair of handles, up to swapping handles
    sigs = []
    for perm in ((1, 2), (2, 1)):
        c = {}
        for u, v, lab in G.edges:
            key = (lab, tuple(sorted((perm[abs(u) - 1] * (1 if u > 0 else -1),
                                      perm[abs(v) - 1] * (1 if v > 0 else -1)))))
            c[key] = c.get(key, 0) + 1
        sigs.append(sorted(c.items()))
    return min(sigs)


HANDLE_NAMES = {1: "x", -1: "X", 2: "z", -2: "Z"}


@dataclass
class SlideRecord:
    automorphism: WhiteheadAutomorphism
    slid: int
    along: int
    stage: int
    repeat: int
    complexity_before: int
    complexity_after: int
    graph: Dict[str, int]

    def line(self, kappa: int) -> str:
        return "slide %s along %s (kappa %d/%d) complexity %d→%d" % (
            HANDLE_NAMES[self.slid], HANDLE_NAMES[self.along],
            self.repeat, kappa, self.complexity_before, self.complexity_after)


@dataclass
class StageCheck:
    stage: int
    pair: Tuple[int, int]
    words: List[Word]
    match: str
    lengths: Tuple[int, int]


@dataclass
class SlideTrace:
    p: int
    q: int
    kappas: List[int]
    steps: List[SlideRecord] = field(default_factory=list)
    stages: List[StageCheck] = field(default_factory=list)
    start: List[Word] = field(default_factory=list)
    terminal: List[Word] = field(default_factory=list)
    terminal_graph: Optional[GWGraph] = None

    @property
    def stage_counts(self) -> List[int]:
        counts = []
        for s in self.steps:
            if s.stage > len(counts):
                counts.append(0)
            counts[-1] += 1
        return counts

    def terminal_shape(self) -> Dict[str, int]:
        return {"alpha": len(self.terminal[0]), "beta": len(self.terminal[1])}

    def terminal_ok(self) -> bool:
        a, b = self.terminal
        return len(a) == 1 and len(b) == 1 and abs(a.letters[0]) != abs(b.letters[0])

    def lines(self) -> List[str]:
        return [s.line(self.kappas[s.stage - 1]) for s in self.steps]


def _slide_options(words: List[Word]):
    cyc = [CyclicWord(w.letters, 2) for w in words]
    G = genuine_graph(cyc, 2, z_last=True)
    if not G.is_connected():
        return G, None
    before = sum(len(w) for w in words)
    for v in G.cut_vertices():
        for comp in G.components(drop=v):
            if -v in comp:
                continue
            for m in (v, -v):
                a = WhiteheadAutomorphism(2, m, frozenset(comp))
                new = [a(w) for w in words]
                if sum(len(w) for w in new) < before and all(_cyclically_reduced(w) for w in new):
                    return G, (a, new)
    raise AssertionError("no shortening slide at a cut vertex of %s" % G.summary())


def euclid_slide(t: TorusDiagram, check_stages: bool = True) -> SlideTrace:
    """Slide at cut vertices of the drilled torus diagram until it splits.

    Consecutive slides of the same handle along the same handle form a
    stage; the stage lengths are the continued fraction terms.  After
    each stage the words are compared with the drilled diagram of the
    next pair of Euclidean remainders, and the lengths of both curves are
    checked against the remainder ledgers of alpha and beta.
    """
    if not t.with_beta:
        raise TorusError("euclid_slide needs the companion curve")
    cf = t.cf
    rem = cf.remainders()
    brem = cf.beta_remainders()
    words = drill_canonical(t).based
    trace = SlideTrace(t.p, t.q, list(cf.terms), start=list(words))
    stage, repeat, last = 0, 0, None

    def close_stage(i, ws):
        la, lb = len(ws[0]), len(ws[1])
        if (la, lb) != (rem[i] + rem[i + 1], brem[i] + brem[i + 1]):
            raise AssertionError("stage %d lengths %s break the remainder ledger" % (i, (la, lb)))
        if i < cf.n:
            pair = (rem[i], rem[i + 1])
            match = "skipped"
            if check_stages:
                ref = drill_canonical(build_diagram(*pair)).based
                match = compare_words(ws, ref)
                if match is None:
                    raise AssertionError("stage %d does not match the %s diagram" % (i, pair))
                if _signature(genuine_graph([CyclicWord(w.letters, 2) for w in ws], 2)) != \
                        _signature(genuine_graph([CyclicWord(w.letters, 2) for w in ref], 2)):
                    raise AssertionError("stage %d graph differs from the %s diagram" % (i, pair))
            trace.stages.append(StageCheck(i, pair, list(ws), match, (la, lb)))

    close_stage(0, words)
    while True:
        G, opt = _slide_options(words)
        if opt is None:
            break
        a, new = opt
        slid = {abs(x) for x in a.affected}
        if len(slid) != 1:
            raise AssertionError("slide moves both handles")
        key = (slid.pop(), abs(a.multiplier))
        if key != last:
            if last is not None:
                close_stage(stage, words)
            stage += 1
            repeat = 0
            last = key
        repeat += 1
        before = 2 * sum(len(w) for w in words)
        after = 2 * sum(len(w) for w in new)
        if after >= before:
            raise AssertionError("slide did not reduce complexity")
        trace.steps.append(SlideRecord(a, key[0], key[1], stage, repeat, before, after, G.summary()))
        words = new
    close_stage(stage, words)
    trace.terminal = list(words)
    trace.terminal_graph = genuine_graph([CyclicWord(w.letters, 2) for w in words], 2, z_last=True)
    if trace.stage_counts != list(cf.terms):
        raise AssertionError("stage lengths %s differ from %s" % (trace.stage_counts, list(cf.terms)))
    if not trace.terminal_ok():
        raise AssertionError("terminal curves %s are not single letters" % [str(w) for w in words])
    return trace


def stage_diagram(t: TorusDiagram, i: int) -> Diagram:
    """Diagram the stage ``i`` words are compared with; stage 0 is the start."""
    cf = t.cf
    if not 0 <= i <= cf.n:
        raise TorusError("stage must be between 0 and %d" % cf.n)
    if i == cf.n:
        return terminal_diagram(euclid_slide(t, check_stages=False).terminal)
    rem = cf.remainders()
    return drill_canonical(build_diagram(rem[i], rem[i + 1])).diagram

"""Genuine Whitehead graphs, cut vertices and cut-vertex handle slides.

Vertices are letters: the fat vertex x_i is ``i`` and its partner is ``-i``.
A cyclic subword ``v1 v2`` contributes an edge from ``v1`` to ``v2^-1``; a
word of length one ``v`` contributes the edge ``v -- v^-1``.
"""

from collections import Counter
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from . import _kernels as K
from .free_group import CyclicWord, WhiteheadAutomorphism, letter_name


def _vkey(v):
    return K.letter_bit(v)


@dataclass(frozen=True)
class GWGraph:
    """Loopless multigraph on the fat vertices ``±1 .. ±rank``.

    ``edges`` holds ``(u, v, label)`` triples with ``u`` before ``v`` in
    letter order; ``label`` is the index of the curve the edge came from.
    ``z_last`` only affects printing: the last generator shows as z.
    """

    rank: int
    edges: Tuple[Tuple[int, int, int], ...]
    z_last: bool = False

    @property
    def vertices(self) -> List[int]:
        out = []
        for g in range(1, self.rank + 1):
            out += [g, -g]
        return out

    def name(self, v: int) -> str:
        return letter_name(v, self.rank, self.z_last)

    def valence(self, v: int) -> int:
        return sum((u == v) + (w == v) for u, w, _ in self.edges)

    def complexity(self) -> int:
        return 2 * len(self.edges)

    def edge_counts(self) -> Counter:
        return Counter((u, v) for u, v, _ in self.edges)

    def adjacency(self, drop=None) -> Dict[int, set]:
        adj = {v: set() for v in self.vertices if v != drop}
        for u, v, _ in self.edges:
            if u != drop and v != drop:
                adj[u].add(v)
                adj[v].add(u)
        return adj

    def components(self, drop=None) -> List[List[int]]:
        adj = self.adjacency(drop)
        seen = set()
        comps = []
        for s in sorted(adj, key=_vkey):
            if s in seen:
                continue
            comp = [s]
            seen.add(s)
            stack = [s]
            while stack:
                u = stack.pop()
                for w in adj[u]:
                    if w not in seen:
                        seen.add(w)
                        comp.append(w)
                        stack.append(w)
            comps.append(sorted(comp, key=_vkey))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def cut_vertices(self) -> List[int]:
        """Vertices whose removal increases the number of components."""
        base = len(self.components())
        out = []
        for v in self.vertices:
            if self.valence(v) == 0:
                continue
            if len(self.components(drop=v)) > base:
                out.append(v)
        return out

    def simple(self) -> "SimpleGraph":
        pairs = sorted({(u, v) for u, v, _ in self.edges if u != v},
                       key=lambda e: (_vkey(e[0]), _vkey(e[1])))
        return SimpleGraph(tuple(self.vertices), tuple(pairs))

    def summary(self) -> Dict[str, int]:
        """Edge counts keyed by ``"x1-X2"`` style vertex pairs."""
        out = {}
        for (u, v), n in sorted(self.edge_counts().items(),
                                key=lambda kv: (_vkey(kv[0][0]), _vkey(kv[0][1]))):
            out["%s-%s" % (self.name(u), self.name(v))] = n
        return out

    def export(self) -> str:
        """Plain node and edge list, one item per line."""
        lines = ["nodes " + " ".join(self.name(v) for v in self.vertices)]
        for u, v, lab in self.edges:
            lines.append("edge %s %s a%d" % (self.name(u), self.name(v), lab + 1))
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class SimpleGraph:
    vertices: Tuple[int, ...]
    edges: Tuple[Tuple[int, int], ...]

    def _components(self, drop=None):
        adj = {v: set() for v in self.vertices if v != drop}
        for u, v in self.edges:
            if drop not in (u, v):
                adj[u].add(v)
                adj[v].add(u)
        seen, n = set(), 0
        for s in adj:
            if s in seen:
                continue
            n += 1
            stack = [s]
            seen.add(s)
            while stack:
                u = stack.pop()
                for w in adj[u] - seen:
                    seen.add(w)
                    stack.append(w)
        return n

    def cut_vertices(self) -> List[int]:
        base = self._components()
        used = {u for e in self.edges for u in e}
        return [v for v in self.vertices if v in used and self._components(v) > base]

    def degree_sequence(self) -> Tuple[int, ...]:
        deg = Counter()
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return tuple(sorted((deg[v] for v in self.vertices), reverse=True))


def _edge(u, v, label):
    if _vkey(u) > _vkey(v):
        u, v = v, u
    return (u, v, label)


def genuine_graph(words: Sequence[CyclicWord], rank: Optional[int] = None,
                  z_last: bool = False) -> GWGraph:
    words = list(words)
    if rank is None:
        if not words:
            raise ValueError("rank needed for an empty word set")
        rank = words[0].rank
    edges = []
    for lab, w in enumerate(words):
        s = w.letters
        if not s:
            raise ValueError("empty word in genuine_graph")
        if len(s) == 1:
            edges.append(_edge(s[0], -s[0], lab))
            continue
        n = len(s)
        for k in range(n):
            edges.append(_edge(s[k], -s[(k + 1) % n], lab))
    return GWGraph(rank, tuple(edges), z_last)


@dataclass(frozen=True)
class GraphAnalysis:
    connected: bool
    cut_vertices: FrozenSet[int]
    complexity: int
    simple: SimpleGraph


def analyze_graph(G: GWGraph) -> GraphAnalysis:
    cuts = G.cut_vertices()
    simple = G.simple()
    if set(cuts) != set(simple.cut_vertices()):
        raise AssertionError("cut vertices of multigraph and simple graph disagree")
    return GraphAnalysis(G.is_connected(), frozenset(cuts), G.complexity(), simple)


def slide(words: Sequence[CyclicWord], v: int, component: Sequence[int]):
    """Slide the part of the graph in ``component`` along the handle of ``v``.

    ``component`` must be a component of the graph minus ``v`` that misses
    ``v^-1``.  The move is the type II automorphism whose affected set is
    the component; its multiplier is ``v`` or ``v^-1``, whichever shortens.
    Returns ``(new words, automorphism)``.
    """
    words = list(words)
    rank = words[0].rank
    G = genuine_graph(words, rank)
    comps = G.components(drop=v)
    comp = set(component)
    if v not in G.cut_vertices():
        raise ValueError("%s is not a cut vertex" % letter_name(v))
    if -v in comp:
        raise ValueError("component contains the partner of the cut vertex")
    if sorted(comp, key=_vkey) not in comps:
        raise ValueError("not a component of the graph minus the cut vertex")
    before = sum(len(w) for w in words)
    for mult in (v, -v):
        aut = WhiteheadAutomorphism(rank, mult, frozenset(comp))
        new = [aut(w) for w in words]
        if sum(len(w) for w in new) < before:
            return new, aut
    raise AssertionError("cut-vertex slide did not reduce complexity")


@dataclass
class SlideStep:
    vertex: int
    component: Tuple[int, ...]
    automorphism: WhiteheadAutomorphism
    complexity_before: int
    complexity_after: int


def slide_loop(words: Sequence[CyclicWord], z_last: bool = False, cap: Optional[int] = None):
    """Slide at cut vertices until the graph is disconnected or has none.

    The cut vertex is the first in letter order; among the components of
    the graph minus it that miss its partner, the first is slid.  Returns
    ``(words, steps, final graph)``.
    """
    words = list(words)
    rank = words[0].rank
    steps = []
    limit = cap if cap is not None else sum(len(w) for w in words) + 1
    while True:
        G = genuine_graph(words, rank, z_last)
        if not G.is_connected():
            return words, steps, G
        cuts = G.cut_vertices()
        if not cuts:
            return words, steps, G
        if len(steps) >= limit:
            raise RuntimeError("slide loop exceeded %d steps" % limit)
        v = cuts[0]
        comp = next(c for c in G.components(drop=v) if -v not in c)
        before = G.complexity()
        words, aut = slide(words, v, comp)
        after = 2 * sum(len(w) for w in words)
        steps.append(SlideStep(v, tuple(comp), aut, before, after))

"""Whitehead diagrams as planar maps on the boundary sphere.

A diagram has fat vertices x_i and X_i (letters ``i`` and ``-i``), each
carrying a list of edge endpoints: position k holds endpoint number k+1,
counterclockwise on x_i and clockwise on X_i, so equally numbered points
glue directly.  An endpoint is ``(edge id, end)``; every edge runs from its
end 0 to its end 1 in the direction of its curve.

Arriving at X_g along an edge and leaving from the equally numbered point
of x_g reads the letter x_g.

The base point of the spine, when given, is a node where one edge of each
listed curve passes through.  It is not a vertex of the Whitehead graph but
it is a node of the planar map, so face counts include it.
"""

from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .free_group import CyclicWord, Word, letter_name, parse_letter
from .graph import GWGraph, genuine_graph, _edge


class DiagramError(ValueError):
    pass


@dataclass(frozen=True)
class Face:
    """A face with its boundary walk of darts ``(edge id, part, forward)``."""

    id: int
    walk: Tuple[Tuple[str, int, bool], ...]

    def edges(self):
        return sorted({d[0] for d in self.walk})


@dataclass(frozen=True)
class Crossing:
    """One step of a dual path: cross segment ``segment`` from face ``src`` to ``dst``."""

    segment: int
    edge: str
    src: int
    dst: int


@dataclass
class DrillResult:
    """Words and diagram after drilling an arc; rank grows by one."""

    based: List[Word]
    cyclic: List[CyclicWord]
    graph: GWGraph
    diagram: "Diagram"


class Diagram:
    def __init__(self, rank: int, curves: Sequence[str], edges: Sequence[Tuple[str, str]],
                 vertices: Dict[int, Sequence[Tuple[str, int]]],
                 infinity: Optional[str] = None,
                 basepoint: Optional[Sequence[Tuple[str, int]]] = None):
        self.rank = rank
        self.curves = tuple(curves)
        self.edge_ids = tuple(e for e, _ in edges)
        self.edge_curve = dict(edges)
        self.vertices = {v: tuple(tuple(p) for p in pts) for v, pts in vertices.items()}
        self.infinity = infinity
        if basepoint is not None and len(basepoint) == 2 and all(
            isinstance(b, str) for b in basepoint
        ):
            basepoint = self._infer_crossing(basepoint)
        self.basepoint = tuple(basepoint) if basepoint else None
        self._validate()

    # ------------------------------------------------------------------
    # validation

    def _infer_crossing(self, pair):
        e, f = pair
        found = None
        for sign in (1, -1):
            bp = ((e, 1), (f, sign), (e, -1), (f, -sign))
            try:
                Diagram(self.rank, self.curves, [(x, self.edge_curve[x]) for x in self.edge_ids],
                        self.vertices, self.infinity, bp)
            except DiagramError:
                continue
            found = bp
            break
        if found is None:
            raise DiagramError("no crossing of %s and %s gives a planar diagram" % (e, f))
        return found

    def _validate(self):
        if self.rank < 0:
            raise DiagramError("negative rank")
        for e, c in self.edge_curve.items():
            if c not in self.curves:
                raise DiagramError("edge %s has unknown curve %s" % (e, c))
        if len(set(self.edge_ids)) != len(self.edge_ids):
            raise DiagramError("duplicate edge id")
        self.where = {}
        for v, pts in self.vertices.items():
            if v == 0 or abs(v) > self.rank:
                raise DiagramError("vertex %r out of range" % v)
            for k, (e, end) in enumerate(pts):
                if e not in self.edge_curve or end not in (0, 1):
                    raise DiagramError("bad endpoint %s.%s at %s" % (e, end, letter_name(v)))
                if (e, end) in self.where:
                    raise DiagramError("endpoint %s.%d used twice" % (e, end))
                self.where[(e, end)] = (v, k)
        for e in self.edge_ids:
            for end in (0, 1):
                if (e, end) not in self.where:
                    raise DiagramError("endpoint %s.%d is not on any vertex" % (e, end))
            if self.where[(e, 0)][0] == self.where[(e, 1)][0]:
                raise DiagramError("edge %s is a loop at %s" % (e, letter_name(self.where[(e, 0)][0])))
        for g in range(1, self.rank + 1):
            a, b = self.vertices.get(g, ()), self.vertices.get(-g, ())
            if len(a) != len(b):
                raise DiagramError("valence of %s and %s differ" % (letter_name(g), letter_name(-g)))
            for k in range(len(a)):
                (e1, n1), (e2, n2) = a[k], b[k]
                if n1 == n2:
                    raise DiagramError("gluing inconsistency at %s point %d" % (letter_name(g), k + 1))
                if self.edge_curve[e1] != self.edge_curve[e2]:
                    raise DiagramError("gluing joins two curves at %s point %d" % (letter_name(g), k + 1))
        # successor of each edge along its curve
        self.next_edge = {}
        for e in self.edge_ids:
            v, k = self.where[(e, 1)]
            self.next_edge[e] = self.vertices[-v][k][0]
        for c in self.curves:
            es = [e for e in self.edge_ids if self.edge_curve[e] == c]
            if not es:
                continue
            cyc = self._cycle(es[0])
            if len(cyc) != len(es):
                raise DiagramError("curve %s does not close into one curve" % c)
        self.base_edge = {}
        if self.basepoint:
            halves = {}
            for e, s in self.basepoint:
                if e not in self.edge_curve or s not in (1, -1) or (e, s) in halves:
                    raise DiagramError("bad base point entry %s%s" % (e, "+" if s > 0 else "-"))
                halves[(e, s)] = True
            for e, s in self.basepoint:
                if (e, -s) not in halves:
                    raise DiagramError("edge %s passes the base point only once" % e)
                c = self.edge_curve[e]
                if self.base_edge.get(c, e) != e:
                    raise DiagramError("curve %s passes the base point twice" % c)
                self.base_edge[c] = e
        if self.infinity is not None and self.infinity not in self.edge_curve:
            raise DiagramError("unknown infinity edge %s" % self.infinity)
        self._build_map()
        for comp_euler in self._component_euler():
            if comp_euler != 2:
                raise DiagramError("Euler characteristic %d, diagram is not planar" % comp_euler)

    def _cycle(self, e0):
        out = [e0]
        e = self.next_edge[e0]
        while e != e0:
            out.append(e)
            e = self.next_edge[e]
            if len(out) > len(self.edge_ids):
                break
        return out

    # ------------------------------------------------------------------
    # planar map

    def _build_map(self):
        # segments: (edge, part, tail node, head node); nodes are letters or "B"
        segs = []
        first, last = {}, {}
        for e in self.edge_ids:
            t = self.where[(e, 0)][0]
            h = self.where[(e, 1)][0]
            if self.base_edge.get(self.edge_curve[e]) == e:
                first[e] = len(segs)
                segs.append((e, 0, t, "B"))
                last[e] = len(segs)
                segs.append((e, 1, "B", h))
            else:
                first[e] = last[e] = len(segs)
                segs.append((e, 0, t, h))
        self.segments = segs
        self.edge_segments = {e: (first[e], last[e]) for e in self.edge_ids}
        rot = {}
        for v, pts in self.vertices.items():
            darts = []
            for e, end in pts:
                darts.append(2 * first[e] if end == 0 else 2 * last[e] + 1)
            rot[v] = darts if v > 0 else darts[::-1]
        if self.basepoint:
            rot["B"] = [2 * last[e] if s > 0 else 2 * first[e] + 1 for e, s in self.basepoint]
        self.rotation = rot
        pos = {}
        for node, darts in rot.items():
            for i, d in enumerate(darts):
                pos[d] = (node, i)
        self._pos = pos
        nd = 2 * len(segs)
        face_of = [-1] * nd
        walks = []
        for d0 in range(nd):
            if face_of[d0] >= 0:
                continue
            fid = len(walks)
            walk = []
            d = d0
            while face_of[d] < 0:
                face_of[d] = fid
                walk.append(d)
                d = self._face_next(d)
            walks.append(walk)
        self.face_of = face_of
        self._walks = walks

    def _head(self, d):
        s = self.segments[d >> 1]
        return s[3] if d & 1 == 0 else s[2]

    def _face_next(self, d):
        node, i = self._pos[d ^ 1]
        darts = self.rotation[node]
        return darts[(i - 1) % len(darts)]

    def _map_components(self):
        nodes = [n for n, ds in self.rotation.items() if ds]
        parent = {n: n for n in nodes}

        def find(n):
            while parent[n] != n:
                parent[n] = parent[parent[n]]
                n = parent[n]
            return n

        for _, _, t, h in self.segments:
            parent[find(t)] = find(h)
        comps = {}
        for n in nodes:
            comps.setdefault(find(n), []).append(n)
        return list(comps.values())

    def _component_euler(self):
        out = []
        for comp in self._map_components():
            cs = set(comp)
            segs = [i for i, s in enumerate(self.segments) if s[2] in cs]
            faces = {self.face_of[2 * i] for i in segs} | {self.face_of[2 * i + 1] for i in segs}
            out.append(len(comp) - len(segs) + len(faces))
        return out

    def is_connected(self) -> bool:
        return len(self._map_components()) <= 1

    def counts(self) -> Tuple[int, int, int]:
        """``(V, E, F)`` of the planar map, base point node included."""
        V = sum(1 for ds in self.rotation.values() if ds)
        return V, len(self.segments), len(self._walks) - max(0, len(self._map_components()) - 1)

    def faces(self) -> List[Face]:
        if not self.is_connected():
            raise DiagramError("faces are only enumerated for connected diagrams")
        out = []
        for fid, walk in enumerate(self._walks):
            out.append(Face(fid, tuple(
                (self.segments[d >> 1][0], self.segments[d >> 1][1], d & 1 == 0) for d in walk
            )))
        return out

    def left_face(self, seg: int) -> int:
        """Face on the left of segment ``seg`` looking along its curve."""
        return self.face_of[2 * seg]

    def right_face(self, seg: int) -> int:
        return self.face_of[2 * seg + 1]

    def dual_neighbours(self, f: int) -> List[Tuple[int, int]]:
        """``(neighbour face, segment)`` pairs, sorted by face id then segment."""
        out = set()
        for d in self._walks[f]:
            s = d >> 1
            other = self.face_of[d ^ 1]
            if other != f:
                out.add((other, s))
        return sorted(out)

    def shortest_path(self, a: int, b: int) -> List[Crossing]:
        """Breadth first dual path from face ``a`` to face ``b``.

        Neighbours are explored by increasing face id, so ties resolve to
        the smallest ids.
        """
        if a == b:
            return []
        prev = {a: None}
        queue = deque([a])
        while queue:
            f = queue.popleft()
            if f == b:
                break
            for g, s in self.dual_neighbours(f):
                if g not in prev:
                    prev[g] = (f, s)
                    queue.append(g)
        if b not in prev:
            raise DiagramError("faces %d and %d are not joined" % (a, b))
        path = []
        f = b
        while prev[f] is not None:
            g, s = prev[f]
            path.append(Crossing(s, self.segments[s][0], g, f))
            f = g
        return path[::-1]

    # ------------------------------------------------------------------
    # words

    def curve_edges(self, c: str) -> List[str]:
        """Edges of curve ``c`` in reading order, starting at the base point."""
        es = [e for e in self.edge_ids if self.edge_curve[e] == c]
        if not es:
            return []
        return self._cycle(self.base_edge.get(c, es[0]))

    def _read(self, c, inserts=None):
        inserts = inserts or {}
        es = self.curve_edges(c)
        letters = []
        for e in es:
            last = self.edge_segments[e][1]
            letters.extend(inserts.get(last, ()))
            letters.append(-self.where[(e, 1)][0])
        if es:
            first, last = self.edge_segments[es[0]]
            if first != last:
                letters.extend(inserts.get(first, ()))
        return letters

    def trace_words(self) -> List[CyclicWord]:
        return [CyclicWord(tuple(self._read(c)), self.rank) for c in self.curves if self.curve_edges(c)]

    def based_words(self) -> List[Word]:
        return [Word(tuple(self._read(c)), self.rank) for c in self.curves if self.curve_edges(c)]

    def graph(self) -> GWGraph:
        """Whitehead graph read off the edges themselves."""
        edges = []
        for e in self.edge_ids:
            u = self.where[(e, 0)][0]
            v = self.where[(e, 1)][0]
            edges.append(_edge(u, v, self.curves.index(self.edge_curve[e])))
        return GWGraph(self.rank, tuple(edges))

    def _drill_letters(self, path):
        z = self.rank + 1
        marks = {}
        for i, cr in enumerate(path, start=1):
            if cr.segment in marks:
                raise DiagramError("drill path crosses segment %d twice" % cr.segment)
            if cr.src == self.right_face(cr.segment) and cr.dst == self.left_face(cr.segment):
                letter = z
            elif cr.src == self.left_face(cr.segment) and cr.dst == self.right_face(cr.segment):
                letter = -z
            else:
                raise DiagramError("path step does not cross segment %d" % cr.segment)
            marks[cr.segment] = (i, letter)
        return marks

    def drill(self, path: Sequence[Crossing]) -> "DrillResult":
        """Drill the arc along a dual path.

        Every crossed segment gains one letter of the new generator z: a
        path crossing its curve from the curve's right to its left reads
        z, the other way Z.  Two new fat vertices are laid along the path,
        Z on its right and z on its left, numbered in path order.
        """
        if not path:
            raise DiagramError("empty drill path: the arc is not essential")
        marks = self._drill_letters(path)
        z = self.rank + 1
        inserts = {s: [m[1]] for s, m in marks.items()}
        based, cyc = [], []
        for c in self.curves:
            if not self.curve_edges(c):
                continue
            w = self._read(c, inserts)
            based.append(Word(tuple(w), z))
            cyc.append(CyclicWord(tuple(w), z))
        return DrillResult(based, cyc, genuine_graph(cyc, z, z_last=True),
                           self._drilled_diagram(marks, len(path)))

    def _drilled_diagram(self, marks, k):
        z = self.rank + 1
        verts = {v: list(pts) for v, pts in self.vertices.items()}
        zs, Zs = [None] * k, [None] * k
        edges = []
        rename = {}
        base_piece = {}
        for e in self.edge_ids:
            first, last = self.edge_segments[e]
            piece, count = e, 0
            edges.append((piece, self.edge_curve[e]))
            for s in ([first] if first == last else [first, last]):
                if s == last and first != last:
                    base_piece[e] = piece
                if s in marks:
                    i, letter = marks[s]
                    arrive, leave = (Zs, zs) if letter > 0 else (zs, Zs)
                    arrive[i - 1] = (piece, 1)
                    count += 1
                    piece = "%s/%d" % (e, count)
                    edges.append((piece, self.edge_curve[e]))
                    leave[i - 1] = (piece, 0)
            rename[e] = piece
        for v, pts in verts.items():
            verts[v] = [(rename[e], 1) if end == 1 else (e, end) for e, end in pts]
        verts[z] = zs
        verts[-z] = Zs
        bp = None
        if self.basepoint:
            bp = [(base_piece[e], s) for e, s in self.basepoint]
        inf = self.infinity
        if inf is not None:
            inf = base_piece.get(inf, inf)
        return Diagram(z, self.curves, edges, verts, inf, bp)

    # ------------------------------------------------------------------
    # text format

    def to_text(self) -> str:
        lines = ["rank %d" % self.rank, "curves " + " ".join(self.curves)]
        for g in range(1, self.rank + 1):
            for v in (g, -g):
                pts = " ".join("%s.%d" % p for p in self.vertices.get(v, ()))
                lines.append(("vertex %s: %s" % (letter_name(v), pts)).rstrip())
        for e in self.edge_ids:
            lines.append("edge %s %s" % (e, self.edge_curve[e]))
        if self.infinity is not None:
            lines.append("infinity %s" % self.infinity)
        if self.basepoint:
            lines.append("basepoint " + " ".join(
                "%s%s" % (e, "+" if s > 0 else "-") for e, s in self.basepoint))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Diagram":
        rank = None
        curves = []
        edges = []
        vertices = {}
        infinity = None
        basepoint = None
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            head, _, rest = line.partition(" ")
            toks = rest.split()
            try:
                if head == "rank":
                    rank = int(toks[0])
                elif head == "curves":
                    curves = toks
                elif head == "vertex":
                    name, _, pts = rest.partition(":")
                    v = parse_letter(name.strip(), rank)
                    lst = []
                    for p in pts.split():
                        e, _, end = p.rpartition(".")
                        lst.append((e, int(end)))
                    vertices[v] = lst
                elif head == "edge":
                    edges.append((toks[0], toks[1]))
                elif head == "infinity":
                    infinity = toks[0]
                elif head == "basepoint":
                    if all(t[-1] in "+-" for t in toks):
                        basepoint = [(t[:-1], 1 if t[-1] == "+" else -1) for t in toks]
                    elif len(toks) == 2:
                        basepoint = toks
                    elif len(toks) == 3:
                        s = int(toks[2])
                        basepoint = [(toks[0], 1), (toks[1], s), (toks[0], -1), (toks[1], -s)]
                    else:
                        raise ValueError("bad basepoint line")
                else:
                    raise ValueError("unknown keyword %r" % head)
            except (ValueError, IndexError, TypeError) as exc:
                raise DiagramError("line %d: %s" % (lineno, exc)) from None
        if rank is None:
            raise DiagramError("missing rank line")
        return cls(rank, curves, edges, vertices, infinity, basepoint)


def fill(words, rank: Optional[int] = None):
    """Kill the last generator z and reduce; rank drops by one."""
    words = list(words)
    if not words:
        return []
    z = words[0].rank if rank is None else rank
    out = []
    for w in words:
        kept = tuple(a for a in w.letters if abs(a) != z)
        out.append(type(w)(kept, z - 1))
    return out


def from_words(words: Sequence[Word], orders: Dict[int, Sequence[int]],
               base_rotation: Optional[Sequence[Tuple[int, int]]] = None,
               labels: Optional[Sequence[str]] = None) -> Diagram:
    """Build a diagram whose curves read the given based words.

    Edge ``e<c>_<k>`` of curve c arrives to read letter k (1-based) and
    edge ``e<c>_1`` carries the base point.  ``orders[g]`` lists letter
    occurrences of generator g, as indices into :func:`occurrences`, in
    the counterclockwise order of their points on x_g.  ``base_rotation``
    lists ``(curve index, +1 or -1)`` half-edges around the base point.
    """
    rank = words[0].rank
    labels = list(labels or ["a%d" % (i + 1) for i in range(len(words))])
    occ = occurrences(words)
    edges = []
    for ci, w in enumerate(words):
        for k in range(len(w)):
            edges.append(("e%d_%d" % (ci + 1, k + 1), labels[ci]))
    vertices = {}
    for g in range(1, rank + 1):
        xs, Xs = [], []
        for o in orders.get(g, ()):
            ci, k, _ = occ[o]
            n = len(words[ci])
            arr = "e%d_%d" % (ci + 1, k + 1)
            dep = "e%d_%d" % (ci + 1, (k + 1) % n + 1)
            if words[ci].letters[k] > 0:
                Xs.append((arr, 1))
                xs.append((dep, 0))
            else:
                xs.append((arr, 1))
                Xs.append((dep, 0))
        vertices[g] = xs
        vertices[-g] = Xs
    bp = None
    if base_rotation is not None:
        bp = [("e%d_1" % (ci + 1), s) for ci, s in base_rotation]
    return Diagram(rank, labels, edges, vertices, None, bp)


def occurrences(words: Sequence[Word]) -> List[Tuple[int, int, int]]:
    """All letter occurrences ``(curve, position, generator)`` in order."""
    out = []
    for ci, w in enumerate(words):
        for k, a in enumerate(w.letters):
            out.append((ci, k, abs(a)))
    return out

"""Rational knots [2b1, ..., 2bg] and pretzel knots P(p, q, r).

Each family has a spine (words in the free group of the exterior of the
free surface), a planar diagram realizing the spine, and a classifier
that hands both to :func:`handle_search.decide`.
"""

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .diagram import Diagram, from_words, occurrences
from .free_group import Word
from .handle_search import HandleReport, decide


class FamilyError(ValueError):
    pass


NOT_FIBERED_RATIONAL = "rational knot with some |b_i| > 1 is not fibered (external result)"
NOT_FIBERED_PRETZEL = "pretzel knot with odd parameters of size at least 3 is not fibered (external result)"


# ----------------------------------------------------------------------
# rational knots


@dataclass(frozen=True)
class RationalKnot:
    b: Tuple[int, ...]

    def __post_init__(self):
        if not self.b:
            raise FamilyError("need at least one coefficient")
        if any(not isinstance(x, int) or x == 0 for x in self.b):
            raise FamilyError("coefficients must be nonzero integers")

    @classmethod
    def from_fraction(cls, terms: Sequence[int]) -> "RationalKnot":
        """Build from the even continued fraction terms ``2b_i``."""
        if any(t % 2 for t in terms):
            raise FamilyError("continued fraction terms must be even")
        return cls(tuple(t // 2 for t in terms))

    @property
    def g(self) -> int:
        return len(self.b)

    @property
    def connected(self) -> bool:
        return self.g % 2 == 0

    @property
    def fibered(self) -> bool:
        return all(abs(x) == 1 for x in self.b)

    def __str__(self):
        return "[" + ",".join(str(2 * x) for x in self.b) + "]"


def rational_spine(k: RationalKnot) -> List[Word]:
    g = k.g
    words = []
    for i, b in enumerate(k.b, start=1):
        letters = [i if b > 0 else -i] * abs(b)
        if i > 1:
            letters.append(i - 1)
        words.append(Word(tuple(letters), g))
    return words


def _rational_rotation(g: int):
    if g == 1:
        return [(0, 1), (0, -1)]
    rot = [(0, 1), (1, -1), (0, -1), (g - 1, 1)]
    for i in range(g - 2, 0, -1):
        rot += [(i, 1), (i + 1, -1)]
    return rot


def rational_diagram(k: RationalKnot) -> Diagram:
    """The spine drawn on the boundary of its exterior.

    Points on x_i: the letters of a_i in order, then the trailing
    x_i of a_(i+1).
    """
    words = rational_spine(k)
    idx = {(c, pos): n for n, (c, pos, _) in enumerate(occurrences(words))}
    orders = {}
    for i in range(k.g):
        pts = [idx[(i, pos)] for pos in range(abs(k.b[i]))]
        if i + 1 < k.g:
            pts.append(idx[(i + 1, len(words[i + 1]) - 1)])
        orders[i + 1] = pts
    return from_words(words, orders, _rational_rotation(k.g))


def rational_classify(k: RationalKnot) -> HandleReport:
    d = rational_diagram(k)
    assumptions = [] if k.fibered else [NOT_FIBERED_RATIONAL]
    report = decide(d, assumptions, components=1 if k.connected else 2, search=False)
    if report.fibered != k.fibered:
        raise AssertionError("fibered test disagrees with the coefficients of %s" % k)
    return report


# ----------------------------------------------------------------------
# pretzel knots


@dataclass(frozen=True)
class PretzelKnot:
    p: int
    q: int
    r: int

    @property
    def case(self) -> int:
        return 1 if self.p > 0 else 2

    @property
    def params(self) -> Tuple[int, int, int]:
        return (self.p, self.q, self.r)

    def __str__(self):
        return "P(%d,%d,%d)" % self.params


def pretzel_normalize(p: int, q: int, r: int) -> PretzelKnot:
    """Canonical representative up to reflection and permutation.

    Reflection flips every sign, so at most one parameter is negative
    afterwards.  A negative parameter goes first; the rest are sorted
    increasingly, which puts a 3 first when there is one.
    """
    vals = [p, q, r]
    for v in vals:
        if not isinstance(v, int) or v % 2 == 0:
            raise FamilyError("pretzel parameters must be odd, got %r" % (v,))
        if abs(v) < 3:
            raise FamilyError("pretzel parameters must have size at least 3, got %d" % v)
    if sum(v < 0 for v in vals) >= 2:
        vals = [-v for v in vals]
    neg = [v for v in vals if v < 0]
    if len(neg) > 1:
        raise FamilyError("sign pattern %s is outside the two supported cases" % (vals,))
    pos = sorted(v for v in vals if v > 0)
    if neg:
        return PretzelKnot(neg[0], pos[0], pos[1])
    return PretzelKnot(*pos)


def pretzel_spine(k: PretzelKnot) -> List[Word]:
    p, q, r = k.params
    m = (r + 1) // 2
    if k.case == 1:
        a1 = [2] * m + [-1] * ((p - 1) // 2)
        a2 = [1] * ((p + 1) // 2) + [2, 1] * ((q - 1) // 2)
    else:
        a1 = [2] * m + [1] * ((-p + 1) // 2)
        a2 = [-1] * ((-p - 3) // 2) + [2, 1] * ((q - 3) // 2) + [2]
    return [Word(tuple(a1), 2), Word(tuple(a2), 2)]


def _pretzel_case1(k: PretzelKnot):
    p, q, r = k.params
    m, h, t = (r + 1) // 2, (p - 1) // 2, (q - 1) // 2
    words = pretzel_spine(k)
    A = lambda j: j - 1
    B = lambda j: len(words[0]) + j - 1
    x1 = [A(m + 1)] + [B(h + 1 + 2 * i) for i in range(t + 1)] + [B(1)]
    for i in range(h - 1):
        x1 += [A(m + h - i), B(2 + i)]
    x2 = [A(j) for j in range(1, m + 1)] + [B(h + 2 + 2 * i) for i in range(t)]
    return words, {1: x1, 2: x2}, [(0, 1), (1, 1), (0, -1), (1, -1)]


def _pretzel_case2(k: PretzelKnot):
    p, q, r = k.params
    m, K, j, t = (r + 1) // 2, (-p + 1) // 2, (-p - 3) // 2, (q - 3) // 2
    a1, a2 = pretzel_spine(k)
    # conjugate a1 by x1 so that both curves leave a single crossing
    a1 = Word((1,) + a1.letters + (-1,), 2)
    words = [a1, a2]
    A = lambda i: i - 1
    B = lambda i: len(a1) + i - 1
    x1 = [B(j + 2 + 2 * i) for i in range(t)] + [A(1)]
    for i in range(K - 1):
        x1.append(A(m + K - i))
        if i < j:
            x1.append(B(1 + i))
    x2 = [A(i) for i in range(2, m + 2)] + [B(j + 1 + 2 * i) for i in range(t + 1)]
    return words, {1: x1, 2: x2}, [(0, 1), (1, 1), (0, -1), (1, -1)]


def pretzel_diagram(k: PretzelKnot) -> Diagram:
    """The spine of the black surface on the boundary of its exterior."""
    words, orders, rot = _pretzel_case1(k) if k.case == 1 else _pretzel_case2(k)
    d = from_words(words, orders, rot)
    spine = [w.letters for w in pretzel_spine(k)]
    from .free_group import CyclicWord
    if [CyclicWord(s, 2) for s in spine] != d.trace_words():
        raise AssertionError("diagram of %s does not read its spine" % k)
    return d


def pretzel_classify(k: PretzelKnot, search=None) -> HandleReport:
    d = pretzel_diagram(k)
    return decide(d, [NOT_FIBERED_PRETZEL], components=1, search=search)

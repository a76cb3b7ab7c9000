"""Words in free groups of finite rank and Whitehead automorphisms.

Letters are nonzero integers: ``i`` is the generator x_i and ``-i`` its
inverse.  Rank is always explicit.  Words print as whitespace separated
tokens ``x1 X1 x2 ...`` with a capital letter for an inverse.
"""

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, List, Optional, Sequence, Tuple

from . import _kernels as K


class SearchCapExceeded(RuntimeError):
    """A bounded search ran out of budget before reaching a verdict."""


def letter_name(letter: int, rank: int = 0, z_last: bool = False) -> str:
    g = abs(letter)
    if z_last and g == rank:
        name = "z"
    else:
        name = "x%d" % g
    return name if letter > 0 else name.upper()


def parse_letter(token: str, rank: int) -> int:
    t = token.strip()
    if t in ("z", "Z"):
        g = rank
    else:
        if len(t) < 2 or t[0] not in "xX" or not t[1:].isdigit():
            raise ValueError("bad letter token %r" % token)
        g = int(t[1:])
    if not 1 <= g <= rank:
        raise ValueError("generator index %d out of range for rank %d" % (g, rank))
    return g if t[0].islower() else -g


def _check_letters(letters, rank):
    for a in letters:
        if not isinstance(a, int) or a == 0 or abs(a) > rank:
            raise ValueError("letter %r out of range for rank %d" % (a, rank))


def _letter_key(a):
    return K.letter_bit(a)


@dataclass(frozen=True)
class Word:
    """A freely reduced word; the constructor reduces its input."""

    letters: Tuple[int, ...]
    rank: int

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("negative rank")
        _check_letters(self.letters, self.rank)
        object.__setattr__(self, "letters", tuple(K.free_reduce(self.letters)))

    @classmethod
    def parse(cls, text: str, rank: int) -> "Word":
        toks = text.split()
        if toks in (["1"], ["e"]):
            toks = []
        return cls(tuple(parse_letter(t, rank) for t in toks), rank)

    def __str__(self):
        if not self.letters:
            return "1"
        return " ".join(letter_name(a) for a in self.letters)

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        if other.rank != self.rank:
            raise ValueError("rank mismatch")
        return Word(self.letters + other.letters, self.rank)

    def inverse(self) -> "Word":
        return Word(tuple(-a for a in reversed(self.letters)), self.rank)

    def power(self, n: int) -> "Word":
        base = self if n >= 0 else self.inverse()
        return Word(base.letters * abs(n), self.rank)

    def with_rank(self, rank: int) -> "Word":
        return Word(self.letters, rank)


def reduce(raw: Iterable[int], rank: int) -> Word:
    return Word(tuple(raw), rank)


@dataclass(frozen=True, eq=False)
class CyclicWord:
    """A cyclically reduced word up to rotation.

    ``letters`` keeps the representative it was built from; equality and
    hashing go through the lexicographically least rotation.
    """

    letters: Tuple[int, ...]
    rank: int
    _canon: Tuple[int, ...] = field(default=(), repr=False, compare=False)

    def __post_init__(self):
        _check_letters(self.letters, self.rank)
        red = K.free_reduce(self.letters)
        i, j = K.cyclic_bounds(red)
        core = tuple(red[i:j])
        object.__setattr__(self, "letters", core)
        object.__setattr__(self, "_canon", tuple(K.least_rotation(core)))

    @classmethod
    def parse(cls, text: str, rank: int) -> "CyclicWord":
        return cls(Word.parse(text, rank).letters, rank)

    @property
    def canonical(self) -> Tuple[int, ...]:
        return self._canon

    def __eq__(self, other):
        if not isinstance(other, CyclicWord):
            return NotImplemented
        return self.rank == other.rank and self._canon == other._canon

    def __hash__(self):
        return hash((self.rank, self._canon))

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return str(Word(self.letters, self.rank))

    def inverse(self) -> "CyclicWord":
        return CyclicWord(tuple(-a for a in reversed(self.letters)), self.rank)

    def as_word(self) -> Word:
        return Word(self.letters, self.rank)


def cyclic_reduce(w: Word) -> Tuple[CyclicWord, Word]:
    """Split ``w`` as ``c u c^-1`` with ``u`` cyclically reduced."""
    i, j = K.cyclic_bounds(list(w.letters))
    return CyclicWord(w.letters[i:j], w.rank), Word(w.letters[:i], w.rank)


@dataclass(frozen=True)
class WhiteheadAutomorphism:
    """Type I (signed permutation) or type II (multiplier, affected set).

    Type II acts on a letter ``y`` other than the multiplier ``a`` or its
    inverse by ``y -> [a^-1 if y^-1 in A] y [a if y in A]``; in particular
    ``(a=x1, A={x2})`` sends ``x2`` to ``x2 x1``.  The multiplier itself is
    never stored in ``affected``.
    """

    rank: int
    multiplier: int = 0
    affected: frozenset = frozenset()
    images: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.multiplier:
            if self.images:
                raise ValueError("automorphism cannot be both type I and type II")
            _check_letters((self.multiplier,), self.rank)
            aff = frozenset(self.affected) - {self.multiplier}
            _check_letters(tuple(aff), self.rank)
            if -self.multiplier in aff:
                raise ValueError("inverse of the multiplier cannot be affected")
            object.__setattr__(self, "affected", aff)
        else:
            if self.affected:
                raise ValueError("type I automorphism has no affected set")
            imgs = tuple(self.images) or tuple(range(1, self.rank + 1))
            if len(imgs) != self.rank or sorted(abs(a) for a in imgs) != list(
                range(1, self.rank + 1)
            ):
                raise ValueError("type I images must be a signed permutation")
            object.__setattr__(self, "images", imgs)

    @classmethod
    def type2(cls, multiplier: int, affected: Iterable[int], rank: int):
        return cls(rank, multiplier, frozenset(affected))

    @classmethod
    def type1(cls, images: Sequence[int], rank: int):
        return cls(rank, images=tuple(images))

    @property
    def kind(self) -> str:
        return "II" if self.multiplier else "I"

    @property
    def mask(self) -> int:
        m = 0
        for y in self.affected:
            m |= 1 << K.letter_bit(y)
        return m

    def letter_image(self, y: int) -> Tuple[int, ...]:
        if self.multiplier:
            return tuple(K.whitehead_image([y], self.multiplier, self.mask))
        img = self.images[abs(y) - 1]
        return (img,) if y > 0 else (-img,)

    def _raw(self, letters) -> List[int]:
        if self.multiplier:
            return K.whitehead_image(list(letters), self.multiplier, self.mask)
        out = []
        for y in letters:
            out.extend(self.letter_image(y))
        return K.free_reduce(out)

    def __call__(self, w):
        if w.rank != self.rank:
            raise ValueError("rank mismatch: word %d, automorphism %d" % (w.rank, self.rank))
        if isinstance(w, CyclicWord):
            return CyclicWord(tuple(self._raw(w.letters)), w.rank)
        return Word(tuple(self._raw(w.letters)), w.rank)

    def inverse(self) -> "WhiteheadAutomorphism":
        if self.multiplier:
            a = self.multiplier
            return WhiteheadAutomorphism(self.rank, -a, self.affected)
        inv = [0] * self.rank
        for i, img in enumerate(self.images, start=1):
            inv[abs(img) - 1] = i if img > 0 else -i
        return WhiteheadAutomorphism(self.rank, images=tuple(inv))

    def __str__(self):
        if self.multiplier:
            aff = " ".join(letter_name(y) for y in sorted(self.affected, key=_letter_key))
            return "(%s; {%s})" % (letter_name(self.multiplier), aff)
        return "[%s]" % " ".join(letter_name(y) for y in self.images)

    def to_dict(self) -> dict:
        if self.multiplier:
            return {
                "type": "II",
                "multiplier": letter_name(self.multiplier),
                "affected": [letter_name(y) for y in sorted(self.affected, key=_letter_key)],
            }
        return {"type": "I", "images": [letter_name(y) for y in self.images]}

    @classmethod
    def from_dict(cls, d: dict, rank: int) -> "WhiteheadAutomorphism":
        if d["type"] == "II":
            return cls.type2(
                parse_letter(d["multiplier"], rank),
                [parse_letter(t, rank) for t in d["affected"]],
                rank,
            )
        return cls.type1([parse_letter(t, rank) for t in d["images"]], rank)


def apply_automorphism(a: WhiteheadAutomorphism, w):
    return a(w)


def replay(trace: Sequence[WhiteheadAutomorphism], words):
    out = list(words)
    for a in trace:
        out = [a(w) for w in out]
    return out


_TYPE2_CACHE = {}


def type2_moves(rank: int) -> List[Tuple[int, int]]:
    """All nontrivial type II moves as ``(multiplier, mask)`` pairs.

    Order is the tie-break order: multiplier x1 < X1 < x2 < ..., then mask.
    """
    if rank not in _TYPE2_CACHE:
        moves = []
        letters = sorted([g for g in range(1, rank + 1)] + [-g for g in range(1, rank + 1)],
                         key=_letter_key)
        for a in letters:
            free_bits = [K.letter_bit(y) for y in letters if y not in (a, -a)]
            for m in range(1, 1 << len(free_bits)):
                mask = 0
                for k, b in enumerate(free_bits):
                    if (m >> k) & 1:
                        mask |= 1 << b
                moves.append((a, mask))
        moves.sort(key=lambda am: (K.letter_bit(am[0]), am[1]))
        _TYPE2_CACHE[rank] = moves
    return _TYPE2_CACHE[rank]


def _mask_letters(mask: int, rank: int) -> frozenset:
    out = []
    for g in range(1, rank + 1):
        for y in (g, -g):
            if (mask >> K.letter_bit(y)) & 1:
                out.append(y)
    return frozenset(out)


def move_automorphism(move: Tuple[int, int], rank: int) -> WhiteheadAutomorphism:
    a, mask = move
    return WhiteheadAutomorphism(rank, a, _mask_letters(mask, rank))


def _descend(lists, rank, cyclic, cap=None):
    """Greedy strict descent; first improving move in tie-break order wins."""
    total_fn = K.total_cyclic_image_length if cyclic else K.total_image_length
    moves = type2_moves(rank)
    total = sum(len(w) for w in lists)
    trace = []
    evaluations = 0
    while True:
        for a, mask in moves:
            evaluations += 1
            if cap is not None and evaluations > cap:
                raise SearchCapExceeded("descent exceeded %d automorphism evaluations" % cap)
            t = total_fn(lists, a, mask)
            if t < total:
                new = []
                for w in lists:
                    img = K.whitehead_image(w, a, mask)
                    if cyclic:
                        i, j = K.cyclic_bounds(img)
                        img = img[i:j]
                    new.append(img)
                lists = new
                total = t
                trace.append(move_automorphism((a, mask), rank))
                break
        else:
            return lists, trace


def whitehead_minimize(words: Iterable[CyclicWord]):
    """Greedy Whitehead minimization of a set of cyclic words.

    Returns ``(minimized words, trace)``; replaying ``trace`` on the input
    reproduces the minimized words, and total length drops at every step.
    """
    words = list(words)
    if not words:
        return [], []
    rank = words[0].rank
    if any(w.rank != rank for w in words):
        raise ValueError("mixed ranks")
    lists, trace = _descend([list(w.letters) for w in words], rank, cyclic=True)
    return [CyclicWord(tuple(w), rank) for w in lists], trace


def minimize_tuple(words: Sequence[Word], cap: Optional[int] = None):
    """Greedy Whitehead descent for a tuple of based elements (plain length)."""
    words = list(words)
    if not words:
        return [], []
    rank = words[0].rank
    lists, trace = _descend([list(w.letters) for w in words], rank, cyclic=False, cap=cap)
    return [Word(tuple(w), rank) for w in lists], trace


@dataclass
class PrimitivityResult:
    ok: bool
    rank: int
    trace: List[WhiteheadAutomorphism] = field(default_factory=list)
    images: List[Word] = field(default_factory=list)
    completion: List[Word] = field(default_factory=list)
    reason: str = ""

    def __bool__(self):
        return self.ok

    def basis(self, words: Sequence[Word]) -> List[Word]:
        return list(words) + list(self.completion)

    def to_dict(self) -> dict:
        return {
            "primitive": self.ok,
            "trace": [a.to_dict() for a in self.trace],
            "images": [str(w) for w in self.images],
            "completion": [str(w) for w in self.completion],
            "reason": self.reason,
        }


def is_primitive_set(words: Sequence[Word], rank: int, cap: int = 100_000) -> PrimitivityResult:
    """Decide whether ``words`` (based elements) extend to a basis.

    Descent works on the tuple with plain reduced length; by peak reduction
    a primitive tuple of length above ``len(words)`` always admits a strictly
    shortening Whitehead move, so descent alone decides the question.  The
    witness is the trace plus a completion: elements which together with
    ``words`` form a basis.
    """
    words = [w if isinstance(w, Word) else w.as_word() for w in words]
    if any(w.rank != rank for w in words):
        raise ValueError("rank mismatch")
    if len(words) > rank:
        return PrimitivityResult(False, rank, reason="%d elements exceed rank %d" % (len(words), rank))
    if any(len(w) == 0 for w in words):
        return PrimitivityResult(False, rank, reason="trivial element")
    images, trace = minimize_tuple(words, cap=cap)
    gens = [w.letters[0] for w in images if len(w) == 1]
    if len(gens) != len(images) or len({abs(a) for a in gens}) != len(gens):
        return PrimitivityResult(
            False, rank, trace, images,
            reason="minimal images %s are not distinct generators" % ", ".join(str(w) for w in images),
        )
    used = {abs(a) for a in gens}
    back = [a.inverse() for a in reversed(trace)]
    completion = replay(back, [Word((g,), rank) for g in range(1, rank + 1) if g not in used])
    return PrimitivityResult(True, rank, trace, images, completion)


def power_root(w: CyclicWord) -> Tuple[CyclicWord, int]:
    """Return ``(root, n)`` with ``w = root^n`` and ``n`` maximal."""
    n = len(w.letters)
    if n == 0:
        raise ValueError("power_root of the empty word")
    s = w.letters
    for period in range(1, n + 1):
        if n % period == 0 and all(s[k] == s[k % period] for k in range(n)):
            return CyclicWord(s[:period], w.rank), n // period
    raise AssertionError("unreachable")


def is_separable(words: Iterable[CyclicWord], rank: int) -> bool:
    """Whether the conjugacy classes lie in factors of a nontrivial free splitting.

    After minimization a separable set has a disconnected Whitehead graph;
    a cut vertex cannot survive minimization.
    """
    from .graph import genuine_graph

    if rank < 2:
        return False
    words = [w for w in words if len(w)]
    if not words:
        return True
    mins, _ = whitehead_minimize(words)
    return not genuine_graph(mins, rank).is_connected()


def subsets_by_size(n: int):
    for k in range(n, 0, -1):
        for idx in combinations(range(n), k):
            yield idx

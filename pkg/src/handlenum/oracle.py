"""Brute force cross-checks for the greedy algorithms.

Nothing here uses the descent code: minimal lengths come from a breadth
first search over every Whitehead move.  In rank 2 the search may climb
two letters above the starting length; in rank 3 it explores the whole
plateau at the starting length, which keeps it under a second per set.
"""

import random
from collections import deque
from itertools import permutations, product
from math import gcd
from typing import List, Sequence

from .diagram import Diagram, fill
from .free_group import CyclicWord, whitehead_minimize
from .handle_search import enumerate_arcs

MAX_RANK = 3
MAX_LEN = 10
MAX_P = 30


class CapExceeded(RuntimeError):
    pass


def _type2_tables(rank: int):
    """Substitution tables ``letter -> image letters`` for every type II move."""
    letters = [g for g in range(1, rank + 1)] + [-g for g in range(1, rank + 1)]
    out = []
    for a in letters:
        others = [y for y in letters if abs(y) != abs(a)]
        for mask in range(1, 1 << len(others)):
            A = {others[i] for i in range(len(others)) if mask >> i & 1}
            table = {}
            for y in letters:
                if abs(y) == abs(a):
                    table[y] = (y,)
                else:
                    table[y] = ((-a,) if -y in A else ()) + (y,) + ((a,) if y in A else ())
            out.append(table)
    return out


def _signed_perms(rank: int):
    out = []
    for perm in permutations(range(1, rank + 1)):
        for signs in product((1, -1), repeat=rank):
            m = {}
            for g in range(1, rank + 1):
                m[g] = perm[g - 1] * signs[g - 1]
                m[-g] = -m[g]
            out.append(m)
    return out


def _image(w, table):
    out = []
    for y in w:
        for b in table[y]:
            if out and out[-1] == -b:
                out.pop()
            else:
                out.append(b)
    i, j = 0, len(out)
    while j - i >= 2 and out[i] == -out[j - 1]:
        i += 1
        j -= 1
    return tuple(out[i:j])


def _least_rotation(w):
    return min(w[i:] + w[:i] for i in range(len(w))) if w else w


def _canonical(state, perms, cache):
    forms = []
    for w in state:
        f = cache.get(w)
        if f is None:
            f = cache[w] = [_least_rotation(tuple(m[y] for y in w)) for m in perms]
        forms.append(f)
    return min(tuple(sorted(f[i] for f in forms)) for i in range(len(perms)))


def exhaustive_min_length(words: Sequence[CyclicWord], slack: int = 2, cap: int = 500_000) -> int:
    """Least total length in the orbit, searching states up to ``start + slack``.

    States are taken up to relabelling generators, which does not change
    lengths.  The search stops early at one letter per word.
    """
    rank = words[0].rank
    tables = _type2_tables(rank)
    perms = _signed_perms(rank)
    state = tuple(tuple(w.letters) for w in words)
    start = sum(len(w) for w in state)
    floor = sum(1 for w in state if w)
    bound = start + slack
    cache = {}
    seen = {_canonical(state, perms, cache)}
    queue = deque([state])
    best = start
    while queue and best > floor:
        state = queue.popleft()
        for table in tables:
            new = tuple(_image(w, table) for w in state)
            n = sum(len(w) for w in new)
            if n > bound:
                continue
            key = _canonical(new, perms, cache)
            if key in seen:
                continue
            seen.add(key)
            if len(seen) > cap:
                raise CapExceeded("orbit search passed %d states" % cap)
            best = min(best, n)
            queue.append(new)
    return best


def random_cyclic_word(rng: random.Random, rank: int, length: int) -> CyclicWord:
    while True:
        letters = []
        for _ in range(length):
            choices = [a for g in range(1, rank + 1) for a in (g, -g)
                       if not letters or a != -letters[-1]]
            letters.append(rng.choice(choices))
        if length < 2 or letters[0] != -letters[-1]:
            return CyclicWord(tuple(letters), rank)


def random_word_set(rng: random.Random, rank: int, max_len: int) -> List[CyclicWord]:
    count = rng.randint(1, 2)
    total = rng.randint(count, max_len)
    cut = sorted(rng.sample(range(1, total), count - 1)) if count > 1 else []
    sizes = [b - a for a, b in zip([0] + cut, cut + [total])]
    return [random_cyclic_word(rng, rank, n) for n in sizes]


def check_caps(rank=None, max_len=None, max_p=None):
    if rank is not None and not 1 <= rank <= MAX_RANK:
        raise CapExceeded("rank must be between 1 and %d" % MAX_RANK)
    if max_len is not None and not 1 <= max_len <= MAX_LEN:
        raise CapExceeded("word length must be between 1 and %d" % MAX_LEN)
    if max_p is not None and not 2 <= max_p <= MAX_P:
        raise CapExceeded("p must be between 2 and %d" % MAX_P)


def default_slack(rank: int) -> int:
    return 2 if rank <= 2 else 0


def minimize_agreement(rank: int, max_len: int, seed: int, samples: int, slack=None):
    """Compare greedy and exhaustive minimal lengths; returns ``(agree, failures)``."""
    check_caps(rank=rank, max_len=max_len)
    slack = default_slack(rank) if slack is None else slack
    rng = random.Random(seed)
    agree, failures = 0, []
    for _ in range(samples):
        ws = random_word_set(rng, rank, max_len)
        greedy = sum(len(w) for w in whitehead_minimize(ws)[0])
        exact = exhaustive_min_length(ws, slack)
        if greedy == exact:
            agree += 1
        else:
            failures.append(([str(w) for w in ws], greedy, exact))
    return agree, failures


def euclid_check(max_p: int):
    """Run the torus slide checks for all coprime pairs with p at most ``max_p``."""
    from .torus import build_diagram, euclid_slide, numbering_q

    check_caps(max_p=max_p)
    passed, failures = 0, []
    for p in range(2, max_p + 1):
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            try:
                t = build_diagram(p, q)
                if numbering_q(t) != q:
                    raise AssertionError("numbering")
                euclid_slide(t)
                passed += 1
            except AssertionError as exc:
                failures.append(((p, q), str(exc)))
    return passed, failures


def roundtrip_check(d: Diagram):
    """Drill every face pair and fill again; the spine must come back."""
    base = d.based_words()
    passed, failures = 0, []
    for c in enumerate_arcs(d):
        dr = d.drill(c.path)
        V, E, F = dr.diagram.counts()
        ok = (fill(dr.based) == base and V - E + F == 2
              and dr.diagram.based_words() == dr.based)
        if ok:
            passed += 1
        else:
            failures.append(c.faces)
    return passed, failures

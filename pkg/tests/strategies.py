from hypothesis import strategies as st

from handlenum.free_group import CyclicWord, Word


def letters(rank):
    return st.integers(1, rank).flatmap(lambda g: st.sampled_from([g, -g]))


def raw_words(rank, max_size=12):
    return st.lists(letters(rank), max_size=max_size)


def words(rank, min_size=0, max_size=12):
    return st.lists(letters(rank), min_size=min_size, max_size=max_size).map(
        lambda s: Word(tuple(s), rank))


def cyclic_words(rank, max_size=10):
    return raw_words(rank, max_size).map(lambda s: CyclicWord(tuple(s), rank)).filter(len)


def automorphisms(rank):
    from handlenum.free_group import WhiteheadAutomorphism

    def build(a, picks):
        return WhiteheadAutomorphism(rank, a, frozenset(y for y in picks if abs(y) != abs(a)))

    return st.builds(build, letters(rank), st.sets(letters(rank)))

import random

from handlenum.free_group import CyclicWord
from handlenum.oracle import (exhaustive_min_length, minimize_agreement, random_word_set,
                              roundtrip_check)
from handlenum.families import RationalKnot, rational_diagram


def test_exhaustive_on_known_words():
    assert exhaustive_min_length([CyclicWord.parse("x2 x2 x2 X1", 2)]) == 1
    assert exhaustive_min_length([CyclicWord.parse("x1 x2 X1 X2", 2)]) == 4


def test_random_sets_respect_caps():
    rng = random.Random(3)
    for _ in range(50):
        ws = random_word_set(rng, 3, 10)
        assert 1 <= sum(map(len, ws)) <= 10
        assert all(w.rank == 3 for w in ws)


def test_minimize_agreement_rank2():
    agree, fails = minimize_agreement(2, 10, 11, 40)
    assert agree == 40 and not fails


def test_roundtrip_rational():
    passed, fails = roundtrip_check(rational_diagram(RationalKnot((2, -1, 3))))
    assert passed > 0 and not fails

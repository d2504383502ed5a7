from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mpqg.cartan import CartanDatum
from mpqg.coeff import ONE, ZERO, qfactorial
from mpqg.errors import DomainError
from mpqg.shuffle import ShuffleAlgebra, ShuffleElem, delete_last, word_degree

TYPES = ["A1xA1", "A2", "B2", "C2", "G2"]


def riffle_oracle(a, b, P):
    """Sum over riffles: each letter of a pays q(a_letter, b_letter) for every b-letter placed before it."""
    n = len(a) + len(b)
    out = {}
    for pos in combinations(range(n), len(a)):
        slots = set(pos)
        word, ia, ib, c = [], 0, 0, ONE
        for k in range(n):
            if k in slots:
                for r in b[:ib]:
                    c = c * P.q(a[ia], r)
                word.append(a[ia])
                ia += 1
            else:
                word.append(b[ib])
                ib += 1
        w = tuple(word)
        out[w] = out.get(w, ZERO) + c
    return ShuffleElem({w: c for w, c in out.items() if c})


def algebra(t):
    return ShuffleAlgebra(CartanDatum.of_type(t).param_matrix())


def test_two_letters():
    S = algebra("A2")
    got = S.shuffle(ShuffleElem.word(0), ShuffleElem.word(1))
    assert got == ShuffleElem({(0, 1): ONE, (1, 0): S.P.q(0, 1)})


def test_unit():
    S = algebra("B2")
    w = ShuffleElem.word(0, 1, 1)
    assert S.shuffle(ShuffleElem.one(), w) == w
    assert S.shuffle(w, ShuffleElem.one()) == w


def test_matches_riffle_oracle():
    S = algebra("G2")
    for a in [(0,), (0, 1), (1, 0, 1)]:
        for b in [(1,), (0, 0), (1, 1, 0)]:
            assert S.shuffle(ShuffleElem.word(*a), ShuffleElem.word(*b)) == riffle_oracle(a, b, S.P)


def test_serre_shuffle_vanishes_all_rank_two_types():
    for t in TYPES:
        S = algebra(t)
        for i, j in [(0, 1), (1, 0)]:
            assert S.serre_shuffle(i, j).is_zero()


def test_serre_shuffle_needs_distinct_indices():
    with pytest.raises(DomainError):
        algebra("A2").serre_shuffle(0, 0)


def test_lower_power_does_not_vanish():
    # one power below the Serre degree the alternating sum is nonzero
    S = algebra("A2")
    P = S.P
    acc = S.shuffle(ShuffleElem.word(0), ShuffleElem.word(1)) - S.shuffle(
        ShuffleElem.word(1), ShuffleElem.word(0)).scale(P.q(0, 1))
    assert not acc.is_zero()


def test_mixed_powers_closed_form():
    for t in ["A2", "G2"]:
        S = algebra(t)
        for m in range(4):
            for l in range(4):
                rec = S.shuffle_many(S.shuffle_power(0, m), ShuffleElem.word(1), S.shuffle_power(0, l))
                assert rec == S.mixed_power_closed_form(0, 1, m, l)


def test_shuffle_power_is_factorial_multiple():
    S = algebra("B2")
    assert S.shuffle_power(1, 4) == ShuffleElem({(1,) * 4: qfactorial(4, S.P.q(1, 1))})


def test_leibniz_rule_uses_second_factor_degree():
    S = algebra("A2")
    x, y = ShuffleElem.word(0, 1), ShuffleElem.word(1)
    assert S.leibniz_defect(1, x, y).is_zero()
    assert not S.leibniz_defect(1, x, y, use_first=True).is_zero()


def test_word_degree_and_delete():
    assert word_degree((0, 1, 1), 2) == (1, 2)
    x = ShuffleElem({(0, 1): ONE, (1, 0): ONE})
    assert delete_last(1, x) == ShuffleElem.word(0)


def test_json_is_one_based():
    assert ShuffleElem.word(0, 1).to_json() == [{"word": [1, 2], "coeff": "1"}]


words = st.lists(st.integers(0, 1), min_size=0, max_size=3).map(tuple)


@settings(max_examples=40, deadline=None)
@given(words, words, words)
def test_associativity(a, b, c):
    S = algebra("B2")
    x, y, z = ShuffleElem.word(*a), ShuffleElem.word(*b), ShuffleElem.word(*c)
    assert S.shuffle(S.shuffle(x, y), z) == S.shuffle(x, S.shuffle(y, z))


@settings(max_examples=40, deadline=None)
@given(words, words)
def test_recursion_agrees_with_riffles(a, b):
    S = algebra("C2")
    assert S.shuffle(ShuffleElem.word(*a), ShuffleElem.word(*b)) == riffle_oracle(a, b, S.P)


@settings(max_examples=30, deadline=None)
@given(words, words, st.integers(0, 1))
def test_leibniz_rule_property(a, b, i):
    S = algebra("G2")
    assert S.leibniz_defect(i, ShuffleElem.word(*a), ShuffleElem.word(*b)).is_zero()

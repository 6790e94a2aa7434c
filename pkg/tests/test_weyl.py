from collections import deque
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from cellring.weyl import (
    IDENTITY,
    SIMPLE,
    TAU,
    bruhat_leq,
    coxeter_order,
    elements_up_to_length,
    evaluate,
    is_reduced,
    left_descents,
    length,
    lower_interval,
    reduced_word,
    right_descents,
)

words = st.text(alphabet="0123t", max_size=10)


def test_presentation():
    orders = {(0, 1): 2, (0, 3): 2, (1, 3): 2, (0, 2): 3, (1, 2): 3, (2, 3): 4}
    for (i, j), m in orders.items():
        assert coxeter_order(SIMPLE[i] * SIMPLE[j]) == m
    for s in SIMPLE:
        assert s * s == IDENTITY


def test_tau():
    assert TAU * TAU == IDENTITY
    assert length(TAU) == 0 and not TAU.in_affine_subgroup()
    for i, j in ((0, 1), (1, 0), (2, 2), (3, 3)):
        assert TAU * SIMPLE[i] * TAU == SIMPLE[j]


def test_multiply_examples():
    assert SIMPLE[0] * SIMPLE[1] == SIMPLE[1] * SIMPLE[0]


def test_lengths():
    assert length(IDENTITY) == 0
    assert all(length(s) == 1 for s in SIMPLE)
    assert length(evaluate("012012")) == 6
    assert is_reduced("0120123213202321") and length(evaluate("0120123213202321")) == 16


def test_descents():
    assert right_descents(evaluate("012012320")) == {0, 2}
    assert left_descents(IDENTITY) == frozenset()
    assert left_descents(evaluate("012012")) == {0, 1, 2}


def test_reduced_word_examples():
    assert reduced_word(IDENTITY) == ""
    assert reduced_word(SIMPLE[1] * SIMPLE[0]) == "01"
    assert len(reduced_word(evaluate("210210"))) == 6


def test_bruhat_examples():
    w012 = evaluate("012012")
    assert not bruhat_leq(SIMPLE[3], w012)
    assert bruhat_leq(evaluate("0120"), w012)
    assert bruhat_leq(IDENTITY, evaluate("0123210"))
    assert not bruhat_leq(TAU, w012)


def test_lower_interval_sizes():
    assert len(lower_interval(IDENTITY)) == 1
    assert len(lower_interval(SIMPLE[2])) == 2
    assert len(lower_interval(evaluate("012012"))) == 24


def _bfs(max_len):
    """Independent oracle: breadth-first search on words, both cosets."""
    seen = {IDENTITY: 0, TAU: 0}
    q = deque([IDENTITY, TAU])
    while q:
        w = q.popleft()
        if seen[w] == max_len:
            continue
        for s in SIMPLE:
            v = w * s
            if v not in seen:
                seen[v] = seen[w] + 1
                q.append(v)
    return seen


def test_enumeration_against_bfs():
    oracle = _bfs(6)
    got = list(elements_up_to_length(6))
    assert len(got) == len(set(got)) == len(oracle)
    assert set(got) == set(oracle)
    assert all(length(w) == oracle[w] for w in got)
    assert set(elements_up_to_length(0)) == {IDENTITY, TAU}
    assert len(list(elements_up_to_length(1))) == 10


def test_length_matches_bfs_up_to_8():
    oracle = _bfs(8)
    assert all(length(w) == d for w, d in oracle.items())


def _subwords(word):
    out = set()
    for mask in product((0, 1), repeat=len(word)):
        out.add(evaluate("".join(c for c, m in zip(word, mask) if m)))
    return out


def test_bruhat_against_subword_oracle():
    elems = [w for w in elements_up_to_length(5) if w.in_affine_subgroup()]
    below = {w: _subwords(reduced_word(w)) for w in elems}
    for w in elems:
        for y in elems:
            assert bruhat_leq(y, w) == (y in below[w])


@given(words)
def test_word_round_trip(word):
    w = evaluate(word)
    assert evaluate(reduced_word(w)) == w
    assert is_reduced(reduced_word(w))


@given(words, words)
def test_length_properties(a, b):
    x, y = evaluate(a), evaluate(b)
    assert length(x) == length(x.inverse())
    assert length(x * y) <= length(x) + length(y)
    assert (length(x * y) - length(x) - length(y)) % 2 == 0


@given(words)
def test_exchange_condition(word):
    w = evaluate(word)
    for s in left_descents(w):
        assert length(SIMPLE[s] * w) == length(w) - 1
    for s in right_descents(w):
        assert length(w * SIMPLE[s]) == length(w) - 1


@given(words, words, words)
@settings(max_examples=50)
def test_associative(a, b, c):
    x, y, z = evaluate(a), evaluate(b), evaluate(c)
    assert (x * y) * z == x * (y * z)
    assert x * x.inverse() == IDENTITY


def test_bad_token():
    with pytest.raises(ValueError):
        evaluate("04")

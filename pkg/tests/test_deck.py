import random
from fractions import Fraction

import pytest

from trideck.cyclic import CyclicSet
from trideck.deck import (
    Deck,
    DeckBudgetError,
    IntFunction,
    deck,
    deck2_set,
    deck3_set,
    deck_fingerprint,
    deck_set,
    decks_equal,
)

PAIR_E = CyclicSet.from_elements(12, [0, 3, 4, 5, 7, 8])
PAIR_F = CyclicSet.from_elements(12, [0, 1, 3, 4, 5, 8])


def test_singleton_deck():
    d = deck(IntFunction.from_set(CyclicSet.from_elements(5, [0])), 3)
    for x1 in range(5):
        for x2 in range(5):
            assert d.value(x1, x2) == (1 if x1 == x2 == 0 else 0)


def test_difference_set_2deck():
    # {0,1,3} is a perfect difference set mod 7
    d = deck(IntFunction.from_set(CyclicSet.from_elements(7, [0, 1, 3])), 2)
    assert d.value(0) == 3
    assert all(d.value(x) == 1 for x in range(1, 7))


def test_full_set_3deck_constant():
    for n in (1, 2, 5, 8):
        d = deck3_set(CyclicSet(n, (1 << n) - 1))
        assert set(d.values) == {n}


def test_collision_pair_equal_3decks():
    assert decks_equal(deck3_set(PAIR_E), deck3_set(PAIR_F))


def test_collision_pair_6decks_differ():
    # the 6-deck of a rational function determines it up to translation, so a
    # non-translate pair with equal 3-decks must separate at order 6
    assert not decks_equal(deck_set(PAIR_E, 6), deck_set(PAIR_F, 6))
    assert not decks_equal(deck_set(PAIR_E, 4), deck_set(PAIR_F, 4))


def test_origin_and_diagonal():
    rng = random.Random(23)
    for _ in range(50):
        n = rng.randint(1, 16)
        e = CyclicSet(n, rng.randrange(1 << n))
        d3 = deck3_set(e)
        d2 = deck2_set(e)
        assert d3.value(0, 0) == e.size
        for x in range(n):
            assert d3.value(x, x) == d2.value(x)


def test_small_distinct_pair_differs():
    e = CyclicSet.from_elements(5, [0, 1])
    f = CyclicSet.from_elements(5, [0, 2])
    assert not decks_equal(deck_set(e, 3), deck_set(f, 3))


def test_deck3_set_matches_generic_deck():
    rng = random.Random(29)
    for _ in range(200):
        n = rng.randint(1, 20)
        e = CyclicSet(n, rng.randrange(1 << n))
        assert decks_equal(deck3_set(e), deck(IntFunction.from_set(e), 3))
        assert decks_equal(deck2_set(e), deck(IntFunction.from_set(e), 2))


def test_translation_invariance():
    rng = random.Random(31)
    for _ in range(30):
        n = rng.randint(1, 24)
        e = CyclicSet(n, rng.randrange(1 << n))
        t = rng.randrange(n)
        for k in (2, 3, 4):
            if n ** (k - 1) > 5000:
                continue
            assert decks_equal(deck_set(e.rotate(t), k), deck_set(e, k))


def test_reflection_properties():
    rng = random.Random(37)
    for _ in range(60):
        n = rng.randint(1, 14)
        e = CyclicSet(n, rng.randrange(1 << n))
        assert decks_equal(deck2_set(e.reflect()), deck2_set(e))
        d = deck3_set(e)
        dr = deck3_set(e.reflect())
        for x1 in range(n):
            for x2 in range(n):
                assert dr.value(x1, x2) == d.value(-x1, -x2)


def test_mass_invariants():
    rng = random.Random(41)
    for _ in range(60):
        n = rng.randint(1, 14)
        e = CyclicSet(n, rng.randrange(1 << n))
        for k in (2, 3):
            d = deck_set(e, k)
            assert sum(d.values) == e.size**k
            assert d.values[0] == e.size


def test_2deck_is_difference_counts():
    rng = random.Random(43)
    for _ in range(60):
        n = rng.randint(1, 20)
        e = CyclicSet(n, rng.randrange(1 << n))
        d = deck2_set(e)
        elems = set(e.elements)
        for x in range(n):
            assert d.value(x) == sum(1 for j in elems if (j + x) % n in elems)


def test_rational_function_deck():
    rng = random.Random(47)
    for _ in range(20):
        n = rng.randint(1, 8)
        f = IntFunction(n, tuple(rng.randint(-3, 3) for _ in range(n)), denom=rng.randint(1, 4))
        vals = [Fraction(v, f.denom) for v in f.values]
        for k in (2, 3):
            d = deck(f, k)
            assert sum(Fraction(v) for v in d.values) == f.total() ** k
        d2 = deck(f, 2)
        for x1 in range(n):
            want = sum(vals[x] * vals[(x + x1) % n] for x in range(n))
            assert Fraction(d2.value(x1)) == want


def test_budget_error():
    f = IntFunction.from_set(CyclicSet.from_elements(10, [0, 1]))
    with pytest.raises(DeckBudgetError) as err:
        deck(f, 4, budget=100)
    assert err.value.required == 1000
    assert err.value.budget == 100
    with pytest.raises(DeckBudgetError):
        deck_set(CyclicSet(10, 3), 4, budget=100)


def test_decks_equal_shape_mismatch():
    with pytest.raises(ValueError):
        decks_equal(deck2_set(CyclicSet(5, 1)), deck2_set(CyclicSet(6, 1)))
    with pytest.raises(ValueError):
        decks_equal(deck2_set(CyclicSet(5, 1)), deck3_set(CyclicSet(5, 1)))


def test_deck_validation():
    with pytest.raises(ValueError):
        Deck(n=3, k=1, values=(1, 2, 3))
    with pytest.raises(ValueError):
        Deck(n=3, k=2, values=(1, 2))
    with pytest.raises(ValueError):
        deck(IntFunction.from_set(CyclicSet(5, 3)), 1)


def test_fingerprint_properties():
    e = CyclicSet.from_elements(9, [0, 2, 3])
    fp = deck_fingerprint(deck3_set(e))
    assert fp == deck_fingerprint(deck3_set(e))  # deterministic
    assert fp == deck_fingerprint(deck3_set(e.rotate(4)))  # translation-invariant deck
    assert fp != deck_fingerprint(deck3_set(CyclicSet.from_elements(9, [0, 2, 4])))
    assert deck_fingerprint(deck3_set(PAIR_E)) == deck_fingerprint(deck3_set(PAIR_F))
    int(fp, 16)  # lowercase hex digest
    assert fp == fp.lower()


def test_int_function_validation():
    with pytest.raises(ValueError):
        IntFunction(3, (1, 0))
    with pytest.raises(ValueError):
        IntFunction(2, (1, 0), denom=0)
    f = IntFunction.from_set(CyclicSet.from_elements(4, [1, 3]))
    assert f.is_indicator
    assert f.total() == 2

"""Acceptance gate: one test per release criterion, one printed verdict line each."""

import json
import random
import sys
from fractions import Fraction
from functools import wraps

import numpy as np

from trideck.analysis import (
    UNKNOWN,
    determinacy_certificate,
    good_n_predicate,
    zero_probability_mc,
)
from trideck.cli import main
from trideck.constructions import (
    cosine_pair,
    even_pair,
    float_deck3,
    g_alpha,
    pqrd_pair,
    two_deck_pair,
)
from trideck.cyclic import CyclicSet, divisors, gcd_class, translation_equivalent
from trideck.deck import IntFunction, deck2_set, deck3_set, decks_equal
from trideck.extendable import is_extendable, linearity_check
from trideck.spectrum import float_dft, indicator_zero_mask, zero_set


def _emit(line):
    from conftest import acceptance_lines

    acceptance_lines.append(line)
    print(line, file=sys.__stdout__, flush=True)


def criterion(num, title):
    def wrap(fn):
        @wraps(fn)
        def run(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException:
                _emit(f"[criterion {num}] FAIL - {title}")
                raise
            _emit(f"[criterion {num}] PASS - {title}")

        return run

    return wrap


GOOD = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 13, 15, 17}
BAD = {12, 14, 16, 18}


@criterion(1, "sweep 1..18: determined iff n in {1..11,13,15,17}")
def test_characterization_sweep(capsys):
    assert main(["sweep", "--from", "1", "--to", "18"]) == 0
    out, _ = capsys.readouterr()
    lines = out.strip().splitlines()
    assert len(lines) == 19
    for line in lines[1:]:
        fields = line.split(",")
        n = int(fields[0])
        determined = fields[1] == "True"
        predicate = fields[2] == "True"
        assert determined == (n in GOOD) == (n not in BAD)
        assert predicate == determined == good_n_predicate(n)


@criterion(2, "even-2k family verifies for every k in [6,64]")
def test_even_family():
    for k in range(6, 65):
        pair = even_pair(k)
        assert pair.decks_equal, k
        assert not pair.translates, k


@criterion(3, "pqrd family verifies on the four-parameter grid incl. n=135")
def test_pqrd_family():
    for p, q, r, d in [(2, 3, 2, 2), (2, 5, 2, 2), (3, 5, 2, 2), (3, 5, 3, 3)]:
        pair = pqrd_pair(p, q, r, d)
        assert pair.decks_equal and not pair.translates, (p, q, r, d)
    assert not good_n_predicate(135)


@criterion(4, "exact spectral zeros agree with float DFT on 1000 sets per n in {12,36,100}")
def test_exact_vs_float_spectrum():
    rng = random.Random(20260823)
    for n in (12, 36, 100):
        threshold = n * 1e-6
        for _ in range(1000):
            e = CyclicSet(n, rng.getrandbits(n))
            zm = indicator_zero_mask(n, e.mask)
            mags = np.abs(float_dft([1.0 if j in e else 0.0 for j in range(n)]))
            for s in range(n):
                if zm >> s & 1:
                    assert mags[s] < threshold
                else:
                    assert mags[s] > threshold
            # zero sets are unions of gcd classes
            zeros = {s for s in range(n) if zm >> s & 1}
            for a in divisors(n):
                cls = gcd_class(n, a)
                assert cls <= zeros or not (cls & zeros)


@criterion(5, "all 2^15 supports on Z_15 extendable; odd-n structured-family suites hold")
def test_extendable_positive_suite():
    verdicts = {}
    for mask in range(1, 1 << 15):
        sup = indicator_zero_mask(15, mask) ^ ((1 << 15) - 1)
        if sup not in verdicts:
            verdicts[sup] = is_extendable(CyclicSet(15, sup)).extendable
        assert verdicts[sup], f"support {sup:#x} of mask {mask:#x} not extendable"
    # the odd-n structured-family suites are exercised in tests/test_extendable.py; rerun
    # the subgroup-sandwich core here as the acceptance-level sample
    from test_extendable import (
        test_small_gap_with_prefix_extendable,
        test_subgroup_sandwich_extendable,
        test_three_coprime_subgroup_union_extendable,
        test_two_coprime_divisor_unions_extendable,
    )

    test_subgroup_sandwich_extendable()
    test_two_coprime_divisor_unions_extendable()
    test_three_coprime_subgroup_union_extendable()
    test_small_gap_with_prefix_extendable()


@criterion(6, "Z_12 seven-point support is not extendable, with verified witness")
def test_extendable_negative_witness():
    a = CyclicSet.from_elements(12, [0, 1, 3, 5, 7, 9, 11])
    rep = zero_set(IntFunction.from_set(CyclicSet.from_elements(12, range(1, 7))))
    assert rep.support_set() == a
    verdict = is_extendable(a)
    assert not verdict.extendable
    h = verdict.witness.as_mapping()
    elems = set(a.elements)
    for x in elems:
        for y in elems:
            if (x + y) % 12 in elems:
                assert (h[x] + h[y] - h[(x + y) % 12]) % 1 == 0
    assert linearity_check(h) is None


@criterion(7, "MC: n=12 rate at s=6 in 3-sigma band of 924/4096; n=13 no nonconstant zeros")
def test_probability_experiments():
    report = zero_probability_mc(12, 10**5, seed=42)
    assert report.exact_half_probability == Fraction(924, 4096)
    p = float(report.exact_half_probability)
    assert abs(report.zero_rate(6) - p) <= 3 * report.standard_error(6)
    prime = zero_probability_mc(13, 10**5, seed=42)
    # uniform sampling occasionally draws the empty/full set, whose transform
    # vanishes somewhere trivially; the never-vanishing claim covers the rest
    assert prime.nonconstant_any_zero_count == 0


@criterion(8, "real demos: cosine pair decks match; g_alpha(12,0.3) matches chi and is no translate")
def test_real_function_demos():
    for n in (4, 5, 12):
        f, g = cosine_pair(n)
        assert np.max(np.abs(float_deck3(f) - float_deck3(g))) < 1e-9 * n**3
    n = 12
    chi = np.zeros(n)
    chi[1 : n // 2 + 1] = 1.0
    g = g_alpha(n, 0.3)
    assert np.max(np.abs(float_deck3(chi) - float_deck3(g))) < 1e-6
    assert all(np.max(np.abs(np.roll(chi, t) - g)) > 1e-3 for t in range(n))


@criterion(9, "Z_101: equal 2-decks, unequal 3-decks, not translates")
def test_two_deck_insufficiency():
    a = CyclicSet.from_elements(101, [0, 10, 20, 30])
    b = CyclicSet.from_elements(101, [0, 1, 3])
    pair = two_deck_pair(a, b)
    assert decks_equal(deck2_set(pair.e), deck2_set(pair.f))
    assert not decks_equal(deck3_set(pair.e), deck3_set(pair.f))
    assert translation_equivalent(pair.e, pair.f) is None

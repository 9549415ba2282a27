"""Exhaustive 3-deck classification of Z_n, the good-n predicate, and random-set
zero-probability experiments.

The classifier walks all 2^n bitmasks, keeps one canonical representative per
translation class (a necklace), groups representatives by a digest of their
3-deck, and confirms every digest collision by exact deck comparison before
reporting an exception. Monte Carlo sampling uses numpy's Philox counter-based
generator so runs are reproducible from (generator name, seed) alone.
"""

from __future__ import annotations

import hashlib
import math
import time
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Optional

import numpy as np

from .cyclic import CyclicSet, arith_profile, divisors, translation_equivalent
from .deck import deck3_set, decks_equal
from .extendable import is_extendable
from .spectrum import indicator_zero_mask

DEFAULT_MAX_N = 18
HARD_CAP_N = 20
MAX_EXCEPTIONS = 100
GENERATOR_NAME = "philox4x64"


def good_n_predicate(n: int) -> bool:
    """Whether every subset of Z_n is determined up to translation by its 3-deck.

    True exactly for powers of an odd prime, products of at most three odd
    primes (with multiplicity), and n in {1, 2, 4, 6, 8, 10}.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n in (1, 2, 4, 6, 8, 10):
        return True
    if n % 2 == 0:
        return False
    fact = arith_profile(n)[2]
    return len(fact) == 1 or sum(e for _, e in fact) <= 3


def necklace_count(n: int) -> int:
    """Number of translation classes of subsets: (1/n) sum_{d|n} phi(d) 2^{n/d}."""
    total = sum(arith_profile(d)[0] * 2 ** (n // d) for d in divisors(n))
    assert total % n == 0
    return total // n


def enumerate_translation_classes(n: int) -> Iterator[CyclicSet]:
    """Each translation class once, as its minimal-mask representative, ascending."""
    if n > 64:
        raise ValueError(f"n={n} exceeds the enumeration word size")
    full = (1 << n) - 1
    for mask in range(1 << n):
        canonical = True
        for t in range(1, n):
            if ((mask << t) | (mask >> (n - t))) & full < mask:
                canonical = False
                break
        if canonical:
            yield CyclicSet(n, mask)


def _deck3_bytes(mask: int, n: int) -> bytes:
    """Packed 3-deck values of a mask; every entry fits one byte for n <= 20."""
    full = (1 << n) - 1
    shifted = [((mask >> x) | (mask << (n - x))) & full if x else mask for x in range(n)]
    out = bytearray(n * n)
    pos = 0
    for x1 in range(n):
        m1 = mask & shifted[x1]
        for x2 in range(n):
            out[pos] = (m1 & shifted[x2]).bit_count()
            pos += 1
    return bytes(out)


@dataclass(frozen=True)
class ClassificationReport:
    n: int
    num_subsets: int
    num_translation_classes: int
    num_deck_classes: int
    determined: bool
    exceptions: tuple[tuple[CyclicSet, CyclicSet], ...]  # capped
    exception_pair_count: int
    exception_subset_count: int
    elapsed: float


def classify(
    n: int, max_exceptions: int = MAX_EXCEPTIONS, max_n: int = DEFAULT_MAX_N
) -> ClassificationReport:
    """Group all 2^n subsets by exact 3-deck and compare with translation classes."""
    if n > min(max_n, HARD_CAP_N):
        raise ValueError(f"n={n} over the classification cap {min(max_n, HARD_CAP_N)}")
    start = time.perf_counter()
    full = (1 << n) - 1
    by_digest: dict[bytes, list[int]] = {}
    num_classes = 0
    for mask in range(1 << n):
        rots = [((mask << t) | (mask >> (n - t))) & full if t else mask for t in range(n)]
        if min(rots) != mask:
            continue
        num_classes += 1
        digest = hashlib.sha256(_deck3_bytes(mask, n)).digest()
        by_digest.setdefault(digest, []).append(mask)

    num_deck_classes = 0
    exceptions: list[tuple[CyclicSet, CyclicSet]] = []
    pair_count = 0
    subset_count = 0
    for masks in by_digest.values():
        if len(masks) == 1:
            num_deck_classes += 1
            continue
        # digest collision: confirm with full exact deck values
        groups: dict[bytes, list[int]] = {}
        for m in masks:
            groups.setdefault(_deck3_bytes(m, n), []).append(m)
        num_deck_classes += len(groups)
        for members in groups.values():
            if len(members) < 2:
                continue
            pair_count += math.comb(len(members), 2)
            subset_count += sum(CyclicSet(n, m).orbit_size() for m in members)
            for i in range(len(members)):
                for j in range(i + 1, len(members)):
                    if len(exceptions) >= max_exceptions:
                        break
                    e, f = CyclicSet(n, members[i]), CyclicSet(n, members[j])
                    # re-verify before reporting
                    assert decks_equal(deck3_set(e), deck3_set(f))
                    assert translation_equivalent(e, f) is None
                    exceptions.append((e, f))

    assert num_classes == necklace_count(n)
    return ClassificationReport(
        n=n,
        num_subsets=1 << n,
        num_translation_classes=num_classes,
        num_deck_classes=num_deck_classes,
        determined=num_deck_classes == num_classes,
        exceptions=tuple(exceptions),
        exception_pair_count=pair_count,
        exception_subset_count=subset_count,
        elapsed=time.perf_counter() - start,
    )


def exception_fraction(n: int, max_n: int = DEFAULT_MAX_N) -> Fraction:
    """Exact fraction of subsets of Z_n living in a colliding 3-deck class."""
    report = classify(n, max_n=max_n)
    return Fraction(report.exception_subset_count, report.num_subsets)


@dataclass(frozen=True)
class McReport:
    n: int
    samples: int
    seed: int
    generator: str
    zero_counts: tuple[int, ...]  # per frequency
    any_zero_count: int
    constant_sample_count: int  # draws of the empty or full subset; their
    # transforms vanish somewhere trivially, so prime-modulus no-zero claims
    # apply to the remaining (non-constant) samples only
    exact_half_probability: Optional[Fraction]  # C(n, n/2) / 2^n, even n only

    @property
    def nonconstant_any_zero_count(self) -> int:
        return self.any_zero_count - self.constant_sample_count

    def zero_rate(self, s: int) -> float:
        return self.zero_counts[s] / self.samples

    def standard_error(self, s: int) -> float:
        p = self.zero_rate(s)
        return math.sqrt(p * (1 - p) / self.samples)


def zero_probability_mc(n: int, samples: int, seed: int) -> McReport:
    """Sample uniform random subsets (independent fair coin per element) and
    count exact Fourier-transform zeros per frequency."""
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")
    if n > 63:
        raise ValueError(f"n={n} exceeds the single-word sampling limit")
    rg = np.random.Generator(np.random.Philox(seed))
    masks = rg.integers(0, 1 << n, size=samples, dtype=np.uint64)
    counts = [0] * n
    any_zero = 0
    constant = 0
    full = (1 << n) - 1
    for m in masks.tolist():
        if m == 0 or m == full:
            constant += 1
        zm = indicator_zero_mask(n, m)
        if zm:
            any_zero += 1
            while zm:
                low = zm & -zm
                counts[low.bit_length() - 1] += 1
                zm ^= low
    exact_half = Fraction(math.comb(n, n // 2), 2**n) if n % 2 == 0 else None
    return McReport(
        n=n,
        samples=samples,
        seed=seed,
        generator=GENERATOR_NAME,
        zero_counts=tuple(counts),
        any_zero_count=any_zero,
        constant_sample_count=constant,
        exact_half_probability=exact_half,
    )


NONVANISHING = "NONVANISHING"
PREFIX = "PREFIX"
EXTENDABLE = "EXTENDABLE"
UNKNOWN = "UNKNOWN"


def determinacy_certificate(e: CyclicSet) -> str:
    """Strongest certificate that E is 3-deck determined up to translation.

    NONVANISHING: the transform has no zeros; PREFIX: frequencies 1..d(n) all
    lie in the support; EXTENDABLE: the support is an extendable domain.
    UNKNOWN guarantees nothing.
    """
    if e.size == 0:
        raise ValueError("E must be nonempty")
    n = e.n
    zm = indicator_zero_mask(n, e.mask)
    if zm == 0:
        return NONVANISHING
    d = arith_profile(n)[1]
    if all(not zm >> (j % n) & 1 for j in range(1, d + 1)):
        return PREFIX
    if _support_extendable(n, zm ^ ((1 << n) - 1)):
        return EXTENDABLE
    return UNKNOWN


@lru_cache(maxsize=None)
def _support_extendable(n: int, support_mask: int) -> bool:
    # supports are unions of gcd classes, so only ~2^d(n) distinct masks occur
    return is_extendable(CyclicSet(n, support_mask)).extendable

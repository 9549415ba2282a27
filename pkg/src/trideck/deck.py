"""Exact k-decks (correlation tables) of sets and integer-valued functions on Z_n.

The k-deck of f is N(x_1, ..., x_{k-1}) = sum_x f(x) f(x+x_1) ... f(x+x_{k-1}).
For an indicator function this counts translated copies of the pattern
{0, x_1, ..., x_{k-1}} inside the set, and the whole table is computed with
bitmask intersections and popcounts.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .cyclic import CyclicSet, rotations

DEFAULT_BUDGET = 2**31


class DeckBudgetError(Exception):
    """Raised when a deck table would exceed the entry budget."""

    def __init__(self, required: int, budget: int):
        super().__init__(f"deck would need {required} entries (budget {budget})")
        self.required = required
        self.budget = budget


@dataclass(frozen=True)
class IntFunction:
    """An exact rational-valued function on Z_n: integer numerators over one denominator."""

    n: int
    values: tuple[int, ...]
    denom: int = 1

    def __post_init__(self):
        if len(self.values) != self.n:
            raise ValueError(f"expected {self.n} values, got {len(self.values)}")
        if self.denom < 1:
            raise ValueError(f"denominator must be positive, got {self.denom}")

    @classmethod
    def from_set(cls, e: CyclicSet) -> "IntFunction":
        return cls(n=e.n, values=tuple((e.mask >> j) & 1 for j in range(e.n)))

    @property
    def is_indicator(self) -> bool:
        return self.denom == 1 and all(v in (0, 1) for v in self.values)

    def total(self) -> Fraction:
        return Fraction(sum(self.values), self.denom)


@dataclass(frozen=True)
class Deck:
    """Full k-deck table, row-major over (x_1, ..., x_{k-1}) in Z_n^{k-1}."""

    n: int
    k: int
    values: tuple = field(repr=False)

    def __post_init__(self):
        if self.k < 2:
            raise ValueError(f"deck order must be >= 2, got {self.k}")
        if len(self.values) != self.n ** (self.k - 1):
            raise ValueError("deck table has wrong length")

    def value(self, *xs: int):
        if len(xs) != self.k - 1:
            raise ValueError(f"expected {self.k - 1} arguments")
        idx = 0
        for x in xs:
            idx = idx * self.n + (x % self.n)
        return self.values[idx]


def _check_budget(n: int, k: int, budget: int) -> None:
    required = n ** (k - 1)
    if required > budget:
        raise DeckBudgetError(required, budget)


def deck(f: IntFunction, k: int, budget: int = DEFAULT_BUDGET) -> Deck:
    """The k-deck of f, evaluated exactly from the definition."""
    if k < 2:
        raise ValueError(f"deck order must be >= 2, got {k}")
    _check_budget(f.n, k, budget)
    n = f.n
    vals = f.values
    out = []
    for xs in product(range(n), repeat=k - 1):
        acc = 0
        for x in range(n):
            term = vals[x]
            if term == 0:
                continue
            for xi in xs:
                term *= vals[(x + xi) % n]
                if term == 0:
                    break
            acc += term
        out.append(acc)
    if f.denom == 1:
        return Deck(n=n, k=k, values=tuple(out))
    d = Fraction(1, f.denom**k)
    return Deck(n=n, k=k, values=tuple(v * d for v in out))


def deck_set(e: CyclicSet, k: int, budget: int = DEFAULT_BUDGET) -> Deck:
    """The k-deck of an indicator, via N(x_1,..) = |E & (E-x_1) & ...| popcounts."""
    if k < 2:
        raise ValueError(f"deck order must be >= 2, got {k}")
    _check_budget(e.n, k, budget)
    n = e.n
    rots = rotations(e.mask, n)  # rots[t] = mask of E + t, so E - x is rots[(n - x) % n]
    shifted = [rots[(n - x) % n] for x in range(n)]
    out = []

    def rec(depth: int, acc: int):
        if depth == k - 1:
            out.append(acc.bit_count())
            return
        for x in range(n):
            rec(depth + 1, acc & shifted[x])

    rec(0, e.mask)
    return Deck(n=n, k=k, values=tuple(out))


def deck3_set(e: CyclicSet) -> Deck:
    """The 3-deck of an indicator; the classifier's hot path."""
    n = e.n
    rots = rotations(e.mask, n)
    shifted = [rots[(n - x) % n] for x in range(n)]
    mask = e.mask
    out = []
    for x1 in range(n):
        m1 = mask & shifted[x1]
        out.extend((m1 & shifted[x2]).bit_count() for x2 in range(n))
    return Deck(n=n, k=3, values=tuple(out))


def deck2_set(e: CyclicSet) -> Deck:
    """The 2-deck of an indicator: difference-multiset counts |E & (E - x)|."""
    n = e.n
    rots = rotations(e.mask, n)
    mask = e.mask
    return Deck(n=n, k=2, values=tuple((mask & rots[(n - x) % n]).bit_count() for x in range(n)))


def decks_equal(d1: Deck, d2: Deck) -> bool:
    """Componentwise exact equality; raises on shape mismatch."""
    if d1.n != d2.n or d1.k != d2.k:
        raise ValueError(f"shape mismatch: ({d1.n},{d1.k}) vs ({d2.n},{d2.k})")
    return d1.values == d2.values


def deck_fingerprint(d: Deck) -> str:
    """SHA-256 digest of the canonical serialization (n, k, values in order).

    Equal decks give equal digests; any consumer grouping by digest must
    confirm collisions by full equality before reporting.
    """
    h = hashlib.sha256()
    h.update(f"deck:{d.n}:{d.k}:".encode())
    for v in d.values:
        if isinstance(v, Fraction):
            h.update(f"{v.numerator}/{v.denominator},".encode())
        else:
            h.update(f"{v},".encode())
    return h.hexdigest()

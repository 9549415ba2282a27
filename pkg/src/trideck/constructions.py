"""Counterexample families: set pairs with equal decks that are not translates.

Two exact families (even modulus n = 2k, and n = pqrd), the classic 2-deck
pair E = A+B, F = A-B, plus two floating-point demonstrations with
real-valued functions whose 3-decks collide.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .cyclic import CyclicSet, factorize, translation_equivalent
from .deck import deck2_set, deck3_set, decks_equal


@dataclass(frozen=True)
class CounterexamplePair:
    n: int
    e: CyclicSet
    f: CyclicSet
    kind: str  # "even-2k" | "pqrd" | "two-deck"
    deck_order: int
    decks_equal: bool
    translates: bool

    @property
    def verified(self) -> bool:
        """True when the pair backs its claim: equal decks, not translates."""
        return self.decks_equal and not self.translates


def _verify(n, e, f, kind, order) -> CounterexamplePair:
    dk = deck2_set if order == 2 else deck3_set
    return CounterexamplePair(
        n=n,
        e=e,
        f=f,
        kind=kind,
        deck_order=order,
        decks_equal=decks_equal(dk(e), dk(f)),
        translates=translation_equivalent(e, f) is not None,
    )


def even_pair(k: int) -> CounterexamplePair:
    """For n = 2k, k >= 6: E = {0} u {3..k-1} u {k+1, k+2}, F = {0,1} u {3..k-1} u {k+2}.

    Both contain a unique block of k-3 consecutive residues, which pins any
    candidate translation; k < 6 breaks that uniqueness and is rejected.
    """
    if k < 6:
        raise ValueError(f"k must be >= 6, got {k}")
    n = 2 * k
    e = CyclicSet.from_elements(n, [0, *range(3, k), k + 1, k + 2])
    f = CyclicSet.from_elements(n, [0, 1, *range(3, k), k + 2])
    return _verify(n, e, f, "even-2k", 3)


def _is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == [(n, 1)]


def pqrd_pair(p: int, q: int, r: int, d: int) -> CounterexamplePair:
    """For n = pqrd, p != q prime, r, d > 1: E = A u (B+1), F = A u (B+d+1).

    A = {l1*n/q + k*d}, B = {l2*n/p + k*d} with k < r, l1 < q, l2 < p.
    Elements of A and B are 0 mod d while the shifted copies are 1 mod d,
    so the unions are collision-free; this is asserted anyway.
    """
    if not (_is_prime(p) and _is_prime(q) and p != q):
        raise ValueError(f"p and q must be distinct primes, got {p}, {q}")
    if r < 2 or d < 2:
        raise ValueError(f"r and d must be > 1, got r={r}, d={d}")
    n = p * q * r * d
    a = {l1 * (n // q) + k * d for l1 in range(q) for k in range(r)}
    b = {l2 * (n // p) + k * d for l2 in range(p) for k in range(r)}
    assert len(a) == q * r and len(b) == p * r
    b1 = {(x + 1) % n for x in b}
    bd1 = {(x + d + 1) % n for x in b}
    assert not (a & b1) and not (a & bd1)
    e = CyclicSet.from_elements(n, a | b1)
    f = CyclicSet.from_elements(n, a | bd1)
    return _verify(n, e, f, "pqrd", 3)


def two_deck_pair(a: CyclicSet, b: CyclicSet) -> CounterexamplePair:
    """E = A+B and F = A-B share a 2-deck whenever the sums/differences are distinct.

    Rejected when A+B or A-B has a repeated element, or when -B is a
    translate of B (then E and F are trivially translates).
    """
    if a.n != b.n:
        raise ValueError(f"mismatched moduli {a.n} != {b.n}")
    n = a.n
    sums = [(x + y) % n for x in a.elements for y in b.elements]
    diffs = [(x - y) % n for x in a.elements for y in b.elements]
    if len(set(sums)) != len(sums):
        raise ValueError("A+B has a repeated element; not a set")
    if len(set(diffs)) != len(diffs):
        raise ValueError("A-B has a repeated element; not a set")
    if translation_equivalent(b.reflect(), b) is not None:
        raise ValueError("-B is a translate of B; pair would be degenerate")
    e = CyclicSet.from_elements(n, sums)
    f = CyclicSet.from_elements(n, diffs)
    return _verify(n, e, f, "two-deck", 2)


def float_deck3(values) -> np.ndarray:
    """3-deck of a real vector, N[x1, x2] = sum_x f(x) f(x+x1) f(x+x2)."""
    g = np.asarray(values, dtype=float)
    n = len(g)
    out = np.empty((n, n))
    rolls = [np.roll(g, -x) for x in range(n)]
    for x1 in range(n):
        m = g * rolls[x1]
        for x2 in range(n):
            out[x1, x2] = float(np.dot(m, rolls[x2]))
    return out


def cosine_pair(n: int) -> tuple[np.ndarray, np.ndarray]:
    """f = 0 and g(k) = cos(2*pi*k/n): distinct real functions, same 3-deck (n >= 4)."""
    if n < 4:
        raise ValueError(f"n must be >= 4, got {n}")
    f = np.zeros(n)
    g = np.cos(2 * np.pi * np.arange(n) / n)
    return f, g


def g_alpha(n: int, alpha: float) -> np.ndarray:
    """Phase-twisted companion of chi_{1..n/2}: same 3-deck, not a translate.

    Multiplies the transform of the indicator of E = {1, ..., n/2} by
    e^{2*pi*i*h(l)} with h = alpha at l = 1, -alpha at l = -1, 0 elsewhere,
    and inverts; h is odd, so the result is real up to rounding noise.
    """
    if n < 4 or n % 2:
        raise ValueError(f"n must be even and >= 4, got {n}")
    chi = np.zeros(n)
    chi[1 : n // 2 + 1] = 1.0
    spectrum = np.fft.fft(chi).astype(complex)
    spectrum[1] *= np.exp(2j * np.pi * alpha)
    spectrum[n - 1] *= np.exp(-2j * np.pi * alpha)
    g = np.fft.ifft(spectrum)
    if np.max(np.abs(g.imag)) >= 1e-9:
        raise AssertionError("inverse transform is not real; phase twist is broken")
    return g.real

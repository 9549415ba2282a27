"""Exact arithmetic on Z_n: divisors, gcd classes, cyclic subsets and translation.

Subsets of Z_n are stored as bitmasks (bit j set <=> j is a member), which
keeps rotation, reflection and intersection cheap enough for exhaustive
enumeration over all 2^n subsets at small n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional


def divisors(n: int) -> list[int]:
    """All positive divisors of n in increasing order."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of n as (prime, multiplicity) pairs, primes increasing."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    out = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if m > 1:
        out.append((m, 1))
    return out


def arith_profile(n: int) -> tuple[int, int, list[tuple[int, int]]]:
    """(Euler totient, number of divisors, prime factorization) of n."""
    fact = factorize(n)
    phi = 1
    ndiv = 1
    for p, e in fact:
        phi *= (p - 1) * p ** (e - 1)
        ndiv *= e + 1
    return phi, ndiv, fact


def gcd_class(n: int, a: int) -> frozenset[int]:
    """The class <a> = {k in Z_n : gcd(k, n) = a}; requires a | n."""
    if n < 1 or a < 1 or n % a != 0:
        raise ValueError(f"{a} does not divide {n}")
    return frozenset(k for k in range(n) if math.gcd(k, n) == a)


def subgroup(n: int, a: int) -> frozenset[int]:
    """The subgroup aZ_n = {0, a, 2a, ...}; requires a | n."""
    if n < 1 or a < 1 or n % a != 0:
        raise ValueError(f"{a} does not divide {n}")
    return frozenset(range(0, n, a))


@dataclass(frozen=True)
class GcdClassTable:
    """Per-divisor gcd classes <a> and subgroups aZ_n of a fixed modulus."""

    n: int
    classes: dict[int, frozenset[int]]
    subgroups: dict[int, frozenset[int]]

    @classmethod
    def build(cls, n: int) -> "GcdClassTable":
        divs = divisors(n)
        classes = {a: frozenset() for a in divs}
        buckets: dict[int, set[int]] = {a: set() for a in divs}
        for k in range(n):
            buckets[math.gcd(k, n) if k else n].add(k)
        classes = {a: frozenset(buckets[a]) for a in divs}
        subs = {a: subgroup(n, a) for a in divs}
        return cls(n=n, classes=classes, subgroups=subs)


def coprime_decomposition(n: int, k: int) -> tuple[int, int]:
    """Split k = a + b with gcd(a, n) = gcd(b, n) = 1; n must be odd.

    Per odd prime p | n the residues are (2, -1) when k = 1 (mod p) and
    (1, k - 1) otherwise; a is the CRT solution in [0, rad(n)) and b = k - a.
    """
    if n < 1 or n % 2 == 0:
        raise ValueError(f"n must be odd and positive, got {n}")
    if n == 1:
        return 1, k - 1
    primes = [p for p, _ in factorize(n)]
    rad = math.prod(primes)
    a = 0
    for p in primes:
        ap = 2 if k % p == 1 else 1
        q = rad // p
        a = (a + ap * q * pow(q, -1, p)) % rad
    b = k - a
    assert math.gcd(a, n) == 1 and math.gcd(b, n) == 1
    return a, b


@dataclass(frozen=True)
class CyclicSet:
    """A subset of Z_n as a modulus plus a length-n membership bitmask."""

    n: int
    mask: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"modulus must be positive, got {self.n}")
        if not 0 <= self.mask < (1 << self.n):
            raise ValueError(f"mask {self.mask:#x} out of range for n={self.n}")

    @classmethod
    def from_elements(cls, n: int, elements: Iterable[int]) -> "CyclicSet":
        mask = 0
        for e in elements:
            mask |= 1 << (e % n)
        return cls(n=n, mask=mask)

    @property
    def elements(self) -> tuple[int, ...]:
        return tuple(j for j in range(self.n) if self.mask >> j & 1)

    @property
    def size(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, j: int) -> bool:
        return bool(self.mask >> (j % self.n) & 1)

    def rotate(self, t: int) -> "CyclicSet":
        """The translate E + t (mod n)."""
        t %= self.n
        full = (1 << self.n) - 1
        return CyclicSet(self.n, ((self.mask << t) | (self.mask >> (self.n - t))) & full)

    def reflect(self) -> "CyclicSet":
        """The reflection -E (mod n)."""
        return CyclicSet.from_elements(self.n, (-j for j in self.elements))

    def complement(self) -> "CyclicSet":
        return CyclicSet(self.n, self.mask ^ ((1 << self.n) - 1))

    def canonical_rotation(self) -> "CyclicSet":
        """The rotation whose mask, read as an integer, is minimal."""
        return CyclicSet(self.n, min(rotations(self.mask, self.n)))

    def period(self) -> int:
        """Smallest t >= 1 with E + t = E; always a divisor of n."""
        for t in divisors(self.n):
            if self.rotate(t).mask == self.mask:
                return t
        raise AssertionError("unreachable: n is always a period")

    def orbit_size(self) -> int:
        """Number of distinct translates of E."""
        return self.period()


def rotations(mask: int, n: int) -> list[int]:
    """Masks of E + t for t = 0..n-1."""
    full = (1 << n) - 1
    return [((mask << t) | (mask >> (n - t))) & full if t else mask for t in range(n)]


def translation_equivalent(e: CyclicSet, f: CyclicSet) -> Optional[int]:
    """Some t with F = E + t (mod n), or None if the sets are not translates."""
    if e.n != f.n:
        raise ValueError(f"mismatched moduli {e.n} != {f.n}")
    if e.size != f.size:
        return None
    for t, m in enumerate(rotations(e.mask, e.n)):
        if m == f.mask:
            return t
    return None

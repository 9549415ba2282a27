"""Exact zero set of the Fourier transform on Z_n via cyclotomic divisibility.

With the convention f^(s) = sum_j f(j) zeta_n^{-js}, the value at s is an
integer combination of d-th roots of unity for d = n/gcd(s, n); it vanishes
exactly when the d-th cyclotomic polynomial divides the folded mask
polynomial. Floating point is never authoritative here; numpy's FFT is kept
only as a cross-check companion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .cyclic import CyclicSet, divisors, gcd_class
from .deck import IntFunction


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial; coefficient index = exponent, top coefficient nonzero."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        if self.coefficients and self.coefficients[-1] == 0:
            raise ValueError("trailing coefficient must be nonzero (or poly empty)")

    @classmethod
    def from_list(cls, coeffs: list[int]) -> "IntPolynomial":
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        return cls(tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.coefficients

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero() or other.is_zero():
            return IntPolynomial(())
        a, b = self.coefficients, other.coefficients
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return IntPolynomial.from_list(out)

    def divmod_monic(self, divisor: "IntPolynomial") -> tuple["IntPolynomial", "IntPolynomial"]:
        """Quotient and remainder by a monic divisor, exact over the integers."""
        if divisor.is_zero() or divisor.coefficients[-1] != 1:
            raise ValueError("divisor must be monic")
        rem = list(self.coefficients)
        dd = divisor.degree
        quo = [0] * max(len(rem) - dd, 0)
        for i in range(len(rem) - dd - 1, -1, -1):
            c = rem[i + dd]
            if c:
                quo[i] = c
                for j, dj in enumerate(divisor.coefficients):
                    rem[i + j] -= c * dj
        return IntPolynomial.from_list(quo), IntPolynomial.from_list(rem[:dd])


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> IntPolynomial:
    """The d-th cyclotomic polynomial, by exact division of x^d - 1."""
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    poly = IntPolynomial.from_list([-1] + [0] * (d - 1) + [1])  # x^d - 1
    for e in divisors(d)[:-1]:
        poly, rem = poly.divmod_monic(cyclotomic(e))
        assert rem.is_zero()
    return poly


def _fold(values: tuple[int, ...], n: int, s: int) -> IntPolynomial:
    """Fold f into C(x) with f^(s) = C(zeta_d), d = n/gcd(s, n), deg C < d."""
    g = math.gcd(s % n, n)
    d = n // g
    coeffs = [0] * d
    for j, v in enumerate(values):
        if v:
            coeffs[((n - (j * s) % n) // g) % d] += v
    return IntPolynomial.from_list(coeffs)


def ft_is_zero(f: IntFunction, s: int) -> bool:
    """Whether f^(s) = 0 exactly as an algebraic number."""
    c = _fold(f.values, f.n, s)
    if c.is_zero():
        return True
    d = f.n // math.gcd(s % f.n, f.n)
    _, rem = c.divmod_monic(cyclotomic(d))
    return rem.is_zero()


@dataclass(frozen=True)
class SpectrumReport:
    """Exact per-frequency zero/nonzero verdicts plus the divisor-class summary."""

    n: int
    zero_mask: int  # bit s set <=> f^(s) = 0 exactly

    @property
    def support_mask(self) -> int:
        return self.zero_mask ^ ((1 << self.n) - 1)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(s for s in range(self.n) if not self.zero_mask >> s & 1)

    @property
    def zero_frequencies(self) -> tuple[int, ...]:
        return tuple(s for s in range(self.n) if self.zero_mask >> s & 1)

    @property
    def support_divisors(self) -> tuple[int, ...]:
        """Divisors a of n with the whole class <a> inside the support."""
        sup = set(self.support)
        return tuple(a for a in divisors(self.n) if gcd_class(self.n, a) <= sup)

    def support_set(self) -> CyclicSet:
        return CyclicSet(self.n, self.support_mask)


def zero_set(f: IntFunction) -> SpectrumReport:
    """Full exact zero report: one divisibility test per gcd class of frequencies.

    For integer-valued f the verdict is constant on each class <a>; a second
    class member is spot-checked to assert that constancy.
    """
    n = f.n
    zero_mask = 0
    for a in divisors(n):
        cls = sorted(gcd_class(n, a))
        verdict = ft_is_zero(f, cls[0])
        if len(cls) > 1:
            assert ft_is_zero(f, cls[1]) == verdict, "class constancy violated"
        if verdict:
            for s in cls:
                zero_mask |= 1 << s
    return SpectrumReport(n=n, zero_mask=zero_mask)


@lru_cache(maxsize=1 << 22)
def indicator_zero_mask(n: int, mask: int) -> int:
    """Memoized zero mask for the indicator of the subset given by mask."""
    return zero_set(IntFunction.from_set(CyclicSet(n, mask))).zero_mask


def is_periodic(f: IntFunction, a: int) -> bool:
    """Whether f(x + a) = f(x) for all x; requires a | n."""
    if a < 1 or f.n % a != 0:
        raise ValueError(f"{a} does not divide {f.n}")
    return all(f.values[(x + a) % f.n] == f.values[x] for x in range(f.n))


def gap(a: CyclicSet) -> int:
    """Length of the longest cyclic run of consecutive points of Z_n outside A."""
    if a.mask == 0:
        return a.n
    elems = a.elements
    best = a.n - 1 - elems[-1] + elems[0]  # wrap-around run
    for prev, cur in zip(elems, elems[1:]):
        best = max(best, cur - prev - 1)
    return best


def a_x(n: int, x: int) -> CyclicSet:
    """The set A_x = {k in Z_n : gcd(k, n) <= x}; note gcd(0, n) = n."""
    return CyclicSet.from_elements(n, (k for k in range(n) if math.gcd(k, n) <= x))


def float_dft(values) -> np.ndarray:
    """Complex DFT with the negative-exponent convention (numpy's fft)."""
    return np.fft.fft(np.asarray(values, dtype=complex))

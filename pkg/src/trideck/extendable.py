"""Decide whether every additive function on A (subset of Z_n) is linear.

An additive function h: A -> R/Z satisfies h(x+y) = h(x) + h(y) whenever x, y
and x+y (mod n) all lie in A. The additive functions form a closed subgroup S
of the torus (R/Z)^A cut out by integer constraint rows; the linear functions
k -> L*k (mod 1) form the closed one-parameter subgroup L generated by the
vector of canonical representatives. A is called extendable when S is a
subset of L, which by Pontryagin duality holds exactly when the annihilator
lattice of L (the integer kernel of that vector) lies inside the row lattice
of the constraint matrix. Everything is decided with exact integer linear
algebra (Smith normal form); when A is not extendable an explicit rational
witness is produced and re-verified against an independent brute-force
linearity oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Mapping, Optional

from .cyclic import CyclicSet


@dataclass(frozen=True)
class AdditiveConstraintSystem:
    """Deduplicated integer constraint rows e_x + e_y - e_{x+y} over A."""

    n: int
    support: tuple[int, ...]
    rows: tuple[tuple[int, ...], ...]


def build_constraints(a: CyclicSet) -> AdditiveConstraintSystem:
    """One row per unordered pair x <= y in A with x + y (mod n) also in A."""
    n = a.n
    support = a.elements
    index = {x: i for i, x in enumerate(support)}
    seen = set()
    rows = []
    c = len(support)
    for i, x in enumerate(support):
        for y in support[i:]:
            s = (x + y) % n
            if s not in index:
                continue
            row = [0] * c
            row[index[x]] += 1
            row[index[y]] += 1
            row[index[s]] -= 1
            row = tuple(row)
            if any(row) and row not in seen:
                seen.add(row)
                rows.append(row)
    return AdditiveConstraintSystem(n=n, support=support, rows=tuple(rows))


def _identity(k: int) -> list[list[int]]:
    return [[int(i == j) for j in range(k)] for i in range(k)]


class _SnfState:
    """Working matrix A with transforms maintained so that U A V = M and P M Q = A."""

    def __init__(self, m_rows: list[list[int]], cols: int):
        self.a = [list(r) for r in m_rows]
        self.m = len(m_rows)
        self.c = cols
        self.u = _identity(self.m)
        self.p = _identity(self.m)
        self.v = _identity(self.c)
        self.q = _identity(self.c)

    # row ops: A <- E A, U <- U E^{-1}, P <- E P
    def swap_rows(self, i, j):
        if i == j:
            return
        self.a[i], self.a[j] = self.a[j], self.a[i]
        self.p[i], self.p[j] = self.p[j], self.p[i]
        for r in self.u:
            r[i], r[j] = r[j], r[i]

    def add_row(self, i, j, f):
        """row i += f * row j."""
        if f == 0:
            return
        ai, aj = self.a[i], self.a[j]
        for t in range(self.c):
            ai[t] += f * aj[t]
        pi, pj = self.p[i], self.p[j]
        for t in range(self.m):
            pi[t] += f * pj[t]
        for r in self.u:
            r[j] -= f * r[i]

    def negate_row(self, i):
        self.a[i] = [-x for x in self.a[i]]
        self.p[i] = [-x for x in self.p[i]]
        for r in self.u:
            r[i] = -r[i]

    # column ops: A <- A F, V <- F^{-1} V, Q <- Q F
    def swap_cols(self, i, j):
        if i == j:
            return
        for r in self.a:
            r[i], r[j] = r[j], r[i]
        for r in self.q:
            r[i], r[j] = r[j], r[i]
        self.v[i], self.v[j] = self.v[j], self.v[i]

    def add_col(self, j, i, f):
        """col j += f * col i."""
        if f == 0:
            return
        for r in self.a:
            r[j] += f * r[i]
        for r in self.q:
            r[j] += f * r[i]
        vi, vj = self.v[i], self.v[j]
        for t in range(self.c):
            vi[t] -= f * vj[t]

    def negate_col(self, j):
        for r in self.a:
            r[j] = -r[j]
        for r in self.q:
            r[j] = -r[j]
        self.v[j] = [-x for x in self.v[j]]


def _snf(m_rows: list[list[int]], cols: int) -> _SnfState:
    """Smith normal form with all four transform matrices."""
    st = _SnfState(m_rows, cols)
    a = st.a
    rank_limit = min(st.m, st.c)
    t = 0
    while t < rank_limit:
        # locate a pivot of minimal absolute value in the trailing submatrix
        pivot = None
        for i in range(t, st.m):
            for j in range(t, st.c):
                if a[i][j] and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        st.swap_rows(t, pivot[0])
        st.swap_cols(t, pivot[1])
        while True:
            # clear column t
            dirty = False
            for i in range(t + 1, st.m):
                if a[i][t]:
                    f = a[i][t] // a[t][t]
                    st.add_row(i, t, -f)
                    if a[i][t]:
                        st.swap_rows(i, t)  # strictly smaller remainder becomes pivot
                        dirty = True
            if dirty:
                continue
            # clear row t
            for j in range(t + 1, st.c):
                if a[t][j]:
                    f = a[t][j] // a[t][t]
                    st.add_col(j, t, -f)
                    if a[t][j]:
                        st.swap_cols(j, t)
                        dirty = True
            if dirty:
                continue
            break
        if a[t][t] < 0:
            st.negate_row(t)
        # enforce the divisibility chain: pivot must divide the trailing block
        viol = None
        for i in range(t + 1, st.m):
            for j in range(t + 1, st.c):
                if a[i][j] % a[t][t]:
                    viol = i
                    break
            if viol is not None:
                break
        if viol is not None:
            st.add_row(t, viol, 1)
            continue
        t += 1
    return st


def smith_normal_form(
    m: list[list[int]], cols: Optional[int] = None
) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
    """(U, D, V) with M = U D V, U and V unimodular, D diagonal with d1 | d2 | ...

    `cols` is only needed to disambiguate the width of a matrix with no rows.
    """
    if m and cols is None:
        cols = len(m[0])
    if cols is None:
        raise ValueError("cols is required for an empty matrix")
    st = _snf([list(r) for r in m], cols)
    return st.u, st.a, st.v


def _hnf_reduce(rows, cols: int) -> list[list[int]]:
    """A small basis of the integer row lattice (at most `cols` rows).

    Incremental Hermite-style insertion with gcd pivot steps; used to shrink a
    tall constraint matrix before the Smith normal form.
    """
    pivots: dict[int, list[int]] = {}
    for row in rows:
        r = list(row)
        for j in range(cols):
            if r[j] == 0:
                continue
            if j not in pivots:
                pivots[j] = r
                break
            p = pivots[j]
            while r[j]:
                f = p[j] // r[j]
                for t in range(j, cols):
                    p[t] -= f * r[t]
                p, r = r, p
            pivots[j] = p
        # a fully reduced row is dependent and dropped
    return [pivots[j] for j in sorted(pivots)]


def integer_kernel(v: list[int]) -> list[list[int]]:
    """Basis of {w integer vector : w . v = 0}."""
    c = len(v)
    w = list(v)
    cmat = _identity(c)  # accumulated column ops; kernel = non-pivot columns
    while True:
        nz = [j for j in range(c) if w[j]]
        if len(nz) <= 1:
            break
        j0 = min(nz, key=lambda j: abs(w[j]))
        for j in nz:
            if j == j0:
                continue
            f = w[j] // w[j0]
            w[j] -= f * w[j0]
            for row in cmat:
                row[j] -= f * row[j0]
    if not any(w):
        return _identity(c)
    j0 = next(j for j in range(c) if w[j])
    return [[cmat[i][j] for i in range(c)] for j in range(c) if j != j0]


@dataclass(frozen=True)
class Witness:
    """A rational additive-but-nonlinear function on A, one cleared denominator."""

    elements: tuple[int, ...]
    numerators: tuple[int, ...]
    denominator: int

    def as_mapping(self) -> dict[int, Fraction]:
        return {
            k: Fraction(num, self.denominator)
            for k, num in zip(self.elements, self.numerators)
        }


@dataclass(frozen=True)
class ExtendabilityVerdict:
    extendable: bool
    witness: Optional[Witness] = None
    slope: Optional[Fraction] = None

    def __post_init__(self):
        if self.extendable and self.witness is not None:
            raise ValueError("extendable verdict cannot carry a witness")
        if not self.extendable and self.slope is not None:
            raise ValueError("negative verdict cannot carry a slope certificate")


def linearity_check(h: Mapping[int, Fraction]) -> Optional[Fraction]:
    """Brute-force slope search: some t with h(k) = t*k (mod 1) on A, else None.

    Independent of the lattice machinery: every admissible slope satisfies
    t*k0 = h(k0) (mod 1) for the smallest nonzero k0 in A, and only the
    residue of t mod 1 matters, so t = (h(k0) + z)/k0 for z = 0..k0-1 covers
    all candidates.
    """
    nonzero = sorted(k for k in h if k != 0)
    if not nonzero:
        raise ValueError("A must contain a nonzero element")
    k0 = nonzero[0]
    base = Fraction(h[k0]) % 1
    for z in range(k0):
        t = (base + z) / k0
        if all((t * k - h[k]) % 1 == 0 for k in h):
            return t
    return None


def _make_witness(support, values: list[Fraction]) -> Witness:
    values = [v % 1 for v in values]
    denom = lcm(*(v.denominator for v in values)) if values else 1
    return Witness(
        elements=tuple(support),
        numerators=tuple(int(v * denom) for v in values),
        denominator=denom,
    )


def is_extendable(a: CyclicSet) -> ExtendabilityVerdict:
    """Decide Definition-of-extendable-domain for A; constructive when false."""
    if a.size == 0:
        raise ValueError("A must be nonempty")
    system = build_constraints(a)
    support = system.support
    c = len(support)
    basis = _hnf_reduce(system.rows, c)
    st = _snf(basis, c)
    diag = [st.a[i][i] for i in range(min(len(basis), c)) if st.a[i][i]]
    rank = len(diag)
    q = st.q
    kernel = integer_kernel(list(support))

    offender = None  # (kernel vector, failing coordinate index in SNF coords)
    for w in kernel:
        y = [sum(w[i] * q[i][j] for i in range(c)) for j in range(c)]
        for j in range(c):
            bad = (y[j] % diag[j] != 0) if j < rank else (y[j] != 0)
            if bad:
                offender = (w, j, y[j])
                break
        if offender:
            break

    if offender is None:
        if support == (0,):
            return ExtendabilityVerdict(extendable=True, slope=Fraction(0))
        h_sum = {k: Fraction(0) for k in support}
        for i in range(rank):
            if diag[i] > 1:
                for idx, k in enumerate(support):
                    h_sum[k] += Fraction(q[idx][i], diag[i])
        slope = linearity_check(h_sum)
        assert slope is not None, "extendable verdict contradicted by torsion generator"
        return ExtendabilityVerdict(extendable=True, slope=slope)

    _, j, yj = offender
    if j < rank:
        # torsion generator of the additive group escapes the linear subgroup
        values = [Fraction(q[idx][j], diag[j]) for idx in range(c)]
    else:
        # a free circle direction escapes: scale so the pairing lands on 1/2
        values = [Fraction(q[idx][j], 2 * yj) for idx in range(c)]
    witness = _make_witness(support, values)

    h = witness.as_mapping()
    for row in system.rows:
        total = sum(f * h[support[i]] for i, f in enumerate(row) if f)
        assert total % 1 == 0, "witness violates an additivity constraint"
    assert linearity_check(h) is None, "witness is linear; decision inconsistent"
    return ExtendabilityVerdict(extendable=False, witness=witness)

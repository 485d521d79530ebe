"""Bivariate Hilbert series, Hilbert polynomials, and multiplicity extraction.

The series of ring/I is computed from the leading-term monomial ideal by the
variable-splitting recursion

    N(M) = N(M + (x)) + t^deg(x) * N(M : x),

with base cases N(0) = 1, N((1)) = 0 and N of pairwise coprime monomials a
product of (1 - t^deg m) factors. Hilbert data depends only on the ideal, so
any fixed monomial order works; degrevlex is used throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from .errors import InputError, MathInvariantError
from .groebner import Ideal, krull_dim
from .rings import Bidegree, Exponent, Ring, monomials_of_bidegree

Numerator = dict  # (a, b) -> int, over prod_v (1 - t1^d1 t2^d2)

_numerator_memo: dict = {}


def _minimal_monomials(exps: frozenset) -> frozenset:
    return frozenset(
        e for e in exps
        if not any(o != e and all(x <= y for x, y in zip(o, e)) for o in exps)
    )


def _num_sub(a: Numerator, b: Numerator) -> Numerator:
    out = dict(a)
    for k, v in b.items():
        nv = out.get(k, 0) - v
        if nv:
            out[k] = nv
        else:
            out.pop(k, None)
    return out


def _num_add_shifted(a: Numerator, b: Numerator, shift: Bidegree) -> Numerator:
    out = dict(a)
    for (p, q), v in b.items():
        k = (p + shift[0], q + shift[1])
        nv = out.get(k, 0) + v
        if nv:
            out[k] = nv
        else:
            out.pop(k, None)
    return out


def _numerator(bidegs: tuple[Bidegree, ...], gens: frozenset) -> Numerator:
    """Series numerator of a monomial ideal given by minimal generators."""
    key = (bidegs, gens)
    hit = _numerator_memo.get(key)
    if hit is not None:
        return hit
    result = _numerator_uncached(bidegs, gens)
    _numerator_memo[key] = result
    return result


def _mono_bideg(bidegs, e: Exponent) -> Bidegree:
    return (
        sum(x * d[0] for x, d in zip(e, bidegs)),
        sum(x * d[1] for x, d in zip(e, bidegs)),
    )


def _numerator_uncached(bidegs, gens: frozenset) -> Numerator:
    if not gens:
        return {(0, 0): 1}
    if any(not any(e) for e in gens):
        return {}
    supports = [tuple(i for i, x in enumerate(e) if x) for e in gens]
    flat = [i for s in supports for i in s]
    if len(flat) == len(set(flat)):
        # pairwise coprime generators: product of (1 - t^deg m)
        out: Numerator = {(0, 0): 1}
        for e in gens:
            out = _num_sub(out, {k: v for k, v in (
                ((_mono_bideg(bidegs, e)[0] + a, _mono_bideg(bidegs, e)[1] + b), v)
                for (a, b), v in out.items())})
        return out
    # pivot: most frequent variable among generators of exponent degree >= 2
    counts: dict[int, int] = {}
    for e, s in zip(gens, supports):
        if sum(e) >= 2:
            for i in s:
                counts[i] = counts.get(i, 0) + 1
    # fall back to overall frequency if needed (cannot happen after the
    # coprime base case, kept for safety)
    if not counts:
        for s in supports:
            for i in s:
                counts[i] = counts.get(i, 0) + 1
    pivot = max(counts, key=lambda i: (counts[i], -i))
    n = len(bidegs)
    xexp = tuple(1 if i == pivot else 0 for i in range(n))
    plus = _minimal_monomials(gens | {xexp})
    colon = _minimal_monomials(frozenset(
        tuple(x - 1 if i == pivot and x else x for i, x in enumerate(e))
        for e in gens
    ))
    head = _numerator(bidegs, plus)
    tail = _numerator(bidegs, colon)
    return _num_add_shifted(head, tail, bidegs[pivot])


@dataclass
class HilbertSeries2:
    """Numerator over prod_v (1 - t1^d1(v) t2^d2(v)) for the ambient ring."""

    ring: Ring
    numerator: Numerator

    @property
    def n1(self) -> int:
        return sum(1 for d in self.ring.bidegrees if d == (1, 0))

    @property
    def n2(self) -> int:
        return sum(1 for d in self.ring.bidegrees if d == (0, 1))

    def transposed(self) -> "HilbertSeries2":
        from .rings import swap_ring

        return HilbertSeries2(
            swap_ring(self.ring), {(b, a): v for (a, b), v in self.numerator.items()}
        )

    def coefficient(self, u: int, v: int) -> int:
        """Exact coefficient of t1^u t2^v, for standard bigraded rings."""
        if not self.ring.is_standard_bigraded:
            raise InputError("series coefficients need a standard bigraded ring")
        n1, n2 = self.n1, self.n2
        total = 0
        for (a, b), c in self.numerator.items():
            total += c * _count(u - a, n1) * _count(v - b, n2)
        return total


def _count(w: int, k: int) -> int:
    """Monomials of degree w in k variables; the coefficient of t^w in (1-t)^-k."""
    if w < 0:
        return 0
    if k == 0:
        return 1 if w == 0 else 0
    return math.comb(w + k - 1, k - 1)


def series_of(I: Ideal) -> HilbertSeries2:
    """Bigraded Hilbert series of ring/I for a (bi)homogeneous ideal."""
    for g in I.gens:
        if g.bidegree() is None:
            raise InputError(f"inhomogeneous generator: {g}")
    lead = frozenset(I.leading_exponents())
    return HilbertSeries2(I.ring, _numerator(I.ring.bidegrees, _minimal_monomials(lead)))


def hilbert_function(I: Ideal, u: int, v: int) -> int:
    """dim of the (u, v)-piece of ring/I, counted monomial by monomial.

    This is the independent brute-force oracle for the series machinery.
    Standard monomials only give graded dimensions for homogeneous ideals.
    """
    for g in I.gens:
        if g.bidegree() is None:
            raise InputError(f"inhomogeneous generator: {g}")
    lead = I.leading_exponents()
    count = 0
    for exp in monomials_of_bidegree(I.ring, u, v):
        if not any(all(l <= e for l, e in zip(lt, exp)) for lt in lead):
            count += 1
    return count


def gbinom(z: int, m: int) -> int:
    """Generalized binomial coefficient binom(z, m) for integer z, m >= 0."""
    if m < 0:
        return 0
    num = 1
    for i in range(m):
        num *= z - i
    value = num // math.factorial(m)
    if value * math.factorial(m) != num:
        raise MathInvariantError("generalized binomial was not integral")
    return value


@dataclass
class HilbertPoly2:
    """P(u, v) in the basis binom(u, i) * binom(v, j), with stability bounds.

    ``total_degree`` is None exactly when P is identically zero. For all
    u >= u_star and v >= v_star the polynomial agrees with the Hilbert
    function.
    """

    coeffs: dict  # (i, j) -> int, zero entries dropped
    total_degree: Optional[int]
    deg_u: int  # -1 when P == 0
    deg_v: int
    u_star: int
    v_star: int

    def __call__(self, u: int, v: int) -> int:
        return sum(
            c * gbinom(u, i) * gbinom(v, j) for (i, j), c in self.coeffs.items()
        )

    @property
    def is_zero(self) -> bool:
        return self.total_degree is None


def polynomial_of(S: HilbertSeries2) -> HilbertPoly2:
    """The polynomial eventually equal to the Hilbert function of the series."""
    if not S.ring.is_standard_bigraded:
        raise InputError("Hilbert polynomials require a standard bigraded ring")
    n1, n2 = S.n1, S.n2
    num = S.numerator
    if not num:
        return HilbertPoly2({}, None, -1, -1, 0, 0)
    u_star = max(a for a, _ in num)
    v_star = max(b for _, b in num)
    if n1 == 0 or n2 == 0:
        # a missing (1-t)-factor makes the function eventually zero; it dies
        # only past the numerator support in that variable
        return HilbertPoly2({}, None, -1, -1,
                            u_star + (1 if n1 == 0 else 0),
                            v_star + (1 if n2 == 0 else 0))
    coeffs: dict = {}
    for i in range(n1):
        for j in range(n2):
            a_ij = 0
            for (a, b), c in num.items():
                a_ij += c * gbinom(n1 - 1 - a, n1 - 1 - i) * gbinom(n2 - 1 - b, n2 - 1 - j)
            if a_ij:
                coeffs[(i, j)] = a_ij
    if not coeffs:
        return HilbertPoly2({}, None, -1, -1, u_star, v_star)
    total = max(i + j for i, j in coeffs)
    return HilbertPoly2(
        coeffs,
        total,
        max(i for i, _ in coeffs),
        max(j for _, j in coeffs),
        u_star,
        v_star,
    )


@dataclass
class ETable:
    """Top-diagonal coefficients of the Hilbert polynomial.

    ``entries`` holds every cell (i, r - i) for i = 0..r; all are nonnegative
    integers. ``r`` is None when the polynomial vanishes identically, in which
    case the table is empty and r1 = r2 = -1.
    """

    r: Optional[int]
    entries: dict = field(default_factory=dict)
    r1: int = -1
    r2: int = -1

    def diagonal(self) -> list[int]:
        """Values e_(i, r-i) for i = 0..r (empty when r is None)."""
        if self.r is None:
            return []
        return [self.entries.get((i, self.r - i), 0) for i in range(self.r + 1)]

    def transposed(self) -> "ETable":
        return ETable(
            self.r,
            {(j, i): v for (i, j), v in self.entries.items()},
            self.r2,
            self.r1,
        )


def e_table(P: HilbertPoly2, r_expected: Optional[int] = None) -> ETable:
    """Read the mixed multiplicities off the polynomial's top diagonal."""
    if P.is_zero:
        if r_expected is not None:
            raise MathInvariantError("expected a nonzero Hilbert polynomial")
        return ETable(None)
    r = P.total_degree
    if r_expected is not None and r != r_expected:
        raise MathInvariantError(
            f"Hilbert polynomial degree {r} disagrees with expected {r_expected}"
        )
    entries = {}
    for i in range(r + 1):
        v = P.coeffs.get((i, r - i), 0)
        if v < 0:
            raise MathInvariantError(
                f"negative top coefficient a_{i}{r-i} = {v}; upstream bug"
            )
        entries[(i, r - i)] = v
    return ETable(r, entries, P.deg_u, P.deg_v)


def total_multiplicity(I: Ideal) -> tuple[int, int]:
    """(Krull dimension, multiplicity) of ring/I under the total grading.

    Specializes the bigraded series at t1 = t2 = t, cancels all (1 - t)
    factors, and evaluates at t = 1. The pole order is checked against the
    combinatorial Krull dimension.
    """
    if I.is_unit:
        raise InputError("the unit ideal has no multiplicity")
    S = series_of(I)
    n: dict[int, int] = {}
    for (a, b), c in S.numerator.items():
        k = a + b
        n[k] = n.get(k, 0) + c
        if not n[k]:
            del n[k]
    weights = [d1 + d2 for d1, d2 in I.ring.bidegrees]
    cancelled = 0
    # divide by (1 - t) while the numerator vanishes at t = 1
    while n and sum(n.values()) == 0:
        deg = max(n)
        out: dict[int, int] = {}
        acc = 0
        for k in range(deg):  # quotient coefficients are partial sums
            acc += n.get(k, 0)
            if acc:
                out[k] = acc
        n = out
        cancelled += 1
    if not n:
        raise MathInvariantError("series numerator vanished identically")
    pole = len(weights) - cancelled
    value = sum(n.values())
    denom = 1
    for w in weights:
        denom *= w
    if value % denom:
        raise MathInvariantError("multiplicity is not integral for these weights")
    e = value // denom
    if e <= 0:
        raise MathInvariantError(f"non-positive multiplicity {e}")
    dim = krull_dim(I)
    if pole != dim:
        raise MathInvariantError(
            f"series pole order {pole} disagrees with Krull dimension {dim}"
        )
    return dim, e

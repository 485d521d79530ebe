"""Mixed multiplicities of a standard bigraded algebra R = (poly ring)/I.

Implements the dimension formulas for the degree and partial degrees of the
bigraded Hilbert polynomial, filter-regular sequence certification, the
positivity criterion for the top-diagonal coefficients e_ij, and their
computation as multiplicities of saturated quotients.

Filter-regularity of z over a previous ideal B is certified by the finite
containment (B : z) <= (B : Rpp^infinity), where Rpp is generated by the
products of one variable of each degree kind. This is the order-free
equivalent of the classical "equal in all large bidegrees" condition.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import GenericityExhausted, InputError, MathInvariantError
from .fields import DEFAULT_PRIME
from .groebner import Ideal, ideal_quotient, ideal_sum, krull_dim, saturation
from .hilbert import (ETable, HilbertPoly2, e_table, polynomial_of, series_of,
                      total_multiplicity)
from .rings import Bidegree, Poly, Ring, swap_ring, transport

MAX_RETRIES = 16


@dataclass
class BigradedAlgebra:
    """A standard bigraded quotient with its distinguished variable ideals."""

    ring: Ring
    defining: Ideal

    def __post_init__(self):
        if not self.ring.is_standard_bigraded:
            raise InputError("ring is not standard bigraded")
        if self.defining.ring != self.ring:
            raise InputError("defining ideal lives in a different ring")
        for g in self.defining.gens:
            if g.bidegree() is None:
                raise InputError(f"defining ideal has inhomogeneous generator {g}")
        self._sat0: Optional[Ideal] = None

    @property
    def r1_ideal(self) -> Ideal:
        """Ideal generated by the (1,0)-variables."""
        return Ideal(self.ring, [self.ring.var(i) for i in self.ring.first_kind])

    @property
    def r2_ideal(self) -> Ideal:
        """Ideal generated by the (0,1)-variables."""
        return Ideal(self.ring, [self.ring.var(i) for i in self.ring.second_kind])

    @property
    def rpp_ideal(self) -> Ideal:
        """Ideal generated by all products of one variable of each kind."""
        gens = [
            self.ring.var(i) * self.ring.var(j)
            for i in self.ring.first_kind
            for j in self.ring.second_kind
        ]
        return Ideal(self.ring, gens)

    def sat0(self) -> Ideal:
        """Preimage of 0 : Rpp^infinity in the quotient."""
        if self._sat0 is None:
            self._sat0 = saturation(self.defining, self.rpp_ideal)
        return self._sat0

    def series(self):
        return series_of(self.defining)

    def polynomial(self) -> HilbertPoly2:
        return polynomial_of(self.series())

    def swapped(self) -> "BigradedAlgebra":
        ring2 = swap_ring(self.ring)
        return BigradedAlgebra(ring2, Ideal(ring2, [transport(g, ring2) for g in self.defining.gens]))


@dataclass
class DegreesReport:
    """Degree data of the Hilbert polynomial via saturation dimensions.

    ``r``, ``r1``, ``r2`` are None exactly when the polynomial vanishes (the
    saturation is the unit ideal). The plain quotient dimensions are reported
    alongside because they stay meaningful in that degenerate case.
    """

    r: Optional[int]
    r1: Optional[int]
    r2: Optional[int]
    dim_sat: int
    dim_sat_plus_r2: int
    dim_sat_plus_r1: int
    dim_total: int
    dim_mod_r1: int
    dim_mod_r2: int

    @property
    def p_is_zero(self) -> bool:
        return self.r is None


def degrees_report(alg: BigradedAlgebra) -> DegreesReport:
    """Compute deg P and both partial degrees from saturation dimensions.

    Cross-checks the three numbers against the binomial-basis polynomial,
    which is computed independently from the series numerator.
    """
    sat = alg.sat0()
    dim_total = krull_dim(alg.defining)
    dim_mod_r1 = krull_dim(ideal_sum(alg.defining, alg.r1_ideal))
    dim_mod_r2 = krull_dim(ideal_sum(alg.defining, alg.r2_ideal))
    P = alg.polynomial()
    if sat.is_unit:
        if not P.is_zero:
            raise MathInvariantError("vanishing saturation with nonzero polynomial")
        return DegreesReport(None, None, None, -1, -1, -1,
                             dim_total, dim_mod_r1, dim_mod_r2)
    d = krull_dim(sat)
    d2 = krull_dim(ideal_sum(sat, alg.r2_ideal))
    d1 = krull_dim(ideal_sum(sat, alg.r1_ideal))
    r, r1, r2 = d - 2, d2 - 1, d1 - 1
    if P.is_zero:
        raise MathInvariantError("nonunit saturation with vanishing polynomial")
    if (P.total_degree, P.deg_u, P.deg_v) != (r, r1, r2):
        raise MathInvariantError(
            f"polynomial degrees {(P.total_degree, P.deg_u, P.deg_v)} disagree "
            f"with saturation dimensions {(r, r1, r2)}"
        )
    if r > r1 + r2:
        raise MathInvariantError("total degree exceeds the sum of partial degrees")
    return DegreesReport(r, r1, r2, d, d2, d1, dim_total, dim_mod_r1, dim_mod_r2)


@dataclass
class FilterStep:
    element: Poly
    bidegree: Bidegree
    ok: bool
    witness: Optional[Poly]  # a colon generator escaping the saturation


@dataclass
class FilterRegularCertificate:
    steps: list[FilterStep] = field(default_factory=list)
    ok: bool = True
    seed: Optional[int] = None

    @property
    def elements(self) -> list[Poly]:
        return [s.element for s in self.steps]


def _filter_step(alg: BigradedAlgebra, prev: Ideal, z: Poly) -> FilterStep:
    bideg = z.bidegree()
    if bideg is None:
        raise InputError(f"inhomogeneous sequence element {z}")
    rhs = saturation(prev, alg.rpp_ideal)
    if rhs.is_unit:
        return FilterStep(z, bideg, True, None)
    lhs = ideal_quotient(prev, z)
    for g in lhs.groebner():
        if not rhs.normal_form(g).is_zero:
            return FilterStep(z, bideg, False, g)
    return FilterStep(z, bideg, True, None)


def is_filter_regular(alg: BigradedAlgebra, seq: Sequence[Poly]) -> FilterRegularCertificate:
    """Check the per-step colon containment for a candidate sequence."""
    cert = FilterRegularCertificate()
    prev = alg.defining
    for z in seq:
        step = _filter_step(alg, prev, z)
        cert.steps.append(step)
        if not step.ok:
            cert.ok = False
            break
        prev = ideal_sum(prev, [z])
    return cert


def _random_kind_element(alg: BigradedAlgebra, kind: Bidegree, rng: random.Random,
                         span: Optional[int] = None) -> Poly:
    indices = alg.ring.first_kind if kind == (1, 0) else alg.ring.second_kind
    if not indices:
        raise InputError(f"ring has no variable of bidegree {kind}")
    span = span or alg.ring.field.p or DEFAULT_PRIME
    while True:
        coeffs = [rng.randrange(span) for _ in indices]
        if any(coeffs):
            break
    z = alg.ring.zero()
    for c, i in zip(coeffs, indices):
        z = z + alg.ring.var(i).scale(c)
    return z


def find_filter_regular(
    alg: BigradedAlgebra,
    pattern: Sequence[Bidegree],
    seed: int = 0,
    max_retries: int = MAX_RETRIES,
    span: Optional[int] = None,
) -> FilterRegularCertificate:
    """Search random linear forms of the requested kinds, verifying each step.

    Every element is drawn as a random combination of the variables of its
    kind and certified before being kept; failures retry with fresh
    randomness up to ``max_retries`` per position.
    """
    for kind in pattern:
        if kind not in ((1, 0), (0, 1)):
            raise InputError(f"pattern entries must be (1,0) or (0,1), got {kind}")
    rng = random.Random(seed)
    cert = FilterRegularCertificate(seed=seed)
    prev = alg.defining
    for kind in pattern:
        for attempt in range(max_retries):
            z = _random_kind_element(alg, kind, rng, span)
            step = _filter_step(alg, prev, z)
            if step.ok:
                cert.steps.append(step)
                prev = ideal_sum(prev, [z])
                break
        else:
            raise GenericityExhausted(
                f"no filter-regular element of bidegree {kind} found in "
                f"{max_retries} attempts"
            )
    return cert


def e_positivity(
    alg: BigradedAlgebra,
    i: int,
    j: int,
    seed: int = 0,
    max_retries: int = MAX_RETRIES,
    sequence: Optional[Sequence[Poly]] = None,
    span: Optional[int] = None,
) -> tuple[bool, int, FilterRegularCertificate]:
    """Positivity test for e_ij: does the saturated quotient by i generic
    (1,0)-forms plus all (1,0)-variables have dimension j + 1?"""
    report = degrees_report(alg)
    if report.r is None:
        raise InputError("the Hilbert polynomial vanishes; no top diagonal")
    if i < 0 or j < 0 or i + j != report.r:
        raise InputError(f"(i, j) = {(i, j)} is not on the top diagonal of degree {report.r}")
    if sequence is not None:
        seq = list(sequence)[:i]
        if len(seq) != i or any(z.bidegree() != (1, 0) for z in seq):
            raise InputError(f"need {i} elements of bidegree (1,0)")
        cert = is_filter_regular(alg, seq)
        if not cert.ok:
            raise InputError("supplied sequence is not filter-regular")
    else:
        cert = find_filter_regular(alg, [(1, 0)] * i, seed, max_retries, span)
    prefix = ideal_sum(alg.defining, cert.elements)
    sat = saturation(prefix, alg.rpp_ideal)
    witness_dim = krull_dim(ideal_sum(sat, alg.r1_ideal))
    return witness_dim == j + 1, witness_dim, cert


def e_value_via_criterion(
    alg: BigradedAlgebra,
    i: int,
    j: int,
    seed: int = 0,
    max_retries: int = MAX_RETRIES,
    sequence: Optional[Sequence[Poly]] = None,
    span: Optional[int] = None,
) -> int:
    """e_ij as the multiplicity of R/(x_1..x_i, y_1..y_j) : Rpp^infinity.

    Returns 0 when the positivity test fails. In the positive branch the
    saturated quotient must have dimension exactly 2.
    """
    if sequence is not None:
        seq = list(sequence)
        if len(seq) != i + j:
            raise InputError(f"sequence must have {i + j} elements")
        xs, ys = seq[:i], seq[i:]
        if any(z.bidegree() != (1, 0) for z in xs) or any(
            z.bidegree() != (0, 1) for z in ys
        ):
            raise InputError("sequence must list (1,0)-elements then (0,1)-elements")
        full = is_filter_regular(alg, seq)
        if not full.ok:
            raise InputError("supplied sequence is not filter-regular")
        positive, _, _ = e_positivity(alg, i, j, seed, max_retries, sequence=xs)
        if not positive:
            return 0
        cert = full
    else:
        positive, _, cert_x = e_positivity(alg, i, j, seed, max_retries, span=span)
        if not positive:
            return 0
        rng_seed = seed + 1
        cert = FilterRegularCertificate(steps=list(cert_x.steps), seed=seed)
        prev = ideal_sum(alg.defining, cert_x.elements)
        rng = random.Random(rng_seed)
        for _ in range(j):
            for attempt in range(max_retries):
                z = _random_kind_element(alg, (0, 1), rng, span)
                step = _filter_step(alg, prev, z)
                if step.ok:
                    cert.steps.append(step)
                    prev = ideal_sum(prev, [z])
                    break
            else:
                raise GenericityExhausted(
                    f"no filter-regular (0,1)-element found in {max_retries} attempts"
                )
    quotient = ideal_sum(alg.defining, cert.elements)
    bar = saturation(quotient, alg.rpp_ideal)
    dim, e = total_multiplicity(bar)
    if dim != 2:
        raise MathInvariantError(
            f"saturated quotient has dimension {dim}, expected 2"
        )
    return e


def e_table_full(
    alg: BigradedAlgebra,
    verify: bool = False,
    seed: int = 0,
    max_retries: int = MAX_RETRIES,
    span: Optional[int] = None,
) -> ETable:
    """Full mixed-multiplicity table from the series route.

    With ``verify`` each top-diagonal cell is recomputed through the
    positivity criterion and the multiplicity formula; any mismatch raises.
    """
    table = e_table(alg.polynomial())
    if verify and table.r is not None:
        for idx, (i, j) in enumerate(sorted(table.entries)):
            value = e_value_via_criterion(alg, i, j, seed + 101 * idx, max_retries, span=span)
            if value != table.entries[(i, j)]:
                raise MathInvariantError(
                    f"criterion value {value} at {(i, j)} disagrees with "
                    f"table entry {table.entries[(i, j)]}"
                )
    return table


def sum_check(alg: BigradedAlgebra) -> Optional[bool]:
    """Does the total multiplicity equal the sum of the top diagonal?

    The identity requires both variable ideals to have positive height; the
    conservative sufficient test used here is that the defining ideal is
    saturated with respect to each kind of variables. Returns None when that
    precondition cannot be established.
    """
    if alg.defining.is_unit:
        raise InputError("unit defining ideal")
    if not saturation(alg.defining, alg.r1_ideal).same_ideal(alg.defining):
        return None
    if not saturation(alg.defining, alg.r2_ideal).same_ideal(alg.defining):
        return None
    d, e = total_multiplicity(alg.defining)
    table = e_table_full(alg)
    if table.r != d - 2:
        raise MathInvariantError(
            f"top diagonal {table.r} is not dim - 2 = {d - 2} despite heights >= 1"
        )
    return e == sum(table.diagonal())

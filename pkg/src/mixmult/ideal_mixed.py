"""Mixed multiplicities e_i(I|J) of an m-primary ideal I and an arbitrary
homogeneous ideal J in a standard graded algebra A = k[x]/I_A.

The chain method: saturate out J, repeatedly add a certified-generic element
of J and saturate again,

    S_0 = I_A : J^inf,   S_k = (S_{k-1} + (a_k)) : J^inf,

and read e_i off as the multiplicity of A/S_i whenever the dimension drops by
exactly one per step; a larger drop forces that and all later values to zero.
Each a_k is a random degree-lifted combination of the generators of J and is
certified to be a non-zerodivisor modulo S_{k-1} before being accepted.

Closed-form cross-checks (order of J, products of least form degrees,
equigenerated powers) and an independent bigraded route through the Rees
presentation validate the chain values on suitable instances.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional

from .errors import GenericityExhausted, InputError, MathInvariantError
from .fields import DEFAULT_PRIME
from .bigraded import MAX_RETRIES, BigradedAlgebra, e_table_full
from .groebner import (Ideal, ideal_power, ideal_product, ideal_sum,
                       in_radical, is_nzd, krull_dim, saturation)
from .hilbert import ETable, total_multiplicity
from .rings import Poly, Ring, monomials_of_bidegree


@dataclass
class GradedSetting:
    """Ambient data: A = ring/defining, m-primary ideal I (default m), and J.

    All member ideals are carried as their preimages in the ambient polynomial
    ring, with the defining ideal folded in.
    """

    ring: Ring
    defining: Ideal
    J: Ideal
    primary: Optional[Ideal] = None  # None means the maximal graded ideal

    def __post_init__(self):
        if any(d != (1, 0) for d in self.ring.bidegrees):
            raise InputError(
                "mixed multiplicities of ideals need a standard single-graded ring"
            )
        for g in self.defining.gens + self.J.gens:
            if g.bidegree() is None:
                raise InputError(f"inhomogeneous generator {g}")
        if self.primary is not None:
            check = ideal_sum(self.defining, self.primary)
            if not saturation(check, self.maximal_ideal).is_unit:
                raise InputError("the distinguished ideal is not primary to the "
                                 "maximal graded ideal")
        self._spread: Optional[int] = None
        self._s0: Optional[Ideal] = None

    @property
    def maximal_ideal(self) -> Ideal:
        return Ideal(self.ring, self.ring.gens())

    @property
    def primary_or_m(self) -> Ideal:
        return self.maximal_ideal if self.primary is None else self.primary

    def s0(self) -> Ideal:
        """Preimage of 0 : J^infinity in A."""
        if self._s0 is None:
            self._s0 = saturation(self.defining, self.J)
        return self._s0

    def working_degree(self) -> int:
        degs = [g.total_exp_degree() for g in self.J.gens if not g.is_zero]
        if not degs:
            raise InputError("J is the zero ideal")
        return max(degs)


def generic_element(setting: GradedSetting, rng: random.Random,
                    span: Optional[int] = None) -> Poly:
    """A random element of J in the single working degree.

    Every generator is lifted to the working degree by all monomial
    multipliers, each lift weighted by an independent random coefficient.
    """
    d = setting.working_degree()
    ring = setting.ring
    span = span or ring.field.p or DEFAULT_PRIME
    while True:
        acc = ring.zero()
        for g in setting.J.gens:
            gap = d - g.total_exp_degree()
            for exp in monomials_of_bidegree(ring, gap, 0):
                c = rng.randrange(span)
                if c:
                    acc = acc + ring.monomial(exp, c) * g
        if not acc.is_zero:
            return acc


# ---------------------------------------------------------------------------
# analytic spread and the Rees presentation
# ---------------------------------------------------------------------------


def rees_presentation(setting: GradedSetting) -> tuple[Ring, Ideal]:
    """Presentation ideal of the Rees algebra A[Jt] inside k[x, T].

    Computed by eliminating t from I_A + (T_l - t * g_l). The T names are
    chosen fresh against the ambient variables.
    """
    ring = setting.ring
    gens = [g for g in setting.J.gens if not g.is_zero]
    if not gens:
        raise InputError("J is the zero ideal")
    taken = set(ring.variables)
    tnames = []
    for i in range(1, len(gens) + 1):
        name = f"T{i}"
        while name in taken:
            name = name + "_"
        taken.add(name)
        tnames.append(name)
    present_ring = Ring(
        ring.name + "_rees",
        ring.variables + tuple(tnames),
        ring.bidegrees + ((1, 0),) * len(tnames),
        ring.field,
    )
    work_ring = Ring(
        present_ring.name + "_t",
        present_ring.variables + ("#s",),
        present_ring.bidegrees + ((1, 0),),
        ring.field,
    )
    pad_p = len(tnames)
    lifted = [
        Poly(work_ring, {e + (0,) * (pad_p + 1): c for e, c in g.terms.items()}, _trusted=True)
        for g in setting.defining.gens
    ]
    t = work_ring.var(work_ring.nvars - 1)
    for idx, g in enumerate(gens):
        T = work_ring.var(ring.nvars + idx)
        g_lift = Poly(
            work_ring, {e + (0,) * (pad_p + 1): c for e, c in g.terms.items()}, _trusted=True
        )
        lifted.append(T - t * g_lift)
    from .groebner import _eliminate_tags  # internal elimination helper

    kernel = _eliminate_tags(work_ring, lifted, present_ring)
    return present_ring, Ideal(present_ring, kernel)


def analytic_spread(setting: GradedSetting) -> int:
    """Dimension of the special fiber F(J) = A[Jt] / m A[Jt]."""
    if setting._spread is not None:
        return setting._spread
    pring, pres = rees_presentation(setting)
    fiber = ideal_sum(pres, [pring.var(i) for i in range(setting.ring.nvars)])
    setting._spread = krull_dim(fiber)
    return setting._spread


def order_of(setting: GradedSetting) -> int:
    """Smallest degree of a nonzero form in J, read off the reduced basis.

    The identity with the first mixed multiplicity holds for a polynomial
    ambient ring; a nonzero defining ideal makes the value merely heuristic.
    """
    gb = setting.J.groebner()
    if not gb:
        raise InputError("J is the zero ideal")
    return min(g.total_exp_degree() for g in gb)


# ---------------------------------------------------------------------------
# the saturation chain
# ---------------------------------------------------------------------------


@dataclass
class ChainStep:
    element: Poly
    ideal: Ideal
    dim: int
    nzd_ok: bool


@dataclass
class SatChain:
    setting: GradedSetting
    d_work: int
    s0: Ideal
    dim0: int
    steps: list[ChainStep] = field(default_factory=list)
    seed: int = 0

    def ideals(self) -> list[Ideal]:
        return [self.s0] + [s.ideal for s in self.steps]

    def dims(self) -> list[int]:
        return [self.dim0] + [s.dim for s in self.steps]


def sat_chain(
    setting: GradedSetting,
    upto: int,
    seed: int = 0,
    max_retries: int = MAX_RETRIES,
    span: Optional[int] = None,
) -> SatChain:
    """Build S_0, ..., S_upto with per-step non-zerodivisor certificates."""
    spread = analytic_spread(setting)
    if upto > spread:
        raise InputError(f"chain length {upto} exceeds the analytic spread {spread}")
    s0 = setting.s0()
    if s0.is_unit:
        raise InputError("J is nilpotent modulo the defining ideal")
    chain = SatChain(setting, setting.working_degree(), s0, krull_dim(s0), seed=seed)
    rng = random.Random(seed)
    prev = s0
    for _ in range(upto):
        for attempt in range(max_retries):
            a = generic_element(setting, rng, span)
            if is_nzd(a, prev):
                break
        else:
            raise GenericityExhausted(
                f"no non-zerodivisor element of J found in {max_retries} attempts"
            )
        nxt = saturation(ideal_sum(prev, [a]), setting.J)
        chain.steps.append(ChainStep(a, nxt, krull_dim(nxt), True))
        prev = nxt
    return chain


def samuel_multiplicity(setting: GradedSetting, quotient: Ideal) -> int:
    """Multiplicity of A/quotient with respect to the distinguished ideal.

    For I = m this is the total multiplicity. Otherwise I must be generated
    in a single degree t, and the value is t^dim times the total multiplicity.
    """
    dim, e = total_multiplicity(quotient)
    if setting.primary is None:
        return e
    degs = {g.total_exp_degree() for g in setting.primary.gens if not g.is_zero}
    if len(degs) != 1:
        raise InputError(
            "unsupported distinguished ideal: generators must share one degree"
        )
    t = degs.pop()
    return t ** dim * e


@dataclass
class MixedIdealReport:
    """Mixed multiplicities e_0..e_{s(J)-1} with their positivity window."""

    dim_a: int  # dim A / 0 : J^inf
    spread: int
    height: int
    e: list[int]
    rho: int
    dims: list[int]
    seed: int


def e_i_values(setting: GradedSetting, chain: SatChain) -> MixedIdealReport:
    """Extract the e_i from a chain and enforce the rigidity window.

    e_i is the Samuel multiplicity of A/S_i exactly when the dimension has
    dropped by one per step; the positivity set must be an initial interval
    and must reach at least height(J) - 1.
    """
    spread = analytic_spread(setting)
    dims = chain.dims()
    ideals = chain.ideals()
    if len(dims) < spread and dims[-1] == chain.dim0 - (len(dims) - 1):
        raise InputError(
            "chain too short: no dimension drop has occurred yet, so the "
            f"values past step {len(dims) - 1} are undetermined"
        )
    e: list[int] = []
    for k in range(spread):
        if k < len(dims) and dims[k] == chain.dim0 - k:
            e.append(samuel_multiplicity(setting, ideals[k]))
        else:
            e.append(0)  # dimension dropped too fast, or zero by rigidity
    positive = [i for i, v in enumerate(e) if v > 0]
    if not positive:
        raise MathInvariantError("e_0 must be positive")
    rho = max(positive)
    if positive != list(range(rho + 1)):
        raise MathInvariantError(
            f"positivity set {positive} is not an initial interval"
        )
    # dims beyond the first failure must keep failing: implied by the interval
    # check above whenever the chain was computed far enough
    ht = height_of(setting, seed=chain.seed)
    if not (ht - 1 <= rho < spread):
        raise MathInvariantError(
            f"rho = {rho} escapes [height-1, spread) = [{ht - 1}, {spread})"
        )
    return MixedIdealReport(chain.dim0, spread, ht, e, rho, dims, chain.seed)


def mixed_report(
    setting: GradedSetting, seed: int = 0, max_retries: int = MAX_RETRIES,
    span: Optional[int] = None,
) -> MixedIdealReport:
    """Chain all the way to s(J) - 1 and extract the report."""
    spread = analytic_spread(setting)
    chain = sat_chain(setting, max(spread - 1, 0), seed, max_retries, span)
    return e_i_values(setting, chain)


# ---------------------------------------------------------------------------
# height via certified generic chains
# ---------------------------------------------------------------------------


def _minimal_primes_avoid(B: Ideal, C: Ideal) -> bool:
    """True when no minimal prime of B contains C.

    Works because B : C^inf drops exactly the components whose primes contain
    C: it is contained in the radical of B iff every minimal prime survives.
    """
    sat = saturation(B, C)
    if sat.same_ideal(B):
        return True
    return all(in_radical(g, B) for g in sat.groebner())


def height_of(
    setting: GradedSetting, seed: int = 0, max_retries: int = MAX_RETRIES,
    span: Optional[int] = None,
) -> int:
    """Height of J in A, without primary decomposition.

    Extends a chain of generic elements of J while every minimal prime of the
    partial ideal avoids J; each accepted element is certified to avoid all
    minimal primes of the previous step. The count at the first failure is
    the height, by the generalized principal ideal theorem plus the avoidance
    certificates.
    """
    if ideal_sum(setting.defining, setting.J).is_unit:
        raise InputError("J is the unit ideal modulo the defining ideal")
    rng = random.Random(seed ^ 0x9E3779B9)
    B = setting.defining
    k = 0
    cap = setting.ring.nvars + 1
    while k <= cap:
        if not _minimal_primes_avoid(B, setting.J):
            return k
        for attempt in range(max_retries):
            a = generic_element(setting, rng, span)
            a_sat = saturation(B, Ideal(setting.ring, [a]))
            if a_sat.same_ideal(B) or all(in_radical(g, B) for g in a_sat.groebner()):
                break
        else:
            raise GenericityExhausted(
                f"no element of J avoiding the minimal primes found in "
                f"{max_retries} attempts"
            )
        B = ideal_sum(B, [a])
        k += 1
    raise MathInvariantError("height chain exceeded the ambient dimension")


# ---------------------------------------------------------------------------
# closed-form oracles
# ---------------------------------------------------------------------------


@dataclass
class InstanceLabels:
    """Hypotheses that are instance knowledge, not computed: local structure
    at the top-dimensional primes and chain conditions."""

    generically_complete_intersection: bool = False
    first_chain_condition: bool = False
    has_coprime_least_forms: bool = False


def closed_form_oracles(
    setting: GradedSetting, labels: InstanceLabels, seed: int = 0
) -> dict:
    """Formula values available under the labelled hypotheses.

    Returns a dict with any of the keys ``equigenerated`` (list of e_i for
    i <= height, when J is generated in one degree), ``order`` (the degree-1
    step for a polynomial ambient ring), and ``least_degrees`` (the two-form
    product formula). Only formulas whose hypotheses hold are included.
    """
    out: dict = {}
    ht = height_of(setting, seed)
    ambient_polynomial = setting.defining.is_zero
    if not ideal_sum(setting.defining, setting.J).is_unit:
        degs = {g.total_exp_degree() for g in setting.J.gens if not g.is_zero}
        if len(degs) == 1:
            c = degs.pop()
            e_ambient = total_multiplicity(setting.defining)[1]
            values = [c ** i * e_ambient for i in range(ht)]
            entry = {"c": c, "values": values}
            if labels.generically_complete_intersection and analytic_spread(setting) >= ht + 1:
                e_quot = total_multiplicity(ideal_sum(setting.defining, setting.J))[1]
                entry["top"] = c ** ht * e_ambient - e_quot
            out["equigenerated"] = entry
    if ambient_polynomial and ht >= 2:
        out["order"] = {"e1": order_of(setting)}
    if ambient_polynomial and ht >= 2 and labels.has_coprime_least_forms:
        degrees = sorted(g.total_exp_degree() for g in setting.J.groebner())
        c1, c2 = degrees[0], degrees[1]
        if ht >= 3:
            out["least_degrees"] = {"c1": c1, "c2": c2, "e2": c1 * c2}
        elif labels.generically_complete_intersection:
            e_quot = total_multiplicity(ideal_sum(setting.defining, setting.J))[1]
            out["least_degrees"] = {"c1": c1, "c2": c2, "e2": c1 * c2 - e_quot}
    if not out:
        raise InputError("no closed-form hypothesis holds for this instance")
    return out


# ---------------------------------------------------------------------------
# Rees multiplicity, diagonal degree, bigraded cross-check
# ---------------------------------------------------------------------------


def rees_and_diagonal(
    setting: GradedSetting, report: MixedIdealReport
) -> tuple[int, Optional[int]]:
    """Multiplicity of the Rees algebra and, for an equigenerated ideal in a
    polynomial ring, the degree of the diagonal embedding."""
    rees = sum(report.e)
    diag = None
    degs = {g.total_exp_degree() for g in setting.J.gens if not g.is_zero}
    if setting.defining.is_zero and len(degs) == 1:
        import math

        n = setting.ring.nvars - 1
        diag = sum(math.comb(n, i) * v for i, v in enumerate(report.e))
    return rees, diag


def rees_bigraded_crosscheck(setting: GradedSetting) -> ETable:
    """Independent route: regrade the Rees presentation and run the bigraded
    pipeline; the top diagonal must reproduce the chain values.

    Needs a polynomial ambient ring and J generated in a single degree c, so
    that assigning the T variables bidegree (1,0) and the x variables (0,1)
    makes the presentation bihomogeneous.
    """
    if not setting.defining.is_zero:
        raise InputError("cross-check needs a polynomial ambient ring")
    degs = {g.total_exp_degree() for g in setting.J.gens if not g.is_zero}
    if len(degs) != 1:
        raise InputError("cross-check needs an equigenerated ideal")
    pring, pres = rees_presentation(setting)
    nx = setting.ring.nvars
    regraded = Ring(
        pring.name + "_bi",
        pring.variables,
        ((0, 1),) * nx + ((1, 0),) * (pring.nvars - nx),
        pring.field,
    )
    gens = [Poly(regraded, dict(g.terms), _trusted=True) for g in pres.gens]
    for g in gens:
        if g.bidegree() is None:
            raise MathInvariantError("Rees presentation failed to be bihomogeneous")
    alg = BigradedAlgebra(regraded, Ideal(regraded, gens))
    return e_table_full(alg)


# ---------------------------------------------------------------------------
# reduction fixtures
# ---------------------------------------------------------------------------


def is_reduction_of(J: Ideal, Jp: Ideal, bound: int = 10) -> int:
    """Least n <= bound with J^(n+1) = Jp * J^n; raises when none is found."""
    if not J.contains_ideal(Jp):
        raise InputError("claimed reduction is not contained in the ideal")
    for n in range(bound + 1):
        lhs = ideal_power(J, n + 1)
        rhs = ideal_product(Jp, ideal_power(J, n))
        if lhs.same_ideal(rhs):
            return n
    raise InputError(f"reduction identity not confirmed for any n <= {bound}")


def reduction_invariance_check(
    setting: GradedSetting,
    other: GradedSetting,
    seed: int = 0,
    bound: int = 10,
) -> bool:
    """Verify J' is a reduction of J and compare the full e-vectors."""
    if setting.ring != other.ring or not setting.defining.same_ideal(other.defining):
        raise InputError("settings must share ambient data")
    is_reduction_of(setting.J, other.J, bound)
    r1 = mixed_report(setting, seed)
    r2 = mixed_report(other, seed)
    return r1.e == r2.e

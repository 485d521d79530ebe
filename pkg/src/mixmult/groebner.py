"""Buchberger-based Groebner kernel and ideal arithmetic.

Provides reduced Groebner bases, normal forms, ideal sum / product /
intersection / quotient / saturation, elimination behind fresh tag variables,
radical membership, zero-divisor tests, and Krull dimension of quotients.

The engine is a plain Buchberger loop with the coprime and chain criteria and
the normal selection strategy; correctness over speed, with monomial-ideal
fast paths for the operations that dominate the workloads here.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Sequence, Union

from .errors import InputError, MathInvariantError
from .fields import FieldSpec
from .rings import Exponent, Poly, Ring

# ---------------------------------------------------------------------------
# monomial orders
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MonomialOrder:
    """Degrevlex on all variables, or a block order eliminating ``block``.

    ``sortkey`` is ascending in the *reverse* of the monomial order: the
    leading term of a polynomial has the minimal sortkey. Block orders compare
    the block exponents degrevlex first, so any monomial involving a block
    variable exceeds every monomial without one.
    """

    block: tuple[int, ...] = ()

    @staticmethod
    def degrevlex() -> "MonomialOrder":
        return MonomialOrder(())

    @staticmethod
    def elimination(block: Sequence[int]) -> "MonomialOrder":
        return MonomialOrder(tuple(sorted(block)))

    def sortkey(self, exp: Exponent):
        if not self.block:
            return (-sum(exp), exp[::-1])
        block = self.block
        eb = tuple(exp[i] for i in block)
        rest = tuple(e for i, e in enumerate(exp) if i not in block)
        return (-sum(eb), eb[::-1], -sum(rest), rest[::-1])


DEGREVLEX = MonomialOrder.degrevlex()


# ---------------------------------------------------------------------------
# raw term-dict arithmetic used inside the engine
# ---------------------------------------------------------------------------


def _divides(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _esub(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x - y for x, y in zip(a, b))


def _eadd(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


def _elcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


def _egcd(a: Exponent, b: Exponent) -> Exponent:
    return tuple(min(x, y) for x, y in zip(a, b))


def _lead(terms: dict, order: MonomialOrder) -> Exponent:
    return min(terms, key=order.sortkey)


def _monic(terms: dict, field: FieldSpec, order: MonomialOrder) -> dict:
    lead = _lead(terms, order)
    lc = terms[lead]
    if lc == field.one:
        return terms
    inv = field.inv(lc)
    return {e: field.mul(inv, c) for e, c in terms.items()}


def _reduce_full(terms: dict, basis: list[tuple[Exponent, dict]], field: FieldSpec,
                 order: MonomialOrder) -> dict:
    """Fully reduce ``terms`` against monic ``basis``; no term of the result
    is divisible by any basis leading term."""
    if not terms or not basis:
        return dict(terms)
    p = dict(terms)
    out: dict = {}
    sortkey = order.sortkey
    heap = [(sortkey(e), e) for e in p]
    heapq.heapify(heap)
    while heap:
        _, e = heapq.heappop(heap)
        c = p.get(e)
        if not c:
            continue
        for lt, g in basis:
            if _divides(lt, e):
                shift = _esub(e, lt)
                for ge, gc in g.items():
                    ne = _eadd(ge, shift)
                    old = p.get(ne)
                    nv = field.sub(old, field.mul(c, gc)) if old is not None else field.neg(field.mul(c, gc))
                    if nv:
                        if old is None:
                            heapq.heappush(heap, (sortkey(ne), ne))
                        p[ne] = nv
                    else:
                        p.pop(ne, None)
                break
        else:
            out[e] = c
            del p[e]
    return out


def _spoly(f: tuple[Exponent, dict], g: tuple[Exponent, dict], field: FieldSpec) -> dict:
    """S-polynomial of two monic polynomials given as (leading exp, terms)."""
    lf, ft = f
    lg, gt = g
    lcm = _elcm(lf, lg)
    sf, sg = _esub(lcm, lf), _esub(lcm, lg)
    acc: dict = {}
    for e, c in ft.items():
        acc[_eadd(e, sf)] = c
    for e, c in gt.items():
        ne = _eadd(e, sg)
        old = acc.get(ne)
        nv = field.sub(old, c) if old is not None else field.neg(c)
        if nv:
            acc[ne] = nv
        else:
            acc.pop(ne, None)
    return acc


def buchberger(gens: Iterable[dict], field: FieldSpec, order: MonomialOrder) -> list[dict]:
    """Reduced Groebner basis of the ideal generated by ``gens`` (term dicts).

    Returns monic generators sorted by ascending leading monomial; [] for the
    zero ideal and [{0: 1}] for the unit ideal.
    """
    gens = [g for g in gens if g]
    if not gens:
        return []
    nvars = len(next(iter(gens[0])))
    unit = [{(0,) * nvars: field.one}]

    G: list[dict] = []
    lts: list[Exponent] = []
    pending: dict[frozenset, Exponent] = {}

    def push(h: dict) -> bool:
        """Add a fully reduced nonzero polynomial; True when it is a unit."""
        lt = _lead(h, order)
        if not any(lt):
            return True
        h = _monic(h, field, order)
        k = len(G)
        G.append(h)
        lts.append(lt)
        for i in range(k):
            pending[frozenset((i, k))] = _elcm(lts[i], lt)
        return False

    for g in gens:
        r = _reduce_full(g, list(zip(lts, G)), field, order)
        if r and push(r):
            return unit

    while pending:
        key = max(pending, key=lambda k: order.sortkey(pending[k]))
        lcm = pending.pop(key)
        i, j = tuple(key)
        # coprime criterion: disjoint leading supports reduce to zero
        if lcm == _eadd(lts[i], lts[j]):
            continue
        # chain criterion: a third element divides the lcm and both companion
        # pairs were already treated
        skip = False
        for k in range(len(G)):
            if k in (i, j):
                continue
            if _divides(lts[k], lcm) and frozenset((i, k)) not in pending \
                    and frozenset((j, k)) not in pending:
                skip = True
                break
        if skip:
            continue
        s = _spoly((lts[i], G[i]), (lts[j], G[j]), field)
        r = _reduce_full(s, list(zip(lts, G)), field, order)
        if r and push(r):
            return unit

    if not G:
        return []

    # minimalize: drop any element whose leading term another one divides
    keep = []
    for i, lt in enumerate(lts):
        if any(
            _divides(lts[j], lt) and (lts[j] != lt or j < i)
            for j in keep
        ):
            continue
        keep = [j for j in keep if not (_divides(lt, lts[j]) and lts[j] != lt)]
        keep.append(i)
    H = [G[i] for i in keep]
    HL = [lts[i] for i in keep]

    # tail-reduce each against the others; leading terms are already minimal
    for i in range(len(H)):
        others = [(HL[j], H[j]) for j in range(len(H)) if j != i]
        H[i] = _monic(_reduce_full(H[i], others, field, order), field, order)

    H.sort(key=lambda h: order.sortkey(_lead(h, order)), reverse=True)
    return H


# ---------------------------------------------------------------------------
# ideal handles
# ---------------------------------------------------------------------------


class Ideal:
    """An ideal given by generators, with a cached reduced Groebner basis.

    Handles are immutable: every derived ideal is a fresh handle, so a cached
    basis can never go stale.
    """

    __slots__ = ("ring", "gens", "_gb", "_dim", "_satcache")

    def __init__(self, ring: Ring, gens: Iterable[Poly] = ()):
        self.ring = ring
        cleaned = []
        for g in gens:
            if g.ring != ring:
                raise InputError("generator from a different ring")
            if not g.is_zero:
                cleaned.append(g)
        self.gens = tuple(cleaned)
        self._gb: dict = {}
        self._dim = None
        self._satcache: dict = {}

    # -- basis and membership ---------------------------------------------------

    def groebner(self, order: MonomialOrder = DEGREVLEX) -> tuple[Poly, ...]:
        cached = self._gb.get(order)
        if cached is None:
            basis = buchberger([g.terms for g in self.gens], self.ring.field, order)
            cached = tuple(Poly(self.ring, h, _trusted=True) for h in basis)
            self._gb[order] = cached
        return cached

    def _gb_pairs(self, order: MonomialOrder = DEGREVLEX) -> list[tuple[Exponent, dict]]:
        return [(_lead(g.terms, order), g.terms) for g in self.groebner(order)]

    def normal_form(self, f: Poly, order: MonomialOrder = DEGREVLEX) -> Poly:
        if f.ring != self.ring:
            raise InputError("polynomial from a different ring")
        r = _reduce_full(f.terms, self._gb_pairs(order), self.ring.field, order)
        return Poly(self.ring, r, _trusted=True)

    def contains(self, f: Poly) -> bool:
        return self.normal_form(f).is_zero

    def contains_ideal(self, other: "Ideal") -> bool:
        return all(self.contains(g) for g in other.gens)

    @property
    def is_zero(self) -> bool:
        return not self.groebner()

    @property
    def is_unit(self) -> bool:
        gb = self.groebner()
        return len(gb) == 1 and gb[0].is_constant and not gb[0].is_zero

    def same_ideal(self, other: "Ideal") -> bool:
        if self.ring != other.ring:
            raise InputError("ideals live in different rings")
        return set(self.groebner()) == set(other.groebner())

    def key(self):
        """Canonical hashable identity: the reduced degrevlex basis."""
        return frozenset(self.groebner())

    def leading_exponents(self, order: MonomialOrder = DEGREVLEX) -> tuple[Exponent, ...]:
        return tuple(_lead(g.terms, order) for g in self.groebner(order))

    @property
    def is_monomial(self) -> bool:
        return all(len(g.terms) == 1 for g in self.gens)

    def is_homogeneous(self) -> bool:
        return all(g.bidegree() is not None for g in self.gens)

    def __repr__(self):
        return f"Ideal({self.ring.name}; {len(self.gens)} gens)"


def groebner_basis(I: Ideal, order: MonomialOrder = DEGREVLEX) -> tuple[Poly, ...]:
    return I.groebner(order)


def normal_form(f: Poly, I: Ideal) -> Poly:
    return I.normal_form(f)


# ---------------------------------------------------------------------------
# tag-variable plumbing for elimination
# ---------------------------------------------------------------------------


def _tagged_ring(ring: Ring, ntags: int) -> Ring:
    tags = tuple(f"#t{i+1}" for i in range(ntags))
    return Ring(
        ring.name + "#",
        ring.variables + tags,
        ring.bidegrees + ((1, 0),) * ntags,
        ring.field,
    )


def _lift(poly: Poly, ext: Ring) -> Poly:
    pad = ext.nvars - poly.ring.nvars
    terms = {e + (0,) * pad: c for e, c in poly.terms.items()}
    return Poly(ext, terms, _trusted=True)


def _eliminate_tags(ext: Ring, gens: list[Poly], base: Ring) -> list[Poly]:
    """Groebner-basis elimination of the trailing tag variables."""
    ntags = ext.nvars - base.nvars
    block = tuple(range(base.nvars, ext.nvars))
    order = MonomialOrder.elimination(block)
    basis = buchberger([g.terms for g in gens], ext.field, order)
    kept = []
    for h in basis:
        if all(all(e[i] == 0 for i in block) for e in h):
            kept.append(Poly(base, {e[: base.nvars]: c for e, c in h.items()}, _trusted=True))
    return kept


# ---------------------------------------------------------------------------
# ideal operations
# ---------------------------------------------------------------------------


def ideal_sum(I: Ideal, extra: Union[Ideal, Iterable[Poly]]) -> Ideal:
    gens = extra.gens if isinstance(extra, Ideal) else tuple(extra)
    return Ideal(I.ring, I.gens + tuple(gens))


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    if I.ring != J.ring:
        raise InputError("ideals live in different rings")
    prods = {f * g for f in I.gens for g in J.gens}
    return Ideal(I.ring, prods)


def ideal_power(I: Ideal, n: int) -> Ideal:
    if n < 0:
        raise InputError("ideal powers take nonnegative exponents")
    if n == 0:
        return Ideal(I.ring, [I.ring.one()])
    gens = set()
    for combo in combinations_with_replacement(I.gens, n):
        p = combo[0]
        for q in combo[1:]:
            p = p * q
        gens.add(p)
    return Ideal(I.ring, gens)


def ideal_intersection(I: Ideal, J: Ideal) -> Ideal:
    if I.ring != J.ring:
        raise InputError("ideals live in different rings")
    if I.is_zero or J.is_zero:
        return Ideal(I.ring)
    if I.is_unit:
        return J
    if J.is_unit:
        return I
    if I.is_monomial and J.is_monomial:
        gens = {
            I.ring.monomial(_elcm(next(iter(f.terms)), next(iter(g.terms))))
            for f in I.gens
            for g in J.gens
        }
        return Ideal(I.ring, gens)
    # one tag t: (t*I + (1-t)*J) eliminated down to the base ring
    ext = _tagged_ring(I.ring, 1)
    t = ext.var(ext.nvars - 1)
    one_minus_t = ext.one() - t
    gens = [t * _lift(f, ext) for f in I.gens]
    gens += [one_minus_t * _lift(g, ext) for g in J.gens]
    return Ideal(I.ring, _eliminate_tags(ext, gens, I.ring))


def poly_exact_div(f: Poly, g: Poly) -> Poly:
    """Quotient f/g when g divides f exactly; raises otherwise."""
    if g.is_zero:
        raise InputError("division by the zero polynomial")
    field = f.ring.field
    order = DEGREVLEX
    lg = _lead(g.terms, order)
    cg = g.terms[lg]
    rem = dict(f.terms)
    quot: dict = {}
    while rem:
        e = _lead(rem, order)
        if not _divides(lg, e):
            raise MathInvariantError("claimed exact division has a remainder")
        shift = _esub(e, lg)
        coef = field.div(rem[e], cg)
        quot[shift] = coef
        for ge, gc in g.terms.items():
            ne = _eadd(ge, shift)
            old = rem.get(ne, field.zero)
            nv = field.sub(old, field.mul(coef, gc))
            if nv:
                rem[ne] = nv
            else:
                rem.pop(ne, None)
    return Poly(f.ring, quot, _trusted=True)


def ideal_quotient(I: Ideal, divisor: Union[Poly, Ideal]) -> Ideal:
    """Colon ideal I : g or I : J (the latter as the intersection over gens)."""
    if isinstance(divisor, Ideal):
        nonzero = [g for g in divisor.gens if not g.is_zero]
        if not nonzero:
            raise InputError("colon by the zero ideal")
        result = None
        for g in nonzero:
            q = ideal_quotient(I, g)
            result = q if result is None else ideal_intersection(result, q)
            if result.is_zero:
                break
        return result
    g = divisor
    if g.is_zero:
        raise InputError("colon by the zero polynomial")
    if I.is_unit:
        return I
    if g.is_constant:
        return I
    if I.is_monomial and len(g.terms) == 1:
        m = next(iter(g.terms))
        gens = {
            I.ring.monomial(_esub(next(iter(f.terms)), _egcd(next(iter(f.terms)), m)))
            for f in I.gens
        }
        return Ideal(I.ring, gens)
    if I.is_zero:
        return Ideal(I.ring)  # the ambient ring is a domain
    meet = ideal_intersection(I, Ideal(I.ring, [g]))
    return Ideal(I.ring, [poly_exact_div(h, g) for h in meet.groebner()])


_SATURATION_CAP = 10_000


def saturation(I: Ideal, J: Union[Poly, Ideal]) -> Ideal:
    """I : J^infinity by iterated colon until the reduced basis stabilizes."""
    if isinstance(J, Poly):
        J = Ideal(I.ring, [J])
    if all(g.is_zero for g in J.gens):
        raise InputError("saturation by the zero ideal")
    cache_key = J.key()
    cached = I._satcache.get(cache_key)
    if cached is not None:
        return cached
    prev = I
    for _ in range(_SATURATION_CAP):
        nxt = ideal_quotient(prev, J)
        if nxt.same_ideal(prev):
            result = Ideal(I.ring, prev.groebner())
            result._gb[DEGREVLEX] = prev.groebner()
            I._satcache[cache_key] = result
            return result
        prev = nxt
    raise MathInvariantError("saturation failed to stabilize")


def krull_dim(I: Ideal) -> int:
    """Krull dimension of ring/I; -1 for the unit ideal, nvars for the zero ideal.

    Computed on the leading-term ideal: the largest variable subset S such
    that no minimal generator of LT(I) has support inside S.
    """
    if I._dim is not None:
        return I._dim
    if I.is_unit:
        I._dim = -1
        return -1
    supports = [frozenset(i for i, e in enumerate(exp) if e) for exp in I.leading_exponents()]
    # keep only inclusion-minimal supports; the rest are implied
    minimal = [
        s for s in supports if not any(t < s for t in supports)
    ]
    supports = list(set(minimal))
    memo: dict = {}

    def best(avail: frozenset) -> int:
        hit = memo.get(avail)
        if hit is not None:
            return hit
        blocker = None
        for s in supports:
            if s <= avail:
                blocker = s
                break
        if blocker is None:
            memo[avail] = len(avail)
            return len(avail)
        value = max(best(avail - {v}) for v in blocker)
        memo[avail] = value
        return value

    I._dim = best(frozenset(range(I.ring.nvars)))
    return I._dim


def is_nzd(f: Poly, I: Ideal) -> bool:
    """True when f is a non-zerodivisor modulo I, i.e. I : f = I."""
    if f.is_zero:
        return False
    if f.bidegree() is None:
        raise InputError("zero-divisor test expects a homogeneous element")
    return ideal_quotient(I, f).same_ideal(I)


def in_radical(f: Poly, I: Ideal) -> bool:
    """Radical membership via one inverted tag: 1 in I + (1 - t*f)."""
    if f.is_zero or I.contains(f):
        return True
    ext = _tagged_ring(I.ring, 1)
    t = ext.var(ext.nvars - 1)
    gens = [_lift(g, ext) for g in I.gens]
    gens.append(ext.one() - t * _lift(f, ext))
    return Ideal(ext, gens).is_unit


def radical_contains_ideal(I: Ideal, J: Ideal) -> bool:
    """True when J is contained in the radical of I."""
    return all(in_radical(g, I) for g in J.gens)

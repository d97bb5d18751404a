"""Derived ideal operations: sums, products, colon, saturation, elimination,
intersection, radical membership, and Krull dimension.

Quotient rings R = S/b are carried as the ambient ring plus the defining
ideal; every "ideal of R" in this package is an ambient ideal containing b.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import kernel
from .errors import DomainError, ResourceBudgetError, StructuralError
from .groebner import Ideal, ideal_equal
from .orders import elimination, grevlex
from .ring import Polynomial, PolyRing

DEFAULT_SATURATION_STEPS = 64


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    if I.ring != J.ring:
        raise StructuralError("ideals from different rings")
    return Ideal(I.ring, I.gens + J.gens)


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    if I.ring != J.ring:
        raise StructuralError("ideals from different rings")
    gens = [f * g for f in I.gens for g in J.gens]
    return Ideal(I.ring, _trim_monomial_gens(gens))


def ideal_power(I: Ideal, k: int) -> Ideal:
    if k < 0:
        raise DomainError("ideal power needs k >= 0")
    if k == 0:
        return Ideal(I.ring, [I.ring.one()])
    acc = I
    for _ in range(k - 1):
        acc = ideal_product(acc, I)
    return acc


def _trim_monomial_gens(gens):
    # Divisibility-redundant generators may be dropped when all are terms.
    if gens and all(g.is_term() for g in gens):
        from . import monomials

        mins = monomials.minimalize(g.lead_monomial() for g in gens)
        ring = gens[0].ring
        return [ring.monomial(m) for m in mins]
    return gens


def _fresh_name(ring: PolyRing) -> str:
    i = 0
    while f"t{i}" in ring.names:
        i += 1
    return f"t{i}"


def _extended(ring: PolyRing):
    """Ring with one auxiliary variable prepended, ordered to eliminate it."""
    name = _fresh_name(ring)
    n = ring.nvars + 1
    ext = PolyRing(ring.field, (name,) + ring.names, elimination(n, 1))

    def embed(f: Polynomial) -> Polynomial:
        return ext.from_terms(tuple((c, (0,) + m) for c, m in f.terms))

    def restrict(f: Polynomial) -> Polynomial:
        for _, m in f.terms:
            if m[0]:
                raise StructuralError("polynomial still involves the auxiliary variable")
        return ring.from_terms(tuple((c, m[1:]) for c, m in f.terms))

    return ext, embed, restrict


def exact_divide(f: Polynomial, g: Polynomial) -> Polynomial:
    """f / g when g divides f exactly."""
    if g.is_zero():
        raise DomainError("division by zero polynomial")
    r = f.ring
    q, rem = kernel.divmod_poly(f.terms, g.terms, r.p, r.order.spec)
    if rem:
        raise DomainError("not an exact division")
    return r.from_terms(q)


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """I ∩ J via elimination of t from t*I + (1-t)*J."""
    if I.ring != J.ring:
        raise StructuralError("ideals from different rings")
    ring = I.ring
    if not I.gens or not J.gens:
        return Ideal(ring, [])
    ext, embed, restrict = _extended(ring)
    t = ext.var(0)
    one_minus_t = ext.one() - t
    gens = [t * embed(g) for g in I.gens] + [one_minus_t * embed(g) for g in J.gens]
    basis = Ideal(ext, gens).basis()
    kept = [restrict(g) for g in basis.polys if not any(m[0] for _, m in g.terms)]
    return Ideal(ring, kept)


def colon(I: Ideal, f: Polynomial) -> Ideal:
    """(I : f) = {g : g*f in I}, computed as (I ∩ (f)) / f."""
    if isinstance(f, str):
        f = I.ring.parse(f)
    if f.is_zero():
        raise DomainError("colon by the zero element")
    if f.is_constant():
        return I
    meet = intersect(I, Ideal(I.ring, [f]))
    return Ideal(I.ring, [exact_divide(g, f) for g in meet.gens])


def colon_ideal(I: Ideal, J: Ideal) -> Ideal:
    """(I : J) over the generators of J."""
    if I.ring != J.ring:
        raise StructuralError("ideals from different rings")
    gens = [g for g in J.gens if not g.is_zero()]
    if not gens:
        return Ideal(I.ring, [I.ring.one()])
    acc = colon(I, gens[0])
    for g in gens[1:]:
        acc = intersect(acc, colon(I, g))
    return acc


def saturation(I: Ideal, J: Ideal, max_steps=DEFAULT_SATURATION_STEPS):
    """(I : J^inf) with the first exponent N where the chain stabilizes.

    The ascending chain I : J^n is walked until two consecutive members have
    identical reduced bases; the result equals I : J^N.
    """
    if J.is_zero():
        raise DomainError("saturation by the zero ideal")
    prev = I
    for n in range(1, max_steps + 1):
        nxt = colon_ideal(prev, J)
        if ideal_equal(nxt, prev):
            return prev, n - 1
        prev = nxt
    raise ResourceBudgetError(f"saturation chain did not stabilize within {max_steps} steps")


def eliminate(I: Ideal, kill) -> Ideal:
    """I ∩ F_p[remaining variables], returned in the same ring."""
    kill = tuple(sorted(set(kill)))
    ring = I.ring
    if not kill:
        return I
    if any(i < 0 or i >= ring.nvars for i in kill):
        raise StructuralError("variable index out of range")
    if len(kill) == ring.nvars:
        raise DomainError("cannot eliminate every variable")
    rest = tuple(i for i in range(ring.nvars) if i not in kill)
    order = elimination(ring.nvars, len(kill), kill + rest)
    basis = I.basis(order)
    kept = [g for g in basis.polys if all(all(m[i] == 0 for i in kill) for _, m in g.terms)]
    return Ideal(ring, kept)


def radical_membership(f: Polynomial, I: Ideal) -> bool:
    """f in sqrt(I), decided by adjoining 1 - t*f and testing the unit ideal."""
    if isinstance(f, str):
        f = I.ring.parse(f)
    if f.is_zero():
        return True
    ring = I.ring
    name = _fresh_name(ring)
    ext = PolyRing(ring.field, (name,) + ring.names, grevlex(ring.nvars + 1))
    embed = lambda g: ext.from_terms(tuple((c, (0,) + m) for c, m in g.terms))
    t = ext.var(0)
    gens = [embed(g) for g in I.gens]
    gens.append(ext.one() - t * embed(f))
    return Ideal(ext, gens).is_unit()


@dataclass(frozen=True)
class DimensionReport:
    """Krull dimension with a maximal independent variable set as witness."""

    dimension: int
    witness: tuple[str, ...]


def krull_dimension(I: Ideal) -> DimensionReport:
    """Dimension of R/I via independent sets of the initial ideal.

    A variable subset S is independent iff no lead monomial of the reduced
    basis is supported inside S; the dimension is the maximal |S| (and -1
    for the unit ideal).
    """
    basis = I.basis()
    if len(basis) and basis.is_unit():
        return DimensionReport(-1, ())
    n = I.ring.nvars
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in basis.lead_monomials]
    for size in range(n, -1, -1):
        for S in combinations(range(n), size):
            sset = set(S)
            if not any(supp <= sset for supp in supports):
                return DimensionReport(size, tuple(I.ring.names[i] for i in S))
    return DimensionReport(-1, ())


class QuotientRing:
    """Ambient polynomial ring modulo a defining ideal (possibly zero).

    Construction via :meth:`ideal` appends the defining generators, so every
    ideal handled on behalf of the quotient contains the defining ideal.
    """

    __slots__ = ("ring", "defining")

    def __init__(self, ring: PolyRing, defining=None):
        self.ring = ring
        if defining is None:
            defining = Ideal(ring, [])
        elif not isinstance(defining, Ideal):
            defining = Ideal(ring, list(defining))
        if defining.ring != ring:
            raise StructuralError("defining ideal from a different ring")
        if defining.is_unit():
            raise DomainError("defining ideal is the unit ideal (zero ring)")
        self.defining = defining

    @property
    def p(self) -> int:
        return self.ring.p

    def is_regular_ambient(self) -> bool:
        return self.defining.is_zero()

    def ideal(self, gens) -> Ideal:
        gens = [self.ring.parse(g) if isinstance(g, str) else g for g in gens]
        return Ideal(self.ring, list(gens) + list(self.defining.gens))

    def contains_defining(self, I: Ideal) -> bool:
        return all(I.contains(g) for g in self.defining.gens)

    def dimension(self) -> int:
        return krull_dimension(self.defining).dimension

    def describe(self) -> str:
        if self.defining.is_zero():
            return self.ring.describe()
        return f"{self.ring.describe()}/({', '.join(self.defining.gens_str())})"

    def __eq__(self, other):
        return (
            isinstance(other, QuotientRing)
            and other.ring == self.ring
            and other.defining.gens == self.defining.gens
        )

    def __hash__(self):
        return hash((self.ring, self.defining.gens))

    def __repr__(self):
        return self.describe()

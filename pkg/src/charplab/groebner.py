"""Buchberger's algorithm, multivariate division, and reduced Groebner bases.

This is the decision procedure behind every ideal-theoretic test in the
package.  Pair selection is the normal strategy with a fixed deterministic
tie-break (lcm degree, then plain lexicographic comparison of the lcm
exponents, then pair indices), so bases are reproducible across runs and
generator orderings.
"""

from __future__ import annotations

import heapq

from . import kernel
from .errors import DomainError, ResourceBudgetError, StructuralError
from .orders import MonomialOrder
from .ring import Polynomial, PolyRing

DEFAULT_SPAIR_BUDGET = 10**6


def _divides(a, b):
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _working_terms(f: Polynomial, spec):
    if f.ring.order.spec == spec:
        return f.terms
    return kernel.canonicalize(f.terms, f.ring.p, spec)


def _buchberger_raw(gens, p, spec, budget):
    """Reduced Groebner basis of raw term lists, ascending by lead monomial."""
    key = None
    G, lead = [], []
    pairs = []
    treated = set()

    def push_pairs(j):
        lmj = lead[j]
        for i in range(j):
            l = tuple(map(max, lead[i], lmj))
            heapq.heappush(pairs, (sum(l), l, i, j))

    for t in gens:
        if not t:
            continue
        t = kernel.monic(t, p)
        if t in G:
            continue
        G.append(t)
        lead.append(t[0][1])
        push_pairs(len(G) - 1)

    processed = 0
    while pairs:
        _, l, i, j = heapq.heappop(pairs)
        if all(a == 0 or b == 0 for a, b in zip(lead[i], lead[j])):
            treated.add((i, j))
            continue
        chain = False
        for k in range(len(G)):
            if k == i or k == j or not _divides(lead[k], l):
                continue
            lik = tuple(map(max, lead[i], lead[k]))
            ljk = tuple(map(max, lead[j], lead[k]))
            # Only strictly smaller lcms: those pairs were popped earlier.
            if lik == l or ljk == l:
                continue
            if (min(i, k), max(i, k)) in treated and (min(j, k), max(j, k)) in treated:
                chain = True
                break
        treated.add((i, j))
        if chain:
            continue
        processed += 1
        if processed > budget:
            raise ResourceBudgetError(f"S-pair budget of {budget} exceeded")
        s = kernel.spoly(G[i], G[j], p, spec)
        r = kernel.normal_form(s, G, p, spec)
        if r:
            r = kernel.monic(r, p)
            G.append(r)
            lead.append(r[0][1])
            push_pairs(len(G) - 1)

    if not G:
        return [], processed
    from .orders import _key_function

    key = _key_function(spec)
    order_idx = sorted(range(len(G)), key=lambda i: key(lead[i]))
    keep = []
    for i in order_idx:
        if not any(_divides(lead[k], lead[i]) for k in keep):
            keep.append(i)
    polys = [G[i] for i in keep]
    final = []
    for idx in range(len(polys)):
        others = polys[:idx] + polys[idx + 1 :]
        r = kernel.normal_form(polys[idx], others, p, spec) if others else polys[idx]
        final.append(kernel.monic(r, p))
    final.sort(key=lambda t: key(t[0][1]))
    return final, processed


class GroebnerBasis:
    """A reduced Groebner basis, remembered with the order it was computed under."""

    __slots__ = ("ring", "order", "polys", "lead_monomials", "spairs", "reduced")

    def __init__(self, ring, order, raw, spairs):
        self.ring = ring
        self.order = order
        self.polys = tuple(ring.from_terms(t) for t in raw)
        self.lead_monomials = tuple(t[0][1] for t in raw)
        self.spairs = spairs
        self.reduced = True

    def __len__(self):
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)

    def is_unit(self) -> bool:
        return len(self.polys) == 1 and not any(self.lead_monomials[0])

    def _raw(self):
        spec = self.order.spec
        return [_working_terms(g, spec) for g in self.polys]

    def reduce(self, f: Polynomial) -> Polynomial:
        if f.ring != self.ring:
            raise StructuralError("polynomial from a different ring")
        spec = self.order.spec
        r = kernel.normal_form(_working_terms(f, spec), self._raw(), self.ring.p, spec)
        return self.ring.from_terms(r)

    def verify(self) -> bool:
        """Exhaustively check that every S-polynomial reduces to zero."""
        raw = self._raw()
        p, spec = self.ring.p, self.order.spec
        for i in range(len(raw)):
            for j in range(i + 1, len(raw)):
                s = kernel.spoly(raw[i], raw[j], p, spec)
                if kernel.normal_form(s, raw, p, spec):
                    return False
        return True


def buchberger(gens, order: MonomialOrder | None = None, budget=DEFAULT_SPAIR_BUDGET) -> GroebnerBasis:
    """Reduced Groebner basis of a generator list (zero ideal allowed)."""
    gens = list(gens)
    rings = {g.ring for g in gens}
    if len(rings) > 1:
        raise StructuralError("generators from different rings")
    if not gens:
        raise DomainError("buchberger needs the ambient ring; pass at least the zero polynomial")
    ring = gens[0].ring
    order = order or ring.order
    if order.nvars != ring.nvars:
        raise StructuralError("order arity does not match the ring")
    spec = order.spec
    raw, spairs = _buchberger_raw([_working_terms(g, spec) for g in gens], ring.p, spec, budget)
    return GroebnerBasis(ring, order, raw, spairs)


def normal_form(f: Polynomial, basis, order: MonomialOrder | None = None) -> Polynomial:
    """Fully reduced remainder of f modulo a polynomial list or basis."""
    if isinstance(basis, GroebnerBasis):
        return basis.reduce(f)
    basis = list(basis)
    for g in basis:
        if g.ring != f.ring:
            raise StructuralError("polynomials from different rings")
    order = order or f.ring.order
    spec = order.spec
    raw = [_working_terms(g, spec) for g in basis if g]
    r = kernel.normal_form(_working_terms(f, spec), raw, f.ring.p, spec)
    return f.ring.from_terms(r)


class Ideal:
    """Generator list plus a lazily computed reduced Groebner basis per order."""

    __slots__ = ("ring", "gens", "_bases")

    def __init__(self, ring: PolyRing, gens):
        self.ring = ring
        seen = set()
        cleaned = []
        for g in gens:
            if isinstance(g, str):
                g = ring.parse(g)
            if g.ring != ring:
                raise StructuralError("generator from a different ring")
            if g.is_zero() or g.terms in seen:
                continue
            seen.add(g.terms)
            cleaned.append(g)
        self.gens = tuple(cleaned)
        self._bases = {}

    def basis(self, order: MonomialOrder | None = None, budget=DEFAULT_SPAIR_BUDGET) -> GroebnerBasis:
        order = order or self.ring.order
        cached = self._bases.get(order.spec)
        if cached is None:
            if self.gens:
                cached = buchberger(self.gens, order, budget)
            else:
                cached = GroebnerBasis(self.ring, order, [], 0)
            self._bases[order.spec] = cached
        return cached

    def contains(self, f: Polynomial, order: MonomialOrder | None = None) -> bool:
        if isinstance(f, str):
            f = self.ring.parse(f)
        return self.basis(order).reduce(f).is_zero()

    def contains_ideal(self, other: Ideal) -> bool:
        return all(self.contains(g) for g in other.gens)

    def is_zero(self) -> bool:
        return len(self.basis()) == 0

    def is_unit(self) -> bool:
        b = self.basis()
        return len(b) > 0 and b.is_unit()

    def is_proper(self) -> bool:
        return not self.is_unit()

    def gens_str(self) -> tuple[str, ...]:
        return tuple(str(g) for g in self.gens)

    def basis_str(self) -> tuple[str, ...]:
        return tuple(str(g) for g in self.basis().polys)

    def __repr__(self):
        return f"Ideal({', '.join(self.gens_str()) or '0'})"


def ideal_membership(f: Polynomial, I: Ideal) -> bool:
    return I.contains(f)


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    """Equality via identical reduced bases under the common ring order."""
    if I.ring != J.ring:
        raise StructuralError("ideals from different rings")
    return I.basis().polys == J.basis().polys

"""Combinatorics of monomial ideals on bare exponent tuples.

These routines are a second, Groebner-free computation route for colon,
intersection, and saturation of monomial ideals; the test suite cross-checks
them against the generic machinery in :mod:`charplab.idealops` and the
associated-prime search uses them as its fast enumeration core.
"""

from __future__ import annotations

from itertools import product


def degree(m):
    return sum(m)


def divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a, b):
    return tuple(x - y for x, y in zip(a, b))


def mono_gcd(a, b):
    return tuple(min(x, y) for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def support(m):
    return frozenset(i for i, e in enumerate(m) if e)


def minimalize(gens) -> tuple:
    """Minimal generating set: drop every monomial divisible by another."""
    uniq = sorted(set(tuple(g) for g in gens))
    out = []
    for g in uniq:
        if not any(h != g and divides(h, g) for h in uniq):
            out.append(g)
    return tuple(out)


def member(gens, m) -> bool:
    return any(divides(g, m) for g in gens)


def colon_by_monomial(gens, m) -> tuple:
    """(I : m) for monomial I: generated by g / gcd(g, m)."""
    return minimalize(mono_div(g, mono_gcd(g, m)) for g in gens)


def intersect(gens1, gens2) -> tuple:
    """I ∩ J for monomial ideals: pairwise lcms, minimalized."""
    if not gens1 or not gens2:
        return ()
    return minimalize(mono_lcm(a, b) for a in gens1 for b in gens2)


def colon_by_ideal(gens, others) -> tuple:
    """(I : J) = intersection of the colons by each generator of J."""
    others = list(others)
    if not others:
        return ()
    acc = colon_by_monomial(gens, others[0])
    for m in others[1:]:
        acc = intersect(acc, colon_by_monomial(gens, m))
    return acc


def saturate_by_monomial(gens, m) -> tuple:
    """(I : m^inf): zero out generator exponents on the support of m."""
    supp = support(m)
    return minimalize(tuple(0 if i in supp else e for i, e in enumerate(g)) for g in gens)


def saturate_by_ideal(gens, others) -> tuple:
    others = list(others)
    if not others:
        return ()
    acc = saturate_by_monomial(gens, others[0])
    for m in others[1:]:
        acc = intersect(acc, saturate_by_monomial(gens, m))
    return acc


def prime_variables(gens):
    """If the minimal generators are distinct single variables, return their
    sorted index tuple (the zero ideal yields ()); otherwise None."""
    idx = []
    for g in gens:
        nz = [(i, e) for i, e in enumerate(g) if e]
        if len(nz) != 1 or nz[0][1] != 1:
            return None
        idx.append(nz[0][0])
    if len(set(idx)) != len(idx):
        return None
    return tuple(sorted(idx))


def divisors(m):
    """All divisors of m, in lexicographic exponent order."""
    ranges = [range(e + 1) for e in m]
    for exps in product(*ranges):
        yield exps

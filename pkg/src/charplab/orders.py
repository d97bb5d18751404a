"""Monomial orders on exponent vectors.

Three kinds are supported: lexicographic, graded reverse lexicographic, and
a block elimination order (grevlex within each of two blocks, first block
dominating).  Every order carries a variable permutation: position j of the
permutation is the variable with the j-th highest priority.

The wire format shared with the arithmetic kernels is the tuple
``(kind, perm, block)``; both kernels implement the identical comparison.
"""

from __future__ import annotations

from .errors import DomainError, StructuralError

LEX = 0
GREVLEX = 1
BLOCK = 2

_KIND_NAMES = {LEX: "lex", GREVLEX: "grevlex", BLOCK: "block"}


def _check_perm(n, perm):
    if perm is None:
        return tuple(range(n))
    perm = tuple(perm)
    if sorted(perm) != list(range(n)):
        raise DomainError(f"not a permutation of 0..{n - 1}: {perm!r}")
    return perm


class MonomialOrder:
    __slots__ = ("kind", "perm", "block", "_key")

    def __init__(self, kind, perm, block=0):
        if kind not in (LEX, GREVLEX, BLOCK):
            raise DomainError(f"unknown order kind {kind!r}")
        self.kind = kind
        self.perm = tuple(perm)
        self.block = block
        if kind == BLOCK and not 0 < block < len(self.perm):
            raise DomainError("block size must split the variables into two nonempty blocks")
        self._key = _key_function(self.spec)

    @property
    def spec(self):
        return (self.kind, self.perm, self.block)

    @property
    def nvars(self):
        return len(self.perm)

    def key(self, m):
        """Sort key; monomial m1 > m2 iff key(m1) > key(m2)."""
        return self._key(m)

    def compare(self, m1, m2) -> int:
        """-1, 0, or +1 as m1 <, =, > m2."""
        if len(m1) != len(self.perm) or len(m2) != len(self.perm):
            raise StructuralError("exponent vector length does not match the order")
        k1, k2 = self._key(m1), self._key(m2)
        if k1 < k2:
            return -1
        if k1 > k2:
            return 1
        return 0

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and other.spec == self.spec

    def __hash__(self):
        return hash(self.spec)

    def __repr__(self):
        name = _KIND_NAMES[self.kind]
        if self.kind == BLOCK:
            name += f"({self.block})"
        return f"MonomialOrder<{name}, perm={self.perm}>"


def _key_function(spec):
    kind, perm, block = spec
    if kind == LEX:
        def key(m):
            return tuple(m[i] for i in perm)
    elif kind == GREVLEX:
        rperm = perm[::-1]

        def key(m):
            return (sum(m[i] for i in perm), tuple(-m[i] for i in rperm))
    else:
        head, tail = perm[:block], perm[block:]
        rhead, rtail = head[::-1], tail[::-1]

        def key(m):
            return (
                sum(m[i] for i in head),
                tuple(-m[i] for i in rhead),
                sum(m[i] for i in tail),
                tuple(-m[i] for i in rtail),
            )

    return key


def lex(n, perm=None) -> MonomialOrder:
    return MonomialOrder(LEX, _check_perm(n, perm))


def grevlex(n, perm=None) -> MonomialOrder:
    return MonomialOrder(GREVLEX, _check_perm(n, perm))


def elimination(n, block, perm=None) -> MonomialOrder:
    """Order eliminating the first `block` variables of the permutation."""
    return MonomialOrder(BLOCK, _check_perm(n, perm), block)

"""Polynomial rings over F_p with exact term-list polynomials.

Values are immutable after construction and safe to share across workers.
Exponent vectors are dense tuples; variable counts are expected to stay
small (single digits) at the scales this package targets.

The text grammar used everywhere (reports, experiment files) writes terms
like ``2*x^3*y + z`` with operators ``+ - ^ *`` and insignificant
whitespace; variables are the ones declared by the ring.
"""

from __future__ import annotations

import re

from . import kernel
from .errors import DomainError, StructuralError
from .fp import PrimeField
from .orders import MonomialOrder, grevlex

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z_0-9]*\Z")


class PolyRing:
    """F_p[x_1..x_n] with a fixed monomial order used for canonical forms."""

    __slots__ = ("field", "names", "order", "_zero", "_one")

    def __init__(self, p, names, order: MonomialOrder | None = None):
        self.field = p if isinstance(p, PrimeField) else PrimeField(p)
        names = tuple(names)
        if not names:
            raise DomainError("a polynomial ring needs at least one variable")
        for name in names:
            if not _NAME_RE.match(name):
                raise DomainError(f"bad variable name {name!r}")
        if len(set(names)) != len(names):
            raise DomainError(f"duplicate variable names in {names!r}")
        self.names = names
        self.order = order if order is not None else grevlex(len(names))
        if self.order.nvars != len(names):
            raise StructuralError("order arity does not match the variable count")
        self._zero = Polynomial(self, ())
        self._one = Polynomial(self, ((1, (0,) * len(names)),))

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def nvars(self) -> int:
        return len(self.names)

    def zero(self) -> Polynomial:
        return self._zero

    def one(self) -> Polynomial:
        return self._one

    def constant(self, c: int) -> Polynomial:
        return self.poly([(c, (0,) * self.nvars)])

    def var(self, i: int) -> Polynomial:
        exps = tuple(1 if j == i else 0 for j in range(self.nvars))
        return Polynomial(self, ((1, exps),))

    def gens(self) -> tuple[Polynomial, ...]:
        return tuple(self.var(i) for i in range(self.nvars))

    def monomial(self, exps) -> Polynomial:
        return self.poly([(1, tuple(exps))])

    def poly(self, terms) -> Polynomial:
        """Canonicalize arbitrary (coeff, exps) pairs into a polynomial."""
        terms = list(terms)
        for _, m in terms:
            if len(m) != self.nvars:
                raise StructuralError("exponent vector length does not match the ring")
            if any(e < 0 for e in m):
                raise DomainError("negative exponent")
        return Polynomial(self, kernel.canonicalize(terms, self.p, self.order.spec))

    def from_terms(self, terms) -> Polynomial:
        """Wrap canonical terms that may be sorted under a different order."""
        return Polynomial(self, kernel.canonicalize(terms, self.p, self.order.spec))

    def parse(self, text: str) -> Polynomial:
        return _parse_poly(self, text)

    def describe(self) -> str:
        return f"F_{self.p}[{','.join(self.names)}]"

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and other.field == self.field
            and other.names == self.names
            and other.order == self.order
        )

    def __hash__(self):
        return hash((self.field, self.names, self.order))

    def __repr__(self):
        return self.describe()


class Polynomial:
    """Immutable polynomial: terms strictly descending under the ring order."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms):
        self.ring = ring
        self.terms = tuple(terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_term(self) -> bool:
        return len(self.terms) == 1

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(self.terms[0][1]))

    def lead_coeff(self) -> int:
        if not self.terms:
            raise DomainError("zero polynomial has no lead term")
        return self.terms[0][0]

    def lead_monomial(self) -> tuple[int, ...]:
        if not self.terms:
            raise DomainError("zero polynomial has no lead term")
        return self.terms[0][1]

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for _, m in self.terms)

    def is_homogeneous(self) -> bool:
        if not self.terms:
            return True
        d = sum(self.terms[0][1])
        return all(sum(m) == d for _, m in self.terms)

    def monic(self) -> Polynomial:
        return Polynomial(self.ring, kernel.monic(self.terms, self.ring.p))

    def partial(self, i: int) -> Polynomial:
        """Formal partial derivative with respect to variable i."""
        p = self.ring.p
        out = []
        for c, m in self.terms:
            e = m[i]
            if e == 0:
                continue
            c2 = (c * e) % p
            if c2 == 0:
                continue
            out.append((c2, m[:i] + (e - 1,) + m[i + 1 :]))
        return Polynomial(self.ring, tuple(out))

    def substitute(self, target: PolyRing, images) -> Polynomial:
        """Evaluate at the given images (one polynomial per variable)."""
        images = list(images)
        if len(images) != self.ring.nvars:
            raise StructuralError("need one image per variable")
        result = target.zero()
        for c, m in self.terms:
            term = target.constant(c)
            for i, e in enumerate(m):
                if e:
                    term = term * images[i] ** e
            result = result + term
        return result

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise StructuralError("polynomials from different rings")
            return other
        if isinstance(other, int):
            return self.ring.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        r = self.ring
        return Polynomial(r, kernel.add(self.terms, other.terms, r.p, r.order.spec))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, kernel.neg(self.terms, self.ring.p))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return Polynomial(self.ring, kernel.scalar_mul(self.terms, other % self.ring.p, self.ring.p))
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        r = self.ring
        return Polynomial(r, kernel.mul(self.terms, other.terms, r.p, r.order.spec))

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        r = self.ring
        return Polynomial(r, kernel.poly_pow(self.terms, k, r.p, r.order.spec))

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, self.terms))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for c, m in self.terms:
            factors = []
            if c != 1 or not any(m):
                factors.append(str(c))
            for i, e in enumerate(m):
                if e == 1:
                    factors.append(self.ring.names[i])
                elif e > 1:
                    factors.append(f"{self.ring.names[i]}^{e}")
            parts.append("*".join(factors))
        return " + ".join(parts)

    def __repr__(self):
        return f"<{self} in {self.ring.describe()}>"


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\^)|(\*)|(\+)|(-)|(\S))")


def _tokenize(text):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            break
        num, name, caret, star, plus, minus, other = m.groups()
        if num is not None:
            out.append(("num", int(num), m.start(1)))
        elif name is not None:
            out.append(("name", name, m.start(2)))
        elif caret:
            out.append(("^", None, m.start(3)))
        elif star:
            out.append(("*", None, m.start(4)))
        elif plus:
            out.append(("+", None, m.start(5)))
        elif minus:
            out.append(("-", None, m.start(6)))
        elif other is not None and other.strip():
            raise DomainError(f"char {m.start(7)}: unexpected {other!r} in polynomial")
        pos = m.end()
    return out


def _parse_poly(ring: PolyRing, text: str) -> Polynomial:
    """Parse the shared grammar: signed terms of '*'-joined factors."""
    toks = _tokenize(text)
    if not toks:
        raise DomainError("empty polynomial text")
    var_index = {name: i for i, name in enumerate(ring.names)}
    terms = []
    i = 0
    n = len(toks)

    def parse_factor(i, coeff, exps):
        kind, val, pos = toks[i]
        if kind == "num":
            return i + 1, (coeff * val) % ring.p, exps
        if kind == "name":
            if val not in var_index:
                raise DomainError(f"char {pos}: unknown variable {val!r}")
            e = 1
            i += 1
            if i < n and toks[i][0] == "^":
                i += 1
                if i >= n or toks[i][0] != "num":
                    raise DomainError(f"char {pos}: '^' needs an integer exponent")
                e = toks[i][1]
                i += 1
            j = var_index[val]
            exps = exps[:j] + (exps[j] + e,) + exps[j + 1 :]
            return i, coeff, exps
        raise DomainError(f"char {pos}: expected a coefficient or variable")

    while i < n:
        sign = 1
        while i < n and toks[i][0] in ("+", "-"):
            if toks[i][0] == "-":
                sign = -sign
            i += 1
        if i >= n:
            raise DomainError("dangling sign at end of polynomial")
        coeff, exps = sign % ring.p, (0,) * ring.nvars
        i, coeff, exps = parse_factor(i, coeff, exps)
        while i < n and toks[i][0] == "*":
            i += 1
            if i >= n:
                raise DomainError("dangling '*' at end of polynomial")
            i, coeff, exps = parse_factor(i, coeff, exps)
        terms.append((coeff, exps))
        if i < n and toks[i][0] not in ("+", "-"):
            raise DomainError(f"char {toks[i][2]}: expected '+' or '-' between terms")
    return ring.poly(terms)

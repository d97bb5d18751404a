"""Pure-Python arithmetic kernel for term-list polynomials over F_p.

A polynomial is a tuple of ``(coefficient, exponents)`` pairs with
coefficients in 1..p-1 and exponent tuples of a fixed length, strictly
descending under the active monomial order.  The order is passed as the
spec tuple ``(kind, perm, block)`` from :mod:`charplab.orders`.

The compiled kernel (charplab._ckernel) implements the same five entry
points with identical results; everything else in the package is built on
top of them and is backend independent.
"""

from .orders import _key_function

BACKEND_NAME = "python"


def compare(m1, m2, spec):
    k = _key_function(spec)
    a, b = k(m1), k(m2)
    if a < b:
        return -1
    if a > b:
        return 1
    return 0


def canonicalize(terms, p, spec):
    """Arbitrary (coeff, exps) pairs -> canonical descending term tuple."""
    acc = {}
    for c, m in terms:
        m = tuple(m)
        acc[m] = (acc.get(m, 0) + c) % p
    key = _key_function(spec)
    items = [(c, m) for m, c in acc.items() if c]
    items.sort(key=lambda t: key(t[1]), reverse=True)
    return tuple(items)


def _merge(a, ai, b, p):
    # a[ai:], b: decorated (key, coeff, mono) lists, descending; returns their sum
    out = []
    i, j, na, nb = ai, 0, len(a), len(b)
    while i < na and j < nb:
        ka, kb = a[i][0], b[j][0]
        if ka > kb:
            out.append(a[i])
            i += 1
        elif ka < kb:
            out.append(b[j])
            j += 1
        else:
            c = (a[i][1] + b[j][1]) % p
            if c:
                out.append((ka, c, a[i][2]))
            i += 1
            j += 1
    if i < na:
        out.extend(a[i:])
    if j < nb:
        out.extend(b[j:])
    return out


def add(f, g, p, spec):
    if not f:
        return tuple(g)
    if not g:
        return tuple(f)
    key = _key_function(spec)
    a = [(key(m), c, m) for c, m in f]
    b = [(key(m), c, m) for c, m in g]
    return tuple((c, m) for _, c, m in _merge(a, 0, b, p))


def mul_term(f, c, t, p):
    """f * (c * x^t); preserves term order because orders are multiplicative."""
    c %= p
    if c == 0 or not f:
        return ()
    if not any(t):
        return tuple(((cf * c) % p, m) for cf, m in f)
    return tuple(((cf * c) % p, tuple(a + b for a, b in zip(m, t))) for cf, m in f)


def mul(f, g, p, spec):
    if not f or not g:
        return ()
    acc = {}
    for c1, m1 in f:
        for c2, m2 in g:
            m = tuple(a + b for a, b in zip(m1, m2))
            acc[m] = (acc.get(m, 0) + c1 * c2) % p
    key = _key_function(spec)
    items = [(c, m) for m, c in acc.items() if c]
    items.sort(key=lambda t: key(t[1]), reverse=True)
    return tuple(items)


def normal_form(f, basis, p, spec):
    """Fully reduced remainder of f under division by the list `basis`.

    No monomial of the result is divisible by any lead monomial of the
    basis; reducers are tried in list order, so the result is deterministic
    for a fixed basis list (and canonical when the list is a Groebner basis).
    """
    if not f:
        return ()
    red = []
    for g in basis:
        if g:
            lc, lm = g[0]
            red.append((lm, pow(lc, -1, p), g[1:]))
    if not red:
        return tuple(f)
    key = _key_function(spec)
    h = [(key(m), c, m) for c, m in f]
    hi = 0
    out = []
    while hi < len(h):
        _, c0, m0 = h[hi]
        hit = None
        for lm, inv, tail in red:
            for a, b in zip(lm, m0):
                if a > b:
                    break
            else:
                hit = (lm, inv, tail)
                break
        if hit is None:
            out.append((c0, m0))
            hi += 1
            continue
        lm, inv, tail = hit
        fac = (c0 * inv) % p
        t = tuple(b - a for a, b in zip(lm, m0))
        b_dec = []
        for gc, gm in tail:
            nm = tuple(a + b for a, b in zip(gm, t))
            b_dec.append((key(nm), (-fac * gc) % p, nm))
        h = _merge(h, hi + 1, b_dec, p)
        hi = 0
    return tuple(out)

"""Kernel selection and backend-independent derived operations.

At import time the compiled kernel is preferred; the pure-Python kernel is
the fallback.  ``CHARPLAB_BACKEND=python`` forces the fallback and
``CHARPLAB_BACKEND=c`` makes a missing extension a hard error.
"""

import os

from . import _kernel_py
from .errors import DomainError

_requested = os.environ.get("CHARPLAB_BACKEND", "")
if _requested not in ("", "c", "python"):
    raise ImportError(f"CHARPLAB_BACKEND must be 'c' or 'python', got {_requested!r}")

if _requested == "python":
    _impl = _kernel_py
else:
    try:
        from . import _ckernel as _impl  # type: ignore[attr-defined]
    except ImportError:
        if _requested == "c":
            raise
        _impl = _kernel_py

BACKEND = _impl.BACKEND_NAME

# Hot primitives, backend-provided.
compare = _impl.compare
add = _impl.add
mul = _impl.mul
mul_term = _impl.mul_term
normal_form = _impl.normal_form

# Canonicalization is not hot; one shared implementation.
canonicalize = _kernel_py.canonicalize


def neg(f, p):
    if not f:
        return ()
    return mul_term(f, p - 1, (0,) * len(f[0][1]), p)


def scalar_mul(f, c, p):
    if not f:
        return ()
    return mul_term(f, c, (0,) * len(f[0][1]), p)


def monic(f, p):
    if not f or f[0][0] == 1:
        return tuple(f)
    return mul_term(f, pow(f[0][0], -1, p), (0,) * len(f[0][1]), p)


def spoly(f, g, p, spec):
    """S-polynomial of two nonzero term lists."""
    (cf, mf), (cg, mg) = f[0], g[0]
    lcm = tuple(max(a, b) for a, b in zip(mf, mg))
    uf = tuple(a - b for a, b in zip(lcm, mf))
    ug = tuple(a - b for a, b in zip(lcm, mg))
    a = mul_term(f, pow(cf, -1, p), uf, p)
    b = mul_term(g, (-pow(cg, -1, p)) % p, ug, p)
    return add(a, b, p, spec)


def divmod_poly(f, g, p, spec):
    """(quotient, remainder) for division by the single divisor g != 0."""
    if not g:
        raise DomainError("division by the zero polynomial")
    cg, mg = g[0]
    inv = pow(cg, -1, p)
    q = []
    r = []
    h = tuple(f)
    while h:
        c0, m0 = h[0]
        for a, b in zip(mg, m0):
            if a > b:
                divisible = False
                break
        else:
            divisible = True
        if divisible:
            t = tuple(b - a for a, b in zip(mg, m0))
            qc = (c0 * inv) % p
            q.append((qc, t))
            h = add(h, mul_term(g, (-qc) % p, t, p), p, spec)
        else:
            r.append(h[0])
            h = h[1:]
    return tuple(q), tuple(r)


def poly_pow(f, k, p, spec):
    if k < 0:
        raise DomainError("negative polynomial power")
    if k == 0:
        if not f:
            return ()
        return ((1, (0,) * len(f[0][1])),)
    if not f:
        return ()
    if len(f) == 1:
        c, m = f[0]
        return ((pow(c, k, p), tuple(e * k for e in m)),)
    result = f
    k -= 1
    base = f
    while k:
        if k & 1:
            result = mul(result, base, p, spec)
        k >>= 1
        if k:
            base = mul(base, base, p, spec)
    return result

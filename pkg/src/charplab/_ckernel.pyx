# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled arithmetic kernel: same contract as charplab._kernel_py.

Terms are tuples of (coefficient, exponent-tuple); internally they are
flattened into int64 arrays.  Coefficients stay below 2^31 so products fit
comfortably in 64 bits.
"""

from libc.stdlib cimport free, malloc, realloc

ctypedef long long i64

BACKEND_NAME = "c"


cdef i64 modinv(i64 a, i64 p):
    cdef i64 t = 0, newt = 1, r = p, newr = a % p, q, tmp
    while newr != 0:
        q = r / newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


cdef int cmp_lex_seg(i64* a, i64* b, Py_ssize_t* perm, Py_ssize_t lo, Py_ssize_t hi) noexcept:
    cdef Py_ssize_t k, i
    for k in range(lo, hi):
        i = perm[k]
        if a[i] != b[i]:
            return 1 if a[i] > b[i] else -1
    return 0


cdef int cmp_grevlex_seg(i64* a, i64* b, Py_ssize_t* perm, Py_ssize_t lo, Py_ssize_t hi) noexcept:
    cdef i64 da = 0, db = 0
    cdef Py_ssize_t k, i
    for k in range(lo, hi):
        da += a[perm[k]]
        db += b[perm[k]]
    if da != db:
        return 1 if da > db else -1
    for k in range(hi - 1, lo - 1, -1):
        i = perm[k]
        if a[i] != b[i]:
            return 1 if a[i] < b[i] else -1
    return 0


cdef int cmp_mono(i64* a, i64* b, int kind, Py_ssize_t* perm, Py_ssize_t nv, Py_ssize_t block) noexcept:
    cdef int c
    if kind == 0:
        return cmp_lex_seg(a, b, perm, 0, nv)
    if kind == 1:
        return cmp_grevlex_seg(a, b, perm, 0, nv)
    c = cmp_grevlex_seg(a, b, perm, 0, block)
    if c:
        return c
    return cmp_grevlex_seg(a, b, perm, block, nv)


cdef Py_ssize_t* load_perm(object perm_obj) except NULL:
    cdef Py_ssize_t nv = len(perm_obj), k
    cdef Py_ssize_t* perm = <Py_ssize_t*>malloc(nv * sizeof(Py_ssize_t))
    if perm == NULL:
        raise MemoryError()
    for k in range(nv):
        perm[k] = perm_obj[k]
    return perm


cdef int load_terms(object terms, Py_ssize_t nv, Py_ssize_t* n_out, i64** c_out, i64** e_out) except -1:
    cdef Py_ssize_t n = len(terms), i = 0, j
    cdef i64* cs = NULL
    cdef i64* es = NULL
    if n:
        cs = <i64*>malloc(n * sizeof(i64))
        es = <i64*>malloc(n * nv * sizeof(i64))
        if cs == NULL or es == NULL:
            free(cs)
            free(es)
            raise MemoryError()
        for t in terms:
            cs[i] = t[0]
            m = t[1]
            for j in range(nv):
                es[i * nv + j] = m[j]
            i += 1
    n_out[0] = n
    c_out[0] = cs
    e_out[0] = es
    return 0


cdef object dump_terms(Py_ssize_t n, i64* cs, i64* es, Py_ssize_t nv):
    cdef Py_ssize_t i, j
    out = []
    for i in range(n):
        mono = tuple([es[i * nv + j] for j in range(nv)])
        out.append((cs[i], mono))
    return tuple(out)


cdef Py_ssize_t merge_arrays(
    i64* ac, i64* ae, Py_ssize_t ai, Py_ssize_t an,
    i64* bc, i64* be, Py_ssize_t bn,
    i64* rc, i64* re,
    Py_ssize_t nv, i64 p, int kind, Py_ssize_t* perm, Py_ssize_t block,
) noexcept:
    # descending merge with coefficient addition mod p; returns result count
    cdef Py_ssize_t i = ai, j = 0, n = 0, k
    cdef int c
    cdef i64 s
    while i < an and j < bn:
        c = cmp_mono(&ae[i * nv], &be[j * nv], kind, perm, nv, block)
        if c > 0:
            rc[n] = ac[i]
            for k in range(nv):
                re[n * nv + k] = ae[i * nv + k]
            i += 1
            n += 1
        elif c < 0:
            rc[n] = bc[j]
            for k in range(nv):
                re[n * nv + k] = be[j * nv + k]
            j += 1
            n += 1
        else:
            s = (ac[i] + bc[j]) % p
            if s:
                rc[n] = s
                for k in range(nv):
                    re[n * nv + k] = ae[i * nv + k]
                n += 1
            i += 1
            j += 1
    while i < an:
        rc[n] = ac[i]
        for k in range(nv):
            re[n * nv + k] = ae[i * nv + k]
        i += 1
        n += 1
    while j < bn:
        rc[n] = bc[j]
        for k in range(nv):
            re[n * nv + k] = be[j * nv + k]
        j += 1
        n += 1
    return n


def compare(m1, m2, spec):
    cdef int kind = spec[0]
    cdef Py_ssize_t block = spec[2]
    cdef Py_ssize_t nv = len(spec[1])
    cdef Py_ssize_t* perm = load_perm(spec[1])
    cdef i64* a = <i64*>malloc(2 * nv * sizeof(i64))
    cdef Py_ssize_t k
    cdef int r
    if a == NULL:
        free(perm)
        raise MemoryError()
    try:
        for k in range(nv):
            a[k] = m1[k]
            a[nv + k] = m2[k]
        r = cmp_mono(a, a + nv, kind, perm, nv, block)
        return r
    finally:
        free(a)
        free(perm)


def add(f, g, p_in, spec):
    if not f:
        return tuple(g)
    if not g:
        return tuple(f)
    cdef i64 p = p_in
    cdef int kind = spec[0]
    cdef Py_ssize_t block = spec[2]
    cdef Py_ssize_t nv = len(spec[1])
    cdef Py_ssize_t* perm = NULL
    cdef i64* fc = NULL
    cdef i64* fe = NULL
    cdef i64* gc = NULL
    cdef i64* ge = NULL
    cdef i64* rc = NULL
    cdef i64* re = NULL
    cdef Py_ssize_t fn = 0, gn = 0, rn
    try:
        perm = load_perm(spec[1])
        load_terms(f, nv, &fn, &fc, &fe)
        load_terms(g, nv, &gn, &gc, &ge)
        rc = <i64*>malloc((fn + gn) * sizeof(i64))
        re = <i64*>malloc((fn + gn) * nv * sizeof(i64))
        if rc == NULL or re == NULL:
            raise MemoryError()
        rn = merge_arrays(fc, fe, 0, fn, gc, ge, gn, rc, re, nv, p, kind, perm, block)
        return dump_terms(rn, rc, re, nv)
    finally:
        free(perm)
        free(fc)
        free(fe)
        free(gc)
        free(ge)
        free(rc)
        free(re)


def mul_term(f, c_in, t, p_in):
    cdef i64 p = p_in
    cdef i64 c = c_in % p
    if c == 0 or not f:
        return ()
    cdef Py_ssize_t nv = len(t), i
    out = []
    cdef i64 tv
    for cf, m in f:
        pairs = []
        for i in range(nv):
            pairs.append(m[i] + t[i])
        out.append(((cf * c) % p, tuple(pairs)))
    return tuple(out)


def mul(f, g, p_in, spec):
    if not f or not g:
        return ()
    cdef i64 p = p_in
    cdef int kind = spec[0]
    cdef Py_ssize_t block = spec[2]
    cdef Py_ssize_t nv = len(spec[1])
    cdef Py_ssize_t* perm = NULL
    cdef i64* fc = NULL
    cdef i64* fe = NULL
    cdef i64* gc = NULL
    cdef i64* ge = NULL
    cdef i64* tc = NULL
    cdef i64* te = NULL
    cdef i64* ac = NULL
    cdef i64* ae = NULL
    cdef i64* sc = NULL
    cdef i64* se = NULL
    cdef Py_ssize_t fn = 0, gn = 0, an = 0, sn, j, i, k
    cdef i64 coef
    try:
        perm = load_perm(spec[1])
        load_terms(f, nv, &fn, &fc, &fe)
        load_terms(g, nv, &gn, &gc, &ge)
        tc = <i64*>malloc(fn * sizeof(i64))
        te = <i64*>malloc(fn * nv * sizeof(i64))
        ac = <i64*>malloc(fn * gn * sizeof(i64))
        ae = <i64*>malloc(fn * gn * nv * sizeof(i64))
        sc = <i64*>malloc(fn * gn * sizeof(i64))
        se = <i64*>malloc(fn * gn * nv * sizeof(i64))
        if tc == NULL or te == NULL or ac == NULL or ae == NULL or sc == NULL or se == NULL:
            raise MemoryError()
        for j in range(gn):
            coef = gc[j]
            for i in range(fn):
                tc[i] = (fc[i] * coef) % p
                for k in range(nv):
                    te[i * nv + k] = fe[i * nv + k] + ge[j * nv + k]
            sn = merge_arrays(ac, ae, 0, an, tc, te, fn, sc, se, nv, p, kind, perm, block)
            # swap accumulator and scratch
            ac, sc = sc, ac
            ae, se = se, ae
            an = sn
        return dump_terms(an, ac, ae, nv)
    finally:
        free(perm)
        free(fc)
        free(fe)
        free(gc)
        free(ge)
        free(tc)
        free(te)
        free(ac)
        free(ae)
        free(sc)
        free(se)


def normal_form(f, basis, p_in, spec):
    if not f:
        return ()
    flt = [g for g in basis if g]
    if not flt:
        return tuple(f)
    cdef i64 p = p_in
    cdef int kind = spec[0]
    cdef Py_ssize_t block = spec[2]
    cdef Py_ssize_t nv = len(spec[1])
    cdef Py_ssize_t ng = len(flt)
    cdef Py_ssize_t* perm = NULL
    cdef i64* hc = NULL
    cdef i64* he = NULL
    cdef i64* sc = NULL
    cdef i64* se = NULL
    cdef i64* bc = NULL
    cdef i64* be = NULL
    cdef i64* oc = NULL
    cdef i64* oe = NULL
    cdef i64** g_c = NULL
    cdef i64** g_e = NULL
    cdef Py_ssize_t* g_n = NULL
    cdef i64* g_inv = NULL
    cdef i64* lead_e = NULL
    cdef Py_ssize_t hn = 0, hs = 0, hcap = 0, on = 0, ocap, scap = 0, bcap = 0
    cdef Py_ssize_t gi, i, k, tn, newn, hit
    cdef i64 fac, cc
    cdef bint divisible
    cdef i64* tdiff = NULL
    try:
        perm = load_perm(spec[1])
        load_terms(f, nv, &hn, &hc, &he)
        hcap = hn
        g_c = <i64**>malloc(ng * sizeof(i64*))
        g_e = <i64**>malloc(ng * sizeof(i64*))
        g_n = <Py_ssize_t*>malloc(ng * sizeof(Py_ssize_t))
        g_inv = <i64*>malloc(ng * sizeof(i64))
        lead_e = <i64*>malloc(ng * nv * sizeof(i64))
        tdiff = <i64*>malloc(nv * sizeof(i64))
        if g_c == NULL or g_e == NULL or g_n == NULL or g_inv == NULL or lead_e == NULL or tdiff == NULL:
            raise MemoryError()
        for gi in range(ng):
            g_c[gi] = NULL
            g_e[gi] = NULL
        for gi in range(ng):
            load_terms(flt[gi], nv, &g_n[gi], &g_c[gi], &g_e[gi])
            g_inv[gi] = modinv(g_c[gi][0], p)
            for k in range(nv):
                lead_e[gi * nv + k] = g_e[gi][k]
        ocap = hn + 4
        oc = <i64*>malloc(ocap * sizeof(i64))
        oe = <i64*>malloc(ocap * nv * sizeof(i64))
        if oc == NULL or oe == NULL:
            raise MemoryError()
        while hs < hn:
            hit = -1
            for gi in range(ng):
                divisible = True
                for k in range(nv):
                    if lead_e[gi * nv + k] > he[hs * nv + k]:
                        divisible = False
                        break
                if divisible:
                    hit = gi
                    break
            if hit < 0:
                if on == ocap:
                    ocap *= 2
                    oc = <i64*>realloc(oc, ocap * sizeof(i64))
                    oe = <i64*>realloc(oe, ocap * nv * sizeof(i64))
                    if oc == NULL or oe == NULL:
                        raise MemoryError()
                oc[on] = hc[hs]
                for k in range(nv):
                    oe[on * nv + k] = he[hs * nv + k]
                on += 1
                hs += 1
                continue
            gi = hit
            fac = (hc[hs] * g_inv[gi]) % p
            for k in range(nv):
                tdiff[k] = he[hs * nv + k] - lead_e[gi * nv + k]
            tn = g_n[gi] - 1
            if tn > bcap:
                bcap = tn + 4
                free(bc)
                free(be)
                bc = <i64*>malloc(bcap * sizeof(i64))
                be = <i64*>malloc(bcap * nv * sizeof(i64))
                if bc == NULL or be == NULL:
                    raise MemoryError()
            for i in range(tn):
                cc = (fac * g_c[gi][i + 1]) % p
                bc[i] = (p - cc) % p
                for k in range(nv):
                    be[i * nv + k] = g_e[gi][(i + 1) * nv + k] + tdiff[k]
            newn = (hn - hs - 1) + tn
            if newn > scap:
                scap = newn + 8
                free(sc)
                free(se)
                sc = <i64*>malloc(scap * sizeof(i64))
                se = <i64*>malloc(scap * nv * sizeof(i64))
                if sc == NULL or se == NULL:
                    raise MemoryError()
            newn = merge_arrays(hc, he, hs + 1, hn, bc, be, tn, sc, se, nv, p, kind, perm, block)
            hc, sc = sc, hc
            he, se = se, he
            hn = newn
            if hn > scap:
                scap = hn
            hs = 0
        return dump_terms(on, oc, oe, nv)
    finally:
        free(perm)
        free(hc)
        free(he)
        free(sc)
        free(se)
        free(bc)
        free(be)
        free(oc)
        free(oe)
        free(tdiff)
        free(g_inv)
        free(lead_e)
        if g_c != NULL:
            for gi in range(ng):
                free(g_c[gi])
        if g_e != NULL:
            for gi in range(ng):
                free(g_e[gi])
        free(g_c)
        free(g_e)
        free(g_n)

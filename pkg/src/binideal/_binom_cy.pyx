# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of the pure-Python reduction core (_binom_py).

Same algorithm, same tie-breaks, identical output encoding; only the data
layout differs (flat i64 arrays instead of tuples). Any behavior change
here must land in _binom_py as well, and vice versa.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc, PyMem_Realloc

from .errors import ExponentOverflowError
from .ring import EXPONENT_CAP

ctypedef long long i64

cdef i64 EXP_CAP = EXPONENT_CAP
cdef i64 ORDER_CAP = <i64>1 << 31  # coefficient order guard; keeps products in i64


cdef class _Arena:
    # long-lived vectors (basis elements, spec tables); freed in one sweep
    cdef i64** ptrs
    cdef Py_ssize_t used, cap

    def __cinit__(self):
        self.cap = 256
        self.used = 0
        self.ptrs = <i64**>PyMem_Malloc(self.cap * sizeof(i64*))
        if self.ptrs == NULL:
            raise MemoryError()

    cdef i64* alloc(self, Py_ssize_t n) except NULL:
        cdef i64* p
        cdef i64** grown
        if self.used == self.cap:
            grown = <i64**>PyMem_Realloc(self.ptrs, 2 * self.cap * sizeof(i64*))
            if grown == NULL:
                raise MemoryError()
            self.ptrs = grown
            self.cap *= 2
        p = <i64*>PyMem_Malloc((n if n > 0 else 1) * sizeof(i64))
        if p == NULL:
            raise MemoryError()
        self.ptrs[self.used] = p
        self.used += 1
        return p

    def __dealloc__(self):
        cdef Py_ssize_t i
        if self.ptrs != NULL:
            for i in range(self.used):
                PyMem_Free(self.ptrs[i])
            PyMem_Free(self.ptrs)


cdef struct CSpec:
    int nblocks
    i64* kind   # 0 lex, 1 degrevlex
    i64* offs   # nblocks + 1
    i64* idx    # flattened variable indices


cdef int _build_spec(object order_spec, _Arena arena, CSpec* sp) except -1:
    cdef int nb = len(order_spec)
    cdef Py_ssize_t total = 0, t = 0
    cdef int bi
    for _, idxs in order_spec:
        total += len(idxs)
    sp.nblocks = nb
    sp.kind = arena.alloc(nb if nb else 1)
    sp.offs = arena.alloc(nb + 1)
    sp.idx = arena.alloc(total if total else 1)
    sp.offs[0] = 0
    for bi, (kind, idxs) in enumerate(order_spec):
        sp.kind[bi] = kind
        for i in idxs:
            sp.idx[t] = i
            t += 1
        sp.offs[bi + 1] = t
    return 0


cdef int _cmp_exp(CSpec* sp, i64* a, i64* b) noexcept nogil:
    # lexicographic comparison of the flattened order keys
    cdef int bi
    cdef Py_ssize_t t
    cdef i64 i, da, db
    for bi in range(sp.nblocks):
        if sp.kind[bi] == 0:
            for t in range(sp.offs[bi], sp.offs[bi + 1]):
                i = sp.idx[t]
                if a[i] != b[i]:
                    return -1 if a[i] < b[i] else 1
        else:
            da = 0
            db = 0
            for t in range(sp.offs[bi], sp.offs[bi + 1]):
                i = sp.idx[t]
                da += a[i]
                db += b[i]
            if da != db:
                return -1 if da < db else 1
            t = sp.offs[bi + 1] - 1
            while t >= sp.offs[bi]:
                i = sp.idx[t]
                if a[i] != b[i]:
                    # key carries negated exponents here
                    return -1 if a[i] > b[i] else 1
                t -= 1
    return 0


# -- coefficient helpers: canonical (order, exponent) root-of-unity pairs --

cdef i64 _gcd(i64 a, i64 b) noexcept nogil:
    cdef i64 t
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef void _c_canon(i64 o, i64 e, i64* ro, i64* re) noexcept nogil:
    cdef i64 g
    e = e % o
    if e < 0:
        e += o
    if e == 0:
        ro[0] = 1
        re[0] = 0
        return
    g = _gcd(e, o)
    ro[0] = o // g
    re[0] = e // g


cdef int _c_mul(i64 ao, i64 ae, i64 bo, i64 be, i64* ro, i64* re) except -1:
    cdef i64 g = _gcd(ao, bo)
    cdef i64 o
    if (ao // g) > ORDER_CAP // bo:
        raise OverflowError("root-of-unity order out of range")
    o = ao // g * bo
    _c_canon(o, ae * (o // ao) + be * (o // bo), ro, re)
    return 0


cdef int _c_div(i64 ao, i64 ae, i64 bo, i64 be, i64* ro, i64* re) except -1:
    cdef i64 g = _gcd(ao, bo)
    cdef i64 o
    if (ao // g) > ORDER_CAP // bo:
        raise OverflowError("root-of-unity order out of range")
    o = ao // g * bo
    _c_canon(o, ae * (o // ao) - be * (o // bo), ro, re)
    return 0


# -- exponent vector helpers --

cdef bint _divides(i64* p, i64* a, int n) noexcept nogil:
    cdef int i
    for i in range(n):
        if p[i] > a[i]:
            return 0
    return 1

cdef bint _veq(i64* a, i64* b, int n) noexcept nogil:
    cdef int i
    for i in range(n):
        if a[i] != b[i]:
            return 0
    return 1

cdef bint _coprime(i64* a, i64* b, int n) noexcept nogil:
    cdef int i
    for i in range(n):
        if a[i] != 0 and b[i] != 0:
            return 0
    return 1

cdef bint _iszero(i64* a, int n) noexcept nogil:
    cdef int i
    for i in range(n):
        if a[i]:
            return 0
    return 1

cdef void _lcm_into(i64* a, i64* b, i64* out, int n) noexcept nogil:
    cdef int i
    for i in range(n):
        out[i] = a[i] if a[i] > b[i] else b[i]

cdef void _copy_into(i64* src, i64* out, int n) noexcept nogil:
    cdef int i
    for i in range(n):
        out[i] = src[i]

cdef int _msub_add_into(i64* a, i64* p, i64* q, i64* out, int n) except -1:
    # out = a - p + q; out may alias a; nonnegative by construction, capped
    cdef int i
    cdef i64 x
    for i in range(n):
        x = a[i] - p[i] + q[i]
        if x > EXP_CAP:
            raise ExponentOverflowError("exponent cap exceeded in reduction")
        out[i] = x
    return 0


cdef struct WElem:
    # working element over two caller-owned scratch buffers
    i64* lead
    i64* trail   # NULL for a monomial
    i64 co, ce

cdef struct BElem:
    i64* lead
    i64* trail
    i64 co, ce


cdef int _orient(CSpec* sp, int n, WElem* w,
                 i64* u, i64* v, i64 cuo, i64 cue, i64 cvo, i64 cve) except -1:
    """Monic form of cu*x^u - cv*x^v into w; returns 1 when it collapses
    to zero. u and v are the scratch buffers w will keep pointing into."""
    cdef int c = _cmp_exp(sp, u, v)
    cdef i64 ro, re
    if c > 0:
        _c_div(cvo, cve, cuo, cue, &ro, &re)
        w.lead = u
        w.trail = v
        w.co = ro
        w.ce = re
        return 0
    if c < 0:
        _c_div(cuo, cue, cvo, cve, &ro, &re)
        w.lead = v
        w.trail = u
        w.co = ro
        w.ce = re
        return 0
    _c_div(cvo, cve, cuo, cue, &ro, &re)
    if ro == 1 and re == 0:
        return 1
    w.lead = u
    w.trail = NULL
    w.co = 1
    w.ce = 0
    return 0


cdef int _reduce(CSpec* sp, int n,
                 BElem* basis, Py_ssize_t nb, Py_ssize_t skip,
                 WElem* w) except -1:
    """Full normal form of w against basis; returns 1 when w drops to zero.

    Allocation-free: every rewrite lands in place in w's scratch buffers
    (reads precede writes coordinatewise, so aliasing is fine).
    """
    cdef bint changed = True
    cdef Py_ssize_t gi
    cdef i64 ro, re
    cdef WElem tmp
    while changed:
        changed = False
        for gi in range(nb):
            if gi == skip:
                continue
            if not _divides(basis[gi].lead, w.lead, n):
                continue
            if basis[gi].trail == NULL:
                if w.trail == NULL:
                    return 1
                w.lead = w.trail
                w.trail = NULL
                w.co = 1
                w.ce = 0
            else:
                _msub_add_into(w.lead, basis[gi].lead, basis[gi].trail, w.lead, n)
                if w.trail != NULL:
                    if _orient(sp, n, &tmp, w.lead, w.trail,
                               basis[gi].co, basis[gi].ce, w.co, w.ce):
                        return 1
                    w[0] = tmp
            changed = True
            break
    if w.trail == NULL:
        w.co = 1
        w.ce = 0
        return 0
    changed = True
    while changed:
        changed = False
        for gi in range(nb):
            if gi == skip:
                continue
            if not _divides(basis[gi].lead, w.trail, n):
                continue
            if basis[gi].trail == NULL:
                w.trail = NULL
                w.co = 1
                w.ce = 0
                return 0
            _msub_add_into(w.trail, basis[gi].lead, basis[gi].trail, w.trail, n)
            _c_mul(w.co, w.ce, basis[gi].co, basis[gi].ce, &ro, &re)
            w.co = ro
            w.ce = re
            changed = True
            break
    return 0


cdef int _spoly(CSpec* sp, int n, BElem* f, BElem* g,
                WElem* w, i64* s0, i64* s1, i64* s2) except -1:
    """S-polynomial of f and g into scratch (s0, s1); s2 holds the lcm.
    Returns 1 when it is zero."""
    _lcm_into(f.lead, g.lead, s2, n)
    if f.trail == NULL and g.trail == NULL:
        return 1
    if f.trail == NULL:
        _msub_add_into(s2, g.lead, g.trail, s0, n)
        w.lead = s0
        w.trail = NULL
        w.co = 1
        w.ce = 0
        return 0
    if g.trail == NULL:
        _msub_add_into(s2, f.lead, f.trail, s0, n)
        w.lead = s0
        w.trail = NULL
        w.co = 1
        w.ce = 0
        return 0
    _msub_add_into(s2, g.lead, g.trail, s0, n)   # carries g's coefficient
    _msub_add_into(s2, f.lead, f.trail, s1, n)   # carries f's coefficient
    return _orient(sp, n, w, s0, s1, g.co, g.ce, f.co, f.ce)


cdef struct BPair:
    Py_ssize_t i, j
    i64* lcm   # owned by the pair list


cdef class _Pairs:
    cdef BPair* data
    cdef Py_ssize_t used, cap

    def __cinit__(self):
        self.cap = 64
        self.used = 0
        self.data = <BPair*>PyMem_Malloc(self.cap * sizeof(BPair))
        if self.data == NULL:
            raise MemoryError()

    cdef int push(self, Py_ssize_t i, Py_ssize_t j, i64* lcm) except -1:
        # takes ownership of lcm
        cdef BPair* grown
        if self.used == self.cap:
            grown = <BPair*>PyMem_Realloc(self.data, 2 * self.cap * sizeof(BPair))
            if grown == NULL:
                PyMem_Free(lcm)
                raise MemoryError()
            self.data = grown
            self.cap *= 2
        self.data[self.used].i = i
        self.data[self.used].j = j
        self.data[self.used].lcm = lcm
        self.used += 1
        return 0

    cdef void drop(self, Py_ssize_t k) noexcept:
        # order-free removal; selection scans the whole list anyway
        PyMem_Free(self.data[k].lcm)
        self.data[k] = self.data[self.used - 1]
        self.used -= 1

    def __dealloc__(self):
        cdef Py_ssize_t k
        if self.data != NULL:
            for k in range(self.used):
                PyMem_Free(self.data[k].lcm)
            PyMem_Free(self.data)


cdef int _update_pairs(CSpec* sp, int n,
                       BElem* basis, Py_ssize_t t, _Pairs pairs) except -1:
    """Gebauer-Moeller update after appending basis[t]; rewrites pairs."""
    cdef i64* h_lead = basis[t].lead
    cdef Py_ssize_t i, j, k, w
    cdef i64** lcms = NULL
    cdef char* take = NULL
    cdef bint divided
    cdef i64* li
    cdef i64* lj
    cdef i64* lij
    lcms = <i64**>PyMem_Malloc((t if t > 0 else 1) * sizeof(i64*))
    take = <char*>PyMem_Malloc(t if t > 0 else 1)
    if lcms == NULL or take == NULL:
        PyMem_Free(lcms)
        PyMem_Free(take)
        raise MemoryError()
    for i in range(t):
        lcms[i] = NULL
    try:
        for i in range(t):
            lcms[i] = <i64*>PyMem_Malloc(n * sizeof(i64))
            if lcms[i] == NULL:
                raise MemoryError()
            _lcm_into(basis[i].lead, h_lead, lcms[i], n)
        for i in range(t):
            if _coprime(basis[i].lead, h_lead, n):
                take[i] = 0  # product criterion, but still blocks equal lcms
                continue
            li = lcms[i]
            divided = False
            for j in range(t):
                if j == i:
                    continue
                lj = lcms[j]
                if not _veq(lj, li, n):
                    if _divides(lj, li, n):
                        divided = True
                        break
                elif j < i:
                    divided = True  # equal lcm: keep only the first
                    break
            take[i] = 0 if divided else 1
        # chain criterion against h on the existing pairs
        k = 0
        while k < pairs.used:
            i = pairs.data[k].i
            j = pairs.data[k].j
            lij = pairs.data[k].lcm
            if _divides(h_lead, lij, n) and not (
                    _veq(lcms[i], lij, n) or _veq(lcms[j], lij, n)):
                pairs.drop(k)
            else:
                k += 1
        for i in range(t):
            if take[i]:
                pairs.push(i, t, lcms[i])
                lcms[i] = NULL  # ownership moved
    finally:
        for i in range(t):
            PyMem_Free(lcms[i])
        PyMem_Free(lcms)
        PyMem_Free(take)
    return 0


cdef i64* _vec_from_tuple(object tup, int n, _Arena arena) except NULL:
    cdef i64* p = arena.alloc(n)
    cdef int i
    for i in range(n):
        p[i] = tup[i]
    return p


cdef object _tuple_from_vec(i64* p, int n):
    cdef int i
    return tuple([p[i] for i in range(n)])


cdef int _append_elem(BElem** basis, Py_ssize_t* nb, Py_ssize_t* cap,
                      WElem* w, int n, _Arena arena) except -1:
    # persist the working element: copy scratch into arena-owned vectors
    cdef BElem* grown
    cdef i64* lv
    cdef i64* tv
    if nb[0] == cap[0]:
        grown = <BElem*>PyMem_Realloc(basis[0], 2 * cap[0] * sizeof(BElem))
        if grown == NULL:
            raise MemoryError()
        basis[0] = grown
        cap[0] *= 2
    lv = arena.alloc(n)
    _copy_into(w.lead, lv, n)
    basis[0][nb[0]].lead = lv
    if w.trail == NULL:
        basis[0][nb[0]].trail = NULL
    else:
        tv = arena.alloc(n)
        _copy_into(w.trail, tv, n)
        basis[0][nb[0]].trail = tv
    basis[0][nb[0]].co = w.co
    basis[0][nb[0]].ce = w.ce
    nb[0] += 1
    return 0


cdef object _emit(BElem* els, Py_ssize_t count, int n):
    out = []
    cdef Py_ssize_t i
    for i in range(count):
        if els[i].trail == NULL:
            out.append((_tuple_from_vec(els[i].lead, n), None, 1, 0))
        else:
            out.append((_tuple_from_vec(els[i].lead, n),
                        _tuple_from_vec(els[i].trail, n),
                        els[i].co, els[i].ce))
    return out


cdef int _load_scratch(object lead, object trail, object cord, object cexp,
                       CSpec* sp, int n, i64* s0, i64* s1, WElem* w) except -1:
    """Copy a boundary-encoded element into scratch; 1 when it is zero."""
    cdef int i
    cdef i64 co, ce
    for i in range(n):
        s0[i] = lead[i]
    if trail is None:
        w.lead = s0
        w.trail = NULL
        w.co = 1
        w.ce = 0
        return 0
    for i in range(n):
        s1[i] = trail[i]
    _c_canon(cord, cexp, &co, &ce)
    return _orient(sp, n, w, s0, s1, 1, 0, co, ce)


def buchberger(gens, nvars, order_spec):
    """Reduced Groebner basis; same contract as the pure twin."""
    cdef _Arena arena = _Arena()
    cdef CSpec sp
    cdef int n = nvars
    cdef Py_ssize_t cap = 64, nb = 0, i, j, k, best, pos, w, nkept, nred
    cdef BElem* basis = NULL
    cdef BElem* kept_arr = NULL
    cdef char* alive = NULL
    cdef Py_ssize_t* order_idx = NULL
    cdef _Pairs pairs = _Pairs()
    cdef WElem we
    cdef BElem tmp_el
    cdef bint unit = False
    cdef i64* s0
    cdef i64* s1
    cdef i64* s2
    cdef int c
    _build_spec(order_spec, arena, &sp)
    s0 = arena.alloc(n)
    s1 = arena.alloc(n)
    s2 = arena.alloc(n)
    basis = <BElem*>PyMem_Malloc(cap * sizeof(BElem))
    if basis == NULL:
        raise MemoryError()
    try:
        for (lead, trail, cord, cexp) in gens:
            if lead is None:
                continue
            if _load_scratch(lead, trail, cord, cexp, &sp, n, s0, s1, &we):
                continue
            if _reduce(&sp, n, basis, nb, -1, &we):
                continue
            if we.trail == NULL and _iszero(we.lead, n):
                unit = True
                break
            _append_elem(&basis, &nb, &cap, &we, n, arena)
            _update_pairs(&sp, n, basis, nb - 1, pairs)

        while pairs.used > 0 and not unit:
            # normal strategy: smallest lcm key, then smallest (i, j)
            best = 0
            for k in range(1, pairs.used):
                c = _cmp_exp(&sp, pairs.data[k].lcm, pairs.data[best].lcm)
                if c < 0:
                    best = k
                elif c == 0:
                    if (pairs.data[k].i < pairs.data[best].i
                            or (pairs.data[k].i == pairs.data[best].i
                                and pairs.data[k].j < pairs.data[best].j)):
                        best = k
            i = pairs.data[best].i
            j = pairs.data[best].j
            pairs.drop(best)
            if _spoly(&sp, n, &basis[i], &basis[j], &we, s0, s1, s2):
                continue
            if _reduce(&sp, n, basis, nb, -1, &we):
                continue
            if we.trail == NULL and _iszero(we.lead, n):
                unit = True
                break
            _append_elem(&basis, &nb, &cap, &we, n, arena)
            _update_pairs(&sp, n, basis, nb - 1, pairs)

        if unit:
            return [((0,) * n, None, 1, 0)]

        # minimalize: sort by lead key (stable on index), drop divisible leads
        order_idx = <Py_ssize_t*>PyMem_Malloc((nb if nb else 1) * sizeof(Py_ssize_t))
        alive = <char*>PyMem_Malloc(nb if nb else 1)
        kept_arr = <BElem*>PyMem_Malloc((nb if nb else 1) * sizeof(BElem))
        if order_idx == NULL or alive == NULL or kept_arr == NULL:
            raise MemoryError()
        for i in range(nb):
            order_idx[i] = i
            alive[i] = 1
        for i in range(1, nb):  # insertion sort: cmp lead keys, tie on index
            k = order_idx[i]
            j = i - 1
            while j >= 0:
                c = _cmp_exp(&sp, basis[order_idx[j]].lead, basis[k].lead)
                if c > 0 or (c == 0 and order_idx[j] > k):
                    order_idx[j + 1] = order_idx[j]
                    j -= 1
                else:
                    break
            order_idx[j + 1] = k
        for pos in range(nb):
            i = order_idx[pos]
            if not alive[i]:
                continue
            for k in range(pos):
                j = order_idx[k]
                if alive[j] and _divides(basis[j].lead, basis[i].lead, n):
                    alive[i] = 0
                    break
        nkept = 0
        for pos in range(nb):
            i = order_idx[pos]
            if alive[i]:
                kept_arr[nkept] = basis[i]
                nkept += 1

        # inter-reduce tails against the minimal set, reusing basis storage
        nred = 0
        for pos in range(nkept):
            _copy_into(kept_arr[pos].lead, s0, n)
            we.lead = s0
            if kept_arr[pos].trail == NULL:
                we.trail = NULL
                we.co = 1
                we.ce = 0
            else:
                _copy_into(kept_arr[pos].trail, s1, n)
                we.trail = s1
                we.co = kept_arr[pos].co
                we.ce = kept_arr[pos].ce
            if _reduce(&sp, n, kept_arr, nkept, pos, &we):
                continue
            # persist out of scratch: the buffers are reused next iteration
            basis[nred].lead = arena.alloc(n)
            _copy_into(we.lead, basis[nred].lead, n)
            if we.trail == NULL:
                basis[nred].trail = NULL
            else:
                basis[nred].trail = arena.alloc(n)
                _copy_into(we.trail, basis[nred].trail, n)
            basis[nred].co = we.co
            basis[nred].ce = we.ce
            nred += 1

        for i in range(1, nred):  # final sort; lead keys are pairwise distinct
            tmp_el = basis[i]
            j = i - 1
            while j >= 0 and _cmp_exp(&sp, basis[j].lead, tmp_el.lead) > 0:
                basis[j + 1] = basis[j]
                j -= 1
            basis[j + 1] = tmp_el
        return _emit(basis, nred, n)
    finally:
        PyMem_Free(basis)
        PyMem_Free(order_idx)
        PyMem_Free(alive)
        PyMem_Free(kept_arr)


def normal_form(f, basis_enc, nvars, order_spec):
    """Reduce one element against a Groebner basis; None means zero."""
    cdef _Arena arena = _Arena()
    cdef CSpec sp
    cdef int n = nvars
    cdef Py_ssize_t nb = len(basis_enc), i = 0
    cdef BElem* basis = NULL
    cdef WElem we
    cdef i64* s0
    cdef i64* s1
    _build_spec(order_spec, arena, &sp)
    lead, trail, cord, cexp = f
    if lead is None:
        return None
    s0 = arena.alloc(n)
    s1 = arena.alloc(n)
    basis = <BElem*>PyMem_Malloc((nb if nb else 1) * sizeof(BElem))
    if basis == NULL:
        raise MemoryError()
    try:
        for (blead, btrail, bco, bce) in basis_enc:
            basis[i].lead = _vec_from_tuple(blead, n, arena)
            if btrail is None:
                basis[i].trail = NULL
                basis[i].co = 1
                basis[i].ce = 0
            else:
                basis[i].trail = _vec_from_tuple(btrail, n, arena)
                _c_canon(bco, bce, &basis[i].co, &basis[i].ce)
            i += 1
        if _load_scratch(lead, trail, cord, cexp, &sp, n, s0, s1, &we):
            return None
        if _reduce(&sp, n, basis, nb, -1, &we):
            return None
        if we.trail == NULL:
            return (_tuple_from_vec(we.lead, n), None, 1, 0)
        return (_tuple_from_vec(we.lead, n), _tuple_from_vec(we.trail, n),
                we.co, we.ce)
    finally:
        PyMem_Free(basis)

# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=False
"""Compiled hot kernels; same interface and results as ``_kernels_py``."""

from math import gcd

cdef int BR_COEF[3][3]
cdef int BR_COLOR[3][3]
cdef int FORM_T[3][3]

BR_COEF[0][:] = [0, 2, -1]
BR_COEF[1][:] = [-2, 0, 2]
BR_COEF[2][:] = [1, -2, 0]
BR_COLOR[0][:] = [-1, 0, 1]
BR_COLOR[1][:] = [0, -1, 2]
BR_COLOR[2][:] = [1, 2, -1]
FORM_T[0][:] = [0, 0, 1]
FORM_T[1][:] = [0, 2, 0]
FORM_T[2][:] = [1, 0, 0]


cdef inline long fdiv3(long c):
    # floor division by 3 for negative codes
    if c >= 0:
        return c // 3
    return -((-c + 2) // 3)


cdef class Straightener:
    cdef public long level
    cdef public object lam_h
    cdef public long top
    cdef public dict memo

    def __init__(self, level, lam_h, top):
        self.level = level
        self.lam_h = lam_h
        self.top = top
        self.memo = {}

    cpdef dict act_key(self, long b, tuple key):
        cdef long a, db, cb, da, ca, f, coef, col
        cdef dict res, inner, sub
        cdef tuple rest, mk
        cdef object k1, c1, k2, c2
        if b <= self.top and (len(key) == 0 or b <= <long>key[0]):
            return {(b,) + key: 1}
        mk = (b, key)
        res = self.memo.get(mk)
        if res is not None:
            return res
        if len(key) == 0:
            res = {}
            db = fdiv3(b)
            cb = b - 3 * db
            if db == 0 and cb == 1 and self.lam_h:
                res[()] = self.lam_h
        else:
            res = {}
            a = key[0]
            rest = key[1:]
            inner = self.act_key(b, rest)
            for k1, c1 in inner.items():
                sub = self.act_key(a, k1)
                for k2, c2 in sub.items():
                    res[k2] = res.get(k2, 0) + c1 * c2
            db = fdiv3(b)
            cb = b - 3 * db
            da = fdiv3(a)
            ca = a - 3 * da
            col = BR_COLOR[cb][ca]
            if col >= 0:
                coef = BR_COEF[cb][ca]
                sub = self.act_key(3 * (db + da) + col, rest)
                for k1, c1 in sub.items():
                    res[k1] = res.get(k1, 0) + coef * c1
            if db + da == 0 and db != 0:
                f = FORM_T[cb][ca]
                if f:
                    res[rest] = res.get(rest, 0) + db * f * self.level
            res = {k1: c1 for k1, c1 in res.items() if c1}
        self.memo[mk] = res
        return res

    cpdef dict act_vec(self, long b, dict vec):
        cdef dict out = {}
        cdef dict sub
        cdef object key, c, k2, c2
        for key, c in vec.items():
            sub = self.act_key(b, key)
            for k2, c2 in sub.items():
                out[k2] = out.get(k2, 0) + c * c2
        return {k2: c2 for k2, c2 in out.items() if c2}

    def act_word(self, word, dict vec):
        cdef long b
        for b in reversed(list(word)):
            vec = self.act_vec(b, vec)
            if not vec:
                break
        return vec


cpdef void add_into(dict acc, dict vec, object scale):
    cdef object key, c
    for key, c in vec.items():
        acc[key] = acc.get(key, 0) + scale * c


cpdef dict prune(dict vec):
    return {k: c for k, c in vec.items() if c}


cdef object binom(long n, long k):
    cdef object r = 1
    cdef long i
    for i in range(k):
        r = r * (n - i) // (i + 1)
    return r


def base_relation(Straightener st, long n, long count, dict vec):
    cdef dict out = {}
    cdef long d = 0
    cdef object key
    if not vec:
        return out
    for key in vec:
        for c in key:
            d += fdiv3(c)
        break
    _base_rec(st, n, count, vec, d, 0, False, 1, out)
    return {k: c for k, c in out.items() if c}


cdef void _base_rec(Straightener st, long s, long c, dict vec, long d, long jmax,
                    bint bounded, object weight, dict out):
    cdef long hi, lo, j, t, rem, srem, dd, code
    cdef dict cur
    if c == 0:
        if s == 0:
            add_into(out, vec, weight)
        return
    hi = -d
    if bounded and jmax - 1 < hi:
        hi = jmax - 1
    lo = -fdiv3_div(-s, c)
    j = hi
    while j >= lo:
        cur = vec
        dd = d
        code = 3 * j
        for t in range(1, c + 1):
            cur = st.act_vec(code, cur)
            if not cur:
                break
            dd += j
            rem = c - t
            srem = s - t * j
            if rem == 0:
                if srem == 0:
                    add_into(out, cur, weight * binom(c, t))
                break
            if srem > rem * (j - 1):
                continue
            _base_rec(st, srem, rem, cur, dd, j, True, weight * binom(c, t), out)
        j -= 1


cdef inline long fdiv3_div(long a, long b):
    # floor(a / b) for b > 0
    if a >= 0:
        return a // b
    return -((-a + b - 1) // b)


cdef class Eliminator:
    cdef public dict pivots

    def __init__(self):
        self.pivots = {}

    cpdef dict reduce(self, dict row):
        cdef dict prow, new
        cdef object pv, rv, g, fa, fb, v, nv
        cdef long c
        row = {col: v for col, v in row.items() if v}
        while row:
            c = min(row)
            prow = self.pivots.get(c)
            if prow is None:
                return row
            pv = prow[c]
            rv = row[c]
            g = gcd(pv, rv)
            fa = pv // g
            fb = rv // g
            new = {}
            for col, v in row.items():
                new[col] = v * fa
            for col, v in prow.items():
                nv = new.get(col, 0) - v * fb
                if nv:
                    new[col] = nv
                else:
                    new.pop(col, None)
            row = primitive(new)
        return row

    cpdef bint add(self, dict row):
        row = self.reduce(row)
        if not row:
            return False
        row = primitive(row)
        self.pivots[min(row)] = row
        return True

    @property
    def rank(self):
        return len(self.pivots)


cdef dict primitive(dict row):
    cdef object g = 0
    cdef object v
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {c: v // g for c, v in row.items()}
    return row

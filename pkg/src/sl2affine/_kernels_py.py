"""Pure-Python hot kernels: PBW straightening and sparse fraction-free elimination.

Parts are integer codes ``3*degree + color`` (y=0, h=1, x=2); a PBW monomial is
a nondecreasing tuple of codes read left to right, so its largest part acts on
the highest-weight vector first.  Coefficients are Python ints.
"""

from math import gcd

# [a, b] for colors a, b in (y, h, x): (coefficient, color) or None
BRACKET = (
    (None, (2, 0), (-1, 1)),   # [y,y]=0, [y,h]=2y, [y,x]=-h
    ((-2, 0), None, (2, 2)),   # [h,y]=-2y, [h,h]=0, [h,x]=2x
    ((1, 1), (-2, 2), None),   # [x,y]=h, [x,h]=-2x, [x,x]=0
)
# invariant form (a, b)
FORM = (
    (0, 0, 1),
    (0, 2, 0),
    (1, 0, 0),
)


class Straightener:
    """Left action of loop-algebra parts on PBW monomials of a highest-weight module.

    ``top`` is the largest code in the PBW alphabet: 0 when ``y(0)`` is a free
    generator, -1 when all of the degree-zero subalgebra fixes the vacuum line.
    """

    def __init__(self, level, lam_h, top):
        self.level = level
        self.lam_h = lam_h
        self.top = top
        self.memo = {}

    def act_key(self, b, key):
        if b <= self.top and (not key or b <= key[0]):
            return {(b,) + key: 1}
        mk = (b, key)
        res = self.memo.get(mk)
        if res is not None:
            return res
        if not key:
            res = self._vacuum(b)
        else:
            res = {}
            a = key[0]
            rest = key[1:]
            act = self.act_key
            for k1, c1 in act(b, rest).items():
                for k2, c2 in act(a, k1).items():
                    res[k2] = res.get(k2, 0) + c1 * c2
            db, cb = divmod(b, 3)
            da, ca = divmod(a, 3)
            br = BRACKET[cb][ca]
            if br is not None:
                coef, col = br
                for k1, c1 in act(3 * (db + da) + col, rest).items():
                    res[k1] = res.get(k1, 0) + coef * c1
            if db + da == 0:
                f = FORM[cb][ca]
                if f and db:
                    res[rest] = res.get(rest, 0) + db * f * self.level
            res = {kk: c for kk, c in res.items() if c}
        self.memo[mk] = res
        return res

    def _vacuum(self, b):
        d, col = divmod(b, 3)
        if d == 0 and col == 1 and self.lam_h:
            return {(): self.lam_h}
        return {}

    def act_vec(self, b, vec):
        out = {}
        act = self.act_key
        for key, c in vec.items():
            for k2, c2 in act(b, key).items():
                out[k2] = out.get(k2, 0) + c * c2
        return {kk: c for kk, c in out.items() if c}

    def act_word(self, word, vec):
        for b in reversed(word):
            vec = self.act_vec(b, vec)
            if not vec:
                break
        return vec


def add_into(acc, vec, scale):
    for key, c in vec.items():
        acc[key] = acc.get(key, 0) + scale * c


def prune(vec):
    return {k: c for k, c in vec.items() if c}


def degree_of_key(key):
    return sum(c // 3 for c in key)


def base_relation(st, n, count, vec):
    """Apply the sum over all ordered ``count``-tuples ``y(j1)...y(jc)`` with ``sum j = n``.

    The ``y`` modes commute, so tuples are grouped into multisets with
    multinomial weights.  Modes are applied largest first; a mode above
    ``-degree`` annihilates the current vector, which bounds the search.
    """
    out = {}
    if not vec:
        return out
    d = degree_of_key(next(iter(vec)))
    _base_rec(st, n, count, vec, d, None, 1, out)
    return prune(out)


def _binom(n, k):
    r = 1
    for i in range(k):
        r = r * (n - i) // (i + 1)
    return r


def _base_rec(st, s, c, vec, d, jmax, weight, out):
    if c == 0:
        if s == 0:
            add_into(out, vec, weight)
        return
    hi = -d if jmax is None else min(-d, jmax - 1)
    lo = -((-s) // c)  # ceil(s / c): the largest of c modes is at least this
    for j in range(hi, lo - 1, -1):
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
                    add_into(out, cur, weight * _binom(c, t))
                break
            # remaining modes are all below j
            if srem > rem * (j - 1):
                continue
            _base_rec(st, srem, rem, cur, dd, j, weight * _binom(c, t), out)


class Eliminator:
    """Incremental sparse fraction-free row reduction on integer-indexed columns.

    Rows are dicts ``column -> int``.  Each stored row is keyed by its smallest
    column (its pivot); new rows are top-reduced against stored pivots.
    """

    def __init__(self):
        self.pivots = {}

    def reduce(self, row):
        row = {c: v for c, v in row.items() if v}
        pivots = self.pivots
        while row:
            c = min(row)
            prow = pivots.get(c)
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
            row = _primitive(new)
        return row

    def add(self, row):
        row = self.reduce(row)
        if not row:
            return False
        row = _primitive(row)
        self.pivots[min(row)] = row
        return True

    @property
    def rank(self):
        return len(self.pivots)


def _primitive(row):
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {c: v // g for c, v in row.items()}
    return row

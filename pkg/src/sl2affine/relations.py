"""Coefficients ``r_i(n)`` of the annihilating field and identities among them.

``r_i`` is ``x(0)^(k+1+i) y(-1)^(k+1) / (k+1+i)!`` in the vacuum module; its
field coefficient ``r_i(n)`` has weight ``i`` and degree ``n``.  The lowest one,
``r_{-k-1}(n)``, is the sum of ``y(j1)...y(j_{k+1})`` over ``j1+...+j_{k+1} = n``;
the others come from it by the adjoint action of ``x(0)``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from . import kernels
from .liealg import (
    Engine,
    HighestWeight,
    ModuleVector,
    engine,
    leading_term,
    vacuum,
)
from .partitions import ColoredPartition, degree_sum

X0 = 2  # code of x(0)


@dataclass(frozen=True)
class RelationId:
    i: int
    n: int
    k: int

    def __post_init__(self):
        if abs(self.i) > self.k + 1:
            raise ValueError(f"|i| must be at most k+1 = {self.k + 1}")


def _check_index(k: int, i: int):
    if abs(i) > k + 1:
        raise ValueError(f"|i| must be at most k+1 = {k + 1}, got {i}")


def _x0_powers(st, vec: dict, count: int) -> list[dict]:
    out = [vec]
    for _ in range(count):
        vec = st.act_vec(X0, vec) if vec else {}
        out.append(vec)
    return out


def relation_family(eng: Engine, n: int, key: tuple) -> list[dict]:
    """``[r_i(n) u(key) v for i = -k-1 .. k+1]`` as integer term dicts (memoized)."""
    memo = eng.cache("relations")
    mk = (n, key)
    res = memo.get(mk)
    if res is not None:
        return res
    k = eng.hw.level
    top = 2 * k + 2
    d = degree_sum(key)
    if d + n > 0:
        res = [{} for _ in range(top + 1)]
        memo[mk] = res
        return res
    st = eng.st
    ups = _x0_powers(st, {key: 1}, top)
    # chains[t][p] = x(0)^p R(n) x(0)^t v
    chains = []
    for t in range(top + 1):
        base = kernels.base_relation(st, n, k + 1, ups[t]) if ups[t] else {}
        chains.append(_x0_powers(st, base, top - t))
    res = []
    for m in range(top + 1):
        acc: dict = {}
        for t in range(m + 1):
            term = chains[t][m - t]
            if term:
                kernels.add_into(acc, term, (-1) ** t * math.comb(m, t))
        f = math.factorial(m)
        out = {}
        for kk, c in acc.items():
            if c:
                q, r = divmod(c, f)
                if r:
                    raise ArithmeticError("relation coefficient is not integral")
                out[kk] = q
        res.append(out)
    memo[mk] = res
    return res


def r_apply_raw(eng: Engine, i: int, n: int, terms: dict) -> dict:
    k = eng.hw.level
    if abs(i) > k + 1:
        return {}
    idx = i + k + 1
    out: dict = {}
    for key, c in terms.items():
        kernels.add_into(out, relation_family(eng, n, key)[idx], c)
    return kernels.prune(out)


def r_apply(rid, v: ModuleVector) -> ModuleVector:
    """Apply ``r_i(n)`` to ``v``; ``rid`` is a :class:`RelationId` or a pair ``(i, n)``."""
    k = v.hw.level
    if isinstance(rid, RelationId):
        if rid.k != k:
            raise ValueError("relation level does not match the module level")
        i, n = rid.i, rid.n
    else:
        i, n = rid
    _check_index(k, i)
    return ModuleVector._raw(v.hw, r_apply_raw(engine(v.hw), i, n, v.raw_terms))


def r_vacuum_family(hw: HighestWeight, n: int) -> list[ModuleVector]:
    """``r_i(n) v`` on the highest-weight vector for every ``i``; ``x(0)`` kills it."""
    eng = engine(hw)
    memo = eng.cache("relations_vacuum")
    res = memo.get(n)
    if res is None:
        st = eng.st
        k = hw.level
        base = kernels.base_relation(st, n, k + 1, {(): 1}) if n <= 0 else {}
        res = []
        for m, vec in enumerate(_x0_powers(st, base, 2 * k + 2)):
            f = math.factorial(m)
            res.append({kk: _exact_div(c, f) for kk, c in vec.items()})
        memo[n] = res
    return [ModuleVector._raw(hw, dict(r)) for r in res]


def _exact_div(c, f):
    q, r = divmod(c, f)
    if r:
        raise ArithmeticError("relation coefficient is not integral")
    return q


# ---------------------------------------------------------------------------
# independent expansion by normal-ordered products

def _mode_tuples(total: int, count: int, lo: int, hi: int):
    if count == 0:
        if total == 0:
            yield ()
        return
    for j in range(max(lo, total - hi * (count - 1)), min(hi, total - lo * (count - 1)) + 1):
        for rest in _mode_tuples(total - j, count - 1, lo, hi):
            yield (j,) + rest


def r_apply_normal_ordered(i: int, n: int, v: ModuleVector) -> ModuleVector:
    """Oracle for ``r_i(n) v`` expanding the normally ordered field product.

    ``r_i`` equals the sum over ordered color tuples with ``#h + 2 #x = k+1+i``
    of ``(-1)^#x b1(-1)...b_{k+1}(-1) 1``; its field is the nested normal
    ordered product, whose ``(j1..js)`` coefficient puts creation modes left in
    tuple order and annihilation modes right in reverse tuple order.
    """
    hw = v.hw
    k = hw.level
    _check_index(k, i)
    m = i + k + 1
    s = k + 1
    st = engine(hw).st
    if not v:
        return v
    d = v.degree
    # annihilators sum to at most -d, so creators sum to at least n+d
    hi = -d
    lo = n + d
    out: dict = {}
    for colors in itertools.product((0, 1, 2), repeat=s):
        if sum(colors) != m:
            continue
        sign = -1 if colors.count(2) % 2 else 1
        for modes in _mode_tuples(n, s, lo, hi):
            create = [3 * j + c for j, c in zip(modes, colors) if j < 0]
            annih = [3 * j + c for j, c in zip(modes, colors) if j >= 0]
            word = create + annih[::-1]
            kernels.add_into(out, st.act_word(word, v.raw_terms), sign)
    return ModuleVector._raw(hw, kernels.prune(out))


# ---------------------------------------------------------------------------
# identities among relations

def _mode_range(n: int, d: int) -> range:
    return range(n + d, -d + 1)


def _split_product(eng: Engine, part_color: int, j: int, i: int, n: int, terms: dict) -> dict:
    """``b(j) r_i(n-j) v`` for ``j < 0`` and ``r_i(n-j) b(j) v`` for ``j >= 0``."""
    st = eng.st
    code = 3 * j + part_color
    if j < 0:
        return st.act_vec(code, r_apply_raw(eng, i, n - j, terms))
    return r_apply_raw(eng, i, n - j, st.act_vec(code, terms))


def top_defect(n: int, v: ModuleVector) -> ModuleVector:
    """``sum_j ((k+2) j - n) x(j) r_{k+1}(n-j) v``.

    ``x(j)`` commutes with ``r_{k+1}``, so for ``j >= 0`` the factor is moved to
    the right, where it kills ``v`` once ``j > -deg v``.
    """
    eng = engine(v.hw)
    k = v.hw.level
    out: dict = {}
    if v:
        for j in _mode_range(n, v.degree):
            kernels.add_into(out, _split_product(eng, 2, j, k + 1, n, v.raw_terms), (k + 2) * j - n)
    return ModuleVector._raw(v.hw, kernels.prune(out))


def check_top(n: int, v: ModuleVector) -> bool:
    return top_defect(n, v).is_zero()


def ladder_defect(i: int, n: int, v: ModuleVector) -> ModuleVector:
    k = v.hw.level
    if abs(i) > k + 2:
        raise ValueError(f"|i| must be at most k+2 = {k + 2}")
    eng = engine(v.hw)
    out: dict = {}
    if v:
        for j in _mode_range(n, v.degree):
            c = (k + 2) * j - n
            if not c:
                continue
            for color, idx, sign in ((2, i - 1, 1), (1, i, -1), (0, i + 1, -1)):
                if abs(idx) <= k + 1:
                    kernels.add_into(out, _split_product(eng, color, j, idx, n, v.raw_terms), sign * c)
    return ModuleVector._raw(v.hw, kernels.prune(out))


def check_ladder(i: int, n: int, v: ModuleVector) -> bool:
    return ladder_defect(i, n, v).is_zero()


def weighted_defect(i: int, n: int, v: ModuleVector) -> ModuleVector:
    k = v.hw.level
    _check_index(k, i)
    eng = engine(v.hw)
    out: dict = {}
    if v:
        for j in _mode_range(n, v.degree):
            for color, idx, c in ((2, i - 1, k + 2 - i), (1, i, i), (0, i + 1, k + 2 + i)):
                if c and abs(idx) <= k + 1:
                    kernels.add_into(out, _split_product(eng, color, j, idx, n, v.raw_terms), c)
        kernels.add_into(out, r_apply_raw(eng, i, n, v.raw_terms), -(k + 2) * (-n - k - 1))
    return ModuleVector._raw(v.hw, kernels.prune(out))


def check_weighted(i: int, n: int, v: ModuleVector) -> bool:
    return weighted_defect(i, n, v).is_zero()


def relation_defects(n: int, v: ModuleVector) -> dict:
    """All three identities at once, sharing the products ``b(j) r_i(n-j) v``.

    Keys are ``("top", None)``, ``("ladder", i)`` and ``("weighted", i)``; values are
    the defect vectors, which vanish when the identity holds.
    """
    hw = v.hw
    k = hw.level
    eng = engine(hw)
    prods: dict = {}

    def prod(color, j, idx):
        key = (color, j, idx)
        res = prods.get(key)
        if res is None:
            res = prods[key] = _split_product(eng, color, j, idx, n, v.raw_terms)
        return res

    js = list(_mode_range(n, v.degree)) if v else []
    out = {}
    acc: dict = {}
    for j in js:
        kernels.add_into(acc, prod(2, j, k + 1), (k + 2) * j - n)
    out[("top", None)] = ModuleVector._raw(hw, kernels.prune(acc))
    for i in range(-k - 2, k + 3):
        acc = {}
        for j in js:
            c = (k + 2) * j - n
            if not c:
                continue
            for color, idx, sign in ((2, i - 1, 1), (1, i, -1), (0, i + 1, -1)):
                if abs(idx) <= k + 1:
                    kernels.add_into(acc, prod(color, j, idx), sign * c)
        out[("ladder", i)] = ModuleVector._raw(hw, kernels.prune(acc))
    for i in range(-k - 1, k + 2):
        acc = {}
        for j in js:
            for color, idx, c in ((2, i - 1, k + 2 - i), (1, i, i), (0, i + 1, k + 2 + i)):
                if c and abs(idx) <= k + 1:
                    kernels.add_into(acc, prod(color, j, idx), c)
        if v:
            kernels.add_into(acc, r_apply_raw(eng, i, n, v.raw_terms), -(k + 2) * (-n - k - 1))
        out[("weighted", i)] = ModuleVector._raw(hw, kernels.prune(acc))
    return out


# ---------------------------------------------------------------------------
# leading terms

def leading_terms_sweep(k: int, hw: HighestWeight | None, n_range: Iterable[int]) -> dict:
    """``(i, n) -> lt(r_i(n) v)`` on the vacuum; ``None`` where the vector vanishes."""
    if hw is None:
        hw = HighestWeight.generalized(k)
    if hw.level != k:
        raise ValueError("module level differs from k")
    out = {}
    for n in n_range:
        for i, vec in zip(range(-k - 1, k + 2), r_vacuum_family(hw, n)):
            out[(i, n)] = leading_term(vec) if vec else None
    return out


def zero_mode_relation_scalar(hw: HighestWeight) -> Fraction:
    """Scalar by which ``x(0)^(k+1) r_{-k-1}(0)`` acts on the highest-weight vector."""
    k = hw.level
    eng = engine(hw)
    base = kernels.base_relation(eng.st, 0, k + 1, {(): 1})
    vec = eng.st.act_word([X0] * (k + 1), base)
    return Fraction(vec.get((), 0))


def generator_check(k: int) -> Fraction:
    """Ratio ``c`` in ``r_{k+1}(-k-1) 1 = c x(-1)^(k+1) 1`` on the generalized Verma module."""
    hw = HighestWeight.generalized(k)
    vec = r_vacuum_family(hw, -k - 1)[-1]
    key = (-1,) * (k + 1)
    terms = vec.raw_terms
    if set(terms) != {key}:
        raise AssertionError(f"unexpected expansion {vec}")
    return Fraction(terms[key])

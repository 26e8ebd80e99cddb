"""Graded pieces of the maximal submodule and dimensions of standard modules.

The maximal submodule of the Verma module is generated by the vectors
``r_i(n) v`` on the highest-weight vector, so its piece of degree ``d`` and
weight ``w`` is spanned by ``r_w(d) v`` together with ``b`` applied to lower
pieces, for every PBW generator ``b``.  Ranks come from sparse fraction-free
elimination keyed on leading terms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping

from . import kernels
from .liealg import HighestWeight, ModuleVector, engine, grade_keys
from .partitions import (
    MINUS,
    ColoredPartition,
    contains,
    divide,
    enumerate_partitions,
    lt_R_vLambda_map,
    sort_key,
)
from .relations import r_vacuum_family


def _verma(hw: HighestWeight):
    if not hw.is_verma:
        raise ValueError("grade spaces are computed on the Verma module")


@dataclass(frozen=True)
class GradeSpace:
    """Piece ``(d, w)`` of the Verma module with the submodule spanned inside it.

    ``basis`` is ordered smallest first; ``rows`` are echelon rows of the
    submodule over that basis, each with its leading column first.
    """

    hw: HighestWeight
    degree: int
    weight: int
    basis: tuple[tuple[int, ...], ...]
    rows: tuple[dict, ...] = field(repr=False)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def quotient_dim(self) -> int:
        return self.dim - self.rank

    def leading_terms(self) -> frozenset[ColoredPartition]:
        return frozenset(ColoredPartition(self.basis[min(r)]) for r in self.rows)

    def row_vectors(self) -> list[dict]:
        return [{self.basis[c]: v for c, v in r.items()} for r in self.rows]

    def matrix(self) -> list[list[int]]:
        return [[r.get(c, 0) for c in range(self.dim)] for r in self.rows]


def weight_window(hw: HighestWeight, d: int) -> tuple[int, int]:
    """Weights ``w`` at degree ``d`` allowed by the norm bound on an integrable module.

    A weight ``Lambda + w alpha + d delta`` of the standard module satisfies
    ``w^2 + k1 w + d k <= 0``.
    """
    k, k1, depth = hw.level, hw.k1, -d
    disc = k1 * k1 + 4 * depth * k
    r = math.isqrt(disc)
    lo = (-k1 - r) // 2 - 1
    hi = (-k1 + r) // 2 + 1
    while lo * lo + k1 * lo - depth * k > 0:
        lo += 1
    hi = max(hi, lo)
    while hi * hi + k1 * hi - depth * k > 0:
        hi -= 1
    return lo, hi


def _grade_index(hw: HighestWeight, d: int, w: int):
    eng = engine(hw)
    memo = eng.cache("grade_index")
    res = memo.get((d, w))
    if res is None:
        keys = tuple(grade_keys(hw, d, w))
        res = (keys, {kk: i for i, kk in enumerate(keys)})
        memo[(d, w)] = res
    return res


def _to_row(vec: dict, index: dict) -> dict:
    return {index[kk]: c for kk, c in vec.items() if c}


def m1_grade(hw: HighestWeight, d: int, w: int) -> GradeSpace:
    """Submodule piece at ``(d, w)``, built recursively from lower pieces."""
    _verma(hw)
    if d > 0:
        raise ValueError("degree must be nonpositive")
    eng = engine(hw)
    memo = eng.cache("m1")
    res = memo.get((d, w))
    if res is not None:
        return res
    keys, index = _grade_index(hw, d, w)
    elim = kernels.Eliminator()
    if keys:
        k = hw.level
        if abs(w) <= k + 1:
            vec = r_vacuum_family(hw, d)[w + k + 1].raw_terms
            if vec:
                elim.add(_to_row(vec, index))
        st = eng.st
        for e in range(d, 1):
            for color, wt in ((0, -1), (1, 0), (2, 1)):
                code = 3 * e + color
                if code > hw.top_code:
                    continue
                lower = m1_grade(hw, d - e, w - wt)
                for row in lower.row_vectors():
                    if len(elim.pivots) == len(keys):
                        break
                    elim.add(_to_row(st.act_vec(code, row), index))
    rows = tuple(elim.pivots[c] for c in sorted(elim.pivots))
    res = GradeSpace(hw, d, w, keys, rows)
    memo[(d, w)] = res
    return res


def l_dimension(hw: HighestWeight, d: int, w: int) -> int:
    return m1_grade(hw, d, w).quotient_dim


def conditioned_count(hw: HighestWeight, d: int, w: int) -> int:
    """Number of monomials at ``(d, w)`` obeying the difference and initial conditions."""
    return sum(1 for _ in enumerate_partitions(MINUS, d, weight=w, conditions=(hw.k0, hw.k1)))


# ---------------------------------------------------------------------------
# explicit basis of the submodule

def ideal_members(hw: HighestWeight, d: int, w: int) -> dict[tuple, list[tuple]]:
    """Monomials at ``(d, w)`` in the leading-term ideal, with every embedded generator."""
    gens = _generator_map(hw, d)
    keys, _ = _grade_index(hw, d, w)
    out = {}
    for kk in keys:
        emb = [g for g in gens if contains(kk, g)]
        if emb:
            out[kk] = emb
    return out


def _generator_map(hw: HighestWeight, d: int) -> dict:
    eng = engine(hw)
    memo = eng.cache("generators")
    res = memo.get(d)
    if res is None:
        res = memo[d] = lt_R_vLambda_map(hw.k0, hw.k1, d)
    return res


CMP_MIN = "min"
CMP_MAX = "max"


@dataclass
class BasisReport:
    members: int
    rank_generated: int
    rank_submodule: int
    rank_joint: int
    leading_terms_ok: bool
    ideal_equals_leading_terms: bool

    @property
    def ok(self) -> bool:
        return (self.leading_terms_ok and self.ideal_equals_leading_terms
                and self.members == self.rank_generated == self.rank_submodule == self.rank_joint)


def _pick(choice, pi, candidates):
    if choice == CMP_MIN:
        return min(candidates, key=sort_key)
    if choice == CMP_MAX:
        return max(candidates, key=sort_key)
    if callable(choice):
        rho = choice(ColoredPartition(pi))
    else:
        rho = choice[ColoredPartition(pi)]
    rho = rho.codes if isinstance(rho, ColoredPartition) else tuple(rho)
    if rho not in candidates:
        raise ValueError(f"{ColoredPartition(rho)} is not an embedded generator of {ColoredPartition(pi)}")
    return rho


def basis_report(hw: HighestWeight, d: int, w: int, rho_choice=CMP_MIN) -> BasisReport:
    _verma(hw)
    gens = _generator_map(hw, d)
    members = ideal_members(hw, d, w)
    keys, index = _grade_index(hw, d, w)
    st = engine(hw).st
    k = hw.level
    gen_elim = kernels.Eliminator()
    lt_ok = True
    rows = []
    for pi, cands in members.items():
        rho = _pick(rho_choice, pi, cands)
        m, n = gens[rho]
        vec = r_vacuum_family(hw, n)[m + k + 1].raw_terms
        vec = st.act_word(list(divide(pi, rho)), vec)
        row = _to_row(vec, index)
        if not row or min(row) != index[pi]:
            lt_ok = False
        rows.append(row)
        gen_elim.add(row)
    space = m1_grade(hw, d, w)
    joint = kernels.Eliminator()
    for r in space.rows:
        joint.add(r)
    for r in rows:
        joint.add(r)
    lts = {ColoredPartition(p) for p in members}
    return BasisReport(
        members=len(members),
        rank_generated=gen_elim.rank,
        rank_submodule=space.rank,
        rank_joint=joint.rank,
        leading_terms_ok=lt_ok,
        ideal_equals_leading_terms=space.leading_terms() == lts,
    )


def basis_check(hw: HighestWeight, d: int, w: int, rho_choice=CMP_MIN) -> bool:
    """Whether ``u(pi/rho) r(rho) v`` over ideal members ``pi`` is a basis of the submodule piece."""
    return basis_report(hw, d, w, rho_choice).ok


# ---------------------------------------------------------------------------
# tables

@dataclass(frozen=True)
class DimensionRow:
    k0: int
    k1: int
    d: int
    w: int
    dim_M: int
    rank_M1: int
    dim_L: int
    count_conditions: int

    @property
    def match(self) -> bool:
        return self.dim_L == self.count_conditions

    def as_dict(self) -> dict:
        return {
            "k0": self.k0, "k1": self.k1, "d": self.d, "w": self.w,
            "dim_M": self.dim_M, "rank_M1": self.rank_M1, "dim_L": self.dim_L,
            "count_conditions": self.count_conditions, "match": self.match,
        }


CSV_COLUMNS = ("k0", "k1", "d", "w", "dim_M", "rank_M1", "dim_L", "count_conditions", "match")


def dimension_rows(hw: HighestWeight, max_depth: int, margin: int = 1) -> list[DimensionRow]:
    """Rows for ``0 >= d >= -max_depth`` over the weight window widened by ``margin``."""
    out = []
    for d in range(0, -max_depth - 1, -1):
        lo, hi = weight_window(hw, d)
        for w in range(hi + margin, lo - margin - 1, -1):
            g = m1_grade(hw, d, w)
            out.append(DimensionRow(hw.k0, hw.k1, d, w, g.dim, g.rank, g.quotient_dim,
                                    conditioned_count(hw, d, w)))
    return out


def character_table(hw: HighestWeight, max_depth: int) -> dict[tuple[int, int], int]:
    """Nonzero dimensions of the standard module for ``0 >= d >= -max_depth``."""
    table = {}
    for row in dimension_rows(hw, max_depth, margin=0):
        if row.dim_L:
            table[(row.d, row.w)] = row.dim_L
    return table


def specialized_exponent(d: int, w: int, s0: int, s1: int) -> int:
    return -d * (s0 + s1) - w * s1


def exact_order(hw: HighestWeight, max_depth: int, s0: int, s1: int) -> int:
    """Largest ``N`` such that every weight with exponent ``<= N`` has depth ``<= max_depth``."""
    best = None
    depth = max_depth + 1
    while True:
        _, hi = weight_window(hw, -depth)
        e = specialized_exponent(-depth, hi, s0, s1)
        best = e if best is None else min(best, e)
        # exponents grow at least linearly in depth beyond this point
        if depth * min(s0, s1) > best + 1 and depth > max_depth + 2:
            break
        depth += 1
    return best - 1


def aggregate(table: Mapping[tuple[int, int], int], s0: int, s1: int, order: int) -> list[int]:
    coeffs = [0] * (order + 1)
    for (d, w), dim in table.items():
        e = specialized_exponent(d, w, s0, s1)
        if 0 <= e <= order:
            coeffs[e] += dim
    return coeffs

"""Exact action of affine sl2 on Verma and generalized Verma modules."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from . import kernels
from .partitions import (
    MINUS,
    STRICT,
    ColoredPartition,
    Part,
    enumerate_partitions,
    format_partition,
    parse_partition,
    sort_key,
    weight_of,
)

VERMA = "verma"
GENERALIZED = "generalized"

X, H, Y = 2, 1, 0


@dataclass(frozen=True)
class HighestWeight:
    """Dominant weight ``k0*Lambda_0 + k1*Lambda_1`` and the module built on it.

    ``kind="verma"`` gives the Verma module, whose PBW alphabet includes
    ``y(0)``.  ``kind="generalized"`` induces from the trivial module of the
    degree-zero subalgebra and needs ``k1 = 0``.
    """

    k0: int
    k1: int
    kind: str = VERMA

    def __post_init__(self):
        if self.k0 < 0 or self.k1 < 0:
            raise ValueError("k0 and k1 must be nonnegative")
        if self.kind not in (VERMA, GENERALIZED):
            raise ValueError(f"unknown module kind {self.kind!r}")
        if self.kind == GENERALIZED and self.k1 != 0:
            raise ValueError("the generalized Verma module needs k1 = 0")

    @classmethod
    def generalized(cls, k: int) -> "HighestWeight":
        return cls(k, 0, GENERALIZED)

    @property
    def level(self) -> int:
        return self.k0 + self.k1

    @property
    def is_verma(self) -> bool:
        return self.kind == VERMA

    @property
    def top_code(self) -> int:
        return 0 if self.is_verma else -1

    @property
    def part_set(self) -> str:
        return MINUS if self.is_verma else STRICT

    def in_alphabet(self, code: int) -> bool:
        return code <= self.top_code

    def conformal_weight(self) -> Fraction:
        """Eigenvalue of ``L_0`` on the highest-weight vector."""
        return Fraction(self.k1 * (self.k1 + 2), 4 * (self.level + 2))

    def __str__(self) -> str:
        tag = "M" if self.is_verma else "N"
        return f"{tag}({self.k0},{self.k1})"


class Engine:
    """Per-module caches: straightening memo plus named auxiliary caches."""

    def __init__(self, hw: HighestWeight):
        self.hw = hw
        self.st = kernels.Straightener(hw.level, hw.k1, hw.top_code)
        self.caches: dict[str, dict] = {}

    def cache(self, name: str) -> dict:
        c = self.caches.get(name)
        if c is None:
            c = self.caches[name] = {}
        return c

    def clear(self):
        self.st.memo.clear()
        self.caches.clear()


_ENGINES: dict[HighestWeight, Engine] = {}


def engine(hw: HighestWeight) -> Engine:
    e = _ENGINES.get(hw)
    if e is None:
        e = _ENGINES[hw] = Engine(hw)
    return e


def clear_caches():
    _ENGINES.clear()


# ---------------------------------------------------------------------------
# vectors

def _coerce(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class ModuleVector:
    """Finite rational combination of PBW monomials applied to the vacuum.

    Internally keys are nondecreasing code tuples; ``terms`` exposes them as
    :class:`ColoredPartition`.  All keys share one degree and one weight.
    """

    __slots__ = ("hw", "_terms")

    def __init__(self, hw: HighestWeight, terms: Mapping | None = None, *, check: bool = True):
        self.hw = hw
        raw = {}
        for key, c in (terms or {}).items():
            if isinstance(key, ColoredPartition):
                key = key.codes
            elif isinstance(key, str):
                key = parse_partition(key).codes
            else:
                key = tuple(key)
            if c:
                raw[key] = raw.get(key, 0) + c
        self._terms = {k: _coerce(c) for k, c in raw.items() if c}
        if check:
            self._validate()

    @classmethod
    def _raw(cls, hw, terms):
        v = cls.__new__(cls)
        v.hw = hw
        v._terms = terms
        return v

    def _validate(self):
        grades = set()
        for key in self._terms:
            if any(a > b for a, b in zip(key, key[1:])):
                raise ValueError(f"key {key} is not sorted")
            if key and key[-1] > self.hw.top_code:
                raise ValueError(f"{format_partition(key)} is outside the PBW alphabet of {self.hw}")
            grades.add((sum(c // 3 for c in key), weight_of(key)))
        if len(grades) > 1:
            raise ValueError(f"vector is not homogeneous: grades {sorted(grades)}")

    @property
    def terms(self) -> dict[ColoredPartition, Fraction | int]:
        return {ColoredPartition(k): c for k, c in self._terms.items()}

    @property
    def raw_terms(self) -> dict[tuple, Fraction | int]:
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    @property
    def grade(self) -> tuple[int, int] | None:
        if not self._terms:
            return None
        key = next(iter(self._terms))
        return sum(c // 3 for c in key), weight_of(key)

    @property
    def degree(self) -> int | None:
        g = self.grade
        return None if g is None else g[0]

    @property
    def weight(self) -> int | None:
        g = self.grade
        return None if g is None else g[1]

    def coefficient(self, pi) -> Fraction | int:
        key = pi.codes if isinstance(pi, ColoredPartition) else tuple(pi)
        return self._terms.get(key, 0)

    def leading_term(self) -> ColoredPartition:
        return leading_term(self)

    # arithmetic ----------------------------------------------------------
    def _same(self, other):
        if not isinstance(other, ModuleVector) or other.hw != self.hw:
            raise TypeError("vectors live in different modules")

    def __add__(self, other):
        self._same(other)
        out = dict(self._terms)
        kernels.add_into(out, other._terms, 1)
        return ModuleVector(self.hw, kernels.prune(out))

    def __sub__(self, other):
        self._same(other)
        out = dict(self._terms)
        kernels.add_into(out, other._terms, -1)
        return ModuleVector(self.hw, kernels.prune(out))

    def __neg__(self):
        return ModuleVector._raw(self.hw, {k: -c for k, c in self._terms.items()})

    def __mul__(self, scalar):
        if scalar == 0:
            return ModuleVector._raw(self.hw, {})
        return ModuleVector._raw(self.hw, {k: _coerce(c * scalar) for k, c in self._terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return self * (1 / Fraction(scalar))

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self._terms
        if not isinstance(other, ModuleVector):
            return NotImplemented
        return self.hw == other.hw and self._terms == other._terms

    def __hash__(self):
        return hash((self.hw, frozenset(self._terms.items())))

    # text ----------------------------------------------------------------
    def __str__(self) -> str:
        if not self._terms:
            return "0"
        keys = sorted(self._terms, key=sort_key)
        return " + ".join(f"{self._terms[k]} * {format_partition(k)}" for k in keys)

    def __repr__(self) -> str:
        return f"ModuleVector({self.hw}, {self})"

    def to_json(self) -> dict:
        keys = sorted(self._terms, key=sort_key)
        return {
            "module": {"k0": self.hw.k0, "k1": self.hw.k1, "kind": self.hw.kind},
            "terms": [[str(self._terms[k]), ColoredPartition(k).to_json()] for k in keys],
        }

    @classmethod
    def from_json(cls, data) -> "ModuleVector":
        if isinstance(data, str):
            data = json.loads(data)
        m = data["module"]
        hw = HighestWeight(m["k0"], m["k1"], m["kind"])
        terms = {ColoredPartition.from_json(p).codes: Fraction(c) for c, p in data["terms"]}
        return cls(hw, terms)

    @classmethod
    def parse(cls, hw: HighestWeight, text: str) -> "ModuleVector":
        """Parse ``c1 * <partition> + c2 * <partition>``; ``-`` separators allowed."""
        s = text.replace("-", "+-").replace("(+-", "(-")
        terms: dict = {}
        for chunk in s.split("+"):
            chunk = chunk.strip()
            if not chunk:
                continue
            if "*" in chunk:
                c, p = chunk.split("*", 1)
                c = c.strip()
                coef = Fraction(-1 if c == "-" else c)
            else:
                coef, p = Fraction(1), chunk
                if p.startswith("-"):
                    coef, p = Fraction(-1), p[1:]
            key = parse_partition(p).codes
            terms[key] = terms.get(key, 0) + coef
        return cls(hw, terms)


def vacuum(hw: HighestWeight) -> ModuleVector:
    return ModuleVector._raw(hw, {(): 1})


def basis_vector(hw: HighestWeight, pi) -> ModuleVector:
    if isinstance(pi, str):
        pi = parse_partition(pi)
    codes = pi.codes if isinstance(pi, ColoredPartition) else tuple(sorted(pi))
    return ModuleVector(hw, {codes: 1})


# ---------------------------------------------------------------------------
# actions

def _code(b) -> int:
    if isinstance(b, Part):
        return b.code
    if isinstance(b, tuple):
        return 3 * b[1] + "yhx".index(b[0])
    return int(b)


@dataclass(frozen=True)
class LieWord:
    """Product ``b1(n1) ... bs(ns)`` in the enveloping algebra, times a scalar."""

    parts: tuple[Part, ...]
    scalar: Fraction | int = 1

    @classmethod
    def of(cls, *parts, scalar=1) -> "LieWord":
        return cls(tuple(p if isinstance(p, Part) else Part.from_code(_code(p)) for p in parts), scalar)


def act_part(b, v: ModuleVector) -> ModuleVector:
    st = engine(v.hw).st
    return ModuleVector._raw(v.hw, st.act_vec(_code(b), v._terms))


def act_word(u, v: ModuleVector) -> ModuleVector:
    """Apply ``u`` factor by factor, rightmost first."""
    if isinstance(u, LieWord):
        word, scalar = [p.code for p in u.parts], u.scalar
    elif isinstance(u, ColoredPartition):
        word, scalar = list(u.codes), 1
    else:
        word, scalar = [_code(p) for p in u], 1
    st = engine(v.hw).st
    out = ModuleVector._raw(v.hw, st.act_word(word, v._terms))
    return out if scalar == 1 else out * scalar


def grade_basis(hw: HighestWeight, d: int, w: int) -> list[ColoredPartition]:
    """PBW monomials of degree ``d`` and weight ``w``, largest first."""
    out = list(enumerate_partitions(hw.part_set, d, weight=w))
    out.sort(key=lambda p: p.key, reverse=True)
    return out


def grade_keys(hw: HighestWeight, d: int, w: int) -> list[tuple[int, ...]]:
    """Same monomials as raw code tuples, smallest first."""
    out = [p.codes for p in enumerate_partitions(hw.part_set, d, weight=w)]
    out.sort(key=sort_key)
    return out


def leading_term(v: ModuleVector) -> ColoredPartition:
    if not v._terms:
        raise ValueError("the zero vector has no leading term")
    return ColoredPartition(min(v._terms, key=sort_key))


# ---------------------------------------------------------------------------
# Sugawara operators

# (left color, right color, weight) in 4(k+2) L_m = sum_j :2 x y + 2 y x + h h:
_SUGAWARA_PAIRS = ((X, Y, 2), (Y, X, 2), (H, H, 1))


def _sugawara_key(eng: Engine, m: int, key: tuple) -> dict:
    memo = eng.cache("sugawara")
    mk = (m, key)
    res = memo.get(mk)
    if res is not None:
        return res
    st = eng.st
    d = sum(c // 3 for c in key)
    res = {}
    base = {key: 1}
    for j in range(min(m + d, 0), -d + 1):
        for ca, cb, wt in _SUGAWARA_PAIRS:
            a, b = 3 * j + ca, 3 * (m - j) + cb
            if j < 0:
                vec = st.act_vec(a, st.act_key(b, key)) if m - j <= -d else {}
            else:
                vec = st.act_vec(b, st.act_key(a, key))
            kernels.add_into(res, vec, wt)
    res = kernels.prune(res)
    memo[mk] = res
    return res


def sugawara_scaled(m: int, v: ModuleVector) -> dict:
    """``4(k+2) L_m v`` as a raw term dict."""
    eng = engine(v.hw)
    out: dict = {}
    for key, c in v._terms.items():
        kernels.add_into(out, _sugawara_key(eng, m, key), c)
    return kernels.prune(out)


def sugawara_L(m: int, v: ModuleVector) -> ModuleVector:
    scale = Fraction(1, 4 * (v.hw.level + 2))
    return ModuleVector._raw(v.hw, {k: _coerce(c * scale) for k, c in sugawara_scaled(m, v).items()})


def central_charge(k: int) -> Fraction:
    return Fraction(3 * k, k + 2)


def virasoro_defect(m: int, n: int, v: ModuleVector) -> ModuleVector:
    """``[L_m, L_n] v - (m-n) L_{m+n} v - (m^3-m)/12 delta_{m+n,0} c v``."""
    Lm, Ln = (lambda u: sugawara_L(m, u)), (lambda u: sugawara_L(n, u))
    out = Lm(Ln(v)) - Ln(Lm(v)) - (m - n) * sugawara_L(m + n, v)
    if m + n == 0:
        out = out - v * (Fraction(m ** 3 - m, 12) * central_charge(v.hw.level))
    return out


def virasoro_check(m: int, n: int, v: ModuleVector) -> bool:
    return virasoro_defect(m, n, v).is_zero()


def derivation_L_minus_one(v: ModuleVector) -> ModuleVector:
    """``L_{-1}`` through its commutator with modes, on the generalized Verma module.

    Uses ``[L_{-1}, b(n)] = -n b(n-1)`` and ``L_{-1}`` killing the vacuum; both
    hold only when the vacuum is fixed by the degree-zero subalgebra.
    """
    if v.hw.is_verma:
        raise ValueError("the derivation formula applies to the generalized Verma module only")
    st = engine(v.hw).st
    out: dict = {}
    for key, c in v._terms.items():
        for i, b in enumerate(key):
            n = b // 3
            if n == 0:
                continue
            word = key[:i] + (b - 3,) + key[i + 1:]
            kernels.add_into(out, st.act_word(word, {(): 1}), -n * c)
    return ModuleVector._raw(v.hw, kernels.prune(out))


def zero_mode_constant(k: int, lam_h: int) -> Fraction:
    """Scalar ``s`` with ``x(0)^(k+1) y(0)^(k+1) v = s v`` when ``h(0) v = lam_h v``."""
    hw = HighestWeight(0, lam_h)
    v = vacuum(hw)
    y = act_word([0] * (k + 1), v)
    out = act_word([2] * (k + 1), y)
    return Fraction(out.coefficient(()))

"""Colored partitions over the basis {x, h, y} x Z of the loop algebra of sl2.

A part ``b(j)`` is encoded as the integer ``3*j + c`` with ``c = 0, 1, 2`` for
``y, h, x``.  With this encoding the part order ``y(j) < h(j) < x(j) < y(j+1)``
is plain integer order, and a colored partition is a sorted tuple of codes.
"""

from __future__ import annotations

import json
import math
import re
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Iterator, Sequence

COLORS = "yhx"
Y, H, X = 0, 1, 2
WEIGHT = (-1, 0, 1)

Less, Equal, Greater = -1, 0, 1


def code_of(color: str, degree: int) -> int:
    return 3 * degree + COLORS.index(color)


def degree_of(code: int) -> int:
    return code // 3


def color_of(code: int) -> int:
    return code % 3


def format_code(code: int) -> str:
    return f"{COLORS[code % 3]}({code // 3})"


@dataclass(frozen=True, order=True)
class Part:
    """A single element ``color(degree)``; ordered by degree, then y < h < x."""

    degree: int
    color_index: int

    @classmethod
    def of(cls, color: str, degree: int) -> "Part":
        return cls(degree, COLORS.index(color))

    @classmethod
    def from_code(cls, code: int) -> "Part":
        return cls(code // 3, code % 3)

    @property
    def color(self) -> str:
        return COLORS[self.color_index]

    @property
    def code(self) -> int:
        return 3 * self.degree + self.color_index

    @property
    def weight(self) -> int:
        return WEIGHT[self.color_index]

    def __str__(self) -> str:
        return f"{self.color}({self.degree})"


def sort_key(codes: Sequence[int]) -> tuple:
    """Key realizing the total order on colored partitions (ascending).

    Longer partitions are smaller; then smaller degree; then the part degrees
    are compared from the largest part downward; then the parts themselves.
    """
    if isinstance(codes, ColoredPartition):
        codes = codes.codes
    degs = tuple(c // 3 for c in reversed(codes))
    return (-len(codes), sum(degs), degs, tuple(reversed(codes)))


@dataclass(frozen=True)
class ColoredPartition:
    """Finite multiset of parts, stored as a nondecreasing tuple of part codes."""

    codes: tuple[int, ...] = ()

    def __post_init__(self):
        codes = tuple(self.codes)
        if any(a > b for a, b in zip(codes, codes[1:])):
            codes = tuple(sorted(codes))
        object.__setattr__(self, "codes", codes)

    # construction ------------------------------------------------------
    @classmethod
    def from_parts(cls, parts: Iterable[Part | tuple[str, int]]) -> "ColoredPartition":
        out = []
        for p in parts:
            out.append(p.code if isinstance(p, Part) else code_of(p[0], p[1]))
        return cls(tuple(sorted(out)))

    @classmethod
    def from_counts(cls, counts: dict) -> "ColoredPartition":
        out = []
        for p, m in counts.items():
            c = p.code if isinstance(p, Part) else (p if isinstance(p, int) else code_of(*p))
            if m < 0:
                raise ValueError("negative multiplicity")
            out.extend([c] * m)
        return cls(tuple(sorted(out)))

    @classmethod
    def parse(cls, text: str) -> "ColoredPartition":
        return parse_partition(text)

    # derived quantities ------------------------------------------------
    @cached_property
    def counts(self) -> dict[Part, int]:
        return {Part.from_code(c): m for c, m in sorted(Counter(self.codes).items())}

    def multiplicity(self, color: str, degree: int) -> int:
        return self.codes.count(code_of(color, degree))

    @property
    def length(self) -> int:
        return len(self.codes)

    @property
    def degree(self) -> int:
        return sum(c // 3 for c in self.codes)

    @property
    def weight(self) -> int:
        return sum(WEIGHT[c % 3] for c in self.codes)

    @property
    def shape(self) -> tuple[int, ...]:
        """Plain partition of part degrees, nondecreasing."""
        return tuple(c // 3 for c in self.codes)

    @property
    def parts(self) -> tuple[Part, ...]:
        return tuple(Part.from_code(c) for c in self.codes)

    @property
    def key(self) -> tuple:
        return sort_key(self.codes)

    # monoid operations ---------------------------------------------------
    def __mul__(self, other: "ColoredPartition") -> "ColoredPartition":
        return ColoredPartition(tuple(sorted(self.codes + other.codes)))

    def __truediv__(self, other: "ColoredPartition") -> "ColoredPartition":
        return ColoredPartition(divide(self.codes, other.codes))

    def __or__(self, other: "ColoredPartition") -> "ColoredPartition":
        return ColoredPartition(union(self.codes, other.codes))

    def __and__(self, other: "ColoredPartition") -> "ColoredPartition":
        return ColoredPartition(intersect(self.codes, other.codes))

    def __contains__(self, other: "ColoredPartition") -> bool:
        return contains(self.codes, other.codes)

    def contains(self, other: "ColoredPartition") -> bool:
        return contains(self.codes, other.codes)

    def dual(self) -> "ColoredPartition":
        return ColoredPartition(dual_codes(self.codes))

    def translate(self, n: int) -> "ColoredPartition":
        return ColoredPartition(tuple(c - 3 * n for c in self.codes))

    # ordering ------------------------------------------------------------
    def __lt__(self, other: "ColoredPartition") -> bool:
        return self.key < other.key

    def __le__(self, other: "ColoredPartition") -> bool:
        return self.key <= other.key

    def __gt__(self, other: "ColoredPartition") -> bool:
        return self.key > other.key

    def __ge__(self, other: "ColoredPartition") -> bool:
        return self.key >= other.key

    def __len__(self) -> int:
        return len(self.codes)

    def __bool__(self) -> bool:
        return bool(self.codes)

    def __str__(self) -> str:
        return format_partition(self.codes)

    def __repr__(self) -> str:
        return f"ColoredPartition({format_partition(self.codes)!r})"

    def to_json(self) -> list:
        return [[p.color, p.degree, m] for p, m in self.counts.items()]

    @classmethod
    def from_json(cls, data) -> "ColoredPartition":
        if isinstance(data, str):
            data = json.loads(data)
        return cls.from_counts({code_of(c, d): m for c, d, m in data})


ONE = ColoredPartition(())


# ---------------------------------------------------------------------------
# tuple-level helpers (used by the hot paths, which never build objects)

def cmp(p, q) -> int:
    """Three-way comparison: -1 if ``p`` precedes ``q`` in the partition order."""
    kp = sort_key(_codes(p))
    kq = sort_key(_codes(q))
    return (kp > kq) - (kp < kq)


def _codes(p) -> tuple[int, ...]:
    return p.codes if isinstance(p, ColoredPartition) else tuple(p)


def contains(big: Sequence[int], small: Sequence[int]) -> bool:
    cb = Counter(big)
    return all(cb[c] >= m for c, m in Counter(small).items())


def divide(big: Sequence[int], small: Sequence[int]) -> tuple[int, ...]:
    cb = Counter(big)
    cb.subtract(Counter(small))
    if any(m < 0 for m in cb.values()):
        raise ValueError("divisor is not contained in the partition")
    return tuple(sorted(cb.elements()))


def union(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    return tuple(sorted((Counter(p) | Counter(q)).elements()))


def intersect(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    return tuple(sorted((Counter(p) & Counter(q)).elements()))


def dual_codes(codes: Sequence[int]) -> tuple[int, ...]:
    # x(j)* = y(-j), h(j)* = h(-j), y(j)* = x(-j)
    return tuple(sorted(3 * (-(c // 3)) + (2 - c % 3) for c in codes))


def weight_of(codes: Sequence[int]) -> int:
    return sum(WEIGHT[c % 3] for c in codes)


def degree_sum(codes: Sequence[int]) -> int:
    return sum(c // 3 for c in codes)


# ---------------------------------------------------------------------------
# text form

_TOKEN = re.compile(r"\s*([xhy])(?:\(\s*([+-]?\d+)\s*\))?(?:\s*\^\s*(\d+))?")


def format_partition(codes: Sequence[int]) -> str:
    if not codes:
        return "1"
    out = []
    for c, m in sorted(Counter(codes).items()):
        tok = format_code(c)
        if m > 1:
            tok += f"^{m} "
        out.append(tok)
    return "".join(out).strip()


def parse_partition(text: str) -> ColoredPartition:
    """Parse ``y(-3)x(-2)^2 y(0)``; a bare color means degree 0; ``1`` is empty."""
    s = text.strip()
    if s in ("1", ""):
        return ONE
    codes: list[int] = []
    pos = 0
    while pos < len(s):
        if s[pos].isspace() or s[pos] == "*":
            pos += 1
            continue
        m = _TOKEN.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse partition at {s[pos:]!r}")
        color, deg, mult = m.group(1), int(m.group(2) or 0), int(m.group(3) or 1)
        codes.extend([code_of(color, deg)] * mult)
        pos = m.end()
    return ColoredPartition(tuple(sorted(codes)))


# ---------------------------------------------------------------------------
# leading-term catalogs

def _power(color: int, degree: int, e: int) -> list[int]:
    if e < 0:
        raise ValueError("negative exponent")
    return [3 * degree + color] * e


def shape_params(k: int, n: int) -> tuple[int, int, int]:
    """Write ``n = a(j-1) + b j`` with ``a + b = k+1`` and ``0 <= a <= k``."""
    j = -((-n) // (k + 1))  # ceil(n / (k+1))
    a = (k + 1) * j - n
    return j, a, k + 1 - a


def shape_colorings(k: int, n: int) -> dict[int, tuple[int, ...]]:
    """All leading terms of degree ``n`` keyed by ``m`` in ``[-k-1, k+1]``.

    The four families overlap on boundaries; overlaps must agree, otherwise the
    catalog would not be a function of ``(m, n)``.
    """
    j, a, b = shape_params(k, n)
    out: dict[int, tuple[int, ...]] = {}

    def put(m, parts):
        p = tuple(sorted(parts))
        if out.setdefault(m, p) != p:
            raise AssertionError(f"catalog collision at k={k}, m={m}, n={n}")

    for r in range(a, -1, -1):
        put(-k - 1 + a - r, _power(Y, j - 1, r) + _power(H, j - 1, a - r) + _power(Y, j, b))
    for r in range(0, a):
        put(-k - 1 + 2 * a - r, _power(H, j - 1, r) + _power(X, j - 1, a - r) + _power(Y, j, b))
    for r in range(b, -1, -1):
        put(k + 1 - b - r, _power(X, j - 1, a) + _power(Y, j, r) + _power(H, j, b - r))
    for r in range(0, b):
        put(k + 1 - r, _power(X, j - 1, a) + _power(H, j, r) + _power(X, j, b - r))
    return out


def catalog_lt_R(k: int, m: int, n: int) -> ColoredPartition:
    """Leading term of the relation coefficient with weight ``m`` and degree ``n``."""
    if abs(m) > k + 1:
        raise ValueError(f"|m| must be at most k+1 = {k + 1}")
    return ColoredPartition(shape_colorings(k, n)[m])


def lt_R_vLambda_map(k0: int, k1: int, min_degree: int) -> dict[tuple[int, ...], tuple[int, int]]:
    """Generators of the leading-term ideal on the Verma module, with ``(m, n)``.

    Returns every generator of degree ``>= min_degree``: the translation
    invariant terms for ``n <= -k-1`` and the weight dependent initial terms
    for ``-k-1 < n <= 0``.  Values are the relation labels ``(m, n)``.
    """
    k = k0 + k1
    out: dict[tuple[int, ...], tuple[int, int]] = {}
    for n in range(min(-k - 1, 0), min_degree - 1, -1):
        for m, p in shape_colorings(k, n).items():
            out[p] = (m, n)
    for a in range(0, k + 1):
        n, b = -a, k + 1 - a
        if n < min_degree:
            continue
        for r in range(0, a + 1):
            p = tuple(sorted(_power(Y, -1, r) + _power(H, -1, a - r) + _power(Y, 0, b)))
            out[p] = (-r - b, n)
        for r in range(0, a):
            p = tuple(sorted(_power(H, -1, r) + _power(X, -1, a - r) + _power(Y, 0, b)))
            out[p] = (-b + a - r, n)
        for r in range(0, k + 1 - a):
            if a > k0 or r > k1:
                p = tuple(sorted(_power(X, -1, a) + _power(Y, 0, r)))
                out[p] = (a - r, n)
    return out


def catalog_lt_R_vLambda(k0: int, k1: int, min_degree: int | None = None) -> frozenset[ColoredPartition]:
    """Generator set of the ideal of leading terms of relations on ``v_Lambda``.

    The full set is infinite (one family per degree); only generators of degree
    ``>= min_degree`` are returned.  ``min_degree=None`` gives the initial terms
    (degrees above ``-k-1``) only.
    """
    k = k0 + k1
    lo = -k if min_degree is None else min_degree
    return frozenset(ColoredPartition(p) for p in lt_R_vLambda_map(k0, k1, lo))


def initial_terms(k0: int, k1: int) -> frozenset[ColoredPartition]:
    return catalog_lt_R_vLambda(k0, k1, None)


def in_ideal(pi, generators: Iterable) -> bool:
    codes = _codes(pi)
    return any(contains(codes, _codes(g)) for g in generators)


# ---------------------------------------------------------------------------
# difference and initial conditions

def windows_ok(count: Callable[[int], int], lo: int, hi: int, k: int) -> bool:
    """Sliding-window inequalities for degree pairs ``(j-1, j)``, ``lo <= j <= hi``."""
    for j in range(lo, hi + 1):
        y0, h0, x0 = count(3 * (j - 1)), count(3 * (j - 1) + 1), count(3 * (j - 1) + 2)
        y1, h1, x1 = count(3 * j), count(3 * j + 1), count(3 * j + 2)
        if (y0 + h0 + y1 > k or h0 + x0 + y1 > k or x0 + y1 + h1 > k
                or x0 + h1 + x1 > k):
            return False
    return True


def satisfies_conditions(pi, k0: int, k1: int) -> bool:
    codes = _codes(pi)
    if not codes:
        return True
    cnt = Counter(codes)
    if cnt[code_of("x", -1)] > k0 or cnt[code_of("y", 0)] > k1:
        return False
    lo = codes[0] // 3
    hi = codes[-1] // 3 + 1
    return windows_ok(cnt.__getitem__, lo, hi, k0 + k1)


# ---------------------------------------------------------------------------
# enumeration

STRICT = "strict"   # parts b(n), n < 0
MINUS = "minus"     # strict parts plus y(0)


def _strict_partitions(degree: int, max_code: int, check=None, prefix=()) -> Iterator[tuple[int, ...]]:
    # parts chosen in nonincreasing code order; ``prefix`` holds the larger ones
    if degree == 0:
        yield prefix
        return
    lo = 3 * degree  # y(degree) is the smallest usable part
    for c in range(min(max_code, -1), lo - 1, -1):
        d = c // 3
        if d < degree:
            continue
        cand = (c,) + prefix
        if check is not None and not check(cand):
            continue
        yield from _strict_partitions(degree - d, c, check, cand)


def enumerate_partitions(
    part_set: str,
    degree: int,
    weight: int | None = None,
    predicate: Callable | None = None,
    conditions: tuple[int, int] | None = None,
    max_y0: int | None = None,
) -> Iterator[ColoredPartition]:
    """Yield every colored partition of the given degree exactly once.

    ``part_set`` is ``"strict"`` (negative degrees only) or ``"minus"``
    (adds ``y(0)``).  With ``"minus"`` the multiplicity of ``y(0)`` is fixed by
    ``weight`` when given, otherwise bounded by ``max_y0`` (required then).
    ``conditions=(k0, k1)`` prunes by the difference and initial conditions;
    ``predicate`` filters the output.
    """
    if degree > 0:
        return
    check = None
    if conditions is not None:
        k0, k1 = conditions
        check = lambda codes: satisfies_conditions(codes, k0, k1)  # noqa: E731
    y0 = code_of("y", 0)
    for sigma in _strict_partitions(degree, -1, check):
        if part_set == STRICT:
            options = [0]
        else:
            if weight is not None:
                m = weight_of(sigma) - weight
                options = [m] if m >= 0 else []
            elif max_y0 is not None:
                options = range(max_y0 + 1)
            else:
                raise ValueError("y(0) multiplicity unbounded: pass weight or max_y0")
        for m in options:
            codes = sigma + (y0,) * m
            if part_set == STRICT and weight is not None and weight_of(codes) != weight:
                continue
            if check is not None and m and not check(codes):
                continue
            p = ColoredPartition(codes)
            if predicate is None or predicate(p):
                yield p


def count_partitions(part_set: str, degree: int, weight: int | None = None, **kw) -> int:
    return sum(1 for _ in enumerate_partitions(part_set, degree, weight, **kw))


def multinomial(counts: Iterable[int]) -> int:
    counts = list(counts)
    out = math.factorial(sum(counts))
    for c in counts:
        out //= math.factorial(c)
    return out

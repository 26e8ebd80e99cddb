"""Truncated q-series, Weyl-group sums and specialized characters of standard modules."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

DEFAULT_ORDER = 200


class QSeries:
    """Power series ``c_0 + c_1 q + ... + c_N q^N`` known modulo ``q^(N+1)``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence, order: int | None = None):
        c = list(coeffs)
        if order is not None:
            c = (c + [0] * (order + 1 - len(c)))[: order + 1]
        if not c:
            raise ValueError("a series needs at least one coefficient")
        self.coeffs = c

    @classmethod
    def one(cls, order: int) -> "QSeries":
        return cls([1], order)

    @classmethod
    def zero(cls, order: int) -> "QSeries":
        return cls([0], order)

    @classmethod
    def monomial(cls, e: int, order: int, c=1) -> "QSeries":
        out = [0] * (order + 1)
        if 0 <= e <= order:
            out[e] = c
        return cls(out)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i):
        return self.coeffs[i]

    def _check(self, other: "QSeries"):
        if not isinstance(other, QSeries):
            raise TypeError("expected a QSeries")
        if other.order != self.order:
            raise ValueError(f"truncation orders differ: {self.order} vs {other.order}")

    def __add__(self, other):
        self._check(other)
        return QSeries([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        self._check(other)
        return QSeries([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return QSeries([-a for a in self.coeffs])

    def __mul__(self, other):
        if not isinstance(other, QSeries):
            return QSeries([a * other for a in self.coeffs])
        self._check(other)
        n = self.order
        a, b = self.coeffs, other.coeffs
        out = [0] * (n + 1)
        for i, ai in enumerate(a):
            if ai:
                for j in range(n + 1 - i):
                    bj = b[j]
                    if bj:
                        out[i + j] += ai * bj
        return QSeries(out)

    __rmul__ = __mul__

    def inverse(self) -> "QSeries":
        c0 = self.coeffs[0]
        if c0 not in (1, -1):
            if c0 == 0:
                raise ZeroDivisionError("constant term is zero")
            inv0 = Fraction(1, c0)
        else:
            inv0 = c0
        n = self.order
        a = self.coeffs
        out = [0] * (n + 1)
        out[0] = inv0
        for m in range(1, n + 1):
            s = 0
            for i in range(1, m + 1):
                if a[i]:
                    s += a[i] * out[m - i]
            out[m] = -s * inv0
        return QSeries(out)

    def __truediv__(self, other):
        if not isinstance(other, QSeries):
            return QSeries([Fraction(a) / other for a in self.coeffs])
        self._check(other)
        return self * other.inverse()

    def is_integral(self) -> bool:
        return all(isinstance(c, int) or Fraction(c).denominator == 1 for c in self.coeffs)

    def integral(self) -> "QSeries":
        """Same series with integer coefficients; fails loudly on a fraction."""
        out = []
        for c in self.coeffs:
            f = Fraction(c)
            if f.denominator != 1:
                raise ArithmeticError(f"non-integral coefficient {f}")
            out.append(int(f))
        return QSeries(out)

    def truncate(self, order: int) -> "QSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return QSeries(self.coeffs[: order + 1])

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                mono = f"{c}"
            else:
                qq = "q" if i == 1 else f"q^{i}"
                mono = qq if c == 1 else (f"-{qq}" if c == -1 else f"{c}*{qq}")
            terms.append(mono)
        body = " + ".join(terms).replace("+ -", "- ") if terms else "0"
        return body + " + ..."

    def __repr__(self) -> str:
        return f"QSeries({self.coeffs!r})"

    def to_json(self) -> str:
        return json.dumps([int(c) if Fraction(c).denominator == 1 else str(c) for c in self.coeffs])


# ---------------------------------------------------------------------------
# products

def _mul_one_minus(c: list, r: int):
    # in place: c *= (1 - q^r)
    for i in range(len(c) - 1, r - 1, -1):
        c[i] -= c[i - r]


def _mul_one_plus(c: list, r: int):
    for i in range(len(c) - 1, r - 1, -1):
        c[i] += c[i - r]


def _div_one_minus(c: list, r: int):
    # in place: c /= (1 - q^r)
    for i in range(r, len(c)):
        c[i] += c[i - r]


Residues = Sequence[tuple[int, int]]


def in_classes(r: int, classes: Residues) -> bool:
    """Whether ``r`` lies in one of the classes ``r0 mod M``."""
    return any((r - r0) % M == 0 for r0, M in classes)


def prod_congruence(classes_plus: Iterable[Residues], classes_minus: Iterable[Residues], N: int) -> QSeries:
    """``prod_B prod_{r in B}(1+q^r) * prod_C prod_{r in C}(1-q^r)^(-1)`` to order ``N``.

    Each class set is a list of ``(r0, M)`` pairs meaning ``r = r0 mod M``,
    with ``r`` running over positive integers; a pair list is a union of
    residue classes and each such union contributes one factor per ``r``.
    """
    c = [1] + [0] * N
    for cls in classes_plus:
        for r in range(1, N + 1):
            if in_classes(r, cls):
                _mul_one_plus(c, r)
    for cls in classes_minus:
        for r in range(1, N + 1):
            if in_classes(r, cls):
                _div_one_minus(c, r)
    return QSeries(c)


def product_where(pred: Callable[[int], bool], N: int, kind: str) -> QSeries:
    """Product over ``1 <= r <= N`` with ``pred(r)`` of ``(1-q^r)``, ``(1+q^r)`` or ``(1-q^r)^(-1)``."""
    c = [1] + [0] * N
    step = {"minus": _mul_one_minus, "plus": _mul_one_plus, "inverse": _div_one_minus}[kind]
    for r in range(1, N + 1):
        if pred(r):
            step(c, r)
    return QSeries(c)


def P(s0: int, s1: int, N: int = DEFAULT_ORDER) -> QSeries:
    """``prod_{r = 0, s0 mod s}(1-q^r) * prod_{r = s1 mod s}(1-q^r)`` with ``s = s0+s1``."""
    if s0 < 1 or s1 < 1:
        raise ValueError("s0 and s1 must be positive")
    s = s0 + s1
    c = [1] + [0] * N
    for r in range(1, N + 1):
        if r % s in (0, s0 % s):
            _mul_one_minus(c, r)
        if r % s == s1 % s:
            _mul_one_minus(c, r)
    return QSeries(c)


def Q(m0: int, two_m1: int, N: int = DEFAULT_ORDER) -> QSeries:
    """``prod_{r = 0, +-m0 mod 2m}(1-q^r) * prod_{r = +-2m1 mod 4m}(1-q^r)``, ``m = m0 + m1``."""
    if m0 < 1 or two_m1 < 1:
        raise ValueError("m0 and 2*m1 must be positive")
    M2 = 2 * m0 + two_m1
    M4 = 2 * M2
    c = [1] + [0] * N
    for r in range(1, N + 1):
        if r % M2 in {0, m0 % M2, (-m0) % M2}:
            _mul_one_minus(c, r)
        if r % M4 in {two_m1 % M4, (-two_m1) % M4}:
            _mul_one_minus(c, r)
    return QSeries(c)


# ---------------------------------------------------------------------------
# Weyl group sums

def weyl_sum(a0: int, a1: int, s0: int, s1: int, N: int) -> QSeries:
    """``sum_w eps(w) q^(<rho_s, lam - w lam>)`` for ``<alpha_i^vee, lam> = a_i``.

    Writing ``w lam = lam - c0 alpha_0 - c1 alpha_1``, the exponent is
    ``s0 c0 + s1 c1`` and a simple reflection ``r_i`` raises ``c_i`` by the
    current value of ``<alpha_i^vee, w lam>``.  The group is enumerated along
    the two alternating reduced-word chains; each chain has strictly growing
    exponents when ``a_i`` and ``s_i`` are positive.
    """
    if min(a0, a1, s0, s1) < 1:
        raise ValueError("parameters must be positive")
    out = [0] * (N + 1)
    out[0] = 1
    for first in (0, 1):
        c = [0, 0]
        i = first
        length = 0
        prev = 0
        while True:
            pair = (a0 - 2 * c[0] + 2 * c[1], a1 + 2 * c[0] - 2 * c[1])
            c[i] += pair[i]
            length += 1
            e = s0 * c[0] + s1 * c[1]
            if e <= prev:
                raise AssertionError("Weyl chain exponents are not increasing")
            prev = e
            if e > N:
                break
            out[e] += -1 if length % 2 else 1
            i = 1 - i
    return QSeries(out)


def weyl_denominator(s0: int, s1: int, N: int = DEFAULT_ORDER) -> QSeries:
    return weyl_sum(1, 1, s0, s1, N)


def weyl_numerator(k0: int, k1: int, s0: int, s1: int, N: int = DEFAULT_ORDER) -> QSeries:
    return weyl_sum(k0 + 1, k1 + 1, s0, s1, N)


def dual_numerator(k0: int, k1: int, s0: int, s1: int, N: int = DEFAULT_ORDER) -> QSeries:
    """Numerator with the roles of ``Lambda + rho`` and ``rho_s`` exchanged.

    The Cartan matrix is symmetric, so the transposed algebra has the same
    reflection rule on the coroot side.
    """
    return weyl_sum(s0, s1, k0 + 1, k1 + 1, N)


def specialized_character(k0: int, k1: int, s0: int, s1: int, N: int = DEFAULT_ORDER) -> QSeries:
    """Normalized specialized character as numerator over denominator."""
    return (weyl_numerator(k0, k1, s0, s1, N) / weyl_denominator(s0, s1, N)).integral()


# ---------------------------------------------------------------------------
# product formulas

def _quotient(num: QSeries, den: QSeries) -> QSeries:
    return (num / den).integral()


def product_formula(formula: str, N: int = DEFAULT_ORDER, **p) -> QSeries:
    """Right-hand side of a named product formula.

    Formulas ``principal`` .. ``P-ratio`` are quotients of ``P`` and ``Q``;
    ``principal-diagonal`` .. ``no-multiples`` are explicit congruence products.
    """
    f = formula
    if f == "principal":
        return _quotient(P(p["k0"] + 1, p["k1"] + 1, N), P(1, 1, N))
    if f == "half-principal":
        return _quotient(Q(p["k0"] + 1, 2 * (p["k1"] + 1), N), P(1, 2, N))
    if f == "Q-ratio-a":
        n, s0, s1 = p["n"], p["s0"], p["s1"]
        return _quotient(Q(n * s0, 2 * n * s1, N), P(s0, s1, N))
    if f == "Q-ratio-b":
        n, s0, s1 = p["n"], p["s0"], p["s1"]
        return _quotient(Q(n * s1, 2 * n * s0, N), P(s0, s1, N))
    if f == "P-ratio":
        n, s0, s1 = p["n"], p["s0"], p["s1"]
        return _quotient(P(n * s0, n * s1, N), P(s0, s1, N))
    if f == "principal-diagonal":
        n = p["n"]
        a, b = 0, n
        while b % 2 == 0:
            a, b = a + 1, b // 2
        out = product_where(lambda r: r % 2 == 1 and r % (2 * b) != b, N, "inverse")
        out = out * product_where(lambda r: r % (2 * n) not in (0, n), N, "inverse")
        for j in range(1, a + 1):
            mod = 2 ** (a - j + 1) * b
            res = 2 ** (a - j) * b
            out = out * product_where(lambda r, mod=mod, res=res: r % mod == res, N, "plus")
        return out
    if f == "principal-skew":
        n = p["n"]
        out = product_where(lambda r: r % 2 == 1, N, "inverse")
        return out * product_where(lambda r: r % (3 * n) not in {0, n % (3 * n), (-n) % (3 * n)}, N, "inverse")
    if f == "principal-product":
        k0, k1 = p["k0"], p["k1"]
        M = k0 + k1 + 2
        out = product_where(lambda r: r % 2 == 1, N, "inverse")
        return out * product_where(lambda r: r % M not in {0, (k0 + 1) % M, (-(k0 + 1)) % M}, N, "inverse")
    if f == "half-principal-product":
        k0, k1 = p["k0"], p["k1"]
        k = k0 + k1
        M2, M4 = 2 * (k + 2), 4 * (k + 2)

        def keep(r):
            return (r % M2 not in {0, (k0 + 1) % M2, (-(k0 + 1)) % M2}
                    and r % M4 not in {(2 * (k1 + 1)) % M4, (-2 * (k1 + 1)) % M4})

        return product_where(keep, N, "inverse")
    if f == "half-principal-skew":
        n = p["n"]
        M = 6 * n
        out = product_where(lambda r: r % M in {n % M, (-n) % M}, N, "plus")
        bad = {0, n % M, (-n) % M, (2 * n) % M, (-2 * n) % M}
        return out * product_where(lambda r: r % M not in bad, N, "inverse")
    if f == "no-multiples":
        n = p["n"]
        return product_where(lambda r: r % n != 0, N, "inverse")
    raise KeyError(f"unknown formula {formula!r}")


# (highest weight, specialization) on the character side of each formula
def formula_character_params(formula: str, **p) -> tuple[int, int, int, int]:
    f = formula
    if f in ("principal", "principal-product"):
        return p["k0"], p["k1"], 1, 1
    if f in ("half-principal", "half-principal-product"):
        return p["k0"], p["k1"], 1, 2
    if f == "Q-ratio-a":
        return p["n"] - 1, 2 * p["n"] - 1, p["s0"], p["s1"]
    if f == "Q-ratio-b":
        return 2 * p["n"] - 1, p["n"] - 1, p["s0"], p["s1"]
    if f == "P-ratio":
        return p["n"] - 1, p["n"] - 1, p["s0"], p["s1"]
    if f == "principal-diagonal":
        return p["n"] - 1, p["n"] - 1, 1, 1
    if f == "principal-skew":
        return p["n"] - 1, 2 * p["n"] - 1, 1, 1
    if f == "half-principal-skew":
        return 2 * p["n"] - 1, p["n"] - 1, 1, 2
    if f == "no-multiples":
        return p["n"] - 1, p["n"] - 1, 1, 2
    raise KeyError(f"unknown formula {formula!r}")


FORMULAS = ("principal", "half-principal", "Q-ratio-a", "Q-ratio-b", "P-ratio", "principal-diagonal", "principal-skew",
            "principal-product", "half-principal-product", "half-principal-skew", "no-multiples")


# ---------------------------------------------------------------------------
# partitions under difference conditions

@dataclass(frozen=True)
class Specialization:
    """Exponents ``y(-j) -> j s + s1``, ``h(-j) -> j s``, ``x(-j) -> j s - s1``, ``s = s0 + s1``."""

    s0: int
    s1: int

    def __post_init__(self):
        if self.s0 < 1 or self.s1 < 1:
            raise ValueError("s0 and s1 must be positive")

    @property
    def s(self) -> int:
        return self.s0 + self.s1

    def exponent(self, color: int, depth: int) -> int:
        """Exponent of the part of color ``color`` (y=0, h=1, x=2) at degree ``-depth``."""
        return depth * self.s + (self.s1, 0, -self.s1)[color]

    def exponent_of_code(self, code: int) -> int:
        return self.exponent(code % 3, -(code // 3))

    def exponent_of(self, pi) -> int:
        codes = pi.codes if hasattr(pi, "codes") else pi
        return sum(self.exponent_of_code(c) for c in codes)

    def label(self, code: int) -> str:
        """Name of the image part; for ``(1,1)`` the images of ``x`` are underlined."""
        e = self.exponent_of_code(code)
        if self.s0 == self.s1 == 1 and code % 3 == 2:
            return f"_{e}"
        return str(e)


def conditioned_partition_gf(k0: int, k1: int, specialization: Specialization | tuple, N: int = DEFAULT_ORDER) -> QSeries:
    """Generating function of conditioned colored partitions by specialized degree.

    Transfer matrix over degrees ``0, -1, -2, ...``: every difference condition
    involves two adjacent degrees, so the state is the multiplicity triple at
    the last processed degree.
    """
    if not isinstance(specialization, Specialization):
        specialization = Specialization(*specialization)
    k = k0 + k1
    s, s1 = specialization.s, specialization.s1
    states: dict[tuple[int, int, int], list] = {}
    for y0 in range(k1 + 1):
        e = y0 * s1
        if e <= N:
            poly = [0] * (N + 1)
            poly[e] = 1
            states[(y0, 0, 0)] = poly
    depth = 1
    triples = [(y, h, x) for y in range(k + 1) for h in range(k + 1 - y) for x in range(k + 1 - h)]
    while depth * s - s1 <= N:
        ey, eh, ex = specialization.exponent(0, depth), specialization.exponent(1, depth), specialization.exponent(2, depth)
        new: dict = {}
        for (y1, h1, x1), poly in states.items():
            for (y, h, x) in triples:
                if (y + h + y1 > k or h + x + y1 > k or x + y1 + h1 > k or x + h1 + x1 > k):
                    continue
                if depth == 1 and x > k0:
                    continue
                e = y * ey + h * eh + x * ex
                if e > N:
                    continue
                tgt = new.get((y, h, x))
                if tgt is None:
                    tgt = new[(y, h, x)] = [0] * (N + 1)
                for i in range(N + 1 - e):
                    if poly[i]:
                        tgt[i + e] += poly[i]
        states = new
        depth += 1
    total = [0] * (N + 1)
    for poly in states.values():
        for i, c in enumerate(poly):
            total[i] += c
    return QSeries(total)


def image_partition_gf(k0: int, k1: int, s0: int, s1: int, N: int) -> QSeries:
    """Brute-force count of integer partitions under the image conditions.

    For ``s0 != s1`` the parts are ``r = 0, +-s1 mod s`` with the four window
    inequalities on ``f_{js +- ...}``; for ``s0 = s1 = 1`` parts are plain
    integers plus underlined odd integers with the principal-picture windows.
    """
    k = k0 + k1
    if s0 == s1 == 1:
        return _principal_gf(k0, k1, N)
    if s0 == s1:
        raise ValueError("the image description needs s0 != s1 or s0 = s1 = 1")
    s = s0 + s1
    parts = [r for r in range(1, N + 1) if r % s in (0, s1 % s, (-s1) % s)]

    def ok(f):
        g = lambda r: f.get(r, 0)  # noqa: E731
        for j in range(0, N // s + 2):
            b = j * s
            if (g(b + s1) + g(b) + g(b - s0) > k or g(b) + g(b - s1) + g(b - s0) > k
                    or g(b + s0) + g(b + s1) + g(b) > k or g(b + s0) + g(b) + g(b - s1) > k):
                return False
        return g(s0) <= k0 and g(s1) <= k1

    return QSeries(_count_partitions(parts, N, k, ok))


def _count_partitions(parts: list, N: int, maxmult: int, ok) -> list[int]:
    counts = [0] * (N + 1)
    f: dict = {}

    def rec(idx, total):
        if idx == len(parts):
            if ok(f):
                counts[total] += 1
            return
        r = parts[idx]
        for m in range(0, maxmult + 1):
            t = total + m * r
            if t > N:
                break
            if m:
                f[r] = m
            rec(idx + 1, t)
        f.pop(r, None)

    rec(0, 0)
    return counts


def _principal_gf(k0: int, k1: int, N: int) -> QSeries:
    k = k0 + k1
    # plain parts are ints r; underlined odd parts are (-r) to keep keys distinct
    parts = list(range(1, N + 1)) + [-r for r in range(1, N + 1, 2)]

    def ok(f):
        p = lambda r: f.get(r, 0) if r > 0 else 0  # noqa: E731
        u = lambda r: f.get(-r, 0) if r > 0 else 0  # noqa: E731
        for i in range(0, N // 2 + 2):
            if (p(2 * i + 1) + p(2 * i) + p(2 * i - 1) > k
                    or p(2 * i) + u(2 * i - 1) + p(2 * i - 1) > k
                    or u(2 * i + 1) + p(2 * i + 1) + p(2 * i) > k
                    or u(2 * i + 1) + p(2 * i) + u(2 * i - 1) > k):
                return False
        return u(1) <= k0 and p(1) <= k1

    counts = [0] * (N + 1)
    f: dict = {}

    def rec(idx, total):
        if idx == len(parts):
            if ok(f):
                counts[total] += 1
            return
        r = parts[idx]
        size = abs(r)
        for m in range(0, k + 1):
            t = total + m * size
            if t > N:
                break
            if m:
                f[r] = m
            rec(idx + 1, t)
        f.pop(r, None)

    rec(0, 0)
    return QSeries(counts)


# ---------------------------------------------------------------------------
# the level-two example with parts at most twice

def window_partition_counts(N: int) -> list[int]:
    """Partitions of ``n <= N`` with each part at most twice under the three-term windows."""

    def ok(f):
        g = lambda r: f.get(r, 0) if r > 0 else 0  # noqa: E731
        for j in range(0, N // 3 + 2):
            b = 3 * j
            if (g(b + 2) + g(b + 1) + g(b) > 2 or g(b + 2) + g(b) + g(b - 1) > 2
                    or g(b + 1) + g(b) + g(b - 2) > 2 or g(b) + g(b - 1) + g(b - 2) > 2):
                return False
        return g(1) <= 1 and g(2) <= 1

    return _count_partitions(list(range(1, N + 1)), N, 2, ok)


def distinct_partition_counts(N: int) -> list[int]:
    return _count_partitions(list(range(1, N + 1)), N, 1, lambda f: True)


# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IdentityResult:
    equal: bool
    mismatch_at: int | None = None
    lhs_value: object = None
    rhs_value: object = None

    def __bool__(self) -> bool:
        return self.equal

    def report(self) -> str:
        if self.equal:
            return "equal"
        return f"first mismatch at q^{self.mismatch_at}: {self.lhs_value} != {self.rhs_value}"


def identity_check(lhs: QSeries, rhs: QSeries) -> IdentityResult:
    if lhs.order != rhs.order:
        raise ValueError(f"truncation orders differ: {lhs.order} vs {rhs.order}")
    for i, (a, b) in enumerate(zip(lhs.coeffs, rhs.coeffs)):
        if a != b:
            return IdentityResult(False, i, a, b)
    return IdentityResult(True)

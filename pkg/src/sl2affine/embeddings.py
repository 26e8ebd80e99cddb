"""Embeddings of relation leading terms into colored partitions, and pairs of them.

Two embeddings ``rho1, rho2`` into ``pi = rho1 | rho2`` are *linked* when a
chain of embeddings joins them with every consecutive union shorter than
``pi``.  Pairs that overlap, are long enough, and are not linked fall into
fourteen explicit families; :func:`classify_pair` decides linkage by search
first and only then matches the families, so the family list itself is tested.
"""

from __future__ import annotations

import itertools
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Iterable

from .partitions import (
    ColoredPartition,
    contains,
    dual_codes,
    intersect,
    shape_colorings,
    union,
)

Y, H, X = 0, 1, 2


@dataclass(frozen=True, order=True)
class Embedding:
    """``rho`` (the leading term of relation ``(m, n)``) contained in ``pi``."""

    pi: ColoredPartition = field(compare=False)
    rho: ColoredPartition
    m: int
    n: int

    def as_dict(self) -> dict:
        return {"m": self.m, "n": self.n, "rho": str(self.rho)}


DISJOINT = "Disjoint"
LINKED = "Linked"
EXCEPTIONAL = "Exceptional"
IDENTICAL = "Identical"
ADJACENT = "Adjacent"  # overlapping, union of length k+2: never linked, outside the family list


@dataclass(frozen=True)
class PairClass:
    tag: str
    family: int | None = None
    params: dict | None = field(default=None, compare=False)
    anchor: int | None = field(default=None, compare=False)
    # every family whose pattern produces the union; more than one means the list overlaps
    families: tuple[int, ...] = field(default=(), compare=False)

    def as_dict(self) -> dict:
        out = {"tag": self.tag, "family": self.family}
        if len(self.families) > 1:
            out["families"] = list(self.families)
        return out


class ClassificationError(AssertionError):
    """An unlinked overlapping pair outside every exceptional family."""


# ---------------------------------------------------------------------------

def _codes(p) -> tuple:
    return p.codes if isinstance(p, ColoredPartition) else tuple(p)


def find_embeddings(pi, k: int) -> list[Embedding]:
    """Every relation leading term contained in ``pi``, sorted by ``(n, m)``."""
    codes = _codes(pi)
    P = ColoredPartition(codes)
    if len(codes) < k + 1:
        return []
    degs = sorted({c // 3 for c in codes})
    ns = set()
    dcount = Counter(c // 3 for c in codes)
    for j in degs:
        for a in range(0, k + 2):
            b = k + 1 - a
            if a and dcount.get(j - 1, 0) < a:
                continue
            if b and dcount.get(j, 0) < b:
                continue
            ns.add(a * (j - 1) + b * j)
    out = []
    for n in sorted(ns):
        for m, rho in sorted(shape_colorings(k, n).items()):
            if contains(codes, rho):
                out.append(Embedding(P, ColoredPartition(rho), m, n))
    return out


def _linked(rho1: tuple, rho2: tuple, pi: tuple, k: int, step_ok=None) -> bool:
    size = len(union(rho1, rho2))
    nodes = [e.rho.codes for e in find_embeddings(pi, k)]
    if step_ok is None:
        def step_ok(s, t):
            return len(union(s, t)) < size
    seen = {rho1}
    queue = deque([rho1])
    while queue:
        cur = queue.popleft()
        if cur == rho2:
            return True
        for nxt in nodes:
            if nxt not in seen and step_ok(cur, nxt):
                seen.add(nxt)
                queue.append(nxt)
    return rho2 in seen


def linked(e1: Embedding, e2: Embedding, k: int) -> bool:
    pi = union(e1.rho.codes, e2.rho.codes)
    return _linked(e1.rho.codes, e2.rho.codes, pi, k)


# ---------------------------------------------------------------------------
# the fourteen exceptional families

def _pw(color: int, deg: int, e: int):
    return None if e < 0 else [3 * deg + color] * e


def _build(*pieces):
    out = []
    for p in pieces:
        if p is None:
            return None
        out.extend(p)
    return tuple(sorted(out))


def _family(idx: int, k: int, j: int, a: int, b: int, c: int):
    """Partition of family ``idx`` at anchor ``j``, or ``None`` if parameters are invalid."""
    K = k + 1
    if idx == 1:
        if not (2 <= a <= k):
            return None
        return _build(_pw(Y, j, a), _pw(H, j, K - a), _pw(X, j, a))
    if idx == 2:
        if not (a >= 2 and a + b <= k):
            return None
        return _build(_pw(X, j - 1, K - a - b), _pw(Y, j, a), _pw(H, j, b), _pw(X, j, a))
    if idx == 3:
        if not (1 <= a <= k - 1):
            return None
        return _build(_pw(H, j - 1, K - a - b), _pw(X, j - 1, a), _pw(Y, j, b), _pw(X, j, K - a))
    if idx == 4:
        if not (1 <= a + b <= k - 1):
            return None
        return _build(_pw(H, j - 1, K - a - b), _pw(X, j - 1, a), _pw(Y, j, b), _pw(H, j, K - a - b))
    if idx == 5:
        if not (1 <= a <= k - 1):
            return None
        return _build(_pw(Y, j - 1, K - a), _pw(X, j - 1, b), _pw(Y, j, a), _pw(H, j, K - a - b))
    if idx == 6:
        if not (a >= 2 and a + b <= k):
            return None
        return _build(_pw(Y, j - 1, a), _pw(H, j - 1, b), _pw(X, j - 1, a), _pw(Y, j, K - a - b))
    if idx == 7:
        if not (a >= 1 and c >= 1 and a + b + c <= k):
            return None
        return _build(_pw(Y, j - 1, K - a - c), _pw(H, j - 1, c), _pw(X, j - 1, b),
                      _pw(Y, j, a), _pw(H, j, K - a - b))
    if idx == 8:
        if not (a >= 1 and c >= 1 and a + b + c <= k):
            return None
        return _build(_pw(H, j - 1, K - a - b), _pw(X, j - 1, a), _pw(Y, j, b),
                      _pw(H, j, c), _pw(X, j, K - a - c))
    if idx == 9:
        if not (2 <= a <= k):
            return None
        return _build(_pw(X, j - 2, a), _pw(Y, j - 1, b), _pw(H, j - 1, K - a - b), _pw(Y, j, a))
    if idx == 10:
        if not (2 <= a <= k):
            return None
        return _build(_pw(X, j - 2, a), _pw(H, j - 1, K - a - b), _pw(X, j - 1, b), _pw(Y, j, a))
    if idx == 11:
        if not (1 <= b <= k - 1 and a + b + c <= k):
            return None
        return _build(_pw(X, j - 2, K - a - b), _pw(H, j - 1, a), _pw(X, j - 1, b),
                      _pw(Y, j, c), _pw(H, j, K - b - c))
    if idx == 12:
        if not (1 <= b <= k - 1 and a + b <= k):
            return None
        return _build(_pw(X, j - 2, K - a - b), _pw(H, j - 1, a), _pw(X, j - 1, b),
                      _pw(H, j, c), _pw(X, j, K - b - c))
    if idx == 13:
        if not (1 <= b <= k - 1 and a + b + c <= k):
            return None
        return _build(_pw(H, j - 2, K - b - c), _pw(X, j - 2, c), _pw(Y, j - 1, b),
                      _pw(H, j - 1, a), _pw(Y, j, K - a - b))
    if idx == 14:
        if not (1 <= b <= k - 1 and a + b <= k):
            return None
        return _build(_pw(Y, j - 2, K - b - c), _pw(H, j - 2, c), _pw(Y, j - 1, b),
                      _pw(H, j - 1, a), _pw(Y, j, K - a - b))
    raise ValueError(f"no family {idx}")


FAMILIES = tuple(range(1, 15))
DUAL_FAMILY = {1: 1, 2: 6, 3: 5, 4: 4, 5: 3, 6: 2, 7: 8, 8: 7, 9: 10, 10: 9,
               11: 13, 12: 14, 13: 11, 14: 12}


def match_families(pi, k: int) -> list[tuple[int, int, dict]]:
    """All ``(family, anchor j, parameters)`` producing ``pi``."""
    codes = _codes(pi)
    if not codes:
        return []
    top = max(c // 3 for c in codes)
    out = []
    for idx in FAMILIES:
        for j in (top, top + 1):
            for a, b, c in itertools.product(range(k + 2), repeat=3):
                p = _family(idx, k, j, a, b, c)
                if p == codes:
                    out.append((idx, j, {"a": a, "b": b, "c": c}))
    return out


def family_indices(pi, k: int) -> set[int]:
    return {idx for idx, _, _ in match_families(pi, k)}


def family_member(idx: int, k: int, j: int, a: int = 0, b: int = 0, c: int = 0) -> ColoredPartition | None:
    p = _family(idx, k, j, a, b, c)
    return None if p is None else ColoredPartition(p)


def classify_pair(e1: Embedding, e2: Embedding, k: int | None = None) -> PairClass:
    """Classify two embeddings of the same union.

    Raises :class:`ClassificationError` when the pair overlaps, has union of
    length at least ``k+3``, is not linked, and matches no family.
    """
    r1, r2 = e1.rho.codes, e2.rho.codes
    if k is None:
        k = len(r1) - 1
    pi = union(r1, r2)
    for e in (e1, e2):
        if e.pi.codes and e.pi.codes != pi:
            raise ValueError("embeddings must be taken into the union of the two leading terms")
    if r1 == r2:
        return PairClass(IDENTICAL)
    if not intersect(r1, r2):
        return PairClass(DISJOINT)
    if _linked(r1, r2, pi, k):
        return PairClass(LINKED)
    if len(pi) < k + 3:
        return PairClass(ADJACENT)
    matches = match_families(pi, k)
    if not matches:
        raise ClassificationError(
            f"unlinked pair {e1.rho} / {e2.rho} in {ColoredPartition(pi)} matches no exceptional family")
    idx, j, params = matches[0]
    fams = tuple(sorted({m[0] for m in matches}))
    return PairClass(EXCEPTIONAL, idx, params, j, fams)


def embeddings_of_union(rho1, rho2, k: int) -> tuple[Embedding, Embedding]:
    r1, r2 = _codes(rho1), _codes(rho2)
    pi = ColoredPartition(union(r1, r2))
    found = {e.rho.codes: e for e in find_embeddings(pi, k)}
    return found[r1], found[r2]


def dual_embedding(e: Embedding) -> Embedding:
    rho = ColoredPartition(dual_codes(e.rho.codes))
    pi = ColoredPartition(dual_codes(e.pi.codes))
    # the dual of the leading term of (m, n) is the leading term of (-m, -n)
    return Embedding(pi, rho, -e.m, -e.n)


def pair_report(pi, k: int) -> dict:
    """JSON-ready record with all embeddings of ``pi`` and the class of each pair."""
    embs = find_embeddings(pi, k)
    pairs = []
    for (i, e1), (j, e2) in itertools.combinations(enumerate(embs), 2):
        u = ColoredPartition(union(e1.rho.codes, e2.rho.codes))
        a, b = Embedding(u, e1.rho, e1.m, e1.n), Embedding(u, e2.rho, e2.m, e2.n)
        try:
            cls = classify_pair(a, b, k).as_dict()
        except ClassificationError:
            cls = {"tag": "Inconsistent", "family": None}
        pairs.append({"i": i, "j": j, **cls})
    return {"pi": str(ColoredPartition(_codes(pi))), "embeddings": [e.as_dict() for e in embs],
            "pair_classes": pairs}


# ---------------------------------------------------------------------------
# partitions of length k+2 with several embeddings

@dataclass(frozen=True)
class CatalogEntry:
    pi: ColoredPartition
    count: int
    case: int
    starred: bool = False


def length_k2_catalog(k: int, j: int = -1) -> list[CatalogEntry]:
    """Listed partitions of length ``k+2`` with two or three embeddings, anchored at ``j``."""
    K2 = k + 2
    out: list[CatalogEntry] = []
    seen = set()

    def put(parts, n, case, starred=False):
        p = _build(*parts)
        if p is None or p in seen:
            return
        seen.add(p)
        out.append(CatalogEntry(ColoredPartition(p), n, case, starred))

    # shape j^(k+2)
    for a in range(1, k + 2):
        put([_pw(H, j, a), _pw(X, j, K2 - a)], 2, 1)
    put([_pw(Y, j, 1), _pw(H, j, k), _pw(X, j, 1)], 2, 1)
    for a in range(1, k + 2):
        put([_pw(Y, j, K2 - a), _pw(H, j, a)], 2, 1)
    # shape (j-1)^a j^b
    for a in range(1, K2):
        b = K2 - a
        J = j
        put([_pw(X, J - 1, a), _pw(X, J, b)], 2, 2)
        for c in range(1, b):
            put([_pw(X, J - 1, a), _pw(H, J, c), _pw(X, J, b - c)], 3, 2)
        put([_pw(X, J - 1, a), _pw(H, J, b)], 2, 2)
        if b >= 2:
            put([_pw(X, J - 1, a), _pw(Y, J, 1), _pw(H, J, b - 2), _pw(X, J, 1)], 2, 2, True)
        for c in range(1, b):
            put([_pw(X, J - 1, a), _pw(Y, J, c), _pw(H, J, b - c)], 3, 2)
        put([_pw(X, J - 1, a), _pw(Y, J, b)], 2, 2)
        put([_pw(H, J - 1, 1), _pw(X, J - 1, a - 1), _pw(Y, J, b - 1), _pw(H, J, 1)], 2, 2)
        for c in range(1, a):
            put([_pw(H, J - 1, c), _pw(X, J - 1, a - c), _pw(Y, J, b)], 3, 2)
        put([_pw(H, J - 1, a), _pw(Y, J, b)], 2, 2)
        if a >= 2:
            put([_pw(Y, J - 1, 1), _pw(H, J - 1, a - 2), _pw(X, J - 1, 1), _pw(Y, J, b)], 2, 2, True)
        for c in range(1, a):
            put([_pw(Y, J - 1, c), _pw(H, J - 1, a - c), _pw(Y, J, b)], 3, 2)
        put([_pw(Y, J - 1, a), _pw(Y, J, b)], 2, 2)
        if b == 1:
            put([_pw(X, J - 1, a), _pw(H, J, 1)], 2, 2)
            put([_pw(H, J - 1, 1), _pw(X, J - 1, a - 1), _pw(X, J, 1)], 2, 2)
        if a == 1:
            put([_pw(H, J - 1, 1), _pw(Y, J, b)], 2, 2)
            put([_pw(Y, J - 1, 1), _pw(Y, J, b - 1), _pw(H, J, 1)], 2, 2)
    # shape (j-1) j^k (j+1)
    for a, b in ((1, 0), (0, 1)):
        put([_pw(X, j - 1, 1), _pw(X, j, k), _pw(X, j + 1, a), _pw(H, j + 1, b)], 2, 3)
    for a in range(0, k + 1):
        put([_pw(X, j - 1, 1), _pw(H, j, a), _pw(X, j, k - a), _pw(Y, j + 1, 1)], 2, 3)
    for a in range(1, k + 1):
        put([_pw(X, j - 1, 1), _pw(Y, j, a), _pw(H, j, k - a), _pw(Y, j + 1, 1)], 2, 3)
    for a, b in ((1, 0), (0, 1)):
        put([_pw(Y, j - 1, a), _pw(H, j - 1, b), _pw(Y, j, k), _pw(Y, j + 1, 1)], 2, 3)
    return out


def multi_embedding_partitions(k: int, j: int = -1) -> dict[ColoredPartition, int]:
    """Brute force: length-``k+2`` partitions on degrees ``j-1..j+1`` with at least two embeddings."""
    parts = [3 * d + c for d in (j - 1, j, j + 1) for c in (Y, H, X)]
    out = {}
    for combo in itertools.combinations_with_replacement(parts, k + 2):
        n = len(find_embeddings(combo, k))
        if n >= 2:
            out[ColoredPartition(combo)] = n
    return out

"""Verification batteries behind ``sl2affine verify``.

Each suite is a generator of plain records ``{"suite", "check", "params",
"pass", ...}`` in a fixed order, so output can be diffed between runs.
"""

from __future__ import annotations

import itertools
from typing import Iterator

from . import embeddings as emb
from . import qseries as qs
from .liealg import (
    HighestWeight,
    basis_vector,
    central_charge,
    derivation_L_minus_one,
    sugawara_L,
    virasoro_defect,
)
from .modules import CMP_MAX, CMP_MIN, basis_report, dimension_rows, weight_window
from .partitions import (
    MINUS,
    STRICT,
    ColoredPartition,
    dual_codes,
    enumerate_partitions,
    intersect,
    lt_R_vLambda_map,
    shape_colorings,
    union,
)
from .relations import leading_terms_sweep, relation_defects

SUITES = ("identities", "relations", "leading-terms", "basis", "embeddings", "virasoro", "dims")


def _rec(suite: str, check: str, params: dict, ok: bool, **extra) -> dict:
    out = {"suite": suite, "check": check, "params": params, "pass": bool(ok)}
    out.update(extra)
    return out


# ---------------------------------------------------------------------------
# q-series

def identity_instances() -> list[tuple[str, dict]]:
    """Parameter instances of the congruence-product formulas."""
    inst = [("principal-diagonal", {"n": n}) for n in range(1, 5)]
    inst += [("principal-skew", {"n": n}) for n in range(1, 4)]
    inst += [("principal-product", {"k0": k - k1, "k1": k1})
             for k in range(5) for k1 in range(k + 1) if k != 2 * k1]
    inst += [("half-principal-product", {"k0": k - k1, "k1": k1})
             for k in range(5) for k1 in range(k + 1) if k != 3 * k1 + 1]
    inst += [(f, {"n": n}) for f in ("half-principal-skew", "no-multiples") for n in (2, 3, 4)]
    return inst


def quotient_instances() -> list[tuple[str, dict]]:
    """Parameter instances of the product quotients of ``P`` and ``Q``."""
    inst = [(f, {"k0": k - k1, "k1": k1}) for f in ("principal", "half-principal")
            for k in range(5) for k1 in range(k + 1)]
    for f in ("Q-ratio-a", "Q-ratio-b", "P-ratio"):
        for n in (1, 2, 3):
            for s0, s1 in ((1, 1), (1, 2), (2, 1), (2, 2), (1, 3), (2, 4)):
                inst.append((f, {"n": n, "s0": s0, "s1": s1}))
    return inst


DUALITY_SPECIALIZATIONS = ((1, 2), (2, 1), (1, 1))


def suite_identities(N: int = 200, quotients: bool = True) -> Iterator[dict]:
    for s0, s1 in itertools.product(range(1, 5), repeat=2):
        r = qs.identity_check(qs.weyl_denominator(s0, s1, N), qs.P(s0, s1, N))
        yield _rec("identities", "denominator", {"s0": s0, "s1": s1, "N": N}, r, detail=r.report())
    inst = identity_instances() + (quotient_instances() if quotients else [])
    for formula, p in inst:
        k0, k1, s0, s1 = qs.formula_character_params(formula, **p)
        r = qs.identity_check(qs.product_formula(formula, N, **p), qs.specialized_character(k0, k1, s0, s1, N))
        yield _rec("identities", formula, {**p, "N": N}, r, detail=r.report())
    for s0, s1 in DUALITY_SPECIALIZATIONS:
        for k in range(4):
            for k1 in range(k + 1):
                r = qs.identity_check(qs.weyl_numerator(k - k1, k1, s0, s1, N),
                                      qs.dual_numerator(k - k1, k1, s0, s1, N))
                yield _rec("identities", "duality", {"k0": k - k1, "k1": k1, "s0": s0, "s1": s1, "N": N},
                           r, detail=r.report())


# ---------------------------------------------------------------------------
# module computations

def suite_relations(hw: HighestWeight, depth: int, n_range=range(-6, 7), max_y0: int = 1) -> Iterator[dict]:
    """Identities among relations on every basis vector down to ``-depth``.

    One record per identity and ``n``; Verma vectors carry at most ``max_y0``
    factors ``y(0)``.
    """
    vectors = []
    for d in range(0, -depth - 1, -1):
        if hw.is_verma:
            vectors += list(enumerate_partitions(MINUS, d, max_y0=max_y0))
        else:
            vectors += list(enumerate_partitions(STRICT, d))
    for n in n_range:
        bad: dict = {}
        keys = None
        for pi in vectors:
            res = relation_defects(n, basis_vector(hw, pi))
            keys = keys or list(res)
            for key, vec in res.items():
                if vec and key not in bad:
                    bad[key] = str(pi)
        for name, i in keys or []:
            params = {"k0": hw.k0, "k1": hw.k1, "kind": hw.kind, "n": n, "vectors": len(vectors)}
            if i is not None:
                params["i"] = i
            extra = {"vector": bad[(name, i)]} if (name, i) in bad else {}
            yield _rec("relations", name, params, (name, i) not in bad, **extra)


def suite_leading_terms(k: int, n_range=range(-12, 1)) -> Iterator[dict]:
    """Computed leading terms against the closed-form catalogs."""
    sweep = leading_terms_sweep(k, None, n_range)
    for (i, n), lt in sorted(sweep.items()):
        if n > -k - 1:
            continue
        expected = ColoredPartition(shape_colorings(k, n)[i])
        yield _rec("leading-terms", "translation-invariant", {"k": k, "i": i, "n": n},
                   lt == expected, got=str(lt), expected=str(expected))
    for k1 in range(k + 1):
        hw = HighestWeight(k - k1, k1)
        gens = {v: ColoredPartition(p) for p, v in lt_R_vLambda_map(hw.k0, hw.k1, min(n_range)).items()}
        sweep = leading_terms_sweep(k, hw, n_range)
        for (i, n), lt in sorted(sweep.items()):
            want = gens.get((i, n))
            yield _rec("leading-terms", "verma", {"k0": hw.k0, "k1": hw.k1, "i": i, "n": n},
                       lt == want, got=str(lt) if lt else None, expected=str(want) if want else None)


def suite_basis(hw: HighestWeight, depth: int, margin: int = 2) -> Iterator[dict]:
    for d in range(0, -depth - 1, -1):
        lo, hi = weight_window(hw, d)
        for w in range(hi + margin, lo - margin - 1, -1):
            for choice in (CMP_MIN, CMP_MAX):
                r = basis_report(hw, d, w, choice)
                yield _rec("basis", choice, {"k0": hw.k0, "k1": hw.k1, "d": d, "w": w}, r.ok,
                           members=r.members, rank=r.rank_submodule)


def suite_dims(hw: HighestWeight, depth: int, margin: int = 2) -> Iterator[dict]:
    for row in dimension_rows(hw, depth, margin):
        yield _rec("dims", "dimension", {"k0": hw.k0, "k1": hw.k1, "d": row.d, "w": row.w},
                   row.match, dim_L=row.dim_L, count=row.count_conditions)


def suite_virasoro(hw: HighestWeight, depth: int, modes: int = 3, max_y0: int = 1) -> Iterator[dict]:
    """Virasoro relations on basis vectors, and the derivation form of ``L_{-1}``."""
    pis = []
    for d in range(0, -depth - 1, -1):
        if hw.is_verma:
            pis += list(enumerate_partitions(MINUS, d, max_y0=max_y0))
        else:
            pis += list(enumerate_partitions(STRICT, d))
    c = central_charge(hw.level)
    for m in range(-modes, modes + 1):
        for n in range(-modes, modes + 1):
            bad = None
            for pi in pis:
                if virasoro_defect(m, n, basis_vector(hw, pi)):
                    bad = str(pi)
                    break
            params = {"k0": hw.k0, "k1": hw.k1, "kind": hw.kind, "m": m, "n": n,
                      "central_charge": str(c), "vectors": len(pis)}
            yield _rec("virasoro", "commutator", params, bad is None, **({"vector": bad} if bad else {}))
    if not hw.is_verma:
        bad = None
        for pi in pis:
            v = basis_vector(hw, pi)
            if sugawara_L(-1, v) != derivation_L_minus_one(v):
                bad = str(pi)
                break
        yield _rec("virasoro", "L-1-derivation", {"k": hw.level, "vectors": len(pis)}, bad is None,
                   **({"vector": bad} if bad else {}))


# ---------------------------------------------------------------------------
# embeddings

def window_leading_terms(k: int, j: int = 0, width: int = 3) -> list[tuple[int, ...]]:
    """Relation leading terms with all parts in degrees ``j-width+1 .. j``."""
    lo = j - width + 1
    out = []
    for n in range((k + 1) * lo, (k + 1) * j + 1):
        for _, rho in sorted(shape_colorings(k, n).items()):
            if rho[0] // 3 >= lo and rho[-1] // 3 <= j:
                out.append(rho)
    return out


def classification_sweep(k: int, j: int = 0) -> Iterator[dict]:
    """Classify every overlapping pair of leading terms on three adjacent degrees.

    Each record checks completeness (no inconsistency), uniqueness of the
    exceptional family, duality of the tag and family set, and that an
    exceptional union admits exactly two embeddings.
    """
    terms = window_leading_terms(k, j)
    for r1, r2 in itertools.combinations(terms, 2):
        if not intersect(r1, r2):
            continue
        pi = union(r1, r2)
        if len(pi) < k + 3:
            continue
        params = {"k": k, "rho1": str(ColoredPartition(r1)), "rho2": str(ColoredPartition(r2))}
        e1, e2 = emb.embeddings_of_union(r1, r2, k)
        try:
            c = emb.classify_pair(e1, e2, k)
        except emb.ClassificationError as exc:
            yield _rec("embeddings", "classify", params, False, error=str(exc))
            continue
        d1, d2 = emb.embeddings_of_union(dual_codes(r1), dual_codes(r2), k)
        dc = emb.classify_pair(d1, d2, k)
        dual_ok = dc.tag == c.tag and tuple(sorted(emb.DUAL_FAMILY[f] for f in c.families)) == dc.families
        yield _rec("embeddings", "duality", params, dual_ok, tag=c.tag, dual_tag=dc.tag)
        if c.tag == emb.EXCEPTIONAL:
            yield _rec("embeddings", "unique-family", params, len(c.families) == 1,
                       families=list(c.families))
            count = len(emb.find_embeddings(pi, k))
            yield _rec("embeddings", "two-embeddings", params, count == 2, embeddings=count)
        else:
            yield _rec("embeddings", "classify", params, True, tag=c.tag)


def suite_embeddings(k: int) -> Iterator[dict]:
    for entry in emb.length_k2_catalog(k):
        n = len(emb.find_embeddings(entry.pi, k))
        yield _rec("embeddings", "catalog-count", {"k": k, "pi": str(entry.pi)}, n == entry.count,
                   listed=entry.count, found=n)
    yield from classification_sweep(k)

"""End-to-end acceptance criteria, one test each.

Every test prints a single ``PASS``/``FAIL`` line (also collected into the
terminal summary) with the runtime and the number of exact checks performed.
Arithmetic is exact throughout; nothing here has a tolerance.
"""

import time
from fractions import Fraction

import pytest

from conftest import ACCEPTANCE_LINES
from sl2affine.liealg import HighestWeight, central_charge
from sl2affine.qseries import (
    conditioned_partition_gf,
    distinct_partition_counts,
    identity_check,
    specialized_character,
    window_partition_counts,
)
from sl2affine.suites import (
    suite_basis,
    suite_dims,
    suite_embeddings,
    suite_identities,
    suite_leading_terms,
    suite_relations,
    suite_virasoro,
)

from oracles import distinct_counts, window_counts_bruteforce


def weights(levels):
    return [HighestWeight(k - k1, k1) for k in levels for k1 in range(k + 1)]


def report(number, title, records, started, budget):
    elapsed = time.perf_counter() - started
    failed = [r for r in records if not r["pass"]]
    ok = not failed and elapsed < budget
    line = (f"{'PASS' if ok else 'FAIL'} criterion {number} {title}: {len(records) - len(failed)}/{len(records)} "
            f"checks in {elapsed:.1f}s (budget {budget}s)")
    print("\n" + line)
    ACCEPTANCE_LINES.append(line)
    return ok, failed, elapsed


def test_1_standard_module_dimensions():
    t = time.perf_counter()
    recs = []
    for hw in weights([1]):
        recs += suite_dims(hw, 6)
    for hw in weights([2]):
        recs += suite_dims(hw, 5)
    ok, failed, elapsed = report(1, "dim L(Lambda) = conditioned partition count", recs, t, 300)
    assert not failed, failed[:3]
    assert elapsed < 300


def test_2_relations_among_relations():
    t = time.perf_counter()
    recs = []
    for hw in weights([0, 1, 2]):
        recs += suite_relations(hw, 4, n_range=range(-6, 7), max_y0=1)
    ok, failed, elapsed = report(2, "identities among relations vanish on M(Lambda)", recs, t, 120)
    assert not failed, failed[:3]
    assert elapsed < 120


def test_3_leading_terms():
    t = time.perf_counter()
    recs = []
    for k in range(4):
        recs += suite_leading_terms(k, range(-12, 1))
    ok, failed, elapsed = report(3, "computed leading terms match the catalogs", recs, t, 120)
    assert not failed, failed[:3]
    assert elapsed < 120


def test_4_submodule_basis():
    t = time.perf_counter()
    recs = []
    for hw in weights([0, 1, 2]):
        recs += suite_basis(hw, 5)
    ok, failed, elapsed = report(4, "explicit basis of the maximal submodule (min and max choices)", recs, t, 300)
    assert not failed, failed[:3]
    assert elapsed < 300


def test_5_product_identities():
    t = time.perf_counter()
    recs = list(suite_identities(200))
    ok, failed, elapsed = report(5, "product formulas, denominator and duality to q^200", recs, t, 60)
    assert not failed, failed[:3]
    assert elapsed < 60


def test_6_distinct_parts_identity():
    t = time.perf_counter()
    N = 30
    distinct = distinct_counts(N)
    recs = [
        {"check": "window-enumeration", "pass": window_partition_counts(N) == distinct},
        {"check": "window-oracle", "pass": window_counts_bruteforce(N) == distinct},
        {"check": "distinct-enumeration", "pass": distinct_partition_counts(N) == distinct},
        {"check": "gf-vs-character",
         "pass": bool(identity_check(conditioned_partition_gf(1, 1, (1, 2), N), specialized_character(1, 1, 1, 2, N)))},
        {"check": "character-vs-distinct", "pass": specialized_character(1, 1, 1, 2, N).coeffs == distinct},
    ]
    ok, failed, elapsed = report(6, "at most twice under windows = distinct parts, n <= 30", recs, t, 30)
    assert not failed, failed
    assert elapsed < 30


def test_7_embedding_classification():
    t = time.perf_counter()
    recs = []
    for k in range(3):
        recs += suite_embeddings(k)
    ok, failed, elapsed = report(7, "pair classification: complete, dual, exactly one family", recs, t, 120)
    for r in failed:
        print("   ", r["params"], r["check"], r.get("families"))
    assert not failed, f"{len(failed)} checks failed, first: {failed[0]}"
    assert elapsed < 120


def test_8_sugawara_virasoro():
    t = time.perf_counter()
    recs = []
    for k in range(4):
        assert central_charge(k) == Fraction(3 * k, k + 2)
        recs += suite_virasoro(HighestWeight.generalized(k), 5, modes=3)
        recs += suite_virasoro(HighestWeight(0, k), 5, modes=3, max_y0=1)
    ok, failed, elapsed = report(8, "Virasoro relations with c = 3k/(k+2), derivation form of L_-1", recs, t, 120)
    assert not failed, failed[:3]
    assert elapsed < 120

import itertools

import pytest

from sl2affine.embeddings import (
    ADJACENT,
    DISJOINT,
    DUAL_FAMILY,
    EXCEPTIONAL,
    FAMILIES,
    IDENTICAL,
    LINKED,
    Embedding,
    classify_pair,
    dual_embedding,
    embeddings_of_union,
    family_indices,
    family_member,
    find_embeddings,
    length_k2_catalog,
    linked,
    match_families,
    multi_embedding_partitions,
    pair_report,
)
from sl2affine.partitions import ColoredPartition, catalog_lt_R, contains, dual_codes, parse_partition, union
from sl2affine.suites import classification_sweep, window_leading_terms

P = parse_partition


def brute_embeddings(pi, k):
    """Scan every relation label whose degree fits inside ``pi``."""
    lo = sum(sorted(c // 3 for c in pi.codes)[: k + 1])
    hi = sum(sorted(c // 3 for c in pi.codes)[-(k + 1):])
    out = []
    for n in range(lo, hi + 1):
        for m in range(-k - 1, k + 2):
            if contains(pi.codes, catalog_lt_R(k, m, n).codes):
                out.append((m, n))
    return sorted(out, key=lambda t: (t[1], t[0]))


def listed_shape(pi, k, j=-1):
    """Shapes j^(k+2), (j-1)^a j^b with a, b >= 1, and (j-1) j^k (j+1)."""
    degs = sorted(c // 3 for c in pi.codes)
    if set(degs) == {j}:
        return True
    if set(degs) == {j - 1, j}:
        return True
    return degs == [j - 1] + [j] * k + [j + 1]


class TestFind:
    def test_two_embeddings(self):
        embs = find_embeddings(P("x(-3)x(-2)x(-1)"), 1)
        assert [str(e.rho) for e in embs] == ["x(-3)x(-2)", "x(-2)x(-1)"]

    def test_short_partition(self):
        assert find_embeddings(P("x(-2)"), 1) == []
        assert find_embeddings(P("y(-1)h(-1)"), 2) == []

    def test_leading_term_embeds_in_itself(self):
        embs = find_embeddings(P("y(-1)h(-1)"), 1)
        assert [(e.m, e.n) for e in embs] == [(-1, -2)]

    @pytest.mark.parametrize("k", range(0, 3))
    def test_against_label_scan(self, k):
        parts = [3 * d + c for d in (-3, -2, -1) for c in range(3)]
        for combo in itertools.combinations_with_replacement(parts, k + 2):
            pi = ColoredPartition(combo)
            got = [(e.m, e.n) for e in find_embeddings(pi, k)]
            assert got == brute_embeddings(pi, k)
            assert len(set(got)) == len(got)


class TestClassify:
    def pair(self, a, b, k):
        return embeddings_of_union(P(a), P(b), k)

    def test_linked_example(self):
        e1, e2 = self.pair("x(-3)^2 x(-2)", "x(-2)^2 x(-1)", 2)
        assert classify_pair(e1, e2, 2).tag == LINKED
        assert linked(e1, e2, 2)
        pi = union(e1.rho.codes, e2.rho.codes)
        assert P("x(-3)x(-2)^2").codes in {e.rho.codes for e in find_embeddings(pi, 2)}

    def test_exceptional_example(self):
        e1, e2 = self.pair("x(-3)^2 x(-2)", "x(-2)x(-1)^2", 2)
        c = classify_pair(e1, e2, 2)
        assert (c.tag, c.family, c.families) == (EXCEPTIONAL, 12, (12,))
        assert len(find_embeddings(e1.pi, 2)) == 2

    def test_disjoint_identical_adjacent(self):
        e1, e2 = self.pair("x(-3)x(-2)", "y(-1)y(0)", 1)
        assert classify_pair(e1, e2, 1).tag == DISJOINT
        own = Embedding(e1.rho, e1.rho, e1.m, e1.n)
        assert classify_pair(own, own, 1).tag == IDENTICAL
        # overlapping with a union of length k+2: nothing to link through
        a, b = self.pair("y(-1)h(-1)", "h(-1)^2", 1)
        assert classify_pair(a, b, 1).tag == ADJACENT

    def test_wrong_ambient(self):
        e1, e2 = self.pair("x(-3)x(-2)", "x(-2)x(-1)", 1)
        bigger = ColoredPartition(P("x(-3)x(-2)x(-1)y").codes)
        with pytest.raises(ValueError):
            classify_pair(Embedding(bigger, e1.rho, e1.m, e1.n), e2, 1)

    def test_dual_embedding(self):
        for e in find_embeddings(P("x(-3)h(-2)x(-2)y(-1)"), 1):
            d = dual_embedding(e)
            assert d.rho.codes == catalog_lt_R(1, d.m, d.n).codes
            assert dual_embedding(d) == e

    @pytest.mark.parametrize("k", range(0, 3))
    def test_sweep_is_complete_and_dual(self, k):
        recs = list(classification_sweep(k))
        assert all(r["check"] != "classify" or r["pass"] for r in recs)
        assert all(r["pass"] for r in recs if r["check"] in ("duality", "two-embeddings"))

    def test_short_levels_have_no_exceptional_pairs(self):
        for k in (0, 1):
            recs = list(classification_sweep(k))
            assert not [r for r in recs if r["check"] == "unique-family"]

    def test_family_list_overlaps(self):
        # y(j-1)^a x(j-1)^a y(j)^(k+1-a) is produced by two families of the list
        k, j = 2, 0
        pi = P("y(-1)^2 x(-1)^2 y")
        assert family_member(6, k, j, a=2, b=0) == pi
        assert family_member(5, k, j, a=1, b=2) == pi
        assert family_indices(pi, k) == {5, 6}


class TestFamilies:
    @pytest.mark.parametrize("k", range(2, 5))
    def test_members_have_two_unlinked_embeddings(self, k):
        for idx in FAMILIES:
            for a, b, c in itertools.product(range(k + 2), repeat=3):
                pi = family_member(idx, k, 0, a, b, c)
                if pi is None:
                    continue
                embs = find_embeddings(pi, k)
                assert len(embs) == 2, (idx, a, b, c)
                e1, e2 = embs
                assert union(e1.rho.codes, e2.rho.codes) == pi.codes
                assert pi.length >= k + 3
                assert not linked(e1, e2, k)

    @pytest.mark.parametrize("k", range(2, 5))
    def test_dual_of_member_is_in_dual_family(self, k):
        for idx in FAMILIES:
            for a, b, c in itertools.product(range(k + 2), repeat=3):
                pi = family_member(idx, k, 0, a, b, c)
                if pi is None:
                    continue
                d = ColoredPartition(dual_codes(pi.codes))
                assert DUAL_FAMILY[idx] in family_indices(d, k)

    def test_pairing_is_an_involution(self):
        assert all(DUAL_FAMILY[DUAL_FAMILY[i]] == i for i in FAMILIES)

    def test_match_reports_parameters(self):
        m = match_families(P("x(-3)^2 x(-2)x(-1)^2"), 2)
        assert m and m[0][0] == 12 and set(m[0][2]) == {"a", "b", "c"}

    def test_unknown_family(self):
        with pytest.raises(ValueError):
            family_member(15, 2, 0)


class TestCatalog:
    @pytest.mark.parametrize("k", range(1, 5))
    def test_matches_brute_force(self, k):
        listed = {e.pi: e.count for e in length_k2_catalog(k)}
        brute = {p: n for p, n in multi_embedding_partitions(k).items() if listed_shape(p, k)}
        assert listed == brute

    def test_level_one_single_degree(self):
        listed = {str(e.pi): e.count for e in length_k2_catalog(1) if {c // 3 for c in e.pi.codes} == {-1}}
        assert listed == {"h(-1)x(-1)^2": 2, "h(-1)^2 x(-1)": 2, "y(-1)h(-1)x(-1)": 2,
                          "y(-1)^2 h(-1)": 2, "y(-1)h(-1)^2": 2}

    @pytest.mark.parametrize("k", range(1, 4))
    def test_counts_are_two_or_three(self, k):
        for e in length_k2_catalog(k):
            assert e.count in (2, 3)
            assert e.pi.length == k + 2
            assert len(find_embeddings(e.pi, k)) == e.count

    def test_starred_entries(self):
        starred = [e for e in length_k2_catalog(3) if e.starred]
        assert starred
        assert all(e.count == 2 for e in starred)

    def test_degenerate_level_is_partial(self):
        listed = {e.pi for e in length_k2_catalog(0)}
        brute = {p for p in multi_embedding_partitions(0) if listed_shape(p, 0)}
        assert listed < brute


class TestReport:
    def test_format(self):
        rep = pair_report(P("x(-3)^2 x(-2)x(-1)^2"), 2)
        assert rep["pi"] == "x(-3)^2 x(-2)x(-1)^2"
        assert rep["embeddings"] == [{"m": 3, "n": -8, "rho": "x(-3)^2 x(-2)"},
                                     {"m": 3, "n": -4, "rho": "x(-2)x(-1)^2"}]
        assert rep["pair_classes"] == [{"i": 0, "j": 1, "tag": EXCEPTIONAL, "family": 12}]

    def test_window_terms(self):
        terms = window_leading_terms(1)
        assert all(-2 <= c // 3 <= 0 for t in terms for c in t)
        assert len(terms) == len(set(terms))

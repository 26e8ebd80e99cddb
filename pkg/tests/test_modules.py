import pytest

from sl2affine.liealg import HighestWeight
from sl2affine.modules import (
    CMP_MAX,
    CMP_MIN,
    aggregate,
    basis_check,
    basis_report,
    character_table,
    conditioned_count,
    dimension_rows,
    exact_order,
    ideal_members,
    l_dimension,
    m1_grade,
    weight_window,
)
from sl2affine.partitions import ColoredPartition, catalog_lt_R_vLambda, in_ideal, sort_key
from sl2affine.qseries import product_formula, specialized_character

from oracles import bareiss_rank

LEVELS = [(k - k1, k1) for k in range(3) for k1 in range(k + 1)]


class TestGrades:
    def test_vacuum_line(self):
        hw = HighestWeight(1, 0)
        assert l_dimension(hw, 0, 0) == 1
        g = m1_grade(hw, 0, -1)
        assert (g.dim, g.rank) == (1, 1)

    def test_first_relation(self):
        hw = HighestWeight(1, 0)
        # x(-1)^2 v spans a line killed in the standard module
        g = m1_grade(hw, -2, 2)
        assert g.rank == g.dim == 1
        assert [l_dimension(hw, -1, w) for w in (-1, 0, 1)] == [1, 1, 1]

    def test_empty_grade(self):
        hw = HighestWeight(1, 1)
        g = m1_grade(hw, -1, 5)
        assert g.dim == g.rank == 0

    def test_positive_degree_rejected(self):
        with pytest.raises(ValueError):
            m1_grade(HighestWeight(1, 0), 1, 0)

    def test_generalized_rejected(self):
        with pytest.raises(ValueError):
            m1_grade(HighestWeight.generalized(1), -1, 0)

    @pytest.mark.parametrize("k0,k1", LEVELS)
    def test_rank_against_dense_oracle(self, k0, k1):
        hw = HighestWeight(k0, k1)
        for d in range(0, -4, -1):
            lo, hi = weight_window(hw, d)
            for w in range(lo - 1, hi + 2):
                g = m1_grade(hw, d, w)
                assert g.rank == bareiss_rank(g.matrix())
                for r in g.rows:
                    assert r and all(c >= min(r) for c in r)

    def test_depth_zero_row(self):
        for k0, k1 in [(2, 1), (0, 3), (1, 0)]:
            hw = HighestWeight(k0, k1)
            rows = [r for r in dimension_rows(hw, 0, margin=0) if r.dim_L]
            assert len(rows) == k1 + 1
            assert all(r.dim_L == 1 for r in rows)

    def test_weight_window(self):
        assert weight_window(HighestWeight(0, 0), -3) == (0, 0)
        lo, hi = weight_window(HighestWeight(1, 1), 0)
        assert (lo, hi) == (-1, 0)
        for k0, k1 in LEVELS:
            hw = HighestWeight(k0, k1)
            for d in range(0, -6, -1):
                lo, hi = weight_window(hw, d)
                for w in (lo - 1, hi + 1):
                    assert w * w + k1 * w - d * hw.level > 0


class TestDimensions:
    @pytest.mark.parametrize("k0,k1", LEVELS)
    def test_quotient_matches_conditioned_count(self, k0, k1):
        hw = HighestWeight(k0, k1)
        rows = dimension_rows(hw, 5, margin=2)
        assert rows and all(r.match for r in rows)
        for r in rows:
            assert r.dim_M - r.rank_M1 == r.dim_L
            assert r.count_conditions == conditioned_count(hw, r.d, r.w)

    def test_outside_window_is_zero(self):
        hw = HighestWeight(1, 1)
        for d in range(0, -5, -1):
            lo, hi = weight_window(hw, d)
            assert l_dimension(hw, d, hi + 1) == 0
            assert l_dimension(hw, d, lo - 1) == 0

    def test_row_dict(self):
        row = dimension_rows(HighestWeight(1, 0), 0, margin=0)[0].as_dict()
        assert set(row) == {"k0", "k1", "d", "w", "dim_M", "rank_M1", "dim_L", "count_conditions", "match"}


class TestBasis:
    @pytest.mark.parametrize("k0,k1", LEVELS[1:])
    @pytest.mark.parametrize("choice", [CMP_MIN, CMP_MAX])
    def test_basis(self, k0, k1, choice):
        hw = HighestWeight(k0, k1)
        for d in range(0, -5, -1):
            lo, hi = weight_window(hw, d)
            for w in range(lo - 1, hi + 2):
                assert basis_check(hw, d, w, choice), (d, w)

    def test_report_fields(self):
        hw = HighestWeight(1, 0)
        rep = basis_report(hw, -3, 1)
        assert rep.ok
        assert rep.members == rep.rank_submodule == m1_grade(hw, -3, 1).rank

    def test_leading_terms_are_ideal(self):
        hw = HighestWeight(1, 1)
        gens = catalog_lt_R_vLambda(1, 1, -4)
        for d in range(0, -4, -1):
            for w in range(-3, 4):
                g = m1_grade(hw, d, w)
                lts = g.leading_terms()
                members = {ColoredPartition(p) for p in g.basis if in_ideal(ColoredPartition(p), gens)}
                assert lts == members

    def test_custom_choice(self):
        hw = HighestWeight(1, 0)
        members = ideal_members(hw, -4, 1)
        pick = {ColoredPartition(p): c[-1] for p, c in members.items()}
        assert basis_check(hw, -4, 1, pick)
        assert basis_check(hw, -4, 1, lambda pi: min(members[pi.codes], key=sort_key))

    def test_invalid_choice(self):
        hw = HighestWeight(1, 0)
        members = ideal_members(hw, -3, 0)
        bogus = {ColoredPartition(p): ColoredPartition(p) for p in members}
        with pytest.raises(ValueError):
            basis_report(hw, -3, 0, bogus)


class TestCharacters:
    def test_principal_level_one(self):
        hw = HighestWeight(1, 0)
        N = exact_order(hw, 8, 1, 1)
        got = aggregate(character_table(hw, 8), 1, 1, N)
        assert got == list(specialized_character(1, 0, 1, 1, N).coeffs)
        assert got == list(product_formula("principal-product", N, k0=1, k1=0).coeffs)

    def test_level_two_against_no_multiples(self):
        hw = HighestWeight(1, 1)
        N = exact_order(hw, 6, 1, 2)
        got = aggregate(character_table(hw, 6), 1, 2, N)
        assert N >= 6
        assert got == list(product_formula("no-multiples", N, n=2).coeffs)

    def test_exact_order_is_conservative(self):
        hw = HighestWeight(1, 1)
        for s0, s1 in [(1, 1), (1, 2), (2, 1)]:
            N = exact_order(hw, 4, s0, s1)
            for d in range(-5, -12, -1):
                lo, hi = weight_window(hw, d)
                for w in range(lo, hi + 1):
                    assert -d * (s0 + s1) - w * s1 > N

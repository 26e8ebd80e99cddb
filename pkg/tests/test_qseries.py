from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sl2affine.qseries import (
    FORMULAS,
    P,
    Q,
    QSeries,
    Specialization,
    conditioned_partition_gf,
    distinct_partition_counts,
    dual_numerator,
    formula_character_params,
    identity_check,
    image_partition_gf,
    prod_congruence,
    product_formula,
    product_where,
    specialized_character,
    weyl_denominator,
    weyl_numerator,
    window_partition_counts,
)
from sl2affine.suites import identity_instances, quotient_instances

from oracles import brute_product, distinct_counts, partition_counts, window_counts_bruteforce

N = 12
series = st.lists(st.integers(-5, 5), min_size=N + 1, max_size=N + 1).map(QSeries)
units = st.lists(st.integers(-5, 5), min_size=N, max_size=N).flatmap(
    lambda tail: st.sampled_from([1, -1]).map(lambda c0: QSeries([c0] + tail)))


class TestRing:
    @given(series, series, series)
    def test_laws(self, a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == QSeries.zero(N)
        assert a * QSeries.one(N) == a

    @given(units)
    def test_inverse(self, u):
        assert u * u.inverse() == QSeries.one(N)
        assert u.inverse().is_integral()

    def test_fractional_inverse(self):
        inv = QSeries([2, 1], 3).inverse()
        assert inv[0] == Fraction(1, 2)
        with pytest.raises(ArithmeticError):
            inv.integral()
        with pytest.raises(ZeroDivisionError):
            QSeries([0, 1], 3).inverse()

    def test_order_mismatch(self):
        with pytest.raises(ValueError):
            QSeries.one(3) + QSeries.one(4)

    def test_text(self):
        assert str(QSeries([1, -1, 0, 2], 3)) == "1 - q + 2*q^3 + ..."
        assert QSeries([1, 2], 4).truncate(1) == QSeries([1, 2])


class TestProducts:
    def test_odd_parts(self):
        got = prod_congruence([], [[(1, 2)]], 10)
        assert got.coeffs[:7] == [1, 1, 1, 2, 2, 3, 4]
        assert got.coeffs == partition_counts(10, lambda r: r % 2 == 1)

    def test_empty(self):
        assert prod_congruence([], [], 5) == QSeries.one(5)

    def test_plus_classes(self):
        got = prod_congruence([[(1, 6), (5, 6)]], [], 6)
        want = brute_product(6, [(r, 1, False) for r in range(1, 7) if r % 6 in (1, 5)])
        assert got.coeffs == want == [1, 1, 0, 0, 0, 1, 1]

    @given(st.sets(st.integers(1, 6), max_size=3), st.sets(st.integers(1, 6), max_size=3))
    def test_against_termwise_expansion(self, plus, minus):
        n = 15
        got = prod_congruence([[(r, 7)] for r in plus], [[(r, 7)] for r in minus], n)
        factors = [(r, 1, False) for a in plus for r in range(a, n + 1, 7)]
        factors += [(r, -1, True) for a in minus for r in range(a, n + 1, 7)]
        assert got.coeffs == brute_product(n, factors)

    def test_P_principal(self):
        n = 40
        want = product_where(lambda r: True, n, "minus") * product_where(lambda r: r % 2, n, "minus")
        assert P(1, 1, n) == want

    def test_Q_example(self):
        n = 40
        # m0 = 2, m1 = 1: classes 0, +-2 mod 6 and +-2 mod 12, which overlap
        direct = QSeries.one(n)
        for r in range(1, n + 1):
            for _ in range((r % 6 in (0, 2, 4)) + (r % 12 in (2, 10))):
                direct = direct * QSeries([1] + [0] * (r - 1) + [-1], n)
        assert Q(2, 2, n) == direct

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            P(0, 1, 5)
        with pytest.raises(ValueError):
            Q(1, 0, 5)


class TestWeyl:
    @pytest.mark.parametrize("s0", range(1, 5))
    @pytest.mark.parametrize("s1", range(1, 5))
    def test_denominator_is_product(self, s0, s1):
        assert weyl_denominator(s0, s1, 120) == P(s0, s1, 120)

    def test_constant_terms(self):
        for k0 in range(4):
            for k1 in range(4):
                for s0, s1 in [(1, 1), (1, 2), (3, 1)]:
                    assert weyl_numerator(k0, k1, s0, s1, 10)[0] == 1
                    assert specialized_character(k0, k1, s0, s1, 10)[0] == 1

    @pytest.mark.parametrize("s0,s1", [(1, 2), (2, 1), (1, 1), (2, 3)])
    def test_duality(self, s0, s1):
        for k in range(4):
            for k1 in range(k + 1):
                assert weyl_numerator(k - k1, k1, s0, s1, 150) == dual_numerator(k - k1, k1, s0, s1, 150)

    def test_euler(self):
        ch = specialized_character(1, 1, 1, 2, 60)
        assert ch.coeffs == distinct_counts(60) == partition_counts(60, lambda r: r % 2)

    def test_level_one_principal(self):
        # basic module in the principal picture: partitions into odd parts
        ch = specialized_character(1, 0, 1, 1, 50)
        assert ch.coeffs == partition_counts(50, lambda r: r % 2 == 1)


class TestFormulas:
    @pytest.mark.parametrize("formula,p", identity_instances() + quotient_instances(),
                             ids=lambda x: x if isinstance(x, str) else "-".join(f"{a}{b}" for a, b in x.items()))
    def test_product_equals_character(self, formula, p):
        k0, k1, s0, s1 = formula_character_params(formula, **p)
        res = identity_check(product_formula(formula, 100, **p), specialized_character(k0, k1, s0, s1, 100))
        assert res, res.report()

    def test_diagonal_example(self):
        lhs = product_formula("principal-diagonal", 200, n=2)
        assert identity_check(lhs, specialized_character(1, 1, 1, 1, 200))

    def test_no_multiples_against_counting(self):
        for n in (2, 3, 4):
            got = product_formula("no-multiples", 40, n=n)
            assert got.coeffs == partition_counts(40, lambda r, n=n: r % n != 0)

    def test_all_names_known(self):
        assert len(FORMULAS) == 11
        with pytest.raises(KeyError):
            product_formula("nope", 5)


class TestConditionedPartitions:
    def test_example(self):
        gf = conditioned_partition_gf(1, 1, Specialization(1, 2), 20)
        assert gf[5] == 3
        assert gf[0] == 1

    def test_specialization(self):
        sp = Specialization(1, 2)
        assert [sp.exponent(c, 1) for c in range(3)] == [5, 3, 1]
        assert sp.exponent(0, 0) == 2
        assert Specialization(1, 1).label(-1) == "_1"
        with pytest.raises(ValueError):
            Specialization(0, 1)

    @pytest.mark.parametrize("k0,k1", [(k - k1, k1) for k in range(4) for k1 in range(k + 1)])
    @pytest.mark.parametrize("s", [(1, 1), (1, 2), (2, 1)])
    def test_gf_equals_character(self, k0, k1, s):
        n = 30
        assert conditioned_partition_gf(k0, k1, s, n) == specialized_character(k0, k1, *s, n)

    @pytest.mark.parametrize("k0,k1", [(1, 0), (0, 1), (1, 1), (2, 0), (2, 1)])
    @pytest.mark.parametrize("s", [(1, 1), (1, 2), (2, 1), (1, 3)])
    def test_image_description(self, k0, k1, s):
        n = 14
        assert image_partition_gf(k0, k1, *s, n) == conditioned_partition_gf(k0, k1, s, n)

    def test_window_counts(self):
        n = 22
        assert window_partition_counts(n) == window_counts_bruteforce(n) == distinct_counts(n)
        assert distinct_partition_counts(n) == distinct_counts(n)

    def test_image_needs_distinct_pair(self):
        with pytest.raises(ValueError):
            image_partition_gf(1, 1, 2, 2, 5)


class TestIdentityCheck:
    def test_report(self):
        res = identity_check(QSeries([1, 2, 3]), QSeries([1, 2, 4]))
        assert not res
        assert (res.mismatch_at, res.lhs_value, res.rhs_value) == (2, 3, 4)
        assert "q^2" in res.report()
        assert identity_check(QSeries([1]), QSeries([1])).report() == "equal"

    def test_order_mismatch(self):
        with pytest.raises(ValueError):
            identity_check(QSeries([1, 0]), QSeries([1]))

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from tsslab.words.baumslag import (
    BS_A,
    BS_B,
    BS_IDENTITY,
    BsElement,
    bs_ab,
    bs_classification_check,
    bs_commutes,
    bs_conjugate,
    bs_inverse,
    bs_multiply,
    bs_power,
    bs_swap_search,
    format_bs,
    parse_bs,
)

ns = st.sampled_from([-5, -4, -3, -2, -1, 1, 2, 3, 4, 5])
elements = st.builds(
    BsElement,
    st.fractions(min_value=-8, max_value=8, max_denominator=16),
    st.integers(min_value=-4, max_value=4),
)


class TestArithmetic:
    def test_defining_relation_n2(self):
        lhs = bs_multiply(bs_multiply(BS_B, BS_A, 2), bs_inverse(BS_B, 2), 2)
        assert lhs == BsElement(2, 0)

    @given(ns)
    def test_defining_relation_all_n(self, n):
        lhs = bs_multiply(bs_multiply(BS_B, BS_A, n), bs_inverse(BS_B, n), n)
        assert lhs == bs_power(BS_A, n, n)

    def test_ab_versus_ba(self):
        assert bs_multiply(BS_A, BS_B, 2) == BsElement(1, 1)
        assert bs_multiply(BS_B, BS_A, 2) == BsElement(2, 1)

    @given(elements, ns)
    def test_inverse_exact(self, x, n):
        assert bs_multiply(x, bs_inverse(x, n), n) == BS_IDENTITY
        assert bs_multiply(bs_inverse(x, n), x, n) == BS_IDENTITY

    @given(elements, elements, elements, ns)
    def test_associativity(self, x, y, z, n):
        assert bs_multiply(bs_multiply(x, y, n), z, n) == bs_multiply(x, bs_multiply(y, z, n), n)

    def test_rejects_zero_n(self):
        with pytest.raises(ValueError):
            bs_multiply(BS_A, BS_B, 0)


class TestCommutes:
    def test_a_powers_always_commute(self):
        for n in (-3, -1, 2, 5):
            assert bs_commutes(bs_ab(4, 0), bs_ab(-7, 0), n)

    def test_exponent_identity_radius_6(self):
        # the commutation of a^i b^j and a^x b^y is exactly i + x n^j = x + i n^y
        for n in (-2, -1, 2, 3):
            npow = {t: Fraction(n) ** t for t in range(-6, 7)}
            for i in range(-6, 7):
                for j in range(-6, 7):
                    u = bs_multiply(bs_ab(i, 0), bs_ab(0, j), n)
                    for x in range(-6, 7):
                        for y in range(-6, 7):
                            v = bs_multiply(bs_ab(x, 0), bs_ab(0, y), n)
                            condition = i + x * npow[j] == x + i * npow[y]
                            assert bs_commutes(u, v, n) == condition

    def test_minus_one_even_tails(self):
        assert bs_commutes(bs_ab(1, 2), bs_ab(-1, 2), -1)

    def test_n2_counterexample(self):
        assert not bs_commutes(bs_ab(1, 1), bs_ab(2, 1), 2)


class TestSwapSearch:
    def test_witness_b_for_inverse_powers(self):
        res = bs_swap_search(bs_ab(3, 0), bs_ab(-3, 0), -1, 6)
        assert res.witness == BS_B

    def test_even_tail_needs_odd_f(self):
        res = bs_swap_search(bs_ab(2, 2), bs_ab(-2, 2), -1, 6)
        assert res.witness is not None and res.witness.t % 2 == 1

    def test_degenerate_identity_witness(self):
        res = bs_swap_search(BS_A, BS_A, 2, 6)
        assert res.witness == BS_IDENTITY

    def test_exhausts_for_rigid_n(self):
        res = bs_swap_search(bs_ab(1, 0), bs_ab(2, 0), 2, 6)
        assert res.exhausted
        assert res.describe() == "exhausted(6)"

    def test_rejects_non_commuting(self):
        with pytest.raises(ValueError):
            bs_swap_search(bs_ab(1, 1), bs_ab(2, 1), 2, 6)

    def test_witness_swaps_exactly(self):
        u, v = bs_ab(2, 4), bs_ab(-2, 4)
        res = bs_swap_search(u, v, -1, 6)
        h = res.witness
        assert bs_conjugate(h, u, -1) == v
        assert bs_conjugate(h, v, -1) == u


class TestClassification:
    def test_minus_one_certifies_pairs(self):
        report = bs_classification_check(-1, 3, bound=5)
        assert report.branch == "inverse_pairs"
        assert report.all_ok
        assert all(i.verdict == "pass" for i in report.instances)

    def test_rigid_n_exhausts(self):
        report = bs_classification_check(2, 3, bound=5)
        assert report.branch == "rigid"
        assert report.all_ok
        assert all(i.verdict.startswith("exhausted") for i in report.instances)

    def test_minus_one_radius_5(self):
        # every pair {a^x b^2m, a^-x b^2m} with |x|, |m| <= 5 certifies, and
        # third elements within radius 3 are excluded
        report = bs_classification_check(-1, 5, bound=6, third_radius=3)
        assert report.all_ok
        assert len(report.instances) == 5 * 11

    def test_abelian_branch(self):
        report = bs_classification_check(1, 2)
        assert report.branch == "abelian" and report.all_ok

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            bs_classification_check(0, 2)

    def test_unique_solution_detail_present(self):
        report = bs_classification_check(3, 2, bound=4)
        details = {i.detail for i in report.instances}
        assert any("n^f = -1" in d for d in details)


class TestTextForm:
    def test_format(self):
        assert format_bs(bs_ab(Fraction(3, 4), -2), 2) == "a^3/2^2 b^-2"
        assert format_bs(BS_A, 2) == "a^1/2^0 b^0"

    def test_negative_base(self):
        e = BsElement(Fraction(-1, 2), 1)
        text = format_bs(e, -2)
        assert parse_bs(text, -2) == e

    @given(elements)
    def test_roundtrip_n3(self, x):
        # restrict to Z[1/3] elements
        num, den = x.r.numerator, x.r.denominator
        if den not in (1, 3, 9):
            return
        assert parse_bs(format_bs(x, 3), 3) == x

    def test_rejects_unnormalized(self):
        with pytest.raises(ValueError, match="did you mean"):
            parse_bs("a^4/2^2 b^0", 2)

    def test_rejects_malformed(self):
        with pytest.raises(ValueError):
            parse_bs("a^1 b^0", 2)
        with pytest.raises(ValueError):
            parse_bs("a^1/3^0 b^0", 2)

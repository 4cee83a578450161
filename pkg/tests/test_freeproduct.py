import itertools

import pytest
from hypothesis import given, strategies as st

from tsslab.groups import make_cyclic, make_dihedral, make_symmetric
from tsslab.tss import max_tss_size
from tsslab.words.freeproduct import (
    FpWord,
    format_fp,
    fp_ball,
    fp_commuting_cliques,
    fp_conjugate,
    fp_cyclic_reduce,
    fp_from_syllables,
    fp_identity,
    fp_inverse,
    fp_multiply,
    fp_normalize,
    fp_power,
    fp_primitive_root,
    fp_tss_analyze,
    parse_fp,
    parse_fp_raw,
)

Z3 = make_cyclic(3)
Z3B = make_cyclic(3)
D8 = make_dihedral(4)
S3 = make_symmetric(3)


def dw(*syls):
    return fp_from_syllables(D8, S3, syls)


def zw(*syls):
    return fp_from_syllables(Z3, Z3B, syls)


@st.composite
def raw_syllables(draw):
    n = draw(st.integers(0, 8))
    return [
        (draw(st.integers(0, 1)), draw(st.integers(0, 5)))
        for _ in range(n)
    ]


def _valid(syl):
    tag, elem = syl
    order = D8.order if tag == 0 else S3.order
    return elem < order


class TestNormalForm:
    def test_inverse_cancels(self):
        w = dw((0, 1))
        assert fp_multiply(w, fp_inverse(w)).is_identity()

    def test_full_cascade(self):
        # (g1 h g2) * (g2^-1 h^-1) = g1
        u = dw((0, 1), (1, 2), (0, 3))
        v = dw((0, D8.inv[3]), (1, S3.inv[2]))
        assert fp_multiply(u, v) == dw((0, 1))

    def test_no_merge_across_factors(self):
        u = dw((0, 1), (1, 2))
        v = dw((0, 2), (1, 1))
        assert len(fp_multiply(u, v)) == 4

    def test_rejects_identity_syllable_in_normal_form(self):
        with pytest.raises(ValueError):
            FpWord(D8, S3, ((0, 0),))

    def test_rejects_adjacent_same_factor(self):
        with pytest.raises(ValueError):
            FpWord(D8, S3, ((0, 1), (0, 2)))

    @given(raw_syllables())
    def test_normalize_idempotent(self, raw):
        raw = [s for s in raw if _valid(s)]
        w = fp_normalize(D8, S3, raw)
        assert fp_normalize(D8, S3, w.syllables) == w

    @given(raw_syllables())
    def test_length_never_increases(self, raw):
        raw = [s for s in raw if _valid(s)]
        assert len(fp_normalize(D8, S3, raw)) <= len(raw)

    @given(raw_syllables(), raw_syllables(), raw_syllables())
    def test_associativity(self, a, b, c):
        u = fp_normalize(D8, S3, [s for s in a if _valid(s)])
        v = fp_normalize(D8, S3, [s for s in b if _valid(s)])
        w = fp_normalize(D8, S3, [s for s in c if _valid(s)])
        assert fp_multiply(fp_multiply(u, v), w) == fp_multiply(u, fp_multiply(v, w))


class TestCyclicReduce:
    def test_factor_conjugate(self):
        w = dw((0, 1), (1, 2), (0, 3))
        core, conj = fp_cyclic_reduce(w)
        assert len(core) <= 2
        assert fp_multiply(fp_multiply(conj, core), fp_inverse(conj)) == w

    def test_already_reduced(self):
        w = dw((0, 1), (1, 2))
        core, conj = fp_cyclic_reduce(w)
        assert core == w and conj.is_identity()

    def test_rotation_with_merge(self):
        # g1 h g2 with g2 g1 != e: core length 2, conjugator g1
        w = dw((0, 1), (1, 2), (0, 2))
        core, conj = fp_cyclic_reduce(w)
        assert core == dw((1, 2), (0, D8.mul[2][1]))
        assert conj == dw((0, 1))
        assert fp_multiply(fp_multiply(conj, core), fp_inverse(conj)) == w

    @given(raw_syllables())
    def test_roundtrip(self, raw):
        w = fp_normalize(D8, S3, [s for s in raw if _valid(s)])
        core, conj = fp_cyclic_reduce(w)
        assert fp_multiply(fp_multiply(conj, core), fp_inverse(conj)) == w
        if len(core) >= 2:
            assert core.syllables[0][0] != core.syllables[-1][0]


class TestPrimitiveRoot:
    def test_square(self):
        v = dw((0, 1), (1, 2))
        root, exp = fp_primitive_root(fp_power(v, 2))
        assert (root, exp) == (v, 2)

    def test_conjugated_power(self):
        v = dw((0, 1), (1, 2))
        w = fp_conjugate(dw((1, 3)), fp_power(v, 3))
        root, exp = fp_primitive_root(w)
        assert exp == 3
        assert fp_power(root, 3) == w

    def test_rejects_factor_words(self):
        with pytest.raises(ValueError):
            fp_primitive_root(dw((0, 1)))


class TestAnalyze:
    def test_conjugated_factor_tss(self):
        w = dw((1, 2), (0, 4))
        s = [fp_conjugate(w, dw((0, x))) for x in (1, 3)]
        verdict = fp_tss_analyze(s)
        assert verdict.is_tss
        assert verdict.classification == "factor_conjugate"
        assert verdict.factor_tag == 0
        assert verdict.factor_elements == (1, 3)
        assert verdict.factor_certificate is not None

    def test_conjugated_non_tss_subset(self):
        # {e', r} pulled through a conjugator: commuting but r !~ r^2 swap
        s = [dw((0, 1)), dw((0, 2))]
        verdict = fp_tss_analyze(s)
        assert not verdict.is_tss
        assert verdict.classification == "factor_conjugate"

    def test_powers_rejected(self):
        v = dw((0, 1), (1, 2))
        verdict = fp_tss_analyze([v, fp_power(v, 2)])
        assert not verdict.is_tss
        assert verdict.classification == "powers_of_common_element"

    def test_inverse_power_pair_rejected(self):
        v = dw((0, 1), (1, 2))
        verdict = fp_tss_analyze([v, fp_inverse(v)])
        assert not verdict.is_tss
        assert "k = -k" in verdict.reason

    def test_singleton(self):
        assert fp_tss_analyze([dw((0, 1), (1, 2))]).is_tss

    def test_identity_in_set_rejected(self):
        verdict = fp_tss_analyze([fp_identity(D8, S3), dw((0, 2))])
        assert not verdict.is_tss
        assert verdict.classification == "contains_identity"

    def test_rejects_non_commuting(self):
        with pytest.raises(ValueError, match="commute"):
            fp_tss_analyze([dw((0, 1)), dw((1, 2))])

    def test_rejects_mixed_factor_pairs(self):
        with pytest.raises(ValueError, match="different free products"):
            fp_tss_analyze([dw((0, 1)), zw((0, 1))])

    def test_rejects_duplicates(self):
        with pytest.raises(ValueError, match="repeated"):
            fp_tss_analyze([dw((0, 1)), dw((0, 1))])


class TestBallAndCliques:
    def test_ball_count_z3z3(self):
        # 1 + 4 + 8 + 16 words of length <= 3
        assert len(fp_ball(Z3, Z3B, 3)) == 29

    def test_family_cliques_match_exact_graph(self):
        # oracle: exact pairwise-commutation graph on the Z3 * Z3 ball
        ball = [w for w in fp_ball(Z3, Z3B, 3) if not w.is_identity()]
        commuting = {
            (i, j)
            for i, u in enumerate(ball)
            for j, v in enumerate(ball)
            if i < j and fp_multiply(u, v) == fp_multiply(v, u)
        }

        def cliques(chosen, start, out):
            if len(chosen) >= 2:
                out.append(tuple(sorted(ball[i].syllables for i in chosen)))
            for idx in range(start, len(ball)):
                if all((min(c, idx), max(c, idx)) in commuting for c in chosen):
                    chosen.append(idx)
                    cliques(chosen, idx + 1, out)
                    chosen.pop()

        exact: list = []
        cliques([], 0, exact)
        family = [
            tuple(sorted(w.syllables for w in clique))
            for clique in fp_commuting_cliques(Z3, Z3B, 3)
        ]
        assert sorted(exact) == sorted(family)

    def test_no_tss_beyond_factor_bound(self):
        bound = max(max_tss_size(Z3).s_of_g, max_tss_size(Z3B).s_of_g)
        for clique in fp_commuting_cliques(Z3, Z3B, 3):
            verdict = fp_tss_analyze(clique)
            if verdict.is_tss:
                assert verdict.size <= bound

    def test_s4_factor_bound(self):
        # Z3 * S4: the S4 Klein triple survives conjugation into the product
        s4 = make_symmetric(4)
        bound = max(max_tss_size(Z3).s_of_g, max_tss_size(s4).s_of_g)
        assert bound == 3
        biggest = 1
        for clique in fp_commuting_cliques(Z3, s4, 3):
            verdict = fp_tss_analyze(clique)
            if verdict.is_tss:
                biggest = max(biggest, verdict.size)
                assert verdict.size <= bound
                assert verdict.classification == "factor_conjugate"
        assert biggest == 3


class TestTextForm:
    def test_format(self):
        assert format_fp(dw((0, 3), (1, 5))) == "[G:3][H:5]"
        assert format_fp(fp_identity(D8, S3)) == "e"

    def test_parse_strict(self):
        w = parse_fp("[G:3][H:5]", D8, S3)
        assert w == dw((0, 3), (1, 5))

    def test_parse_rejects_unnormalized(self):
        with pytest.raises(ValueError, match="did you mean"):
            parse_fp("[G:1][G:2]", D8, S3)

    def test_parse_raw_normalizes(self):
        assert parse_fp_raw("[G:1][G:2]", D8, S3) == dw((0, 3))

    def test_parse_rejects_garbage(self):
        with pytest.raises(ValueError):
            parse_fp("[X:1]", D8, S3)
        with pytest.raises(ValueError):
            parse_fp("[G:zz]", D8, S3)
        with pytest.raises(ValueError):
            parse_fp("G:1", D8, S3)

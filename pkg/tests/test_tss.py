import math

import jsonschema
import pytest

from tsslab import tss
from tsslab.groups import (
    conjugacy_classes,
    direct_product,
    make_cyclic,
    make_dihedral,
    make_symmetric,
    split_product_index,
)
from tsslab.schemas import TSS_REPORT_SCHEMA, tss_report_to_json
from tsslab.tss import (
    TssError,
    brute_force_tss,
    certify_tss,
    dedup_up_to_conjugacy,
    enumerate_tss,
    factorial_divisibility,
    is_tss,
    max_tss_size,
    realized_permutations,
)


class TestRealizedPermutations:
    def test_singleton_stabilizer_is_centralizer(self, s4):
        from tsslab.groups import centralizer

        for x in (0, 1, 9):
            dec = realized_permutations(s4, [x])
            assert dec.stabilizer == centralizer(s4, x)
            assert len(dec.realized) == 1

    def test_d8_rotation_pair(self, d8):
        dec = realized_permutations(d8, (1, 3))
        assert len(dec.realized) == 2
        swap_witness = dec.realized[(1, 0)]
        assert d8.conj(swap_witness, 1) == 3

    def test_s4_disjoint_transpositions(self, s4):
        i12 = s4.labels.index("(1 2)")
        i34 = s4.labels.index("(3 4)")
        dec = realized_permutations(s4, (i12, i34))
        assert (len(dec.stabilizer), len(dec.kernel), len(dec.realized)) == (8, 4, 2)

    def test_correct_on_non_tss(self, s4):
        # arbitrary non-commuting set still decomposes consistently
        dec = realized_permutations(s4, (1, 2, 3))
        assert len(dec.stabilizer) == len(dec.kernel) * len(dec.realized)

    def test_index_error(self, d8):
        with pytest.raises(Exception):
            realized_permutations(d8, [99])


class TestIsTss:
    def test_disjoint_transpositions(self, s4):
        i12 = s4.labels.index("(1 2)")
        i34 = s4.labels.index("(3 4)")
        assert is_tss(s4, [i12, i34])

    def test_overlapping_transpositions(self, s4):
        i12 = s4.labels.index("(1 2)")
        i13 = s4.labels.index("(1 3)")
        assert not is_tss(s4, [i12, i13])

    def test_klein_triple(self, s4):
        triple = [i for i, lab in enumerate(s4.labels)
                  if lab in ("(1 2)(3 4)", "(1 3)(2 4)", "(1 4)(2 3)")]
        cert = certify_tss(s4, triple)
        assert cert is not None
        # each witness realizes exactly its transposition
        for (i, j), w in cert.witnesses.items():
            for pos, x in enumerate(cert.elements):
                expect = cert.elements[j if pos == i else i if pos == j else pos]
                assert s4.conj(w, x) == expect

    def test_singletons_always(self, small_corpus):
        for g in small_corpus:
            for x in range(0, g.order, max(1, g.order // 7)):
                assert is_tss(g, [x])

    def test_empty_rejected(self, d8):
        with pytest.raises(TssError):
            certify_tss(d8, [])

    def test_duplicates_rejected(self, d8):
        with pytest.raises(TssError):
            certify_tss(d8, [1, 1])


class TestEnumerate:
    def test_abelian_no_pairs(self, z6):
        assert enumerate_tss(z6, 2) == []

    def test_dihedral_families(self):
        # {r^i, r^-i} always; {s r^i, s r^(i+n/2)} iff 4 | n
        for n in range(3, 13):
            g = make_dihedral(n)
            found = [c.elements for c in enumerate_tss(g, 2)]
            rotations = [(i, n - i) for i in range(1, (n - 1) // 2 + 1)]
            reflections = (
                [(n + i, n + i + n // 2) for i in range(n // 2)] if n % 4 == 0 else []
            )
            assert found == sorted(rotations + reflections)

    def test_d12_size3_empty(self):
        assert enumerate_tss(make_dihedral(6), 3) == []

    def test_size_one_lists_all(self, d8):
        assert [c.elements for c in enumerate_tss(d8, 1)] == [(x,) for x in range(8)]

    def test_deterministic_order(self, s4):
        first = [c.elements for c in enumerate_tss(s4, 2)]
        second = [c.elements for c in enumerate_tss(s4, 2)]
        assert first == second == sorted(first)


class TestMaxTss:
    def test_cyclic(self):
        for n in (1, 2, 7, 12):
            assert max_tss_size(make_cyclic(n)).s_of_g == 1

    def test_dihedral(self):
        for n in range(3, 13):
            assert max_tss_size(make_dihedral(n)).s_of_g == 2

    def test_s4(self, s4):
        report = max_tss_size(s4)
        assert report.s_of_g == 3
        assert report.counts == {1: 24, 2: 13, 3: 1}
        (only,) = report.maximal_sets
        assert sorted(s4.labels[x] for x in only.elements) == [
            "(1 2)(3 4)", "(1 3)(2 4)", "(1 4)(2 3)"
        ]

    def test_report_schema(self, s4):
        doc = tss_report_to_json(max_tss_size(s4), order=s4.order)
        jsonschema.validate(doc, TSS_REPORT_SCHEMA)

    def test_dedup_flag(self, s4):
        verbatim = enumerate_tss(s4, 2)
        assert len(verbatim) == 13
        assert len(dedup_up_to_conjugacy(s4, verbatim)) == 4


class TestFactorialDivisibility:
    def test_singleton(self):
        assert factorial_divisibility(make_cyclic(7), [3])

    def test_d8_pair(self, d8):
        assert factorial_divisibility(d8, [1, 3])

    def test_s4_triple(self, s4):
        triple = [i for i, lab in enumerate(s4.labels)
                  if lab in ("(1 2)(3 4)", "(1 3)(2 4)", "(1 4)(2 3)")]
        assert factorial_divisibility(s4, triple)

    def test_rejects_non_tss(self, s4):
        with pytest.raises(TssError):
            factorial_divisibility(s4, [1, 2])


class TestInvariants:
    def test_conjugacy_and_order_property(self, small_corpus):
        # members of any certified TSS of size >= 2 share a class and order
        for g in small_corpus:
            report = max_tss_size(g)
            for size in range(2, report.s_of_g + 1):
                part = conjugacy_classes(g)
                for cert in enumerate_tss(g, size):
                    cids = {part.class_of[x] for x in cert.elements}
                    orders = {g.element_order(x) for x in cert.elements}
                    assert len(cids) == 1 and len(orders) == 1

    def test_inverse_pair_lemma(self, small_corpus):
        for g in small_corpus:
            report = max_tss_size(g)
            for size in range(2, report.s_of_g + 1):
                for cert in enumerate_tss(g, size):
                    elems = set(cert.elements)
                    if any(g.inv[x] in elems and g.inv[x] != x for x in elems):
                        assert len(elems) == 2

    def test_ses_identity_on_arbitrary_sets(self, small_corpus):
        import random

        rng = random.Random(7)
        for g in small_corpus:
            for _ in range(10):
                size = rng.randint(1, min(4, g.order))
                s = sorted(rng.sample(range(g.order), size))
                dec = realized_permutations(g, s)
                assert len(dec.stabilizer) == len(dec.kernel) * len(dec.realized)

    def test_product_coordinate_structure(self, d8):
        prod = direct_product(d8, d8)
        for size in (2, 3):
            for cert in enumerate_tss(prod, size):
                firsts = [split_product_index(x, 8)[0] for x in cert.elements]
                seconds = [split_product_index(x, 8)[1] for x in cert.elements]
                assert len(set(firsts)) in (1, len(firsts))
                assert len(set(seconds)) in (1, len(seconds))

    def test_product_max(self, d8, s3):
        prod = direct_product(d8, s3)
        assert max_tss_size(prod).s_of_g == max(
            max_tss_size(d8).s_of_g, max_tss_size(s3).s_of_g
        )


class TestOracle:
    def test_matches_pruned_enumerator(self, small_corpus):
        for g in small_corpus:
            if g.order > 16:
                continue
            s_val = max_tss_size(g).s_of_g
            for size in range(1, s_val + 2):
                assert [c.elements for c in enumerate_tss(g, size)] == brute_force_tss(g, size)

    def test_oracle_uses_full_permutation_search(self, s4):
        # spot check: the oracle certifies the Klein triple via all 6 permutations
        triple = tuple(i for i, lab in enumerate(s4.labels)
                       if lab in ("(1 2)(3 4)", "(1 3)(2 4)", "(1 4)(2 3)"))
        assert triple in brute_force_tss(s4, 3)

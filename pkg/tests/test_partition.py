import pytest

from chainex.partition import (
    EMPTY,
    GapClass,
    Partition,
    PartitionError,
    chain_maex,
    chain_mex,
    count_multiples,
    in_class,
    in_gap_class,
    is_regular,
    is_strict,
    largest_repeating,
    maex_offset,
    mex_offset,
    parts_above_mex,
    partitions,
    smallest_repeating,
    top_multiple_multiplicity,
)

from oracles import ferrers_transpose, linear_mex, partition_count


P = Partition


class TestConstruction:
    def test_normalizes_to_pairs(self):
        assert P([4, 4, 2, 1, 1, 1]).pairs == ((4, 2), (2, 1), (1, 3))

    def test_views_agree(self):
        lam = P([5, 3, 3, 1])
        assert lam.parts == (5, 3, 3, 1)
        assert lam.weight == 12
        assert lam.num_parts == 4
        assert lam.multiplicity(3) == 2
        assert lam.multiplicity(4) == 0

    def test_empty(self):
        assert EMPTY.is_empty
        assert EMPTY.weight == 0
        assert EMPTY.num_parts == 0
        assert EMPTY.largest == 0
        assert EMPTY.smallest is None

    def test_rejects_bad_parts(self):
        with pytest.raises(PartitionError):
            P([3, 4])
        with pytest.raises(PartitionError):
            P([2, 0])
        with pytest.raises(PartitionError):
            P([-1])

    def test_of_multiset_sorts(self):
        assert P.of_multiset([1, 3, 2, 3]) == P([3, 3, 2, 1])

    def test_parse_and_str_roundtrip(self):
        for text in ("[]", "[1]", "[7,4,4,4,4,4,4,3,1,1,1,1]"):
            assert str(P.parse(text)) == text

    def test_parse_rejects_unsorted_unless_asked(self):
        with pytest.raises(PartitionError):
            P.parse("[1,3]")
        assert P.parse("[1,3]", sort=True) == P([3, 1])
        with pytest.raises(PartitionError):
            P.parse("3,1")
        with pytest.raises(PartitionError):
            P.parse("[a,b]")


class TestConjugate:
    def test_hook(self):
        assert P([4, 1]).conjugate() == P([2, 1, 1, 1])

    def test_empty(self):
        assert EMPTY.conjugate() == EMPTY

    def test_worked_example(self):
        # conjugate of (9,6,6,6) has columns (4^6, 1^3)
        assert P([9, 6, 6, 6]).conjugate() == P([4] * 6 + [1] * 3)

    def test_against_transpose_oracle(self):
        for n in range(13):
            for lam in partitions(n):
                assert lam.conjugate().parts == tuple(ferrers_transpose(lam.parts))

    def test_involution(self):
        for n in range(13):
            for lam in partitions(n):
                assert lam.conjugate().conjugate() == lam


class TestConcatAndCut:
    def test_worked_example(self):
        assert P([3, 3, 1, 1, 1]).concat(P([5, 2, 2, 2, 1, 1])) == \
            P([5, 3, 3, 2, 2, 2, 1, 1, 1, 1, 1])

    def test_identity_element(self):
        lam = P([4, 2, 1])
        assert lam.concat(EMPTY) == lam
        assert EMPTY.concat(lam) == lam

    def test_merges_equal_parts(self):
        assert P([2]).concat(P([2])) == P([2, 2])

    def test_cut_examples(self):
        lam = P([5, 3, 2])
        assert lam.cut_up(2) == P([5])
        assert lam.cut_down(2) == P([3, 2])
        assert lam.cut_up(1) == EMPTY
        assert P([4, 4, 1]).cut_down(4) == EMPTY

    def test_cut_out_of_range(self):
        with pytest.raises(PartitionError):
            P([2, 1]).cut_up(4)
        with pytest.raises(PartitionError):
            P([2, 1]).cut_down(0)

    def test_cut_concat_inverse(self):
        for n in range(11):
            for lam in partitions(n):
                for i in range(1, lam.num_parts + 2):
                    assert lam.cut_up(i).concat(lam.cut_down(i)) == lam

    def test_with_copies(self):
        assert P([3, 1]).with_copies(3, 2) == P([3, 3, 3, 1])
        assert P([3, 1]).with_copies(1, -1) == P([3])
        with pytest.raises(PartitionError):
            P([3, 1]).with_copies(1, -2)


class TestChainMex:
    def test_empty(self):
        for r in (1, 2, 5):
            assert chain_mex(EMPTY, r) == 1

    def test_scan_example(self):
        assert chain_mex(P([5, 3, 2, 2, 1]), 2) == 6

    def test_matches_linear_oracle_for_r1(self):
        for n in range(13):
            for lam in partitions(n):
                assert chain_mex(lam, 1) == linear_mex(lam.parts)

    def test_gap_class_value(self):
        # on the gap-bounded class the chain mex sits just above the top part
        assert chain_mex(P([2, 1]), 2) == 3
        for n in range(13):
            for r in (1, 2, 3):
                for lam in partitions(n):
                    if in_gap_class(lam, r):
                        assert chain_mex(lam, r) == lam.largest + 1

    def test_rejects_bad_r(self):
        with pytest.raises(PartitionError):
            chain_mex(P([1]), 0)


class TestChainMaex:
    def test_trivial_zero(self):
        assert chain_maex(EMPTY, 3) == 0
        assert chain_maex(P([1, 1]), 2) == 0

    def test_scan_examples(self):
        assert chain_maex(P([6, 1]), 2) == 5
        assert chain_maex(P([7]), 2) == 6

    def test_positive_iff_off_gap_class(self):
        for n in range(13):
            for r in (1, 2, 3):
                for lam in partitions(n):
                    m = chain_maex(lam, r)
                    assert (m > 0) == (not in_gap_class(lam, r))
                    if m > 0:
                        assert m >= r


class TestClassAndOffsets:
    def test_membership_examples(self):
        assert in_class(P([4, 1, 1, 1]), GapClass(GapClass.EXCEEDS, 2))
        assert in_class(EMPTY, GapClass(GapClass.BOUNDED, 5))
        assert in_class(P([3, 2, 1]), GapClass(GapClass.BOUNDED, 1))

    def test_offset_values(self):
        assert mex_offset(EMPTY, 4) == 0
        assert maex_offset(EMPTY, 4) == 1
        assert mex_offset(P([7]), 2) == 1
        assert maex_offset(P([7]), 2) == 2
        assert mex_offset(P([3, 2, 1]), 3) == 0

    def test_bad_class(self):
        with pytest.raises(PartitionError):
            GapClass("weird", 2)


class TestRepeatsAndMultiples:
    def test_largest_repeating(self):
        assert largest_repeating(P([7, 4, 4, 4, 4, 4, 4, 3, 1, 1, 1, 1]), 3) == 4
        assert largest_repeating(P([2, 1]), 2) == 0

    def test_smallest_repeating(self):
        assert smallest_repeating(P([4, 1, 1, 1]), 3) == 1

    def test_count_multiples(self):
        assert count_multiples(P([9, 7, 6, 6, 6, 1, 1, 1, 1]), 3) == 4
        assert count_multiples(EMPTY, 4) == 0

    def test_top_multiple_multiplicity(self):
        assert top_multiple_multiplicity(P([6, 1]), 3) == 1
        assert top_multiple_multiplicity(P([5, 1]), 3) == 0

    def test_regular_strict_predicates(self):
        assert is_regular(P([7, 1]), 3)
        assert not is_regular(P([6, 1]), 3)
        assert is_strict(P([3, 3, 1]), 3)
        assert not is_strict(P([1, 1, 1]), 3)


class TestPartsAboveMex:
    def test_values(self):
        assert parts_above_mex(EMPTY, 3) == 0
        assert parts_above_mex(P([5, 3, 2, 2, 1]), 2) == 0
        assert parts_above_mex(P([7, 1]), 2) == 1

    def test_conjugation_swaps_with_largest_repeating(self):
        # j parts above the (r-1)-chain mex <-> largest r-repeating part j
        for n in range(19):
            for r in (2, 3, 4):
                for lam in partitions(n):
                    assert largest_repeating(lam.conjugate(), r) == \
                        parts_above_mex(lam, r - 1)


class TestEnumeration:
    def test_zero(self):
        assert list(partitions(0)) == [EMPTY]

    def test_count_seven(self):
        assert sum(1 for _ in partitions(7)) == 15

    def test_counts_match_pentagonal_oracle(self):
        for n in range(19):
            assert sum(1 for _ in partitions(n)) == partition_count(n)

    def test_decreasing_lex_order(self):
        for n in (5, 8):
            seen = [p.parts for p in partitions(n)]
            assert seen == sorted(seen, reverse=True)
            assert len(set(seen)) == len(seen)

    def test_filtered_worked_example(self):
        # 2-chain maex positive with exactly one part above it, n = 7
        hits = [str(p) for p in partitions(
            7, lambda p: chain_maex(p, 2) > 0
            and sum(m for v, m in p.pairs if v > chain_maex(p, 2)) == 1)]
        assert hits == ["[7]", "[6,1]", "[5,2]", "[5,1,1]", "[4,1,1,1]"]

    def test_negative_n(self):
        with pytest.raises(PartitionError):
            list(partitions(-1))

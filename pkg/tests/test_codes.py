import pytest

from neurocode import Code, Interval, InvalidCodeError, downward_closure

from oracles import (
    EXAMPLE_COMPLEMENT_WORDS,
    EXAMPLE_WORDS,
    all_codes,
    example_code,
    example_complement,
    oracle_maximal_intervals,
    sample_codes,
)


class TestComplement:
    def test_worked_example(self):
        assert example_code().complement.words == EXAMPLE_COMPLEMENT_WORDS

    def test_single_neuron(self):
        assert Code(1, {0}).complement.words == frozenset({1})

    def test_involution_of_example(self):
        assert example_complement().complement.words == EXAMPLE_WORDS

    def test_involution_exhaustive_n3(self):
        for code in all_codes(3):
            assert code.complement.complement == code


class TestInterval:
    def test_members_of_two_element_interval(self):
        assert Interval(0b010, 0b011).members(3) == frozenset({0b010, 0b011})

    def test_degenerate_interval(self):
        assert Interval(0b101, 0b101).members(3) == frozenset({0b101})

    def test_full_lattice(self):
        assert Interval(0, 0b111).members(3) == frozenset(range(8))

    def test_malformed_rejected(self):
        with pytest.raises(ValueError):
            Interval(0b001, 0b010)

    def test_members_requires_fitting_n(self):
        with pytest.raises(ValueError):
            Interval(0, 0b100).members(2)

    def test_encloses(self):
        assert Interval(0, 0b111).encloses(Interval(0b001, 0b011))
        assert not Interval(0b001, 0b011).encloses(Interval(0, 0b111))


class TestCodeConstruction:
    def test_rejects_empty(self):
        with pytest.raises(InvalidCodeError):
            Code(2, frozenset())

    def test_rejects_full(self):
        with pytest.raises(InvalidCodeError):
            Code(1, {0, 1})

    def test_rejects_out_of_range_word(self):
        with pytest.raises(InvalidCodeError):
            Code(2, {0b100})

    def test_rejects_bad_neuron_count(self):
        with pytest.raises(InvalidCodeError):
            Code(0, {0})
        with pytest.raises(InvalidCodeError):
            Code(17, {0})

    def test_from_neuron_sets(self):
        code = Code.from_neuron_sets(3, [(), (2,), (3,), (1, 2), (1, 3)])
        assert code == example_code()

    def test_deduplication(self):
        assert len(Code(2, (0, 0, 1))) == 2


class TestContainsInterval:
    def test_contained(self):
        assert example_code().contains_interval(Interval(0b010, 0b011))

    def test_not_contained(self):
        # the word {1} is missing from the example code
        assert not example_code().contains_interval(Interval(0, 0b011))

    def test_degenerate_for_every_codeword(self):
        code = example_code()
        for w in code:
            assert code.contains_interval(Interval(w, w))


class TestMaximalIntervals:
    def test_worked_example(self):
        expected = {Interval(0, 0b010), Interval(0, 0b100),
                    Interval(0b010, 0b011), Interval(0b100, 0b101)}
        assert example_code().maximal_intervals == expected

    def test_complement_example(self):
        expected = {Interval(0b001, 0b001), Interval(0b110, 0b111)}
        assert example_complement().maximal_intervals == expected

    def test_singleton_code(self):
        assert Code(3, {0b011}).maximal_intervals == {Interval(0b011, 0b011)}

    def test_oracle_exhaustive_n3(self):
        for code in all_codes(3):
            assert code.maximal_intervals == oracle_maximal_intervals(code)

    @pytest.mark.parametrize("n", [4, 5])
    def test_oracle_random(self, n):
        for code in sample_codes(n, 150, seed=4200 + n):
            assert code.maximal_intervals == oracle_maximal_intervals(code)

    def test_fallback_path_beyond_table(self):
        # n = 9 exercises the submask-scan path; the oracle is scan based too
        code = Code(9, {0, 0b1, 0b11, 0b111, 0b100000000, 0b100000001})
        assert code.maximal_intervals == oracle_maximal_intervals(code)


class TestMaximalCodewords:
    def test_worked_example(self):
        assert example_code().maximal_codewords == {0b011, 0b101}

    def test_singleton(self):
        assert Code(4, {0b0110}).maximal_codewords == {0b0110}

    def test_inclusion_scan(self):
        code = Code(3, {0, 0b001, 0b010, 0b100, 0b011, 0b101})
        assert code.maximal_codewords == {0b011, 0b101}


class TestDownwardClosure:
    def test_worked_example(self):
        assert downward_closure(example_code()).facets == {0b011, 0b101}

    def test_singleton(self):
        assert downward_closure(Code(3, {0b110})).facets == {0b110}

    def test_complement_example(self):
        assert downward_closure(example_complement()).facets == {0b111}


class TestStructuralInvariantsExhaustive:
    def test_all_codes_n3(self):
        for code in all_codes(3):
            ivs = code.maximal_intervals
            # antichain
            for a in ivs:
                for b in ivs:
                    assert a == b or not a.encloses(b)
            # union of members is exactly the code
            covered = frozenset().union(*(iv.members(3) for iv in ivs))
            assert covered == code.words
            # every degenerate interval sits inside some maximal interval
            for w in code:
                assert any(iv.encloses(Interval(w, w)) for iv in ivs)
            # facets of the closure are the maximal codewords
            assert downward_closure(code).facets == code.maximal_codewords

import pytest

from gdwn.errors import InvalidPair
from gdwn.words import (
    LOWER,
    UPPER,
    balance_report,
    check_balanced,
    factor_set,
    factor_sum_report,
    find_split_witness,
    prefix_sum,
    word_prefix,
)
from gdwn.wythoff import beatty_a


class TestWordPrefixes:
    def test_lower_prefix(self):
        assert word_prefix(LOWER, 11).as_string() == "12122121221"

    def test_upper_prefix(self):
        assert word_prefix(UPPER, 11).as_string() == "22122121221"

    def test_empty_prefix(self):
        assert word_prefix(LOWER, 0).letters == ()

    def test_words_agree_past_first_letter(self):
        lower = word_prefix(LOWER, 10_000).letters
        upper = word_prefix(UPPER, 10_000).letters
        assert lower[0] == 1 and upper[0] == 2
        assert lower[1:] == upper[1:]

    def test_letters_are_unit_or_double(self):
        assert set(word_prefix(LOWER, 500).letters) == {1, 2}


class TestPrefixSums:
    def test_sum_of_2121(self):
        assert sum((2, 1, 2, 1)) == 6

    def test_lower_n4(self):
        word = word_prefix(LOWER, 4)
        assert word.letters == (1, 2, 1, 2)
        assert word.letter_sum() == 6
        assert prefix_sum(LOWER, 4) == 6

    def test_upper_n1(self):
        assert prefix_sum(UPPER, 1) == 2

    def test_closed_form_matches_letter_sums(self):
        lower = word_prefix(LOWER, 10_000).letters
        upper = word_prefix(UPPER, 10_000).letters
        lo_total = up_total = 0
        for n in range(1, 10_001):
            lo_total += lower[n - 1]
            up_total += upper[n - 1]
            assert lo_total == prefix_sum(LOWER, n)
            assert up_total == prefix_sum(UPPER, n)


class TestBalance:
    @pytest.mark.parametrize("kind", [LOWER, UPPER])
    def test_mechanical_words_balanced(self, kind):
        assert check_balanced(kind, 50).balanced
        assert check_balanced(kind, 500).balanced

    def test_synthetic_unbalanced_word(self):
        report = balance_report((1, 1, 2, 2))
        assert not report.balanced
        length, lo, hi, *_ = report.violations[0]
        assert length == 2 and hi - lo == 2

    def test_needs_two_letters(self):
        with pytest.raises(ValueError):
            check_balanced(LOWER, 1)


class TestFactorSums:
    def test_no_violations_at_window_200(self):
        assert factor_sum_report(10, 200).ok

    def test_admissible_sums_per_length(self):
        report = factor_sum_report(10, 200)
        admissible = dict(report.admissible)
        assert admissible[1] == (1, 2)
        assert admissible[4] == (6, 7)
        for size, (lo, hi) in admissible.items():
            assert hi == lo + 1
            assert lo == beatty_a(size)

    def test_every_admissible_sum_occurs(self):
        letters = word_prefix(LOWER, 400).letters
        for size in range(1, 13):
            sums = {sum(f) for f in factor_set(letters, size)}
            assert sums == {beatty_a(size), beatty_a(size) + 1}

    def test_factor_sets_coincide(self):
        lower = word_prefix(LOWER, 2000).letters
        upper = word_prefix(UPPER, 2000).letters
        for size in range(1, 13):
            assert factor_set(lower, size) == factor_set(upper, size)

    def test_factor_sets_stable_under_window_doubling(self):
        small = word_prefix(LOWER, 500).letters
        large = word_prefix(LOWER, 1000).letters
        for size in range(1, 13):
            assert factor_set(small, size) == factor_set(large, size)


class TestSplitWitness:
    def test_first_wythoff_pair(self):
        assert find_split_witness(1, 2) == (0, 1)

    def test_first_dual_pair(self):
        m, n = find_split_witness(2, 3)
        assert (m, n) == (1, 2)
        assert beatty_a(2) - beatty_a(1) == 2

    def test_two_four_has_no_witness(self):
        assert find_split_witness(2, 4, bound=10_000) is None

    def test_rejects_bad_pairs(self):
        with pytest.raises(InvalidPair):
            find_split_witness(2, 2)
        with pytest.raises(InvalidPair):
            find_split_witness(0, 3)

    def test_bound_must_cover_q(self):
        with pytest.raises(ValueError):
            find_split_witness(1, 5, bound=3)

    def test_witness_reproduces_the_pair(self):
        for p, q in [(4, 7), (7, 11), (12, 20), (9, 14)]:
            m, n = find_split_witness(p, q)
            assert beatty_a(n) - beatty_a(m) == p
            assert (beatty_a(n) + n) - (beatty_a(m) + m) == q

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gdwn.errors import EmptySpec, GridTooLarge, MultiplePair, NonPositiveQ
from gdwn.games import (
    followers,
    is_legal_move,
    nim_spec,
    solve_bruteforce,
    validate_spec,
    wythoff_extension,
    wythoff_spec,
)
from gdwn.sieve import compute_pi


class TestValidateSpec:
    def test_standard_three_pair_game(self):
        spec = validate_spec([(0, 1), (1, 1), (1, 2)])
        assert spec.pairs == ((0, 1), (1, 1), (1, 2))

    def test_normalizes_order_within_pair(self):
        spec = validate_spec([(2, 4), (1, 1), (1, 0)])
        assert spec.pairs == ((2, 4), (1, 1), (0, 1))

    def test_gcd_greater_than_one_is_allowed(self):
        spec = validate_spec([(0, 1), (1, 1), (2, 4)])
        assert (2, 4) in spec.pairs

    def test_empty_list_rejected(self):
        with pytest.raises(EmptySpec):
            validate_spec([])

    def test_zero_pair_rejected(self):
        with pytest.raises(NonPositiveQ):
            validate_spec([(0, 0)])

    def test_negative_entry_rejected(self):
        with pytest.raises(NonPositiveQ):
            validate_spec([(-1, 2)])

    def test_multiple_pair_rejected_with_indices(self):
        with pytest.raises(MultiplePair) as exc:
            validate_spec([(0, 1), (0, 2)])
        assert exc.value.index == 1
        assert exc.value.base_index == 0
        assert exc.value.factor == 2

    def test_duplicate_pair_rejected(self):
        with pytest.raises(MultiplePair):
            validate_spec([(1, 2), (2, 1)])


class TestLegalMoves:
    def test_multiple_of_diagonal_pair(self):
        # (8,13) -> (2,1) removes (6,12) = 3*(2,4)
        spec = wythoff_extension(2, 4)
        assert is_legal_move(spec, (8, 13), (2, 1))

    def test_staying_put_is_illegal(self):
        assert not is_legal_move(wythoff_spec(), (5, 5), (5, 5))

    def test_single_step_of_wide_pair(self):
        spec = wythoff_extension(4, 6)
        assert is_legal_move(spec, (8, 13), (4, 7))

    def test_exact_multiple_required_for_gcd_pairs(self):
        # displacement (2,1) is half of (4,2); not a legal (2,4) move
        spec = validate_spec([(2, 4)])
        assert not is_legal_move(spec, (6, 5), (4, 4))
        assert is_legal_move(spec, (6, 5), (2, 3))

    def test_negative_displacement_illegal(self):
        assert not is_legal_move(wythoff_spec(), (2, 2), (3, 1))


class TestFollowers:
    def test_wythoff_corner(self):
        assert followers(wythoff_spec(), (1, 1)) == [(0, 0), (0, 1), (1, 0)]

    def test_nim_row(self):
        assert followers(nim_spec(), (2, 0)) == [(0, 0), (1, 0)]

    def test_double_step_on_diagonal(self):
        spec = wythoff_extension(1, 2)
        assert (0, 0) in followers(spec, (2, 4))

    def test_followers_sorted_and_unique(self):
        spec = wythoff_extension(2, 3)
        out = followers(spec, (9, 7))
        assert out == sorted(set(out))

    @given(
        st.integers(0, 20),
        st.integers(0, 20),
        st.sampled_from([(1, 2), (2, 3), (2, 4), (4, 7)]),
    )
    @settings(max_examples=60, deadline=None)
    def test_followers_agree_with_legality(self, x, y, extra):
        spec = wythoff_extension(*extra)
        outs = set(followers(spec, (x, y)))
        for u in range(x + 1):
            for v in range(y + 1):
                assert ((u, v) in outs) == is_legal_move(spec, (x, y), (u, v))

    @given(
        st.integers(0, 40), st.integers(0, 40), st.integers(0, 40), st.integers(0, 40)
    )
    @settings(max_examples=120, deadline=None)
    def test_legality_symmetric_under_swap(self, a, b, c, d):
        spec = wythoff_extension(2, 4)
        assert is_legal_move(spec, (a, b), (c, d)) == is_legal_move(
            spec, (b, a), (d, c)
        )

    @given(st.integers(0, 30), st.integers(0, 30))
    @settings(max_examples=60, deadline=None)
    def test_moves_strictly_decrease_total(self, x, y):
        spec = wythoff_extension(3, 5)
        for u, v in followers(spec, (x, y)):
            assert u + v < x + y


class TestBruteForce:
    def test_nim_p_positions_are_diagonal(self):
        grid = solve_bruteforce(nim_spec(), 6, 6)
        assert grid.p_positions() == {(t, t) for t in range(7)}

    def test_wythoff_small_grid(self):
        grid = solve_bruteforce(wythoff_spec(), 14, 14)
        expected = {(0, 0)}
        for a, b in [(1, 2), (3, 5), (4, 7), (6, 10), (8, 13)]:
            expected |= {(a, b), (b, a)}
        assert grid.p_positions() == expected

    def test_onetwo_matches_sieve_on_grid(self):
        spec = wythoff_extension(1, 2)
        grid = solve_bruteforce(spec, 30, 30)
        table = compute_pi(spec, 30)
        assert grid.p_positions() == table.p_positions_within(30, 30)

    def test_grid_is_symmetric(self):
        grid = solve_bruteforce(wythoff_extension(2, 3), 25, 25)
        assert np.array_equal(grid.grid, grid.grid.T)

    def test_origin_is_p_for_every_spec(self):
        for pairs in [[(0, 1)], [(1, 1)], [(2, 3)], [(0, 2), (2, 2)]]:
            assert solve_bruteforce(validate_spec(pairs), 3, 3).is_p(0, 0)

    def test_outcome_letters(self):
        grid = solve_bruteforce(nim_spec(), 2, 2)
        assert grid.outcome(0, 0) == "P"
        assert grid.outcome(0, 1) == "N"

    def test_grid_guard(self):
        with pytest.raises(GridTooLarge):
            solve_bruteforce(nim_spec(), 20_000, 20_000)

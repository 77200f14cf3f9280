import pytest

from gdwn.errors import BudgetExceeded
from gdwn.games import nim_spec, solve_bruteforce, validate_spec, wythoff_extension, wythoff_spec
from gdwn.sieve import (
    b_increasing,
    check_a_density,
    check_complementarity,
    check_u_density,
    compute_pi,
    delta_values_distinct,
    derive_rows,
    derive_sequences,
    settled_value_bound,
    table_from_pi,
    verify_involution,
)

# frozen from the brute-force grid oracle (cross-checked in TestOracleGate)
ONETWO_A = (0, 1, 2, 4, 7, 8, 9, 11, 12, 13, 15, 16, 19, 20, 21, 22, 24, 26, 27)
ONETWO_B = (0, 3, 6, 5, 10, 14, 17, 25, 28, 18, 35, 23, 31, 29, 48, 32, 55, 37, 40)
TWOTHREE_A = (0, 1, 3, 4, 5, 9, 10, 11, 12, 13, 14, 15, 19)
TWOTHREE_B = (0, 2, 6, 8, 7, 16, 18, 20, 17, 24, 26, 21, 34)
TWOFOUR_A = (0, 1, 3, 4, 6, 8, 9, 11, 12, 13, 15, 16, 21)
TWOFOUR_B = (0, 2, 5, 7, 10, 17, 14, 19, 18, 20, 25, 27, 33)
FOURSEVEN_A = (0, 1, 3, 4, 6, 7, 10, 11, 12, 14, 15, 18)
FOURSEVEN_B = (0, 2, 5, 8, 9, 13, 17, 16, 20, 25, 24, 28)

FIXTURE_PAIRS = [
    [(0, 1)],
    [(0, 1), (1, 1)],
    [(0, 1), (1, 1), (1, 2)],
    [(0, 1), (1, 1), (2, 3)],
    [(0, 1), (1, 1), (2, 4)],
    [(0, 1), (1, 1), (4, 6)],
    [(0, 1), (1, 1), (4, 7)],
    [(0, 2)],
    [(0, 2), (2, 2)],
    [(1, 1)],
    [(0, 1), (1, 1), (1, 2), (2, 3), (3, 5), (5, 8), (8, 13)],
]


class TestKnownTables:
    def test_nim_is_identity(self):
        table = compute_pi(nim_spec(), 5)
        assert table.pi == (0, 1, 2, 3, 4, 5)
        a, b, u, l = derive_sequences(table)
        assert a == b == u == (0, 1, 2, 3, 4, 5)
        assert l == ()

    def test_onetwo_pairs(self):
        table = compute_pi(wythoff_extension(1, 2), 27)
        assert table.a == ONETWO_A
        assert table.b == ONETWO_B
        assert table.u_set == ONETWO_A

    def test_twothree_pairs(self):
        table = compute_pi(wythoff_extension(2, 3), 19)
        assert table.a == TWOTHREE_A
        assert table.b == TWOTHREE_B

    def test_twofour_pairs(self):
        table = compute_pi(wythoff_extension(2, 4), 21)
        assert table.a == TWOFOUR_A
        assert table.b == TWOFOUR_B

    def test_foursix_diverges_from_twofour(self):
        table = compute_pi(wythoff_extension(4, 6), 8)
        assert table.pi[8] == 14

    def test_fourseven_pairs(self):
        table = compute_pi(wythoff_extension(4, 7), 18)
        assert table.a == FOURSEVEN_A
        assert table.b == FOURSEVEN_B

    def test_wythoff_pairs(self):
        table = compute_pi(wythoff_spec(), 14)
        assert table.pairs() == (
            (0, 0), (1, 2), (3, 5), (4, 7), (6, 10),
            (8, 13), (9, 15), (11, 18), (12, 20), (14, 23),
        )


class TestOracleGate:
    """The sieve values asserted above are gated on the grid oracle."""

    def test_twofour_table_matches_oracle(self):
        spec = wythoff_extension(2, 4)
        grid = solve_bruteforce(spec, 40, 40)
        table = compute_pi(spec, 40)
        assert grid.p_positions() == table.p_positions_within(40, 40)
        # the pair (15, 25) is a genuine losing position: it has no
        # losing follower on the grid
        assert grid.is_p(15, 25)

    def test_foursix_table_matches_oracle(self):
        spec = wythoff_extension(4, 6)
        grid = solve_bruteforce(spec, 40, 40)
        table = compute_pi(spec, 40)
        assert grid.p_positions() == table.p_positions_within(40, 40)
        assert grid.is_p(8, 14)


class TestDerivedRows:
    def test_onetwo_difference_rows(self):
        rows = derive_rows(compute_pi(wythoff_extension(1, 2), 27))
        assert rows.delta[:7] == (0, 2, 4, 1, 3, 6, 8)
        assert rows.gamma[:7] == (0, 1, 2, -3, -4, -2, -1)
        assert rows.eta[:7] == (0, 5, 10, 6, 13, 20, 25)

    def test_nim_delta_zero(self):
        rows = derive_rows(compute_pi(nim_spec(), 10))
        assert set(rows.delta) == {0}

    def test_twothree_delta(self):
        rows = derive_rows(compute_pi(wythoff_extension(2, 3), 19))
        assert rows.delta == (0, 1, 3, 4, 2, 7, 8, 9, 5, 11, 12, 6, 15)

    def test_custom_multipliers(self):
        table = compute_pi(wythoff_extension(2, 3), 10)
        rows = derive_rows(table, mult_lo=3, mult_hi=1)
        assert rows.gamma == tuple(b - 3 * a for a, b in table.pairs())
        assert rows.eta == tuple(b - a for a, b in table.pairs())


class TestInvolution:
    @pytest.mark.parametrize(
        "pairs", [p for p in FIXTURE_PAIRS if (0, 1) in p], ids=str
    )
    def test_involution_holds_with_nim_pair(self, pairs):
        report = verify_involution(compute_pi(validate_spec(pairs), 400))
        assert report.ok

    def test_wythoff_small_values(self):
        table = compute_pi(wythoff_spec(), 5)
        assert table.pi[1] == 2
        assert table.pi[2] == 1

    def test_boundary_is_the_unsettled_tail(self):
        table = compute_pi(wythoff_extension(1, 2), 50)
        report = verify_involution(table)
        assert report.ok
        assert report.boundary == tuple(i for i in range(51) if table.pi[i] > 50)
        # unsettled columns sit above the diagonal
        assert all(table.pi[i] > i for i in report.boundary)


class TestEngines:
    @pytest.mark.parametrize("pairs", FIXTURE_PAIRS, ids=str)
    def test_fast_engine_matches_naive(self, pairs):
        spec = validate_spec(pairs)
        assert compute_pi(spec, 300, engine="naive") == compute_pi(
            spec, 300, engine="fast"
        )

    def test_runs_are_deterministic(self):
        spec = wythoff_extension(2, 3)
        assert compute_pi(spec, 500) == compute_pi(spec, 500)

    def test_budget_exceeded_raises_same_column(self):
        spec = wythoff_extension(1, 2)
        with pytest.raises(BudgetExceeded) as naive:
            compute_pi(spec, 20, engine="naive", cap=4)
        with pytest.raises(BudgetExceeded) as fast:
            compute_pi(spec, 20, engine="fast", cap=4)
        assert naive.value.column == fast.value.column

    def test_bad_engine_name(self):
        with pytest.raises(ValueError):
            compute_pi(nim_spec(), 5, engine="warp")


class TestStructure:
    @pytest.mark.parametrize(
        "pairs", [p for p in FIXTURE_PAIRS if (0, 1) in p], ids=str
    )
    def test_density_bounds_at_every_prefix(self, pairs):
        table = compute_pi(validate_spec(pairs), 600)
        assert check_u_density(table) == ()
        assert check_a_density(table) == ()

    @pytest.mark.parametrize(
        "pairs", [p for p in FIXTURE_PAIRS if (0, 1) in p], ids=str
    )
    def test_complementarity_on_settled_prefix(self, pairs):
        table = compute_pi(validate_spec(pairs), 600)
        report = check_complementarity(table)
        assert report.ok
        assert report.bound >= 601

    @pytest.mark.parametrize(
        "pairs", [p for p in FIXTURE_PAIRS if (1, 1) in p and (0, 1) in p], ids=str
    )
    def test_a_and_b_meet_only_at_zero(self, pairs):
        table = compute_pi(validate_spec(pairs), 600)
        assert set(table.a) & set(table.b) == {0}

    @pytest.mark.parametrize(
        "extra", [(1, 1), (1, 2), (2, 3), (2, 4), (4, 6), (4, 7)], ids=str
    )
    def test_distinct_differences_for_wythoff_extensions(self, extra):
        pairs = [(0, 1), (1, 1)] if extra == (1, 1) else [(0, 1), (1, 1), extra]
        assert delta_values_distinct(compute_pi(validate_spec(pairs), 600))

    def test_a_starts_zero_one_and_increases(self):
        table = compute_pi(wythoff_extension(2, 4), 300)
        assert table.a[0] == 0 and table.b[0] == 0 and table.a[1] == 1
        assert all(x < y for x, y in zip(table.a, table.a[1:]))

    def test_b_increasing_probe(self):
        assert b_increasing(compute_pi(wythoff_spec(), 200))
        assert not b_increasing(compute_pi(wythoff_extension(1, 2), 200))

    def test_settled_bound_reaches_past_n(self):
        table = compute_pi(wythoff_extension(2, 3), 100)
        assert settled_value_bound(table) >= 101

    def test_table_from_pi_round_trip(self):
        table = compute_pi(wythoff_extension(1, 2), 60)
        rebuilt = table_from_pi(table.spec, table.n_max, list(table.pi))
        assert rebuilt == table

import pytest

from jordanloops.constructions import even_jordan, jordan_tower, odd_jordan
from jordanloops.powers import (
    DEFAULT_EXPONENT_CAP,
    element_order,
    generated_subloop,
    is_power_associative,
    is_well_defined,
    parenthesization_set,
    power_profile,
    powers_gap_loop,
    powers_gap_params,
    right_power,
)
from jordanloops.tables import build_magma, check, cyclic_group
from oracle import naive_parenthesizations

CIRC_23_GOLDEN = [
    [0, 1, 2, 3],
    [1, 0, 3, 2],
    [2, 3, 1, 0],
    [3, 2, 0, 1],
]


class TestRightPower:
    def test_cyclic_powers(self):
        t = cyclic_group(5)
        for c in range(5):
            for k in range(12):
                assert right_power(t, c, k) == c * k % 5

    def test_zeroth_power_is_identity(self):
        assert right_power(jordan_tower(2), 5, 0) == 0

    def test_validation(self):
        with pytest.raises(ValueError):
            right_power(cyclic_group(3), 1, -1)
        with pytest.raises(ValueError):
            right_power(cyclic_group(3), 3, 1)
        q = build_magma(2, [[1, 0], [0, 1]], "quasigroup")
        with pytest.raises(ValueError):
            right_power(q, 0, 2)


class TestParenthesizations:
    def test_groups_have_singleton_sets(self):
        t = cyclic_group(6)
        for c in range(6):
            profile = power_profile(t, c, 10)
            assert profile[0] is None
            for k in range(1, 11):
                assert profile[k] == frozenset((c * k % 6,))

    def test_matches_naive_recursion(self):
        gap, c = powers_gap_loop(2, 3)
        corpus = [(gap, x) for x in range(gap.order)]
        corpus += [(jordan_tower(2), x) for x in range(7)]
        for table, x in corpus:
            profile = power_profile(table, x, 8)
            for k in range(1, 9):
                assert profile[k] == naive_parenthesizations(table, x, k), (x, k)

    def test_parenthesization_set_shortcut(self):
        gap, c = powers_gap_loop(2, 3)
        assert parenthesization_set(gap, c, 6) == power_profile(gap, c, 6)[6]

    def test_cap_enforced(self):
        with pytest.raises(ValueError):
            power_profile(cyclic_group(3), 1, DEFAULT_EXPONENT_CAP + 1)
        assert power_profile(cyclic_group(3), 1, 70, cap=70)[70] == frozenset((70 % 3,))


class TestWellDefined:
    def test_equivalent_to_singleton_criterion(self):
        gap, _ = powers_gap_loop(2, 3)
        tables = [gap, jordan_tower(2), even_jordan(6), odd_jordan(7), cyclic_group(8)]
        for table in tables:
            for c in range(table.order):
                profile = power_profile(table, c, 12)
                singleton_so_far = True
                for k in range(1, 13):
                    singleton_so_far = singleton_so_far and len(profile[k]) == 1
                    assert is_well_defined(table, c, k) == singleton_so_far, (c, k)

    def test_trivial_exponents(self):
        t = jordan_tower(2)
        for c in range(7):
            assert is_well_defined(t, c, 0)
            assert is_well_defined(t, c, 1)


class TestGeneratedSubloop:
    def test_cyclic_subgroups(self):
        t = cyclic_group(6)
        assert generated_subloop(t, [2]).members == (0, 2, 4)
        assert generated_subloop(t, [3]).members == (0, 3)
        assert generated_subloop(t, [1]).members == tuple(range(6))
        assert generated_subloop(t, []).members == (0,)

    def test_records_generators(self):
        sub = generated_subloop(cyclic_group(6), [4, 2])
        assert sub.generators == (2, 4)

    def test_gap_element_generates_everything(self):
        gap, c = powers_gap_loop(2, 3)
        assert generated_subloop(gap, [c]).members == tuple(range(gap.order))


class TestPowerAssociativity:
    def test_groups_are_power_associative(self):
        assert is_power_associative(cyclic_group(12))

    def test_tower_is_power_associative(self):
        assert is_power_associative(jordan_tower(2))

    def test_gap_loop_is_not(self):
        gap, _ = powers_gap_loop(2, 3)
        assert not is_power_associative(gap)

    def test_element_orders(self):
        t = cyclic_group(6)
        assert [element_order(t, c) for c in range(6)] == [1, 6, 3, 2, 3, 6]

    def test_element_order_undefined_when_ambiguous(self):
        gap, c = powers_gap_loop(2, 3)
        assert element_order(gap, c) is None

    def test_tower_elements_have_order_three(self):
        t = jordan_tower(2)
        assert [element_order(t, c) for c in range(1, 7)] == [3] * 6


class TestGapParams:
    def test_smallest_case(self):
        p = powers_gap_params(2, 3)
        assert (p.m, p.n, p.s) == (2, 3, 4)
        assert p.phi == (0, 2, 1, 3)
        circ = [[p.circ(u, v) for v in range(4)] for u in range(4)]
        assert circ == CIRC_23_GOLDEN

    def test_coprime_skip(self):
        # smallest s >= m+2 coprime to n skips shared factors
        assert powers_gap_params(3, 5).s == 6
        assert powers_gap_params(4, 3).s == 7
        assert powers_gap_params(2, 9).s == 4
        assert powers_gap_params(7, 3).s == 10

    def test_validation(self):
        with pytest.raises(ValueError):
            powers_gap_params(1, 3)
        with pytest.raises(ValueError):
            powers_gap_params(2, 4)
        with pytest.raises(ValueError):
            powers_gap_params(2, 1)


class TestGapLoop:
    def test_golden_values(self):
        gap, c = powers_gap_loop(2, 3)
        assert gap.order == 12 and c == 4
        assert right_power(gap, c, 2) == 8
        assert right_power(gap, c, 3) == 9
        assert gap.rows[9][9] == 3  # c^3 * c^3
        assert right_power(gap, c, 6) == 6
        assert parenthesization_set(gap, c, 6) == frozenset((3, 6))

    def test_well_defined_exactly_below_mn(self):
        for m, n in ((2, 3), (3, 3), (2, 5)):
            gap, c = powers_gap_loop(m, n)
            for k in range(m * n):
                assert is_well_defined(gap, c, k), (m, n, k)
            assert not is_well_defined(gap, c, m * n)

    def test_gap_loops_are_jordan(self):
        for m, n in ((2, 3), (3, 3), (2, 5), (3, 5)):
            gap, _ = powers_gap_loop(m, n)
            assert gap.kind == "loop"
            assert check(gap, "jordan")
            assert not check(gap, "associative")

    def test_resolved_order_for_3_5(self):
        gap, c = powers_gap_loop(3, 5)
        assert gap.order == 30 and c == 6

import math
import os
import unittest
from fractions import Fraction
from unittest import mock

from hypothesis import given, settings, strategies as st

from src.config import ENV_STEP_BUDGET
from src.indexcalc import (
    ShiftMultiset,
    StackState,
    StepBudgetExceeded,
    computable_blocks,
    constant_exponent,
    exp_sum,
    exp_sum_bruteforce,
    expand_offsets,
    growth_checks,
    initial_state,
    int_text,
    iterate,
    iterate_to,
    scale_histogram,
    sequences,
    shift_multiset,
    step,
)

TABLE_ROWS = [
    "(1,1) (2,2)",
    "(2,3) (3,2)",
    "(2,2) (3,2) (4,3) (5,2)",
    "(2,1) (3,2) (4,5) (5,4) (6,3) (7,2)",
    "(3,2) (4,6) (5,6) (6,8) (7,6) (8,3) (9,2)",
    "(3,1) (4,6) (5,6) (6,10) (7,12) (8,9) (9,10) (10,6) (11,3) (12,2)",
]


class TestStep(unittest.TestCase):
    def test_initial_state(self):
        state = initial_state()
        self.assertEqual(state.entries, ((1, 2),))
        self.assertEqual(state.gamma, 2)

    def test_first_step(self):
        state = step(initial_state())
        self.assertEqual(state.entries, ((1, 1), (2, 2)))
        self.assertEqual(state.scale_history, (1,))

    def test_step_removes_exhausted_stack(self):
        state = step(StackState(m=0, entries=((1, 1), (2, 2))))
        self.assertEqual(state.entries, ((2, 3), (3, 2)))

    def test_empty_state_raises(self):
        with self.assertRaises(ValueError):
            step(StackState(m=0, entries=()))

    def test_table_rows(self):
        rows = [s.row() for s in iterate(6)][1:]
        self.assertEqual(rows, TABLE_ROWS)

    def test_zero_steps(self):
        self.assertEqual(iterate_to(0), initial_state())

    def test_dump_format(self):
        self.assertEqual(iterate_to(1).dump(), "m=1 k=1\n1\t1\n2\t2\n")

    def test_states_are_intervals(self):
        for state in iterate(13):
            self.assertTrue(state.is_interval(), state.m)

    @given(st.integers(min_value=1, max_value=40))
    @settings(max_examples=25, deadline=None)
    def test_gamma_closed_form(self, m):
        self.assertEqual(iterate_to(m).gamma, 2 ** m + 1)

    @given(st.integers(min_value=1, max_value=30))
    @settings(max_examples=20, deadline=None)
    def test_degree_recurrence(self, m):
        before = iterate_to(m - 1)
        after = step(before)
        self.assertEqual(after.degree, 2 * before.degree + before.min_index * (before.gamma - 1))


class TestBudget(unittest.TestCase):
    def test_explicit_budget(self):
        with self.assertRaises(StepBudgetExceeded) as ctx:
            iterate_to(10, budget=5)
        self.assertEqual(ctx.exception.requested, 10)
        self.assertIn(ENV_STEP_BUDGET, str(ctx.exception))

    def test_budget_is_value_error(self):
        self.assertTrue(issubclass(StepBudgetExceeded, ValueError))

    def test_env_budget(self):
        with mock.patch.dict(os.environ, {ENV_STEP_BUDGET: "3"}):
            with self.assertRaises(StepBudgetExceeded):
                iterate_to(4)
            self.assertEqual(iterate_to(3).m, 3)

    def test_negative_steps(self):
        with self.assertRaises(ValueError):
            iterate_to(-1)

    def test_sequences_budget(self):
        with self.assertRaises(StepBudgetExceeded):
            sequences(4, budget=10)


class TestSequences(unittest.TestCase):
    def setUp(self):
        self.table = sequences(4)

    def test_block_sequences(self):
        self.assertEqual(self.table.r, (2, 3, 2, 6))
        self.assertEqual(self.table.R, (2, 5, 7, 13))
        self.assertEqual(self.table.zeta, (3, 9, 15, 39))

    def test_gamma_and_degree(self):
        for k, R in enumerate(self.table.R, start=1):
            state = iterate_to(R)
            self.assertEqual(self.table.gamma_k[k - 1], state.gamma)
            self.assertEqual(self.table.d_k[k - 1], state.degree)
        self.assertEqual(self.table.d_k[0], 12)
        self.assertEqual(self.table.d_k[1], 192)

    def test_block_end_intervals(self):
        self.assertEqual(iterate_to(2).indices, (2, 3))
        self.assertEqual(iterate_to(5).indices, tuple(range(3, 10)))

    def test_windowed_counts_match_full_iteration(self):
        expected = tuple(len(s.entries) for s in iterate(13))[1:]
        self.assertEqual(self.table.j_counts, expected)

    def test_block_constants(self):
        self.assertEqual(self.table.e_block[:5], (1, 8, 160, 1024, 163840))

    def test_tsv_header(self):
        header = self.table.to_tsv().splitlines()[0]
        self.assertEqual(header, "k\tr\tR\tzeta\tgamma_k\td_k\te_Rk")

    def test_invalid_K(self):
        with self.assertRaises(ValueError):
            sequences(0)

    def test_computable_blocks_within_budget(self):
        table = computable_blocks(budget=200)
        self.assertLessEqual(table.R[-1], 200)
        self.assertEqual(table.r[:4], (2, 3, 2, 6))


class TestConstants(unittest.TestCase):
    def test_exponents(self):
        self.assertEqual([constant_exponent(m) for m in range(7)], [1, 3, 8, 24, 64, 160, 416])

    def test_printed_constants(self):
        self.assertEqual([2 ** constant_exponent(m) for m in range(4)], [2, 8, 256, 16777216])

    def test_table_e_matches(self):
        table = sequences(3)
        self.assertEqual([table.e(m) for m in range(8)],
                         [constant_exponent(m) for m in range(8)])

    def test_int_text(self):
        self.assertEqual(int_text(12345), "12345")
        self.assertTrue(int_text(2 ** 20000).startswith("0x"))


class TestShiftMultiset(unittest.TestCase):
    def test_cardinality(self):
        ms = shift_multiset(2)
        self.assertEqual(ms.cardinality(), 81)
        self.assertEqual(sum(expand_offsets(ms).values()), 81)

    def test_base_offsets(self):
        self.assertEqual(expand_offsets(shift_multiset(0)),
                         {Fraction(-1, 2): 1, Fraction(0): 1, Fraction(1, 2): 1})

    def test_offsets_symmetric(self):
        offsets = expand_offsets(shift_multiset(3))
        for rho, count in offsets.items():
            self.assertEqual(offsets[-rho], count)

    def test_expansion_limit(self):
        with self.assertRaises(ValueError):
            expand_offsets(ShiftMultiset(scale_exponents=(1,) * 6))

    def test_scale_histogram(self):
        ms = ShiftMultiset(scale_exponents=(1, 1, 2))
        self.assertEqual(scale_histogram(ms), {0: 1, 1: 2, 2: 2, 3: 2, 4: 1})

    def test_exp_sum_at_zero(self):
        self.assertAlmostEqual(float(exp_sum(shift_multiset(3), 0.0).value), 3.0 ** 8, delta=1e-6)

    def test_exp_sum_negative_factor(self):
        # m = 0: E(2 pi) = 1 + 2 cos(pi) = -1
        result = exp_sum(shift_multiset(0), 2 * math.pi)
        self.assertEqual(result.sign, -1)
        self.assertFalse(result.is_zero)
        self.assertAlmostEqual(result.log_abs, 0.0, places=15)
        self.assertAlmostEqual(float(result.value), -1.0, places=15)

    @given(st.integers(min_value=0, max_value=3),
           st.floats(min_value=-40.0, max_value=40.0, allow_nan=False))
    @settings(max_examples=40, deadline=None)
    def test_exp_sum_factorization(self, m, x):
        # relativo a max |E| = E(0) = #I_m
        ms = shift_multiset(m)
        self.assertAlmostEqual(float(exp_sum(ms, x).value), exp_sum_bruteforce(ms, x),
                               delta=1e-12 * ms.cardinality())


class TestGrowthChecks(unittest.TestCase):
    def setUp(self):
        self.report = growth_checks(K=4)

    def entry(self, check_id, k):
        return next(e for e in self.report.entries if e.check_id == check_id and e.k == k
                    and "menor k" not in e.note)

    def test_report_passes(self):
        self.assertTrue(self.report.passed)

    def test_est0_counts(self):
        self.assertEqual(self.entry("est0", 1).lhs, 4)
        est0 = self.entry("est0", 2)
        self.assertEqual(est0.lhs, 17)
        self.assertTrue(est0.passed)
        self.assertIn("= 21", est0.note)

    def test_recrk_identity_and_printed_bound(self):
        for k in range(1, 5):
            self.assertTrue(self.entry("recrk-identity", k).passed)
        for k in range(1, 4):
            self.assertTrue(self.entry("recrk", k).passed)
        printed = self.entry("recrk", 4)
        self.assertFalse(printed.passed)
        self.assertTrue(printed.diagnostic)
        self.assertEqual(printed.lhs, 163840)

    def test_interval_and_consumption(self):
        for k in range(1, 5):
            self.assertTrue(self.entry("interval", k).passed)
            self.assertTrue(self.entry("consumption", k).passed)

    def test_empirical_rho(self):
        self.assertGreater(self.report.rho_empirical, 1.0)

    def test_bad_epsilon(self):
        with self.assertRaises(ValueError):
            growth_checks(K=2, epsilon=1.5)


if __name__ == '__main__':
    unittest.main()

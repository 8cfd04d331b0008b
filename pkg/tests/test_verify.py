import math
import unittest
from dataclasses import replace
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from src.config import EngineConfig, SuiteConfig
from src.indexcalc import StepBudgetExceeded
from src.measures import MeasureSpec
from src.verify import (
    FAIL,
    INCONCLUSIVE,
    PASS,
    VerificationReport,
    check_constants,
    check_eq21,
    check_eq21nu,
    check_gamma,
    check_p6,
    check_sine,
    check_stack,
    check_theorem_final,
    convelem_lists,
    exit_status,
    format_real,
    run_suite,
    summarize,
)


def _report(status, diagnostic=False):
    return VerificationReport("gamma", {}, 0, 0, None, 0.0, status, diagnostic=diagnostic)


class TestFormatting(unittest.TestCase):
    def test_format_real(self):
        self.assertEqual(format_real(0.1), "0.10000000000000001")
        self.assertEqual(format_real(Fraction(3)), "3")
        self.assertEqual(format_real(Fraction(1, 3)), format(1 / 3, ".17g"))
        self.assertTrue(format_real(2 ** 20000).startswith("0x"))
        self.assertIsNone(format_real(None))

    def test_to_dict_fields(self):
        report = check_constants()
        self.assertEqual(
            list(report.to_dict()),
            ["check_id", "anchor", "inputs", "lhs", "rhs", "margin", "error_budget",
             "status", "exact", "diagnostic", "notes"],
        )
        self.assertTrue(report.anchor)


class TestNumericChecks(unittest.TestCase):
    def test_eq21_dirac(self):
        lower, upper = check_eq21(MeasureSpec("dirac"), 1.0)
        self.assertEqual(lower.status, PASS)
        self.assertEqual(upper.status, PASS)
        self.assertAlmostEqual(lower.lhs, 1.0)
        self.assertAlmostEqual(lower.rhs, 2.0)

    def test_eq21_gaussian(self):
        for T in (0.25, 4.0):
            lower, upper = check_eq21(MeasureSpec("gaussian"), T)
            self.assertTrue(lower.passed and upper.passed, T)

    def test_eq21nu(self):
        self.assertTrue(check_eq21nu(MeasureSpec("atoms", a=1.0), 1.0, 2).passed)
        with self.assertRaises(ValueError):
            check_eq21nu(MeasureSpec("dirac"), 1.0, 0)

    def test_p6_dirac(self):
        report = check_p6(MeasureSpec("dirac"), 1, 1.0)
        self.assertEqual(report.status, PASS)
        self.assertAlmostEqual(report.rhs, 10.125, places=10)
        self.assertAlmostEqual(report.lhs, 1.0)

    def test_p6_mutation_fails(self):
        report = check_p6(MeasureSpec("dirac"), 1, 1.0, constant_shift=-4)
        self.assertEqual(report.status, FAIL)
        self.assertEqual(report.inputs["constant_shift"], -4)

    def test_p6_printed_is_diagnostic(self):
        report = check_p6(MeasureSpec("dirac"), 1, 1.0, sinc_form="printed")
        self.assertEqual(report.check_id, "p6-printed")
        self.assertTrue(report.diagnostic)

    def test_p6_block_range(self):
        with self.assertRaises(ValueError):
            check_p6(MeasureSpec("dirac"), 0, 1.0)
        with self.assertRaises(ValueError):
            check_p6(MeasureSpec("dirac"), 4, 1.0)

    def test_theorem_dirac(self):
        chain, constant = check_theorem_final(MeasureSpec("dirac"), 1.0, 1)
        self.assertEqual(chain.status, PASS)
        self.assertAlmostEqual(chain.lhs, 16.0)
        self.assertAlmostEqual(chain.rhs, 162.0)
        self.assertTrue(constant.diagnostic)
        self.assertTrue(constant.exact)

    def test_p6_gaussian_windows(self):
        for W in (0.5, 1.0, 4.0):
            report = check_p6(MeasureSpec("gaussian"), 1, W)
            self.assertEqual(report.status, PASS, W)
            self.assertGreater(report.lhs, 0.0)

    def test_theorem_triangle_second_block(self):
        chain, _ = check_theorem_final(MeasureSpec("triangle"), 0.5, 2)
        self.assertEqual(chain.status, PASS, chain.notes)

    def test_step_budget_reaches_checks(self):
        tight = EngineConfig(step_budget=3)
        with self.assertRaises(StepBudgetExceeded):
            check_p6(MeasureSpec("dirac"), 2, 1.0, config=tight)
        with self.assertRaises(StepBudgetExceeded):
            check_theorem_final(MeasureSpec("dirac"), 1.0, 2, config=tight)
        self.assertEqual(check_p6(MeasureSpec("dirac"), 1, 1.0, config=tight).status, PASS)


class TestExactChecks(unittest.TestCase):
    def test_constants(self):
        report = check_constants()
        self.assertEqual(report.lhs, [2, 8, 256, 16777216])
        self.assertEqual(report.status, PASS)

    def test_gamma(self):
        self.assertEqual(check_gamma(60).status, PASS)

    def test_stack(self):
        report = check_stack(4)
        self.assertEqual(report.status, PASS, report.notes)

    def test_sine(self):
        reports = check_sine(pairs=2000, max_n=64, seed=7)
        self.assertEqual([r.check_id for r in reports],
                         ["sine-multiple", "sine-subadditivity", "sinc-domination"])
        for report in reports:
            self.assertEqual(report.status, PASS, report.check_id)

    def test_convelem_lists(self):
        lists = convelem_lists(20, 5, seed=20240101)
        self.assertEqual(len(lists), 20)
        for values in lists:
            self.assertTrue(2 <= len(values) <= 5)
            self.assertEqual(values, sorted(values))
        self.assertEqual(lists, convelem_lists(20, 5, seed=20240101))


class TestSineProperties(unittest.TestCase):
    @given(st.integers(min_value=1, max_value=64), st.floats(min_value=-50, max_value=50, allow_nan=False))
    @settings(max_examples=200, deadline=None)
    def test_sine_multiple(self, n, x):
        self.assertLessEqual(abs(math.sin(n * x)), n * abs(math.sin(x)) + 1e-12 * n)

    @given(st.lists(st.floats(min_value=1e-6, max_value=3.14159), min_size=2, max_size=8))
    @settings(max_examples=200, deadline=None)
    def test_subadditivity(self, parts):
        self.assertLessEqual(abs(math.sin(math.fsum(parts))), math.fsum(math.sin(p) for p in parts) + 1e-12)


class TestSuite(unittest.TestCase):
    def test_exact_only_has_zero_budget(self):
        suite = replace(SuiteConfig.exact_only(), kappaj_max=2, convelem_lists=3, p5_exact_m=(0, 1))
        reports = run_suite(suite)
        self.assertTrue(reports)
        for report in reports:
            self.assertEqual(report.error_budget, 0.0, report.check_id)
            if not report.diagnostic:
                self.assertEqual(report.status, PASS, report.check_id)
        self.assertEqual(exit_status(reports), 0)

    def test_selected_family(self):
        suite = SuiteConfig(checks=("eq21",), measures=("dirac",), eq21_T=(1.0,))
        reports = run_suite(suite)
        self.assertEqual([r.check_id for r in reports], ["eq21", "eq21"])
        self.assertEqual(exit_status(reports), 0)

    def test_single_check_id_filter(self):
        suite = SuiteConfig(checks=("p6-printed",), measures=("dirac",), p6_blocks=(1,), p6_W=(1.0,))
        reports = run_suite(suite)
        self.assertEqual([r.check_id for r in reports], ["p6-printed"])

    def test_mutation_fails_suite(self):
        suite = SuiteConfig(checks=("p6",), measures=("dirac",), p6_blocks=(1,), p6_W=(1.0,),
                            constant_shift=-4)
        reports = run_suite(suite)
        self.assertEqual(exit_status(reports), 1)

    def test_deterministic_order(self):
        suite = SuiteConfig(checks=("constants", "gamma", "stack", "kappaj"), kappaj_max=3)
        first = [r.to_dict() for r in run_suite(suite)]
        second = [r.to_dict() for r in run_suite(suite)]
        self.assertEqual(first, second)
        self.assertEqual([d["check_id"] for d in first],
                         ["constants", "gamma", "stack", "kappaj", "kappaj", "kappaj"])

    def test_summarize_ignores_diagnostics(self):
        reports = [_report(PASS), _report(FAIL, diagnostic=True), _report(INCONCLUSIVE)]
        self.assertEqual(summarize(reports), {PASS: 1, FAIL: 0, INCONCLUSIVE: 1})
        self.assertEqual(exit_status(reports), 3)
        self.assertEqual(exit_status([_report(PASS), _report(FAIL)]), 1)
        self.assertEqual(exit_status([_report(PASS)]), 0)

    def test_default_suite_passes(self):
        reports = run_suite()
        self.assertGreaterEqual(len(reports), 60)
        for report in reports:
            if not report.diagnostic:
                self.assertEqual(report.status, PASS, (report.check_id, report.inputs))
        self.assertEqual(exit_status(reports), 0)

    def test_suite_honours_engine_config(self):
        suite = SuiteConfig(checks=("p6",), measures=("dirac",), p6_blocks=(2,), p6_W=(1.0,))
        with self.assertRaises(StepBudgetExceeded):
            run_suite(suite, EngineConfig(step_budget=3))


if __name__ == '__main__':
    unittest.main()

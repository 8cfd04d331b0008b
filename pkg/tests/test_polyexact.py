import unittest
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from src.config import EngineConfig
from src.indexcalc import StepBudgetExceeded
from src.polyexact import (
    ConvolutionBudgetExceeded,
    PiecewisePoly,
    as_fraction,
    box,
    conv_power,
    convolve,
    convolve_all,
    dilate,
    g,
    g_j,
    gj_bound,
    indicator,
    nonneg_certificate,
    nonneg_on,
    shift_sum,
    trapezoid_density,
    triangle,
    verify_conv01,
    verify_convel,
    verify_convelem,
    verify_kappaj,
    verify_kt,
    verify_p5,
)

halfwidths = st.fractions(min_value=Fraction(1, 8), max_value=4, max_denominator=8)


class TestPiecewisePoly(unittest.TestCase):
    def test_closed_indicator(self):
        self.assertEqual(g().evaluate(Fraction(1, 2)), 1)
        self.assertEqual(g().evaluate(Fraction(-1, 2)), 1)
        self.assertEqual(g().evaluate(Fraction(3, 4)), 0)

    def test_g_j(self):
        self.assertEqual(g_j(1).support, (Fraction(-1, 4), Fraction(1, 4)))

    def test_triangle_values(self):
        K = triangle()
        self.assertEqual(K(0), 1)
        self.assertEqual(K(Fraction(1, 2)), Fraction(1, 2))
        self.assertEqual(K(2), 0)
        self.assertEqual(K.integral(), 1)

    def test_canonical_merges_pieces(self):
        f = PiecewisePoly.from_coefficients([0, 1, 2, 3], [[0], [1], [1]])
        self.assertEqual(f.breakpoints, (Fraction(1), Fraction(3)))
        self.assertEqual(len(f.pieces), 1)

    def test_invalid_breakpoints(self):
        with self.assertRaises(ValueError):
            PiecewisePoly.from_coefficients([1, 0], [[1]])

    def test_zero(self):
        self.assertTrue(PiecewisePoly.zero().is_zero)
        self.assertEqual(PiecewisePoly.zero().evaluate(0), 0)
        self.assertTrue((g() - g()).is_zero)

    def test_floats_rejected(self):
        with self.assertRaises(ValueError):
            as_fraction(0.5)

    def test_nonpositive_halfwidth(self):
        with self.assertRaises(ValueError):
            indicator(0)
        with self.assertRaises(ValueError):
            dilate(g(), -1)

    def test_translate(self):
        shifted = triangle().translate(1)
        self.assertEqual(shifted(-1), 1)
        self.assertEqual(shifted.support, (Fraction(-2), Fraction(0)))

    def test_restrict(self):
        half = triangle().restrict(0, 2)
        self.assertEqual(half.integral(), Fraction(1, 2))

    def test_json(self):
        f = conv_power(triangle(), 2)
        self.assertIn('"breakpoints"', f.to_json())
        self.assertEqual(PiecewisePoly.from_json(f.to_json()), f)

    def test_shift_sum_multiplicity(self):
        f = shift_sum(g(), {Fraction(0): 2, Fraction(1): 1})
        self.assertEqual(f(0), 2)
        self.assertEqual(f(-1), 1)
        self.assertEqual(f.integral(), 3)


class TestConvolution(unittest.TestCase):
    def test_g_star_g_is_triangle(self):
        self.assertTrue((convolve(g(), g()) - triangle()).is_zero)

    def test_second_power_at_zero(self):
        self.assertEqual(conv_power(triangle(), 2)(0), Fraction(2, 3))

    def test_degree_and_support(self):
        f = conv_power(triangle(), 3)
        self.assertEqual(f.degree, 5)
        self.assertEqual(f.support, (Fraction(-3), Fraction(3)))

    def test_zero_operand(self):
        self.assertTrue(convolve(PiecewisePoly.zero(), g()).is_zero)

    def test_power_budget(self):
        with self.assertRaises(ConvolutionBudgetExceeded):
            conv_power(triangle(), 3, max_power=2)
        with self.assertRaises(ValueError):
            conv_power(triangle(), 0)

    @given(halfwidths, halfwidths)
    @settings(max_examples=15, deadline=None)
    def test_mass_conservation(self, a, b):
        self.assertEqual(convolve(indicator(a), indicator(b)).integral(), 4 * a * b)

    @given(halfwidths)
    @settings(max_examples=10, deadline=None)
    def test_commutativity(self, a):
        left = convolve(triangle(), indicator(a))
        right = convolve(indicator(a), triangle())
        self.assertTrue((left - right).is_zero)

    @given(halfwidths)
    @settings(max_examples=10, deadline=None)
    def test_polynomial_pair_matches_box_path(self, a):
        # caminho geral contra caixas: T_a g * T_a g = a T_a K
        general = convolve(triangle(), dilate(triangle(), a))
        boxed = convolve(convolve(convolve(g(), g()), dilate(g(), a)), dilate(g(), a))
        self.assertTrue((general.scale(a) - boxed).is_zero)

    @given(halfwidths, halfwidths)
    @settings(max_examples=10, deadline=None)
    def test_dilation_scales_mass(self, a, b):
        f = indicator(a)
        self.assertEqual(dilate(f, b).integral(), b * f.integral())

    def test_dilation_distributes_over_convolution(self):
        # T_a(h*f) = (1/a) (T_a h * T_a f)
        for a in (Fraction(1, 2), Fraction(1, 4), Fraction(3)):
            left = dilate(convolve(g(), triangle()), a)
            right = convolve(dilate(g(), a), dilate(triangle(), a)).scale(1 / a)
            self.assertTrue((left - right).is_zero, a)
            squared = convolve(dilate(g(), a), dilate(g(), a))
            self.assertTrue((squared - dilate(triangle(), a).scale(a)).is_zero, a)

    @given(halfwidths, halfwidths, halfwidths, st.sampled_from([Fraction(1, 2), Fraction(1, 4), Fraction(3)]))
    @settings(max_examples=10, deadline=None)
    def test_dilation_of_triple_convolution(self, a, b, c, scale):
        boxes = [indicator(a), indicator(b), box(-c, c / 2)]
        left = dilate(convolve_all(boxes), scale)
        right = convolve_all(dilate(h, scale) for h in boxes).scale(scale ** -2)
        self.assertTrue((left - right).is_zero)


class TestShiftOperators(unittest.TestCase):
    I = {Fraction(-1, 2): 1, Fraction(0): 1, Fraction(1, 2): 1}
    J = {Fraction(-1, 8): 1, Fraction(0): 1, Fraction(1, 8): 1}

    def test_shift_sum_commutes_with_convolution(self):
        left = convolve(shift_sum(g(), self.I), triangle())
        right = shift_sum(convolve(g(), triangle()), self.I)
        self.assertTrue((left - right).is_zero)

    def test_nested_shift_sums(self):
        combined = {}
        for a, ca in self.I.items():
            for b, cb in self.J.items():
                combined[a + b] = combined.get(a + b, 0) + ca * cb
        nested = shift_sum(shift_sum(triangle(), self.I), self.J)
        self.assertTrue((nested - shift_sum(triangle(), combined)).is_zero)

    @given(halfwidths)
    @settings(max_examples=10, deadline=None)
    def test_dilation_of_shift_sum(self, a):
        scaled = {a * rho: c for rho, c in self.I.items()}
        left = dilate(shift_sum(g(), self.I), a)
        right = shift_sum(dilate(g(), a), scaled)
        self.assertTrue((left - right).is_zero)


class TestCertificates(unittest.TestCase):
    def test_nonnegative_triangle(self):
        cert = nonneg_certificate(triangle())
        self.assertTrue(cert.passed)
        self.assertIsNone(cert.witness)

    def test_negative_part_gives_witness(self):
        f = triangle() - box(-1, 1, Fraction(1, 2))
        cert = nonneg_certificate(f)
        self.assertFalse(cert.passed)
        self.assertLess(f(cert.witness), 0)
        self.assertEqual(cert.witness_value, f(cert.witness))

    def test_double_root_passes(self):
        f = PiecewisePoly.from_coefficients([0, 1], [[Fraction(1, 9), Fraction(-2, 3), 1]])
        self.assertTrue(nonneg_certificate(f).passed)

    def test_interior_dip_found(self):
        f = PiecewisePoly.from_coefficients([-1, 1], [[Fraction(-1, 100), 0, 1]])
        cert = nonneg_certificate(f)
        self.assertFalse(cert.passed)
        self.assertLess(f(cert.witness), 0)

    def test_nonneg_on(self):
        f = PiecewisePoly.from_coefficients([-1, 1], [[0, 1]])
        self.assertTrue(nonneg_on(f, 0, 1).passed)
        self.assertFalse(nonneg_on(f, -1, 1).passed)


class TestKernelLemmas(unittest.TestCase):
    def test_partition_of_unity(self):
        self.assertTrue(verify_kt(1, 0).passed)
        self.assertTrue(verify_kt(Fraction(1, 2), Fraction(1, 3)).passed)

    def test_kt_rejects_bad_T(self):
        with self.assertRaises(ValueError):
            verify_kt(0)

    def test_trapezoid(self):
        exact, printed = verify_convel(1, 2)
        self.assertTrue(exact.passed)
        self.assertEqual(exact.lhs, 2)
        self.assertFalse(printed.passed)
        self.assertTrue(printed.diagnostic)

    def test_trapezoid_equal_halfwidths(self):
        exact, printed = verify_convel(Fraction(1, 2), Fraction(1, 2))
        self.assertTrue(exact.passed)
        self.assertTrue(printed.passed)

    def test_trapezoid_order(self):
        with self.assertRaises(ValueError):
            trapezoid_density(2, 1)

    def test_gj_bound(self):
        self.assertEqual(gj_bound([1, 2]), 4)
        self.assertEqual(gj_bound([1, 2], sharp=True), 2)
        self.assertEqual(gj_bound([Fraction(1, 2), Fraction(1, 2)]), 2)
        self.assertEqual(gj_bound([Fraction(1, 2), Fraction(1, 2)], sharp=True), 1)
        self.assertEqual(gj_bound([3]), 1)

    def test_gj_bound_rejects_unsorted(self):
        with self.assertRaises(ValueError):
            gj_bound([2, 1])
        with self.assertRaises(ValueError):
            gj_bound([])

    def test_convelem(self):
        self.assertTrue(verify_convelem([Fraction(1, 2), Fraction(1, 2)]).passed)
        self.assertTrue(verify_convelem([1, 2, 3]).passed)
        self.assertTrue(verify_convelem([Fraction(1, 4), Fraction(1, 3), 1, 2]).passed)

    def test_kappaj(self):
        for J in range(1, 7):
            check = verify_kappaj(J)
            self.assertTrue(check.passed, J)
            self.assertEqual(check.error_budget, 0.0)

    def test_conv01(self):
        check = verify_conv01()
        self.assertTrue(check.passed)
        self.assertEqual(check.lhs, 1)


class TestPointwiseDomination(unittest.TestCase):
    def test_exact_small_steps(self):
        for m in range(4):
            check = verify_p5(m, "exact")
            self.assertTrue(check.passed, m)
            self.assertFalse(check.sampled)

    def test_exact_limit(self):
        with self.assertRaises(ConvolutionBudgetExceeded):
            verify_p5(4, "exact")

    def test_sampled_mode_is_not_exact(self):
        check = verify_p5(2, "sampled", grid_points=512)
        self.assertTrue(check.sampled)
        self.assertEqual(check.inputs["mode"], "sampled")
        self.assertGreaterEqual(check.error_budget, 0.0)

    def test_sampled_fourth_step(self):
        check = verify_p5(4, "sampled", grid_points=4096, window=(-0.6, 0.6))
        self.assertTrue(check.passed, check.notes)
        self.assertTrue(check.sampled)
        self.assertGreaterEqual(check.rhs - check.lhs, 0)

    def test_config_limits_exact_mode(self):
        limited = EngineConfig(p5_exact_max_m=1)
        self.assertTrue(verify_p5(1, "exact", config=limited).passed)
        with self.assertRaises(ConvolutionBudgetExceeded):
            verify_p5(2, "exact", config=limited)
        with self.assertRaises(StepBudgetExceeded):
            verify_p5(2, "exact", config=EngineConfig(step_budget=1))

    def test_unknown_mode(self):
        with self.assertRaises(ValueError):
            verify_p5(1, "symbolic")


if __name__ == '__main__':
    unittest.main()

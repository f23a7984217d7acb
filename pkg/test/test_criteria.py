import logging
import math
import os
import unittest
import sys

sys.path.append(os.path.dirname(os.path.dirname(os.path.realpath(__file__))))  # noqa
from py_lplab.criteria import (CLASSIFIER, DIAGNOSTIC, EVIDENCE, FAILS, HOLDS, INCONCLUSIVE, NECESSARY,  # noqa
                               SUFFICIENT, WITNESS_SUFFICIENT, CriterionVerdict, apolar_check, apolar_quartic,
                               cubic_section_minimum, full_report, hutchinson_check, lemma_q2q3_check,
                               monotone_classify, newton_check, rouche_gate_check, tail_bound_lm2,
                               thm1_zero_segment_check, thm2_bound, thm2_check, thm3_check, truncation_roots,
                               truncation_roots_check)
from py_lplab.roots import ALL_REAL_NEGATIVE, COMPLEX_PRESENT  # noqa
from py_lplab.series import (InvalidInputError, coeffs_from_quotients, euler_like_series, explicit_series,  # noqa
                             exponential_series, partial_theta_series, quotients_from_coeffs)

PHI_2 = -0.1211242080025805
ORDER = ['newton', 'lemma_q2q3', 'hutchinson', 'monotone', 'thm1_zero_segment', 'thm2', 'thm3', 'rouche_gate',
         'apolar', 'truncation_roots']


def _statuses(verdicts):
    return {v.criterion: v.status for v in verdicts}


class TestNecessaryConditions(unittest.TestCase):

    def test_newton_exponential_equality(self):
        verdict = newton_check(quotients_from_coeffs(exponential_series(8)))
        self.assertEqual(HOLDS, verdict.status)
        self.assertEqual(NECESSARY, verdict.role)
        self.assertTrue(verdict.flags['exponential'])
        self.assertEqual(2, verdict.witness)
        self.assertAlmostEqual(0.0, verdict.computed['min_margin'], places=14)

    def test_newton_fails(self):
        verdict = newton_check([1.5, 2.0, 3.0])
        self.assertEqual(FAILS, verdict.status)
        self.assertEqual(2, verdict.witness)
        self.assertAlmostEqual(-0.5, verdict.computed['min_margin'], places=14)
        self.assertFalse(verdict.flags['exponential'])

    def test_newton_strict(self):
        verdict = newton_check([4.0] * 5)
        self.assertEqual(HOLDS, verdict.status)
        self.assertIsNone(verdict.witness)
        self.assertEqual(2.0, verdict.computed['min_margin'])

    def test_lemma_q2q3(self):
        self.assertEqual(HOLDS, lemma_q2q3_check(2.0, 1.5).status)
        self.assertEqual(FAILS, lemma_q2q3_check(3.5, 7.0).status)
        self.assertEqual(FAILS, lemma_q2q3_check(3.0, 10.0).status)
        self.assertAlmostEqual(-1.5, lemma_q2q3_check(2.5, 3.0).computed['margin'], places=14)

    def test_lemma_corollary(self):
        verdict = lemma_q2q3_check(3.5, 5.0)
        self.assertEqual(HOLDS, verdict.status)
        self.assertAlmostEqual(0.5, verdict.computed['margin'], places=14)
        self.assertTrue(verdict.flags['corollary_applies'])
        self.assertTrue(verdict.flags['corollary_consistent'])
        verdict = lemma_q2q3_check(0.5, 0.6)
        self.assertEqual(HOLDS, verdict.status)
        self.assertFalse(verdict.flags['corollary_applies'])

    def test_lemma_rejects_nonpositive(self):
        with self.assertRaises(InvalidInputError):
            lemma_q2q3_check(0.0, 1.0)

    def test_thm1_partial_theta(self):
        verdict = thm1_zero_segment_check(partial_theta_series(2.0))
        self.assertEqual(HOLDS, verdict.status)
        self.assertLessEqual(verdict.computed['witness_value'], -0.12)
        self.assertLessEqual(verdict.computed['witness_value'], -verdict.computed['error_bound'])
        self.assertTrue(-3.0 <= verdict.witness <= -1.8)
        self.assertAlmostEqual(2.0 * verdict.witness, verdict.computed['witness_original'], places=12)
        self.assertAlmostEqual(-2.0, verdict.computed['sqrt_q2_point'], places=14)
        self.assertAlmostEqual(PHI_2, verdict.computed['sqrt_q2_value'], places=12)

    def test_thm1_euler_like_witness(self):
        verdict = thm1_zero_segment_check(euler_like_series(4.0))
        self.assertEqual(HOLDS, verdict.status)
        self.assertLess(verdict.computed['deepest_value'], -0.005)
        self.assertNotIn('sqrt_q2_point', verdict.computed)

    def test_thm1_euler_like_no_witness(self):
        verdict = thm1_zero_segment_check(euler_like_series(3.0))
        self.assertEqual(FAILS, verdict.status)
        self.assertIsNone(verdict.witness)
        self.assertGreater(verdict.computed['deepest_value'], 0.1)
        self.assertTrue(verdict.flags['resolution_limited'])

    def test_thm1_hypothesis_unmet(self):
        verdict = thm1_zero_segment_check(exponential_series())
        self.assertEqual(INCONCLUSIVE, verdict.status)

    def test_thm1_constant_quotients_with_rounding(self):
        # q_n = 3.61 for every n, but the computed q3 lands an ulp below q2
        verdict = thm1_zero_segment_check(partial_theta_series(1.9))
        self.assertEqual(HOLDS, verdict.status)
        self.assertLessEqual(verdict.computed['witness_value'], -verdict.computed['error_bound'])
        self.assertEqual(HOLDS, thm2_check(3.61, 3.61 * (1.0 - 1e-15)).status)
        self.assertEqual(INCONCLUSIVE, thm2_check(3.61, 3.6).status)

    def test_thm2_bound(self):
        self.assertAlmostEqual(3.0, thm2_bound(3.0).bound, places=14)
        self.assertAlmostEqual(4.755928946, thm2_bound(3.5).bound, places=8)
        self.assertAlmostEqual(6.0, thm2_bound(3.5).remark_bound, places=14)
        self.assertAlmostEqual(200.6, thm2_bound(3.99).bound, delta=0.1)
        for q2 in (2.9, 4.0):
            with self.assertRaises(InvalidInputError):
                thm2_bound(q2)

    def test_thm2_check(self):
        verdict = thm2_check(3.5, 4.0)
        self.assertEqual(HOLDS, verdict.status)
        self.assertAlmostEqual(0.755928946, verdict.computed['margin'], places=8)
        self.assertLess(verdict.computed['cubic_min_value'], 0.0)
        verdict = thm2_check(3.5, 5.0)
        self.assertEqual(FAILS, verdict.status)
        self.assertGreater(verdict.computed['cubic_min_value'], 0.0)
        self.assertEqual(INCONCLUSIVE, thm2_check(4.2, 5.0).status)
        self.assertEqual(INCONCLUSIVE, thm2_check(2.5, 3.0).status)
        self.assertEqual(INCONCLUSIVE, thm2_check(3.5, 3.2).status)

    def test_cubic_section_minimum(self):
        x1, value = cubic_section_minimum(3.5, 5.0)
        self.assertAlmostEqual((17.5 - 3.5 * math.sqrt(10.0)) / 3.0, x1, places=14)
        self.assertAlmostEqual(0.00846, value, places=4)
        _, value = cubic_section_minimum(3.5, 4.0)
        self.assertAlmostEqual(-0.037, value, places=3)


class TestSufficientConditions(unittest.TestCase):

    def test_hutchinson(self):
        verdict = hutchinson_check([4.0, 4.0, 4.0, 5.0])
        self.assertEqual(HOLDS, verdict.status)
        self.assertEqual(SUFFICIENT, verdict.role)
        self.assertTrue(verdict.flags['sections_real_rooted_expected'])
        verdict = hutchinson_check([4.0, 3.9, 5.0])
        self.assertEqual(FAILS, verdict.status)
        self.assertEqual(3, verdict.witness)
        self.assertAlmostEqual(-0.1, verdict.computed['min_margin'], places=14)

    def test_thm3(self):
        verdict = thm3_check(3.5, 4.0, 3.5)
        self.assertEqual(HOLDS, verdict.status)
        self.assertEqual(WITNESS_SUFFICIENT, verdict.role)
        self.assertAlmostEqual(8.0 / 1.75, verdict.computed['threshold'], places=14)
        self.assertEqual(FAILS, thm3_check(3.5, 5.0, 3.5).status)
        verdict = thm3_check(3.2, 3.5, 3.0)
        self.assertEqual(3.0, verdict.computed['d'])
        self.assertEqual(FAILS, verdict.status)
        verdict = thm3_check(3.0, 2.5, 3.0)
        self.assertEqual(HOLDS, verdict.status)
        self.assertAlmostEqual(8.0 / 3.0, verdict.computed['threshold'], places=14)
        self.assertGreater(verdict.computed['quartic_discriminant'], 0.0)

    def test_thm3_out_of_range(self):
        self.assertEqual(INCONCLUSIVE, thm3_check(3.5, 4.0, 2.9).status)
        self.assertEqual(INCONCLUSIVE, thm3_check(3.5, 1.9, 4.0).status)
        self.assertEqual(INCONCLUSIVE, thm3_check(4.1, 5.0, 4.0).status)
        self.assertEqual(INCONCLUSIVE, thm3_check(2.9, 5.0, 4.0).status)


class TestClassifier(unittest.TestCase):

    def test_constant_member(self):
        verdict = monotone_classify(quotients_from_coeffs(partial_theta_series(2.0, degree=10)))
        self.assertEqual(HOLDS, verdict.status)
        self.assertEqual(CLASSIFIER, verdict.role)
        self.assertTrue(verdict.flags['constant'])
        self.assertEqual(4.0, verdict.computed['limit'])

    def test_increasing_nonmember(self):
        verdict = monotone_classify(quotients_from_coeffs(euler_like_series(3.0, degree=20)))
        self.assertEqual(FAILS, verdict.status)
        self.assertTrue(verdict.flags['increasing'])
        self.assertEqual(3.0, verdict.computed['limit'])
        verdict = monotone_classify([2.0, 2.5, 2.9, 3.0])
        self.assertEqual(FAILS, verdict.status)

    def test_decreasing_to_small_limit(self):
        verdict = monotone_classify(quotients_from_coeffs(exponential_series(10)))
        self.assertEqual(INCONCLUSIVE, verdict.status)
        self.assertTrue(verdict.flags['decreasing'])

    def test_limit_hint_and_bracket(self):
        q = [4.0, 3.8, 3.6, 3.5]
        self.assertEqual(HOLDS, monotone_classify(q).status)
        self.assertEqual(INCONCLUSIVE, monotone_classify(q, limit_hint=3.0).status)
        self.assertEqual(INCONCLUSIVE, monotone_classify(q, limit_hint=3.2336, q_inf=(3.2330, 3.2340)).status)
        self.assertEqual(HOLDS, monotone_classify(q, limit_hint=3.2341, q_inf=(3.2330, 3.2340)).status)

    def test_neither(self):
        self.assertEqual(INCONCLUSIVE, monotone_classify([4.0, 5.0, 4.5]).status)

    def test_short_window(self):
        with self.assertRaises(InvalidInputError):
            monotone_classify([4.0, 4.0])


class TestDiagnostics(unittest.TestCase):

    def test_tail_bound(self):
        tail = tail_bound_lm2(4.0, 4.0, 4.0, 4.0, 4.0)
        self.assertAlmostEqual(16.0 / 16320.0, tail.bound, places=16)
        self.assertAlmostEqual(251.0, tail.gate_margin, places=12)
        self.assertAlmostEqual(0.0625 - 16.0 / 16320.0, tail.strict_margin, places=15)
        tail = tail_bound_lm2(2.0, 2.0, 2.0, 2.0, 2.0)
        self.assertAlmostEqual(4.0 / 120.0, tail.bound, places=15)
        self.assertAlmostEqual(13.0, tail.gate_margin, places=12)
        with self.assertRaises(InvalidInputError):
            tail_bound_lm2(4.0, 1.0, 4.0, 4.0, 4.0)

    def test_rouche_gate(self):
        verdict = rouche_gate_check(partial_theta_series(2.0))
        self.assertEqual(HOLDS, verdict.status)
        self.assertEqual(DIAGNOSTIC, verdict.role)
        self.assertGreater(verdict.computed['circle_min_s4'], verdict.computed['bound'])
        verdict = rouche_gate_check(exponential_series())
        self.assertEqual(FAILS, verdict.status)
        self.assertAlmostEqual(0.4, verdict.computed['bound'], places=12)
        self.assertLess(verdict.computed['numeric_margin'], 0.0)

    def test_rouche_gate_needs_degree(self):
        with self.assertRaises(InvalidInputError):
            rouche_gate_check(exponential_series(5))

    def test_apolar_quartic(self):
        quartic = apolar_quartic(3.5)
        self.assertAlmostEqual(-1.25, quartic.b3, places=14)
        self.assertAlmostEqual(0.875, quartic.b2, places=14)
        self.assertEqual((0j, 0j, 3.5 + 0j, 1.5 + 0j), quartic.q_roots)
        self.assertTrue(quartic.roots_in_disk)
        self.assertLess(quartic.apolarity_residual, 1e-12)
        self.assertTrue(quartic.s4_root_in_disk)
        for expected, found in zip(sorted(abs(z) for z in quartic.q_roots),
                                   sorted(abs(z) for z in quartic.q_roots_numeric)):
            self.assertAlmostEqual(expected, found, places=6)
        with self.assertRaises(InvalidInputError):
            apolar_quartic(2.9)

    def test_apolar_check(self):
        verdict = apolar_check(quotients_from_coeffs(partial_theta_series(2.0, degree=8)))
        self.assertEqual(HOLDS, verdict.status)
        self.assertTrue(verdict.flags['s4_root_in_disk'])
        self.assertEqual(INCONCLUSIVE, apolar_check([2.0, 1.5, 4.0 / 3.0]).status)

    def test_truncation_roots(self):
        report = truncation_roots(partial_theta_series(1.9), degree=30)
        self.assertEqual(ALL_REAL_NEGATIVE, report.verdict)
        self.assertEqual(30, report.degree)
        self.assertEqual(HOLDS, truncation_roots_check(partial_theta_series(1.9)).status)
        verdict = truncation_roots_check(exponential_series())
        self.assertEqual(FAILS, verdict.status)
        self.assertEqual(EVIDENCE, verdict.role)
        self.assertEqual(COMPLEX_PRESENT, truncation_roots(euler_like_series(3.0), degree=30).verdict)

    def test_truncation_roots_cut_before_underflow(self):
        report = truncation_roots(partial_theta_series(3.0))
        self.assertLess(report.degree, 30)
        self.assertGreater(report.degree, 1)


class TestFullReport(unittest.TestCase):

    def test_partial_theta(self):
        verdicts = full_report(partial_theta_series(2.0))
        self.assertEqual(ORDER, [v.criterion for v in verdicts])
        self.assertEqual({
            'newton': HOLDS,
            'lemma_q2q3': HOLDS,
            'hutchinson': HOLDS,
            'monotone': HOLDS,
            'thm1_zero_segment': HOLDS,
            'thm2': INCONCLUSIVE,
            'thm3': INCONCLUSIVE,
            'rouche_gate': HOLDS,
            'apolar': HOLDS,
            'truncation_roots': HOLDS,
        }, _statuses(verdicts))

    def test_euler_like(self):
        statuses = _statuses(full_report(euler_like_series(3.0)))
        self.assertEqual(HOLDS, statuses['newton'])
        self.assertEqual(FAILS, statuses['lemma_q2q3'])
        self.assertEqual(FAILS, statuses['monotone'])
        self.assertEqual(FAILS, statuses['thm1_zero_segment'])
        self.assertEqual(FAILS, statuses['truncation_roots'])

    def test_exponential(self):
        statuses = _statuses(full_report(exponential_series()))
        self.assertEqual(HOLDS, statuses['newton'])
        self.assertEqual(FAILS, statuses['hutchinson'])
        self.assertEqual(INCONCLUSIVE, statuses['monotone'])
        self.assertEqual(INCONCLUSIVE, statuses['thm1_zero_segment'])
        self.assertEqual(FAILS, statuses['rouche_gate'])

    def test_refusal_becomes_inconclusive(self):
        verdicts = full_report(explicit_series([1.0] * 8))
        by_name = {v.criterion: v for v in verdicts}
        scan = by_name['thm1_zero_segment']
        self.assertEqual(INCONCLUSIVE, scan.status)
        self.assertTrue(scan.notes[0].startswith('error: '))
        self.assertEqual(NECESSARY, scan.role)
        self.assertEqual(FAILS, by_name['newton'].status)
        self.assertEqual(INCONCLUSIVE, by_name['rouche_gate'].status)
        self.assertEqual(FAILS, by_name['truncation_roots'].status)

    def test_thm3_cross_check_flag(self):
        # q2 = 3.5, q3 = 4, q4 = 3.5 meets the sufficient condition
        verdicts = full_report(coeffs_from_quotients(1.0, 1.0, [3.5, 4.0, 3.5, 5.0, 5.0, 5.0, 5.0]))
        thm3 = [v for v in verdicts if v.criterion == 'thm3'][0]
        self.assertEqual(HOLDS, thm3.status)
        self.assertIn('thm1_agrees', thm3.flags)

    def test_constant_quotients_thm3_agrees(self):
        verdicts = {v.criterion: v for v in full_report(partial_theta_series(1.9))}
        self.assertEqual(HOLDS, verdicts['thm1_zero_segment'].status)
        self.assertEqual(HOLDS, verdicts['thm2'].status)
        self.assertEqual(HOLDS, verdicts['thm3'].status)
        self.assertEqual(WITNESS_SUFFICIENT, verdicts['thm3'].role)
        self.assertTrue(verdicts['thm3'].flags['thm1_agrees'])

    def test_needs_degree(self):
        with self.assertRaises(InvalidInputError):
            full_report(exponential_series(5))

    def test_verdict_document(self):
        doc = full_report(partial_theta_series(2.0))[0].to_dict()
        self.assertEqual(['criterion', 'role', 'status', 'computed', 'witness', 'flags', 'notes'], list(doc))
        doc = CriterionVerdict('x', FAILS, NECESSARY, {'m': math.inf}, witness=math.nan).to_dict()
        self.assertIsNone(doc['computed']['m'])
        self.assertIsNone(doc['witness'])
        with self.assertRaises(ValueError):
            CriterionVerdict('x', 'maybe', NECESSARY)


if __name__ == '__main__':
    logging.basicConfig(level=logging.WARNING)
    unittest.main()

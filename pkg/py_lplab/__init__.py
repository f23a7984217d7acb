"""Laguerre-Polya class criteria for entire functions with positive coefficients."""
__version__ = '0.1.0'

from .series import (CoefficientSeries, EvalResult, InvalidInputError, NumericalRefusalError, QuotientSequence,  # noqa
                     SpecError, UncertainEvaluationError, alternating_evaluate, coeffs_from_quotients,
                     euler_like_series, evaluate, evaluate_points, evaluation_error_bound, explicit_series,
                     exponential_series, load_series_spec, normalize, partial_sum, partial_theta_series,
                     precision_mode, quotients_from_coeffs, remainder, series_spec_document)
from .roots import (ContourRefusedError, DiskCount, RealRootedness, RootReport, SegmentScan,  # noqa
                    count_zeros_in_disk, is_real_rooted, min_modulus_on_circle, poly_roots, sign_scan_segment)
from .criteria import (Q_INF_LITERAL, ApolarQuartic, CriterionVerdict, TailBound, Thm2Bound,  # noqa
                       apolar_check, apolar_quartic, full_report, hutchinson_check, lemma_q2q3_check,
                       monotone_classify, newton_check, rouche_gate_check, tail_bound_lm2, thm1_zero_segment_check,
                       thm2_bound, thm2_check, thm3_check, truncation_roots, truncation_roots_check)
from .theta import (BracketError, MonotonicityError, ThetaThresholds, compute_thresholds,  # noqa
                    cross_validate_threshold, g_a_membership, q_inf_bracket, section_has_witness, section_values,
                    threshold_c)
from .suites import SuiteResult, run_all  # noqa

__all__ = [
    'CoefficientSeries', 'EvalResult', 'QuotientSequence', 'InvalidInputError', 'SpecError', 'NumericalRefusalError',
    'UncertainEvaluationError', 'alternating_evaluate', 'coeffs_from_quotients', 'euler_like_series', 'evaluate',
    'evaluate_points', 'evaluation_error_bound', 'explicit_series', 'exponential_series', 'load_series_spec',
    'normalize', 'partial_sum', 'partial_theta_series', 'precision_mode', 'quotients_from_coeffs', 'remainder',
    'series_spec_document',
    'ContourRefusedError', 'DiskCount', 'RealRootedness', 'RootReport', 'SegmentScan', 'count_zeros_in_disk',
    'is_real_rooted', 'min_modulus_on_circle', 'poly_roots', 'sign_scan_segment',
    'Q_INF_LITERAL', 'ApolarQuartic', 'CriterionVerdict', 'TailBound', 'Thm2Bound', 'apolar_check',
    'apolar_quartic', 'full_report', 'hutchinson_check', 'lemma_q2q3_check', 'monotone_classify', 'newton_check',
    'rouche_gate_check', 'tail_bound_lm2', 'thm1_zero_segment_check', 'thm2_bound', 'thm2_check', 'thm3_check',
    'truncation_roots', 'truncation_roots_check',
    'BracketError', 'MonotonicityError', 'ThetaThresholds', 'compute_thresholds', 'cross_validate_threshold',
    'g_a_membership', 'q_inf_bracket', 'section_has_witness', 'section_values', 'threshold_c',
    'SuiteResult', 'run_all',
]

import contextlib
import io
import json
import logging
import math
import os
import unittest
import sys
from unittest import mock

sys.path.append(os.path.dirname(os.path.dirname(os.path.realpath(__file__))))  # noqa
from py_lplab.cli import (EXIT_INVALID_INPUT, EXIT_OK, EXIT_REFUSED, EXIT_SUITE_FAILURE, RunConfig,  # noqa
                          build_parser, main)
from py_lplab.series import PRECISION_ENV, InvalidInputError, UncertainEvaluationError  # noqa
from py_lplab.suites import SuiteResult  # noqa
from py_lplab.theta import ThetaThresholds  # noqa

DOCUMENT_KEYS = ['schema_version', 'command', 'version', 'precision', 'rng', 'spec', 'quotients', 'verdicts', 'roots',
                 'theta', 'suites', 'timestamp']


class TestCli(unittest.TestCase):
    _UPDATE_EXPECTED = False
    _EXPECTED = '_expected.json'
    _RESULT = '.json'

    def setUp(self):
        self._dir = os.path.realpath(__file__)[:-3] + '_'
        if not os.path.isdir(self._dir):
            os.makedirs(self._dir)
        logging.debug(self._dir)
        self._update_expected = TestCli._UPDATE_EXPECTED
        self._precision = os.environ.pop(PRECISION_ENV, None)

    def tearDown(self):
        if self._precision is not None:
            os.environ[PRECISION_ENV] = self._precision

    def _run(self, *argv):
        out, err = io.StringIO(), io.StringIO()
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            code = main(list(argv))
        return code, out.getvalue(), err.getvalue()

    def _run_json(self, *argv):
        code, out, err = self._run(*argv)
        self.assertEqual(EXIT_OK, code, err)
        return json.loads(out)

    def test_analyze_exponential(self):
        name = 'test_analyze_exponential'
        doc = self._run_json('analyze', '--family', 'exponential', '--degree', '8')
        self.assertEqual(DOCUMENT_KEYS, list(doc))
        self.assertIsNotNone(doc['timestamp'])
        summary = {
            'schema_version': doc['schema_version'],
            'command': doc['command'],
            'precision': doc['precision'],
            'rng': doc['rng'],
            'spec': doc['spec'],
            'q': doc['quotients']['q'],
            'verdicts': [[v['criterion'], v['role'], v['status']] for v in doc['verdicts']],
            'roots': {'degree': doc['roots']['degree'], 'verdict': doc['roots']['verdict']},
        }
        self._handle_result(name, summary)

    def test_analyze_input_file(self):
        path = os.path.join(self._dir, 'partial_theta_spec.json')
        doc = self._run_json('analyze', '--input', path)
        self.assertEqual({'family': 'partial-theta', 'degree': 32, 'a': 2.1}, doc['spec'])
        statuses = {v['criterion']: v['status'] for v in doc['verdicts']}
        self.assertEqual('holds', statuses['hutchinson'])
        self.assertEqual('holds', statuses['thm1_zero_segment'])
        self.assertEqual('all-real-negative', doc['roots']['verdict'])

    def test_analyze_quotients(self):
        doc = self._run_json('analyze', '--q', '4,4,4,4,4', '--a0', '1', '--a1', '0.5')
        self.assertEqual([4.0] * 5, doc['spec']['q'])
        self.assertEqual(6, doc['spec']['degree'])
        self.assertEqual(10, len(doc['verdicts']))

    def test_table_output(self):
        code, out, _ = self._run('analyze', '--family', 'exponential', '--degree', '8', '--output', 'table')
        self.assertEqual(EXIT_OK, code)
        lines = out.splitlines()
        self.assertTrue(lines[0].startswith('criterion'))
        self.assertEqual(12, len(lines))
        self.assertTrue(lines[-1].startswith('roots: complex-present'))

    def test_theta(self):
        doc = self._run_json('theta', '--n-max', '2')
        self.assertEqual('theta', doc['command'])
        self.assertAlmostEqual(4.0, doc['theta']['c']['2'], places=8)
        self.assertIsNone(doc['theta']['q_inf_low'])
        self.assertEqual([], doc['verdicts'])

    def test_theta_grid(self):
        thresholds = ThetaThresholds({2: 4.0}, 2, 1e-10)
        with mock.patch('py_lplab.cli.compute_thresholds', return_value=thresholds) as compute:
            self._run_json('theta', '--n-max', '2', '--grid', '512', '--tol', '1e-9')
        compute.assert_called_once_with(2, 1e-9, 512)

    def test_analyze_uses_theta_bracket(self):
        bracket = ThetaThresholds({2: 4.1, 3: 3.9}, 3, 1e-10)
        with mock.patch('py_lplab.cli.default_thresholds', return_value=bracket):
            doc = self._run_json('analyze', '--q', '4,4,4,4,4', '--a0', '1', '--a1', '0.5')
        monotone = next(v for v in doc['verdicts'] if v['criterion'] == 'monotone')
        self.assertEqual(3.9, monotone['computed']['q_inf_low'])
        self.assertEqual(4.1, monotone['computed']['q_inf_high'])
        # 4 sits inside the bracket, above the literal
        self.assertEqual('inconclusive', monotone['status'])

    def test_verify_lemmas(self):
        doc = self._run_json('verify-lemmas', '--trials', '4', '--seed', '11')
        self.assertEqual({'algorithm': 'PCG64', 'seed': 11}, doc['rng'])
        self.assertEqual(['circle_minimum', 'tail_bound', 'apolar', 'remark_chain', 'rouche_consistency'],
                         [s['name'] for s in doc['suites']])
        self.assertTrue(all(s['failed'] == 0 for s in doc['suites']))

    def test_verify_lemmas_failure(self):
        failed = SuiteResult('circle_minimum', 2, 1, 1, 0, -0.5, {'a': 3.0, 'b': 3.0, 'c': 2.0, 'margin': -0.5}, {})
        with mock.patch('py_lplab.cli.run_all', return_value=[failed]):
            code, out, err = self._run('verify-lemmas')
        self.assertEqual(EXIT_SUITE_FAILURE, code)
        self.assertIn('counterexample', err)
        self.assertEqual(1, json.loads(out)['suites'][0]['failed'])

    def test_invalid_input(self):
        self.assertEqual(EXIT_INVALID_INPUT, self._run('theta', '--n-max', '1')[0])
        self.assertEqual(EXIT_INVALID_INPUT, self._run('analyze', '--coeffs', '1,1,0.5')[0])
        self.assertEqual(EXIT_INVALID_INPUT, self._run('analyze')[0])
        self.assertEqual(EXIT_INVALID_INPUT, self._run('analyze', '--family', 'partial-theta')[0])
        self.assertEqual(EXIT_INVALID_INPUT, self._run('analyze', '--family', 'exponential', '--degree', '4')[0])
        path = os.path.join(self._dir, 'partial_theta_spec.json')
        self.assertEqual(EXIT_INVALID_INPUT, self._run('analyze', '--input', path, '--family', 'exponential')[0])
        missing = os.path.join(self._dir, 'missing.json')
        self.assertEqual(EXIT_INVALID_INPUT, self._run('analyze', '--input', missing)[0])

    def test_invalid_precision(self):
        os.environ[PRECISION_ENV] = 'quad'
        try:
            code, _, err = self._run('theta', '--n-max', '2')
        finally:
            os.environ.pop(PRECISION_ENV)
        self.assertEqual(EXIT_INVALID_INPUT, code)
        self.assertIn('quad', err)

    def test_refusal(self):
        with mock.patch('py_lplab.cli.full_report', side_effect=UncertainEvaluationError('no tail')):
            code, _, err = self._run('analyze', '--family', 'exponential', '--degree', '8')
        self.assertEqual(EXIT_REFUSED, code)
        self.assertIn('no tail', err)

    def test_parser(self):
        with contextlib.redirect_stderr(io.StringIO()):
            with self.assertRaises(SystemExit):
                build_parser().parse_args([])
            with self.assertRaises(SystemExit):
                build_parser().parse_args(['analyze', '--family', 'gamma'])

    def test_run_config(self):
        config = RunConfig('analyze', family='partial-theta', a=2.0)
        self.assertEqual({'family': 'partial-theta', 'a': 2.0, 'degree': 64}, config.inline_spec())
        self.assertEqual({'q': [4.0, 4.0]}, RunConfig('analyze', q=[4.0, 4.0]).inline_spec())
        with self.assertRaises(InvalidInputError):
            RunConfig('analyze', tol=0.0)
        with self.assertRaises(InvalidInputError):
            RunConfig('compile')

    def _handle_result(self, name, result):
        result_file = os.path.join(self._dir, name + self._RESULT)
        if not os.path.exists(self._dir):
            os.makedirs(self._dir)
        TestCli._json_dump(result, result_file)

        expected_file = os.path.join(self._dir, name + self._EXPECTED)
        if self._update_expected:
            TestCli._json_dump(result, expected_file)

        with open(result_file, 'r') as f:
            result = json.load(f)
        with open(expected_file, 'r') as f:
            expected = json.load(f)

        self._assert_close(expected, result, 'Expected ' + str(expected) + ' got ' + str(result))
        os.remove(result_file)

    def _assert_close(self, expected, result, msg, rel_tol=1e-9):
        """
        Compare two decoded JSON documents; floats agree to a relative tolerance, everything else exactly.
        """
        if isinstance(expected, float) or isinstance(result, float):
            self.assertTrue(isinstance(result, (int, float)) and math.isclose(expected, result, rel_tol=rel_tol),
                            msg)
        elif isinstance(expected, dict):
            self.assertIsInstance(result, dict, msg)
            self.assertEqual(sorted(expected), sorted(result), msg)
            for key in expected:
                self._assert_close(expected[key], result[key], msg, rel_tol)
        elif isinstance(expected, list):
            self.assertIsInstance(result, list, msg)
            self.assertEqual(len(expected), len(result), msg)
            for e, r in zip(expected, result):
                self._assert_close(e, r, msg, rel_tol)
        else:
            self.assertEqual(expected, result, msg)

    @staticmethod
    def _json_dump(obj, path):
        """
        Dump dictionaries in one stable layout so result and expected files compare.
        :param obj: result document
        :param path: full path for destination
        :return: None
        """
        if isinstance(obj, dict):
            obj = dict(obj)
        with open(path, 'w') as f:
            json.dump(obj, f, sort_keys=True, indent=4)


if __name__ == '__main__':
    logging.basicConfig(level=logging.WARNING)
    unittest.main()

"""
lplab command line: analyze a series, compute theta thresholds, run the lemma suites.
"""
import argparse
import datetime
import json
import logging
import math
import sys
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from . import __version__
from .criteria import full_report, truncation_roots
from .series import (DEFAULT_DEGREE, EXPONENTIAL, EULER_LIKE, FAMILIES, PARTIAL_THETA, InvalidInputError,
                     NumericalRefusalError, SpecError, load_series_spec, precision_mode, quotients_from_coeffs,
                     series_spec_document)
from .suites import DEFAULT_SEED, RNG_ALGORITHM, run_all
from .theta import compute_thresholds, default_thresholds

SCHEMA_VERSION = 1
ANALYZE = 'analyze'
THETA = 'theta'
VERIFY_LEMMAS = 'verify-lemmas'
JSON_OUTPUT = 'json'
TABLE_OUTPUT = 'table'

EXIT_OK = 0
EXIT_SUITE_FAILURE = 1
EXIT_INVALID_INPUT = 2
EXIT_REFUSED = 3

_MIN_ANALYZE_DEGREE = 6
_MIN_GRID = 16


@dataclass
class RunConfig:
    command: str
    input_path: Optional[str] = None
    family: Optional[str] = None
    a: Optional[float] = None
    a0: Optional[float] = None
    a1: Optional[float] = None
    q: Optional[List[float]] = None
    coeffs: Optional[List[float]] = None
    degree: Optional[int] = None
    tol: float = 1e-10
    grid: int = 1024
    n_max: int = 9
    seed: int = DEFAULT_SEED
    trials: Optional[int] = None
    output: str = JSON_OUTPUT
    verbose: bool = False

    def __post_init__(self):
        if self.command not in (ANALYZE, THETA, VERIFY_LEMMAS):
            raise InvalidInputError('Unknown command: ' + str(self.command))
        if not (math.isfinite(self.tol) and self.tol > 0):
            raise InvalidInputError('--tol must be positive, got ' + str(self.tol))
        if self.grid < _MIN_GRID:
            raise InvalidInputError('--grid must be >= ' + str(_MIN_GRID) + ', got ' + str(self.grid))
        if self.command == THETA and self.n_max < 2:
            raise InvalidInputError('--n-max must be >= 2, got ' + str(self.n_max))
        if self.trials is not None and self.trials < 1:
            raise InvalidInputError('--trials must be >= 1, got ' + str(self.trials))
        if self.command == ANALYZE and self.degree is not None and self.degree < _MIN_ANALYZE_DEGREE:
            raise InvalidInputError('analyze needs degree >= ' + str(_MIN_ANALYZE_DEGREE) + ', got ' + str(self.degree))
        if self.output not in (JSON_OUTPUT, TABLE_OUTPUT):
            raise InvalidInputError('Unknown output format: ' + str(self.output))

    def inline_spec(self) -> Dict:
        """
        :return: series-spec document assembled from the inline flags
        """
        doc = {}
        for field, value in (('family', self.family), ('a', self.a), ('a0', self.a0), ('a1', self.a1),
                             ('q', self.q), ('coeffs', self.coeffs)):
            if value is not None:
                doc[field] = value
        if self.family in (EXPONENTIAL, PARTIAL_THETA, EULER_LIKE):
            doc['degree'] = DEFAULT_DEGREE if self.degree is None else self.degree
        return doc


def _numbers(text: str) -> List[float]:
    try:
        return [float(v) for v in text.split(',') if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError('expected comma-separated numbers, got ' + text)


def _document(command: str, precision: str, seed: int) -> Dict:
    return {
        'schema_version': SCHEMA_VERSION,
        'command': command,
        'version': __version__,
        'precision': precision,
        'rng': {'algorithm': RNG_ALGORITHM, 'seed': seed},
        'spec': {},
        'quotients': {},
        'verdicts': [],
        'roots': {},
        'theta': {},
        'suites': [],
        'timestamp': None,
    }


def _finish(doc: Dict) -> Dict:
    doc['timestamp'] = datetime.datetime.now(datetime.timezone.utc).isoformat(timespec='seconds')
    return doc


def _load_series(config: RunConfig):
    inline = config.inline_spec()
    if config.input_path is not None:
        if inline:
            raise SpecError('input', 'use either --input or inline series flags, not both')
        series = load_series_spec(config.input_path)
    else:
        if not inline:
            raise SpecError('family', 'no series given (use --input, --family, --q or --coeffs)')
        series = load_series_spec(inline)
    if series.degree < _MIN_ANALYZE_DEGREE:
        raise InvalidInputError('analyze needs degree >= ' + str(_MIN_ANALYZE_DEGREE) + ', got ' + str(series.degree))
    return series


def cmd_analyze(config: RunConfig) -> Tuple[Dict, int]:
    """
    Every criterion verdict for one series, plus its quotients and truncation roots. The monotone
    classifier compares against the cached q_inf bracket.
    """
    series = _load_series(config)
    logging.debug('Analyzing ' + str(series))
    doc = _document(ANALYZE, precision_mode(), config.seed)
    doc['spec'] = series_spec_document(series)
    doc['quotients'] = quotients_from_coeffs(series).to_dict()
    bracket = default_thresholds()
    q_inf = (bracket.q_inf_low, bracket.q_inf_high)
    doc['verdicts'] = [v.to_dict() for v in full_report(series, grid=config.grid, q_inf=q_inf)]
    doc['roots'] = truncation_roots(series).to_dict()
    return _finish(doc), EXIT_OK


def cmd_theta(config: RunConfig) -> Tuple[Dict, int]:
    """
    Thresholds c_2..c_{n_max} and the q_inf bracket.
    """
    thresholds = compute_thresholds(config.n_max, config.tol, config.grid)
    doc = _document(THETA, precision_mode(), config.seed)
    doc['theta'] = thresholds.to_dict()
    return _finish(doc), EXIT_OK


def cmd_verify_lemmas(config: RunConfig) -> Tuple[Dict, int]:
    """
    Seeded lemma suites. Exit code 1 when any suite has a failing trial.
    """
    results = run_all(config.seed, config.trials)
    doc = _document(VERIFY_LEMMAS, precision_mode(), config.seed)
    doc['suites'] = [r.to_dict() for r in results]
    code = EXIT_OK
    for result in results:
        if not result.ok:
            code = EXIT_SUITE_FAILURE
            print('Suite ' + result.name + ' failed ' + str(result.failed) + ' of ' + str(result.trials)
                  + ', counterexample: ' + json.dumps(result.counterexample), file=sys.stderr)
    return _finish(doc), code


_COMMANDS = {
    ANALYZE: cmd_analyze,
    THETA: cmd_theta,
    VERIFY_LEMMAS: cmd_verify_lemmas,
}


def _table(doc: Dict) -> str:
    lines = []
    if doc['command'] == ANALYZE:
        lines.append('{:<18} {:<18} {:<13} {}'.format('criterion', 'role', 'status', 'margin'))
        for verdict in doc['verdicts']:
            margin = next((v for k, v in verdict['computed'].items() if 'margin' in k), None)
            lines.append('{:<18} {:<18} {:<13} {}'.format(verdict['criterion'], verdict['role'], verdict['status'],
                                                          '' if margin is None else '{:.6g}'.format(margin)))
        lines.append('roots: ' + doc['roots']['verdict'] + ' (degree ' + str(doc['roots']['degree']) + ')')
    elif doc['command'] == THETA:
        theta = doc['theta']
        lines.append('n,c_n')
        for n, value in theta['c'].items():
            lines.append(n + ',' + '{:.12f}'.format(value))
        lines.append('bracket,' + str(theta['q_inf_low']) + ',' + str(theta['q_inf_high']))
    else:
        lines.append('{:<20} {:>7} {:>7} {:>7} {:>7} {}'.format('suite', 'trials', 'passed', 'failed', 'domain',
                                                                'worst_margin'))
        for suite in doc['suites']:
            lines.append('{:<20} {:>7} {:>7} {:>7} {:>7} {}'.format(
                suite['name'], suite['trials'], suite['passed'], suite['failed'], suite['domain_violations'],
                suite['worst_margin']))
    return '\n'.join(lines)


def _json_safe(obj):
    if isinstance(obj, float) and not math.isfinite(obj):
        return None
    if isinstance(obj, dict):
        return {k: _json_safe(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_json_safe(v) for v in obj]
    return obj


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='lplab', description='Laguerre-Polya class criteria from second quotients.')
    parser.add_argument('--version', action='version', version='%(prog)s ' + __version__)
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument('--output', choices=(JSON_OUTPUT, TABLE_OUTPUT), default=JSON_OUTPUT)
    shared.add_argument('--verbose', action='store_true', help='debug logging')
    shared.add_argument('--tol', type=float, default=1e-10, help='bisection tolerance')
    shared.add_argument('--grid', type=int, default=1024, help='segment scan grid intervals')
    shared.add_argument('--seed', type=int, default=DEFAULT_SEED)
    shared.add_argument('--degree', type=int, default=None, help='truncation degree for families (default 64)')
    commands = parser.add_subparsers(dest='command', required=True)

    analyze = commands.add_parser(ANALYZE, parents=[shared], help='run every criterion on one series')
    analyze.add_argument('--input', dest='input_path', help='series-spec JSON document')
    analyze.add_argument('--family', choices=FAMILIES)
    analyze.add_argument('--a', type=float)
    analyze.add_argument('--q', type=_numbers, help='q_2,q_3,...')
    analyze.add_argument('--coeffs', type=_numbers, help='a_0,a_1,...')
    analyze.add_argument('--a0', type=float)
    analyze.add_argument('--a1', type=float)

    theta = commands.add_parser(THETA, parents=[shared], help='partial theta thresholds and the q_inf bracket')
    theta.add_argument('--n-max', dest='n_max', type=int, default=9)

    verify = commands.add_parser(VERIFY_LEMMAS, parents=[shared], help='seeded lemma suites')
    verify.add_argument('--trials', type=int, default=None, help='override every suite trial count')
    return parser


def _config(args: argparse.Namespace) -> RunConfig:
    values = {k: v for k, v in vars(args).items() if k in RunConfig.__dataclass_fields__}
    return RunConfig(**values)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    :param argv: arguments without the program name, defaults to sys.argv[1:]
    :return: exit code
    """
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format='%(asctime)s %(levelname)s %(module)s: %(message)s')
    try:
        precision_mode()
        config = _config(args)
        doc, code = _COMMANDS[config.command](config)
    except InvalidInputError as e:
        print('error: ' + str(e), file=sys.stderr)
        return EXIT_INVALID_INPUT
    except NumericalRefusalError as e:
        print('refused: ' + str(e), file=sys.stderr)
        return EXIT_REFUSED
    doc = _json_safe(doc)
    if config.output == TABLE_OUTPUT:
        print(_table(doc))
    else:
        print(json.dumps(doc, indent=4))
    return code

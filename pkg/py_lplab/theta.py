"""
Section thresholds c_n of the partial theta function g_a and the bracket they give for
q_inf = lim c_n.

S_n(x, g_a) has a point x0 in (-a^3, -a) with S_n(x0) <= 0 exactly when a^2 >= c_n. Even and odd
thresholds approach q_inf from opposite sides, so max(c_odd) <= q_inf <= min(c_even).
"""
import functools
import logging
import math
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .criteria import (CLASSIFIER, FAILS, HOLDS, Q_INF_LITERAL, CriterionVerdict)
from .roots import ALL_REAL_NEGATIVE, is_real_rooted, sign_scan_segment
from .series import (DEFAULT_DEGREE, InvalidInputError, NumericalRefusalError, evaluate_points,
                     partial_theta_series)

DEFAULT_TOL = 1e-10
MIN_TOL = 1e-12
_THETA_GRID = 2048
_BRACKET = (2.5, 4.5)  # a^2 range holding every section threshold
_CROSS_CHECK_MAX_N = 8
_CROSS_CHECK_OFFSET = 1e-3
_LITERAL_WIDTH = 1e-8  # the q_inf literal is an eight decimal truncation
_DEFAULT_N_MAX = 9
_DEFAULT_BRACKET_TOL = 1e-9


class BracketError(NumericalRefusalError):
    """Raised when the threshold bisection interval does not straddle a sign change."""


class MonotonicityError(NumericalRefusalError):
    """Raised when computed thresholds contradict the ordering of even and odd sections."""


def _check_section(n: int, a: float):
    if isinstance(n, bool) or int(n) != n or n < 2:
        raise InvalidInputError('Section index must be an integer >= 2, got ' + str(n))
    if not (math.isfinite(a) and a > 1):
        raise InvalidInputError('Parameter a must be > 1, got ' + str(a))


def section_values(n: int, a: float, xs) -> np.ndarray:
    """
    S_n(x, g_a) at the given points, through the ratio products a^(2k-1).
    """
    _check_section(n, a)
    values, _ = evaluate_points(partial_theta_series(a, degree=n), np.asarray(xs, dtype=float))
    return values


def section_has_witness(n: int, a: float, grid: int = _THETA_GRID) -> bool:
    """
    :param n: section index, n >= 2
    :param a: parameter, a > 1
    :param grid: scan grid intervals
    :return: whether S_n(x, g_a) <= 0 somewhere on (-a^3, -a)
    """
    _check_section(n, a)
    s = partial_theta_series(a, degree=n)
    return sign_scan_segment(s, -a ** 3, -a, grid=grid, section=n).found


def threshold_c(n: int, tol: float = DEFAULT_TOL, grid: int = _THETA_GRID,
                bracket: Tuple[float, float] = _BRACKET) -> float:
    """
    Smallest a^2 for which S_n(x, g_a) has a non-positive value on (-a^3, -a), by bisection in a^2.
    :param n: section index, n >= 2
    :param tol: bisection width, >= 1e-12
    :param grid: scan grid intervals
    :param bracket: starting a^2 interval
    :return: c_n
    """
    if isinstance(n, bool) or int(n) != n or n < 2:
        raise InvalidInputError('Section index must be an integer >= 2, got ' + str(n))
    if not tol >= MIN_TOL:
        raise InvalidInputError('Tolerance must be >= ' + str(MIN_TOL) + ', got ' + str(tol))
    lo, hi = bracket
    if not section_has_witness(n, math.sqrt(hi), grid):
        raise BracketError('S_' + str(n) + ' has no witness at a^2=' + repr(hi))
    if section_has_witness(n, math.sqrt(lo), grid):
        raise BracketError('S_' + str(n) + ' already has a witness at a^2=' + repr(lo))
    steps = 0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if section_has_witness(n, math.sqrt(mid), grid):
            hi = mid
        else:
            lo = mid
        steps += 1
    logging.debug('c_' + str(n) + ' after ' + str(steps) + ' bisection steps: [' + repr(lo) + ', ' + repr(hi) + ']')
    return 0.5 * (lo + hi)


def cross_validate_threshold(n: int, c: float, offset: float = _CROSS_CHECK_OFFSET) -> bool:
    """
    S_n(z, g_a) is real-rooted just above c_n and not just below it.
    """
    above = is_real_rooted(partial_theta_series(math.sqrt(c + offset), degree=n).coeffs)
    below = is_real_rooted(partial_theta_series(math.sqrt(c - offset), degree=n).coeffs)
    return above.verdict == ALL_REAL_NEGATIVE and not below.real


class ThetaThresholds:
    """
    Thresholds c_2..c_{n_max} and the q_inf bracket they imply.
    """

    def __init__(self, c: Dict[int, float], n_max: int, tol: float, root_checks: Optional[Dict[int, bool]] = None,
                 resolved_pairs: Sequence[Tuple[int, int]] = ()):
        self._c = dict(sorted(c.items()))
        self._n_max = n_max
        self._tol = tol
        self._root_checks = dict(root_checks or {})
        self._resolved_pairs = [tuple(p) for p in resolved_pairs]

    @property
    def c(self) -> Dict[int, float]:
        return dict(self._c)

    @property
    def n_max(self) -> int:
        return self._n_max

    @property
    def tol(self) -> float:
        return self._tol

    @property
    def q_inf_low(self) -> Optional[float]:
        """
        :return: max over odd n of c_n
        """
        odd = [v for n, v in self._c.items() if n % 2]
        return max(odd) if odd else None

    @property
    def q_inf_high(self) -> Optional[float]:
        """
        :return: min over even n of c_n
        """
        even = [v for n, v in self._c.items() if n % 2 == 0]
        return min(even) if even else None

    @property
    def root_checks(self) -> Dict[int, bool]:
        return dict(self._root_checks)

    @property
    def resolved_pairs(self) -> List[Tuple[int, int]]:
        return list(self._resolved_pairs)

    @property
    def width(self) -> Optional[float]:
        if self.q_inf_low is None or self.q_inf_high is None:
            return None
        return self.q_inf_high - self.q_inf_low

    def contains(self, value: float, slack: float = 0.0) -> bool:
        low = -math.inf if self.q_inf_low is None else self.q_inf_low
        high = math.inf if self.q_inf_high is None else self.q_inf_high
        return low - slack <= value <= high + slack

    def contains_literal(self) -> bool:
        """
        The literal 3.23363666 stands for [3.23363666, 3.23363667]; the bracket, widened by the bisection
        tolerance, must meet that interval.
        """
        low = -math.inf if self.q_inf_low is None else self.q_inf_low
        high = math.inf if self.q_inf_high is None else self.q_inf_high
        return low - self._tol <= Q_INF_LITERAL + _LITERAL_WIDTH and Q_INF_LITERAL <= high + self._tol

    def to_dict(self) -> Dict:
        return {
            'n_max': self._n_max,
            'tol': self._tol,
            'c': {str(n): v for n, v in self._c.items()},
            'q_inf_low': self.q_inf_low,
            'q_inf_high': self.q_inf_high,
            'width': self.width,
            'contains_literal': self.contains_literal(),
            'root_checks': {str(n): v for n, v in self._root_checks.items()},
            'resolved_pairs': [list(p) for p in self._resolved_pairs],
        }

    def to_table(self, delimiter: str = ',') -> str:
        lines = [delimiter.join(('n', 'c_n'))]
        for n, value in self._c.items():
            lines.append(delimiter.join((str(n), '{:.12f}'.format(value))))
        return '\n'.join(lines) + '\n'

    def __str__(self):
        return "<ThetaThresholds n_max={} low={} high={}>".format(self._n_max, self.q_inf_low, self.q_inf_high)

    def __repr__(self):
        return self.__str__()


def _ordering(c: Dict[int, float], tol: float) -> Tuple[List[Tuple[int, int]], List[Tuple[int, int]]]:
    """
    Even thresholds decrease and odd ones increase with n. Pairs closer than 2 tol are resolved,
    not violated.
    :return: (resolved_pairs, violations)
    """
    resolved, violations = [], []
    for n in c:
        if n + 2 not in c:
            continue
        step = c[n + 2] - c[n] if n % 2 else c[n] - c[n + 2]
        if step < -2 * tol:
            violations.append((n, n + 2))
        elif step <= 2 * tol:
            resolved.append((n, n + 2))
    return resolved, violations


def compute_thresholds(n_max: int, tol: float = DEFAULT_TOL, grid: int = _THETA_GRID) -> ThetaThresholds:
    """
    :param n_max: last section, >= 2
    :param tol: bisection width
    :param grid: scan grid intervals
    :return: ThetaThresholds with root cross-checks for n <= 8
    """
    if isinstance(n_max, bool) or int(n_max) != n_max or n_max < 2:
        raise InvalidInputError('n_max must be an integer >= 2, got ' + str(n_max))
    c = {}
    for n in range(2, n_max + 1):
        c[n] = threshold_c(n, tol, grid)
        logging.debug('c_' + str(n) + ' = ' + repr(c[n]))
    root_checks = {}
    for n in range(2, min(n_max, _CROSS_CHECK_MAX_N) + 1):
        root_checks[n] = cross_validate_threshold(n, c[n])
        if not root_checks[n]:
            logging.warning('Root verdicts around c_' + str(n) + ' = ' + repr(c[n]) + ' do not flip')
    resolved, violations = _ordering(c, tol)
    if violations:
        raise MonotonicityError('Threshold ordering broken for pairs ' + str(violations) + ': '
                                + str({n: c[n] for pair in violations for n in pair}))
    thresholds = ThetaThresholds(c, n_max, tol, root_checks, resolved)
    if thresholds.width is not None and thresholds.width < -2 * tol:
        raise MonotonicityError('Odd thresholds exceed even ones: ' + str(thresholds))
    return thresholds


def q_inf_bracket(n_max: int, tol: float = DEFAULT_TOL) -> ThetaThresholds:
    """
    :param n_max: last section, >= 5
    :param tol: bisection width
    :return: ThetaThresholds; q_inf lies in [q_inf_low, q_inf_high]
    """
    if isinstance(n_max, bool) or int(n_max) != n_max or n_max < 5:
        raise InvalidInputError('The q_inf bracket needs n_max >= 5, got ' + str(n_max))
    return compute_thresholds(n_max, tol)


@functools.lru_cache(maxsize=1)
def default_thresholds() -> ThetaThresholds:
    return compute_thresholds(_DEFAULT_N_MAX, _DEFAULT_BRACKET_TOL)


def g_a_membership(a: float, degree: int = DEFAULT_DEGREE, grid: int = _THETA_GRID,
                   thresholds: Optional[ThetaThresholds] = None) -> CriterionVerdict:
    """
    g_a is in L-P exactly when g_a(x0) <= 0 for some x0 in (-a^3, -a), which happens exactly when
    a^2 >= q_inf. The scan decides; the bracket comparison is reported alongside.
    :param a: parameter, a > 1
    :param degree: truncation degree, the tail past it is certified
    :param grid: scan grid intervals
    :param thresholds: bracket source, defaults to a cached n_max = 9 run
    :return: verdict
    """
    if not (math.isfinite(a) and a > 1):
        raise InvalidInputError('Parameter a must be > 1, got ' + str(a))
    s = partial_theta_series(a, degree)
    scan = sign_scan_segment(s, -a ** 3, -a, grid=grid)
    bracket = thresholds if thresholds is not None else default_thresholds()
    square = a * a
    low, high = bracket.q_inf_low, bracket.q_inf_high
    slack = 2 * bracket.tol
    if high is not None and square >= high + slack:
        member = True
    elif low is not None and square < low - slack:
        member = False
    else:
        member = None
    computed = {'a': a, 'a_squared': square, 'q_inf_low': low, 'q_inf_high': high,
                'deepest_point': scan.deepest_point, 'deepest_value': scan.deepest_value,
                'error_bound': scan.error_bound}
    flags = {}
    if member is not None:
        flags['item1_member'] = member
        flags['item1_agrees'] = member == scan.found
        if member != scan.found:
            logging.warning('g_a scan and q_inf bracket disagree at a=' + repr(a))
    if scan.found:
        computed['witness_value'] = scan.witness_value
        computed['witness_margin'] = -scan.witness_value
        return CriterionVerdict('g_a_membership', HOLDS, CLASSIFIER, computed, witness=scan.witness, flags=flags)
    computed['witness_margin'] = -scan.deepest_value
    return CriterionVerdict('g_a_membership', FAILS, CLASSIFIER, computed, flags=flags,
                            notes=['no x0 in (-a^3, -a) with g_a(x0) <= 0: not in L-P'])

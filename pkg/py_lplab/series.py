"""
Entire functions with positive coefficients: coefficient and quotient views, normalization and
evaluation with a controlled truncation error.

A series is stored as its leading coefficient a_0 and the ratios p_k = a_{k-1}/a_k. Coefficients are
a derived view, so deep truncations of fast decaying families never depend on underflowed floats.
"""
import json
import logging
import math
import os
from typing import Callable, Dict, List, NamedTuple, Optional, Sequence, Tuple, Union

import mpmath
import numpy as np

EXPLICIT = 'explicit'
FROM_QUOTIENTS = 'from-quotients'
EXPONENTIAL = 'exponential'
PARTIAL_THETA = 'partial-theta'
EULER_LIKE = 'euler-like'
FAMILIES = (EXPLICIT, FROM_QUOTIENTS, EXPONENTIAL, PARTIAL_THETA, EULER_LIKE)
_PARAMETRIC = (PARTIAL_THETA, EULER_LIKE)

DOUBLE = 'double'
EXTENDED = 'extended'
PRECISION_ENV = 'LPLAB_PRECISION'

DEFAULT_DEGREE = 64
DEFAULT_EPS = 1e-15
_EXTENDED_DPS = 32  # significant digits carried by mpmath in extended mode
_TAIL_WINDOW = 4  # trailing ratios used to extrapolate explicit series past their degree
_ROUNDING = float(np.finfo(float).eps)

_SPEC_FIELDS = ('family', 'a', 'a0', 'a1', 'q', 'coeffs', 'degree')


class InvalidInputError(ValueError):
    """Raised for arguments outside the domain of an operation."""


class SpecError(InvalidInputError):
    """Raised when a series-spec document cannot be turned into a series."""

    def __init__(self, field: str, message: str):
        super().__init__('Spec field ' + str(field) + ': ' + message)
        self.field = field


class NumericalRefusalError(RuntimeError):
    """Base class of the cases where a numeric engine declines to answer."""


class UncertainEvaluationError(NumericalRefusalError):
    """Raised when a tail bound is required but the terms do not decay."""


def precision_mode(precision: Optional[str] = None) -> str:
    """
    Resolve the arithmetic mode.
    :param precision: 'double' or 'extended'. When None, LPLAB_PRECISION is read (default 'double').
    :return: the mode string
    """
    mode = precision if precision is not None else os.environ.get(PRECISION_ENV, DOUBLE)
    mode = str(mode).strip().lower()
    if mode not in (DOUBLE, EXTENDED):
        raise InvalidInputError('Unknown precision mode: ' + mode + ' (expected double or extended)')
    return mode


def _safe_power(base: float, exponent: float) -> float:
    try:
        return base ** exponent
    except OverflowError:
        return math.inf


class CoefficientSeries:
    """
    Truncation a_0 + a_1 z + ... + a_N z^N of an entire function with positive coefficients.

    Family members also carry their ratio rule k -> p_k, valid beyond N, which is used for tails.
    """

    def __init__(self, a0: float, ratios: Sequence[float], family: str = EXPLICIT, a: Optional[float] = None,
                 coeffs: Optional[Sequence[float]] = None, ratio_rule: Optional[Callable[[int], float]] = None,
                 limit_hint: Optional[float] = None):
        """
        :param a0: leading coefficient, a_0 > 0
        :param ratios: p_1..p_N with p_k = a_{k-1}/a_k
        :param family: one of FAMILIES
        :param a: family parameter (partial-theta, euler-like)
        :param coeffs: explicit coefficient list, stored as given when present
        :param ratio_rule: k -> p_k for every k >= 1
        :param limit_hint: known limit of q_n
        """
        if family not in FAMILIES:
            raise InvalidInputError('Unknown family: ' + str(family))
        a0 = float(a0)
        if not (math.isfinite(a0) and a0 > 0):
            raise InvalidInputError('Coefficient a_0 must be positive, got ' + str(a0))
        p = np.array(ratios, dtype=float)
        if p.ndim != 1 or p.size < 1:
            raise InvalidInputError('A series needs degree >= 1')
        for k, value in enumerate(p, start=1):
            if not (math.isfinite(value) and value > 0):
                raise InvalidInputError('Ratio p_' + str(k) + ' must be positive and finite, got ' + str(value))
        p.setflags(write=False)
        self._a0 = a0
        self._p = p
        self._family = family
        self._a = None if a is None else float(a)
        self._rule = ratio_rule
        self._limit_hint = limit_hint
        if coeffs is None:
            values = [a0]
            for ratio in p:
                values.append(values[-1] / ratio)
            coeffs = values
        self._coeffs = tuple(float(c) for c in coeffs)

    @property
    def family(self) -> str:
        """
        :return: family tag
        """
        return self._family

    @property
    def a(self) -> Optional[float]:
        """
        :return: family parameter, None for parameterless families
        """
        return self._a

    @property
    def degree(self) -> int:
        return int(self._p.size)

    @property
    def a0(self) -> float:
        return self._a0

    @property
    def a1(self) -> float:
        return self._coeffs[1]

    @property
    def ratios(self) -> np.ndarray:
        """
        :return: read-only array p_1..p_N
        """
        return self._p

    @property
    def coeffs(self) -> Tuple[float, ...]:
        """
        Float view a_0..a_N. Entries below the binary64 range read as 0.0.
        :return: tuple of coefficients
        """
        return self._coeffs

    @property
    def limit_hint(self) -> Optional[float]:
        return self._limit_hint

    @property
    def has_rule(self) -> bool:
        return self._rule is not None

    def ratio(self, k: int) -> float:
        """
        p_k for any k >= 1. Past the degree this is the family rule or, without one, the smallest of
        the trailing ratios.
        :param k: index
        :return: p_k
        """
        if k < 1:
            raise InvalidInputError('Ratio index must be >= 1, got ' + str(k))
        if k <= self.degree:
            return float(self._p[k - 1])
        if self._rule is not None:
            return float(self._rule(k))
        return float(np.min(self._p[-_TAIL_WINDOW:]))

    def ratio_floor(self, k: int) -> float:
        """
        Lower estimate of inf_{j >= k} p_j. Exact for families with increasing ratios.
        :param k: index
        :return: the floor
        """
        beyond = self.ratio(self.degree + 1)
        if k > self.degree:
            return self.ratio(k) if self._rule is not None else beyond
        return min(float(np.min(self._p[k - 1:])), beyond)

    def truncated(self, degree: int) -> 'CoefficientSeries':
        """
        :param degree: new degree, 1 <= degree <= self.degree
        :return: the series cut after a_degree, keeping family and rule
        """
        if not 1 <= degree <= self.degree:
            raise InvalidInputError('Truncation degree must be in [1, ' + str(self.degree) + '], got ' + str(degree))
        return CoefficientSeries(self._a0, self._p[:degree], family=self._family, a=self._a,
                                 coeffs=self._coeffs[:degree + 1], ratio_rule=self._rule,
                                 limit_hint=self._limit_hint)

    def __str__(self):
        return "<CoefficientSeries family={} degree={}>".format(self._family, self.degree)

    def __repr__(self):
        return self.__str__()


class QuotientSequence:
    """
    First quotients p_1..p_N and second quotients q_2..q_N of a series, plus a_0 and a_1.
    """

    def __init__(self, p: Sequence[float], q: Sequence[float], a0: float, a1: float,
                 limit_hint: Optional[float] = None):
        self._p = tuple(float(v) for v in p)
        self._q = tuple(float(v) for v in q)
        self._a0 = float(a0)
        self._a1 = float(a1)
        self._limit_hint = limit_hint

    @classmethod
    def from_q(cls, q: Sequence[float], a0: float = 1.0, a1: float = 1.0,
               limit_hint: Optional[float] = None) -> 'QuotientSequence':
        """
        Build a sequence from q_2, q_3, ... keeping the given values exactly.
        :param q: second quotients starting at q_2
        :param a0: a_0
        :param a1: a_1
        :param limit_hint: known limit of q_n
        :return: QuotientSequence
        """
        _check_quotients(q)
        _check_leading(a0, a1)
        p = [a0 / a1]
        for value in q:
            p.append(p[-1] * value)
        return cls(p, q, a0, a1, limit_hint)

    @property
    def p(self) -> Tuple[float, ...]:
        return self._p

    @property
    def q(self) -> Tuple[float, ...]:
        """
        :return: q_2..q_N, so q[0] is q_2
        """
        return self._q

    @property
    def a0(self) -> float:
        return self._a0

    @property
    def a1(self) -> float:
        return self._a1

    @property
    def limit_hint(self) -> Optional[float]:
        return self._limit_hint

    @property
    def degree(self) -> int:
        return len(self._p)

    def q_at(self, n: int) -> float:
        """
        :param n: index, 2 <= n <= degree
        :return: q_n
        """
        if not 2 <= n < len(self._q) + 2:
            raise InvalidInputError('q_' + str(n) + ' is not available (have q_2..q_' + str(len(self._q) + 1) + ')')
        return self._q[n - 2]

    def to_dict(self) -> Dict:
        return {
            'a0': self._a0,
            'a1': self._a1,
            'p': list(self._p),
            'q': list(self._q),
            'limit_hint': self._limit_hint,
        }

    def __str__(self):
        return "<QuotientSequence degree={} q2={}>".format(self.degree, self._q[0] if self._q else None)

    def __repr__(self):
        return self.__str__()


class EvalResult(NamedTuple):
    value: float
    truncation_degree: int
    tail_estimate: float
    uncertain: bool = False
    lower: Optional[float] = None
    upper: Optional[float] = None


def _check_degree(degree: int) -> int:
    if isinstance(degree, bool) or int(degree) != degree or degree < 1:
        raise InvalidInputError('Degree must be an integer >= 1, got ' + str(degree))
    return int(degree)


def _check_parameter(a: float) -> float:
    a = float(a)
    if not (math.isfinite(a) and a > 1):
        raise InvalidInputError('Family parameter a must be > 1, got ' + str(a))
    return a


def _check_leading(a0: float, a1: float):
    for name, value in (('a_0', a0), ('a_1', a1)):
        if not (math.isfinite(value) and value > 0):
            raise InvalidInputError('Coefficient ' + name + ' must be positive, got ' + str(value))


def _check_quotients(q: Sequence[float]):
    for n, value in enumerate(q, start=2):
        if not (math.isfinite(value) and value > 0):
            raise InvalidInputError('Quotient q_' + str(n) + ' must be positive, got ' + str(value))


def _family_series(family: str, a: Optional[float], degree: int, rule: Callable[[int], float],
                   limit_hint: float) -> CoefficientSeries:
    ratios = [rule(k) for k in range(1, degree + 1)]
    if not all(math.isfinite(r) for r in ratios):
        raise InvalidInputError('Degree ' + str(degree) + ' is too large for ' + family + ' with a=' + str(a))
    return CoefficientSeries(1.0, ratios, family=family, a=a, ratio_rule=rule, limit_hint=limit_hint)


def exponential_series(degree: int = DEFAULT_DEGREE) -> CoefficientSeries:
    """
    e^z truncated, a_k = 1/k!.
    """
    degree = _check_degree(degree)
    return _family_series(EXPONENTIAL, None, degree, float, 1.0)


def partial_theta_series(a: float, degree: int = DEFAULT_DEGREE) -> CoefficientSeries:
    """
    Partial theta function g_a(z) = sum z^k / a^(k^2) truncated at degree.
    :param a: parameter, a > 1
    :param degree: truncation degree
    :return: CoefficientSeries with p_k = a^(2k-1)
    """
    a = _check_parameter(a)
    degree = _check_degree(degree)
    return _family_series(PARTIAL_THETA, a, degree, lambda k: _safe_power(a, 2 * k - 1), a * a)


def euler_like_series(a: float, degree: int = DEFAULT_DEGREE) -> CoefficientSeries:
    """
    f_a(z) = sum z^k / ((a+1)(a^2+1)...(a^k+1)) truncated at degree.
    :param a: parameter, a > 1
    :param degree: truncation degree
    :return: CoefficientSeries with p_k = a^k + 1
    """
    a = _check_parameter(a)
    degree = _check_degree(degree)
    return _family_series(EULER_LIKE, a, degree, lambda k: _safe_power(a, k) + 1.0, a)


def explicit_series(coeffs: Sequence[float]) -> CoefficientSeries:
    """
    :param coeffs: a_0..a_N, all positive, N >= 1
    :return: CoefficientSeries storing the coefficients as given
    """
    values = [float(c) for c in coeffs]
    if len(values) < 2:
        raise InvalidInputError('A series needs at least two coefficients, got ' + str(len(values)))
    for k, value in enumerate(values):
        if not (math.isfinite(value) and value > 0):
            raise InvalidInputError('Coefficient a_' + str(k) + ' must be positive, got ' + str(value))
    ratios = [values[k - 1] / values[k] for k in range(1, len(values))]
    return CoefficientSeries(values[0], ratios, family=EXPLICIT, coeffs=values)


def quotients_from_coeffs(s: CoefficientSeries) -> QuotientSequence:
    """
    p_n = a_{n-1}/a_n and q_n = p_n/p_{n-1}.
    :param s: series of degree >= 2
    :return: QuotientSequence
    """
    if s.degree < 2:
        raise InvalidInputError('Second quotients need degree >= 2, got ' + str(s.degree))
    p = s.ratios
    q = p[1:] / p[:-1]
    return QuotientSequence(p, q, s.a0, s.a1, s.limit_hint)


def coeffs_from_quotients(a0: float, a1: float, q: Sequence[float]) -> CoefficientSeries:
    """
    Rebuild a_n = a_1 (a_1/a_0)^(n-1) / (q_2^(n-1) q_3^(n-2) ... q_n) through the running products
    p_n = p_{n-1} q_n.
    :param a0: a_0 > 0
    :param a1: a_1 > 0
    :param q: q_2..q_N, all positive
    :return: CoefficientSeries of degree len(q) + 1
    """
    a0 = float(a0)
    a1 = float(a1)
    q = [float(v) for v in q]
    _check_leading(a0, a1)
    _check_quotients(q)
    p = [a0 / a1]
    coeffs = [a0, a1]
    for value in q:
        p.append(p[-1] * value)
        coeffs.append(coeffs[-1] / p[-1])
    return CoefficientSeries(a0, p, family=FROM_QUOTIENTS, coeffs=coeffs)


def normalize(s: CoefficientSeries) -> CoefficientSeries:
    """
    g(x) = f(a_0 x / a_1) / a_0, so g_0 = g_1 = 1 and every q_n is unchanged.
    :param s: series
    :return: normalized series
    """
    if s.a0 == 1.0 and s.ratios[0] == 1.0:
        return s
    first = float(s.ratios[0])
    p = np.array(s.ratios) / first
    p[0] = 1.0
    rule = None
    if s.has_rule:
        rule = _scaled_rule(s, first)
    return CoefficientSeries(1.0, p, family=FROM_QUOTIENTS, a=s.a, ratio_rule=rule, limit_hint=s.limit_hint)


def _scaled_rule(s: CoefficientSeries, first: float) -> Callable[[int], float]:
    return lambda k: s.ratio(k) / first


def term_sequence(s: CoefficientSeries, x: float, stop: Optional[int] = None) -> List[float]:
    """
    t_0 = a_0, t_k = t_{k-1} x / p_k.
    :param s: series
    :param x: real point
    :param stop: last index, defaults to the degree
    :return: [t_0, ..., t_stop]
    """
    stop = s.degree if stop is None else stop
    terms = [s.a0]
    term = s.a0
    for ratio in s.ratios[:stop]:
        term = term * x / float(ratio)
        terms.append(term)
    return terms


def _extended_sum(s: CoefficientSeries, x: float, stop: int, start: int = 0) -> float:
    with mpmath.workdps(_EXTENDED_DPS):
        term = mpmath.mpf(s.a0)
        point = mpmath.mpf(x)
        terms = [term]
        for ratio in s.ratios[:stop]:
            term = term * point / mpmath.mpf(float(ratio))
            terms.append(term)
        return float(mpmath.fsum(terms[start:]))


def _sum(s: CoefficientSeries, terms: List[float], x: float, start: int, stop: int, mode: str) -> float:
    if stop < start:
        return 0.0
    if mode == EXTENDED:
        return _extended_sum(s, x, stop, start)
    return math.fsum(terms[start:stop + 1])


def _tail_bound(s: CoefficientSeries, terms: List[float], x: float, m: int) -> Tuple[Optional[float], float, float]:
    """
    Bound on |sum_{k > m} t_k|.
    :return: (bound or None, |t_{m+1}|, signed t_{m+1})
    """
    magnitude = abs(x)
    if m < s.degree:
        following = terms[m + 1]
    else:
        following = terms[m] * x / s.ratio(m + 1)
    size = abs(following)
    if magnitude == 0 or size == 0:
        return 0.0, size, following
    worst = magnitude / s.ratio_floor(m + 2)
    if x < 0 and worst <= 1:
        return size, size, following
    if worst < 1:
        return size / (1.0 - worst), size, following
    return None, size, following


def evaluate(s: CoefficientSeries, x: float, eps: float = DEFAULT_EPS,
             precision: Optional[str] = None) -> EvalResult:
    """
    Sum the series at a real point, stopping at the first cutoff whose certified tail is <= eps.
    Alternating points (x < 0) use the Leibniz bound and report the sandwich S_m, S_{m+1}.
    :param s: series
    :param x: real point
    :param eps: target tail, > 0
    :param precision: 'double' or 'extended', defaults to LPLAB_PRECISION
    :return: EvalResult
    """
    x = float(x)
    if not eps > 0:
        raise InvalidInputError('eps must be positive, got ' + str(eps))
    mode = precision_mode(precision)
    terms = term_sequence(s, x)
    cutoff, bound, following = None, None, 0.0
    for m in range(s.degree + 1):
        bound, size, following = _tail_bound(s, terms, x, m)
        if bound is not None and bound <= eps:
            cutoff = m
            break
    uncertain = False
    if cutoff is None:
        cutoff = s.degree
        bound, size, following = _tail_bound(s, terms, x, cutoff)
        if bound is None:
            uncertain = True
            bound = size
            logging.warning('No tail bound for ' + str(s) + ' at x=' + repr(x) + ', result flagged uncertain')
    value = _sum(s, terms, x, 0, cutoff, mode)
    lower, upper = None, None
    if x < 0 and not uncertain and abs(x) / s.ratio_floor(cutoff + 2) <= 1:
        lower, upper = sorted((value, value + following))
    return EvalResult(value, cutoff, bound, uncertain, lower, upper)


def alternating_evaluate(s: CoefficientSeries, x: float, eps: float = DEFAULT_EPS,
                         precision: Optional[str] = None) -> EvalResult:
    """
    phi(x) = f(-x).
    """
    return evaluate(s, -float(x), eps, precision)


def partial_sum(s: CoefficientSeries, n: int, x: float, precision: Optional[str] = None) -> float:
    """
    :param s: series
    :param n: 0 <= n <= degree
    :param x: real point
    :param precision: arithmetic mode
    :return: S_n(x) = a_0 + ... + a_n x^n
    """
    if not 0 <= n <= s.degree:
        raise InvalidInputError('Partial sum index must be in [0, ' + str(s.degree) + '], got ' + str(n))
    x = float(x)
    return _sum(s, term_sequence(s, x, n), x, 0, n, precision_mode(precision))


def remainder(s: CoefficientSeries, n: int, x: float, eps: float = DEFAULT_EPS,
              precision: Optional[str] = None) -> EvalResult:
    """
    R_n(x) = sum_{k >= n} a_k x^k, summed up to the cutoff chosen by evaluate.
    :param s: series
    :param n: 0 <= n <= degree + 1
    :param x: real point
    :param eps: target tail
    :param precision: arithmetic mode
    :return: EvalResult whose tail_estimate also bounds the omitted part of R_n
    """
    if not 0 <= n <= s.degree + 1:
        raise InvalidInputError('Remainder index must be in [0, ' + str(s.degree + 1) + '], got ' + str(n))
    full = evaluate(s, x, eps, precision)
    x = float(x)
    value = _sum(s, term_sequence(s, x), x, n, full.truncation_degree, precision_mode(precision))
    return EvalResult(value, full.truncation_degree, full.tail_estimate, full.uncertain)


def evaluate_points(s: CoefficientSeries, points, start: int = 0,
                    stop: Optional[int] = None) -> Tuple[np.ndarray, np.ndarray]:
    """
    Vectorized sum_{k=start}^{stop} a_k z^k.
    :param s: series
    :param points: real or complex array
    :param start: first index
    :param stop: last index, defaults to the degree
    :return: (values, magnitudes) where magnitudes is sum |a_k z^k|, the rounding scale
    """
    stop = s.degree if stop is None else stop
    if not 0 <= start <= stop <= s.degree:
        raise InvalidInputError('Need 0 <= start <= stop <= ' + str(s.degree) + ', got '
                                + str(start) + ', ' + str(stop))
    z = np.asarray(points)
    kind = np.result_type(z, float)
    term = np.full(z.shape, s.a0, dtype=kind)
    total = np.zeros(z.shape, dtype=kind)
    scale = np.zeros(z.shape, dtype=float)
    with np.errstate(over='ignore', under='ignore', invalid='ignore'):
        for k in range(stop + 1):
            if k:
                term = term * z / s.ratios[k - 1]
            if k >= start:
                total = total + term
                scale = scale + np.abs(term)
    if not np.all(np.isfinite(total)):
        raise UncertainEvaluationError('Overflow evaluating ' + str(s) + ' up to degree ' + str(stop))
    return total, scale


def truncation_bound(s: CoefficientSeries, radius: float, stop: Optional[int] = None) -> float:
    """
    Geometric majorant of sum_{k > stop} a_k r^k, valid on the closed disk |z| <= r.
    :param s: series
    :param radius: r >= 0
    :param stop: last summed index, defaults to the degree
    :return: the bound
    """
    stop = s.degree if stop is None else stop
    radius = abs(float(radius))
    if radius == 0:
        return 0.0
    log_term = math.log(s.a0)
    for ratio in s.ratios[:stop]:
        log_term += math.log(radius) - math.log(float(ratio))
    worst = radius / s.ratio_floor(stop + 2)
    if worst >= 1:
        raise UncertainEvaluationError('No geometric tail majorant for ' + str(s) + ' at radius ' + repr(radius)
                                       + ' after degree ' + str(stop))
    log_next = log_term + math.log(radius) - math.log(s.ratio(stop + 1))
    if log_next < -745:
        return 0.0
    return math.exp(log_next) / (1.0 - worst)


def evaluation_error_bound(s: CoefficientSeries, radius: float, stop: Optional[int] = None) -> float:
    """
    Rounding plus truncation bound for the sum evaluated anywhere on |z| <= radius.
    :param s: series
    :param radius: r >= 0
    :param stop: last summed index, defaults to the degree
    :return: the bound
    """
    stop = s.degree if stop is None else stop
    _, scale = evaluate_points(s, np.array([abs(float(radius))]), stop=stop)
    return 4.0 * (stop + 1) * _ROUNDING * float(scale[0]) + truncation_bound(s, radius, stop)


def _spec_number(doc: Dict, field: str, default: Optional[float] = None) -> Optional[float]:
    value = doc.get(field, default)
    if value is None:
        return None
    if isinstance(value, bool):
        raise SpecError(field, 'must be a number, got ' + str(value))
    try:
        return float(value)
    except (TypeError, ValueError):
        raise SpecError(field, 'must be a number, got ' + str(value))


def _spec_numbers(doc: Dict, field: str) -> Optional[List[float]]:
    value = doc.get(field)
    if value is None:
        return None
    if isinstance(value, str):
        value = [v for v in value.split(',') if v.strip()]
    if not isinstance(value, (list, tuple)):
        raise SpecError(field, 'must be a list of numbers')
    try:
        return [float(v) for v in value]
    except (TypeError, ValueError):
        raise SpecError(field, 'must be a list of numbers, got ' + str(value))


def _spec_degree(doc: Dict) -> Optional[int]:
    value = doc.get('degree')
    if value is None:
        return None
    if isinstance(value, bool) or not isinstance(value, (int, float)) or int(value) != value:
        raise SpecError('degree', 'must be an integer, got ' + str(value))
    return int(value)


def load_series_spec(source: Union[str, Dict]) -> CoefficientSeries:
    """
    Build a series from a series-spec document. Exactly one of {family with parameters, q, coeffs}
    defines the series.
    :param source: path of a JSON document, or the already parsed dict
    :return: CoefficientSeries
    """
    if isinstance(source, dict):
        doc = source
    else:
        try:
            with open(source, 'r') as f:
                doc = json.load(f)
        except OSError as e:
            raise SpecError('input', 'cannot read ' + str(source) + ': ' + str(e))
        except ValueError as e:
            raise SpecError('input', 'not a JSON document: ' + str(e))
    if not isinstance(doc, dict):
        raise SpecError('input', 'the document must be an object')
    for field in doc:
        if field not in _SPEC_FIELDS:
            raise SpecError(field, 'unknown field')

    family = doc.get('family')
    if family is not None and family not in FAMILIES:
        raise SpecError('family', 'unknown family ' + str(family) + ', expected one of ' + ', '.join(FAMILIES))
    q = _spec_numbers(doc, 'q')
    coeffs = _spec_numbers(doc, 'coeffs')
    degree = _spec_degree(doc)
    a = _spec_number(doc, 'a')
    a0 = _spec_number(doc, 'a0', 1.0)
    a1 = _spec_number(doc, 'a1', 1.0)

    if family == EXPLICIT and coeffs is None:
        raise SpecError('coeffs', 'family explicit needs coeffs')
    if family == FROM_QUOTIENTS and q is None:
        raise SpecError('q', 'family from-quotients needs q')
    generated = family in (EXPONENTIAL, PARTIAL_THETA, EULER_LIKE)
    sources = [name for name, present in (('family', generated), ('q', q is not None),
                                          ('coeffs', coeffs is not None)) if present]
    if len(sources) != 1:
        field = sources[-1] if sources else 'family'
        raise SpecError(field, 'exactly one of family, q, coeffs must define the series')
    if family in _PARAMETRIC and a is None:
        raise SpecError('a', 'family ' + family + ' needs the parameter a')
    if family not in _PARAMETRIC and a is not None:
        raise SpecError('a', 'only partial-theta and euler-like take a parameter')

    try:
        if coeffs is not None:
            if degree is not None and degree != len(coeffs) - 1:
                raise SpecError('degree', 'must equal len(coeffs) - 1 = ' + str(len(coeffs) - 1))
            return explicit_series(coeffs)
        if q is not None:
            if degree is not None and degree != len(q) + 1:
                raise SpecError('degree', 'must equal len(q) + 1 = ' + str(len(q) + 1))
            return coeffs_from_quotients(a0, a1, q)
        degree = DEFAULT_DEGREE if degree is None else degree
        if family == EXPONENTIAL:
            return exponential_series(degree)
        if family == PARTIAL_THETA:
            return partial_theta_series(a, degree)
        return euler_like_series(a, degree)
    except SpecError:
        raise
    except InvalidInputError as e:
        field = 'coeffs' if coeffs is not None else 'q' if q is not None else 'a' if 'parameter' in str(e) else 'degree'
        raise SpecError(field, str(e))


def series_spec_document(s: CoefficientSeries) -> Dict:
    """
    :param s: series
    :return: the series-spec document describing s
    """
    doc = {'family': s.family, 'degree': s.degree}
    if s.a is not None and s.family in _PARAMETRIC:
        doc['a'] = s.a
    if s.family == FROM_QUOTIENTS:
        doc['a0'] = s.a0
        doc['a1'] = s.a1
        doc['q'] = [float(v) for v in s.ratios[1:] / s.ratios[:-1]]
    elif s.family == EXPLICIT:
        doc['coeffs'] = list(s.coeffs)
    return doc

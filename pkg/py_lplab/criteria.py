"""
Membership criteria for the Laguerre-Polya class phrased in the second quotients q_n, each
returning a CriterionVerdict with its margins.
"""
import logging
import math
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple, Union

from scipy.special import comb

from .roots import (ALL_REAL_NEGATIVE, COMPLEX_PRESENT, RootReport, is_real_rooted, min_modulus_on_circle,
                    poly_roots, sign_scan_segment)
from .series import (CoefficientSeries, InvalidInputError, NumericalRefusalError, QuotientSequence,
                     evaluate, normalize, quotients_from_coeffs)

HOLDS = 'holds'
FAILS = 'fails'
INCONCLUSIVE = 'inconclusive'
STATUSES = (HOLDS, FAILS, INCONCLUSIVE)

NECESSARY = 'necessary'
SUFFICIENT = 'sufficient'
CLASSIFIER = 'classifier'
DIAGNOSTIC = 'diagnostic'
EVIDENCE = 'evidence'
WITNESS_SUFFICIENT = 'witness-sufficient'  # holding guarantees a point x0 with f(x0) <= 0, not membership

Q_INF_LITERAL = 3.23363666
HUTCHINSON_CONSTANT = 4.0
EQUALITY_TOL = 1e-12  # margins this close to 0 count as equality
MONOTONE_TOL = 1e-12  # relative slack when reading a q-window as monotone
APOLAR_RESIDUAL_TOL = 1e-12
DISK_TOL = 1e-8  # slack on |z| <= q2 for numerically found roots
DEFAULT_ROOT_DEGREE = 30
_MIN_COEFF = 1e-290  # truncations stop before coefficients this small
_SEGMENT_GRID = 1024


class CriterionVerdict:
    """
    Outcome of one criterion: status, role, the numbers it was decided on, and an optional witness.
    """

    def __init__(self, criterion: str, status: str, role: str, computed: Optional[Dict[str, float]] = None,
                 witness=None, flags: Optional[Dict[str, bool]] = None, notes: Optional[List[str]] = None):
        if status not in STATUSES:
            raise ValueError('Status: ' + str(status) + ' not one of ' + ', '.join(STATUSES))
        self._criterion = criterion
        self._status = status
        self._role = role
        self._computed = dict(computed or {})
        self._witness = witness
        self._flags = dict(flags or {})
        self._notes = list(notes or [])

    @property
    def criterion(self) -> str:
        return self._criterion

    @property
    def status(self) -> str:
        """
        :return: holds, fails or inconclusive
        """
        return self._status

    @property
    def role(self) -> str:
        return self._role

    @property
    def computed(self) -> Dict[str, float]:
        return dict(self._computed)

    @property
    def witness(self):
        return self._witness

    @property
    def flags(self) -> Dict[str, bool]:
        return dict(self._flags)

    @property
    def notes(self) -> List[str]:
        return list(self._notes)

    def amended(self, flags: Optional[Dict[str, bool]] = None, notes: Sequence[str] = ()) -> 'CriterionVerdict':
        """
        :return: a copy with extra flags and notes
        """
        merged = dict(self._flags)
        merged.update(flags or {})
        return CriterionVerdict(self._criterion, self._status, self._role, self._computed, self._witness,
                                merged, self._notes + list(notes))

    def to_dict(self) -> Dict:
        return {
            'criterion': self._criterion,
            'role': self._role,
            'status': self._status,
            'computed': {k: _finite_or_none(v) for k, v in self._computed.items()},
            'witness': _finite_or_none(self._witness),
            'flags': dict(self._flags),
            'notes': list(self._notes),
        }

    def __str__(self):
        return "<CriterionVerdict criterion={} status={}>".format(self._criterion, self._status)

    def __repr__(self):
        return self.__str__()


def _finite_or_none(value):
    if isinstance(value, float) and not math.isfinite(value):
        return None
    return value


class Thm2Bound(NamedTuple):
    q2: float
    bound: float
    remark_bound: float


class TailBound(NamedTuple):
    bound: float
    gate_margin: float
    strict_margin: float


class ApolarQuartic(NamedTuple):
    q2: float
    b2: float
    b3: float
    q_roots: Tuple[complex, ...]
    q_roots_numeric: Tuple[complex, ...]
    apolarity_residual: float
    roots_in_disk: bool
    s4_roots: Tuple[complex, ...]
    s4_root_in_disk: bool


def _quotients(q: Union[QuotientSequence, Sequence[float]]) -> QuotientSequence:
    if isinstance(q, QuotientSequence):
        return q
    return QuotientSequence.from_q([float(v) for v in q])


def _check_positive(**values):
    for name, value in values.items():
        if not (math.isfinite(value) and value > 0):
            raise InvalidInputError(name + ' must be positive, got ' + str(value))


def _at_least(a: float, b: float) -> bool:
    """a >= b up to the relative slack of a q-window read as constant."""
    return a >= b - MONOTONE_TOL * abs(b)


def newton_check(q: Union[QuotientSequence, Sequence[float]]) -> CriterionVerdict:
    """
    Newton's inequalities q_n >= n/(n-1), necessary for every member of L-P I.
    :param q: quotient sequence, or q_2, q_3, ...
    :return: verdict, witness = first equality or failing index
    """
    qs = _quotients(q)
    if not qs.q:
        raise InvalidInputError('Newton check needs at least q_2')
    margins = {}
    equality = []
    worst_n, worst = None, math.inf
    for n, value in enumerate(qs.q, start=2):
        margin = value - n / (n - 1)
        margins['margin_' + str(n)] = margin
        if abs(margin) <= EQUALITY_TOL:
            equality.append(n)
        if margin < worst:
            worst_n, worst = n, margin
    computed = {'min_margin': worst, 'argmin': float(worst_n), 'window': float(len(qs.q))}
    computed.update(margins)
    flags = {'exponential': bool(equality)}
    if worst < -EQUALITY_TOL:
        return CriterionVerdict('newton', FAILS, NECESSARY, computed, witness=worst_n, flags=flags,
                                notes=['q_' + str(worst_n) + ' < ' + str(worst_n) + '/' + str(worst_n - 1)
                                       + ': not in L-P I'])
    notes = []
    if equality:
        notes.append('equality at n=' + ', '.join(str(n) for n in equality) + ' (exponential boundary)')
    return CriterionVerdict('newton', HOLDS, NECESSARY, computed, witness=equality[0] if equality else None,
                            flags=flags, notes=notes)


def lemma_q2q3_check(q2: float, q3: float) -> CriterionVerdict:
    """
    Necessary condition q3 (q2 - 4) + 3 >= 0.
    """
    _check_positive(q2=q2, q3=q3)
    margin = q3 * (q2 - 4.0) + 3.0
    applies = q3 >= q2 and margin >= 0 and q2 >= 2.0
    consistent = (not applies) or q2 >= 3.0 - EQUALITY_TOL
    if not consistent:
        message = 'q2-q3 corollary broken: q2=' + repr(q2) + ' q3=' + repr(q3) + ' margin=' + repr(margin)
        logging.critical(message)
        raise RuntimeError(message)
    computed = {'q2': q2, 'q3': q3, 'margin': margin}
    flags = {'corollary_applies': applies, 'corollary_consistent': consistent}
    if margin < 0:
        return CriterionVerdict('lemma_q2q3', FAILS, NECESSARY, computed, flags=flags,
                                notes=['q3 (q2 - 4) + 3 < 0: not in L-P I'])
    notes = ['q3 >= q2 forces q2 >= 3'] if applies else []
    return CriterionVerdict('lemma_q2q3', HOLDS, NECESSARY, computed, flags=flags, notes=notes)


def hutchinson_check(q: Union[QuotientSequence, Sequence[float]]) -> CriterionVerdict:
    """
    q_n >= 4 for every n in the window: sufficient for L-P I.
    """
    qs = _quotients(q)
    if not qs.q:
        raise InvalidInputError('Hutchinson check needs at least q_2')
    margins = [value - HUTCHINSON_CONSTANT for value in qs.q]
    index = min(range(len(margins)), key=lambda i: margins[i])
    computed = {'min_margin': margins[index], 'argmin': float(index + 2), 'window': float(len(margins))}
    holds = margins[index] >= -EQUALITY_TOL
    flags = {'sections_real_rooted_expected': holds}
    if holds:
        return CriterionVerdict('hutchinson', HOLDS, SUFFICIENT, computed, flags=flags,
                                notes=['every partial sum is expected to be real-rooted'])
    return CriterionVerdict('hutchinson', FAILS, SUFFICIENT, computed, witness=index + 2, flags=flags,
                            notes=['q_' + str(index + 2) + ' < 4: sufficient condition not met, no conclusion'])


def monotone_classify(q: Union[QuotientSequence, Sequence[float]], limit_hint: Optional[float] = None,
                      q_inf: Optional[Tuple[float, float]] = None) -> CriterionVerdict:
    """
    Decreasing q_n with limit >= q_inf: member. Increasing q_n with limit < q_inf: not a member.
    :param q: quotient sequence, or q_2, q_3, ...
    :param limit_hint: limit of q_n, overriding the family hint and the last entry
    :param q_inf: (low, high) bracket of q_inf, defaults to the literal at both ends
    :return: verdict
    """
    qs = _quotients(q)
    values = qs.q
    if len(values) < 3:
        raise InvalidInputError('Monotone reading needs at least 3 quotients, got ' + str(len(values)))
    pairs = list(zip(values[:-1], values[1:]))
    decreasing = all(b <= a + MONOTONE_TOL * abs(a) for a, b in pairs)
    increasing = all(b >= a - MONOTONE_TOL * abs(a) for a, b in pairs)
    if limit_hint is not None:
        limit, source = float(limit_hint), 'explicit limit hint'
    elif qs.limit_hint is not None:
        limit, source = float(qs.limit_hint), 'family limit'
    else:
        limit, source = values[-1], 'last window entry as limit'
    low, high = q_inf if q_inf is not None else (Q_INF_LITERAL, Q_INF_LITERAL)
    computed = {'window': float(len(values)), 'limit': limit, 'q_inf_low': low, 'q_inf_high': high,
                'member_margin': limit - high, 'nonmember_margin': limit - low}
    flags = {'decreasing': decreasing, 'increasing': increasing, 'constant': decreasing and increasing}
    notes = ['used ' + source]
    if decreasing and limit >= high:
        return CriterionVerdict('monotone', HOLDS, CLASSIFIER, computed, flags=flags,
                                notes=notes + ['decreasing to a limit >= q_inf: in L-P'])
    if increasing and limit < low:
        return CriterionVerdict('monotone', FAILS, CLASSIFIER, computed, flags=flags,
                                notes=notes + ['increasing to a limit < q_inf: not in L-P'])
    return CriterionVerdict('monotone', INCONCLUSIVE, CLASSIFIER, computed, flags=flags,
                            notes=notes + ['window is neither case'])


def thm1_zero_segment_check(s: CoefficientSeries, grid: int = _SEGMENT_GRID) -> CriterionVerdict:
    """
    When q2 <= q3, membership needs a point x0 in [-a1/a2, 0] with f(x0) <= 0. The scan runs on the
    normalized series over [-q2, 0].
    :param s: series of degree >= 3
    :param grid: scan grid intervals
    :return: verdict, witness in normalized coordinates
    """
    qs = quotients_from_coeffs(s)
    q2, q3 = qs.q_at(2), qs.q_at(3)
    computed = {'q2': q2, 'q3': q3, 'segment_low': -q2}
    if not _at_least(q3, q2):
        return CriterionVerdict('thm1_zero_segment', INCONCLUSIVE, NECESSARY, computed,
                                notes=['hypothesis q2 <= q3 unmet'])
    g = normalize(s)
    scan = sign_scan_segment(g, -q2, 0.0, grid=grid)
    scale = s.a0 / s.a1
    computed.update({'segment_low_original': -q2 * scale, 'deepest_point': scan.deepest_point,
                     'deepest_value': scan.deepest_value, 'error_bound': scan.error_bound})
    if q2 >= HUTCHINSON_CONSTANT:
        point = -math.sqrt(q2)
        computed['sqrt_q2_point'] = point
        computed['sqrt_q2_value'] = evaluate(g, point).value
    if scan.found:
        computed.update({'witness_original': scan.witness * scale, 'witness_value': scan.witness_value,
                         'witness_margin': -scan.witness_value})
        return CriterionVerdict('thm1_zero_segment', HOLDS, NECESSARY, computed, witness=scan.witness,
                                flags={'resolution_limited': False})
    computed['witness_margin'] = -scan.deepest_value
    return CriterionVerdict('thm1_zero_segment', FAILS, NECESSARY, computed,
                            flags={'resolution_limited': True},
                            notes=['no x0 in [-q2, 0] with f(x0) <= 0 at grid ' + str(grid) + ': not in L-P'])


def thm2_bound(q2: float) -> Thm2Bound:
    """
    Upper bound on q3 for members with 3 <= q2 <= q3 and q2 < 4.
    :param q2: 3 <= q2 < 4
    :return: Thm2Bound with the sharp bound and the simpler 3/(4 - q2)
    """
    if not 3.0 <= q2 < 4.0:
        raise InvalidInputError('The q3 bound needs 3 <= q2 < 4, got ' + str(q2))
    root = math.sqrt(q2 * (q2 - 3.0))
    bound = (-q2 * (2.0 * q2 - 9.0) + 2.0 * (q2 - 3.0) * root) / (q2 * (4.0 - q2))
    return Thm2Bound(q2, bound, 3.0 / (4.0 - q2))


def cubic_section_minimum(q2: float, q3: float) -> Tuple[float, float]:
    """
    Local minimum of S_3(x, phi) = 1 - x + x^2/q2 - x^3/(q2^2 q3).
    :return: (x1, S_3(x1))
    """
    x1 = (q2 * q3 - q2 * math.sqrt(max(q3 * (q3 - 3.0), 0.0))) / 3.0
    return x1, 1.0 - x1 + x1 * x1 / q2 - x1 ** 3 / (q2 * q2 * q3)


def thm2_check(q2: float, q3: float) -> CriterionVerdict:
    _check_positive(q2=q2, q3=q3)
    computed = {'q2': q2, 'q3': q3}
    if q2 >= 4.0:
        return CriterionVerdict('thm2', INCONCLUSIVE, NECESSARY, computed,
                                notes=['q2 >= 4: outside the range of the q3 bound'])
    if q2 < 3.0:
        return CriterionVerdict('thm2', INCONCLUSIVE, NECESSARY, computed,
                                notes=['q2 < 3: the q2-q3 lemma already covers this range when q3 >= q2'])
    if not _at_least(q3, q2):
        return CriterionVerdict('thm2', INCONCLUSIVE, NECESSARY, computed, notes=['hypothesis q2 <= q3 unmet'])
    bound = thm2_bound(q2)
    x1, s3 = cubic_section_minimum(q2, q3)
    computed.update({'bound': bound.bound, 'remark_bound': bound.remark_bound, 'margin': bound.bound - q3,
                     'cubic_min_point': x1, 'cubic_min_value': s3})
    if q3 <= bound.bound:
        return CriterionVerdict('thm2', HOLDS, NECESSARY, computed)
    return CriterionVerdict('thm2', FAILS, NECESSARY, computed, notes=['q3 above the bound: not in L-P'])


def thm3_check(q2: float, q3: float, q4: float) -> CriterionVerdict:
    """
    For 3 <= q2 < 4, q3 >= 2 and q4 >= 3: q3 <= 8/(d(4-d)) with d = min(q2, q4) guarantees a point
    x0 in [-a1/a2, 0] with f(x0) <= 0. That is the necessary condition thm1_zero_segment checks, so a
    holding verdict does not prove membership.
    """
    _check_positive(q2=q2, q3=q3, q4=q4)
    computed = {'q2': q2, 'q3': q3, 'q4': q4}
    if not 3.0 <= q2 < 4.0:
        return CriterionVerdict('thm3', INCONCLUSIVE, WITNESS_SUFFICIENT, computed, notes=['needs 3 <= q2 < 4'])
    if q4 < 3.0:
        return CriterionVerdict('thm3', INCONCLUSIVE, WITNESS_SUFFICIENT, computed, notes=['needs q4 >= 3'])
    if q3 < 2.0:
        return CriterionVerdict('thm3', INCONCLUSIVE, WITNESS_SUFFICIENT, computed, notes=['needs q3 >= 2'])
    d = min(q2, q4)
    threshold = 8.0 / (d * (4.0 - d))
    computed.update({'d': d, 'threshold': threshold, 'margin': threshold - q3,
                     'quartic_discriminant': d * d * q3 - 4.0 * d * q3 + 8.0})
    if q3 <= threshold:
        return CriterionVerdict('thm3', HOLDS, WITNESS_SUFFICIENT, computed,
                                notes=['a witness x0 exists; confirm with thm1_zero_segment, membership not implied'])
    return CriterionVerdict('thm3', FAILS, WITNESS_SUFFICIENT, computed,
                            notes=['sufficient condition not met, no conclusion'])


def tail_bound_lm2(q2: float, q3: float, q4: float, q5: float, q6: float) -> TailBound:
    """
    Bound q2 q6 / (q3^3 q4^2 q5 q6 - q3^2 q4) on |R_5(z, phi)| for |z| <= q2.
    :return: TailBound with the gate margin q3 q4 q5 q6 - q6 - 1 and the strict margin q2/(q3^2 q4) - bound
    """
    for n, value in enumerate((q2, q3, q4, q5, q6), start=2):
        if not (math.isfinite(value) and value > 1):
            raise InvalidInputError('q_' + str(n) + ' must exceed 1, got ' + str(value))
    denominator = q3 ** 3 * q4 ** 2 * q5 * q6 - q3 ** 2 * q4
    bound = q2 * q6 / denominator
    gate = q3 * q4 * q5 * q6 - q6 - 1.0
    return TailBound(bound, gate, q2 / (q3 * q3 * q4) - bound)


def _phi_quartic(q2: float, q3: float, q4: float) -> List[float]:
    return [1.0, -1.0, 1.0 / q2, -1.0 / (q2 * q2 * q3), 1.0 / (q2 ** 3 * q3 * q3 * q4)]


def rouche_gate_check(s: CoefficientSeries) -> CriterionVerdict:
    """
    Whether S_4(z, phi) dominates R_5(z, phi) on |z| = q2, so both have the same zeros in the disk.
    """
    if s.degree < 6:
        raise InvalidInputError('The tail gate needs degree >= 6, got ' + str(s.degree))
    qs = quotients_from_coeffs(s)
    q = [qs.q_at(n) for n in range(2, 7)]
    if min(q) <= 1:
        return CriterionVerdict('rouche_gate', INCONCLUSIVE, DIAGNOSTIC, {'q_min': min(q)},
                                notes=['needs q_2..q_6 > 1'])
    tail = tail_bound_lm2(*q)
    _, minimum = min_modulus_on_circle(_phi_quartic(q[0], q[1], q[2]), q[0])
    numeric = minimum - tail.bound
    computed = {'bound': tail.bound, 'gate_margin': tail.gate_margin, 'strict_margin': tail.strict_margin,
                'circle_min_s4': minimum, 'numeric_margin': numeric}
    if tail.gate_margin > 0 and numeric > 0:
        return CriterionVerdict('rouche_gate', HOLDS, DIAGNOSTIC, computed,
                                notes=['S_4 and phi have the same number of zeros in |z| < q2'])
    return CriterionVerdict('rouche_gate', FAILS, DIAGNOSTIC, computed,
                            notes=['S_4 does not dominate the tail on |z| = q2'])


def apolar_quartic(q2: float, q3: Optional[float] = None, q4: Optional[float] = None) -> ApolarQuartic:
    """
    The quartic Q(z) = z^4 + 4 b3 z^3 + 6 b2 z^2 with b3 = (q2 - 6)/2 and b2 = -q2 (1 + b3), apolar to
    S_4(z, phi). Its roots are 0, 0, q2 and 12 - 3 q2, all in |z| <= q2 when q2 >= 3.
    :param q2: q2 >= 3
    :param q3: defaults to q2
    :param q4: defaults to q2
    :return: ApolarQuartic
    """
    if not q2 >= 3.0:
        raise InvalidInputError('The apolar quartic needs q2 >= 3, got ' + str(q2))
    q3 = q2 if q3 is None else q3
    q4 = q2 if q4 is None else q4
    _check_positive(q3=q3, q4=q4)
    b3 = (q2 - 6.0) / 2.0
    b2 = -q2 * (1.0 + b3)
    q_roots = (0j, 0j, complex(q2), complex(-3.0 * (q2 - 4.0)))
    numeric = poly_roots([0.0, 0.0, 6.0 * b2, 4.0 * b3, 1.0]).roots
    s4 = _phi_quartic(q2, q3, q4)
    a = [s4[k] / comb(4, k, exact=True) for k in range(5)]
    b = [0.0, 0.0, b2, b3, 1.0]
    terms = [(-1) ** k * comb(4, k, exact=True) * a[k] * b[4 - k] for k in range(5)]
    residual = abs(math.fsum(terms)) / math.fsum(abs(t) for t in terms)
    s4_roots = poly_roots(s4).roots
    return ApolarQuartic(q2, b2, b3, q_roots, numeric, residual,
                         all(abs(z) <= q2 + EQUALITY_TOL for z in q_roots),
                         s4_roots, any(abs(z) <= q2 + DISK_TOL for z in s4_roots))


def apolar_check(q: Union[QuotientSequence, Sequence[float]]) -> CriterionVerdict:
    qs = _quotients(q)
    if len(qs.q) < 3:
        raise InvalidInputError('The apolar check needs q_2..q_4')
    q2, q3, q4 = qs.q[:3]
    if q2 < 3.0:
        return CriterionVerdict('apolar', INCONCLUSIVE, DIAGNOSTIC, {'q2': q2}, notes=['needs q2 >= 3'])
    quartic = apolar_quartic(q2, q3, q4)
    nearest = min(abs(z) for z in quartic.s4_roots)
    computed = {'q2': q2, 'b2': quartic.b2, 'b3': quartic.b3, 'apolarity_residual': quartic.apolarity_residual,
                'nearest_s4_root': nearest, 'disk_margin': q2 + DISK_TOL - nearest,
                'residual_margin': APOLAR_RESIDUAL_TOL - quartic.apolarity_residual}
    flags = {'roots_in_disk': quartic.roots_in_disk, 's4_root_in_disk': quartic.s4_root_in_disk}
    if quartic.apolarity_residual <= APOLAR_RESIDUAL_TOL and quartic.roots_in_disk and quartic.s4_root_in_disk:
        return CriterionVerdict('apolar', HOLDS, DIAGNOSTIC, computed, flags=flags,
                                notes=['S_4 has a zero in |z| <= q2'])
    return CriterionVerdict('apolar', FAILS, DIAGNOSTIC, computed, flags=flags)


def truncation_roots(s: CoefficientSeries, degree: int = DEFAULT_ROOT_DEGREE) -> RootReport:
    """
    Roots of the normalized truncation, cut before coefficients fall under 1e-290.
    """
    coeffs = normalize(s).coeffs[:min(degree, s.degree) + 1]
    n = len(coeffs) - 1
    while n > 1 and coeffs[n] < _MIN_COEFF:
        n -= 1
    return poly_roots(coeffs[:n + 1])


def truncation_roots_check(s: CoefficientSeries, degree: int = DEFAULT_ROOT_DEGREE) -> CriterionVerdict:
    report = truncation_roots(s, degree)
    worst = max(abs(z.imag) / max(1.0, abs(z)) for z in report.roots)
    computed = {'degree': float(report.degree), 'max_relative_imag': worst, 'real_margin': report.im_tol - worst,
                'min_separation': report.min_separation}
    flags = {'simple': report.simple}
    notes = ['verdict ' + report.verdict]
    if report.verdict == ALL_REAL_NEGATIVE:
        return CriterionVerdict('truncation_roots', HOLDS, EVIDENCE, computed, flags=flags, notes=notes)
    if report.verdict == COMPLEX_PRESENT:
        return CriterionVerdict('truncation_roots', FAILS, EVIDENCE, computed, flags=flags, notes=notes)
    return CriterionVerdict('truncation_roots', INCONCLUSIVE, EVIDENCE, computed, flags=flags, notes=notes)


def full_report(s: CoefficientSeries, grid: int = _SEGMENT_GRID, root_degree: int = DEFAULT_ROOT_DEGREE,
                q_inf: Optional[Tuple[float, float]] = None) -> List[CriterionVerdict]:
    """
    Every criterion on one series, in a fixed order. A criterion that cannot run is reported
    inconclusive with the reason in its notes.
    :param s: series of degree >= 6
    :param grid: scan grid for the zero-segment check
    :param root_degree: truncation degree for the root evidence
    :param q_inf: (low, high) bracket for the monotone classifier
    :return: list of CriterionVerdict
    """
    if s.degree < 6:
        raise InvalidInputError('A full report needs degree >= 6, got ' + str(s.degree))
    qs = quotients_from_coeffs(s)
    checks = [
        ('newton', NECESSARY, lambda: newton_check(qs)),
        ('lemma_q2q3', NECESSARY, lambda: lemma_q2q3_check(qs.q_at(2), qs.q_at(3))),
        ('hutchinson', SUFFICIENT, lambda: hutchinson_check(qs)),
        ('monotone', CLASSIFIER, lambda: monotone_classify(qs, q_inf=q_inf)),
        ('thm1_zero_segment', NECESSARY, lambda: thm1_zero_segment_check(s, grid)),
        ('thm2', NECESSARY, lambda: thm2_check(qs.q_at(2), qs.q_at(3))),
        ('thm3', WITNESS_SUFFICIENT, lambda: thm3_check(qs.q_at(2), qs.q_at(3), qs.q_at(4))),
        ('rouche_gate', DIAGNOSTIC, lambda: rouche_gate_check(s)),
        ('apolar', DIAGNOSTIC, lambda: apolar_check(qs)),
        ('truncation_roots', EVIDENCE, lambda: truncation_roots_check(s, root_degree)),
    ]
    verdicts = []
    for name, role, run in checks:
        try:
            verdicts.append(run())
        except (InvalidInputError, NumericalRefusalError) as e:
            logging.warning('Criterion ' + name + ' could not run: ' + str(e))
            verdicts.append(CriterionVerdict(name, INCONCLUSIVE, role, notes=['error: ' + str(e)]))
    by_name = {v.criterion: i for i, v in enumerate(verdicts)}
    thm3 = verdicts[by_name['thm3']]
    if thm3.status == HOLDS:
        agrees = verdicts[by_name['thm1_zero_segment']].status == HOLDS
        if not agrees:
            logging.warning('thm3 holds but the zero-segment scan found no witness for ' + str(s))
        verdicts[by_name['thm3']] = thm3.amended({'thm1_agrees': agrees})
    return verdicts

"""
Seeded randomized checks of the circle-minimum, tail, apolar, bound-chain and Rouche lemmas.
"""
import logging
import math
from typing import Dict, Iterable, List, NamedTuple, Optional, Tuple

import numpy as np
from numpy.random import PCG64, Generator, SeedSequence

from .criteria import APOLAR_RESIDUAL_TOL, DISK_TOL, apolar_quartic, tail_bound_lm2, thm2_bound
from .roots import count_zeros_in_disk, min_modulus_on_circle
from .series import InvalidInputError, NumericalRefusalError, coeffs_from_quotients, evaluate_points

RNG_ALGORITHM = 'PCG64'
DEFAULT_SEED = 42
CIRCLE_TRIALS = 1000
TAIL_TRIALS = 500
APOLAR_PER_Q2 = 20
REMARK_TRIALS = 1000
ROUCHE_TRIALS = 100
_CIRCLE_TOL = 1e-10
_TAIL_TOL = 1e-10
_REMARK_TOL = 1e-12
_TAIL_DEGREE = 60
_TAIL_SAMPLES = 2048
_ROUCHE_DEGREE = 40
_APOLAR_Q2 = tuple(round(3.0 + 0.1 * k, 10) for k in range(11))


class SuiteResult(NamedTuple):
    name: str
    trials: int
    passed: int
    failed: int
    domain_violations: int
    worst_margin: float
    counterexample: Optional[Dict[str, float]]
    extra: Dict[str, float]

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_dict(self) -> Dict:
        return {
            'name': self.name,
            'trials': self.trials,
            'passed': self.passed,
            'failed': self.failed,
            'domain_violations': self.domain_violations,
            'worst_margin': self.worst_margin if math.isfinite(self.worst_margin) else None,
            'counterexample': self.counterexample,
            'extra': dict(self.extra),
        }


class _Tally:
    """
    Running pass/fail count. The counterexample kept is the one with the worst margin.
    """

    def __init__(self, name: str):
        self._name = name
        self._passed = 0
        self._failed = 0
        self._domain = 0
        self._worst = math.inf
        self._counterexample = None

    def record(self, margin: float, params: Dict[str, float], tol: float = 0.0):
        if margin < self._worst:
            self._worst = margin
            if margin < -tol:
                self._counterexample = dict(params, margin=margin)
        if margin >= -tol:
            self._passed += 1
        else:
            self._failed += 1
            logging.warning('Suite ' + self._name + ' failed at ' + str(params) + ' with margin ' + repr(margin))

    def domain_violation(self, params: Dict[str, float]):
        self._domain += 1
        logging.debug('Suite ' + self._name + ' skipped out-of-domain case ' + str(params))

    def result(self, extra: Optional[Dict[str, float]] = None) -> SuiteResult:
        trials = self._passed + self._failed + self._domain
        return SuiteResult(self._name, trials, self._passed, self._failed, self._domain, self._worst,
                           self._counterexample, dict(extra or {}))


def _circle_case(tally: _Tally, a: float, b: float, c: float):
    params = {'a': a, 'b': b, 'c': c}
    if not (3.0 <= a < 4.0 and b >= a and c >= 4.0 / 3.0):
        tally.domain_violation(params)
        return
    coeffs = [1.0, -1.0, 1.0 / a, -1.0 / (a * a * b), 1.0 / (a ** 3 * b * b * c)]
    _, value = min_modulus_on_circle(coeffs, a)
    tally.record(value - a / (b * b * c), params, _CIRCLE_TOL)


def circle_minimum_suite(rng: Generator, trials: int = CIRCLE_TRIALS,
                         extra_cases: Iterable[Tuple[float, float, float]] = ()) -> SuiteResult:
    """
    min |1 - z + z^2/a - z^3/(a^2 b) + z^4/(a^3 b^2 c)| on |z| = a is at least a/(b^2 c)
    for 3 <= a < 4, b >= a, c >= 4/3.
    """
    tally = _Tally('circle_minimum')
    for _ in range(trials):
        a = rng.uniform(3.0, 4.0)
        b = a + rng.uniform(0.0, 4.0)
        c = 4.0 / 3.0 + rng.uniform(0.0, 4.0)
        _circle_case(tally, float(a), float(b), float(c))
    for a, b, c in extra_cases:
        _circle_case(tally, float(a), float(b), float(c))
    return tally.result()


def tail_bound_suite(rng: Generator, trials: int = TAIL_TRIALS) -> SuiteResult:
    """
    max |R_5(z, phi)| on |z| = q2 stays under the closed-form tail bound.
    """
    tally = _Tally('tail_bound')
    theta = 2 * math.pi * np.arange(_TAIL_SAMPLES) / _TAIL_SAMPLES
    min_gate, min_strict = math.inf, math.inf
    for _ in range(trials):
        q = rng.uniform(1.5, 6.0, size=_TAIL_DEGREE - 1)
        s = coeffs_from_quotients(1.0, 1.0, q)
        q2 = float(q[0])
        values, _ = evaluate_points(s, -q2 * np.exp(1j * theta), start=5)
        numeric = float(np.max(np.abs(values)))
        bound = tail_bound_lm2(*(float(v) for v in q[:5]))
        min_gate = min(min_gate, bound.gate_margin)
        min_strict = min(min_strict, bound.strict_margin)
        tally.record(bound.bound - numeric, {'q2': q2, 'q3': float(q[1]), 'q4': float(q[2]),
                                             'q5': float(q[3]), 'q6': float(q[4])}, _TAIL_TOL)
    return tally.result({'min_gate_margin': min_gate, 'min_strict_margin': min_strict})


def apolar_suite(rng: Generator, per_q2: int = APOLAR_PER_Q2) -> SuiteResult:
    """
    For q2 in 3, 3.1, ..., 4 and random q3, q4: the apolar quartic has its roots in |z| <= q2 and
    S_4(z, phi) has a zero there.
    """
    tally = _Tally('apolar')
    for q2 in _APOLAR_Q2:
        for _ in range(per_q2):
            q3, q4 = (float(v) for v in rng.uniform(1.0, 6.0, size=2))
            quartic = apolar_quartic(q2, q3, q4)
            nearest = min(abs(z) for z in quartic.s4_roots)
            margin = min(APOLAR_RESIDUAL_TOL - quartic.apolarity_residual, q2 + DISK_TOL - nearest)
            if not quartic.roots_in_disk:
                margin = min(margin, -1.0)
            tally.record(margin, {'q2': q2, 'q3': q3, 'q4': q4})
    return tally.result()


def remark_chain_suite(rng: Generator, trials: int = REMARK_TRIALS) -> SuiteResult:
    """
    3 <= bound(q2) <= 3/(4 - q2) on [3, 4), with equality at q2 = 3.
    """
    tally = _Tally('remark_chain')
    samples = [3.0] + [float(v) for v in rng.uniform(3.0, 4.0, size=max(trials - 1, 0))]
    for q2 in samples:
        bound = thm2_bound(q2)
        margin = min(bound.bound - 3.0, bound.remark_bound - bound.bound)
        if q2 == 3.0:
            margin = min(margin, -abs(bound.bound - 3.0))
        tally.record(margin, {'q2': q2}, _REMARK_TOL)
    return tally.result()


def rouche_consistency_suite(rng: Generator, trials: int = ROUCHE_TRIALS) -> SuiteResult:
    """
    Where the strict tail gate holds, phi and S_4(z, phi) have the same number of zeros in |z| < q2.
    """
    tally = _Tally('rouche_consistency')
    refused = 0
    for _ in range(trials):
        q2 = float(rng.uniform(3.0, 4.0))
        q3 = float(rng.uniform(q2, 6.0))
        q4 = float(rng.uniform(4.0 / 3.0, 6.0))
        rest = [float(v) for v in rng.uniform(1.5, 6.0, size=_ROUCHE_DEGREE - 4)]
        q = [q2, q3, q4] + rest
        params = {'q2': q2, 'q3': q3, 'q4': q4, 'q5': rest[0], 'q6': rest[1]}
        bound = tail_bound_lm2(*q[:5])
        if bound.gate_margin <= 0 or bound.strict_margin <= 0:
            tally.domain_violation(params)
            continue
        s = coeffs_from_quotients(1.0, 1.0, q)
        try:
            series_count = count_zeros_in_disk(s, q2).count
            quartic_count = count_zeros_in_disk(list(s.coeffs[:5]), q2).count
        except NumericalRefusalError as e:
            refused += 1
            logging.warning('Contour refused at ' + str(params) + ': ' + str(e))
            tally.domain_violation(params)
            continue
        tally.record(0.0 if series_count == quartic_count else -1.0, dict(params, series_count=series_count,
                                                                        quartic_count=quartic_count))
    return tally.result({'contour_refusals': float(refused)})


def run_all(seed: int = DEFAULT_SEED, trials: Optional[int] = None) -> List[SuiteResult]:
    """
    Run every suite, each on its own PCG64 stream spawned from the seed.
    :param seed: master seed
    :param trials: overrides every default trial count; apolar uses trials // 11 draws per q2
    :return: results in a fixed order
    """
    if trials is not None and trials < 1:
        raise InvalidInputError('trials must be >= 1, got ' + str(trials))
    streams = [Generator(PCG64(child)) for child in SeedSequence(seed).spawn(5)]
    return [
        circle_minimum_suite(streams[0], CIRCLE_TRIALS if trials is None else trials),
        tail_bound_suite(streams[1], TAIL_TRIALS if trials is None else trials),
        apolar_suite(streams[2], APOLAR_PER_Q2 if trials is None else max(1, trials // len(_APOLAR_Q2))),
        remark_chain_suite(streams[3], REMARK_TRIALS if trials is None else trials),
        rouche_consistency_suite(streams[4], ROUCHE_TRIALS if trials is None else trials),
    ]

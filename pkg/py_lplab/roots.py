"""
Root finding for truncations, real-rootedness verdicts, zero counts in disks, minimum modulus on
circles and sign scans on real segments.
"""
import logging
import math
from typing import Callable, Dict, List, NamedTuple, Optional, Sequence, Tuple, Union

import numpy as np
from numpy.polynomial import polynomial as npoly
from scipy import linalg, optimize

from .series import (CoefficientSeries, InvalidInputError, NumericalRefusalError, evaluate_points,
                     truncation_bound)

ALL_REAL_NEGATIVE = 'all-real-negative'
ALL_REAL = 'all-real'
MIXED = 'mixed'
COMPLEX_PRESENT = 'complex-present'
UNCERTAIN = 'uncertain'
REAL_VERDICTS = (ALL_REAL_NEGATIVE, ALL_REAL, MIXED)

CLOSED_FORM = 'closed-form'
ABERTH = 'aberth'
COMPANION = 'companion'

DEFAULT_IM_TOL = 1e-8
RESIDUAL_TOL = 1e-8  # accepted backward error |P(z)| / sum |c_k||z|^k of a reported root
SEPARATION_TOL = 1e-6  # relative distance under which two roots may be one multiple root
_STEP_TOL = 1e-13  # relative Aberth correction counted as converged
_MAX_SWEEPS = 200
_START_ANGLE = 0.4  # keeps start points off the real axis
_EPS = float(np.finfo(float).eps)

_CIRCLE_GRID = 4096
_SEGMENT_GRID = 1024
_MAX_REFINE = 4  # grid-local minima refined per scan, lowest first
_XATOL = 1e-12
_CONTOUR_GUARD = 10.0  # min |f| on a contour must exceed this multiple of the error bound
_MIN_SAMPLES = 256
_MAX_SAMPLES = 1 << 18


class ContourRefusedError(NumericalRefusalError):
    """Raised when a zero sits too close to the contour for the winding number to be trusted."""


def _as_coefficients(coeffs, min_degree: int = 1) -> np.ndarray:
    c = np.asarray(coeffs)
    if c.ndim != 1 or c.size < min_degree + 1:
        raise InvalidInputError('Polynomial needs degree >= ' + str(min_degree) + ', got ' + str(max(c.size - 1, 0)))
    c = c.astype(complex) if np.iscomplexobj(c) else c.astype(float)
    if not np.all(np.isfinite(c)):
        raise InvalidInputError('Polynomial coefficients must be finite')
    if c[-1] == 0:
        raise InvalidInputError('Leading coefficient c_' + str(c.size - 1) + ' must be nonzero')
    return c


def _horner(c: np.ndarray, z: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    value = np.full(z.shape, c[-1], dtype=complex)
    slope = np.zeros(z.shape, dtype=complex)
    for ck in c[-2::-1]:
        slope = slope * z + value
        value = value * z + ck
    return value, slope


def _horner_abs(c: np.ndarray, r: np.ndarray) -> np.ndarray:
    a = np.abs(c)
    total = np.full(r.shape, a[-1], dtype=float)
    for ak in a[-2::-1]:
        total = total * r + ak
    return total


def _newton_ratio(c: np.ndarray, z: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """
    P(z)/P'(z) and the backward error at every point. Points outside the unit disk go through the
    reversed polynomial, P/P' = z / (N - w R'(w)/R(w)) with w = 1/z.
    """
    n = c.size - 1
    ratio = np.empty(z.shape, dtype=complex)
    backward = np.empty(z.shape, dtype=float)
    inner = np.abs(z) <= 1.0
    with np.errstate(divide='ignore', invalid='ignore', over='ignore'):
        if inner.any():
            zi = z[inner]
            value, slope = _horner(c, zi)
            ratio[inner] = value / slope
            backward[inner] = _relative(value, _horner_abs(c, np.abs(zi)))
        outer = ~inner
        if outer.any():
            zo = z[outer]
            w = 1.0 / zo
            value, slope = _horner(c[::-1], w)
            ratio[outer] = zo / (n - w * slope / value)
            backward[outer] = _relative(value, _horner_abs(c[::-1], np.abs(w)))
    return ratio, backward


def _relative(value: np.ndarray, scale: np.ndarray) -> np.ndarray:
    modulus = np.abs(value)
    out = np.zeros(modulus.shape)
    np.divide(modulus, scale, out=out, where=scale > 0)
    return out


def _upper_hull(logs: np.ndarray) -> List[int]:
    hull = []
    for k in np.flatnonzero(np.isfinite(logs)):
        while len(hull) >= 2:
            k1, k2 = hull[-2], hull[-1]
            if (logs[k2] - logs[k1]) * (k - k1) <= (logs[k] - logs[k1]) * (k2 - k1):
                hull.pop()
            else:
                break
        hull.append(int(k))
    return hull


def _start_points(c: np.ndarray) -> np.ndarray:
    """
    Roots of unity on the radii of the Newton polygon of (k, log|c_k|).
    """
    n = c.size - 1
    with np.errstate(divide='ignore'):
        logs = np.log(np.abs(c))
    hull = _upper_hull(logs)
    points = []
    for i in range(len(hull) - 1):
        lo, hi = hull[i], hull[i + 1]
        count = hi - lo
        radius = math.exp((logs[lo] - logs[hi]) / count)
        angles = 2 * math.pi * np.arange(count) / count + 2 * math.pi * lo / n + _START_ANGLE
        points.append(radius * np.exp(1j * angles))
    return np.concatenate(points)


def _aberth(c: np.ndarray) -> Tuple[np.ndarray, int, bool]:
    z = _start_points(c)
    n = z.size
    for sweep in range(1, _MAX_SWEEPS + 1):
        ratio, backward = _newton_ratio(c, z)
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        with np.errstate(divide='ignore', invalid='ignore', over='ignore'):
            inverse = 1.0 / diff
            np.fill_diagonal(inverse, 0.0)
            step = ratio / (1.0 - ratio * inverse.sum(axis=1))
        bad = ~np.isfinite(step)
        step[bad] = 0.0
        z = z - step
        small = np.abs(step) <= _STEP_TOL * np.abs(z)
        settled = backward <= 4.0 * n * _EPS
        if not bad.any() and np.all(small | settled):
            return z, sweep, True
    return z, _MAX_SWEEPS, False


def _companion_roots(c: np.ndarray) -> np.ndarray:
    return linalg.eigvals(linalg.companion(c[::-1]))


def _quadratic(c0: float, c1: float, c2: float) -> List[complex]:
    disc = c1 * c1 - 4.0 * c2 * c0
    if disc >= 0:
        q = -0.5 * (c1 + math.copysign(math.sqrt(disc), c1))
        return [complex(q / c2), complex(c0 / q)]
    real = -c1 / (2.0 * c2)
    imag = math.sqrt(-disc) / (2.0 * abs(c2))
    return [complex(real, -imag), complex(real, imag)]


class RootReport:
    """
    Roots of a polynomial with per-root backward errors and the real-rootedness verdict.
    """

    def __init__(self, coeffs: np.ndarray, roots: Sequence[complex], method: str, sweeps: int = 0,
                 im_tol: float = DEFAULT_IM_TOL):
        z = np.asarray(roots, dtype=complex)
        _, backward = _newton_ratio(coeffs, z)
        self._degree = int(coeffs.size - 1)
        self._roots = tuple(complex(v) for v in z)
        self._residuals = tuple(float(v) for v in backward)
        self._method = method
        self._sweeps = sweeps
        self._im_tol = im_tol
        self._scale = float(np.max(np.abs(z))) if z.size else 0.0
        self._min_separation, self._simple = RootReport._separation(z)
        self._verdict = self._classify()

    @staticmethod
    def _separation(z: np.ndarray) -> Tuple[Optional[float], bool]:
        if z.size < 2:
            return None, True
        diff = np.abs(z[:, None] - z[None, :])
        np.fill_diagonal(diff, np.inf)
        size = np.maximum(1.0, np.maximum(np.abs(z)[:, None], np.abs(z)[None, :]))
        return float(diff.min()), bool(np.all(diff > SEPARATION_TOL * size))

    def _classify(self) -> str:
        if not all(math.isfinite(r) and r <= RESIDUAL_TOL for r in self._residuals):
            return UNCERTAIN
        if not all(self.is_real(z) for z in self._roots):
            return COMPLEX_PRESENT
        if all(z.real < 0 for z in self._roots):
            return ALL_REAL_NEGATIVE
        if all(z.real >= 0 for z in self._roots):
            return ALL_REAL
        return MIXED

    def is_real(self, z: complex) -> bool:
        return abs(z.imag) <= self._im_tol * max(1.0, abs(z))

    @property
    def roots(self) -> Tuple[complex, ...]:
        """
        :return: roots sorted by (real, imag)
        """
        return self._roots

    @property
    def residuals(self) -> Tuple[float, ...]:
        return self._residuals

    @property
    def verdict(self) -> str:
        return self._verdict

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def im_tol(self) -> float:
        return self._im_tol

    @property
    def scale(self) -> float:
        return self._scale

    @property
    def min_separation(self) -> Optional[float]:
        return self._min_separation

    @property
    def simple(self) -> bool:
        return self._simple

    @property
    def method(self) -> str:
        return self._method

    @property
    def sweeps(self) -> int:
        return self._sweeps

    def to_dict(self) -> Dict:
        return {
            'degree': self._degree,
            'verdict': self._verdict,
            'method': self._method,
            'sweeps': self._sweeps,
            'im_tol': self._im_tol,
            'scale': self._scale,
            'min_separation': self._min_separation,
            'simple': self._simple,
            'roots': [[z.real, z.imag] for z in self._roots],
            'residuals': list(self._residuals),
        }

    def __str__(self):
        return "<RootReport degree={} verdict={} method={}>".format(self._degree, self._verdict, self._method)

    def __repr__(self):
        return self.__str__()


class RealRootedness(NamedTuple):
    verdict: str
    real: bool
    simple: bool
    min_separation: Optional[float]
    report: RootReport


class DiskCount(NamedTuple):
    radius: float
    count: int
    winding_samples: int
    min_modulus_on_contour: float


class SegmentScan(NamedTuple):
    found: bool
    witness: Optional[float]
    witness_value: Optional[float]
    deepest_point: float
    deepest_value: float
    grid: int
    error_bound: float
    resolution_limited: bool


def poly_roots(coeffs, im_tol: float = DEFAULT_IM_TOL) -> RootReport:
    """
    All roots of c_0 + c_1 z + ... + c_N z^N.
    :param coeffs: ascending real or complex coefficients, c_N != 0, N >= 1
    :param im_tol: relative imaginary tolerance for real roots
    :return: RootReport
    """
    c = _as_coefficients(coeffs)
    zeros = 0
    while c[zeros] == 0:
        zeros += 1
    core = c[zeros:]
    n = core.size - 1
    method, sweeps = CLOSED_FORM, 0
    if n == 0:
        found = []
    elif n == 1:
        found = [complex(-core[0] / core[1])]
    elif n == 2 and not np.iscomplexobj(core):
        found = _quadratic(float(core[0]), float(core[1]), float(core[2]))
    else:
        found, sweeps, converged = _aberth(core)
        method = ABERTH
        logging.debug('Aberth on degree ' + str(n) + ': ' + str(sweeps) + ' sweeps, converged=' + str(converged))
        if not converged:
            logging.warning('Aberth did not settle in ' + str(_MAX_SWEEPS) + ' sweeps (degree ' + str(n)
                            + '), falling back to companion eigenvalues')
            found = _companion_roots(core)
            method = COMPANION
    roots = np.array([0j] * zeros + list(found), dtype=complex)
    roots = roots[np.lexsort((roots.imag, roots.real))]
    return RootReport(c, roots, method, sweeps, im_tol)


def is_real_rooted(coeffs, im_tol: float = DEFAULT_IM_TOL) -> RealRootedness:
    report = poly_roots(coeffs, im_tol)
    return RealRootedness(report.verdict, report.verdict in REAL_VERDICTS, report.simple,
                          report.min_separation, report)


def _contour_values(target, radius: float, eval_degree: Optional[int]):
    """
    :return: (evaluate(theta) -> (values, magnitudes), degree, truncation tail)
    """
    if isinstance(target, CoefficientSeries):
        stop = target.degree if eval_degree is None else eval_degree
        if not 1 <= stop <= target.degree:
            raise InvalidInputError('eval_degree must be in [1, ' + str(target.degree) + '], got ' + str(stop))
        tail = truncation_bound(target, radius, stop)
        return (lambda theta: evaluate_points(target, radius * np.exp(1j * theta), stop=stop)), stop, tail
    c = np.asarray(target)
    if c.ndim != 1 or c.size < 1 or not np.all(np.isfinite(c)) or not np.any(c != 0):
        raise InvalidInputError('Need a nonzero finite coefficient list')
    c = c.astype(complex) if np.iscomplexobj(c) else c.astype(float)
    scale = float(_horner_abs(c, np.array([radius]))[0])

    def values(theta):
        z = radius * np.exp(1j * theta)
        return npoly.polyval(z, c), np.full(theta.shape, scale)
    return values, c.size - 1, 0.0


def count_zeros_in_disk(target: Union[CoefficientSeries, Sequence[float]], radius: float,
                        eval_degree: Optional[int] = None) -> DiskCount:
    """
    Zeros in |z| < radius by the argument principle, with adaptive sampling of the circle.
    :param target: series (its truncation at eval_degree plus a certified tail) or coefficient list
    :param radius: circle radius, > 0
    :param eval_degree: truncation used for series input, defaults to the degree
    :return: DiskCount
    """
    radius = float(radius)
    if not (math.isfinite(radius) and radius > 0):
        raise InvalidInputError('Radius must be positive, got ' + str(radius))
    values, degree, tail = _contour_values(target, radius, eval_degree)
    samples = max(_MIN_SAMPLES, 8 * degree)
    while True:
        theta = 2 * math.pi * np.arange(samples) / samples
        f, magnitude = values(theta)
        bound = 4.0 * (degree + 1) * _EPS * float(np.max(magnitude)) + tail
        modulus = np.abs(f)
        smallest = float(np.min(modulus))
        if not smallest > _CONTOUR_GUARD * bound:
            raise ContourRefusedError('Zero too close to |z| = ' + repr(radius) + ': min |f| = ' + repr(smallest)
                                      + ' against error bound ' + repr(bound))
        steps = np.diff(np.unwrap(np.angle(np.append(f, f[0]))))
        if np.max(np.abs(steps)) < math.pi / 2:
            break
        samples *= 2
        if samples > _MAX_SAMPLES:
            raise ContourRefusedError('Phase on |z| = ' + repr(radius) + ' not resolved with '
                                      + str(_MAX_SAMPLES) + ' samples')
        logging.debug('Refining contour |z| = ' + repr(radius) + ' to ' + str(samples) + ' samples')
    count = int(round(float(np.sum(steps)) / (2 * math.pi)))
    return DiskCount(radius, count, samples, smallest)


def _local_minima(values: np.ndarray, cyclic: bool) -> np.ndarray:
    left = np.roll(values, 1)
    right = np.roll(values, -1)
    if not cyclic:
        left[0] = np.inf
        right[-1] = np.inf
    index = np.flatnonzero((values <= left) & (values <= right))
    return index[np.argsort(values[index], kind='stable')][:_MAX_REFINE]


def min_modulus_on_circle(coeffs, radius: float, grid: int = _CIRCLE_GRID) -> Tuple[float, float]:
    """
    min over theta of |P(radius e^(i theta))|: grid sample, then bounded Brent refinement around the
    lowest grid-local minima.
    :param coeffs: ascending coefficients
    :param radius: circle radius
    :param grid: number of samples
    :return: (theta_star, value). theta_star lies in [0, pi] for real coefficients.
    """
    c = _as_coefficients(coeffs)
    radius = float(radius)
    if not radius > 0:
        raise InvalidInputError('Radius must be positive, got ' + str(radius))
    step = 2 * math.pi / grid
    theta = step * np.arange(grid)
    values = np.abs(npoly.polyval(radius * np.exp(1j * theta), c))

    def modulus(t):
        return abs(npoly.polyval(radius * complex(math.cos(t), math.sin(t)), c))

    best = int(np.argmin(values))
    best_theta, best_value = float(theta[best]), float(values[best])
    for i in _local_minima(values, cyclic=True):
        result = optimize.minimize_scalar(modulus, bounds=(theta[i] - step, theta[i] + step), method='bounded',
                                          options={'xatol': _XATOL})
        if result.fun < best_value:
            best_theta, best_value = float(result.x), float(result.fun)
    best_theta %= 2 * math.pi
    if not np.iscomplexobj(c) and best_theta > math.pi:
        best_theta = 2 * math.pi - best_theta
    return best_theta, best_value


def _segment_evaluator(target, lo: float, hi: float, section: Optional[int]) -> Tuple[Callable, float]:
    radius = max(abs(lo), abs(hi))
    if isinstance(target, CoefficientSeries):
        stop = target.degree if section is None else section
        if not 1 <= stop <= target.degree:
            raise InvalidInputError('Section must be in [1, ' + str(target.degree) + '], got ' + str(stop))
        tail = 0.0 if section is not None else truncation_bound(target, radius, stop)
        _, scale = evaluate_points(target, np.array([radius]), stop=stop)
        bound = 4.0 * (stop + 1) * _EPS * float(scale[0]) + tail
        return (lambda x: evaluate_points(target, x, stop=stop)[0]), bound
    c = _as_coefficients(target)
    if np.iscomplexobj(c):
        raise InvalidInputError('Sign scans need real coefficients')
    if section is not None:
        raise InvalidInputError('section applies to series targets only')
    bound = 4.0 * c.size * _EPS * float(_horner_abs(c, np.array([radius]))[0])
    return (lambda x: npoly.polyval(x, c)), bound


def sign_scan_segment(target, lo: float, hi: float, grid: int = _SEGMENT_GRID,
                      section: Optional[int] = None) -> SegmentScan:
    """
    Look for a point of [lo, hi] where the real function is certifiably <= 0, that is <= -error_bound.
    Grid-local minima are refined with bounded minimization so narrow dips between grid points are
    still seen; a dip counts once its refined minimum clears the error bound.
    :param target: series (certified tail) or real coefficient list
    :param lo: left end
    :param hi: right end, > lo
    :param grid: number of grid intervals
    :param section: scan the exact partial sum S_section of a series instead
    :return: SegmentScan. The witness is the refined minimum of the certified dip nearest the end
        closest to the origin.
    """
    lo, hi = float(lo), float(hi)
    if not lo < hi:
        raise InvalidInputError('Need lo < hi, got [' + str(lo) + ', ' + str(hi) + ']')
    if grid < 2:
        raise InvalidInputError('Grid must have at least 2 intervals, got ' + str(grid))
    f, bound = _segment_evaluator(target, lo, hi, section)
    start, end = (hi, lo) if abs(hi) <= abs(lo) else (lo, hi)
    xs = np.linspace(start, end, grid + 1)
    values = np.real(f(xs))

    def scalar(x):
        return float(np.real(f(np.array([x]))[0]))

    deepest = int(np.argmin(values))
    deepest_point, deepest_value = float(xs[deepest]), float(values[deepest])
    dips = []
    for i in _local_minima(values, cyclic=False):
        left, right = sorted((xs[max(i - 1, 0)], xs[min(i + 1, grid)]))
        result = optimize.minimize_scalar(scalar, bounds=(left, right), method='bounded', options={'xatol': _XATOL})
        point, value = float(xs[i]), float(values[i])
        if result.fun < value:
            point, value = float(result.x), float(result.fun)
        if value < deepest_value:
            deepest_point, deepest_value = point, value
        if value <= -bound:
            dips.append((point, value))
    certified = np.flatnonzero(values <= -bound)
    if not dips and certified.size:
        # more certified runs than refined minima
        first = int(certified[0])
        dips.append((float(xs[first]), float(values[first])))

    witness, witness_value = None, None
    if dips:
        witness, witness_value = min(dips, key=lambda d: abs(d[0] - start))
    logging.debug('Scan of [' + repr(lo) + ', ' + repr(hi) + ']: witness=' + repr(witness)
                  + ' deepest=' + repr(deepest_value) + ' bound=' + repr(bound))
    found = witness is not None
    return SegmentScan(found, witness, witness_value, deepest_point, deepest_value, grid, bound, not found)

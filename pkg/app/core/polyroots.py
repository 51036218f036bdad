"""Polynomial roots and the geometric queries built on them.

all_roots is a simultaneous Aberth-Ehrlich iteration followed by Newton
polishing. critical_data and fiber reduce to it through the rational form
P/Q of a Blaschke product.
"""
import cmath
import logging
import math

import numpy as np
from numpy.polynomial import polynomial as npoly

from core.blaschke import evaluate_array, to_rational
from core.conf import get_tolerances
from core.exceptions import (DomainError, FiberError, IllConditionedError,
                             PreconditionError, RootFindingError)
from core.models import CriticalData

logger = logging.getLogger(__name__)

TRIM = 1e-14
BOUNDARY_BAND = 1e-10
OUTSIDE_SLACK = 1e-9
EPS = np.finfo(float).eps


def point_order_key(z):
    """Argument, then modulus, then real part; -pi is folded onto pi."""
    angle = cmath.phase(z)
    if angle <= -math.pi + 1e-12:
        angle = math.pi
    return (round(angle, 10), round(abs(z), 10), round(z.real, 10))


def sort_points(points):
    return tuple(sorted((complex(p) for p in points), key=point_order_key))


def _trim(coeffs):
    coeffs = np.asarray(coeffs, dtype=complex)
    end = len(coeffs)
    while end > 1 and abs(coeffs[end - 1]) < TRIM:
        end -= 1
    return coeffs[:end]


def _backward_error(coeffs, z):
    magnitudes = npoly.polyval(np.abs(z), np.abs(coeffs))
    with np.errstate(divide='ignore', invalid='ignore'):
        error = np.abs(npoly.polyval(z, coeffs)) / magnitudes
    return np.where(magnitudes > 0, error, 0.0)


def _aberth(coeffs, iterations):
    degree = len(coeffs) - 1
    derivative = npoly.polyder(coeffs)
    radius = (abs(coeffs[0]) / abs(coeffs[-1])) ** (1.0 / degree)
    z = radius * np.exp(1j * (2 * np.pi * np.arange(degree) / degree + 0.4))
    done = np.zeros(degree, dtype=bool)

    for _ in range(iterations):
        p = npoly.polyval(z, coeffs)
        dp = npoly.polyval(z, derivative)
        gaps = z[:, None] - z[None, :]
        np.fill_diagonal(gaps, np.inf)
        with np.errstate(divide='ignore', invalid='ignore'):
            repulsion = np.sum(1.0 / gaps, axis=1)
            step = p / (dp - p * repulsion)
        stuck = ~np.isfinite(step)
        step[stuck] = 0.0
        step[done] = 0.0
        z = z - step
        z[stuck] *= 1.0 + 1e-7j

        small = np.abs(step) <= 4 * EPS * np.maximum(1.0, np.abs(z))
        exact = _backward_error(coeffs, z) <= 8 * EPS * degree
        done |= (small | exact) & ~stuck
        if done.all():
            return z, True
    return z, False


def _newton_polish(coeffs, z, steps=3):
    derivative = npoly.polyder(coeffs)
    error = _backward_error(coeffs, z)
    for _ in range(steps):
        dp = npoly.polyval(z, derivative)
        with np.errstate(divide='ignore', invalid='ignore'):
            candidate = z - npoly.polyval(z, coeffs) / dp
        finite = np.isfinite(candidate)
        candidate_error = np.where(
            finite, _backward_error(coeffs, np.where(finite, candidate, z)),
            np.inf
        )
        better = candidate_error < error
        z = np.where(better, candidate, z)
        error = np.where(better, candidate_error, error)
    return z


def all_roots(poly, tol=None, iterations=None):
    """All roots of the polynomial with ascending coefficients ``poly``.

    Trailing coefficients below 1e-14 are trimmed; exact zero roots are
    deflated before the iteration.
    """
    tol = get_tolerances(tol)
    iterations = tol.root_iterations if iterations is None else iterations
    coeffs = _trim(poly)
    if not np.all(np.isfinite(coeffs)):
        raise PreconditionError('polynomial coefficients must be finite')
    if abs(coeffs[-1]) < TRIM:
        raise PreconditionError('the zero polynomial has no roots')

    leading_zeros = 0
    while leading_zeros < len(coeffs) - 1 and coeffs[leading_zeros] == 0:
        leading_zeros += 1
    roots = [0j] * leading_zeros
    coeffs = coeffs[leading_zeros:]
    degree = len(coeffs) - 1
    if degree == 0:
        return roots
    if degree == 1:
        return roots + [complex(-coeffs[0] / coeffs[1])]

    z, converged = _aberth(coeffs, iterations)
    if not converged:
        worst = float(np.max(_backward_error(coeffs, z)))
        raise RootFindingError(
            f'Aberth iteration did not converge in {iterations} steps '
            f'(degree {degree}, worst backward error {worst:.3g})',
            residual=worst,
        )
    z = _newton_polish(coeffs, z)

    scale = npoly.polyval(np.maximum(1.0, np.abs(z)), np.abs(coeffs))
    residuals = np.abs(npoly.polyval(z, coeffs))
    if np.any(residuals > tol.root_polish * scale):
        worst = float(np.max(residuals / scale))
        raise RootFindingError(
            f'polished roots miss the residual target ({worst:.3g})',
            residual=worst,
        )
    return roots + [complex(r) for r in z]


def derivative_numerator(B):
    """Coefficients of P'Q - PQ', whose roots are the critical points."""
    rational = to_rational(B)
    P = np.array(rational.P)
    Q = np.array(rational.Q)
    return npoly.polysub(npoly.polymul(npoly.polyder(P), Q),
                         npoly.polymul(P, npoly.polyder(Q)))


def cluster_points(points, distance):
    """Single-linkage clusters of ``points`` at ``distance``.

    Clusters whose means end up within 2 * distance of each other are merged
    as well, so the returned representatives are pairwise farther apart.
    """
    points = [complex(p) for p in points]
    groups = [[p] for p in points]
    merged = True
    while merged:
        merged = False
        for i in range(len(groups)):
            for j in range(i + 1, len(groups)):
                linked = any(abs(p - q) <= distance
                             for p in groups[i] for q in groups[j])
                if not linked:
                    mean_i = sum(groups[i]) / len(groups[i])
                    mean_j = sum(groups[j]) / len(groups[j])
                    linked = abs(mean_i - mean_j) <= 2 * distance
                if linked:
                    groups[i].extend(groups.pop(j))
                    merged = True
                    break
            if merged:
                break
    return groups


def critical_data(B, tol=None):
    """Critical points of B in the disk and their distinct images."""
    tol = get_tolerances(tol)
    if B.degree < 2:
        raise PreconditionError('critical data needs degree at least 2')
    roots = all_roots(derivative_numerator(B), tol)
    interior = [r for r in roots if abs(r) < 1.0 - BOUNDARY_BAND]
    on_circle = [r for r in roots
                 if 1.0 - BOUNDARY_BAND <= abs(r) <= 1.0 + BOUNDARY_BAND]
    if on_circle:
        raise IllConditionedError(
            'a critical point lies within 1e-10 of the unit circle; the '
            'zeros are too close to the boundary for double precision'
        )
    if len(interior) != B.degree - 1:
        raise IllConditionedError(
            f'expected {B.degree - 1} critical points in the disk, found '
            f'{len(interior)}'
        )

    interior = sort_points(interior)
    images = evaluate_array(B, interior, tol)[0]
    by_value = {}
    for point, image in zip(interior, images):
        by_value.setdefault(complex(image), []).append(point)

    multiplicity = []
    for group in cluster_points(by_value, tol.cluster):
        value = sum(group) / len(group)
        above = [p for v in group for p in by_value[v]]
        multiplicity.append((value, sort_points(above)))
    multiplicity.sort(key=lambda item: point_order_key(item[0]))

    logger.debug('degree %d: %d critical points, %d critical values',
                 B.degree, len(interior), len(multiplicity))
    return CriticalData(
        critical_points=interior,
        critical_values=tuple(v for v, _ in multiplicity),
        multiplicity_map=tuple(multiplicity),
    )


def _polish_fiber(B, w, z, tol, steps=3):
    value, slope = evaluate_array(B, z, tol)
    error = np.abs(value - w)
    for _ in range(steps):
        with np.errstate(divide='ignore', invalid='ignore'):
            candidate = z - (value - w) / slope
        usable = np.isfinite(candidate) & \
            (np.abs(candidate) <= 1.0 + OUTSIDE_SLACK)
        candidate = np.where(usable, candidate, z)
        new_value, new_slope = evaluate_array(B, candidate, tol)
        new_error = np.abs(new_value - w)
        better = usable & (new_error < error)
        z = np.where(better, candidate, z)
        value = np.where(better, new_value, value)
        slope = np.where(better, new_slope, slope)
        error = np.where(better, new_error, error)
    return z, error


def fiber(B, w, tol=None):
    """The n solutions of B(z) = w, in deterministic order."""
    tol = get_tolerances(tol)
    w = complex(w)
    if not abs(w) < 1.0:
        raise DomainError(f'fiber target must lie in the open disk, got {w}')
    rational = to_rational(B)
    equation = np.array(rational.P) - w * np.array(rational.Q)
    roots = np.array(all_roots(equation, tol), dtype=complex)
    if len(roots) != B.degree:
        raise FiberError(f'fiber over {w} has {len(roots)} points, '
                         f'expected {B.degree}')
    if np.any(np.abs(roots) > 1.0 + OUTSIDE_SLACK):
        raise FiberError(f'fiber over {w} has a point outside the closed '
                         f'disk')
    roots, errors = _polish_fiber(B, w, roots, tol)
    if np.any(errors > tol.fiber_residual):
        raise FiberError(f'fiber over {w} re-evaluates with error '
                         f'{float(np.max(errors)):.3g}')
    points = sort_points(roots)
    if B.degree > 1:
        gaps = np.abs(np.subtract.outer(points, points))
        np.fill_diagonal(gaps, np.inf)
        if gaps.min() < tol.separation:
            logger.debug('fiber over %s is near a critical value '
                         '(separation %.3g)', w, gaps.min())
    return points

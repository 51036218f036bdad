"""Simultaneous continuation of a whole fiber along a polyline in w."""
import logging
import math

import numpy as np

from core.blaschke import evaluate_array
from core.conf import get_tolerances
from core.exceptions import ContinuationError

logger = logging.getLogger(__name__)

CONVERGED_STEP = 1e-13
CONVERGED_VALUE = 1e-15


def min_separation(points):
    if len(points) < 2:
        return math.inf
    gaps = np.abs(np.subtract.outer(points, points))
    np.fill_diagonal(gaps, np.inf)
    return float(gaps.min())


def _correct(B, fiber, w, tol):
    """Newton from the previous fiber onto the fiber over w.

    Returns None when a correction exceeds a third of the current
    separation or Newton needs more than the iteration cap.
    """
    separation = min_separation(fiber)
    if separation < tol.collision:
        raise ContinuationError('fiber points collided', location=w)
    guard = separation / 3
    current = fiber
    for _ in range(tol.newton_iterations):
        value, slope = evaluate_array(B, current, tol)
        with np.errstate(divide='ignore', invalid='ignore'):
            correction = (value - w) / slope
        if not np.all(np.isfinite(correction)):
            return None
        if np.any(np.abs(correction) >= guard):
            return None
        current = current - correction
        if np.all(np.abs(correction) <= CONVERGED_STEP) or \
                np.all(np.abs(value - w) <= CONVERGED_VALUE):
            break
    else:
        return None
    if np.any(np.abs(current - fiber) >= guard):
        return None
    return current


def _advance(B, fiber, w_from, w_to, tol, depth=0):
    corrected = _correct(B, fiber, w_to, tol)
    if corrected is not None:
        return corrected
    if depth >= tol.bisection_depth:
        raise ContinuationError('bisection depth exhausted', location=w_to)
    middle = (w_from + w_to) / 2
    halfway = _advance(B, fiber, w_from, middle, tol, depth + 1)
    return _advance(B, halfway, middle, w_to, tol, depth + 1)


def continue_fiber(B, path, start_fiber, tol=None, max_step=None):
    """Carry ``start_fiber`` (over path[0]) along the polyline ``path``.

    Entry i of the result is the continuation of entry i of the start.
    """
    tol = get_tolerances(tol)
    max_step = tol.max_step if max_step is None else max_step
    fiber = np.array(start_fiber, dtype=complex)
    steps = 0
    for w_from, w_to in zip(path, path[1:]):
        w_from, w_to = complex(w_from), complex(w_to)
        pieces = max(1, math.ceil(abs(w_to - w_from) / max_step))
        if w_from == w_to:
            continue
        for k in range(pieces):
            start = w_from + (w_to - w_from) * k / pieces
            end = w_from + (w_to - w_from) * (k + 1) / pieces
            fiber = _advance(B, fiber, start, end, tol)
            steps += 1
    logger.debug('continued fiber of degree %d over %d steps', B.degree,
                 steps)
    return tuple(complex(z) for z in fiber)


def match_fiber(end_fiber, start_fiber):
    """Permutation images sending label i to the start label nearest
    end_fiber[i]; every match must be within a third of the separation."""
    start = np.array(start_fiber, dtype=complex)
    end = np.array(end_fiber, dtype=complex)
    guard = min_separation(start) / 3
    distances = np.abs(end[:, None] - start[None, :])
    images = distances.argmin(axis=1)
    if np.any(distances[np.arange(len(end)), images] >= guard):
        raise ContinuationError('continued fiber does not match the base '
                                'fiber unambiguously')
    if len(set(images.tolist())) != len(images):
        raise ContinuationError('continued fiber matches a base point twice')
    return tuple(int(i) for i in images)

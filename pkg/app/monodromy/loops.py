"""Base point choice and the spider of loops around the punctures."""
import cmath
import logging
import math
from functools import cmp_to_key

import numpy as np

from core.exceptions import DegenerateConfigurationError, PreconditionError
from monodromy.models import LoopPath, path_clearance

logger = logging.getLogger(__name__)

MIN_BASE_CLEARANCE = 1e-3
BASE_ANGLES = 16
RELAXATIONS = 2
CIRCLE_SAMPLES = 32
DETOUR_SAMPLES = 8


def puncture_gap(punctures):
    """Smallest distance between two punctures (inf for fewer than two)."""
    points = list(punctures)
    return min((abs(p - q) for i, p in enumerate(points)
                for q in points[i + 1:]), default=math.inf)


def _base_candidates(delta):
    """(modulus, required clearance) pairs, shrinking first, then growing
    the modulus at the original clearance."""
    inward = [(delta / 2 ** m, delta / 2 ** m)
              for m in range(RELAXATIONS + 1)]
    outward = [(delta * 2 ** m, delta) for m in range(1, RELAXATIONS + 2)]
    return inward + outward


def choose_base(punctures):
    """0 when it is far from every puncture, else a nearby perturbed point.

    The admissible distance is delta = max(1e-3, gap / 10). The perturbed
    point is the first of modulus delta at an angle k * pi / 8 that keeps
    that clearance; smaller moduli are tried next, then larger moduli that
    keep clearance delta.
    """
    punctures = [complex(v) for v in punctures]
    gap = puncture_gap(punctures)
    delta = MIN_BASE_CLEARANCE if math.isinf(gap) \
        else max(MIN_BASE_CLEARANCE, gap / 10)
    if all(abs(v) > delta for v in punctures):
        return 0j
    for modulus, required in _base_candidates(delta):
        if modulus >= 1:
            continue
        for k in range(BASE_ANGLES):
            candidate = cmath.rect(modulus, k * math.pi / 8)
            clearance = min(abs(candidate - v) for v in punctures)
            if clearance >= required * (1 - 1e-12):
                logger.debug('base point perturbed to %s', candidate)
                return candidate
    raise DegenerateConfigurationError(
        'no admissible base point near 0 with positive clearance'
    )


def _wrap(angle):
    return (angle + math.pi) % (2 * math.pi) - math.pi


def crossings(start, end, obstacles):
    """(entry distance, center, radius, signed offset) of every obstacle
    disk whose chord lies inside the segment, in order along it.

    The offset is positive for centers left of the segment.
    """
    length = abs(end - start)
    if length == 0:
        return []
    direction = (end - start) / length
    found = []
    for center, radius in obstacles:
        relative = (center - start) * direction.conjugate()
        along, across = relative.real, relative.imag
        if abs(across) >= radius:
            continue
        half = math.sqrt(radius ** 2 - across ** 2)
        if along - half <= 0 or along + half >= length:
            continue
        found.append((along - half, center, radius, across))
    return sorted(found, key=lambda c: c[0])


def detour(start, end, obstacles, samples=DETOUR_SAMPLES):
    """Polyline from start to end rounding every obstacle disk it cuts.

    ``obstacles`` are (center, radius) pairs with disjoint disks. A disk
    whose chord lies inside the segment is rounded along its boundary on
    the side the segment already passes the center, so the polyline stays
    homotopic to the segment; a segment through a center keeps it on the
    left. Disks containing start or end are left alone.
    """
    if start == end:
        return [start, end]
    direction = (end - start) / abs(end - start)
    left = 1j * direction
    points = [start]
    for entry_along, center, radius, across in crossings(start, end,
                                                         obstacles):
        side = -1.0 if across >= 0 else 1.0
        first = cmath.phase(start + entry_along * direction - center)
        bulge = cmath.phase(side * left)
        sweep = 2 * _wrap(bulge - first)
        points.extend(center + cmath.rect(radius, first + sweep * k / samples)
                      for k in range(samples + 1))
    points.append(end)
    return points


def _loop_order(bearings, distances, rounded):
    """Comparator on puncture indexes for the boundary-parallel order.

    rounded[k] maps every puncture the leg to k rounds to True when it is
    kept on the left; such a leg sits just clockwise of that puncture.
    Otherwise bearings decide, nearer punctures first on ties.
    """
    def compare(a, b):
        if b in rounded[a]:
            return -1 if rounded[a][b] else 1
        if a in rounded[b]:
            return 1 if rounded[b][a] else -1
        if bearings[a] != bearings[b]:
            return -1 if bearings[a] < bearings[b] else 1
        return (distances[a] > distances[b]) - (distances[a] < distances[b])
    return compare


def build_loops(punctures, base):
    """One counterclockwise loop per puncture, in boundary-parallel order.

    Loop k runs from the base along a leg to the circle of radius
    r_k = min(gap / 3, |v_k - base| / 3) around v_k, once around it and
    back along the same leg. The leg follows the bearing to v_k and rounds
    every nearer circle it cuts on the side the bearing passes it.
    Concatenated in the returned order the loops are homotopic to a loop
    parallel to the unit circle.
    """
    punctures = [complex(v) for v in punctures]
    base = complex(base)
    if any(v == base for v in punctures):
        raise PreconditionError('base point coincides with a puncture')
    gap = puncture_gap(punctures)
    radii = [min(gap / 3, abs(v - base) / 3) for v in punctures]
    index_of = {v: i for i, v in enumerate(punctures)}

    built, rounded = [], []
    for index, (puncture, radius) in enumerate(zip(punctures, radii)):
        others = [(v, r) for j, (v, r) in enumerate(zip(punctures, radii))
                  if j != index]
        attach = puncture + radius * (base - puncture) / abs(base - puncture)
        leg = detour(base, attach, others)
        passed = {index_of[center]: across >= 0
                  for _, center, _, across in crossings(base, attach,
                                                        others)}
        if passed:
            logger.debug('leg to %s rounds %d puncture(s)', puncture,
                         len(passed))
        facing = cmath.phase(base - puncture)
        turns = facing + 2 * np.pi * np.arange(1, CIRCLE_SAMPLES) / \
            CIRCLE_SAMPLES
        circle = [puncture + radius * complex(c)
                  for c in np.exp(1j * turns)]
        waypoints = (*leg, *circle, *reversed(leg))
        built.append(LoopPath(
            puncture_index=index,
            puncture=puncture,
            radius=radius,
            waypoints=waypoints,
            clearance=path_clearance(waypoints, punctures),
        ))
        rounded.append(passed)

    bearings = [loop.direction for loop in built]
    distances = [abs(v - base) for v in punctures]
    order = sorted(range(len(built)), key=cmp_to_key(
        _loop_order(bearings, distances, rounded)))
    ordered = []
    for position, index in enumerate(order):
        loop = built[index]
        ordered.append(LoopPath(
            puncture_index=position,
            puncture=loop.puncture,
            radius=loop.radius,
            waypoints=loop.waypoints,
            clearance=loop.clearance,
        ).validate(punctures))
    return tuple(ordered)

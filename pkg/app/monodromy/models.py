import cmath
from dataclasses import dataclass
from functools import reduce

import numpy as np

from core.exceptions import DegenerateConfigurationError
from monodromy.permgroup import Permutation

WINDING_SLACK = 0.01


def winding_number(waypoints, point):
    """Discrete winding number of a closed polyline around ``point``."""
    total = 0.0
    for start, end in zip(waypoints, waypoints[1:]):
        total += cmath.phase((end - point) / (start - point))
    return total / (2 * np.pi)


def segment_distance(start, end, point):
    direction = end - start
    length = abs(direction) ** 2
    if length == 0:
        return abs(point - start)
    t = ((point - start) * direction.conjugate()).real / length
    t = min(1.0, max(0.0, t))
    return abs(point - (start + t * direction))


def path_clearance(waypoints, points):
    return min(
        (segment_distance(a, b, p)
         for a, b in zip(waypoints, waypoints[1:]) for p in points),
        default=float('inf'),
    )


@dataclass(frozen=True)
class LoopPath:
    """A closed polyline from the base point around one puncture."""
    puncture_index: int
    puncture: complex
    radius: float
    waypoints: tuple
    clearance: float

    @property
    def base_point(self):
        return self.waypoints[0]

    @property
    def direction(self):
        """Bearing of the puncture seen from the base point."""
        return cmath.phase(self.puncture - self.base_point)

    def winding_number(self, point):
        return winding_number(self.waypoints, point)

    def validate(self, punctures):
        if self.waypoints[0] != self.waypoints[-1]:
            raise DegenerateConfigurationError('loop is not closed')
        if not self.clearance > 0:
            raise DegenerateConfigurationError('loop touches a puncture')
        for index, puncture in enumerate(punctures):
            expected = 1 if puncture == self.puncture else 0
            winding = self.winding_number(puncture)
            if abs(winding - expected) > WINDING_SLACK:
                raise DegenerateConfigurationError(
                    f'loop around puncture {self.puncture_index} winds '
                    f'{winding:.3f} times around puncture {index}'
                )
        return self


@dataclass(frozen=True)
class MonodromyResult:
    """Labeled branches at the base point and one generator per puncture.

    base_fiber[i] is the branch g_{i+1}; generators[k] records where each
    branch ends after continuation around punctures[k].
    """
    base_point: complex
    base_fiber: tuple
    punctures: tuple
    generators: tuple
    loops: tuple = ()

    @property
    def degree(self):
        return len(self.base_fiber)

    @property
    def separation(self):
        points = np.array(self.base_fiber)
        if len(points) < 2:
            return float('inf')
        gaps = np.abs(np.subtract.outer(points, points))
        np.fill_diagonal(gaps, np.inf)
        return float(gaps.min())

    def boundary_product(self):
        """Generators multiplied in loop order; a boundary-parallel loop."""
        if not self.generators:
            return Permutation.identity(self.degree)
        return reduce(lambda p, q: p * q, self.generators)

    def branching_total(self):
        return sum(self.degree - g.cycle_count() for g in self.generators)

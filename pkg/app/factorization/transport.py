"""Moving labeled fibers and their block labels away from the base point."""
import logging

from core.conf import get_tolerances
from core.exceptions import DegenerateConfigurationError
from factorization.models import FiberPartition
from monodromy.continuation import continue_fiber
from monodromy.loops import detour
from monodromy.models import path_clearance

logger = logging.getLogger(__name__)


def admissible_path(M, target, via=()):
    """Polyline from the base point to ``target`` through ``via``.

    Each straight stretch rounds the loop circles it cuts. Segments keep at
    least half a loop radius from every puncture, except punctures closer
    than one loop radius to the target itself.
    """
    stops = [M.base_point, *(complex(v) for v in via), complex(target)]
    obstacles = [(loop.puncture, loop.radius) for loop in M.loops]
    path = [stops[0]]
    for start, end in zip(stops, stops[1:]):
        path.extend(detour(start, end, obstacles)[1:])
    for loop in M.loops:
        if abs(loop.puncture - stops[-1]) < loop.radius:
            continue
        if path_clearance(path, [loop.puncture]) < loop.radius / 2:
            raise DegenerateConfigurationError(
                f'no admissible path to {target}: puncture '
                f'{loop.puncture} is in the way'
            )
    return tuple(path)


def transport_fiber(B, M, target, path=None, tol=None):
    """The base fiber continued to the fiber over ``target``."""
    tol = get_tolerances(tol)
    target = complex(target)
    if target == M.base_point:
        return tuple(M.base_fiber)
    path = admissible_path(M, target) if path is None else tuple(path)
    logger.debug('transporting fiber to %s along %d waypoints', target,
                 len(path))
    return continue_fiber(B, path, M.base_fiber, tol)


def transport_partition(B, M, system, target, path=None, tol=None):
    """Block labels of ``system`` pushed forward to the fiber over target.

    The result depends on the path only up to a renaming of blocks.
    """
    points = transport_fiber(B, M, target, path, tol)
    return FiberPartition(target=complex(target), points=points,
                          system=system)

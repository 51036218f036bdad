import logging
from concurrent.futures import ThreadPoolExecutor

from core.conf import get_tolerances
from core.exceptions import (DegenerateConfigurationError, MonodromyError,
                             PreconditionError)
from core.polyroots import critical_data, fiber
from monodromy.continuation import continue_fiber, match_fiber
from monodromy.loops import build_loops, choose_base
from monodromy.models import MonodromyResult
from monodromy.permgroup import Permutation, orbit

logger = logging.getLogger(__name__)


def loop_generator(B, loop, base_fiber, tol=None, max_step=None):
    """The permutation of branch labels induced by one loop."""
    end = continue_fiber(B, loop.waypoints, base_fiber, tol, max_step)
    return Permutation(match_fiber(end, base_fiber))


def monodromy_group(B, tol=None, critical=None, max_step=None):
    """Label the branches of B^-1 at the base point and continue them
    around every critical value."""
    tol = get_tolerances(tol)
    if B.degree < 2:
        raise PreconditionError('monodromy needs degree at least 2')
    critical = critical_data(B, tol) if critical is None else critical
    base = choose_base(critical.critical_values)
    base_fiber = fiber(B, base, tol)
    result = MonodromyResult(base_point=base, base_fiber=base_fiber,
                             punctures=(), generators=())
    if result.separation <= tol.separation:
        raise DegenerateConfigurationError(
            f'base fiber is not separated (min distance '
            f'{result.separation:.3g})'
        )
    loops = build_loops(critical.critical_values, base)

    def run(loop):
        return loop_generator(B, loop, base_fiber, tol, max_step)

    if tol.workers > 1 and len(loops) > 1:
        with ThreadPoolExecutor(max_workers=tol.workers) as pool:
            generators = tuple(pool.map(run, loops))
    else:
        generators = tuple(run(loop) for loop in loops)

    result = MonodromyResult(
        base_point=base,
        base_fiber=base_fiber,
        punctures=tuple(loop.puncture for loop in loops),
        generators=generators,
        loops=loops,
    )
    check_invariants(result)
    return result


def check_invariants(result):
    n = result.degree
    if len(orbit(result.generators, 0)) != n:
        raise MonodromyError('monodromy group is not transitive')
    product = result.boundary_product()
    if product.cycle_count() != 1:
        raise MonodromyError(
            f'boundary product {product} is not a single {n}-cycle'
        )
    branching = result.branching_total()
    if branching != n - 1:
        logger.warning('branching total %d differs from %d; critical '
                       'values may not have clustered cleanly',
                       branching, n - 1)

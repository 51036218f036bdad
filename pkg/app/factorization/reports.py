"""Assembly of the full analysis of one Blaschke product."""
import logging
import time
from dataclasses import dataclass, field

from core.blaschke import verification_grid
from core.composition import normalize_to_zero
from core.conf import get_tolerances
from core.models import CriticalData
from core.polyroots import critical_data
from factorization.synthesis import check_degree, synthesize
from monodromy.group import monodromy_group
from monodromy.models import MonodromyResult
from monodromy.permgroup import (NormalSubgroupListing, all_block_systems,
                                 block_action, block_kernel, generate,
                                 is_transitive, normal_subgroups)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BlockSystemSummary:
    """A block system with the kernel of the action on its blocks."""
    system: object
    kernel_order: int = None
    block_action_order: int = None
    kernel_abelian: bool = None

    @property
    def block_size(self):
        return self.system.block_size

    @property
    def block_count(self):
        return self.system.block_count


@dataclass
class AnalysisReport:
    product: object
    normalization: object
    critical: object
    monodromy: object
    group_order: int
    transitive: bool
    block_systems: list
    normal_subgroups: object
    factorizations: list
    failures: list
    timings: dict = field(default_factory=dict)

    @property
    def degree(self):
        return self.product.degree

    @property
    def boundary_product(self):
        return self.monodromy.boundary_product()

    @property
    def branching_total(self):
        return self.monodromy.branching_total()

    @property
    def normal_subgroup_orders(self):
        if self.normal_subgroups.declined:
            return None
        return self.normal_subgroups.orders


class _Stopwatch:

    def __init__(self):
        self.timings = {}
        self._start = time.perf_counter()
        self._last = self._start

    def lap(self, name):
        now = time.perf_counter()
        self.timings[name] = now - self._last
        self._last = now

    def finish(self):
        self.timings['total'] = time.perf_counter() - self._start
        return self.timings


def _trivial_report(B, tol):
    """Degree one: the group of one branch and nothing to factor."""
    _, normalization = normalize_to_zero(B, tol)
    return AnalysisReport(
        product=B,
        normalization=normalization,
        critical=CriticalData(critical_points=(), critical_values=()),
        monodromy=MonodromyResult(base_point=0j,
                                  base_fiber=(B.zeros[0],),
                                  punctures=(), generators=()),
        group_order=1,
        transitive=True,
        block_systems=[],
        normal_subgroups=NormalSubgroupListing(),
        factorizations=[],
        failures=[],
    )


def analyze(B, tol=None, grid=None):
    """Critical data, monodromy, block systems, normal subgroups and every
    factorization of B, with per-stage timings."""
    tol = get_tolerances(tol)
    check_degree(B, tol)
    if B.degree == 1:
        return _trivial_report(B, tol)
    grid = verification_grid(tol=tol) if grid is None else grid
    watch = _Stopwatch()

    _, normalization = normalize_to_zero(B, tol)
    critical = critical_data(B, tol)
    watch.lap('critical')
    M = monodromy_group(B, tol, critical=critical)
    watch.lap('monodromy')
    G = generate(M.generators, B.degree, tol)
    transitive = is_transitive(G)
    systems = all_block_systems(G)
    summaries = []
    for system in systems:
        action = generate(block_action(G, system), system.block_count, tol)
        kernel = block_kernel(G, system)
        summaries.append(BlockSystemSummary(
            system=system,
            kernel_order=G.order // action.order,
            block_action_order=action.order,
            kernel_abelian=None if kernel is None else kernel.abelian,
        ))
    watch.lap('block_systems')
    normal = normal_subgroups(G)
    watch.lap('normal_subgroups')
    factorizations, failures = synthesize(B, monodromy=M, systems=systems,
                                          tol=tol, grid=grid)
    watch.lap('factorization')
    logger.info('analyzed degree %d: |G| = %d, %d block system(s)',
                B.degree, G.order, len(systems))
    return AnalysisReport(
        product=B,
        normalization=normalization,
        critical=critical,
        monodromy=M,
        group_order=G.order,
        transitive=transitive,
        block_systems=summaries,
        normal_subgroups=normal,
        factorizations=factorizations,
        failures=failures,
        timings=watch.finish(),
    )


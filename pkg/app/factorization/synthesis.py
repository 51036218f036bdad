"""From a block system of the monodromy group to a pair B = J o b."""
import logging
import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from core.blaschke import (evaluate, residual, unit_part, values,
                           verification_grid)
from core.composition import (compose, normalize_to_zero, precompose,
                              rotate_argument)
from core.conf import get_tolerances
from core.exceptions import (BlaschkeError, DeclinedError,
                             DegenerateConfigurationError,
                             InvalidInputError, PreconditionError,
                             SynthesisError)
from core.models import BlaschkeProduct, MobiusAuto, unit
from core.polyroots import all_roots
from factorization.inverse import branch_partition
from factorization.models import (Factorization, FiberPartition,
                                  SynthesisFailure)
from factorization.transport import transport_fiber
from monodromy.continuation import match_fiber, min_separation
from monodromy.group import monodromy_group
from monodromy.permgroup import all_block_systems, generate

logger = logging.getLogger(__name__)

ANCHOR_CLEARANCE = 1e-3
ANCHOR_RADIUS = 0.5
ANCHOR_TRIES = 32
LAMBDA_SAMPLES = 32


def check_degree(B, tol=None):
    tol = get_tolerances(tol)
    if B.degree > tol.max_degree:
        raise DeclinedError(
            f'degree {B.degree} is above the supported maximum '
            f'{tol.max_degree}'
        )


def divisor_pairs(n):
    """(outer degree, inner degree) for every proper divisor of n."""
    return [(n // d, d) for d in range(2, n) if n % d == 0]


def gauge_fixed(zeros, tol=None):
    """The product with these zeros whose first nonvanishing derivative at
    the origin is a positive real."""
    tol = get_tolerances(tol)
    leading = complex(np.prod([-a for a in zeros if abs(a) > tol.cluster]))
    return BlaschkeProduct(lam=unit(leading).conjugate(), zeros=tuple(zeros))


def choose_anchor(B, punctures, tol=None):
    """A point a with B(a) a regular value, preferring a = 0.

    Returns (a, B(a)); later candidates are seeded points of |a| <= 0.5.
    """
    tol = get_tolerances(tol)
    rng = np.random.default_rng(tol.seed)
    radii = ANCHOR_RADIUS * np.sqrt(rng.uniform(0.0, 1.0, ANCHOR_TRIES))
    angles = rng.uniform(0.0, 2 * np.pi, ANCHOR_TRIES)
    candidates = [0j] + [complex(c) for c in radii * np.exp(1j * angles)]
    for a in candidates:
        w = evaluate(B, a, tol)[0]
        clearance = min((abs(w - v) for v in punctures), default=math.inf)
        if clearance >= ANCHOR_CLEARANCE:
            if a:
                logger.debug('anchor moved to %s (B(0) too close to a '
                             'critical value)', a)
            return a, w
    raise DegenerateConfigurationError('no anchor with a regular value '
                                       'found near the origin')


def build_inner(normalized, partition, tol=None):
    """Inner factor from the block of the zero fiber containing 0.

    ``partition`` labels the zero fiber of ``normalized`` (which vanishes
    at 0) by the transported block system.
    """
    tol = get_tolerances(tol)
    if min_separation(np.array(partition.points)) <= tol.separation:
        raise PreconditionError(
            'zeros of the normalized product are not simple; precompose '
            'with a disk automorphism so that B(0) is a regular value'
        )
    origin = partition.nearest(0j)
    if abs(partition.points[origin]) > tol.cluster:
        raise PreconditionError('the origin is not a zero of the '
                                'normalized product')
    block = partition.block_containing(origin)
    zeros = tuple(0j if i == origin else complex(partition.points[i])
                  for i in block)
    return gauge_fixed(zeros, tol)


def _matched_outer(zeros, normalized, inner, grid, tol):
    """Outer with the given zeros and lambda read off at the sample where
    its Mobius part is largest."""
    shape = BlaschkeProduct(lam=1.0, zeros=tuple(zeros))
    samples = grid[:LAMBDA_SAMPLES]
    factor = unit_part(shape, values(inner, samples, tol), tol)
    best = int(np.argmax(np.abs(factor)))
    raw = values(normalized, samples[best:best + 1], tol)[0] / factor[best]
    return BlaschkeProduct(lam=unit(raw), zeros=shape.zeros)


def _fitted_outer(normalized, inner, degree, grid, tol):
    """Least-squares rational fit P(u) = v Q(u), Q(0) = 1, of the pairs
    (inner(z), B(z)) over the grid."""
    u = values(inner, grid, tol)
    v = values(normalized, grid, tol)
    columns = [u ** j for j in range(degree + 1)]
    columns += [-v * u ** j for j in range(1, degree + 1)]
    coefficients = np.linalg.lstsq(np.column_stack(columns), v,
                                   rcond=None)[0]
    zeros = all_roots(coefficients[:degree + 1], tol)
    if len(zeros) != degree or any(abs(z) >= 1 for z in zeros):
        raise SynthesisError('least-squares outer has zeros off the disk')
    return _matched_outer(zeros, normalized, inner, grid, tol)


def build_outer(normalized, inner, partition, tol=None, grid=None):
    """Outer factor with zeros inner(block) and its residual.

    Returns (outer, residual, method). The least-squares fit is tried only
    when the block construction misses the residual bound.
    """
    tol = get_tolerances(tol)
    grid = verification_grid(tol=tol) if grid is None else grid
    images = [values(inner, block, tol) for block in partition.blocks()]
    spread = max(float(np.max(np.abs(img - img[0]))) for img in images)
    best = math.inf
    if spread <= tol.block_spread:
        zeros = [complex(np.mean(img)) for img in images]
        try:
            outer = _matched_outer(zeros, normalized, inner, grid, tol)
            best = residual(normalized, outer, inner, grid, tol)
        except InvalidInputError as exc:
            logger.info('block representatives rejected: %s', exc)
        else:
            if best <= tol.residual:
                return outer, best, 'blocks'
    else:
        logger.info('inner varies by %.3g over a block', spread)

    logger.info('falling back to a least-squares outer (residual %.3g)',
                best)
    try:
        outer = _fitted_outer(normalized, inner, len(images), grid, tol)
        fitted = residual(normalized, outer, inner, grid, tol)
    except (InvalidInputError, SynthesisError) as exc:
        raise SynthesisError(f'no outer factor: {exc}', residual=best)
    if fitted > tol.residual:
        raise SynthesisError('no outer factor within the residual bound',
                             residual=min(best, fitted))
    return outer, fitted, 'least_squares'


def canonicalize(outer, inner, tol=None):
    """Move (J, b) to b(0) = 0 with positive first nonvanishing derivative,
    keeping J o b unchanged."""
    tol = get_tolerances(tol)
    at_origin = evaluate(inner, 0j, tol)[0]
    if at_origin != 0:
        mu = MobiusAuto(a=at_origin, rot=1.0)
        moved = compose(mu, inner, tol)
        zeros = list(moved.zeros)
        nearest = int(np.argmin(np.abs(zeros)))
        if abs(zeros[nearest]) <= tol.cluster:
            zeros[nearest] = 0j
        inner = BlaschkeProduct(lam=moved.lam, zeros=tuple(zeros))
        outer = compose(outer, mu.inverse(), tol)
    leading = inner.lam * np.prod([-a for a in inner.zeros
                                   if abs(a) > tol.cluster])
    rho = unit(leading).conjugate()
    return rotate_argument(outer, rho.conjugate()), inner.rotated(rho)


def monomial_factorizations(B, monodromy, tol=None, grid=None):
    """z^n = z^(n/d) o z^d for every proper divisor d."""
    tol = get_tolerances(tol)
    grid = verification_grid(tol=tol) if grid is None else grid
    found = []
    for outer_degree, inner_degree in divisor_pairs(B.degree):
        inner = BlaschkeProduct.monomial(inner_degree)
        outer = BlaschkeProduct.monomial(outer_degree, lam=B.lam)
        found.append(Factorization(
            outer=outer,
            inner=inner,
            source_system=branch_partition(B, monodromy, inner, tol),
            residual=residual(B, outer, inner, grid, tol),
            method='monomial',
        ))
    return found


def synthesize(B, monodromy=None, systems=None, tol=None, grid=None):
    """Attempt one factorization per block system.

    Returns (factorizations, failures); a system that does not synthesize
    is reported as a SynthesisFailure instead of aborting the rest.
    """
    tol = get_tolerances(tol)
    grid = verification_grid(tol=tol) if grid is None else grid
    check_degree(B, tol)
    if B.degree < 2:
        return [], []
    M = monodromy_group(B, tol) if monodromy is None else monodromy
    if B.is_monomial():
        return _sorted(monomial_factorizations(B, M, tol, grid)), []
    if systems is None:
        systems = all_block_systems(generate(M.generators, B.degree, tol))
    if not systems:
        return [], []

    anchor, target = choose_anchor(B, M.punctures, tol)
    transported = transport_fiber(B, M, target, tol=tol)
    conjugation = None
    W = B
    if anchor:
        conjugation = MobiusAuto(a=anchor, rot=1.0)
        W = precompose(B, conjugation, tol)
        transported = tuple(conjugation(p) for p in transported)
    normalized, m = normalize_to_zero(W, tol)
    # exact zeros of the normalized product, in branch order
    order = match_fiber(transported, normalized.zeros)
    points = tuple(normalized.zeros[i] for i in order)

    def run(system):
        partition = FiberPartition(target=target, points=points,
                                   system=system)
        try:
            inner = build_inner(normalized, partition, tol)
            outer, _, method = build_outer(normalized, inner, partition,
                                           tol, grid)
            if not m.is_identity():
                outer = compose(m.inverse(), outer, tol)
            if conjugation is not None:
                inner = compose(inner, conjugation, tol)
            outer, inner = canonicalize(outer, inner, tol)
            achieved = residual(B, outer, inner, grid, tol)
            if achieved > tol.residual:
                raise SynthesisError('factorization misses the residual '
                                     'bound after unconjugation',
                                     residual=achieved)
        except BlaschkeError as exc:
            logger.warning('block system %s did not synthesize: %s',
                           system.one_indexed(), exc)
            best = getattr(exc, 'residual', None)
            if best is not None and not math.isfinite(best):
                best = None
            return SynthesisFailure(source_system=system, message=str(exc),
                                    residual=best)
        return Factorization(outer=outer, inner=inner, source_system=system,
                             residual=achieved, method=method)

    if tol.workers > 1 and len(systems) > 1:
        with ThreadPoolExecutor(max_workers=tol.workers) as pool:
            outcomes = list(pool.map(run, systems))
    else:
        outcomes = [run(system) for system in systems]
    factorizations = [o for o in outcomes if isinstance(o, Factorization)]
    failures = [o for o in outcomes if isinstance(o, SynthesisFailure)]
    logger.info('degree %d: %d factorization(s), %d failure(s)', B.degree,
                len(factorizations), len(failures))
    return _sorted(factorizations), failures


def _sorted(factorizations):
    return sorted(factorizations, key=lambda f: (f.inner.degree,
                                                 f.source_system.blocks))


def factorize_all(B, tol=None, grid=None):
    """Every nontrivial factorization of B, one per block system."""
    factorizations, _ = synthesize(B, tol=tol, grid=grid)
    return factorizations

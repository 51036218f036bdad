"""The converse direction: from an inner factor back to its block system."""
import logging

import numpy as np

from core.blaschke import values
from core.conf import get_tolerances
from core.exceptions import InvalidInputError, NotAFactorizationError
from monodromy.permgroup import BlockSystem

logger = logging.getLogger(__name__)

EQUIVALENCE_SAMPLES = 20
EQUIVALENCE_RADIUS = 0.5


def branch_partition(B, M, inner, tol=None):
    """Group the base branches of B by their value under ``inner``.

    Branches i and j share a block when |inner(g_i) - inner(g_j)| is
    within the partition tolerance. The groups must form a G-invariant
    system with block size deg(inner).
    """
    tol = get_tolerances(tol)
    n, k = B.degree, inner.degree
    if n % k:
        raise NotAFactorizationError(
            f'inner degree {k} does not divide degree {n}'
        )
    images = values(inner, M.base_fiber, tol)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if abs(images[i] - images[j]) <= tol.partition:
                parent[find(j)] = find(i)
    groups = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    blocks = list(groups.values())
    if any(len(block) != k for block in blocks):
        raise NotAFactorizationError(
            f'inner of degree {k} groups the branches into blocks of sizes '
            f'{sorted(len(b) for b in blocks)}'
        )
    try:
        system = BlockSystem(tuple(tuple(b) for b in blocks))
    except InvalidInputError as exc:
        raise NotAFactorizationError(str(exc))
    if not system.is_invariant(M.generators):
        raise NotAFactorizationError(
            'branch partition is not respected by the monodromy group'
        )
    return system


def fit_mobius(u, v):
    """Least-squares fit of v = (alpha u + beta) / (gamma u + 1).

    Returns ((alpha, beta, gamma), max residual over the samples).
    """
    u = np.asarray(u, dtype=complex)
    v = np.asarray(v, dtype=complex)
    matrix = np.column_stack([u, np.ones_like(u), -u * v])
    alpha, beta, gamma = np.linalg.lstsq(matrix, v, rcond=None)[0]
    with np.errstate(divide='ignore', invalid='ignore'):
        fitted = (alpha * u + beta) / (gamma * u + 1)
    misfit = np.abs(fitted - v)
    worst = float(np.max(misfit)) if np.all(np.isfinite(misfit)) \
        else float('inf')
    return (complex(alpha), complex(beta), complex(gamma)), worst


def equivalent(first, second, tol=None):
    """Whether two factorizations of the same B share their block system.

    Equal systems are cross-checked: the inner factors must differ by a
    disk automorphism on sample points. Factorizations whose inner factors
    fail that check are reported as not equivalent.
    """
    tol = get_tolerances(tol)
    same = first.source_system == second.source_system
    if same:
        angles = 2 * np.pi * np.arange(EQUIVALENCE_SAMPLES) / \
            EQUIVALENCE_SAMPLES
        samples = EQUIVALENCE_RADIUS * np.exp(1j * angles)
        _, misfit = fit_mobius(values(first.inner, samples, tol),
                               values(second.inner, samples, tol))
        if misfit > tol.mobius_fit:
            logger.warning('inner factors of one block system differ by no '
                           'automorphism, Mobius fit %.3g', misfit)
            return False
        logger.debug('equivalent factorizations, Mobius fit %.3g', misfit)
    return same

"""Evaluation of finite Blaschke products and their rational form."""
import logging

import numpy as np
from numpy.polynomial import polynomial as npoly

from core.conf import get_tolerances
from core.exceptions import DomainError
from core.models import BlaschkeProduct, RationalPair

logger = logging.getLogger(__name__)

BOUNDARY_SLACK = 1e-9


def evaluate_array(B, zs, tol=None):
    """Values and derivatives of B at every point of ``zs``.

    The derivative is accumulated factor by factor with the product rule,
    never obtained by dividing by B(z).
    """
    tol = get_tolerances(tol)
    z = np.atleast_1d(np.asarray(zs, dtype=complex))
    if np.any(np.abs(z) > 1.0 + BOUNDARY_SLACK):
        raise DomainError('evaluation point outside the closed unit disk')
    alphas = B.zeros_array
    denominators = 1.0 - np.conj(alphas)[:, None] * z[None, :]
    if np.any(np.abs(denominators) < tol.pole):
        raise DomainError('evaluation point within pole distance of a '
                          'factor; zeros are too close to the circle')
    factors = (z[None, :] - alphas[:, None]) / denominators
    slopes = (1.0 - np.abs(alphas) ** 2)[:, None] / denominators ** 2

    value = np.full(z.shape, B.lam, dtype=complex)
    derivative = np.zeros(z.shape, dtype=complex)
    for factor, slope in zip(factors, slopes):
        derivative = derivative * factor + value * slope
        value = value * factor
    return value, derivative


def evaluate(B, z, tol=None):
    """Return (B(z), B'(z)) for a single point."""
    value, derivative = evaluate_array(B, [z], tol)
    return complex(value[0]), complex(derivative[0])


def values(B, zs, tol=None):
    return evaluate_array(B, zs, tol)[0]


def unit_part(B, zs, tol=None):
    """The product of the Mobius factors of B, i.e. B / lambda."""
    return values(B, zs, tol) / B.lam


def to_rational(B):
    """Expand B into P/Q with P = lam * prod(z - a), Q = prod(1 - conj(a) z).

    Coefficients are ascending; Q(0) == 1 exactly.
    """
    # numpy trims trailing zero coefficients; both are padded back to n + 1
    size = B.degree + 1
    P = np.zeros(size, dtype=complex)
    Q = np.zeros(size, dtype=complex)
    expanded = B.lam * npoly.polyfromroots(B.zeros_array)
    P[:len(expanded)] = expanded
    denominator = np.array([1.0 + 0j])
    for a in B.zeros:
        denominator = npoly.polymul(denominator, [1.0, -np.conj(a)])
    Q[:len(denominator)] = denominator
    return RationalPair(P=tuple(complex(c) for c in P),
                        Q=tuple(complex(c) for c in Q))


def verification_grid(size=None, seed=None, tol=None):
    """Sample points for residual checks.

    Three quarters of the points sit on the circles of radius 0.3, 0.6 and
    0.9 at equispaced angles; the rest are seeded random points of the
    disk of radius 0.95.
    """
    tol = get_tolerances(tol)
    size = tol.grid if size is None else size
    seed = tol.seed if seed is None else seed
    random_count = size // 4
    per_circle = (size - random_count) // 3
    random_count = size - 3 * per_circle
    angles = 2 * np.pi * np.arange(per_circle) / max(per_circle, 1)
    circles = [r * np.exp(1j * angles) for r in (0.3, 0.6, 0.9)]
    rng = np.random.default_rng(seed)
    radii = 0.95 * np.sqrt(rng.uniform(0.0, 1.0, random_count))
    phases = rng.uniform(0.0, 2 * np.pi, random_count)
    scattered = radii * np.exp(1j * phases)
    return np.concatenate(circles + [scattered])


def residual(B, outer, inner, grid=None, tol=None):
    """sup over the grid of |B(z) - outer(inner(z))|."""
    grid = verification_grid(tol=tol) if grid is None else grid
    inner_values = values(inner, grid, tol)
    return float(np.max(np.abs(values(B, grid, tol) -
                               values(outer, inner_values, tol))))


def random_blaschke(degree, rng=None, radius=None, tol=None):
    """A random product with zeros uniform in |z| <= radius.

    Zeros are drawn by rejection from the enclosing square; lambda is
    uniform on the circle.
    """
    tol = get_tolerances(tol)
    radius = tol.random_radius if radius is None else radius
    if not 0 < radius < 1:
        raise DomainError('random zero radius must lie in (0, 1)')
    if not isinstance(rng, np.random.Generator):
        rng = np.random.default_rng(tol.seed if rng is None else rng)
    zeros = []
    while len(zeros) < degree:
        x, y = rng.uniform(-radius, radius, 2)
        if x * x + y * y <= radius * radius:
            zeros.append(complex(x, y))
    lam = np.exp(1j * rng.uniform(0.0, 2 * np.pi))
    return BlaschkeProduct(lam=lam, zeros=tuple(zeros))

"""Composition of Blaschke products and normalization by automorphisms."""
import logging

import numpy as np

from core.blaschke import evaluate, unit_part
from core.conf import get_tolerances
from core.exceptions import CompositionError
from core.models import BlaschkeProduct, MobiusAuto, unit
from core.polyroots import fiber

logger = logging.getLogger(__name__)

LAMBDA_MISMATCH = 1e-9
ANCHORS = (0j, 0.31 + 0j, 0.31j, -0.47 + 0j, -0.23j, 0.57 + 0.11j)


def _as_product(f):
    return f.as_blaschke() if isinstance(f, MobiusAuto) else f


def match_lambda(zeros, target, tol=None):
    """Unimodular constant making prod-of-factors(zeros) agree with target.

    ``target`` maps sample points to the values the product must take.
    The first anchor point not too close to a zero is used.
    """
    tol = get_tolerances(tol)
    shape = BlaschkeProduct(lam=1.0, zeros=tuple(zeros))
    for anchor in ANCHORS:
        factor = complex(unit_part(shape, [anchor], tol)[0])
        if abs(factor) > 1e-3:
            break
    else:
        raise CompositionError('no anchor point away from the zeros')
    raw = target(anchor) / factor
    if abs(abs(raw) - 1.0) > LAMBDA_MISMATCH:
        raise CompositionError(
            f'composed constant is not unimodular (|lambda|={abs(raw):.12g})'
        )
    return unit(raw)


def compose(outer, inner, tol=None):
    """outer o inner, with zeros found by solving inner(z) = beta."""
    tol = get_tolerances(tol)
    outer = _as_product(outer)
    inner = _as_product(inner)
    zeros = []
    for beta in outer.zeros:
        zeros.extend(fiber(inner, beta, tol))

    def target(z):
        return evaluate(outer, evaluate(inner, z, tol)[0], tol)[0]

    lam = match_lambda(zeros, target, tol)
    product = BlaschkeProduct(lam=lam, zeros=tuple(zeros))
    logger.debug('composed degree %d with degree %d', outer.degree,
                 inner.degree)
    return product


def normalize_to_zero(B, tol=None):
    """Return (Bn, m) with Bn = m o B and Bn(0) = 0.

    m sends B(0) to 0 with rot = 1, or is the identity when B(0) already
    vanishes. The zero of Bn at the origin is stored exactly.
    """
    tol = get_tolerances(tol)
    at_origin = evaluate(B, 0j, tol)[0]
    if abs(at_origin) <= tol.root_polish:
        return B, MobiusAuto.identity()
    m = MobiusAuto(a=at_origin, rot=1.0)
    Bn = compose(m, B, tol)
    zeros = list(Bn.zeros)
    nearest = int(np.argmin(np.abs(zeros)))
    if abs(zeros[nearest]) <= tol.cluster:
        zeros[nearest] = 0j
    return BlaschkeProduct(lam=Bn.lam, zeros=tuple(zeros)), m


def precompose(B, m, tol=None):
    """B o m for a disk automorphism m."""
    return compose(B, m, tol)


def rotate_argument(B, s):
    """B(s * z) for a unimodular s, written out exactly.

    Each factor (s z - a) / (1 - conj(a) s z) equals s times the factor of
    the zero a * conj(s).
    """
    s = unit(s)
    return BlaschkeProduct(lam=unit(B.lam * s ** B.degree),
                           zeros=tuple(a * s.conjugate() for a in B.zeros))

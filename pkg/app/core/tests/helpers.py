import numpy as np

from core.blaschke import values
from core.models import BlaschkeProduct


def agree(first, second, points):
    """Max pointwise difference of two callables or products on points."""
    def sample(f):
        if isinstance(f, BlaschkeProduct):
            return values(f, points)
        return np.asarray(f(points), dtype=complex)
    return float(np.max(np.abs(sample(first) - sample(second))))

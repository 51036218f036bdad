import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from core.exceptions import InvalidInputError

UNIMODULAR_TOLERANCE = 1e-12


def as_point(value, name='point'):
    """Coerce to a finite Python complex (the ComplexPoint of the domain)."""
    try:
        point = complex(value)
    except (TypeError, ValueError):
        raise InvalidInputError(f'{name} is not a complex number: {value!r}')
    if not cmath.isfinite(point):
        raise InvalidInputError(f'{name} is not finite: {value!r}')
    return point


@dataclass(frozen=True)
class BlaschkeProduct:
    """B(z) = lam * prod (z - a) / (1 - conj(a) z) over the zeros a.

    Zeros are kept as a tuple with repeats; multiplicities are recovered by
    clustering when needed.
    """
    lam: complex
    zeros: tuple

    def __post_init__(self):
        lam = as_point(self.lam, 'lambda')
        zeros = tuple(
            as_point(a, f'zeros[{i}]') for i, a in enumerate(self.zeros)
        )
        if not zeros:
            raise InvalidInputError('a Blaschke product needs at least '
                                    'one zero')
        if abs(abs(lam) - 1.0) > UNIMODULAR_TOLERANCE:
            raise InvalidInputError(
                f'lambda must be unimodular, got |lambda|={abs(lam)!r}'
            )
        for i, a in enumerate(zeros):
            if not abs(a) < 1.0:
                raise InvalidInputError(
                    f'zeros[{i}] must lie in the open unit disk, got {a!r}'
                )
        object.__setattr__(self, 'lam', lam)
        object.__setattr__(self, 'zeros', zeros)

    @property
    def degree(self):
        return len(self.zeros)

    @property
    def zeros_array(self):
        return np.array(self.zeros, dtype=complex)

    def is_monomial(self):
        return all(a == 0 for a in self.zeros)

    def rotated(self, rot):
        """Return rot * B for a unimodular rot."""
        return BlaschkeProduct(lam=self.lam * rot, zeros=self.zeros)

    @classmethod
    def monomial(cls, degree, lam=1.0):
        return cls(lam=lam, zeros=(0j,) * degree)

    def __str__(self):
        return f'BlaschkeProduct(degree={self.degree}, lambda={self.lam:.6g})'


@dataclass(frozen=True)
class MobiusAuto:
    """The disk automorphism z -> rot * (a - z) / (1 - conj(a) z)."""
    a: complex
    rot: complex = 1.0

    def __post_init__(self):
        a = as_point(self.a, 'a')
        rot = as_point(self.rot, 'rot')
        if not abs(a) < 1.0:
            raise InvalidInputError(f'automorphism center must lie in the '
                                    f'open unit disk, got {a!r}')
        if abs(abs(rot) - 1.0) > UNIMODULAR_TOLERANCE:
            raise InvalidInputError('automorphism rotation must be '
                                    'unimodular')
        object.__setattr__(self, 'a', a)
        object.__setattr__(self, 'rot', rot)

    @classmethod
    def identity(cls):
        return cls(a=0j, rot=-1.0)

    def is_identity(self):
        return self.a == 0 and self.rot == -1

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        result = self.rot * (self.a - z) / (1.0 - np.conj(self.a) * z)
        return complex(result) if result.ndim == 0 else result

    def inverse(self):
        return MobiusAuto(a=self.a * self.rot, rot=np.conj(self.rot))

    def as_blaschke(self):
        return BlaschkeProduct(lam=-self.rot, zeros=(self.a,))


@dataclass(frozen=True)
class RationalPair:
    """B = P / Q with ascending coefficient tuples."""
    P: tuple
    Q: tuple

    @property
    def degree(self):
        return len(self.P) - 1

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        value = np.polynomial.polynomial.polyval(z, self.P) / \
            np.polynomial.polynomial.polyval(z, self.Q)
        return complex(value) if value.ndim == 0 else value


@dataclass(frozen=True)
class CriticalData:
    """Critical points of B in the disk and their clustered images.

    multiplicity_map pairs each distinct critical value with the critical
    points lying above it.
    """
    critical_points: tuple
    critical_values: tuple
    multiplicity_map: tuple = field(default=())

    @property
    def count(self):
        return len(self.critical_points)

    def points_above(self, value):
        for v, points in self.multiplicity_map:
            if v == value:
                return points
        return ()


def unit(value):
    """Project a nonzero complex number onto the unit circle."""
    value = complex(value)
    modulus = abs(value)
    if modulus == 0 or not math.isfinite(modulus):
        raise InvalidInputError('cannot take the phase of zero')
    return value / modulus

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class FiberPartition:
    """A fiber over ``target`` whose points carry block labels.

    points[i] is the continuation of base branch i, so labels[i] is the
    block of branch i in the source system.
    """
    target: complex
    points: tuple
    system: object

    @property
    def labels(self):
        return self.system.block_of

    def blocks(self):
        """The fiber points grouped block by block."""
        return tuple(tuple(self.points[i] for i in block)
                     for block in self.system.blocks)

    def block_containing(self, index):
        return self.system.blocks[self.labels[index]]

    def nearest(self, point):
        return int(np.argmin(np.abs(np.array(self.points) - point)))


@dataclass(frozen=True)
class Factorization:
    """B = outer o inner, verified on a grid.

    ``method`` records how the outer factor was obtained: from block
    representatives, by the least-squares fallback, or from the monomial
    divisor rule.
    """
    outer: object
    inner: object
    source_system: object
    residual: float
    canonical: bool = True
    method: str = 'blocks'

    @property
    def degrees(self):
        return (self.outer.degree, self.inner.degree)


@dataclass(frozen=True)
class SynthesisFailure:
    source_system: object
    message: str
    residual: float = None

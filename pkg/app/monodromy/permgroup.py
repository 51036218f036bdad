"""Permutation groups acting on branch labels.

Points are 0-indexed everywhere; cycle strings are 1-indexed. Products
compose left to right: (p * q)(i) = q(p(i)).
"""
import logging
from dataclasses import dataclass
from functools import cached_property
from math import factorial

from sympy.combinatorics import Permutation as SymPermutation
from sympy.combinatorics import PermutationGroup

from core.conf import get_tolerances
from core.exceptions import PreconditionError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Permutation:
    images: tuple

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        if sorted(images) != list(range(len(images))):
            raise PreconditionError(f'not a permutation: {images}')
        object.__setattr__(self, 'images', images)

    @classmethod
    def identity(cls, degree):
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree, *cycles):
        images = list(range(degree))
        for cycle in cycles:
            cycle = tuple(cycle)
            for i, j in zip(cycle, cycle[1:] + cycle[:1]):
                images[i] = j
        return cls(tuple(images))

    @classmethod
    def from_sympy(cls, perm, degree):
        images = list(perm.array_form)
        return cls(tuple(images + list(range(len(images), degree))))

    @property
    def degree(self):
        return len(self.images)

    def __call__(self, point):
        return self.images[point]

    def __mul__(self, other):
        return Permutation(tuple(other.images[i] for i in self.images))

    def inverse(self):
        inverse = [0] * self.degree
        for i, j in enumerate(self.images):
            inverse[j] = i
        return Permutation(tuple(inverse))

    def is_identity(self):
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self, singletons=False):
        seen = set()
        out = []
        for start in range(self.degree):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            j = self.images[start]
            while j != start:
                seen.add(j)
                cycle.append(j)
                j = self.images[j]
            if singletons or len(cycle) > 1:
                out.append(tuple(cycle))
        return out

    def cycle_count(self):
        return len(self.cycles(singletons=True))

    def cycle_string(self):
        text = ''.join(
            '(%s)' % ' '.join(str(i + 1) for i in cycle)
            for cycle in self.cycles()
        )
        return text or '()'

    def to_sympy(self):
        return SymPermutation(list(self.images))

    def __str__(self):
        return self.cycle_string()


def orbit(generators, point):
    seen = {point}
    todo = [point]
    while todo:
        i = todo.pop()
        for g in generators:
            j = g(i)
            if j not in seen:
                seen.add(j)
                todo.append(j)
    return seen


@dataclass(frozen=True)
class BlockSystem:
    """A partition of {0..n-1} into equal blocks, blocks sorted."""
    blocks: tuple

    def __post_init__(self):
        blocks = tuple(sorted(tuple(sorted(b)) for b in self.blocks))
        points = sorted(p for b in blocks for p in b)
        if points != list(range(len(points))):
            raise PreconditionError('blocks must partition the points')
        if len({len(b) for b in blocks}) != 1:
            raise PreconditionError('blocks must have equal size')
        object.__setattr__(self, 'blocks', blocks)

    @classmethod
    def from_labels(cls, labels):
        grouped = {}
        for point, label in enumerate(labels):
            grouped.setdefault(label, []).append(point)
        return cls(tuple(tuple(b) for b in grouped.values()))

    @property
    def degree(self):
        return sum(len(b) for b in self.blocks)

    @property
    def block_size(self):
        return len(self.blocks[0])

    @property
    def block_count(self):
        return len(self.blocks)

    @cached_property
    def block_of(self):
        labels = [0] * self.degree
        for index, block in enumerate(self.blocks):
            for point in block:
                labels[point] = index
        return tuple(labels)

    def is_trivial(self):
        return self.block_size in (1, self.degree)

    def is_invariant(self, generators):
        blocks = set(self.blocks)
        return all(
            tuple(sorted(g(p) for p in block)) in blocks
            for g in generators for block in self.blocks
        )

    def join(self, other):
        """The finest common coarsening of two partitions."""
        parent = list(range(self.degree))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for system in (self, other):
            for block in system.blocks:
                for p in block[1:]:
                    parent[find(p)] = find(block[0])
        try:
            return BlockSystem.from_labels([find(i)
                                            for i in range(self.degree)])
        except PreconditionError:
            return None

    def one_indexed(self):
        return [[p + 1 for p in block] for block in self.blocks]


@dataclass(frozen=True)
class NormalSubgroup:
    order: int
    generators: tuple
    abelian: bool


@dataclass(frozen=True)
class NormalSubgroupListing:
    subgroups: tuple = ()
    declined: bool = False

    @property
    def orders(self):
        return sorted(s.order for s in self.subgroups)


class PermGroup:
    """The group generated by ``generators`` on {0..degree-1}."""

    def __init__(self, degree, generators, enumeration_cap):
        self.degree = degree
        self.generators = tuple(generators)
        self.enumeration_cap = enumeration_cap
        perms = [g.to_sympy() for g in self.generators] or \
            [SymPermutation(list(range(degree)))]
        self.group = PermutationGroup(perms)
        # stabilizer chain (Schreier-Sims) behind the exact order
        self.order = int(self.group.order())

    @cached_property
    def elements(self):
        if self.order > self.enumeration_cap:
            return None
        return tuple(Permutation.from_sympy(p, self.degree)
                     for p in self.group.generate(af=False))

    @property
    def is_abelian(self):
        return bool(self.group.is_abelian)

    def is_symmetric(self):
        return self.order == factorial(self.degree)

    def is_alternating(self):
        return self.degree > 2 and self.order * 2 == factorial(self.degree) \
            and all(_is_even(g) for g in self.generators)

    def __repr__(self):
        return f'PermGroup(degree={self.degree}, order={self.order})'


def _is_even(perm):
    return (perm.degree - perm.cycle_count()) % 2 == 0


def generate(generators, degree, tol=None):
    tol = get_tolerances(tol)
    generators = tuple(generators)
    for g in generators:
        if g.degree != degree:
            raise PreconditionError(
                f'generator {g} has degree {g.degree}, expected {degree}'
            )
    return PermGroup(degree, generators, tol.enumeration_cap)


def is_transitive(G):
    return len(orbit(G.generators, 0)) == G.degree


def minimal_block(G, points):
    """The finest block system in which ``points`` share a block."""
    labels = G.group.minimal_block(list(points))
    return BlockSystem.from_labels(labels)


def all_block_systems(G):
    """Every nontrivial block system of a transitive group.

    Minimal systems through {0, j} are closed under join; that reaches
    every system because a system is the join of the minimal systems of
    the pairs inside its block of 0.
    """
    if not is_transitive(G):
        raise PreconditionError('block systems need a transitive group')
    n = G.degree
    if n < 4:
        return []
    systems = set()
    for j in range(1, n):
        system = minimal_block(G, (0, j))
        if not system.is_trivial():
            systems.add(system)
    frontier = list(systems)
    while frontier:
        found = []
        for first in frontier:
            for second in list(systems):
                joined = first.join(second)
                if joined is not None and not joined.is_trivial() \
                        and joined not in systems:
                    systems.add(joined)
                    found.append(joined)
        frontier = found
    for system in systems:
        assert system.is_invariant(G.generators), system
    return sorted(systems, key=lambda s: (s.block_size, s.blocks))


def _subgroup(group_perms, degree):
    perms = list(group_perms) or [SymPermutation(list(range(degree)))]
    return PermutationGroup(perms)


def _symmetric_normal_subgroups(G):
    n = G.degree
    trivial = NormalSubgroup(order=1, generators=(), abelian=True)
    alternating = NormalSubgroup(
        order=factorial(n) // 2,
        generators=tuple(Permutation.from_cycles(n, (0, 1, k))
                         for k in range(2, n)),
        abelian=False,
    )
    whole = NormalSubgroup(order=G.order, generators=G.generators,
                           abelian=False)
    if G.is_symmetric():
        return (trivial, alternating, whole)
    return (trivial, whole)


class ClassAlgebra:
    """Conjugacy classes of an enumerated group, as index sets.

    Normal subgroups are unions of classes, so they are represented by the
    frozenset of class ids they contain.
    """

    def __init__(self, G):
        self.degree = G.degree
        self.images = [g.images for g in G.elements]
        self.index = {images: i for i, images in enumerate(self.images)}
        self.classes = self._classes(G.generators)
        self.class_of = {}
        for label, members in enumerate(self.classes):
            for i in members:
                self.class_of[i] = label
        self.identity = self.class_of[self.index[tuple(range(self.degree))]]
        self._products = {}

    def _classes(self, generators):
        conjugators = [(g.inverse().images, g.images) for g in generators]
        seen = set()
        classes = []
        for start in range(len(self.images)):
            if start in seen:
                continue
            seen.add(start)
            members = [start]
            for i in members:
                x = self.images[i]
                for inverse, g in conjugators:
                    j = self.index[tuple(g[x[k]] for k in inverse)]
                    if j not in seen:
                        seen.add(j)
                        members.append(j)
            classes.append(tuple(members))
        return classes

    def size(self, label):
        return len(self.classes[label])

    def representative(self, label):
        return Permutation(self.images[self.classes[label][0]])

    def products(self, a, b):
        """Class ids met by the products C_a * C_b."""
        key = (a, b)
        if key not in self._products:
            # C_a * C_b is a union of classes; one side may be fixed to a
            # representative.
            if self.size(a) <= self.size(b):
                y = self.images[self.classes[b][0]]
                met = {self.class_of[self.index[tuple(y[k] for k in
                                                      self.images[i])]]
                       for i in self.classes[a]}
            else:
                x = self.images[self.classes[a][0]]
                met = {self.class_of[self.index[tuple(self.images[j][k]
                                                      for k in x)]]
                       for j in self.classes[b]}
            self._products[key] = frozenset(met)
        return self._products[key]

    def closure(self, generating):
        """Class ids of the normal subgroup generated by classes."""
        members = {self.identity, *generating}
        frontier = list(members)
        while frontier:
            grown = []
            for b in frontier:
                for a in generating:
                    for c in self.products(b, a):
                        if c not in members:
                            members.add(c)
                            grown.append(c)
            frontier = grown
        return frozenset(members)

    def order(self, labels):
        return sum(self.size(label) for label in labels)


def normal_subgroups(G):
    """Normal subgroups as joins of normal closures of conjugacy classes.

    Declines above the enumeration cap. Symmetric and alternating groups of
    degree at least 5 use their known lattice.
    """
    if G.order > G.enumeration_cap:
        logger.info('normal subgroups declined: order %d above cap %d',
                    G.order, G.enumeration_cap)
        return NormalSubgroupListing(declined=True)
    if G.degree >= 5 and (G.is_symmetric() or G.is_alternating()):
        return NormalSubgroupListing(_symmetric_normal_subgroups(G))

    algebra = ClassAlgebra(G)
    closures = {}
    for label in range(len(algebra.classes)):
        if label != algebra.identity:
            closures.setdefault(algebra.closure((label,)), (label,))

    trivial = frozenset({algebra.identity})
    found = {trivial: ()}
    frontier = [trivial]
    while frontier:
        grown = []
        for members in frontier:
            for closure, generating in closures.items():
                if closure <= members:
                    continue
                joined_generating = tuple(sorted(
                    set(found[members]) | set(generating)))
                joined = algebra.closure(joined_generating)
                if joined not in found:
                    found[joined] = joined_generating
                    grown.append(joined)
        frontier = grown
    logger.debug('%d conjugacy classes, %d normal subgroups',
                 len(algebra.classes), len(found))

    subgroups = [_normal_descriptor(G, algebra, members, generating)
                 for members, generating in found.items()]
    return NormalSubgroupListing(tuple(sorted(subgroups,
                                              key=lambda s: s.order)))


def _normal_descriptor(G, algebra, members, generating):
    order = algebra.order(members)
    if not generating:
        return NormalSubgroup(order=1, generators=(), abelian=True)
    closure = G.group.normal_closure(
        [algebra.representative(label).to_sympy() for label in generating])
    generators = tuple(Permutation.from_sympy(g, G.degree)
                       for g in closure.generators if not g.is_Identity)
    return NormalSubgroup(order=order, generators=generators,
                          abelian=bool(closure.is_abelian))


def block_kernel(G, system):
    """Kernel of the action of G on the blocks of ``system``.

    Returns None when the elements are not enumerable.
    """
    elements = G.elements
    if elements is None:
        return None
    block_of = system.block_of
    members = [g for g in elements
               if all(block_of[g(i)] == block_of[i] for i in range(G.degree))]
    generators = []
    kernel = _subgroup([], G.degree)
    for g in members:
        if kernel.order() == len(members):
            break
        perm = g.to_sympy()
        if not kernel.contains(perm):
            generators.append(perm)
            kernel = _subgroup(generators, G.degree)
    return NormalSubgroup(
        order=len(members),
        generators=tuple(Permutation.from_sympy(g, G.degree)
                         for g in generators),
        abelian=bool(kernel.is_abelian),
    )


def block_action(G, system):
    """The permutations induced by the generators on the blocks."""
    block_of = system.block_of
    return tuple(
        Permutation(tuple(block_of[g(block[0])] for block in system.blocks))
        for g in G.generators
    )

import numpy as np
from django.test import SimpleTestCase

from core.blaschke import random_blaschke
from core.composition import compose
from core.exceptions import NotAFactorizationError
from core.models import BlaschkeProduct, MobiusAuto
from factorization.inverse import branch_partition, equivalent, fit_mobius
from factorization.models import Factorization
from factorization.synthesis import factorize_all
from monodromy.group import monodromy_group


def sample_factorization(inner, system, outer=None):
    return Factorization(outer=outer or BlaschkeProduct.monomial(2),
                         inner=inner, source_system=system, residual=0.0)


class BranchPartitionTests(SimpleTestCase):

    def setUp(self):
        self.B = BlaschkeProduct.monomial(4)
        self.M = monodromy_group(self.B)

    def test_square_groups_opposite_branches(self):
        system = branch_partition(self.B, self.M,
                                  BlaschkeProduct.monomial(2))

        self.assertEqual(system.block_size, 2)
        for i, j in system.blocks:
            self.assertAlmostEqual(self.M.base_fiber[i],
                                   -self.M.base_fiber[j], places=12)

    def test_degree_must_divide(self):
        with self.assertRaises(NotAFactorizationError):
            branch_partition(self.B, self.M, BlaschkeProduct.monomial(3))

    def test_unrelated_inner_rejected(self):
        with self.assertRaises(NotAFactorizationError):
            branch_partition(self.B, self.M, random_blaschke(2, rng=8))


class FitMobiusTests(SimpleTestCase):

    def test_exact_fractional_linear_map(self):
        u = 0.5 * np.exp(2j * np.pi * np.arange(12) / 12)
        v = (2 * u + 0.3) / (0.1j * u + 1)

        (alpha, beta, gamma), misfit = fit_mobius(u, v)

        self.assertAlmostEqual(alpha, 2, places=10)
        self.assertAlmostEqual(beta, 0.3, places=10)
        self.assertAlmostEqual(gamma, 0.1j, places=10)
        self.assertLess(misfit, 1e-12)

    def test_non_mobius_data_misfits(self):
        u = 0.5 * np.exp(2j * np.pi * np.arange(12) / 12)

        _, misfit = fit_mobius(u, u ** 3)

        self.assertGreater(misfit, 1e-3)


class EquivalentTests(SimpleTestCase):

    def test_distinct_systems_are_inequivalent(self):
        first, second = factorize_all(BlaschkeProduct.monomial(6))

        self.assertFalse(equivalent(first, second))

    def test_gauge_variants_are_equivalent(self):
        found, = factorize_all(BlaschkeProduct.monomial(4))
        moved = compose(MobiusAuto(a=0.2, rot=1j), found.inner)

        self.assertTrue(equivalent(
            found, sample_factorization(moved, found.source_system)))

    def test_unrelated_inners_in_one_system_are_not_equivalent(self):
        found, = factorize_all(BlaschkeProduct.monomial(4))
        other = sample_factorization(random_blaschke(2, rng=9),
                                     found.source_system)

        with self.assertLogs('factorization.inverse', 'WARNING'):
            self.assertFalse(equivalent(found, other))

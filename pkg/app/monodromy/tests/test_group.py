import os

from django.test import SimpleTestCase

from core.blaschke import random_blaschke
from core.composition import compose
from core.exceptions import PreconditionError
from core.models import BlaschkeProduct
from core.polyroots import critical_data
from monodromy.group import monodromy_group
from monodromy.permgroup import all_block_systems, generate, is_transitive
from monodromy.serializers import MonodromySerializer

CORPUS = int(os.environ.get('BLASCHKE_TEST_CORPUS', '5'))


class MonomialMonodromyTests(SimpleTestCase):

    def test_square(self):
        result = monodromy_group(BlaschkeProduct.monomial(2))

        self.assertEqual(result.punctures, (0j,))
        self.assertEqual(str(result.generators[0]), '(1 2)')

    def test_fourth_power_is_cyclic(self):
        result = monodromy_group(BlaschkeProduct.monomial(4))
        G = generate(result.generators, 4)

        self.assertEqual(result.generators[0].cycle_count(), 1)
        self.assertEqual(G.order, 4)
        self.assertTrue(G.is_abelian)

    def test_sixth_power_order(self):
        result = monodromy_group(BlaschkeProduct.monomial(6))

        self.assertEqual(generate(result.generators, 6).order, 6)

    def test_degree_one_rejected(self):
        with self.assertRaises(PreconditionError):
            monodromy_group(BlaschkeProduct(1.0, (0.3,)))


class RandomMonodromyTests(SimpleTestCase):

    def test_structural_invariants(self):
        for n in (3, 4, 6):
            for seed in range(CORPUS):
                with self.subTest(degree=n, seed=seed):
                    result = monodromy_group(
                        random_blaschke(n, rng=700 + 10 * n + seed))
                    G = generate(result.generators, n)

                    self.assertTrue(is_transitive(G))
                    self.assertEqual(result.branching_total(), n - 1)
                    self.assertEqual(result.boundary_product().cycle_count(),
                                     1)
                    self.assertEqual(len(result.generators),
                                     len(result.punctures))

    def test_halving_step_changes_nothing(self):
        B = random_blaschke(5, rng=77)

        coarse = monodromy_group(B)
        fine = monodromy_group(B, max_step=0.01)

        self.assertEqual(coarse.generators, fine.generators)

    def test_composition_is_imprimitive(self):
        B = compose(random_blaschke(2, rng=81), random_blaschke(3, rng=82))

        result = monodromy_group(B)
        systems = all_block_systems(generate(result.generators, 6))

        self.assertTrue(any(s.block_size == 3 for s in systems))


class CorpusTests(SimpleTestCase):
    """Seeded random products of every degree from 2 to 8."""

    def test_branching_and_boundary_cycle(self):
        for n in range(2, 9):
            for seed in range(CORPUS):
                with self.subTest(degree=n, seed=seed):
                    B = random_blaschke(n, rng=100000 * n + seed)
                    critical = critical_data(B)
                    result = monodromy_group(B, critical=critical)

                    self.assertEqual(critical.count, n - 1)
                    self.assertEqual(result.branching_total(), n - 1)
                    self.assertEqual(result.boundary_product().cycle_count(),
                                     1)
                    self.assertTrue(
                        is_transitive(generate(result.generators, n)))

    def test_prime_degrees_have_no_block_systems(self):
        for n in (5, 7):
            for seed in range(CORPUS):
                with self.subTest(degree=n, seed=seed):
                    result = monodromy_group(
                        random_blaschke(n, rng=100000 * n + seed))

                    self.assertEqual(
                        all_block_systems(generate(result.generators, n)),
                        [])


class MonodromySerializerTests(SimpleTestCase):

    def test_representation(self):
        data = MonodromySerializer(
            monodromy_group(BlaschkeProduct.monomial(3))).data

        self.assertEqual(data['generators'][0]['images'], [1, 2, 0]
                         if data['generators'][0]['cycles'] == '(1 2 3)'
                         else [2, 0, 1])
        self.assertEqual(data['boundary_product'],
                         data['generators'][0]['cycles'])
        self.assertEqual(data['branching_total'], 2)
        self.assertEqual(len(data['base_fiber']), 3)

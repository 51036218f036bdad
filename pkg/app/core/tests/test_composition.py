import numpy as np
from django.test import SimpleTestCase

from core.blaschke import evaluate, random_blaschke, values
from core.composition import (compose, match_lambda, normalize_to_zero,
                              precompose, rotate_argument)
from core.exceptions import CompositionError
from core.models import BlaschkeProduct, MobiusAuto
from core.tests.helpers import agree


def sample_points(count, seed=2):
    rng = np.random.default_rng(seed)
    r = 0.9 * np.sqrt(rng.uniform(0, 1, count))
    return r * np.exp(2j * np.pi * rng.uniform(0, 1, count))


class ComposeTests(SimpleTestCase):

    def test_squares_compose_to_fourth_power(self):
        square = BlaschkeProduct.monomial(2)

        B = compose(square, square)

        self.assertEqual(B.zeros, (0j,) * 4)
        self.assertAlmostEqual(B.lam, 1, places=14)

    def test_cube_of_square(self):
        B = compose(BlaschkeProduct.monomial(3), BlaschkeProduct.monomial(2))

        self.assertEqual(B.degree, 6)
        self.assertTrue(B.is_monomial())

    def test_composition_agrees_pointwise(self):
        outer = random_blaschke(2, rng=1)
        inner = random_blaschke(3, rng=2)
        z = sample_points(100)

        B = compose(outer, inner)

        self.assertEqual(B.degree, 6)
        self.assertLess(agree(B, lambda p: values(outer, values(inner, p)),
                              z), 1e-9)

    def test_associativity(self):
        A, B, C = (random_blaschke(2, rng=seed) for seed in (3, 4, 5))
        z = sample_points(50)

        left = compose(compose(A, B), C)
        right = compose(A, compose(B, C))

        self.assertEqual(left.degree, 8)
        self.assertLess(agree(left, right, z), 1e-8)

    def test_compose_with_automorphism(self):
        m = MobiusAuto(a=0.2 - 0.1j, rot=1j)
        B = random_blaschke(3, rng=6)

        composed = precompose(B, m)

        z = sample_points(20)
        self.assertLess(agree(composed, lambda p: values(B, m(p)), z), 1e-9)

    def test_lambda_mismatch_is_an_error(self):
        with self.assertRaises(CompositionError):
            match_lambda([0.5], lambda z: 2 * z)


class NormalizeTests(SimpleTestCase):

    def test_already_normalized(self):
        B = BlaschkeProduct(1j, (0j, 0.4))

        Bn, m = normalize_to_zero(B)

        self.assertIs(Bn, B)
        self.assertTrue(m.is_identity())

    def test_single_factor_becomes_rotation(self):
        B = BlaschkeProduct(1.0, (0.4,))

        Bn, m = normalize_to_zero(B)

        self.assertEqual(Bn.zeros, (0j,))
        self.assertAlmostEqual(abs(Bn.lam), 1, places=12)
        self.assertEqual(m.rot, 1)

    def test_random_product_normalizes(self):
        B = random_blaschke(4, rng=9)
        z = sample_points(50)

        Bn, m = normalize_to_zero(B)

        self.assertLessEqual(abs(evaluate(Bn, 0j)[0]), 1e-12)
        self.assertLess(agree(lambda p: m.inverse()(values(Bn, p)), B, z),
                        1e-10)


class RotateArgumentTests(SimpleTestCase):

    def test_rotation_of_variable(self):
        B = random_blaschke(3, rng=10)
        s = np.exp(0.9j)
        z = sample_points(30)

        rotated = rotate_argument(B, s)

        self.assertLess(agree(rotated, lambda p: values(B, s * p), z),
                        1e-12)

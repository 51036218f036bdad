import os

import numpy as np
from django.test import SimpleTestCase

from core.blaschke import (evaluate, evaluate_array, random_blaschke,
                           residual, to_rational, values, verification_grid)
from core.exceptions import DomainError
from core.models import BlaschkeProduct

CORPUS = int(os.environ.get('BLASCHKE_TEST_CORPUS', '5'))


def sample_product(lam=1j, zeros=(0.5, -0.5j)):
    return BlaschkeProduct(lam=lam, zeros=zeros)


def sample_points(count, radius=0.95, seed=1):
    rng = np.random.default_rng(seed)
    r = radius * np.sqrt(rng.uniform(0, 1, count))
    return r * np.exp(2j * np.pi * rng.uniform(0, 1, count))


class EvaluateTests(SimpleTestCase):

    def test_monomial_value_and_derivative(self):
        value, derivative = evaluate(BlaschkeProduct.monomial(2), 0.5)

        self.assertAlmostEqual(value, 0.25, places=15)
        self.assertAlmostEqual(derivative, 1.0, places=15)

    def test_derivative_at_simple_zero(self):
        value, derivative = evaluate(BlaschkeProduct(1.0, (0.3,)), 0.3)

        self.assertEqual(value, 0)
        self.assertAlmostEqual(derivative, 1 / (1 - 0.09), places=14)

    def test_derivative_matches_central_difference(self):
        B = sample_product()
        z, h = 0.2 + 0.1j, 1e-6

        _, derivative = evaluate(B, z)
        difference = (evaluate(B, z + h)[0] - evaluate(B, z - h)[0]) / (2 * h)

        self.assertLess(abs(derivative - difference), 1e-7)

    def test_derivative_relative_error_on_random_products(self):
        h = 1e-6
        for seed in range(CORPUS):
            B = random_blaschke(4, rng=seed)
            z = sample_points(100, radius=0.9, seed=seed)
            _, derivative = evaluate_array(B, z)
            difference = (values(B, z + h) - values(B, z - h)) / (2 * h)
            relative = np.abs(derivative - difference) / \
                np.maximum(np.abs(derivative), 1e-3)
            self.assertLess(float(relative.max()), 1e-6)

    def test_maximum_modulus(self):
        B = random_blaschke(5, rng=3)
        inside = values(B, sample_points(1000, radius=0.999))
        angles = np.random.default_rng(4).uniform(0, 2 * np.pi, 1000)
        boundary = values(B, np.exp(1j * angles))

        self.assertTrue(np.all(np.abs(inside) < 1))
        self.assertLess(float(np.max(np.abs(np.abs(boundary) - 1))), 1e-9)

    def test_outside_closed_disk_rejected(self):
        with self.assertRaises(DomainError):
            evaluate(sample_product(), 1.1)


class RationalFormTests(SimpleTestCase):

    def test_monomial_coefficients(self):
        pair = to_rational(BlaschkeProduct.monomial(2))

        self.assertEqual(pair.P, (0j, 0j, 1 + 0j))
        self.assertEqual(pair.Q, (1 + 0j, 0j, 0j))

    def test_single_factor_coefficients(self):
        pair = to_rational(BlaschkeProduct(1.0, (0.5,)))

        self.assertEqual(pair.P, (-0.5 + 0j, 1 + 0j))
        self.assertEqual(pair.Q, (1 + 0j, -0.5 + 0j))

    def test_rational_form_matches_product(self):
        B = random_blaschke(6, rng=7)
        pair = to_rational(B)
        z = sample_points(20)

        self.assertEqual(pair.Q[0], 1)
        self.assertLess(float(np.max(np.abs(pair(z) - values(B, z)))),
                        1e-10)

    def test_reflection_symmetry_of_coefficients(self):
        B = random_blaschke(5, rng=8)
        pair = to_rational(B)
        # Q(z) = lambda z^n conj(P(1 / conj z)), coefficientwise
        reflected = np.conj(np.array(pair.P))[::-1] * B.lam

        self.assertLess(float(np.max(np.abs(reflected -
                                            np.array(pair.Q)))), 1e-10)


class GridTests(SimpleTestCase):

    def test_grid_size_and_radius(self):
        grid = verification_grid(200, seed=0)

        self.assertEqual(len(grid), 200)
        self.assertLessEqual(float(np.max(np.abs(grid))), 0.95)
        self.assertEqual(int(np.sum(np.isclose(np.abs(grid), 0.6))), 50)

    def test_grid_is_seeded(self):
        np.testing.assert_array_equal(verification_grid(200, seed=3),
                                      verification_grid(200, seed=3))

    def test_residual_of_exact_composition(self):
        B = BlaschkeProduct.monomial(6)
        outer = BlaschkeProduct.monomial(3)
        inner = BlaschkeProduct.monomial(2)

        self.assertLess(residual(B, outer, inner), 1e-14)
        self.assertGreater(residual(B, inner, inner), 1e-3)


class RandomProductTests(SimpleTestCase):

    def test_zeros_within_radius(self):
        B = random_blaschke(8, rng=11, radius=0.5)

        self.assertEqual(B.degree, 8)
        self.assertTrue(all(abs(a) <= 0.5 for a in B.zeros))

    def test_seed_reproduces_product(self):
        self.assertEqual(random_blaschke(4, rng=2), random_blaschke(4, rng=2))

    def test_radius_must_lie_in_unit_interval(self):
        with self.assertRaises(DomainError):
            random_blaschke(3, radius=1.0)

import cmath

import numpy as np
from django.test import SimpleTestCase

from core.blaschke import random_blaschke, values
from core.exceptions import ContinuationError
from core.models import BlaschkeProduct
from core.polyroots import fiber
from monodromy.continuation import continue_fiber, match_fiber, min_separation


def sample_circle(radius=1e-2, steps=32):
    return [radius * cmath.exp(2j * cmath.pi * k / steps)
            for k in range(steps + 1)]


class ContinueFiberTests(SimpleTestCase):

    def test_constant_path_keeps_fiber(self):
        B = BlaschkeProduct.monomial(2)
        start = fiber(B, 0.3)

        self.assertEqual(continue_fiber(B, [0.3, 0.3], start), start)

    def test_square_swaps_around_origin(self):
        B = BlaschkeProduct.monomial(2)
        path = sample_circle()
        start = fiber(B, path[0])

        end = continue_fiber(B, path, start)

        self.assertEqual(match_fiber(end, start), (1, 0))

    def test_cube_cycles_around_origin(self):
        B = BlaschkeProduct.monomial(3)
        path = sample_circle()
        start = fiber(B, path[0])

        images = match_fiber(continue_fiber(B, path, start), start)

        self.assertTrue(all(images[i] != i for i in range(3)))
        self.assertEqual([images[images[images[i]]] for i in range(3)],
                         [0, 1, 2])

    def test_segment_lands_on_target_fiber(self):
        B = random_blaschke(5, rng=61)
        start = fiber(B, 0.05)

        end = np.array(continue_fiber(B, [0.05, 0.05 + 0.2j], start))

        self.assertLess(float(np.max(np.abs(values(B, end) - (0.05 + 0.2j)))),
                        1e-12)
        self.assertGreater(min_separation(end), 1e-6)

    def test_collapsed_fiber_raises(self):
        B = BlaschkeProduct.monomial(2)

        with self.assertRaises(ContinuationError):
            continue_fiber(B, [0.1, 0.2], [0.3, 0.3])


class MatchFiberTests(SimpleTestCase):

    def test_identity_match(self):
        self.assertEqual(match_fiber([0.01, 1.01], [0, 1]), (0, 1))

    def test_far_point_is_ambiguous(self):
        with self.assertRaises(ContinuationError):
            match_fiber([0.5, 1.0], [0, 1])

    def test_double_match_rejected(self):
        with self.assertRaises(ContinuationError):
            match_fiber([0.0, 0.01], [0, 1])

    def test_min_separation_of_single_point(self):
        self.assertEqual(min_separation([0.2]), float('inf'))

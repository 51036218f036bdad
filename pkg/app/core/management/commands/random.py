import math
from functools import reduce

import numpy as np
from django.core.management.base import CommandError

from core.blaschke import random_blaschke
from core.composition import compose
from core.management.base import BlaschkeCommand
from core.serializers import BlaschkeProductSerializer


class Command(BlaschkeCommand):
    help = 'Write a seeded random product, or a seeded composition of ' \
        'random factors of the given degrees.'
    json_flag = False

    def add_arguments(self, parser):
        parser.add_argument('--degree', type=int)
        parser.add_argument('--factors', type=int, nargs='+',
                            help='Degrees of B_1, B_2, ... in B_1 o B_2 o ...')
        parser.add_argument('--radius', type=float,
                            help='Zeros are drawn from |z| <= radius.')
        parser.add_argument('-o', '--output', help='Output file.')
        super().add_arguments(parser)

    def run(self, *args, **options):
        degree, factors = options['degree'], options['factors']
        if factors is None:
            if degree is None:
                raise CommandError('give --degree or --factors',
                                   returncode=1)
            factors = [degree]
        if any(d < 1 for d in factors):
            raise CommandError('degrees must be positive', returncode=1)
        if degree is not None and degree != math.prod(factors):
            raise CommandError(
                f'--degree {degree} does not match --factors '
                f'{" ".join(map(str, factors))}',
                returncode=1,
            )

        rng = np.random.default_rng(self.tol.seed)
        parts = [random_blaschke(d, rng, options['radius'], self.tol)
                 for d in factors]
        product = reduce(lambda inner, outer: compose(outer, inner,
                                                      self.tol),
                         reversed(parts))
        self.write_json(BlaschkeProductSerializer(product).data,
                        options['output'])

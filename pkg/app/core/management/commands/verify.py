from django.core.management.base import CommandError

from core.blaschke import residual
from core.management.base import BlaschkeCommand


class Command(BlaschkeCommand):
    help = 'Check B = outer o inner on the verification grid.'

    def add_arguments(self, parser):
        parser.add_argument('product')
        parser.add_argument('outer')
        parser.add_argument('inner')
        super().add_arguments(parser)

    def run(self, *args, **options):
        B = self.read_product(options['product'])
        outer = self.read_product(options['outer'])
        inner = self.read_product(options['inner'])
        achieved = residual(B, outer, inner, self.grid, self.tol)
        passed = outer.degree * inner.degree == B.degree and \
            achieved <= self.tol.residual
        if options['as_json']:
            self.write_json({
                'residual': achieved,
                'tolerance': self.tol.residual,
                'passed': passed,
            })
        elif passed:
            self.stdout.write(self.style.SUCCESS(
                f'PASS residual {achieved:.3g} <= {self.tol.residual:.3g}'
            ))
        if not passed:
            raise CommandError(
                f'FAIL residual {achieved:.3g} (bound '
                f'{self.tol.residual:.3g})',
                returncode=2,
            )

from core.management.base import BlaschkeCommand
from factorization.serializers import FactorizationSerializer
from factorization.synthesis import synthesize


class Command(BlaschkeCommand):
    help = 'List the nontrivial factorizations B = J o b of a product.'

    def add_arguments(self, parser):
        parser.add_argument('file', help="Product JSON file, or '-'.")
        super().add_arguments(parser)

    def run(self, *args, **options):
        B = self.read_product(options['file'])
        factorizations, failures = synthesize(B, tol=self.tol,
                                              grid=self.grid)
        for failure in failures:
            self.stderr.write(
                f'block system {failure.source_system.one_indexed()}: '
                f'{failure.message}'
            )
        if options['as_json']:
            self.write_json(
                FactorizationSerializer(factorizations, many=True).data
            )
            return
        if not factorizations:
            self.stdout.write('No nontrivial factorization')
        for f in factorizations:
            self.stdout.write(self.style.SUCCESS(
                f'{f.degrees[0]} o {f.degrees[1]}: blocks '
                f'{f.source_system.one_indexed()}, residual {f.residual:.3g}'
            ))
            self.stdout.write(f'  inner zeros: {list(f.inner.zeros)}')
            self.stdout.write(f'  outer zeros: {list(f.outer.zeros)}, '
                              f'lambda {f.outer.lam}')

from core.management.base import BlaschkeCommand
from factorization.reports import analyze
from factorization.serializers import AnalysisReportSerializer


class Command(BlaschkeCommand):
    help = 'Critical data, monodromy group, block systems and every ' \
        'factorization of a Blaschke product.'

    def add_arguments(self, parser):
        parser.add_argument('file', help="Product JSON file, or '-'.")
        super().add_arguments(parser)

    def run(self, *args, **options):
        B = self.read_product(options['file'])
        report = analyze(B, self.tol, self.grid)
        if options['as_json']:
            self.write_json(AnalysisReportSerializer(report).data)
            return

        self.stdout.write(f'Degree {report.degree}, lambda {B.lam:.6g}')
        self.stdout.write(
            f'Critical points: {report.critical.count}, distinct '
            f'critical values: {len(report.critical.critical_values)}'
        )
        for loop, generator in zip(report.monodromy.punctures,
                                   report.monodromy.generators):
            self.stdout.write(f'  around {loop:.6g}: {generator}')
        self.stdout.write(f'Boundary product: {report.boundary_product}')
        self.stdout.write(f'Group order: {report.group_order} '
                          f'(transitive: {report.transitive})')
        orders = report.normal_subgroup_orders
        self.stdout.write('Normal subgroup orders: ' + (
            'declined' if orders is None
            else ', '.join(str(o) for o in orders)))
        for summary in report.block_systems:
            self.stdout.write(
                f'Block system {summary.system.one_indexed()} '
                f'(size {summary.block_size}, kernel order '
                f'{summary.kernel_order})'
            )
        for f in report.factorizations:
            self.stdout.write(self.style.SUCCESS(
                f'Factorization {f.degrees[0]} o {f.degrees[1]}, '
                f'residual {f.residual:.3g}'
            ))
        for failure in report.failures:
            self.stdout.write(self.style.ERROR(
                f'Block system {failure.source_system.one_indexed()} '
                f'failed: {failure.message}'
            ))
        if not report.factorizations:
            self.stdout.write('No nontrivial factorization')

from core.composition import compose
from core.management.base import BlaschkeCommand
from core.serializers import BlaschkeProductSerializer


class Command(BlaschkeCommand):
    help = 'Write the composition outer o inner as product JSON.'
    json_flag = False

    def add_arguments(self, parser):
        parser.add_argument('outer')
        parser.add_argument('inner')
        parser.add_argument('-o', '--output', help='Output file.')
        super().add_arguments(parser)

    def run(self, *args, **options):
        outer = self.read_product(options['outer'])
        inner = self.read_product(options['inner'])
        product = compose(outer, inner, self.tol)
        self.write_json(BlaschkeProductSerializer(product).data,
                        options['output'])

"""Shared plumbing of the management commands: flags, JSON I/O, errors."""
import io
import logging
import sys

from django.core.management.base import BaseCommand, CommandError
from rest_framework.exceptions import ParseError, ValidationError
from rest_framework.parsers import JSONParser
from rest_framework.renderers import JSONRenderer

from core.blaschke import verification_grid
from core.conf import get_tolerances
from core.exceptions import BlaschkeError
from core.serializers import BlaschkeProductSerializer

LOGGER_NAMES = ('core', 'monodromy', 'factorization')
VERBOSITY_LEVELS = {2: logging.INFO, 3: logging.DEBUG}


def flatten_errors(errors, prefix=''):
    """Serializer errors as 'field: message' lines, nested fields dotted."""
    if isinstance(errors, dict):
        lines = []
        for key, value in errors.items():
            name = f'{prefix}.{key}' if prefix else str(key)
            lines.extend(flatten_errors(value, name))
        return lines
    if isinstance(errors, list):
        lines = []
        for value in errors:
            lines.extend(flatten_errors(value, prefix))
        return lines
    return [f'{prefix}: {errors}' if prefix else str(errors)]


class BlaschkeCommand(BaseCommand):
    """Base for commands that read and write Blaschke products as JSON.

    Subclasses implement ``run``; library errors leave as CommandError
    carrying the exit code of the exception.
    """
    json_flag = True

    def add_arguments(self, parser):
        if self.json_flag:
            parser.add_argument('--json', action='store_true',
                                dest='as_json',
                                help='Print the result as JSON.')
        parser.add_argument('--pretty', action='store_true',
                            help='Indent JSON output.')
        parser.add_argument('--tol', type=float,
                            help='Residual bound for factorizations.')
        parser.add_argument('--seed', type=int, help='Random seed.')
        parser.add_argument('--grid', type=int,
                            help='Size of the verification grid.')

    def handle(self, *args, **options):
        level = VERBOSITY_LEVELS.get(options.get('verbosity'))
        if level is not None:
            for name in LOGGER_NAMES:
                logging.getLogger(name).setLevel(level)
        self.pretty = options.get('pretty', False)
        self.tol = get_tolerances().override(
            residual=options.get('tol'),
            seed=options.get('seed'),
            grid=options.get('grid'),
        )
        try:
            self.run(*args, **options)
        except BlaschkeError as exc:
            raise CommandError(str(exc), returncode=exc.exit_code)

    def run(self, *args, **options):
        raise NotImplementedError

    @property
    def grid(self):
        return verification_grid(tol=self.tol)

    def read_product(self, path):
        """Parse and validate a product from a file, or stdin for '-'."""
        try:
            if path == '-':
                stream = io.BytesIO(sys.stdin.read().encode())
                data = JSONParser().parse(stream)
            else:
                with open(path, 'rb') as stream:
                    data = JSONParser().parse(stream)
        except OSError as exc:
            raise CommandError(f'{path}: {exc.strerror}', returncode=1)
        except ParseError as exc:
            raise CommandError(f'{path}: {exc.detail}', returncode=1)
        serializer = BlaschkeProductSerializer(data=data,
                                               context={'tol': self.tol})
        if not serializer.is_valid():
            raise CommandError(
                f'{path}: ' + '; '.join(flatten_errors(serializer.errors)),
                returncode=1,
            )
        try:
            return serializer.save()
        except ValidationError as exc:
            raise CommandError(
                f'{path}: ' + '; '.join(flatten_errors(exc.detail)),
                returncode=1,
            )

    def render(self, data):
        context = {'indent': 2} if self.pretty else None
        return JSONRenderer().render(data, renderer_context=context)

    def write_json(self, data, output=None):
        rendered = self.render(data)
        if output:
            with open(output, 'wb') as stream:
                stream.write(rendered + b'\n')
            self.stdout.write(self.style.SUCCESS(f'Wrote {output}'))
        else:
            self.stdout.write(rendered.decode())

import json
import logging
import sys

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError
from django.test.utils import override_settings

from core.conf import DEFAULTS, budget
from core.exceptions import BudgetExceeded, ConstructionError, InvalidInput, VerificationFailed
from core.serializers import load_job

logger = logging.getLogger(__name__)

EXIT_VERIFICATION_FAILED = 1
EXIT_INVALID_INPUT = 2
EXIT_CONSTRUCTION_ERROR = 3


def read_json(path):
    """Decode a JSON document from a file path, or from stdin for '-'."""
    try:
        if path == '-':
            return json.load(sys.stdin)
        with open(path, encoding='utf-8') as handle:
            return json.load(handle)
    except OSError as exc:
        raise InvalidInput(f'cannot read {path}: {exc}')
    except json.JSONDecodeError as exc:
        raise InvalidInput(f'{path} line {exc.lineno}: {exc.msg}')


def parse_budgets(pairs):
    """KEY=VALUE strings as GQD_HAMILTON overrides."""
    overrides = {}
    for pair in pairs or ():
        key, _, value = pair.partition('=')
        key = key.strip().upper()
        if key not in DEFAULTS:
            raise InvalidInput(f'unknown budget {key!r}; expected one of {", ".join(DEFAULTS)}')
        try:
            overrides[key] = int(value)
        except ValueError:
            raise InvalidInput(f'budget {key} needs an integer value, got {value!r}')
    return overrides


class GqdCommand(BaseCommand):
    """Management command that maps library errors onto exit codes.

    Subclasses implement ``run(**options)`` and list the output formats they
    render in ``formats``, the first being the default.
    """
    formats = ('json',)

    def add_arguments(self, parser):
        parser.add_argument('--format', choices=self.formats, default=None)
        parser.add_argument(
            '--budget', action='append', default=[], metavar='KEY=VALUE',
            help='Override a GQD_HAMILTON bound for this run',
        )
        parser.add_argument('--seed', type=int, default=0, help='Seed for sampling commands')

    def handle(self, *args, **options):
        try:
            self.check_format(options.get('format'))
            overrides = parse_budgets(options.get('budget'))
            current = getattr(settings, 'GQD_HAMILTON', {})
            with override_settings(GQD_HAMILTON={**current, **overrides}):
                self.run(**options)
        except VerificationFailed as exc:
            raise CommandError(f'verification failed: {exc}', returncode=EXIT_VERIFICATION_FAILED)
        except InvalidInput as exc:
            raise CommandError(f'invalid input: {exc}', returncode=EXIT_INVALID_INPUT)
        except (ConstructionError, BudgetExceeded) as exc:
            logger.warning('construction failed: %s', exc)
            raise CommandError(f'construction error: {exc}', returncode=EXIT_CONSTRUCTION_ERROR)

    def check_format(self, fmt):
        if fmt is not None and fmt not in self.formats:
            raise InvalidInput(f'{self.__module__.rsplit(".", 1)[-1]} writes {" or ".join(self.formats)}, not {fmt}')
        return fmt

    def run(self, **options):
        raise NotImplementedError('subclasses of GqdCommand must provide a run() method')

    def write_json(self, payload):
        self.stdout.write(json.dumps(payload, indent=2))


class JobCommand(GqdCommand):
    """A command driven by a JSON job file."""
    job_required = True

    def add_arguments(self, parser):
        parser.add_argument(
            'job', nargs=None if self.job_required else '?',
            help='Path to a JSON job file, or - for stdin',
        )
        parser.add_argument('--radius', type=int, default=None)
        parser.add_argument('--inner-radius', type=int, default=None)
        super().add_arguments(parser)

    def load(self, options):
        job = load_job(read_json(options['job']))
        radius = first_set(options.get('radius'), job.radius, budget('DEFAULT_RADIUS'))
        inner = first_set(options.get('inner_radius'), job.inner_radius, min(budget('DEFAULT_INNER_RADIUS'), radius - 1))
        fmt = self.check_format(options.get('format') or job.format)
        logger.debug('loaded %s (radius %s, inner %s)', job, radius, inner)
        return job, radius, inner, fmt


def first_set(*values):
    return next(v for v in values if v is not None)

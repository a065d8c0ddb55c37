from cayley.graphs import build_window
from core.exceptions import InvalidInput
from core.management.base import JobCommand
from core.serializers import ReportSerializer
from verify.checks import require_pass, verify_circle, verify_ray
from walls.constructions import (
    cylinder_double_ray,
    cylinder_two_rays,
    cylinder_window,
    grid_double_ray,
    grid_two_rays,
    grid_window,
)
from walls.models import CylinderParams


class Command(JobCommand):
    help = 'Verify the ray or circle of a job file, or a wall construction given by --k/--l'
    job_required = False

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--k', type=int, default=None)
        parser.add_argument('--l', type=int, default=None)
        parser.add_argument('--grid', action='store_true')
        parser.add_argument('--construction', choices=['ray', 'circle'], default='ray')
        parser.add_argument('--range', type=int, nargs=2, default=[-40, 40], metavar=('LO', 'HI'))

    def run(self, **options):
        if options['job']:
            report = self.verify_job(options)
        elif options['k'] is not None:
            report = self.verify_wall(options)
        else:
            raise InvalidInput('give a job file or --k')
        self.write_json({'report': ReportSerializer(report).data})
        require_pass(report)

    def verify_job(self, options):
        job, radius, inner, _ = self.load(options)
        window = build_window(job.group, job.genset, radius)
        if job.circle is not None:
            return verify_circle(window, job.circle, inner)
        if job.ray is not None:
            return verify_ray(window, job.ray, inner)
        raise InvalidInput('the job file has neither "ray" nor "circle"')

    def verify_wall(self, options):
        k, l = options['k'], options['l']
        lo, hi = options['range']
        if options['grid']:
            window = grid_window(k, lo, hi)
            ray, circle = grid_double_ray, grid_two_rays
            shape, reach = k, 1
        else:
            if l is None:
                raise InvalidInput('a cylinder needs --l (or pass --grid)')
            params = CylinderParams(k, l)
            window = cylinder_window(params, lo, hi)
            ray, circle = cylinder_double_ray, cylinder_two_rays
            shape, reach = params, max(l, 1)
        inner = options['inner_radius']
        if inner is None:
            inner = min(-lo, hi) - reach
        if options['construction'] == 'circle':
            return verify_circle(window, circle(shape), inner)
        return verify_ray(window, ray(shape), inner)

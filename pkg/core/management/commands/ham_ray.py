from cayley.graphs import build_window, window_to_dot
from core.management.base import JobCommand
from core.serializers import RaySerializer, ReportSerializer
from hamilton.pipeline import hamiltonian_double_ray
from hamilton.rays import edges_within
from verify.checks import group_bound, require_pass, verify_ray


class Command(JobCommand):
    help = 'Construct a Hamiltonian double ray and verify it on a Cayley window'
    formats = ('json', 'dot')

    def run(self, **options):
        job, radius, inner, fmt = self.load(options)
        ray = hamiltonian_double_ray(job.group, job.genset)
        window = build_window(job.group, job.genset, radius)
        report = verify_ray(window, ray, inner)
        if fmt == 'dot':
            bound = group_bound(ray, window.distance)
            self.stdout.write(window_to_dot(window, edges_within(ray, window.contains, bound)))
        else:
            self.write_json({'ray': RaySerializer(ray).data, 'report': ReportSerializer(report).data})
        require_pass(report)

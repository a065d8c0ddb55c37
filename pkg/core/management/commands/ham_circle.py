from cayley.graphs import build_window, window_to_dot
from core.management.base import JobCommand
from core.serializers import CircleSerializer, ReportSerializer
from hamilton.pipeline import hamiltonian_circle
from hamilton.rays import edges_within
from verify.checks import group_bound, require_pass, verify_circle


class Command(JobCommand):
    help = 'Construct a Hamiltonian circle (two double rays) and verify it on a Cayley window'
    formats = ('json', 'dot')

    def run(self, **options):
        job, radius, inner, fmt = self.load(options)
        circle = hamiltonian_circle(job.group, job.genset)
        window = build_window(job.group, job.genset, radius)
        report = verify_circle(window, circle, inner)
        if fmt == 'dot':
            first, second = (
                edges_within(ray, window.contains, group_bound(ray, window.distance)) for ray in circle
            )
            self.stdout.write(window_to_dot(window, first, layers=[second]))
        else:
            self.write_json({'circle': CircleSerializer(circle).data, 'report': ReportSerializer(report).data})
        require_pass(report)

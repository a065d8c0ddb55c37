import math

from cayley.graphs import classify_case
from core.management.base import JobCommand
from gqd.algebra import amalgam_normal_form, is_torsion, order, render_normal_form


def group_summary(job):
    G = job.group
    gens = job.genset.gens
    case = str(classify_case(G, gens)) if len(gens) >= 3 else 'base case (|S| = 2)'
    census = []
    for x in gens:
        n = order(G, x)
        census.append({
            'element': str(x),
            'normal_form': str(render_normal_form(amalgam_normal_form(G, x))),
            'torsion': is_torsion(G, x),
            'order': 'infinite' if n == math.inf else n,
        })
    return {
        'K': str(G.K),
        'invariant_factors': list(G.K.invariant_factors),
        'beta': list(G.beta),
        'order_of_K': G.K.order,
        'kind': 'infinite dihedral' if G.is_infinite_dihedral else 'generalized quasi-dihedral',
        'degree': len(gens),
        'case': case,
        'generators': census,
    }


class Command(JobCommand):
    help = 'Describe the group and generating set of a job file'
    formats = ('json', 'text')

    def run(self, **options):
        job, _, _, fmt = self.load(options)
        summary = group_summary(job)
        if fmt != 'text':
            self.write_json(summary)
            return
        self.stdout.write(f"{summary['kind']}: K = {summary['K']} (order {summary['order_of_K']}), beta = {summary['beta']}")
        self.stdout.write(f"degree {summary['degree']}, {summary['case']}")
        for row in summary['generators']:
            self.stdout.write(f"  {row['element']}  {row['normal_form'] or '1'}  order {row['order']}")

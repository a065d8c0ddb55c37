from faker import Faker

from abelian.arithmetic import k_add, k_enumerate
from abelian.models import FiniteAbelianGroup
from cayley.graphs import make_genset
from core.exceptions import ConstructionError, InvalidInput
from core.management.base import GqdCommand
from gqd.models import GqdGroup

FACTOR_CHOICES = [(), (2,), (3,), (4,), (2, 2), (6,)]
MAX_ATTEMPTS = 200


class Command(GqdCommand):
    help = 'Sample random job files (GQD group plus generating set) from a seed'

    def add_arguments(self, parser):
        parser.add_argument('--count', type=int, default=5)
        parser.add_argument('--command', dest='job_command', default='ham-ray')
        parser.add_argument('--max-generators', type=int, default=3)
        super().add_arguments(parser)

    def create_group(self, fake):
        K = FiniteAbelianGroup(fake.random_element(FACTOR_CHOICES))
        betas = [b for b in k_enumerate(K) if k_add(K, b, b) == K.zero]
        return GqdGroup(K, fake.random_element(betas))

    def create_gens(self, fake, G, max_generators):
        for _ in range(MAX_ATTEMPTS):
            picks = [
                G.element(
                    [fake.random_int(0, n - 1) for n in G.K.invariant_factors],
                    fake.random_int(-2, 2),
                    fake.random_int(0, 1),
                )
                for _ in range(fake.random_int(2, max_generators))
            ]
            try:
                return make_genset(G, picks, symmetric=True).gens
            except InvalidInput:
                continue
        raise ConstructionError(f'no generating set of {G} found in {MAX_ATTEMPTS} attempts')

    def create_job(self, fake, command, max_generators):
        G = self.create_group(fake)
        gens = self.create_gens(fake, G, max_generators)
        return {
            'group': {'invariant_factors': list(G.K.invariant_factors), 'beta': list(G.beta)},
            'gens': [{'k': list(x.k), 'i': x.i, 'eps': x.eps} for x in gens],
            'command': command,
        }

    def run(self, **options):
        fake = Faker()
        fake.seed_instance(options['seed'])
        if options['count'] < 1 or options['max_generators'] < 2:
            raise InvalidInput('--count must be >= 1 and --max-generators >= 2')
        jobs = [
            self.create_job(fake, options['job_command'], options['max_generators'])
            for _ in range(options['count'])
        ]
        self.write_json(jobs)

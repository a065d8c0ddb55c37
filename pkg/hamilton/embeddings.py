"""Pulling wall, grid and cylinder constructions back into Cayley graphs."""
import logging
from math import gcd

from core.exceptions import ConstructionError
from gqd.algebra import inv, mul, power
from hamilton.models import HamCircle
from hamilton.rays import make_ray

logger = logging.getLogger(__name__)


def check_embedding(embedding, periods=3):
    """Edge preservation and injectivity over ``periods`` column periods."""
    G = embedding.group
    window = embedding.window(0, periods * embedding.columns - 1)
    image = {v: embedding.vertex_map(v) for v in window.graph}
    if len(set(image.values())) != len(image):
        raise ConstructionError(f'{embedding} is not injective on {window}')
    gens = set(embedding.gens)
    for u, v in window.graph.edges:
        step = mul(G, inv(G, image[u]), image[v])
        if step not in gens:
            raise ConstructionError(
                f'{embedding}: edge {u} - {v} maps to {image[u]} -> {image[v]}, which is not an edge'
            )
    return True


def pull_back(embedding, coord):
    """The group double ray traced by a coordinate double ray.

    The coordinate motif is repeated until its total shift is a multiple of
    the column period.
    """
    G = embedding.group
    columns = embedding.columns
    repeats = columns // gcd(abs(coord.shift), columns)
    motif = [embedding.vertex_map(v) for v in coord.segment(0, repeats * len(coord) - 1)]
    period = power(G, embedding.period, repeats * coord.shift // columns)
    return make_ray(G, embedding.gens, motif, period)


def assemble_ray(embedding):
    check_embedding(embedding)
    logger.debug('pulling a double ray back through %s', embedding)
    return pull_back(embedding, embedding.coord_ray())


def assemble_circle(embedding):
    check_embedding(embedding)
    first, second = embedding.coord_circle()
    logger.debug('pulling a circle back through %s', embedding)
    return HamCircle(pull_back(embedding, first), pull_back(embedding, second))


grid_assemble = assemble_ray

from core.exceptions import ConstructionError
from gqd.algebra import inv, is_torsion, mul, power
from hamilton.models import GroupDoubleRay


def make_ray(G, gens, motif, period) -> GroupDoubleRay:
    """Build a ray from its vertices, reading the labels off consecutive steps."""
    gens, motif = tuple(gens), tuple(motif)
    if not motif:
        raise ConstructionError('empty motif')
    if is_torsion(G, period):
        raise ConstructionError(f'period {period} has finite order; the ray would close up')
    following = motif[1:] + (mul(G, period, motif[0]),)
    labels = []
    for here, there in zip(motif, following):
        step = mul(G, inv(G, here), there)
        if step not in gens:
            raise ConstructionError(f'{here} -> {there} is not an edge (step {step})')
        labels.append(gens.index(step))
    ray = GroupDoubleRay(G, gens, motif, period, tuple(labels))
    p = len(motif)
    if len(set(ray.segment(-p, 2 * p - 1))) != 3 * p:
        raise ConstructionError(f'{ray} revisits a vertex within three periods')
    return ray


def relabel(ray: GroupDoubleRay, gens) -> GroupDoubleRay:
    """The same vertices with labels indexed in ``gens``."""
    return make_ray(ray.group, gens, ray.motif, ray.period)


def rotate(ray: GroupDoubleRay, shift) -> GroupDoubleRay:
    p = len(ray)
    return make_ray(ray.group, ray.gens, ray.segment(shift, shift + p - 1), ray.period)


def reverse_ray(ray: GroupDoubleRay) -> GroupDoubleRay:
    """n -> -n; the period becomes its inverse."""
    G = ray.group
    p = len(ray)
    return make_ray(G, ray.gens, [ray.vertex(-j) for j in range(p)], inv(G, ray.period))


def translate(ray: GroupDoubleRay, g) -> GroupDoubleRay:
    """Left translate g * ray."""
    G = ray.group
    period = mul(G, mul(G, g, ray.period), inv(G, g))
    return make_ray(G, ray.gens, [mul(G, g, x) for x in ray.motif], period)


def locate_index(ray: GroupDoubleRay, g):
    """The index j with ray.vertex(j) == g, or None."""
    G = ray.group
    sigma = ray.period
    for r, x in enumerate(ray.motif):
        if x.eps != g.eps or (g.i - x.i) % sigma.i:
            continue
        q = (g.i - x.i) // sigma.i
        if mul(G, power(G, sigma, q), x) == g:
            return q * len(ray) + r
    return None


def eps_one_first(ray: GroupDoubleRay) -> GroupDoubleRay:
    """Rotate an alternating ray so that vertex 0 lies outside K<a>."""
    if ray.motif[0].eps == 1:
        return ray
    return rotate(ray, 1)


def edges_within(ray: GroupDoubleRay, contains, bound):
    """Consecutive pairs of ray.segment(-bound, bound) with both ends accepted by ``contains``."""
    vertices = ray.segment(-bound, bound)
    return [(u, v) for u, v in zip(vertices, vertices[1:]) if contains(u) and contains(v)]

import logging
from collections import deque

import networkx as nx

from abelian.arithmetic import lattice_canonicalize, lattice_contains, quotient_cyclic_order
from cayley.models import CaseTag, CayleyWindow, CosetLadder, GenSet
from core.conf import budget
from core.exceptions import BudgetExceeded, ConstructionError, InvalidInput
from gqd.algebra import classify_subgroup, inv, mul, power, symmetrize, whole_lattice
from gqd.models import GqdGroup
from walls.export import graph_to_dot

logger = logging.getLogger(__name__)


def validate_genset(G: GqdGroup, gens) -> GenSet:
    """Check that ``gens`` is already a symmetric generating set of G."""
    gens = list(gens)
    genset = GenSet(G, tuple(gens))
    span = classify_subgroup(G, genset.gens)
    if span.kind != 'gqd' or span.lattice != whole_lattice(G):
        raise InvalidInput(f'the elements {", ".join(map(str, gens))} do not generate {G}')
    return genset


def make_genset(G: GqdGroup, gens, symmetric=False) -> GenSet:
    return validate_genset(G, symmetrize(G, gens) if symmetric else gens)


def build_window(G: GqdGroup, S: GenSet, radius) -> CayleyWindow:
    if radius < 0:
        raise InvalidInput(f'radius must be >= 0, got {radius}')
    limit = budget('WINDOW_VERTEX_BUDGET')
    distance = {G.identity: 0}
    queue = deque([G.identity])
    while queue:
        g = queue.popleft()
        if distance[g] == radius:
            continue
        for s in S.gens:
            h = mul(G, g, s)
            if h not in distance:
                distance[h] = distance[g] + 1
                if len(distance) > limit:
                    logger.warning('Cayley window of radius %s exceeds %s vertices', radius, limit)
                    raise BudgetExceeded('WINDOW_VERTEX_BUDGET', limit)
                queue.append(h)
    graph = nx.DiGraph()
    for g in sorted(distance):
        graph.add_node(g, distance=distance[g])
    for g in sorted(distance):
        for label, s in enumerate(S.gens):
            h = mul(G, g, s)
            if h in distance:
                graph.add_edge(g, h, label=label)
    return CayleyWindow(G, S, radius, graph, distance)


def window_to_dot(window: CayleyWindow, highlight=(), layers=()) -> str:
    """DOT text of the window; edges in ``highlight`` and ``layers`` are drawn bold."""
    undirected = nx.Graph()
    for g in window.graph.nodes:
        undirected.add_node(g)
    for g, h, data in window.graph.edges(data=True):
        if not undirected.has_edge(g, h):
            undirected.add_edge(g, h, label=str(data['label']))
    return graph_to_dot(undirected, highlight, layers)


def choose_pivot(G: GqdGroup, S):
    """First s whose removal (with s^-1) leaves a generating set of an infinite group."""
    gens = list(S)
    for s in gens:
        rest = [x for x in gens if x not in (s, inv(G, s))]
        if len({x.i for x in rest}) >= 2:
            return s, rest[0]
    raise ConstructionError(
        'no pivot: removing any generator pair leaves a finite group'
    )


def classify_case(G: GqdGroup, S) -> CaseTag:
    gens = list(S)
    if len(gens) < 3:
        raise InvalidInput('case analysis needs at least three generators')
    outside = tuple(x for x in gens if x.eps == 1)
    inside = tuple(x for x in gens if x.eps == 0)
    if not inside:
        try:
            pivot, companion = choose_pivot(G, gens)
        except ConstructionError:
            logger.info('no pivot among %s', ', '.join(map(str, gens)))
            pivot = companion = None
        return CaseTag('case1', outside, inside, pivot, companion)
    lattice = lattice_canonicalize(G.K, [x.kz for x in inside])
    kind = 'case2i' if lattice.is_finite else 'case2ii'
    return CaseTag(kind, outside, inside)


def coset_ladder(G: GqdGroup, S, s, t) -> CosetLadder:
    gens = list(S)
    rest = [x for x in gens if x not in (s, inv(G, s))]
    if t not in rest:
        raise InvalidInput(f'companion {t} must be a generator other than the pivot pair')
    h_prime = lattice_canonicalize(G.K, [mul(G, t, x).kz for x in rest])
    ambient = classify_subgroup(G, gens).lattice
    ts = mul(G, t, s)
    m = quotient_cyclic_order(h_prime, ts.kz, ambient) - 1
    logger.debug('ladder H\'=%s, ts=%s, m=%s', h_prime, ts, m)
    return CosetLadder(h_prime, ambient, m, ts, s, t)


def coset_of(G: GqdGroup, ladder: CosetLadder, g):
    """(l, side) with g in H'(ts)^l, or in H'(ts)^l t when side is 1."""
    for ell in range(ladder.m + 1):
        rep = power(G, ladder.ts, ell)
        if g.eps:
            rep = mul(G, rep, ladder.companion)
        if lattice_contains(ladder.h_prime, mul(G, g, inv(G, rep)).kz):
            return ell, g.eps
    raise ConstructionError(f'{g} lies in none of the {ladder.m + 1} ladder cosets')

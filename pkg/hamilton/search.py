"""Backtracking searches: finite Hamiltonian paths and lifted periodic cycles.

A Hamiltonian cycle of the quotient of Cay(G, S) by left translation with a
non-torsion sigma, whose lift closes up at sigma^v * start, lifts to a
periodic double ray (|v| = 1) or to a pair of translate rays forming a
Hamiltonian circle (|v| = 2).
"""
import logging
from collections import deque

import networkx as nx

from abelian.arithmetic import k_scale, k_sub
from core.conf import budget
from core.exceptions import BudgetExceeded, ConstructionError, InvalidInput
from gqd.algebra import classify_subgroup, inv, mul, power
from gqd.models import GqdElem
from hamilton.models import HamCircle
from hamilton.rays import make_ray, translate

logger = logging.getLogger(__name__)


def hamiltonian_path(graph: nx.Graph, start) -> list:
    """Hamiltonian path of a finite graph from ``start``; fewest-exits-first branching."""
    total = graph.number_of_nodes()
    bound = budget('FINITE_PATH_BOUND')
    if total > bound:
        raise BudgetExceeded('FINITE_PATH_BOUND', bound, f'{total} vertices exceed the path bound {bound}')
    if not nx.is_connected(graph):
        raise ConstructionError('the graph is disconnected; no Hamiltonian path exists')
    limit = budget('SEARCH_NODE_BUDGET')
    path, visited = [start], {start}
    expanded = 0

    def exits(v):
        return sum(1 for w in graph[v] if w not in visited)

    def extend():
        nonlocal expanded
        if len(path) == total:
            return True
        expanded += 1
        if expanded > limit:
            logger.warning('finite path search stopped after %s expansions', limit)
            raise BudgetExceeded('SEARCH_NODE_BUDGET', limit)
        options = sorted((w for w in graph[path[-1]] if w not in visited), key=lambda w: (exits(w), w))
        for w in options:
            path.append(w)
            visited.add(w)
            if extend():
                return True
            path.pop()
            visited.discard(w)
        return False

    if not extend():
        raise ConstructionError(f'no Hamiltonian path from {start} in a graph of {total} vertices')
    logger.debug('Hamiltonian path on %s vertices after %s expansions', total, expanded)
    return path


def finite_ham_path(G, vertices, gens) -> list[GqdElem]:
    """Hamiltonian path from the identity of the finite Cayley graph on ``vertices``."""
    vertices = sorted(set(vertices))
    members = set(vertices)
    if G.identity not in members:
        raise InvalidInput('the vertex set must contain the identity')
    graph = nx.Graph()
    graph.add_nodes_from(vertices)
    for g in vertices:
        for s in gens:
            h = mul(G, g, s)
            if h not in members:
                raise InvalidInput(f'{g} * {s} = {h} leaves the vertex set')
            if h != g:
                graph.add_edge(g, h)
    return hamiltonian_path(graph, G.identity)


def _orbit_key(G, base, g) -> GqdElem:
    """Representative of the orbit of g under left translation by <base>."""
    q = g.i // base.i
    return GqdElem(k_sub(G.K, g.k, k_scale(G.K, base.k, q)), g.i - q * base.i, g.eps)


def lifted_cycle_search(G, gens, sigma, voltages, allowed=None):
    """Search a lifted Hamiltonian cycle of <gens>/<sigma> starting at the identity.

    Returns (vertices, v) where the last vertex times some allowed generator
    is sigma^v times the identity and v is in ``voltages``; None when the
    search is exhausted. ``allowed(g)`` restricts the generators leaving g.
    """
    gens = tuple(gens)
    allowed = allowed or (lambda g: gens)
    base = sigma if sigma.i > 0 else inv(G, sigma)
    start = G.identity
    seen = {_orbit_key(G, base, start)}
    queue = deque(seen)
    bound = budget('FINITE_PATH_BOUND')
    while queue:
        key = queue.popleft()
        for s in gens:
            nxt = _orbit_key(G, base, mul(G, key, s))
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > bound:
                    raise BudgetExceeded('FINITE_PATH_BOUND', bound, f'quotient by {sigma} exceeds {bound} vertices')
                queue.append(nxt)
    total = len(seen)
    limit = budget('SEARCH_NODE_BUDGET')
    path, used = [start], {_orbit_key(G, base, start)}
    expanded = 0

    def closing():
        for s in allowed(path[-1]):
            end = mul(G, path[-1], s)
            if end.eps != start.eps or _orbit_key(G, base, end) != _orbit_key(G, base, start):
                continue
            w = (end.i - start.i) // base.i
            v = w if base == sigma else -w
            if v in voltages:
                return v
        return None

    def exits(g):
        return sum(1 for s in allowed(g) if _orbit_key(G, base, mul(G, g, s)) not in used)

    def extend():
        nonlocal expanded
        if len(path) == total:
            return closing()
        expanded += 1
        if expanded > limit:
            raise BudgetExceeded('SEARCH_NODE_BUDGET', limit)
        here = path[-1]
        options = [mul(G, here, s) for s in allowed(here)]
        options = sorted(
            {g for g in options if _orbit_key(G, base, g) not in used},
            key=lambda g: (exits(g), g),
        )
        for g in options:
            key = _orbit_key(G, base, g)
            path.append(g)
            used.add(key)
            found = extend()
            if found is not None:
                return found
            path.pop()
            used.discard(key)
        return None

    v = extend()
    logger.debug('lifted search over %s orbits of %s: %s after %s expansions', total, sigma, v, expanded)
    if v is None:
        return None
    return list(path), v


def _period_candidates(G, gens):
    lattice = classify_subgroup(G, gens).lattice
    if lattice.is_finite:
        raise InvalidInput('the generators span a finite subgroup')
    root = G.from_kz(lattice.inf_gen)
    for multiple in range(1, budget('MAX_PERIOD_MULTIPLE') + 1):
        yield power(G, root, multiple)


def _search_periods(G, gens, voltages, allowed=None):
    for sigma in _period_candidates(G, gens):
        try:
            found = lifted_cycle_search(G, gens, sigma, voltages, allowed)
        except BudgetExceeded as exc:
            logger.info('lifted search with period %s gave up: %s', sigma, exc)
            continue
        if found is not None:
            return sigma, found
    return None


def periodic_ray_search(G, gens):
    """Hamiltonian double ray of Cay(<gens>, gens) found by the lifted search."""
    gens = tuple(gens)
    result = _search_periods(G, gens, (1, -1))
    if result is None:
        raise ConstructionError('the lifted periodic search found no Hamiltonian double ray')
    sigma, (path, v) = result
    return make_ray(G, gens, path, power(G, sigma, v))


def periodic_circle_search(G, gens) -> HamCircle:
    """Two translate double rays forming a Hamiltonian circle of Cay(<gens>, gens)."""
    gens = tuple(gens)
    if len(gens) < 3:
        raise InvalidInput(f'degree < 3: a Cayley graph of degree {len(gens)} has no Hamiltonian circle')
    result = _search_periods(G, gens, (2, -2))
    if result is None:
        raise ConstructionError('the lifted periodic search found no Hamiltonian circle')
    sigma, (path, v) = result
    first = make_ray(G, gens, path, power(G, sigma, v))
    return HamCircle(first, translate(first, sigma))

"""Hamiltonian double rays and circles by recursion on the generating set.

Every internal step takes a symmetric set ``gens`` of elements of G and works
in the subgroup it generates, which must be two-ended. Elements keep their
coordinates in G throughout the recursion.
"""
import logging
from collections import deque

import networkx as nx

from abelian.arithmetic import lattice_canonicalize, lattice_coset_rep, quotient_cyclic_order
from cayley.graphs import classify_case, coset_ladder, make_genset
from cayley.models import GenSet
from core.conf import budget
from core.exceptions import BudgetExceeded, ConstructionError, InvalidInput
from gqd.algebra import classify_subgroup, inv, is_torsion, mul, power, product
from gqd.models import GqdElem, GqdGroup
from hamilton.embeddings import assemble_circle, assemble_ray, grid_assemble
from hamilton.models import CylinderEmbedding, GridEmbedding, HamCircle
from hamilton.rays import eps_one_first, locate_index, make_ray, relabel, reverse_ray
from hamilton.search import (
    finite_ham_path,
    hamiltonian_path,
    lifted_cycle_search,
    periodic_circle_search,
    periodic_ray_search,
)
from walls.models import CylinderParams

logger = logging.getLogger(__name__)


def _guard(G, gens, depth):
    limit = budget('RECURSION_DEPTH_LIMIT')
    if depth > limit:
        raise BudgetExceeded('RECURSION_DEPTH_LIMIT', limit, f'recursion deeper than {limit} levels')
    if not classify_subgroup(G, gens).is_two_ended:
        raise InvalidInput(f'<{", ".join(map(str, gens))}> is finite, not two-ended')


def _without(G, gens, s):
    return tuple(x for x in gens if x not in (s, inv(G, s)))


# Base and abelian rays

def base_ray(G: GqdGroup, gens):
    """|S| = 2: two involutions outside K<a>, or {g, g^-1} with g of infinite order."""
    gens = tuple(gens)
    if len(gens) != 2:
        raise InvalidInput(f'the base case needs two generators, got {len(gens)}')
    x, y = gens
    if x.eps == y.eps == 1 and inv(G, x) == x and inv(G, y) == y:
        period = mul(G, x, y)
        if is_torsion(G, period):
            raise InvalidInput(f'{x} and {y} generate a finite dihedral group')
        return make_ray(G, gens, (G.identity, x), period)
    if x.eps == 0 and y == inv(G, x):
        if is_torsion(G, x):
            raise InvalidInput(f'{x} has finite order')
        return make_ray(G, gens, (G.identity,), x)
    raise InvalidInput(f'{x} and {y} do not generate a two-ended group')


def abelian_double_ray(G: GqdGroup, gens, depth=0):
    """Hamiltonian double ray of a two-ended subgroup of K<a>.

    s* is the first generator of infinite order and M the span of the others.
    For finite M the rows are the cosets s*^n M, each traced by a finite
    Hamiltonian path; otherwise the rows are the translates s*^m R_M of a
    recursive double ray of M.
    """
    gens = tuple(gens)
    _guard(G, gens, depth)
    if any(x.eps for x in gens):
        raise InvalidInput('abelian_double_ray needs elements of K<a>')
    star = next(x for x in gens if x.i != 0)
    rest = _without(G, gens, star)
    if not rest:
        return make_ray(G, gens, (G.identity,), star)
    span = lattice_canonicalize(G.K, [x.kz for x in rest])
    if span.is_finite:
        path = finite_ham_path(G, [GqdElem(f, 0, 0) for f in span.finite_part], rest)
        embedding = GridEmbedding(
            G, gens, len(path), 1, star,
            lambda n, m: mul(G, power(G, star, n), path[m]),
        )
    else:
        inner = abelian_double_ray(G, rest, depth + 1)
        whole = lattice_canonicalize(G.K, [x.kz for x in gens])
        height = quotient_cyclic_order(span, star.kz, whole)
        embedding = GridEmbedding(
            G, gens, height, len(inner), inner.period,
            lambda n, m: mul(G, power(G, star, m), inner.vertex(n)),
        )
    logger.debug('abelian rows: %s', embedding)
    return grid_assemble(embedding)


# Case 1: S avoids K<a>

def next_row(G: GqdGroup, row, s):
    """The row across the s-rungs, built from 6-cycles g, gt1, gt1t2, gt1t2s, gst2, gs.

    Vertices of ``row`` outside K<a> move to g*s; each vertex inside K<a>
    between them becomes g*s*t2.
    """
    p = len(row)
    for n in range(p):
        if row.vertex(n).eps == row.vertex(n + 1).eps:
            raise ConstructionError(f'{row} does not alternate between the cosets at index {n}')
    motif = []
    for n in range(p):
        here = row.vertex(n)
        if here.eps == 1:
            motif.append(mul(G, here, s))
        else:
            step = mul(G, inv(G, here), row.vertex(n + 1))
            motif.append(product(G, row.vertex(n - 1), s, step))
    return make_ray(G, row.gens, motif, row.period)


def build_rows(G: GqdGroup, gens, base, ladder):
    rows = [relabel(base, gens)]
    for _ in range(ladder.m):
        rows.append(next_row(G, rows[-1], ladder.pivot))
    return rows


def measure_twist(G: GqdGroup, rows, s):
    """Offset l with R_m[n] * s = R_0[n + l] at the rungs of the top row; None if it varies."""
    top, bottom = rows[-1], rows[0]
    offsets = set()
    for n in range(len(top)):
        v = top.vertex(n)
        if v.eps != 1:
            continue
        index = locate_index(bottom, mul(G, v, s))
        if index is None:
            raise ConstructionError(f'{v} * {s} does not lie on the bottom row')
        offsets.add(index - n)
    if len(offsets) != 1:
        logger.debug('twist offsets %s are not uniform', sorted(offsets))
        return None
    return offsets.pop()


def matched_base_row(G: GqdGroup, rest, ladder):
    """A base row leaving every vertex outside K<a> by one generator c.

    Its rows are translates of each other, so the twist is uniform. The
    period is (c^-1 s)^(m+1).
    """
    s = ladder.pivot
    candidates = [ladder.companion] + [c for c in rest if c != ladder.companion]
    for c in candidates:
        if c.i == s.i:
            continue
        sigma = power(G, mul(G, inv(G, c), s), ladder.m + 1)
        try:
            found = lifted_cycle_search(G, rest, sigma, (1, -1), lambda g, c=c: (c,) if g.eps else rest)
        except BudgetExceeded as exc:
            logger.info('matched row search for %s gave up: %s', c, exc)
            continue
        if found is not None:
            path, v = found
            logger.debug('matched base row leaving by %s', c)
            return make_ray(G, rest, path, power(G, sigma, v))
    return None


def _cylinder_from_base(G, gens, ladder, base):
    current = eps_one_first(base)
    for _ in range(2):
        try:
            rows = build_rows(G, gens, current, ladder)
            twist = measure_twist(G, rows, ladder.pivot)
        except ConstructionError as exc:
            logger.info('rows above the base row do not close up: %s', exc)
            return None
        if twist is None:
            return None
        if twist >= 0:
            if (len(rows) + twist) % 2:
                logger.info('twist %s has the wrong parity for %s rows', twist, len(rows))
                return None
            logger.info('Case 1 cylinder: %s rows, twist %s', len(rows), twist)
            return CylinderEmbedding(G, tuple(gens), CylinderParams(len(rows), twist), tuple(rows))
        current = reverse_ray(current)
    logger.info('reversing the base row did not flip the twist')
    return None


def case1_cylinder(G: GqdGroup, gens, ladder, depth=0):
    """The twisted cylinder whose rows are the ladder cosets; None if no uniform twist is found."""
    rest = _without(G, gens, ladder.pivot)
    base = _double_ray(G, rest, depth + 1)
    cylinder = _cylinder_from_base(G, gens, ladder, base)
    if cylinder is not None:
        return cylinder
    logger.info('recursive base row has a non-uniform twist; searching a matched base row')
    base = matched_base_row(G, rest, ladder)
    if base is None:
        return None
    return _cylinder_from_base(G, gens, ladder, base)


def _case1_setup(G, gens):
    tag = classify_case(G, gens)
    if tag.pivot is None:
        logger.info('no pivot among %s generators; using the lifted periodic search', len(gens))
        return None
    ladder = coset_ladder(G, gens, tag.pivot, tag.companion)
    logger.debug('pivot %s, companion %s, ladder height %s', tag.pivot, tag.companion, ladder.m)
    return ladder


def case1_ray(G: GqdGroup, gens, depth=0):
    gens = tuple(gens)
    ladder = _case1_setup(G, gens)
    if ladder is None:
        return periodic_ray_search(G, gens)
    if ladder.m == 0:
        return relabel(_double_ray(G, _without(G, gens, ladder.pivot), depth + 1), gens)
    cylinder = case1_cylinder(G, gens, ladder, depth)
    if cylinder is None:
        logger.info('no uniform twist; using the lifted periodic search')
        return periodic_ray_search(G, gens)
    return assemble_ray(cylinder)


def case1_circle(G: GqdGroup, gens, depth=0):
    gens = tuple(gens)
    ladder = _case1_setup(G, gens)
    if ladder is None:
        return periodic_circle_search(G, gens)
    if ladder.m == 0:
        rest = _without(G, gens, ladder.pivot)
        if len(rest) < 3:
            return periodic_circle_search(G, gens)
        circle = _circle(G, rest, depth + 1)
        return HamCircle(relabel(circle.first, gens), relabel(circle.second, gens))
    cylinder = case1_cylinder(G, gens, ladder, depth)
    if cylinder is None:
        return periodic_circle_search(G, gens)
    try:
        return assemble_circle(cylinder)
    except ConstructionError as exc:
        logger.info('cylinder circle unavailable (%s); using the lifted periodic search', exc)
        return periodic_circle_search(G, gens)


# Case 2: S meets K<a>

def _split(gens):
    return tuple(x for x in gens if x.eps), tuple(x for x in gens if not x.eps)


def case2i_grid(G: GqdGroup, gens, depth=0) -> GridEmbedding:
    """Columns follow a double ray of G/F, F = <S2> finite; each column is a coset gF."""
    outside, inside = _split(gens)
    finite = lattice_canonicalize(G.K, [x.kz for x in inside])
    if not finite.is_finite:
        raise InvalidInput('case 2i needs <S2> finite')
    quotient = GqdGroup(G.K.quotient(finite.finite_part), G.beta)
    lifts = {}
    for x in outside:
        lifts.setdefault(GqdElem(quotient.K.reduce(x.k), x.i, 1), x)
    logger.debug('quotient %s with %s generators', quotient, len(lifts))
    qray = _double_ray(quotient, tuple(lifts), depth + 1)
    start = qray.motif[0]
    cols = [GqdElem(G.K.reduce(start.k), start.i, start.eps)]
    for label in qray.labels:
        cols.append(mul(G, cols[-1], lifts[qray.gens[label]]))
    tau = mul(G, cols.pop(), inv(G, cols[0]))
    path = finite_ham_path(G, [GqdElem(f, 0, 0) for f in finite.finite_part], inside)

    def cell(n, m):
        q, r = divmod(n, len(cols))
        g = mul(G, power(G, tau, q), cols[r])
        return mul(G, g, path[m] if g.eps == 0 else inv(G, path[m]))

    return GridEmbedding(G, tuple(gens), len(path), len(cols), tau, cell)


def case2ii_grid(G: GqdGroup, gens, depth=0) -> GridEmbedding:
    """Rows g_m * R over a Hamiltonian path of the finite quotient by H' = <S2>."""
    outside, inside = _split(gens)
    h_prime = lattice_canonicalize(G.K, [x.kz for x in inside])
    row = abelian_double_ray(G, inside, depth + 1)

    def key(g):
        return lattice_coset_rep(h_prime, g.kz)[0], g.eps

    graph = nx.Graph()
    seen = {key(G.identity): G.identity}
    queue = deque([G.identity])
    while queue:
        g = queue.popleft()
        for s in outside:
            h = mul(G, g, s)
            if key(h) not in seen:
                seen[key(h)] = h
                queue.append(h)
            graph.add_edge(key(g), key(h))
    order = hamiltonian_path(graph, key(G.identity))
    rows = [G.identity]
    for target in order[1:]:
        step = next(s for s in outside if key(mul(G, rows[-1], s)) == target)
        rows.append(mul(G, rows[-1], step))
    logger.debug('quotient by H\' has %s cosets', len(rows))

    def cell(n, m):
        r = row.vertex(n)
        g = rows[m]
        return mul(G, g, r if g.eps == 0 else inv(G, r))

    return GridEmbedding(G, tuple(gens), len(rows), len(row), row.period, cell)


def case2i_ray(G: GqdGroup, gens, depth=0):
    return grid_assemble(case2i_grid(G, gens, depth))


def case2ii_ray(G: GqdGroup, gens, depth=0):
    return grid_assemble(case2ii_grid(G, gens, depth))


# Dispatch

def _double_ray(G, gens, depth=0):
    gens = tuple(gens)
    _guard(G, gens, depth)
    if all(x.eps == 0 for x in gens):
        return abelian_double_ray(G, gens, depth)
    if len(gens) == 2:
        return base_ray(G, gens)
    tag = classify_case(G, gens)
    logger.debug('depth %s: %s', depth, tag)
    if tag.kind == 'case1':
        return case1_ray(G, gens, depth)
    if tag.kind == 'case2i':
        return case2i_ray(G, gens, depth)
    return case2ii_ray(G, gens, depth)


def _circle(G, gens, depth=0):
    gens = tuple(gens)
    if len(gens) < 3:
        raise InvalidInput(f'degree < 3: a Cayley graph of degree {len(gens)} has no Hamiltonian circle')
    _guard(G, gens, depth)
    if all(x.eps == 0 for x in gens):
        return periodic_circle_search(G, gens)
    tag = classify_case(G, gens)
    logger.debug('depth %s: %s', depth, tag)
    if tag.kind == 'case1':
        return case1_circle(G, gens, depth)
    if tag.kind == 'case2i':
        return assemble_circle(case2i_grid(G, gens, depth))
    return assemble_circle(case2ii_grid(G, gens, depth))


def _genset(G, S) -> GenSet:
    return S if isinstance(S, GenSet) else make_genset(G, S)


def hamiltonian_double_ray(G: GqdGroup, S):
    genset = _genset(G, S)
    ray = _double_ray(G, genset.gens)
    logger.info('Hamiltonian double ray for %s: %s', G, ray)
    return ray


def hamiltonian_circle(G: GqdGroup, S) -> HamCircle:
    genset = _genset(G, S)
    if len(genset) < 3:
        raise InvalidInput(f'degree < 3: a Cayley graph of degree {len(genset)} has no Hamiltonian circle')
    circle = _circle(G, genset.gens)
    logger.info('Hamiltonian circle for %s: %s', G, circle)
    return circle

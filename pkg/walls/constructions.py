"""Walls W_k, grids P_h x Z and twisted cubic cylinders, with their Hamiltonian
double rays and circles.

Conventions: vertex (n, m) has column n and row m. The straight edge
(n, m)-(n, m+1) exists iff n = m (mod 2) and m + 1 < k. In the cylinder of
twist l the top row is closed by twisted edges (n, k-1)-(n+l, 0) for
n = k-1 (mod 2).
"""
import logging
from dataclasses import dataclass
from math import gcd

import networkx as nx

from core.exceptions import ConstructionError, InvalidInput
from walls.models import CoordDoubleRay, CylinderParams, WallVertex, WallWindow

logger = logging.getLogger(__name__)

V = WallVertex


def _check_range(n_lo, n_hi):
    if n_lo > n_hi:
        raise InvalidInput(f'empty column range [{n_lo}, {n_hi}]')


def _add_rows(graph, height, n_lo, n_hi):
    for n in range(n_lo, n_hi + 1):
        for m in range(height):
            graph.add_node(V(n, m))
            if n < n_hi:
                graph.add_edge(V(n, m), V(n + 1, m), kind='horizontal')


def wall_window(k, n_lo, n_hi) -> WallWindow:
    if k < 1:
        raise InvalidInput(f'wall height must be >= 1, got {k}')
    _check_range(n_lo, n_hi)
    graph = nx.Graph()
    _add_rows(graph, k, n_lo, n_hi)
    for n in range(n_lo, n_hi + 1):
        for m in range(k - 1):
            if (n - m) % 2 == 0:
                graph.add_edge(V(n, m), V(n, m + 1), kind='straight')
    return WallWindow(k, n_lo, n_hi, graph)


def cylinder_window(p: CylinderParams, n_lo, n_hi) -> WallWindow:
    window = wall_window(p.k, n_lo, n_hi)
    for n in range(n_lo, n_hi + 1 - p.l):
        if (n - (p.k - 1)) % 2 == 0:
            window.graph.add_edge(V(n, p.k - 1), V(n + p.l, 0), kind='twisted')
    window.params = p
    window.kind = 'cylinder'
    return window


def grid_window(height, n_lo, n_hi) -> WallWindow:
    """P_height x Z: every column is a full vertical path."""
    if height < 1:
        raise InvalidInput(f'grid height must be >= 1, got {height}')
    _check_range(n_lo, n_hi)
    graph = nx.Graph()
    _add_rows(graph, height, n_lo, n_hi)
    for n in range(n_lo, n_hi + 1):
        for m in range(height - 1):
            graph.add_edge(V(n, m), V(n, m + 1), kind='straight')
    return WallWindow(height, n_lo, n_hi, graph, kind='grid')


# Named subpaths

def _snake_from(k, right_end, width, leftward):
    """Row-by-row sweep of a width-column block, climbing one row at a time.

    Leftward snakes enter at the block's right end (rows alternate left/right);
    rightward snakes enter at the left end.
    """
    left = right_end - width + 1
    path = []
    for m in range(k):
        cols = range(left, right_end + 1)
        go_left = (m % 2 == 0) == leftward
        path.extend(V(n, m) for n in (reversed(cols) if go_left else cols))
    return path


def snake(p: CylinderParams, i, two_j) -> list[WallVertex]:
    """S_{i,2j}: the Hamiltonian path of block B_{i,2j} entering at (2i+1, 0).

    For even k the block is columns 2i+1 .. 2i+2j and the path ends at
    (2i+1, k-1); for odd k it is 2i+2-2j .. 2i+1, ending at (2i+2-2j, k-1).
    """
    if two_j < 2 or two_j % 2:
        raise InvalidInput(f'snake length must be even and >= 2, got {two_j}')
    c = 2 * i + 1
    if p.k % 2 == 0:
        return _snake_from(p.k, c + two_j - 1, two_j, leftward=False)
    return _snake_from(p.k, c, two_j, leftward=True)


def column(p: CylinderParams, i) -> list[WallVertex]:
    return snake(p, i, 2)


def block(p: CylinderParams, i, two_j) -> set[WallVertex]:
    return set(snake(p, i, two_j))


def staircase(p: CylinderParams, i) -> list[WallVertex]:
    c = 2 * i + 1
    path = []
    for m in range(p.k):
        path.extend([V(c + m, m), V(c + m + 1, m)])
    return path


def staircase_ray(p: CylinderParams, r) -> CoordDoubleRay:
    """Staircases r, r + (k+l)/2, r + (k+l), ... joined by twisted edges."""
    return CoordDoubleRay(tuple(staircase(p, r)), p.k + p.l)


# Re-parameterization W(k, l) -> W((k+l)/2, (3k-l)/2)

@dataclass(frozen=True)
class CylinderIso:
    """Sends the staircase double ray D_r onto row r of the target cylinder."""
    source: CylinderParams
    target: CylinderParams

    def forward(self, v) -> WallVertex:
        n, m = v
        k, half = self.source.k, self.target.k
        i = (n - m - 1) // 2
        q = 2 * m + (n - m - 1 - 2 * i)
        r = i % half
        j = (i - r) // half
        return V(2 * k * j + q + r + 1, r)

    def inverse(self, v) -> WallVertex:
        n, r = v
        k, half = self.source.k, self.target.k
        j, q = divmod(n - r - 1, 2 * k)
        i = r + j * half
        m = q // 2
        return V(2 * i + 1 + m + q % 2, m)

    def pull_back(self, ray: CoordDoubleRay) -> CoordDoubleRay:
        """A target double ray as a source double ray.

        A target shift of 2k columns is a source shift of k + l, so the motif
        is repeated until its total shift is a multiple of 2k.
        """
        period = 2 * self.source.k
        repeats = period // gcd(abs(ray.shift), period)
        vertices = ray.segment(0, repeats * len(ray) - 1)
        shift = repeats * ray.shift // period * (self.source.k + self.source.l)
        return CoordDoubleRay(tuple(self.inverse(v) for v in vertices), shift)


def cylinder_iso(p: CylinderParams) -> CylinderIso:
    half, other = (p.k + p.l) // 2, 3 * p.k - p.l
    if half < 2:
        raise InvalidInput(f'{p} maps to height {half}; the target needs height >= 2')
    if other < 0:
        raise InvalidInput(f'{p} maps to a negative twist')
    return CylinderIso(p, CylinderParams(half, other // 2))


def cylinder_iso_inverse(p: CylinderParams):
    return cylinder_iso(p).inverse


def iso_preserves_window(p: CylinderParams, n_lo, n_hi) -> bool:
    """Check edge preservation and reflection of cylinder_iso on a window."""
    iso = cylinder_iso(p)
    source = cylinder_window(p, n_lo, n_hi).graph
    image = {v: iso.forward(v) for v in source}
    if len(set(image.values())) != len(image):
        return False
    cols = [v.n for v in image.values()]
    target = cylinder_window(iso.target, min(cols), max(cols)).graph
    for u, v in source.edges:
        if not target.has_edge(image[u], image[v]):
            return False
    back = {w: v for v, w in image.items()}
    for u, v in target.subgraph(back).edges:
        if not source.has_edge(back[u], back[v]):
            return False
    return True


# Hamiltonian constructions

def _chain(k, l, starts, widths, leftward=True):
    """Concatenate snakes joined by twisted edges; returns (vertices, shift).

    Each snake ends in the top row at a column c and the next one enters
    at c + l.
    """
    path = []
    entry = starts
    for width in widths:
        if leftward:
            piece = _snake_from(k, entry, width, leftward=True)
        else:
            piece = _snake_from(k, entry + width - 1, width, leftward=False)
        path.extend(piece)
        entry = piece[-1].n + l
    return path, entry - starts


def _ladder_ray():
    return CoordDoubleRay((V(0, 0), V(0, 1), V(1, 1), V(1, 0)), 2)


def cylinder_double_ray(p: CylinderParams) -> CoordDoubleRay:
    k, l = p.k, p.l
    if (k, l) == (2, 0):
        # W(2,0) is the ladder; the re-parameterization would need height 1.
        return _ladder_ray()
    if l <= 1:
        iso = cylinder_iso(p)
        logger.debug('%s routed through %s', p, iso.target)
        return iso.pull_back(cylinder_double_ray(iso.target))
    if k % 2 == 0:
        path, shift = _chain(k, l, 1, [l], leftward=False)
    else:
        path, shift = _chain(k, l, 1, [2, l - 1])
    return CoordDoubleRay(tuple(path), shift)


def cylinder_two_rays(p: CylinderParams) -> tuple[CoordDoubleRay, CoordDoubleRay]:
    k, l = p.k, p.l
    if k == 2:
        return CoordDoubleRay((V(0, 0),), 1), CoordDoubleRay((V(0, 1),), 1)
    if k % 2 and l == 3:
        # W(3,3) is its own re-parameterization; use width-2 rightward snakes.
        first, shift = _chain(k, l, 1, [l - 1], leftward=False)
        second, _ = _chain(k, l, 1 + l - 1, [l - 1], leftward=False)
        return CoordDoubleRay(tuple(first), shift), CoordDoubleRay(tuple(second), shift)
    if l <= 3:
        iso = cylinder_iso(p)
        if iso.target == p:
            raise ConstructionError(f'{p} is a fixed point of the re-parameterization')
        logger.debug('%s routed through %s', p, iso.target)
        return tuple(iso.pull_back(ray) for ray in cylinder_two_rays(iso.target))
    if k % 2 == 0:
        first, shift = _chain(k, l, 1, [2], leftward=False)
        second, _ = _chain(k, l, 3, [l - 2], leftward=False)
    else:
        first, shift = _chain(k, l, 1, [2, 2, l - 3])
        second, _ = _chain(k, l, l - 2, [l - 3, 2, 2])
    return CoordDoubleRay(tuple(first), shift), CoordDoubleRay(tuple(second), shift)


def grid_double_ray(height) -> CoordDoubleRay:
    if height < 1:
        raise InvalidInput(f'grid height must be >= 1, got {height}')
    if height == 1:
        return CoordDoubleRay((V(0, 0),), 1)
    up = [V(0, m) for m in range(height)]
    down = [V(1, m) for m in reversed(range(height))]
    return CoordDoubleRay(tuple(up + down), 2)


def grid_two_rays(height) -> tuple[CoordDoubleRay, CoordDoubleRay]:
    if height < 2:
        raise InvalidInput('a Hamiltonian circle of a grid needs height >= 2')
    rest = grid_double_ray(height - 1)
    lifted = CoordDoubleRay(tuple(V(v.n, v.m + 1) for v in rest.motif), rest.shift)
    return CoordDoubleRay((V(0, 0),), 1), lifted

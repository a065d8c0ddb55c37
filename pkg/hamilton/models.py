from dataclasses import dataclass
from typing import Callable

from core.exceptions import InvalidInput
from gqd.algebra import mul, power
from gqd.models import GqdElem, GqdGroup
from walls.constructions import (
    cylinder_double_ray,
    cylinder_two_rays,
    cylinder_window,
    grid_double_ray,
    grid_two_rays,
    grid_window,
)
from walls.models import CylinderParams


@dataclass(frozen=True)
class GroupDoubleRay:
    """A periodic double ray in Cay(G, S).

    Vertex q*p + r is period^q * motif[r]; ``labels[r]`` is the index in
    ``gens`` of the edge leaving vertex r, the last one closing onto
    period * motif[0].
    """
    group: GqdGroup
    gens: tuple[GqdElem, ...]
    motif: tuple[GqdElem, ...]
    period: GqdElem
    labels: tuple[int, ...]

    def __post_init__(self):
        if not self.motif:
            raise InvalidInput('a double ray needs a non-empty motif')
        if len(self.labels) != len(self.motif):
            raise InvalidInput(f'{len(self.motif)} motif vertices but {len(self.labels)} labels')

    def __len__(self):
        return len(self.motif)

    def __str__(self):
        return f'double ray p={len(self.motif)} period {self.period}'

    def vertex(self, index) -> GqdElem:
        q, r = divmod(index, len(self.motif))
        return mul(self.group, power(self.group, self.period, q), self.motif[r])

    def segment(self, lo, hi) -> list[GqdElem]:
        return [self.vertex(j) for j in range(lo, hi + 1)]

    def label(self, index) -> int:
        return self.labels[index % len(self.labels)]


@dataclass(frozen=True)
class HamCircle:
    first: GroupDoubleRay
    second: GroupDoubleRay

    def __iter__(self):
        return iter((self.first, self.second))

    def __str__(self):
        return f'circle [{self.first}] + [{self.second}]'


@dataclass(frozen=True)
class GridEmbedding:
    """P_height x Z inside Cay(G, S): (n, m) -> cell(n, m).

    cell(n + columns, m) = period * cell(n, m) for every n and m.
    """
    group: GqdGroup
    gens: tuple[GqdElem, ...]
    height: int
    columns: int
    period: GqdElem
    cell: Callable[[int, int], GqdElem]

    def __str__(self):
        return f'grid embedding h={self.height} columns={self.columns}'

    def vertex_map(self, v) -> GqdElem:
        return self.cell(v[0], v[1])

    def window(self, n_lo, n_hi):
        return grid_window(self.height, n_lo, n_hi)

    def coord_ray(self):
        return grid_double_ray(self.height)

    def coord_circle(self):
        return grid_two_rays(self.height)


@dataclass(frozen=True)
class CylinderEmbedding:
    """A twisted cylinder whose row m is the double ray rows[m]."""
    group: GqdGroup
    gens: tuple[GqdElem, ...]
    params: CylinderParams
    rows: tuple[GroupDoubleRay, ...]

    def __str__(self):
        return f'cylinder embedding {self.params} columns={self.columns}'

    @property
    def height(self):
        return self.params.k

    @property
    def columns(self):
        return len(self.rows[0])

    @property
    def period(self):
        return self.rows[0].period

    def vertex_map(self, v) -> GqdElem:
        return self.rows[v[1]].vertex(v[0])

    def window(self, n_lo, n_hi):
        return cylinder_window(self.params, n_lo, n_hi)

    def coord_ray(self):
        return cylinder_double_ray(self.params)

    def coord_circle(self):
        return cylinder_two_rays(self.params)

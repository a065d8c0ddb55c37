from dataclasses import dataclass
from typing import NamedTuple, Optional

import networkx as nx

from core.exceptions import InvalidInput


class WallVertex(NamedTuple):
    n: int
    m: int

    def __str__(self):
        return f'{self.n},{self.m}'

    def shifted(self, dn):
        return WallVertex(self.n + dn, self.m)


@dataclass(frozen=True)
class CylinderParams:
    k: int
    l: int

    def __post_init__(self):
        if self.k < 2 or self.l < 0:
            raise InvalidInput(f'cylinder needs k >= 2 and l >= 0, got k={self.k}, l={self.l}')
        if (self.k + self.l) % 2:
            raise InvalidInput(f'k + l must be even, got k={self.k}, l={self.l}')

    def __str__(self):
        return f'W({self.k},{self.l})'

    @property
    def half_sum(self):
        return (self.k + self.l) // 2


@dataclass(frozen=True)
class CoordDoubleRay:
    """motif repeated forever, each repetition shifted by ``shift`` columns."""
    motif: tuple[WallVertex, ...]
    shift: int

    def __post_init__(self):
        if not self.motif:
            raise InvalidInput('a double ray needs a non-empty motif')
        if self.shift == 0:
            raise InvalidInput('a double ray must move: shift 0 given')
        object.__setattr__(self, 'motif', tuple(WallVertex(*v) for v in self.motif))

    def __len__(self):
        return len(self.motif)

    def vertex(self, index) -> WallVertex:
        q, r = divmod(index, len(self.motif))
        return self.motif[r].shifted(q * self.shift)

    def segment(self, lo, hi) -> list[WallVertex]:
        return [self.vertex(j) for j in range(lo, hi + 1)]

    def translated(self, dn) -> 'CoordDoubleRay':
        return CoordDoubleRay(tuple(v.shifted(dn) for v in self.motif), self.shift)


@dataclass
class WallWindow:
    """Finite piece n_lo <= n <= n_hi of a wall, grid or twisted cylinder.

    Edges of ``graph`` carry ``kind``: horizontal, straight or twisted.
    """
    height: int
    n_lo: int
    n_hi: int
    graph: nx.Graph
    params: Optional[CylinderParams] = None
    kind: str = 'wall'

    def __str__(self):
        return f'{self.kind} window h={self.height} n in [{self.n_lo}, {self.n_hi}]'

    def contains(self, v) -> bool:
        return self.n_lo <= v[0] <= self.n_hi and 0 <= v[1] < self.height

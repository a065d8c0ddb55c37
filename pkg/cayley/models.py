from dataclasses import dataclass, field
from typing import Optional

import networkx as nx

from abelian.models import LatticeSubgroup
from core.exceptions import InvalidInput
from gqd.algebra import inv
from gqd.models import GqdElem, GqdGroup


@dataclass(frozen=True)
class GenSet:
    """A symmetric generating set; labels are positions in ``gens``."""
    group: GqdGroup
    gens: tuple[GqdElem, ...]

    def __post_init__(self):
        gens = tuple(self.gens)
        object.__setattr__(self, 'gens', gens)
        if len(set(gens)) != len(gens):
            raise InvalidInput('generating set has repeated elements')
        if self.group.identity in gens:
            raise InvalidInput('generating set contains the identity')
        missing = [str(x) for x in gens if inv(self.group, x) not in gens]
        if missing:
            raise InvalidInput(f'generating set is not symmetric; inverses missing for {", ".join(missing)}')

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def index(self, x) -> int:
        return self.gens.index(x)


@dataclass
class CayleyWindow:
    """The ball of the given radius around the identity.

    ``graph`` is a DiGraph with an arc g -> g*s labelled by the index of s;
    ``distance`` holds word lengths.
    """
    group: GqdGroup
    gens: GenSet
    radius: int
    graph: nx.DiGraph
    distance: dict = field(default_factory=dict)

    def __str__(self):
        return f'Cayley window r={self.radius} |V|={self.graph.number_of_nodes()}'

    def contains(self, g) -> bool:
        return g in self.distance

    def ball(self, radius) -> list[GqdElem]:
        return [g for g, d in self.distance.items() if d <= radius]


@dataclass(frozen=True)
class CaseTag:
    kind: str  # 'case1', 'case2i' or 'case2ii'
    outside: tuple[GqdElem, ...] = ()
    inside: tuple[GqdElem, ...] = ()
    pivot: Optional[GqdElem] = None
    companion: Optional[GqdElem] = None

    def __str__(self):
        if self.kind == 'case1':
            return f'case1 (pivot {self.pivot}, companion {self.companion})'
        return f'{self.kind} (|S1|={len(self.outside)}, |S2|={len(self.inside)})'


@dataclass(frozen=True)
class CosetLadder:
    """K<a> (or the abelian part of <S>) = H' u H'(ts) u ... u H'(ts)^m."""
    h_prime: LatticeSubgroup
    ambient: LatticeSubgroup
    m: int
    ts: GqdElem
    pivot: GqdElem
    companion: GqdElem

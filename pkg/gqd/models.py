from dataclasses import dataclass, field
from typing import Optional

from abelian.models import FiniteAbelianGroup, KElem, KZElem, LatticeSubgroup
from core.exceptions import InvalidInput


@dataclass(frozen=True, order=True)
class GqdElem:
    """k * a^i * b^eps in normal form."""
    k: KElem
    i: int
    eps: int

    def __str__(self):
        k = ','.join(map(str, self.k))
        return f'({k};{self.i};{self.eps})'

    @property
    def kz(self) -> KZElem:
        return KZElem(self.k, self.i)


@dataclass(frozen=True)
class GqdGroup:
    """The two-ended group with abelian part K<a>, b^2 = beta and b inverting K<a>."""
    K: FiniteAbelianGroup
    beta: KElem = None

    def __post_init__(self):
        beta = self.K.zero if self.beta is None else self.K.element(self.beta)
        if self.K.reduce(tuple(2 * c for c in beta)) != self.K.zero:
            raise InvalidInput(f'beta = {beta} does not satisfy 2*beta = 0 in {self.K}')
        object.__setattr__(self, 'beta', beta)

    def __str__(self):
        return f'GQD(K={self.K}, beta={self.beta})'

    def element(self, k=None, i=0, eps=0) -> GqdElem:
        k = self.K.zero if k is None else self.K.element(k)
        if eps not in (0, 1):
            raise InvalidInput(f'eps must be 0 or 1, got {eps}')
        return GqdElem(k, int(i), eps)

    def from_kz(self, x: KZElem, eps=0) -> GqdElem:
        return GqdElem(self.K.reduce(x.k), x.z, eps)

    @property
    def identity(self) -> GqdElem:
        return GqdElem(self.K.zero, 0, 0)

    @property
    def a(self) -> GqdElem:
        return GqdElem(self.K.zero, 1, 0)

    @property
    def b(self) -> GqdElem:
        return GqdElem(self.K.zero, 0, 1)

    @property
    def b_prime(self) -> GqdElem:
        # b' = b^-1 a = beta a^-1 b
        return GqdElem(self.beta, -1, 1)

    @property
    def is_infinite_dihedral(self):
        return self.K.is_trivial and self.beta == self.K.zero


@dataclass(frozen=True)
class Word:
    letters: tuple[str, ...] = ()

    def __str__(self):
        return ' '.join(self.letters)


@dataclass(frozen=True)
class AmalgamNormalForm:
    """x = head * tail[0] * tail[1] * ... with tail alternating over {b, b'}."""
    head: KElem
    tail: tuple[str, ...] = field(default_factory=tuple)


@dataclass(frozen=True)
class SubgroupClass:
    kind: str  # 'abelian' or 'gqd'
    lattice: LatticeSubgroup
    rep: Optional[GqdElem] = None

    @property
    def is_two_ended(self):
        return not self.lattice.is_finite

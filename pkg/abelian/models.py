from dataclasses import dataclass
from math import prod
from typing import Optional

from core.exceptions import InvalidInput

# Elements of K are residue vectors, one coordinate per invariant factor.
KElem = tuple[int, ...]


def _add_raw(factors, x, y):
    return tuple((a + b) % n for a, b, n in zip(x, y, factors))


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Z_{n_1} x ... x Z_{n_t}, optionally taken modulo a subgroup.

    ``modulus`` lists every element of the subgroup being factored out (empty
    for none). Elements of a quotient are stored as their lexicographically
    least residue vector in the coset.
    """
    invariant_factors: tuple[int, ...] = ()
    modulus: tuple[KElem, ...] = ()

    def __post_init__(self):
        factors = tuple(int(n) for n in self.invariant_factors)
        if any(n < 1 for n in factors):
            raise InvalidInput(f'invariant factors must be >= 1, got {factors}')
        object.__setattr__(self, 'invariant_factors', factors)
        object.__setattr__(self, 'modulus', tuple(sorted(set(self.modulus))))

    def __str__(self):
        base = ' x '.join(f'Z{n}' for n in self.invariant_factors if n > 1) or '1'
        if len(self.modulus) > 1:
            return f'({base}) / <{len(self.modulus)} elements>'
        return base

    @property
    def rank(self):
        return len(self.invariant_factors)

    @property
    def zero(self) -> KElem:
        return (0,) * self.rank

    @property
    def order(self):
        return prod(self.invariant_factors) // max(len(self.modulus), 1)

    @property
    def is_trivial(self):
        return self.order == 1

    def element(self, coords) -> KElem:
        coords = tuple(int(c) for c in coords)
        if len(coords) != self.rank:
            raise InvalidInput(
                f'element {coords} has {len(coords)} coordinates, group {self} needs {self.rank}'
            )
        return self.reduce(coords)

    def reduce(self, coords) -> KElem:
        residues = tuple(c % n for c, n in zip(coords, self.invariant_factors))
        if len(self.modulus) > 1:
            return min(_add_raw(self.invariant_factors, residues, f) for f in self.modulus)
        return residues

    def quotient(self, subgroup) -> 'FiniteAbelianGroup':
        """This group modulo ``subgroup`` (an enumerated subgroup of it)."""
        current = self.modulus or (self.zero,)
        merged = {_add_raw(self.invariant_factors, m, f) for m in current for f in subgroup}
        return FiniteAbelianGroup(self.invariant_factors, tuple(merged))


@dataclass(frozen=True, order=True)
class KZElem:
    """k + z*a in K (+) Z, the additive picture of K<a>."""
    k: KElem
    z: int

    def __str__(self):
        return f'({",".join(map(str, self.k))};{self.z})'


@dataclass(frozen=True)
class LatticeSubgroup:
    """F + <inf_gen> inside K (+) Z in canonical form.

    ``finite_part`` is the full sorted subgroup F of K; ``inf_gen`` is absent
    for finite subgroups, otherwise its z-component is positive and minimal and
    its k-component is the least representative modulo F.
    """
    group: FiniteAbelianGroup
    finite_part: tuple[KElem, ...]
    inf_gen: Optional[KZElem] = None

    def __str__(self):
        gen = f' + <{self.inf_gen}>' if self.inf_gen else ''
        return f'F[{len(self.finite_part)}]{gen}'

    @property
    def is_finite(self):
        return self.inf_gen is None

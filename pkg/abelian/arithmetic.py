import itertools
import logging
from collections import deque

from abelian.models import FiniteAbelianGroup, KElem, KZElem, LatticeSubgroup
from core.conf import budget
from core.exceptions import BudgetExceeded, InvalidInput

logger = logging.getLogger(__name__)


def _check(g: FiniteAbelianGroup, *elems):
    for x in elems:
        if len(x) != g.rank:
            raise InvalidInput(f'dimension mismatch: {x} is not an element of {g}')


def k_add(g: FiniteAbelianGroup, x: KElem, y: KElem) -> KElem:
    _check(g, x, y)
    return g.reduce(tuple(a + b for a, b in zip(x, y)))


def k_neg(g: FiniteAbelianGroup, x: KElem) -> KElem:
    _check(g, x)
    return g.reduce(tuple(-a for a in x))


def k_sub(g: FiniteAbelianGroup, x: KElem, y: KElem) -> KElem:
    return k_add(g, x, k_neg(g, y))


def k_scale(g: FiniteAbelianGroup, x: KElem, n: int) -> KElem:
    _check(g, x)
    return g.reduce(tuple(n * a for a in x))


def k_order(g: FiniteAbelianGroup, x: KElem) -> int:
    x = g.reduce(x)
    current, n = x, 1
    while current != g.zero:
        current = k_add(g, current, x)
        n += 1
    return n


def k_enumerate(g: FiniteAbelianGroup, bound=None) -> list[KElem]:
    """Every element once, in lexicographic order."""
    bound = budget('ENUMERATION_BOUND') if bound is None else bound
    raw_order = 1
    for n in g.invariant_factors:
        raw_order *= n
    if raw_order > bound:
        raise BudgetExceeded('ENUMERATION_BOUND', bound, f'|K| = {raw_order} exceeds the enumeration bound {bound}')
    ranges = [range(n) for n in g.invariant_factors]
    return sorted({g.reduce(coords) for coords in itertools.product(*ranges)})


def subgroup_closure(g: FiniteAbelianGroup, gens) -> tuple[KElem, ...]:
    """The subgroup of K generated by ``gens``, fully enumerated and sorted."""
    gens = [g.reduce(x) for x in gens]
    seen = {g.zero}
    queue = deque([g.zero])
    bound = budget('ENUMERATION_BOUND')
    while queue:
        current = queue.popleft()
        for x in gens:
            nxt = k_add(g, current, x)
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > bound:
                    raise BudgetExceeded('ENUMERATION_BOUND', bound)
                queue.append(nxt)
    return tuple(sorted(seen))


def coset_min(g: FiniteAbelianGroup, x: KElem, finite_part) -> KElem:
    return min(k_add(g, x, f) for f in finite_part)


# K (+) Z arithmetic

def kz_add(g, x: KZElem, y: KZElem) -> KZElem:
    return KZElem(k_add(g, x.k, y.k), x.z + y.z)


def kz_neg(g, x: KZElem) -> KZElem:
    return KZElem(k_neg(g, x.k), -x.z)


def kz_scale(g, x: KZElem, n: int) -> KZElem:
    return KZElem(k_scale(g, x.k, n), n * x.z)


def _ext_gcd(a, b):
    """Return (d, s, t) with s*a + t*b = d = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def lattice_canonicalize(g: FiniteAbelianGroup, gens) -> LatticeSubgroup:
    gens = [KZElem(g.reduce(x.k), x.z) for x in gens]
    combo = KZElem(g.zero, 0)
    for x in gens:
        d, s, t = _ext_gcd(combo.z, x.z)
        combo = kz_add(g, kz_scale(g, combo, s), kz_scale(g, x, t))
        assert combo.z == d
    ell = combo.z
    if ell == 0:
        finite = subgroup_closure(g, [x.k for x in gens])
        return LatticeSubgroup(g, finite, None)
    # x - (x.z / ell) * combo has z = 0; these span the finite part.
    eliminated = [kz_add(g, x, kz_scale(g, combo, -(x.z // ell))).k for x in gens]
    finite = subgroup_closure(g, eliminated)
    inf_gen = KZElem(coset_min(g, combo.k, finite), ell)
    return LatticeSubgroup(g, finite, inf_gen)


def lattice_generators(sub: LatticeSubgroup) -> list[KZElem]:
    gens = [KZElem(f, 0) for f in sub.finite_part if f != sub.group.zero]
    if sub.inf_gen is not None:
        gens.append(sub.inf_gen)
    return gens


def lattice_contains(sub: LatticeSubgroup, x: KZElem) -> bool:
    g = sub.group
    if sub.inf_gen is None:
        return x.z == 0 and g.reduce(x.k) in sub.finite_part
    if x.z % sub.inf_gen.z:
        return False
    rest = kz_add(g, x, kz_scale(g, sub.inf_gen, -(x.z // sub.inf_gen.z)))
    return rest.k in sub.finite_part


def lattice_coset_rep(sub: LatticeSubgroup, x: KZElem) -> tuple[KZElem, int]:
    """Canonical representative of x + sub and the multiple of inf_gen removed.

    The representative has z in [0, l) and the least k-part in its F-coset.
    """
    g = sub.group
    q = 0
    if sub.inf_gen is not None:
        q = x.z // sub.inf_gen.z
        x = kz_add(g, x, kz_scale(g, sub.inf_gen, -q))
    return KZElem(coset_min(g, x.k, sub.finite_part), x.z), q


def lattice_index(sub: LatticeSubgroup, ambient: LatticeSubgroup):
    """[ambient : sub], or None when infinite."""
    if sub.is_finite != ambient.is_finite:
        return None
    index = len(ambient.finite_part) // len(sub.finite_part)
    if not sub.is_finite:
        index = index * sub.inf_gen.z // ambient.inf_gen.z
    return index


def quotient_cyclic_order(sub: LatticeSubgroup, x: KZElem, ambient: LatticeSubgroup) -> int:
    g = sub.group
    index = lattice_index(sub, ambient)
    bound = index if index else budget('ENUMERATION_BOUND')
    current = x
    for q in range(1, bound + 1):
        if lattice_contains(sub, current):
            return q
        current = kz_add(g, current, x)
    raise BudgetExceeded('quotient order', bound, f'no multiple of {x} up to {bound} lies in {sub}')

import math
import re

from abelian.arithmetic import k_add, k_neg, k_order, k_sub, lattice_canonicalize
from abelian.models import KZElem
from core.exceptions import InvalidInput
from gqd.models import AmalgamNormalForm, GqdElem, GqdGroup, SubgroupClass, Word

_K_TOKEN = re.compile(r'^k\(([-\d,\s]*)\)$')


def _check(G: GqdGroup, *elems):
    for x in elems:
        if len(x.k) != G.K.rank or x.eps not in (0, 1):
            raise InvalidInput(f'{x} is not an element of {G}')


def mul(G: GqdGroup, x: GqdElem, y: GqdElem) -> GqdElem:
    _check(G, x, y)
    K = G.K
    if x.eps == 0:
        return GqdElem(k_add(K, x.k, y.k), x.i + y.i, y.eps)
    if y.eps == 0:
        return GqdElem(k_sub(K, x.k, y.k), x.i - y.i, 1)
    return GqdElem(k_add(K, k_sub(K, x.k, y.k), G.beta), x.i - y.i, 0)


def inv(G: GqdGroup, x: GqdElem) -> GqdElem:
    _check(G, x)
    if x.eps == 0:
        return GqdElem(k_neg(G.K, x.k), -x.i, 0)
    return GqdElem(k_add(G.K, x.k, G.beta), x.i, 1)


def power(G: GqdGroup, x: GqdElem, n: int) -> GqdElem:
    if n < 0:
        x, n = inv(G, x), -n
    result = G.identity
    base = x
    while n:
        if n & 1:
            result = mul(G, result, base)
        base = mul(G, base, base)
        n >>= 1
    return result


def product(G: GqdGroup, *elems) -> GqdElem:
    result = G.identity
    for x in elems:
        result = mul(G, result, x)
    return result


def parse_word(text: str) -> Word:
    """Parse tokens ``a a- b b- b' b'- k(c1,...)`` separated by whitespace."""
    letters = tuple(text.split())
    for token in letters:
        if token.rstrip('-') not in ('a', 'b', "b'") and not _K_TOKEN.match(token):
            raise InvalidInput(f'malformed word token {token!r}')
    return Word(letters)


def letter(G: GqdGroup, token: str) -> GqdElem:
    match = _K_TOKEN.match(token)
    if match:
        coords = [c for c in match.group(1).replace(' ', '').split(',') if c]
        return G.element(k=[int(c) for c in coords])
    inverse = token.endswith('-')
    name = token[:-1] if inverse else token
    if name == 'a':
        elem = G.a
    elif name == 'b':
        elem = G.b
    elif name == "b'":
        elem = G.b_prime
    else:
        raise InvalidInput(f'malformed word token {token!r}')
    return inv(G, elem) if inverse else elem


def normalize_word(G: GqdGroup, w) -> GqdElem:
    if isinstance(w, str):
        w = parse_word(w)
    result = G.identity
    for token in w.letters:
        result = mul(G, result, letter(G, token))
    return result


def amalgam_normal_form(G: GqdGroup, x: GqdElem) -> AmalgamNormalForm:
    """Normal form over the transversals {1, b} and {1, b'}.

    a = b b' and a^-1 = b' b, so positive powers of a read (b b')^i and negative
    ones (b' b)^|i|; a trailing b after a negative power collapses b b = beta
    into the head.
    """
    _check(G, x)
    head, n = x.k, abs(x.i)
    if x.i >= 0:
        tail = ('b', "b'") * n + (('b',) if x.eps else ())
    elif not x.eps:
        tail = ("b'", 'b') * n
    else:
        head = k_add(G.K, head, G.beta)
        tail = ("b'", 'b') * (n - 1) + ("b'",)
    return AmalgamNormalForm(head, tail)


def render_normal_form(nf: AmalgamNormalForm) -> Word:
    head = ()
    if any(nf.head):
        head = (f'k({",".join(map(str, nf.head))})',)
    return Word(head + nf.tail)


def is_torsion(G: GqdGroup, x: GqdElem) -> bool:
    return x.eps == 1 or x.i == 0


def order(G: GqdGroup, x: GqdElem):
    """Element order; math.inf for non-torsion elements."""
    if not is_torsion(G, x):
        return math.inf
    if x.eps == 1:
        return 2 if G.beta == G.K.zero else 4
    return k_order(G.K, x.k)


def conjugate_in_K(G: GqdGroup, g: GqdElem, k):
    return k_neg(G.K, k) if g.eps else G.K.reduce(k)


def six_cycle_identity(G: GqdGroup, s1: GqdElem, s2: GqdElem, s3: GqdElem) -> bool:
    if not (s1.eps == s2.eps == s3.eps == 1):
        raise InvalidInput('the 6-cycle identity needs three elements outside K<a>')
    return product(G, s1, s2, s3) == product(G, s3, s2, s1)


def six_cycle(G: GqdGroup, g: GqdElem, s1: GqdElem, s2: GqdElem, s3: GqdElem) -> list[GqdElem]:
    """g, gs1, gs1s2, gs1s2s3, gs3s2, gs3; consecutive vertices (cyclically) are adjacent."""
    six_cycle_identity(G, s1, s2, s3)
    return [
        g,
        product(G, g, s1),
        product(G, g, s1, s2),
        product(G, g, s1, s2, s3),
        product(G, g, s3, s2),
        product(G, g, s3),
    ]


def four_cycle_identity(G: GqdGroup, s1: GqdElem, s2: GqdElem) -> bool:
    if s1.eps != 1 or s2.eps != 0:
        raise InvalidInput('the 4-cycle identity needs s1 outside and s2 inside K<a>')
    return mul(G, s1, s2) == mul(G, inv(G, s2), s1)


def four_cycle(G: GqdGroup, g: GqdElem, s1: GqdElem, s2: GqdElem) -> list[GqdElem]:
    """g, gs1, gs1s2, gs2^-1; the last vertex closes to g by an s2-edge."""
    four_cycle_identity(G, s1, s2)
    return [g, product(G, g, s1), product(G, g, s1, s2), product(G, g, inv(G, s2))]


def symmetrize(G: GqdGroup, gens) -> list[GqdElem]:
    """Close ``gens`` under inverses, dropping the identity and repeats, order kept."""
    result = []
    for x in gens:
        for y in (x, inv(G, x)):
            if y != G.identity and y not in result:
                result.append(y)
    return result


def abelian_part_generators(G: GqdGroup, X) -> list[KZElem]:
    """Generators of <X> intersected with K<a>: the eps=0 elements and all eps=1 products."""
    sym = symmetrize(G, X)
    gens = [x.kz for x in sym if x.eps == 0]
    outside = [x for x in sym if x.eps == 1]
    gens.extend(mul(G, x, y).kz for x in outside for y in outside)
    return gens


def classify_subgroup(G: GqdGroup, X) -> SubgroupClass:
    X = list(X)
    lattice = lattice_canonicalize(G.K, abelian_part_generators(G, X))
    outside = [x for x in X if x.eps == 1]
    if not outside:
        return SubgroupClass('abelian', lattice)
    return SubgroupClass('gqd', lattice, outside[0])


def whole_lattice(G: GqdGroup):
    """K<a> itself as a canonical lattice subgroup."""
    gens = [KZElem(G.K.reduce(tuple(int(j == c) for j in range(G.K.rank))), 0) for c in range(G.K.rank)]
    return lattice_canonicalize(G.K, gens + [KZElem(G.K.zero, 1)])

import itertools
import math
import random

from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from abelian.arithmetic import k_enumerate
from abelian.models import FiniteAbelianGroup
from core.exceptions import InvalidInput
from gqd.algebra import (
    amalgam_normal_form,
    conjugate_in_K,
    four_cycle,
    four_cycle_identity,
    inv,
    is_torsion,
    mul,
    normalize_word,
    order,
    parse_word,
    power,
    product,
    render_normal_form,
    six_cycle,
    six_cycle_identity,
    symmetrize,
    classify_subgroup,
    whole_lattice,
)
from gqd.models import GqdGroup

DIHEDRAL = GqdGroup(FiniteAbelianGroup(()))
Z2_SPLIT = GqdGroup(FiniteAbelianGroup((2,)))
Z2_TWISTED = GqdGroup(FiniteAbelianGroup((2,)), (1,))
Z4_TWISTED = GqdGroup(FiniteAbelianGroup((4,)), (2,))
Z4_SPLIT = GqdGroup(FiniteAbelianGroup((4,)))
Z2xZ2 = GqdGroup(FiniteAbelianGroup((2, 2)), (1, 0))
Z2xZ2_SPLIT = GqdGroup(FiniteAbelianGroup((2, 2)))
Z2xZ2_DIAGONAL = GqdGroup(FiniteAbelianGroup((2, 2)), (1, 1))
Z6_SPLIT = GqdGroup(FiniteAbelianGroup((6,)))
Z6_TWISTED = GqdGroup(FiniteAbelianGroup((6,)), (3,))
GROUPS = [
    DIHEDRAL, Z2_SPLIT, Z2_TWISTED, Z4_SPLIT, Z4_TWISTED,
    Z2xZ2_SPLIT, Z2xZ2, Z2xZ2_DIAGONAL, Z6_SPLIT, Z6_TWISTED,
]
SMALL_GROUPS = [G for G in GROUPS if G.K.order <= 4]


@st.composite
def elements(draw, G):
    k = [draw(st.integers(0, n - 1)) for n in G.K.invariant_factors]
    return G.element(k, draw(st.integers(-100, 100)), draw(st.integers(0, 1)))


@st.composite
def group_and_elements(draw, count):
    G = draw(st.sampled_from(GROUPS))
    return G, [draw(elements(G)) for _ in range(count)]


LETTERS = ['a', 'a-', 'b', 'b-', "b'", "b'-"]


def random_word(rng, G, length):
    tokens = []
    for _ in range(length):
        pick = rng.randrange(len(LETTERS) + (1 if G.K.rank else 0))
        if pick == len(LETTERS):
            coords = ','.join(str(rng.randint(-3, 3)) for _ in range(G.K.rank))
            tokens.append(f'k({coords})')
        else:
            tokens.append(LETTERS[pick])
    return tokens


def rewrite(G, tokens):
    """Normal form by moving every b to the right: b a = a^-1 b, b k = k^-1 b, b b = beta."""
    beta = G.beta
    spelled = {
        'a': [('a', 1)],
        'a-': [('a', -1)],
        'b': [('b', None)],
        'b-': [('k', beta), ('b', None)],
        "b'": [('k', beta), ('a', -1), ('b', None)],
        "b'-": [('a', -1), ('b', None)],
    }
    letters = []
    for token in tokens:
        if token.startswith('k('):
            letters.append(('k', tuple(int(c) for c in token[2:-1].split(','))))
        else:
            letters.extend(spelled[token])
    moved = True
    while moved:
        moved = False
        for j in range(len(letters) - 1):
            (x, _), (y, value) = letters[j], letters[j + 1]
            if x != 'b':
                continue
            if y == 'a':
                letters[j:j + 2] = [('a', -value), ('b', None)]
            elif y == 'k':
                letters[j:j + 2] = [('k', tuple(-c for c in value)), ('b', None)]
            else:
                letters[j:j + 2] = [('k', beta)]
            moved = True
            break
    k, i, eps = [0] * G.K.rank, 0, 0
    for name, value in letters:
        if name == 'k':
            k = [c + d for c, d in zip(k, value)]
        elif name == 'a':
            i += value
        else:
            eps += 1
    return G.element(k, i, eps)


def brute_order(G, x):
    """Smallest n <= 4|K| with x^n = 1, else None."""
    y = x
    for n in range(1, 4 * G.K.order + 1):
        if y == G.identity:
            return n
        y = mul(G, y, x)
    return None


class GroupConstructionTests(SimpleTestCase):
    def test_beta_must_have_order_two(self):
        with self.assertRaises(InvalidInput):
            GqdGroup(FiniteAbelianGroup((4,)), (1,))

    def test_infinite_dihedral(self):
        self.assertTrue(DIHEDRAL.is_infinite_dihedral)
        self.assertFalse(Z2_SPLIT.is_infinite_dihedral)

    def test_element_validates_eps(self):
        with self.assertRaises(InvalidInput):
            Z2_SPLIT.element([1], 0, 2)


class MultiplicationTests(SimpleTestCase):
    def test_b_inverts_a(self):
        G = DIHEDRAL
        self.assertEqual(mul(G, G.b, G.a), G.element(None, -1, 1))
        self.assertEqual(mul(G, G.a, G.b), G.element(None, 1, 1))

    def test_a_is_b_times_b_prime(self):
        for G in GROUPS:
            self.assertEqual(mul(G, G.b, G.b_prime), G.a)

    def test_b_squares_to_beta(self):
        G = Z2_TWISTED
        self.assertEqual(mul(G, G.b, G.b), G.element([1]))
        self.assertEqual(inv(G, G.b), G.element([1], 0, 1))
        self.assertEqual(order(G, G.b), 4)
        self.assertEqual(order(Z2_SPLIT, Z2_SPLIT.b), 2)

    def test_orders(self):
        G = Z4_TWISTED
        self.assertEqual(order(G, G.a), math.inf)
        self.assertEqual(order(G, G.element([1])), 4)
        self.assertEqual(order(G, G.identity), 1)
        self.assertFalse(is_torsion(G, G.element([1], 2, 0)))

    def test_rejects_foreign_elements(self):
        with self.assertRaises(InvalidInput):
            mul(Z2_SPLIT, DIHEDRAL.a, Z2_SPLIT.a)

    @settings(max_examples=200, deadline=None)
    @given(group_and_elements(3))
    def test_associative(self, drawn):
        G, (x, y, z) = drawn
        self.assertEqual(mul(G, mul(G, x, y), z), mul(G, x, mul(G, y, z)))

    @settings(max_examples=200, deadline=None)
    @given(group_and_elements(1))
    def test_inverse(self, drawn):
        G, (x,) = drawn
        self.assertEqual(mul(G, x, inv(G, x)), G.identity)
        self.assertEqual(mul(G, inv(G, x), x), G.identity)

    @settings(max_examples=100, deadline=None)
    @given(group_and_elements(1))
    def test_order_is_exact(self, drawn):
        G, (x,) = drawn
        n = order(G, x)
        if n == math.inf:
            for j in range(1, 9):
                self.assertNotEqual(power(G, x, j), G.identity)
        else:
            self.assertEqual(power(G, x, n), G.identity)
            for j in range(1, n):
                self.assertNotEqual(power(G, x, j), G.identity)

    def test_order_matches_power_iteration(self):
        for G in GROUPS:
            for k in k_enumerate(G.K):
                for i in range(-10, 11):
                    for eps in (0, 1):
                        x = G.element(k, i, eps)
                        n = brute_order(G, x)
                        self.assertEqual(is_torsion(G, x), n is not None, x)
                        self.assertEqual(order(G, x), math.inf if n is None else n, x)

    def test_group_axioms_on_random_triples(self):
        rng = random.Random(13)
        for G in GROUPS:
            def draw():
                k = [rng.randrange(n) for n in G.K.invariant_factors]
                return G.element(k, rng.randint(-100, 100), rng.randint(0, 1))

            for _ in range(10_000):
                x, y, z = draw(), draw(), draw()
                self.assertEqual(mul(G, mul(G, x, y), z), mul(G, x, mul(G, y, z)))
                self.assertEqual(mul(G, x, inv(G, x)), G.identity)
                self.assertEqual(mul(G, G.identity, x), x)

    @settings(max_examples=100, deadline=None)
    @given(group_and_elements(2))
    def test_conjugation_preserves_K(self, drawn):
        G, (g, x) = drawn
        k = x.k
        conjugate = product(G, g, G.element(k), inv(G, g))
        self.assertEqual(conjugate, G.element(conjugate_in_K(G, g, k)))


class WordTests(SimpleTestCase):
    def test_parse_word(self):
        self.assertEqual(parse_word("a b'- k(1)").letters, ('a', "b'-", 'k(1)'))
        with self.assertRaises(InvalidInput):
            parse_word('a c')

    def test_normalize_word(self):
        G = Z2_TWISTED
        self.assertEqual(normalize_word(G, "b b'"), G.a)
        self.assertEqual(normalize_word(G, 'a a- b b-'), G.identity)
        self.assertEqual(normalize_word(G, 'k(1) a a'), G.element([1], 2, 0))
        self.assertEqual(normalize_word(G, ''), G.identity)

    def test_rewriting_examples(self):
        G = DIHEDRAL
        self.assertEqual(normalize_word(G, 'b a a'), G.element(None, -2, 1))
        self.assertEqual(rewrite(G, ['b', 'a', 'a']), G.element(None, -2, 1))
        G = Z2_TWISTED
        self.assertEqual(rewrite(G, ['b', 'b']), G.element([1]))
        self.assertEqual(rewrite(G, ['b', 'k(1)', 'b-']), G.element([-1]))

    def test_agrees_with_rewriting(self):
        rng = random.Random(5)
        for trial in range(10_000):
            G = GROUPS[trial % len(GROUPS)]
            tokens = random_word(rng, G, rng.randint(0, 20))
            self.assertEqual(normalize_word(G, ' '.join(tokens)), rewrite(G, tokens), (G, tokens))

    def test_normal_form_examples(self):
        G = DIHEDRAL
        self.assertEqual(amalgam_normal_form(G, G.a).tail, ('b', "b'"))
        self.assertEqual(amalgam_normal_form(G, inv(G, G.a)).tail, ("b'", 'b'))
        self.assertEqual(str(render_normal_form(amalgam_normal_form(G, G.element(None, 1, 1)))), "b b' b")

    @settings(max_examples=200, deadline=None)
    @given(group_and_elements(1))
    def test_normal_form_evaluates_back(self, drawn):
        G, (x,) = drawn
        nf = amalgam_normal_form(G, x)
        for first, second in zip(nf.tail, nf.tail[1:]):
            self.assertNotEqual(first, second)
        self.assertEqual(normalize_word(G, render_normal_form(nf)), x)


class CycleIdentityTests(SimpleTestCase):
    @settings(max_examples=150, deadline=None)
    @given(group_and_elements(4))
    def test_six_cycle(self, drawn):
        G, (g, s1, s2, s3) = drawn
        s1, s2, s3 = (G.element(s.k, s.i, 1) for s in (s1, s2, s3))
        self.assertTrue(six_cycle_identity(G, s1, s2, s3))
        cycle = six_cycle(G, g, s1, s2, s3)
        steps = {s1, s2, s3, inv(G, s1), inv(G, s2), inv(G, s3)}
        for here, there in zip(cycle, cycle[1:] + cycle[:1]):
            self.assertIn(mul(G, inv(G, here), there), steps)

    @settings(max_examples=150, deadline=None)
    @given(group_and_elements(3))
    def test_four_cycle(self, drawn):
        G, (g, s1, s2) = drawn
        s1, s2 = G.element(s1.k, s1.i, 1), G.element(s2.k, s2.i, 0)
        self.assertTrue(four_cycle_identity(G, s1, s2))
        cycle = four_cycle(G, g, s1, s2)
        steps = {s1, s2, inv(G, s1), inv(G, s2)}
        for here, there in zip(cycle, cycle[1:] + cycle[:1]):
            self.assertIn(mul(G, inv(G, here), there), steps)

    def test_six_cycle_identity_on_small_groups(self):
        for G in SMALL_GROUPS:
            outside = [G.element(k, i, 1) for k in k_enumerate(G.K) for i in range(-4, 5)]
            for s1, s2, s3 in itertools.product(outside, repeat=3):
                self.assertEqual(
                    mul(G, mul(G, s1, s2), s3), mul(G, mul(G, s3, s2), s1), (G, s1, s2, s3)
                )

    def test_four_cycle_identity_on_small_groups(self):
        for G in SMALL_GROUPS:
            cells = [(k, i) for k in k_enumerate(G.K) for i in range(-4, 5)]
            for (k1, i1), (k2, i2) in itertools.product(cells, repeat=2):
                s1, s2 = G.element(k1, i1, 1), G.element(k2, i2, 0)
                self.assertTrue(four_cycle_identity(G, s1, s2))
                cycle = four_cycle(G, G.identity, s1, s2)
                self.assertEqual(mul(G, cycle[3], s2), G.identity)
                self.assertEqual(mul(G, cycle[2], inv(G, s1)), cycle[3])

    def test_six_cycle_needs_outside_elements(self):
        G = DIHEDRAL
        with self.assertRaises(InvalidInput):
            six_cycle_identity(G, G.a, G.b, G.b)


class SubgroupTests(SimpleTestCase):
    def test_symmetrize(self):
        G = Z2_TWISTED
        self.assertEqual(symmetrize(G, [G.b, G.identity, G.b]), [G.b, inv(G, G.b)])
        self.assertEqual(symmetrize(DIHEDRAL, [DIHEDRAL.b]), [DIHEDRAL.b])

    def test_three_reflections_span_the_group(self):
        G = DIHEDRAL
        span = classify_subgroup(G, [G.b, normalize_word(G, 'a b'), normalize_word(G, 'a a a b')])
        self.assertEqual(span.kind, 'gqd')
        self.assertTrue(span.is_two_ended)
        self.assertEqual(span.lattice, whole_lattice(G))

    def test_finite_abelian_subgroup(self):
        G = Z2_SPLIT
        span = classify_subgroup(G, [G.element([1])])
        self.assertEqual(span.kind, 'abelian')
        self.assertFalse(span.is_two_ended)

    def test_product_is_left_to_right(self):
        G = Z4_TWISTED
        self.assertEqual(product(G, G.a, G.b, G.a), G.b)

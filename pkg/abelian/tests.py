import itertools
import random
from collections import deque
from math import gcd

from django.test import SimpleTestCase, override_settings
from hypothesis import given, settings, strategies as st

from abelian.arithmetic import (
    coset_min,
    k_add,
    k_enumerate,
    k_neg,
    k_order,
    kz_add,
    kz_neg,
    kz_scale,
    lattice_canonicalize,
    lattice_contains,
    lattice_coset_rep,
    lattice_generators,
    lattice_index,
    quotient_cyclic_order,
    subgroup_closure,
)
from abelian.models import FiniteAbelianGroup, KZElem
from core.exceptions import BudgetExceeded, InvalidInput

TRIVIAL = FiniteAbelianGroup(())
Z2 = FiniteAbelianGroup((2,))
Z4 = FiniteAbelianGroup((4,))
Z6 = FiniteAbelianGroup((6,))
Z2xZ2 = FiniteAbelianGroup((2, 2))
Z8 = FiniteAbelianGroup((8,))
Z2xZ4 = FiniteAbelianGroup((2, 4))
SMALL = [Z2, Z4, Z6, Z2xZ2, Z8, Z2xZ4]


def random_kz(rng, g, count):
    return [
        KZElem(tuple(rng.randrange(n) for n in g.invariant_factors), rng.randint(-6, 6))
        for _ in range(count)
    ]


def strip_closure(g, gens, bound):
    """Everything reachable from 0 by steps of +-gens without leaving |z| <= bound."""
    steps = gens + [kz_neg(g, y) for y in gens]
    seen = {KZElem(g.zero, 0)}
    queue = deque(seen)
    while queue:
        x = queue.popleft()
        for y in steps:
            nxt = kz_add(g, x, y)
            if abs(nxt.z) <= bound and nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return seen


class FiniteAbelianGroupTests(SimpleTestCase):
    def test_element_reduces_residues(self):
        self.assertEqual(Z4.element([7]), (3,))
        self.assertEqual(Z2xZ2.element([3, -1]), (1, 1))

    def test_element_rejects_wrong_rank(self):
        with self.assertRaises(InvalidInput):
            Z2.element([1, 0])

    def test_invalid_factor(self):
        with self.assertRaises(InvalidInput):
            FiniteAbelianGroup((0,))

    def test_order_and_triviality(self):
        self.assertEqual(Z2xZ2.order, 4)
        self.assertTrue(TRIVIAL.is_trivial)
        self.assertEqual(TRIVIAL.zero, ())

    def test_quotient_picks_least_representative(self):
        quotient = Z4.quotient([(0,), (2,)])
        self.assertEqual(quotient.order, 2)
        self.assertEqual(quotient.reduce((3,)), (1,))
        self.assertEqual(quotient.reduce((2,)), (0,))
        self.assertEqual(k_add(quotient, (1,), (1,)), (0,))


class ArithmeticTests(SimpleTestCase):
    def test_negation_and_order(self):
        self.assertEqual(k_neg(Z6, (2,)), (4,))
        self.assertEqual(k_order(Z6, (2,)), 3)
        self.assertEqual(k_order(Z6, (0,)), 1)

    def test_enumerate_in_lexicographic_order(self):
        self.assertEqual(k_enumerate(Z2xZ2), [(0, 0), (0, 1), (1, 0), (1, 1)])
        self.assertEqual(k_enumerate(TRIVIAL), [()])

    def test_enumerate_respects_bound(self):
        with self.assertRaises(BudgetExceeded):
            k_enumerate(FiniteAbelianGroup((5, 5)), bound=10)

    @override_settings(GQD_HAMILTON={'ENUMERATION_BOUND': 3})
    def test_closure_respects_configured_bound(self):
        with self.assertRaises(BudgetExceeded):
            subgroup_closure(Z6, [(1,)])

    def test_subgroup_closure(self):
        self.assertEqual(subgroup_closure(Z6, [(2,)]), ((0,), (2,), (4,)))
        self.assertEqual(coset_min(Z6, (5,), ((0,), (2,), (4,))), (1,))


class LatticeTests(SimpleTestCase):
    def test_infinite_cyclic_part_is_the_gcd(self):
        lattice = lattice_canonicalize(TRIVIAL, [KZElem((), 4), KZElem((), 6)])
        self.assertEqual(lattice.inf_gen, KZElem((), 2))
        self.assertFalse(lattice.is_finite)

    def test_finite_lattice(self):
        lattice = lattice_canonicalize(Z6, [KZElem((3,), 0)])
        self.assertTrue(lattice.is_finite)
        self.assertEqual(lattice.finite_part, ((0,), (3,)))

    def test_twisted_generator(self):
        lattice = lattice_canonicalize(Z2, [KZElem((1,), 2)])
        self.assertEqual(lattice.finite_part, ((0,),))
        self.assertTrue(lattice_contains(lattice, KZElem((0,), 4)))
        self.assertFalse(lattice_contains(lattice, KZElem((0,), 2)))
        self.assertFalse(lattice_contains(lattice, KZElem((1,), 4)))

    def test_generators_recover_the_lattice(self):
        lattice = lattice_canonicalize(Z6, [KZElem((2,), 3), KZElem((3,), 0)])
        gens = lattice_generators(lattice)
        self.assertEqual(lattice_canonicalize(Z6, gens), lattice)
        for x in gens:
            self.assertTrue(lattice_contains(lattice, kz_neg(Z6, x)))

    def test_membership_matches_strip_search(self):
        rng = random.Random(17)
        for trial in range(60):
            g = SMALL[trial % len(SMALL)]
            gens = random_kz(rng, g, rng.randint(1, 3))
            lattice = lattice_canonicalize(g, gens)
            for coeffs in itertools.product(range(-8, 9), repeat=len(gens)):
                x = KZElem(g.zero, 0)
                for c, y in zip(coeffs, gens):
                    x = kz_add(g, x, kz_scale(g, y, c))
                self.assertTrue(lattice_contains(lattice, x), (gens, coeffs))
            reached = strip_closure(g, gens, 8 + max(abs(y.z) for y in gens))
            for k in k_enumerate(g):
                for z in range(-8, 9):
                    x = KZElem(k, z)
                    self.assertEqual(lattice_contains(lattice, x), x in reached, (gens, x))

    def test_modular_law(self):
        # L meets H + K in exactly H + (L meet K) when H lies in L.
        rng = random.Random(19)
        for trial in range(60):
            g = SMALL[trial % len(SMALL)]
            outer = random_kz(rng, g, rng.randint(1, 3))
            inner = []
            for _ in range(rng.randint(1, 2)):
                x = KZElem(g.zero, 0)
                for y in outer:
                    x = kz_add(g, x, kz_scale(g, y, rng.randint(-2, 2)))
                inner.append(x)
            L = lattice_canonicalize(g, outer)
            H = lattice_canonicalize(g, inner)
            right = lattice_canonicalize(g, inner + [KZElem(f, 0) for f in L.finite_part])
            for k in k_enumerate(g):
                for z in range(-12, 13):
                    x = KZElem(k, z)
                    in_h_plus_k = z == 0 if H.is_finite else z % H.inf_gen.z == 0
                    left = lattice_contains(L, x) and in_h_plus_k
                    self.assertEqual(left, lattice_contains(right, x), (outer, inner, x))

    def test_coset_representative(self):
        even = lattice_canonicalize(TRIVIAL, [KZElem((), 2)])
        self.assertEqual(lattice_coset_rep(even, KZElem((), 3)), (KZElem((), 1), 1))
        self.assertEqual(lattice_coset_rep(even, KZElem((), -3)), (KZElem((), 1), -2))

    def test_index_and_cyclic_order(self):
        whole = lattice_canonicalize(TRIVIAL, [KZElem((), 1)])
        even = lattice_canonicalize(TRIVIAL, [KZElem((), 2)])
        self.assertEqual(lattice_index(even, whole), 2)
        self.assertEqual(quotient_cyclic_order(even, KZElem((), 1), whole), 2)
        self.assertIsNone(lattice_index(lattice_canonicalize(TRIVIAL, []), whole))

    def test_index_with_finite_parts(self):
        whole = lattice_canonicalize(Z2, [KZElem((1,), 0), KZElem((0,), 1)])
        sub = lattice_canonicalize(Z2, [KZElem((1,), 1)])
        self.assertEqual(lattice_index(sub, whole), 2)
        self.assertEqual(quotient_cyclic_order(sub, KZElem((0,), 1), whole), 2)

    @settings(max_examples=150, deadline=None)
    @given(st.lists(st.tuples(st.integers(0, 3), st.integers(-6, 6)), min_size=1, max_size=4))
    def test_canonical_form_contains_generators(self, raw):
        gens = [KZElem((k,), z) for k, z in raw]
        lattice = lattice_canonicalize(Z4, gens)
        for x in gens:
            self.assertTrue(lattice_contains(lattice, x))
        zs = [abs(z) for _, z in raw if z]
        if zs:
            expected = 0
            for z in zs:
                expected = gcd(expected, z)
            self.assertEqual(lattice.inf_gen.z, expected)
        else:
            self.assertTrue(lattice.is_finite)

    @settings(max_examples=100, deadline=None)
    @given(
        st.lists(st.tuples(st.integers(0, 1), st.integers(0, 1), st.integers(-4, 4)), min_size=1, max_size=3),
        st.integers(0, 1), st.integers(0, 1), st.integers(-9, 9),
    )
    def test_coset_representative_is_canonical(self, raw, k0, k1, z):
        lattice = lattice_canonicalize(Z2xZ2, [KZElem((a, b), c) for a, b, c in raw])
        x = KZElem((k0, k1), z)
        rep, _ = lattice_coset_rep(lattice, x)
        difference = KZElem(Z2xZ2.reduce((k0 - rep.k[0], k1 - rep.k[1])), z - rep.z)
        self.assertTrue(lattice_contains(lattice, difference))
        if not lattice.is_finite:
            self.assertTrue(0 <= rep.z < lattice.inf_gen.z)

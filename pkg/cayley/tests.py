import itertools

from django.test import SimpleTestCase, override_settings
from hypothesis import given, settings, strategies as st

from abelian.models import FiniteAbelianGroup
from cayley.graphs import (
    build_window,
    choose_pivot,
    classify_case,
    coset_ladder,
    coset_of,
    make_genset,
    validate_genset,
    window_to_dot,
)
from cayley.models import GenSet
from core.exceptions import BudgetExceeded, ConstructionError, InvalidInput
from gqd.algebra import four_cycle, inv, normalize_word, product, six_cycle
from gqd.models import GqdGroup
from walls.export import dot_counts

DIHEDRAL = GqdGroup(FiniteAbelianGroup(()))
Z2 = GqdGroup(FiniteAbelianGroup((2,)))


def words(G, *texts):
    return [normalize_word(G, text) for text in texts]


class GenSetTests(SimpleTestCase):
    def test_accepts_generating_set(self):
        genset = make_genset(DIHEDRAL, [DIHEDRAL.b, DIHEDRAL.b_prime])
        self.assertEqual(len(genset), 2)
        self.assertEqual(genset.index(DIHEDRAL.b_prime), 1)

    def test_rejects_non_generating_set(self):
        with self.assertRaises(InvalidInput):
            make_genset(DIHEDRAL, [DIHEDRAL.b])
        with self.assertRaises(InvalidInput):
            make_genset(DIHEDRAL, words(DIHEDRAL, 'a', 'a-'))

    def test_rejects_asymmetric_set(self):
        G = GqdGroup(FiniteAbelianGroup((2,)), (1,))
        with self.assertRaises(InvalidInput):
            GenSet(G, (G.b, G.a, inv(G, G.a)))
        genset = make_genset(G, [G.b, G.a], symmetric=True)
        self.assertIn(inv(G, G.b), genset.gens)
        with self.assertRaises(InvalidInput):
            validate_genset(G, [G.b, G.a])
        self.assertEqual(validate_genset(G, genset.gens), genset)

    def test_rejects_identity_and_repeats(self):
        G = DIHEDRAL
        with self.assertRaises(InvalidInput):
            GenSet(G, (G.identity, G.b))
        with self.assertRaises(InvalidInput):
            GenSet(G, (G.b, G.b))


class WindowTests(SimpleTestCase):
    def test_dihedral_ball(self):
        G = DIHEDRAL
        window = build_window(G, make_genset(G, [G.b, G.b_prime]), 3)
        self.assertEqual(window.graph.number_of_nodes(), 7)
        self.assertEqual(window.distance[G.a], 2)
        self.assertTrue(window.contains(G.b))
        self.assertFalse(window.contains(normalize_word(G, 'a a')))

    def test_arcs_carry_generator_labels(self):
        G = Z2
        S = make_genset(G, [G.b, G.a, inv(G, G.a), G.element([1])])
        window = build_window(G, S, 4)
        for g, d in window.distance.items():
            if d < 4:
                self.assertEqual(window.graph.out_degree(g), 4)
        self.assertEqual(window.graph[G.identity][G.a]['label'], S.index(G.a))

    def test_ball(self):
        G = DIHEDRAL
        window = build_window(G, make_genset(G, [G.b, G.b_prime]), 5)
        self.assertEqual(sorted(window.ball(1)), sorted([G.identity, G.b, G.b_prime]))

    def test_negative_radius(self):
        G = DIHEDRAL
        with self.assertRaises(InvalidInput):
            build_window(G, make_genset(G, [G.b, G.b_prime]), -1)

    @override_settings(GQD_HAMILTON={'WINDOW_VERTEX_BUDGET': 5})
    def test_vertex_budget(self):
        G = DIHEDRAL
        with self.assertRaises(BudgetExceeded):
            build_window(G, make_genset(G, [G.b, G.b_prime]), 10)

    def test_short_cycles_run_along_window_edges(self):
        G = DIHEDRAL
        S = make_genset(G, words(G, 'b', 'a b', 'a a a b'))
        window = build_window(G, S, 6)
        for g in window.ball(3):
            for s1, s2, s3 in itertools.product(S.gens, repeat=3):
                cycle = six_cycle(G, g, s1, s2, s3)
                for here, there in zip(cycle, cycle[1:] + cycle[:1]):
                    self.assertTrue(window.graph.has_edge(here, there), (g, s1, s2, s3))
        G = Z2
        S = make_genset(G, [G.b, G.a, inv(G, G.a), G.element([1])])
        window = build_window(G, S, 6)
        outside = [s for s in S.gens if s.eps == 1]
        inside = [s for s in S.gens if s.eps == 0]
        for g in window.ball(4):
            for s1, s2 in itertools.product(outside, inside):
                cycle = four_cycle(G, g, s1, s2)
                for here, there in zip(cycle, cycle[1:] + cycle[:1]):
                    self.assertTrue(window.graph.has_edge(here, there), (g, s1, s2))

    def test_dot_export(self):
        G = DIHEDRAL
        window = build_window(G, make_genset(G, words(G, 'b', 'a b', 'a a a b')), 3)
        nodes, edges = dot_counts(window_to_dot(window))
        self.assertEqual(nodes, window.graph.number_of_nodes())
        self.assertEqual(edges, window.graph.number_of_edges() // 2)


class CaseAnalysisTests(SimpleTestCase):
    def test_three_reflections(self):
        G = DIHEDRAL
        b, ab, a3b = words(G, 'b', 'a b', 'a a a b')
        tag = classify_case(G, [b, ab, a3b])
        self.assertEqual(tag.kind, 'case1')
        self.assertEqual((tag.pivot, tag.companion), (b, ab))

    def test_finite_inside_part(self):
        G = Z2
        tag = classify_case(G, [G.b, normalize_word(G, 'a b'), G.element([1])])
        self.assertEqual(tag.kind, 'case2i')
        self.assertEqual(tag.inside, (G.element([1]),))

    def test_infinite_inside_part(self):
        G = DIHEDRAL
        tag = classify_case(G, [G.a, inv(G, G.a), G.b])
        self.assertEqual(tag.kind, 'case2ii')

    def test_needs_three_generators(self):
        G = DIHEDRAL
        with self.assertRaises(InvalidInput):
            classify_case(G, [G.b, G.b_prime])

    def test_no_pivot(self):
        G = GqdGroup(FiniteAbelianGroup((4,)))
        gens = [G.element([c], 0, 1) for c in range(3)]
        with self.assertRaises(ConstructionError):
            choose_pivot(G, gens)
        self.assertIsNone(classify_case(G, gens).pivot)


class CosetLadderTests(SimpleTestCase):
    def setUp(self):
        G = DIHEDRAL
        self.G = G
        self.s, self.t, self.u = words(G, 'b', 'a b', 'a a a b')
        self.gens = [self.s, self.t, self.u]
        self.ladder = coset_ladder(G, self.gens, self.s, self.t)

    def test_ladder_height(self):
        self.assertEqual(self.ladder.m, 1)
        self.assertEqual(self.ladder.ts, self.G.a)
        self.assertEqual(self.ladder.h_prime.inf_gen.z, 2)

    def test_coset_of(self):
        G = self.G
        self.assertEqual(coset_of(G, self.ladder, G.identity), (0, 0))
        self.assertEqual(coset_of(G, self.ladder, G.a), (1, 0))
        self.assertEqual(coset_of(G, self.ladder, self.t), (0, 1))
        self.assertEqual(coset_of(G, self.ladder, self.s), (1, 1))

    def test_companion_must_be_another_generator(self):
        with self.assertRaises(InvalidInput):
            coset_ladder(self.G, self.gens, self.s, self.s)

    def test_cosets_partition_a_ball(self):
        G = self.G
        window = build_window(G, make_genset(G, self.gens), 6)
        seen = {coset_of(G, self.ladder, g) for g in window.graph}
        self.assertEqual(len(seen), 2 * (self.ladder.m + 1))

    @settings(max_examples=100, deadline=None)
    @given(st.lists(st.integers(0, 1), max_size=6))
    def test_ts_products_climb_the_ladder(self, picks):
        G = self.G
        others = [self.t, self.u]
        g = product(G, *[x for j in picks for x in (others[j], self.s)])
        self.assertEqual(coset_of(G, self.ladder, g), (len(picks) % (self.ladder.m + 1), 0))

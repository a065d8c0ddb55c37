import random
from math import gcd

import networkx as nx
from django.test import SimpleTestCase, override_settings
from hypothesis import given, settings, strategies as st

from abelian.arithmetic import k_enumerate
from abelian.models import FiniteAbelianGroup
from cayley.graphs import build_window, classify_case, coset_ladder, make_genset
from core.exceptions import BudgetExceeded, ConstructionError, InvalidInput
from gqd.algebra import inv, mul, normalize_word
from gqd.models import GqdElem, GqdGroup
from hamilton.embeddings import check_embedding
from hamilton.models import GroupDoubleRay
from hamilton.pipeline import (
    abelian_double_ray,
    base_ray,
    build_rows,
    case1_cylinder,
    case2i_grid,
    case2ii_grid,
    hamiltonian_circle,
    hamiltonian_double_ray,
    measure_twist,
    next_row,
)
from hamilton.rays import eps_one_first, locate_index, make_ray, relabel, reverse_ray, rotate, translate
from hamilton.search import finite_ham_path, hamiltonian_path, lifted_cycle_search, periodic_ray_search
from verify.checks import verify_circle, verify_finite_path, verify_ray
from walls.models import CylinderParams

RADIUS = 12
INNER = 10


def group(factors=(), beta=None):
    return GqdGroup(FiniteAbelianGroup(tuple(factors)), beta)


def words(G, *texts):
    return [normalize_word(G, text) for text in texts]


# (invariant factors, beta, generators before closing under inverses)
RAY_INSTANCES = [
    ((), None, ['b', "b'"]),
    ((), None, ['a', 'b']),
    ((), None, ['b', 'a b', 'a a a b']),
    ((), None, ['b', 'a b', 'a a b']),
    ((), None, ['b', 'a b', 'a a a a b']),
    ((2,), None, ['b', 'a b', 'k(1)']),
    ((2,), None, ['a', 'b', 'k(1)']),
    ((2,), None, ['b', 'a b', 'k(1) a b']),
    ((2,), (1,), ['b', 'a b']),
    ((3,), None, ['b', 'a b', 'k(1)']),
    ((4,), (2,), ['a', 'b', 'k(1)']),
    ((4,), None, ['b', 'a b', 'k(1)']),
    ((2, 2), None, ['b', 'a b', 'k(0,1) b', 'k(1,0)']),
    ((2, 2), (1, 0), ['a', 'b', 'k(0,1)']),
    ((2,), None, ['a a a b', 'k(1) a- b', 'k(1) a b', 'a- a- b']),
    ((6,), None, ['k(4) a a a b', 'k(2) a a b', 'k(4) a- a- b', 'k(1) a b']),
]

CIRCLE_INSTANCES = [
    ((), None, ['a', 'b']),
    ((), None, ['b', 'a b', 'a a a b']),
    ((2,), None, ['b', 'a b', 'k(1)']),
    ((2,), None, ['a', 'b', 'k(1)']),
    ((2,), None, ['b', 'a b', 'k(1) a b']),
    ((3,), None, ['b', 'a b', 'k(1)']),
    ((4,), (2,), ['a', 'b', 'k(1)']),
    ((2, 2), None, ['b', 'a b', 'k(0,1) b', 'k(1,0)']),
    ((2, 2), (1, 0), ['a', 'b', 'k(0,1)']),
    ((2,), None, ['a a a b', 'k(1) a- b', 'k(1) a b', 'a- a- b']),
    ((6,), None, ['k(4) a a a b', 'k(2) a a b', 'k(4) a- a- b', 'k(1) a b']),
]


def instance(factors, beta, texts):
    G = group(factors, beta)
    return G, make_genset(G, words(G, *texts), symmetric=True)


class RayTests(SimpleTestCase):
    def setUp(self):
        self.G = group()
        self.b, self.a2b = words(self.G, 'b', 'a a b')
        self.ray = base_ray(self.G, (self.G.b, self.G.b_prime))

    def test_base_ray(self):
        self.assertEqual(self.ray.motif, (self.G.identity, self.G.b))
        self.assertEqual(self.ray.period, self.G.a)
        self.assertEqual(self.ray.labels, (0, 1))

    def test_base_ray_of_an_infinite_cyclic_group(self):
        G = self.G
        ray = base_ray(G, (G.a, inv(G, G.a)))
        self.assertEqual(ray.motif, (G.identity,))
        self.assertEqual(ray.vertex(-3), normalize_word(G, 'a- a- a-'))

    def test_base_ray_rejects_finite_dihedral(self):
        G = group((2,))
        with self.assertRaises(InvalidInput):
            base_ray(G, (G.b, G.element([1], 0, 1)))

    def test_make_ray_rejects_bad_input(self):
        G = self.G
        with self.assertRaises(ConstructionError):
            make_ray(G, (G.b, G.b_prime), (G.identity, G.b), G.b)
        with self.assertRaises(ConstructionError):
            make_ray(G, (G.b, G.b_prime), (G.identity, G.a), G.a)
        with self.assertRaises(InvalidInput):
            GroupDoubleRay(G, (G.b,), (G.identity,), G.a, ())

    def test_rotate_and_reverse(self):
        G = self.G
        rotated = rotate(self.ray, 1)
        self.assertEqual(rotated.vertex(0), self.ray.vertex(1))
        self.assertEqual(rotated.vertex(5), self.ray.vertex(6))
        backwards = reverse_ray(self.ray)
        for j in range(-4, 5):
            self.assertEqual(backwards.vertex(j), self.ray.vertex(-j))
        self.assertEqual(backwards.period, inv(G, G.a))
        self.assertEqual(eps_one_first(self.ray).motif[0], G.b)

    def test_translate(self):
        G = self.G
        moved = translate(self.ray, G.b)
        for j in range(-4, 5):
            self.assertEqual(moved.vertex(j), mul(G, G.b, self.ray.vertex(j)))

    def test_locate_index(self):
        for j in range(-7, 8):
            self.assertEqual(locate_index(self.ray, self.ray.vertex(j)), j)
        even = base_ray(self.G, (self.b, self.a2b))
        self.assertIsNone(locate_index(even, self.G.a))

    def test_relabel(self):
        gens = (self.G.b_prime, self.G.b)
        self.assertEqual(relabel(self.ray, gens).labels, (1, 0))


class FinitePathTests(SimpleTestCase):
    FACTORS = [
        (), (2,), (3,), (4,), (2, 2), (5,), (6,), (7,), (8,), (9,), (2, 4), (3, 3),
        (10,), (11,), (12,), (2, 6), (2, 2, 2),
    ]

    def finite_groups(self):
        for factors in self.FACTORS:
            K = FiniteAbelianGroup(factors)
            for beta in k_enumerate(K):
                if K.reduce(tuple(2 * c for c in beta)) == K.zero:
                    yield GqdGroup(K, beta)

    def closure(self, G, gens):
        seen, frontier = {G.identity}, [G.identity]
        while frontier:
            g = frontier.pop()
            for s in gens:
                h = mul(G, g, s)
                if h not in seen:
                    seen.add(h)
                    frontier.append(h)
        return seen

    def test_every_small_generalized_dihedral_group(self):
        rng = random.Random(7)
        for G in self.finite_groups():
            elements = [GqdElem(k, 0, eps) for k in k_enumerate(G.K) for eps in (0, 1)]
            found = 0
            for _ in range(400):
                pool = elements[1:]
                picks = rng.sample(pool, min(rng.randint(1, 4), len(pool)))
                gens = list(dict.fromkeys(x for p in picks for x in (p, inv(G, p))))
                if self.closure(G, gens) != set(elements):
                    continue
                path = finite_ham_path(G, elements, gens)
                graph = nx.Graph((g, mul(G, g, s)) for g in elements for s in gens)
                self.assertTrue(verify_finite_path(graph, path).passed, (G, gens))
                self.assertEqual(path[0], G.identity)
                found += 1
                if found == 5:
                    break
            self.assertGreaterEqual(found, 5, G)

    def test_vertex_set_must_be_closed(self):
        G = group((4,))
        with self.assertRaises(InvalidInput):
            finite_ham_path(G, [G.identity, G.element([1])], [G.element([1])])

    def test_disconnected_graph(self):
        graph = nx.Graph([(0, 1), (2, 3)])
        with self.assertRaises(ConstructionError):
            hamiltonian_path(graph, 0)

    def test_star_has_no_hamiltonian_path(self):
        with self.assertRaises(ConstructionError):
            hamiltonian_path(nx.star_graph(3), 0)

    @override_settings(GQD_HAMILTON={'FINITE_PATH_BOUND': 4})
    def test_path_bound(self):
        with self.assertRaises(BudgetExceeded):
            hamiltonian_path(nx.path_graph(6), 0)


class LiftedSearchTests(SimpleTestCase):
    def test_dihedral_quotient(self):
        G = group()
        found = lifted_cycle_search(G, (G.b, G.b_prime), G.a, (1, -1))
        self.assertIsNotNone(found)
        path, v = found
        self.assertEqual(len(path), 2)
        self.assertIn(v, (1, -1))

    def test_no_pivot_falls_back_to_search(self):
        G, S = instance((2,), (1,), ['b', 'a b'])
        ray = periodic_ray_search(G, S.gens)
        window = build_window(G, S, RADIUS)
        self.assertTrue(verify_ray(window, ray, INNER).passed)

    @override_settings(GQD_HAMILTON={'SEARCH_NODE_BUDGET': 1, 'MAX_PERIOD_MULTIPLE': 1})
    def test_budget_is_reported_as_construction_failure(self):
        G, S = instance((2,), (1,), ['b', 'a b'])
        with self.assertRaises(ConstructionError):
            periodic_ray_search(G, S.gens)


class AbelianRayTests(SimpleTestCase):
    def test_finite_complement(self):
        G = group((2,))
        k = G.element([1])
        ray = abelian_double_ray(G, (G.a, inv(G, G.a), k))
        self.assertEqual(ray.motif, (G.identity, k, mul(G, G.a, k), G.a))
        self.assertEqual(ray.period, mul(G, G.a, G.a))

    def test_infinite_complement(self):
        G = group()
        gens = tuple(words(G, 'a a', 'a- a-', 'a a a', 'a- a- a-'))
        ray = abelian_double_ray(G, gens)
        self.assertEqual(ray.period, normalize_word(G, 'a a a a a a'))
        vertices = ray.segment(-30, 30)
        self.assertEqual(len(set(vertices)), len(vertices))
        for u, v in zip(vertices, vertices[1:]):
            self.assertIn(mul(G, inv(G, u), v), gens)
        self.assertTrue(set(range(-10, 11)) <= {v.i for v in vertices})

    def test_rejects_elements_outside(self):
        G = group()
        with self.assertRaises(InvalidInput):
            abelian_double_ray(G, (G.a, inv(G, G.a), G.b))


class CylinderTests(SimpleTestCase):
    def setUp(self):
        G = group()
        self.G = G
        self.gens = tuple(words(G, 'b', 'a b', 'a a a b'))
        self.s, self.t, _ = self.gens
        self.ladder = coset_ladder(G, self.gens, self.s, self.t)

    def test_rows_and_twist(self):
        G = self.G
        base = eps_one_first(base_ray(G, self.gens[1:]))
        rows = build_rows(G, self.gens, base, self.ladder)
        self.assertEqual(len(rows), 2)
        self.assertEqual(measure_twist(G, rows, self.s), -4)
        flipped = build_rows(G, self.gens, reverse_ray(base), self.ladder)
        self.assertEqual(measure_twist(G, flipped, self.s), 4)

    def test_next_row_follows_the_rungs(self):
        G = self.G
        base = relabel(eps_one_first(base_ray(G, self.gens[1:])), self.gens)
        row = next_row(G, base, self.s)
        for n in range(-4, 5):
            if base.vertex(n).eps:
                self.assertEqual(row.vertex(n), mul(G, base.vertex(n), self.s))

    def test_cylinder(self):
        cylinder = case1_cylinder(self.G, self.gens, self.ladder)
        self.assertEqual(cylinder.params, CylinderParams(2, 4))
        self.assertTrue(check_embedding(cylinder))

    def test_self_intersecting_rows_give_way_to_the_search(self):
        G, S = instance((2,), None, ['a a a b', 'k(1) a- b', 'k(1) a b', 'a- a- b'])
        tag = classify_case(G, S.gens)
        ladder = coset_ladder(G, S.gens, tag.pivot, tag.companion)
        cylinder = case1_cylinder(G, S.gens, ladder)
        if cylinder is not None:
            self.assertTrue(check_embedding(cylinder))
        ray = hamiltonian_double_ray(G, S)
        self.assertTrue(verify_ray(build_window(G, S, 10), ray, 8).passed)


class GridTests(SimpleTestCase):
    def test_finite_inside_part(self):
        G, S = instance((2,), None, ['b', 'a b', 'k(1)'])
        grid = case2i_grid(G, S.gens)
        self.assertEqual((grid.height, grid.columns), (2, 2))
        self.assertTrue(check_embedding(grid))

    def test_infinite_inside_part(self):
        G, S = instance((2,), None, ['a', 'b', 'k(1)'])
        grid = case2ii_grid(G, S.gens)
        self.assertEqual(grid.height, 2)
        self.assertTrue(check_embedding(grid))


class PipelineTests(SimpleTestCase):
    def test_double_rays(self):
        for factors, beta, texts in RAY_INSTANCES:
            G, S = instance(factors, beta, texts)
            ray = hamiltonian_double_ray(G, S)
            report = verify_ray(build_window(G, S, RADIUS), ray, INNER)
            self.assertTrue(report.passed, f'{G} {texts}: {report}')

    def test_circles(self):
        for factors, beta, texts in CIRCLE_INSTANCES:
            G, S = instance(factors, beta, texts)
            circle = hamiltonian_circle(G, S)
            report = verify_circle(build_window(G, S, RADIUS), circle, INNER)
            self.assertTrue(report.passed, f'{G} {texts}: {report}')

    def test_accepts_plain_element_lists(self):
        G = group()
        ray = hamiltonian_double_ray(G, [G.b, G.b_prime])
        self.assertEqual(len(ray), 2)

    def test_degree_two_has_no_circle(self):
        G = group()
        with self.assertRaises(InvalidInput):
            hamiltonian_circle(G, [G.b, G.b_prime])

    def test_non_generating_set(self):
        G = group((2,))
        with self.assertRaises(InvalidInput):
            hamiltonian_double_ray(G, words(G, 'b', 'a b'))

    @override_settings(GQD_HAMILTON={'RECURSION_DEPTH_LIMIT': 0})
    def test_recursion_limit(self):
        G = group()
        with self.assertRaises(BudgetExceeded):
            hamiltonian_double_ray(G, words(G, 'b', 'a b', 'a a a b'))

    @settings(max_examples=20, deadline=None)
    @given(st.lists(st.integers(-4, 4), min_size=3, max_size=3, unique=True))
    def test_three_reflections(self, shifts):
        x, y, z = shifts
        if gcd(y - x, z - x) != 1:
            return
        G = group()
        S = make_genset(G, [G.element(None, i, 1) for i in shifts])
        ray = hamiltonian_double_ray(G, S)
        self.assertTrue(verify_ray(build_window(G, S, RADIUS), ray, INNER).passed, shifts)

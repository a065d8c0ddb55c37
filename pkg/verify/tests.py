import random

import networkx as nx
from django.test import SimpleTestCase, override_settings
from hypothesis import given, settings, strategies as st

from abelian.models import FiniteAbelianGroup
from cayley.graphs import build_window, make_genset
from core.exceptions import InvalidInput, VerificationFailed
from gqd.algebra import normalize_word
from gqd.models import GqdGroup
from hamilton.models import GroupDoubleRay, HamCircle
from hamilton.pipeline import hamiltonian_circle, hamiltonian_double_ray
from hamilton.rays import translate
from verify.checks import (
    require_pass,
    verify_circle,
    verify_coord_rays,
    verify_finite_path,
    verify_ray,
)
from verify.models import VerifyReport
from walls.constructions import cylinder_double_ray, cylinder_two_rays, cylinder_window
from walls.models import CoordDoubleRay, CylinderParams, WallVertex as V

DIHEDRAL = GqdGroup(FiniteAbelianGroup(()))
Z2 = GqdGroup(FiniteAbelianGroup((2,)))


def with_motif(ray, motif, labels=None):
    return GroupDoubleRay(ray.group, ray.gens, tuple(motif), ray.period, tuple(labels or ray.labels))


class ReportTests(SimpleTestCase):
    def test_settle(self):
        report = VerifyReport(tail_status={'forward': True, 'backward': True}).settle()
        self.assertTrue(report.passed)
        report.missing.append('x')
        self.assertFalse(report.settle().passed)
        self.assertTrue(str(report).startswith('FAIL'))

    def test_require_pass(self):
        report = VerifyReport(notes=['coverage bound exceeded']).settle()
        with self.assertRaises(VerificationFailed) as caught:
            require_pass(report)
        self.assertIs(caught.exception.report, report)

    def test_to_dict(self):
        self.assertEqual(VerifyReport().to_dict()['duplicates'], [])


class GroupRayTests(SimpleTestCase):
    def setUp(self):
        G = Z2
        self.G = G
        self.S = make_genset(G, [normalize_word(G, w) for w in ('b', 'a b', 'k(1) a b')])
        self.window = build_window(G, self.S, 12)
        self.ray = hamiltonian_double_ray(G, self.S)

    def test_passes(self):
        report = verify_ray(self.window, self.ray, 10)
        self.assertTrue(report.passed, str(report))
        self.assertEqual(report.covered, report.expected)
        self.assertEqual(report.checked_inner_radius, 10)

    def test_monotone_in_the_inner_radius(self):
        for inner in range(0, 11):
            self.assertTrue(verify_ray(self.window, self.ray, inner).passed, inner)

    def test_deterministic(self):
        again = hamiltonian_double_ray(self.G, self.S)
        self.assertEqual(again, self.ray)
        self.assertEqual(verify_ray(self.window, again, 10), verify_ray(self.window, self.ray, 10))

    def test_inner_radius_needs_a_margin(self):
        with self.assertRaises(InvalidInput):
            verify_ray(self.window, self.ray, 12)
        with self.assertRaises(InvalidInput):
            verify_ray(self.window, self.ray, -1)

    def test_dropped_vertex(self):
        motif = list(self.ray.motif)
        labels = list(self.ray.labels)
        del motif[1], labels[1]
        report = verify_ray(self.window, with_motif(self.ray, motif, labels), 10)
        self.assertFalse(report.passed)
        self.assertTrue(report.missing or report.non_edges)

    def test_duplicated_vertex(self):
        motif = list(self.ray.motif)
        motif[1] = motif[0]
        report = verify_ray(self.window, with_motif(self.ray, motif), 10)
        self.assertFalse(report.passed)
        self.assertTrue(report.duplicates)

    def test_swapped_labels(self):
        labels = list(self.ray.labels)
        j = next(j for j in range(1, len(labels)) if labels[j] != labels[0])
        labels[0], labels[j] = labels[j], labels[0]
        report = verify_ray(self.window, with_motif(self.ray, self.ray.motif, labels), 10)
        self.assertFalse(report.passed)
        self.assertTrue(report.non_edges)

    def test_torsion_period(self):
        G = self.G
        ray = GroupDoubleRay(G, self.S.gens, self.ray.motif, G.b, self.ray.labels)
        report = verify_ray(self.window, ray, 10)
        self.assertFalse(report.passed)
        self.assertFalse(report.tail_status['period'])

    @override_settings(GQD_HAMILTON={'COVERAGE_BOUND': 10})
    def test_coverage_bound(self):
        report = verify_ray(self.window, self.ray, 10)
        self.assertFalse(report.passed)
        self.assertTrue(any('coverage bound' in note for note in report.notes))

    @settings(max_examples=40, deadline=None)
    @given(st.data())
    def test_random_mutations_fail(self, data):
        motif = list(self.ray.motif)
        j = data.draw(st.integers(0, len(motif) - 1))
        h = data.draw(st.integers(0, len(motif) - 1).filter(lambda h: h != j))
        motif[j] = motif[h]
        report = verify_ray(self.window, with_motif(self.ray, motif), 10)
        self.assertFalse(report.passed)

    def test_seeded_mutations_fail(self):
        window = build_window(self.G, self.S, 8)
        self.assertTrue(verify_ray(window, self.ray, 6).passed)
        rng = random.Random(23)
        p = len(self.ray)
        for _ in range(1000):
            motif, labels = list(self.ray.motif), list(self.ray.labels)
            j = rng.randrange(p)
            del motif[j], labels[j]
            self.assertFalse(verify_ray(window, with_motif(self.ray, motif, labels), 6).passed, ('drop', j))

            motif = list(self.ray.motif)
            j, h = rng.sample(range(p), 2)
            motif[j] = motif[h]
            self.assertFalse(verify_ray(window, with_motif(self.ray, motif), 6).passed, ('duplicate', j, h))

            labels = list(self.ray.labels)
            j, h = rng.sample(range(p), 2)
            if labels[j] == labels[h]:
                h = next(h for h in range(p) if labels[h] != labels[j])
            labels[j], labels[h] = labels[h], labels[j]
            self.assertFalse(verify_ray(window, with_motif(self.ray, self.ray.motif, labels), 6).passed, ('swap', j, h))

    def test_wrong_window_type(self):
        with self.assertRaises(InvalidInput):
            verify_ray(cylinder_window(CylinderParams(2, 2), -5, 5), self.ray, 2)


class GroupCircleTests(SimpleTestCase):
    def setUp(self):
        G = DIHEDRAL
        self.G = G
        self.S = make_genset(G, [G.a, normalize_word(G, 'a-'), G.b])
        self.window = build_window(G, self.S, 12)
        self.circle = hamiltonian_circle(G, self.S)

    def test_passes(self):
        self.assertTrue(verify_circle(self.window, self.circle, 10).passed)

    def test_same_ray_twice(self):
        report = verify_circle(self.window, HamCircle(self.circle.first, self.circle.first), 10)
        self.assertFalse(report.passed)
        self.assertTrue(report.duplicates)
        self.assertTrue(report.missing)

    def test_one_ray_is_not_a_circle(self):
        with self.assertRaises(InvalidInput):
            verify_circle(self.window, [self.circle.first], 10)

    def test_translated_circle_still_spans(self):
        moved = HamCircle(translate(self.circle.first, self.G.b), translate(self.circle.second, self.G.b))
        self.assertTrue(verify_circle(self.window, moved, 10).passed)


class CoordinateTests(SimpleTestCase):
    def test_cylinder_ray(self):
        p = CylinderParams(4, 2)
        window = cylinder_window(p, -20, 20)
        self.assertTrue(verify_ray(window, cylinder_double_ray(p), 15).passed)

    def test_row_alone_misses_vertices(self):
        p = CylinderParams(3, 3)
        window = cylinder_window(p, -20, 20)
        report = verify_ray(window, CoordDoubleRay((V(0, 0),), 1), 10)
        self.assertFalse(report.passed)
        self.assertTrue(report.missing)
        self.assertFalse(report.non_edges)

    def test_circle_halves_overlap(self):
        p = CylinderParams(4, 4)
        window = cylinder_window(p, -20, 20)
        first, _ = cylinder_two_rays(p)
        report = verify_coord_rays(window, [first, first.translated(p.k + p.l)], 10)
        self.assertFalse(report.passed)

    def test_non_edge(self):
        p = CylinderParams(2, 2)
        window = cylinder_window(p, -20, 20)
        report = verify_ray(window, CoordDoubleRay((V(0, 0), V(0, 1)), 1), 10)
        self.assertTrue(report.non_edges)


class FinitePathTests(SimpleTestCase):
    def test_cycle_graph(self):
        graph = nx.cycle_graph(5)
        self.assertTrue(verify_finite_path(graph, [0, 1, 2, 3, 4]).passed)
        report = verify_finite_path(graph, [0, 2, 1, 3, 4])
        self.assertFalse(report.passed)
        self.assertEqual(len(report.non_edges), 2)
        self.assertFalse(verify_finite_path(graph, [0, 1, 2, 3]).passed)
        self.assertFalse(verify_finite_path(graph, [0, 1, 2, 3, 4, 0]).passed)

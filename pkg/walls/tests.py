import json
from collections import Counter

import networkx as nx
from django.test import SimpleTestCase
from networkx.algorithms.isomorphism import GraphMatcher

from core.exceptions import InvalidInput
from verify.checks import verify_circle, verify_finite_path, verify_ray
from walls.constructions import (
    block,
    column,
    cylinder_double_ray,
    cylinder_iso,
    cylinder_iso_inverse,
    cylinder_two_rays,
    cylinder_window,
    grid_double_ray,
    grid_two_rays,
    grid_window,
    iso_preserves_window,
    snake,
    staircase,
    staircase_ray,
    wall_window,
)
from walls.export import dot_counts, graph_to_dot, graph_to_json, ray_edges
from walls.models import CoordDoubleRay, CylinderParams, WallVertex as V

SPAN = 40
INNER = 30


def cylinders(k_max=8, l_max=10):
    for k in range(2, k_max + 1):
        for l in range(l_max + 1):
            if (k + l) % 2 == 0:
                yield CylinderParams(k, l)


class WindowTests(SimpleTestCase):
    def test_wall_degrees(self):
        graph = wall_window(4, -5, 5).graph
        for v in graph:
            if -5 < v.n < 5:
                self.assertLessEqual(graph.degree(v), 3)
                self.assertGreaterEqual(graph.degree(v), 2)

    def test_cylinder_is_cubic_inside(self):
        p = CylinderParams(4, 2)
        window = cylinder_window(p, -10, 10)
        for v in window.graph:
            if -7 <= v.n <= 7:
                self.assertEqual(window.graph.degree(v), 3, v)

    def test_twisted_edges(self):
        window = cylinder_window(CylinderParams(3, 1), 0, 4)
        self.assertTrue(window.graph.has_edge(V(0, 2), V(1, 0)))
        self.assertEqual(window.graph[V(0, 2)][V(1, 0)]['kind'], 'twisted')
        self.assertFalse(window.graph.has_edge(V(1, 2), V(2, 0)))

    def test_invalid_parameters(self):
        with self.assertRaises(InvalidInput):
            CylinderParams(3, 2)
        with self.assertRaises(InvalidInput):
            CylinderParams(1, 1)
        with self.assertRaises(InvalidInput):
            wall_window(3, 4, 2)
        with self.assertRaises(InvalidInput):
            CoordDoubleRay((V(0, 0),), 0)


class SubpathTests(SimpleTestCase):
    def test_column_even_height(self):
        p = CylinderParams(4, 4)
        self.assertEqual(
            column(p, 0),
            [V(1, 0), V(2, 0), V(2, 1), V(1, 1), V(1, 2), V(2, 2), V(2, 3), V(1, 3)],
        )

    def test_column_odd_height(self):
        p = CylinderParams(3, 1)
        self.assertEqual(column(p, 0), [V(1, 0), V(0, 0), V(0, 1), V(1, 1), V(1, 2), V(0, 2)])

    def test_snakes_are_hamiltonian_on_their_blocks(self):
        for p in (CylinderParams(4, 4), CylinderParams(5, 3), CylinderParams(6, 2)):
            window = cylinder_window(p, -12, 12)
            for i in (-2, 0, 1):
                for two_j in (2, 4, 6):
                    path = snake(p, i, two_j)
                    subgraph = window.graph.subgraph(block(p, i, two_j))
                    self.assertTrue(verify_finite_path(subgraph, path).passed, (p, i, two_j))
                    self.assertEqual(path[0], V(2 * i + 1, 0))

    def test_snake_length_must_be_even(self):
        with self.assertRaises(InvalidInput):
            snake(CylinderParams(4, 4), 0, 3)

    def test_staircase(self):
        p = CylinderParams(4, 2)
        self.assertEqual(staircase(p, 0)[:3], [V(1, 0), V(2, 0), V(2, 1)])
        window = cylinder_window(p, -SPAN, SPAN)
        rays = [staircase_ray(p, r) for r in range(p.half_sum)]
        counts = Counter()
        for ray in rays:
            self.assertEqual(ray.shift, 6)
            vertices = ray.segment(-60, 60)
            for u, v in zip(vertices, vertices[1:]):
                if window.contains(u) and window.contains(v):
                    self.assertTrue(window.graph.has_edge(u, v), (u, v))
            counts.update(v for v in vertices if abs(v.n) <= 20)
        self.assertEqual(set(counts), {v for v in window.graph if abs(v.n) <= 20})
        self.assertEqual(set(counts.values()), {1})


class ReparameterizationTests(SimpleTestCase):
    def test_target_parameters(self):
        self.assertEqual(cylinder_iso(CylinderParams(3, 1)).target, CylinderParams(2, 4))
        self.assertEqual(cylinder_iso(CylinderParams(4, 2)).target, CylinderParams(3, 5))
        self.assertEqual(cylinder_iso(CylinderParams(3, 3)).target, CylinderParams(3, 3))

    def test_rejects_degenerate_targets(self):
        with self.assertRaises(InvalidInput):
            cylinder_iso(CylinderParams(2, 0))
        with self.assertRaises(InvalidInput):
            cylinder_iso(CylinderParams(2, 8))

    def test_inverse_undoes_forward(self):
        for p in (CylinderParams(3, 1), CylinderParams(4, 2), CylinderParams(5, 5)):
            iso, back = cylinder_iso(p), cylinder_iso_inverse(p)
            for v in cylinder_window(p, -9, 9).graph:
                self.assertEqual(back(iso.forward(v)), v)

    def test_preserves_windows(self):
        for p in cylinders():
            if p.half_sum >= 2 and 3 * p.k >= p.l:
                self.assertTrue(iso_preserves_window(p, -20, 20), p)

    def test_graph_matcher_agrees(self):
        for p in (CylinderParams(3, 1), CylinderParams(4, 0), CylinderParams(4, 2)):
            iso = cylinder_iso(p)
            source = cylinder_window(p, -4, 4).graph
            image = {iso.forward(v) for v in source}
            cols = [v.n for v in image]
            target = cylinder_window(iso.target, min(cols), max(cols)).graph.subgraph(image)
            self.assertTrue(GraphMatcher(source, target).is_isomorphic(), p)

    def test_rows_pull_back_to_staircases(self):
        p = CylinderParams(4, 2)
        iso = cylinder_iso(p)
        pulled = iso.pull_back(CoordDoubleRay((V(2, 1),), 1))
        self.assertEqual(pulled.shift, p.k + p.l)
        self.assertEqual(list(pulled.motif), staircase(p, 1))


class CylinderRayTests(SimpleTestCase):
    def test_double_rays(self):
        for p in cylinders():
            window = cylinder_window(p, -SPAN, SPAN)
            report = verify_ray(window, cylinder_double_ray(p), INNER)
            self.assertTrue(report.passed, f'{p}: {report}')

    def test_circles(self):
        for p in cylinders():
            window = cylinder_window(p, -SPAN, SPAN)
            report = verify_circle(window, cylinder_two_rays(p), INNER)
            self.assertTrue(report.passed, f'{p}: {report}')

    def test_ladder(self):
        ray = cylinder_double_ray(CylinderParams(2, 0))
        self.assertEqual(ray.shift, 2)
        self.assertEqual(len(ray), 4)

    def test_window_too_narrow(self):
        p = CylinderParams(4, 6)
        with self.assertRaises(InvalidInput):
            verify_ray(cylinder_window(p, -20, 20), cylinder_double_ray(p), 18)


class GridRayTests(SimpleTestCase):
    def test_double_rays(self):
        for height in range(1, 6):
            window = grid_window(height, -SPAN, SPAN)
            self.assertTrue(verify_ray(window, grid_double_ray(height), INNER).passed, height)

    def test_circles(self):
        for height in range(2, 6):
            window = grid_window(height, -SPAN, SPAN)
            self.assertTrue(verify_circle(window, grid_two_rays(height), INNER).passed, height)

    def test_circle_needs_two_rows(self):
        with self.assertRaises(InvalidInput):
            grid_two_rays(1)


class ExportTests(SimpleTestCase):
    def test_dot_round_trip(self):
        window = cylinder_window(CylinderParams(4, 4), -8, 8)
        text = graph_to_dot(window.graph)
        self.assertEqual(
            dot_counts(text),
            (window.graph.number_of_nodes(), window.graph.number_of_edges()),
        )

    def test_highlighted_edges(self):
        p = CylinderParams(4, 4)
        window = cylinder_window(p, -8, 8)
        text = graph_to_dot(window.graph, layers=[ray_edges(column(p, 0))])
        self.assertIn('blue', text)
        payload = json.loads(graph_to_json(window.graph, highlight=ray_edges(column(p, 0))))
        marked = [e for e in payload['edges'] if e['highlight']]
        self.assertEqual(len(marked), len(column(p, 0)) - 1)

    def test_plain_graph(self):
        graph = nx.path_graph(4)
        self.assertEqual(dot_counts(graph_to_dot(graph)), (4, 3))

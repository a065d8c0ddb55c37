"""Finite-window verification of periodic double rays, circles and finite paths.

A periodic ray is expanded over indices [-M, M], M chosen from the drift of
its period so that every vertex of the inner window it can reach lies in the
expanded range. Cayley windows need inner_radius <= radius - 1 so every edge
leaving the inner ball stays inside the window.
"""
import logging
from collections import Counter
from math import ceil

from cayley.models import CayleyWindow
from core.conf import budget
from core.exceptions import InvalidInput, VerificationFailed
from gqd.algebra import inv, is_torsion, mul
from hamilton.models import GroupDoubleRay
from verify.models import VerifyReport
from walls.models import CoordDoubleRay, WallWindow

logger = logging.getLogger(__name__)

MARGIN = 1


def _expansion(p, reach, drift):
    """Index bound M such that |index| > M moves the ray past ``reach``."""
    return (ceil(reach / drift) + 2) * p


# Cayley windows

def _group_inner(window: CayleyWindow, inner_radius):
    if inner_radius < 0:
        raise InvalidInput(f'inner radius must be >= 0, got {inner_radius}')
    if inner_radius > window.radius - MARGIN:
        raise InvalidInput(
            f'inner radius {inner_radius} needs a window of radius >= {inner_radius + MARGIN}, got {window.radius}'
        )
    return {g for g in window.ball(inner_radius)}


def group_bound(ray: GroupDoubleRay, inner):
    reach = max(abs(g.i) for g in inner) + max(abs(g.i) for g in ray.motif)
    return _expansion(len(ray), reach + 1, abs(ray.period.i))


def _check_group_ray(window, ray, inner, report):
    """Adjacency and tails of one ray; returns the expanded vertex list."""
    G = window.group
    if is_torsion(G, ray.period):
        report.tail_status['period'] = False
        report.notes.append(f'period {ray.period} has finite order')
        return None
    bound = group_bound(ray, inner)
    if 2 * bound + 1 > budget('COVERAGE_BOUND'):
        report.notes.append(f'coverage bound {budget("COVERAGE_BOUND")} exceeded by {2 * bound + 1} indices')
        return None
    vertices = ray.segment(-bound, bound)
    for offset, (u, v) in enumerate(zip(vertices, vertices[1:])):
        j = offset - bound
        label = ray.label(j)
        step = mul(G, inv(G, u), v)
        ok = label < len(ray.gens) and ray.gens[label] == step and step in window.gens.gens
        if ok and window.contains(u) and window.contains(v):
            ok = window.graph.has_edge(u, v) and window.graph[u][v]['label'] == window.gens.index(step)
        if not ok:
            report.non_edges.append(f'{j}: {u} -> {v}')
    report.tail_status.setdefault('period', True)
    report.tail_status['forward'] = report.tail_status.get('forward', True) and vertices[-1] not in inner
    report.tail_status['backward'] = report.tail_status.get('backward', True) and vertices[0] not in inner
    return vertices


def _coverage(report, inner, expanded):
    counts = Counter(v for vertices in expanded for v in vertices)
    report.duplicates.extend(str(v) for v in sorted(v for v, c in counts.items() if c > 1))
    report.missing.extend(str(v) for v in sorted(inner - counts.keys()))
    report.covered = len(inner & counts.keys())
    report.expected = len(inner)


def verify_group_rays(window: CayleyWindow, rays, inner_radius) -> VerifyReport:
    """Joint check: the rays together cover the inner ball exactly once."""
    report = VerifyReport(checked_inner_radius=inner_radius)
    inner = _group_inner(window, inner_radius)
    expanded = []
    for ray in rays:
        vertices = _check_group_ray(window, ray, inner, report)
        if vertices is None:
            return report.settle()
        expanded.append(vertices)
    _coverage(report, inner, expanded)
    return report.settle()


# Wall windows

def _coord_inner(window: WallWindow, inner_radius, reach):
    if inner_radius < 0:
        raise InvalidInput(f'inner radius must be >= 0, got {inner_radius}')
    if window.n_lo > -inner_radius - reach or window.n_hi < inner_radius + reach:
        raise InvalidInput(
            f'{window} must span columns [{-inner_radius - reach}, {inner_radius + reach}]'
        )
    return {v for v in window.graph if abs(v.n) <= inner_radius}


def _check_coord_ray(window, ray: CoordDoubleRay, inner, inner_radius, report):
    reach = inner_radius + max(abs(v.n) for v in ray.motif) + 1
    bound = _expansion(len(ray), reach, abs(ray.shift))
    if 2 * bound + 1 > budget('COVERAGE_BOUND'):
        report.notes.append(f'coverage bound {budget("COVERAGE_BOUND")} exceeded by {2 * bound + 1} indices')
        return None
    vertices = ray.segment(-bound, bound)
    for v in vertices:
        if abs(v.n) <= inner_radius and v not in window.graph:
            report.non_edges.append(f'{v} is not a vertex of the window')
    for offset, (u, v) in enumerate(zip(vertices, vertices[1:])):
        if u in window.graph and v in window.graph and not window.graph.has_edge(u, v):
            report.non_edges.append(f'{offset - bound}: {u} -> {v}')
    report.tail_status['period'] = True
    report.tail_status['forward'] = report.tail_status.get('forward', True) and vertices[-1] not in inner
    report.tail_status['backward'] = report.tail_status.get('backward', True) and vertices[0] not in inner
    return vertices


def verify_coord_rays(window: WallWindow, rays, inner_radius) -> VerifyReport:
    report = VerifyReport(checked_inner_radius=inner_radius)
    twist = window.params.l if window.params else 0
    inner = _coord_inner(window, inner_radius, max(twist, 1))
    expanded = []
    for ray in rays:
        vertices = _check_coord_ray(window, ray, inner, inner_radius, report)
        if vertices is None:
            return report.settle()
        expanded.append(vertices)
    _coverage(report, inner, expanded)
    return report.settle()


# Public checks

def verify_ray(window, ray, inner_radius) -> VerifyReport:
    if isinstance(window, CayleyWindow) and isinstance(ray, GroupDoubleRay):
        report = verify_group_rays(window, [ray], inner_radius)
    elif isinstance(window, WallWindow) and isinstance(ray, CoordDoubleRay):
        report = verify_coord_rays(window, [ray], inner_radius)
    else:
        raise InvalidInput(f'cannot check a {type(ray).__name__} on a {type(window).__name__}')
    logger.debug('verify_ray: %s', report)
    return report


def verify_circle(window, circle, inner_radius) -> VerifyReport:
    """Two rays: disjoint, jointly spanning the inner window, each reaching both ends."""
    rays = list(circle)
    if len(rays) != 2:
        raise InvalidInput(f'a Hamiltonian circle has two double rays, got {len(rays)}')
    if isinstance(window, CayleyWindow) and all(isinstance(r, GroupDoubleRay) for r in rays):
        report = verify_group_rays(window, rays, inner_radius)
    elif isinstance(window, WallWindow) and all(isinstance(r, CoordDoubleRay) for r in rays):
        report = verify_coord_rays(window, rays, inner_radius)
    else:
        raise InvalidInput(f'cannot check these rays on a {type(window).__name__}')
    logger.debug('verify_circle: %s', report)
    return report


def verify_finite_path(graph, path) -> VerifyReport:
    report = VerifyReport()
    nodes = set(graph.nodes)
    counts = Counter(path)
    report.duplicates = [str(v) for v in sorted(v for v, c in counts.items() if c > 1)]
    report.missing = [str(v) for v in sorted(nodes - counts.keys())]
    report.non_edges = [f'{u} -> {v}' for u, v in zip(path, path[1:]) if not graph.has_edge(u, v)]
    report.non_edges += [f'{v} is not a vertex' for v in counts.keys() - nodes]
    report.covered = len(nodes & counts.keys())
    report.expected = len(nodes)
    return report.settle()


def require_pass(report: VerifyReport) -> VerifyReport:
    if not report.passed:
        raise VerificationFailed(report, str(report))
    return report

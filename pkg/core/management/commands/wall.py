from core.exceptions import InvalidInput
from core.management.base import GqdCommand
from walls.constructions import (
    block,
    column,
    cylinder_double_ray,
    cylinder_two_rays,
    cylinder_window,
    grid_double_ray,
    grid_two_rays,
    grid_window,
    snake,
    staircase,
    staircase_ray,
    wall_window,
)
from walls.export import coord_edges, graph_to_dot, graph_to_json, ray_edges
from walls.models import CylinderParams

SHOWS = ['none', 'column', 'snake', 'block', 'staircase', 'ray', 'circle', 'iso-rows']


def cylinder_layers(params, window, show, index=0, width=2):
    """Edge lists to highlight, one colour per list."""
    if show == 'none':
        return []
    if show == 'column':
        return [ray_edges(column(params, index))]
    if show == 'snake':
        return [ray_edges(snake(params, index, width))]
    if show == 'block':
        return [list(window.graph.subgraph(block(params, index, width)).edges)]
    if show == 'staircase':
        return [ray_edges(staircase(params, index))]
    if show == 'ray':
        return [coord_edges(cylinder_double_ray(params), window)]
    if show == 'circle':
        return [coord_edges(ray, window) for ray in cylinder_two_rays(params)]
    return [coord_edges(staircase_ray(params, r), window) for r in range(params.half_sum)]


def grid_layers(height, window, show):
    if show == 'none':
        return []
    if show == 'ray':
        return [coord_edges(grid_double_ray(height), window)]
    if show == 'circle':
        return [coord_edges(ray, window) for ray in grid_two_rays(height)]
    raise InvalidInput(f'--show {show} is only available on twisted cylinders')


class Command(GqdCommand):
    help = 'Emit a wall, grid or twisted cylinder window with a construction overlay'
    formats = ('dot', 'json')

    def add_arguments(self, parser):
        parser.add_argument('--k', type=int, required=True, help='Height of the wall, grid or cylinder')
        parser.add_argument('--l', type=int, default=None, help='Twist; omit for a plain wall')
        parser.add_argument('--grid', action='store_true', help='Use the grid P_k x Z')
        parser.add_argument('--show', choices=SHOWS, default='none')
        parser.add_argument('--range', type=int, nargs=2, default=[-8, 8], metavar=('LO', 'HI'))
        parser.add_argument('--index', type=int, default=0, help='i for column, snake, block and staircase')
        parser.add_argument('--width', type=int, default=2, help='2j for snake and block')
        super().add_arguments(parser)

    def run(self, **options):
        k, l, show = options['k'], options['l'], options['show']
        lo, hi = options['range']
        if options['grid']:
            window = grid_window(k, lo, hi)
            layers = grid_layers(k, window, show)
        elif l is None:
            if show != 'none':
                raise InvalidInput('overlays need a twisted cylinder (--l) or a grid (--grid)')
            window = wall_window(k, lo, hi)
            layers = []
        else:
            params = CylinderParams(k, l)
            window = cylinder_window(params, lo, hi)
            layers = cylinder_layers(params, window, show, options['index'], options['width'])
        if options['format'] == 'json':
            self.stdout.write(graph_to_json(window.graph, layers=layers))
        else:
            self.stdout.write(graph_to_dot(window.graph, layers=layers))

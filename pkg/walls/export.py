import json

import networkx as nx
import pydot

PALETTE = ('red', 'blue', 'darkgreen', 'orange', 'purple', 'brown')


def _marks(highlight, layers):
    """Edge -> colour; ``highlight`` is drawn in the first colour, each layer in the next."""
    marks = {}
    for index, edges in enumerate([highlight, *layers]):
        for edge in edges:
            marks.setdefault(frozenset(edge), PALETTE[index % len(PALETTE)])
    return marks


def graph_to_dot(graph: nx.Graph, highlight=(), layers=()) -> str:
    """DOT text with vertices named by str(); marked edges drawn bold in colour."""
    marks = _marks(highlight, layers)
    named = nx.Graph()
    for v in graph.nodes:
        named.add_node(str(v))
    for u, v, data in graph.edges(data=True):
        attrs = {key: str(value) for key, value in data.items()}
        colour = marks.get(frozenset((u, v)))
        if colour:
            attrs.update(color=colour, penwidth='2.5')
        named.add_edge(str(u), str(v), **attrs)
    return nx.nx_pydot.to_pydot(named).to_string()


def graph_to_json(graph: nx.Graph, highlight=(), layers=()) -> str:
    marks = _marks(highlight, layers)
    payload = {
        'vertices': [str(v) for v in graph.nodes],
        'edges': [
            {
                'source': str(u),
                'target': str(v),
                **{key: str(value) for key, value in data.items()},
                'highlight': marks.get(frozenset((u, v))),
            }
            for u, v, data in graph.edges(data=True)
        ],
    }
    return json.dumps(payload, indent=2)


def dot_counts(text: str) -> tuple[int, int]:
    """Parse DOT text back and count (vertices, edges)."""
    parsed = pydot.graph_from_dot_data(text)[0]
    nodes = {n.get_name().strip('"') for n in parsed.get_nodes() if n.get_name() not in ('node', 'edge', 'graph')}
    for edge in parsed.get_edges():
        nodes.add(str(edge.get_source()).strip('"'))
        nodes.add(str(edge.get_destination()).strip('"'))
    return len(nodes), len(parsed.get_edges())


def ray_edges(vertices):
    return list(zip(vertices, vertices[1:]))


def coord_edges(ray, window):
    """Edges of a coordinate double ray inside a wall window."""
    reach = max(abs(window.n_lo), abs(window.n_hi)) + max(abs(v.n) for v in ray.motif)
    bound = (reach // abs(ray.shift) + 2) * len(ray)
    vertices = ray.segment(-bound, bound)
    return [(u, v) for u, v in zip(vertices, vertices[1:]) if window.graph.has_edge(u, v)]

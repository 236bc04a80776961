"""
G-classes inside a normal subgroup N and the graph on the non-central ones:
two classes are joined when their sizes are not coprime.
"""
import logging
from dataclasses import dataclass, field

import networkx as nx
import numpy as np

from classgraph_library.constants import Shapes
from classgraph_library.exceptions import NotNormal, ParentMismatch
from classgraph_library.permgroup import conjugation_orbits, is_normal

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GClass(object):
    id: int
    representative: int
    members: frozenset
    size: int
    rep_order: int

    @property
    def is_central(self):
        return self.size == 1


@dataclass
class ClassGraph(object):
    classes: list
    vertices: list
    adjacency: np.ndarray
    central_classes: list
    graph: nx.Graph = field(repr=False)

    @property
    def class_sizes(self):
        return [c.size for c in self.classes]

    @property
    def vertex_sizes(self):
        return [size for _, size in self.vertices]

    @property
    def edge_count(self):
        return self.graph.number_of_edges()

    def vertex_class(self, class_id):
        return self.classes[class_id]


@dataclass(frozen=True)
class GraphShape(object):
    tag: str
    vertices: int
    edges: int
    triangles: int
    components: int


def _check_pair(G, N):
    if N.parent is not G:
        raise ParentMismatch('The subgroup does not belong to {}.'.format(G.name))
    if not is_normal(G, N):
        raise NotNormal('The subgroup of order {} is not normal in {}.'.format(N.order, G.name))


def g_classes(G, N):
    """
    The orbits of G acting on N by conjugation, sorted by size, then element
    order of the representative, then the representative's image array. The
    representative is the lexicographically smallest member.
    """
    def compute():
        _check_pair(G, N)
        orders = G.element_orders()
        keyed = []
        for orbit in conjugation_orbits(G, N.members):
            representative = min(orbit, key=G.elements.__getitem__)
            keyed.append(((len(orbit), orders[representative], G.elements[representative]), representative, orbit))
        keyed.sort(key=lambda item: item[0])
        return [
            GClass(id=position, representative=representative, members=orbit, size=len(orbit), rep_order=orders[representative])
            for position, (_, representative, orbit) in enumerate(keyed)
        ]
    return G.memo(('g_classes', N.members), compute)


def build_gamma(G, N):
    classes = g_classes(G, N)
    central = [c for c in classes if c.size == 1]
    vertices = [(c.id, c.size) for c in classes if c.size > 1]
    sizes = np.array([size for _, size in vertices], dtype=np.int64)
    adjacency = np.gcd.outer(sizes, sizes) > 1
    np.fill_diagonal(adjacency, False)

    graph = nx.Graph()
    graph.add_nodes_from(class_id for class_id, _ in vertices)
    for i, j in zip(*np.nonzero(np.triu(adjacency))):
        graph.add_edge(vertices[i][0], vertices[j][0])
    logger.debug('Graph for %s over a subgroup of order %d: sizes %s.', G.name, N.order, sizes.tolist())
    return ClassGraph(classes=classes, vertices=vertices, adjacency=adjacency, central_classes=central, graph=graph)


def components(g):
    return sorted((frozenset(part) for part in nx.connected_components(g.graph)), key=min)


def triangle_count(g):
    return sum(nx.triangles(g.graph).values()) // 3


def is_complete(g, vertex_set):
    vertex_set = sorted(vertex_set)
    return all(
        g.graph.has_edge(a, b)
        for position, a in enumerate(vertex_set)
        for b in vertex_set[position + 1:]
    )


def classify_shape(g):
    vertices = len(g.vertices)
    edges = g.edge_count
    triangles = triangle_count(g)
    parts = len(components(g))
    tag = Shapes.OTHER
    if vertices == 0:
        tag = Shapes.EMPTY
    elif vertices == 1:
        tag = Shapes.ONE_VERTEX
    elif vertices == 2:
        tag = Shapes.TWO_EDGE if edges == 1 else Shapes.TWO_ISOLATED
    elif vertices == 3:
        tag = {1: Shapes.THREE_ONE_EDGE, 2: Shapes.THREE_LINE, 3: Shapes.TRIANGLE}.get(edges, Shapes.OTHER)
    return GraphShape(tag=tag, vertices=vertices, edges=edges, triangles=triangles, components=parts)


def conjugacy_class_of(G, x):
    return conjugation_orbits(G, [G.index_of(x)])[0]


def is_real_element(G, x, conjugates=None):
    """
    Whether x is conjugate to its inverse; `conjugates` is the class of x
    when the caller already has it.
    """
    x = G.index_of(x)
    if conjugates is None:
        conjugates = conjugacy_class_of(G, x)
    return G.inverse(x) in conjugates


def is_real_class(G, c):
    return is_real_element(G, c.representative, c.members)


def has_distinct_class_sizes(classes):
    sizes = [c.size for c in classes]
    return len(set(sizes)) == len(sizes)


def to_dot(g, name='gamma'):
    lines = ['graph {} {{'.format(name)]
    for class_id, size in sorted(g.vertices):
        lines.append('  C{0} [label="C{0}:{1}"];'.format(class_id, size))
    for a, b in sorted(tuple(sorted(edge)) for edge in g.graph.edges()):
        lines.append('  C{} -- C{};'.format(a, b))
    lines.append('}')
    return '\n'.join(lines) + '\n'


def graph_report(g):
    shape = classify_shape(g)
    return {
        'class_sizes': g.class_sizes,
        'shape': shape.tag,
        'components': shape.components,
        'triangles': shape.triangles,
    }

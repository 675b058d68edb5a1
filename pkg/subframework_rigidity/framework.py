# coding=utf-8
"""Undirected graphs and their realizations as frameworks."""
from __future__ import division

import numpy as np
import networkx as nx
from scipy.spatial.distance import pdist

from honeybee.typing import int_in_range

from .exceptions import DegenerateRealization


class Graph(object):
    """An undirected simple graph over the vertices 0, 1, ..., vertex_count - 1.

    Edges are stored in the canonical EdgeOrder: each edge is a tuple (i, j)
    with i < j and the tuple of edges is sorted lexicographically. The row
    blocks of every matrix built from a graph follow this order.

    Args:
        vertex_count: A positive integer for the number of vertices.
        edges: An iterable of vertex pairs. Pairs may be given in any order
            but self-loops, duplicates and out-of-range endpoints are rejected.

    Properties:
        * vertex_count
        * edges
        * edge_count
        * edge_index
    """
    __slots__ = ('_vertex_count', '_edges', '_edge_index', '_neighbors', '_nx_graph')

    def __init__(self, vertex_count, edges=()):
        """Initialize Graph."""
        self._vertex_count = int_in_range(vertex_count, 1, input_name='vertex_count')
        self._edges = self._canonical_edges(edges, self._vertex_count)
        self._edge_index = {e: k for k, e in enumerate(self._edges)}
        neighbors = [[] for _ in range(self._vertex_count)]
        for i, j in self._edges:
            neighbors[i].append(j)
            neighbors[j].append(i)
        self._neighbors = tuple(tuple(sorted(nb)) for nb in neighbors)
        self._nx_graph = None

    @classmethod
    def complete(cls, vertex_count):
        """Get the complete graph on a number of vertices."""
        return cls(vertex_count, ((i, j) for i in range(vertex_count)
                                  for j in range(i + 1, vertex_count)))

    @classmethod
    def path(cls, vertex_count):
        """Get the path graph 0 - 1 - ... - (vertex_count - 1)."""
        return cls(vertex_count, ((i, i + 1) for i in range(vertex_count - 1)))

    @classmethod
    def cycle(cls, vertex_count):
        """Get the cycle graph on a number of vertices."""
        edges = [(i, i + 1) for i in range(vertex_count - 1)]
        edges.append((0, vertex_count - 1))
        return cls(vertex_count, edges)

    @property
    def vertex_count(self):
        """Get an integer for the number of vertices."""
        return self._vertex_count

    @property
    def edges(self):
        """Get a tuple of (i, j) edges with i < j in lexicographic order."""
        return self._edges

    @property
    def edge_count(self):
        """Get an integer for the number of edges."""
        return len(self._edges)

    @property
    def edge_index(self):
        """Get a dictionary from each (i, j) edge to its row block in EdgeOrder."""
        return self._edge_index

    def neighbors(self, vertex):
        """Get a sorted tuple with the neighbors of a vertex."""
        return self._neighbors[vertex]

    def degree(self, vertex):
        """Get the number of neighbors of a vertex."""
        return len(self._neighbors[vertex])

    def has_edge(self, i, j):
        """Get a boolean noting whether {i, j} is an edge of the graph."""
        return (min(i, j), max(i, j)) in self._edge_index

    def is_connected(self):
        """Get a boolean noting whether the graph is connected."""
        return nx.is_connected(self.to_networkx())

    def subgraph(self, vertices):
        """Get the subgraph induced by a set of vertices.

        Args:
            vertices: An iterable of vertex indices of this graph.

        Returns:
            A tuple with two elements.

            -   graph -- The induced Graph, whose vertex k is vertices[k] in
                sorted order.

            -   vertex_map -- A tuple mapping each local vertex to the global one.
        """
        vertex_map = tuple(sorted(set(vertices)))
        local = {v: k for k, v in enumerate(vertex_map)}
        edges = [(local[i], local[j]) for i, j in self._edges
                 if i in local and j in local]
        return Graph(len(vertex_map), edges), vertex_map

    def to_networkx(self):
        """Get a networkx Graph with the same vertices and edges."""
        if self._nx_graph is None:
            g = nx.Graph()
            g.add_nodes_from(range(self._vertex_count))
            g.add_edges_from(self._edges)
            self._nx_graph = g
        return self._nx_graph

    def to_dict(self):
        """Get Graph as a dictionary."""
        return {
            'type': 'Graph',
            'vertex_count': self._vertex_count,
            'edges': [list(e) for e in self._edges]
        }

    @classmethod
    def from_dict(cls, data):
        """Initialize a Graph from a dictionary.

        .. code-block:: python

            {
            "type": "Graph",
            "vertex_count": 3,
            "edges": [[0, 1], [1, 2], [0, 2]]
            }
        """
        assert data['type'] == 'Graph', \
            'Expected Graph dictionary. Got {}.'.format(data['type'])
        return cls(data['vertex_count'], [tuple(e) for e in data['edges']])

    @staticmethod
    def _canonical_edges(edges, vertex_count):
        """Check a list of vertex pairs and sort it into EdgeOrder."""
        seen = set()
        for k, pair in enumerate(edges):
            i, j = (int(v) for v in pair)
            if i == j:
                raise ValueError('Graph edges[{}] is a self-loop on vertex {}.'.format(
                    k, i))
            if not (0 <= i < vertex_count and 0 <= j < vertex_count):
                raise ValueError(
                    'Graph edges[{}] = ({}, {}) has an endpoint outside of '
                    '[0, {}).'.format(k, i, j, vertex_count))
            edge = (i, j) if i < j else (j, i)
            if edge in seen:
                raise ValueError('Graph edges[{}] duplicates edge {}.'.format(k, edge))
            seen.add(edge)
        return tuple(sorted(seen))

    def __eq__(self, other):
        return isinstance(other, Graph) and \
            self._vertex_count == other._vertex_count and self._edges == other._edges

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self._vertex_count, self._edges))

    def __copy__(self):
        return Graph(self._vertex_count, self._edges)

    def duplicate(self):
        """Get a copy of this object."""
        return self.__copy__()

    def ToString(self):
        """Overwrite .NET ToString method."""
        return self.__repr__()

    def __repr__(self):
        return 'Graph: [{} vertices] [{} edges]'.format(
            self._vertex_count, len(self._edges))


class Framework(object):
    """A graph together with an injective realization of its vertices in R^d.

    Args:
        graph: A Graph for the framework topology.
        positions: An array-like of shape (vertex_count, d) with the position of
            each vertex in meters. The dimension d must be at least 2 and no
            two vertices may share a position.

    Properties:
        * graph
        * positions
        * flat_positions
        * dim
        * vertex_count
        * edges
    """
    __slots__ = ('_graph', '_positions')

    def __init__(self, graph, positions):
        """Initialize Framework."""
        assert isinstance(graph, Graph), \
            'Expected Graph for Framework graph. Got {}.'.format(type(graph))
        positions = np.array(positions, dtype=float)
        if positions.ndim != 2:
            raise ValueError('Framework positions must be a 2D array. Got {} '
                             'dimensions.'.format(positions.ndim))
        if positions.shape[0] != graph.vertex_count:
            raise ValueError(
                'Framework has {} positions for {} vertices.'.format(
                    positions.shape[0], graph.vertex_count))
        if positions.shape[1] < 2:
            raise ValueError('Framework dimension must be at least 2. Got {}.'.format(
                positions.shape[1]))
        if not np.all(np.isfinite(positions)):
            raise ValueError('Framework positions must be finite.')
        if positions.shape[0] > 1 and np.min(pdist(positions)) == 0:
            raise DegenerateRealization(
                'Framework realization is not injective: two vertices coincide.')
        positions.setflags(write=False)
        self._graph = graph
        self._positions = positions

    @classmethod
    def from_dict(cls, data):
        """Initialize a Framework from a dictionary.

        Args:
            data: A dictionary representation of a Framework in the format below.
                Vertex ids are the indices of the positions array.

        .. code-block:: python

            {
            "type": "Framework",  # optional
            "dim": 2,
            "positions": [[0, 0], [1, 0], [0, 1]],  # meters
            "edges": [[0, 1], [1, 2], [0, 2]]
            }
        """
        if 'type' in data:
            assert data['type'] == 'Framework', \
                'Expected Framework dictionary. Got {}.'.format(data['type'])
        for key in ('dim', 'positions', 'edges'):
            if key not in data:
                raise ValueError('Framework dictionary is missing the "{}" key.'.format(
                    key))
        dim = data['dim']
        for k, pos in enumerate(data['positions']):
            if len(pos) != dim:
                raise ValueError(
                    'Framework positions[{}] has {} coordinates. Expected dim = '
                    '{}.'.format(k, len(pos), dim))
        graph = Graph(len(data['positions']), [tuple(e) for e in data['edges']])
        return cls(graph, np.array(data['positions'], dtype=float).reshape(-1, dim))

    @property
    def graph(self):
        """Get the Graph of the framework."""
        return self._graph

    @property
    def positions(self):
        """Get a read-only array of shape (vertex_count, dim) with the positions."""
        return self._positions

    @property
    def flat_positions(self):
        """Get the stacked realization vector p in R^(d|V|)."""
        return self._positions.reshape(-1)

    @property
    def dim(self):
        """Get an integer for the spatial dimension d."""
        return self._positions.shape[1]

    @property
    def vertex_count(self):
        """Get an integer for the number of vertices."""
        return self._graph.vertex_count

    @property
    def edges(self):
        """Get the edges of the framework graph in EdgeOrder."""
        return self._graph.edges

    def is_connected(self):
        """Get a boolean noting whether the framework graph is connected."""
        return self._graph.is_connected()

    def subframework(self, vertices):
        """Get the framework induced by a set of vertices.

        Returns:
            A tuple with the induced Framework and the tuple mapping its local
            vertices to the vertices of this framework.
        """
        graph, vertex_map = self._graph.subgraph(vertices)
        return Framework(graph, self._positions[list(vertex_map)]), vertex_map

    def move(self, moving_vec):
        """Get a copy of this Framework translated along a vector."""
        return Framework(self._graph, self._positions + np.asarray(moving_vec))

    def scale(self, factor, origin=None):
        """Get a copy of this Framework scaled by a factor from an origin point.

        Args:
            factor: A positive number for the scale factor.
            origin: An optional point to scale from. If None, the centroid of
                the realization is used.
        """
        assert factor > 0, 'Framework scale factor must be positive. Got {}.'.format(
            factor)
        origin = self._positions.mean(axis=0) if origin is None else np.asarray(origin)
        return Framework(self._graph, origin + factor * (self._positions - origin))

    def to_dict(self):
        """Get Framework as a dictionary."""
        return {
            'type': 'Framework',
            'dim': self.dim,
            'positions': self._positions.tolist(),
            'edges': [list(e) for e in self._graph.edges]
        }

    def duplicate(self):
        """Get a copy of this object."""
        return self.__copy__()

    def __copy__(self):
        return Framework(self._graph, np.array(self._positions))

    def ToString(self):
        """Overwrite .NET ToString method."""
        return self.__repr__()

    def __repr__(self):
        return 'Framework: [{} vertices] [{} edges] [R^{}]'.format(
            self.vertex_count, self._graph.edge_count, self.dim)

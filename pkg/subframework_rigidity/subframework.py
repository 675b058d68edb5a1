# coding=utf-8
"""Ball subframeworks, minimal radii and the subframework rigidity test."""
from __future__ import division

import logging
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .bearing import DEFAULT_TOLERANCE, is_idr
from .exceptions import DisconnectedGraph, InconsistentRealization
from .framework import Graph, Framework
from .graphutil import graph_distances, hop_distances_from, diameter
from .laplacian import is_ibr_spectral

_logger = logging.getLogger(__name__)

MEASUREMENTS = ('bearing', 'distance')


class BallSubframework(object):
    """The framework induced by all vertices within r hops of a center vertex.

    Args:
        center: Index of the center vertex in the parent framework.
        radius: Integer hop radius r.
        framework: The induced Framework, with local vertex indices.
        vertex_map: A tuple mapping each local vertex to its global index.

    Properties:
        * center
        * radius
        * framework
        * vertex_map
        * vertices
        * local_center
        * diameter
    """
    __slots__ = ('_center', '_radius', '_framework', '_vertex_map', '_local')

    def __init__(self, center, radius, framework, vertex_map):
        assert len(vertex_map) == framework.vertex_count, \
            'BallSubframework vertex_map must cover every local vertex.'
        self._center = center
        self._radius = radius
        self._framework = framework
        self._vertex_map = tuple(vertex_map)
        self._local = {v: k for k, v in enumerate(self._vertex_map)}

    @property
    def center(self):
        """Get the global index of the center vertex."""
        return self._center

    @property
    def radius(self):
        """Get the hop radius of the ball."""
        return self._radius

    @property
    def framework(self):
        """Get the induced Framework with local vertex indices."""
        return self._framework

    @property
    def vertex_map(self):
        """Get a tuple mapping local vertex indices to global ones."""
        return self._vertex_map

    @property
    def vertices(self):
        """Get a frozenset with the global vertices of the ball."""
        return frozenset(self._vertex_map)

    @property
    def local_center(self):
        """Get the local index of the center vertex."""
        return self._local[self._center]

    @property
    def diameter(self):
        """Get the hop diameter of the induced graph."""
        return diameter(self._framework.graph)

    def local_index(self, vertex):
        """Get the local index of a global vertex of the ball."""
        return self._local[vertex]

    def ToString(self):
        """Overwrite .NET ToString method."""
        return self.__repr__()

    def __repr__(self):
        return 'BallSubframework: [center {}] [radius {}] [{} vertices]'.format(
            self._center, self._radius, len(self._vertex_map))


def ball(framework, center, radius, distances=None):
    """Get the ball subframework of a given radius around a center vertex.

    Args:
        framework: A Framework.
        center: Index of the center vertex.
        radius: Non-negative integer hop radius.
        distances: Optional all-pairs hop distance table of the framework graph.
    """
    assert 0 <= center < framework.vertex_count, \
        'Ball center {} is not a vertex of the framework.'.format(center)
    assert radius >= 0, 'Ball radius must be non-negative. Got {}.'.format(radius)
    if distances is None:
        members = hop_distances_from(framework.graph, center, cutoff=radius).keys()
    else:
        members = np.flatnonzero(distances[center] <= radius).tolist()
    sub, vertex_map = framework.subframework(members)
    return BallSubframework(center, radius, sub, vertex_map)


def _is_rigid(framework, measurement, tol):
    """Run the rigidity test of a measurement type on a small framework."""
    if framework.vertex_count < 2:
        return False
    if measurement == 'bearing':
        return is_ibr_spectral(framework, tol=tol)
    return is_idr(framework, tol, allow_small=True)


def minimal_radius(framework, vertex, tol=DEFAULT_TOLERANCE, measurement='bearing',
                   distances=None):
    """Get the smallest hop radius whose ball around a vertex is rigid.

    Args:
        framework: A Framework.
        vertex: Index of the center vertex.
        tol: Relative threshold of the rigidity test.
        measurement: Either "bearing" (spectral test with unit weights) or
            "distance" (distance rigidity matrix rank test). (Default: bearing).
        distances: Optional all-pairs hop distance table of the framework graph.

    Returns:
        An integer radius, or None if no ball around the vertex is rigid.
    """
    assert measurement in MEASUREMENTS, \
        'Measurement "{}" is not one of {}.'.format(measurement, MEASUREMENTS)
    if distances is None:
        row = hop_distances_from(framework.graph, vertex)
    else:
        row = {v: int(h) for v, h in enumerate(distances[vertex]) if np.isfinite(h)}
    reach = max(row.values())
    for radius in range(1, reach + 1):
        members = [v for v, h in row.items() if h <= radius]
        sub, _ = framework.subframework(members)
        if _is_rigid(sub, measurement, tol):
            return radius
    return None


class Decomposition(object):
    """Minimal ball subframeworks of every vertex and their inverse membership.

    Use decompose to compute the minimal radii, or from_radii to rebuild the
    balls of frozen radii on a new realization.

    Args:
        framework: The decomposed Framework.
        radii: A list with the minimal radius r*_i of each vertex, or None where
            no ball around the vertex is rigid.
        distances: Optional all-pairs hop distance table of the framework graph.

    Properties:
        * framework
        * radii
        * balls
        * membership
        * emission_radii
        * distances
        * is_rigid
    """
    __slots__ = ('_framework', '_radii', '_balls', '_membership', '_emission',
                 '_distances')

    def __init__(self, framework, radii, distances=None):
        """Initialize Decomposition."""
        assert len(radii) == framework.vertex_count, 'Decomposition needs one ' \
            'radius per vertex. Got {} for {}.'.format(len(radii), framework.vertex_count)
        self._framework = framework
        self._radii = tuple(None if r is None else int(r) for r in radii)
        self._distances = graph_distances(framework.graph) if distances is None \
            else distances
        self._balls = tuple(
            None if r is None else ball(framework, i, r, self._distances)
            for i, r in enumerate(self._radii))
        membership, emission = [], []
        for i in range(framework.vertex_count):
            centers = tuple(
                j for j, r in enumerate(self._radii)
                if r is not None and self._distances[i, j] <= r)
            membership.append(centers)
            emission.append(
                int(max(self._distances[i, j] for j in centers)) if centers else 0)
        self._membership = tuple(membership)
        self._emission = tuple(emission)

    @classmethod
    def from_radii(cls, framework, radii):
        """Build a Decomposition with fixed radii over a (possibly new) framework."""
        return cls(framework, radii)

    @classmethod
    def from_dict(cls, data, framework):
        """Initialize a Decomposition from a dictionary and its framework.

        .. code-block:: python

            {
            "type": "Decomposition",
            "r_star": [1, 1, 2, null],  # null where no ball is rigid
            "membership": [[0, 1], ...],  # recomputed from r_star
            "q": [1, 1, 2, 0]  # recomputed from r_star
            }
        """
        if 'type' in data:
            assert data['type'] == 'Decomposition', \
                'Expected Decomposition dictionary. Got {}.'.format(data['type'])
        return cls(framework, data['r_star'])

    @property
    def framework(self):
        """Get the decomposed Framework."""
        return self._framework

    @property
    def radii(self):
        """Get a tuple of the minimal radii, with None for infinite ones."""
        return self._radii

    @property
    def balls(self):
        """Get a tuple with the minimal BallSubframework of each vertex or None."""
        return self._balls

    @property
    def membership(self):
        """Get a tuple with, for each vertex i, the centers j whose ball contains i."""
        return self._membership

    @property
    def emission_radii(self):
        """Get a tuple with the emission radius q_i of each vertex."""
        return self._emission

    @property
    def distances(self):
        """Get the all-pairs hop distance table of the framework graph."""
        return self._distances

    @property
    def is_rigid(self):
        """Get a boolean noting whether every minimal radius is finite."""
        return all(r is not None for r in self._radii)

    def to_dict(self):
        """Get Decomposition as a dictionary."""
        return {
            'type': 'Decomposition',
            'r_star': list(self._radii),
            'membership': [list(m) for m in self._membership],
            'q': list(self._emission)
        }

    def ToString(self):
        """Overwrite .NET ToString method."""
        return self.__repr__()

    def __repr__(self):
        finite = [r for r in self._radii if r is not None]
        return 'Decomposition: [{} vertices] [max radius {}] [{}]'.format(
            len(self._radii), max(finite) if finite else None,
            'rigid' if self.is_rigid else 'not rigid')


def decompose(framework, tol=DEFAULT_TOLERANCE, measurement='bearing', workers=None):
    """Compute the minimal ball subframework of every vertex of a framework.

    Args:
        framework: A connected Framework.
        tol: Relative threshold of the rigidity test.
        measurement: Either "bearing" or "distance". (Default: bearing).
        workers: Optional number of threads for the per-vertex searches.
    """
    if not framework.is_connected():
        raise DisconnectedGraph('Only connected frameworks can be decomposed.')
    distances = graph_distances(framework.graph)

    def search(vertex):
        return minimal_radius(framework, vertex, tol, measurement, distances)

    vertices = range(framework.vertex_count)
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            radii = list(pool.map(search, vertices))
    else:
        radii = [search(v) for v in vertices]
    _logger.debug('Minimal %s radii: %s', measurement, radii)
    return Decomposition(framework, radii, distances)


def is_ibr_subframework(framework, tol=DEFAULT_TOLERANCE):
    """Test bearing rigidity of a connected framework through its minimal radii."""
    return decompose(framework, tol).is_rigid


def union(framework, other, shared_vertex_map):
    """Get the union of two frameworks that share some vertices.

    Args:
        framework: The first Framework. Its vertices keep their indices.
        other: The second Framework.
        shared_vertex_map: A dictionary from vertices of the second framework
            to the vertices of the first framework they coincide with. The
            remaining vertices of the second framework are appended in order.

    Returns:
        The union Framework.
    """
    n = framework.vertex_count
    index, next_id = {}, n
    for v in range(other.vertex_count):
        if v in shared_vertex_map:
            target = shared_vertex_map[v]
            if np.max(np.abs(other.positions[v] - framework.positions[target])) > 1e-12:
                raise InconsistentRealization(
                    'Shared vertex {} -> {} is placed at {} and {}.'.format(
                        v, target, other.positions[v].tolist(),
                        framework.positions[target].tolist()))
            index[v] = target
        else:
            index[v] = next_id
            next_id += 1
    positions = np.zeros((next_id, framework.dim))
    positions[:n] = framework.positions
    for v, k in index.items():
        if k >= n:
            positions[k] = other.positions[v]
    edges = set(framework.edges)
    for i, j in other.edges:
        a, b = index[i], index[j]
        edges.add((min(a, b), max(a, b)))
    return Framework(Graph(next_id, edges), positions)


def shared_vertex_flex(framework, second_vertices, hinge):
    """Get the flex of a union that rotates-scales one side about a shared vertex.

    For two frameworks glued at a single vertex a, the vector with u_i = 0 on
    the first side and u_i = p_i - p_a on the second side is in the null space
    of the bearing Laplacian of the union without being a trivial motion.

    Args:
        framework: The union Framework.
        second_vertices: Indices of the union vertices of the second framework.
        hinge: Index of the single shared vertex a.

    Returns:
        A vector of length d|V|.
    """
    u = np.zeros((framework.vertex_count, framework.dim))
    for v in second_vertices:
        u[v] = framework.positions[v] - framework.positions[hinge]
    return u.reshape(-1)

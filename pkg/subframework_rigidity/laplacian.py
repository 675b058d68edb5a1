# coding=utf-8
"""Weighted bearing Laplacians, their spectra and spectral rigidity tests."""
from __future__ import division

import numpy as np
from scipy.linalg import eigh, lstsq, LinAlgError

from .bearing import DEFAULT_TOLERANCE, bearing, projection, numerical_rank
from .exceptions import MissingWeight, NumericalFailure, NotLocalizable, \
    UnsupportedSize


class EdgeWeights(object):
    """Symmetric weights w_ij = w_ji assigned to undirected edges.

    Args:
        weights: A dictionary from vertex pairs to weights. Each unordered
            pair may appear only once, in either orientation.
        allow_decay: Boolean to accept weights that have decayed to zero, as
            produced by the sigmoid sensing model far outside the sensing
            range. Otherwise weights must be strictly positive. (Default: False).

    Properties:
        * allow_decay
        * edges
    """
    __slots__ = ('_weights', '_allow_decay')

    def __init__(self, weights, allow_decay=False):
        """Initialize EdgeWeights."""
        self._allow_decay = bool(allow_decay)
        clean = {}
        for pair, value in weights.items():
            i, j = int(pair[0]), int(pair[1])
            edge = (i, j) if i < j else (j, i)
            assert edge not in clean, \
                'EdgeWeights got edge {} more than once.'.format(edge)
            value = float(value)
            if not np.isfinite(value) or value < 0 or \
                    (value == 0 and not self._allow_decay):
                raise ValueError(
                    'EdgeWeights weight of edge {} must be positive. Got {}.'.format(
                        edge, value))
            clean[edge] = value
        self._weights = clean

    @classmethod
    def unit(cls, graph):
        """Get unit weights for every edge of a graph."""
        return cls({e: 1.0 for e in graph.edges})

    @classmethod
    def from_dict(cls, data):
        """Initialize EdgeWeights from a dictionary.

        .. code-block:: python

            {
            "type": "EdgeWeights",
            "weights": [[0, 1, 1.0], [1, 2, 0.5]]  # i, j, w_ij
            }
        """
        assert data['type'] == 'EdgeWeights', \
            'Expected EdgeWeights dictionary. Got {}.'.format(data['type'])
        allow = data['allow_decay'] if 'allow_decay' in data else False
        return cls({(int(i), int(j)): w for i, j, w in data['weights']}, allow)

    @property
    def allow_decay(self):
        """Get a boolean noting whether zero weights are accepted."""
        return self._allow_decay

    @property
    def edges(self):
        """Get a sorted tuple of the weighted edges."""
        return tuple(sorted(self._weights))

    def weight(self, i, j):
        """Get the weight of edge {i, j}."""
        try:
            return self._weights[(i, j) if i < j else (j, i)]
        except KeyError:
            raise MissingWeight('No weight assigned to edge {}.'.format((i, j)))

    def scaled(self, factor):
        """Get a copy of these weights multiplied by a positive factor."""
        assert factor > 0, 'Weight scale factor must be positive.'
        return EdgeWeights({e: factor * w for e, w in self._weights.items()},
                           self._allow_decay)

    def to_dict(self):
        """Get EdgeWeights as a dictionary."""
        return {
            'type': 'EdgeWeights',
            'weights': [[i, j, w] for (i, j), w in sorted(self._weights.items())],
            'allow_decay': self._allow_decay
        }

    def __len__(self):
        return len(self._weights)

    def __contains__(self, edge):
        i, j = edge
        return ((i, j) if i < j else (j, i)) in self._weights

    def __copy__(self):
        return EdgeWeights(dict(self._weights), self._allow_decay)

    def duplicate(self):
        """Get a copy of this object."""
        return self.__copy__()

    def ToString(self):
        """Overwrite .NET ToString method."""
        return self.__repr__()

    def __repr__(self):
        return 'EdgeWeights: [{} edges]'.format(len(self._weights))


class Spectrum(object):
    """Ascending eigenvalues of a bearing Laplacian and their eigenvectors.

    Args:
        eigenvalues: A vector of eigenvalues sorted in ascending order.
        eigenvectors: A matrix whose column k is the unit eigenvector of
            eigenvalue k.
    """
    __slots__ = ('_eigenvalues', '_eigenvectors')

    def __init__(self, eigenvalues, eigenvectors):
        self._eigenvalues = eigenvalues
        self._eigenvectors = eigenvectors

    @property
    def eigenvalues(self):
        """Get the ascending vector of eigenvalues."""
        return self._eigenvalues

    @property
    def eigenvectors(self):
        """Get the matrix of orthonormal eigenvectors aligned by column."""
        return self._eigenvectors

    @property
    def max_eigenvalue(self):
        """Get the largest eigenvalue."""
        return self._eigenvalues[-1]

    def to_dict(self):
        """Get Spectrum as a dictionary of JSON arrays."""
        return {
            'type': 'Spectrum',
            'eigenvalues': self._eigenvalues.tolist(),
            'eigenvectors': self._eigenvectors.tolist()
        }

    def ToString(self):
        """Overwrite .NET ToString method."""
        return self.__repr__()

    def __repr__(self):
        return 'Spectrum: [{} eigenvalues]'.format(len(self._eigenvalues))


class BearingLaplacian(object):
    """The weighted bearing Laplacian B of a framework.

    The (i, j) block of an edge is -w_ij P_ij and each diagonal block is the
    sum of w_ij P_ij over the neighbors j of i. Use bearing_laplacian to build one.

    Args:
        framework: The Framework the Laplacian was built from.
        weights: The EdgeWeights used for the edges of the framework.
        matrix: The symmetric (d|V|, d|V|) array.

    Properties:
        * framework
        * weights
        * matrix
        * dim
        * vertex_count
        * spectrum
    """
    __slots__ = ('_framework', '_weights', '_matrix', '_spectrum')

    def __init__(self, framework, weights, matrix):
        self._framework = framework
        self._weights = weights
        matrix.setflags(write=False)
        self._matrix = matrix
        self._spectrum = None

    @property
    def framework(self):
        """Get the Framework of this Laplacian."""
        return self._framework

    @property
    def weights(self):
        """Get the EdgeWeights of this Laplacian."""
        return self._weights

    @property
    def matrix(self):
        """Get the read-only symmetric matrix."""
        return self._matrix

    @property
    def spectrum(self):
        """Get the ascending Spectrum of the matrix, computed on first access."""
        if self._spectrum is None:
            try:
                values, vectors = eigh(self._matrix)
            except LinAlgError as e:
                raise NumericalFailure('Eigendecomposition failed: {}'.format(e))
            if not (np.all(np.isfinite(values)) and np.all(np.isfinite(vectors))):
                raise NumericalFailure('Eigendecomposition returned non-finite values.')
            self._spectrum = Spectrum(values, vectors)
        return self._spectrum

    @property
    def dim(self):
        """Get the spatial dimension d."""
        return self._framework.dim

    @property
    def vertex_count(self):
        """Get the number of vertices."""
        return self._framework.vertex_count

    def quadratic(self, u):
        """Get u^T B u for a vector of length d|V|."""
        u = np.asarray(u, dtype=float)
        return float(u @ self._matrix @ u)

    def ToString(self):
        """Overwrite .NET ToString method."""
        return self.__repr__()

    def __repr__(self):
        return 'BearingLaplacian: [{0}x{0}]'.format(self._matrix.shape[0])


def _assemble(vertex_count, dim, edge_blocks):
    """Assemble a Laplacian from (i, j, w_ij * P_ij) edge blocks."""
    matrix = np.zeros((dim * vertex_count, dim * vertex_count))
    for i, j, block in edge_blocks:
        si, sj = slice(dim * i, dim * (i + 1)), slice(dim * j, dim * (j + 1))
        matrix[si, si] += block
        matrix[sj, sj] += block
        matrix[si, sj] -= block
        matrix[sj, si] -= block
    return matrix


def bearing_laplacian(framework, weights=None):
    """Build the weighted bearing Laplacian of a framework.

    Args:
        framework: A Framework.
        weights: EdgeWeights with a weight for every edge of the framework.
            If None, unit weights are used. (Default: None).
    """
    weights = EdgeWeights.unit(framework.graph) if weights is None else weights
    pos = framework.positions
    blocks = []
    for i, j in framework.edges:
        w = weights.weight(i, j)
        blocks.append((i, j, w * projection(bearing(pos[i], pos[j]))))
    matrix = _assemble(framework.vertex_count, framework.dim, blocks)
    return BearingLaplacian(framework, weights, matrix)


def spectrum(laplacian):
    """Get the full ascending eigendecomposition of a bearing Laplacian."""
    return laplacian.spectrum


def rigidity_eigenvalue(laplacian):
    """Get the rigidity eigenvalue lambda_(d+2) of a bearing Laplacian."""
    d, n = laplacian.dim, laplacian.vertex_count
    if d * n < d + 2:
        raise UnsupportedSize(
            'A {}-vertex framework in R^{} has no rigidity eigenvalue.'.format(n, d))
    return spectrum(laplacian).eigenvalues[d + 1]


def is_ibr_spectral(framework, weights=None, tol=DEFAULT_TOLERANCE):
    """Test infinitesimal bearing rigidity with the rigidity eigenvalue.

    The framework is IBR iff lambda_(d+2) > tol * lambda_max.
    """
    laplacian = bearing_laplacian(framework, weights)
    value = rigidity_eigenvalue(laplacian)
    return bool(value > tol * spectrum(laplacian).max_eigenvalue)


def _edge_residuals(laplacian, u):
    """Get P_ij (u_i - u_j) for every edge, stacked by row in EdgeOrder."""
    d = laplacian.dim
    u = np.asarray(u, dtype=float).reshape(-1, d)
    pos = laplacian.framework.positions
    residuals = np.zeros((laplacian.framework.graph.edge_count, d))
    for k, (i, j) in enumerate(laplacian.framework.edges):
        residuals[k] = projection(bearing(pos[i], pos[j])) @ (u[i] - u[j])
    return residuals


def quadratic_form(laplacian, u):
    """Get sum over edges of w_ij (u_i - u_j)^T P_ij (u_i - u_j).

    This equals u^T B u for the Laplacian B.
    """
    d = laplacian.dim
    u_blocks = np.asarray(u, dtype=float).reshape(-1, d)
    total = 0.0
    for (i, j), res in zip(laplacian.framework.edges, _edge_residuals(laplacian, u)):
        # P is idempotent, so (u_i - u_j)^T P (u_i - u_j) = (u_i - u_j)^T P r
        total += laplacian.weights.weight(i, j) * float(res @ (u_blocks[i] - u_blocks[j]))
    return total


def null_test(laplacian, u, tol=1e-9):
    """Test whether P_ij (u_i - u_j) vanishes on every edge.

    Args:
        laplacian: A BearingLaplacian.
        u: A vector of length d|V|.
        tol: Threshold on each edge residual relative to the norm of u.
    """
    scale = np.linalg.norm(u)
    if scale == 0 or laplacian.framework.graph.edge_count == 0:
        return True
    return bool(np.all(np.linalg.norm(_edge_residuals(laplacian, u), axis=1)
                       <= tol * scale))


def bearing_measurements(framework):
    """Get the bearing b_ij of every edge {i, j}, i < j, as a dictionary."""
    pos = framework.positions
    return {(i, j): bearing(pos[i], pos[j]) for i, j in framework.edges}


def localize(graph, bearings, anchors, weights=None, tol=DEFAULT_TOLERANCE):
    """Recover the positions of free vertices from bearings and anchor positions.

    The bearing Laplacian is partitioned into free and anchor blocks and
    B_ff p_f = -B_fa p_a is solved in the least squares sense.

    Args:
        graph: The Graph over which bearings were measured.
        bearings: A dictionary from each edge (i, j), i < j, to the unit bearing
            b_ij pointing from i to j.
        anchors: A dictionary from anchor vertex to its known position.
        weights: Optional EdgeWeights. Unit weights are used if None.
        tol: Relative threshold for the rank of B_ff.

    Returns:
        A dictionary from each free vertex to its recovered position.
    """
    if len(anchors) < 2:
        raise NotLocalizable('Localization needs at least 2 anchors. Got {}.'.format(
            len(anchors)))
    weights = EdgeWeights.unit(graph) if weights is None else weights
    dim = len(next(iter(anchors.values())))
    blocks = []
    for i, j in graph.edges:
        if (i, j) not in bearings:
            raise NotLocalizable('No bearing measured on edge {}.'.format((i, j)))
        blocks.append((i, j, weights.weight(i, j) * projection(bearings[(i, j)])))
    matrix = _assemble(graph.vertex_count, dim, blocks)

    free = [v for v in range(graph.vertex_count) if v not in anchors]
    if not free:
        return {}
    anchor_ids = sorted(anchors)
    f_idx = np.concatenate([np.arange(dim * v, dim * (v + 1)) for v in free])
    a_idx = np.concatenate([np.arange(dim * v, dim * (v + 1)) for v in anchor_ids])
    b_ff = matrix[np.ix_(f_idx, f_idx)]
    b_fa = matrix[np.ix_(f_idx, a_idx)]
    if numerical_rank(b_ff, tol) < b_ff.shape[0]:
        raise NotLocalizable(
            'The free block of the bearing Laplacian is singular: {} free vertices '
            'cannot be located from anchors {}.'.format(len(free), anchor_ids))
    p_a = np.concatenate([np.asarray(anchors[v], dtype=float) for v in anchor_ids])
    p_f = lstsq(b_ff, -b_fa @ p_a)[0]
    return {v: p_f[dim * k:dim * (k + 1)] for k, v in enumerate(free)}

# coding=utf-8
"""Bearings, rigidity matrices and rank-based rigidity tests."""
from __future__ import division

import numpy as np
from scipy.linalg import orth, svdvals

from .exceptions import DegenerateRealization, InvalidBearing, UnsupportedSize

DEFAULT_TOLERANCE = 1e-8
"""Relative threshold for numerical rank and eigenvalue positivity tests."""


def bearing(p_i, p_j):
    """Get the unit vector pointing from p_i toward p_j.

    Args:
        p_i: Array-like for the position of the observer.
        p_j: Array-like for the position of the observed point.
    """
    diff = np.asarray(p_j, dtype=float) - np.asarray(p_i, dtype=float)
    dist = np.linalg.norm(diff)
    if dist == 0:
        raise DegenerateRealization(
            'Bearing between coincident points {} is undefined.'.format(
                np.asarray(p_i).tolist()))
    return diff / dist


def bearing_function(framework):
    """Get the stacked bearings b_ij of every edge {i, j} with i < j in EdgeOrder.

    Returns:
        A vector of length d * |E|.
    """
    pos = framework.positions
    if framework.graph.edge_count == 0:
        return np.zeros(0)
    return np.concatenate([bearing(pos[i], pos[j]) for i, j in framework.edges])


def projection(b):
    """Get the orthogonal projector I - b b^T onto the complement of a bearing.

    Args:
        b: A unit vector.
    """
    b = np.asarray(b, dtype=float)
    if abs(np.linalg.norm(b) - 1.0) > 1e-9:
        raise InvalidBearing('Expected a unit vector. Got norm {}.'.format(
            np.linalg.norm(b)))
    return np.eye(b.size) - np.outer(b, b)


def bearing_rigidity_matrix(framework):
    """Get the bearing rigidity matrix, the Jacobian of the bearing function.

    The row block of edge {i, j} (i < j) holds -P_ij / d_ij in the column block
    of i and P_ij / d_ij in the column block of j.

    Returns:
        A (d|E|, d|V|) array.
    """
    d, pos = framework.dim, framework.positions
    matrix = np.zeros((d * framework.graph.edge_count, d * framework.vertex_count))
    for k, (i, j) in enumerate(framework.edges):
        diff = pos[j] - pos[i]
        dist = np.linalg.norm(diff)
        block = projection(diff / dist) / dist
        matrix[d * k:d * (k + 1), d * i:d * (i + 1)] = -block
        matrix[d * k:d * (k + 1), d * j:d * (j + 1)] = block
    return matrix


def trivial_motion_basis(positions):
    """Get an orthonormal basis of the trivial motions span{1 (x) I_d, p}.

    Args:
        positions: An array of shape (n, d) with the realization.

    Returns:
        A (d*n, k) array with orthonormal columns, where k = d + 1 whenever
        the realization has at least two distinct points.
    """
    positions = np.asarray(positions, dtype=float)
    n, d = positions.shape
    motions = np.hstack([np.kron(np.ones((n, 1)), np.eye(d)),
                         positions.reshape(-1, 1)])
    return orth(motions)


def numerical_rank(matrix, tol=DEFAULT_TOLERANCE):
    """Get the number of singular values above tol times the largest one."""
    if matrix.size == 0:
        return 0
    sigma = svdvals(matrix)
    if sigma[0] == 0:
        return 0
    return int(np.sum(sigma > tol * sigma[0]))


def is_ibr_rank(framework, tol=DEFAULT_TOLERANCE):
    """Test infinitesimal bearing rigidity with the rank of the rigidity matrix.

    The framework is IBR iff rank(R) = d|V| - d - 1.
    """
    n, d = framework.vertex_count, framework.dim
    if n < 2:
        raise UnsupportedSize(
            'Bearing rigidity needs at least 2 vertices. Got {}.'.format(n))
    return numerical_rank(bearing_rigidity_matrix(framework), tol) == d * n - d - 1


def distance_rigidity_matrix(framework):
    """Get the distance rigidity matrix of a framework.

    The row of edge {i, j} holds (p_i - p_j)^T in the column block of i and
    (p_j - p_i)^T in the column block of j.

    Returns:
        A (|E|, d|V|) array.
    """
    d, pos = framework.dim, framework.positions
    matrix = np.zeros((framework.graph.edge_count, d * framework.vertex_count))
    for k, (i, j) in enumerate(framework.edges):
        matrix[k, d * i:d * (i + 1)] = pos[i] - pos[j]
        matrix[k, d * j:d * (j + 1)] = pos[j] - pos[i]
    return matrix


def is_idr(framework, tol=DEFAULT_TOLERANCE, allow_small=False):
    """Test infinitesimal distance rigidity with the distance rigidity matrix.

    Args:
        framework: A Framework.
        tol: Relative threshold for the numerical rank.
        allow_small: Set to True to accept frameworks with fewer vertices than
            the dimension. These are IDR iff the graph is complete and the
            points are affinely independent (rank n(n-1)/2). (Default: False).
    """
    n, d = framework.vertex_count, framework.dim
    if n < d:
        if not allow_small:
            raise UnsupportedSize(
                'Distance rigidity rank test needs at least d = {} vertices. '
                'Got {}.'.format(d, n))
        target = n * (n - 1) // 2
    else:
        target = d * n - d * (d + 1) // 2
    if framework.graph.edge_count < target:
        return False
    return numerical_rank(distance_rigidity_matrix(framework), tol) == target

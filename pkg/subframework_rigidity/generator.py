# coding=utf-8
"""Seeded random frameworks and robot teams."""
from __future__ import division

import math

import numpy as np

from .framework import Graph, Framework
from .sensing import RobotState, undirected_sensing, positions_of


def substream(seed, *key):
    """Get an independent numpy Generator for a seed and an integer key.

    Args:
        seed: Non-negative integer seed of the whole campaign.
        key: Integers naming the substream, such as (n, sample_id).
    """
    return np.random.default_rng(np.random.SeedSequence([int(seed)] + list(key)))


def gen_erdos_renyi(n, rho, dim, rng):
    """Get a random framework of the (n, rho) Erdos-Renyi model.

    Each unordered pair is an edge with probability rho and positions are
    uniform in the unit cube.

    Args:
        n: Number of vertices, at least 2.
        rho: Edge probability in (0, 1].
        dim: Spatial dimension.
        rng: A numpy Generator.
    """
    assert n >= 2, 'Erdos-Renyi frameworks need at least 2 vertices. Got {}.'.format(n)
    assert 0 < rho <= 1, 'Edge probability must be in (0, 1]. Got {}.'.format(rho)
    positions = rng.random((n, dim))
    rows, cols = np.triu_indices(n, k=1)
    keep = rng.random(rows.size) < rho
    graph = Graph(n, zip(rows[keep].tolist(), cols[keep].tolist()))
    return Framework(graph, positions)


def barycenter_yaws(positions):
    """Get the yaw of each robot that points its camera at the team barycenter.

    The yaw maximizes n_i^T (c - p_i) over the horizontal projection. Robots
    sitting right under the barycenter get a zero yaw.
    """
    positions = np.asarray(positions, dtype=float)
    toward = positions.mean(axis=0) - positions
    return [math.atan2(y, x) if x != 0 or y != 0 else 0.0
            for x, y in toward[:, :2]]


def gen_sensing_framework(n, sensing_range, dim, rng, fov_cos=0.5, comm_range=None,
                          low=0.0, high=1.0):
    """Get a random robot team with barycenter-facing cameras and its framework.

    Args:
        n: Number of robots, at least 2.
        sensing_range: Camera range of every robot.
        dim: Spatial dimension, 2 or 3.
        rng: A numpy Generator.
        fov_cos: Field of view cosine of every robot. (Default: 0.5).
        comm_range: Radio range. If None, it equals the sensing range.
        low: Lower bound of the placement box, a number or a vector. (Default: 0).
        high: Upper bound of the placement box, a number or a vector. (Default: 1).

    Returns:
        A tuple with the Framework over the undirected sensing graph and the
        list of RobotState.
    """
    assert n >= 2, 'Sensing frameworks need at least 2 robots. Got {}.'.format(n)
    positions = rng.uniform(low, high, size=(n, dim))
    states = [RobotState(p, yaw, sensing_range, fov_cos, comm_range)
              for p, yaw in zip(positions, barycenter_yaws(positions))]
    return Framework(undirected_sensing(states), positions_of(states)), states

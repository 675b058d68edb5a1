# coding=utf-8
"""Robot states, sensing and communication graphs, and smooth edge weights."""
from __future__ import division

import math

import numpy as np
from scipy.spatial.distance import pdist, squareform

from .exceptions import DegenerateRealization, UnsupportedDimension
from .framework import Graph
from .simulation.sensing import WeightParameter

EXP_CLAMP = 60.0


class RobotState(object):
    """Position, camera heading and sensor ranges of a single robot.

    Args:
        position: Array-like position p_i in meters.
        yaw: Camera yaw psi_i in radians. (Default: 0).
        sensing_range: Camera range l_i in meters. (Default: 20).
        fov_cos: Cosine gamma_i of the camera field of view half-angle,
            strictly between 0 and 1. (Default: 0.5).
        comm_range: Radio range l_c in meters, not smaller than the sensing
            range. If None, it equals the sensing range. (Default: None).

    Properties:
        * position
        * yaw
        * sensing_range
        * fov_cos
        * comm_range
        * dim
        * axis
    """
    __slots__ = ('_position', '_yaw', '_sensing_range', '_fov_cos', '_comm_range')

    def __init__(self, position, yaw=0.0, sensing_range=20, fov_cos=0.5,
                 comm_range=None):
        """Initialize RobotState."""
        position = np.array(position, dtype=float)
        assert position.ndim == 1 and np.all(np.isfinite(position)), \
            'RobotState position must be a finite vector. Got {}.'.format(position)
        position.setflags(write=False)
        self._position = position
        self._yaw = float(yaw)
        assert sensing_range > 0, 'RobotState sensing_range must be positive.'
        assert 0 < fov_cos < 1, \
            'RobotState fov_cos must be strictly between 0 and 1. Got {}.'.format(fov_cos)
        comm_range = sensing_range if comm_range is None else comm_range
        assert comm_range >= sensing_range, 'RobotState comm_range ({}) must not ' \
            'be smaller than sensing_range ({}).'.format(comm_range, sensing_range)
        self._sensing_range = float(sensing_range)
        self._fov_cos = float(fov_cos)
        self._comm_range = float(comm_range)

    @classmethod
    def from_dict(cls, data, comm_range=None):
        """Create a RobotState from a dictionary.

        Args:
            data: A robot state dictionary following the format below.
            comm_range: The radio range shared by the team. If None, it equals
                the sensing range of the robot.

        .. code-block:: python

            {
            "p": [10.0, 5.0, 0.0],  # position in meters
            "psi": 0.3,  # yaw in radians
            "range": 20,  # camera range in meters
            "fov_cos": 0.5  # cosine of the field of view half-angle
            }
        """
        psi = data['psi'] if 'psi' in data else 0.0
        rng = data['range'] if 'range' in data else 20
        fov = data['fov_cos'] if 'fov_cos' in data else 0.5
        return cls(data['p'], psi, rng, fov, comm_range)

    @property
    def position(self):
        """Get the read-only position vector."""
        return self._position

    @property
    def yaw(self):
        """Get the camera yaw in radians."""
        return self._yaw

    @property
    def sensing_range(self):
        """Get the camera range in meters."""
        return self._sensing_range

    @property
    def fov_cos(self):
        """Get the cosine of the field of view half-angle."""
        return self._fov_cos

    @property
    def comm_range(self):
        """Get the radio range in meters."""
        return self._comm_range

    @property
    def dim(self):
        """Get the spatial dimension of the position."""
        return self._position.size

    @property
    def axis(self):
        """Get the unit optical axis n_i of the camera."""
        return optical_axis(self._yaw, self.dim)

    def moved(self, velocity, yaw_rate, dt):
        """Get a new RobotState after an explicit Euler step.

        Args:
            velocity: Array-like linear velocity in m/s.
            yaw_rate: Yaw rate in rad/s.
            dt: Time step in seconds.
        """
        return RobotState(
            self._position + dt * np.asarray(velocity, dtype=float),
            wrap_angle(self._yaw + dt * yaw_rate),
            self._sensing_range, self._fov_cos, self._comm_range)

    def to_dict(self):
        """Get RobotState as a dictionary."""
        return {
            'p': self._position.tolist(),
            'psi': self._yaw,
            'range': self._sensing_range,
            'fov_cos': self._fov_cos
        }

    def duplicate(self):
        """Get a copy of this object."""
        return self.__copy__()

    def __copy__(self):
        return RobotState(self._position, self._yaw, self._sensing_range,
                          self._fov_cos, self._comm_range)

    def ToString(self):
        """Overwrite .NET ToString method."""
        return self.__repr__()

    def __repr__(self):
        return 'RobotState: [p: {}] [psi: {:.3f}]'.format(
            self._position.round(3).tolist(), self._yaw)


def wrap_angle(angle):
    """Wrap an angle to the interval (-pi, pi]."""
    return math.pi - (math.pi - angle) % (2 * math.pi)


def optical_axis(yaw, dim):
    """Get the horizontal unit optical axis of a camera with a given yaw.

    Args:
        yaw: Camera yaw in radians.
        dim: Spatial dimension, either 2 or 3.
    """
    if dim == 2:
        return np.array([math.cos(yaw), math.sin(yaw)])
    if dim == 3:
        return np.array([math.cos(yaw), math.sin(yaw), 0.0])
    raise UnsupportedDimension(
        'The yaw-only camera model supports 2 or 3 dimensions. Got {}.'.format(dim))


def _axis_derivative(yaw, dim):
    """Get the derivative of the optical axis with respect to the yaw."""
    axis = [-math.sin(yaw), math.cos(yaw)]
    return np.array(axis + [0.0] * (dim - 2))


def positions_of(states):
    """Get an (n, d) array with the positions of a list of RobotStates."""
    return np.array([s.position for s in states], dtype=float)


def _pairwise(positions):
    """Get the square distance table of distinct positions."""
    positions = np.asarray(positions, dtype=float)
    if len(positions) < 2:
        return np.zeros((len(positions), len(positions)))
    condensed = pdist(positions)
    if np.any(condensed == 0):
        raise DegenerateRealization('Two robots share the same position.')
    return squareform(condensed)


def sensing_graph(states):
    """Get the directed sensing graph of a team of robots.

    Robot i senses robot j when d_ij <= l_i and n_i^T b_ij >= gamma_i.

    Args:
        states: A list of RobotState.

    Returns:
        A sorted tuple of directed (i, j) pairs.
    """
    pos = positions_of(states)
    dist = _pairwise(pos)
    arcs = []
    for i, state in enumerate(states):
        axis = state.axis
        for j in range(len(states)):
            if i == j or dist[i, j] > state.sensing_range:
                continue
            if axis @ ((pos[j] - pos[i]) / dist[i, j]) >= state.fov_cos:
                arcs.append((i, j))
    return tuple(arcs)


def undirected_sensing(states):
    """Get the undirected sensing Graph, with {i, j} when i senses j or j senses i."""
    return Graph(len(states), {(min(i, j), max(i, j)) for i, j in sensing_graph(states)})


def comm_graph(positions, comm_range):
    """Get the communication disk Graph with {i, j} when d_ij <= l_c.

    Args:
        positions: An (n, d) array of positions, or a list of RobotState.
        comm_range: Radio range l_c in meters.
    """
    if len(positions) and isinstance(positions[0], RobotState):
        positions = positions_of(positions)
    dist = _pairwise(positions)
    rows, cols = np.nonzero(np.triu(dist <= comm_range, k=1))
    return Graph(len(dist), zip(rows.tolist(), cols.tolist()))


def _logistic(z):
    """Get 1 / (1 + exp(-z)) with the exponent clamped to avoid overflow."""
    return 1.0 / (1.0 + math.exp(-min(max(z, -EXP_CLAMP), EXP_CLAMP)))


def sigmoid(x, steepness, midpoint):
    """Get the sigmoid 1 / (1 + exp(s (m - x))), strictly increasing in x.

    Args:
        x: Input value.
        steepness: Positive steepness s.
        midpoint: Midpoint m where the sigmoid equals 0.5.
    """
    assert steepness > 0, 'Sigmoid steepness must be positive. Got {}.'.format(steepness)
    return _logistic(steepness * (x - midpoint))


class _PairTerms(object):
    """The directional range and field of view factors of one robot of a pair."""
    __slots__ = ('range_w', 'range_slope', 'fov_w', 'fov_slope')

    def __init__(self, dist, cos, state, params):
        s_r = params.range_steepness
        z_r = s_r * (dist - params.range_midpoint * state.sensing_range)
        sig, comp = _logistic(z_r), _logistic(-z_r)
        self.range_w = comp
        self.range_slope = -s_r * sig * comp
        s_f = params.fov_steepness
        z_f = s_f * (cos - params.fov_midpoint * state.fov_cos)
        sig, comp = _logistic(z_f), _logistic(-z_f)
        self.fov_w = sig
        self.fov_slope = s_f * sig * comp

    @property
    def weight(self):
        return self.range_w * self.fov_w


def _pair_geometry(i, j, states):
    p_i, p_j = states[i].position, states[j].position
    diff = p_j - p_i
    dist = float(np.linalg.norm(diff))
    if dist == 0:
        raise DegenerateRealization('Robots {} and {} share the same position.'.format(
            i, j))
    return diff / dist, dist


def edge_weight(i, j, states, params=None):
    """Get the smooth sensing weight w_ij = wR_ij wF_ij + wR_ji wF_ji.

    The weight is near 2 when both robots see each other, near 1 when only
    one of them does and near 0 when neither does.

    Args:
        i: Index of the first robot.
        j: Index of the second robot.
        states: A list of RobotState.
        params: Optional WeightParameter. Defaults are used if None.
    """
    assert i != j, 'Edge weights need two distinct robots.'
    params = WeightParameter() if params is None else params
    b, dist = _pair_geometry(i, j, states)
    t_ij = _PairTerms(dist, float(states[i].axis @ b), states[i], params)
    t_ji = _PairTerms(dist, float(-states[j].axis @ b), states[j], params)
    return t_ij.weight + t_ji.weight


def edge_weight_gradient(i, j, states, params=None):
    """Get the analytic partial derivatives of w_ij.

    Args:
        i: Index of the first robot.
        j: Index of the second robot.
        states: A list of RobotState.
        params: Optional WeightParameter. Defaults are used if None.

    Returns:
        A tuple with the weight and its partials (w, dw/dp_i, dw/dp_j,
        dw/dpsi_i, dw/dpsi_j).
    """
    assert i != j, 'Edge weights need two distinct robots.'
    params = WeightParameter() if params is None else params
    s_i, s_j = states[i], states[j]
    b, dist = _pair_geometry(i, j, states)
    n_i, n_j = s_i.axis, s_j.axis
    t_ij = _PairTerms(dist, float(n_i @ b), s_i, params)
    t_ji = _PairTerms(dist, float(-n_j @ b), s_j, params)

    proj = np.eye(b.size) - np.outer(b, b)
    # d(n_i^T b_ij)/dp_j = P n_i / d and d(n_j^T b_ji)/dp_i = P n_j / d
    dcos_i = proj @ n_i / dist
    dcos_j = proj @ n_j / dist
    range_part = (t_ij.range_slope * t_ij.fov_w + t_ji.range_slope * t_ji.fov_w) * b
    fov_i = t_ij.range_w * t_ij.fov_slope
    fov_j = t_ji.range_w * t_ji.fov_slope

    grad_pj = range_part + fov_i * dcos_i - fov_j * dcos_j
    grad_pi = -grad_pj
    grad_psi_i = fov_i * float(_axis_derivative(s_i.yaw, b.size) @ b)
    grad_psi_j = -fov_j * float(_axis_derivative(s_j.yaw, b.size) @ b)
    return t_ij.weight + t_ji.weight, grad_pi, grad_pj, grad_psi_i, grad_psi_j

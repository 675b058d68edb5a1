# coding=utf-8
"""Cost functions, analytic gradients and the anti-gradient control step.

The team minimizes J = k_m J_m + k_c J_c + k_r J_r where J_m attracts robots
toward targets, J_c keeps communicating robots apart and J_r keeps every ball
subframework bearing rigid. Each robot i moves with v_i = -dJ/dp_i and turns
with w_i = -dJ/dpsi_i.
"""
from __future__ import division

import logging
from concurrent.futures import ThreadPoolExecutor

import numpy as np
from scipy.linalg import eigh, LinAlgError
from scipy.spatial.distance import pdist

from .exceptions import CollisionViolation, NumericalFailure, RigidityFloorBreached
from .framework import Framework
from .sensing import positions_of, undirected_sensing, comm_graph, \
    edge_weight_gradient
from .simulation.sensing import WeightParameter
from .subframework import Decomposition

_logger = logging.getLogger(__name__)


def _check_distance(i, j, dist, gains):
    if dist <= gains.min_distance:
        raise CollisionViolation((i, j), dist)


def collision_cost(positions, graph, gains, comm_range):
    """Get the collision cost J_c over the edges of the communication graph.

    Args:
        positions: An (n, d) array of positions.
        graph: The communication Graph of the positions.
        gains: ControlGains with the minimum distance l_0.
        comm_range: Radio range l_c in meters.
    """
    positions = np.asarray(positions, dtype=float)
    l_0 = gains.min_distance
    cost = 0.0
    for i, j in graph.edges:
        dist = float(np.linalg.norm(positions[j] - positions[i]))
        _check_distance(i, j, dist, gains)
        cost += ((dist - comm_range) / (dist - l_0)) ** 2
    return cost


def collision_grad(positions, graph, gains, comm_range):
    """Get dJ_c/dp_i for every robot as an (n, d) array.

    The yaw derivative of J_c is zero.
    """
    positions = np.asarray(positions, dtype=float)
    l_0 = gains.min_distance
    grad = np.zeros_like(positions)
    for i, j in graph.edges:
        diff = positions[j] - positions[i]
        dist = float(np.linalg.norm(diff))
        _check_distance(i, j, dist, gains)
        scale = 2 * (comm_range - l_0) * (comm_range - dist) / (dist - l_0) ** 3
        grad[i] += scale * diff / dist
        grad[j] -= scale * diff / dist
    return grad


def support_graph(states, params):
    """Get the Graph of the robot pairs that carry weights.

    Args:
        states: A list of RobotState.
        params: A WeightParameter whose support selects either the undirected
            sensing graph or the communication graph.
    """
    if params.support == 'comm_pairs':
        return comm_graph(positions_of(states), states[0].comm_range)
    return undirected_sensing(states)


class SubframeworkTerms(object):
    """Rigidity cost and gradient terms of one ball subframework.

    Args:
        center: Global index of the center robot j.
        vertices: Sorted tuple of the global robots of the ball.
        eigenvalues: Ascending eigenvalues of the weighted ball Laplacian.
        cost: The cost J_(r,j).
        nu: A dictionary from each member i to the vector nu_ji = dJ_(r,j)/dx_i,
            whose first d entries are the position derivative and the last the
            yaw derivative.

    Properties:
        * center
        * vertices
        * eigenvalues
        * rigidity_eigenvalue
        * cost
        * nu
    """
    __slots__ = ('_center', '_vertices', '_eigenvalues', '_cost', '_nu', '_dim')

    def __init__(self, center, vertices, eigenvalues, cost, nu, dim):
        self._center = center
        self._vertices = tuple(vertices)
        self._eigenvalues = eigenvalues
        self._cost = cost
        self._nu = nu
        self._dim = dim

    @property
    def center(self):
        """Get the global index of the center robot."""
        return self._center

    @property
    def vertices(self):
        """Get the sorted global indices of the ball robots."""
        return self._vertices

    @property
    def eigenvalues(self):
        """Get the ascending eigenvalues of the weighted ball Laplacian."""
        return self._eigenvalues

    @property
    def rigidity_eigenvalue(self):
        """Get the rigidity eigenvalue lambda_(d+2) of the ball."""
        return float(self._eigenvalues[self._dim + 1])

    @property
    def cost(self):
        """Get the cost J_(r,j) of the ball."""
        return self._cost

    @property
    def nu(self):
        """Get the dictionary of gradient terms nu_ji of each member i."""
        return self._nu

    def __repr__(self):
        return 'SubframeworkTerms: [center {}] [{} robots] [lambda {:.3e}]'.format(
            self._center, len(self._vertices), self.rigidity_eigenvalue)


def subframework_terms(center, vertices, states, gains, params=None):
    """Get the eigenvalues, cost and gradient terms of one ball subframework.

    Only the states of the ball robots are read, so the same numbers come out
    whether the states are gathered centrally or received through messages.

    Args:
        center: Global index of the center robot j.
        vertices: Iterable of the global robots of the ball V_j.
        states: A list or dictionary giving the RobotState of each robot of
            the ball by global index.
        gains: ControlGains with the rigidity floor lambda_0.
        params: Optional WeightParameter. Defaults are used if None.

    Returns:
        A SubframeworkTerms object.
    """
    params = WeightParameter() if params is None else params
    floor = gains.rigidity_floor
    vertices = tuple(sorted(vertices))
    local_states = [states[v] for v in vertices]
    count, dim = len(vertices), local_states[0].dim
    if count < 2:
        raise RigidityFloorBreached(center, 0.0, floor)

    graph = support_graph(local_states, params)
    pos = positions_of(local_states)
    matrix = np.zeros((dim * count, dim * count))
    pieces = []
    for a, b in graph.edges:
        w, g_pa, g_pb, g_ya, g_yb = edge_weight_gradient(a, b, local_states, params)
        diff = pos[b] - pos[a]
        dist = float(np.linalg.norm(diff))
        bear = diff / dist
        proj = np.eye(dim) - np.outer(bear, bear)
        sa, sb = slice(dim * a, dim * (a + 1)), slice(dim * b, dim * (b + 1))
        matrix[sa, sa] += w * proj
        matrix[sb, sb] += w * proj
        matrix[sa, sb] -= w * proj
        matrix[sb, sa] -= w * proj
        pieces.append((a, b, w, g_pa, g_pb, g_ya, g_yb, bear, proj, dist))

    try:
        values, vectors = eigh(matrix)
    except LinAlgError as e:
        raise NumericalFailure('Eigendecomposition of subframework {} failed: '
                               '{}'.format(center, e))
    if values[dim + 1] <= floor:
        raise RigidityFloorBreached(center, float(values[dim + 1]), floor)
    active = values[dim + 1:]
    cost = -float(np.sum(np.log(active - floor)))
    coef = 1.0 / (floor - active)
    modes = vectors[:, dim + 1:]

    grad_p = np.zeros((count, dim))
    grad_y = np.zeros(count)
    for a, b, w, g_pa, g_pb, g_ya, g_yb, bear, proj, dist in pieces:
        z = modes[dim * a:dim * (a + 1)] - modes[dim * b:dim * (b + 1)]
        bz = bear @ z
        quad = np.sum(z * z, axis=0) - bz ** 2
        s_w = float(coef @ quad)
        # derivative of z^T P z through the bearing, for p_b
        s_p = (-2.0 / dist) * ((proj @ z) * bz) @ coef
        grad_p[a] += s_w * g_pa - w * s_p
        grad_p[b] += s_w * g_pb + w * s_p
        grad_y[a] += s_w * g_ya
        grad_y[b] += s_w * g_yb

    nu = {v: np.append(grad_p[k], grad_y[k]) for k, v in enumerate(vertices)}
    return SubframeworkTerms(center, vertices, values, cost, nu, dim)


def _ball_terms(decomposition, states, gains, params, workers=None):
    """Get the SubframeworkTerms of every ball, sorted by center."""
    centers = [j for j, b in enumerate(decomposition.balls) if b is not None]

    def compute(j):
        return subframework_terms(
            j, decomposition.balls[j].vertex_map, states, gains, params)

    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(compute, centers))
    return [compute(j) for j in centers]


def rigidity_cost(decomposition, states, gains, params=None):
    """Get J_r, the sum of the ball costs -sum_k log(lambda_k - lambda_0).

    Args:
        decomposition: A Decomposition whose balls define the subframeworks.
        states: A list of RobotState.
        gains: ControlGains with the rigidity floor.
        params: Optional WeightParameter.
    """
    return sum(t.cost for t in _ball_terms(decomposition, states, gains, params))


class RigidityGradient(object):
    """Gradient of J_r with the per-ball terms it was reduced from.

    Properties:
        * position
        * yaw
        * terms
        * nu
        * cost
    """
    __slots__ = ('_position', '_yaw', '_terms')

    def __init__(self, position, yaw, terms):
        self._position = position
        self._yaw = yaw
        self._terms = terms

    @property
    def position(self):
        """Get dJ_r/dp_i as an (n, d) array."""
        return self._position

    @property
    def yaw(self):
        """Get dJ_r/dpsi_i as a vector."""
        return self._yaw

    @property
    def terms(self):
        """Get the SubframeworkTerms of each ball, sorted by center."""
        return self._terms

    @property
    def nu(self):
        """Get a dictionary from (center j, robot i) to the vector nu_ji."""
        return {(t.center, i): v for t in self._terms for i, v in t.nu.items()}

    @property
    def cost(self):
        """Get J_r."""
        return sum(t.cost for t in self._terms)


def reduce_nu(nu_by_robot, count, dim):
    """Sum the received nu_ji of each robot in increasing center order.

    Args:
        nu_by_robot: A list with, for each robot i, a dictionary from center j
            to nu_ji.
        count: Number of robots.
        dim: Spatial dimension.

    Returns:
        A tuple with the (n, d) position gradient and the yaw gradient vector.
    """
    grad = np.zeros((count, dim + 1))
    for i in range(count):
        for j in sorted(nu_by_robot[i]):
            grad[i] += nu_by_robot[i][j]
    return grad[:, :dim], grad[:, dim]


def rigidity_grad(decomposition, states, gains, params=None, workers=None):
    """Get dJ_r/dx_i = sum over centers j in I_i of nu_ji for every robot.

    Args:
        decomposition: A Decomposition whose balls define the subframeworks.
        states: A list of RobotState.
        gains: ControlGains with the rigidity floor.
        params: Optional WeightParameter.
        workers: Optional number of threads for the per-ball terms.

    Returns:
        A RigidityGradient.
    """
    terms = _ball_terms(decomposition, states, gains, params, workers)
    per_robot = [{} for _ in states]
    for t in terms:
        for i, v in t.nu.items():
            per_robot[i][t.center] = v
    position, yaw = reduce_nu(per_robot, len(states), states[0].dim)
    return RigidityGradient(position, yaw, terms)


def mission_cost(positions, mission):
    """Get J_m, the sum of f_m(zeta_i) over robots with a target in reach."""
    _, dist = mission.nearest(positions)
    return float(sum(mission.potential(z) for z in dist if np.isfinite(z)))


def mission_cost_grad(positions, mission):
    """Get dJ_m/dp_i = f'_m(zeta_i) (p_i - tau_i) / zeta_i as an (n, d) array.

    The gradient is zero when no target remains. The yaw derivative of J_m
    is zero.
    """
    positions = np.asarray(positions, dtype=float)
    grad = np.zeros_like(positions)
    index, dist = mission.nearest(positions)
    for i, (t, z) in enumerate(zip(index, dist)):
        if t < 0 or z == 0:
            continue
        grad[i] = mission.speed(z) * (positions[i] - mission.targets[t]) / z
    return grad


def total_cost(states, decomposition, mission, gains, params=None):
    """Get J = k_m J_m + k_c J_c + k_r J_r for a team state."""
    pos = positions_of(states)
    comm = states[0].comm_range
    cost = gains.collision_gain * collision_cost(
        pos, comm_graph(pos, comm), gains, comm)
    if mission is not None:
        cost += gains.mission_gain * mission_cost(pos, mission)
    if decomposition is not None:
        cost += gains.rigidity_gain * rigidity_cost(decomposition, states, gains, params)
    return cost


class ControlOutput(object):
    """Velocity and yaw rate commands with the rigidity terms they used.

    Properties:
        * velocities
        * yaw_rates
        * nu
        * eigenvalues
        * costs
    """
    __slots__ = ('_velocities', '_yaw_rates', '_nu', '_eigenvalues', '_costs')

    def __init__(self, velocities, yaw_rates, nu, eigenvalues, costs):
        self._velocities = velocities
        self._yaw_rates = yaw_rates
        self._nu = nu
        self._eigenvalues = eigenvalues
        self._costs = costs

    @property
    def velocities(self):
        """Get the (n, d) array of velocity commands v_i."""
        return self._velocities

    @property
    def yaw_rates(self):
        """Get the vector of yaw rate commands w_i."""
        return self._yaw_rates

    @property
    def nu(self):
        """Get a dictionary from (center j, robot i) to nu_ji."""
        return self._nu

    @property
    def eigenvalues(self):
        """Get a dictionary from center j to its rigidity eigenvalue."""
        return self._eigenvalues

    @property
    def costs(self):
        """Get a dictionary with the mission, collision and rigidity costs."""
        return self._costs

    def __repr__(self):
        return 'ControlOutput: [{} robots]'.format(len(self._yaw_rates))


class StepResult(object):
    """Outcome of one control step.

    Properties:
        * states
        * control
        * events
        * decomposition
        * mission
        * round
        * substeps
    """
    __slots__ = ('states', 'control', 'events', 'decomposition', 'mission', 'round',
                 'substeps')

    def __init__(self, states, control, events, decomposition, mission, round=None,
                 substeps=1):
        self.states = states
        self.control = control
        self.events = events
        self.decomposition = decomposition
        self.mission = mission
        self.round = round
        self.substeps = substeps

    def __repr__(self):
        return 'StepResult: [{} events]'.format(len(self.events))


def control(states, decomposition, mission, gains, params=None, use_protocol=False,
            workers=None):
    """Get the anti-gradient commands of a team without moving it.

    Args:
        states: A list of RobotState.
        decomposition: A Decomposition over the undirected sensing graph, or
            None to skip rigidity maintenance.
        mission: A MissionState or None.
        gains: ControlGains.
        params: Optional WeightParameter.
        use_protocol: Set to True to gather the rigidity terms through one
            simulated protocol round over the communication graph.
        workers: Optional number of threads for the per-ball terms.

    Returns:
        A tuple with the ControlOutput and the protocol RoundResult (None
        without the protocol).
    """
    params = WeightParameter() if params is None else params
    pos = positions_of(states)
    count, dim = pos.shape
    comm = states[0].comm_range
    c_graph = comm_graph(pos, comm)

    costs = {'collision': collision_cost(pos, c_graph, gains, comm)}
    grad_p = gains.collision_gain * collision_grad(pos, c_graph, gains, comm)
    grad_y = np.zeros(count)
    if mission is not None:
        costs['mission'] = mission_cost(pos, mission)
        grad_p += gains.mission_gain * mission_cost_grad(pos, mission)

    nu, eigenvalues, round_result = {}, {}, None
    if decomposition is not None:
        if use_protocol:
            from .protocol import run_round
            round_result = run_round(c_graph, decomposition, states, gains, params)
            r_p, r_y = reduce_nu(round_result.nu, count, dim)
            terms = round_result.terms
        else:
            rigidity = rigidity_grad(decomposition, states, gains, params, workers)
            r_p, r_y = rigidity.position, rigidity.yaw
            terms = rigidity.terms
        grad_p += gains.rigidity_gain * r_p
        grad_y += gains.rigidity_gain * r_y
        costs['rigidity'] = sum(t.cost for t in terms)
        for t in terms:
            eigenvalues[t.center] = t.rigidity_eigenvalue
            for i, v in t.nu.items():
                nu[(t.center, i)] = v

    if not (np.all(np.isfinite(grad_p)) and np.all(np.isfinite(grad_y))):
        raise NumericalFailure(
            'Non-finite control gradient.\npositions: {}\nyaws: {}\ncosts: {}'.format(
                pos.tolist(), [s.yaw for s in states], costs))
    return ControlOutput(-grad_p, -grad_y, nu, eigenvalues, costs), round_result


def step(states, decomposition, mission, gains, dt, params=None, use_protocol=False,
         workers=None, precomputed=None):
    """Advance a team by one explicit Euler step of the anti-gradient controller.

    After the move the sensing graph and the balls of the frozen minimal radii
    are rebuilt and targets within the collection radius are collected.

    Args:
        states: A list of RobotState.
        decomposition: A Decomposition over the current undirected sensing
            graph, or None to skip rigidity maintenance.
        mission: A MissionState or None.
        gains: ControlGains.
        dt: Positive time step in seconds.
        params: Optional WeightParameter.
        use_protocol: Set to True to gather the rigidity terms through one
            simulated protocol round.
        workers: Optional number of threads for the per-ball terms.
        precomputed: Optional (ControlOutput, RoundResult) tuple returned by
            control for these same inputs. It is used instead of computing
            the commands again.

    Returns:
        A StepResult. Events are tuples of (kind, a, b) with kind being
        "edge_gained", "edge_lost" (robots a and b) or "target_collected"
        (target a, b = -1).
    """
    assert dt > 0, 'Control step dt must be positive. Got {}.'.format(dt)
    if precomputed is None:
        precomputed = control(
            states, decomposition, mission, gains, params, use_protocol, workers)
    output, round_result = precomputed
    new_states = [s.moved(v, w, dt) for s, v, w in
                  zip(states, output.velocities, output.yaw_rates)]

    old_graph = undirected_sensing(states)
    new_graph = undirected_sensing(new_states)
    old_edges, new_edges = set(old_graph.edges), set(new_graph.edges)
    events = [('edge_gained', i, j) for i, j in sorted(new_edges - old_edges)]
    events.extend(('edge_lost', i, j) for i, j in sorted(old_edges - new_edges))

    new_decomposition = None
    if decomposition is not None:
        framework = Framework(new_graph, positions_of(new_states))
        new_decomposition = Decomposition.from_radii(framework, decomposition.radii)

    new_mission = mission
    if mission is not None:
        new_mission, collected = mission.collect(positions_of(new_states))
        events.extend(('target_collected', t, -1) for t in collected)
    if events:
        _logger.debug('Step events: %s', events)
    return StepResult(new_states, output, events, new_decomposition, new_mission,
                      round_result)


def safe_timestep(states, output, gains, max_displacement, gap_fraction):
    """Get the longest Euler step that keeps every move within its bounds.

    No robot may cover more than max_displacement, nor more than gap_fraction
    of the clearance between the closest pair of robots and the minimum
    allowed distance.

    Returns:
        A positive number of seconds, or inf for a team at rest.
    """
    speed = float(np.max(np.linalg.norm(output.velocities, axis=1)))
    if speed == 0:
        return float('inf')
    limit = max_displacement
    if len(states) > 1:
        clearance = float(np.min(pdist(positions_of(states)))) - gains.min_distance
        limit = min(limit, gap_fraction * max(clearance, 0.0))
    return limit / speed


def advance(states, decomposition, mission, gains, dt, params=None,
            use_protocol=False, workers=None, precomputed=None, max_displacement=0.25,
            gap_fraction=0.25, max_substeps=1000):
    """Advance a team by one control step split into bounded Euler sub-steps.

    The commands are recomputed at the start of every sub-step. At most
    max_substeps sub-steps are taken and the last one ends exactly at dt.

    Args:
        states: A list of RobotState.
        decomposition: A Decomposition over the current undirected sensing
            graph, or None to skip rigidity maintenance.
        mission: A MissionState or None.
        gains: ControlGains.
        dt: Positive length of the control step in seconds.
        params: Optional WeightParameter.
        use_protocol: Set to True to gather the rigidity terms through one
            simulated protocol round per sub-step.
        workers: Optional number of threads for the per-ball terms.
        precomputed: Optional (ControlOutput, RoundResult) tuple returned by
            control for these same inputs.
        max_displacement: Largest distance a robot may cover in one sub-step.
        gap_fraction: Largest share of the clearance of the closest pair a
            robot may cover in one sub-step.
        max_substeps: Largest number of sub-steps.

    Returns:
        A StepResult with the control output and protocol round of the first
        sub-step and the events of every sub-step in order.
    """
    assert dt > 0, 'Control step dt must be positive. Got {}.'.format(dt)
    remaining, events, first, count = dt, [], None, 0
    while remaining > 1e-9 * dt:
        if precomputed is None:
            precomputed = control(
                states, decomposition, mission, gains, params, use_protocol, workers)
        count += 1
        h = remaining
        if count < max_substeps:
            bound = safe_timestep(
                states, precomputed[0], gains, max_displacement, gap_fraction)
            if bound > 0:
                h = min(remaining, bound)
        result = step(states, decomposition, mission, gains, h, params,
                      use_protocol, workers, precomputed)
        first = first or result
        events.extend(result.events)
        states, decomposition, mission = \
            result.states, result.decomposition, result.mission
        remaining -= h
        precomputed = None
    if count > 1:
        _logger.debug('Control step split into %d sub-steps.', count)
    return StepResult(states, first.control, events, decomposition, mission,
                      first.round, count)

# coding=utf-8
"""Module for running collection missions and rigidity analyses."""
from __future__ import division

import logging

import numpy as np
from scipy.spatial.distance import pdist

from .bearing import is_ibr_rank
from .controller import control, advance, rigidity_cost
from .exceptions import MissionViolation, RigidityFloorBreached, SamplingExhausted, \
    UnsupportedSize
from .generator import substream, gen_sensing_framework
from .graphutil import graph_distances
from .laplacian import EdgeWeights, bearing_laplacian, rigidity_eigenvalue, \
    is_ibr_spectral
from .protocol import metrics
from .sensing import edge_weight, positions_of
from .subframework import decompose
from .targets import MissionState

_logger = logging.getLogger(__name__)


class SimTrace(object):
    """Time series of a mission run, one row per control step.

    Args:
        robot_count: Number of robots, which sets the per-subframework columns.

    Properties:
        * header
        * rows
        * snapshots
        * events
    """
    __slots__ = ('_robot_count', '_rows', '_snapshots', '_events')

    def __init__(self, robot_count):
        self._robot_count = robot_count
        self._rows = []
        self._snapshots = []
        self._events = []

    @property
    def header(self):
        """Get the column names of the trace rows."""
        n = self._robot_count
        return ['t', 'min_lambda', 'framework_lambda', 'collected', 'min_distance',
                'max_distance', 'max_subframework_diameter', 'framework_diameter',
                'edges'] + ['lambda_{}'.format(j) for j in range(n)] + \
            ['diameter_{}'.format(j) for j in range(n)]

    @property
    def rows(self):
        """Get the list of trace rows."""
        return self._rows

    @property
    def snapshots(self):
        """Get a list of (t, states) snapshots."""
        return self._snapshots

    @property
    def events(self):
        """Get a list of (t, kind, a, b) events."""
        return self._events

    def column(self, name):
        """Get the values of one column."""
        k = self.header.index(name)
        return [row[k] for row in self._rows]

    def record(self, t, states, decomposition, output, mission, params):
        """Add the row of a team state and the commands computed for it."""
        assert not self._rows or t > self._rows[-1][0], \
            'SimTrace rows must have strictly increasing times.'
        pos = positions_of(states)
        graph = decomposition.framework.graph
        weights = EdgeWeights(
            {(i, j): edge_weight(i, j, states, params) for i, j in graph.edges},
            allow_decay=True)
        try:
            framework_lambda = float(rigidity_eigenvalue(
                bearing_laplacian(decomposition.framework, weights)))
        except UnsupportedSize:
            framework_lambda = 0.0
        distances = graph_distances(graph)
        finite = np.isfinite(distances).all()
        span = int(distances.max()) if finite else float('inf')
        pairs = pdist(pos)
        lambdas = [output.eigenvalues.get(j, float('nan'))
                   for j in range(self._robot_count)]
        diameters = [b.diameter if b is not None else -1 for b in decomposition.balls]
        row = [t, min(output.eigenvalues.values()) if output.eigenvalues else
               float('nan'), framework_lambda,
               mission.collected_count if mission is not None else 0,
               float(pairs.min()), float(pairs.max()), max(diameters), span,
               graph.edge_count] + lambdas + diameters
        self._rows.append(row)

    def snapshot(self, t, states):
        """Add a snapshot of the team states."""
        self._snapshots.append((t, [s.to_dict() for s in states]))

    def add_events(self, t, events):
        """Add the events of a control step."""
        self._events.extend((t,) + tuple(e) for e in events)

    def __len__(self):
        return len(self._rows)

    def __repr__(self):
        return 'SimTrace: [{} rows] [{} events]'.format(len(self._rows),
                                                       len(self._events))


class MissionResult(object):
    """Outcome of a mission run.

    Properties:
        * trace
        * status
        * error
        * initial_decomposition
        * mission
        * states
        * message_log
    """
    __slots__ = ('trace', 'status', 'error', 'initial_decomposition', 'mission',
                 'states', 'message_log')

    def __init__(self, trace, status, error, initial_decomposition, mission, states,
                 message_log=None):
        self.trace = trace
        self.status = status
        self.error = error
        self.initial_decomposition = initial_decomposition
        self.mission = mission
        self.states = states
        self.message_log = message_log

    @property
    def completed(self):
        """Get a boolean noting whether the run reached its end time."""
        return self.status == 'completed'

    def summary(self):
        """Get a dictionary summarizing the run."""
        return {
            'type': 'MissionSummary',
            'status': self.status,
            'error': str(self.error) if self.error is not None else None,
            'r_star': list(self.initial_decomposition.radii),
            'collected': self.mission.collected_count,
            'targets': len(self.mission.targets),
            'rows': len(self.trace),
            'events': len(self.trace.events)
        }

    def __repr__(self):
        return 'MissionResult: [{}] [{} collected]'.format(
            self.status, self.mission.collected_count)


def sample_mission_team(scenario, rng):
    """Draw initial teams until the sensing framework is decomposable and safe.

    A team is accepted when no two robots are closer than the minimum
    separation of the mission, its undirected sensing framework is connected,
    every minimal radius is finite and at most the largest radius of the
    mission, and every weighted ball stays above the rigidity floor.

    Returns:
        A tuple with the list of RobotState and the Decomposition.
    """
    sensing, gains = scenario.sensing_parameter, scenario.control_gains
    mission, dim = scenario.mission_parameter, scenario.dimension
    low, high = mission.box_bounds(mission.initial_box, dim)
    retry_cap = scenario.monte_carlo_parameter.retry_cap
    rejected = {'disconnected': 0, 'not_rigid': 0, 'too_wide': 0, 'floor': 0,
                'too_close': 0}
    for _ in range(retry_cap):
        framework, states = gen_sensing_framework(
            scenario.robot_count, sensing.sensing_range, dim, rng, sensing.fov_cos,
            sensing.comm_range, low, high)
        closest = np.min(pdist(framework.positions))
        if closest <= gains.min_distance or closest < mission.min_separation:
            rejected['too_close'] += 1
            continue
        if not framework.is_connected():
            rejected['disconnected'] += 1
            continue
        decomposition = decompose(framework, scenario.tolerance)
        if not decomposition.is_rigid:
            rejected['not_rigid'] += 1
            continue
        if max(decomposition.radii) > mission.max_radius:
            rejected['too_wide'] += 1
            continue
        try:
            rigidity_cost(decomposition, states, gains, scenario.weight_parameter)
        except RigidityFloorBreached:
            rejected['floor'] += 1
            continue
        _logger.info('Initial team accepted with minimal radii %s.',
                     decomposition.radii)
        return states, decomposition
    raise SamplingExhausted(
        'No initial team was accepted within {} attempts.'.format(retry_cap), rejected)


def run_mission(scenario, workers=None):
    """Run a closed-loop collection mission.

    Args:
        scenario: A ScenarioParameter.
        workers: Optional number of threads for the per-ball terms.

    Returns:
        A MissionResult. Collision or rigidity floor violations end the run
        early with a "violation" status and a partial trace.
    """
    scenario.check_ranges()
    n, dim = scenario.robot_count, scenario.dimension
    gains, params = scenario.control_gains, scenario.weight_parameter
    timing, mission_par = scenario.time_parameter, scenario.mission_parameter

    states, decomposition = sample_mission_team(scenario, substream(scenario.seed, n, 0))
    low, high = mission_par.box_bounds(mission_par.target_box, dim)
    targets = substream(scenario.seed, n, 1).uniform(
        low, high, size=(mission_par.target_count, dim))
    mission, _ = MissionState.from_parameter(targets, mission_par).collect(
        positions_of(states))
    initial = decomposition

    trace = SimTrace(n)
    snap_steps = set(timing.snapshot_steps)
    dt, steps = timing.timestep, timing.step_count
    status, error, last_log = 'completed', None, None
    for k in range(steps + 1):
        t = round(k * dt, 9)
        try:
            computed = control(states, decomposition, mission, gains, params,
                               scenario.use_protocol, workers)
        except MissionViolation as e:
            _logger.warning('Mission stopped at t = %s s: %s', t, e)
            status, error = 'violation', e
            break
        trace.record(t, states, decomposition, computed[0], mission, params)
        if computed[1] is not None:
            last_log = computed[1].log
        if k in snap_steps:
            trace.snapshot(t, states)
        if k == steps:
            break
        try:
            result = advance(
                states, decomposition, mission, gains, dt, params,
                scenario.use_protocol, workers, computed, timing.max_displacement,
                timing.gap_fraction, timing.max_substeps)
        except MissionViolation as e:
            _logger.warning('Mission stopped between t = %s s and the next step: %s',
                            t, e)
            status, error = 'violation', e
            break
        trace.add_events(round(t + dt, 9), result.events)
        states, decomposition, mission = \
            result.states, result.decomposition, result.mission
        if k % 100 == 0:
            _logger.info('t = %.1f s: %d targets collected.', t,
                         mission.collected_count)
    return MissionResult(trace, status, error, initial, mission, states, last_log)


def analyze(framework, tol=1e-8):
    """Get a rigidity report of a framework.

    The report holds the IBR verdicts of the rank and spectral tests, the
    rigidity eigenvalue with unit weights and, for connected frameworks, the
    minimal radii, the inverse memberships, the emission radii and the
    protocol metrics over the framework graph.

    Args:
        framework: A Framework with at least 2 vertices.
        tol: Relative threshold of the rigidity tests.

    Returns:
        A dictionary that can be serialized to JSON.
    """
    if framework.vertex_count < 2:
        raise UnsupportedSize('A rigidity report needs at least 2 vertices.')
    by_rank = is_ibr_rank(framework, tol)
    by_spectrum = is_ibr_spectral(framework, tol=tol)
    report = {
        'type': 'RigidityReport',
        'dim': framework.dim,
        'vertex_count': framework.vertex_count,
        'edge_count': framework.graph.edge_count,
        'tolerance': tol,
        'connected': framework.is_connected(),
        'ibr_rank': by_rank,
        'ibr_spectral': by_spectrum,
        'agree': by_rank == by_spectrum,
        'rigidity_eigenvalue': float(rigidity_eigenvalue(bearing_laplacian(framework))),
        'decomposition': None,
        'metrics': None
    }
    if report['connected']:
        decomposition = decompose(framework, tol)
        report['decomposition'] = decomposition.to_dict()
        report['metrics'] = metrics(framework.graph, decomposition).to_dict()
    return report

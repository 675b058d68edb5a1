# coding=utf-8
import numpy as np
import pytest

from subframework_rigidity.controller import collision_cost, collision_grad, \
    rigidity_cost, rigidity_grad, mission_cost, mission_cost_grad, \
    subframework_terms, control, step, total_cost, reduce_nu, advance, safe_timestep, \
    ControlOutput
from subframework_rigidity.exceptions import CollisionViolation, \
    RigidityFloorBreached
from subframework_rigidity.generator import substream
from subframework_rigidity.sensing import RobotState, comm_graph, positions_of
from subframework_rigidity.simulation.gains import ControlGains
from subframework_rigidity.targets import MissionState

from tests.fixtures.sensing import compact_team, complete_decomposition, \
    gradient_gains, pair_weights

STEP = 1e-6


def _relative_error(numeric, analytic):
    scale = max(np.linalg.norm(analytic), 1e-9)
    return np.linalg.norm(numeric - analytic) / scale


def _shifted(states, robot, coord, delta):
    """Get a copy of the team with one position coordinate or the yaw shifted."""
    s = states[robot]
    pos, yaw = np.array(s.position), s.yaw
    if coord < s.dim:
        pos[coord] += delta
    else:
        yaw += delta
    new = list(states)
    new[robot] = RobotState(pos, yaw, s.sensing_range, s.fov_cos, s.comm_range)
    return new


def _central_difference(function, states):
    count, dim = len(states), states[0].dim
    grad = np.zeros((count, dim + 1))
    for i in range(count):
        for c in range(dim + 1):
            up = function(_shifted(states, i, c, STEP))
            down = function(_shifted(states, i, c, -STEP))
            grad[i, c] = (up - down) / (2 * STEP)
    return grad


@pytest.mark.parametrize('seed', range(50))
def test_collision_gradient(seed):
    """Test the collision gradient against central differences."""
    count = 6 + seed % 5
    rng = substream(seed, count, 7)
    pos = rng.uniform(0, 12, size=(count, 3))
    while np.min(np.linalg.norm(pos[:, None] - pos[None], axis=2) +
                 np.eye(count) * 99) < 1.5:
        pos = rng.uniform(0, 12, size=(count, 3))
    gains = ControlGains(1, 0.5, 0.1, 1e-4, 1)
    graph = comm_graph(pos, 20)
    analytic = collision_grad(pos, graph, gains, 20)
    numeric = np.zeros_like(pos)
    for i in range(count):
        for c in range(3):
            up, down = pos.copy(), pos.copy()
            up[i, c] += STEP
            down[i, c] -= STEP
            numeric[i, c] = (collision_cost(up, graph, gains, 20) -
                             collision_cost(down, graph, gains, 20)) / (2 * STEP)
    assert _relative_error(numeric, analytic) <= 1e-4


@pytest.mark.parametrize('seed', range(50))
def test_rigidity_gradient(seed):
    """Test the rigidity gradient of positions and yaws against central differences."""
    states = compact_team(seed, 6 + seed % 5)
    decomposition = complete_decomposition(states)
    gains, params = gradient_gains(), pair_weights()
    gradient = rigidity_grad(decomposition, states, gains, params)
    analytic = np.hstack([gradient.position, gradient.yaw[:, None]])

    def cost(team):
        return rigidity_cost(decomposition, team, gains, params)

    numeric = _central_difference(cost, states)
    assert _relative_error(numeric, analytic) <= 1e-4
    assert gradient.cost == pytest.approx(cost(states))


@pytest.mark.parametrize('seed', range(50))
def test_mission_gradient(seed):
    """Test the mission gradient against central differences."""
    count = 6 + seed % 5
    rng = substream(seed, count, 8)
    pos = rng.uniform(0, 40, size=(count, 3))
    mission = MissionState(rng.uniform(0, 40, size=(12, 3)))
    analytic = mission_cost_grad(pos, mission)
    numeric = np.zeros_like(pos)
    for i in range(count):
        for c in range(3):
            up, down = pos.copy(), pos.copy()
            up[i, c] += STEP
            down[i, c] -= STEP
            numeric[i, c] = (mission_cost(up, mission) -
                             mission_cost(down, mission)) / (2 * STEP)
    assert _relative_error(numeric, analytic) <= 1e-4


def test_collision_violation():
    """Test that robots at the minimum distance raise CollisionViolation."""
    pos = np.array([[0, 0, 0], [1, 0, 0], [5, 5, 0]], dtype=float)
    gains = ControlGains(min_distance=1)
    with pytest.raises(CollisionViolation) as info:
        collision_cost(pos, comm_graph(pos, 20), gains, 20)
    assert info.value.pair == (0, 1)


def test_collision_cost_vanishes_at_comm_range():
    """Test that the collision cost of a pair at the radio range is zero."""
    pos = np.array([[0, 0], [20, 0]], dtype=float)
    gains = ControlGains()
    graph = comm_graph(pos, 20)
    assert graph.edge_count == 1
    assert collision_cost(pos, graph, gains, 20) == pytest.approx(0)
    assert np.allclose(collision_grad(pos, graph, gains, 20), 0)


def test_rigidity_floor_breached():
    """Test that a ball at or below the rigidity floor raises with its center."""
    states = compact_team(3)
    decomposition = complete_decomposition(states)
    terms = subframework_terms(0, range(6), states, gradient_gains(), pair_weights())
    high_floor = ControlGains(rigidity_floor=terms.rigidity_eigenvalue * 2)
    with pytest.raises(RigidityFloorBreached) as info:
        rigidity_grad(decomposition, states, high_floor, pair_weights())
    assert info.value.center == 0


def test_rigidity_gradient_is_translation_invariant():
    """Test that the rigidity gradient sums to zero over the team."""
    states = compact_team(5)
    gradient = rigidity_grad(complete_decomposition(states), states,
                             gradient_gains(), pair_weights())
    assert np.allclose(gradient.position.sum(axis=0), 0, atol=1e-9)


def test_reduce_nu():
    """Test the ordered reduction of gradient terms."""
    nu = [{1: np.array([1.0, 0, 2]), 0: np.array([0.5, 1, 0])}, {}]
    position, yaw = reduce_nu(nu, 2, 2)
    assert position.tolist() == [[1.5, 1.0], [0.0, 0.0]]
    assert yaw.tolist() == [2.0, 0.0]


def test_control_and_step():
    """Test that the control commands descend the total cost for a small step."""
    states = compact_team(11)
    decomposition = complete_decomposition(states)
    gains, params = gradient_gains(), pair_weights()
    mission = MissionState([[30, 30, 5], [15, 15, 2]])
    output, round_result = control(states, decomposition, mission, gains, params)
    assert round_result is None
    assert output.velocities.shape == (6, 3)
    assert set(output.costs) == {'collision', 'mission', 'rigidity'}
    assert set(output.eigenvalues) == set(range(6))
    assert all(v > gains.rigidity_floor for v in output.eigenvalues.values())

    before = total_cost(states, decomposition, mission, gains, params)
    result = step(states, decomposition, mission, gains, 1e-7, params,
                  precomputed=(output, round_result))
    after = total_cost(result.states, decomposition, mission, gains, params)
    assert after < before
    assert result.decomposition.radii == decomposition.radii
    assert all(kind in ('edge_gained', 'edge_lost', 'target_collected')
               for kind, _, _ in result.events)


def test_step_collects_targets():
    """Test that targets within the collection radius raise events."""
    states = compact_team(2)
    pos = positions_of(states)
    mission = MissionState([pos[0] + [0.5, 0, 0], [90, 90, 40]])
    gains = ControlGains(rigidity_gain=0.1)
    result = step(states, None, mission, gains, 1e-6)
    assert ('target_collected', 0, -1) in result.events
    assert result.mission.collected_count == 1
    assert result.decomposition is None


def test_safe_timestep():
    """Test the longest step that keeps every move within its bounds."""
    states = [RobotState(p) for p in ([0, 0, 0], [3, 0, 0], [10, 0, 0])]
    gains = ControlGains(min_distance=1)
    velocities = np.array([[4.0, 0, 0], [0, 0, 0], [0, 0, 0]])
    output = ControlOutput(velocities, np.zeros(3), {}, {}, {})
    assert safe_timestep(states, output, gains, 0.25, 0.25) == pytest.approx(0.0625)
    assert safe_timestep(states, output, gains, 1, 0.25) == pytest.approx(0.125)
    still = ControlOutput(np.zeros((3, 3)), np.zeros(3), {}, {}, {})
    assert safe_timestep(states, still, gains, 0.25, 0.25) == float('inf')


def test_advance_splits_fast_moves():
    """Test that a strongly repelled pair is advanced in bounded sub-steps."""
    states = [RobotState([0, 0, 0]), RobotState([1.5, 0, 0])]
    gains = ControlGains()

    def gap(team):
        return np.linalg.norm(team[1].position - team[0].position)

    single = step(states, None, None, gains, 0.1)
    assert gap(single.states) > 20
    result = advance(states, None, None, gains, 0.1)
    assert 1 < result.substeps < 1000
    assert 2 < gap(result.states) < 20
    assert np.allclose(result.control.velocities, single.control.velocities)

    capped = advance(states, None, None, gains, 0.1, max_substeps=1)
    assert capped.substeps == 1
    assert gap(capped.states) == pytest.approx(gap(single.states))


def test_advance_matches_step_for_slow_moves():
    """Test that a slow team is advanced in a single step."""
    states = compact_team(4)
    decomposition = complete_decomposition(states)
    gains, params = gradient_gains(), pair_weights()
    mission = MissionState([[30, 30, 5]])
    single = step(states, decomposition, mission, gains, 1e-7, params)
    result = advance(states, decomposition, mission, gains, 1e-7, params)
    assert result.substeps == 1
    for a, b in zip(result.states, single.states):
        assert np.array_equal(a.position, b.position)

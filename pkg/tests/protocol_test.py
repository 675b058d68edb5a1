# coding=utf-8
import numpy as np
import pytest

from subframework_rigidity.controller import rigidity_grad
from subframework_rigidity.exceptions import StaleDecomposition
from subframework_rigidity.framework import Graph, Framework
from subframework_rigidity.graphutil import graph_distances
from subframework_rigidity.protocol import StateBroadcast, NuRoute, MessageLog, \
    run_round, communication_cost, metrics, emission_radii
from subframework_rigidity.sensing import comm_graph, positions_of
from subframework_rigidity.subframework import decompose, Decomposition

from tests.fixtures.framework import triangle, three_path, complete_3d
from tests.fixtures.sensing import ibr_sensing_team, triangle_team, tiny_floor_gains


def test_messages():
    """Test the hop bookkeeping of protocol messages."""
    state = StateBroadcast(2, 'x', 1)
    assert state.kind == 'state'
    assert state.destination == -1
    assert state.forwarded().remaining_hops == 0
    with pytest.raises(AssertionError):
        state.forwarded().forwarded()
    route = NuRoute(0, 3, np.zeros(3), 2)
    assert route.kind == 'nu'
    assert route.destination == 3
    assert route.forwarded().key == 0
    str(route)  # test the string representation


def test_message_log():
    """Test the rows and the CSV text of a MessageLog."""
    log = MessageLog()
    log.record(1, 0, StateBroadcast(0, None, 0))
    log.record(2, 1, NuRoute(1, 0, None, 0))
    assert len(log) == 2
    assert log.sent_by(1) == 1
    lines = log.to_csv().splitlines()
    assert lines[0] == 'tick,sender,receiver,kind,key,hops_remaining'
    assert lines[1] == '1,0,-1,state,0,0'
    assert lines[2] == '2,1,0,nu,1,0'


def test_triangle_round():
    """Test a round on a triangle, one hop out and one hop back."""
    states = triangle_team()
    decomposition = decompose(triangle())
    result = run_round(triangle().graph, decomposition, states, tiny_floor_gains())
    assert result.ticks == 2
    assert all(len(received) == 3 for received in result.nu)
    assert result.forwarded == [3, 3, 3]
    assert result.completion == {0: 2, 1: 2, 2: 2}
    assert len(result.log) == 9
    str(result)  # test the string representation


def test_stale_decomposition():
    """Test that a network missing the ball links raises StaleDecomposition."""
    states = triangle_team()
    decomposition = decompose(triangle())
    with pytest.raises(StaleDecomposition):
        run_round(Graph(3, []), decomposition, states, tiny_floor_gains())


@pytest.mark.parametrize('seed', range(100))
def test_round_matches_closed_form(seed):
    """Test message counts, round trips and delivered terms on random teams."""
    framework, states = ibr_sensing_team(seed, 6 + seed % 5)
    decomposition = decompose(framework)
    gains = tiny_floor_gains()

    sensing_round = run_round(framework.graph, decomposition, states, gains)
    for j, r in enumerate(decomposition.radii):
        assert sensing_round.completion[j] == 2 * r

    network = comm_graph(positions_of(states), states[0].comm_range)
    comm_round = run_round(network, decomposition, states, gains)
    assert comm_round.forwarded == communication_cost(network, decomposition)
    assert [comm_round.log.sent_by(i) for i in range(len(states))] == \
        comm_round.forwarded

    # nu_jl floods outward to every robot nearer to j than l
    dist = graph_distances(network)
    senders = {}
    for _, sender, receiver, kind, key, _ in comm_round.log.rows:
        if kind == 'nu':
            senders.setdefault((key, receiver), []).append(sender)
    for (j, l), relays in senders.items():
        assert sorted(relays) == \
            [i for i in range(len(states)) if dist[j, i] < dist[j, l]]

    central = rigidity_grad(decomposition, states, gains)
    for terms in central.terms:
        for i, nu in terms.nu.items():
            assert np.array_equal(comm_round.nu[i][terms.center], nu)
    for i, centers in enumerate(decomposition.membership):
        assert set(comm_round.nu[i]) == set(centers)


def test_communication_cost_brute_force():
    """Test the closed form against set enumeration on a five vertex path."""
    positions = np.array([[0, 0], [1, 0], [2, 0.5], [3, 0], [4, 0.5]])
    framework = Framework(Graph.path(5), positions)
    decomposition = Decomposition(framework, [1, 1, 2, 1, 1])
    dist = graph_distances(framework.graph)
    balls = {j: [l for l in range(5) if dist[j, l] <= r]
             for j, r in enumerate(decomposition.radii)}
    q = [max(dist[l, j] for j in range(5) if l in balls[j]) for l in range(5)]
    assert emission_radii(decomposition, dist) == q
    expected = []
    for i in range(5):
        origins = {l for l in range(5) if dist[l, i] < q[l]}
        pairs = {(j, l) for j in range(5) for l in balls[j]
                 if dist[j, i] < dist[j, l] <= decomposition.radii[j]}
        expected.append(len(origins) + len(pairs))
    assert communication_cost(framework.graph, decomposition) == expected
    assert expected[2] == 5


def test_metrics_triangle():
    """Test the metrics of a triangle, where every minimal radius is 1."""
    result = metrics(triangle().graph, decompose(triangle()))
    assert result.round_trips == (2, 2, 2)
    assert result.costs == (3, 3, 3)
    assert result.diameter == 1
    assert result.delays == (2, 2, 2)
    assert result.normalized_costs == (1, 1, 1)
    assert result.to_dict()['C'] == [3, 3, 3]


def test_metrics_single_hop_balls():
    """Test that single hop balls cost one message per neighbor plus one."""
    framework = complete_3d()
    result = metrics(framework.graph, decompose(framework))
    assert result.costs == tuple(1 + framework.graph.degree(i) for i in range(5))
    assert result.normalized_costs == (1, 1, 1, 1, 1)


def test_metrics_infinite_radius():
    """Test that robots without a rigid ball get None delays."""
    result = metrics(three_path().graph, decompose(three_path()))
    assert result.round_trips == (2, None, 2)
    assert result.delays == (1, None, 1)
    comm = metrics(three_path().graph, decompose(three_path()), 'comm')
    assert comm.diameter == 2

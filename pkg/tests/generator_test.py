# coding=utf-8
import math

import numpy as np
import pytest

from subframework_rigidity.generator import substream, gen_erdos_renyi, \
    barycenter_yaws, gen_sensing_framework
from subframework_rigidity.sensing import undirected_sensing


def test_substream():
    """Test that substreams are reproducible and independent."""
    a = substream(4, 10, 0).random(5)
    assert np.array_equal(a, substream(4, 10, 0).random(5))
    assert not np.array_equal(a, substream(4, 10, 1).random(5))
    assert not np.array_equal(a, substream(5, 10, 0).random(5))


def test_erdos_renyi():
    """Test the Erdos-Renyi frameworks."""
    complete = gen_erdos_renyi(8, 1, 3, substream(0, 8, 0))
    assert complete.graph.edge_count == 28
    assert np.all((complete.positions >= 0) & (complete.positions < 1))

    first = gen_erdos_renyi(12, 0.4, 2, substream(1, 12, 0))
    second = gen_erdos_renyi(12, 0.4, 2, substream(1, 12, 0))
    assert first.graph == second.graph
    assert np.array_equal(first.positions, second.positions)
    with pytest.raises(AssertionError):
        gen_erdos_renyi(12, 0, 2, substream(1, 12, 0))


def test_barycenter_yaws():
    """Test that cameras face the team barycenter."""
    yaws = barycenter_yaws([[0, 0, 5], [2, 0, 0], [1, 0, 1]])
    assert yaws[0] == pytest.approx(0)
    assert yaws[1] == pytest.approx(math.pi)
    assert yaws[2] == 0.0
    yaws = barycenter_yaws([[0, 0], [0, 2]])
    assert yaws == pytest.approx([math.pi / 2, -math.pi / 2])


def test_sensing_framework():
    """Test that a sensing framework is built over the undirected sensing graph."""
    framework, states = gen_sensing_framework(
        12, 0.6, 2, substream(2, 12, 0), fov_cos=0.3, low=[0, 0], high=[2, 1])
    assert framework.graph == undirected_sensing(states)
    assert np.array_equal(framework.positions, [s.position for s in states])
    assert [s.yaw for s in states] == pytest.approx(barycenter_yaws(framework.positions))
    assert np.all(framework.positions[:, 0] <= 2)
    assert np.all(framework.positions[:, 1] <= 1)
    assert all(s.comm_range == 0.6 for s in states)

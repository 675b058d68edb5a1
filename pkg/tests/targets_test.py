# coding=utf-8
import numpy as np
import pytest

from subframework_rigidity.targets import MissionState


def test_mission_state():
    """Test the basic properties of a MissionState."""
    mission = MissionState([[0, 0, 0], [10, 0, 0]])
    str(mission)  # test the string representation
    assert mission.collected_count == 0
    assert mission.remaining.tolist() == [0, 1]
    assert mission.collect_radius == 5
    assert mission.to_dict()['collected'] == [False, False]
    with pytest.raises(AssertionError):
        MissionState([[0, 0]], near_bound=30, far_bound=20)
    with pytest.raises(AssertionError):
        MissionState([[0, 0]], collected=[True, False])


def test_speed_profile():
    """Test the piecewise linear tracking speed."""
    mission = MissionState([[0, 0]])
    assert mission.speed(0) == 1.5
    assert mission.speed(20) == 1.5
    assert mission.speed(25) == pytest.approx(0.75)
    assert mission.speed(30) == 0
    assert mission.speed(100) == 0


def test_potential():
    """Test that the potential integrates the speed profile."""
    mission = MissionState([[0, 0]])
    assert mission.potential(0) == 0
    assert mission.potential(10) == pytest.approx(15)
    assert mission.potential(30) == pytest.approx(30 + 7.5)
    assert mission.potential(50) == pytest.approx(mission.potential(30))
    h = 1e-6
    for dist in (5.0, 22.0, 27.5):
        slope = (mission.potential(dist + h) - mission.potential(dist - h)) / (2 * h)
        assert slope == pytest.approx(mission.speed(dist), abs=1e-6)


def test_nearest():
    """Test the nearest target with ties going to the lowest index."""
    mission = MissionState([[10, 0], [-10, 0], [0, 30]])
    index, dist = mission.nearest([[0, 0], [0, 25]])
    assert index.tolist() == [0, 2]
    assert dist.tolist() == pytest.approx([10, 5])

    done = MissionState([[10, 0]], collected=[True])
    index, dist = done.nearest([[0, 0]])
    assert index.tolist() == [-1]
    assert np.isinf(dist[0])


def test_collect():
    """Test that targets within the radius are collected once."""
    mission = MissionState([[0, 0], [4, 0], [50, 0]])
    new_mission, new = mission.collect([[1, 0]])
    assert new == [0, 1]
    assert new_mission.collected_count == 2
    assert mission.collected_count == 0
    again, new = new_mission.collect([[1, 0]])
    assert new == []
    assert again.remaining.tolist() == [2]

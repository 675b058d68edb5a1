# coding=utf-8
import pytest

from subframework_rigidity.simulation.parameter import ScenarioParameter
from subframework_rigidity.simulation.sensing import SensingParameter, \
    WeightParameter
from subframework_rigidity.simulation.gains import ControlGains
from subframework_rigidity.simulation.mission import MissionParameter
from subframework_rigidity.simulation.runperiod import TimeParameter
from subframework_rigidity.simulation.montecarlo import MonteCarloParameter

from tests.fixtures.scenario import default_scenario, custom_scenario, small_fig2


def test_scenario():
    """Test the existence of basic properties."""
    scenario = default_scenario()

    str(scenario)  # test the string representation
    assert scenario.kind == 'mission'
    assert scenario.dimension == 3
    assert scenario.robot_count == 15
    assert scenario.use_protocol
    assert scenario.robot_counts == (15,)
    assert scenario.sensing_parameter.sensing_range == 20
    assert scenario.control_gains.rigidity_floor == pytest.approx(1e-4)
    assert scenario.time_parameter.step_count == 3000
    assert scenario.time_parameter.snapshot_steps == (0, 1000, 3000)


def test_kind_defaults():
    """Test the settings that depend on the scenario kind."""
    fig1 = ScenarioParameter('fig1')
    assert fig1.robot_counts == tuple(range(10, 55, 5))
    fig2 = ScenarioParameter('fig2')
    assert fig2.robot_counts == tuple(range(10, 110, 10))
    assert fig2.sensing_parameter.sensing_range == 0.5
    assert fig2.sensing_parameter.comm_range == 0.5
    assert fig2.sensing_parameter.fov_cos == pytest.approx(0.1)
    assert fig2.monte_carlo_parameter.retry_cap == 50000
    fig2.monte_carlo_parameter = MonteCarloParameter(robot_counts=[20, 30])
    assert fig2.robot_counts == (20, 30)
    assert small_fig2().sensing_parameter.fov_cos == pytest.approx(0.2)


def test_invalid_inputs():
    """Test that invalid settings are refused."""
    with pytest.raises(AssertionError):
        ScenarioParameter('movie')
    with pytest.raises(AssertionError):
        ScenarioParameter(delay_reference='hops')
    with pytest.raises(AssertionError):
        ScenarioParameter(tolerance=2)
    with pytest.raises(AssertionError):
        WeightParameter(support='everything')
    with pytest.raises(AssertionError):
        SensingParameter(20, 0.5, 10)
    with pytest.raises(AssertionError):
        MissionParameter(near_bound=40, far_bound=30)
    with pytest.raises(AssertionError):
        TimeParameter(0.1, 10, (0, 20))
    with pytest.raises(AssertionError):
        TimeParameter(gap_fraction=0)
    with pytest.raises(AssertionError):
        MissionParameter(max_radius=0)
    scenario = ScenarioParameter(control_gains=ControlGains(min_distance=25))
    with pytest.raises(AssertionError):
        scenario.check_ranges()


def test_duplicate():
    """Test the duplicate method."""
    scenario = custom_scenario()
    new_scenario = scenario.duplicate()
    assert new_scenario is not scenario
    assert new_scenario.control_gains is not scenario.control_gains
    assert new_scenario.to_dict() == scenario.to_dict()


def test_to_from_dict():
    """Test the ScenarioParameter to_dict and from_dict methods."""
    scenario = custom_scenario()
    scenario_dict = scenario.to_dict()
    new_scenario = ScenarioParameter.from_dict(scenario_dict)
    assert new_scenario.to_dict() == scenario_dict
    assert new_scenario.weight_parameter.support == 'comm_pairs'
    assert new_scenario.sensing_parameter.comm_range == 25


def test_weight_support_key():
    """Test the weight_support shortcut of the scenario dictionary."""
    data = {'type': 'ScenarioParameter', 'weight_support': 'comm_pairs'}
    assert ScenarioParameter.from_dict(data).weight_parameter.support == 'comm_pairs'
    data['weight_parameter'] = WeightParameter(fov_steepness=20).to_dict()
    scenario = ScenarioParameter.from_dict(data)
    assert scenario.weight_parameter.support == 'comm_pairs'
    assert scenario.weight_parameter.fov_steepness == 20


def test_config_hash():
    """Test that the config hash follows the settings but not the folder."""
    scenario = custom_scenario()
    digest = scenario.config_hash
    assert len(digest) == 64
    scenario.folder = './results'
    assert scenario.config_hash == digest
    scenario.seed = 8
    assert scenario.config_hash != digest


def test_sub_parameters():
    """Test the helpers of the nested parameters."""
    mc = MonteCarloParameter()
    assert mc.edge_probability(10) == pytest.approx(5 / 9)
    assert mc.edge_probability(4) == 1
    mission = MissionParameter()
    assert mission.box_bounds(mission.target_box, 2) == ([0, 0], [100, 100])
    assert mission.min_separation == 3 and mission.max_radius == 1
    timing = TimeParameter()
    assert (timing.max_displacement, timing.gap_fraction, timing.max_substeps) == \
        (0.25, 0.25, 1000)
    custom = TimeParameter.from_dict({'type': 'TimeParameter', 'max_substeps': 20})
    assert custom.max_substeps == 20 and custom.duplicate().max_substeps == 20
    gains = ControlGains(0, 0, 0)
    assert gains.is_zero
    for par in (SensingParameter(), WeightParameter(), ControlGains(), mission,
                TimeParameter(), mc):
        assert par.__class__.from_dict(par.to_dict()).to_dict() == par.to_dict()

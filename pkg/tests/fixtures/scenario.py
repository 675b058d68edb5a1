# coding=utf-8
import json

from subframework_rigidity.simulation.parameter import ScenarioParameter
from subframework_rigidity.simulation.sensing import SensingParameter, \
    WeightParameter
from subframework_rigidity.simulation.gains import ControlGains
from subframework_rigidity.simulation.runperiod import TimeParameter


def default_scenario():
    return ScenarioParameter()


def custom_scenario():
    return ScenarioParameter(
        'mission', 2, 7, 9, 1e-9, 'comm', False, None,
        SensingParameter(15, 0.4, 25), WeightParameter(support='comm_pairs'),
        ControlGains(2, 0.2, 0.3, 1e-3, 1.5), None, TimeParameter(0.05, 10, (0, 5)))


def _load(name):
    with open('./tests/json/{}.json'.format(name)) as json_file:
        return ScenarioParameter.from_dict(json.load(json_file))


def small_mission():
    return _load('mission_small')


def small_fig1():
    return _load('fig1_small')


def small_fig2():
    return _load('fig2_small')

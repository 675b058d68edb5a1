# coding=utf-8
"""Complete set of scenario settings for analyses, campaigns and missions."""
from __future__ import division

import hashlib
import json

from honeybee.typing import float_positive, int_in_range, int_positive

from .sensing import SensingParameter, WeightParameter
from .gains import ControlGains
from .mission import MissionParameter
from .runperiod import TimeParameter
from .montecarlo import MonteCarloParameter


class ScenarioParameter(object):
    """Complete set of scenario settings.

    Nested parameters that are left as None resolve to the defaults of the
    scenario kind.

    Args:
        kind: Text for the scenario kind. One of "fig1" (minimal radius
            campaign), "fig2" (protocol cost campaign), "mission" (closed-loop
            collection mission) or "analyze". (Default: mission).
        dimension: Integer for the spatial dimension, 2 or 3. (Default: 3).
        seed: Non-negative integer seed of every random draw. (Default: 0).
        robot_count: Integer for the number of robots of a mission. (Default: 15).
        tolerance: Relative threshold of the rigidity tests. (Default: 1e-8).
        delay_reference: Text for the graph whose diameter normalizes the
            protocol delay. Either "sensing" or "comm". (Default: sensing).
        use_protocol: Boolean noting whether mission control commands are
            delivered through the simulated message passing protocol. (Default: True).
        folder: Optional text for the output directory. (Default: None).
        sensing_parameter: A SensingParameter. If None, the fig2 campaign uses a
            0.5 m range with a fov cosine of 0.1 and every other kind a 20 m
            range with a fov cosine of 0.5. (Default: None).
        weight_parameter: A WeightParameter. (Default: None).
        control_gains: A ControlGains. (Default: None).
        mission_parameter: A MissionParameter. (Default: None).
        time_parameter: A TimeParameter. (Default: None).
        monte_carlo_parameter: A MonteCarloParameter. (Default: None).

    Properties:
        * kind
        * dimension
        * seed
        * robot_count
        * tolerance
        * delay_reference
        * use_protocol
        * folder
        * sensing_parameter
        * weight_parameter
        * control_gains
        * mission_parameter
        * time_parameter
        * monte_carlo_parameter
        * robot_counts
        * config_hash
    """
    __slots__ = ('_kind', '_dimension', '_seed', '_robot_count', '_tolerance',
                 '_delay_reference', '_use_protocol', '_folder', '_sensing_parameter',
                 '_weight_parameter', '_control_gains', '_mission_parameter',
                 '_time_parameter', '_monte_carlo_parameter')

    KINDS = ('fig1', 'fig2', 'mission', 'analyze')
    DELAY_REFERENCES = ('sensing', 'comm')
    ROBOT_COUNTS = {
        'fig1': tuple(range(10, 55, 5)),
        'fig2': tuple(range(10, 110, 10))
    }

    def __init__(self, kind='mission', dimension=3, seed=0, robot_count=15,
                 tolerance=1e-8, delay_reference='sensing', use_protocol=True,
                 folder=None, sensing_parameter=None, weight_parameter=None,
                 control_gains=None, mission_parameter=None, time_parameter=None,
                 monte_carlo_parameter=None):
        """Initialize ScenarioParameter."""
        self.kind = kind
        self.dimension = dimension
        self.seed = seed
        self.robot_count = robot_count
        self.tolerance = tolerance
        self.delay_reference = delay_reference
        self.use_protocol = use_protocol
        self.folder = folder
        self.sensing_parameter = sensing_parameter
        self.weight_parameter = weight_parameter
        self.control_gains = control_gains
        self.mission_parameter = mission_parameter
        self.time_parameter = time_parameter
        self.monte_carlo_parameter = monte_carlo_parameter

    @property
    def kind(self):
        """Get or set text for the scenario kind."""
        return self._kind

    @kind.setter
    def kind(self, value):
        assert value in self.KINDS, 'ScenarioParameter kind "{}" is invalid. ' \
            'Must be one of the following: {}'.format(value, self.KINDS)
        self._kind = value

    @property
    def dimension(self):
        """Get or set an integer for the spatial dimension."""
        return self._dimension

    @dimension.setter
    def dimension(self, value):
        self._dimension = int_in_range(value, 2, 3, 'dimension')

    @property
    def seed(self):
        """Get or set a non-negative integer for the random seed."""
        return self._seed

    @seed.setter
    def seed(self, value):
        self._seed = int_positive(value, 'seed')

    @property
    def robot_count(self):
        """Get or set an integer for the number of robots of a mission."""
        return self._robot_count

    @robot_count.setter
    def robot_count(self, value):
        self._robot_count = int_in_range(value, 2, input_name='robot_count')

    @property
    def tolerance(self):
        """Get or set the relative threshold of the rigidity tests."""
        return self._tolerance

    @tolerance.setter
    def tolerance(self, value):
        value = float_positive(value, 'tolerance')
        assert 0 < value < 1, \
            'ScenarioParameter tolerance must be between 0 and 1. Got {}.'.format(value)
        self._tolerance = value

    @property
    def delay_reference(self):
        """Get or set text for the graph whose diameter normalizes the delay."""
        return self._delay_reference

    @delay_reference.setter
    def delay_reference(self, value):
        assert value in self.DELAY_REFERENCES, 'ScenarioParameter delay_reference ' \
            '"{}" is invalid. Must be one of the following: {}'.format(
                value, self.DELAY_REFERENCES)
        self._delay_reference = value

    @property
    def use_protocol(self):
        """Get or set a boolean for delivering commands through the protocol."""
        return self._use_protocol

    @use_protocol.setter
    def use_protocol(self, value):
        self._use_protocol = bool(value)

    @property
    def folder(self):
        """Get or set text for the output directory."""
        return self._folder

    @folder.setter
    def folder(self, value):
        self._folder = str(value) if value is not None else None

    @property
    def sensing_parameter(self):
        """Get or set a SensingParameter with the camera and radio ranges."""
        if self._sensing_parameter is not None:
            return self._sensing_parameter
        if self._kind == 'fig2':
            return SensingParameter(0.5, 0.1, 0.5)
        return SensingParameter(20, 0.5, 20)

    @sensing_parameter.setter
    def sensing_parameter(self, value):
        if value is not None:
            assert isinstance(value, SensingParameter), 'Expected SensingParameter ' \
                'for ScenarioParameter. Got {}.'.format(type(value))
        self._sensing_parameter = value

    @property
    def weight_parameter(self):
        """Get or set a WeightParameter for the sigmoid edge weights."""
        return self._weight_parameter

    @weight_parameter.setter
    def weight_parameter(self, value):
        if value is not None:
            assert isinstance(value, WeightParameter), 'Expected WeightParameter ' \
                'for ScenarioParameter. Got {}.'.format(type(value))
            self._weight_parameter = value
        else:
            self._weight_parameter = WeightParameter()

    @property
    def control_gains(self):
        """Get or set the ControlGains of the mission controller."""
        return self._control_gains

    @control_gains.setter
    def control_gains(self, value):
        if value is not None:
            assert isinstance(value, ControlGains), 'Expected ControlGains ' \
                'for ScenarioParameter. Got {}.'.format(type(value))
            self._control_gains = value
        else:
            self._control_gains = ControlGains()

    @property
    def mission_parameter(self):
        """Get or set the MissionParameter of the target field."""
        return self._mission_parameter

    @mission_parameter.setter
    def mission_parameter(self, value):
        if value is not None:
            assert isinstance(value, MissionParameter), 'Expected MissionParameter ' \
                'for ScenarioParameter. Got {}.'.format(type(value))
            self._mission_parameter = value
        else:
            self._mission_parameter = MissionParameter()

    @property
    def time_parameter(self):
        """Get or set the TimeParameter of the mission run."""
        return self._time_parameter

    @time_parameter.setter
    def time_parameter(self, value):
        if value is not None:
            assert isinstance(value, TimeParameter), 'Expected TimeParameter ' \
                'for ScenarioParameter. Got {}.'.format(type(value))
            self._time_parameter = value
        else:
            self._time_parameter = TimeParameter()

    @property
    def monte_carlo_parameter(self):
        """Get or set the MonteCarloParameter of the campaigns."""
        return self._monte_carlo_parameter

    @monte_carlo_parameter.setter
    def monte_carlo_parameter(self, value):
        if value is not None:
            assert isinstance(value, MonteCarloParameter), 'Expected ' \
                'MonteCarloParameter for ScenarioParameter. Got {}.'.format(type(value))
            self._monte_carlo_parameter = value
        else:
            self._monte_carlo_parameter = MonteCarloParameter()

    @property
    def robot_counts(self):
        """Get the tuple of team sizes sampled by a campaign."""
        counts = self._monte_carlo_parameter.robot_counts
        if counts is not None:
            return counts
        return self.ROBOT_COUNTS.get(self._kind, (self._robot_count,))

    @property
    def config_hash(self):
        """Get the SHA-256 hex digest of the canonical JSON of these settings.

        The output folder is not part of the hash.
        """
        data = self.to_dict()
        data.pop('folder', None)
        text = json.dumps(data, sort_keys=True, separators=(',', ':'))
        return hashlib.sha256(text.encode('utf-8')).hexdigest()

    def check_ranges(self):
        """Check that the minimum distance is below the radio range."""
        comm = self.sensing_parameter.comm_range
        assert self._control_gains.min_distance < comm, 'ControlGains min_distance ' \
            '({}) must be smaller than the radio range ({}).'.format(
                self._control_gains.min_distance, comm)

    @classmethod
    def from_dict(cls, data):
        """Create a ScenarioParameter object from a dictionary.

        Args:
            data: A ScenarioParameter dictionary in following the format below.

        .. code-block:: python

            {
            "type": "ScenarioParameter",
            "kind": "mission",  # fig1, fig2, mission or analyze
            "dimension": 3,
            "seed": 0,
            "robot_count": 15,
            "tolerance": 1e-8,
            "weight_support": "edges",  # shortcut for weight_parameter.support
            "delay_reference": "sensing",
            "use_protocol": true,
            "folder": "./results",
            "sensing_parameter": {},  # SensingParameter dictionary
            "weight_parameter": {},  # WeightParameter dictionary
            "control_gains": {},  # ControlGains dictionary
            "mission_parameter": {},  # MissionParameter dictionary
            "time_parameter": {},  # TimeParameter dictionary
            "monte_carlo_parameter": {}  # MonteCarloParameter dictionary
            }
        """
        assert data['type'] == 'ScenarioParameter', \
            'Expected ScenarioParameter dictionary. Got {}.'.format(data['type'])
        kind = data['kind'] if 'kind' in data else 'mission'
        dim = data['dimension'] if 'dimension' in data else 3
        seed = data['seed'] if 'seed' in data else 0
        count = data['robot_count'] if 'robot_count' in data else 15
        tol = data['tolerance'] if 'tolerance' in data else 1e-8
        delay = data['delay_reference'] if 'delay_reference' in data else 'sensing'
        protocol = data['use_protocol'] if 'use_protocol' in data else True
        folder = data['folder'] if 'folder' in data else None

        nested = {}
        for key, klass in (
                ('sensing_parameter', SensingParameter),
                ('weight_parameter', WeightParameter),
                ('control_gains', ControlGains),
                ('mission_parameter', MissionParameter),
                ('time_parameter', TimeParameter),
                ('monte_carlo_parameter', MonteCarloParameter)):
            nested[key] = klass.from_dict(data[key]) \
                if key in data and data[key] is not None else None
        if 'weight_support' in data:
            if nested['weight_parameter'] is None:
                nested['weight_parameter'] = WeightParameter()
            nested['weight_parameter'].support = data['weight_support']

        return cls(kind, dim, seed, count, tol, delay, protocol, folder, **nested)

    def to_dict(self):
        """ScenarioParameter dictionary representation."""
        base = {
            'type': 'ScenarioParameter',
            'kind': self.kind,
            'dimension': self.dimension,
            'seed': self.seed,
            'robot_count': self.robot_count,
            'tolerance': self.tolerance,
            'delay_reference': self.delay_reference,
            'use_protocol': self.use_protocol,
            'sensing_parameter': self.sensing_parameter.to_dict(),
            'weight_parameter': self.weight_parameter.to_dict(),
            'control_gains': self.control_gains.to_dict(),
            'mission_parameter': self.mission_parameter.to_dict(),
            'time_parameter': self.time_parameter.to_dict(),
            'monte_carlo_parameter': self.monte_carlo_parameter.to_dict()
        }
        if self._folder is not None:
            base['folder'] = self.folder
        return base

    def duplicate(self):
        """Get a copy of this object."""
        return self.__copy__()

    def ToString(self):
        """Overwrite .NET ToString."""
        return self.__repr__()

    def __copy__(self):
        return ScenarioParameter(
            self.kind, self.dimension, self.seed, self.robot_count, self.tolerance,
            self.delay_reference, self.use_protocol, self.folder,
            self._sensing_parameter.duplicate()
            if self._sensing_parameter is not None else None,
            self._weight_parameter.duplicate(), self._control_gains.duplicate(),
            self._mission_parameter.duplicate(), self._time_parameter.duplicate(),
            self._monte_carlo_parameter.duplicate())

    def __repr__(self):
        return 'ScenarioParameter: [{}] [d={}] [seed {}]'.format(
            self.kind, self.dimension, self.seed)

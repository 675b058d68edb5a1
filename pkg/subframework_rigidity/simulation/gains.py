# coding=utf-8
"""Gains of the gradient rigidity maintenance controller."""
from __future__ import division

from honeybee.typing import float_positive


class ControlGains(object):
    """Gains and thresholds of the cost J = k_m J_m + k_c J_c + k_r J_r.

    Args:
        mission_gain: Non-negative gain k_m of the mission cost. (Default: 1).
        collision_gain: Non-negative gain k_c of the collision cost. (Default: 0.5).
        rigidity_gain: Non-negative gain k_r of the rigidity cost. (Default: 0.1).
        rigidity_floor: Positive floor lambda_0 that every subframework rigidity
            eigenvalue must stay above. (Default: 1e-4).
        min_distance: Positive minimum allowed distance l_0 between communicating
            robots in meters. It must be smaller than the radio range. (Default: 1).

    Properties:
        * mission_gain
        * collision_gain
        * rigidity_gain
        * rigidity_floor
        * min_distance
    """
    __slots__ = ('_mission_gain', '_collision_gain', '_rigidity_gain',
                 '_rigidity_floor', '_min_distance')

    def __init__(self, mission_gain=1, collision_gain=0.5, rigidity_gain=0.1,
                 rigidity_floor=1e-4, min_distance=1):
        """Initialize ControlGains."""
        self.mission_gain = mission_gain
        self.collision_gain = collision_gain
        self.rigidity_gain = rigidity_gain
        self.rigidity_floor = rigidity_floor
        self.min_distance = min_distance

    @classmethod
    def from_dict(cls, data):
        """Create a ControlGains object from a dictionary.

        .. code-block:: python

            {
            "type": "ControlGains",
            "mission_gain": 1,
            "collision_gain": 0.5,
            "rigidity_gain": 0.1,
            "rigidity_floor": 0.0001,
            "min_distance": 1
            }
        """
        assert data['type'] == 'ControlGains', \
            'Expected ControlGains dictionary. Got {}.'.format(data['type'])
        k_m = data['mission_gain'] if 'mission_gain' in data else 1
        k_c = data['collision_gain'] if 'collision_gain' in data else 0.5
        k_r = data['rigidity_gain'] if 'rigidity_gain' in data else 0.1
        floor = data['rigidity_floor'] if 'rigidity_floor' in data else 1e-4
        l_0 = data['min_distance'] if 'min_distance' in data else 1
        return cls(k_m, k_c, k_r, floor, l_0)

    @property
    def mission_gain(self):
        """Get or set the gain of the mission cost."""
        return self._mission_gain

    @mission_gain.setter
    def mission_gain(self, value):
        self._mission_gain = float_positive(value, 'mission_gain')

    @property
    def collision_gain(self):
        """Get or set the gain of the collision cost."""
        return self._collision_gain

    @collision_gain.setter
    def collision_gain(self, value):
        self._collision_gain = float_positive(value, 'collision_gain')

    @property
    def rigidity_gain(self):
        """Get or set the gain of the rigidity cost."""
        return self._rigidity_gain

    @rigidity_gain.setter
    def rigidity_gain(self, value):
        self._rigidity_gain = float_positive(value, 'rigidity_gain')

    @property
    def rigidity_floor(self):
        """Get or set the floor lambda_0 of the subframework rigidity eigenvalues."""
        return self._rigidity_floor

    @rigidity_floor.setter
    def rigidity_floor(self, value):
        value = float_positive(value, 'rigidity_floor')
        assert value > 0, 'ControlGains rigidity_floor must be greater than 0.'
        self._rigidity_floor = value

    @property
    def min_distance(self):
        """Get or set the minimum allowed distance between robots in meters."""
        return self._min_distance

    @min_distance.setter
    def min_distance(self, value):
        value = float_positive(value, 'min_distance')
        assert value > 0, 'ControlGains min_distance must be greater than 0.'
        self._min_distance = value

    @property
    def is_zero(self):
        """Get a boolean noting whether every gain is zero."""
        return self._mission_gain == 0 and self._collision_gain == 0 and \
            self._rigidity_gain == 0

    def to_dict(self):
        """Get ControlGains dictionary."""
        return {
            'type': 'ControlGains',
            'mission_gain': self.mission_gain,
            'collision_gain': self.collision_gain,
            'rigidity_gain': self.rigidity_gain,
            'rigidity_floor': self.rigidity_floor,
            'min_distance': self.min_distance
        }

    def duplicate(self):
        """Get a copy of this object."""
        return self.__copy__()

    def __copy__(self):
        return ControlGains(
            self._mission_gain, self._collision_gain, self._rigidity_gain,
            self._rigidity_floor, self._min_distance)

    def ToString(self):
        """Overwrite .NET ToString method."""
        return self.__repr__()

    def __repr__(self):
        return 'ControlGains: [k_m: {}] [k_c: {}] [k_r: {}] [floor: {}] [l_0: {} m]'.format(
            self.mission_gain, self.collision_gain, self.rigidity_gain,
            self.rigidity_floor, self.min_distance)

# coding=utf-8
"""Target field, initial placement and speed profile of a collection mission."""
from __future__ import division

from honeybee.typing import float_positive, int_positive


class MissionParameter(object):
    """Parameters of a target collection mission.

    Boxes are given as a pair of (min corner, max corner) with three
    coordinates. Two-dimensional scenarios use the first two coordinates.

    Args:
        target_count: Positive integer for the number of targets. (Default: 100).
        target_box: Box in which targets are uniformly placed.
            (Default: ((0, 0, 10), (100, 100, 50))).
        initial_box: Box in which robots are uniformly placed at the start.
            (Default: ((0, 0, 0), (50, 50, 0))).
        collect_radius: Distance in meters at which a target is collected.
            (Default: 5).
        max_speed: Tracking speed in m/s toward targets closer than the near
            bound. (Default: 1.5).
        near_bound: Distance in meters where the tracking speed starts to
            ramp down. (Default: 20).
        far_bound: Distance in meters where the tracking speed reaches zero.
            (Default: 30).
        min_separation: Smallest distance in meters allowed between two robots
            of the initial team. (Default: 3).
        max_radius: Largest minimal radius r*_i accepted in the initial team.
            (Default: 1).

    Properties:
        * target_count
        * target_box
        * initial_box
        * collect_radius
        * max_speed
        * near_bound
        * far_bound
        * min_separation
        * max_radius
    """
    __slots__ = ('_target_count', '_target_box', '_initial_box', '_collect_radius',
                 '_max_speed', '_near_bound', '_far_bound', '_min_separation',
                 '_max_radius')

    def __init__(self, target_count=100, target_box=((0, 0, 10), (100, 100, 50)),
                 initial_box=((0, 0, 0), (50, 50, 0)), collect_radius=5,
                 max_speed=1.5, near_bound=20, far_bound=30, min_separation=3,
                 max_radius=1):
        """Initialize MissionParameter."""
        self._far_bound = None
        self.target_count = target_count
        self.target_box = target_box
        self.initial_box = initial_box
        self.collect_radius = collect_radius
        self.max_speed = max_speed
        self.near_bound = near_bound
        self.far_bound = far_bound
        self.min_separation = min_separation
        self.max_radius = max_radius

    @classmethod
    def from_dict(cls, data):
        """Create a MissionParameter object from a dictionary.

        .. code-block:: python

            {
            "type": "MissionParameter",
            "target_count": 100,
            "target_box": [[0, 0, 10], [100, 100, 50]],
            "initial_box": [[0, 0, 0], [50, 50, 0]],
            "collect_radius": 5,
            "max_speed": 1.5,
            "near_bound": 20,
            "far_bound": 30,
            "min_separation": 3,
            "max_radius": 1
            }
        """
        assert data['type'] == 'MissionParameter', \
            'Expected MissionParameter dictionary. Got {}.'.format(data['type'])
        default = cls()
        keys = ('target_count', 'target_box', 'initial_box', 'collect_radius',
                'max_speed', 'near_bound', 'far_bound', 'min_separation', 'max_radius')
        args = [data[k] if k in data and data[k] is not None else getattr(default, k)
                for k in keys]
        return cls(*args)

    @property
    def target_count(self):
        """Get or set an integer for the number of targets."""
        return self._target_count

    @target_count.setter
    def target_count(self, value):
        self._target_count = int_positive(value, 'target_count')

    @property
    def target_box(self):
        """Get or set the (min, max) corners of the target box."""
        return self._target_box

    @target_box.setter
    def target_box(self, value):
        self._target_box = self._check_box(value, 'target_box')

    @property
    def initial_box(self):
        """Get or set the (min, max) corners of the initial placement box."""
        return self._initial_box

    @initial_box.setter
    def initial_box(self, value):
        self._initial_box = self._check_box(value, 'initial_box')

    @property
    def collect_radius(self):
        """Get or set the distance in meters at which targets are collected."""
        return self._collect_radius

    @collect_radius.setter
    def collect_radius(self, value):
        self._collect_radius = float_positive(value, 'collect_radius')

    @property
    def max_speed(self):
        """Get or set the tracking speed in m/s near the targets."""
        return self._max_speed

    @max_speed.setter
    def max_speed(self, value):
        self._max_speed = float_positive(value, 'max_speed')

    @property
    def near_bound(self):
        """Get or set the distance where the tracking speed starts to ramp down."""
        return self._near_bound

    @near_bound.setter
    def near_bound(self, value):
        value = float_positive(value, 'near_bound')
        if self._far_bound is not None:
            self._check_ramp(value, self._far_bound)
        self._near_bound = value

    @property
    def far_bound(self):
        """Get or set the distance where the tracking speed reaches zero."""
        return self._far_bound

    @far_bound.setter
    def far_bound(self, value):
        value = float_positive(value, 'far_bound')
        self._check_ramp(self._near_bound, value)
        self._far_bound = value

    @property
    def min_separation(self):
        """Get or set the smallest distance between two robots of the initial team."""
        return self._min_separation

    @min_separation.setter
    def min_separation(self, value):
        self._min_separation = float_positive(value, 'min_separation')

    @property
    def max_radius(self):
        """Get or set the largest minimal radius accepted in the initial team."""
        return self._max_radius

    @max_radius.setter
    def max_radius(self, value):
        self._max_radius = int_positive(value, 'max_radius')
        assert self._max_radius > 0, 'MissionParameter max_radius must be at least 1.'

    def box_bounds(self, box, dim):
        """Get numpy-ready (low, high) lists of a box cut to a dimension."""
        return list(box[0][:dim]), list(box[1][:dim])

    def to_dict(self):
        """Get MissionParameter dictionary."""
        return {
            'type': 'MissionParameter',
            'target_count': self.target_count,
            'target_box': [list(c) for c in self.target_box],
            'initial_box': [list(c) for c in self.initial_box],
            'collect_radius': self.collect_radius,
            'max_speed': self.max_speed,
            'near_bound': self.near_bound,
            'far_bound': self.far_bound,
            'min_separation': self.min_separation,
            'max_radius': self.max_radius
        }

    def duplicate(self):
        """Get a copy of this object."""
        return self.__copy__()

    @staticmethod
    def _check_box(value, name):
        corners = tuple(tuple(float(c) for c in corner) for corner in value)
        assert len(corners) == 2 and len(corners[0]) == len(corners[1]) == 3, \
            'MissionParameter {} must be two corners with 3 coordinates. ' \
            'Got {}.'.format(name, value)
        assert all(lo <= hi for lo, hi in zip(*corners)), \
            'MissionParameter {} min corner must not exceed the max corner.'.format(name)
        return corners

    @staticmethod
    def _check_ramp(near, far):
        assert near < far, 'MissionParameter near_bound ({}) must be smaller ' \
            'than far_bound ({}).'.format(near, far)

    def __copy__(self):
        return MissionParameter(
            self._target_count, self._target_box, self._initial_box,
            self._collect_radius, self._max_speed, self._near_bound, self._far_bound,
            self._min_separation, self._max_radius)

    def ToString(self):
        """Overwrite .NET ToString method."""
        return self.__repr__()

    def __repr__(self):
        return 'MissionParameter: [{} targets] [collect: {} m] [speed: {} m/s]'.format(
            self.target_count, self.collect_radius, self.max_speed)

# coding=utf-8
"""Sampling settings of the Monte-Carlo campaigns."""
from __future__ import division

from honeybee.typing import float_positive, int_positive, int_in_range


class MonteCarloParameter(object):
    """Sampling settings of the minimal radius and protocol cost campaigns.

    Args:
        robot_counts: A list of team sizes n to sample. If None, the grid
            depends on the campaign. (Default: None).
        sample_count: Positive integer for the number of accepted frameworks
            per team size. (Default: 50).
        average_degree: Expected average vertex degree of the random graphs,
            giving the edge probability average_degree / (n - 1). (Default: 5).
        retry_cap: Positive integer for the number of draws allowed per
            accepted sample. At the sparse end of the minimal radius campaign
            about one draw in a thousand is both IDR and IBR. (Default: 50000).
        radius_levels: Radii k at which the share of vertices with r*_i <= k
            is reported. (Default: (1, 2, 3)).
        delay_thresholds: Thresholds a at which the share of robots with
            h_i <= a is reported. (Default: (0.5, 1)).
        cost_thresholds: Thresholds b at which the share of robots with
            c_i <= b is reported. (Default: (1, 2)).

    Properties:
        * robot_counts
        * sample_count
        * average_degree
        * retry_cap
        * radius_levels
        * delay_thresholds
        * cost_thresholds
    """
    __slots__ = ('_robot_counts', '_sample_count', '_average_degree', '_retry_cap',
                 '_radius_levels', '_delay_thresholds', '_cost_thresholds')

    def __init__(self, robot_counts=None, sample_count=50, average_degree=5,
                 retry_cap=50000, radius_levels=(1, 2, 3), delay_thresholds=(0.5, 1),
                 cost_thresholds=(1, 2)):
        """Initialize MonteCarloParameter."""
        self.robot_counts = robot_counts
        self.sample_count = sample_count
        self.average_degree = average_degree
        self.retry_cap = retry_cap
        self.radius_levels = radius_levels
        self.delay_thresholds = delay_thresholds
        self.cost_thresholds = cost_thresholds

    @classmethod
    def from_dict(cls, data):
        """Create a MonteCarloParameter object from a dictionary.

        .. code-block:: python

            {
            "type": "MonteCarloParameter",
            "robot_counts": [10, 15, 20],
            "sample_count": 50,
            "average_degree": 5,
            "retry_cap": 50000,
            "radius_levels": [1, 2, 3],
            "delay_thresholds": [0.5, 1],
            "cost_thresholds": [1, 2]
            }
        """
        assert data['type'] == 'MonteCarloParameter', \
            'Expected MonteCarloParameter dictionary. Got {}.'.format(data['type'])
        default = cls()
        keys = ('robot_counts', 'sample_count', 'average_degree', 'retry_cap',
                'radius_levels', 'delay_thresholds', 'cost_thresholds')
        args = [data[k] if k in data else getattr(default, k) for k in keys]
        return cls(*args)

    @property
    def robot_counts(self):
        """Get or set a tuple of team sizes, or None for the campaign default."""
        return self._robot_counts

    @robot_counts.setter
    def robot_counts(self, value):
        if value is not None:
            value = tuple(int_in_range(n, 2, input_name='robot_counts') for n in value)
            assert len(value) > 0, 'MonteCarloParameter robot_counts must not be empty.'
        self._robot_counts = value

    @property
    def sample_count(self):
        """Get or set the number of accepted frameworks per team size."""
        return self._sample_count

    @sample_count.setter
    def sample_count(self, value):
        self._sample_count = int_in_range(value, 1, input_name='sample_count')

    @property
    def average_degree(self):
        """Get or set the expected average vertex degree of random graphs."""
        return self._average_degree

    @average_degree.setter
    def average_degree(self, value):
        value = float_positive(value, 'average_degree')
        assert value > 0, 'MonteCarloParameter average_degree must be greater than 0.'
        self._average_degree = value

    @property
    def retry_cap(self):
        """Get or set the number of rejected draws allowed per accepted sample."""
        return self._retry_cap

    @retry_cap.setter
    def retry_cap(self, value):
        self._retry_cap = int_in_range(value, 1, input_name='retry_cap')

    @property
    def radius_levels(self):
        """Get or set a tuple of radius levels k."""
        return self._radius_levels

    @radius_levels.setter
    def radius_levels(self, value):
        self._radius_levels = tuple(int_positive(k, 'radius_levels') for k in value)

    @property
    def delay_thresholds(self):
        """Get or set a tuple of normalized delay thresholds a."""
        return self._delay_thresholds

    @delay_thresholds.setter
    def delay_thresholds(self, value):
        self._delay_thresholds = tuple(float_positive(a, 'delay_thresholds')
                                       for a in value)

    @property
    def cost_thresholds(self):
        """Get or set a tuple of normalized cost thresholds b."""
        return self._cost_thresholds

    @cost_thresholds.setter
    def cost_thresholds(self, value):
        self._cost_thresholds = tuple(float_positive(b, 'cost_thresholds')
                                      for b in value)

    def edge_probability(self, robot_count):
        """Get the Erdos-Renyi edge probability for a team size, capped at 1."""
        return min(1.0, self._average_degree / (robot_count - 1))

    def to_dict(self):
        """Get MonteCarloParameter dictionary."""
        return {
            'type': 'MonteCarloParameter',
            'robot_counts': list(self.robot_counts)
            if self.robot_counts is not None else None,
            'sample_count': self.sample_count,
            'average_degree': self.average_degree,
            'retry_cap': self.retry_cap,
            'radius_levels': list(self.radius_levels),
            'delay_thresholds': list(self.delay_thresholds),
            'cost_thresholds': list(self.cost_thresholds)
        }

    def duplicate(self):
        """Get a copy of this object."""
        return self.__copy__()

    def __copy__(self):
        return MonteCarloParameter(
            self._robot_counts, self._sample_count, self._average_degree,
            self._retry_cap, self._radius_levels, self._delay_thresholds,
            self._cost_thresholds)

    def ToString(self):
        """Overwrite .NET ToString method."""
        return self.__repr__()

    def __repr__(self):
        return 'MonteCarloParameter: [n: {}] [{} samples]'.format(
            self.robot_counts, self.sample_count)

# coding=utf-8
"""Camera, radio and sigmoid edge-weight parameters."""
from __future__ import division

from honeybee.typing import float_positive, float_in_range


class SensingParameter(object):
    """Camera and radio parameters shared by every robot of a team.

    Args:
        sensing_range: A number for the camera range l_i in meters. (Default: 20).
        fov_cos: A number strictly between 0 and 1 for the cosine of the
            half-angle of the camera field of view. (Default: 0.5, which is a
            60 degree half-angle).
        comm_range: A number for the radio range l_c in meters. It must not be
            smaller than the sensing range. If None, it equals the sensing
            range. (Default: None).

    Properties:
        * sensing_range
        * fov_cos
        * comm_range
    """
    __slots__ = ('_sensing_range', '_fov_cos', '_comm_range')

    def __init__(self, sensing_range=20, fov_cos=0.5, comm_range=None):
        """Initialize SensingParameter."""
        self._comm_range = None
        self.sensing_range = sensing_range
        self.fov_cos = fov_cos
        self.comm_range = comm_range

    @classmethod
    def from_dict(cls, data):
        """Create a SensingParameter object from a dictionary.

        .. code-block:: python

            {
            "type": "SensingParameter",
            "sensing_range": 20,  # camera range in meters
            "fov_cos": 0.5,  # cosine of the field of view half-angle
            "comm_range": 20  # radio range in meters
            }
        """
        assert data['type'] == 'SensingParameter', \
            'Expected SensingParameter dictionary. Got {}.'.format(data['type'])
        rng = data['sensing_range'] if 'sensing_range' in data else 20
        fov = data['fov_cos'] if 'fov_cos' in data else 0.5
        comm = data['comm_range'] if 'comm_range' in data else None
        return cls(rng, fov, comm)

    @property
    def sensing_range(self):
        """Get or set a number for the camera range in meters."""
        return self._sensing_range

    @sensing_range.setter
    def sensing_range(self, value):
        value = float_positive(value, 'sensing_range')
        assert value > 0, 'SensingParameter sensing_range must be greater than 0.'
        if self._comm_range is not None:
            assert value <= self._comm_range, 'SensingParameter sensing_range ' \
                '({}) exceeds comm_range ({}).'.format(value, self._comm_range)
        self._sensing_range = value

    @property
    def fov_cos(self):
        """Get or set the cosine of the camera field of view half-angle."""
        return self._fov_cos

    @fov_cos.setter
    def fov_cos(self, value):
        value = float_in_range(value, 0, 1, 'fov_cos')
        assert 0 < value < 1, \
            'SensingParameter fov_cos must be strictly between 0 and 1. Got {}.'.format(
                value)
        self._fov_cos = value

    @property
    def comm_range(self):
        """Get or set a number for the radio range in meters."""
        return self._comm_range if self._comm_range is not None \
            else self._sensing_range

    @comm_range.setter
    def comm_range(self, value):
        if value is not None:
            value = float_positive(value, 'comm_range')
            assert value >= self._sensing_range, 'SensingParameter comm_range ' \
                '({}) must not be smaller than sensing_range ({}).'.format(
                    value, self._sensing_range)
        self._comm_range = value

    def to_dict(self):
        """Get SensingParameter dictionary."""
        base = {
            'type': 'SensingParameter',
            'sensing_range': self.sensing_range,
            'fov_cos': self.fov_cos
        }
        if self._comm_range is not None:
            base['comm_range'] = self._comm_range
        return base

    def duplicate(self):
        """Get a copy of this object."""
        return self.__copy__()

    def __copy__(self):
        return SensingParameter(self._sensing_range, self._fov_cos, self._comm_range)

    def ToString(self):
        """Overwrite .NET ToString method."""
        return self.__repr__()

    def __repr__(self):
        return 'SensingParameter: [range: {} m] [fov cos: {}] [comm: {} m]'.format(
            self.sensing_range, self.fov_cos, self.comm_range)


class WeightParameter(object):
    """Sigmoid parameters of the smooth edge weights of the sensing model.

    The range weight of robot i is 1 - sigma(d_ij) with midpoint
    range_midpoint * l_i and the field of view weight is sigma(n_i^T b_ij)
    with midpoint fov_midpoint * gamma_i.

    Args:
        range_steepness: Positive sigmoid steepness s of the range weight.
            (Default: 10).
        range_midpoint: Factor applied to the sensing range to get the range
            sigmoid midpoint. (Default: 0.9).
        fov_steepness: Positive sigmoid steepness s of the field of view weight.
            (Default: 40).
        fov_midpoint: Factor applied to the field of view cosine to get the
            field of view sigmoid midpoint. (Default: 1.2).
        support: Text for the robot pairs that carry weights. Either "edges"
            (pairs of the undirected sensing graph) or "comm_pairs" (pairs of
            the communication graph). (Default: edges).

    Properties:
        * range_steepness
        * range_midpoint
        * fov_steepness
        * fov_midpoint
        * support
    """
    __slots__ = ('_range_steepness', '_range_midpoint', '_fov_steepness',
                 '_fov_midpoint', '_support')

    SUPPORTS = ('edges', 'comm_pairs')

    def __init__(self, range_steepness=10, range_midpoint=0.9, fov_steepness=40,
                 fov_midpoint=1.2, support='edges'):
        """Initialize WeightParameter."""
        self.range_steepness = range_steepness
        self.range_midpoint = range_midpoint
        self.fov_steepness = fov_steepness
        self.fov_midpoint = fov_midpoint
        self.support = support

    @classmethod
    def from_dict(cls, data):
        """Create a WeightParameter object from a dictionary.

        .. code-block:: python

            {
            "type": "WeightParameter",
            "range_steepness": 10,
            "range_midpoint": 0.9,
            "fov_steepness": 40,
            "fov_midpoint": 1.2,
            "support": "edges"  # or "comm_pairs"
            }
        """
        assert data['type'] == 'WeightParameter', \
            'Expected WeightParameter dictionary. Got {}.'.format(data['type'])
        r_s = data['range_steepness'] if 'range_steepness' in data else 10
        r_m = data['range_midpoint'] if 'range_midpoint' in data else 0.9
        f_s = data['fov_steepness'] if 'fov_steepness' in data else 40
        f_m = data['fov_midpoint'] if 'fov_midpoint' in data else 1.2
        sup = data['support'] if 'support' in data else 'edges'
        return cls(r_s, r_m, f_s, f_m, sup)

    @property
    def range_steepness(self):
        """Get or set the steepness of the range sigmoid."""
        return self._range_steepness

    @range_steepness.setter
    def range_steepness(self, value):
        self._range_steepness = float_positive(value, 'range_steepness')
        assert self._range_steepness > 0, 'range_steepness must be greater than 0.'

    @property
    def range_midpoint(self):
        """Get or set the factor of the sensing range at the range sigmoid midpoint."""
        return self._range_midpoint

    @range_midpoint.setter
    def range_midpoint(self, value):
        self._range_midpoint = float_positive(value, 'range_midpoint')

    @property
    def fov_steepness(self):
        """Get or set the steepness of the field of view sigmoid."""
        return self._fov_steepness

    @fov_steepness.setter
    def fov_steepness(self, value):
        self._fov_steepness = float_positive(value, 'fov_steepness')
        assert self._fov_steepness > 0, 'fov_steepness must be greater than 0.'

    @property
    def fov_midpoint(self):
        """Get or set the factor of the fov cosine at the fov sigmoid midpoint."""
        return self._fov_midpoint

    @fov_midpoint.setter
    def fov_midpoint(self, value):
        self._fov_midpoint = float_positive(value, 'fov_midpoint')

    @property
    def support(self):
        """Get or set text for the robot pairs that carry weights."""
        return self._support

    @support.setter
    def support(self, value):
        assert value in self.SUPPORTS, 'WeightParameter support "{}" is invalid. ' \
            'Must be one of the following: {}'.format(value, self.SUPPORTS)
        self._support = value

    def to_dict(self):
        """Get WeightParameter dictionary."""
        return {
            'type': 'WeightParameter',
            'range_steepness': self.range_steepness,
            'range_midpoint': self.range_midpoint,
            'fov_steepness': self.fov_steepness,
            'fov_midpoint': self.fov_midpoint,
            'support': self.support
        }

    def duplicate(self):
        """Get a copy of this object."""
        return self.__copy__()

    def __copy__(self):
        return WeightParameter(
            self._range_steepness, self._range_midpoint, self._fov_steepness,
            self._fov_midpoint, self._support)

    def ToString(self):
        """Overwrite .NET ToString method."""
        return self.__repr__()

    def __repr__(self):
        return 'WeightParameter: [range: s={} m={}] [fov: s={} m={}] [{}]'.format(
            self.range_steepness, self.range_midpoint, self.fov_steepness,
            self.fov_midpoint, self.support)

# coding=utf-8
"""Targets of a collection mission and the tracking speed profile."""
from __future__ import division

import numpy as np
from scipy.spatial.distance import cdist


class MissionState(object):
    """Target positions with their collected flags.

    Args:
        targets: An (m, d) array-like of target positions.
        collected: Optional list of booleans for targets already collected.
        collect_radius: Distance in meters at which a target is collected. (Default: 5).
        max_speed: Tracking speed in m/s toward close targets. (Default: 1.5).
        near_bound: Distance where the speed starts to ramp down. (Default: 20).
        far_bound: Distance where the speed reaches zero. (Default: 30).

    Properties:
        * targets
        * collected
        * collected_count
        * remaining
        * collect_radius
        * max_speed
        * near_bound
        * far_bound
    """
    __slots__ = ('_targets', '_collected', '_collect_radius', '_max_speed',
                 '_near_bound', '_far_bound')

    def __init__(self, targets, collected=None, collect_radius=5, max_speed=1.5,
                 near_bound=20, far_bound=30):
        """Initialize MissionState."""
        targets = np.array(targets, dtype=float).reshape(len(targets), -1)
        targets.setflags(write=False)
        self._targets = targets
        self._collected = np.zeros(len(targets), dtype=bool) if collected is None \
            else np.array(collected, dtype=bool)
        assert len(self._collected) == len(targets), \
            'MissionState needs one collected flag per target.'
        assert 0 <= near_bound < far_bound, 'MissionState speed profile needs ' \
            '0 <= near_bound < far_bound. Got {} and {}.'.format(near_bound, far_bound)
        self._collect_radius = float(collect_radius)
        self._max_speed = float(max_speed)
        self._near_bound = float(near_bound)
        self._far_bound = float(far_bound)

    @classmethod
    def from_parameter(cls, targets, parameter):
        """Create a MissionState from target positions and a MissionParameter."""
        return cls(targets, None, parameter.collect_radius, parameter.max_speed,
                   parameter.near_bound, parameter.far_bound)

    @property
    def targets(self):
        """Get the read-only (m, d) array of target positions."""
        return self._targets

    @property
    def collected(self):
        """Get a copy of the boolean collected flags."""
        return self._collected.copy()

    @property
    def collected_count(self):
        """Get the number of collected targets."""
        return int(self._collected.sum())

    @property
    def remaining(self):
        """Get the indices of the uncollected targets."""
        return np.flatnonzero(~self._collected)

    @property
    def collect_radius(self):
        """Get the collection distance in meters."""
        return self._collect_radius

    @property
    def max_speed(self):
        """Get the tracking speed in m/s toward close targets."""
        return self._max_speed

    @property
    def near_bound(self):
        """Get the distance where the speed starts to ramp down."""
        return self._near_bound

    @property
    def far_bound(self):
        """Get the distance where the speed reaches zero."""
        return self._far_bound

    def speed(self, distance):
        """Get the tracking speed f'_m for a distance to the nearest target."""
        if distance <= self._near_bound:
            return self._max_speed
        if distance >= self._far_bound:
            return 0.0
        ramp = (self._far_bound - distance) / (self._far_bound - self._near_bound)
        return self._max_speed * ramp

    def potential(self, distance):
        """Get f_m, the antiderivative of the speed profile with f_m(0) = 0."""
        near, far, v = self._near_bound, self._far_bound, self._max_speed
        if distance <= near:
            return v * distance
        extra = min(distance, far) - near
        return v * near + v * (extra - extra ** 2 / (2 * (far - near)))

    def nearest(self, positions):
        """Get the nearest uncollected target of each robot.

        Ties go to the lowest target index.

        Args:
            positions: An (n, d) array of robot positions.

        Returns:
            A tuple with two arrays: the target index of each robot (-1 when no
            target remains) and the distance to it (inf when no target remains).
        """
        positions = np.asarray(positions, dtype=float)
        remaining = self.remaining
        if remaining.size == 0:
            return np.full(len(positions), -1), np.full(len(positions), np.inf)
        dist = cdist(positions, self._targets[remaining])
        pick = np.argmin(dist, axis=1)
        return remaining[pick], dist[np.arange(len(positions)), pick]

    def collect(self, positions):
        """Get a new MissionState with every target within the radius collected.

        Returns:
            A tuple with the new MissionState and a list of the newly collected
            target indices.
        """
        positions = np.asarray(positions, dtype=float)
        remaining = self.remaining
        flags = self._collected.copy()
        new = []
        if remaining.size:
            dist = cdist(positions, self._targets[remaining])
            hit = np.any(dist <= self._collect_radius, axis=0)
            new = remaining[hit].tolist()
            flags[new] = True
        state = MissionState(self._targets, flags, self._collect_radius,
                             self._max_speed, self._near_bound, self._far_bound)
        return state, new

    def to_dict(self):
        """Get MissionState as a dictionary."""
        return {
            'type': 'MissionState',
            'targets': self._targets.tolist(),
            'collected': self._collected.tolist(),
            'collect_radius': self._collect_radius,
            'max_speed': self._max_speed,
            'near_bound': self._near_bound,
            'far_bound': self._far_bound
        }

    def ToString(self):
        """Overwrite .NET ToString method."""
        return self.__repr__()

    def __repr__(self):
        return 'MissionState: [{}/{} collected]'.format(
            self.collected_count, len(self._targets))

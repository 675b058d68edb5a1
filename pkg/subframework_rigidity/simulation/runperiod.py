# coding=utf-8
"""Mission simulation run period."""
from __future__ import division

from honeybee.typing import float_positive, float_in_range, int_in_range


class TimeParameter(object):
    """Mission simulation run period.

    Each control step of length timestep is split into explicit Euler
    sub-steps whenever a single step would move a robot farther than
    max_displacement or farther than gap_fraction of the clearance between
    the closest pair of robots and the minimum allowed distance. Sub-step
    lengths are chosen again from the velocities at the start of each one.

    Args:
        timestep: A positive number for the control step in seconds. (Default: 0.1).
        duration: A positive number for the simulated time in seconds. Must not
            be smaller than the timestep. (Default: 300).
        snapshot_times: A list of times in seconds at which the robot states are
            recorded. Each must be between 0 and the duration. (Default: (0, 100, 300)).
        max_displacement: Largest distance in meters a robot may cover in one
            sub-step. (Default: 0.25).
        gap_fraction: Number between 0 and 1 for the largest share of the
            clearance of the closest pair a robot may cover in one sub-step.
            (Default: 0.25).
        max_substeps: Positive integer for the largest number of sub-steps of
            one control step. (Default: 1000).

    Properties:
        * timestep
        * duration
        * snapshot_times
        * max_displacement
        * gap_fraction
        * max_substeps
        * step_count
        * snapshot_steps
    """
    __slots__ = ('_timestep', '_duration', '_snapshot_times', '_max_displacement',
                 '_gap_fraction', '_max_substeps')

    def __init__(self, timestep=0.1, duration=300, snapshot_times=(0, 100, 300),
                 max_displacement=0.25, gap_fraction=0.25, max_substeps=1000):
        """Initialize TimeParameter."""
        self._timestep = float_positive(timestep, 'timestep')
        assert self._timestep > 0, 'TimeParameter timestep must be greater than 0.'
        self._snapshot_times = ()
        self.duration = duration
        self.snapshot_times = snapshot_times
        self.max_displacement = max_displacement
        self.gap_fraction = gap_fraction
        self.max_substeps = max_substeps

    @property
    def timestep(self):
        """Get or set a number for the control step in seconds."""
        return self._timestep

    @timestep.setter
    def timestep(self, value):
        value = float_positive(value, 'timestep')
        assert value > 0, 'TimeParameter timestep must be greater than 0.'
        self._timestep = value
        self._check_duration()

    @property
    def duration(self):
        """Get or set a number for the simulated time in seconds."""
        return self._duration

    @duration.setter
    def duration(self, value):
        self._duration = float_positive(value, 'duration')
        self._check_duration()
        self._check_snapshots(self._snapshot_times)

    @property
    def snapshot_times(self):
        """Get or set a tuple of times at which the robot states are recorded."""
        return self._snapshot_times

    @snapshot_times.setter
    def snapshot_times(self, value):
        value = tuple(sorted(float_positive(t, 'snapshot time') for t in value))
        self._check_snapshots(value)
        self._snapshot_times = value

    @property
    def max_displacement(self):
        """Get or set the largest distance a robot may cover in one sub-step."""
        return self._max_displacement

    @max_displacement.setter
    def max_displacement(self, value):
        value = float_positive(value, 'max_displacement')
        assert value > 0, 'TimeParameter max_displacement must be greater than 0.'
        self._max_displacement = value

    @property
    def gap_fraction(self):
        """Get or set the largest share of the closest clearance covered per sub-step."""
        return self._gap_fraction

    @gap_fraction.setter
    def gap_fraction(self, value):
        value = float_in_range(value, 0, 1, 'gap_fraction')
        assert value > 0, 'TimeParameter gap_fraction must be greater than 0.'
        self._gap_fraction = value

    @property
    def max_substeps(self):
        """Get or set the largest number of sub-steps of one control step."""
        return self._max_substeps

    @max_substeps.setter
    def max_substeps(self, value):
        self._max_substeps = int_in_range(value, 1, input_name='max_substeps')

    @property
    def step_count(self):
        """Get an integer for the number of control steps in the run."""
        return int(round(self._duration / self._timestep))

    @property
    def snapshot_steps(self):
        """Get a tuple with the step index of each snapshot time."""
        return tuple(int(round(t / self._timestep)) for t in self._snapshot_times)

    @classmethod
    def from_dict(cls, data):
        """Create a TimeParameter object from a dictionary.

        Args:
            data: A TimeParameter dictionary in following the format below.

        .. code-block:: python

            {
            "type": "TimeParameter",
            "timestep": 0.1,
            "duration": 300,
            "snapshot_times": [0, 100, 300],
            "max_displacement": 0.25,
            "gap_fraction": 0.25,
            "max_substeps": 1000
            }
        """
        assert data['type'] == 'TimeParameter', \
            'Expected TimeParameter dictionary. Got {}.'.format(data['type'])
        timestep = data['timestep'] if 'timestep' in data else 0.1
        duration = data['duration'] if 'duration' in data else 300
        snaps = data['snapshot_times'] if 'snapshot_times' in data and \
            data['snapshot_times'] is not None else (0, 100, 300)
        move = data['max_displacement'] if 'max_displacement' in data else 0.25
        gap = data['gap_fraction'] if 'gap_fraction' in data else 0.25
        cap = data['max_substeps'] if 'max_substeps' in data else 1000
        return cls(timestep, duration, snaps, move, gap, cap)

    def to_dict(self):
        """TimeParameter dictionary representation."""
        return {
            'type': 'TimeParameter',
            'timestep': self.timestep,
            'duration': self.duration,
            'snapshot_times': list(self.snapshot_times),
            'max_displacement': self.max_displacement,
            'gap_fraction': self.gap_fraction,
            'max_substeps': self.max_substeps
        }

    def duplicate(self):
        """Get a copy of this object."""
        return self.__copy__()

    def _check_duration(self):
        """Check that the duration holds at least one timestep."""
        if hasattr(self, '_duration'):
            assert self._duration >= self._timestep, 'TimeParameter duration ' \
                '({}) must not be smaller than the timestep ({}).'.format(
                    self._duration, self._timestep)

    def _check_snapshots(self, times):
        """Check that the snapshot times lie within the run period."""
        for t in times:
            assert t <= self._duration, 'TimeParameter snapshot time {} is after ' \
                'the end of the run ({} s).'.format(t, self._duration)

    def ToString(self):
        """Overwrite .NET ToString."""
        return self.__repr__()

    def __copy__(self):
        return TimeParameter(
            self.timestep, self.duration, self.snapshot_times, self.max_displacement,
            self.gap_fraction, self.max_substeps)

    def __repr__(self):
        return 'TimeParameter: [dt: {} s] [duration: {} s]'.format(
            self.timestep, self.duration)

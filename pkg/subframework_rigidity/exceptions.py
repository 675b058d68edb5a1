# coding=utf-8
"""Exceptions raised by the rigidity, control and protocol routines."""


class RigidityError(Exception):
    """Base class for all errors raised by subframework-rigidity."""


class DegenerateRealization(RigidityError):
    """Two vertices of a realization share the same position."""


class InvalidBearing(RigidityError):
    """A vector expected to be a unit bearing does not have unit norm."""


class UnsupportedSize(RigidityError):
    """A framework has too few vertices for the requested test."""


class UnsupportedDimension(RigidityError):
    """The spatial dimension is not supported by the camera model."""


class DisconnectedGraph(RigidityError):
    """An operation that requires a connected graph got a disconnected one."""


class MissingWeight(RigidityError):
    """An edge of a framework has no weight assigned."""


class NumericalFailure(RigidityError):
    """A numerical routine did not converge or produced non-finite values."""


class NotLocalizable(RigidityError):
    """The free vertices cannot be recovered from the anchors and bearings."""


class InconsistentRealization(RigidityError):
    """Shared vertices of two frameworks are placed at different positions."""


class StaleDecomposition(RigidityError):
    """A decomposition no longer matches the graph it is used with."""


class MissionViolation(RigidityError):
    """Base class for the conditions that terminate a mission run."""


class CollisionViolation(MissionViolation):
    """Two communicating robots are closer than the minimum allowed distance.

    Args:
        pair: Tuple of the two robot indices that are too close.
        distance: Their distance in meters.
    """

    def __init__(self, pair, distance):
        self.pair = tuple(pair)
        self.distance = distance
        RigidityError.__init__(
            self, 'Robots {} are {:.6f} m apart, at or below the minimum '
            'allowed distance.'.format(self.pair, distance))


class RigidityFloorBreached(MissionViolation):
    """The rigidity eigenvalue of a subframework fell to the rigidity floor.

    Args:
        center: Index of the robot at the center of the offending subframework.
        eigenvalue: The rigidity eigenvalue of that subframework.
        floor: The rigidity floor lambda_0.
    """

    def __init__(self, center, eigenvalue, floor):
        self.center = center
        self.eigenvalue = eigenvalue
        self.floor = floor
        RigidityError.__init__(
            self, 'Rigidity eigenvalue {} of subframework {} is not above the '
            'floor {}.'.format(eigenvalue, center, floor))


class SamplingExhausted(RigidityError):
    """Rejection sampling did not accept a sample within the retry cap.

    Args:
        message: Text describing the sampler.
        diagnostics: Dictionary with the counts of rejected attempts.
    """

    def __init__(self, message, diagnostics=None):
        self.diagnostics = diagnostics or {}
        RigidityError.__init__(self, '{} {}'.format(message, self.diagnostics))

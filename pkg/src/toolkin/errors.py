"""Exception hierarchy shared across the package.

Every toolkin error derives from :class:`ToolkinError` so callers (notably
the CLI) can distinguish domain failures from programming errors.
"""


class ToolkinError(Exception):
    """Base class for all toolkin errors."""


# --- quaternion / vector algebra ---

class ZeroQuaternion(ToolkinError):
    """Quaternion with (near-)zero norm where a unit quaternion is required."""


class EmptyList(ToolkinError):
    """An aggregate operation received no elements."""


# --- kinematics ---

class ParseError(ToolkinError):
    """Malformed config or data file."""


class InvariantViolation(ToolkinError):
    """A structural invariant of a loaded object does not hold."""


class NegativeLength(ToolkinError):
    """Tool length must be non-negative."""


class Unreachable(ToolkinError):
    """IK could not reach the target pose from any seed."""


# --- tool vision ---

class BadMagic(ToolkinError):
    """Not a binary PPM (P6) stream."""


class BadHeader(ToolkinError):
    """PPM header is malformed."""


class TruncatedData(ToolkinError):
    """PPM pixel payload shorter than width*height*3."""


class UnsupportedMaxval(ToolkinError):
    """Only maxval 255 PPM files are supported."""


class FewerThanTwoMarkers(ToolkinError):
    """Marker detection found fewer than two components."""


class WrongCount(ToolkinError):
    """Wrong number of measurements supplied."""


class NonPositiveLength(ToolkinError):
    """A measured length must be strictly positive."""


class OverlappingMarkers(ToolkinError):
    """Synthetic markers must be disjoint."""


class OutOfBounds(ToolkinError):
    """Synthetic marker does not fit in the image."""


# --- environment ---

class InvalidSpec(ToolkinError):
    """Environment spec fails validation."""


# --- reinforcement learning ---

class DimensionMismatch(ToolkinError):
    """Input shape does not match the network."""


class LengthMismatch(ToolkinError):
    """Sequences that must be equal length are not."""


class BufferTooSmall(ToolkinError):
    """Replay buffer has fewer transitions than one batch."""


class ConfigError(ToolkinError):
    """Invalid training configuration."""


class CheckpointMismatch(ToolkinError):
    """Checkpoint architecture or algorithm differs from the requested one."""


# --- trajectory ---

class InsufficientCompleteEpisodes(ToolkinError):
    """Could not collect the requested number of goal-reaching episodes."""


class AllWaypointsFiltered(ToolkinError):
    """Smoothing/reachability filtering removed every waypoint."""


class NonUnitQuaternion(ToolkinError):
    """Imported trajectory row carries a non-unit quaternion."""


class NonMonotoneTime(ToolkinError):
    """Imported trajectory rows are not strictly increasing in time."""
